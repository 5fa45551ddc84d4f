#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "runcube/cli.hpp"

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "runcube");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = runcube::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("gf prints the up-down polynomials") {
  const Result r = run({"gf", "--kind", "updown", "--order", "8"});
  CHECK(r.status == 0);
  std::istringstream lines(r.out);
  std::vector<std::string> got;
  for (std::string line; std::getline(lines, line);) got.push_back(line);
  REQUIRE(got.size() == 8);
  CHECK(got[0] == "1: u + d");
  CHECK(got[1] == "2: 2*d + u^2");
  CHECK(got[3] == "4: 2*u*d + 3*d^2 + 2*u^2*d + u^4");
}

TEST_CASE("usage errors exit with status 2") {
  const Result r = run({"graph", "--n", "0"});
  CHECK(r.status == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("--n") != std::string::npos);
  CHECK(run({}).status == 2);
  CHECK(run({"bogus"}).status == 2);
  CHECK(run({"gf", "--kind", "nope"}).status == 2);
  CHECK(run({"census", "--n", "4", "--format", "dot"}).status == 2);
  CHECK(run({"poset", "leq", "--n", "4", "--u", "0111", "--v", "0000"}).status == 2);
  CHECK(run({"--help"}).status == 0);
}

TEST_CASE("graph and census output") {
  const Result text = run({"graph", "--n", "3"});
  CHECK(text.status == 0);
  CHECK(text.out.find("R_3: 5 vertices, 5 edges") == 0);

  const Result dot = run({"graph", "--n", "2", "--format", "dot"});
  CHECK(dot.out.find("graph R2 {") == 0);

  const auto j = nlohmann::json::parse(run({"graph", "--n", "4", "--format", "json", "--metrics"}).out);
  CHECK(j["schema"] == 1);
  CHECK(j["vertices"].size() == 8);
  CHECK(j["diameter"] == 4);

  const auto c = nlohmann::json::parse(run({"census", "--n", "4", "--format", "json"}).out);
  CHECK(c["schema"] == 1);
  CHECK(c["updown"]["text"] == "2*u*d + 3*d^2 + 2*u^2*d + u^4");
  CHECK(c["degree"]["text"] == "5*x^2 + 2*x^3 + x^4");
}

TEST_CASE("output does not depend on the thread count") {
  const Result a = run({"census", "--n", "20", "--threads", "1"});
  const Result b = run({"census", "--n", "20", "--threads", "4"});
  CHECK(a.out == b.out);
  CHECK(run({"embed", "dilation", "--n", "4", "--threads", "3", "--format", "json"}).out ==
        run({"embed", "dilation", "--n", "4", "--format", "json"}).out);
}

TEST_CASE("environment caps") {
  setenv("RUNCUBE_VERTEX_CAP", "10", 1);
  const Result capped = run({"graph", "--n", "8"});
  CHECK(capped.status == 2);
  CHECK(capped.err.find("resource limit") != std::string::npos);
  CHECK(run({"graph", "--n", "8", "--vertex-cap", "1000"}).status == 0);
  unsetenv("RUNCUBE_VERTEX_CAP");
  CHECK(run({"graph", "--n", "8"}).status == 0);
}

TEST_CASE("verify reports exactly the known conflicts") {
  const Result r = run({"verify", "--all", "--max-n", "14", "--order", "30", "--format", "json"});
  CHECK(r.status == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == 1);
  std::vector<std::string> failing;
  for (const auto& suite : j["suites"])
    for (const auto& c : suite["checks"])
      if (!c["passed"].get<bool>()) failing.push_back(suite["name"].get<std::string>() + " / " + c["label"].get<std::string>());
  REQUIRE(failing.size() == 8);
  CHECK(failing[0] == "specializations / d := 1 gives the up-degree GF as printed");
  CHECK(failing[1] == "edge GF / d/du of the up-degree GF as printed at u = 1");
  for (std::size_t i = 2; i < failing.size(); ++i) CHECK(failing[i].rfind("boolean intervals / n=", 0) == 0);

  const Result clean = run({"verify", "--suite", "census", "--suite", "cases", "--max-n", "10", "--order", "20"});
  CHECK(clean.status == 0);
  CHECK(clean.out.find("2/2 suites passed") != std::string::npos);
}

TEST_CASE("poset, inversion and embedding commands") {
  CHECK(run({"poset", "rank", "--n", "7"}).out == "1 + 7*x + 15*x^2 + 10*x^3 + x^4\n");
  CHECK(run({"poset", "mobius", "--n", "6", "--u", "000000", "--v", "110001"}).out == "-1\n");
  CHECK(run({"poset", "leq", "--n", "4", "--u", "1000", "--v", "0110"}).out == "false\n");
  const Result iv = run({"poset", "interval", "--n", "6", "--u", "000000", "--v", "110001"});
  CHECK(std::count(iv.out.begin(), iv.out.end(), '\n') == 8);
  CHECK(run({"poset", "maximal", "--n", "4"}).out == "0110\n1001\n1100\n");
  CHECK(run({"poset", "intervals", "--n", "4"}).status == 0);
  CHECK(run({"poset", "intervals", "--n", "5"}).status == 1);

  CHECK(run({"inv", "--n", "4"}).out == "1 + x + x*q\n");
  CHECK(run({"inv", "verify", "--max", "14", "--order", "14"}).status == 0);

  const auto e = nlohmann::json::parse(run({"embed", "encode", "--word", "010", "--format", "json"}).out);
  CHECK(e["image"] == "0100100100");
  CHECK(run({"embed", "dilation", "--n", "1"}).out.find("dilation 2") != std::string::npos);
  const Result host = run({"embed", "host", "--max-n", "8"});
  CHECK(host.status == 0);
  CHECK(host.out.find("Q_8: least host 18, conjectured 18") != std::string::npos);
}
