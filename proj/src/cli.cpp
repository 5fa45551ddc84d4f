#include "runcube/cli.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "runcube/embedding.hpp"
#include "runcube/enumerators.hpp"
#include "runcube/errors.hpp"
#include "runcube/graph.hpp"
#include "runcube/inversions.hpp"
#include "runcube/poset.hpp"
#include "runcube/strings.hpp"

namespace runcube::cli {

using nlohmann::json;

namespace {

struct Context {
  RunConfig config;
  std::ostream& out;
  std::ostream& err;

  bool json_out() const { return config.format == "json"; }
  CensusOptions census_options() const { return {config.threads, config.stream_cap}; }
  void emit(const json& j) const { out << j.dump(2) << '\n'; }
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void require_format(const Context& ctx, bool dot_allowed) {
  if (ctx.config.format == "dot" && !dot_allowed) throw UsageError("--format dot is only available for graph");
}

std::uint64_t parse_vertex(int n, const std::string& label) {
  const RunString v = RunString::parse_label(label);
  if (v.n() != n) throw ValidationError("label " + label + " has length " + std::to_string(v.n()) + ", expected " + std::to_string(n));
  return v.label();
}

json poly_json(const MultiPoly& p) {
  return {{"text", p.to_string()}, {"terms", p.to_json()}, {"vars", p.vars().names()}};
}

// ---- graph / census ------------------------------------------------------

int cmd_graph(const Context& ctx, int n, bool metrics) {
  require_format(ctx, true);
  const FibRunGraph g = build(n, ctx.config.vertex_cap);
  if (ctx.config.format == "dot") {
    ctx.out << to_dot(g);
    return kExitOk;
  }
  const DegreeCensus census = degree_census(n, ctx.census_options());
  if (ctx.json_out()) {
    json j = to_json(g, census);
    if (metrics) {
      j["diameter"] = diameter(g);
      j["radius"] = radius(g);
    }
    ctx.emit(j);
    return kExitOk;
  }
  ctx.out << "R_" << n << ": " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
  if (metrics) ctx.out << "diameter " << diameter(g) << ", radius " << radius(g) << '\n';
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const Degrees deg = vertex_degrees(n, g.label(v));
    ctx.out << g.label_string(v) << " up " << deg.up << " down " << deg.down << '\n';
  }
  return kExitOk;
}

int cmd_census(const Context& ctx, int n) {
  require_format(ctx, false);
  const DegreeCensus census = degree_census(n, ctx.census_options());
  const MultiPoly updown = enumerators::census_polynomial(census);
  const MultiPoly degree = enumerators::to_degree_polynomial(updown);
  if (ctx.json_out()) {
    ctx.emit({{"schema", 1},
              {"n", n},
              {"vertices", census.vertex_count()},
              {"edges", census.edge_count()},
              {"census", census_json(census)},
              {"updown", poly_json(updown)},
              {"degree", poly_json(degree)}});
    return kExitOk;
  }
  ctx.out << "n " << n << ", vertices " << census.vertex_count() << ", edges " << census.edge_count() << '\n'
          << "updown: " << updown.to_string() << '\n'
          << "degree: " << degree.to_string() << '\n';
  return kExitOk;
}

// ---- gf ------------------------------------------------------------------

const std::map<std::string, std::function<RationalGF()>>& gf_kinds() {
  static const std::map<std::string, std::function<RationalGF()>> kinds = {
      {"updown", enumerators::updown_gf},
      {"degree", enumerators::degree_gf},
      {"down", enumerators::down_gf},
      {"up", enumerators::up_gf},
      {"up-corrected", enumerators::up_gf_corrected},
      {"edge", enumerators::edge_gf},
      {"maximal", enumerators::maximal_gf},
      {"cube", embedding::cube_gf},
      {"rank", [] { return RationalGF::parse("t(1 + x + xt)", "1 - t - xt^2", poset::rank_vars()); }},
  };
  return kinds;
}

int cmd_gf(const Context& ctx, const std::string& kind) {
  require_format(ctx, false);
  const auto it = gf_kinds().find(kind);
  if (it == gf_kinds().end()) throw UsageError("unknown --kind " + kind);
  const TruncatedSeries s = expand_rational(it->second(), ctx.config.order);
  if (ctx.json_out()) {
    json coeffs = json::array();
    for (int n = 1; n <= s.order(); ++n) coeffs.push_back({{"n", n}, {"poly", poly_json(s[n])}});
    ctx.emit({{"schema", 1}, {"kind", kind}, {"order", s.order()}, {"coefficients", coeffs}});
    return kExitOk;
  }
  for (int n = 1; n <= s.order(); ++n) ctx.out << n << ": " << s[n].to_string() << '\n';
  return kExitOk;
}

// ---- verify --------------------------------------------------------------

struct SuiteParams {
  int max_n;
  int order;
  CensusOptions census;
};

Report boolean_interval_report(int max_n) {
  Report report("boolean intervals");
  for (int n = 1; n <= max_n; ++n) {
    const poset::BooleanIntervalReport r = poset::verify_boolean_intervals(n);
    report.add("n=" + std::to_string(n) + " (" + std::to_string(r.pairs_checked) + " comparable pairs)", r.passed(),
               r.passed() ? "" : std::to_string(r.violations.size()) + " violations, first " + r.violations.front());
  }
  return report;
}

Report pk_report(int order) {
  Report report("degree-k conjecture probe");
  for (int k = 1; k <= 4; ++k) {
    const enumerators::PkProbe p = enumerators::conjecture_pk_probe(k, order);
    report.add("k=" + std::to_string(k) + " residual beyond degree " + std::to_string(p.conjectured_degree), p.residual_zero,
               "observed degree " + std::to_string(p.observed_degree));
  }
  return report;
}

Report host_report(int order) {
  Report report("smallest host");
  for (const embedding::HostRow& row : embedding::smallest_host_probe(8, order)) {
    const bool ok = row.smallest_host == row.conjectured && row.brute_confirmed.value_or(true);
    report.add("Q_" + std::to_string(row.cube_dimension), ok,
               "least m " + (row.smallest_host ? std::to_string(*row.smallest_host) : std::string("none")) +
                   ", ceil((5n-4)/2) = " + std::to_string(row.conjectured));
  }
  return report;
}

const std::vector<std::pair<std::string, std::function<Report(const SuiteParams&)>>>& suites() {
  using P = const SuiteParams&;
  static const std::vector<std::pair<std::string, std::function<Report(const SuiteParams&)>>> all = {
      {"census", [](P p) { return enumerators::closed_form_vs_census(p.max_n, p.census); }},
      {"cases", [](P p) { return enumerators::case_assembly_check(p.order, p.max_n); }},
      {"words", [](P p) { return enumerators::word_sum_identity_check(std::min(p.max_n, 12)); }},
      {"specializations", [](P p) { return enumerators::specialize_checks(p.order); }},
      {"edges", [](P p) { return enumerators::edge_gf_check(p.order); }},
      {"degree-k", [](P p) { return enumerators::degree_k_laws_check(p.order); }},
      {"pk", [](P p) { return pk_report(std::max(p.order, 40)); }},
      {"recurrence", [](P p) { return enumerators::recurrence_check(p.order); }},
      {"maximal", [](P p) { return poset::maximal_gf_check(p.order, std::min(p.max_n, 20)); }},
      {"intervals", [](P p) { return boolean_interval_report(std::min(p.max_n, 10)); }},
      {"inv-recurrence", [](P p) { return inversions::recurrence_check(std::min(p.max_n, 25)); }},
      {"inv-functional", [](P p) { return inversions::functional_identity_check(std::min(p.order, 25)); }},
      {"inv-q1", [](P p) { return inversions::q1_specialization_check(std::min(p.order, 25)); }},
      {"cube", [](P p) { return embedding::cube_gf_check(p.order, std::min(p.max_n, 10)); }},
      {"host", [](P p) { return host_report(std::max(p.order, 25)); }},
  };
  return all;
}

int cmd_verify(const Context& ctx, bool all, std::vector<std::string> names, int max_n, bool verbose) {
  require_format(ctx, false);
  if (all) {
    names.clear();
    for (const auto& [name, _] : suites()) names.push_back(name);
  }
  if (names.empty()) throw UsageError("verify needs --all or at least one --suite");
  const SuiteParams params{max_n, ctx.config.order, ctx.census_options()};
  std::vector<Report> reports;
  for (const std::string& name : names) {
    const auto it = std::find_if(suites().begin(), suites().end(), [&](const auto& s) { return s.first == name; });
    if (it == suites().end()) throw UsageError("unknown suite " + name);
    reports.push_back(it->second(params));
  }
  std::size_t failed = 0;
  for (const Report& r : reports) failed += r.passed() ? 0 : 1;

  if (ctx.json_out()) {
    json list = json::array();
    for (const Report& r : reports) list.push_back(r.to_json());
    ctx.emit({{"schema", 1}, {"max_n", max_n}, {"order", ctx.config.order}, {"passed", failed == 0}, {"suites", list}});
  } else {
    for (const Report& r : reports) {
      if (verbose) {
        ctx.out << r.to_text();
        continue;
      }
      ctx.out << r.name() << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.checks().size() - r.failures() << '/'
              << r.checks().size() << " checks)\n";
      for (const Check& c : r.checks())
        if (!c.passed) ctx.out << "  [FAIL] " << c.label << (c.detail.empty() ? "" : " -- " + c.detail) << '\n';
      for (const std::string& note : r.notes()) ctx.out << "  note: " << note << '\n';
    }
    ctx.out << reports.size() - failed << '/' << reports.size() << " suites passed\n";
  }
  return failed == 0 ? kExitOk : kExitMismatch;
}

// ---- poset ---------------------------------------------------------------

int cmd_poset_rank(const Context& ctx, int n) {
  const MultiPoly p = poset::rank_polynomial(n);
  if (ctx.json_out()) ctx.emit({{"schema", 1}, {"n", n}, {"rank_polynomial", poly_json(p)}});
  else ctx.out << p.to_string() << '\n';
  return kExitOk;
}

int cmd_poset_pair(const Context& ctx, const std::string& what, int n, const std::string& u_text, const std::string& v_text) {
  const std::uint64_t u = parse_vertex(n, u_text);
  const std::uint64_t v = parse_vertex(n, v_text);
  const poset::PosetView view(n, ctx.config.vertex_cap);
  json j{{"schema", 1}, {"n", n}, {"u", u_text}, {"v", v_text}};
  if (what == "leq") {
    const bool r = view.leq(u, v);
    j["leq"] = r;
    if (!ctx.json_out()) ctx.out << (r ? "true" : "false") << '\n';
  } else if (what == "interval") {
    json labels = json::array();
    for (std::uint64_t w : view.interval(u, v)) labels.push_back(Word{w, n}.to_string());
    j["interval"] = labels;
    if (!ctx.json_out())
      for (const auto& l : labels) ctx.out << l.get<std::string>() << '\n';
  } else {
    const int mu = view.mobius(u, v);
    j["mobius"] = mu;
    if (!ctx.json_out()) ctx.out << mu << '\n';
  }
  if (ctx.json_out()) ctx.emit(j);
  return kExitOk;
}

int cmd_poset_maximal(const Context& ctx, int n) {
  json labels = json::array();
  for (std::uint64_t v : maximal_vertices(n, ctx.config.vertex_cap)) labels.push_back(Word{v, n}.to_string());
  if (ctx.json_out()) {
    ctx.emit({{"schema", 1}, {"n", n}, {"count", labels.size()}, {"maximal", labels}});
  } else {
    for (const auto& l : labels) ctx.out << l.get<std::string>() << '\n';
  }
  return kExitOk;
}

int cmd_poset_intervals(const Context& ctx, int n) {
  const poset::BooleanIntervalReport r = poset::verify_boolean_intervals(n, ctx.config.vertex_cap);
  if (ctx.json_out()) {
    ctx.emit(r.to_json());
  } else {
    ctx.out << "n " << n << ": " << r.pairs_checked << " comparable pairs, " << r.violations.size() << " violations\n";
    for (const std::string& v : r.violations) ctx.out << "  " << v << '\n';
  }
  return r.passed() ? kExitOk : kExitMismatch;
}

// ---- inv -----------------------------------------------------------------

int cmd_inv(const Context& ctx, int n) {
  const MultiPoly q = inversions::q_polynomial(n, ctx.config.stream_cap);
  if (ctx.json_out()) ctx.emit({{"schema", 1}, {"n", n}, {"q_polynomial", poly_json(q)}});
  else ctx.out << q.to_string() << '\n';
  return kExitOk;
}

// ---- embed ---------------------------------------------------------------

int cmd_embed_encode(const Context& ctx, const std::string& word) {
  const embedding::EncodingResult r = embedding::encode(Word::parse(word));
  if (ctx.json_out()) ctx.emit(r.to_json());
  else ctx.out << r.source.to_string() << " -> " << r.image.to_string() << '\n';
  return kExitOk;
}

int cmd_embed_dilation(const Context& ctx, int n) {
  const embedding::DilationResult r = embedding::dilation(n, ctx.config.threads, ctx.config.vertex_cap);
  if (ctx.json_out()) {
    ctx.emit(r.to_json());
    return kExitOk;
  }
  ctx.out << "n " << n << ", host R_" << r.host_dimension << ", dilation " << r.dilation << '\n';
  for (const auto& [d, c] : r.distance_histogram) ctx.out << "  distance " << d << ": " << c << " edges\n";
  return kExitOk;
}

int cmd_embed_host(const Context& ctx, int max_n) {
  const int order = std::max(ctx.config.order, 5 * max_n / 2 + 5);
  const std::vector<embedding::HostRow> rows = embedding::smallest_host_probe(max_n, order);
  bool all_match = true;
  json list = json::array();
  for (const auto& row : rows) {
    all_match = all_match && row.smallest_host == row.conjectured && row.brute_confirmed.value_or(true);
    list.push_back(row.to_json());
  }
  if (ctx.json_out()) {
    ctx.emit({{"schema", 1}, {"order", order}, {"rows", list}});
  } else {
    for (const auto& row : rows) {
      ctx.out << "Q_" << row.cube_dimension << ": least host "
              << (row.smallest_host ? std::to_string(*row.smallest_host) : std::string("none")) << ", conjectured "
              << row.conjectured;
      if (row.brute_confirmed) ctx.out << (*row.brute_confirmed ? ", brute force agrees" : ", brute force disagrees");
      ctx.out << '\n';
    }
  }
  return all_match ? kExitOk : kExitMismatch;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fibonacci-run graphs: construction, enumeration and generating-function checks", "runcube"};
  app.require_subcommand(1);
  Context ctx{RunConfig{}, out, err};
  RunConfig& cfg = ctx.config;
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "dot"}))
      ->envname("RUNCUBE_FORMAT");
  app.add_option("--threads", cfg.threads, "Worker threads")->check(CLI::Range(1U, 256U))->envname("RUNCUBE_THREADS");
  app.add_option("--order", cfg.order, "Series truncation order")->check(CLI::Range(1, 200))->envname("RUNCUBE_ORDER");
  app.add_option("--vertex-cap", cfg.vertex_cap, "Largest explicit graph")
      ->check(CLI::PositiveNumber)
      ->envname("RUNCUBE_VERTEX_CAP");
  app.add_option("--stream-cap", cfg.stream_cap, "Largest streamed enumeration")
      ->check(CLI::PositiveNumber)
      ->envname("RUNCUBE_STREAM_CAP");
  app.fallthrough();

  std::function<int()> action;
  int n = 0;
  int max_n = 12;
  std::string text_a, text_b;
  bool flag = false;
  bool verbose = false;
  std::vector<std::string> names;

  auto* graph = app.add_subcommand("graph", "Build R_n and print vertices and degrees");
  graph->add_option("--n", n, "Dimension")->required()->check(CLI::Range(1, 40));
  graph->add_flag("--metrics", flag, "Also compute diameter and radius");
  graph->callback([&] { action = [&] { return cmd_graph(ctx, n, flag); }; });

  auto* census = app.add_subcommand("census", "Stream the up/down degree census of R_n");
  census->add_option("--n", n, "Dimension")->required()->check(CLI::Range(1, 40));
  census->callback([&] { action = [&] { return cmd_census(ctx, n); }; });

  auto* gf = app.add_subcommand("gf", "Expand a closed-form generating function");
  gf->add_option("--kind", text_a, "updown, degree, down, up, up-corrected, edge, maximal, cube or rank")->required();
  gf->callback([&] { action = [&] { return cmd_gf(ctx, text_a); }; });

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_flag("--all", flag, "Run every suite");
  verify->add_option("--suite", names, "Suite name (repeatable)");
  verify->add_option("--max-n", max_n, "Largest brute-force dimension")->check(CLI::Range(1, 30));
  verify->add_flag("--verbose", verbose, "Print every check");
  verify->callback([&] { action = [&] { return cmd_verify(ctx, flag, names, max_n, verbose); }; });

  auto* poset = app.add_subcommand("poset", "Poset queries on R_n");
  poset->require_subcommand(1);
  auto* rank = poset->add_subcommand("rank", "Rank polynomial");
  rank->add_option("--n", n)->required()->check(CLI::Range(1, 60));
  rank->callback([&] { action = [&] { return cmd_poset_rank(ctx, n); }; });
  for (const char* what : {"leq", "interval", "mobius"}) {
    auto* sub = poset->add_subcommand(what, std::string("Evaluate ") + what + " on two vertex labels");
    sub->add_option("--n", n)->required()->check(CLI::Range(1, 40));
    sub->add_option("--u", text_a)->required();
    sub->add_option("--v", text_b)->required();
    sub->callback([&, what] { action = [&, what] { return cmd_poset_pair(ctx, what, n, text_a, text_b); }; });
  }
  auto* maximal = poset->add_subcommand("maximal", "Maximal elements");
  maximal->add_option("--n", n)->required()->check(CLI::Range(1, 40));
  maximal->callback([&] { action = [&] { return cmd_poset_maximal(ctx, n); }; });
  auto* intervals = poset->add_subcommand("intervals", "Check that every interval is Boolean");
  intervals->add_option("--n", n)->required()->check(CLI::Range(1, 20));
  intervals->callback([&] { action = [&] { return cmd_poset_intervals(ctx, n); }; });

  auto* inv = app.add_subcommand("inv", "Inversion polynomials Q_n(x, q)");
  inv->require_subcommand(0, 1);
  inv->add_option("--n", n, "Word length")->check(CLI::Range(0, 40));
  inv->callback([&] {
    if (!action) {
      if (inv->count("--n") == 0) throw CLI::RequiredError("--n");
      action = [&] { return cmd_inv(ctx, n); };
    }
  });
  auto* inv_verify = inv->add_subcommand("verify", "Recurrence, functional equation and q = 1 checks");
  inv_verify->add_option("--max,--max-n", max_n)->check(CLI::Range(1, 30));
  inv_verify->callback([&] {
    action = [&] {
      names = {"inv-recurrence", "inv-functional", "inv-q1"};
      return cmd_verify(ctx, false, names, max_n, verbose);
    };
  });

  auto* embed = app.add_subcommand("embed", "Hypercube embedding");
  embed->require_subcommand(1);
  auto* encode = embed->add_subcommand("encode", "Encode a binary word");
  encode->add_option("--word", text_a)->required();
  encode->callback([&] { action = [&] { return cmd_embed_encode(ctx, text_a); }; });
  auto* dil = embed->add_subcommand("dilation", "Dilation of the encoding of Q_n");
  dil->add_option("--n", n)->required()->check(CLI::Range(1, 9));
  dil->callback([&] { action = [&] { return cmd_embed_dilation(ctx, n); }; });
  auto* host = embed->add_subcommand("host", "Smallest R_m containing Q_n");
  host->add_option("--max-n", max_n)->check(CLI::Range(1, 30));
  host->callback([&] { action = [&] { return cmd_embed_host(ctx, max_n); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "structural failure: " << e.what() << '\n';
    return kExitMismatch;
  }
}

}  // namespace runcube::cli
