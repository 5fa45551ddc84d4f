#include "runcube/embedding.hpp"

#include <algorithm>
#include <thread>

#include "runcube/errors.hpp"

namespace runcube::embedding {

const Vars& cube_vars() {
  static const Vars vars{"x"};
  return vars;
}

nlohmann::json EncodingResult::to_json() const {
  return {{"schema", 1},
          {"source", source.to_string()},
          {"image", image.to_string()},
          {"host_dimension", host_dimension()},
          {"host_label", Word{host_label(), host_dimension()}.to_string()}};
}

namespace {

void append_s(std::string& out, int i) {
  out.append(static_cast<std::size_t>(i), '1');
  out.append(static_cast<std::size_t>(i + 1), '0');
}

}  // namespace

EncodingResult encode(const Word& source) {
  const int n = source.length;
  if (n < 1) throw DomainError("encode needs a word of length >= 1");
  if (3 * n + 1 > kMaxWordLength) throw ResourceError("encoded word would exceed " + std::to_string(kMaxWordLength) + " characters");
  std::string out;
  int i = 0;
  bool first = true;
  while (i < n) {
    const bool bit = source.at(i);
    int run = 0;
    while (i < n && source.at(i) == bit) ++i, ++run;
    if (first && !bit) out.push_back('0');
    first = false;
    append_s(out, run);
  }
  out.resize(static_cast<std::size_t>(3 * n + 1), '0');
  return {source, Word::parse(out)};
}

nlohmann::json DilationResult::to_json() const {
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [d, c] : distance_histogram) hist[std::to_string(d)] = c;
  return {{"schema", 1}, {"n", n}, {"host_dimension", host_dimension}, {"dilation", dilation},
          {"distance_histogram", hist}};
}

DilationResult dilation(int n, unsigned threads, std::uint64_t vertex_cap) {
  if (n < 1 || n > 20) throw DomainError("dilation needs 1 <= n <= 20");
  const FibRunGraph host = build(3 * n - 1, vertex_cap);
  const std::uint64_t sources = std::uint64_t{1} << n;
  std::vector<std::size_t> image(sources);
  for (std::uint64_t s = 0; s < sources; ++s)
    image[s] = *host.index_of(encode(Word{s, n}).host_label());

  // One BFS per source; edges (s, s ^ bit) with s < s ^ bit are counted once.
  threads = std::max(1U, threads);
  std::vector<std::map<int, std::uint64_t>> partial(threads);
  {
    std::vector<std::jthread> pool;
    for (unsigned shard = 0; shard < threads; ++shard) {
      pool.emplace_back([&, shard] {
        for (std::uint64_t s = shard; s < sources; s += threads) {
          const std::vector<int> dist = bfs_distances(host, image[s]);
          for (int b = 0; b < n; ++b) {
            const std::uint64_t t = s ^ (std::uint64_t{1} << b);
            if (t > s) ++partial[shard][dist[image[t]]];
          }
        }
      });
    }
  }
  DilationResult result{n, 3 * n - 1, 0, {}};
  for (const auto& part : partial)
    for (const auto& [d, c] : part) result.distance_histogram[d] += c;
  if (!result.distance_histogram.empty()) result.dilation = result.distance_histogram.rbegin()->first;
  return result;
}

RationalGF cube_gf() {
  // The printed numerator leaves one parenthesis open; it is closed at the end.
  return RationalGF::parse("t(2 + x + (x+1)t + x(x+2)t^2 + x(x+1)t^3 + x(x+1)t^4)",
                           "1 - t - t^2 - xt^3 - x(x+1)t^5", cube_vars());
}

MultiPoly cube_polynomial(std::span<const std::uint64_t> h) {
  std::vector<MultiPoly::Term> terms;
  for (std::size_t k = 0; k < h.size(); ++k) {
    const unsigned exps[] = {static_cast<unsigned>(k)};
    terms.emplace_back(Monomial::from_exponents(exps), mpz_class(std::to_string(h[k])));
  }
  return MultiPoly::from_terms(cube_vars(), std::move(terms));
}

Report cube_gf_check(int order, int brute_max) {
  if (order < 1) throw DomainError("cube GF check needs order >= 1");
  Report report("cube polynomials");
  const TruncatedSeries series = expand_rational(cube_gf(), order);
  for (int n = 1; n <= std::min(order, brute_max); ++n) {
    const std::vector<std::uint64_t> h = count_induced_cubes(n);
    const std::string diff = first_difference(series[n], cube_polynomial(h));
    report.add("n=" + std::to_string(n), diff.empty(), diff);
  }
  return report;
}

nlohmann::json HostRow::to_json() const {
  nlohmann::json j{{"n", cube_dimension}, {"conjectured", conjectured}};
  j["smallest_host"] = smallest_host ? nlohmann::json(*smallest_host) : nlohmann::json(nullptr);
  j["brute_confirmed"] = brute_confirmed ? nlohmann::json(*brute_confirmed) : nlohmann::json(nullptr);
  j["matches"] = smallest_host && *smallest_host == conjectured;
  return j;
}

std::vector<HostRow> smallest_host_probe(int n_max, int order, int brute_max) {
  if (n_max < 1) throw DomainError("host probe needs n_max >= 1");
  const TruncatedSeries series = expand_rational(cube_gf(), order);
  std::vector<HostRow> rows;
  for (int c = 1; c <= n_max; ++c) {
    HostRow row;
    row.cube_dimension = c;
    row.conjectured = (5 * c - 4 + 1) / 2;
    const unsigned exps[] = {static_cast<unsigned>(c)};
    const Monomial xc = Monomial::from_exponents(exps);
    for (int m = 1; m <= order; ++m) {
      if (series[m].coefficient(xc) > 0) {
        row.smallest_host = m;
        break;
      }
    }
    if (c <= brute_max && row.smallest_host) {
      const int m = *row.smallest_host;
      const auto at = [c](const std::vector<std::uint64_t>& h) {
        return static_cast<std::size_t>(c) < h.size() ? h[static_cast<std::size_t>(c)] : 0;
      };
      row.brute_confirmed = at(count_induced_cubes(m)) > 0 && (m == 1 || at(count_induced_cubes(m - 1)) == 0);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace runcube::embedding
