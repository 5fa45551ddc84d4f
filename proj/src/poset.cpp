#include "runcube/poset.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_set>

#include "runcube/enumerators.hpp"
#include "runcube/errors.hpp"
#include "runcube/strings.hpp"

namespace runcube::poset {

const Vars& rank_vars() {
  static const Vars vars{"x"};
  return vars;
}

MultiPoly rank_polynomial(int n) {
  if (n < 0) throw DomainError("rank polynomial needs n >= 0");
  std::vector<MultiPoly::Term> terms;
  for (int k = 0; k <= (n + 1) / 2; ++k) {
    const unsigned exps[] = {static_cast<unsigned>(k)};
    terms.emplace_back(Monomial::from_exponents(exps), weight_count(n, k));
  }
  return MultiPoly::from_terms(rank_vars(), std::move(terms));
}

PosetView::PosetView(int n, std::uint64_t vertex_cap) : graph_(build(n, vertex_cap)) {}

void PosetView::require_vertex(std::uint64_t label) const {
  if (!is_vertex(label))
    throw ValidationError(Word{label, n()}.to_string() + " is not a vertex of R_" + std::to_string(n()));
}

bool PosetView::leq(std::uint64_t u, std::uint64_t v) const {
  require_vertex(u);
  require_vertex(v);
  if ((u & ~v) != 0) return false;
  // Depth-first search upward through vertices inside [u, v] as bitmasks.
  std::unordered_set<std::uint64_t> seen{u};
  std::vector<std::uint64_t> stack{u};
  while (!stack.empty()) {
    const std::uint64_t w = stack.back();
    stack.pop_back();
    if (w == v) return true;
    for (std::uint64_t free = v & ~w; free != 0; free &= free - 1) {
      const std::uint64_t next = w | (free & -free);
      if (is_vertex(next) && seen.insert(next).second) stack.push_back(next);
    }
  }
  return false;
}

std::vector<std::uint64_t> PosetView::interval(std::uint64_t u, std::uint64_t v) const {
  if (!leq(u, v)) return {};
  std::vector<std::uint64_t> out;
  std::unordered_set<std::uint64_t> seen{u};
  std::deque<std::uint64_t> queue{u};
  while (!queue.empty()) {
    const std::uint64_t w = queue.front();
    queue.pop_front();
    if (leq(w, v)) out.push_back(w);
    for (std::uint64_t free = v & ~w; free != 0; free &= free - 1) {
      const std::uint64_t next = w | (free & -free);
      if (is_vertex(next) && seen.insert(next).second) queue.push_back(next);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int PosetView::mobius(std::uint64_t u, std::uint64_t v) const {
  if (!leq(u, v)) return 0;
  return (std::popcount(v) - std::popcount(u)) % 2 == 0 ? 1 : -1;
}

nlohmann::json BooleanIntervalReport::to_json() const {
  return {{"schema", 1}, {"n", n}, {"pairs_checked", pairs_checked}, {"violations", violations}};
}

BooleanIntervalReport verify_boolean_intervals(int n, std::uint64_t vertex_cap) {
  const PosetView poset(n, vertex_cap);
  const auto& vertices = poset.graph().vertices();
  BooleanIntervalReport report;
  report.n = n;
  for (int diff = 0; diff <= n; ++diff) {
    for (std::uint64_t u : vertices) {
      for (std::uint64_t v : vertices) {
        if ((u & ~v) != 0 || std::popcount(v & ~u) != diff) continue;
        if (!poset.leq(u, v)) continue;
        ++report.pairs_checked;
        const std::uint64_t free = v & ~u;
        std::string problem;
        // Every bitmask between u and v must be a vertex.
        for (std::uint64_t sub = free;; sub = (sub - 1) & free) {
          if (!poset.is_vertex(u | sub)) {
            problem = "missing " + Word{u | sub, n}.to_string();
            break;
          }
          if (sub == 0) break;
        }
        const std::size_t size = poset.interval(u, v).size();
        if (problem.empty() && size != (std::size_t{1} << diff))
          problem = "interval has " + std::to_string(size) + " elements, expected " +
                    std::to_string(std::size_t{1} << diff);
        if (!problem.empty())
          report.violations.push_back("[" + Word{u, n}.to_string() + ", " + Word{v, n}.to_string() + "]: " + problem);
      }
    }
  }
  return report;
}

Report maximal_gf_check(int order, int brute_max) {
  Report report("maximal elements");
  const TruncatedSeries printed = expand_rational(enumerators::maximal_gf(), order);
  const TruncatedSeries specialized = enumerators::gf_updown_closed(order).map(
      [](const MultiPoly& p) { return p.evaluate_at("u", 0).evaluate_at("d", 1); });
  const SeriesMismatch m = first_mismatch(printed, specialized);
  report.add("printed GF equals the u := 0, d := 1 specialization", !m, m.detail);
  for (int n = 1; n <= std::min(order, brute_max); ++n) {
    const std::size_t brute = maximal_vertices(n).size();
    const mpz_class series = printed[n].constant_term();
    report.add("n=" + std::to_string(n), series == brute,
               "brute force " + std::to_string(brute) + ", series " + series.get_str());
  }
  return report;
}

}  // namespace runcube::poset
