#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "runcube/graph.hpp"
#include "runcube/poly.hpp"
#include "runcube/report.hpp"

namespace runcube::poset {

const Vars& rank_vars();  // {x}

// sum_k C(n-k+1, k) x^k
MultiPoly rank_polynomial(int n);

// R_n ordered by the transitive closure of single 0 -> 1 flips.
class PosetView {
 public:
  explicit PosetView(int n, std::uint64_t vertex_cap = kDefaultVertexCap);

  int n() const { return graph_.n(); }
  const FibRunGraph& graph() const { return graph_; }
  bool is_vertex(std::uint64_t label) const { return graph_.index_of(label).has_value(); }

  // True iff a chain of covers leads from u to v. Both must be vertices.
  bool leq(std::uint64_t u, std::uint64_t v) const;
  // {w : u <= w <= v}, ascending; empty when u is not below v.
  std::vector<std::uint64_t> interval(std::uint64_t u, std::uint64_t v) const;
  // (-1)^{|v| - |u|} when u <= v, else 0.
  int mobius(std::uint64_t u, std::uint64_t v) const;

 private:
  void require_vertex(std::uint64_t label) const;

  FibRunGraph graph_;
};

struct BooleanIntervalReport {
  int n = 0;
  std::uint64_t pairs_checked = 0;
  std::vector<std::string> violations;

  bool passed() const { return violations.empty(); }
  nlohmann::json to_json() const;
};

// Every comparable pair u <= v must span a full Boolean interval of size 2^{|v|-|u|}.
BooleanIntervalReport verify_boolean_intervals(int n, std::uint64_t vertex_cap = kDefaultVertexCap);

// Maximal-element counts three ways: brute force (n <= brute_max), the printed rational
// GF, and the u := 0, d := 1 specialization of the up-down GF.
Report maximal_gf_check(int order, int brute_max);

}  // namespace runcube::poset
