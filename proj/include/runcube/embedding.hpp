#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <optional>
#include <vector>

#include <json.hpp>

#include "runcube/graph.hpp"
#include "runcube/report.hpp"
#include "runcube/series.hpp"
#include "runcube/strings.hpp"

namespace runcube::embedding {

const Vars& cube_vars();  // {x}

struct EncodingResult {
  Word source;
  Word image;  // full run-constrained word of length 3n+1

  int host_dimension() const { return 3 * source.length - 1; }
  std::uint64_t host_label() const { return image.bits >> 2; }
  nlohmann::json to_json() const;
};

// 0^{j0} 1^{i1} 0^{j1} ... -> 0 s_{j0} s_{i1} s_{j1} ... with s_i = 1^i 0^{i+1}, the leading 0
// only when j0 > 0, then zeros on the right up to length 3n+1.
EncodingResult encode(const Word& source);

struct DilationResult {
  int n = 0;
  int host_dimension = 0;
  int dilation = 0;
  std::map<int, std::uint64_t> distance_histogram;  // over hypercube edges
  nlohmann::json to_json() const;
};

DilationResult dilation(int n, unsigned threads = 1, std::uint64_t vertex_cap = kDefaultVertexCap);

RationalGF cube_gf();
// Coefficients over the cube registry; h[k] becomes the coefficient of x^k.
MultiPoly cube_polynomial(std::span<const std::uint64_t> h);
Report cube_gf_check(int order, int brute_max = 10);

struct HostRow {
  int cube_dimension = 0;
  std::optional<int> smallest_host;  // empty if no host within the order
  int conjectured = 0;               // ceil((5n - 4) / 2)
  std::optional<bool> brute_confirmed;
  nlohmann::json to_json() const;
};

std::vector<HostRow> smallest_host_probe(int n_max, int order, int brute_max = 4);

}  // namespace runcube::embedding
