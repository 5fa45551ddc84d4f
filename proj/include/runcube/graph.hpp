#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "runcube/strings.hpp"

namespace runcube {

inline constexpr std::uint64_t kDefaultVertexCap = 2'000'000;
inline constexpr std::uint64_t kDefaultStreamCap = 50'000'000;

struct Degrees {
  int up = 0;
  int down = 0;
  friend bool operator==(const Degrees&, const Degrees&) = default;
};

// Up/down degree of a run-constrained word: the number of single-bit flips 0->1 and 1->0
// that leave the word run-constrained.
Degrees flip_degrees(const Word& word);

// Degrees of a vertex of R_n, validated on label·00.
Degrees vertex_degrees(int n, std::uint64_t label);

// R_n with vertices sorted ascending and neighbor lists in CSR form.
class FibRunGraph {
 public:
  int n() const { return n_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return neighbors_.size() / 2; }
  const std::vector<std::uint64_t>& vertices() const { return vertices_; }
  std::uint64_t label(std::size_t v) const { return vertices_[v]; }
  std::optional<std::size_t> index_of(std::uint64_t label) const;
  std::span<const std::uint32_t> neighbors(std::size_t v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  std::string label_string(std::size_t v) const { return Word{vertices_[v], n_}.to_string(); }

  friend FibRunGraph build(int n, std::uint64_t vertex_cap);

 private:
  int n_ = 0;
  std::vector<std::uint64_t> vertices_;
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> neighbors_;
};

FibRunGraph build(int n, std::uint64_t vertex_cap = kDefaultVertexCap);

struct DegreeCensus {
  int n = 0;
  std::map<std::pair<int, int>, std::uint64_t> counts;  // (up, down) -> vertices

  std::uint64_t vertex_count() const;
  std::uint64_t edge_count() const;
  std::uint64_t count_with_up_degree(int up) const;
};

struct CensusOptions {
  unsigned threads = 1;
  std::uint64_t stream_cap = kDefaultStreamCap;
};

// Streams the vertices of R_n without building adjacency. Shards are merged by summation,
// so the result does not depend on the thread count.
DegreeCensus degree_census(int n, const CensusOptions& options = {});

// (3n+4) f_{n-6} + (5n+6) f_{n-5}, valid for n >= 5.
mpz_class closed_form_edge_count(long n);

// Distances in edges; throws std::logic_error if some vertex is unreachable.
std::vector<int> bfs_distances(const FibRunGraph& g, std::size_t source);
int eccentricity(const FibRunGraph& g, std::size_t v);
int diameter(const FibRunGraph& g);
int radius(const FibRunGraph& g);

// Vertices with up-degree 0, ascending.
std::vector<std::uint64_t> maximal_vertices(int n, std::uint64_t vertex_cap = kDefaultVertexCap);

// h[k] = number of interval subcubes [u, v] of dimension k whose 2^k members are all vertices.
std::vector<std::uint64_t> count_induced_cubes(int n, std::uint64_t vertex_cap = kDefaultVertexCap);

std::string to_dot(const FibRunGraph& g);
nlohmann::json census_json(const DegreeCensus& census);
nlohmann::json to_json(const FibRunGraph& g, const DegreeCensus& census);

}  // namespace runcube
