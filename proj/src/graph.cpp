#include "runcube/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "runcube/errors.hpp"

namespace runcube {

Degrees flip_degrees(const Word& word) {
  Degrees d;
  for (int i = 0; i < word.length; ++i) {
    if (!is_run_constrained(word.flipped(i))) continue;
    if (word.at(i))
      ++d.down;
    else
      ++d.up;
  }
  return d;
}

Degrees vertex_degrees(int n, std::uint64_t label) {
  const RunString v(n, label);
  return flip_degrees(v.full());
}

std::optional<std::size_t> FibRunGraph::index_of(std::uint64_t label) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), label);
  if (it == vertices_.end() || *it != label) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

namespace {

void check_vertex_cap(int n, std::uint64_t cap, const char* what) {
  if (n < 1) throw DomainError(std::string(what) + " requires n >= 1");
  if (n + 2 > kMaxWordLength) throw ResourceError("n too large for 64-bit labels");
  const mpz_class count = fibonacci(n + 2);
  if (count > mpz_class(std::to_string(cap)))
    throw ResourceError(std::string(what) + ": R_" + std::to_string(n) + " has " + count.get_str() +
                        " vertices, above the cap of " + std::to_string(cap));
}

}  // namespace

FibRunGraph build(int n, std::uint64_t vertex_cap) {
  check_vertex_cap(n, vertex_cap, "build");
  FibRunGraph g;
  g.n_ = n;
  g.vertices_.reserve(fibonacci(n + 2).get_ui());
  for_each_rc(n + 2, [&](const Word& w) { g.vertices_.push_back(w.bits >> 2); });
  g.offsets_.reserve(g.vertices_.size() + 1);
  g.offsets_.push_back(0);
  std::vector<std::uint32_t> row;
  for (std::uint64_t label : g.vertices_) {
    row.clear();
    for (int bit = 0; bit < n; ++bit) {
      const std::uint64_t other = label ^ (std::uint64_t{1} << bit);
      if (auto j = g.index_of(other)) row.push_back(static_cast<std::uint32_t>(*j));
    }
    std::sort(row.begin(), row.end());
    g.neighbors_.insert(g.neighbors_.end(), row.begin(), row.end());
    g.offsets_.push_back(g.neighbors_.size());
  }
  return g;
}

std::uint64_t DegreeCensus::vertex_count() const {
  std::uint64_t total = 0;
  for (const auto& [key, c] : counts) total += c;
  return total;
}

std::uint64_t DegreeCensus::edge_count() const {
  std::uint64_t up_total = 0;
  for (const auto& [key, c] : counts) up_total += static_cast<std::uint64_t>(key.first) * c;
  return up_total;
}

std::uint64_t DegreeCensus::count_with_up_degree(int up) const {
  std::uint64_t total = 0;
  for (const auto& [key, c] : counts)
    if (key.first == up) total += c;
  return total;
}

DegreeCensus degree_census(int n, const CensusOptions& options) {
  check_vertex_cap(n, options.stream_cap, "degree_census");
  const unsigned shards = std::max(1U, options.threads);
  const std::size_t side = static_cast<std::size_t>(n + 1);
  std::vector<std::vector<std::uint64_t>> tables(shards, std::vector<std::uint64_t>(side * side, 0));

  auto work = [&](unsigned shard) {
    auto& table = tables[shard];
    std::uint64_t index = 0;
    for_each_rc(n + 2, [&](const Word& w) {
      if (index++ % shards != shard) return;
      const Degrees d = flip_degrees(w);
      ++table[static_cast<std::size_t>(d.up) * side + static_cast<std::size_t>(d.down)];
    });
  };
  if (shards == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned s = 0; s < shards; ++s) pool.emplace_back(work, s);
  }

  DegreeCensus census;
  census.n = n;
  for (std::size_t up = 0; up < side; ++up)
    for (std::size_t down = 0; down < side; ++down) {
      std::uint64_t total = 0;
      for (const auto& t : tables) total += t[up * side + down];
      if (total != 0) census.counts[{static_cast<int>(up), static_cast<int>(down)}] = total;
    }
  return census;
}

mpz_class closed_form_edge_count(long n) {
  if (n < 5) throw DomainError("closed-form edge count requires n >= 5");
  return (3 * n + 4) * fibonacci(n - 6) + (5 * n + 6) * fibonacci(n - 5);
}

std::vector<int> bfs_distances(const FibRunGraph& g, std::size_t source) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::uint32_t w : g.neighbors(v)) {
      if (dist[w] >= 0) continue;
      dist[w] = dist[v] + 1;
      ++reached;
      queue.push_back(w);
    }
  }
  if (reached != g.vertex_count())
    throw std::logic_error("R_" + std::to_string(g.n()) + " is disconnected: BFS from " +
                           g.label_string(source) + " reached " + std::to_string(reached) + " of " +
                           std::to_string(g.vertex_count()) + " vertices");
  return dist;
}

int eccentricity(const FibRunGraph& g, std::size_t v) {
  const auto dist = bfs_distances(g, v);
  return *std::max_element(dist.begin(), dist.end());
}

int diameter(const FibRunGraph& g) {
  int best = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) best = std::max(best, eccentricity(g, v));
  return best;
}

int radius(const FibRunGraph& g) {
  int best = -1;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const int e = eccentricity(g, v);
    if (best < 0 || e < best) best = e;
  }
  return best;
}

std::vector<std::uint64_t> maximal_vertices(int n, std::uint64_t vertex_cap) {
  check_vertex_cap(n, vertex_cap, "maximal_vertices");
  std::vector<std::uint64_t> out;
  for_each_rc(n + 2, [&](const Word& w) {
    if (flip_degrees(w).up == 0) out.push_back(w.bits >> 2);
  });
  return out;
}

namespace {

bool is_vertex(std::uint64_t label, int n) { return is_run_constrained(Word{label << 2, n + 2}); }

// Counts interval cubes [u, u|D] with D built from candidate directions in increasing order.
// Adding direction i to a valid cube D needs every u|S|i (S subset of D) to be a vertex.
void extend_cube(std::uint64_t u, std::uint64_t cube, std::span<const std::uint64_t> members,
                 std::span<const std::uint64_t> directions, std::size_t next, int n, int dim,
                 std::vector<std::uint64_t>& h) {
  for (std::size_t k = next; k < directions.size(); ++k) {
    const std::uint64_t dir = directions[k];
    bool ok = true;
    for (std::uint64_t m : members)
      if (!is_vertex(m | dir, n)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    ++h[static_cast<std::size_t>(dim + 1)];
    std::vector<std::uint64_t> grown(members.begin(), members.end());
    for (std::uint64_t m : members) grown.push_back(m | dir);
    extend_cube(u, cube | dir, grown, directions, k + 1, n, dim + 1, h);
  }
}

}  // namespace

std::vector<std::uint64_t> count_induced_cubes(int n, std::uint64_t vertex_cap) {
  check_vertex_cap(n, vertex_cap, "count_induced_cubes");
  std::vector<std::uint64_t> h(static_cast<std::size_t>((n + 1) / 2 + 1), 0);
  std::vector<std::uint64_t> directions;
  for_each_rc(n + 2, [&](const Word& w) {
    const std::uint64_t u = w.bits >> 2;
    ++h[0];
    directions.clear();
    for (int bit = 0; bit < n; ++bit) {
      const std::uint64_t dir = std::uint64_t{1} << bit;
      if (!(u & dir) && is_vertex(u | dir, n)) directions.push_back(dir);
    }
    const std::uint64_t self[] = {u};
    extend_cube(u, 0, self, directions, 0, n, 0, h);
  });
  while (h.size() > 1 && h.back() == 0) h.pop_back();
  return h;
}

std::string to_dot(const FibRunGraph& g) {
  std::ostringstream out;
  out << "graph R" << g.n() << " {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) out << "  \"" << g.label_string(v) << "\";\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    for (std::uint32_t w : g.neighbors(v))
      if (v < w) out << "  \"" << g.label_string(v) << "\" -- \"" << g.label_string(w) << "\";\n";
  out << "}\n";
  return out.str();
}

nlohmann::json census_json(const DegreeCensus& census) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [key, c] : census.counts)
    rows.push_back({{"up", key.first}, {"down", key.second}, {"count", c}});
  return rows;
}

nlohmann::json to_json(const FibRunGraph& g, const DegreeCensus& census) {
  nlohmann::json vertices = nlohmann::json::array();
  nlohmann::json edges = nlohmann::json::array();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    vertices.push_back(g.label_string(v));
    for (std::uint32_t w : g.neighbors(v))
      if (v < w) edges.push_back({g.label_string(v), g.label_string(w)});
  }
  return {{"schema", 1}, {"n", g.n()}, {"vertices", vertices}, {"edges", edges},
          {"census", census_json(census)}};
}

}  // namespace runcube
