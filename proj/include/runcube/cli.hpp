#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "runcube/graph.hpp"
#include "runcube/series.hpp"

namespace runcube::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  std::uint64_t vertex_cap = kDefaultVertexCap;
  std::uint64_t stream_cap = kDefaultStreamCap;
  int order = kDefaultOrder;
  std::string format = "text";  // text | json | dot
  unsigned threads = 1;
};

// Entry point shared by the executable and the tests. Returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace runcube::cli
