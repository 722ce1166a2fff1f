#include "tsr/random_instances.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace tsr {

std::uint64_t bounded_random(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw InputError("bounded_random: bound must be positive");
  const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

IntervalGraph random_interval_graph(int n, std::mt19937_64& rng) {
  if (n < 0) throw InputError("instance size must be non-negative");
  std::vector<long long> endpoints(2 * static_cast<std::size_t>(n));
  std::iota(endpoints.begin(), endpoints.end(), 1);
  for (std::size_t i = endpoints.size(); i > 1; --i)
    std::swap(endpoints[i - 1], endpoints[bounded_random(rng, i)]);

  std::vector<IntervalSpec> specs;
  specs.reserve(n);
  for (int i = 0; i < n; ++i) {
    const long long a = endpoints[2 * i];
    const long long b = endpoints[2 * i + 1];
    specs.push_back({"v" + std::to_string(i + 1), std::min(a, b), std::max(a, b)});
  }
  return IntervalGraph::from_intervals(std::move(specs));
}

Graph random_graph(int n, double edge_probability, std::mt19937_64& rng) {
  if (n < 0) throw InputError("instance size must be non-negative");
  GraphBuilder builder;
  for (int i = 0; i < n; ++i) builder.add_vertex("v" + std::to_string(i + 1));
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b) {
      const double coin = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (coin < edge_probability) builder.add_edge(a, b);
    }
  return std::move(builder).build();
}

}  // namespace tsr
