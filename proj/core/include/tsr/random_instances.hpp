#pragma once

#include <cstdint>
#include <random>

#include "tsr/graph.hpp"
#include "tsr/interval_graph.hpp"

namespace tsr {

/// Unbiased draw from [0, bound) that depends only on the engine's output
/// stream, so results are reproducible across standard libraries.
std::uint64_t bounded_random(std::mt19937_64& rng, std::uint64_t bound);

/// Random interval graph on vertices v1..vn: a random permutation of the
/// endpoint values 1..2n is paired off consecutively, each pair ordered as
/// (min, max). Every interval is nonempty and all endpoints are distinct by
/// construction.
IntervalGraph random_interval_graph(int n, std::mt19937_64& rng);

/// Erdos-Renyi style random graph on vertices v1..vn.
Graph random_graph(int n, double edge_probability, std::mt19937_64& rng);

}  // namespace tsr
