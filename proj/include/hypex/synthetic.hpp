#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>

#include "hypex/hypergraph.hpp"

namespace hypex {

// Hypergraph with known 3-way structure: planted triples emitted as size-3
// hyperedges, size-4 hyperedges formed only by extending a planted triple
// with one extra node, and random size-2/3 background noise.
struct PlantedConfig {
  std::size_t nodes = 200;
  std::size_t planted_triples = 300;
  std::size_t max_repeats = 3;  // each planted triple appears 1..max_repeats times
  std::size_t extended = 400;   // distinct size-4 hyperedges
  std::size_t background = 2000;
};

RawHyperedges planted_dataset(const PlantedConfig& config, std::uint64_t seed);

// One hyperedge per line in the edge-list format.
void write_edge_list(std::ostream& out, const RawHyperedges& raw);

}  // namespace hypex
