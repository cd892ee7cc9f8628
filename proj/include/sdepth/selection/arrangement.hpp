#pragma once

#include <cstdint>
#include <vector>

#include "sdepth/depth/configuration.hpp"

namespace sdepth::selection {

struct ArrangementVertex {
    std::uint64_t containing = 0; // exact depth at the vertex itself
    geom::Point approx;           // nearest-ish binary64 point; may sit on the wrong side of an edge
};

struct ArrangementSearch {
    std::uint64_t max_containing = 0; // certified maximum of colourful depth over the plane
    std::uint64_t total = 0;
    std::vector<ArrangementVertex> best; // deepest vertices first
    std::uint64_t vertices_visited = 0;
    std::size_t lines = 0;
};

// Exact maximum planar colourful depth under closed containment. Sweeps every line through two
// differently coloured points (only rainbow triangle edges can change the depth) and, on each,
// counts the closed triangles covering each arrangement vertex with a difference array.
// Vertex order along a line is decided by filtered arithmetic with an exact rational fallback.
// InputError unless cfg.dim() == 2.
ArrangementSearch planar_arrangement_search(const depth::ColoredConfiguration& cfg,
                                            std::size_t keep = 8, unsigned threads = 1);

} // namespace sdepth::selection
