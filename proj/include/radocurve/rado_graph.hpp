#pragma once

#include <set>
#include <vector>

#include "radocurve/numbers.hpp"

namespace radocurve {

class FiniteGraph;

// The Rado bit model is used in two polarities: Direct reads a set bit as an
// edge, Complement reads a clear bit as an edge.
enum class Polarity { Direct, Complement };

// Adjacency of distinct vertices x, y: with m = min, M = max, Direct means
// bit(m, M) = 1 and Complement means bit(m, M) = 0. Symmetric. Throws
// std::invalid_argument on x == y (no self-loops).
bool rado_adjacent(const Natural& x, const Natural& y, Polarity p);

// A vertex adjacent to everything in nbrs and nothing in nonnbrs, fresh with
// respect to both sets. Closed form: z = 2^k + sum of 2^u over the set whose
// bits must be set, with k = 1 + max(nbrs, nonnbrs, 0). Deterministic.
// Throws std::invalid_argument if the sets overlap.
Natural extension_witness(const std::set<Natural>& nbrs,
                          const std::set<Natural>& nonnbrs, Polarity p);

// True iff map is injective and for all u < v: {u,v} is an edge of g exactly
// when map[u], map[v] are Rado-adjacent in polarity p. Throws
// std::invalid_argument if map length differs from g.size().
bool is_induced_embedding(const FiniteGraph& g, const std::vector<Natural>& map,
                          Polarity p);

}  // namespace radocurve
