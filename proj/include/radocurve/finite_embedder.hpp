#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "radocurve/finite_graph.hpp"

namespace radocurve {

// Symbolic witness of a finite-graph embedding into a curve graph: n curves
// on a closed surface, a declared pairwise geometric intersection matrix, and
// the handle list that removed the intersections of the graph's edges.
struct SurfaceRecipe {
  std::size_t n = 0;
  std::uint64_t genus = 0;
  std::vector<std::pair<std::size_t, std::size_t>> handles;
  std::vector<std::uint8_t> pairwise;  // row-major n x n, zero diagonal

  std::uint8_t at(std::size_t u, std::size_t v) const {
    return pairwise[u * n + v];
  }
};

// ceil((n-1)/2) + m handles; requires n >= 2 (n = 1 is special-cased by
// embed_finite_graph, n = 0 is rejected).
std::uint64_t genus_upper_bound(std::size_t n, std::uint64_t m);

// Complete 1-system on g.size() curves, one handle per edge of g zeroing that
// pair's intersection. Throws std::invalid_argument when g is empty.
SurfaceRecipe embed_finite_graph(const FiniteGraph& g);

// Graph on the recipe's curves with an edge exactly at the zero entries.
// Throws std::invalid_argument on a malformed matrix.
FiniteGraph recipe_curve_graph(const SurfaceRecipe& r);

// Largest set of pairwise-adjacent vertices; brute force, intended for the
// small graphs the recipes produce.
std::size_t max_clique(const FiniteGraph& g);

// JSON with stable key order: n, genus, handles, pairwise (row-major).
std::string recipe_to_json(const SurfaceRecipe& r);
SurfaceRecipe recipe_from_json(const std::string& text);

}  // namespace radocurve
