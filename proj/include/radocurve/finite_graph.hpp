#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace radocurve {

// Simple undirected graph on vertices 0..n-1, edges stored as ordered pairs
// (u < v). No self-loops, no duplicates.
class FiniteGraph {
 public:
  FiniteGraph() = default;
  explicit FiniteGraph(std::size_t n) : n_(n) {}

  std::size_t size() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }

  void add_edge(std::size_t u, std::size_t v);
  bool has_edge(std::size_t u, std::size_t v) const;

  const std::set<std::pair<std::size_t, std::size_t>>& edges() const {
    return edges_;
  }

  FiniteGraph complement() const;

  bool operator==(const FiniteGraph&) const = default;

  // Text format: line 1 "n m", then m lines "u v"; '#' starts a comment.
  static FiniteGraph parse(std::istream& in);
  void write(std::ostream& out) const;

 private:
  std::size_t n_ = 0;
  std::set<std::pair<std::size_t, std::size_t>> edges_;
};

// Erdos-Renyi G(n, 1/2) from a seeded deterministic stream; same seed gives
// the same graph.
FiniteGraph er_random_graph(std::size_t n, std::uint64_t seed);

// True iff some vertex of g outside U and W is adjacent to all of U and none
// of W.
bool has_extension_vertex(const FiniteGraph& g, const std::vector<std::size_t>& u,
                          const std::vector<std::size_t>& w);

struct ExtensionSplit {
  std::vector<std::size_t> u;
  std::vector<std::size_t> w;
};

struct ExtensionSampleReport {
  std::size_t trials = 0;
  std::size_t successes = 0;
  std::optional<ExtensionSplit> failing_example;

  double success_fraction() const {
    return trials == 0 ? 1.0 : static_cast<double>(successes) / trials;
  }
};

// Samples `trials` disjoint splits (U, W) with |U| + |W| = t among the
// vertices of g and searches g for a witness vertex for each. Reproducible
// per seed. Throws std::invalid_argument if t > g.size().
ExtensionSampleReport check_extension_samples(const FiniteGraph& g,
                                              std::size_t t, std::size_t trials,
                                              std::uint64_t seed);

}  // namespace radocurve
