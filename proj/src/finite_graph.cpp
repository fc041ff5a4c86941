#include "radocurve/finite_graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace radocurve {

void FiniteGraph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) throw std::invalid_argument("FiniteGraph: self-loop");
  if (u >= n_ || v >= n_) throw std::invalid_argument("FiniteGraph: vertex out of range");
  if (u > v) std::swap(u, v);
  edges_.insert({u, v});
}

bool FiniteGraph::has_edge(std::size_t u, std::size_t v) const {
  if (u > v) std::swap(u, v);
  return edges_.count({u, v}) != 0;
}

FiniteGraph FiniteGraph::complement() const {
  FiniteGraph c(n_);
  for (std::size_t u = 0; u < n_; ++u)
    for (std::size_t v = u + 1; v < n_; ++v)
      if (!has_edge(u, v)) c.add_edge(u, v);
  return c;
}

FiniteGraph FiniteGraph::parse(std::istream& in) {
  auto next_line = [&in](std::string& line) -> bool {
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  std::string line;
  if (!next_line(line)) throw std::invalid_argument("graph file: missing header");
  std::istringstream header(line);
  std::size_t n = 0, m = 0;
  if (!(header >> n >> m)) throw std::invalid_argument("graph file: bad header");
  FiniteGraph g(n);
  for (std::size_t i = 0; i < m; ++i) {
    if (!next_line(line)) throw std::invalid_argument("graph file: missing edge line");
    std::istringstream row(line);
    std::size_t u = 0, v = 0;
    if (!(row >> u >> v)) throw std::invalid_argument("graph file: bad edge line");
    g.add_edge(u, v);
  }
  return g;
}

void FiniteGraph::write(std::ostream& out) const {
  out << n_ << ' ' << edges_.size() << '\n';
  for (const auto& [u, v] : edges_) out << u << ' ' << v << '\n';
}

FiniteGraph er_random_graph(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  FiniteGraph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng() & 1u) g.add_edge(u, v);
  return g;
}

bool has_extension_vertex(const FiniteGraph& g, const std::vector<std::size_t>& u,
                          const std::vector<std::size_t>& w) {
  for (std::size_t z = 0; z < g.size(); ++z) {
    bool member = std::find(u.begin(), u.end(), z) != u.end() ||
                  std::find(w.begin(), w.end(), z) != w.end();
    if (member) continue;
    bool good = true;
    for (std::size_t x : u)
      if (!g.has_edge(z, x)) { good = false; break; }
    if (good)
      for (std::size_t x : w)
        if (g.has_edge(z, x)) { good = false; break; }
    if (good) return true;
  }
  return false;
}

ExtensionSampleReport check_extension_samples(const FiniteGraph& g,
                                              std::size_t t, std::size_t trials,
                                              std::uint64_t seed) {
  if (t > g.size())
    throw std::invalid_argument("check_extension_samples: t exceeds vertex count");
  std::mt19937_64 rng(seed);
  ExtensionSampleReport report;
  report.trials = trials;
  std::vector<std::size_t> pool(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) pool[i] = i;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    // Partial Fisher-Yates draws t distinct vertices.
    for (std::size_t i = 0; i < t; ++i) {
      std::size_t j = i + rng() % (pool.size() - i);
      std::swap(pool[i], pool[j]);
    }
    ExtensionSplit split;
    for (std::size_t i = 0; i < t; ++i) {
      if (rng() & 1u)
        split.u.push_back(pool[i]);
      else
        split.w.push_back(pool[i]);
    }
    if (has_extension_vertex(g, split.u, split.w)) {
      ++report.successes;
    } else if (!report.failing_example) {
      report.failing_example = split;
    }
  }
  return report;
}

}  // namespace radocurve
