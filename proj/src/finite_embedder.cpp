#include "radocurve/finite_embedder.hpp"

#include <stdexcept>

#include "json.hpp"

namespace radocurve {

std::uint64_t genus_upper_bound(std::size_t n, std::uint64_t m) {
  if (n < 2) throw std::invalid_argument("genus_upper_bound: requires n >= 2");
  return static_cast<std::uint64_t>(n) / 2 + m;  // ceil((n-1)/2) = floor(n/2)
}

SurfaceRecipe embed_finite_graph(const FiniteGraph& g) {
  if (g.size() == 0)
    throw std::invalid_argument("embed_finite_graph: empty graph");
  SurfaceRecipe r;
  r.n = g.size();
  r.pairwise.assign(r.n * r.n, 1);
  for (std::size_t i = 0; i < r.n; ++i) r.pairwise[i * r.n + i] = 0;
  for (const auto& [u, v] : g.edges()) {
    r.pairwise[u * r.n + v] = 0;
    r.pairwise[v * r.n + u] = 0;
    r.handles.push_back({u, v});
  }
  // A single essential curve already needs a torus.
  r.genus = r.n == 1 ? 1 : genus_upper_bound(r.n, g.edge_count());
  return r;
}

FiniteGraph recipe_curve_graph(const SurfaceRecipe& r) {
  if (r.pairwise.size() != r.n * r.n)
    throw std::invalid_argument("recipe: matrix size mismatch");
  for (std::size_t i = 0; i < r.n; ++i) {
    if (r.pairwise[i * r.n + i] != 0)
      throw std::invalid_argument("recipe: nonzero diagonal");
    for (std::size_t j = i + 1; j < r.n; ++j)
      if (r.pairwise[i * r.n + j] != r.pairwise[j * r.n + i])
        throw std::invalid_argument("recipe: asymmetric matrix");
  }
  FiniteGraph g(r.n);
  for (std::size_t i = 0; i < r.n; ++i)
    for (std::size_t j = i + 1; j < r.n; ++j)
      if (r.pairwise[i * r.n + j] == 0) g.add_edge(i, j);
  return g;
}

std::size_t max_clique(const FiniteGraph& g) {
  std::size_t n = g.size();
  if (n > 24) throw std::invalid_argument("max_clique: graph too large");
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::size_t size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size <= best) continue;
    bool clique = true;
    for (std::size_t u = 0; u < n && clique; ++u) {
      if (!(mask & (1u << u))) continue;
      for (std::size_t v = u + 1; v < n && clique; ++v)
        if ((mask & (1u << v)) && !g.has_edge(u, v)) clique = false;
    }
    if (clique) best = size;
  }
  return best;
}

std::string recipe_to_json(const SurfaceRecipe& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["genus"] = r.genus;
  j["handles"] = nlohmann::ordered_json::array();
  for (const auto& [u, v] : r.handles) j["handles"].push_back({u, v});
  j["pairwise"] = r.pairwise;
  return j.dump(2) + "\n";
}

SurfaceRecipe recipe_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  SurfaceRecipe r;
  r.n = j.at("n").get<std::size_t>();
  r.genus = j.at("genus").get<std::uint64_t>();
  for (const auto& pair : j.at("handles"))
    r.handles.push_back({pair.at(0).get<std::size_t>(), pair.at(1).get<std::size_t>()});
  r.pairwise = j.at("pairwise").get<std::vector<std::uint8_t>>();
  return r;
}

}  // namespace radocurve
