#include "radocurve/rado_graph.hpp"

#include <stdexcept>
#include <unordered_set>

#include "radocurve/finite_graph.hpp"

namespace radocurve {

int bit(const Natural& x, const Natural& y) {
  if (y == 0) return 0;
  // msb() gives the highest set bit index of y; any higher bit is 0.
  if (x > boost::multiprecision::msb(y)) return 0;
  return boost::multiprecision::bit_test(y, x.convert_to<unsigned>()) ? 1 : 0;
}

bool rado_adjacent(const Natural& x, const Natural& y, Polarity p) {
  if (x == y) throw std::invalid_argument("rado_adjacent: no self-loops");
  const Natural& lo = x < y ? x : y;
  const Natural& hi = x < y ? y : x;
  int b = bit(lo, hi);
  return p == Polarity::Direct ? b == 1 : b == 0;
}

Natural extension_witness(const std::set<Natural>& nbrs,
                          const std::set<Natural>& nonnbrs, Polarity p) {
  for (const Natural& u : nbrs) {
    if (nonnbrs.count(u) != 0)
      throw std::invalid_argument("extension_witness: sets overlap");
  }
  Natural maxv = 0;
  for (const Natural& u : nbrs)
    if (u > maxv) maxv = u;
  for (const Natural& w : nonnbrs)
    if (w > maxv) maxv = w;
  unsigned k = 1 + maxv.convert_to<unsigned>();
  Natural z = Natural(1) << k;
  // Direct: z must read 1 at the bits of nbrs. Complement: 0 at nbrs, 1 at
  // nonnbrs, so the roles swap.
  const std::set<Natural>& set_bits = p == Polarity::Direct ? nbrs : nonnbrs;
  for (const Natural& u : set_bits)
    boost::multiprecision::bit_set(z, u.convert_to<unsigned>());
  return z;
}

bool is_induced_embedding(const FiniteGraph& g, const std::vector<Natural>& map,
                          Polarity p) {
  if (map.size() != g.size())
    throw std::invalid_argument("is_induced_embedding: map length mismatch");
  for (std::size_t u = 0; u < map.size(); ++u)
    for (std::size_t v = u + 1; v < map.size(); ++v)
      if (map[u] == map[v]) return false;
  for (std::size_t u = 0; u < map.size(); ++u) {
    for (std::size_t v = u + 1; v < map.size(); ++v) {
      if (g.has_edge(u, v) != rado_adjacent(map[u], map[v], p)) return false;
    }
  }
  return true;
}

}  // namespace radocurve
