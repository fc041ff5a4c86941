#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "radocurve/numbers.hpp"

namespace radocurve {

// The two standard curve families on the lattice surface: a_i winds around
// hole i, b_i is its Dehn twist, and i(a_i, b_j) = delta_{i,j}.
enum class Family : std::uint8_t { A, B };

struct BaseCurve {
  Family family;
  Natural index;

  bool operator==(const BaseCurve& o) const {
    return family == o.family && index == o.index;
  }
  bool operator<(const BaseCurve& o) const {
    if (family != o.family) return family < o.family;
    return index < o.index;
  }
};

inline BaseCurve a_curve(Natural i) { return {Family::A, std::move(i)}; }
inline BaseCurve b_curve(Natural i) { return {Family::B, std::move(i)}; }

// Finite multiset of base curves. Absent keys mean multiplicity 0; stored
// multiplicities are always >= 1. Entries are kept sorted.
class Multicurve {
 public:
  Multicurve() = default;

  void add(const BaseCurve& c, std::uint64_t mult = 1);
  std::uint64_t multiplicity(const BaseCurve& c) const;

  const std::vector<std::pair<BaseCurve, std::uint64_t>>& entries() const {
    return entries_;
  }
  bool empty() const { return entries_.empty(); }

  bool operator==(const Multicurve&) const = default;

 private:
  std::vector<std::pair<BaseCurve, std::uint64_t>> entries_;
};

// Geometric intersection of single base curves: 1 for {a_i, b_i}, else 0.
std::uint64_t base_intersection(const BaseCurve& c, const BaseCurve& d);

// Sum over all constituent pairs with multiplicity. Symmetric and bilinear.
std::uint64_t multicurve_intersection(const Multicurve& u, const Multicurve& v);

// True iff all constituents are pairwise disjoint (no a_i together with b_i),
// the shape required of a multicurve-graph vertex.
bool is_disjoint_multicurve(const Multicurve& u);

// The map x -> [x]: one b_x plus one a_i per set bit i of x.
Multicurve bracket(const Natural& x);

// multicurve_intersection(bracket(x), bracket(y)) for x < y; equals bit(x, y).
// Throws std::invalid_argument when x >= y.
std::uint64_t bracket_intersection_bit(const Natural& x, const Natural& y);

// Coefficients of a multicurve in the basis {a_i, b_i}.
struct HomologyVector {
  std::map<Natural, long long> a_coeffs;
  std::map<Natural, long long> b_coeffs;

  bool operator==(const HomologyVector&) const = default;
};

HomologyVector homology_class(const Multicurve& u);

// Symplectic pairing sum_i (u.a[i]*v.b[i] - u.b[i]*v.a[i]); antisymmetric.
// Its absolute value bounds geometric intersection from below.
long long algebraic_intersection(const HomologyVector& u,
                                 const HomologyVector& v);

// Additive notation, e.g. "b5 + a0 + a2" or "3a0 + b0"; empty renders as "0".
std::string to_string(const Multicurve& u);
Multicurve parse_multicurve(const std::string& text);

}  // namespace radocurve
