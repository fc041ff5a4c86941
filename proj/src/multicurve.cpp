#include "radocurve/multicurve.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace radocurve {

void Multicurve::add(const BaseCurve& c, std::uint64_t mult) {
  if (mult == 0) return;
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), c,
      [](const auto& entry, const BaseCurve& key) { return entry.first < key; });
  if (it != entries_.end() && it->first == c)
    it->second += mult;
  else
    entries_.insert(it, {c, mult});
}

std::uint64_t Multicurve::multiplicity(const BaseCurve& c) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), c,
      [](const auto& entry, const BaseCurve& key) { return entry.first < key; });
  if (it != entries_.end() && it->first == c) return it->second;
  return 0;
}

std::uint64_t base_intersection(const BaseCurve& c, const BaseCurve& d) {
  return c.family != d.family && c.index == d.index ? 1 : 0;
}

std::uint64_t multicurve_intersection(const Multicurve& u, const Multicurve& v) {
  std::uint64_t total = 0;
  for (const auto& [c, cm] : u.entries())
    for (const auto& [d, dm] : v.entries())
      total += cm * dm * base_intersection(c, d);
  return total;
}

bool is_disjoint_multicurve(const Multicurve& u) {
  const auto& entries = u.entries();
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = i + 1; j < entries.size(); ++j)
      if (base_intersection(entries[i].first, entries[j].first) != 0)
        return false;
  return true;
}

Multicurve bracket(const Natural& x) {
  Multicurve u;
  u.add(b_curve(x));
  if (x > 0) {
    unsigned top = boost::multiprecision::msb(x);
    for (unsigned i = 0; i <= top; ++i)
      if (boost::multiprecision::bit_test(x, i)) u.add(a_curve(i));
  }
  return u;
}

std::uint64_t bracket_intersection_bit(const Natural& x, const Natural& y) {
  if (x >= y)
    throw std::invalid_argument("bracket_intersection_bit: requires x < y");
  return multicurve_intersection(bracket(x), bracket(y));
}

HomologyVector homology_class(const Multicurve& u) {
  HomologyVector h;
  for (const auto& [c, mult] : u.entries()) {
    auto& coeffs = c.family == Family::A ? h.a_coeffs : h.b_coeffs;
    coeffs[c.index] += static_cast<long long>(mult);
  }
  return h;
}

long long algebraic_intersection(const HomologyVector& u,
                                 const HomologyVector& v) {
  long long total = 0;
  for (const auto& [i, ua] : u.a_coeffs) {
    auto it = v.b_coeffs.find(i);
    if (it != v.b_coeffs.end()) total += ua * it->second;
  }
  for (const auto& [i, ub] : u.b_coeffs) {
    auto it = v.a_coeffs.find(i);
    if (it != v.a_coeffs.end()) total -= ub * it->second;
  }
  return total;
}

std::string to_string(const Multicurve& u) {
  if (u.empty()) return "0";
  // b-terms first, then a-terms, each by ascending index.
  std::ostringstream out;
  bool first = true;
  auto emit = [&](Family family) {
    for (const auto& [c, mult] : u.entries()) {
      if (c.family != family) continue;
      if (!first) out << " + ";
      first = false;
      if (mult != 1) out << mult;
      out << (family == Family::A ? 'a' : 'b') << c.index;
    }
  };
  emit(Family::B);
  emit(Family::A);
  return out.str();
}

Multicurve parse_multicurve(const std::string& text) {
  Multicurve u;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto read_digits = [&]() -> std::string {
    std::string digits;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      digits += text[pos++];
    return digits;
  };
  skip_ws();
  if (pos < text.size() && text[pos] == '0' &&
      text.find_first_not_of(" \t", pos + 1) == std::string::npos)
    return u;
  bool expect_term = true;
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size()) break;
    if (!expect_term) {
      if (text[pos] != '+')
        throw std::invalid_argument("multicurve: expected '+'");
      ++pos;
      skip_ws();
    }
    std::string mult_digits = read_digits();
    std::uint64_t mult = mult_digits.empty() ? 1 : std::stoull(mult_digits);
    if (pos >= text.size() || (text[pos] != 'a' && text[pos] != 'b'))
      throw std::invalid_argument("multicurve: expected family 'a' or 'b'");
    Family family = text[pos] == 'a' ? Family::A : Family::B;
    ++pos;
    std::string index_digits = read_digits();
    if (index_digits.empty())
      throw std::invalid_argument("multicurve: expected curve index");
    if (mult == 0) throw std::invalid_argument("multicurve: zero multiplicity");
    u.add({family, Natural(index_digits)}, mult);
    expect_term = false;
    skip_ws();
  }
  if (expect_term) throw std::invalid_argument("multicurve: empty term");
  return u;
}

}  // namespace radocurve
