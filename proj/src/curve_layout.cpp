#include "radocurve/curve_layout.hpp"

#include <algorithm>
#include <stdexcept>

namespace radocurve {

Natural depth(const Natural& x) { return x; }

CurvePath layout(const Natural& x) {
  // Used columns, ascending, with the family of the loop that sits there.
  // bit x of x is 0, so the b-column x never collides with an a-column.
  std::vector<std::pair<Natural, Family>> columns;
  const Multicurve constituents = bracket(x);
  for (const auto& [c, mult] : constituents.entries()) {
    (void)mult;
    columns.push_back({c.index, c.family});
  }
  std::sort(columns.begin(), columns.end());

  Natural row = x + 1;
  Natural d = depth(x);
  CurvePath path{x, {}};
  for (const auto& [col, family] : columns) {
    path.segments.push_back(HoleLoop{col, family});
    path.segments.push_back(VerticalRun{col, row, d});
  }
  // Arcs joining consecutive used columns share the primary stratum; the
  // closing arc returns along the back in its own stratum.
  for (std::size_t i = 0; i + 1 < columns.size(); ++i)
    path.segments.push_back(
        BackArc{row, columns[i].first, columns[i + 1].first, d, 0});
  path.segments.push_back(
      BackArc{row, columns.front().first, columns.back().first, d, 1});
  return path;
}

namespace {

std::uint64_t cross(const HoleLoop& s, const HoleLoop& t) {
  // The single transverse crossing of a_i with b_i happens at the hole loops.
  return s.column == t.column && s.family != t.family ? 1 : 0;
}

std::uint64_t cross(const HoleLoop&, const VerticalRun&) {
  // A run in a column attaches to its own loop; loops of other paths at the
  // same column are nested consistently with the run's depth.
  return 0;
}

std::uint64_t cross(const HoleLoop&, const BackArc&) { return 0; }

std::uint64_t cross(const VerticalRun& s, const VerticalRun& t) {
  // Runs sharing a column stay at their own depths; equal depth in one column
  // would mean the strands coincide.
  return s.column == t.column && s.depth == t.depth && !(s == t) ? 1 : 0;
}

std::uint64_t cross(const VerticalRun& s, const BackArc& t) {
  // An arc sits at the back of its row band. A run meets that band only when
  // it passes strictly through the row over an interior column, and only a
  // run further outside (smaller depth) has to pierce the arc.
  return t.from_column < s.column && s.column < t.to_column &&
                 s.to_row > t.row && s.depth < t.depth
             ? 1
             : 0;
}

std::uint64_t cross(const BackArc& s, const BackArc& t) {
  // Arcs at distinct depths or strata slide past one another in the band;
  // same-level arcs cross once per proper interval overlap.
  if (s.row != t.row || s.depth != t.depth || s.stratum != t.stratum) return 0;
  bool proper_overlap =
      (s.from_column < t.from_column && t.from_column < s.to_column &&
       s.to_column < t.to_column) ||
      (t.from_column < s.from_column && s.from_column < t.to_column &&
       t.to_column < s.to_column);
  return proper_overlap ? 1 : 0;
}

}  // namespace

std::uint64_t segment_crossings(const Segment& s, const Segment& t) {
  return std::visit(
      [](const auto& a, const auto& b) -> std::uint64_t {
        using A = std::decay_t<decltype(a)>;
        using B = std::decay_t<decltype(b)>;
        // Dispatch on the canonical order HoleLoop < VerticalRun < BackArc.
        if constexpr (std::is_same_v<A, B>) return cross(a, b);
        else if constexpr (std::is_same_v<A, HoleLoop>) return cross(a, b);
        else if constexpr (std::is_same_v<B, HoleLoop>) return cross(b, a);
        else if constexpr (std::is_same_v<A, VerticalRun>) return cross(a, b);
        else return cross(b, a);
      },
      s, t);
}

std::uint64_t crossings(const CurvePath& p, const CurvePath& q) {
  if (p.label == q.label)
    throw std::invalid_argument("crossings: labels must differ");
  std::uint64_t total = 0;
  for (const Segment& s : p.segments)
    for (const Segment& t : q.segments) total += segment_crossings(s, t);
  return total;
}

std::uint64_t self_crossings(const CurvePath& p) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < p.segments.size(); ++i)
    for (std::size_t j = i + 1; j < p.segments.size(); ++j)
      total += segment_crossings(p.segments[i], p.segments[j]);
  return total;
}

}  // namespace radocurve
