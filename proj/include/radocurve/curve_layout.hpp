#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "radocurve/multicurve.hpp"
#include "radocurve/numbers.hpp"

namespace radocurve {

// Routed representative of c(x) on the regular neighborhood of the lattice
// N x N. Rows and columns are indexed by naturals; the hole loops sit in row
// 0 and the connecting arcs run along the back of row x+1.

// Loop around the hole at `column`, of a- or b-type.
struct HoleLoop {
  Natural column;
  Family family;

  bool operator==(const HoleLoop&) const = default;
};

// The collapsed pair of vertical strands along `column` from the hole loop up
// to `to_row`. `depth` is the nesting key: larger depth passes more inside.
struct VerticalRun {
  Natural column;
  Natural to_row;
  Natural depth;

  bool operator==(const VerticalRun&) const = default;
};

// Arc along the back of `row` joining two columns. Arcs in one row band are
// stratified: arcs at distinct (depth, stratum) slide past one another.
struct BackArc {
  Natural row;
  Natural from_column;
  Natural to_column;  // >= from_column; equality only for the one-column closure
  Natural depth;
  unsigned stratum = 0;

  bool operator==(const BackArc&) const = default;
};

using Segment = std::variant<HoleLoop, VerticalRun, BackArc>;

struct CurvePath {
  Natural label;
  std::vector<Segment> segments;
};

// Nesting key of c(x): strictly increasing in x, larger = more inside, so
// when x < y share a column, c(x) passes outside of c(y).
Natural depth(const Natural& x);

// Deterministic routing of c(x): a hole loop per constituent of bracket(x)
// (a-type at each set-bit column, b-type at column x), vertical runs to row
// x+1, back arcs joining consecutive used columns plus a closing arc.
CurvePath layout(const Natural& x);

// Transverse crossings of a pair of segments under the depth rules.
std::uint64_t segment_crossings(const Segment& s, const Segment& t);

// Total crossings of two routed curves; equals the multicurve pairing of
// their brackets. Throws std::invalid_argument on equal labels.
std::uint64_t crossings(const CurvePath& p, const CurvePath& q);

// Crossings among the segments of a single path (0 for an embedded curve).
std::uint64_t self_crossings(const CurvePath& p);

}  // namespace radocurve
