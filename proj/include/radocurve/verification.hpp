#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "radocurve/numbers.hpp"

namespace radocurve {

enum class Level { Bracket, Layout };

struct Mismatch {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  std::uint64_t expected = 0;
  std::uint64_t got = 0;

  bool operator==(const Mismatch&) const = default;
};

struct SweepReport {
  std::uint64_t range = 0;
  std::uint64_t pairs_checked = 0;
  std::uint64_t mismatch_count = 0;
  std::vector<Mismatch> mismatches;  // sorted by (x, y), capped
  double elapsed_seconds = 0.0;

  static constexpr std::size_t kMismatchCap = 100;

  bool ok() const { return mismatch_count == 0; }
  // "checked P pairs up to N: OK" or "... FAILED(k)".
  std::string summary() const;
  std::string to_json() const;
};

// For every 0 <= x < y <= N, checks that disjointness at the chosen level
// (multicurve pairing of brackets, or crossing count of routed curves) is
// exactly complement-Rado adjacency. jobs > 1 partitions the pair set across
// OpenMP workers; the merged report is deterministic.
SweepReport verify_main_theorem(std::uint64_t n, Level level, int jobs = 1);

// Serial reference kept alongside the parallel kernel; used by tests and the
// benchmark as the baseline.
SweepReport verify_main_theorem_serial(std::uint64_t n, Level level);

// Checks |symplectic pairing| = drawn crossing count = multicurve pairing on
// all pairs in [0, N].
SweepReport verify_minimality(std::uint64_t n, int jobs = 1);
SweepReport verify_minimality_serial(std::uint64_t n);

// Enumerates all labeled graphs on 1..max_n vertices and asserts the
// embedder round-trip and genus formula. max_n <= 6.
SweepReport verify_embedder_exhaustive(std::size_t max_n);

}  // namespace radocurve
