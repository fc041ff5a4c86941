#include "radocurve/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <omp.h>

#include "json.hpp"
#include "radocurve/curve_layout.hpp"
#include "radocurve/finite_embedder.hpp"
#include "radocurve/finite_graph.hpp"
#include "radocurve/multicurve.hpp"
#include "radocurve/rado_graph.hpp"

namespace radocurve {

std::string SweepReport::summary() const {
  std::ostringstream out;
  out << "checked " << pairs_checked << " pairs up to " << range << ": ";
  if (ok())
    out << "OK";
  else
    out << "FAILED(" << mismatch_count << ")";
  return out.str();
}

std::string SweepReport::to_json() const {
  nlohmann::ordered_json j;
  j["range"] = range;
  j["pairs_checked"] = pairs_checked;
  j["mismatch_count"] = mismatch_count;
  j["mismatches"] = nlohmann::ordered_json::array();
  for (const Mismatch& m : mismatches)
    j["mismatches"].push_back({{"x", m.x}, {"y", m.y}, {"expected", m.expected}, {"got", m.got}});
  j["elapsed_seconds"] = elapsed_seconds;
  return j.dump(2) + "\n";
}

namespace {

void finalize(SweepReport& report, std::vector<Mismatch>& all,
              std::chrono::steady_clock::time_point start) {
  std::sort(all.begin(), all.end(), [](const Mismatch& a, const Mismatch& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  report.mismatch_count = all.size();
  if (all.size() > SweepReport::kMismatchCap) all.resize(SweepReport::kMismatchCap);
  report.mismatches = std::move(all);
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Runs `check(x, y)` over all 0 <= x < y <= n and gathers mismatches.
// check returns true and fills the out-params only on mismatch.
template <typename Check>
SweepReport sweep_pairs(std::uint64_t n, int jobs, Check check) {
  if (n < 1) throw std::invalid_argument("sweep: requires N >= 1");
  if (jobs < 1) jobs = 1;
  auto start = std::chrono::steady_clock::now();
  SweepReport report;
  report.range = n;
  report.pairs_checked = n * (n + 1) / 2;

  std::vector<Mismatch> all;
  if (jobs == 1) {
    for (std::uint64_t y = 1; y <= n; ++y)
      for (std::uint64_t x = 0; x < y; ++x) {
        Mismatch m;
        if (check(x, y, m)) all.push_back(m);
      }
  } else {
    std::vector<std::vector<Mismatch>> per_thread(jobs);
#pragma omp parallel for schedule(dynamic, 16) num_threads(jobs)
    for (std::uint64_t y = 1; y <= n; ++y) {
      auto& local = per_thread[omp_get_thread_num()];
      for (std::uint64_t x = 0; x < y; ++x) {
        Mismatch m;
        if (check(x, y, m)) local.push_back(m);
      }
    }
    for (auto& local : per_thread)
      all.insert(all.end(), local.begin(), local.end());
  }
  finalize(report, all, start);
  return report;
}

SweepReport run_main_theorem(std::uint64_t n, Level level, int jobs) {
  if (level == Level::Bracket) {
    std::vector<Multicurve> brackets(n + 1);
    for (std::uint64_t x = 0; x <= n; ++x) brackets[x] = bracket(x);
    return sweep_pairs(n, jobs, [&](std::uint64_t x, std::uint64_t y, Mismatch& m) {
      std::uint64_t inter = multicurve_intersection(brackets[x], brackets[y]);
      bool adjacent = rado_adjacent(Natural(x), Natural(y), Polarity::Complement);
      if ((inter == 0) == adjacent) return false;
      m = {x, y, adjacent ? 0ull : 1ull, inter};
      return true;
    });
  }
  std::vector<CurvePath> paths(n + 1);
  for (std::uint64_t x = 0; x <= n; ++x) paths[x] = layout(x);
  return sweep_pairs(n, jobs, [&](std::uint64_t x, std::uint64_t y, Mismatch& m) {
    std::uint64_t inter = crossings(paths[x], paths[y]);
    bool adjacent = rado_adjacent(Natural(x), Natural(y), Polarity::Complement);
    if ((inter == 0) == adjacent) return false;
    m = {x, y, adjacent ? 0ull : 1ull, inter};
    return true;
  });
}

}  // namespace

SweepReport verify_main_theorem(std::uint64_t n, Level level, int jobs) {
  return run_main_theorem(n, level, jobs);
}

SweepReport verify_main_theorem_serial(std::uint64_t n, Level level) {
  return run_main_theorem(n, level, 1);
}

namespace {

SweepReport run_minimality(std::uint64_t n, int jobs) {
  std::vector<CurvePath> paths(n + 1);
  std::vector<Multicurve> brackets(n + 1);
  std::vector<HomologyVector> classes(n + 1);
  for (std::uint64_t x = 0; x <= n; ++x) {
    paths[x] = layout(x);
    brackets[x] = bracket(x);
    classes[x] = homology_class(brackets[x]);
  }
  return sweep_pairs(n, jobs, [&](std::uint64_t x, std::uint64_t y, Mismatch& m) {
    std::uint64_t lower = static_cast<std::uint64_t>(
        std::llabs(algebraic_intersection(classes[x], classes[y])));
    std::uint64_t drawn = crossings(paths[x], paths[y]);
    std::uint64_t pairing = multicurve_intersection(brackets[x], brackets[y]);
    if (lower == drawn && drawn == pairing) return false;
    m = {x, y, lower, drawn != pairing ? drawn : pairing};
    return true;
  });
}

}  // namespace

SweepReport verify_minimality(std::uint64_t n, int jobs) {
  return run_minimality(n, jobs);
}

SweepReport verify_minimality_serial(std::uint64_t n) {
  return run_minimality(n, 1);
}

SweepReport verify_embedder_exhaustive(std::size_t max_n) {
  if (max_n < 1 || max_n > 6)
    throw std::invalid_argument("verify_embedder_exhaustive: max_n in [1,6]");
  auto start = std::chrono::steady_clock::now();
  SweepReport report;
  report.range = max_n;
  std::vector<Mismatch> all;
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::size_t pair_count = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (1ull << pair_count); ++mask) {
      FiniteGraph g(n);
      std::size_t k = 0;
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v, ++k)
          if (mask & (1ull << k)) g.add_edge(u, v);
      SurfaceRecipe r = embed_finite_graph(g);
      std::uint64_t want_genus =
          n == 1 ? 1 : genus_upper_bound(n, g.edge_count());
      bool round_trip = recipe_curve_graph(r) == g;
      if (!round_trip || r.genus != want_genus) {
        all.push_back({static_cast<std::uint64_t>(n), mask,
                       round_trip ? want_genus : 1ull,
                       round_trip ? r.genus : 0ull});
      }
      ++report.pairs_checked;
    }
  }
  finalize(report, all, start);
  return report;
}

}  // namespace radocurve
