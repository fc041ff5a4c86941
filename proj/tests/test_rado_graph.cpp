#include "radocurve/rado_graph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "radocurve/finite_graph.hpp"

using namespace radocurve;
using namespace radocurve::testing;

TEST_CASE("bit reads the binary expansion") {
  CHECK(bit(2, 4) == 1);
  CHECK(bit(0, 4) == 0);
  CHECK(bit(5, 5) == 0);
  CHECK(bit(0, 0) == 0);
  CHECK(bit(Natural(200), Natural(1) << 200) == 1);
  for (std::uint64_t y = 0; y <= 64; ++y)
    for (std::uint64_t x = 0; x <= 8; ++x)
      CHECK(bit(x, y) == bit_oracle(x, y));
}

TEST_CASE("rado adjacency in both polarities") {
  CHECK(rado_adjacent(2, 5, Polarity::Direct));
  CHECK_FALSE(rado_adjacent(2, 5, Polarity::Complement));
  CHECK(rado_adjacent(0, 4, Polarity::Complement));
  CHECK_THROWS_AS(rado_adjacent(3, 3, Polarity::Direct), std::invalid_argument);

  // Against the brute-force bit table for 0 <= x < y <= 8.
  for (std::uint64_t x = 0; x < 8; ++x)
    for (std::uint64_t y = x + 1; y <= 8; ++y) {
      CHECK(rado_adjacent(x, y, Polarity::Direct) == (bit_oracle(x, y) == 1));
      CHECK(rado_adjacent(x, y, Polarity::Complement) == (bit_oracle(x, y) == 0));
    }
}

TEST_CASE("symmetry and polarity duality up to 2^12") {
  for (std::uint64_t x = 0; x <= 4096; ++x) {
    // A thinned second index keeps the pair count manageable while still
    // covering every x; the full pair sweep runs in the acceptance suite.
    for (std::uint64_t y = x + 1; y <= 4096; y += 1 + (x % 7)) {
      bool d = rado_adjacent(x, y, Polarity::Direct);
      bool c = rado_adjacent(x, y, Polarity::Complement);
      REQUIRE(d != c);
      REQUIRE(d == rado_adjacent(y, x, Polarity::Direct));
      REQUIRE(c == rado_adjacent(y, x, Polarity::Complement));
    }
  }
}

TEST_CASE("extension witness examples") {
  CHECK(extension_witness({0, 1}, {2}, Polarity::Direct) == 11);
  CHECK(witness_contract_holds(11, {0, 1}, {2}, Polarity::Direct));
  // The brute-force search finds a (smaller) witness satisfying the same
  // contract; the closed form is not minimal and need not be.
  auto found = minimal_witness_search({0, 1}, {2}, Polarity::Direct, 17);
  REQUIRE(found.has_value());
  CHECK(witness_contract_holds(*found, {0, 1}, {2}, Polarity::Direct));

  // Closed form with empty inputs: k = 1, empty sum, so z = 2.
  CHECK(extension_witness({}, {}, Polarity::Direct) == 2);

  CHECK(extension_witness({2}, {0, 1}, Polarity::Complement) == 11);
  CHECK(witness_contract_holds(11, {2}, {0, 1}, Polarity::Complement));

  CHECK_THROWS_AS(extension_witness({1, 2}, {2}, Polarity::Direct),
                  std::invalid_argument);
}

TEST_CASE("witness soundness and bound on random splits") {
  std::mt19937_64 rng(20260824);
  for (int trial = 0; trial < 1000; ++trial) {
    auto [nbrs, nonnbrs] = random_split(rng, 129, 8);
    Natural maxv = 0;
    for (const auto& v : nbrs) maxv = std::max(maxv, v);
    for (const auto& v : nonnbrs) maxv = std::max(maxv, v);
    unsigned k = 1 + maxv.convert_to<unsigned>();
    for (Polarity p : {Polarity::Direct, Polarity::Complement}) {
      Natural z = extension_witness(nbrs, nonnbrs, p);
      REQUIRE(witness_contract_holds(z, nbrs, nonnbrs, p));
      REQUIRE(z < Natural(1) << (k + 1));
    }
  }
}

TEST_CASE("witness chains stay sound at unbounded precision") {
  // Repeatedly extend by the previous witnesses; values grow past any fixed
  // width within a handful of steps.
  std::set<Natural> nbrs{0};
  std::set<Natural> nonnbrs{1};
  // Three steps already pass 2^98; a fourth would need a 2^98-bit witness.
  for (int step = 0; step < 3; ++step) {
    Natural z = extension_witness(nbrs, nonnbrs, Polarity::Direct);
    REQUIRE(witness_contract_holds(z, nbrs, nonnbrs, Polarity::Direct));
    if (step % 2 == 0)
      nbrs.insert(z);
    else
      nonnbrs.insert(z);
  }
  CHECK(*std::max_element(nbrs.begin(), nbrs.end()) > (Natural(1) << 64));
}

namespace {

FiniteGraph pullback_graph(const std::vector<Natural>& map, Polarity p) {
  FiniteGraph g(map.size());
  for (std::size_t u = 0; u < map.size(); ++u)
    for (std::size_t v = u + 1; v < map.size(); ++v)
      if (rado_adjacent(map[u], map[v], p)) g.add_edge(u, v);
  return g;
}

template <typename Fn>
void for_each_injective_map(std::size_t n, std::size_t range, Fn fn) {
  std::vector<Natural> map(n);
  std::vector<bool> used(range, false);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      fn(map);
      return;
    }
    for (std::size_t v = 0; v < range; ++v) {
      if (used[v]) continue;
      used[v] = true;
      map[i] = Natural(static_cast<std::uint64_t>(v));
      rec(i + 1);
      used[v] = false;
    }
  };
  rec(0);
}

}  // namespace

TEST_CASE("induced embedding examples") {
  FiniteGraph edge(2);
  edge.add_edge(0, 1);
  CHECK(is_induced_embedding(edge, {Natural(0), Natural(1)}, Polarity::Direct));

  FiniteGraph isolated(2);
  CHECK_FALSE(
      is_induced_embedding(isolated, {Natural(0), Natural(1)}, Polarity::Direct));

  FiniteGraph triangle(3);
  triangle.add_edge(0, 1);
  triangle.add_edge(1, 2);
  triangle.add_edge(0, 2);
  CHECK(is_induced_embedding(triangle, {Natural(0), Natural(1), Natural(3)},
                             Polarity::Direct));

  CHECK_THROWS_AS(is_induced_embedding(triangle, {Natural(0)}, Polarity::Direct),
                  std::invalid_argument);
  // Non-injective maps are not embeddings.
  CHECK_FALSE(is_induced_embedding(isolated, {Natural(3), Natural(3)},
                                   Polarity::Direct));
}

TEST_CASE("induced embedding agrees with the pairwise oracle, n <= 4 exhaustive") {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::size_t pair_count = n * (n - 1) / 2;
    for_each_injective_map(n, 16, [&](const std::vector<Natural>& map) {
      for (std::uint64_t mask = 0; mask < (1ull << pair_count); ++mask) {
        FiniteGraph g(n);
        std::size_t k = 0;
        for (std::size_t u = 0; u < n; ++u)
          for (std::size_t v = u + 1; v < n; ++v, ++k)
            if (mask & (1ull << k)) g.add_edge(u, v);
        bool expect = g == pullback_graph(map, Polarity::Direct);
        REQUIRE(is_induced_embedding(g, map, Polarity::Direct) == expect);
      }
    });
  }
}

TEST_CASE("induced embedding on n = 5: pullback and every one-pair flip") {
  // Every injective map into [0,15]; the pulled-back graph must embed and
  // every graph differing in exactly one pair must not, which pins each of
  // the 10 pair checks individually.
  for_each_injective_map(5, 16, [&](const std::vector<Natural>& map) {
    FiniteGraph g = pullback_graph(map, Polarity::Direct);
    REQUIRE(is_induced_embedding(g, map, Polarity::Direct));
    for (std::size_t u = 0; u < 5; ++u) {
      for (std::size_t v = u + 1; v < 5; ++v) {
        FiniteGraph flipped(5);
        for (std::size_t a = 0; a < 5; ++a)
          for (std::size_t b = a + 1; b < 5; ++b) {
            bool e = g.has_edge(a, b);
            if (a == u && b == v) e = !e;
            if (e) flipped.add_edge(a, b);
          }
        REQUIRE_FALSE(is_induced_embedding(flipped, map, Polarity::Direct));
      }
    }
  });
}

TEST_CASE("Erdos-Renyi sampler") {
  CHECK(er_random_graph(0, 7).size() == 0);
  FiniteGraph one = er_random_graph(1, 7);
  CHECK(one.size() == 1);
  CHECK(one.edge_count() == 0);

  CHECK(er_random_graph(100, 42) == er_random_graph(100, 42));
  CHECK(er_random_graph(100, 42) != er_random_graph(100, 43));

  FiniteGraph g = er_random_graph(2000, 1234);
  double pairs = 2000.0 * 1999.0 / 2.0;
  double mean = pairs / 2.0;
  double sigma = std::sqrt(pairs * 0.25);
  CHECK(std::abs(static_cast<double>(g.edge_count()) - mean) < 4.0 * sigma);
}

TEST_CASE("extension sampling inside finite graphs") {
  FiniteGraph k5(5);
  for (std::size_t u = 0; u < 5; ++u)
    for (std::size_t v = u + 1; v < 5; ++v) k5.add_edge(u, v);
  // Every vertex of K_5 is adjacent to v, so W = {v} has no witness.
  CHECK_FALSE(has_extension_vertex(k5, {}, {0}));
  CHECK(has_extension_vertex(k5, {0}, {}));

  FiniteGraph empty10(10);
  CHECK_FALSE(has_extension_vertex(empty10, {3}, {}));
  CHECK(has_extension_vertex(empty10, {}, {3}));

  FiniteGraph g = er_random_graph(500, 99);
  auto report = check_extension_samples(g, 3, 200, 5);
  CHECK(report.trials == 200);
  CHECK(report.success_fraction() == 1.0);

  auto again = check_extension_samples(g, 3, 200, 5);
  CHECK(again.successes == report.successes);

  CHECK_THROWS_AS(check_extension_samples(k5, 6, 10, 1), std::invalid_argument);
}

TEST_CASE("complement") {
  FiniteGraph empty3(3);
  FiniteGraph tri = empty3.complement();
  CHECK(tri.edge_count() == 3);
  CHECK(tri.has_edge(0, 1));

  FiniteGraph g = er_random_graph(40, 3);
  CHECK(g.complement().complement() == g);

  // Rado truncation on [0,7]: complementing the Direct truncation gives the
  // Complement truncation.
  FiniteGraph direct(8), comp(8);
  for (std::uint64_t x = 0; x < 8; ++x)
    for (std::uint64_t y = x + 1; y < 8; ++y) {
      if (rado_adjacent(x, y, Polarity::Direct)) direct.add_edge(x, y);
      if (rado_adjacent(x, y, Polarity::Complement)) comp.add_edge(x, y);
    }
  CHECK(direct.complement() == comp);
}

TEST_CASE("graph text format round trip") {
  FiniteGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  std::ostringstream out;
  g.write(out);
  CHECK(out.str() == "4 2\n0 1\n2 3\n");

  std::istringstream in("# a comment\n4 2 # header\n0 1\n\n2 3\n");
  CHECK(FiniteGraph::parse(in) == g);

  std::istringstream bad("nonsense");
  CHECK_THROWS_AS(FiniteGraph::parse(bad), std::invalid_argument);
}
