#include "doctest.h"

#include "gaingraph/eigen.hpp"
#include "gaingraph/gain_graph.hpp"
#include "gaingraph/matrix.hpp"
#include "test_support.hpp"

using namespace gaingraph;
using testing::I;

namespace {

void require_errc(auto&& f, Errc code) {
  try {
    f();
    FAIL("expected error " << to_string(code));
  } catch (const Error& e) {
    CHECK(e.code() == code);
  }
}

}  // namespace

TEST_CASE("build canonicalizes orientation and conjugates on reverse query") {
  const GainGraph k2(2, {{0, 1, Gain(1.0)}});
  CHECK(k2.gain(1, 0) == Complex(1.0, 0.0));

  const GainGraph g(3, {{2, 0, Gain(I)}});
  REQUIRE(g.edges().size() == 1);
  CHECK(g.edges()[0].u == 0);
  CHECK(g.edges()[0].v == 2);
  CHECK(std::abs(g.gain(0, 2) - (-I)) < 1e-15);
  CHECK(std::abs(g.gain(2, 0) - I) < 1e-15);

  const GainGraph p1 = testing::phi1();
  CHECK(std::abs(p1.gain(0, 1) - I) < 1e-15);
  CHECK(std::abs(p1.gain(0, 2) - (1.0 + I) / testing::kSqrt2) < 1e-15);
  CHECK(std::abs(p1.gain(2, 1) - I) < 1e-15);
}

TEST_CASE("build rejects malformed input") {
  require_errc([] { GainGraph(2, {{0, 1, Gain(Complex(2.0, 0.0))}}); }, Errc::NonUnitGain);
  require_errc([] { GainGraph(2, {{0, 0, Gain()}}); }, Errc::SelfLoop);
  require_errc([] { GainGraph(2, {{0, 1, Gain()}, {1, 0, Gain()}}); }, Errc::DuplicateEdge);
  require_errc([] { GainGraph(2, {{0, 2, Gain()}}); }, Errc::BadIndex);
}

TEST_CASE("gain normalization tolerates near-unit input only") {
  const Gain g(Complex(1.0 + 5e-7, 0.0));
  CHECK(std::abs(std::abs(g.value()) - 1.0) < 1e-15);
  require_errc([] { Gain(Complex(1.0 + 2e-6, 0.0)); }, Errc::NonUnitGain);
}

TEST_CASE("orientation conjugacy on random graphs") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    const GainGraph g = testing::random_graph(rng, 7, 0.5);
    for (const auto& e : g.edges()) {
      CHECK(std::abs(g.gain(e.u, e.v) * g.gain(e.v, e.u) - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("negate and underlying") {
  const GainGraph k2(2, {{0, 1, Gain()}});
  CHECK(negate(k2).gain(0, 1) == Complex(-1.0, 0.0));
  CHECK(negate(negate(testing::phi1())) == testing::phi1());

  const GainGraph k3i = testing::complete_graph(3, Gain(I));
  for (const GainGraph neg = negate(k3i); const auto& e : neg.edges()) CHECK(std::abs(e.gain.value() + I) < 1e-15);
  for (const GainGraph plain = underlying(k3i); const auto& e : plain.edges()) CHECK(e.gain.value() == Complex(1.0, 0.0));

  const GainGraph g1 = underlying(testing::complete_graph(4, Gain()));
  CHECK(underlying(g1) == g1);
  CHECK(underlying(testing::phi1()) == testing::complete_graph(3, Gain()));
}

TEST_CASE("degree and connectivity") {
  const GainGraph k3 = testing::complete_graph(3, Gain());
  for (int v = 0; v < 3; ++v) CHECK(degree(k3, v) == 2);
  CHECK(is_connected(k3));

  const GainGraph two_edges(4, {{0, 1, Gain()}, {2, 3, Gain()}});
  CHECK_FALSE(is_connected(two_edges));
  CHECK(components(two_edges).size() == 2);

  const GainGraph single(1, std::span<const EdgeSpec>{});
  CHECK(degree(single, 0) == 0);
  CHECK(is_connected(single));

  require_errc([&] { degree(k3, 3); }, Errc::BadIndex);
}

TEST_CASE("bipartiteness") {
  const auto c4 = is_bipartite(testing::cycle_graph(4));
  REQUIRE(c4.bipartite);
  CHECK(*c4.coloring == std::vector<int>{0, 1, 0, 1});

  const auto k3 = is_bipartite(testing::complete_graph(3, Gain()));
  CHECK_FALSE(k3.bipartite);
  CHECK_FALSE(k3.coloring.has_value());

  // Tree on 5 vertices: 0-1, 0-2, 1-3, 1-4; BFS levels mod 2.
  const GainGraph tree(5, {{0, 1, Gain(I)}, {0, 2, Gain()}, {1, 3, Gain(-1.0)}, {1, 4, Gain()}});
  const auto t = is_bipartite(tree);
  REQUIRE(t.bipartite);
  CHECK(*t.coloring == std::vector<int>{0, 1, 1, 0, 0});
}

TEST_CASE("apply_switching") {
  const GainGraph g = testing::phi1();
  CHECK(approx_equal(apply_switching(g, SwitchingFunction::identity(3)), g, 1e-15));

  const GainGraph k2(2, {{0, 1, Gain()}});
  const auto s = apply_switching(k2, SwitchingFunction({Gain(1.0), Gain(-1.0)}));
  CHECK(std::abs(s.gain(0, 1) - (-1.0)) < 1e-15);

  require_errc([&] { apply_switching(g, SwitchingFunction::identity(2)); }, Errc::MissingVertexValue);
}

TEST_CASE("switching leaves all four spectra unchanged") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  for (int t = 0; t < 25; ++t) {
    GainGraph g = testing::random_graph(rng, 7, 0.6);
    if (g.has_isolated_vertex()) continue;
    std::vector<Gain> z;
    for (int v = 0; v < g.order(); ++v) z.push_back(Gain::polar(angle(rng)));
    const GainGraph s = apply_switching(g, SwitchingFunction(z));
    CHECK(spectra_equal(eigenvalues(adjacency(g)), eigenvalues(adjacency(s)), 1e-8));
    CHECK(spectra_equal(eigenvalues(laplacian(g)), eigenvalues(laplacian(s)), 1e-8));
    CHECK(spectra_equal(eigenvalues(norm_adjacency(g)), eigenvalues(norm_adjacency(s)), 1e-8));
    CHECK(spectra_equal(eigenvalues(norm_laplacian(g)), eigenvalues(norm_laplacian(s)), 1e-8));
    CHECK(switching_equivalent(g, s));
  }
}

TEST_CASE("balance: trees, unit gains, and the all-i triangle") {
  const GainGraph tree(5, {{0, 1, Gain(I)}, {0, 2, Gain::polar(0.3)}, {1, 3, Gain(-1.0)}, {1, 4, Gain::polar(2.0)}});
  const auto bt = is_balanced(tree);
  REQUIRE(bt.balanced);
  for (const GainGraph s = apply_switching(tree, *bt.zeta); const auto& e : s.edges()) CHECK(std::abs(e.gain.value() - 1.0) < 1e-9);

  const auto k3 = is_balanced(testing::complete_graph(3, Gain()));
  REQUIRE(k3.balanced);
  for (const auto& z : k3.zeta->values()) CHECK(z.value() == Complex(1.0, 0.0));

  const GainGraph k3i = testing::complete_graph(3, Gain(I));
  const auto bi = is_balanced(k3i);
  REQUIRE_FALSE(bi.balanced);
  REQUIRE(bi.cycle.has_value());
  CHECK(bi.cycle->vertices() == std::vector<Vertex>{0, 1, 2});
  // a01 a12 a20 = i * i * (-i) = i, computed by hand.
  CHECK(std::abs(cycle_gain(k3i, *bi.cycle) - I) < 1e-12);
}

TEST_CASE("balance witness soundness on random graphs") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 60; ++t) {
    // Mix of switched-from-trivial (balanced) and random (usually unbalanced).
    GainGraph g = testing::random_graph(rng, 2 + t % 7, 0.5);
    if (t % 2 == 0) {
      std::vector<Gain> z;
      std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
      for (int v = 0; v < g.order(); ++v) z.push_back(Gain::polar(angle(rng)));
      g = apply_switching(underlying(g), SwitchingFunction(z));
    }
    const auto b = is_balanced(g);
    if (b.balanced) {
      for (const GainGraph s = apply_switching(g, *b.zeta); const auto& e : s.edges()) CHECK(std::abs(e.gain.value() - 1.0) <= 1e-9);
    } else {
      CHECK(std::abs(cycle_gain(g, *b.cycle) - 1.0) > 1e-9);
    }
    if (t % 2 == 0) CHECK(b.balanced);
  }
}

TEST_CASE("balance on disconnected graphs is per component") {
  const GainGraph g(6, {{0, 1, Gain(I)}, {1, 2, Gain(I)}, {0, 2, Gain(-1.0)}, {3, 4, Gain(I)}, {4, 5, Gain()}, {3, 5, Gain(I)}});
  CHECK(is_balanced(g).balanced);
  const GainGraph h(6, {{0, 1, Gain(I)}, {1, 2, Gain(I)}, {0, 2, Gain(-1.0)}, {3, 4, Gain(I)}, {4, 5, Gain()}, {3, 5, Gain()}});
  const auto b = is_balanced(h);
  REQUIRE_FALSE(b.balanced);
  CHECK(b.cycle->vertices() == std::vector<Vertex>{3, 4, 5});
}

TEST_CASE("switching equivalence") {
  const GainGraph k4 = testing::complete_graph(4, Gain());
  const GainGraph bal = apply_switching(k4, SwitchingFunction({Gain(I), Gain(-1.0), Gain::polar(1.0), Gain()}));
  CHECK(switching_equivalent(k4, bal));
  CHECK_FALSE(switching_equivalent(testing::phi1(), testing::phi2()));
  require_errc([&] { switching_equivalent(k4, testing::complete_graph(3, Gain())); },
               Errc::DifferentUnderlyingGraph);
}

TEST_CASE("switching equivalence is an equivalence relation on samples") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  auto random_switch = [&](const GainGraph& g) {
    std::vector<Gain> z;
    for (int v = 0; v < g.order(); ++v) z.push_back(Gain::polar(angle(rng)));
    return apply_switching(g, SwitchingFunction(z));
  };
  for (int t = 0; t < 30; ++t) {
    const GainGraph a = testing::random_graph(rng, 6, 0.6);
    const GainGraph b = random_switch(a);
    const GainGraph c = random_switch(b);
    CHECK(switching_equivalent(a, a));
    CHECK(switching_equivalent(a, b) == switching_equivalent(b, a));
    CHECK(switching_equivalent(a, c));
    // Fourth-root gains on the same skeleton: relation outcomes must agree.
    std::vector<EdgeSpec> edges;
    for (const auto& e : a.edges()) edges.push_back({e.u, e.v, Gain(rng() & 1 ? 1.0 : -1.0)});
    const GainGraph d(a.order(), edges);
    CHECK(switching_equivalent(a, d) == switching_equivalent(d, a));
    if (switching_equivalent(a, d)) CHECK(switching_equivalent(c, d));
  }
}

TEST_CASE("cycle gains and canonical cycles") {
  const GainGraph ones = testing::complete_graph(4, Gain());
  CHECK(cycle_gain(ones, Cycle({2, 0, 3, 1})) == Complex(1.0, 0.0));

  const GainGraph tri(3, {{0, 1, Gain(I)}, {1, 2, Gain(-I)}, {0, 2, Gain()}});
  const std::vector<Vertex> fwd{0, 1, 2}, back{0, 2, 1};
  CHECK(std::abs(cycle_gain(tri, fwd) - 1.0) < 1e-15);
  CHECK(std::abs(cycle_gain(tri, back) - 1.0) < 1e-15);

  const GainGraph k3i = testing::complete_graph(3, Gain(I));
  CHECK(std::abs(cycle_gain(k3i, fwd) - I) < 1e-15);
  CHECK(std::abs(cycle_gain(k3i, back) + I) < 1e-15);

  CHECK(Cycle({3, 1, 0, 2}).vertices() == std::vector<Vertex>{0, 1, 3, 2});
  CHECK(Cycle({3, 2, 0, 1}).vertices() == std::vector<Vertex>{0, 1, 3, 2});
  require_errc([] { Cycle({0, 1}); }, Errc::NotACycle);
  require_errc([&] { cycle_gain(testing::path_graph(3), Cycle({0, 1, 2})); }, Errc::NotACycle);
}

TEST_CASE("real part of a cycle gain is orientation independent") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 40; ++t) {
    const GainGraph g = testing::random_graph(rng, 5, 1.0);
    std::vector<Vertex> c{0, 1, 2, 3, 4};
    std::shuffle(c.begin(), c.end(), rng);
    std::vector<Vertex> r(c.rbegin(), c.rend());
    CHECK(std::abs(cycle_gain(g, c).real() - cycle_gain(g, r).real()) < 1e-12);
  }
}
