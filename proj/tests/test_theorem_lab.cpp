#include "doctest.h"

#include <set>

#include "gaingraph/theorem_lab.hpp"
#include "test_support.hpp"

using namespace gaingraph;
using testing::I;

namespace {

CheckStatus status_of(const VerificationReport& r, std::string_view id) {
  const CheckResult* c = r.find(id);
  REQUIRE(c != nullptr);
  return c->status;
}

double detail(const VerificationReport& r, std::string_view id, std::string_view key) {
  const CheckResult* c = r.find(id);
  REQUIRE(c != nullptr);
  for (const auto& [k, v] : c->details)
    if (k == key) return v;
  FAIL("missing detail " << key);
  return 0.0;
}

// Interlacing predicate written out directly, with lambda_0 = 0 and
// lambda_{n+1} = 2 and a spread of t deleted edges.
bool interlaces(const Spectrum& lambda, const Spectrum& theta, int t, double tol) {
  const int n = static_cast<int>(lambda.size());
  auto lam = [&](int i) { return i < 1 ? 0.0 : i > n ? 2.0 : lambda[i - 1]; };
  for (int k = 1; k <= n; ++k)
    if (theta[k - 1] < lam(k - t) - tol || theta[k - 1] > lam(k + t) + tol) return false;
  return true;
}

}  // namespace

TEST_CASE("single-edge interlacing on small graphs") {
  const GainGraph k3 = testing::complete_graph(3, Gain(-1.0));
  const auto r = interlace_check(k3, 0, 1);
  CHECK(r.pass);
  CHECK(r.theta.size() == 3);
  CHECK(interlaces(r.lambda, r.theta, 1, 1e-9));

  // Deleting the only edge leaves two isolated vertices, padded with zeros.
  const auto k2 = interlace_check(GainGraph(2, {{0, 1, Gain()}}), 0, 1);
  CHECK(k2.pass);
  CHECK(k2.theta.values == std::vector<double>{0.0, 0.0});

  // Star: removing a leaf edge isolates the leaf.
  const GainGraph star(4, {{0, 1, Gain(I)}, {0, 2, Gain()}, {0, 3, Gain(-1.0)}});
  const auto s = interlace_check(star, 0, 3);
  CHECK(s.pass);
  CHECK(multiplicity(s.theta, 0.0) >= 1);

  try {
    interlace_check(testing::path_graph(3), 0, 2);
    FAIL("missing edge accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EdgeNotPresent);
  }
}

TEST_CASE("interlacing on random deletions") {
  std::mt19937_64 rng(101);
  int tested = 0;
  while (tested < 100) {
    const GainGraph g = testing::random_graph(rng, 3 + tested % 7, 0.6);
    if (g.has_isolated_vertex() || g.size() == 0) continue;
    ++tested;
    const auto& e = g.edges()[rng() % g.size()];
    const auto r = interlace_check(g, e.u, e.v);
    CHECK(r.pass);
    CHECK(r.pass == interlaces(r.lambda, r.theta, 1, 1e-9));
  }
}

TEST_CASE("multi-edge interlacing") {
  std::mt19937_64 rng(103);
  int tested = 0;
  while (tested < 60) {
    const GainGraph g = testing::random_graph(rng, 5 + tested % 5, 0.7);
    if (g.has_isolated_vertex() || g.size() < 3) continue;
    ++tested;
    const int t = 2 + tested % 2;
    std::vector<std::size_t> idx(g.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    std::vector<std::pair<Vertex, Vertex>> removed;
    for (int i = 0; i < t; ++i) removed.emplace_back(g.edges()[idx[i]].u, g.edges()[idx[i]].v);
    const GainGraph h = remove_edges(g, removed);
    CHECK(multi_edge_interlace(g, h));
    CHECK(interlaces(padded_norm_lap_spectrum(g), padded_norm_lap_spectrum(h), t, 1e-9));
  }
  const GainGraph extra(3, {{0, 1, Gain()}, {1, 2, Gain()}});
  try {
    multi_edge_interlace(testing::path_graph(3), testing::complete_graph(3, Gain()));
    FAIL("non-subgraph accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotSubgraph);
  }
  try {
    multi_edge_interlace(extra, GainGraph(3, {{0, 1, Gain(-1.0)}}));
    FAIL("changed gain accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotSubgraph);
  }
}

TEST_CASE("suite on the negative triangle") {
  const auto r = theorem_suite(testing::complete_graph(3, Gain(-1.0)));
  CHECK_FALSE(r.any_failure());
  CHECK(detail(r, "radius_two_iff_balanced", "balanced") == 0.0);
  CHECK(detail(r, "radius_two_iff_balanced", "negation_balanced") == 1.0);
  CHECK(detail(r, "radius_two_iff_balanced", "rho") == doctest::Approx(2.0));
  CHECK(status_of(r, "bipartite_symmetric_spectrum") == CheckStatus::hypothesis_not_met);
  CHECK(status_of(r, "singular_iff_balanced") == CheckStatus::pass);
  CHECK(status_of(r, "zero_eigenvalue_simple") == CheckStatus::hypothesis_not_met);
}

TEST_CASE("suite on the all-i triangle records the symmetric non-bipartite case") {
  const auto r = theorem_suite(testing::complete_graph(3, Gain(I)));
  CHECK_FALSE(r.any_failure());
  CHECK(status_of(r, "symmetric_spectrum_converse") == CheckStatus::pass);
  CHECK(detail(r, "symmetric_spectrum_converse", "symmetric_about_one") == 1.0);
  CHECK(detail(r, "symmetric_spectrum_converse", "bipartite") == 0.0);
  CHECK(detail(r, "symmetric_spectrum_converse", "documented_non_implication") == 1.0);
}

TEST_CASE("suite on bipartite and balanced graphs") {
  const auto c4 = theorem_suite(testing::cycle_graph(4));
  CHECK_FALSE(c4.any_failure());
  CHECK(status_of(c4, "bipartite_symmetric_spectrum") == CheckStatus::pass);
  CHECK(status_of(c4, "zero_eigenvalue_simple") == CheckStatus::pass);
  CHECK(status_of(c4, "balanced_complete_equality") == CheckStatus::hypothesis_not_met);

  const auto k5 = theorem_suite(testing::complete_graph(5, Gain()));
  CHECK_FALSE(k5.any_failure());
  CHECK(status_of(k5, "balanced_complete_equality") == CheckStatus::pass);

  const auto c4i = theorem_suite(testing::cycle_graph(4, Gain(I)));
  CHECK_FALSE(c4i.any_failure());
  CHECK(status_of(c4i, "bipartite_balance_corollary") == CheckStatus::pass);
}

TEST_CASE("suite lists every registered check once") {
  const auto& ids = registered_checks();
  CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());
  for (const GainGraph& g : {testing::complete_graph(3, Gain(-1.0)), testing::path_graph(4),
                             GainGraph(3, {{0, 1, Gain(I)}})}) {
    const auto r = theorem_suite(g);
    REQUIRE(r.checks.size() == ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) CHECK(r.checks[i].check_id == ids[i]);
  }
  // With an isolated vertex the normalized checks cannot apply.
  const auto iso = theorem_suite(GainGraph(3, {{0, 1, Gain(I)}}));
  CHECK_FALSE(iso.any_failure());
  CHECK(status_of(iso, "eigenvalue_bounds") == CheckStatus::hypothesis_not_met);
  CHECK(status_of(iso, "laplacian_quadratic_form") == CheckStatus::pass);
}

TEST_CASE("suite never fails on random graphs") {
  for (GainMode mode : {GainMode::all_one, GainMode::signs, GainMode::fourth_roots, GainMode::uniform_circle}) {
    FuzzConfig cfg;
    cfg.gain_mode = mode;
    cfg.trials = 25;
    cfg.seed = 7;
    for (const GainGraph& g : random_gain_graphs(cfg)) {
      const auto r = theorem_suite(g);
      CHECK_FALSE(r.any_failure());
      if (r.any_failure())
        for (const auto& c : r.checks)
          if (c.status == CheckStatus::fail) MESSAGE(c.check_id);
    }
  }
}

TEST_CASE("fuzz generation is deterministic and honors the configuration") {
  FuzzConfig cfg;
  cfg.trials = 30;
  cfg.seed = 123;
  cfg.gain_mode = GainMode::fourth_roots;
  const auto a = random_gain_graphs(cfg);
  const auto b = random_gain_graphs(cfg);
  CHECK(a == b);
  CHECK(random_gain_graph(cfg, 17) == a[17]);
  cfg.seed = 124;
  CHECK(random_gain_graphs(cfg) != a);

  for (const auto& g : a) {
    CHECK(is_connected(g));
    CHECK(g.order() >= cfg.n_min);
    CHECK(g.order() <= cfg.n_max);
    for (const auto& e : g.edges()) {
      const Complex z = e.gain.value();
      CHECK(std::abs(z.real() * z.imag()) <= 1e-15);
    }
  }

  cfg.family = GraphFamily::connected_bipartite;
  cfg.gain_mode = GainMode::signs;
  for (const auto& g : random_gain_graphs(cfg)) {
    CHECK(is_connected(g));
    CHECK(is_bipartite(g).bipartite);
    for (const auto& e : g.edges()) CHECK(std::abs(std::abs(e.gain.value().real()) - 1.0) <= 1e-15);
  }
}

TEST_CASE("gain mode names and configuration errors") {
  for (GainMode m : {GainMode::all_one, GainMode::signs, GainMode::fourth_roots, GainMode::uniform_circle})
    CHECK(parse_gain_mode(to_string(m)) == m);
  auto require_bad = [](auto&& f) {
    try {
      f();
      FAIL("bad configuration accepted");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::BadConfig);
    }
  };
  require_bad([] { parse_gain_mode("eighth_roots"); });
  require_bad([] {
    FuzzConfig c;
    c.n_min = 9;
    c.n_max = 4;
    validate(c);
  });
  require_bad([] {
    FuzzConfig c;
    c.n_min = 1;
    validate(c);
  });
  require_bad([] {
    FuzzConfig c;
    c.edge_probability = 1.5;
    validate(c);
  });
}

TEST_CASE("conjecture search") {
  FuzzConfig cfg;
  cfg.trials = 200;
  cfg.gain_mode = GainMode::all_one;
  const auto balanced = conjecture_search(cfg, 1e-7);
  CHECK(balanced.examined == 0);
  CHECK_FALSE(balanced.counterexample.has_value());
  CHECK(balanced.skipped_balanced + balanced.bipartite_checked == cfg.trials);

  cfg.family = GraphFamily::connected_bipartite;
  cfg.gain_mode = GainMode::fourth_roots;
  const auto bip = conjecture_search(cfg, 1e-7);
  CHECK(bip.bipartite_checked == cfg.trials);
  CHECK(bip.bipartite_violations.empty());

  cfg.family = GraphFamily::connected;
  cfg.gain_mode = GainMode::uniform_circle;
  const auto mixed = conjecture_search(cfg, 1e-7);
  CHECK(mixed.examined > 0);
  REQUIRE(mixed.nearest_miss.has_value());
  CHECK(*mixed.nearest_miss >= 0.0);
}
