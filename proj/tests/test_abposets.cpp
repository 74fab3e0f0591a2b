#include "abideal/abposets.hpp"

#include <set>

#include "doctest.h"
#include "oracles.hpp"

using namespace abideal;

namespace {

// Pairing vector ((tau, alpha_1), ..., (tau, alpha_n)).
std::vector<int> pvec(const RootSystem& sys, const Coroot& t) {
  std::vector<int> out;
  for (int i = 0; i < sys.rank(); ++i) out.push_back(sys.pairing(t, sys.simple_root(i)));
  return out;
}

}  // namespace

TEST_CASE("X for type A: tau_j = omega_j + omega_{n-j+1} as coweights") {
  for (int n = 2; n <= 5; ++n) {
    RootSystem sys = RootSystem::build(Series::A, n);
    auto xs = enumerate_X(sys);
    REQUIRE(static_cast<int>(xs.size()) == 1 + (n + 1) / 2);
    CHECK(is_zero(xs[0].tau));
    std::set<std::vector<int>> got;
    for (size_t i = 1; i < xs.size(); ++i) got.insert(pvec(sys, xs[i].tau));
    std::set<std::vector<int>> expect;
    for (int j = 1; j <= (n + 1) / 2; ++j) {
      std::vector<int> p(n, 0);
      p[j - 1] += 1;
      p[n - j] += 1;
      expect.insert(p);
    }
    CHECK(got == expect);
  }
}

TEST_CASE("X for E6 and G2") {
  RootSystem e6 = RootSystem::build(Series::E, 6);
  auto xs = enumerate_X(e6);
  REQUIRE(xs.size() == 3);
  CHECK(xs[1].tau == e6.coroot_of(e6.theta()));
  std::vector<int> p = pvec(e6, xs[2].tau);
  CHECK(p == std::vector<int>{1, 0, 0, 0, 0, 1});  // omega_1^vee + omega_6^vee
  CHECK(coweight_label(e6, xs[2].tau) == "ω∨_1+ω∨_6");

  RootSystem g2 = RootSystem::build(Series::G, 2);
  auto gx = enumerate_X(g2);
  REQUIRE(gx.size() == 2);
  CHECK(gx[1].tau == g2.coroot_of(g2.theta()));
}

TEST_CASE("good chains of B5 match the published list") {
  RootSystem b5 = RootSystem::build(Series::B, 5);
  auto chains = enumerate_good_chains(b5);
  std::set<std::vector<std::vector<int>>> got;
  for (const GoodChain& c : chains) got.insert(c.pis);
  std::set<std::vector<std::vector<int>>> expect{
      {{0, 1, 2, 3, 4}},
      {{0, 1, 2, 3, 4}, {2, 3, 4}},
      {{0, 1, 2, 3, 4}, {0}},
  };
  CHECK(got == expect);
}

TEST_CASE("standard decompositions") {
  RootSystem a5 = RootSystem::build(Series::A, 5);
  // tau = omega_2^vee + omega_4^vee -> {Delta, <alpha_2, alpha_3, alpha_4>}
  auto c = coroot_from_simple_pairings(a5, {0, 1, 0, 1, 0});
  REQUIRE(c.has_value());
  GoodChain chain = standard_decomposition(a5, *c);
  REQUIRE(chain.length() == 2);
  CHECK(chain.pis[1] == std::vector<int>{1, 2, 3});

  GoodChain single = standard_decomposition(a5, a5.coroot_of(a5.theta()));
  CHECK(single.length() == 1);

  RootSystem e7 = RootSystem::build(Series::E, 7);
  auto xs = enumerate_X(e7);
  REQUIRE(xs.size() == 4);
  const XPoint& tau3 = xs[3];
  REQUIRE(tau3.chain.length() == 3);
  CHECK(theta_sum_label(e7, tau3) ==
        "θ∨+θ∨(D6)+θ∨(A1)");

  CHECK_THROWS_AS(standard_decomposition(a5, Coroot{}), std::invalid_argument);
  Coroot big = add(a5.coroot_of(a5.theta()), a5.coroot_of(a5.theta()));
  CHECK_THROWS_AS(standard_decomposition(a5, big), std::invalid_argument);
}

TEST_CASE("is_good_chain") {
  RootSystem b3 = RootSystem::build(Series::B, 3);
  GoodChain trivial;
  trivial.pis = {{0, 1, 2}};
  trivial.thetas = {b3.theta()};
  CHECK(is_good_chain(b3, trivial));

  RootSystem b5 = RootSystem::build(Series::B, 5);
  GoodChain alpha1;
  alpha1.pis = {{0, 1, 2, 3, 4}, {0}};
  alpha1.thetas = {b5.theta(), b5.simple_root(0)};
  CHECK(is_good_chain(b5, alpha1));

  // Rank-1 short member violates condition (3): {Delta, <alpha_3>} in B3.
  GoodChain bad;
  bad.pis = {{0, 1, 2}, {2}};
  bad.thetas = {b3.theta(), b3.simple_root(2)};
  CHECK_FALSE(is_good_chain(b3, bad));
}

TEST_CASE("tau_of and alpha_of") {
  RootSystem a1 = RootSystem::build(Series::A, 1);
  Ideal top;
  top.phi.set(0);
  XPoint xp = tau_of(a1, top);
  CHECK(xp.tau == a1.coroot_of(a1.theta()));
  CHECK(alpha_of(a1, top) == a1.simple_root(0));
  CHECK_THROWS_AS(alpha_of(a1, Ideal{}), std::invalid_argument);

  // The partition over X covers the abelian ideals with nonempty parts.
  for (auto [s, n] : {std::pair{Series::A, 3}, {Series::B, 3}, {Series::C, 3}}) {
    RootSystem sys = RootSystem::build(s, n);
    auto classes = partition_abelian(sys);
    size_t total = 0;
    for (const auto& c : classes) {
      CHECK(!c.ideals.empty());
      total += c.ideals.size();
    }
    CHECK(total == (size_t{1} << n));
    CHECK(classes.size() == enumerate_X(sys).size());
  }
}

TEST_CASE("v_tau and min of I_ab(tau)") {
  RootSystem a2 = RootSystem::build(Series::A, 2);
  XPoint zero = xpoint_of(a2, Coroot{});
  CHECK(v_tau(a2, zero).is_identity(a2));
  CHECK(min_Iab_tau(a2, zero) == Ideal{});

  XPoint tv = xpoint_of(a2, a2.coroot_of(a2.theta()));
  Ideal lo = min_Iab_tau(a2, tv);
  RootBits expect;
  expect.set(a2.index_of(a2.theta()));
  CHECK(lo.phi == expect);  // Delta^2_tau = {theta}

  for (auto [s, n] : {std::pair{Series::B, 3}, {Series::D, 4}}) {
    RootSystem sys = RootSystem::build(s, n);
    for (const XPoint& xp : enumerate_X(sys)) {
      WeylElement vt = v_tau(sys, xp);
      CHECK(vt.compose(sys, vt).is_identity(sys));  // Lemma 6.4
      min_Iab_tau(sys, xp);                         // asserts Prop 6.3(2) internally
    }
  }
}

TEST_CASE("maximal good chains") {
  RootSystem c3 = RootSystem::build(Series::C, 3);
  GoodChain cc = maximal_good_chain(c3, c3.simple_root(2));
  CHECK(cc.length() == 3);  // C_n: k(alpha_n) = n
  CHECK(cc.pis[1] == std::vector<int>{1, 2});
  CHECK(cc.pis[2] == std::vector<int>{2});

  RootSystem e7 = RootSystem::build(Series::E, 7);
  CHECK(maximal_good_chain(e7, e7.simple_root(6)).length() == 3);

  RootSystem a2 = RootSystem::build(Series::A, 2);
  CHECK(maximal_good_chain(a2, a2.theta()).length() == 1);
  CHECK_THROWS_AS(maximal_good_chain(a2, negate(a2.theta())), std::invalid_argument);

  // X_alpha matches tau prefixes.
  auto xa = X_alpha(c3, c3.simple_root(2));
  REQUIRE(xa.size() == 3);
  CHECK(xa[0] == c3.coroot_of(c3.theta()));
}

TEST_CASE("y_alpha") {
  RootSystem b3 = RootSystem::build(Series::B, 3);
  CHECK(y_alpha(b3, b3.theta()).is_identity(b3));
  const int g = b3.dual_coxeter();
  for (int i : b3.long_simple_indices()) {
    WeylElement y = y_alpha(b3, b3.simple_root(i));
    CHECK(y.act(b3, b3.simple_root(i)) == b3.theta());
    CHECK(length(b3, y) == g - 2);  // Prop 7.1(3)
  }
  CHECK_THROWS_AS(y_alpha(b3, b3.simple_root(2)), std::invalid_argument);  // short
}

TEST_CASE("y_alpha minimality, exhaustively at small rank") {
  for (auto [s, n] : {std::pair{Series::A, 3}, {Series::B, 3}, {Series::G, 2}}) {
    RootSystem sys = RootSystem::build(s, n);
    auto group = oracle::full_weyl_group(sys);
    for (int p : sys.long_positive_indices()) {
      Root alpha = sys.positive_root(p);
      WeylElement y = y_alpha(sys, alpha);
      WeylElement yi = y.inverse(sys);
      std::set<int> prime_theta;
      for (int i = 0; i < sys.rank(); ++i)
        if (sys.pairing(sys.simple_root(i), sys.theta()) != 0) prime_theta.insert(i);
      // left descents of y_alpha lie in Pi'_theta
      for (const Root& d : descents(sys, y, Side::Left)) {
        bool in = false;
        for (int i : prime_theta)
          if (d == sys.simple_root(i)) in = true;
        CHECK(in);
      }
      for (const WeylElement& v : group) {
        if (v.act(sys, alpha) == sys.theta()) {
          CHECK(length(sys, v) >= length(sys, y));  // y_alpha has minimal length
          // and among those, y_alpha is the one with left descents in Pi'_theta
          bool deep = true;
          for (const Root& d : descents(sys, v, Side::Left)) {
            bool in = false;
            for (int i : prime_theta)
              if (d == sys.simple_root(i)) in = true;
            deep = deep && in;
          }
          if (deep) CHECK(v == y);
        }
        // y_alpha^{-1} is the weak-order minimum of {v : v(theta) = alpha}
        if (v.act(sys, sys.theta()) == alpha) CHECK(weak_leq(sys, yi, v));
      }
    }
  }
}

TEST_CASE("check_w_alpha") {
  RootSystem a1 = RootSystem::build(Series::A, 1);
  AffineWeylElement w = check_w_alpha(a1, a1.simple_root(0));
  CHECK(w == AffineWeylElement::simple_reflection(a1, 0));
  Ideal i = ideal_of_w(a1, w);
  CHECK(i.dim() == 1);

  RootSystem b3 = RootSystem::build(Series::B, 3);
  for (int idx : b3.long_simple_indices()) {
    Ideal m1 = ideal_of_w(b3, check_w_alpha(b3, b3.simple_root(idx)));
    CHECK(m1.dim() == b3.dual_coxeter() - 1);
  }
}

TEST_CASE("extrema of I_ab(tau, alpha)") {
  RootSystem a3 = RootSystem::build(Series::A, 3);
  XPoint tv = xpoint_of(a3, a3.coroot_of(a3.theta()));
  for (int p : a3.long_positive_indices()) {
    Root alpha = a3.positive_root(p);
    auto [lo, hi] = extrema_Iab_tau_alpha(a3, tv, alpha);
    CHECK(lo == hi);  // Prop 7.3(1): singleton at tau = theta^vee
    CHECK(lo == ideal_of_w(a3, check_w_alpha(a3, alpha)));
  }
  // Empty poset: alpha_1 does not lie in Delta(tau_2) for tau_2 in A3.
  auto xs = enumerate_X(a3);
  REQUIRE(xs.size() == 3);
  CHECK_THROWS_AS(extrema_Iab_tau_alpha(a3, xs[2], a3.simple_root(0)), std::invalid_argument);
  auto [lo2, hi2] = extrema_Iab_tau_alpha(a3, xs[2], a3.simple_root(1));
  CHECK(lo2 == hi2);
  CHECK(lo2.dim() == 4);
}

TEST_CASE("towers and published dimensions") {
  RootSystem e7 = RootSystem::build(Series::E, 7);
  CHECK(m_h(e7, e7.simple_root(6), 3).dim() == 27);
  CHECK(dim_m_h(e7, e7.simple_root(6), 3) == 27);

  RootSystem f4 = RootSystem::build(Series::F, 4);
  CHECK(m_h(f4, f4.simple_root(1), 2).dim() == 9);

  RootSystem e8 = RootSystem::build(Series::E, 8);
  CHECK(m_h(e8, e8.simple_root(0), 2).dim() == 36);
  CHECK(m_h(e8, e8.simple_root(0), 1).dim() == 29);

  CHECK_THROWS_AS(m_h(f4, f4.simple_root(1), 3), std::invalid_argument);
}

TEST_CASE("hat systems and g_h") {
  // A5, alpha_3 interior: hat Delta_1(alpha_3) = A_{n-2} = A3.
  RootSystem a5 = RootSystem::build(Series::A, 5);
  CHECK(classify_subsystem(a5, hat_delta_h(a5, a5.simple_root(2), 1)).str() == "A3");
  CHECK(g_h(a5, a5.simple_root(2), 1) == 4);

  RootSystem e7 = RootSystem::build(Series::E, 7);
  CHECK(classify_subsystem(e7, hat_delta_h(e7, e7.simple_root(6), 2)).str() == "A1");
  CHECK(g_h(e7, e7.simple_root(6), 2) == 2);

  // B6 families: A1 at h=2k+1, A3 at h=2k+2, D_{h-2k+1} otherwise.
  RootSystem b6 = RootSystem::build(Series::B, 6);
  CHECK(classify_subsystem(b6, hat_delta_h(b6, b6.simple_root(2), 1)).str() == "A1");
  CHECK(classify_subsystem(b6, hat_delta_h(b6, b6.simple_root(3), 1)).str() == "A3");
  CHECK(classify_subsystem(b6, hat_delta_h(b6, b6.simple_root(4), 1)).str() == "D4");
}

TEST_CASE("dimension grids for A and C") {
  for (int n = 3; n <= 5; ++n) {
    RootSystem sys = RootSystem::build(Series::A, n);
    for (int h = 1; h <= n; ++h) {
      int k = std::min(h, n - h + 1);
      GoodChain chain = maximal_good_chain(sys, sys.simple_root(h - 1));
      CHECK(chain.length() == k);
      for (int i = 1; i <= k; ++i) CHECK(m_h(sys, sys.simple_root(h - 1), i).dim() == i * (n - i + 1));
    }
  }
  RootSystem c4 = RootSystem::build(Series::C, 4);
  for (int i = 1; i <= 4; ++i)
    CHECK(m_h(c4, c4.simple_root(3), i).dim() == (2 * 4 - i + 1) * i / 2);
}

TEST_CASE("suter dimensions") {
  RootSystem e6 = RootSystem::build(Series::E, 6);
  CHECK(suter_dim(e6, e6.simple_root(0)) == 16);
  CHECK(suter_dim(e6, e6.simple_root(1)) == 11);

  RootSystem a1 = RootSystem::build(Series::A, 1);
  CHECK(suter_dim(a1, a1.simple_root(0)) == 1);

  RootSystem b3 = RootSystem::build(Series::B, 3);
  CHECK_THROWS_AS(suter_dim(b3, b3.simple_root(2)), std::invalid_argument);  // short
  CHECK_THROWS_AS(suter_dim(b3, b3.theta()), std::invalid_argument);         // not simple
}

TEST_CASE("Malcev dimensions") {
  for (int n = 2; n <= 6; ++n)
    CHECK(malcev_dimension(RootSystem::build(Series::A, n)) == (n + 1) * (n + 1) / 4);
  for (int n = 2; n <= 5; ++n)
    CHECK(malcev_dimension(RootSystem::build(Series::C, n)) == n * (n + 1) / 2);
  CHECK(malcev_dimension(RootSystem::build(Series::B, 3)) == 5);
  CHECK(malcev_dimension(RootSystem::build(Series::G, 2)) == 3);
}

TEST_CASE("bijection with long simple roots") {
  RootSystem a3 = RootSystem::build(Series::A, 3);
  CHECK(maximal_abelian_bijection(a3).size() == 3);

  RootSystem g2 = RootSystem::build(Series::G, 2);
  auto bij = maximal_abelian_bijection(g2);
  REQUIRE(bij.size() == 1);
  CHECK(bij[0].first == 1);  // alpha_2 is the long simple root
  CHECK(bij[0].second.dim() == 3);

  RootSystem c3 = RootSystem::build(Series::C, 3);
  auto cbij = maximal_abelian_bijection(c3);
  REQUIRE(cbij.size() == 1);
  CHECK(cbij[0].first == 2);
}

TEST_CASE("maximal elements of I_ab(tau)") {
  RootSystem a3 = RootSystem::build(Series::A, 3);
  XPoint zero = xpoint_of(a3, Coroot{});
  auto m0 = maximal_elements_Iab_tau(a3, zero);
  REQUIRE(m0.size() == 1);
  CHECK(m0[0] == Ideal{});

  // At tau = theta^vee the maxima are indexed by all long simple roots
  // (Pi_l(theta^vee) = Pi_l since Delta(theta^vee) = Delta).
  XPoint tv = xpoint_of(a3, a3.coroot_of(a3.theta()));
  auto m1 = maximal_elements_Iab_tau(a3, tv);
  CHECK(m1.size() == a3.long_simple_indices().size());

  for (auto [s, n] : {std::pair{Series::B, 3}, {Series::C, 3}, {Series::D, 4}}) {
    RootSystem sys = RootSystem::build(s, n);
    for (const XPoint& xp : enumerate_X(sys)) maximal_elements_Iab_tau(sys, xp);
  }
}

TEST_CASE("labels") {
  RootSystem a5 = RootSystem::build(Series::A, 5);
  auto c = coroot_from_simple_pairings(a5, {0, 1, 0, 1, 0});
  REQUIRE(c.has_value());
  CHECK(coweight_label(a5, *c) == "ω∨_2+ω∨_4");
  CHECK(coweight_label(a5, Coroot{}) == "0");
  XPoint xp = xpoint_of(a5, *c);
  CHECK(theta_sum_label(a5, xp) == "θ∨+θ∨(A3)");
}
