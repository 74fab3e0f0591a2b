#include "abideal/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace abideal {

bool Report::all_pass() const {
  for (const Check& c : checks)
    if (!c.pass) return false;
  return true;
}

int Report::failures() const {
  int n = 0;
  for (const Check& c : checks)
    if (!c.pass) ++n;
  return n;
}

namespace {

class Suite {
 public:
  explicit Suite(Report* report) : report_(report) {}

  void check(const std::string& anchor, const std::string& description, bool pass,
             const std::string& detail = "") {
    report_->checks.push_back(Check{anchor, description, pass, detail});
  }

  // Runs a block that throws on failure; exceptions become failed checks.
  template <typename F>
  void guarded(const std::string& anchor, const std::string& description, F&& f) {
    try {
      f();
      check(anchor, description, true);
    } catch (const std::exception& e) {
      check(anchor, description, false, e.what());
    }
  }

 private:
  Report* report_;
};

int known_dual_coxeter(const RootSystem& sys) {
  int n = sys.rank();
  switch (sys.series()) {
    case Series::A: return n + 1;
    case Series::B: return 2 * n - 1;
    case Series::C: return n + 1;
    case Series::D: return 2 * n - 2;
    case Series::E: return n == 6 ? 12 : (n == 7 ? 18 : 30);
    case Series::F: return 9;
    case Series::G: return 4;
  }
  return 0;
}

std::vector<WeylElement> exhaustive_weyl(const RootSystem& sys) {
  std::vector<WeylElement> out{WeylElement::identity(sys)};
  std::set<std::vector<Root>> seen{out[0].images()};
  for (size_t i = 0; i < out.size(); ++i) {
    for (int s = 0; s < sys.rank(); ++s) {
      WeylElement next = out[i].compose(sys, WeylElement::simple_reflection(sys, s));
      if (seen.insert(next.images()).second) out.push_back(next);
    }
  }
  return out;
}

WeylElement random_weyl(const RootSystem& sys, std::mt19937& rng) {
  std::uniform_int_distribution<int> len(0, 2 * sys.positive_count());
  std::uniform_int_distribution<int> pick(0, sys.rank() - 1);
  WeylElement v = WeylElement::identity(sys);
  int l = len(rng);
  for (int i = 0; i < l; ++i) v = v.compose(sys, WeylElement::simple_reflection(sys, pick(rng)));
  return v;
}

AffineWeylElement random_affine(const RootSystem& sys, std::mt19937& rng) {
  std::uniform_int_distribution<int> coord(-2, 2);
  Coroot t;
  for (int i = 0; i < sys.rank(); ++i) t.c[i] = static_cast<int16_t>(coord(rng));
  return AffineWeylElement{t, random_weyl(sys, rng)};
}

}  // namespace

// --- counts ------------------------------------------------------------------

Report verify_counts(const RootSystem& sys) {
  Report report;
  Suite s(&report);

  auto abelians = enumerate_abelian(sys);
  s.check("Peterson theorem", "number of abelian ideals is 2^rank",
          static_cast<long long>(abelians.size()) == (1LL << sys.rank()),
          std::to_string(abelians.size()) + " vs 2^" + std::to_string(sys.rank()));

  s.guarded("Prop 5.6 / Remark 5.7", "X agrees between lattice scan and good-chain sums",
            [&] { enumerate_X(sys); });

  auto ideals = enumerate_ad_nilpotent(sys);
  auto dpts = enumerate_D_points(sys);
  s.check("Prop 3.6", "|ad-nilpotent ideals| equals |D cap Q^vee|", ideals.size() == dpts.size(),
          std::to_string(ideals.size()) + " vs " + std::to_string(dpts.size()));
  auto dabpts = enumerate_Dab_points(sys);
  s.check("Prop 3.6 (abelian)", "|abelian ideals| equals |D_ab|", abelians.size() == dabpts.size(),
          std::to_string(abelians.size()) + " vs " + std::to_string(dabpts.size()));

  {
    auto classes = partition_abelian(sys);
    auto xs = enumerate_X(sys);
    size_t total = 0;
    bool nonempty = true;
    for (const auto& c : classes) {
      total += c.ideals.size();
      nonempty = nonempty && !c.ideals.empty();
    }
    s.check("partition over X", "I_ab = disjoint union of nonempty I_ab(tau) over X",
            total == abelians.size() && nonempty && classes.size() == xs.size(),
            std::to_string(classes.size()) + " classes over |X| = " + std::to_string(xs.size()));

    bool card_theta = true;
    std::string detail;
    for (const auto& c : classes) {
      if (c.xp.chain.length() != 1) continue;  // tau = theta^vee
      size_t expect = sys.long_positive_indices().size();
      card_theta = c.ideals.size() == expect;
      detail = std::to_string(c.ideals.size()) + " vs |Delta_l^+| = " + std::to_string(expect);
    }
    s.check("Remark after Prop 7.3", "|I_ab(theta^vee)| equals |Delta_l^+|", card_theta, detail);

    bool refine_ok = true;
    std::string rdetail;
    for (const auto& c : classes) {
      if (c.xp.chain.length() == 0) continue;
      std::set<Root> expect;
      RootBits para = parabolic_positive(sys, pi_tau(c.xp));
      for (int p = 0; p < sys.positive_count(); ++p)
        if (para.test(p) && sys.is_long(sys.positive_root(p))) expect.insert(sys.positive_root(p));
      std::set<Root> got;
      for (const auto& [a, v] : c.by_alpha)
        if (!v.empty()) got.insert(a);
      if (got != expect) {
        refine_ok = false;
        rdetail = "at tau with k=" + std::to_string(c.xp.chain.length());
      }
    }
    s.check("Prop 7.4", "I_ab(tau, alpha) nonempty exactly for alpha in Delta_l^+(tau)", refine_ok,
            rdetail);
  }

  {
    auto dom = sys.dominant_roots();
    std::set<Root> expect{sys.theta(), sys.theta_short()};
    s.check("Lemma 5.1", "dominant roots are exactly theta and theta_s",
            std::set<Root>(dom.begin(), dom.end()) == expect,
            std::to_string(dom.size()) + " dominant roots");
  }

  {
    bool ok = true;
    Coroot tv = sys.coroot_of(sys.theta());
    for (const XPoint& xp : enumerate_X(sys)) {
      if (is_zero(xp.tau)) continue;
      Coroot diff = sub(xp.tau, tv);
      for (int i = 0; i < sys.rank(); ++i) ok = ok && diff.c[i] >= 0;
    }
    s.check("Lemma 5.2", "nonzero dominant tau in X satisfies tau >= theta^vee", ok);
  }

  {
    bool norm_ok = true, orth_ok = true;
    auto xs = enumerate_X(sys);
    for (const XPoint& xp : xs) {
      if (is_zero(xp.tau)) continue;
      if (sys.form(xp.tau, xp.tau) != Rational(2 * xp.chain.length())) norm_ok = false;
    }
    for (const XPoint& a : xs)
      for (const XPoint& b : xs) {
        if (is_zero(a.tau) || is_zero(b.tau)) continue;
        int h = 0;
        while (h < a.chain.length() && h < b.chain.length() &&
               a.chain.thetas[h] == b.chain.thetas[h])
          ++h;
        if (sys.form(a.tau, b.tau) != Rational(2 * h)) orth_ok = false;
        for (int i = h; i < a.chain.length(); ++i)
          for (int j = h; j < b.chain.length(); ++j)
            if (sys.pairing(a.chain.thetas[i], b.chain.thetas[j]) != 0) orth_ok = false;
      }
    s.check("Remark 5.7(1)", "(theta,theta)/2 * (tau,tau) = 2k for each chain of length k",
            norm_ok);
    s.check("Remark 5.7(2)", "chains of distinct tau are orthogonal beyond the common prefix",
            orth_ok);
  }

  s.check("dual Coxeter number", "g = 1 + sum of comarks matches the type value",
          sys.dual_coxeter() == known_dual_coxeter(sys),
          std::to_string(sys.dual_coxeter()) + " vs " + std::to_string(known_dual_coxeter(sys)));
  s.check("form normalization", "(theta, theta) = 2",
          sys.form(sys.theta(), sys.theta()) == Rational(2));

  return report;
}

// --- encodings ---------------------------------------------------------------

Report verify_encodings(const RootSystem& sys) {
  Report report;
  Suite s(&report);
  std::mt19937 rng(0x5eed);

  // Weyl machinery first: 2.3-2.8.
  if (sys.rank() <= 3) {
    auto all = exhaustive_weyl(sys);
    bool recon = true, biconv = true;
    for (const WeylElement& v : all) {
      RootBits n = inversions(sys, v);
      if (!is_biconvex(sys, n)) biconv = false;
      if (!(element_from_inversions(sys, n) == v)) recon = false;
    }
    s.check("2.3(3)", "N(v) is biconvex for every v in W", biconv,
            std::to_string(all.size()) + " elements");
    s.check("2.3(4)/2.4", "element_from_inversions(N(v)) = v for every v in W", recon);

    bool cond27 = true;
    for (const WeylElement& v : all)
      for (const WeylElement& u : all) {
        WeylElement vu = v.compose(sys, u);
        bool grows = (inversions(sys, v) & ~inversions(sys, vu)).none();
        bool additive = length(sys, vu) == length(sys, v) + length(sys, u);
        if (grows != additive) cond27 = false;
      }
    s.check("2.7", "N(vu) contains N(v) iff l(vu) = l(v) + l(u), all pairs", cond27);
  } else {
    bool recon = true, biconv = true;
    for (int t = 0; t < 40; ++t) {
      WeylElement v = random_weyl(sys, rng);
      RootBits n = inversions(sys, v);
      if (!is_biconvex(sys, n)) biconv = false;
      if (!(element_from_inversions(sys, n) == v)) recon = false;
    }
    s.check("2.3(3)", "N(v) is biconvex (random sample)", biconv);
    s.check("2.3(4)/2.4", "element_from_inversions(N(v)) = v (random sample)", recon);
  }

  {
    bool ok = true;
    for (int t = 0; t < 30; ++t) {
      WeylElement v = random_weyl(sys, rng), u = random_weyl(sys, rng);
      RootBits nv = inversions(sys, v), nu = inversions(sys, u);
      RootBits nvu = inversions(sys, v.compose(sys, u));
      // Nbar(vu) = Nbar(v) symmetric-difference v(Nbar(u)), read on positive parts.
      RootBits expect = nv;
      for (int p = 0; p < sys.positive_count(); ++p) {
        if (!nu.test(p)) continue;
        Root img = v.act(sys, sys.positive_root(p));
        if (sys.is_positive_root(img)) expect.flip(sys.index_of(img));
        else expect.flip(sys.index_of(negate(img)));
      }
      if (expect != nvu) ok = false;
    }
    s.check("2.5", "Nbar(vu) = Nbar(v) + v Nbar(u) on random pairs", ok);
  }

  {
    bool ok = true;
    for (int t = 0; t < 20; ++t) {
      WeylElement v = random_weyl(sys, rng);
      std::vector<int> sub;
      for (int i = 0; i < sys.rank(); ++i)
        if (rng() % 2) sub.push_back(i);
      RootBits para = parabolic_positive(sys, sub);
      RootBits restricted = inversions(sys, v) & para;
      WeylElement vp = element_from_inversions(sys, restricted);
      if (inversions(sys, vp) != restricted) ok = false;
    }
    s.check("2.8", "N(v) cap R' is the inversion set of a parabolic element", ok);
  }

  {
    bool ok = true;
    for (int t = 0; t < 20; ++t) {
      AffineWeylElement w = random_affine(sys, rng);
      AffineRoot g{sys.positive_root(rng() % sys.positive_count()),
                   static_cast<int16_t>(static_cast<int>(rng() % 5) - 2)};
      AffineRoot a = w.act(sys, g);
      AffineRoot b = w.act(sys, AffineRoot{g.finite, static_cast<int16_t>(g.level + 1)});
      if (!(b.finite == a.finite) || b.level != a.level + 1) ok = false;
    }
    s.check("delta invariance", "affine action satisfies w(g + delta) = w(g) + delta", ok);
  }

  {
    bool ok = true;
    for (int t = 0; t < 15; ++t) {
      AffineWeylElement w = random_affine(sys, rng);
      auto n = inversions(sys, w);
      if (!is_biconvex(sys, n)) ok = false;
      if (!(element_from_inversions(sys, n, false) == w)) ok = false;
      if (static_cast<int>(n.size()) != length(sys, w)) ok = false;
    }
    s.check("2.3/2.4 (affine)", "random affine elements round-trip through N(w)", ok);
  }

  // Encoding of ideals.
  const bool full = sys.rank() <= 5;
  auto ideals = full ? enumerate_ad_nilpotent(sys) : enumerate_abelian(sys);
  {
    bool ok = true, in_w = true;
    for (const Ideal& i : ideals) {
      AffineWeylElement w = w_of_ideal(sys, i);
      if (!is_W_element(sys, w)) in_w = false;
      if (!(ideal_of_w(sys, w) == i)) ok = false;
    }
    s.check("Prop 3.1", "every w_i satisfies the membership conditions", in_w,
            std::to_string(ideals.size()) + " ideals");
    s.check("encoding N(w_i) = L(i)", "round trip i -> w_i -> i is the identity", ok,
            full ? "all ad-nilpotent ideals" : "all abelian ideals");
  }

  {
    bool ok = true, wab = true;
    for (const Ideal& i : enumerate_abelian(sys)) {
      AffineWeylElement w = w_of_ideal(sys, i);
      if (length(sys, w) != i.dim()) ok = false;
      if (!is_Wab_element(sys, w)) wab = false;
    }
    s.check("Prop 3.3", "dim(i) = l(w_i) for abelian ideals", ok);
    s.check("Prop 3.3 (converse)", "abelian w_i satisfy N(w) inside -Delta^+ + delta", wab);
  }

  if (sys.rank() <= 3) {
    bool ok = true;
    std::vector<AffineWeylElement> ws;
    for (const Ideal& i : ideals) ws.push_back(w_of_ideal(sys, i));
    for (size_t i = 0; i < ideals.size(); ++i)
      for (size_t j = 0; j < ideals.size(); ++j) {
        bool inc = ideals[j].contains(ideals[i]);
        bool winc = weak_leq(sys, ws[i], ws[j]);
        if (inc != winc) ok = false;
      }
    s.check("3.2", "i inside j iff w_i <= w_j in the weak order (all pairs)", ok);
  } else {
    bool ok = true;
    auto abelians = enumerate_abelian(sys);
    std::vector<std::vector<AffineRoot>> ns;
    for (const Ideal& i : abelians) ns.push_back(inversions(sys, w_of_ideal(sys, i)));
    for (size_t i = 0; i < abelians.size(); ++i)
      for (size_t j = 0; j < abelians.size(); ++j) {
        bool inc = abelians[j].contains(abelians[i]);
        bool winc = std::includes(ns[j].begin(), ns[j].end(), ns[i].begin(), ns[i].end());
        if (inc != winc) ok = false;
      }
    s.check("3.2", "i inside j iff N(w_i) inside N(w_j) (abelian pairs)", ok);
  }

  {
    bool agree = true, count = true;
    for (const Ideal& i : ideals) {
      auto a = generators(sys, i);
      auto b = generators_via_w(sys, i);
      std::sort(a.begin(), a.end());
      if (a != b) agree = false;
      AffineWeylElement w = w_of_ideal(sys, i);
      if (descents(sys, w, Side::Right).size() != a.size()) count = false;
    }
    s.check("Prop 3.4", "minimal elements match {beta : w_i(alpha) = beta - delta}", agree);
    s.check("Cor 3.5", "|antichain| equals the number of right descents of w_i", count);
  }

  {
    bool ok = true, hyper = true;
    int htheta = sys.height(sys.theta());
    for (const Ideal& i : ideals) {
      AffineWeylElement w = w_of_ideal(sys, i);
      AffineWeylElement wi = w.inverse(sys);
      Coroot sigma = F_map(sys, w);
      int n_i = nilpotence_index(sys, i);
      for (int j = 1; j <= htheta; ++j) {
        if ((n_i <= j) != in_Dj(sys, sigma, j)) ok = false;
        // w(C_1) inside C_{j+1}: no wall H_{alpha_i,0} or H_{theta,j+1} separates.
        bool inside = true;
        for (int a = 0; a < sys.rank(); ++a)
          if (!affine_positive(wi.act(sys, AffineRoot{sys.simple_root(a), 0}))) inside = false;
        if (!affine_positive(wi.act(sys, AffineRoot{negate(sys.theta()),
                                                    static_cast<int16_t>(j + 1)})))
          inside = false;
        if ((n_i <= j) != inside) hyper = false;
      }
    }
    s.check("Prop 3.8", "n(i) <= j iff F(w_i) lies in D_j", ok);
    s.check("Lemma 3.7 / 2.1", "n(i) <= j iff w_i(C_1) inside C_{j+1} (wall criterion)", hyper);
  }

  {
    bool inj = true, in_d = true;
    std::set<Coroot> seen;
    for (const Ideal& i : ideals) {
      Coroot sigma = F_map(sys, w_of_ideal(sys, i));
      if (!seen.insert(sigma).second) inj = false;
      if (!in_D(sys, sigma)) in_d = false;
    }
    s.check("Prop 3.6 (injectivity)", "F is injective on the encoded elements", inj);
    s.check("Prop 3.6 (image)", "F lands in D", in_d);
    bool ab_ok = true;
    for (const Ideal& i : enumerate_abelian(sys)) {
      Coroot sigma = F_map(sys, w_of_ideal(sys, i));
      if (!in_Dab(sys, sigma) || !in_Dj(sys, sigma, 1) || !in_Dprime_j(sys, sigma, 1))
        ab_ok = false;
    }
    s.check("D_ab = D_1 = D_1'", "abelian images land in all three descriptions", ab_ok);
  }

  {
    std::vector<AffineRoot> hat_pi;
    hat_pi.push_back(AffineRoot{negate(sys.theta()), 1});
    for (int a = 0; a < sys.rank(); ++a) hat_pi.push_back(AffineRoot{sys.simple_root(a), 0});
    bool l43 = true, l42 = true;
    for (const Ideal& i : enumerate_abelian(sys)) {
      AffineWeylElement w = w_of_ideal(sys, i);
      for (size_t ai = 0; ai < hat_pi.size(); ++ai) {
        AffineRoot img = w.act(sys, hat_pi[ai]);
        bool minus_delta = img.level == -1 && sys.is_positive_root(img.finite);
        bool plus_delta = img.level == 1 && sys.is_positive_root(negate(img.finite));
        bool simple_img = img.level == 0 && [&] {
          for (int b = 0; b < sys.rank(); ++b)
            if (img.finite == sys.simple_root(b)) return true;
          return false;
        }();
        bool theta2 = img.level == 2 && img.finite == negate(sys.theta());
        if (!(minus_delta || plus_delta || simple_img || theta2)) l43 = false;
        if (img.level >= 2) {
          if (!theta2) l42 = false;
          // preimage must be a long simple root
          if (hat_pi[ai].level != 0 || !sys.is_long(hat_pi[ai].finite)) l42 = false;
        }
      }
    }
    s.check("Lemma 4.3", "w_i(hat Pi) lies in +-(Delta^- + delta) cup Pi cup {-theta+2delta}",
            l43);
    s.check("Lemma 4.2", "level >= 2 images are -theta+2delta with long simple preimage", l42);
  }

  {
    auto abelians = enumerate_abelian(sys);
    bool agree = true;
    for (const Ideal& i : abelians) {
      bool direct = true;
      for (const Ideal& j : abelians)
        if (!(i == j) && j.contains(i)) { direct = false; break; }
      bool via_w = is_maximal_abelian(sys, i);
      bool via_coords = is_maximal_abelian_via_coords(sys, i);
      if (direct != via_w || via_w != via_coords) agree = false;
    }
    s.check("Thm 4.4 / Prop 4.6", "maximality agrees: poset, w_i(hat Pi), and F-coordinates",
            agree);
  }

  return report;
}

// --- posets ------------------------------------------------------------------

Report verify_posets(const RootSystem& sys) {
  Report report;
  Suite s(&report);
  auto classes = partition_abelian(sys);

  {
    bool ok = true;
    for (const auto& c : classes) {
      if (c.xp.chain.length() == 0) continue;
      for (const Ideal& i : c.ideals) {
        auto n = inversions(sys, w_of_ideal(sys, i));
        auto has = [&](const AffineRoot& g) {
          return std::binary_search(n.begin(), n.end(), g);
        };
        for (const Root& th : c.xp.chain.thetas)
          if (!has(AffineRoot{negate(th), 1})) ok = false;
        RootBits para = parabolic_positive(sys, pi_tau(c.xp));
        const Root& thk = c.xp.chain.thetas.back();
        for (int p = 0; p < sys.positive_count(); ++p)
          if (para.test(p) && sys.pairing(sys.positive_root(p), thk) == 0 &&
              has(AffineRoot{negate(sys.positive_root(p)), 1}))
            ok = false;
      }
    }
    s.check("Prop 6.2", "membership in I_ab(tau) reads off N(w) at the chain roots", ok);
  }

  {
    bool minimum = true;
    for (const auto& c : classes) {
      Ideal lo = min_Iab_tau(sys, c.xp);  // internally checks Prop 6.3(2)
      for (const Ideal& i : c.ideals)
        if (!i.contains(lo)) minimum = false;
      if (std::find(c.ideals.begin(), c.ideals.end(), lo) == c.ideals.end()) minimum = false;
    }
    s.check("Prop 6.3", "i(t_tau v_tau) is the unique minimum of I_ab(tau)", minimum);
  }

  {
    bool law = true, factor = true, reversal = true;
    for (const auto& c : classes) {
      WeylElement vt = v_tau(sys, c.xp);
      std::set<int> prime;
      for (int a : pi_prime_tau(sys, c.xp)) prime.insert(a);
      std::vector<std::pair<Ideal, WeylElement>> ys;
      for (const Ideal& i : c.ideals) {
        AffineWeylElement w = w_of_ideal(sys, i);
        // 6.1(4): N(t_tau v) = {-b + d : b in D2 cup (D1 minus N(v))}.
        RootBits nv = inversions(sys, w.v);
        std::vector<AffineRoot> expect;
        for (int p = 0; p < sys.positive_count(); ++p) {
          int pr = sys.pairing(w.tau, sys.positive_root(p));
          if (pr == 2 || (pr == 1 && !nv.test(p)))
            expect.push_back(AffineRoot{negate(sys.positive_root(p)), 1});
        }
        std::sort(expect.begin(), expect.end());
        if (inversions(sys, w) != expect) law = false;
        // Prop 6.6: v = v_tau y with left descents of y inside Pi'(tau).
        WeylElement y = vt.compose(sys, w.v);  // v_tau is an involution
        for (const Root& d : descents(sys, y, Side::Left)) {
          bool in_prime = false;
          for (int a : prime)
            if (d == sys.simple_root(a)) in_prime = true;
          if (!in_prime) factor = false;
        }
        ys.emplace_back(i, y);
      }
      for (const auto& [i, y] : ys)
        for (const auto& [j, z] : ys)
          if (j.contains(i) != weak_leq(sys, y, z)) reversal = false;
    }
    s.check("6.1(4)", "N(t_tau v) is read off Delta^2_tau and Delta^1_tau minus N(v)", law);
    s.check("Prop 6.6", "every member factors as t_tau v_tau y with L_y inside Pi'(tau)",
            factor);
    s.check("Prop 6.6 (order)", "inclusion of ideals matches the weak order of the y parts",
            reversal);
  }

  {
    bool ok = true;
    auto bij = maximal_abelian_bijection(sys);
    for (const auto& c : classes) {
      std::set<RootBits, decltype(&bits_less)> maximal_here(&bits_less);
      for (const Ideal& i : c.ideals)
        if (is_maximal_abelian(sys, i)) maximal_here.insert(i.phi);
      std::set<RootBits, decltype(&bits_less)> expect(&bits_less);
      for (const auto& [idx, m] : bij) {
        GoodChain chain = maximal_good_chain(sys, sys.simple_root(idx));
        if (chain.length() == c.xp.chain.length() &&
            tau_h_of_chain(sys, chain, chain.length()) == c.xp.tau)
          expect.insert(m.phi);
      }
      if (maximal_here != expect) ok = false;
    }
    s.check("Prop 8.16 / Cor 8.17",
            "maximal abelian ideals in I_ab(tau) are the m(alpha) with tau_k(alpha) = tau", ok);
  }

  {
    bool invol = true, stab = true, image = true;
    for (const auto& c : classes) {
      WeylElement vt = v_tau(sys, c.xp);
      if (!vt.compose(sys, vt).is_identity(sys)) invol = false;
      if (c.xp.chain.length() == 0) continue;
      std::set<Root> outside;
      std::vector<int> prime = pi_prime_tau(sys, c.xp);
      std::set<int> prime_set(prime.begin(), prime.end());
      for (int i = 0; i < sys.rank(); ++i)
        if (!prime_set.count(i)) outside.insert(sys.simple_root(i));
      std::set<Root> mapped;
      for (const Root& r : outside) mapped.insert(vt.act(sys, r));
      if (mapped != outside) stab = false;
      Root expect = negate(c.xp.chain.thetas.back());
      if (vt.act(sys, sys.theta()) != expect) image = false;
    }
    s.check("Lemma 6.4", "v_tau is an involution", invol);
    s.check("Prop 6.8(1)", "v_tau permutes Pi minus Pi'(tau)", stab);
    s.check("Prop 6.8(4)", "v_tau(theta) = -theta(tau)", image);
  }

  {
    bool singleton = true, inv_set = true;
    for (int p : sys.long_positive_indices()) {
      Root alpha = sys.positive_root(p);
      AffineWeylElement w = check_w_alpha(sys, alpha);
      Ideal i = ideal_of_w(sys, w);
      // gather I_ab(theta^vee, alpha)
      std::vector<Ideal> members;
      for (const auto& c : classes) {
        if (c.xp.chain.length() != 1) continue;
        auto it = c.by_alpha.find(alpha);
        if (it != c.by_alpha.end()) members = it->second;
      }
      if (members.size() != 1 || !(members[0] == i)) singleton = false;

      auto n = inversions(sys, w.inverse(sys));
      std::vector<AffineRoot> expect;
      for (int q = 0; q < sys.positive_count(); ++q)
        if (sys.form(sys.positive_root(q), alpha) == Rational(-1))
          expect.push_back(AffineRoot{sys.positive_root(q), 0});
      expect.push_back(AffineRoot{negate(alpha), 1});
      std::sort(expect.begin(), expect.end());
      if (n != expect) inv_set = false;
    }
    s.check("Prop 7.3(1)", "I_ab(theta^vee, alpha) = {i(check_w_alpha)}", singleton);
    s.check("Prop 7.3(3)",
            "N(check_w_alpha^-1) = {beta : (beta,alpha) = -1} cup {-alpha+delta}", inv_set);
  }

  {
    bool extrema_ok = true, card_ok = true, sandwich_ok = true;
    std::string detail;
    auto abelians = enumerate_abelian(sys);
    std::vector<std::pair<Coroot, Root>> keys_of(abelians.size());
    for (size_t i = 0; i < abelians.size(); ++i) {
      Coroot t = tau_of(sys, abelians[i]).tau;
      Root a{};
      if (abelians[i].phi.any()) a = alpha_of(sys, abelians[i]);
      keys_of[i] = {t, a};
    }
    for (const auto& c : classes) {
      if (c.xp.chain.length() == 0) continue;
      for (const auto& [alpha, members] : c.by_alpha) {
        auto [lo, hi] = extrema_Iab_tau_alpha(sys, c.xp, alpha);
        for (const Ideal& i : members)
          if (!i.contains(lo) || !hi.contains(i)) extrema_ok = false;
        long long wa = weyl_group_order(sys, parabolic_basis(sys, W_alpha_basis(sys, alpha)));
        long long wat =
            weyl_group_order(sys, parabolic_basis(sys, W_alpha_tau_basis(sys, c.xp, alpha)));
        if (wa % wat != 0 || static_cast<long long>(members.size()) != wa / wat) {
          card_ok = false;
          detail = "|I_ab(tau,alpha)| = " + std::to_string(members.size()) + ", |W_a|/|W_at| = " +
                   std::to_string(wa) + "/" + std::to_string(wat);
        }
        // Cor 8.9(2): interval membership characterizes I_ab(tau, alpha).
        for (size_t i = 0; i < abelians.size(); ++i) {
          bool in_class = keys_of[i] == std::make_pair(c.xp.tau, alpha);
          bool between = abelians[i].contains(lo) && hi.contains(abelians[i]);
          if (in_class != between) sandwich_ok = false;
        }
      }
    }
    s.check("Prop 7.5 / 7.7", "computed extrema bound every member of I_ab(tau, alpha)",
            extrema_ok);
    s.check("Prop 7.7 cardinality", "|I_ab(tau, alpha)| = |W_alpha| / |W_alpha,tau|", card_ok,
            detail);
    s.check("Cor 8.9(2)", "I_ab(tau, alpha) is exactly the interval [min, max]", sandwich_ok);
  }

  {
    bool sandwich_ok = true, count_ok = true;
    std::string detail;
    auto abelians = enumerate_abelian(sys);
    for (int p : sys.long_positive_indices()) {
      Root alpha = sys.positive_root(p);
      GoodChain chain = maximal_good_chain(sys, alpha);
      Ideal lo = ideal_of_w(sys, check_w_alpha(sys, alpha));
      Ideal hi = m_h(sys, alpha, chain.length());
      size_t count = 0;
      for (const Ideal& i : abelians) {
        bool in_class = i.phi.any() && alpha_of(sys, i) == alpha;
        if (in_class) ++count;
        bool between = i.contains(lo) && hi.contains(i);
        if (in_class != between) sandwich_ok = false;
      }
      // Cor 8.8: |I_ab(alpha)| = |hat W_alpha| / |W_alpha|.
      std::vector<AffineRoot> hat_basis;
      for (int i : W_alpha_basis(sys, alpha)) hat_basis.push_back(AffineRoot{sys.simple_root(i), 0});
      if (sys.pairing(sys.theta(), alpha) == 0)
        hat_basis.push_back(AffineRoot{negate(sys.theta()), 1});
      long long hat = weyl_group_order(sys, hat_basis);
      long long fin = weyl_group_order(sys, parabolic_basis(sys, W_alpha_basis(sys, alpha)));
      if (hat % fin != 0 || static_cast<long long>(count) != hat / fin) {
        count_ok = false;
        detail = "alpha = " + coeff_str(sys, alpha.c) + ": " + std::to_string(count) + " vs " +
                 std::to_string(hat) + "/" + std::to_string(fin);
      }
    }
    s.check("Cor 8.9(1)", "I_ab(alpha) is exactly the interval [i(check_w_alpha), m(alpha)]",
            sandwich_ok);
    s.check("Cor 8.8", "|I_ab(alpha)| = |hat W_alpha| / |W_alpha|", count_ok, detail);
  }

  if (sys.rank() <= 4) {
    // Cor 8.8 by direct enumeration: biconvex subsets of N(w_{*,alpha}) with
    // no finite simple root, for alpha orthogonal to theta.
    bool ok = true;
    auto abelians = enumerate_abelian(sys);
    for (int p : sys.long_positive_indices()) {
      Root alpha = sys.positive_root(p);
      size_t count = 0;
      for (const Ideal& i : abelians)
        if (i.phi.any() && alpha_of(sys, i) == alpha) ++count;
      if (sys.pairing(sys.theta(), alpha) != 0) {
        if (count != 1) ok = false;
        continue;
      }
      // Phi_*(alpha) and w_{*,alpha}
      RootBits phi_star;
      for (int q = 0; q < sys.positive_count(); ++q) {
        bool all_marks = true;
        for (int a = 0; a < sys.rank(); ++a) {
          if (sys.pairing(sys.simple_root(a), alpha) == 0) continue;  // not adjacent
          if (sys.positive_root(q).c[a] != sys.mark(a)) all_marks = false;
        }
        if (all_marks) phi_star.set(q);
      }
      AffineWeylElement wstar = w_of_ideal(sys, Ideal{phi_star});
      auto nstar = inversions(sys, wstar);
      size_t found = 0;
      const size_t m = nstar.size();
      for (size_t mask = 0; mask < (size_t{1} << m); ++mask) {
        std::vector<AffineRoot> subset;
        for (size_t b = 0; b < m; ++b)
          if (mask & (size_t{1} << b)) subset.push_back(nstar[b]);
        bool has_simple = false;
        for (const AffineRoot& g : subset)
          if (g.level == 0) has_simple = true;
        if (has_simple) continue;
        if (is_biconvex(sys, subset)) ++found;
      }
      if (found != count) ok = false;
    }
    s.check("Lemma 8.1(3) / Cor 8.8",
            "direct count of {x in hat W_alpha : L_x in {alpha_0}} matches |I_ab(alpha)|", ok);
  }

  s.guarded("Cor 8.15 / Prop 6.7", "maximal elements of I_ab(tau) are the m_k(alpha)", [&] {
    for (const auto& c : classes) maximal_elements_Iab_tau(sys, c.xp);
  });

  {
    bool ok = true;
    for (const auto& c : classes) {
      if (c.xp.chain.length() == 0) continue;
      auto maxima = maximal_elements_Iab_tau(sys, c.xp);
      for (size_t i = 0; i < maxima.size(); ++i)
        for (size_t j = 0; j < maxima.size(); ++j)
          if (i != j && maxima[i].contains(maxima[j])) ok = false;
    }
    s.check("Cor 8.15", "the m_k(alpha) are pairwise incomparable", ok);
  }

  s.guarded("Cor 8.17", "alpha -> m(alpha) is a bijection onto the maximal abelian ideals",
            [&] { maximal_abelian_bijection(sys); });

  return report;
}

// --- towers ------------------------------------------------------------------

Report verify_towers(const RootSystem& sys) {
  Report report;
  Suite s(&report);
  const int g = sys.dual_coxeter();

  {
    bool strict = true, dims = true, max_match = true, remark_formula = true;
    for (int p : sys.long_positive_indices()) {
      Root alpha = sys.positive_root(p);
      GoodChain chain = maximal_good_chain(sys, alpha);
      Ideal prev;
      for (int h = 1; h <= chain.length(); ++h) {
        Ideal m = m_h(sys, alpha, h);
        if (h > 1 && !(m.contains(prev) && !(m == prev))) strict = false;
        if (dim_m_h(sys, alpha, h) != m.dim()) dims = false;
        prev = m;

        XPoint xp = xpoint_of(sys, tau_h_of_chain(sys, chain, h));
        auto [lo, hi] = extrema_Iab_tau_alpha(sys, xp, alpha);
        if (!(hi == m)) max_match = false;

        // Alternative length computation through the coset decomposition.
        int d2 = 0;
        for (int q = 0; q < sys.positive_count(); ++q)
          if (sys.pairing(xp.tau, sys.positive_root(q)) == 2) ++d2;
        WeylElement y = y_tau_alpha(sys, xp, alpha);
        WeylElement w0a = longest_element(sys, W_alpha_basis(sys, alpha));
        WeylElement w0at = longest_element(sys, W_alpha_tau_basis(sys, xp, alpha));
        int expect = d2 + length(sys, y) + length(sys, w0a) - length(sys, w0at);
        if (expect != m.dim()) remark_formula = false;
      }
    }
    s.check("Thm 8.13 (inclusions)", "m_1(alpha) < ... < m_k(alpha) strictly, all long alpha",
            strict);
    s.check("Thm 8.13 (dimension)", "closed formula equals |Phi(m_h(alpha))|, all long alpha",
            dims);
    s.check("Prop 8.11 / Prop 7.7", "i(check_w_alpha check_w_{h-1,alpha}) = max I_ab(tau_h, alpha)",
            max_match);
    s.check("coset length formula", "dim max I_ab(tau,alpha) = |Delta^2_tau| + l(y_tau,alpha) "
            "+ l(w_0^alpha) - l(w_0^alpha,tau)", remark_formula);
  }

  s.guarded("Lemma 8.12", "|Psi_h(alpha)| = g_h(alpha) - 1 at every step", [&] {
    for (int p : sys.long_positive_indices()) {
      Root alpha = sys.positive_root(p);
      GoodChain chain = maximal_good_chain(sys, alpha);
      for (int h = 1; h < chain.length(); ++h) g_h(sys, alpha, h);
    }
  });

  {
    bool ok = true, l7 = true, q7 = true;
    for (int i : sys.long_simple_indices()) {
      Root alpha = sys.simple_root(i);
      GoodChain chain = maximal_good_chain(sys, alpha);
      int suter = suter_dim(sys, alpha);
      if (suter != m_h(sys, alpha, chain.length()).dim()) ok = false;
      int ly = length(sys, y_alpha(sys, alpha));
      if (ly != g - 2) l7 = false;
      int dtheta = 0;
      for (int q = 0; q < sys.positive_count(); ++q)
        if (sys.pairing(sys.positive_root(q), sys.theta()) == 0) dtheta += 2;
      if (4 * (g - 2) != 2 * sys.positive_count() - dtheta - 2) q7 = false;
    }
    s.check("Cor 8.10", "Suter formula equals dim m_{k(alpha)}(alpha) on long simples", ok);
    s.check("Prop 7.1(3)", "l(y_alpha) = g - 2 for long simple alpha", l7);
    s.check("Prop 7.2", "g - 2 = (|Delta| - |Delta_theta| - 2)/4", q7);
  }

  {
    bool star_ok = true, nstar_ok = true;
    for (int p : sys.long_positive_indices()) {
      Root alpha = sys.positive_root(p);
      if (sys.pairing(sys.theta(), alpha) != 0) continue;
      RootBits phi_star;
      for (int q = 0; q < sys.positive_count(); ++q) {
        bool all_marks = true;
        for (int a = 0; a < sys.rank(); ++a) {
          if (sys.pairing(sys.simple_root(a), alpha) == 0) continue;
          if (sys.positive_root(q).c[a] != sys.mark(a)) all_marks = false;
        }
        if (all_marks) phi_star.set(q);
      }
      if (!is_upward_closed(sys, phi_star) || !is_abelian_set(sys, phi_star)) star_ok = false;
      // N(w_*) = hat Delta_alpha^+ minus Delta_alpha^+
      std::vector<AffineRoot> hat_basis;
      for (int i : W_alpha_basis(sys, alpha))
        hat_basis.push_back(AffineRoot{sys.simple_root(i), 0});
      hat_basis.push_back(AffineRoot{negate(sys.theta()), 1});
      SubsystemDescriptor hat{hat_basis, false};
      std::vector<AffineRoot> expect;
      for (const AffineRoot& r : subsystem_roots(sys, hat))
        if (affine_positive(r) && r.level != 0) expect.push_back(r);
      std::sort(expect.begin(), expect.end());
      auto nstar = inversions(sys, w_of_ideal(sys, Ideal{phi_star}));
      if (nstar != expect) nstar_ok = false;
    }
    s.check("Lemma 8.1(1)", "i_*(alpha) is an abelian ideal", star_ok);
    s.check("Lemma 8.1(2)", "N(w_{*,alpha}) = hat Delta_alpha^+ minus Delta_alpha^+", nstar_ok);
  }

  {
    auto golden = golden_dims(sys);
    if (!golden.empty()) {
      auto rows = tower_table(sys);
      std::map<std::pair<int, int>, int> got;
      for (const TowerRow& r : rows) got[{r.alpha, r.h}] = r.dim_explicit;
      bool ok = golden == got;
      std::string detail;
      if (!ok) {
        for (const auto& [key, val] : golden) {
          auto it = got.find(key);
          if (it == got.end())
            detail += "missing (a" + std::to_string(key.first + 1) + ",h" +
                      std::to_string(key.second) + ") ";
          else if (it->second != val)
            detail += "(a" + std::to_string(key.first + 1) + ",h" + std::to_string(key.second) +
                      "): " + std::to_string(it->second) + " vs " + std::to_string(val) + " ";
        }
        for (const auto& [key, val] : got)
          if (!golden.count(key))
            detail += "extra (a" + std::to_string(key.first + 1) + ",h" +
                      std::to_string(key.second) + ") ";
      }
      s.check("dimension tables", "computed dim m_h(alpha) grid equals the published values", ok,
              detail);

      int d = malcev_dimension(sys);
      int expect = golden_malcev(sys);
      if (expect < 0)
        for (const auto& [key, val] : golden) expect = std::max(expect, val);
      s.check("Malcev dimension d", "d = max over long simples of dim m(alpha)", d == expect,
              std::to_string(d) + " vs " + std::to_string(expect));
    } else {
      s.guarded("Malcev dimension d", "d agrees between the Suter formula and enumeration",
                [&] { malcev_dimension(sys); });
    }
  }

  return report;
}

Report verify_all(const RootSystem& sys) {
  Report report;
  for (Report r : {verify_counts(sys), verify_encodings(sys), verify_posets(sys),
                   verify_towers(sys)})
    for (Check& c : r.checks) report.checks.push_back(std::move(c));
  return report;
}

// --- the dimension table -------------------------------------------------------

std::vector<TowerRow> tower_table(const RootSystem& sys) {
  std::vector<TowerRow> rows;
  for (int i : sys.long_simple_indices()) {
    Root alpha = sys.simple_root(i);
    GoodChain chain = maximal_good_chain(sys, alpha);
    std::vector<int> gseq{sys.dual_coxeter()};
    for (int h = 1; h <= chain.length(); ++h) {
      TowerRow row;
      row.alpha = i;
      row.h = h;
      row.tau = tau_h_of_chain(sys, chain, h);
      XPoint xp = xpoint_of(sys, row.tau);
      row.tau_label = theta_sum_label(sys, xp);
      if (h < chain.length()) {
        SubsystemDescriptor hat = hat_delta_h(sys, alpha, h);
        row.hat_type = classify_subsystem(sys, hat).str();
      }
      row.g_seq = gseq;
      row.dim_formula = dim_m_h(sys, alpha, h);
      row.dim_explicit = m_h(sys, alpha, h).dim();
      rows.push_back(row);
      if (h < chain.length()) gseq.push_back(g_h(sys, alpha, h));
    }
  }
  return rows;
}

std::map<std::pair<int, int>, int> golden_dims(const RootSystem& sys) {
  std::map<std::pair<int, int>, int> out;
  const int n = sys.rank();
  auto set = [&](int alpha1, int h, int dim) { out[{alpha1 - 1, h}] = dim; };
  switch (sys.series()) {
    case Series::A:
      for (int h = 1; h <= n; ++h)
        for (int i = 1; i <= std::min(h, n - h + 1); ++i) set(h, i, i * (n - i + 1));
      break;
    case Series::B: {
      if (n < 3) return out;  // B2 carries no asserted table
      for (int h = 1; h <= n - 1; ++h) set(h, 1, 2 * n - 2);
      set(1, 2, 2 * n - 1);
      for (int h = 3; h <= n - 1; ++h) {
        int k = (h + 1) / 2;
        for (int i = 2; i <= k; ++i)
          set(h, i, i == k ? (4 * n + h * h - 3 * h - 2) / 2
                           : 2 * (n - i * i) + (i - 1) * (2 * h + 1));
      }
      break;
    }
    case Series::C:
      for (int i = 1; i <= n; ++i) set(n, i, (2 * n - i + 1) * i / 2);
      break;
    case Series::D: {
      auto fill = [&](int h, int h_display) {
        set(h, 1, 2 * n - 3);
        if (h_display == 1) set(h, 2, 2 * n - 2);
        if (h_display >= 3) {
          int k = (h_display + 1) / 2;
          for (int i = 2; i <= k; ++i)
            set(h, i, i == k ? (4 * n + h_display * h_display - 3 * h_display - 4) / 2
                             : 2 * (n - i * i) + (i - 1) * (2 * h_display + 1) - 1);
        }
      };
      for (int h = 1; h <= n - 1; ++h) fill(h, h);
      fill(n, n - 1);  // alpha_n mirrors alpha_{n-1} under the diagram flip
      break;
    }
    case Series::E:
      if (n == 6) {
        for (int h = 1; h <= 6; ++h) set(h, 1, 11);
        set(1, 2, 16);
        set(6, 2, 16);
        set(3, 2, 13);
        set(5, 2, 13);
        set(4, 2, 12);
      } else if (n == 7) {
        for (int h = 1; h <= 7; ++h) set(h, 1, 17);
        // alpha_2 is the branch node: the affine orthogonal component through
        // the extended node is an A_3 (alpha_0 - alpha_1 - alpha_3), while
        // alpha_3's is an isolated A_1; the attributions below follow from
        // that, the value multiset {18, 20, 20} is unchanged.
        set(2, 2, 20);
        set(3, 2, 18);
        set(5, 2, 20);
        set(4, 2, 19);
        set(6, 2, 22);
        set(7, 2, 26);
        set(7, 3, 27);
      } else {
        for (int h = 1; h <= 8; ++h) set(h, 1, 29);
        set(1, 2, 36);
        set(2, 2, 34);
        set(3, 2, 34);
        set(4, 2, 33);
        set(5, 2, 32);
        set(6, 2, 31);
        set(7, 2, 30);
      }
      break;
    case Series::F:
      set(1, 1, 8);
      set(2, 1, 8);
      set(2, 2, 9);
      break;
    case Series::G:
      set(2, 1, 3);
      break;
  }
  return out;
}

int golden_malcev(const RootSystem& sys) {
  const int n = sys.rank();
  switch (sys.series()) {
    case Series::A: return (n + 1) * (n + 1) / 4;
    case Series::B: return n == 2 ? -1 : (n == 3 ? 5 : n * (n - 1) / 2 + 1);
    case Series::C: return n * (n + 1) / 2;
    case Series::D: return -1;  // no separate d value published; the grid max is used
    case Series::E: return n == 6 ? 16 : (n == 7 ? 27 : 36);
    case Series::F: return 9;
    case Series::G: return 3;
  }
  return -1;
}

}  // namespace abideal
