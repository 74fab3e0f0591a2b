#include "abideal/abposets.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace abideal {

namespace {

std::vector<int> all_simples(const RootSystem& sys) {
  std::vector<int> v(sys.rank());
  for (int i = 0; i < sys.rank(); ++i) v[i] = i;
  return v;
}

std::vector<int> indices_of_basis(const RootSystem& sys, const SubsystemDescriptor& sub) {
  std::vector<int> out;
  for (const AffineRoot& b : sub.basis) {
    if (b.level != 0) throw std::logic_error("expected a finite parabolic basis");
    bool found = false;
    for (int i = 0; i < sys.rank(); ++i)
      if (b.finite == sys.simple_root(i)) {
        out.push_back(i);
        found = true;
        break;
      }
    if (!found) throw std::logic_error("basis member is not a simple root");
  }
  std::sort(out.begin(), out.end());
  return out;
}

Root parabolic_highest_root(const RootSystem& sys, const std::vector<int>& pi) {
  SubsystemDescriptor sub{parabolic_basis(sys, pi), true};
  return subsystem_highest_root(sys, sub).finite;
}

bool parabolic_contains_long(const RootSystem& sys, const std::vector<int>& pi) {
  RootBits bits = parabolic_positive(sys, pi);
  for (int p = 0; p < sys.positive_count(); ++p)
    if (bits.test(p) && sys.is_long(sys.positive_root(p))) return true;
  return false;
}

// Irreducible components of {a in pi : (alpha_a, theta) = 0}, as index sets.
std::vector<std::vector<int>> zero_pairing_components(const RootSystem& sys,
                                                      const std::vector<int>& pi,
                                                      const Root& theta) {
  std::vector<int> s;
  for (int a : pi)
    if (sys.pairing(theta, sys.simple_root(a)) == 0) s.push_back(a);
  std::vector<std::vector<int>> out;
  if (s.empty()) return out;
  for (const SubsystemDescriptor& c : components(sys, parabolic_basis(sys, s)))
    out.push_back(indices_of_basis(sys, c));
  return out;
}

// Def 5.4 (2), checked for the candidate extension at position j (0-based):
// every simple root pairing positively with theta_i, i <= j-2, must be
// orthogonal to the new member.
bool extension_respects_condition2(const RootSystem& sys, const GoodChain& chain,
                                   const std::vector<int>& candidate) {
  int j = chain.length();  // candidate lands at index j
  for (int i = 0; i + 2 <= j; ++i) {
    for (int a = 0; a < sys.rank(); ++a) {
      if (sys.pairing(chain.thetas[i], sys.simple_root(a)) <= 0) continue;
      for (int b : candidate)
        if (sys.pairing(sys.simple_root(a), sys.simple_root(b)) != 0) return false;
    }
  }
  return true;
}

bool supp_subset(const RootSystem& sys, const Root& r, const std::vector<int>& pi) {
  std::array<bool, kMaxRank> in{};
  for (int a : pi) in[a] = true;
  for (int i = 0; i < sys.rank(); ++i)
    if (r.c[i] != 0 && !in[i]) return false;
  return true;
}

}  // namespace

bool is_good_chain(const RootSystem& sys, const GoodChain& chain) {
  if (chain.length() == 0) return false;
  if (chain.pis[0] != all_simples(sys)) return false;
  for (int i = 0; i < chain.length(); ++i) {
    if (components(sys, parabolic_basis(sys, chain.pis[i])).size() != 1) return false;
    if (chain.thetas[i] != parabolic_highest_root(sys, chain.pis[i])) return false;
    if (!parabolic_contains_long(sys, chain.pis[i])) return false;  // (3)
  }
  for (int i = 1; i < chain.length(); ++i) {  // (1)
    auto comps = zero_pairing_components(sys, chain.pis[i - 1], chain.thetas[i - 1]);
    if (std::find(comps.begin(), comps.end(), chain.pis[i]) == comps.end()) return false;
  }
  for (int i = 0; i < chain.length(); ++i) {  // (2)
    for (int j = i + 2; j < chain.length(); ++j) {
      for (int a = 0; a < sys.rank(); ++a) {
        if (sys.pairing(chain.thetas[i], sys.simple_root(a)) <= 0) continue;
        for (int b : chain.pis[j])
          if (sys.pairing(sys.simple_root(a), sys.simple_root(b)) != 0) return false;
      }
    }
  }
  return true;
}

std::vector<GoodChain> enumerate_good_chains(const RootSystem& sys) {
  std::vector<GoodChain> out;
  GoodChain base;
  base.pis.push_back(all_simples(sys));
  base.thetas.push_back(sys.theta());
  auto rec = [&](auto&& self, const GoodChain& chain) -> void {
    out.push_back(chain);
    for (const auto& comp :
         zero_pairing_components(sys, chain.pis.back(), chain.thetas.back())) {
      if (!parabolic_contains_long(sys, comp)) continue;                 // (3)
      if (!extension_respects_condition2(sys, chain, comp)) continue;    // (2)
      GoodChain ext = chain;
      ext.pis.push_back(comp);
      ext.thetas.push_back(parabolic_highest_root(sys, comp));
      self(self, ext);
    }
  };
  rec(rec, base);
  return out;
}

GoodChain standard_decomposition(const RootSystem& sys, const Coroot& tau) {
  if (is_zero(tau)) throw std::invalid_argument("tau = 0 is not in X^+");
  if (!sys.is_dominant(tau)) throw std::invalid_argument("tau is not dominant, hence not in X^+");
  int tt = sys.pairing(tau, sys.theta());
  if (tt != 2)
    throw std::invalid_argument("(tau, theta) = " + std::to_string(tt) +
                                "; X^+ requires (tau, theta) = 2");
  GoodChain chain;
  std::vector<int> pi = all_simples(sys);
  Coroot rho = tau;
  while (true) {
    Root th = parabolic_highest_root(sys, pi);
    chain.pis.push_back(pi);
    chain.thetas.push_back(th);
    rho = sub(rho, sys.coroot_of(th));
    if (is_zero(rho)) break;
    auto comps = zero_pairing_components(sys, pi, th);
    const std::vector<int>* next = nullptr;
    for (const auto& c : comps) {
      std::array<bool, kMaxRank> in{};
      for (int a : c) in[a] = true;
      bool all_in = true, some_in = false;
      for (int i = 0; i < sys.rank(); ++i) {
        if (rho.c[i] == 0) continue;
        if (in[i]) some_in = true;
        else all_in = false;
      }
      if (some_in) {
        if (!all_in || next)
          throw std::invalid_argument("tau is not in X^+ (remainder not supported "
                                      "in a single orthogonal component)");
        next = &c;
      }
    }
    if (!next) throw std::invalid_argument("tau is not in X^+ (remainder unsupported)");
    pi = *next;
  }
  if (!is_good_chain(sys, chain))
    throw std::logic_error("standard decomposition produced a non-good chain");
  return chain;
}

XPoint xpoint_of(const RootSystem& sys, const Coroot& tau) {
  XPoint xp;
  xp.tau = tau;
  if (!is_zero(tau)) xp.chain = standard_decomposition(sys, tau);
  return xp;
}

std::vector<XPoint> enumerate_X(const RootSystem& sys) {
  // (a) direct lattice scan of Q^vee cap closure(2 C_1)
  std::set<Coroot> scan;
  {
    const int n = sys.rank();
    std::vector<int> p(n);
    auto rec = [&](auto&& self, int i, int partial) -> void {
      if (i == n) {
        if (auto c = coroot_from_simple_pairings(sys, p)) scan.insert(*c);
        return;
      }
      for (int v = 0; partial + v * sys.mark(i) <= 2; ++v) {
        p[i] = v;
        self(self, i + 1, partial + v * sys.mark(i));
      }
    };
    rec(rec, 0, 0);
  }
  // (b) good-chain sums
  std::map<Coroot, GoodChain> by_tau;
  for (const GoodChain& chain : enumerate_good_chains(sys)) {
    Coroot tau;
    for (const Root& th : chain.thetas) tau = add(tau, sys.coroot_of(th));
    if (!by_tau.emplace(tau, chain).second)
      throw std::logic_error("two good chains produced the same tau");
  }
  std::set<Coroot> chain_set{Coroot{}};
  for (const auto& [tau, chain] : by_tau) chain_set.insert(tau);
  if (scan != chain_set)
    throw std::logic_error("X enumeration mismatch between lattice scan and good chains");

  std::vector<XPoint> out;
  out.push_back(XPoint{Coroot{}, GoodChain{}});
  for (const auto& [tau, chain] : by_tau) out.push_back(XPoint{tau, chain});
  std::sort(out.begin(), out.end(), [](const XPoint& a, const XPoint& b) {
    if (a.chain.length() != b.chain.length()) return a.chain.length() < b.chain.length();
    return a.tau < b.tau;
  });
  return out;
}

std::vector<int> pi_tau(const XPoint& xp) {
  if (xp.chain.length() == 0) return {};
  return xp.chain.pis.back();
}

std::vector<int> pi_prime_tau(const RootSystem& sys, const XPoint& xp) {
  std::vector<int> out;
  if (xp.chain.length() == 0) return out;
  const Root& th = xp.chain.thetas.back();
  for (int a : xp.chain.pis.back())
    if (sys.pairing(th, sys.simple_root(a)) != 0) out.push_back(a);
  return out;
}

XPoint tau_of(const RootSystem& sys, const Ideal& i) {
  if (!is_abelian_set(sys, i.phi)) throw std::invalid_argument("tau_of: ideal is not abelian");
  AffineWeylElement w = w_of_ideal(sys, i);
  return xpoint_of(sys, w.tau);
}

Root alpha_of(const RootSystem& sys, const Ideal& i) {
  if (i.phi.none()) throw std::invalid_argument("alpha_of is undefined for the zero ideal");
  if (!is_abelian_set(sys, i.phi)) throw std::invalid_argument("alpha_of: ideal is not abelian");
  AffineWeylElement w = w_of_ideal(sys, i);
  Root a = w.v.inverse(sys).act(sys, negate(sys.theta()));
  if (!sys.is_positive_root(a) || !sys.is_long(a))
    throw std::logic_error("alpha_of: v^{-1}(-theta) is not a long positive root");
  return a;
}

WeylElement v_tau(const RootSystem& sys, const XPoint& xp) {
  std::vector<int> prime = pi_prime_tau(sys, xp);
  std::array<bool, kMaxRank> in{};
  for (int a : prime) in[a] = true;
  std::vector<int> complement;
  for (int i = 0; i < sys.rank(); ++i)
    if (!in[i]) complement.push_back(i);
  return longest_element(sys, complement).compose(sys, longest_element(sys, all_simples(sys)));
}

Ideal min_Iab_tau(const RootSystem& sys, const XPoint& xp) {
  Ideal ideal;
  int even = 0, zero = 0;
  for (int p = 0; p < sys.positive_count(); ++p) {
    int pr = sys.pairing(xp.tau, sys.positive_root(p));
    if (pr == 2) ideal.phi.set(p);
    if (pr % 2 == 0) ++even;
    if (pr == 0) ++zero;
  }
  if (!is_upward_closed(sys, ideal.phi) || !is_abelian_set(sys, ideal.phi))
    throw std::logic_error("min_Iab_tau: Delta^2_tau is not an abelian ideal");
  // dim = (|Delta_tau^even| - |Delta_tau^0|)/2, counting both signs.
  if (ideal.dim() != (2 * even - 2 * zero) / 2)
    throw std::logic_error("min_Iab_tau: dimension identity fails");
  Ideal via_w = ideal_of_w(sys, AffineWeylElement{xp.tau, v_tau(sys, xp)});
  if (!(via_w == ideal)) throw std::logic_error("min_Iab_tau: i(t_tau v_tau) != Delta^2_tau");
  return ideal;
}

GoodChain maximal_good_chain(const RootSystem& sys, const Root& alpha) {
  if (!sys.is_positive_root(alpha) || !sys.is_long(alpha))
    throw std::invalid_argument("maximal_good_chain requires a long positive root");
  GoodChain chain;
  chain.pis.push_back(all_simples(sys));
  chain.thetas.push_back(sys.theta());
  while (true) {
    auto comps = zero_pairing_components(sys, chain.pis.back(), chain.thetas.back());
    const std::vector<int>* next = nullptr;
    for (const auto& c : comps)
      if (supp_subset(sys, alpha, c)) { next = &c; break; }
    if (!next) break;
    if (!parabolic_contains_long(sys, *next)) break;                 // (3)
    if (!extension_respects_condition2(sys, chain, *next)) break;    // (2)
    chain.pis.push_back(*next);
    chain.thetas.push_back(parabolic_highest_root(sys, *next));
  }
  return chain;
}

Coroot tau_h_of_chain(const RootSystem& sys, const GoodChain& chain, int h) {
  if (h < 1 || h > chain.length()) throw std::invalid_argument("tau_h: h out of range");
  Coroot t;
  for (int i = 0; i < h; ++i) t = add(t, sys.coroot_of(chain.thetas[i]));
  return t;
}

std::vector<Coroot> X_alpha(const RootSystem& sys, const Root& alpha) {
  GoodChain chain = maximal_good_chain(sys, alpha);
  std::vector<Coroot> out;
  for (int h = 1; h <= chain.length(); ++h) out.push_back(tau_h_of_chain(sys, chain, h));
  return out;
}

WeylElement y_alpha(const RootSystem& sys, const Root& alpha) {
  if (!sys.is_root(alpha) || !sys.is_long(alpha))
    throw std::invalid_argument("y_alpha requires a long root");
  RootBits n;
  for (int p = 0; p < sys.positive_count(); ++p)
    if (sys.pairing(sys.positive_root(p), alpha) == -1) n.set(p);
  WeylElement y = element_from_inversions(sys, n).inverse(sys);
  if (y.act(sys, alpha) != sys.theta()) throw std::logic_error("y_alpha(alpha) != theta");
  return y;
}

WeylElement y_tau_alpha(const RootSystem& sys, const XPoint& xp, const Root& alpha) {
  if (xp.chain.length() == 0) throw std::invalid_argument("y_tau_alpha needs tau in X^+");
  const std::vector<int> pi = pi_tau(xp);
  if (!supp_subset(sys, alpha, pi) || !sys.is_positive_root(alpha) || !sys.is_long(alpha))
    throw std::invalid_argument("y_tau_alpha requires alpha in Delta_l^+(tau)");
  RootBits para = parabolic_positive(sys, pi);
  RootBits n;
  for (int p = 0; p < sys.positive_count(); ++p)
    if (para.test(p) && sys.pairing(sys.positive_root(p), alpha) == -1) n.set(p);
  WeylElement y = element_from_inversions(sys, n).inverse(sys);
  if (y.act(sys, alpha) != xp.chain.thetas.back())
    throw std::logic_error("y_tau_alpha(alpha) != theta(tau)");
  return y;
}

AffineWeylElement check_w_alpha(const RootSystem& sys, const Root& alpha) {
  if (!sys.is_positive_root(alpha) || !sys.is_long(alpha))
    throw std::invalid_argument("check_w_alpha requires a long positive root");
  AffineWeylElement s0 = AffineWeylElement::simple_reflection(sys, 0);
  AffineWeylElement y{Coroot{}, y_alpha(sys, alpha)};
  return s0.compose(sys, y);
}

std::vector<int> W_alpha_basis(const RootSystem& sys, const Root& alpha) {
  std::vector<int> out;
  for (int i = 0; i < sys.rank(); ++i)
    if (sys.pairing(sys.simple_root(i), alpha) == 0) out.push_back(i);
  return out;
}

std::vector<int> P_tau_alpha(const RootSystem& sys, const XPoint& xp, const Root& alpha) {
  std::vector<int> out;
  const std::vector<int> pi = pi_tau(xp);
  std::array<bool, kMaxRank> in_pi{};
  for (int a : pi) in_pi[a] = true;
  for (int b = 0; b < sys.rank(); ++b) {
    if (in_pi[b]) continue;
    if (sys.pairing(sys.simple_root(b), alpha) != 0) continue;
    bool perp_delta_tau = true;
    for (int a : pi)
      if (sys.pairing(sys.simple_root(b), sys.simple_root(a)) != 0) {
        perp_delta_tau = false;
        break;
      }
    if (!perp_delta_tau) out.push_back(b);
  }
  return out;
}

std::vector<int> W_alpha_tau_basis(const RootSystem& sys, const XPoint& xp, const Root& alpha) {
  std::vector<int> p = P_tau_alpha(sys, xp, alpha);
  std::array<bool, kMaxRank> drop{};
  for (int b : p) drop[b] = true;
  std::vector<int> out;
  for (int i : W_alpha_basis(sys, alpha))
    if (!drop[i]) out.push_back(i);
  return out;
}

std::pair<Ideal, Ideal> extrema_Iab_tau_alpha(const RootSystem& sys, const XPoint& xp,
                                              const Root& alpha) {
  if (xp.chain.length() == 0 || !sys.is_positive_root(alpha) || !sys.is_long(alpha) ||
      !supp_subset(sys, alpha, pi_tau(xp)))
    throw std::invalid_argument("empty poset: I_ab(tau, alpha) is nonempty iff "
                                "alpha lies in Delta_l^+(tau)");
  WeylElement vt = v_tau(sys, xp);
  WeylElement y = y_tau_alpha(sys, xp, alpha);
  Ideal lo = ideal_of_w(sys, AffineWeylElement{xp.tau, vt.compose(sys, y)});

  WeylElement w0a = longest_element(sys, W_alpha_basis(sys, alpha));
  WeylElement w0at = longest_element(sys, W_alpha_tau_basis(sys, xp, alpha));
  WeylElement ycheck = y.compose(sys, w0at).compose(sys, w0a);
  Ideal hi = ideal_of_w(sys, AffineWeylElement{xp.tau, vt.compose(sys, ycheck)});

  for (const Ideal& i : {lo, hi}) {
    if (!(tau_of(sys, i).tau == xp.tau) || !(alpha_of(sys, i) == alpha))
      throw std::logic_error("extrema_Iab_tau_alpha: computed ideal leaves I_ab(tau, alpha)");
  }
  if (!hi.contains(lo)) throw std::logic_error("extrema_Iab_tau_alpha: min not below max");
  return {lo, hi};
}

RootBits psi_h(const RootSystem& sys, const Root& alpha, int h) {
  GoodChain chain = maximal_good_chain(sys, alpha);
  if (h < 1 || h >= chain.length())
    throw std::invalid_argument("psi_h: h must satisfy 1 <= h < k(alpha)");
  const std::vector<int>& pi = chain.pis[h - 1];
  const Root& th = chain.thetas[h - 1];
  std::vector<int> aperp = W_alpha_basis(sys, alpha);
  RootBits para = parabolic_positive(sys, pi);
  RootBits out;
  for (int p = 0; p < sys.positive_count(); ++p) {
    if (!para.test(p)) continue;
    const Root& r = sys.positive_root(p);
    if (r == th) {
      out.set(p);
      continue;
    }
    Root diff = sub(th, r);
    if (sys.is_root(diff) && supp_subset(sys, diff, aperp)) out.set(p);
  }
  return out;
}

RootBits phi_h(const RootSystem& sys, const Root& alpha, int h) {
  RootBits out;
  for (int i = 1; i <= h; ++i) out |= psi_h(sys, alpha, i);
  return out;
}

Ideal m_h(const RootSystem& sys, const Root& alpha, int h) {
  GoodChain chain = maximal_good_chain(sys, alpha);
  if (h < 1 || h > chain.length())
    throw std::invalid_argument("m_h: h must satisfy 1 <= h <= k(alpha) = " +
                                std::to_string(chain.length()));
  Ideal lower{phi_h(sys, alpha, h - 1)};
  if (!is_upward_closed(sys, lower.phi) || !is_abelian_set(sys, lower.phi))
    throw std::logic_error("m_h: Phi_{h-1}(alpha) is not an abelian ideal");
  AffineWeylElement w_lower = w_of_ideal(sys, lower);
  AffineWeylElement w = check_w_alpha(sys, alpha).compose(sys, w_lower);
  Ideal m = ideal_of_w(sys, w);
  if (!is_abelian_set(sys, m.phi)) throw std::logic_error("m_h: result is not abelian");
  return m;
}

SubsystemDescriptor hat_delta_h(const RootSystem& sys, const Root& alpha, int h) {
  GoodChain chain = maximal_good_chain(sys, alpha);
  if (h < 1 || h >= chain.length())
    throw std::invalid_argument("g_h/hat_delta_h need 1 <= h < k(alpha) = " +
                                std::to_string(chain.length()));
  const Root& th = chain.thetas[h - 1];
  if (sys.pairing(th, alpha) != 0)
    throw std::logic_error("hat_delta_h: theta_h(alpha) not orthogonal to alpha");
  std::vector<AffineRoot> basis;
  for (int a : chain.pis[h - 1])
    if (sys.pairing(sys.simple_root(a), alpha) == 0)
      basis.push_back(AffineRoot{sys.simple_root(a), 0});
  AffineRoot affine{negate(th), 1};
  basis.push_back(affine);
  for (const SubsystemDescriptor& c : components(sys, basis))
    for (const AffineRoot& b : c.basis)
      if (b == affine) return c;
  throw std::logic_error("hat_delta_h: affine node lost");
}

int g_h(const RootSystem& sys, const Root& alpha, int h) {
  int g = subsystem_dual_coxeter(sys, hat_delta_h(sys, alpha, h));
  int psi = static_cast<int>(psi_h(sys, alpha, h).count());
  if (psi != g - 1)
    throw std::logic_error("|Psi_h(alpha)| = " + std::to_string(psi) + " but g_h - 1 = " +
                           std::to_string(g - 1));
  return g;
}

int dim_m_h(const RootSystem& sys, const Root& alpha, int h) {
  GoodChain chain = maximal_good_chain(sys, alpha);
  if (h < 1 || h > chain.length()) throw std::invalid_argument("dim_m_h: h out of range");
  int base = 1;  // l(check_w_alpha) = 1 + l(y_alpha); equals g-1 for simple alpha
  for (int p = 0; p < sys.positive_count(); ++p)
    if (sys.pairing(sys.positive_root(p), alpha) == -1) ++base;
  int dim = base;
  for (int i = 1; i < h; ++i) dim += g_h(sys, alpha, i) - 1;
  return dim;
}

int suter_dim(const RootSystem& sys, const Root& alpha) {
  bool simple_long = sys.is_long(alpha) && [&] {
    for (int i = 0; i < sys.rank(); ++i)
      if (alpha == sys.simple_root(i)) return true;
    return false;
  }();
  if (!simple_long) throw std::invalid_argument("suter_dim requires a long simple root");

  std::vector<AffineRoot> basis;
  for (int i : W_alpha_basis(sys, alpha)) basis.push_back(AffineRoot{sys.simple_root(i), 0});
  bool perp_theta = sys.pairing(sys.theta(), alpha) == 0;
  AffineRoot a0{negate(sys.theta()), 1};
  if (perp_theta) basis.push_back(a0);
  SubsystemDescriptor hat{basis, false};
  int hat_count = static_cast<int>(subsystem_roots(sys, hat).size());
  int fin_count = 2 * static_cast<int>(parabolic_positive(sys, W_alpha_basis(sys, alpha)).count());
  int dim = sys.dual_coxeter() - 1 + (hat_count - fin_count) / 2;

  if (perp_theta) {
    // Second form through the component of the affine node.
    for (const SubsystemDescriptor& c : components(sys, basis)) {
      bool has_a0 = false;
      for (const AffineRoot& b : c.basis) has_a0 |= (b == a0);
      if (!has_a0) continue;
      auto roots = subsystem_roots(sys, c);
      int zero_level = 0;
      for (const AffineRoot& r : roots)
        if (r.level == 0) ++zero_level;
      int dim2 = sys.dual_coxeter() - 1 + (static_cast<int>(roots.size()) - zero_level) / 2;
      if (dim2 != dim) throw std::logic_error("suter_dim: the two forms disagree");
    }
  }
  return dim;
}

int malcev_dimension(const RootSystem& sys) {
  int best = 0;
  for (int i : sys.long_simple_indices()) best = std::max(best, suter_dim(sys, sys.simple_root(i)));
  int via_enum = 0;
  for (const Ideal& i : enumerate_abelian(sys)) via_enum = std::max(via_enum, i.dim());
  if (best != via_enum)
    throw std::logic_error("malcev_dimension: formula max " + std::to_string(best) +
                           " != enumerated max " + std::to_string(via_enum));
  return best;
}

std::vector<std::pair<int, Ideal>> maximal_abelian_bijection(const RootSystem& sys) {
  std::vector<std::pair<int, Ideal>> out;
  std::set<RootBits, decltype(&bits_less)> seen(&bits_less);
  for (int i : sys.long_simple_indices()) {
    GoodChain chain = maximal_good_chain(sys, sys.simple_root(i));
    Ideal m = m_h(sys, sys.simple_root(i), chain.length());
    if (!seen.insert(m.phi).second)
      throw std::logic_error("maximal_abelian_bijection: images collide");
    out.emplace_back(i, m);
  }
  std::set<RootBits, decltype(&bits_less)> maximal(&bits_less);
  for (const Ideal& i : enumerate_abelian(sys))
    if (is_maximal_abelian(sys, i)) maximal.insert(i.phi);
  if (maximal != seen)
    throw std::logic_error("maximal_abelian_bijection: image differs from the maximal ideals");
  return out;
}

std::vector<AbelianClass> partition_abelian(const RootSystem& sys) {
  std::map<Coroot, AbelianClass> classes;
  for (const Ideal& i : enumerate_abelian(sys)) {
    XPoint xp = tau_of(sys, i);
    auto [it, fresh] = classes.try_emplace(xp.tau);
    if (fresh) it->second.xp = xp;
    it->second.ideals.push_back(i);
    if (i.phi.any()) it->second.by_alpha[alpha_of(sys, i)].push_back(i);
  }
  std::vector<AbelianClass> out;
  for (auto& [tau, cls] : classes) out.push_back(std::move(cls));
  std::sort(out.begin(), out.end(), [](const AbelianClass& a, const AbelianClass& b) {
    if (a.xp.chain.length() != b.xp.chain.length())
      return a.xp.chain.length() < b.xp.chain.length();
    return a.xp.tau < b.xp.tau;
  });
  return out;
}

std::vector<Ideal> maximal_elements_Iab_tau(const RootSystem& sys, const XPoint& xp) {
  std::vector<Ideal> members;
  for (const Ideal& i : enumerate_abelian(sys))
    if (tau_of(sys, i).tau == xp.tau) members.push_back(i);
  if (members.empty()) throw std::invalid_argument("tau is not in X");

  std::vector<Ideal> maxima;
  for (const Ideal& i : members) {
    bool top = true;
    for (const Ideal& j : members)
      if (!(i == j) && j.contains(i)) { top = false; break; }
    if (top) maxima.push_back(i);
  }
  std::sort(maxima.begin(), maxima.end(), ideal_less);

  // Cross-check: the maxima are exactly m_k(alpha), alpha in Pi_l(tau).
  std::vector<Ideal> expected;
  if (xp.chain.length() == 0) {
    expected.push_back(Ideal{});
  } else {
    int k = xp.chain.length();
    for (int a : pi_tau(xp)) {
      if (!sys.is_long(sys.simple_root(a))) continue;
      GoodChain ca = maximal_good_chain(sys, sys.simple_root(a));
      if (!(tau_h_of_chain(sys, ca, k) == xp.tau))
        throw std::logic_error("maximal_elements: chain of tau is not a prefix of alpha's");
      expected.push_back(m_h(sys, sys.simple_root(a), k));
    }
    std::sort(expected.begin(), expected.end(), ideal_less);
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
  }
  if (maxima != expected)
    throw std::logic_error("maximal elements of I_ab(tau) differ from {m_k(alpha)}");
  return maxima;
}

std::string coweight_label(const RootSystem& sys, const Coroot& tau) {
  std::string out;
  for (int i = 0; i < sys.rank(); ++i) {
    int p = sys.pairing(tau, sys.simple_root(i));
    if (p == 0) continue;
    if (!out.empty()) out += "+";
    if (p != 1) out += std::to_string(p);
    out += "ω∨_" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

std::string theta_sum_label(const RootSystem& sys, const XPoint& xp) {
  if (xp.chain.length() == 0) return "0";
  std::string out = "θ∨";
  for (int i = 1; i < xp.chain.length(); ++i) {
    SubsystemDescriptor sub{parabolic_basis(sys, xp.chain.pis[i]), true};
    out += "+θ∨(" + classify_subsystem(sys, sub).str() + ")";
  }
  return out;
}

}  // namespace abideal
