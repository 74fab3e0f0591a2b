#pragma once

#include <map>
#include <utility>
#include <vector>

#include "abideal/ideals.hpp"

namespace abideal {

// Nested chain Delta = Delta_1 > ... > Delta_k of standard parabolic
// irreducible subsystems, stored by simple-root index sets, with the
// highest root of each member.
struct GoodChain {
  std::vector<std::vector<int>> pis;  // sorted simple indices, pis[0] = full
  std::vector<Root> thetas;
  int length() const { return static_cast<int>(pis.size()); }
};

// tau in Q^vee lying in the closure of twice the fundamental alcove,
// together with its standard orthogonal decomposition (empty for tau = 0).
struct XPoint {
  Coroot tau{};
  GoodChain chain;
};

bool is_good_chain(const RootSystem& sys, const GoodChain& chain);

// All good chains (every prefix of a maximal one is emitted as well).
std::vector<GoodChain> enumerate_good_chains(const RootSystem& sys);

// X computed two independent ways (lattice scan of Q^vee cap closure(2 C_1)
// versus good-chain sums); the methods must agree. Includes tau = 0.
std::vector<XPoint> enumerate_X(const RootSystem& sys);

// Standard orthogonal decomposition of tau (Prop-5.6-style peeling).
// Throws std::invalid_argument if tau is not in X^+.
GoodChain standard_decomposition(const RootSystem& sys, const Coroot& tau);

// XPoint for a given tau (0 allowed).
XPoint xpoint_of(const RootSystem& sys, const Coroot& tau);

// Pi(tau), Pi'(tau), theta(tau) of the last chain member (empty for tau=0).
std::vector<int> pi_tau(const XPoint& xp);
std::vector<int> pi_prime_tau(const RootSystem& sys, const XPoint& xp);

// Translation part of w_i as an XPoint; i abelian.
XPoint tau_of(const RootSystem& sys, const Ideal& i);
// alpha = w_i^{-1}(-theta + 2 delta), a long positive root; i abelian, nonzero.
Root alpha_of(const RootSystem& sys, const Ideal& i);

// v_tau = w_0^I w_0 with I = Pi'(tau); an involution.
WeylElement v_tau(const RootSystem& sys, const XPoint& xp);
// min I_ab(tau): Phi = {beta > 0 : (beta, tau) = 2}; dimension identity of
// the even/zero count is asserted internally.
Ideal min_Iab_tau(const RootSystem& sys, const XPoint& xp);

// The unique maximal good chain all of whose members contain alpha.
GoodChain maximal_good_chain(const RootSystem& sys, const Root& alpha);
Coroot tau_h_of_chain(const RootSystem& sys, const GoodChain& chain, int h);  // 1-based prefix sum
std::vector<Coroot> X_alpha(const RootSystem& sys, const Root& alpha);

// Minimal-length element mapping alpha to theta; N(y^-1) = {b : <b,a^vee> = -1}.
WeylElement y_alpha(const RootSystem& sys, const Root& alpha);
// Relative version inside Delta(tau), mapping alpha to theta(tau).
WeylElement y_tau_alpha(const RootSystem& sys, const XPoint& xp, const Root& alpha);

// w-check_alpha = s_0 y_alpha = t_{theta^vee} y_alpha s_alpha; its ideal is
// the unique element of I_ab(theta^vee, alpha).
AffineWeylElement check_w_alpha(const RootSystem& sys, const Root& alpha);

// P_{tau,alpha} and the coset groups of Prop 7.7.
std::vector<int> W_alpha_basis(const RootSystem& sys, const Root& alpha);  // Pi cap alpha-perp
std::vector<int> P_tau_alpha(const RootSystem& sys, const XPoint& xp, const Root& alpha);
std::vector<int> W_alpha_tau_basis(const RootSystem& sys, const XPoint& xp, const Root& alpha);

// (min, max) of I_ab(tau, alpha); throws std::invalid_argument("empty poset")
// when alpha is not a long positive root of Delta(tau).
std::pair<Ideal, Ideal> extrema_Iab_tau_alpha(const RootSystem& sys, const XPoint& xp,
                                              const Root& alpha);

// Psi_h / Phi_h root sets of the explicit maximal-element construction.
RootBits psi_h(const RootSystem& sys, const Root& alpha, int h);
RootBits phi_h(const RootSystem& sys, const Root& alpha, int h);

// m_h(alpha) = max I_ab(tau_h(alpha), alpha) = i(check_w_alpha * check_w_{h-1,alpha}).
Ideal m_h(const RootSystem& sys, const Root& alpha, int h);

// Affine subsystem component of (Pi_h cup {-theta_h + delta}) cap alpha-perp
// containing -theta_h + delta (1 <= h < k(alpha)), and its dual Coxeter number.
SubsystemDescriptor hat_delta_h(const RootSystem& sys, const Root& alpha, int h);
int g_h(const RootSystem& sys, const Root& alpha, int h);

// Closed dimension formula: l(check_w_alpha) + sum_{i<h} (g_i(alpha)-1);
// the first term equals g-1 when alpha is simple.
int dim_m_h(const RootSystem& sys, const Root& alpha, int h);

// dim m(alpha) = g - 1 + (|hat Delta_alpha| - |Delta_alpha|)/2, alpha simple long.
int suter_dim(const RootSystem& sys, const Root& alpha);

// Maximal dimension of an abelian ideal; checked against enumeration.
int malcev_dimension(const RootSystem& sys);

// alpha -> m(alpha) over long simple roots; a bijection onto the maximal
// abelian ideals (checked internally).
std::vector<std::pair<int, Ideal>> maximal_abelian_bijection(const RootSystem& sys);

// Maximal elements of I_ab(tau): direct poset maxima, cross-checked against
// {m_k(alpha) : alpha in Pi_l(tau)}.
std::vector<Ideal> maximal_elements_Iab_tau(const RootSystem& sys, const XPoint& xp);

// Partition helpers over the abelian ideals.
struct AbelianClass {
  XPoint xp;
  std::vector<Ideal> ideals;                  // all of I_ab(tau)
  std::map<Root, std::vector<Ideal>> by_alpha;  // refined by alpha_of
};
std::vector<AbelianClass> partition_abelian(const RootSystem& sys);

// Display labels.
std::string coweight_label(const RootSystem& sys, const Coroot& tau);   // "w1+w6" style
std::string theta_sum_label(const RootSystem& sys, const XPoint& xp);   // "t+t(D6)" style

}  // namespace abideal
