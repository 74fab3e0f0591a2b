#pragma once

#include <vector>

#include "abideal/weyl.hpp"

namespace abideal {

// Ad-nilpotent ideal of the Borel, as the upward-closed set of positive
// roots whose root spaces it contains. Bits follow the canonical
// positive-root order of the ambient RootSystem.
struct Ideal {
  RootBits phi;
  int dim() const { return static_cast<int>(phi.count()); }
  bool operator==(const Ideal&) const = default;
  bool contains(const Ideal& other) const { return (other.phi & ~phi).none(); }
};

// Strict total order matching the enumeration contract: by size, then by
// bit pattern (low indices least significant).
bool ideal_less(const Ideal& a, const Ideal& b);
bool bits_less(const RootBits& a, const RootBits& b);

bool is_upward_closed(const RootSystem& sys, const RootBits& phi);
bool is_abelian_set(const RootSystem& sys, const RootBits& phi);

// All ad-nilpotent ideals, enumerated through their antichains of minimal
// elements; canonical (size, pattern) order.
std::vector<Ideal> enumerate_ad_nilpotent(const RootSystem& sys);
// The abelian ones; Peterson: exactly 2^rank of them.
std::vector<Ideal> enumerate_abelian(const RootSystem& sys);

// Descending central series layers: Phi^1 = Phi, Phi^k = (Phi^{k-1}+Phi) cap Delta.
struct Filtration {
  std::vector<RootBits> layers;  // nonempty layers only
};
Filtration filtration(const RootSystem& sys, const Ideal& i);
// Number of nonempty layers; 0 for the zero ideal (by convention).
int nilpotence_index(const RootSystem& sys, const Ideal& i);

// L(i) = union_k (-Phi^k + k delta), the inversion set of w_i.
std::vector<AffineRoot> inversion_set_of_ideal(const RootSystem& sys, const Ideal& i);

// The unique w with N(w) = L(i); verifies the round trip internally.
AffineWeylElement w_of_ideal(const RootSystem& sys, const Ideal& i);

// Inverse of the encoding: reads Phi off the level-1 layer of N(w).
// Throws std::invalid_argument if w is not an encoded element, naming the
// violated membership condition.
Ideal ideal_of_w(const RootSystem& sys, const AffineWeylElement& w);

bool is_W_element(const RootSystem& sys, const AffineWeylElement& w);
bool is_Wab_element(const RootSystem& sys, const AffineWeylElement& w);

// F: t_tau v -> v^{-1}(tau), the bijection with the simplex D.
Coroot F_map(const RootSystem& sys, const AffineWeylElement& w);
bool in_D(const RootSystem& sys, const Coroot& s);
bool in_Dab(const RootSystem& sys, const Coroot& s);
bool in_Dprime_j(const RootSystem& sys, const Coroot& s, int j);
bool in_Dj(const RootSystem& sys, const Coroot& s, int j);  // D_j = D'_j cap D

// Bounded lattice scans (independent of the encoding).
std::vector<Coroot> enumerate_D_points(const RootSystem& sys);
std::vector<Coroot> enumerate_Dab_points(const RootSystem& sys);

// Antichain of minimal elements of Phi.
std::vector<Root> generators(const RootSystem& sys, const Ideal& i);
// Same set read off w_i: {beta : w_i(alpha) = beta - delta, alpha simple affine}.
std::vector<Root> generators_via_w(const RootSystem& sys, const Ideal& i);

// Maximality of an abelian ideal via w_i(hat Pi) cap (Delta^- + delta) = empty.
bool is_maximal_abelian(const RootSystem& sys, const Ideal& i);
// Equivalent coordinates test on F(w_i).
bool is_maximal_abelian_via_coords(const RootSystem& sys, const Ideal& i);

}  // namespace abideal
