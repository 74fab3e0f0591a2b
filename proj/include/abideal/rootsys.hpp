#pragma once

#include <array>
#include <bitset>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "abideal/rational.hpp"

namespace abideal {

inline constexpr int kMaxRank = 8;
inline constexpr int kMaxPositive = 120;  // E8

// Index set over the canonical positive-root ordering of a RootSystem.
using RootBits = std::bitset<kMaxPositive>;

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

std::optional<Series> series_from_char(char c);
inline char to_char(Series s) { return static_cast<char>(s); }

// Integer coordinates over the simple-root basis (Root) or the
// simple-coroot basis (Coroot). Entries beyond the system rank stay zero.
using Coeff = std::array<int16_t, kMaxRank>;

struct Root {
  Coeff c{};
  auto operator<=>(const Root&) const = default;
};

struct Coroot {
  Coeff c{};
  auto operator<=>(const Coroot&) const = default;
};

// Real affine root `finite + level*delta`. The finite part is never zero.
struct AffineRoot {
  Root finite{};
  int16_t level = 0;
  bool operator==(const AffineRoot&) const = default;
  bool operator<(const AffineRoot& o) const {
    if (level != o.level) return level < o.level;
    return finite < o.finite;
  }
};

struct CartanDatum {
  Series series = Series::A;
  int rank = 0;
  // a[i][j] = <alpha_j, alpha_i^vee>, Bourbaki numbering (0-based internally).
  std::array<std::array<int, kMaxRank>, kMaxRank> a{};
};

// Immutable table of a finite crystallographic root system. The bilinear
// form is normalized so that (theta, theta) = 2; exact rationals carry the
// short-root scales (down to 1/3 in G2).
class RootSystem {
 public:
  static RootSystem build(Series series, int rank);

  Series series() const { return datum_.series; }
  int rank() const { return datum_.rank; }
  const CartanDatum& datum() const { return datum_; }
  std::string name() const;  // e.g. "A2", "E8"

  int positive_count() const { return static_cast<int>(positive_.size()); }
  const std::vector<Root>& positive_roots() const { return positive_; }
  const Root& positive_root(int idx) const { return positive_.at(idx); }
  Root simple_root(int i) const;
  Coroot simple_coroot(int i) const;

  // Index of a positive root in the canonical (height, lex) order.
  int index_of(const Root& r) const;  // throws if not a positive root
  std::optional<int> find_index(const Root& r) const;
  bool is_root(const Root& r) const;
  bool is_positive_root(const Root& r) const;
  int height(const Root& r) const;

  // Integral pairings.
  int pairing_with_simple_coroot(const Root& b, int i) const;  // <b, alpha_i^vee>
  int pairing(const Root& b, const Root& a) const;             // <b, a^vee>
  int pairing(const Coroot& t, const Root& b) const;           // (t, b)

  // The invariant bilinear form with (theta, theta) = 2.
  Rational form(const Root& x, const Root& y) const;
  Rational form(const Coroot& x, const Coroot& y) const;
  Rational form(const Coroot& t, const Root& b) const;  // integer-valued

  Coroot coroot_of(const Root& r) const;
  Rational length2(const Root& r) const;  // (r, r)
  bool is_long(const Root& r) const;      // (r, r) == (theta, theta)
  bool is_short(const Root& r) const { return !is_long(r); }
  bool simply_laced() const { return simply_laced_; }

  const Root& theta() const { return positive_[theta_idx_]; }
  const Root& theta_short() const { return positive_[theta_short_idx_]; }
  int theta_index() const { return theta_idx_; }

  int mark(int i) const;     // m_i, coefficient of theta over alpha_i
  int comark(int i) const;   // m_i^vee
  int dual_coxeter() const { return g_; }

  bool is_dominant(const Root& r) const;
  bool is_dominant(const Coroot& t) const;
  std::vector<Root> dominant_roots() const;  // exactly {theta, theta_short}

  // Root poset: b <= g iff g - b is a nonnegative combination of simples.
  bool root_leq(const Root& b, const Root& g) const;
  const RootBits& upper_set(int idx) const { return up_[idx]; }    // {j : root_j >= root_idx}
  const RootBits& lower_set(int idx) const { return down_[idx]; }  // {j : root_j <= root_idx}

  // Index of positive_root(i) + positive_root(j), or -1 if not a root.
  int sum_index(int i, int j) const { return sum_[i][j]; }

  // Long positive roots / long simple roots (Bourbaki 0-based indices).
  std::vector<int> long_positive_indices() const;
  std::vector<int> long_simple_indices() const;

 private:
  RootSystem() = default;
  void generate();

  CartanDatum datum_{};
  std::vector<Root> positive_;
  std::map<Coeff, int> index_;
  std::array<Rational, kMaxRank> d_{};  // d_i = (alpha_i, alpha_i)/2
  int theta_idx_ = -1;
  int theta_short_idx_ = -1;
  std::array<int, kMaxRank> marks_{};
  std::array<int, kMaxRank> comarks_{};
  int g_ = 0;
  bool simply_laced_ = true;
  std::vector<int> heights_;
  std::vector<RootBits> up_, down_;
  std::vector<std::array<int16_t, kMaxPositive>> sum_;
};

// --- Subsystems ------------------------------------------------------------

// A sub-root-system given by a basis of mutually obtuse roots; basis members
// may carry a delta-level (e.g. -theta_i + delta) in affine constructions.
struct SubsystemDescriptor {
  std::vector<AffineRoot> basis;
  bool irreducible = false;
};

AffineRoot reflect(const RootSystem& sys, const AffineRoot& r, const AffineRoot& mirror);

// Partition of a mutually-obtuse basis set into irreducible components,
// ordered by least basis member. Throws if the input is not pairwise obtuse.
std::vector<SubsystemDescriptor> components(const RootSystem& sys,
                                            const std::vector<AffineRoot>& basis);

// All roots of the subsystem generated by the basis (reflection closure).
std::vector<AffineRoot> subsystem_roots(const RootSystem& sys, const SubsystemDescriptor& sub);

// The unique basis-dominant long root of an irreducible subsystem.
AffineRoot subsystem_highest_root(const RootSystem& sys, const SubsystemDescriptor& sub);

// 1 + sum of comarks of the subsystem's own highest root; intrinsic, no
// type classification involved.
int subsystem_dual_coxeter(const RootSystem& sys, const SubsystemDescriptor& sub);

struct TypeLabel {
  char series = '?';
  int rank = 0;
  std::string str() const { return std::string(1, series) + std::to_string(rank); }
};

// Intrinsic classification from (rank, root count, length counts); used only
// for display labels and Weyl group orders. Rank-2 B/C ambiguity is resolved
// by basis order: long root first reads as B2, otherwise C2.
TypeLabel classify_subsystem(const RootSystem& sys, const SubsystemDescriptor& sub);

// |W(basis)| as a product over irreducible components.
long long weyl_group_order(const RootSystem& sys, const std::vector<AffineRoot>& basis);

// Convenience: basis of the standard parabolic on a set of simple indices.
std::vector<AffineRoot> parabolic_basis(const RootSystem& sys, const std::vector<int>& simples);

// The coroot-lattice point with prescribed simple-root pairings
// (t, alpha_i) = p_i, or nullopt when the exact solution is not integral.
std::optional<Coroot> coroot_from_simple_pairings(const RootSystem& sys,
                                                  const std::vector<int>& p);

// Positive roots of the standard parabolic (support contained in `simples`).
RootBits parabolic_positive(const RootSystem& sys, const std::vector<int>& simples);

// --- small vector helpers ----------------------------------------------------

Root add(const Root& x, const Root& y);
Root sub(const Root& x, const Root& y);
Root negate(const Root& x);
Coroot add(const Coroot& x, const Coroot& y);
Coroot sub(const Coroot& x, const Coroot& y);
Coroot negate(const Coroot& x);
bool is_zero(const Coeff& c);
inline bool is_zero(const Root& r) { return is_zero(r.c); }
inline bool is_zero(const Coroot& t) { return is_zero(t.c); }

std::string coeff_str(const RootSystem& sys, const Coeff& c);

}  // namespace abideal
