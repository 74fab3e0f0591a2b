#pragma once

#include <utility>
#include <vector>

#include "abideal/rootsys.hpp"

namespace abideal {

// Finite Weyl group element, stored as the images of the simple roots.
// Equality of images is the canonical equality; no word normalization.
class WeylElement {
 public:
  static WeylElement identity(const RootSystem& sys);
  static WeylElement simple_reflection(const RootSystem& sys, int i);
  static WeylElement reflection(const RootSystem& sys, const Root& mirror);

  Root act(const RootSystem& sys, const Root& r) const;
  Coroot act(const RootSystem& sys, const Coroot& t) const;
  WeylElement compose(const RootSystem& sys, const WeylElement& rhs) const;  // this o rhs
  WeylElement inverse(const RootSystem& sys) const;
  bool is_identity(const RootSystem& sys) const;

  const std::vector<Root>& images() const { return img_; }
  bool operator==(const WeylElement&) const = default;
  bool operator<(const WeylElement& o) const { return img_ < o.img_; }

 private:
  std::vector<Root> img_;
};

// Affine Weyl group element w = t_tau * v. Affine roots transform by
// t_tau(x) = x - (x, tau) delta.
struct AffineWeylElement {
  Coroot tau{};
  WeylElement v;

  static AffineWeylElement identity(const RootSystem& sys);
  static AffineWeylElement translation(const RootSystem& sys, const Coroot& t);
  // letter 0 is the affine node s_0 = t_{theta^vee} s_theta; letters 1..n are
  // the finite simple reflections in Bourbaki numbering.
  static AffineWeylElement simple_reflection(const RootSystem& sys, int letter);

  AffineRoot act(const RootSystem& sys, const AffineRoot& g) const;
  AffineWeylElement compose(const RootSystem& sys, const AffineWeylElement& rhs) const;
  AffineWeylElement inverse(const RootSystem& sys) const;
  bool is_identity(const RootSystem& sys) const;
  bool operator==(const AffineWeylElement&) const = default;
};

bool affine_positive(const AffineRoot& g);

// N(v) = {beta > 0 : v^{-1}(beta) < 0}, as positive-root index bits.
RootBits inversions(const RootSystem& sys, const WeylElement& v);
// Affine inversion set, sorted by (level, finite part). Always finite.
std::vector<AffineRoot> inversions(const RootSystem& sys, const AffineWeylElement& w);

int length(const RootSystem& sys, const WeylElement& v);
int length(const RootSystem& sys, const AffineWeylElement& w);

// Weak (left) order: v <= v' iff N(v) is contained in N(v').
bool weak_leq(const RootSystem& sys, const WeylElement& v, const WeylElement& v2);
bool weak_leq(const RootSystem& sys, const AffineWeylElement& w, const AffineWeylElement& w2);

enum class Side { Left, Right };

std::vector<Root> descents(const RootSystem& sys, const WeylElement& v, Side side);
// Affine descents among {alpha_0, ..., alpha_n}.
std::vector<AffineRoot> descents(const RootSystem& sys, const AffineWeylElement& w, Side side);

// Biconvexity (closure under addition + one-summand-inside for positive
// decompositions). On failure `violation` receives a witnessing pair.
bool is_biconvex(const RootSystem& sys, const RootBits& set,
                 std::pair<Root, Root>* violation = nullptr);
bool is_biconvex(const RootSystem& sys, const std::vector<AffineRoot>& set,
                 std::pair<AffineRoot, AffineRoot>* violation = nullptr);

// The unique element whose inversion set is N. Deterministic peeling:
// always remove the lowest-index simple root present. Throws
// std::invalid_argument (with a violating pair) if N is not biconvex.
WeylElement element_from_inversions(const RootSystem& sys, const RootBits& n);
AffineWeylElement element_from_inversions(const RootSystem& sys, std::vector<AffineRoot> n,
                                          bool check_biconvex = true);

// Reduced words. Letters: 0 = affine node, 1..n = Bourbaki simple index.
std::vector<int> reduced_word(const RootSystem& sys, const WeylElement& v);
std::vector<int> reduced_word(const RootSystem& sys, const AffineWeylElement& w);

// Longest element of the standard parabolic generated by `simples`
// (0-based indices); N(w_0^S) = positive roots supported on S.
WeylElement longest_element(const RootSystem& sys, const std::vector<int>& simples);

// (min, max) coset representatives of G'\G for the parabolic G' on
// `gprime`: the identity and w_0' w_0.
std::pair<WeylElement, WeylElement> coset_extrema(const RootSystem& sys,
                                                  const std::vector<int>& gprime);

}  // namespace abideal
