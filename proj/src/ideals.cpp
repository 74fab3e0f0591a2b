#include "abideal/ideals.hpp"

#include <algorithm>
#include <stdexcept>

namespace abideal {

bool bits_less(const RootBits& a, const RootBits& b) {
  static const RootBits lowmask = [] {
    RootBits m;
    for (int i = 0; i < 64; ++i) m.set(i);
    return m;
  }();
  auto hi = [&](const RootBits& x) { return (x >> 64).to_ullong(); };
  auto lo = [&](const RootBits& x) { return (x & lowmask).to_ullong(); };
  if (hi(a) != hi(b)) return hi(a) < hi(b);
  return lo(a) < lo(b);
}

bool ideal_less(const Ideal& a, const Ideal& b) {
  if (a.phi.count() != b.phi.count()) return a.phi.count() < b.phi.count();
  return bits_less(a.phi, b.phi);
}

bool is_upward_closed(const RootSystem& sys, const RootBits& phi) {
  for (int i = 0; i < sys.positive_count(); ++i)
    if (phi.test(i) && (sys.upper_set(i) & ~phi).any()) return false;
  return true;
}

bool is_abelian_set(const RootSystem& sys, const RootBits& phi) {
  for (int i = 0; i < sys.positive_count(); ++i) {
    if (!phi.test(i)) continue;
    for (int j = i; j < sys.positive_count(); ++j)
      if (phi.test(j) && sys.sum_index(i, j) >= 0) return false;
  }
  return true;
}

std::vector<Ideal> enumerate_ad_nilpotent(const RootSystem& sys) {
  const int P = sys.positive_count();
  // Precompute comparability masks for the antichain DFS.
  std::vector<RootBits> comparable(P);
  for (int i = 0; i < P; ++i) comparable[i] = sys.upper_set(i) | sys.lower_set(i);

  std::vector<Ideal> out;
  std::vector<int> stack;
  RootBits closure;

  // DFS over antichains: extend by any later root incomparable with all chosen.
  auto rec = [&](auto&& self, int from, RootBits blocked) -> void {
    out.push_back(Ideal{closure});
    for (int j = from; j < P; ++j) {
      if (blocked.test(j)) continue;
      RootBits saved = closure;
      closure |= sys.upper_set(j);
      self(self, j + 1, blocked | comparable[j]);
      closure = saved;
    }
  };
  rec(rec, 0, RootBits{});
  std::sort(out.begin(), out.end(), ideal_less);
  return out;
}

std::vector<Ideal> enumerate_abelian(const RootSystem& sys) {
  std::vector<Ideal> out;
  for (const Ideal& i : enumerate_ad_nilpotent(sys))
    if (is_abelian_set(sys, i.phi)) out.push_back(i);
  return out;
}

Filtration filtration(const RootSystem& sys, const Ideal& i) {
  Filtration f;
  if (i.phi.none()) return f;
  RootBits layer = i.phi;
  while (layer.any()) {
    f.layers.push_back(layer);
    RootBits next;
    for (int a = 0; a < sys.positive_count(); ++a) {
      if (!layer.test(a)) continue;
      for (int b = 0; b < sys.positive_count(); ++b) {
        if (!i.phi.test(b)) continue;
        int s = sys.sum_index(a, b);
        if (s >= 0) next.set(s);
      }
    }
    layer = next;
  }
  return f;
}

int nilpotence_index(const RootSystem& sys, const Ideal& i) {
  return static_cast<int>(filtration(sys, i).layers.size());
}

std::vector<AffineRoot> inversion_set_of_ideal(const RootSystem& sys, const Ideal& i) {
  std::vector<AffineRoot> n;
  Filtration f = filtration(sys, i);
  for (size_t k = 0; k < f.layers.size(); ++k)
    for (int p = 0; p < sys.positive_count(); ++p)
      if (f.layers[k].test(p))
        n.push_back(AffineRoot{negate(sys.positive_root(p)), static_cast<int16_t>(k + 1)});
  std::sort(n.begin(), n.end());
  return n;
}

AffineWeylElement w_of_ideal(const RootSystem& sys, const Ideal& i) {
  if (!is_upward_closed(sys, i.phi))
    throw std::invalid_argument("w_of_ideal: set is not upward closed in the root poset");
  std::vector<AffineRoot> L = inversion_set_of_ideal(sys, i);
  AffineWeylElement w = AffineWeylElement::identity(sys);
  try {
    w = element_from_inversions(sys, L, /*check_biconvex=*/false);
  } catch (const std::invalid_argument& e) {
    throw std::logic_error(std::string("w_of_ideal: L(i) is not biconvex: ") + e.what());
  }
  if (inversions(sys, w) != L)
    throw std::logic_error("w_of_ideal: N(w) != L(i); encoding invariant broken");
  return w;
}

bool is_W_element(const RootSystem& sys, const AffineWeylElement& w) {
  // (i) w(C_1) inside the dominant chamber: no finite simple root inverted.
  AffineWeylElement wi = w.inverse(sys);
  for (int i = 0; i < sys.rank(); ++i)
    if (!affine_positive(wi.act(sys, AffineRoot{sys.simple_root(i), 0}))) return false;
  // (ii) coordinates of v^{-1}(tau).
  Coroot s = F_map(sys, w);
  for (int i = 0; i < sys.rank(); ++i)
    if (sys.pairing(s, sys.simple_root(i)) > 1) return false;
  Root vtheta = w.v.act(sys, sys.theta());
  if (sys.pairing(w.tau, vtheta) < -2) return false;
  return true;
}

bool is_Wab_element(const RootSystem& sys, const AffineWeylElement& w) {
  for (const AffineRoot& g : inversions(sys, w))
    if (g.level != 1 || !sys.is_positive_root(negate(g.finite))) return false;
  return true;
}

Ideal ideal_of_w(const RootSystem& sys, const AffineWeylElement& w) {
  if (!is_W_element(sys, w)) {
    AffineWeylElement wi = w.inverse(sys);
    for (int i = 0; i < sys.rank(); ++i)
      if (!affine_positive(wi.act(sys, AffineRoot{sys.simple_root(i), 0})))
        throw std::invalid_argument(
            "ideal_of_w: w(C_1) leaves the dominant chamber (condition (i) fails at alpha_" +
            std::to_string(i + 1) + ")");
    throw std::invalid_argument("ideal_of_w: coordinate bounds of condition (ii) fail");
  }
  Ideal ideal;
  for (const AffineRoot& g : inversions(sys, w)) {
    if (g.level != 1) continue;
    Root b = negate(g.finite);
    if (sys.is_positive_root(b)) ideal.phi.set(sys.index_of(b));
  }
  // Consistency: the level-1 layer must regenerate N(w) exactly.
  if (!is_upward_closed(sys, ideal.phi))
    throw std::invalid_argument("ideal_of_w: level-1 layer is not upward closed");
  if (inversions(sys, w) != inversion_set_of_ideal(sys, ideal))
    throw std::invalid_argument("ideal_of_w: N(w) is not of the form L(i)");
  return ideal;
}

Coroot F_map(const RootSystem& sys, const AffineWeylElement& w) {
  return w.v.inverse(sys).act(sys, w.tau);
}

bool in_D(const RootSystem& sys, const Coroot& s) {
  for (int i = 0; i < sys.rank(); ++i)
    if (sys.pairing(s, sys.simple_root(i)) > 1) return false;
  return sys.pairing(s, sys.theta()) >= -2;
}

bool in_Dab(const RootSystem& sys, const Coroot& s) {
  for (int p = 0; p < sys.positive_count(); ++p) {
    int v = sys.pairing(s, sys.positive_root(p));
    if (v != 0 && v != 1 && v != -1 && v != -2) return false;
  }
  return true;
}

bool in_Dprime_j(const RootSystem& sys, const Coroot& s, int j) {
  for (int p = 0; p < sys.positive_count(); ++p) {
    int v = sys.pairing(s, sys.positive_root(p));
    if (v < -(j + 1) || v >= j + 1) return false;
  }
  return true;
}

bool in_Dj(const RootSystem& sys, const Coroot& s, int j) {
  return in_Dprime_j(sys, s, j) && in_D(sys, s);
}

std::vector<Coroot> enumerate_D_points(const RootSystem& sys) {
  // Scan in pairing coordinates p_i = (sigma, alpha_i) <= 1 with
  // sum m_i p_i >= -2; prune on the best possible remaining contribution.
  const int n = sys.rank();
  std::vector<int> suffix_max(n + 1, 0);
  for (int i = n - 1; i >= 0; --i) suffix_max[i] = suffix_max[i + 1] + sys.mark(i);
  std::vector<int> p(n);
  std::vector<Coroot> out;
  auto rec = [&](auto&& self, int i, int partial) -> void {
    if (i == n) {
      if (auto c = coroot_from_simple_pairings(sys, p)) out.push_back(*c);
      return;
    }
    for (int v = 1;; --v) {
      int np = partial + v * sys.mark(i);
      if (np + suffix_max[i + 1] < -2) break;
      p[i] = v;
      self(self, i + 1, np);
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Coroot> enumerate_Dab_points(const RootSystem& sys) {
  const int n = sys.rank();
  std::vector<int> p(n);
  std::vector<Coroot> out;
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      auto c = coroot_from_simple_pairings(sys, p);
      if (c && in_Dab(sys, *c)) out.push_back(*c);
      return;
    }
    for (int v = -2; v <= 1; ++v) {
      p[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Root> generators(const RootSystem& sys, const Ideal& i) {
  std::vector<Root> out;
  for (int p = 0; p < sys.positive_count(); ++p) {
    if (!i.phi.test(p)) continue;
    RootBits below = sys.lower_set(p) & i.phi;
    below.reset(p);
    if (below.none()) out.push_back(sys.positive_root(p));
  }
  return out;
}

std::vector<Root> generators_via_w(const RootSystem& sys, const Ideal& i) {
  AffineWeylElement w = w_of_ideal(sys, i);
  std::vector<Root> out;
  std::vector<AffineRoot> simples;
  simples.push_back(AffineRoot{negate(sys.theta()), 1});
  for (int k = 0; k < sys.rank(); ++k) simples.push_back(AffineRoot{sys.simple_root(k), 0});
  for (const AffineRoot& a : simples) {
    AffineRoot img = w.act(sys, a);
    if (img.level == -1 && sys.is_positive_root(img.finite)) out.push_back(img.finite);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_maximal_abelian(const RootSystem& sys, const Ideal& i) {
  if (!is_abelian_set(sys, i.phi))
    throw std::invalid_argument("is_maximal_abelian: ideal is not abelian");
  AffineWeylElement w = w_of_ideal(sys, i);
  std::vector<AffineRoot> simples;
  simples.push_back(AffineRoot{negate(sys.theta()), 1});
  for (int k = 0; k < sys.rank(); ++k) simples.push_back(AffineRoot{sys.simple_root(k), 0});
  for (const AffineRoot& a : simples) {
    AffineRoot img = w.act(sys, a);
    if (img.level == 1 && sys.is_positive_root(negate(img.finite))) return false;
  }
  return true;
}

bool is_maximal_abelian_via_coords(const RootSystem& sys, const Ideal& i) {
  AffineWeylElement w = w_of_ideal(sys, i);
  Coroot s = F_map(sys, w);
  for (int k = 0; k < sys.rank(); ++k)
    if (sys.pairing(s, sys.simple_root(k)) == -1) return false;
  return sys.pairing(s, sys.theta()) != 0;
}

}  // namespace abideal
