#include "abideal/weyl.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace abideal {

WeylElement WeylElement::identity(const RootSystem& sys) {
  WeylElement v;
  for (int i = 0; i < sys.rank(); ++i) v.img_.push_back(sys.simple_root(i));
  return v;
}

WeylElement WeylElement::simple_reflection(const RootSystem& sys, int i) {
  return reflection(sys, sys.simple_root(i));
}

WeylElement WeylElement::reflection(const RootSystem& sys, const Root& mirror) {
  if (!sys.is_root(mirror)) throw std::invalid_argument("reflection mirror is not a root");
  WeylElement v;
  for (int j = 0; j < sys.rank(); ++j) {
    Root a = sys.simple_root(j);
    int p = sys.pairing(a, mirror);
    Root m = mirror;
    for (int k = 0; k < kMaxRank; ++k) m.c[k] = static_cast<int16_t>(m.c[k] * p);
    v.img_.push_back(sub(a, m));
  }
  return v;
}

Root WeylElement::act(const RootSystem& sys, const Root& r) const {
  Root out;
  for (int j = 0; j < sys.rank(); ++j) {
    if (r.c[j] == 0) continue;
    for (int k = 0; k < kMaxRank; ++k)
      out.c[k] = static_cast<int16_t>(out.c[k] + r.c[j] * img_[j].c[k]);
  }
  return out;
}

Coroot WeylElement::act(const RootSystem& sys, const Coroot& t) const {
  // v(alpha_j^vee) = v(alpha_j)^vee
  Coroot out;
  for (int j = 0; j < sys.rank(); ++j) {
    if (t.c[j] == 0) continue;
    Coroot cv = sys.coroot_of(img_[j]);
    for (int k = 0; k < kMaxRank; ++k)
      out.c[k] = static_cast<int16_t>(out.c[k] + t.c[j] * cv.c[k]);
  }
  return out;
}

WeylElement WeylElement::compose(const RootSystem& sys, const WeylElement& rhs) const {
  WeylElement v;
  for (int i = 0; i < sys.rank(); ++i) v.img_.push_back(act(sys, rhs.img_[i]));
  return v;
}

WeylElement WeylElement::inverse(const RootSystem& sys) const {
  WeylElement v;
  v.img_.resize(sys.rank());
  std::vector<bool> found(sys.rank(), false);
  int remaining = sys.rank();
  for (int p = 0; p < sys.positive_count() && remaining > 0; ++p) {
    Root image = act(sys, sys.positive_root(p));
    Root neg = negate(image);
    for (int i = 0; i < sys.rank(); ++i) {
      if (found[i]) continue;
      if (image == sys.simple_root(i)) {
        v.img_[i] = sys.positive_root(p);
        found[i] = true;
        --remaining;
      } else if (neg == sys.simple_root(i)) {
        v.img_[i] = negate(sys.positive_root(p));
        found[i] = true;
        --remaining;
      }
    }
  }
  if (remaining != 0) throw std::logic_error("inverse: images do not permute the roots");
  return v;
}

bool WeylElement::is_identity(const RootSystem& sys) const {
  for (int i = 0; i < sys.rank(); ++i)
    if (img_[i] != sys.simple_root(i)) return false;
  return true;
}

// --- affine elements ---------------------------------------------------------

AffineWeylElement AffineWeylElement::identity(const RootSystem& sys) {
  return AffineWeylElement{Coroot{}, WeylElement::identity(sys)};
}

AffineWeylElement AffineWeylElement::translation(const RootSystem& sys, const Coroot& t) {
  return AffineWeylElement{t, WeylElement::identity(sys)};
}

AffineWeylElement AffineWeylElement::simple_reflection(const RootSystem& sys, int letter) {
  if (letter == 0)
    return AffineWeylElement{sys.coroot_of(sys.theta()),
                             WeylElement::reflection(sys, sys.theta())};
  return AffineWeylElement{Coroot{}, WeylElement::simple_reflection(sys, letter - 1)};
}

AffineRoot AffineWeylElement::act(const RootSystem& sys, const AffineRoot& g) const {
  Root vb = v.act(sys, g.finite);
  int lvl = g.level - sys.pairing(tau, vb);
  return AffineRoot{vb, static_cast<int16_t>(lvl)};
}

AffineWeylElement AffineWeylElement::compose(const RootSystem& sys,
                                             const AffineWeylElement& rhs) const {
  // (t_tau v)(t_sigma u) = t_{tau + v(sigma)} (v u)
  return AffineWeylElement{add(tau, v.act(sys, rhs.tau)), v.compose(sys, rhs.v)};
}

AffineWeylElement AffineWeylElement::inverse(const RootSystem& sys) const {
  WeylElement vi = v.inverse(sys);
  return AffineWeylElement{negate(vi.act(sys, tau)), vi};
}

bool AffineWeylElement::is_identity(const RootSystem& sys) const {
  return is_zero(tau) && v.is_identity(sys);
}

bool affine_positive(const AffineRoot& g) {
  if (g.level != 0) return g.level > 0;
  for (int i = 0; i < kMaxRank; ++i) {
    if (g.finite.c[i] > 0) return true;
    if (g.finite.c[i] < 0) return false;
  }
  return false;  // zero: not a root
}

// --- inversion sets ----------------------------------------------------------

RootBits inversions(const RootSystem& sys, const WeylElement& v) {
  WeylElement vi = v.inverse(sys);
  RootBits bits;
  for (int p = 0; p < sys.positive_count(); ++p)
    if (!sys.is_positive_root(vi.act(sys, sys.positive_root(p)))) bits.set(p);
  return bits;
}

std::vector<AffineRoot> inversions(const RootSystem& sys, const AffineWeylElement& w) {
  // beta + k delta lies in N(t_tau v) iff k + (beta, tau) < 0, or
  // k + (beta, tau) = 0 and v^{-1}(beta) < 0.
  WeylElement vi = w.v.inverse(sys);
  std::vector<AffineRoot> out;
  for (int p = 0; p < sys.positive_count(); ++p) {
    for (int sign = 0; sign < 2; ++sign) {
      Root beta = sign ? negate(sys.positive_root(p)) : sys.positive_root(p);
      int pr = sys.pairing(w.tau, beta);
      int kmin = sign ? 1 : 0;
      int kmax = -pr;
      for (int k = kmin; k <= kmax; ++k) {
        if (k + pr < 0 || !sys.is_positive_root(vi.act(sys, beta)))
          out.push_back(AffineRoot{beta, static_cast<int16_t>(k)});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int length(const RootSystem& sys, const WeylElement& v) {
  return static_cast<int>(inversions(sys, v).count());
}

int length(const RootSystem& sys, const AffineWeylElement& w) {
  return static_cast<int>(inversions(sys, w).size());
}

bool weak_leq(const RootSystem& sys, const WeylElement& v, const WeylElement& v2) {
  RootBits a = inversions(sys, v), b = inversions(sys, v2);
  return (a & ~b).none();
}

bool weak_leq(const RootSystem& sys, const AffineWeylElement& w, const AffineWeylElement& w2) {
  auto a = inversions(sys, w), b = inversions(sys, w2);
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<Root> descents(const RootSystem& sys, const WeylElement& v, Side side) {
  const WeylElement u = (side == Side::Left) ? v.inverse(sys) : v;
  std::vector<Root> out;
  for (int i = 0; i < sys.rank(); ++i)
    if (!sys.is_positive_root(u.act(sys, sys.simple_root(i)))) out.push_back(sys.simple_root(i));
  return out;
}

std::vector<AffineRoot> descents(const RootSystem& sys, const AffineWeylElement& w, Side side) {
  const AffineWeylElement u = (side == Side::Left) ? w.inverse(sys) : w;
  std::vector<AffineRoot> out;
  std::vector<AffineRoot> simples;
  simples.push_back(AffineRoot{negate(sys.theta()), 1});
  for (int i = 0; i < sys.rank(); ++i) simples.push_back(AffineRoot{sys.simple_root(i), 0});
  for (const AffineRoot& a : simples)
    if (!affine_positive(u.act(sys, a))) out.push_back(a);
  return out;
}

// --- biconvexity -------------------------------------------------------------

bool is_biconvex(const RootSystem& sys, const RootBits& set, std::pair<Root, Root>* violation) {
  const int P = sys.positive_count();
  for (int i = 0; i < P; ++i) {
    if (!set.test(i)) continue;
    for (int j = i; j < P; ++j) {
      if (!set.test(j)) continue;
      int k = sys.sum_index(i, j);
      if (k >= 0 && !set.test(k)) {
        if (violation) *violation = {sys.positive_root(i), sys.positive_root(j)};
        return false;
      }
    }
  }
  for (int k = 0; k < P; ++k) {
    if (!set.test(k)) continue;
    for (int i = 0; i < P; ++i) {
      int j = -1;
      Root diff = sub(sys.positive_root(k), sys.positive_root(i));
      auto found = sys.find_index(diff);
      if (!found) continue;
      j = *found;
      if (!set.test(i) && !set.test(j)) {
        if (violation) *violation = {sys.positive_root(i), sys.positive_root(j)};
        return false;
      }
    }
  }
  return true;
}

namespace {

bool affine_is_root(const RootSystem& sys, const AffineRoot& g) { return sys.is_root(g.finite); }

}  // namespace

bool is_biconvex(const RootSystem& sys, const std::vector<AffineRoot>& set,
                 std::pair<AffineRoot, AffineRoot>* violation) {
  std::set<std::pair<int, Coeff>> in;
  for (const AffineRoot& g : set) in.insert({g.level, g.finite.c});
  auto contains = [&](const AffineRoot& g) { return in.count({g.level, g.finite.c}) != 0; };

  const size_t m = set.size();
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i; j < m; ++j) {
      AffineRoot s{add(set[i].finite, set[j].finite),
                   static_cast<int16_t>(set[i].level + set[j].level)};
      if (is_zero(s.finite)) continue;  // delta multiple, not a root
      if (affine_is_root(sys, s) && !contains(s)) {
        if (violation) *violation = {set[i], set[j]};
        return false;
      }
    }

  // Decompositions g = x + y into positive affine roots.
  for (const AffineRoot& g : set) {
    for (int p = 0; p < sys.positive_count(); ++p) {
      for (int sign = 0; sign < 2; ++sign) {
        Root fx = sign ? negate(sys.positive_root(p)) : sys.positive_root(p);
        Root fy = sub(g.finite, fx);
        if (is_zero(fy) || !sys.is_root(fy)) continue;
        int kxmin = sign ? 1 : 0;
        bool fy_positive = sys.is_positive_root(fy);
        for (int kx = kxmin; kx <= g.level; ++kx) {
          int ky = g.level - kx;
          if (ky < (fy_positive ? 0 : 1)) continue;
          AffineRoot x{fx, static_cast<int16_t>(kx)};
          AffineRoot y{fy, static_cast<int16_t>(ky)};
          if (!contains(x) && !contains(y)) {
            if (violation) *violation = {x, y};
            return false;
          }
        }
      }
    }
  }
  return true;
}

// --- peeling -----------------------------------------------------------------

WeylElement element_from_inversions(const RootSystem& sys, const RootBits& n) {
  std::pair<Root, Root> viol;
  if (!is_biconvex(sys, n, &viol))
    throw std::invalid_argument("inversion set is not biconvex: violated by " +
                                coeff_str(sys, viol.first.c) + " + " +
                                coeff_str(sys, viol.second.c));
  std::vector<Root> current;
  for (int p = 0; p < sys.positive_count(); ++p)
    if (n.test(p)) current.push_back(sys.positive_root(p));

  WeylElement w = WeylElement::identity(sys);
  while (!current.empty()) {
    int pick = -1;
    for (int i = 0; i < sys.rank() && pick < 0; ++i) {
      Root a = sys.simple_root(i);
      for (const Root& r : current)
        if (r == a) { pick = i; break; }
    }
    if (pick < 0) throw std::logic_error("biconvex set without a simple root");
    WeylElement s = WeylElement::simple_reflection(sys, pick);
    std::vector<Root> next;
    next.reserve(current.size() - 1);
    Root a = sys.simple_root(pick);
    for (const Root& r : current)
      if (r != a) next.push_back(s.act(sys, r));
    current = std::move(next);
    w = w.compose(sys, s);
  }
  return w;
}

namespace {

int lowest_simple_letter(const RootSystem& sys, const std::vector<AffineRoot>& n) {
  AffineRoot a0{negate(sys.theta()), 1};
  for (const AffineRoot& r : n)
    if (r == a0) return 0;
  for (int i = 0; i < sys.rank(); ++i) {
    AffineRoot ai{sys.simple_root(i), 0};
    for (const AffineRoot& r : n)
      if (r == ai) return i + 1;
  }
  return -1;
}

}  // namespace

AffineWeylElement element_from_inversions(const RootSystem& sys, std::vector<AffineRoot> n,
                                          bool check_biconvex) {
  if (check_biconvex) {
    std::pair<AffineRoot, AffineRoot> viol;
    if (!is_biconvex(sys, n, &viol))
      throw std::invalid_argument(
          "affine inversion set is not biconvex: violated by (" +
          coeff_str(sys, viol.first.finite.c) + " + " + std::to_string(viol.first.level) +
          "d) + (" + coeff_str(sys, viol.second.finite.c) + " + " +
          std::to_string(viol.second.level) + "d)");
  }
  AffineWeylElement w = AffineWeylElement::identity(sys);
  std::vector<AffineRoot> simple_cache;
  simple_cache.push_back(AffineRoot{negate(sys.theta()), 1});
  for (int i = 0; i < sys.rank(); ++i) simple_cache.push_back(AffineRoot{sys.simple_root(i), 0});

  while (!n.empty()) {
    int letter = lowest_simple_letter(sys, n);
    if (letter < 0)
      throw std::invalid_argument("affine inversion set is not biconvex (peeling stuck)");
    const AffineRoot& a = simple_cache[letter];
    std::vector<AffineRoot> next;
    next.reserve(n.size() - 1);
    for (const AffineRoot& r : n)
      if (!(r == a)) next.push_back(reflect(sys, r, a));
    n = std::move(next);
    w = w.compose(sys, AffineWeylElement::simple_reflection(sys, letter));
  }
  return w;
}

std::vector<int> reduced_word(const RootSystem& sys, const WeylElement& v) {
  RootBits n = inversions(sys, v);
  std::vector<Root> current;
  for (int p = 0; p < sys.positive_count(); ++p)
    if (n.test(p)) current.push_back(sys.positive_root(p));
  std::vector<int> word;
  while (!current.empty()) {
    int pick = -1;
    for (int i = 0; i < sys.rank() && pick < 0; ++i)
      for (const Root& r : current)
        if (r == sys.simple_root(i)) { pick = i; break; }
    if (pick < 0) throw std::logic_error("inversion set without a simple root");
    word.push_back(pick + 1);
    WeylElement s = WeylElement::simple_reflection(sys, pick);
    std::vector<Root> next;
    Root a = sys.simple_root(pick);
    for (const Root& r : current)
      if (r != a) next.push_back(s.act(sys, r));
    current = std::move(next);
  }
  return word;
}

std::vector<int> reduced_word(const RootSystem& sys, const AffineWeylElement& w) {
  std::vector<AffineRoot> n = inversions(sys, w);
  std::vector<int> word;
  std::vector<AffineRoot> simple_cache;
  simple_cache.push_back(AffineRoot{negate(sys.theta()), 1});
  for (int i = 0; i < sys.rank(); ++i) simple_cache.push_back(AffineRoot{sys.simple_root(i), 0});
  while (!n.empty()) {
    int letter = lowest_simple_letter(sys, n);
    if (letter < 0) throw std::logic_error("affine inversion set without a simple root");
    word.push_back(letter);
    const AffineRoot& a = simple_cache[letter];
    std::vector<AffineRoot> next;
    for (const AffineRoot& r : n)
      if (!(r == a)) next.push_back(reflect(sys, r, a));
    n = std::move(next);
  }
  return word;
}

WeylElement longest_element(const RootSystem& sys, const std::vector<int>& simples) {
  return element_from_inversions(sys, parabolic_positive(sys, simples));
}

std::pair<WeylElement, WeylElement> coset_extrema(const RootSystem& sys,
                                                  const std::vector<int>& gprime) {
  std::vector<int> all;
  for (int i = 0; i < sys.rank(); ++i) all.push_back(i);
  WeylElement w0 = longest_element(sys, all);
  WeylElement w0p = longest_element(sys, gprime);
  return {WeylElement::identity(sys), w0p.compose(sys, w0)};
}

}  // namespace abideal
