// Test-only oracles, kept independent of the library's generation and
// encoding paths. The closure here reflects through *every* root found so
// far (not only simples), tracking root/coroot coordinate pairs so that all
// pairings come straight from hand-written Cartan matrices; poset counts
// come from raw subset enumeration.
#pragma once

#include <array>
#include <ostream>
#include <set>
#include <utility>
#include <vector>

#include "abideal/rootsys.hpp"
#include "abideal/weyl.hpp"

namespace oracle {

using Vec = std::array<int, 8>;
using RootPair = std::pair<Vec, Vec>;  // (coords over Pi, coroot coords over Pi^vee)

struct SmallCartan {
  int n;
  std::array<std::array<int, 8>, 8> a;  // a[i][j] = <alpha_j, alpha_i^vee>
};

inline SmallCartan cartan_A2() {
  SmallCartan c{2, {}};
  c.a[0] = {2, -1};
  c.a[1] = {-1, 2};
  return c;
}
inline SmallCartan cartan_A3() {
  SmallCartan c{3, {}};
  c.a[0] = {2, -1, 0};
  c.a[1] = {-1, 2, -1};
  c.a[2] = {0, -1, 2};
  return c;
}
inline SmallCartan cartan_B3() {
  SmallCartan c{3, {}};
  c.a[0] = {2, -1, 0};
  c.a[1] = {-1, 2, -1};
  c.a[2] = {0, -2, 2};
  return c;
}
inline SmallCartan cartan_G2() {
  SmallCartan c{2, {}};
  c.a[0] = {2, -3};
  c.a[1] = {-1, 2};
  return c;
}

// <r, alpha_i^vee> for a root vector r over the simple basis.
inline int simple_pairing(const SmallCartan& c, const Vec& r, int i) {
  int p = 0;
  for (int j = 0; j < c.n; ++j) p += c.a[i][j] * r[j];
  return p;
}

// s_m(r) paired with its coroot, where m is any known (root, coroot) pair.
inline RootPair reflect_pair(const SmallCartan& c, const RootPair& r, const RootPair& m) {
  int p = 0;  // <r, m^vee> = sum_i mv_i <r, alpha_i^vee>
  for (int i = 0; i < c.n; ++i) p += m.second[i] * simple_pairing(c, r.first, i);
  int q = 0;  // (r^vee, m) = sum_i rv_i <m, alpha_i^vee>
  for (int i = 0; i < c.n; ++i) q += r.second[i] * simple_pairing(c, m.first, i);
  RootPair out = r;
  for (int i = 0; i < c.n; ++i) {
    out.first[i] -= p * m.first[i];
    out.second[i] -= q * m.second[i];
  }
  return out;
}

// Closure of the simple basis under reflection through every root found.
inline std::set<Vec> root_closure(const SmallCartan& c) {
  std::vector<RootPair> queue;
  std::set<Vec> roots;
  for (int i = 0; i < c.n; ++i) {
    RootPair v{{}, {}};
    v.first[i] = 1;
    v.second[i] = 1;
    roots.insert(v.first);
    queue.push_back(v);
  }
  for (size_t x = 0; x < queue.size(); ++x)
    for (size_t y = 0; y < queue.size(); ++y) {
      RootPair nr = reflect_pair(c, queue[x], queue[y]);
      if (roots.insert(nr.first).second) queue.push_back(nr);
      if (queue.size() > 500) throw std::logic_error("oracle closure runaway");
    }
  return roots;
}

inline int positive_count(const SmallCartan& c) {
  int pos = 0;
  for (const Vec& r : root_closure(c)) {
    bool nonneg = true;
    for (int i = 0; i < c.n; ++i) nonneg = nonneg && r[i] >= 0;
    if (nonneg) ++pos;
  }
  return pos;
}

// Known positive-root counts per type (independent arithmetic).
inline int expected_positive_count(abideal::Series s, int n) {
  switch (s) {
    case abideal::Series::A: return n * (n + 1) / 2;
    case abideal::Series::B:
    case abideal::Series::C: return n * n;
    case abideal::Series::D: return n * (n - 1);
    case abideal::Series::E: return n == 6 ? 36 : (n == 7 ? 63 : 120);
    case abideal::Series::F: return 24;
    case abideal::Series::G: return 6;
  }
  return -1;
}

// Brute-force count of upward-closed subsets of the root poset via raw
// subset enumeration; only for small systems.
inline long long upclosed_count_bruteforce(const abideal::RootSystem& sys) {
  const int p = sys.positive_count();
  long long count = 0;
  for (long long mask = 0; mask < (1LL << p); ++mask) {
    bool ok = true;
    for (int i = 0; i < p && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      for (int j = 0; j < p && ok; ++j)
        if (sys.root_leq(sys.positive_root(i), sys.positive_root(j)) && !(mask >> j & 1))
          ok = false;
    }
    if (ok) ++count;
  }
  return count;
}

// Brute-force antichain count (sets of pairwise incomparable roots).
inline long long antichain_count_bruteforce(const abideal::RootSystem& sys) {
  const int p = sys.positive_count();
  long long count = 0;
  for (long long mask = 0; mask < (1LL << p); ++mask) {
    bool ok = true;
    for (int i = 0; i < p && ok; ++i)
      for (int j = 0; j < p && ok; ++j) {
        if (i == j || !(mask >> i & 1) || !(mask >> j & 1)) continue;
        if (sys.root_leq(sys.positive_root(i), sys.positive_root(j))) ok = false;
      }
    if (ok) ++count;
  }
  return count;
}

// Exhaustive W by closing under composition (independent of inversion sets).
inline std::vector<abideal::WeylElement> full_weyl_group(const abideal::RootSystem& sys) {
  using abideal::WeylElement;
  std::vector<WeylElement> out{WeylElement::identity(sys)};
  std::set<std::vector<abideal::Root>> seen{out[0].images()};
  for (size_t i = 0; i < out.size(); ++i)
    for (int s = 0; s < sys.rank(); ++s) {
      WeylElement next = out[i].compose(sys, WeylElement::simple_reflection(sys, s));
      if (seen.insert(next.images()).second) out.push_back(next);
    }
  return out;
}

}  // namespace oracle
