#include "abideal/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace abideal {

std::optional<Series> series_from_char(char c) {
  switch (c) {
    case 'A': return Series::A;
    case 'B': return Series::B;
    case 'C': return Series::C;
    case 'D': return Series::D;
    case 'E': return Series::E;
    case 'F': return Series::F;
    case 'G': return Series::G;
    default: return std::nullopt;
  }
}

Root add(const Root& x, const Root& y) {
  Root r;
  for (int i = 0; i < kMaxRank; ++i) r.c[i] = static_cast<int16_t>(x.c[i] + y.c[i]);
  return r;
}
Root sub(const Root& x, const Root& y) {
  Root r;
  for (int i = 0; i < kMaxRank; ++i) r.c[i] = static_cast<int16_t>(x.c[i] - y.c[i]);
  return r;
}
Root negate(const Root& x) {
  Root r;
  for (int i = 0; i < kMaxRank; ++i) r.c[i] = static_cast<int16_t>(-x.c[i]);
  return r;
}
Coroot add(const Coroot& x, const Coroot& y) {
  Coroot r;
  for (int i = 0; i < kMaxRank; ++i) r.c[i] = static_cast<int16_t>(x.c[i] + y.c[i]);
  return r;
}
Coroot sub(const Coroot& x, const Coroot& y) {
  Coroot r;
  for (int i = 0; i < kMaxRank; ++i) r.c[i] = static_cast<int16_t>(x.c[i] - y.c[i]);
  return r;
}
Coroot negate(const Coroot& x) {
  Coroot r;
  for (int i = 0; i < kMaxRank; ++i) r.c[i] = static_cast<int16_t>(-x.c[i]);
  return r;
}
bool is_zero(const Coeff& c) {
  for (int i = 0; i < kMaxRank; ++i)
    if (c[i] != 0) return false;
  return true;
}

std::string coeff_str(const RootSystem& sys, const Coeff& c) {
  std::string s = "(";
  for (int i = 0; i < sys.rank(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + ")";
}

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

CartanDatum make_cartan(Series series, int rank) {
  switch (series) {
    case Series::A: require(rank >= 1 && rank <= 8, "A_n requires 1 <= n <= 8"); break;
    case Series::B: require(rank >= 2 && rank <= 8, "B_n requires 2 <= n <= 8"); break;
    case Series::C: require(rank >= 2 && rank <= 8, "C_n requires 2 <= n <= 8"); break;
    case Series::D: require(rank >= 4 && rank <= 8, "D_n requires 4 <= n <= 8"); break;
    case Series::E: require(rank >= 6 && rank <= 8, "E_n requires n in {6,7,8}"); break;
    case Series::F: require(rank == 4, "F_n requires n = 4"); break;
    case Series::G: require(rank == 2, "G_n requires n = 2"); break;
  }
  CartanDatum cd;
  cd.series = series;
  cd.rank = rank;
  for (int i = 0; i < rank; ++i) cd.a[i][i] = 2;
  auto edge = [&](int i, int j, int aij = -1, int aji = -1) {
    // a[i][j] = <alpha_j, alpha_i^vee>
    cd.a[i][j] = aij;
    cd.a[j][i] = aji;
  };
  switch (series) {
    case Series::A:
      for (int i = 0; i + 1 < rank; ++i) edge(i, i + 1);
      break;
    case Series::B:
      for (int i = 0; i + 2 < rank; ++i) edge(i, i + 1);
      edge(rank - 2, rank - 1, -1, -2);  // alpha_n short
      break;
    case Series::C:
      for (int i = 0; i + 2 < rank; ++i) edge(i, i + 1);
      edge(rank - 2, rank - 1, -2, -1);  // alpha_n long
      break;
    case Series::D:
      for (int i = 0; i + 3 < rank; ++i) edge(i, i + 1);
      edge(rank - 3, rank - 2);
      edge(rank - 3, rank - 1);
      break;
    case Series::E:
      // Bourbaki: chain 1-3-4-5-6(-7-8), node 2 attached to 4.
      edge(0, 2);
      edge(1, 3);
      edge(2, 3);
      for (int i = 3; i + 1 < rank; ++i) edge(i, i + 1);
      break;
    case Series::F:
      edge(0, 1);
      edge(1, 2, -1, -2);  // alpha_3, alpha_4 short
      edge(2, 3);
      break;
    case Series::G:
      edge(0, 1, -3, -1);  // alpha_1 short, alpha_2 long
      break;
  }
  return cd;
}

}  // namespace

std::string RootSystem::name() const {
  return std::string(1, to_char(datum_.series)) + std::to_string(datum_.rank);
}

RootSystem RootSystem::build(Series series, int rank) {
  RootSystem sys;
  sys.datum_ = make_cartan(series, rank);
  sys.generate();
  return sys;
}

void RootSystem::generate() {
  const int n = datum_.rank;
  const auto& a = datum_.a;

  // Reflection closure from the simple roots.
  std::set<Coeff> all;
  std::deque<Coeff> queue;
  for (int i = 0; i < n; ++i) {
    Coeff c{};
    c[i] = 1;
    all.insert(c);
    queue.push_back(c);
  }
  auto reflect_simple = [&](const Coeff& c, int i) {
    int p = 0;
    for (int j = 0; j < n; ++j) p += a[i][j] * c[j];
    Coeff r = c;
    r[i] = static_cast<int16_t>(r[i] - p);
    return r;
  };
  while (!queue.empty()) {
    Coeff c = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      Coeff r = reflect_simple(c, i);
      if (all.insert(r).second) queue.push_back(r);
    }
  }

  for (const Coeff& c : all) {
    bool pos = true, neg = true;
    for (int i = 0; i < n; ++i) {
      if (c[i] > 0) neg = false;
      if (c[i] < 0) pos = false;
    }
    if (!pos && !neg) throw std::logic_error("generated vector with mixed signs");
    if (pos) positive_.push_back(Root{c});
  }
  if (static_cast<int>(positive_.size()) > kMaxPositive)
    throw std::logic_error("positive root count exceeds table capacity");

  std::sort(positive_.begin(), positive_.end(), [&](const Root& x, const Root& y) {
    int hx = 0, hy = 0;
    for (int i = 0; i < n; ++i) { hx += x.c[i]; hy += y.c[i]; }
    if (hx != hy) return hx < hy;
    return x.c < y.c;
  });
  for (int i = 0; i < static_cast<int>(positive_.size()); ++i) index_[positive_[i].c] = i;

  heights_.resize(positive_.size());
  for (size_t i = 0; i < positive_.size(); ++i) {
    int h = 0;
    for (int j = 0; j < n; ++j) h += positive_[i].c[j];
    heights_[i] = h;
  }

  // Length scales: propagate d_j / d_i = a_ij / a_ji along Dynkin edges,
  // then rescale so that d_theta = 1, i.e. (theta, theta) = 2.
  std::array<bool, kMaxRank> seen{};
  d_[0] = Rational(1);
  seen[0] = true;
  std::deque<int> bfs{0};
  while (!bfs.empty()) {
    int i = bfs.front();
    bfs.pop_front();
    for (int j = 0; j < n; ++j) {
      if (i == j || a[i][j] == 0 || seen[j]) continue;
      d_[j] = d_[i] * Rational(a[i][j], a[j][i]);
      seen[j] = true;
      bfs.push_back(j);
    }
  }
  for (int i = 0; i < n; ++i)
    if (!seen[i]) throw std::logic_error("Dynkin diagram not connected");

  // theta = unique root of maximal height.
  theta_idx_ = static_cast<int>(positive_.size()) - 1;
  int toph = heights_.back();
  if (positive_.size() > 1 && heights_[positive_.size() - 2] == toph)
    throw std::logic_error("highest root is not unique");

  // Rescale d so (theta, theta) = 2.
  {
    Rational tt(0);
    const Coeff& t = positive_[theta_idx_].c;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) tt += d_[i] * Rational(a[i][j]) * Rational(t[i]) * Rational(t[j]);
    Rational d_theta = tt / Rational(2);
    for (int i = 0; i < n; ++i) d_[i] = d_[i] / d_theta;
  }

  simply_laced_ = true;
  for (int i = 0; i < n; ++i)
    if (d_[i] != Rational(1)) simply_laced_ = false;

  // theta_short: the dominant short root (equals theta when simply laced).
  if (simply_laced_) {
    theta_short_idx_ = theta_idx_;
  } else {
    theta_short_idx_ = -1;
    for (int i = 0; i < static_cast<int>(positive_.size()); ++i) {
      if (is_long(positive_[i])) continue;
      if (is_dominant(positive_[i])) {
        if (theta_short_idx_ >= 0) throw std::logic_error("dominant short root not unique");
        theta_short_idx_ = i;
      }
    }
    if (theta_short_idx_ < 0) throw std::logic_error("no dominant short root found");
  }

  for (int i = 0; i < n; ++i) marks_[i] = positive_[theta_idx_].c[i];
  Coroot tv = coroot_of(positive_[theta_idx_]);
  g_ = 1;
  for (int i = 0; i < n; ++i) {
    comarks_[i] = tv.c[i];
    g_ += comarks_[i];
  }

  // Poset closure masks and the root-sum table.
  const int P = static_cast<int>(positive_.size());
  up_.assign(P, RootBits{});
  down_.assign(P, RootBits{});
  for (int i = 0; i < P; ++i)
    for (int j = 0; j < P; ++j)
      if (root_leq(positive_[i], positive_[j])) {
        up_[i].set(j);
        down_[j].set(i);
      }
  sum_.assign(P, {});
  for (int i = 0; i < P; ++i)
    for (int j = 0; j < P; ++j) {
      auto k = find_index(add(positive_[i], positive_[j]));
      sum_[i][j] = static_cast<int16_t>(k ? *k : -1);
    }
}

Root RootSystem::simple_root(int i) const {
  Root r;
  r.c[i] = 1;
  return r;
}

Coroot RootSystem::simple_coroot(int i) const {
  Coroot t;
  t.c[i] = 1;
  return t;
}

int RootSystem::index_of(const Root& r) const {
  auto it = index_.find(r.c);
  if (it == index_.end()) throw std::invalid_argument("not a positive root: " + coeff_str(*this, r.c));
  return it->second;
}

std::optional<int> RootSystem::find_index(const Root& r) const {
  auto it = index_.find(r.c);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool RootSystem::is_root(const Root& r) const {
  return index_.count(r.c) || index_.count(negate(r).c);
}

bool RootSystem::is_positive_root(const Root& r) const { return index_.count(r.c) != 0; }

int RootSystem::height(const Root& r) const {
  int h = 0;
  for (int i = 0; i < datum_.rank; ++i) h += r.c[i];
  return h;
}

int RootSystem::pairing_with_simple_coroot(const Root& b, int i) const {
  int p = 0;
  for (int j = 0; j < datum_.rank; ++j) p += datum_.a[i][j] * b.c[j];
  return p;
}

int RootSystem::pairing(const Root& b, const Root& a) const {
  Coroot av = coroot_of(a);
  return pairing(av, b);
}

int RootSystem::pairing(const Coroot& t, const Root& b) const {
  int p = 0;
  for (int i = 0; i < datum_.rank; ++i)
    if (t.c[i] != 0) p += t.c[i] * pairing_with_simple_coroot(b, i);
  return p;
}

Rational RootSystem::form(const Root& x, const Root& y) const {
  // (alpha_i, alpha_j) = d_i * a_ij
  Rational r(0);
  for (int i = 0; i < datum_.rank; ++i) {
    if (x.c[i] == 0) continue;
    for (int j = 0; j < datum_.rank; ++j)
      if (y.c[j] != 0) r += d_[i] * Rational(datum_.a[i][j]) * Rational(x.c[i] * y.c[j]);
  }
  return r;
}

Rational RootSystem::form(const Coroot& x, const Coroot& y) const {
  // (alpha_i^vee, alpha_j^vee) = a_ij / d_j
  Rational r(0);
  for (int i = 0; i < datum_.rank; ++i) {
    if (x.c[i] == 0) continue;
    for (int j = 0; j < datum_.rank; ++j)
      if (y.c[j] != 0) r += Rational(datum_.a[i][j] * x.c[i] * y.c[j]) / d_[j];
  }
  return r;
}

Rational RootSystem::form(const Coroot& t, const Root& b) const { return Rational(pairing(t, b)); }

Coroot RootSystem::coroot_of(const Root& r) const {
  Rational dr = length2(r) / Rational(2);
  Coroot t;
  for (int i = 0; i < datum_.rank; ++i) {
    if (r.c[i] == 0) continue;
    Rational v = Rational(r.c[i]) * d_[i] / dr;
    t.c[i] = static_cast<int16_t>(v.as_integer());
  }
  return t;
}

Rational RootSystem::length2(const Root& r) const { return form(r, r); }

bool RootSystem::is_long(const Root& r) const { return length2(r) == Rational(2); }

int RootSystem::mark(int i) const { return marks_[i]; }
int RootSystem::comark(int i) const { return comarks_[i]; }

bool RootSystem::is_dominant(const Root& r) const {
  for (int i = 0; i < datum_.rank; ++i)
    if (pairing_with_simple_coroot(r, i) < 0) return false;
  return true;
}

bool RootSystem::is_dominant(const Coroot& t) const {
  for (int i = 0; i < datum_.rank; ++i)
    if (pairing(t, simple_root(i)) < 0) return false;
  return true;
}

std::vector<Root> RootSystem::dominant_roots() const {
  std::vector<Root> out;
  for (const Root& r : positive_)
    if (is_dominant(r)) out.push_back(r);
  return out;
}

bool RootSystem::root_leq(const Root& b, const Root& g) const {
  for (int i = 0; i < datum_.rank; ++i)
    if (b.c[i] > g.c[i]) return false;
  return true;
}

std::vector<int> RootSystem::long_positive_indices() const {
  std::vector<int> out;
  for (int i = 0; i < positive_count(); ++i)
    if (is_long(positive_[i])) out.push_back(i);
  return out;
}

std::vector<int> RootSystem::long_simple_indices() const {
  std::vector<int> out;
  for (int i = 0; i < datum_.rank; ++i)
    if (is_long(simple_root(i))) out.push_back(i);
  return out;
}

// --- subsystems --------------------------------------------------------------

AffineRoot reflect(const RootSystem& sys, const AffineRoot& r, const AffineRoot& mirror) {
  int p = sys.pairing(r.finite, mirror.finite);
  AffineRoot out;
  out.finite = sub(r.finite, [&] {
    Root m = mirror.finite;
    for (int i = 0; i < kMaxRank; ++i) m.c[i] = static_cast<int16_t>(m.c[i] * p);
    return m;
  }());
  out.level = static_cast<int16_t>(r.level - p * mirror.level);
  return out;
}

std::vector<SubsystemDescriptor> components(const RootSystem& sys,
                                            const std::vector<AffineRoot>& basis) {
  const int m = static_cast<int>(basis.size());
  for (int i = 0; i < m; ++i) {
    if (!sys.is_root(basis[i].finite))
      throw std::invalid_argument("basis member is not a root");
    for (int j = i + 1; j < m; ++j)
      if (sys.pairing(basis[i].finite, basis[j].finite) > 0)
        throw std::invalid_argument("basis is not mutually obtuse");
  }
  std::vector<int> comp(m, -1);
  int ncomp = 0;
  for (int i = 0; i < m; ++i) {
    if (comp[i] >= 0) continue;
    comp[i] = ncomp;
    std::deque<int> q{i};
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (int j = 0; j < m; ++j)
        if (comp[j] < 0 && sys.pairing(basis[x].finite, basis[j].finite) != 0) {
          comp[j] = ncomp;
          q.push_back(j);
        }
    }
    ++ncomp;
  }
  std::vector<SubsystemDescriptor> out(ncomp);
  for (int i = 0; i < m; ++i) out[comp[i]].basis.push_back(basis[i]);
  for (auto& s : out) s.irreducible = true;
  std::sort(out.begin(), out.end(), [](const SubsystemDescriptor& x, const SubsystemDescriptor& y) {
    return *std::min_element(x.basis.begin(), x.basis.end()) <
           *std::min_element(y.basis.begin(), y.basis.end());
  });
  return out;
}

std::vector<AffineRoot> subsystem_roots(const RootSystem& sys, const SubsystemDescriptor& sub) {
  std::set<std::pair<int, Coeff>> seen;
  std::vector<AffineRoot> roots;
  auto push = [&](const AffineRoot& r) {
    if (seen.insert({r.level, r.finite.c}).second) {
      roots.push_back(r);
      return true;
    }
    return false;
  };
  for (const AffineRoot& b : sub.basis) {
    push(b);
    push(AffineRoot{negate(b.finite), static_cast<int16_t>(-b.level)});
  }
  for (size_t i = 0; i < roots.size(); ++i) {
    AffineRoot r = roots[i];
    for (const AffineRoot& b : sub.basis) push(reflect(sys, r, b));
    if (roots.size() > 1000) throw std::logic_error("subsystem closure does not terminate");
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

AffineRoot subsystem_highest_root(const RootSystem& sys, const SubsystemDescriptor& sub) {
  if (sub.basis.empty()) throw std::invalid_argument("empty subsystem has no highest root");
  auto comps = components(sys, sub.basis);
  if (comps.size() != 1)
    throw std::invalid_argument("subsystem is reducible (" + std::to_string(comps.size()) +
                                " components); highest root undefined");
  auto roots = subsystem_roots(sys, sub);
  const AffineRoot* best = nullptr;
  Rational best_len(0);
  for (const AffineRoot& r : roots) {
    bool dom = true;
    for (const AffineRoot& b : sub.basis)
      if (sys.pairing(r.finite, b.finite) < 0) { dom = false; break; }
    if (!dom) continue;
    Rational len = sys.length2(r.finite);
    if (best == nullptr || best_len < len) {
      best = &r;
      best_len = len;
    }
  }
  if (!best) throw std::logic_error("no dominant root in subsystem");
  return *best;
}

namespace {

// Expansion coefficients of r over the basis (exact rational solve).
std::vector<Rational> expand_over_basis(const RootSystem& sys, const AffineRoot& r,
                                        const std::vector<AffineRoot>& basis) {
  // Solve <r, b_j^vee> = sum_i x_i <b_i, b_j^vee>; the matrix is the
  // subsystem's Cartan matrix, hence nonsingular.
  const int m = static_cast<int>(basis.size());
  std::vector<std::vector<Rational>> mat(m, std::vector<Rational>(m + 1));
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < m; ++i) mat[j][i] = Rational(sys.pairing(basis[i].finite, basis[j].finite));
    mat[j][m] = Rational(sys.pairing(r.finite, basis[j].finite));
  }
  for (int col = 0; col < m; ++col) {
    int piv = -1;
    for (int row = col; row < m; ++row)
      if (mat[row][col] != Rational(0)) { piv = row; break; }
    if (piv < 0) throw std::logic_error("singular subsystem Cartan matrix");
    std::swap(mat[col], mat[piv]);
    for (int row = 0; row < m; ++row) {
      if (row == col || mat[row][col] == Rational(0)) continue;
      Rational f = mat[row][col] / mat[col][col];
      for (int k = col; k <= m; ++k) mat[row][k] -= f * mat[col][k];
    }
  }
  std::vector<Rational> x(m);
  for (int i = 0; i < m; ++i) x[i] = mat[i][m] / mat[i][i];
  return x;
}

}  // namespace

int subsystem_dual_coxeter(const RootSystem& sys, const SubsystemDescriptor& sub) {
  AffineRoot th = subsystem_highest_root(sys, sub);
  auto n = expand_over_basis(sys, th, sub.basis);
  Rational d_th = sys.length2(th.finite) / Rational(2);
  Rational g(1);
  for (size_t i = 0; i < sub.basis.size(); ++i) {
    Rational d_b = sys.length2(sub.basis[i].finite) / Rational(2);
    g += n[i] * d_b / d_th;
  }
  return static_cast<int>(g.as_integer());
}

TypeLabel classify_subsystem(const RootSystem& sys, const SubsystemDescriptor& sub) {
  auto comps = components(sys, sub.basis);
  if (comps.size() != 1) throw std::invalid_argument("classify_subsystem needs an irreducible input");
  const int r = static_cast<int>(sub.basis.size());
  auto roots = subsystem_roots(sys, sub);
  const int total = static_cast<int>(roots.size());
  Rational maxlen(0);
  for (const AffineRoot& x : roots) maxlen = std::max(maxlen, sys.length2(x.finite), std::less<>{});
  int longs = 0;
  for (const AffineRoot& x : roots)
    if (sys.length2(x.finite) == maxlen) ++longs;

  TypeLabel t;
  t.rank = r;
  if (longs == total) {  // one length
    if (total == r * (r + 1)) t.series = 'A';
    else if (r >= 4 && total == 2 * r * (r - 1)) t.series = 'D';
    else if ((r == 6 && total == 72) || (r == 7 && total == 126) || (r == 8 && total == 240))
      t.series = 'E';
    else
      throw std::logic_error("unrecognized simply-laced subsystem");
  } else {
    if (r == 2 && total == 12) t.series = 'G';
    else if (r == 4 && total == 48) t.series = 'F';
    else if (total == 2 * r * r) {
      if (r == 2) {
        // B2 = C2; read the label off the basis presentation.
        t.series = sys.length2(sub.basis.front().finite) == maxlen ? 'B' : 'C';
      } else {
        t.series = (longs == 2 * r * (r - 1)) ? 'B' : 'C';
      }
    } else {
      throw std::logic_error("unrecognized two-length subsystem");
    }
  }
  return t;
}

long long weyl_group_order(const RootSystem& sys, const std::vector<AffineRoot>& basis) {
  if (basis.empty()) return 1;
  long long order = 1;
  for (const SubsystemDescriptor& comp : components(sys, basis)) {
    TypeLabel t = classify_subsystem(sys, comp);
    long long f = 1;
    auto fact = [](int k) {
      long long r = 1;
      for (int i = 2; i <= k; ++i) r *= i;
      return r;
    };
    switch (t.series) {
      case 'A': f = fact(t.rank + 1); break;
      case 'B':
      case 'C': f = fact(t.rank) << t.rank; break;
      case 'D': f = fact(t.rank) << (t.rank - 1); break;
      case 'E': f = t.rank == 6 ? 51840LL : (t.rank == 7 ? 2903040LL : 696729600LL); break;
      case 'F': f = 1152; break;
      case 'G': f = 12; break;
      default: throw std::logic_error("unclassified component");
    }
    order *= f;
  }
  return order;
}

std::vector<AffineRoot> parabolic_basis(const RootSystem& sys, const std::vector<int>& simples) {
  std::vector<AffineRoot> out;
  for (int i : simples) out.push_back(AffineRoot{sys.simple_root(i), 0});
  return out;
}

std::optional<Coroot> coroot_from_simple_pairings(const RootSystem& sys,
                                                  const std::vector<int>& p) {
  // Solve A^T c = p exactly over the rationals.
  const int n = sys.rank();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = Rational(sys.datum().a[j][i]);
    m[i][n] = Rational(p[i]);
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int row = col; row < n; ++row)
      if (m[row][col] != Rational(0)) { piv = row; break; }
    if (piv < 0) return std::nullopt;
    std::swap(m[col], m[piv]);
    for (int row = 0; row < n; ++row) {
      if (row == col || m[row][col] == Rational(0)) continue;
      Rational f = m[row][col] / m[col][col];
      for (int k = col; k <= n; ++k) m[row][k] -= f * m[col][k];
    }
  }
  Coroot c;
  for (int i = 0; i < n; ++i) {
    Rational x = m[i][n] / m[i][i];
    if (!x.is_integer()) return std::nullopt;
    c.c[i] = static_cast<int16_t>(x.as_integer());
  }
  return c;
}

RootBits parabolic_positive(const RootSystem& sys, const std::vector<int>& simples) {
  std::array<bool, kMaxRank> in{};
  for (int i : simples) in[i] = true;
  RootBits bits;
  for (int p = 0; p < sys.positive_count(); ++p) {
    const Root& r = sys.positive_root(p);
    bool ok = true;
    for (int i = 0; i < sys.rank(); ++i)
      if (r.c[i] != 0 && !in[i]) { ok = false; break; }
    if (ok) bits.set(p);
  }
  return bits;
}

}  // namespace abideal
