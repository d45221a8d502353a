#include "linkage/rootdata.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace linkage {

// ---------------------------------------------------------------- Weight

Weight& Weight::operator+=(const Weight& o) {
  if (o.rank() != rank()) throw ConfigurationError("weight rank mismatch");
  for (int i = 0; i < rank(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.rank() != rank()) throw ConfigurationError("weight rank mismatch");
  for (int i = 0; i < rank(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Weight& Weight::operator*=(const Rational& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

Weight Weight::operator-() const {
  Weight r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

bool operator<(const Weight& a, const Weight& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(), b.coords_.end(),
                                      [](const Rational& x, const Rational& y) { return cmp(x, y) < 0; });
}

std::string Weight::to_string() const {
  std::string out;
  for (int i = 0; i < rank(); ++i) {
    if (i) out += ',';
    out += linkage::to_string(coords_[i]);
  }
  return out;
}

Weight Weight::parse(const std::string& csv, int rank) {
  std::vector<Rational> coords;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) coords.push_back(parse_rational(item));
  if (!csv.empty() && csv.back() == ',') throw ConfigurationError("trailing comma in weight '" + csv + "'");
  // A single "0" is shorthand for the zero weight.
  if (coords.size() == 1 && rank > 1 && coords[0] == 0) coords.assign(rank, Rational(0));
  if (static_cast<int>(coords.size()) != rank) {
    throw ConfigurationError("weight '" + csv + "' has " + std::to_string(coords.size()) +
                             " coordinates, expected " + std::to_string(rank));
  }
  return Weight(std::move(coords));
}

// ---------------------------------------------------------------- pairings

Rational pair(const Weight& lambda, const RootVector& coroot) {
  if (static_cast<int>(coroot.size()) != lambda.rank()) throw ConfigurationError("pairing dimension mismatch");
  Rational s = 0;
  for (int i = 0; i < lambda.rank(); ++i) {
    if (coroot[i] != 0) s += lambda[i] * Rational(static_cast<long>(coroot[i]));
  }
  return s;
}

Rational pair(const Weight& lambda, const std::vector<Rational>& coroot) {
  if (static_cast<int>(coroot.size()) != lambda.rank()) throw ConfigurationError("pairing dimension mismatch");
  Rational s = 0;
  for (int i = 0; i < lambda.rank(); ++i) s += lambda[i] * coroot[i];
  return s;
}

// ---------------------------------------------------------------- tables

namespace {

std::vector<int> cartan_matrix(char type, int n) {
  std::vector<int> a(n * n, 0);
  auto set = [&](int i, int j, int v) { a[i * n + j] = v; };
  for (int i = 0; i < n; ++i) set(i, i, 2);
  auto chain = [&](int len) {
    for (int i = 0; i + 1 < len; ++i) {
      set(i, i + 1, -1);
      set(i + 1, i, -1);
    }
  };
  switch (type) {
    case 'A':
      chain(n);
      break;
    case 'B':  // alpha_n short
      chain(n);
      set(n - 1, n - 2, -2);
      break;
    case 'C':  // alpha_n long
      chain(n);
      set(n - 2, n - 1, -2);
      break;
    case 'D':
      chain(n - 1);
      set(n - 3, n - 1, -1);
      set(n - 1, n - 3, -1);
      break;
    case 'E':  // Bourbaki: 1-3-4-5-6-7-8, 2 attached to 4
      for (auto [i, j] : std::vector<std::pair<int, int>>{{0, 2}, {2, 3}, {3, 4}, {1, 3}}) {
        set(i, j, -1);
        set(j, i, -1);
      }
      for (int i = 4; i + 1 < n; ++i) {
        set(i, i + 1, -1);
        set(i + 1, i, -1);
      }
      break;
    case 'F':  // alpha_1, alpha_2 long
      chain(4);
      set(2, 1, -2);
      break;
    case 'G':  // alpha_1 short
      set(0, 1, -3);
      set(1, 0, -1);
      break;
    default:
      break;
  }
  return a;
}

bool supported(char type, int n) {
  if (n < 1 || n > 8) return false;
  switch (type) {
    case 'A': return true;
    case 'B': case 'C': return n >= 2;
    case 'D': return n >= 4;
    case 'E': return n >= 6;
    case 'F': return n == 4;
    case 'G': return n == 2;
    default: return false;
  }
}

int height(const RootVector& v) { return static_cast<int>(std::accumulate(v.begin(), v.end(), std::int64_t{0})); }

}  // namespace

std::vector<RootVector> positive_roots_of_cartan(const std::vector<int>& cartan, int n) {
  // Root strings: beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0,
  // where p is the length of the alpha_i string below beta.
  std::vector<RootVector> roots;
  std::map<RootVector, int> index;
  for (int i = 0; i < n; ++i) {
    RootVector e(n, 0);
    e[i] = 1;
    index[e] = static_cast<int>(roots.size());
    roots.push_back(e);
  }
  for (std::size_t a = 0; a < roots.size(); ++a) {
    const RootVector beta = roots[a];
    for (int i = 0; i < n; ++i) {
      std::int64_t pairing = 0;
      for (int j = 0; j < n; ++j) pairing += beta[j] * cartan[i * n + j];
      int p = 0;
      RootVector down = beta;
      while (true) {
        down[i] -= 1;
        if (!index.count(down)) break;
        ++p;
      }
      if (p - pairing > 0) {
        RootVector up = beta;
        up[i] += 1;
        if (!index.count(up)) {
          index[up] = static_cast<int>(roots.size());
          roots.push_back(up);
        }
      }
      if (roots.size() > 10000) throw ConfigurationError("Cartan matrix is not of finite type");
    }
  }
  std::stable_sort(roots.begin(), roots.end(), [](const RootVector& x, const RootVector& y) {
    const int hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    return x > y;
  });
  return roots;
}

std::uint64_t weyl_group_order(const std::vector<int>& cartan, int n) {
  if (n == 0) return 1;
  const auto roots = positive_roots_of_cartan(cartan, n);
  int max_height = 0;
  for (const auto& r : roots) max_height = std::max(max_height, height(r));
  std::vector<int> per_height(max_height + 1, 0);
  for (const auto& r : roots) ++per_height[height(r)];
  // The height partition is dual to the partition of exponents.
  std::uint64_t order = 1;
  for (int i = 1; i <= n; ++i) {
    int exponent = 0;
    for (int j = 1; j <= max_height; ++j) exponent += per_height[j] >= i ? 1 : 0;
    order *= static_cast<std::uint64_t>(exponent + 1);
  }
  return order;
}

// ---------------------------------------------------------------- RootDatum

std::string RootDatum::label() const { return std::string(1, type_) + std::to_string(rank_); }

Weight RootDatum::root_weight(const RootVector& root) const {
  Weight w = Weight::zero(rank_);
  for (int i = 0; i < rank_; ++i) {
    std::int64_t s = 0;
    for (int j = 0; j < rank_; ++j) s += cartan(i, j) * root[j];
    w[i] = Rational(static_cast<long>(s));
  }
  return w;
}

std::int64_t RootDatum::root_coroot_pairing(const RootVector& root, const RootVector& coroot) const {
  std::int64_t s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (coroot[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) s += coroot[i] * cartan(i, j) * root[j];
  }
  return s;
}

int RootDatum::lacing_of_root(const RootVector& root) const {
  // (alpha, alpha) = sum c_i c_j (alpha_i, alpha_j), (alpha_i, alpha_j) = a_ij / r_i.
  Rational norm = 0;
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) {
      if (root[i] && root[j]) norm += ratio(root[i] * root[j] * cartan(i, j), lacing_[i]);
    }
  }
  const Rational r = Rational(2) / norm;
  return static_cast<int>(to_int64(r));
}

RootVector RootDatum::coroot_of(const RootVector& root) const {
  const int r = lacing_of_root(root);
  RootVector c(rank_);
  for (int i = 0; i < rank_; ++i) c[i] = r * root[i] / lacing_[i];
  return c;
}

RootVector RootDatum::root_of(const RootVector& coroot) const {
  // Inverse of coroot_of: alpha_i coefficient = d_i r_i / r_alpha.
  for (std::size_t a = 0; a < coroots_.size(); ++a) {
    if (coroots_[a] == coroot) return roots_[a];
    RootVector neg = coroots_[a];
    for (auto& x : neg) x = -x;
    if (neg == coroot) {
      RootVector r = roots_[a];
      for (auto& x : r) x = -x;
      return r;
    }
  }
  throw ConfigurationError("not a coroot of " + label());
}

int RootDatum::coroot_index(const RootVector& coroot) const {
  for (std::size_t a = 0; a < coroots_.size(); ++a) {
    if (coroots_[a] == coroot) return static_cast<int>(a);
    bool neg = true;
    for (int i = 0; i < rank_ && neg; ++i) neg = coroots_[a][i] == -coroot[i];
    if (neg) return static_cast<int>(a);
  }
  return -1;
}

Weight RootDatum::reflect(int i, Weight lambda) const {
  const Rational li = lambda[i];
  if (li == 0) return lambda;
  for (int j = 0; j < rank_; ++j) {
    const int a = cartan(j, i);
    if (a) lambda[j] -= li * a;
  }
  return lambda;
}

RootVector RootDatum::reflect_coroot(int i, RootVector coroot) const {
  // <alpha_i, beta^vee> = sum_j d_j a_ji
  std::int64_t p = 0;
  for (int j = 0; j < rank_; ++j) p += coroot[j] * cartan(j, i);
  coroot[i] -= p;
  return coroot;
}

void RootDatum::check_weight(const Weight& lambda) const {
  if (lambda.rank() != rank_) {
    throw ConfigurationError("weight of rank " + std::to_string(lambda.rank()) + " used with " + label());
  }
}

void RootDatum::validate() const {
  auto fail = [&](const std::string& what) { throw std::logic_error(label() + " table invariant failed: " + what); };
  for (int i = 0; i < rank_; ++i) {
    if (pair(rho_, coroots_[i]) != 1) fail("<rho, alpha_i^vee> = 1");
  }
  if (pair(rho_, theta_check()) != h_vee_ - 1) fail("<rho, theta^vee> = h^vee - 1");
  // kappa_b(alpha_i^vee, alpha_j^vee) = r_j a_ij
  std::int64_t kappa = 0;
  const auto& t = theta_check();
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) kappa += t[i] * t[j] * lacing_[j] * cartan(i, j);
  if (kappa != 2) fail("kappa_b(theta^vee, theta^vee) = 2");
  if (root_lacing_[theta_index_] != 1) fail("theta is long");
  if (2 * num_positive_roots() != dim_g() - rk_g()) fail("dim N");
  Weight probe = Weight::zero(rank_);
  for (int i = 0; i < rank_; ++i) probe[i] = ratio(2 * i + 3, i + 7);
  if (finite_act(*this, w_circ_, finite_act(*this, w_circ_, probe)) != probe) fail("w_circ is an involution");
  for (int i = 0; i < rank_; ++i) {
    RootVector e(rank_, 0);
    e[i] = 1;
    const Weight image = finite_act(*this, w_circ_, root_weight(e));
    RootVector f(rank_, 0);
    f[tau_[i]] = 1;
    if (image != -root_weight(f)) fail("w_circ(alpha_i) = -alpha_tau(i)");
  }
}

std::shared_ptr<const RootDatum> build_root_datum(char type, int rank) {
  if (!supported(type, rank)) {
    throw ConfigurationError("unsupported Lie type " + std::string(1, type) + std::to_string(rank));
  }
  std::shared_ptr<RootDatum> d(new RootDatum());
  d->type_ = type;
  d->rank_ = rank;
  d->cartan_ = cartan_matrix(type, rank);
  const int n = rank;

  // Relative lengths: a_ij / a_ji = |alpha_j|^2 / |alpha_i|^2 along edges.
  std::vector<Rational> norm(n, Rational(0));
  norm[0] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      if (norm[i] == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (j == i || norm[j] != 0 || d->cartan(i, j) == 0) continue;
        norm[j] = norm[i] * ratio(d->cartan(i, j), d->cartan(j, i));
        changed = true;
      }
    }
  }
  const Rational longest = *std::max_element(norm.begin(), norm.end(), [](auto& a, auto& b) { return a < b; });
  d->lacing_.resize(n);
  for (int i = 0; i < n; ++i) d->lacing_[i] = static_cast<int>(to_int64(longest / norm[i]));

  d->roots_ = positive_roots_of_cartan(d->cartan_, n);
  for (const auto& r : d->roots_) {
    d->root_lacing_.push_back(d->lacing_of_root(r));
    d->coroots_.push_back(d->coroot_of(r));
  }

  d->rho_ = Weight(std::vector<Rational>(n, Rational(1)));
  d->rho_check_.assign(n, Rational(0));
  for (const auto& c : d->coroots_)
    for (int i = 0; i < n; ++i) d->rho_check_[i] += Rational(static_cast<long>(c[i]), 2);

  d->theta_index_ = d->roots_.size() - 1;  // unique root of maximal height
  d->h_vee_ = 1 + static_cast<int>(std::accumulate(d->theta_check().begin(), d->theta_check().end(), std::int64_t{0}));
  d->weyl_order_ = weyl_group_order(d->cartan_, n);

  // Longest element: push rho to -rho by simple reflections.
  Weight v = d->rho_;
  Word applied;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i < n; ++i) {
      if (v[i] > 0) {
        v = d->reflect(i, v);
        applied.push_back(i);
        moved = true;
        break;
      }
    }
  }
  d->w_circ_ = Word(applied.rbegin(), applied.rend());
  d->tau_.resize(n);
  for (int i = 0; i < n; ++i) {
    RootVector e(n, 0);
    e[i] = 1;
    const Weight image = -finite_act(*d, d->w_circ_, d->root_weight(e));
    for (int j = 0; j < n; ++j) {
      RootVector f(n, 0);
      f[j] = 1;
      if (d->root_weight(f) == image) d->tau_[i] = j;
    }
  }

  d->rho_rho_check_ = 0;
  for (const auto& x : d->rho_check_) d->rho_rho_check_ += x;
  d->kappa_rho_check_ = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d->kappa_rho_check_ += d->rho_check_[i] * d->rho_check_[j] * (d->lacing_[j] * d->cartan(i, j));

  d->validate();
  return d;
}

// ---------------------------------------------------------------- actions

Weight finite_act(const RootDatum& datum, const Word& w, Weight lambda) {
  datum.check_weight(lambda);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (*it < 0 || *it >= datum.rank()) throw ConfigurationError("reflection index out of range");
    lambda = datum.reflect(*it, std::move(lambda));
  }
  return lambda;
}

Weight finite_dot_act(const RootDatum& datum, const Word& w, const Weight& lambda) {
  return finite_act(datum, w, lambda + datum.rho()) - datum.rho();
}

RootVector finite_act_coroot(const RootDatum& datum, const Word& w, RootVector coroot) {
  if (static_cast<int>(coroot.size()) != datum.rank()) throw ConfigurationError("coroot dimension mismatch");
  for (auto it = w.rbegin(); it != w.rend(); ++it) coroot = datum.reflect_coroot(*it, std::move(coroot));
  return coroot;
}

}  // namespace linkage
