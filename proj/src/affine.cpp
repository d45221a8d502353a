#include "linkage/affine.hpp"

#include <numeric>

namespace linkage {

// ---------------------------------------------------------------- Level

Level Level::parse(const std::string& text) {
  if (text == "generic-neg") return generic_negative();
  if (text == "generic-pos") return generic_positive();
  return rational(parse_rational(text));
}

const Rational& Level::k() const {
  if (kind_ != Kind::Rational) throw ConfigurationError("generic level has no rational value");
  return k_;
}

std::string Level::to_string() const {
  switch (kind_) {
    case Kind::GenericNegative: return "generic-neg";
    case Kind::GenericPositive: return "generic-pos";
    default: return linkage::to_string(k_);
  }
}

LevelSign level_sign(const RootDatum& datum, const Level& level) {
  switch (level.kind()) {
    case Level::Kind::GenericNegative: return LevelSign::Negative;
    case Level::Kind::GenericPositive: return LevelSign::Positive;
    default: break;
  }
  const Rational shifted = level.k() + datum.h_vee();
  if (shifted < 0) return LevelSign::Negative;
  if (shifted > 0) return LevelSign::Positive;
  return LevelSign::Critical;
}

void require_noncritical(const RootDatum& datum, const Level& level) {
  if (level_sign(datum, level) == LevelSign::Critical) {
    throw CriticalLevelError("critical level k = " + level.to_string() + " for " + datum.label());
  }
}

std::optional<Rational> shifted_level(const RootDatum& datum, const Level& level) {
  if (level.is_generic()) return std::nullopt;
  return level.k() + datum.h_vee();
}

// ---------------------------------------------------------------- W_f

namespace {

std::vector<std::int64_t> eye(int n) {
  std::vector<std::int64_t> m(n * n, 0);
  for (int i = 0; i < n; ++i) m[i * n + i] = 1;
  return m;
}

std::vector<std::int64_t> multiply(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b, int n) {
  std::vector<std::int64_t> c(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const auto aik = a[i * n + k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
    }
  return c;
}

void hash_combine(std::size_t& seed, std::int64_t v) {
  seed ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace

FiniteWeylElement FiniteWeylElement::identity(int rank) {
  FiniteWeylElement e;
  e.rank_ = rank;
  e.matrix_ = eye(rank);
  e.inverse_ = e.matrix_;
  return e;
}

FiniteWeylElement FiniteWeylElement::simple(const RootDatum& datum, int i) {
  RootVector e(datum.rank(), 0);
  e[i] = 1;
  return reflection(datum, e);
}

FiniteWeylElement FiniteWeylElement::reflection(const RootDatum& datum, const RootVector& root) {
  const int n = datum.rank();
  const Weight alpha = datum.root_weight(root);
  const RootVector coroot = datum.coroot_of(root);
  FiniteWeylElement s;
  s.rank_ = n;
  s.matrix_ = eye(n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) s.matrix_[j * n + k] -= to_int64(alpha[j]) * coroot[k];
  s.inverse_ = s.matrix_;
  return s;
}

FiniteWeylElement FiniteWeylElement::from_word(const RootDatum& datum, const Word& w) {
  FiniteWeylElement r = identity(datum.rank());
  for (int i : w) {
    if (i < 0 || i >= datum.rank()) throw ConfigurationError("reflection index out of range");
    r = r * simple(datum, i);
  }
  return r;
}

bool FiniteWeylElement::is_identity() const { return matrix_ == eye(rank_); }

Weight FiniteWeylElement::act(const Weight& lambda) const {
  if (lambda.rank() != rank_) throw ConfigurationError("weight rank mismatch");
  Weight out = Weight::zero(rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) {
      const auto m = matrix_[i * rank_ + j];
      if (m) out[i] += lambda[j] * Rational(static_cast<long>(m));
    }
  return out;
}

RootVector FiniteWeylElement::act_integral(const RootVector& weight) const {
  RootVector out(rank_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) out[i] += matrix_[i * rank_ + j] * weight[j];
  return out;
}

RootVector FiniteWeylElement::act_coroot(const RootVector& coroot) const {
  // Pairing invariance <y lambda, y c> = <lambda, c> forces y c = M^{-T} c.
  RootVector out(rank_, 0);
  for (int j = 0; j < rank_; ++j)
    for (int k = 0; k < rank_; ++k) out[j] += inverse_[k * rank_ + j] * coroot[k];
  return out;
}

FiniteWeylElement FiniteWeylElement::inverse() const {
  FiniteWeylElement r;
  r.rank_ = rank_;
  r.matrix_ = inverse_;
  r.inverse_ = matrix_;
  return r;
}

FiniteWeylElement operator*(const FiniteWeylElement& a, const FiniteWeylElement& b) {
  FiniteWeylElement r;
  r.rank_ = a.rank_;
  r.matrix_ = multiply(a.matrix_, b.matrix_, a.rank_);
  r.inverse_ = multiply(b.inverse_, a.inverse_, a.rank_);
  return r;
}

std::size_t FiniteWeylElement::hash() const {
  std::size_t seed = static_cast<std::size_t>(rank_);
  for (auto v : matrix_) hash_combine(seed, v);
  return seed;
}

// ---------------------------------------------------------------- coroots

bool AffineCoroot::finite_part_positive() const {
  bool any = false;
  for (auto c : alpha_check) {
    if (c < 0) return false;
    any = any || c > 0;
  }
  return any;
}

std::string AffineCoroot::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < alpha_check.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(alpha_check[i]);
  }
  return s + ";" + std::to_string(n) + ")";
}

bool operator<(const AffineCoroot& a, const AffineCoroot& b) {
  if (a.n != b.n) return a.n < b.n;
  const auto ha = std::accumulate(a.alpha_check.begin(), a.alpha_check.end(), std::int64_t{0});
  const auto hb = std::accumulate(b.alpha_check.begin(), b.alpha_check.end(), std::int64_t{0});
  if (ha != hb) return ha < hb;
  return a.alpha_check > b.alpha_check;
}

AffineCoroot make_affine_coroot(const RootDatum& datum, RootVector alpha_check, std::int64_t n) {
  if (static_cast<int>(alpha_check.size()) != datum.rank()) throw ConfigurationError("coroot dimension mismatch");
  if (datum.coroot_index(alpha_check) < 0) throw ConfigurationError("not a coroot of " + datum.label());
  const int r = datum.lacing_of_root(datum.root_of(alpha_check));
  return AffineCoroot{std::move(alpha_check), n, r};
}

AffineCoroot affine_simple_coroot(const RootDatum& datum) {
  RootVector c = datum.theta_check();
  for (auto& x : c) x = -x;
  return AffineCoroot{c, 1, 1};
}

// ---------------------------------------------------------------- W

bool in_long_root_lattice(const RootDatum& datum, const RootVector& mu) {
  const int n = datum.rank();
  if (static_cast<int>(mu.size()) != n) return false;
  // Solve A c = mu over Q by Gauss-Jordan; then need c_i / r_i integral.
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = datum.cartan(i, j);
    m[i][n] = Rational(static_cast<long>(mu[i]));
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (m[piv][col] == 0) ++piv;
    std::swap(m[piv], m[col]);
    const Rational p = m[col][col];
    for (auto& x : m[col]) x /= p;
    for (int i = 0; i < n; ++i) {
      if (i == col || m[i][col] == 0) continue;
      const Rational f = m[i][col];
      for (int j = 0; j <= n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  for (int i = 0; i < n; ++i) {
    if (!is_integer(m[i][n] / datum.lacing(i))) return false;
  }
  return true;
}

AffineWeylElement::AffineWeylElement(FiniteWeylElement y, RootVector mu) : y_(std::move(y)), mu_(std::move(mu)) {
  if (static_cast<int>(mu_.size()) != y_.rank()) throw ConfigurationError("translation rank mismatch");
}

AffineWeylElement AffineWeylElement::identity(int rank) {
  return AffineWeylElement(FiniteWeylElement::identity(rank), RootVector(rank, 0));
}

AffineWeylElement AffineWeylElement::finite(FiniteWeylElement y) {
  const int n = y.rank();
  return AffineWeylElement(std::move(y), RootVector(n, 0));
}

AffineWeylElement AffineWeylElement::translation(const RootDatum& datum, RootVector mu) {
  if (!in_long_root_lattice(datum, mu)) throw ConfigurationError("translation is not in the long-root lattice");
  return AffineWeylElement(FiniteWeylElement::identity(datum.rank()), std::move(mu));
}

bool AffineWeylElement::is_identity() const { return is_finite() && y_.is_identity(); }

bool AffineWeylElement::is_finite() const {
  for (auto x : mu_)
    if (x) return false;
  return true;
}

AffineWeylElement AffineWeylElement::inverse() const {
  FiniteWeylElement yi = y_.inverse();
  RootVector m = yi.act_integral(mu_);
  for (auto& x : m) x = -x;
  return AffineWeylElement(std::move(yi), std::move(m));
}

AffineWeylElement operator*(const AffineWeylElement& a, const AffineWeylElement& b) {
  RootVector mu = a.y_.act_integral(b.mu_);
  for (std::size_t i = 0; i < mu.size(); ++i) mu[i] += a.mu_[i];
  return AffineWeylElement(a.y_ * b.y_, std::move(mu));
}

std::size_t AffineWeylElement::hash() const {
  std::size_t seed = y_.hash();
  for (auto v : mu_) hash_combine(seed, v);
  return seed;
}

std::pair<RootVector, std::int64_t> AffineWeylElement::act_coroot(const RootVector& alpha_check,
                                                                  std::int64_t degree) const {
  RootVector image = y_.act_coroot(alpha_check);
  std::int64_t shift = 0;
  for (std::size_t i = 0; i < image.size(); ++i) shift += mu_[i] * image[i];
  return {std::move(image), degree - shift};
}

// ---------------------------------------------------------------- actions

Weight act_naive(const AffineWeylElement& w, const Rational& k, const Weight& lambda) {
  Weight out = w.y().act(lambda);
  for (int i = 0; i < out.rank(); ++i) {
    if (w.mu()[i]) out[i] += k * Rational(static_cast<long>(w.mu()[i]));
  }
  return out;
}

Weight act_dot(const RootDatum& datum, const AffineWeylElement& w, const Level& level, const Weight& lambda) {
  require_noncritical(datum, level);
  datum.check_weight(lambda);
  if (level.is_generic()) {
    if (!w.is_finite()) throw ConfigurationError("translations act symbolically at a generic level");
    return w.y().act(lambda + datum.rho()) - datum.rho();
  }
  return act_naive(w, level.k() + datum.h_vee(), lambda + datum.rho()) - datum.rho();
}

std::optional<Rational> affine_pairing(const RootDatum& datum, const Level& level, const Weight& lambda,
                                       const AffineCoroot& c) {
  require_noncritical(datum, level);
  const Rational finite = pair(lambda + datum.rho(), c.alpha_check);
  if (c.n == 0) return finite;
  if (level.is_generic()) return std::nullopt;
  return finite + Rational(static_cast<long>(c.degree())) * (level.k() + datum.h_vee());
}

AffineWeylElement reflection_of(const RootDatum& datum, const AffineCoroot& c) {
  bool zero = true;
  for (auto x : c.alpha_check) zero = zero && x == 0;
  if (zero) throw ConfigurationError("reflection of the zero coroot");
  const RootVector root = datum.root_of(c.alpha_check);
  FiniteWeylElement s = FiniteWeylElement::reflection(datum, root);
  const Weight alpha = datum.root_weight(root);
  RootVector mu(datum.rank());
  for (int i = 0; i < datum.rank(); ++i) mu[i] = -c.degree() * to_int64(alpha[i]);
  return AffineWeylElement(std::move(s), std::move(mu));
}

Weight ff_flip(const RootDatum& datum, const Weight& lambda) {
  datum.check_weight(lambda);
  return -lambda - Rational(2) * datum.rho();
}

Level ff_flip_level(const RootDatum& datum, const Level& level) {
  switch (level.kind()) {
    case Level::Kind::GenericNegative: return Level::generic_positive();
    case Level::Kind::GenericPositive: return Level::generic_negative();
    default: return Level::rational(-level.k() - 2 * datum.h_vee());
  }
}

Weight negate_naive(const Weight& lambda) { return -lambda; }

}  // namespace linkage
