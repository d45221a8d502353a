#include "linkage/integral.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace linkage {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Inverse of a modulo m, gcd(a, m) = 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  return mod(old_s, m);
}

using Key = std::pair<RootVector, std::int64_t>;  // (finite coroot part, c-degree)

bool key_positive(const Key& k) {
  if (k.second != 0) return k.second > 0;
  bool any = false;
  for (auto c : k.first) {
    if (c < 0) return false;
    any = any || c > 0;
  }
  return any;
}

bool is_zero(const RootVector& v) {
  return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
}

// All positive integral coroots (real and imaginary) of c-degree <= max_degree.
std::set<Key> integral_window(const RootDatum& datum, const Level& level, const std::vector<Progression>& progs,
                              std::int64_t max_degree) {
  std::set<Key> out;
  for (std::size_t a = 0; a < progs.size(); ++a) {
    const auto& p = progs[a];
    if (p.empty) continue;
    const int r = datum.root_lacing(a);
    const RootVector& pos = datum.positive_coroots()[a];
    RootVector neg = pos;
    for (auto& x : neg) x = -x;
    for (std::int64_t n = 0; n * r <= max_degree; ++n) {
      if (p.contains(n)) out.insert({pos, n * r});
      if (n >= 1 && p.contains(-n)) out.insert({neg, n * r});
      if (p.stride == 0) break;
    }
  }
  if (!level.is_generic()) {
    const Rational shifted = level.k() + datum.h_vee();
    for (std::int64_t m = 1; m <= max_degree; ++m) {
      if (is_integer(shifted * Rational(static_cast<long>(m)))) out.insert({RootVector(datum.rank(), 0), m});
    }
  }
  return out;
}

int max_lacing(const RootDatum& datum) {
  int r = 1;
  for (int i = 0; i < datum.rank(); ++i) r = std::max(r, datum.lacing(i));
  return r;
}

}  // namespace

// ---------------------------------------------------------------- progressions

bool Progression::contains(std::int64_t n) const {
  if (empty) return false;
  if (stride == 0) return n == offset;
  return mod(n - offset, stride) == 0;
}

std::optional<std::int64_t> Progression::least_nonnegative() const {
  if (empty) return std::nullopt;
  return offset;
}

std::optional<std::int64_t> Progression::least_positive_of_negation() const {
  if (empty || stride == 0) return std::nullopt;
  return offset == 0 ? stride : stride - offset;
}

std::vector<Progression> integral_progressions(const RootDatum& datum, const Level& level, const Weight& lambda) {
  require_noncritical(datum, level);
  datum.check_weight(lambda);
  const Weight shifted_weight = lambda + datum.rho();
  std::vector<Progression> out;
  out.reserve(datum.positive_coroots().size());
  for (std::size_t a = 0; a < datum.positive_coroots().size(); ++a) {
    const Rational finite = pair(shifted_weight, datum.positive_coroots()[a]);
    Progression p;
    if (level.is_generic()) {
      p.empty = !is_integer(finite);
      p.offset = 0;
      p.stride = 0;
      out.push_back(p);
      continue;
    }
    // finite + n * (r K) in Z, with r K = P / Q in lowest terms.
    const Rational step = Rational(datum.root_lacing(a)) * (level.k() + datum.h_vee());
    const std::int64_t big_p = to_int64(Rational(step.get_num()));
    const std::int64_t big_q = to_int64(Rational(step.get_den()));
    const Rational scaled = finite * Rational(static_cast<long>(big_q));
    if (!is_integer(scaled)) {
      out.push_back(p);
      continue;
    }
    // n P = -finite Q (mod Q)
    const std::int64_t rhs = mod(-to_int64(scaled), big_q);
    p.empty = false;
    p.stride = big_q;
    p.offset = big_q == 1 ? 0 : mod(rhs * mod_inverse(big_p, big_q), big_q);
    out.push_back(p);
  }
  return out;
}

std::int64_t required_search_bound(const RootDatum& datum, const Level& level, const Weight& lambda) {
  // (alpha^vee, n) with n past the first admissible value decomposes off an
  // integral imaginary coroot, so only the least admissible n can be simple.
  std::int64_t bound = 0;
  for (const auto& p : integral_progressions(datum, level, lambda)) {
    if (auto v = p.least_nonnegative()) bound = std::max(bound, *v);
    if (auto v = p.least_positive_of_negation()) bound = std::max(bound, *v);
  }
  return bound;
}

std::pair<RootVector, std::int64_t> reflect_affine_coroot(const RootDatum& datum, const AffineCoroot& x,
                                                          const RootVector& y, std::int64_t y_degree) {
  const RootVector root = datum.root_of(x.alpha_check);
  const std::int64_t p = datum.root_coroot_pairing(root, y);
  RootVector image = y;
  for (std::size_t i = 0; i < image.size(); ++i) image[i] -= p * x.alpha_check[i];
  return {image, y_degree - p * x.degree()};
}

std::vector<AffineCoroot> integral_simple_coroots(const RootDatum& datum, const Level& level, const Weight& lambda,
                                                  std::optional<std::int64_t> search_bound) {
  const auto progs = integral_progressions(datum, level, lambda);
  const std::int64_t required = required_search_bound(datum, level, lambda);
  const std::int64_t bound = search_bound.value_or(required);
  if (bound < 0) throw ConfigurationError("search bound must be non-negative");
  if (bound < required) {
    throw InconclusiveError("search bound " + std::to_string(bound) + " cannot certify the simple integral coroots (" +
                            std::to_string(required) + " needed)");
  }
  const std::int64_t max_degree = std::max<std::int64_t>(1, bound) * max_lacing(datum);
  const std::set<Key> window = integral_window(datum, level, progs, max_degree);

  std::vector<AffineCoroot> simple;
  for (const Key& x : window) {
    if (is_zero(x.first)) continue;  // imaginary
    const int r = datum.lacing_of_root(datum.root_of(x.first));
    const std::int64_t n = x.second / r;
    if (n > bound) continue;
    bool decomposable = false;
    for (const Key& y : window) {
      if (y.second > x.second) continue;
      if (y == x) continue;
      Key z{x.first, x.second - y.second};
      for (std::size_t i = 0; i < z.first.size(); ++i) z.first[i] -= y.first[i];
      if (key_positive(z) && window.count(z)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(AffineCoroot{x.first, n, r});
  }
  std::sort(simple.begin(), simple.end());

  // Reflection criterion: s_X permutes the positive integral real coroots other than X.
  for (const auto& x : simple) {
    for (const Key& y : window) {
      if (is_zero(y.first)) continue;
      if (y.first == x.alpha_check && y.second == x.degree()) continue;
      const auto image = reflect_affine_coroot(datum, x, y.first, y.second);
      if (!key_positive(image)) {
        throw std::logic_error("simple integral coroot " + x.to_string() + " fails the reflection criterion");
      }
    }
  }
  // Each irreducible affine component of rank m brings m + 1 generators.
  if (static_cast<int>(simple.size()) > 2 * datum.rank()) {
    throw std::logic_error("more than 2 rank simple integral coroots");
  }
  return simple;
}

// ---------------------------------------------------------------- (anti)dominance

namespace {

enum class Sense { Antidominant, Dominant };

bool satisfies(const RootDatum& datum, const Level& level, const Weight& lambda, Sense sense) {
  for (const auto& c : integral_simple_coroots(datum, level, lambda)) {
    const auto p = affine_pairing(datum, level, lambda, c);
    if (sense == Sense::Antidominant ? *p > 0 : *p < 0) return false;
  }
  return true;
}

bool satisfies_raw(const RootDatum& datum, const Level& level, const Weight& lambda, std::int64_t window, Sense sense) {
  const auto progs = integral_progressions(datum, level, lambda);
  for (std::size_t a = 0; a < progs.size(); ++a) {
    if (progs[a].empty) continue;
    const RootVector& pos = datum.positive_coroots()[a];
    RootVector neg = pos;
    for (auto& x : neg) x = -x;
    for (std::int64_t n = 0; n <= window; ++n) {
      for (int sign : {1, -1}) {
        if (sign == -1 && n == 0) continue;
        const AffineCoroot c{sign > 0 ? pos : neg, n, datum.root_lacing(a)};
        const auto p = affine_pairing(datum, level, lambda, c);
        if (!p || !is_integer(*p)) continue;
        if (sense == Sense::Antidominant ? *p > 0 : *p < 0) return false;
      }
      if (level.is_generic()) break;
    }
  }
  return true;
}

}  // namespace

bool is_antidominant(const RootDatum& datum, const Level& level, const Weight& lambda) {
  return satisfies(datum, level, lambda, Sense::Antidominant);
}

bool is_dominant(const RootDatum& datum, const Level& level, const Weight& lambda) {
  return satisfies(datum, level, lambda, Sense::Dominant);
}

bool is_normalized(const RootDatum& datum, const Level& level, const Weight& lambda) {
  return level_sign(datum, level) == LevelSign::Negative ? is_antidominant(datum, level, lambda)
                                                         : is_dominant(datum, level, lambda);
}

bool is_antidominant_raw(const RootDatum& datum, const Level& level, const Weight& lambda, std::int64_t window) {
  return satisfies_raw(datum, level, lambda, window, Sense::Antidominant);
}

bool is_dominant_raw(const RootDatum& datum, const Level& level, const Weight& lambda, std::int64_t window) {
  return satisfies_raw(datum, level, lambda, window, Sense::Dominant);
}

Normalization antidominantize(const RootDatum& datum, const Level& level, const Weight& lambda, int step_bound) {
  require_noncritical(datum, level);
  datum.check_weight(lambda);
  const bool negative = level_sign(datum, level) == LevelSign::Negative;
  // W_lambda preserves the set of integral coroots, so Pi is fixed along the way.
  const auto simple = integral_simple_coroots(datum, level, lambda);
  Normalization out{lambda, AffineWeylElement::identity(datum.rank())};
  for (int step = 0;; ++step) {
    const AffineCoroot* wrong = nullptr;
    for (const auto& c : simple) {
      const Rational p = *affine_pairing(datum, level, out.normalized, c);
      if (negative ? p > 0 : p < 0) {
        wrong = &c;
        break;
      }
    }
    if (!wrong) return out;
    if (step >= step_bound) {
      throw InconclusiveError("normalization did not finish within " + std::to_string(step_bound) + " reflections");
    }
    const AffineWeylElement s = reflection_of(datum, *wrong);
    out.normalized = act_dot(datum, s, level, out.normalized);
    out.mover = s * out.mover;
  }
}

// ---------------------------------------------------------------- IntegralSystem

bool IntegralSystem::in_j_finite(int i) const { return std::find(j_finite.begin(), j_finite.end(), i) != j_finite.end(); }
bool IntegralSystem::in_j_stab(int i) const { return std::find(j_stab.begin(), j_stab.end(), i) != j_stab.end(); }

bool operator==(const IntegralSystem& a, const IntegralSystem& b) {
  return a.datum->label() == b.datum->label() && a.level == b.level && a.base_weight == b.base_weight &&
         a.simple_coroots == b.simple_coroots;
}

std::pair<std::vector<int>, std::vector<int>> parabolic_subsets(const IntegralSystem& system) {
  std::vector<int> finite, stab;
  for (int i = 0; i < system.size(); ++i) {
    const auto& c = system.simple_coroots[i];
    if (c.n == 0) finite.push_back(i);
    const auto p = affine_pairing(*system.datum, system.level, system.base_weight, c);
    if (p && *p == 0) stab.push_back(i);
  }
  return {finite, stab};
}

IntegralSystem simple_integral_coroots(std::shared_ptr<const RootDatum> datum, const Level& level,
                                       const Weight& lambda, std::optional<std::int64_t> search_bound) {
  if (!datum) throw ConfigurationError("null root datum");
  require_noncritical(*datum, level);
  IntegralSystem sys;
  sys.datum = datum;
  sys.level = level;
  sys.sense = level_sign(*datum, level);
  sys.base_weight = lambda;
  sys.search_bound = search_bound.value_or(required_search_bound(*datum, level, lambda));
  sys.simple_coroots = integral_simple_coroots(*datum, level, lambda, sys.search_bound);
  const bool negative = sys.sense == LevelSign::Negative;
  for (const auto& c : sys.simple_coroots) {
    const Rational p = *affine_pairing(*datum, level, lambda, c);
    if (negative ? p > 0 : p < 0) {
      throw ConfigurationError("weight " + lambda.to_string() + " is not " +
                               (negative ? "antidominant" : "dominant") + " at level " + level.to_string());
    }
  }
  const int m = sys.size();
  sys.cartan_integral.assign(m, std::vector<std::int64_t>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const RootVector root_j = datum->root_of(sys.simple_coroots[j].alpha_check);
      sys.cartan_integral[i][j] = datum->root_coroot_pairing(root_j, sys.simple_coroots[i].alpha_check);
    }
  std::tie(sys.j_finite, sys.j_stab) = parabolic_subsets(sys);
  for (const auto& c : sys.simple_coroots) sys.reflections.push_back(reflection_of(*datum, c));
  return sys;
}

}  // namespace linkage
