#include "linkage/blocks.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace linkage {

namespace {

bool coroot_positive(const RootVector& v, std::int64_t degree) {
  if (degree != 0) return degree > 0;
  bool any = false;
  for (auto c : v) {
    if (c < 0) return false;
    any = any || c > 0;
  }
  return any;
}

void check_generator(const IntegralSystem& system, int i) {
  if (i < 0 || i >= system.size()) throw ConfigurationError("generator index out of range");
}

}  // namespace

bool has_right_descent(const IntegralSystem& system, const AffineWeylElement& w, int i) {
  check_generator(system, i);
  const auto& x = system.simple_coroots[i];
  const auto [v, d] = w.act_coroot(x.alpha_check, x.degree());
  return !coroot_positive(v, d);
}

bool has_left_descent(const IntegralSystem& system, const AffineWeylElement& w, int i) {
  return has_right_descent(system, w.inverse(), i);
}

AffineWeylElement element_of_word(const IntegralSystem& system, const Word& word) {
  AffineWeylElement w = AffineWeylElement::identity(system.datum->rank());
  for (int i : word) {
    check_generator(system, i);
    w = w * system.reflections[i];
  }
  return w;
}

std::vector<IntegralElement> enumerate_integral_group(const IntegralSystem& system, int max_len) {
  if (max_len < 0) throw ConfigurationError("length bound must be non-negative");
  std::vector<IntegralElement> out;
  std::unordered_map<AffineWeylElement, int, AffineWeylHash> seen;
  out.push_back({AffineWeylElement::identity(system.datum->rank()), {}});
  seen.emplace(out.back().element, 0);
  std::size_t shell_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    const std::size_t shell_end = out.size();
    // Parents are visited in word order, so the first word found is the least.
    for (std::size_t p = shell_begin; p < shell_end; ++p) {
      for (int i = 0; i < system.size(); ++i) {
        if (has_right_descent(system, out[p].element, i)) continue;
        AffineWeylElement next = out[p].element * system.reflections[i];
        if (seen.count(next)) continue;
        Word word = out[p].word;
        word.push_back(i);
        seen.emplace(next, static_cast<int>(out.size()));
        out.push_back({std::move(next), std::move(word)});
      }
    }
    std::sort(out.begin() + shell_end, out.end(), [](const auto& a, const auto& b) { return a.word < b.word; });
    if (out.size() == shell_end) break;
    shell_begin = shell_end;
  }
  return out;
}

AffineWeylElement minimal_coset_rep(const IntegralSystem& system, AffineWeylElement w, bool two_sided) {
  for (bool changed = true; changed;) {
    changed = false;
    if (two_sided) {
      for (int i : system.j_finite) {
        if (has_left_descent(system, w, i)) {
          w = system.reflections[i] * w;
          changed = true;
        }
      }
    }
    for (int i : system.j_stab) {
      if (has_right_descent(system, w, i)) {
        w = w * system.reflections[i];
        changed = true;
      }
    }
  }
  return w;
}

bool bruhat_leq(const IntegralSystem& system, AffineWeylElement u, AffineWeylElement w) {
  // If s is a right descent of w: u <= w iff min(u, us) <= ws.
  while (!w.is_identity()) {
    int s = -1;
    for (int i = 0; i < system.size() && s < 0; ++i) {
      if (has_right_descent(system, w, i)) s = i;
    }
    if (s < 0) throw std::logic_error("non-identity element without a right descent");
    if (has_right_descent(system, u, s)) u = u * system.reflections[s];
    w = w * system.reflections[s];
  }
  return u.is_identity();
}

bool bruhat_leq(const CosetRep& v, const CosetRep& w) {
  if (!v.system || !w.system || !(v.system == w.system || *v.system == *w.system)) {
    throw ConfigurationError("Bruhat comparison across different integral systems");
  }
  if (v.length > w.length) return false;
  return bruhat_leq(*v.system, v.element, w.element);
}

namespace {

BlockPoset enumerate(std::shared_ptr<const IntegralSystem> system, int max_len, bool two_sided) {
  if (!system) throw ConfigurationError("null integral system");
  const RootDatum& datum = *system->datum;
  BlockPoset poset;
  poset.system = system;
  poset.truncation_length = max_len;
  poset.two_sided = two_sided;
  for (auto& e : enumerate_integral_group(*system, max_len)) {
    bool minimal = true;
    if (two_sided) {
      for (int i : system->j_finite) minimal = minimal && !has_left_descent(*system, e.element, i);
    }
    for (int i : system->j_stab) minimal = minimal && !has_right_descent(*system, e.element, i);
    if (!minimal) continue;
    CosetRep rep;
    rep.length = static_cast<int>(e.word.size());
    rep.word = std::move(e.word);
    const Weight moved = act_dot(datum, e.element, system->level, system->base_weight);
    rep.weight = two_sided ? weight_normal_form(datum, moved) : moved;
    rep.element = std::move(e.element);
    rep.system = system;
    rep.two_sided = two_sided;
    poset.reps.push_back(std::move(rep));
  }
  const int n = poset.size();
  poset.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) poset.leq[i][j] = bruhat_leq(poset.reps[i], poset.reps[j]);
  // Covers: i < j with nothing strictly between.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !poset.leq[i][j]) continue;
      bool cover = true;
      for (int k = 0; k < n && cover; ++k) {
        if (k != i && k != j && poset.leq[i][k] && poset.leq[k][j]) cover = false;
      }
      if (cover) poset.hasse_edges.emplace_back(i, j);
    }
  return poset;
}

}  // namespace

BlockPoset enumerate_block(std::shared_ptr<const IntegralSystem> system, int max_len) {
  return enumerate(std::move(system), max_len, true);
}

BlockPoset enumerate_one_sided(std::shared_ptr<const IntegralSystem> system, int max_len) {
  return enumerate(std::move(system), max_len, false);
}

// ---------------------------------------------------------------- weights and orbits

std::vector<Weight> finite_dot_orbit(const RootDatum& datum, const Weight& lambda) {
  datum.check_weight(lambda);
  std::set<Weight> seen{lambda};
  std::vector<Weight> frontier{lambda};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& mu : frontier) {
      for (int i = 0; i < datum.rank(); ++i) {
        Weight nu = datum.reflect(i, mu + datum.rho()) - datum.rho();
        if (seen.insert(nu).second) next.push_back(std::move(nu));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

bool is_finite_antidominant(const RootDatum& datum, const Weight& lambda) {
  const Weight shifted = lambda + datum.rho();
  for (const auto& c : datum.positive_coroots()) {
    const Rational p = pair(shifted, c);
    if (is_integer(p) && p > 0) return false;
  }
  return true;
}

Weight weight_normal_form(const RootDatum& datum, const Weight& lambda) {
  for (const auto& mu : finite_dot_orbit(datum, lambda)) {
    if (is_finite_antidominant(datum, mu)) return mu;  // orbit is sorted
  }
  throw std::logic_error("W_f dot orbit without an antidominant weight");
}

Weight zhu_involution(const RootDatum& datum, const Weight& lambda) {
  return weight_normal_form(datum, -finite_act(datum, datum.w_circ(), lambda));
}

bool ds_survives(const RootDatum& datum, const Weight& lambda) {
  datum.check_weight(lambda);
  for (int i = 0; i < datum.rank(); ++i) {
    const Rational p = lambda[i] + 1;
    if (is_integer(p) && p > 0) return false;
  }
  return true;
}

std::uint64_t finite_integral_weyl_order(const RootDatum& datum, const Weight& lambda) {
  // At a generic level exactly the finite coroots can be integral.
  const auto simple = integral_simple_coroots(datum, Level::generic_negative(), lambda);
  const int m = static_cast<int>(simple.size());
  std::vector<int> cartan(m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      cartan[i * m + j] =
          static_cast<int>(datum.root_coroot_pairing(datum.root_of(simple[j].alpha_check), simple[i].alpha_check));
    }
  return weyl_group_order(cartan, m);
}

std::uint64_t antidominant_count(const RootDatum& datum, const Weight& lambda) {
  const std::uint64_t count = datum.weyl_order() / finite_integral_weyl_order(datum, lambda);
  if (datum.rank() <= 3) {
    const auto orbit = finite_dot_orbit(datum, lambda);
    const auto direct = static_cast<std::uint64_t>(
        std::count_if(orbit.begin(), orbit.end(), [&](const Weight& mu) { return is_finite_antidominant(datum, mu); }));
    if (direct != count) throw std::logic_error("antidominant count disagrees with orbit enumeration");
  }
  return count;
}

// ---------------------------------------------------------------- block_of

Weight canonical_normalized_lift(const RootDatum& datum, const Level& level, const Weight& lambda) {
  require_noncritical(datum, level);
  const Weight normalized = antidominantize(datum, level, lambda).normalized;
  const bool negative = level_sign(datum, level) == LevelSign::Negative;
  std::optional<Weight> best;
  for (const auto& mu : finite_dot_orbit(datum, normalized)) {
    if (!is_normalized(datum, level, mu)) continue;
    if (!best || (negative ? mu < *best : *best < mu)) best = mu;
  }
  return *best;
}

BlockPoset block_of(std::shared_ptr<const RootDatum> datum, const Level& level, const Weight& lambda, int max_len,
                    std::optional<std::int64_t> search_bound) {
  if (!datum) throw ConfigurationError("null root datum");
  require_noncritical(*datum, level);
  datum->check_weight(lambda);
  const Weight lift = canonical_normalized_lift(*datum, level, lambda);
  auto system = std::make_shared<const IntegralSystem>(simple_integral_coroots(datum, level, lift, search_bound));
  BlockPoset poset = enumerate_block(std::move(system), max_len);
  poset.lift = lambda;
  return poset;
}

}  // namespace linkage
