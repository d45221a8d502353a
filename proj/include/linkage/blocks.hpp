#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "linkage/integral.hpp"

namespace linkage {

/// Minimal-length representative of a double coset W_{f,lambda} \ W_lambda / W°_lambda
/// (or of a one-sided coset W_lambda / W°_lambda).
struct CosetRep {
  Word word;  // letters index the system's simple coroots
  int length = 0;
  /// pi(w . lambda) in normal form for double cosets; w . lambda itself for one-sided cosets.
  Weight weight;
  AffineWeylElement element;
  std::shared_ptr<const IntegralSystem> system;
  bool two_sided = true;
};

struct BlockPoset {
  std::shared_ptr<const IntegralSystem> system;
  std::vector<CosetRep> reps;           // sorted by length, then word
  std::vector<std::vector<bool>> leq;   // leq[i][j]: reps[i] <= reps[j]
  std::vector<std::pair<int, int>> hasse_edges;
  int truncation_length = 0;
  bool two_sided = true;
  /// The lift supplied by the caller, when built through block_of.
  std::optional<Weight> lift;

  int size() const { return static_cast<int>(reps.size()); }
};

/// Element of W_lambda with its lexicographically least reduced word.
struct IntegralElement {
  AffineWeylElement element;
  Word word;
};

/// All elements of W_lambda of length <= max_len, shell by shell.
std::vector<IntegralElement> enumerate_integral_group(const IntegralSystem& system, int max_len);

/// l(w s_i) < l(w) and l(s_i w) < l(w), decided by the sign of w(alpha_i^vee)
/// and w^{-1}(alpha_i^vee) in the integral root system.
bool has_right_descent(const IntegralSystem& system, const AffineWeylElement& w, int i);
bool has_left_descent(const IntegralSystem& system, const AffineWeylElement& w, int i);

/// Product of the system's simple reflections along a word.
AffineWeylElement element_of_word(const IntegralSystem& system, const Word& word);

/// Minimal representative of W_J w W_K, J = j_finite (when two_sided) and K = j_stab.
AffineWeylElement minimal_coset_rep(const IntegralSystem& system, AffineWeylElement w, bool two_sided = true);

/// Bruhat order on W_lambda, by the descent recursion.
bool bruhat_leq(const IntegralSystem& system, AffineWeylElement u, AffineWeylElement w);
/// Throws ConfigurationError if v and w come from different systems.
bool bruhat_leq(const CosetRep& v, const CosetRep& w);

/// Double cosets whose minimal representative has length <= max_len.
BlockPoset enumerate_block(std::shared_ptr<const IntegralSystem> system, int max_len);
/// One-sided cosets W_lambda / W°_lambda (Kac-Moody block) up to max_len.
BlockPoset enumerate_one_sided(std::shared_ptr<const IntegralSystem> system, int max_len);

/// Chooses the normalized lift used by block_of: the lexicographically least
/// (negative level) or greatest (positive level) normalized weight in the
/// W_f dot orbit of antidominantize(lambda).
Weight canonical_normalized_lift(const RootDatum& datum, const Level& level, const Weight& lambda);

BlockPoset block_of(std::shared_ptr<const RootDatum> datum, const Level& level, const Weight& lambda, int max_len,
                    std::optional<std::int64_t> search_bound = std::nullopt);

/// The W_f dot orbit of lambda, sorted.
std::vector<Weight> finite_dot_orbit(const RootDatum& datum, const Weight& lambda);
/// <lambda + rho, alpha^vee> not in Z^{>0} for all positive finite coroots.
bool is_finite_antidominant(const RootDatum& datum, const Weight& lambda);
/// Normal form of pi(lambda): the lexicographically least W_f-antidominant
/// weight in the W_f dot orbit.
Weight weight_normal_form(const RootDatum& datum, const Weight& lambda);
/// pi(lambda) -> pi(-w_circ lambda), returned in normal form.
Weight zhu_involution(const RootDatum& datum, const Weight& lambda);

/// <lambda + rho, alpha_i^vee> not in Z^{>0} for every finite simple i.
bool ds_survives(const RootDatum& datum, const Weight& lambda);

/// |W_f| / |W_{f,lambda}|.
std::uint64_t antidominant_count(const RootDatum& datum, const Weight& lambda);
/// Order of W_{f,lambda}, the group generated by finite integral reflections.
std::uint64_t finite_integral_weyl_order(const RootDatum& datum, const Weight& lambda);

}  // namespace linkage
