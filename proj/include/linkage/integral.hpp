#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "linkage/affine.hpp"

namespace linkage {

/// The set {n in Z : <lambda + rho, alpha^vee> + n r (k + h^vee) in Z} for one
/// positive finite coroot alpha^vee: empty, {offset} (stride 0, generic
/// levels), or offset + stride Z with 0 <= offset < stride.
struct Progression {
  bool empty = true;
  std::int64_t offset = 0;
  std::int64_t stride = 0;

  bool contains(std::int64_t n) const;
  /// Least element >= 0, and least element >= 1 of the negated set, when present.
  std::optional<std::int64_t> least_nonnegative() const;
  std::optional<std::int64_t> least_positive_of_negation() const;
  friend bool operator==(const Progression&, const Progression&) = default;
};

/// One progression per entry of datum.positive_coroots().
std::vector<Progression> integral_progressions(const RootDatum& datum, const Level& level, const Weight& lambda);

/// Smallest imaginary-degree window that certifies Pi_lambda: every simple
/// integral coroot has n at most this value.
std::int64_t required_search_bound(const RootDatum& datum, const Level& level, const Weight& lambda);

/// Pi_lambda for any lambda (no normalization requirement), sorted. With
/// search_bound unset the certified bound is used; an explicit bound below it
/// raises InconclusiveError.
std::vector<AffineCoroot> integral_simple_coroots(const RootDatum& datum, const Level& level, const Weight& lambda,
                                                  std::optional<std::int64_t> search_bound = std::nullopt);

/// Integral Coxeter presentation of W_lambda at a normalized weight.
struct IntegralSystem {
  std::shared_ptr<const RootDatum> datum;
  Level level = Level::generic_negative();
  LevelSign sense = LevelSign::Negative;
  Weight base_weight;
  std::vector<AffineCoroot> simple_coroots;
  /// cartan_integral[i][j] = <alpha_j, alpha_i^vee> over I_lambda.
  std::vector<std::vector<std::int64_t>> cartan_integral;
  std::vector<int> j_finite;
  std::vector<int> j_stab;
  std::int64_t search_bound = 0;
  /// Reflections s_i, i in I_lambda, as affine Weyl group elements.
  std::vector<AffineWeylElement> reflections;

  int size() const { return static_cast<int>(simple_coroots.size()); }
  bool in_j_finite(int i) const;
  bool in_j_stab(int i) const;
  friend bool operator==(const IntegralSystem& a, const IntegralSystem& b);
};

/// Tests over Pi_lambda: every pairing <lambda + rho_hat, c> lies
/// in Z^{<=0} (antidominant) or Z^{>=0} (dominant).
bool is_antidominant(const RootDatum& datum, const Level& level, const Weight& lambda);
bool is_dominant(const RootDatum& datum, const Level& level, const Weight& lambda);
/// The normalization matching the level sign: antidominant at negative level, dominant at positive.
bool is_normalized(const RootDatum& datum, const Level& level, const Weight& lambda);

/// Reference test straight from the definition: every positive integral real
/// coroot with n <= window has pairing outside Z^{>0} (antidominant) or Z^{<0}.
bool is_antidominant_raw(const RootDatum& datum, const Level& level, const Weight& lambda, std::int64_t window);
bool is_dominant_raw(const RootDatum& datum, const Level& level, const Weight& lambda, std::int64_t window);

struct Normalization {
  Weight normalized;
  AffineWeylElement mover;
};

/// Moves lambda into C^- (negative level) or C^+ (positive level) by integral
/// dot reflections; normalized = act_dot(mover, level, lambda).
Normalization antidominantize(const RootDatum& datum, const Level& level, const Weight& lambda,
                              int step_bound = 100000);

/// Builds the IntegralSystem at a weight already normalized for the level's
/// sign; throws ConfigurationError otherwise.
IntegralSystem simple_integral_coroots(std::shared_ptr<const RootDatum> datum, const Level& level,
                                       const Weight& lambda, std::optional<std::int64_t> search_bound = std::nullopt);

/// (j_finite, j_stab) recomputed from the coroots of the system.
std::pair<std::vector<int>, std::vector<int>> parabolic_subsets(const IntegralSystem& system);

/// The coroot reflection s_X(Y) = Y - <alpha_X, Y> X on (finite part, c-degree) pairs.
std::pair<RootVector, std::int64_t> reflect_affine_coroot(const RootDatum& datum, const AffineCoroot& x,
                                                          const RootVector& y, std::int64_t y_degree);

}  // namespace linkage
