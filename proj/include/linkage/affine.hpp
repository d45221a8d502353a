#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "linkage/rootdata.hpp"

namespace linkage {

/// A level k (the form k * kappa_b). Irrational levels are symbolic: only
/// their sign relative to the critical level is recorded.
class Level {
 public:
  enum class Kind { Rational, GenericNegative, GenericPositive };

  static Level rational(Rational k) { return Level(Kind::Rational, std::move(k)); }
  static Level generic_negative() { return Level(Kind::GenericNegative, 0); }
  static Level generic_positive() { return Level(Kind::GenericPositive, 0); }
  /// "p/q", "generic-neg" or "generic-pos".
  static Level parse(const std::string& text);

  Kind kind() const { return kind_; }
  bool is_generic() const { return kind_ != Kind::Rational; }
  /// The rational value; throws for generic levels.
  const Rational& k() const;
  std::string to_string() const;

  friend bool operator==(const Level& a, const Level& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::Rational || a.k_ == b.k_);
  }

 private:
  Level(Kind kind, Rational k) : kind_(kind), k_(std::move(k)) {}
  Kind kind_;
  Rational k_;
};

enum class LevelSign { Negative, Critical, Positive };

/// Negative iff k + h^vee < 0 (or generic-negative), positive iff k + h^vee > 0.
LevelSign level_sign(const RootDatum& datum, const Level& level);
/// Throws CriticalLevelError at k = -h^vee.
void require_noncritical(const RootDatum& datum, const Level& level);
/// k + h^vee, the dilation of the dot action; nullopt for generic levels.
std::optional<Rational> shifted_level(const RootDatum& datum, const Level& level);

/// Element of W_f in canonical form: its integer matrix on fundamental
/// coordinates, together with the matrix of its inverse.
class FiniteWeylElement {
 public:
  FiniteWeylElement() = default;
  static FiniteWeylElement identity(int rank);
  static FiniteWeylElement simple(const RootDatum& datum, int i);
  static FiniteWeylElement from_word(const RootDatum& datum, const Word& w);
  /// Reflection in the (positive or negative) root alpha.
  static FiniteWeylElement reflection(const RootDatum& datum, const RootVector& root);

  int rank() const { return rank_; }
  std::int64_t entry(int i, int j) const { return matrix_[i * rank_ + j]; }
  bool is_identity() const;

  Weight act(const Weight& lambda) const;
  /// Integer weight (e.g. an element of Lambda) in fundamental coordinates.
  RootVector act_integral(const RootVector& weight) const;
  /// Action on coroot coefficient vectors (the contragredient matrix).
  RootVector act_coroot(const RootVector& coroot) const;
  FiniteWeylElement inverse() const;

  friend FiniteWeylElement operator*(const FiniteWeylElement& a, const FiniteWeylElement& b);
  friend bool operator==(const FiniteWeylElement& a, const FiniteWeylElement& b) { return a.matrix_ == b.matrix_; }
  std::size_t hash() const;

 private:
  int rank_ = 0;
  std::vector<std::int64_t> matrix_;
  std::vector<std::int64_t> inverse_;
};

/// A real affine coroot alpha^vee + n r c, where r = 2 / (alpha, alpha).
struct AffineCoroot {
  RootVector alpha_check;
  std::int64_t n = 0;
  int r = 1;

  /// Coefficient of c.
  std::int64_t degree() const { return n * r; }
  bool finite_part_positive() const;
  bool is_positive() const { return n > 0 || (n == 0 && finite_part_positive()); }
  std::string to_string() const;

  friend bool operator==(const AffineCoroot& a, const AffineCoroot& b) {
    return a.alpha_check == b.alpha_check && a.n == b.n && a.r == b.r;
  }
  friend bool operator<(const AffineCoroot& a, const AffineCoroot& b);
};

/// Builds the affine coroot (alpha^vee, n) with r taken from the root datum.
AffineCoroot make_affine_coroot(const RootDatum& datum, RootVector alpha_check, std::int64_t n);
/// alpha_0^vee = -theta^vee + c.
AffineCoroot affine_simple_coroot(const RootDatum& datum);

/// t_mu y, with y in W_f and mu in the long-root lattice Lambda (integer
/// fundamental coordinates). Group law (t_mu y)(t_nu x) = t_{mu + y(nu)} (y x).
class AffineWeylElement {
 public:
  AffineWeylElement() = default;
  AffineWeylElement(FiniteWeylElement y, RootVector mu);
  static AffineWeylElement identity(int rank);
  static AffineWeylElement finite(FiniteWeylElement y);
  /// Throws ConfigurationError unless mu lies in the span of {r_i alpha_i}.
  static AffineWeylElement translation(const RootDatum& datum, RootVector mu);

  const FiniteWeylElement& y() const { return y_; }
  const RootVector& mu() const { return mu_; }
  bool is_identity() const;
  bool is_finite() const;

  AffineWeylElement inverse() const;
  friend AffineWeylElement operator*(const AffineWeylElement& a, const AffineWeylElement& b);
  friend bool operator==(const AffineWeylElement& a, const AffineWeylElement& b) {
    return a.y_ == b.y_ && a.mu_ == b.mu_;
  }
  std::size_t hash() const;

  /// Linear action on affine coroots: (alpha^vee, degree m) -> (y alpha^vee, m - <mu, y alpha^vee>).
  /// Here the coroot is given by its finite part and its c-degree.
  std::pair<RootVector, std::int64_t> act_coroot(const RootVector& alpha_check, std::int64_t degree) const;

 private:
  FiniteWeylElement y_;
  RootVector mu_;
};

struct AffineWeylHash {
  std::size_t operator()(const AffineWeylElement& w) const { return w.hash(); }
};

/// True iff mu is an integral combination of the r_i alpha_i.
bool in_long_root_lattice(const RootDatum& datum, const RootVector& mu);

/// y(lambda) + k mu.
Weight act_naive(const AffineWeylElement& w, const Rational& k, const Weight& lambda);
/// y(lambda + rho) + (k + h^vee) mu - rho. Generic levels only admit mu = 0.
Weight act_dot(const RootDatum& datum, const AffineWeylElement& w, const Level& level, const Weight& lambda);

/// <lambda + rho, alpha^vee> + n r (k + h^vee). For generic levels the value
/// is irrational whenever n != 0; that case is returned as nullopt.
std::optional<Rational> affine_pairing(const RootDatum& datum, const Level& level, const Weight& lambda,
                                       const AffineCoroot& c);

/// The reflection s_c as t_{-n r alpha} s_alpha, alpha the root of c. Its dot
/// action is lambda -> lambda - <lambda + rho_hat, c> alpha.
AffineWeylElement reflection_of(const RootDatum& datum, const AffineCoroot& c);

/// lambda -> -lambda - 2 rho, and k -> -k - 2 h^vee.
Weight ff_flip(const RootDatum& datum, const Weight& lambda);
Level ff_flip_level(const RootDatum& datum, const Level& level);
Weight negate_naive(const Weight& lambda);

}  // namespace linkage
