#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "linkage/rational.hpp"

namespace linkage {

/// Integer coefficient vector over the simple roots (or simple coroots).
using RootVector = std::vector<std::int64_t>;

/// Word in simple reflections. The word {i, j, k} denotes s_i s_j s_k, so
/// acting on a weight applies s_k first.
using Word = std::vector<int>;

/// A weight in fundamental-weight coordinates: coords[i] = <lambda, alpha_i^vee>.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  static Weight zero(int rank) { return Weight(std::vector<Rational>(rank)); }

  int rank() const { return static_cast<int>(coords_.size()); }
  const Rational& operator[](int i) const { return coords_[i]; }
  Rational& operator[](int i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight& operator*=(const Rational& s);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rational& s, Weight a) { return a *= s; }
  Weight operator-() const;

  friend bool operator==(const Weight& a, const Weight& b) { return a.coords_ == b.coords_; }
  /// Lexicographic order on coordinates.
  friend bool operator<(const Weight& a, const Weight& b);

  /// "a,b,c" with each coordinate in canonical rational form.
  std::string to_string() const;
  static Weight parse(const std::string& csv, int rank);

 private:
  std::vector<Rational> coords_;
};

/// Immutable root-system data for one simple Lie algebra of rank <= 8.
///
/// Cartan convention: cartan(i, j) = <alpha_j, alpha_i^vee>. The root alpha_j
/// therefore has fundamental coordinates given by column j. Lengths are
/// normalized by the basic form, long roots having squared length 2, and
/// lacing(i) = 2 / (alpha_i, alpha_i).
class RootDatum {
 public:
  char type() const { return type_; }
  int rank() const { return rank_; }
  std::string label() const;

  int cartan(int i, int j) const { return cartan_[i * rank_ + j]; }
  int lacing(int i) const { return lacing_[i]; }

  /// Positive roots sorted by height, simple roots first in index order.
  const std::vector<RootVector>& positive_roots() const { return roots_; }
  /// positive_coroots()[a] is the coroot of positive_roots()[a].
  const std::vector<RootVector>& positive_coroots() const { return coroots_; }
  /// Lacing factor 2 / (alpha, alpha) of positive root a.
  int root_lacing(std::size_t a) const { return root_lacing_[a]; }
  int num_positive_roots() const { return static_cast<int>(roots_.size()); }

  const Weight& rho() const { return rho_; }
  /// rho^vee as coefficients over the simple coroots.
  const std::vector<Rational>& rho_check() const { return rho_check_; }
  const RootVector& theta() const { return roots_[theta_index_]; }
  const RootVector& theta_check() const { return coroots_[theta_index_]; }
  std::size_t theta_index() const { return theta_index_; }

  int h_vee() const { return h_vee_; }
  int dim_g() const { return rank_ + 2 * num_positive_roots(); }
  int rk_g() const { return rank_; }
  int dim_n() const { return num_positive_roots(); }
  /// |W_f|; fits in 64 bits for every supported type.
  std::uint64_t weyl_order() const { return weyl_order_; }

  const Word& w_circ() const { return w_circ_; }
  int tau(int i) const { return tau_[i]; }

  /// <rho, rho^vee> and kappa_b(rho^vee, rho^vee), both from root sums.
  const Rational& rho_rho_check() const { return rho_rho_check_; }
  const Rational& kappa_rho_check() const { return kappa_rho_check_; }

  /// Fundamental coordinates of the root with the given simple-root coefficients.
  Weight root_weight(const RootVector& root) const;
  /// <alpha, beta^vee> for a root and a coroot given by coefficients.
  std::int64_t root_coroot_pairing(const RootVector& root, const RootVector& coroot) const;
  /// The coroot of a (positive or negative) root; and the inverse map.
  RootVector coroot_of(const RootVector& root) const;
  RootVector root_of(const RootVector& coroot) const;
  /// 2 / (alpha, alpha) for any root alpha.
  int lacing_of_root(const RootVector& root) const;
  /// Index into positive_coroots() of +coroot or -coroot, or -1.
  int coroot_index(const RootVector& coroot) const;

  /// Linear action: s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i.
  Weight reflect(int i, Weight lambda) const;
  /// s_i on a coroot: beta^vee - <alpha_i, beta^vee> alpha_i^vee.
  RootVector reflect_coroot(int i, RootVector coroot) const;

  void check_weight(const Weight& lambda) const;

 private:
  friend std::shared_ptr<const RootDatum> build_root_datum(char type, int rank);
  RootDatum() = default;
  void validate() const;

  char type_ = 'A';
  int rank_ = 0;
  std::vector<int> cartan_;
  std::vector<int> lacing_;
  std::vector<RootVector> roots_;
  std::vector<RootVector> coroots_;
  std::vector<int> root_lacing_;
  Weight rho_;
  std::vector<Rational> rho_check_;
  std::size_t theta_index_ = 0;
  int h_vee_ = 0;
  std::uint64_t weyl_order_ = 1;
  Word w_circ_;
  std::vector<int> tau_;
  Rational rho_rho_check_;
  Rational kappa_rho_check_;
};

/// Supported: A1-A8, B2-B8, C2-C8, D4-D8, E6-E8, F4, G2.
/// Throws ConfigurationError otherwise.
std::shared_ptr<const RootDatum> build_root_datum(char type, int rank);

/// Sum of c_i * lambda_i where coroot = sum c_i alpha_i^vee.
Rational pair(const Weight& lambda, const RootVector& coroot);
Rational pair(const Weight& lambda, const std::vector<Rational>& coroot);

Weight finite_act(const RootDatum& datum, const Word& w, Weight lambda);
/// w . lambda = w(lambda + rho) - rho.
Weight finite_dot_act(const RootDatum& datum, const Word& w, const Weight& lambda);
RootVector finite_act_coroot(const RootDatum& datum, const Word& w, RootVector coroot);

/// Positive root data for an arbitrary finite-type Cartan matrix (possibly
/// decomposable), used for the root datum itself and for integral subsystems.
/// Returns roots as coefficient vectors sorted by height.
std::vector<RootVector> positive_roots_of_cartan(const std::vector<int>& cartan, int rank);

/// Order of the Weyl group of a finite-type Cartan matrix, via the degrees read
/// off from the height distribution of its positive roots.
std::uint64_t weyl_group_order(const std::vector<int>& cartan, int rank);

}  // namespace linkage
