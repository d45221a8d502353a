#pragma once

#include "linkage/rootdata.hpp"

namespace linkage {

/// Highest-weight data (c, Delta) of a Virasoro Verma module.
class VirasoroVerma {
 public:
  /// M(c(k), Delta(k, v)); the reduction of the sl2 Verma with weight v rho.
  static VirasoroVerma from_level(const Rational& k, const Rational& v);
  static VirasoroVerma from_values(Rational c, Rational delta) { return {std::move(c), std::move(delta)}; }

  const Rational& c() const { return c_; }
  const Rational& delta() const { return delta_; }
  friend bool operator==(const VirasoroVerma&, const VirasoroVerma&) = default;

 private:
  VirasoroVerma(Rational c, Rational delta) : c_(std::move(c)), delta_(std::move(delta)) {}
  Rational c_;
  Rational delta_;
};

/// c(k) = 1 - 6 (k+1)^2 / (k+2). Throws CriticalLevelError at k = -2.
Rational central_charge_sl2(const Rational& k);
/// Delta(k, v) = (k-v)(k+2-v) / (4(k+2)) - (k-v)/2.
Rational conformal_dim_minus(const Rational& k, const Rational& v);
/// Delta'(k, v) = v(v+2) / (4(k+2)) - v/2.
Rational conformal_dim_plus(const Rational& k, const Rational& v);
/// (c, Delta) -> (26 - c, 1 - Delta).
VirasoroVerma ff_dual_virasoro(const VirasoroVerma& m);

/// Central charge of the principal W-algebra at level k.
Rational central_charge_general(const RootDatum& datum, const Rational& k);
/// 2 rk g + 48 <rho, rho^vee>.
Rational c_minus_tate(const RootDatum& datum);

}  // namespace linkage
