#include "linkage/virasoro.hpp"

namespace linkage {

namespace {

Rational shifted_sl2(const Rational& k) {
  Rational K = k + 2;
  if (K == 0) throw CriticalLevelError("critical level k = -2");
  return K;
}

}  // namespace

VirasoroVerma VirasoroVerma::from_level(const Rational& k, const Rational& v) {
  return {central_charge_sl2(k), conformal_dim_minus(k, v)};
}

Rational central_charge_sl2(const Rational& k) {
  const Rational K = shifted_sl2(k);
  const Rational a = k + 1;
  return Rational(1) - Rational(6 * a * a / K);
}

Rational conformal_dim_minus(const Rational& k, const Rational& v) {
  const Rational K = shifted_sl2(k);
  const Rational d = k - v;
  return Rational(d * (K - v) / (4 * K)) - Rational(d / 2);
}

Rational conformal_dim_plus(const Rational& k, const Rational& v) {
  const Rational K = shifted_sl2(k);
  return Rational(v * (v + 2) / (4 * K)) - Rational(v / 2);
}

VirasoroVerma ff_dual_virasoro(const VirasoroVerma& m) {
  return VirasoroVerma::from_values(Rational(26 - m.c()), Rational(1 - m.delta()));
}

Rational central_charge_general(const RootDatum& datum, const Rational& k) {
  const Rational K = k + datum.h_vee();
  if (K == 0) throw CriticalLevelError("critical level k = -" + std::to_string(datum.h_vee()));
  const Rational dim = datum.dim_g();
  Rational c = dim * k / K - dim + datum.rk_g() + 24 * datum.rho_rho_check() - 12 * K * datum.kappa_rho_check();
  c.canonicalize();
  return c;
}

Rational c_minus_tate(const RootDatum& datum) {
  return Rational(2 * datum.rk_g() + 48 * datum.rho_rho_check());
}

}  // namespace linkage
