#ifndef CMV_MODFORMS_HPP
#define CMV_MODFORMS_HPP

#include <cmv/bigcomplex.hpp>
#include <cmv/precision.hpp>

namespace cmv {

/// Dedekind eta, q^(1/24) prod (1 - q^n), principal branch for q^(1/24).
BigComplex eta(const BigComplex& tau, const PrecisionContext& ctx);

/// eta^24: the discriminant form rescaled by (2 pi)^(-12).
BigComplex eta24(const BigComplex& tau, const PrecisionContext& ctx);

/// Normalized weight-4 Eisenstein series, q-series 1 + 240 sum sigma_3(n) q^n.
BigComplex eisenstein_e4(const BigComplex& tau, const PrecisionContext& ctx);

/// j(tau) = E4(tau)^3 / eta24(tau).
BigComplex j_invariant(const BigComplex& tau, const PrecisionContext& ctx);

/// f(Lambda) = z2^(-w) f(z1/z2) for f = eta24^(w/12); (z1, z2) must be a
/// positively oriented basis (Im(z1/z2) > 0) and 12 | w.
BigComplex homogeneous_eval(long w, const BigComplex& z1, const BigComplex& z2,
                            const PrecisionContext& ctx);

/// Genus-1 Petersson norm: |f(tau)| (Im tau)^(w/2) (4 pi)^(w/2).
BigReal petersson_g1(const BigReal& fval_abs, const BigReal& im_tau, long w);

} // namespace cmv

#endif
