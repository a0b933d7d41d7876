#ifndef CMV_GAMMAZETA_HPP
#define CMV_GAMMAZETA_HPP

#include <gmpxx.h>

#include <cmv/bigreal.hpp>
#include <cmv/precision.hpp>

namespace cmv {

/// Exact Bernoulli number B_n (B_1 = -1/2 convention). Cached.
const mpq_class& bernoulli(unsigned n);

/// log Gamma(x) for x > 0 via argument shifting into a Stirling-valid
/// region (shifted argument >= max(bits/4, 32)) with the asymptotic tail
/// truncated below the working precision.
BigReal lngamma_real(const BigReal& x, const PrecisionContext& ctx);

/// Gamma(q) for a rational q in (0,1), relative error < 2^(-bits+8).
BigReal gamma_rational(const mpq_class& q, const PrecisionContext& ctx);

/// d/ds zeta(s, x) at s = 0 for rational x in (0,1], via term-wise
/// differentiated Euler-Maclaurin with the remainder pushed below 2^(-bits).
BigReal hurwitz_zeta_deriv0(const mpq_class& x, const PrecisionContext& ctx);

} // namespace cmv

#endif
