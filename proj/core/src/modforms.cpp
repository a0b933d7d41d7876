#include <cmv/modforms.hpp>

#include <cmv/errors.hpp>

#include <cmath>
#include <vector>

namespace cmv {

namespace {

/// Terms needed so the geometric tail |q|^(N+1)/(1-|q|) drops below
/// 2^(-target_bits). Computed per call from Im(tau).
long tail_terms(double im_tau, long target_bits) {
    double log2_q = -2.0 * M_PI * im_tau / std::log(2.0);
    double slack = -std::log2(1.0 - std::exp(-2.0 * M_PI * im_tau));
    return static_cast<long>(
               std::ceil((static_cast<double>(target_bits) + slack + 4) /
                         (-log2_q))) +
           2;
}

BigComplex q_from_tau(const BigComplex& tau, long wp) {
    BigReal two_pi = BigReal::pi(wp) * 2;
    return BigComplex(-(two_pi * tau.im()), two_pi * tau.re()).exp();
}

} // namespace

BigComplex eta(const BigComplex& tau, const PrecisionContext& ctx) {
    if (tau.im().sign() <= 0)
        throw NotUpperHalfPlane("eta: Im(tau) must be positive");
    long wp = ctx.work_bits() + 16;
    long n = tail_terms(tau.im().to_double(), wp);
    BigComplex q = q_from_tau(tau, wp);
    BigComplex prod = BigComplex::of(1, 0, wp);
    BigComplex qn = q;
    for (long k = 1; k <= n; ++k) {
        prod = prod * (BigComplex::of(1, 0, wp) - qn);
        qn = qn * q;
    }
    // q^(1/24) on the principal branch: exp(2 pi i tau / 24)
    BigReal two_pi = BigReal::pi(wp) * 2;
    BigComplex prefactor =
        BigComplex(-(two_pi * tau.im()) / 24, two_pi * tau.re() / 24).exp();
    return prefactor * prod;
}

BigComplex eta24(const BigComplex& tau, const PrecisionContext& ctx) {
    return eta(tau, ctx).pow_si(24);
}

BigComplex eisenstein_e4(const BigComplex& tau, const PrecisionContext& ctx) {
    if (tau.im().sign() <= 0)
        throw NotUpperHalfPlane("eisenstein_e4: Im(tau) must be positive");
    long wp = ctx.work_bits() + 16;
    // sigma_3(n) <= n^4, so pad the tail cutoff by 4 log2(n) bits
    long n = tail_terms(tau.im().to_double(), wp + 64);
    std::vector<mpz_class> sigma3(static_cast<std::size_t>(n) + 1, 0);
    for (long d = 1; d <= n; ++d) {
        mpz_class d3 = mpz_class(d) * d * d;
        for (long m = d; m <= n; m += d)
            sigma3[static_cast<std::size_t>(m)] += d3;
    }
    BigComplex q = q_from_tau(tau, wp);
    BigComplex s = BigComplex::of(0, 0, wp);
    BigComplex qn = BigComplex::of(1, 0, wp);
    for (long k = 1; k <= n; ++k) {
        qn = qn * q;
        s = s + qn * BigReal::of(sigma3[static_cast<std::size_t>(k)], wp);
    }
    return BigComplex::of(1, 0, wp) + s * BigReal::of(240L, wp);
}

BigComplex j_invariant(const BigComplex& tau, const PrecisionContext& ctx) {
    return eisenstein_e4(tau, ctx).pow_si(3) / eta24(tau, ctx);
}

BigComplex homogeneous_eval(long w, const BigComplex& z1, const BigComplex& z2,
                            const PrecisionContext& ctx) {
    if (w % 12 != 0 || w <= 0)
        throw Error("homogeneous_eval: weight must be a positive multiple of 12");
    BigComplex tau = z1 / z2;
    if (tau.im().sign() <= 0)
        throw NotPositivelyOriented("homogeneous_eval: Im(z1/z2) <= 0");
    BigComplex f = eta24(tau, ctx).pow_si(w / 12);
    return f * z2.pow_si(-w);
}

BigReal petersson_g1(const BigReal& fval_abs, const BigReal& im_tau, long w) {
    if (fval_abs.sign() < 0 || im_tau.sign() <= 0)
        throw Error("petersson_g1: need |f| >= 0 and Im(tau) > 0");
    long wp = std::max(fval_abs.prec(), im_tau.prec());
    BigReal four_pi = BigReal::pi(wp) * 4;
    return fval_abs * (im_tau * four_pi).pow_si(w / 2);
}

} // namespace cmv
