#include <cmv/gammazeta.hpp>

#include <cmv/errors.hpp>

#include <mutex>
#include <vector>

namespace cmv {

namespace {
std::vector<mpq_class> g_bernoulli;
std::mutex g_bernoulli_mu;
} // namespace

const mpq_class& bernoulli(unsigned n) {
    std::lock_guard<std::mutex> lock(g_bernoulli_mu);
    if (g_bernoulli.empty()) {
        g_bernoulli.emplace_back(1);
        g_bernoulli.emplace_back(mpq_class(-1, 2));
    }
    // B_m = -1/(m+1) * sum_{k<m} C(m+1,k) B_k
    while (g_bernoulli.size() <= n) {
        unsigned m = static_cast<unsigned>(g_bernoulli.size());
        mpq_class s(0);
        mpz_class binom(1); // C(m+1, 0)
        for (unsigned k = 0; k < m; ++k) {
            s += mpq_class(binom) * g_bernoulli[k];
            binom *= static_cast<long>(m + 1 - k);
            binom /= static_cast<long>(k + 1);
        }
        s /= static_cast<long>(m + 1);
        g_bernoulli.push_back(-s);
    }
    return g_bernoulli[n];
}

namespace {

/// Stirling series for log Gamma(a), valid once a is large enough that the
/// terms drop below 2^(-target) before the series starts diverging.
BigReal stirling_lngamma(const BigReal& a, long wp, long target_exp) {
    BigReal la = a.log();
    BigReal two_pi = BigReal::pi(wp) * 2;
    BigReal s = (a - BigReal::of(mpq_class(1, 2), wp)) * la - a +
                two_pi.log() / 2;
    BigReal inv_a2 = (BigReal::of(1L, wp) / a).pow_si(2);
    BigReal p = BigReal::of(1L, wp) / a; // a^(1-2j) at j=1
    for (unsigned j = 1;; ++j) {
        mpq_class c = bernoulli(2 * j) / mpq_class(2 * j * (2 * j - 1));
        BigReal term = BigReal::of(c, wp) * p;
        s += term;
        if (term.exp2() < target_exp)
            break;
        p = p * inv_a2;
    }
    return s;
}

} // namespace

BigReal lngamma_real(const BigReal& x, const PrecisionContext& ctx) {
    if (x.sign() <= 0)
        throw Error("lngamma_real: argument must be positive");
    long wp = ctx.work_bits() + 16;
    long shift_floor = std::max(ctx.bits() / 4, 32L);
    BigReal xw = x;
    BigReal log_shift = BigReal::of(0L, wp);
    long k = 0;
    if (x.cmp(shift_floor) < 0)
        k = shift_floor - static_cast<long>(x.to_double());
    // log Gamma(x) = log Gamma(x+k) - sum_{i<k} log(x+i)
    BigReal a = x + k;
    for (long i = 0; i < k; ++i)
        log_shift += (x + i).log();
    BigReal s = stirling_lngamma(a, wp, -(wp + 8));
    return s - log_shift;
}

BigReal gamma_rational(const mpq_class& q, const PrecisionContext& ctx) {
    if (!(q > 0 && q < 1))
        throw Error("gamma_rational: q must lie in (0,1)");
    long wp = ctx.work_bits() + 16;
    return lngamma_real(BigReal::of(q, wp), ctx).exp();
}

BigReal hurwitz_zeta_deriv0(const mpq_class& x, const PrecisionContext& ctx) {
    if (!(x > 0 && x <= 1))
        throw Error("hurwitz_zeta_deriv0: x must lie in (0,1]");
    long wp = ctx.work_bits() + 16;
    long n_terms = std::max(ctx.bits() / 4, 32L);

    // zeta'(0,x) = -sum_{k<N} log(x+k) + A log A - A - (1/2) log A
    //              + sum_j B_{2j}/(2j(2j-1)) A^(1-2j),   A = x + N.
    BigReal xr = BigReal::of(x, wp);
    BigReal s = BigReal::of(0L, wp);
    for (long k = 0; k < n_terms; ++k)
        s -= (xr + k).log();
    BigReal a = xr + n_terms;
    BigReal la = a.log();
    s += a * la - a - la / 2;
    BigReal inv_a2 = (BigReal::of(1L, wp) / a).pow_si(2);
    BigReal p = BigReal::of(1L, wp) / a;
    for (unsigned j = 1;; ++j) {
        mpq_class c = bernoulli(2 * j) / mpq_class(2 * j * (2 * j - 1));
        BigReal term = BigReal::of(c, wp) * p;
        s += term;
        if (term.exp2() < -(wp + 8))
            break;
        p = p * inv_a2;
    }
    return s;
}

} // namespace cmv
