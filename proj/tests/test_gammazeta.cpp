#include <doctest.h>

#include <cmv/gammazeta.hpp>

using namespace cmv;

namespace {
bool close(const BigReal& a, const BigReal& b, long exp2_bound) {
    return (a - b).abs() < BigReal::pow2(exp2_bound, a.prec());
}

BigReal sin_pi_x(const mpq_class& x, long p) {
    // sin(pi x) by Taylor series around 0 after range reduction to [0,1)
    mpq_class r = x - mpz_class(mpz_class(x.get_num()) / x.get_den());
    BigReal t = BigReal::pi(p) * BigReal::of(r, p);
    BigReal term = t, sum = t, t2 = t * t;
    for (long n = 3; n < 1000; n += 2) {
        term = term * t2 / (n * (n - 1));
        sum = (n % 4 == 3) ? sum - term : sum + term;
        if (term.exp2() < -p - 8)
            break;
    }
    return sum;
}
} // namespace

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == mpq_class(-1) / 2);
    CHECK(bernoulli(2) == mpq_class(1) / 6);
    CHECK(bernoulli(3) == 0);
    CHECK(bernoulli(4) == mpq_class(-1) / 30);
    CHECK(bernoulli(12) == mpq_class(-691) / 2730);
    CHECK(bernoulli(13) == 0);
    CHECK(bernoulli(20) == mpq_class(-174611) / 330);
}

TEST_CASE("gamma at benchmark points") {
    for (long bits : {128L, 256L}) {
        PrecisionContext ctx(bits);
        long p = ctx.work_bits();
        // Gamma(1/2) = sqrt(pi)
        CHECK(close(gamma_rational(mpq_class(1) / 2, ctx), BigReal::pi(p).sqrt(),
                    -bits + 8));
        // Gamma(5) = 24 via lngamma
        CHECK(close(lngamma_real(BigReal::of(5L, p), ctx).exp(),
                    BigReal::of(24L, p), -bits + 12));
    }
    // 20-digit reference value for Gamma(1/4)
    PrecisionContext ctx(256);
    BigReal g14 = gamma_rational(mpq_class(1) / 4, ctx);
    CHECK(g14.str(20) == "3.6256099082219083119e+00");
}

TEST_CASE("reflection formula") {
    for (long bits : {128L, 256L}) {
        PrecisionContext ctx(bits);
        long p = ctx.work_bits();
        for (mpq_class x : {mpq_class(1, 3), mpq_class(1, 4), mpq_class(2, 5),
                            mpq_class(5, 7)}) {
            BigReal lhs = gamma_rational(x, ctx) * gamma_rational(1 - x, ctx);
            BigReal rhs = BigReal::pi(p) / sin_pi_x(x, p);
            CHECK(close(lhs, rhs, -bits + 16));
        }
    }
}

TEST_CASE("functional equation Gamma(x+1) = x Gamma(x)") {
    PrecisionContext ctx(256);
    long p = ctx.work_bits();
    for (mpq_class x : {mpq_class(1, 3), mpq_class(7, 5), mpq_class(9, 23)}) {
        BigReal l1 = lngamma_real(BigReal::of(x + 1, p), ctx);
        BigReal l0 = lngamma_real(BigReal::of(x, p), ctx);
        CHECK(close(l1, l0 + BigReal::of(x, p).log(), -240));
    }
}

TEST_CASE("duplication formula") {
    PrecisionContext ctx(256);
    long p = ctx.work_bits();
    mpq_class x(1);
    x /= 3;
    // Gamma(2x) sqrt(pi) = 2^(2x-1) Gamma(x) Gamma(x + 1/2)
    BigReal lhs = gamma_rational(2 * x, ctx) * BigReal::pi(p).sqrt();
    BigReal rhs = BigReal::of(2L, p).pow_q(2 * x - 1) * gamma_rational(x, ctx) *
                  gamma_rational(x + mpq_class(1) / 2, ctx);
    CHECK(close(lhs, rhs, -240));
}

TEST_CASE("hurwitz zeta derivative at zero against the Lerch identity") {
    for (long bits : {128L, 256L}) {
        PrecisionContext ctx(bits);
        long p = ctx.work_bits();
        BigReal log_sqrt_2pi = (BigReal::pi(p) * 2).log() / 2;
        for (mpq_class x : {mpq_class(1), mpq_class(1, 3), mpq_class(1, 7),
                            mpq_class(22, 23), mpq_class(3, 4)}) {
            // zeta'(0, x) = log Gamma(x) - log sqrt(2 pi)
            BigReal lhs = hurwitz_zeta_deriv0(x, ctx);
            BigReal rhs = lngamma_real(BigReal::of(x, p), ctx) - log_sqrt_2pi;
            CHECK(close(lhs, rhs, -bits + 8));
        }
    }
}
