#include <doctest.h>

#include <cmv/errors.hpp>
#include <cmv/gammazeta.hpp>
#include <cmv/modforms.hpp>
#include <cmv/quadratic.hpp>

#include <random>
#include <vector>

using namespace cmv;

namespace {

bool cclose(const BigComplex& a, const BigComplex& b, long exp2_bound) {
    return (a - b).abs() < BigReal::pow2(exp2_bound, a.prec());
}

/// Independent eta: the pentagonal-number series
/// q^(1/24) sum_k (-1)^k q^(k(3k-1)/2) over k in Z, at doubled precision.
BigComplex eta_series(const BigComplex& tau, long bits) {
    long p = 2 * bits;
    BigReal two_pi = BigReal::pi(p) * 2;
    auto q_pow = [&](const mpq_class& e) {
        // exp(2 pi i tau e)
        BigReal s = BigReal::of(e, p);
        return BigComplex(-(two_pi * tau.im() * s), two_pi * tau.re() * s)
            .exp();
    };
    BigComplex sum = BigComplex::of(0, 0, p);
    for (long k = -60; k <= 60; ++k) {
        mpq_class e(k * (3 * k - 1), 2);
        e.canonicalize();
        BigComplex term = q_pow(e);
        sum = (k % 2 == 0) ? sum + term : sum - term;
    }
    return q_pow(mpq_class(1, 24)) * sum;
}

struct Mat {
    long a, b, c, d;
};

std::vector<Mat> random_sl2(std::mt19937& rng, int count) {
    std::vector<Mat> out;
    while (static_cast<int>(out.size()) < count) {
        // random word in T^k and S keeps entries small and det = 1
        Mat m{1, 0, 0, 1};
        for (int step = 0; step < 6; ++step) {
            if (rng() % 2) {
                long k = static_cast<long>(rng() % 5) - 2;
                m = Mat{m.a + k * m.c, m.b + k * m.d, m.c, m.d};
            } else {
                m = Mat{-m.c, -m.d, m.a, m.b};
            }
        }
        if (std::abs(m.a) <= 10 && std::abs(m.b) <= 10 && std::abs(m.c) <= 10 &&
            std::abs(m.d) <= 10)
            out.push_back(m);
    }
    return out;
}

BigComplex apply(const Mat& m, const BigComplex& tau) {
    long p = tau.prec();
    BigComplex num = tau * BigReal::of(m.a, p) + BigComplex(BigReal::of(m.b, p));
    BigComplex den = tau * BigReal::of(m.c, p) + BigComplex(BigReal::of(m.d, p));
    return num / den;
}

std::vector<BigComplex> sample_taus(long p) {
    std::vector<BigComplex> taus;
    taus.push_back(BigComplex::of(0, 1, p));
    taus.push_back(BigComplex(BigReal::of(mpq_class(1, 3), p),
                              BigReal::of(mpq_class(7, 5), p)));
    taus.push_back(BigComplex(BigReal::of(mpq_class(-2, 7), p),
                              BigReal::of(mpq_class(9, 11), p)));
    taus.push_back(BigComplex(BigReal::of(mpq_class(5, 2), p),
                              BigReal::of(mpq_class(1, 2), p)));
    return taus;
}

} // namespace

TEST_CASE("eta against the pentagonal-number series") {
    for (long bits : {128L, 256L}) {
        PrecisionContext ctx(bits);
        for (const BigComplex& tau : sample_taus(ctx.work_bits()))
            CHECK(cclose(eta(tau, ctx), eta_series(tau, bits), -bits + 8));
    }
}

TEST_CASE("eta rejects the lower half plane") {
    PrecisionContext ctx(128);
    CHECK_THROWS_AS(eta(BigComplex::of(0, -1, 160), ctx), NotUpperHalfPlane);
    CHECK_THROWS_AS(eta(BigComplex::of(1, 0, 160), ctx), NotUpperHalfPlane);
}

TEST_CASE("eta functional equations") {
    for (long bits : {128L, 256L}) {
        PrecisionContext ctx(bits);
        long p = ctx.work_bits();
        for (const BigComplex& tau : sample_taus(p)) {
            // eta(tau + 1) = exp(i pi / 12) eta(tau)
            BigComplex shift = eta(tau + BigComplex::of(1, 0, p), ctx);
            BigReal ang = BigReal::pi(p) / 12;
            BigComplex phase = BigComplex(BigReal::of(0L, p), ang).exp();
            CHECK(cclose(shift, phase * eta(tau, ctx), -bits + 10));
            // eta(-1/tau) = sqrt(-i tau) eta(tau)
            BigComplex inv = eta(-(tau.inverse()), ctx);
            BigComplex mit(tau.im(), -tau.re()); // -i tau
            BigComplex root = (mit.log() / BigReal::of(2L, p)).exp();
            CHECK(cclose(inv, root * eta(tau, ctx), -bits + 10));
        }
    }
}

TEST_CASE("eta at i matches the gamma closed form") {
    PrecisionContext ctx(256);
    long p = ctx.work_bits();
    BigReal expected = gamma_rational(mpq_class(1, 4), ctx) /
                       (BigReal::pi(p).pow_q(mpq_class(3, 4)) * 2);
    BigComplex got = eta(BigComplex::of(0, 1, p), ctx);
    CHECK((got.re() - expected).abs() < BigReal::pow2(-240, p));
    CHECK(got.im().abs() < BigReal::pow2(-240, p));
}

TEST_CASE("im^6 |eta24| is an SL2(Z) invariant") {
    std::mt19937 rng(4242);
    for (long bits : {128L, 256L}) {
        PrecisionContext ctx(bits);
        long p = ctx.work_bits();
        for (const BigComplex& tau : sample_taus(p)) {
            BigReal ref = tau.im().pow_si(6) * eta24(tau, ctx).abs();
            for (const Mat& m : random_sl2(rng, 5)) {
                BigComplex im_tau = apply(m, tau);
                BigReal val = im_tau.im().pow_si(6) * eta24(im_tau, ctx).abs();
                CHECK(((val - ref) / ref).abs() <
                      BigReal::pow2(-bits + 16, p));
            }
        }
    }
}

TEST_CASE("j invariant special values and the eisenstein oracle") {
    PrecisionContext ctx(256);
    long p = ctx.work_bits();
    // j(i) = 1728, j(rho) = 0, j(2i) = 66^3, j(i sqrt 2) = 20^3
    BigComplex ji = j_invariant(BigComplex::of(0, 1, p), ctx);
    CHECK((ji.re() - BigReal::of(1728L, p)).abs() < BigReal::pow2(-230, p));
    BigComplex rho(BigReal::of(mpq_class(-1, 2), p),
                   BigReal::of(3L, p).sqrt() / 2);
    CHECK(j_invariant(rho, ctx).abs() < BigReal::pow2(-230, p));
    BigComplex j2i = j_invariant(BigComplex::of(0, 2, p), ctx);
    CHECK((j2i.re() - BigReal::of(287496L, p)).abs() <
          BigReal::pow2(-220, p));
    BigComplex js2 = j_invariant(BigComplex(BigReal::of(0L, p),
                                            BigReal::of(2L, p).sqrt()),
                                 ctx);
    CHECK((js2.re() - BigReal::of(8000L, p)).abs() < BigReal::pow2(-220, p));

    // independent j via E6: j = 1728 E4^3 / (E4^3 - E6^2)
    auto e6 = [&](const BigComplex& tau) {
        long n = 200;
        std::vector<mpz_class> sigma5(static_cast<std::size_t>(n) + 1, 0);
        for (long d = 1; d <= n; ++d) {
            mpz_class d5 = mpz_class(d) * d * d * d * d;
            for (long m = d; m <= n; m += d)
                sigma5[static_cast<std::size_t>(m)] += d5;
        }
        BigReal two_pi = BigReal::pi(p) * 2;
        BigComplex q =
            BigComplex(-(two_pi * tau.im()), two_pi * tau.re()).exp();
        BigComplex s = BigComplex::of(0, 0, p), qn = BigComplex::of(1, 0, p);
        for (long k = 1; k <= n; ++k) {
            qn = qn * q;
            s = s + qn * BigReal::of(sigma5[static_cast<std::size_t>(k)], p);
        }
        return BigComplex::of(1, 0, p) - s * BigReal::of(504L, p);
    };
    for (const BigComplex& tau : sample_taus(p)) {
        if (tau.im().to_double() < 0.8)
            continue; // keep the short E6 sum converged
        BigComplex e4c = eisenstein_e4(tau, ctx).pow_si(3);
        BigComplex e6s = e6(tau).pow_si(2);
        BigComplex j_ref = e4c * BigReal::of(1728L, p) / (e4c - e6s);
        CHECK(cclose(j_invariant(tau, ctx), j_ref, -220));
    }
}

TEST_CASE("homogeneous lattice evaluation") {
    PrecisionContext ctx(256);
    long p = ctx.work_bits();
    BigComplex z1(BigReal::of(mpq_class(1, 2), p), BigReal::of(23L, p).sqrt() / 2);
    BigComplex z2 = BigComplex::of(1, 0, p);
    CHECK_THROWS_AS(homogeneous_eval(10, z1, z2, ctx), Error);
    CHECK_THROWS_AS(homogeneous_eval(12, z2, z1, ctx), NotPositivelyOriented);

    BigComplex base = homogeneous_eval(12, z1, z2, ctx);
    // invariance under determinant-1 integer basis change
    std::mt19937 rng(17);
    for (const Mat& m : random_sl2(rng, 10)) {
        BigComplex w1 = z1 * BigReal::of(m.a, p) + z2 * BigReal::of(m.b, p);
        BigComplex w2 = z1 * BigReal::of(m.c, p) + z2 * BigReal::of(m.d, p);
        CHECK(cclose(homogeneous_eval(12, w1, w2, ctx), base, -230));
    }
    // homogeneity: f(lambda z1, lambda z2) = lambda^-12 f(z1, z2)
    BigComplex lam(BigReal::of(2L, p), BigReal::of(-1L, p));
    BigComplex scaled = homogeneous_eval(12, z1 * lam, z2 * lam, ctx);
    CHECK(cclose(scaled * lam.pow_si(12), base, -225));
    // weight 24 is the square of weight 12
    CHECK(cclose(homogeneous_eval(24, z1, z2, ctx), base * base, -220));
}

TEST_CASE("petersson norm") {
    long p = 256;
    BigReal f = BigReal::of(mpq_class(3, 7), p);
    BigReal im = BigReal::of(mpq_class(5, 4), p);
    BigReal expected = f * (BigReal::pi(p) * 4 * im).pow_si(6);
    CHECK((petersson_g1(f, im, 12) - expected).abs() <
          BigReal::pow2(-240, p));
    CHECK_THROWS_AS(petersson_g1(f, -im, 12), Error);
}
