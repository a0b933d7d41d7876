#include <doctest.h>

#include <cmv/bigcomplex.hpp>
#include <cmv/bigreal.hpp>
#include <cmv/errors.hpp>
#include <cmv/precision.hpp>

using namespace cmv;

namespace {
bool close(const BigReal& a, const BigReal& b, long exp2_bound) {
    return (a - b).abs() < BigReal::pow2(exp2_bound, a.prec());
}
} // namespace

TEST_CASE("precision context validates its inputs") {
    CHECK_THROWS_AS(PrecisionContext(32), PrecisionTooLow);
    CHECK_THROWS_AS(PrecisionContext(128, 8), PrecisionTooLow);
    PrecisionContext ctx(128);
    CHECK(ctx.bits() == 128);
    CHECK(ctx.guard_bits() == 32);
    CHECK(ctx.work_bits() == 160);
    CHECK(ctx.tol_exp() == -64);
    CHECK(ctx.doubled().bits() == 256);
    CHECK(ctx.with_extra(100).bits() == 228);
}

TEST_CASE("exact constructions and round trips") {
    const long p = 192;
    CHECK(BigReal::of(42L, p).round() == 42);
    CHECK(BigReal::of(mpz_class("123456789123456789123456789"), p).round() ==
          mpz_class("123456789123456789123456789"));
    BigReal q = BigReal::of(mpq_class(1, 3), p);
    CHECK(close(q * 3, BigReal::of(1L, p), -p + 4));
    CHECK(BigReal::pow2(-10, p) * 1024 == BigReal::of(1L, p));
    CHECK(BigReal::parse("0.25", p) == BigReal::of(mpq_class(1, 4), p));
    CHECK(BigReal::of(-7L, p).abs() == BigReal::of(7L, p));
    CHECK(BigReal::of(5L, p).exp2() == 3); // floor(log2 5) + 1
}

TEST_CASE("arithmetic accuracy at working precision") {
    const long p = 256;
    BigReal two = BigReal::of(2L, p);
    CHECK(close(two.sqrt() * two.sqrt(), two, -250));
    BigReal x = BigReal::of(mpq_class(17, 5), p);
    CHECK(close(x.log().exp(), x, -248));
    CHECK(close(x.pow_si(7) / (x * x * x * x * x * x * x),
                BigReal::of(1L, p), -248));
    CHECK(close(x.pow_si(-3) * x.pow_si(3), BigReal::of(1L, p), -248));
    CHECK(close(x.pow_q(mpq_class(1, 3)).pow_si(3), x, -245));
    // pi against Machin's formula
    BigReal one = BigReal::of(1L, p);
    auto atan_inv = [&](long k) {
        // arctan(1/k) by series
        BigReal inv = one / k, term = inv, sum = inv, k2 = inv * inv;
        for (long n = 3; n < 500; n += 2) {
            term = term * k2;
            sum = (n % 4 == 1) ? sum + term / n : sum - term / n;
            if (term.exp2() < -p - 8)
                break;
        }
        return sum;
    };
    BigReal machin = (atan_inv(5) * 4 - atan_inv(239)) * 4;
    CHECK(close(machin, BigReal::pi(p), -250));
}

TEST_CASE("binary operations carry the larger operand precision") {
    BigReal a(128), b(320);
    a = BigReal::of(1L, 128);
    b = BigReal::of(1L, 320);
    CHECK((a + b).prec() == 320);
    CHECK((b * a).prec() == 320);
}

TEST_CASE("decimal strings are round-to-nearest") {
    const long p = 128;
    CHECK(BigReal::of(mpq_class(1, 4), p).str(3) == "2.50e-01");
    BigReal third = BigReal::of(1L, p) / 3;
    CHECK(third.str(5).substr(0, 6) == "3.3333");
}

TEST_CASE("complex arithmetic and transcendentals") {
    const long p = 256;
    BigComplex i = BigComplex::of(0, 1, p);
    BigComplex z(BigReal::of(1L, p), BigReal::of(1L, p));
    CHECK(close(z.abs(), BigReal::of(2L, p).sqrt(), -250));
    CHECK(close(z.arg() * 4, BigReal::pi(p), -248));
    CHECK(close((z * z.conj()).re(), z.norm(), -250));
    // exp(i pi) = -1
    BigComplex e = (i * BigReal::pi(p)).exp();
    CHECK(close(e.re(), BigReal::of(-1L, p), -248));
    CHECK(e.im().abs() < BigReal::pow2(-248, p));
    // log/exp round trip away from the branch cut
    BigComplex w(BigReal::of(3L, p), BigReal::of(-2L, p));
    BigComplex r = w.log().exp();
    CHECK(close(r.re(), w.re(), -245));
    CHECK(close(r.im(), w.im(), -245));
    // pow_si vs repeated multiplication, inverse
    BigComplex w5 = w * w * w * w * w;
    CHECK(close(w.pow_si(5).re(), w5.re(), -240));
    CHECK(close(w.pow_si(5).im(), w5.im(), -240));
    BigComplex unit = w * w.inverse();
    CHECK(close(unit.re(), BigReal::of(1L, p), -248));
    CHECK(unit.im().abs() < BigReal::pow2(-248, p));
}
