#include <cmv/bigreal.hpp>

#include <algorithm>
#include <cstdio>
#include <vector>

namespace cmv {

namespace {
long join(const BigReal& a, const BigReal& b) {
    return std::max(a.prec(), b.prec());
}
} // namespace

BigReal BigReal::of(long v, long prec) {
    BigReal r(prec);
    mpfr_set_si(r.get(), v, MPFR_RNDN);
    return r;
}

BigReal BigReal::of(const mpz_class& v, long prec) {
    BigReal r(prec);
    mpfr_set_z(r.get(), v.get_mpz_t(), MPFR_RNDN);
    return r;
}

BigReal BigReal::of(const mpq_class& v, long prec) {
    BigReal r(prec);
    mpfr_set_q(r.get(), v.get_mpq_t(), MPFR_RNDN);
    return r;
}

BigReal BigReal::parse(const std::string& s, long prec) {
    BigReal r(prec);
    mpfr_set_str(r.get(), s.c_str(), 10, MPFR_RNDN);
    return r;
}

BigReal BigReal::pi(long prec) {
    BigReal r(prec);
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
}

BigReal BigReal::pow2(long e, long prec) {
    BigReal r(prec);
    mpfr_set_si_2exp(r.get(), 1, static_cast<mpfr_exp_t>(e), MPFR_RNDN);
    return r;
}

BigReal BigReal::operator-() const {
    BigReal r(prec());
    mpfr_neg(r.get(), x_, MPFR_RNDN);
    return r;
}

#define CMV_BINOP(op, fn)                                                      \
    BigReal BigReal::operator op(const BigReal& o) const {                     \
        BigReal r(join(*this, o));                                             \
        fn(r.get(), x_, o.x_, MPFR_RNDN);                                      \
        return r;                                                              \
    }
CMV_BINOP(+, mpfr_add)
CMV_BINOP(-, mpfr_sub)
CMV_BINOP(*, mpfr_mul)
CMV_BINOP(/, mpfr_div)
#undef CMV_BINOP

#define CMV_BINOP_SI(op, fn)                                                   \
    BigReal BigReal::operator op(long v) const {                               \
        BigReal r(prec());                                                     \
        fn(r.get(), x_, v, MPFR_RNDN);                                         \
        return r;                                                              \
    }
CMV_BINOP_SI(+, mpfr_add_si)
CMV_BINOP_SI(-, mpfr_sub_si)
CMV_BINOP_SI(*, mpfr_mul_si)
CMV_BINOP_SI(/, mpfr_div_si)
#undef CMV_BINOP_SI

BigReal& BigReal::operator+=(const BigReal& o) { return *this = *this + o; }
BigReal& BigReal::operator-=(const BigReal& o) { return *this = *this - o; }
BigReal& BigReal::operator*=(const BigReal& o) { return *this = *this * o; }
BigReal& BigReal::operator/=(const BigReal& o) { return *this = *this / o; }

BigReal BigReal::sqrt() const {
    BigReal r(prec());
    mpfr_sqrt(r.get(), x_, MPFR_RNDN);
    return r;
}

BigReal BigReal::exp() const {
    BigReal r(prec());
    mpfr_exp(r.get(), x_, MPFR_RNDN);
    return r;
}

BigReal BigReal::log() const {
    BigReal r(prec());
    mpfr_log(r.get(), x_, MPFR_RNDN);
    return r;
}

BigReal BigReal::abs() const {
    BigReal r(prec());
    mpfr_abs(r.get(), x_, MPFR_RNDN);
    return r;
}

BigReal BigReal::pow_si(long e) const {
    BigReal r(prec());
    mpfr_pow_si(r.get(), x_, e, MPFR_RNDN);
    return r;
}

BigReal BigReal::pow_q(const mpq_class& e) const {
    BigReal le = log() * BigReal::of(e, prec());
    return le.exp();
}

long BigReal::exp2() const {
    if (mpfr_zero_p(x_))
        return -(1L << 40);
    return static_cast<long>(mpfr_get_exp(x_));
}

mpz_class BigReal::round() const {
    mpfr_t t;
    mpfr_init2(t, mpfr_get_prec(x_));
    mpfr_round(t, x_);
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), t, MPFR_RNDN);
    mpfr_clear(t);
    return z;
}

std::string BigReal::str(size_t digits) const {
    std::vector<char> buf(digits + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", static_cast<int>(digits - 1),
                  x_);
    return std::string(buf.data());
}

BigReal operator*(long v, const BigReal& x) { return x * v; }
BigReal operator+(long v, const BigReal& x) { return x + v; }
BigReal operator-(long v, const BigReal& x) { return -(x - v); }
BigReal operator/(long v, const BigReal& x) {
    return BigReal::of(v, x.prec()) / x;
}

} // namespace cmv
