#ifndef CMV_BIGREAL_HPP
#define CMV_BIGREAL_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

#include <cmv/precision.hpp>

namespace cmv {

/// Arbitrary-precision real wrapping mpfr_t. A value carries its own
/// precision; binary operations compute at the larger of the two operand
/// precisions, so basic arithmetic stays within a few ulp at that precision.
class BigReal {
  public:
    explicit BigReal(long prec) {
        mpfr_init2(x_, static_cast<mpfr_prec_t>(prec));
    }
    BigReal(const BigReal& o) {
        mpfr_init2(x_, mpfr_get_prec(o.x_));
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    BigReal(BigReal&& o) noexcept {
        mpfr_init2(x_, mpfr_get_prec(o.x_));
        mpfr_swap(x_, o.x_);
    }
    BigReal& operator=(const BigReal& o) {
        if (this != &o) {
            mpfr_set_prec(x_, mpfr_get_prec(o.x_));
            mpfr_set(x_, o.x_, MPFR_RNDN);
        }
        return *this;
    }
    BigReal& operator=(BigReal&& o) noexcept {
        mpfr_swap(x_, o.x_);
        return *this;
    }
    ~BigReal() { mpfr_clear(x_); }

    static BigReal of(long v, long prec);
    static BigReal of(const mpz_class& v, long prec);
    static BigReal of(const mpq_class& v, long prec);
    static BigReal parse(const std::string& s, long prec);
    static BigReal pi(long prec);
    /// 2^e as an exact BigReal.
    static BigReal pow2(long e, long prec);

    long prec() const { return mpfr_get_prec(x_); }
    mpfr_srcptr get() const { return x_; }
    mpfr_ptr get() { return x_; }

    BigReal operator-() const;
    BigReal operator+(const BigReal& o) const;
    BigReal operator-(const BigReal& o) const;
    BigReal operator*(const BigReal& o) const;
    BigReal operator/(const BigReal& o) const;
    BigReal operator+(long v) const;
    BigReal operator-(long v) const;
    BigReal operator*(long v) const;
    BigReal operator/(long v) const;
    BigReal& operator+=(const BigReal& o);
    BigReal& operator-=(const BigReal& o);
    BigReal& operator*=(const BigReal& o);
    BigReal& operator/=(const BigReal& o);

    BigReal sqrt() const;
    BigReal exp() const;
    BigReal log() const;
    BigReal abs() const;
    BigReal pow_si(long e) const;
    /// x^(p/q) for exact rational exponents, x > 0.
    BigReal pow_q(const mpq_class& e) const;

    int sign() const { return mpfr_sgn(x_); }
    bool is_zero() const { return mpfr_zero_p(x_) != 0; }
    bool is_nan() const { return mpfr_nan_p(x_) != 0; }
    int cmp(const BigReal& o) const { return mpfr_cmp(x_, o.x_); }
    int cmp(long v) const { return mpfr_cmp_si(x_, v); }
    bool operator<(const BigReal& o) const { return cmp(o) < 0; }
    bool operator<=(const BigReal& o) const { return cmp(o) <= 0; }
    bool operator>(const BigReal& o) const { return cmp(o) > 0; }
    bool operator>=(const BigReal& o) const { return cmp(o) >= 0; }
    bool operator==(const BigReal& o) const { return cmp(o) == 0; }

    /// floor(log2 |x|) + 1 for nonzero x; very negative for 0.
    long exp2() const;
    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
    /// Nearest integer.
    mpz_class round() const;

    /// Decimal string, round-to-nearest at `digits` significant digits.
    std::string str(size_t digits) const;

  private:
    mpfr_t x_;
};

BigReal operator*(long v, const BigReal& x);
BigReal operator-(long v, const BigReal& x);
BigReal operator+(long v, const BigReal& x);
BigReal operator/(long v, const BigReal& x);

} // namespace cmv

#endif
