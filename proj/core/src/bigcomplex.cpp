#include <cmv/bigcomplex.hpp>

namespace cmv {

BigReal BigComplex::abs() const {
    BigReal r(prec());
    mpfr_hypot(r.get(), re_.get(), im_.get(), MPFR_RNDN);
    return r;
}

BigReal BigComplex::arg() const {
    BigReal r(prec());
    mpfr_atan2(r.get(), im_.get(), re_.get(), MPFR_RNDN);
    return r;
}

BigComplex BigComplex::exp() const {
    long p = prec();
    BigReal m = re_.exp();
    BigReal c(p), s(p);
    mpfr_sin_cos(s.get(), c.get(), im_.get(), MPFR_RNDN);
    return BigComplex(m * c, m * s);
}

BigComplex BigComplex::log() const {
    return BigComplex(abs().log(), arg());
}

BigComplex BigComplex::inverse() const {
    BigReal n = norm();
    return BigComplex(re_ / n, -(im_ / n));
}

BigComplex BigComplex::pow_si(long e) const {
    if (e < 0)
        return inverse().pow_si(-e);
    BigComplex acc = BigComplex::of(1, 0, prec());
    BigComplex base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1)
            acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

} // namespace cmv
