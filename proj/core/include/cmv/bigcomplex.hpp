#ifndef CMV_BIGCOMPLEX_HPP
#define CMV_BIGCOMPLEX_HPP

#include <cmv/bigreal.hpp>

namespace cmv {

/// Complex number over BigReal. Conjugation is exact on the representation;
/// modulus and argument are computed at the operand precision.
class BigComplex {
  public:
    BigComplex(BigReal re, BigReal im) : re_(std::move(re)), im_(std::move(im)) {}
    explicit BigComplex(BigReal re)
        : re_(std::move(re)), im_(BigReal::of(0L, re_.prec())) {}
    static BigComplex of(long re, long im, long prec) {
        return BigComplex(BigReal::of(re, prec), BigReal::of(im, prec));
    }

    const BigReal& re() const { return re_; }
    const BigReal& im() const { return im_; }
    long prec() const { return std::max(re_.prec(), im_.prec()); }

    BigComplex operator-() const { return BigComplex(-re_, -im_); }
    BigComplex conj() const { return BigComplex(re_, -im_); }
    BigComplex operator+(const BigComplex& o) const {
        return BigComplex(re_ + o.re_, im_ + o.im_);
    }
    BigComplex operator-(const BigComplex& o) const {
        return BigComplex(re_ - o.re_, im_ - o.im_);
    }
    BigComplex operator*(const BigComplex& o) const {
        return BigComplex(re_ * o.re_ - im_ * o.im_,
                          re_ * o.im_ + im_ * o.re_);
    }
    BigComplex operator*(const BigReal& s) const {
        return BigComplex(re_ * s, im_ * s);
    }
    BigComplex operator/(const BigComplex& o) const {
        BigReal n = o.norm();
        return BigComplex((re_ * o.re_ + im_ * o.im_) / n,
                          (im_ * o.re_ - re_ * o.im_) / n);
    }
    BigComplex operator/(const BigReal& s) const {
        return BigComplex(re_ / s, im_ / s);
    }

    /// re^2 + im^2.
    BigReal norm() const { return re_ * re_ + im_ * im_; }
    BigReal abs() const;
    BigReal arg() const;
    BigComplex exp() const;
    BigComplex log() const;
    BigComplex inverse() const;
    BigComplex pow_si(long e) const;

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  private:
    BigReal re_;
    BigReal im_;
};

} // namespace cmv

#endif
