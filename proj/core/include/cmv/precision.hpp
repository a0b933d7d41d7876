#ifndef CMV_PRECISION_HPP
#define CMV_PRECISION_HPP

#include <cmv/errors.hpp>

namespace cmv {

/// Working-precision policy shared by every numeric operation.
/// `tol` is always 2^(-bits/2); it is derived, never set directly.
class PrecisionContext {
  public:
    explicit PrecisionContext(long bits, long guard_bits = 32)
        : bits_(bits), guard_bits_(guard_bits) {
        if (bits < 64)
            throw PrecisionTooLow("PrecisionContext: bits must be >= 64");
        if (guard_bits < 16)
            throw PrecisionTooLow("PrecisionContext: guard_bits must be >= 16");
    }

    long bits() const { return bits_; }
    long guard_bits() const { return guard_bits_; }
    /// Precision actually carried by intermediate values.
    long work_bits() const { return bits_ + guard_bits_; }
    /// Comparison tolerance exponent: tol = 2^tol_exp().
    long tol_exp() const { return -bits_ / 2; }

    PrecisionContext doubled() const {
        return PrecisionContext(2 * bits_, guard_bits_);
    }
    PrecisionContext with_extra(long extra) const {
        return PrecisionContext(bits_ + extra, guard_bits_);
    }

  private:
    long bits_;
    long guard_bits_;
};

} // namespace cmv

#endif
