#ifndef CMV_ALGREC_HPP
#define CMV_ALGREC_HPP

#include <gmpxx.h>

#include <vector>

#include <cmv/bigcomplex.hpp>
#include <cmv/precision.hpp>
#include <cmv/quadratic.hpp>

namespace cmv {

/// Integer polynomial, coefficients in ascending degree order, leading
/// coefficient nonzero (the zero polynomial has an empty coefficient list).
struct IntPolynomial {
    std::vector<mpz_class> coeffs;

    long degree() const { return static_cast<long>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    mpz_class content() const;
    IntPolynomial primitive() const;
    BigReal eval(const BigReal& x) const;
    BigComplex eval(const BigComplex& x) const;
    /// Drop trailing zero coefficients.
    static IntPolynomial make(std::vector<mpz_class> c);
    bool operator==(const IntPolynomial& o) const = default;
};

/// Integer lattice given by basis rows. `transform` is filled by lll_reduce
/// with the unimodular row operations applied (reduced = transform * input).
struct LatticeBasis {
    std::vector<std::vector<mpz_class>> rows;
    std::vector<std::vector<mpz_class>> transform;
};

/// Exact-arithmetic LLL with Lovasz parameter delta = 0.99.
LatticeBasis lll_reduce(const LatticeBasis& basis);

/// Integer polynomial p of minimal degree <= maxdeg with |p(x)| < 2^(-bits/4),
/// found degree by degree via LLL on the standard algdep lattice.
IntPolynomial algdep(const BigReal& x, long maxdeg,
                     const PrecisionContext& ctx);

/// Monic integer polynomial prod (X - v_i) from a conjugation-stable multiset
/// of values; every rounded coefficient must sit within 2^(-bits/2) of the
/// numeric one, else RecognitionFailed.
IntPolynomial minpoly_from_conjugates(const std::vector<BigComplex>& values,
                                      const PrecisionContext& ctx);

/// prod over the class group of (X - j(z_a)), recognized over Z. The working
/// precision is raised internally to cover the coefficient magnitudes.
IntPolynomial hilbert_class_polynomial(const ClassGroup& cg,
                                       const PrecisionContext& ctx);

/// log max |coefficient|.
BigReal coeff_height(const IntPolynomial& p);

} // namespace cmv

#endif
