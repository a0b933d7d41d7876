#ifndef CMV_UNITS_HPP
#define CMV_UNITS_HPP

#include <vector>

#include <cmv/bigcomplex.hpp>
#include <cmv/precision.hpp>
#include <cmv/quadratic.hpp>

namespace cmv {

/// Elliptic units rho(a) = Delta(O_E)^h / (b(a)^12 Delta(a)^h), one per
/// ideal class, with the exact generators b(a) of a^h alongside.
///
/// Values are carried at an internally elevated precision (work_bits):
/// the rho and their h-th powers can have binary exponents in the hundreds,
/// and downstream identities are checked against absolute tolerances, so
/// the table pads its working precision by a magnitude estimate made in
/// double arithmetic before any big evaluation starts.
struct EllipticUnitTable {
    FieldData field;
    ClassGroup classgroup;
    std::vector<AlgebraicElementE> b_gen; // generator of a^h, exact
    std::vector<BigComplex> rho;
    long bits = 0;      // precision requested by the caller
    long work_bits = 0; // elevated precision the values actually carry

    // cached per-class CM data at work_bits (z_a and eta24(z_a))
    std::vector<BigComplex> z;
    std::vector<BigComplex> delta;
};

/// Element of the Hilbert class field H given by its complex embeddings,
/// indexed by the ideal classes through the Artin map. The remaining
/// embeddings are the complex conjugates of the stored ones.
struct ConjugateVector {
    std::vector<BigComplex> values;
    long bits = 0;
};

EllipticUnitTable rho_table(const FieldData& field,
                            const PrecisionContext& ctx);

/// rho(a)^(b,K) = rho(b^-1 a) / rho(b^-1).
BigComplex rho_conjugate(const EllipticUnitTable& table, std::size_t a,
                         std::size_t b);

/// | |rho(a^-1)| - (Im z_id^6 |eta24(z_id)|)^h / (Im z_a^6 |eta24(z_a)|)^h |.
BigReal check_abs_formula(const EllipticUnitTable& table, std::size_t a);

/// prod_b |rho_conjugate(a,b)|^2, the absolute norm of rho(a) from H to Q.
BigReal unit_norm_check(const EllipticUnitTable& table, std::size_t a);

/// Coefficients of prod_b (X - rho(a)^(b,K)), ascending degree, rounded
/// to the nearest x + y omega with x, y integers. Throws RecognitionFailed
/// if any rounding residual reaches the tolerance.
std::vector<AlgebraicElementE> charpoly_over_E(const EllipticUnitTable& table,
                                               std::size_t a,
                                               const PrecisionContext& ctx);

/// u(sigma) = rho(a(sigma)^-1)^-1.
BigComplex cocycle_u(const EllipticUnitTable& table, std::size_t sigma);

/// Residual of the cocycle relation: | tau(u(sigma)) - u(tau sigma)/u(tau) |.
BigReal cocycle_residual(const EllipticUnitTable& table, std::size_t sigma,
                         std::size_t tau);

/// The unit u = (prod_tau u(tau))^-1 trivializing the cocycle, as its
/// embedding vector; verifies sigma(u)/u = u(sigma)^h for every sigma and
/// throws VerificationFailed otherwise.
ConjugateVector descent_unit(const EllipticUnitTable& table);

/// Smallest e | h with sigma(u)/u = u(sigma)^e for all sigma (within tol).
long minimal_descent_exponent(const EllipticUnitTable& table);

/// u_c = prod_a rho(a), with embeddings sigma_b(u_c) = prod_a rho(a)^(b,K);
/// asserts u_c is real (|Im| below tol).
ConjugateVector class_invariant_uc(const EllipticUnitTable& table);

struct ConjectureReport {
    long D = 0, h = 0, w_e = 0;
    long m = 0; // 12 h^2
    BigReal r_value;
    BigReal max_rel_residual; // max_sigma |V_sigma - R| / R
    BigReal max_spread;       // max_sigma |V_sigma - V_id| / V_id
    long bits = 0;
    bool pass = false;

    explicit ConjectureReport(long prec)
        : r_value(prec), max_rel_residual(prec), max_spread(prec) {}
};

/// With m = 12 h^2, checks that every embedding value
/// V_sigma = |eta24(z_sigma)|^(h^2) (4 pi Im z_sigma)^(6 h^2) / |sigma(u_c)|
/// equals R = D^(-3 h^2) gammaprod^(3 w_E h), and that the V_sigma agree
/// with each other. Throws VerificationFailed with the offending class.
ConjectureReport conjecture_verify(const FieldData& field,
                                   const EllipticUnitTable& table,
                                   const PrecisionContext& ctx);

} // namespace cmv

#endif
