#ifndef CMV_QUADRATIC_HPP
#define CMV_QUADRATIC_HPP

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

#include <cmv/bigcomplex.hpp>
#include <cmv/precision.hpp>

namespace cmv {

/// Imaginary quadratic field Q(sqrt(-d0)) with its maximal order.
/// The field discriminant is -D with D = d0 (d0 = 3 mod 4) or 4*d0.
struct FieldData {
    long d0 = 0;
    long D = 0;
    /// true when d0 = 3 mod 4, i.e. omega = (1 + i sqrt(d0))/2; otherwise
    /// omega = i sqrt(d0). In both cases Im(omega) = sqrt(D)/2.
    bool half_integral = false;
    long w_e = 2;
    long h = 0; // filled by reduced_forms

    /// Canonical CM point for O_E: (1+i sqrt(d0))/2 or i sqrt(d0).
    BigComplex cm_point_oe(long prec) const;
    BigComplex omega(long prec) const;
    /// Rational part data of omega: omega^2 = omega*omega_lin + omega_const.
    mpq_class omega_sq_lin() const { return half_integral ? 1 : 0; }
    mpq_class omega_sq_const() const {
        return half_integral ? mpq_class(-(D + 1)) / 4 : mpq_class(-D) / 4;
    }
    mpq_class omega_re() const { return half_integral ? mpq_class(1, 2) : 0; }
};

/// d0 squarefree and >= 1, else NotSquarefree.
FieldData field_data(long d0);

/// True iff -D is the discriminant of a maximal imaginary quadratic order.
bool is_fundamental(long D);

/// Kronecker symbol (-D | n) for fundamental -D.
int kronecker_chi(long D, long n);

/// Primitive integral binary quadratic form a x^2 + b xy + c y^2.
struct QuadForm {
    mpz_class a, b, c;

    mpz_class discriminant() const { return b * b - 4 * a * c; }
    bool is_reduced() const;
    bool operator==(const QuadForm& o) const = default;
    bool operator<(const QuadForm& o) const {
        if (int s = cmp(a, o.a))
            return s < 0;
        if (int s = cmp(b, o.b))
            return s < 0;
        return cmp(c, o.c) < 0;
    }
};

QuadForm reduce_form(QuadForm f);
QuadForm compose_forms(const QuadForm& f, const QuadForm& g);
QuadForm class_inverse(const QuadForm& f);
QuadForm form_pow(const QuadForm& f, long e, long D);

/// tau_f = (-b + i sqrt(D)) / (2a).
BigComplex cm_point(const QuadForm& f, long prec);

/// Class group of O_E as the ordered list of reduced forms,
/// principal form first, then lexicographic by (a, b).
struct ClassGroup {
    FieldData field;
    std::vector<QuadForm> forms;
    std::map<QuadForm, std::size_t> index;

    std::size_t size() const { return forms.size(); }
    std::size_t id() const { return 0; }
    std::size_t mul(std::size_t i, std::size_t j) const;
    std::size_t inv(std::size_t i) const;
    std::size_t pos(const QuadForm& f) const { return index.at(f); }
};

ClassGroup reduced_forms(const FieldData& field);

/// Exact element x + y*omega of E.
struct AlgebraicElementE {
    mpq_class x, y;

    bool is_integral() const {
        return x.get_den() == 1 && y.get_den() == 1;
    }
    bool is_zero() const { return x == 0 && y == 0; }
    /// N(x + y omega) as an exact rational, always >= 0.
    mpq_class norm(const FieldData& field) const;
    AlgebraicElementE mul(const AlgebraicElementE& o,
                          const FieldData& field) const;
    AlgebraicElementE conj(const FieldData& field) const;
    BigComplex embed(const FieldData& field, long prec) const;
};

/// Finitely generated O_E-submodule of E in lower-triangular HNF over the
/// basis (1, omega): rows (a11, 0) and (a21, a22) with a22 | y-coordinates.
struct IdealLattice {
    FieldData field;
    mpq_class a11, a21, a22;

    mpq_class norm() const { return a11 * a22; }
    bool contains(const AlgebraicElementE& e) const;
    bool operator==(const IdealLattice& o) const {
        return a11 == o.a11 && a21 == o.a21 && a22 == o.a22;
    }
};

IdealLattice ideal_from_form(const QuadForm& f, const FieldData& field);
IdealLattice ideal_multiply(const IdealLattice& i, const IdealLattice& j);
IdealLattice ideal_pow(const IdealLattice& i, long e);
IdealLattice principal_ideal(const AlgebraicElementE& g, const FieldData& field);
/// Reduced form of the class of an integral primitive-scaled ideal.
QuadForm form_from_ideal(const IdealLattice& i);

/// Generator of a principal integral ideal, canonicalized so the embedding
/// argument lies in (-pi/w_E, pi/w_E]. Throws NonPrincipal otherwise.
AlgebraicElementE principal_generator(const IdealLattice& ideal);

/// (prod over both embeddings |sigma(x)|, #(O_E / x O_E)) for integral x.
std::pair<BigReal, mpz_class> norm_lemma_check(const AlgebraicElementE& x,
                                               const FieldData& field,
                                               const PrecisionContext& ctx);

} // namespace cmv

#endif
