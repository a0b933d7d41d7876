#ifndef CMV_HEIGHTS_HPP
#define CMV_HEIGHTS_HPP

#include <gmpxx.h>

#include <vector>

#include <cmv/bigreal.hpp>
#include <cmv/precision.hpp>
#include <cmv/quadratic.hpp>

namespace cmv {

/// Exact complex rational.
struct QQi {
    mpq_class re{0}, im{0};

    QQi conj() const { return {re, -im}; }
    QQi operator+(const QQi& o) const { return {re + o.re, im + o.im}; }
    QQi operator-(const QQi& o) const { return {re - o.re, im - o.im}; }
    QQi operator*(const QQi& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    QQi operator*(const mpq_class& s) const { return {re * s, im * s}; }
    bool operator==(const QQi& o) const = default;
};

/// Finite abelian group presented as a direct product of cyclic factors;
/// elements are indexed lexicographically by their digit vectors.
class FiniteAbelianGroup {
  public:
    explicit FiniteAbelianGroup(std::vector<long> cyclic_orders);

    std::size_t size() const { return size_; }
    std::size_t identity() const { return 0; }
    std::size_t compose(std::size_t i, std::size_t j) const;
    std::size_t inverse(std::size_t i) const;
    bool operator==(const FiniteAbelianGroup& o) const {
        return orders_ == o.orders_;
    }

  private:
    std::vector<long> orders_;
    std::size_t size_;
};

/// Complex-rational-valued function on a finite abelian group.
struct GroupFunction {
    FiniteAbelianGroup group;
    std::vector<QQi> values;

    static GroupFunction indicator(const FiniteAbelianGroup& g, std::size_t at);
    static GroupFunction constant(const FiniteAbelianGroup& g, const QQi& v);
};

/// (f*g)(l) = (1/#G) sum_c f(c) g(c^-1 l).
GroupFunction convolve(const GroupFunction& f, const GroupFunction& g);

/// <f,g> = (1/#G) sum_c f(c) conj(g(c)).
QQi inner(const GroupFunction& f, const GroupFunction& g);

/// prod_{j=1}^{D-1} Gamma(j/D)^chi(j), chi the Kronecker character of -D.
BigReal gamma_product(const FieldData& field, const PrecisionContext& ctx);

struct LFunctionData {
    mpq_class l0;     // L(chi, 0) = 2h/w_E
    BigReal lprime0;  // L'(chi, 0)
    long conductor;   // = D
};

LFunctionData lfunction_data(const FieldData& field,
                             const PrecisionContext& ctx);

/// Faltings height via the Gamma-product formula:
/// (1/4) log D - (w_E / 4h) sum_j chi(j) log Gamma(j/D).
BigReal faltings_gamma(const FieldData& field, const PrecisionContext& ctx);

/// Faltings height via eta at the CM points:
/// -(1/2h) sum_a log( Im(z_a) |eta(z_a)|^4 (4 pi) ).
BigReal faltings_eta(const ClassGroup& cg, const PrecisionContext& ctx);

struct HeightReport {
    long D = 0, h = 0, w_e = 0;
    BigReal h_fal_gamma, h_fal_eta;
    BigReal cs_lhs, cs_rhs;
    BigReal max_abs_diff;
    long bits = 0;
    bool pass = false;

    HeightReport(long prec)
        : h_fal_gamma(prec), h_fal_eta(prec), cs_lhs(prec), cs_rhs(prec),
          max_abs_diff(prec) {}
};

/// Both sides of the Chowla-Selberg identity plus the two Faltings-height
/// routes; pass iff every residual is below 2^(-bits/2).
HeightReport cs_verify(const ClassGroup& cg, const PrecisionContext& ctx);

} // namespace cmv

#endif
