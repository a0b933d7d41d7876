#include <cmv/units.hpp>

#include <cmv/errors.hpp>
#include <cmv/heights.hpp>
#include <cmv/modforms.hpp>

#include <cmath>
#include <complex>
#include <string>

namespace cmv {

namespace {

std::string form_str(const QuadForm& f) {
    return "(" + f.a.get_str() + ", " + f.b.get_str() + ", " + f.c.get_str() +
           ")";
}

/// log2( Im(tau)^6 |eta24(tau)| ) in doubles, for precision budgeting only.
double log2_p_est(double re, double im) {
    std::complex<double> q =
        std::exp(std::complex<double>(-2.0 * M_PI * im, 2.0 * M_PI * re));
    double log_prod = 0.0;
    std::complex<double> qn = q;
    for (int n = 1; n <= 60; ++n) {
        log_prod += std::log(std::abs(1.0 - qn));
        qn *= q;
    }
    double ln_p = 6.0 * std::log(im) - 2.0 * M_PI * im + 24.0 * log_prod;
    return ln_p / std::log(2.0);
}

BigComplex embed_row(const FieldData& field, const mpq_class& u,
                     const mpq_class& v, long wp) {
    // u + v*omega with omega = omega_re + i sqrt(D)/2
    BigReal half_sqrt_d = BigReal::of(field.D, wp).sqrt() / 2;
    return BigComplex(BigReal::of(u + v * field.omega_re(), wp),
                      BigReal::of(v, wp) * half_sqrt_d);
}

BigReal table_tol(const EllipticUnitTable& table) {
    return BigReal::pow2(-table.bits / 2, table.work_bits);
}

} // namespace

EllipticUnitTable rho_table(const FieldData& field,
                            const PrecisionContext& ctx) {
    EllipticUnitTable t;
    t.field = field;
    t.classgroup = reduced_forms(field);
    const ClassGroup& cg = t.classgroup;
    const long h = cg.field.h;
    t.field = cg.field;
    t.bits = ctx.bits();

    // Precision budget: the rho, their h-th powers, and the characteristic
    // polynomial coefficients downstream can carry binary exponents up to
    // about 2 h * max |log2 rho|; pad the working precision accordingly so
    // absolute tolerances remain meaningful.
    double log2_p_id = 0.0, max_diff = 0.0;
    for (std::size_t i = 0; i < cg.size(); ++i) {
        const QuadForm& f = cg.forms[i];
        double a = f.a.get_d();
        double re = -f.b.get_d() / (2.0 * a);
        double im = std::sqrt(static_cast<double>(field.D)) / (2.0 * a);
        double lp = log2_p_est(re, im);
        if (i == 0)
            log2_p_id = lp;
        else
            max_diff = std::max(max_diff, std::abs(log2_p_id - lp));
    }
    long max_log2_rho = static_cast<long>(std::ceil(h * max_diff)) + 8;
    PrecisionContext ictx = ctx.with_extra(2 * h * max_log2_rho + 256);
    long wp = ictx.work_bits();
    t.work_bits = wp;

    BigComplex omega = field.omega(wp);
    BigComplex one = BigComplex::of(1, 0, wp);
    BigComplex delta_oe = homogeneous_eval(12, omega, one, ictx);

    for (std::size_t i = 0; i < cg.size(); ++i) {
        const QuadForm& f = cg.forms[i];
        t.z.push_back(cm_point(f, wp));
        t.delta.push_back(eta24(t.z.back(), ictx));

        IdealLattice a_ideal = ideal_from_form(f, field);
        AlgebraicElementE b = principal_generator(ideal_pow(a_ideal, h));
        t.b_gen.push_back(b);

        // Delta on the ideal lattice, basis (a21 + a22 omega, a11)
        BigComplex e1 = embed_row(field, a_ideal.a11, 0, wp);
        BigComplex e2 = embed_row(field, a_ideal.a21, a_ideal.a22, wp);
        BigComplex delta_a = homogeneous_eval(12, e2, e1, ictx);

        BigComplex rho = delta_oe.pow_si(h) /
                         (b.embed(field, wp).pow_si(12) * delta_a.pow_si(h));
        t.rho.push_back(rho);
    }
    return t;
}

BigComplex rho_conjugate(const EllipticUnitTable& table, std::size_t a,
                         std::size_t b) {
    const ClassGroup& cg = table.classgroup;
    std::size_t binv = cg.inv(b);
    return table.rho[cg.mul(binv, a)] / table.rho[binv];
}

BigReal check_abs_formula(const EllipticUnitTable& table, std::size_t a) {
    const ClassGroup& cg = table.classgroup;
    long h = table.field.h;
    BigReal p_id = table.z[0].im().pow_si(6) * table.delta[0].abs();
    BigReal p_a = table.z[a].im().pow_si(6) * table.delta[a].abs();
    BigReal lhs = table.rho[cg.inv(a)].abs();
    return (lhs - (p_id / p_a).pow_si(h)).abs();
}

BigReal unit_norm_check(const EllipticUnitTable& table, std::size_t a) {
    BigReal prod = BigReal::of(1L, table.work_bits);
    for (std::size_t b = 0; b < table.classgroup.size(); ++b)
        prod *= rho_conjugate(table, a, b).norm();
    return prod;
}

std::vector<AlgebraicElementE> charpoly_over_E(const EllipticUnitTable& table,
                                               std::size_t a,
                                               const PrecisionContext& ctx) {
    const ClassGroup& cg = table.classgroup;
    const FieldData& field = table.field;
    long wp = table.work_bits;

    // expand prod_b (X - rho(a)^(b,K))
    std::vector<BigComplex> coeff{BigComplex::of(1, 0, wp)};
    for (std::size_t b = 0; b < cg.size(); ++b) {
        BigComplex v = rho_conjugate(table, a, b);
        std::vector<BigComplex> next(coeff.size() + 1, BigComplex::of(0, 0, wp));
        for (std::size_t k = 0; k < coeff.size(); ++k) {
            next[k + 1] = next[k + 1] + coeff[k];
            next[k] = next[k] - coeff[k] * v;
        }
        coeff = std::move(next);
    }

    // round each coefficient to x + y omega with x, y integers
    BigReal tol = BigReal::pow2(ctx.tol_exp(), wp);
    BigReal half_sqrt_d = BigReal::of(field.D, wp).sqrt() / 2;
    BigReal om_re = BigReal::of(field.omega_re(), wp);
    std::vector<AlgebraicElementE> out;
    for (const BigComplex& c : coeff) {
        mpz_class y = (c.im() / half_sqrt_d).round();
        mpz_class x = (c.re() - BigReal::of(y, wp) * om_re).round();
        AlgebraicElementE e{mpq_class(x), mpq_class(y)};
        BigComplex resid = c - e.embed(field, wp);
        if (!(resid.abs() < tol))
            throw RecognitionFailed(
                "charpoly_over_E: coefficient rounding residual " +
                resid.abs().str(8) + " at class " + form_str(cg.forms[a]));
        out.push_back(e);
    }
    if (out.front().norm(field) != 1)
        throw RecognitionFailed(
            "charpoly_over_E: constant term is not a unit at class " +
            form_str(cg.forms[a]));
    return out;
}

BigComplex cocycle_u(const EllipticUnitTable& table, std::size_t sigma) {
    return table.rho[table.classgroup.inv(sigma)].inverse();
}

BigReal cocycle_residual(const EllipticUnitTable& table, std::size_t sigma,
                         std::size_t tau) {
    const ClassGroup& cg = table.classgroup;
    // tau( u(sigma) ) against u(tau sigma) / u(tau)
    BigComplex lhs = rho_conjugate(table, cg.inv(sigma), tau).inverse();
    BigComplex rhs = cocycle_u(table, cg.mul(tau, sigma)) *
                     cocycle_u(table, tau).inverse();
    return (lhs - rhs).abs();
}

ConjugateVector descent_unit(const EllipticUnitTable& table) {
    const ClassGroup& cg = table.classgroup;
    long wp = table.work_bits;
    ConjugateVector u;
    u.bits = table.bits;
    for (std::size_t b = 0; b < cg.size(); ++b) {
        BigComplex prod = BigComplex::of(1, 0, wp);
        for (std::size_t t = 0; t < cg.size(); ++t)
            prod = prod * rho_conjugate(table, t, b);
        u.values.push_back(prod);
    }
    BigReal tol = table_tol(table);
    for (std::size_t b = 0; b < cg.size(); ++b) {
        BigComplex lhs = u.values[b] / u.values[0];
        BigComplex rhs = cocycle_u(table, b).pow_si(table.field.h);
        BigReal resid = (lhs - rhs).abs();
        if (!(resid < tol))
            throw VerificationFailed("descent_unit: sigma(u)/u != u(sigma)^h",
                                     form_str(cg.forms[b]), resid.str(8));
    }
    return u;
}

long minimal_descent_exponent(const EllipticUnitTable& table) {
    const ClassGroup& cg = table.classgroup;
    ConjugateVector u = descent_unit(table);
    BigReal tol = table_tol(table);
    long h = table.field.h;
    for (long e = 1; e <= h; ++e) {
        if (h % e != 0)
            continue;
        bool ok = true;
        for (std::size_t b = 0; b < cg.size() && ok; ++b) {
            BigComplex lhs = u.values[b] / u.values[0];
            BigComplex rhs = cocycle_u(table, b).pow_si(e);
            ok = (lhs - rhs).abs() < tol;
        }
        if (ok)
            return e;
    }
    return h;
}

ConjugateVector class_invariant_uc(const EllipticUnitTable& table) {
    const ClassGroup& cg = table.classgroup;
    long wp = table.work_bits;
    ConjugateVector uc;
    uc.bits = table.bits;
    for (std::size_t b = 0; b < cg.size(); ++b) {
        BigComplex prod = BigComplex::of(1, 0, wp);
        for (std::size_t a = 0; a < cg.size(); ++a)
            prod = prod * rho_conjugate(table, a, b);
        uc.values.push_back(prod);
    }
    BigReal im = uc.values[0].im().abs();
    if (!(im < table_tol(table)))
        throw VerificationFailed("class_invariant_uc: u_c is not real",
                                 form_str(cg.forms[0]), im.str(8));
    return uc;
}

ConjectureReport conjecture_verify(const FieldData& field,
                                   const EllipticUnitTable& table,
                                   const PrecisionContext& ctx) {
    const ClassGroup& cg = table.classgroup;
    if (field.D != table.field.D)
        throw DiscriminantMismatch("conjecture_verify: field/table mismatch");
    long h = table.field.h;
    long wp = table.work_bits;
    ConjectureReport rep(wp);
    rep.D = table.field.D;
    rep.h = h;
    rep.w_e = table.field.w_e;
    rep.m = 12 * h * h;
    rep.bits = ctx.bits();

    ConjugateVector uc = class_invariant_uc(table);

    // R = D^(-3 h^2) * gammaprod^(3 w_E h); the check is relative, so the
    // requested precision plus a pad for the power losses is enough here.
    PrecisionContext ictx = ctx.with_extra(64);
    BigReal r = BigReal::of(field.D, wp).pow_si(-3 * h * h) *
                gamma_product(field, ictx).pow_si(3 * field.w_e * h);
    rep.r_value = r;

    BigReal tol = BigReal::pow2(ctx.tol_exp(), wp);
    BigReal max_rel = BigReal::of(0L, wp);
    BigReal max_spread = BigReal::of(0L, wp);
    BigReal v_id(wp);
    std::size_t worst = 0;
    for (std::size_t s = 0; s < cg.size(); ++s) {
        BigReal v = petersson_g1(table.delta[s].abs().pow_si(h * h),
                                 table.z[s].im(), rep.m) /
                    uc.values[s].abs();
        if (s == 0)
            v_id = v;
        BigReal rel = ((v - r) / r).abs();
        if (rel > max_rel) {
            max_rel = rel;
            worst = s;
        }
        BigReal spread = ((v - v_id) / v_id).abs();
        if (spread > max_spread)
            max_spread = spread;
    }
    rep.max_rel_residual = max_rel;
    rep.max_spread = max_spread;
    rep.pass = max_rel < tol && max_spread < tol;
    if (!rep.pass)
        throw VerificationFailed("conjecture_verify: residual above tolerance",
                                 form_str(cg.forms[worst]), max_rel.str(8));
    return rep;
}

} // namespace cmv
