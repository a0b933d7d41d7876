#include <cmv/algrec.hpp>

#include <cmv/errors.hpp>
#include <cmv/modforms.hpp>

#include <cmath>

namespace cmv {

mpz_class IntPolynomial::content() const {
    mpz_class g = 0;
    for (const mpz_class& c : coeffs)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

IntPolynomial IntPolynomial::primitive() const {
    if (is_zero())
        return *this;
    mpz_class g = content();
    if (coeffs.back() < 0)
        g = -g;
    IntPolynomial p;
    for (const mpz_class& c : coeffs)
        p.coeffs.push_back(c / g);
    return p;
}

BigReal IntPolynomial::eval(const BigReal& x) const {
    BigReal r = BigReal::of(0L, x.prec());
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        r = r * x + BigReal::of(*it, x.prec());
    return r;
}

BigComplex IntPolynomial::eval(const BigComplex& x) const {
    BigComplex r = BigComplex::of(0, 0, x.prec());
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        r = r * x + BigComplex(BigReal::of(*it, x.prec()));
    return r;
}

IntPolynomial IntPolynomial::make(std::vector<mpz_class> c) {
    while (!c.empty() && c.back() == 0)
        c.pop_back();
    return IntPolynomial{std::move(c)};
}

namespace {

mpz_class round_q(const mpq_class& q) {
    // nearest integer, ties toward +inf
    mpz_class num = q.get_num(), den = q.get_den();
    mpz_class r, two_den = 2 * den, shifted = 2 * num + den;
    mpz_fdiv_q(r.get_mpz_t(), shifted.get_mpz_t(), two_den.get_mpz_t());
    return r;
}

mpq_class dot(const std::vector<mpz_class>& a, const std::vector<mpq_class>& b) {
    mpq_class s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += b[i] * a[i];
    return s;
}

struct GramSchmidt {
    std::vector<std::vector<mpq_class>> star; // b*_i
    std::vector<std::vector<mpq_class>> mu;
    std::vector<mpq_class> B; // |b*_i|^2
};

GramSchmidt gram_schmidt(const std::vector<std::vector<mpz_class>>& rows) {
    const std::size_t n = rows.size(), m = rows.empty() ? 0 : rows[0].size();
    GramSchmidt gs;
    gs.star.assign(n, std::vector<mpq_class>(m));
    gs.mu.assign(n, std::vector<mpq_class>(n));
    gs.B.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < m; ++c)
            gs.star[i][c] = rows[i][c];
        for (std::size_t j = 0; j < i; ++j) {
            gs.mu[i][j] = dot(rows[i], gs.star[j]) / gs.B[j];
            for (std::size_t c = 0; c < m; ++c)
                gs.star[i][c] -= gs.mu[i][j] * gs.star[j][c];
        }
        for (std::size_t c = 0; c < m; ++c)
            gs.B[i] += gs.star[i][c] * gs.star[i][c];
        if (gs.B[i] == 0)
            throw DependentRows("lll_reduce: rows are linearly dependent");
    }
    return gs;
}

} // namespace

LatticeBasis lll_reduce(const LatticeBasis& basis) {
    LatticeBasis r;
    r.rows = basis.rows;
    const std::size_t n = r.rows.size();
    r.transform.assign(n, std::vector<mpz_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        r.transform[i][i] = 1;
    if (n < 2) {
        if (n == 1)
            gram_schmidt(r.rows); // dependence check (zero row)
        return r;
    }
    for (const auto& row : r.rows)
        if (row.size() != r.rows[0].size())
            throw Error("lll_reduce: ragged basis");

    const mpq_class delta(99, 100);
    std::size_t k = 1;
    GramSchmidt gs = gram_schmidt(r.rows);
    while (k < n) {
        for (std::size_t jj = k; jj-- > 0;) {
            mpz_class q = round_q(gs.mu[k][jj]);
            if (q != 0) {
                for (std::size_t c = 0; c < r.rows[0].size(); ++c)
                    r.rows[k][c] -= q * r.rows[jj][c];
                for (std::size_t c = 0; c < n; ++c)
                    r.transform[k][c] -= q * r.transform[jj][c];
                gs = gram_schmidt(r.rows);
            }
        }
        if (gs.B[k] >= (delta - gs.mu[k][k - 1] * gs.mu[k][k - 1]) *
                           gs.B[k - 1]) {
            ++k;
        } else {
            std::swap(r.rows[k], r.rows[k - 1]);
            std::swap(r.transform[k], r.transform[k - 1]);
            gs = gram_schmidt(r.rows);
            k = (k > 1) ? k - 1 : 1;
        }
    }
    return r;
}

namespace {

/// One algdep attempt at fixed degree d; empty polynomial when nothing
/// beats the acceptance bound.
IntPolynomial algdep_at_degree(const BigReal& x, long d,
                               const PrecisionContext& ctx) {
    long p_scale = ctx.bits();
    long mag = std::max(0L, x.exp2());
    long wp = p_scale + d * mag + 192;

    BigReal xw = x + BigReal::of(0L, wp); // widen
    BigReal scale = BigReal::pow2(p_scale, wp);
    LatticeBasis lat;
    BigReal xi = BigReal::of(1L, wp);
    for (long i = 0; i <= d; ++i) {
        std::vector<mpz_class> row(static_cast<std::size_t>(d) + 2, 0);
        row[0] = (xi * scale).round();
        row[static_cast<std::size_t>(i) + 1] = 1;
        lat.rows.push_back(std::move(row));
        xi *= xw;
    }
    LatticeBasis red = lll_reduce(lat);

    // Any x admits Dirichlet-style near-relations at every degree whose
    // coefficients land around 2^(bits/(d+1)); cap candidate coefficients
    // at 2^(bits/(d+2)) so only genuinely short relations survive.
    BigReal bound = BigReal::pow2(-ctx.bits() / 4, wp);
    long coeff_cap = ctx.bits() / (d + 2);
    IntPolynomial best;
    BigReal best_val = BigReal::of(0L, wp);
    for (const auto& row : red.rows) {
        std::vector<mpz_class> c(row.begin() + 1, row.end());
        IntPolynomial p = IntPolynomial::make(std::move(c));
        if (p.is_zero())
            continue;
        bool small = true;
        for (const mpz_class& co : p.coeffs)
            small = small &&
                    mpz_sizeinbase(co.get_mpz_t(), 2) <=
                        static_cast<std::size_t>(coeff_cap);
        if (!small)
            continue;
        BigReal v = p.eval(xw).abs();
        if (v < bound && (best.is_zero() || v < best_val)) {
            best = p;
            best_val = v;
        }
    }
    return best;
}

} // namespace

IntPolynomial algdep(const BigReal& x, long maxdeg,
                     const PrecisionContext& ctx) {
    if (maxdeg < 1)
        throw Error("algdep: maxdeg must be >= 1");
    for (long d = 1; d <= maxdeg; ++d) {
        IntPolynomial p = algdep_at_degree(x, d, ctx);
        if (!p.is_zero())
            return p.primitive();
    }
    throw NoRelationFound("algdep: no integer relation up to degree " +
                          std::to_string(maxdeg));
}

IntPolynomial minpoly_from_conjugates(const std::vector<BigComplex>& values,
                                      const PrecisionContext& ctx) {
    long wp = ctx.work_bits();
    for (const BigComplex& v : values)
        wp = std::max(wp, v.prec());

    std::vector<BigComplex> coeff{BigComplex::of(1, 0, wp)};
    for (const BigComplex& v : values) {
        std::vector<BigComplex> next(coeff.size() + 1,
                                     BigComplex::of(0, 0, wp));
        for (std::size_t k = 0; k < coeff.size(); ++k) {
            next[k + 1] = next[k + 1] + coeff[k];
            next[k] = next[k] - coeff[k] * v;
        }
        coeff = std::move(next);
    }

    BigReal tol = BigReal::pow2(ctx.tol_exp(), wp);
    std::vector<mpz_class> out;
    for (const BigComplex& c : coeff) {
        mpz_class z = c.re().round();
        BigReal resid =
            (c - BigComplex(BigReal::of(z, wp))).abs();
        if (!(resid < tol))
            throw RecognitionFailed(
                "minpoly_from_conjugates: rounding residual " + resid.str(8));
        out.push_back(z);
    }
    return IntPolynomial::make(std::move(out));
}

IntPolynomial hilbert_class_polynomial(const ClassGroup& cg,
                                       const PrecisionContext& ctx) {
    // |j(z_a)| is about exp(pi sqrt(D)/a); budget the coefficient magnitudes
    double sqrt_d = std::sqrt(static_cast<double>(cg.field.D));
    double extra = 0.0;
    for (const QuadForm& f : cg.forms)
        extra += M_PI * sqrt_d / f.a.get_d() / std::log(2.0) + 24.0;
    PrecisionContext ictx =
        ctx.with_extra(static_cast<long>(std::ceil(extra)) + 128);
    long wp = ictx.work_bits();

    std::vector<BigComplex> jvals;
    for (const QuadForm& f : cg.forms)
        jvals.push_back(j_invariant(cm_point(f, wp), ictx));
    return minpoly_from_conjugates(jvals, ctx);
}

BigReal coeff_height(const IntPolynomial& p) {
    if (p.is_zero())
        throw Error("coeff_height: zero polynomial");
    mpz_class m = 0;
    for (const mpz_class& c : p.coeffs) {
        mpz_class a = abs(c);
        if (a > m)
            m = a;
    }
    return BigReal::of(m, 128).log();
}

} // namespace cmv
