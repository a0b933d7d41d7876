#include <cmv/quadratic.hpp>

#include <cmv/errors.hpp>

#include <algorithm>
#include <numeric>

namespace cmv {

namespace {

bool squarefree(long n) {
    if (n < 1)
        return false;
    for (long p = 2; p * p <= n; ++p)
        if (n % (p * p) == 0)
            return false;
    return true;
}

} // namespace

BigComplex FieldData::omega(long prec) const {
    BigReal im = BigReal::of(D, prec).sqrt() / 2;
    BigReal re = half_integral ? BigReal::of(mpq_class(1, 2), prec)
                               : BigReal::of(0L, prec);
    return BigComplex(re, im);
}

BigComplex FieldData::cm_point_oe(long prec) const {
    return omega(prec);
}

FieldData field_data(long d0) {
    if (!squarefree(d0))
        throw NotSquarefree("field_data: d0 must be squarefree and positive");
    FieldData f;
    f.d0 = d0;
    f.half_integral = (d0 % 4 == 3);
    f.D = f.half_integral ? d0 : 4 * d0;
    f.w_e = (f.D == 3) ? 6 : (f.D == 4) ? 4 : 2;
    return f;
}

bool is_fundamental(long D) {
    if (D <= 0)
        return false;
    if (D % 4 == 3)
        return squarefree(D);
    if (D % 4 == 0) {
        long m = D / 4;
        return (m % 4 == 1 || m % 4 == 2) && squarefree(m);
    }
    return false;
}

int kronecker_chi(long D, long n) {
    if (!is_fundamental(D))
        throw NotFundamental("kronecker_chi: -D is not fundamental");
    mpz_class a(-D);
    return mpz_kronecker_si(a.get_mpz_t(), n);
}

bool QuadForm::is_reduced() const {
    mpz_class ab = ::abs(b);
    if (!(ab <= a && a <= c))
        return false;
    if ((ab == a || a == c) && b < 0)
        return false;
    return true;
}

QuadForm reduce_form(QuadForm f) {
    mpz_class disc = f.discriminant();
    for (;;) {
        // normalize b into (-a, a]
        if (f.b > f.a || f.b <= -f.a) {
            mpz_class two_a = 2 * f.a;
            mpz_class r = f.b % two_a;
            if (r > f.a)
                r -= two_a;
            else if (r <= -f.a)
                r += two_a;
            f.b = r;
            f.c = (f.b * f.b - disc) / (4 * f.a);
        }
        if (f.a > f.c) {
            f = QuadForm{f.c, -f.b, f.a};
            continue;
        }
        break;
    }
    if ((f.a == f.c || f.b == -f.a) && f.b < 0)
        f.b = -f.b;
    return f;
}

QuadForm compose_forms(const QuadForm& f, const QuadForm& g) {
    if (f.discriminant() != g.discriminant())
        throw DiscriminantMismatch("compose_forms: discriminants differ");
    mpz_class s = (f.b + g.b) / 2;
    mpz_class d1, u0, v0;
    mpz_gcdext(d1.get_mpz_t(), u0.get_mpz_t(), v0.get_mpz_t(),
               f.a.get_mpz_t(), g.a.get_mpz_t());
    mpz_class d, v1, w;
    mpz_gcdext(d.get_mpz_t(), v1.get_mpz_t(), w.get_mpz_t(), d1.get_mpz_t(),
               s.get_mpz_t());
    mpz_class v = v0 * v1;
    mpz_class a2d = g.a / d;
    QuadForm r;
    r.a = f.a * a2d / d;
    mpz_class t = 2 * a2d * ((s - g.b) * v - w * g.c);
    r.b = g.b + t;
    r.c = (r.b * r.b - f.discriminant()) / (4 * r.a);
    return reduce_form(r);
}

QuadForm class_inverse(const QuadForm& f) {
    return reduce_form(QuadForm{f.a, -f.b, f.c});
}

namespace {
QuadForm principal_form(long D) {
    if (D % 2 == 1)
        return QuadForm{1, 1, mpz_class(D + 1) / 4};
    return QuadForm{1, 0, mpz_class(D) / 4};
}
} // namespace

QuadForm form_pow(const QuadForm& f, long e, long D) {
    QuadForm acc = principal_form(D);
    QuadForm base = f;
    for (unsigned long k = static_cast<unsigned long>(e); k; k >>= 1) {
        if (k & 1)
            acc = compose_forms(acc, base);
        base = compose_forms(base, base);
    }
    return acc;
}

BigComplex cm_point(const QuadForm& f, long prec) {
    mpz_class D = -f.discriminant();
    BigReal sq = BigReal::of(D, prec).sqrt();
    BigReal den = BigReal::of(mpz_class(2 * f.a), prec);
    return BigComplex(BigReal::of(mpz_class(-f.b), prec) / den, sq / den);
}

std::size_t ClassGroup::mul(std::size_t i, std::size_t j) const {
    return pos(compose_forms(forms[i], forms[j]));
}

std::size_t ClassGroup::inv(std::size_t i) const {
    return pos(class_inverse(forms[i]));
}

ClassGroup reduced_forms(const FieldData& field) {
    if (!is_fundamental(field.D))
        throw NotFundamental("reduced_forms: -D is not fundamental");
    ClassGroup cg;
    cg.field = field;
    long D = field.D;
    for (long a = 1; 3 * a * a <= D; ++a) {
        for (long b = -a + 1; b <= a; ++b) {
            if (((b * b + D) % 4) != 0)
                continue;
            long num = (b * b + D) / 4;
            if (num % a != 0)
                continue;
            long c = num / a;
            if (c < a)
                continue;
            if (a == c && b < 0)
                continue;
            long g = std::gcd(std::gcd(a, std::abs(b)), c);
            if (g != 1)
                continue;
            cg.forms.push_back(QuadForm{a, b, c});
        }
    }
    // a ascending, then b descending: lists (a, b, c) before (a, -b, c),
    // and puts the principal form (a = 1) first
    std::sort(cg.forms.begin(), cg.forms.end(),
              [](const QuadForm& x, const QuadForm& y) {
                  if (int s = cmp(x.a, y.a))
                      return s < 0;
                  if (int s = cmp(x.b, y.b))
                      return s > 0;
                  return cmp(x.c, y.c) < 0;
              });
    for (std::size_t i = 0; i < cg.forms.size(); ++i)
        cg.index.emplace(cg.forms[i], i);
    cg.field.h = static_cast<long>(cg.forms.size());
    return cg;
}

mpq_class AlgebraicElementE::norm(const FieldData& field) const {
    mpq_class re = field.omega_re();
    // (x + y Re w)^2 + y^2 (D/4)
    mpq_class u = x + y * re;
    return u * u + y * y * (mpq_class(field.D) / 4);
}

AlgebraicElementE AlgebraicElementE::mul(const AlgebraicElementE& o,
                                         const FieldData& field) const {
    // omega^2 = lin*omega + cst
    mpq_class lin = field.omega_sq_lin();
    mpq_class cst = field.omega_sq_const();
    AlgebraicElementE r;
    r.x = x * o.x + y * o.y * cst;
    r.y = x * o.y + y * o.x + y * o.y * lin;
    return r;
}

AlgebraicElementE AlgebraicElementE::conj(const FieldData& field) const {
    // conj(omega) = 2 Re(omega) - omega
    return AlgebraicElementE{x + y * 2 * field.omega_re(), -y};
}

BigComplex AlgebraicElementE::embed(const FieldData& field, long prec) const {
    BigComplex w = field.omega(prec);
    return BigComplex(BigReal::of(x, prec) + BigReal::of(y, prec) * w.re(),
                      BigReal::of(y, prec) * w.im());
}

namespace {

/// HNF of the module generated by rows (x_i, y_i) over basis (1, omega).
IdealLattice hnf_from_rows(std::vector<std::pair<mpq_class, mpq_class>> rows,
                           const FieldData& field) {
    mpz_class den(1);
    for (auto& [x, y] : rows) {
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
        mpz_lcm(den.get_mpz_t(), l.get_mpz_t(), y.get_den().get_mpz_t());
    }
    std::vector<std::pair<mpz_class, mpz_class>> zr;
    for (auto& [x, y] : rows) {
        mpq_class xs = x * den, ys = y * den;
        zr.emplace_back(mpz_class(xs), mpz_class(ys));
    }
    // combine rows to a single row carrying gcd of the y-column
    mpz_class gy(0), gx(0);
    for (auto& [x, y] : zr) {
        if (y == 0)
            continue;
        if (gy == 0) {
            gx = x;
            gy = y;
        } else {
            mpz_class g, u, v;
            mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(),
                       gy.get_mpz_t(), y.get_mpz_t());
            gx = u * gx + v * x;
            gy = g;
        }
    }
    if (gy == 0)
        throw Error("hnf_from_rows: module has rank < 2");
    if (gy < 0) {
        gy = -gy;
        gx = -gx;
    }
    // eliminate the y-column from every row, gather gcd of what remains
    mpz_class ax(0);
    for (auto& [x, y] : zr) {
        mpz_class q = y / gy;
        mpz_class rest = x - q * gx;
        mpz_gcd(ax.get_mpz_t(), ax.get_mpz_t(), rest.get_mpz_t());
    }
    if (ax == 0)
        throw Error("hnf_from_rows: module has rank < 2");
    mpz_class a21 = gx % ax;
    if (a21 < 0)
        a21 += ax;
    IdealLattice l;
    l.field = field;
    l.a11 = mpq_class(ax) / mpq_class(den);
    l.a21 = mpq_class(a21) / mpq_class(den);
    l.a22 = mpq_class(gy) / mpq_class(den);
    l.a11.canonicalize();
    l.a21.canonicalize();
    l.a22.canonicalize();
    return l;
}

} // namespace

bool IdealLattice::contains(const AlgebraicElementE& e) const {
    mpq_class t = e.y / a22;
    if (t.get_den() != 1)
        return false;
    mpq_class u = (e.x - t * a21) / a11;
    return u.get_den() == 1;
}

IdealLattice ideal_from_form(const QuadForm& f, const FieldData& field) {
    // a Z + ((-b + sqrt(-D))/2) Z over the basis (1, omega)
    std::vector<std::pair<mpq_class, mpq_class>> rows;
    rows.emplace_back(mpq_class(f.a), mpq_class(0));
    if (field.half_integral)
        rows.emplace_back(mpq_class(-(f.b + 1)) / 2, mpq_class(1));
    else
        rows.emplace_back(mpq_class(-f.b) / 2, mpq_class(1));
    return hnf_from_rows(std::move(rows), field);
}

IdealLattice ideal_multiply(const IdealLattice& i, const IdealLattice& j) {
    if (i.field.D != j.field.D)
        throw DiscriminantMismatch("ideal_multiply: different fields");
    AlgebraicElementE e1{i.a11, 0}, e2{i.a21, i.a22};
    AlgebraicElementE f1{j.a11, 0}, f2{j.a21, j.a22};
    std::vector<std::pair<mpq_class, mpq_class>> rows;
    for (const auto& u : {e1, e2})
        for (const auto& v : {f1, f2}) {
            AlgebraicElementE p = u.mul(v, i.field);
            rows.emplace_back(p.x, p.y);
        }
    return hnf_from_rows(std::move(rows), i.field);
}

IdealLattice ideal_pow(const IdealLattice& i, long e) {
    IdealLattice acc = hnf_from_rows({{1, 0}, {0, 1}}, i.field);
    IdealLattice base = i;
    for (unsigned long k = static_cast<unsigned long>(e); k; k >>= 1) {
        if (k & 1)
            acc = ideal_multiply(acc, base);
        base = ideal_multiply(base, base);
    }
    return acc;
}

IdealLattice principal_ideal(const AlgebraicElementE& g,
                             const FieldData& field) {
    AlgebraicElementE gw = g.mul(AlgebraicElementE{0, 1}, field);
    return hnf_from_rows({{g.x, g.y}, {gw.x, gw.y}}, field);
}

QuadForm form_from_ideal(const IdealLattice& i) {
    const FieldData& fd = i.field;
    AlgebraicElementE e1{i.a11, 0}, e2{i.a21, i.a22};
    mpq_class n = i.norm();
    mpq_class qa = e1.norm(fd) / n;
    mpq_class qc = e2.norm(fd) / n;
    // trace(e1 * conj(e2)) = a11 * (2 a21 + 2 a22 Re(omega))
    mpq_class qb = -(i.a11 * (2 * i.a21 + 2 * i.a22 * fd.omega_re())) / n;
    if (qa.get_den() != 1 || qb.get_den() != 1 || qc.get_den() != 1)
        throw Error("form_from_ideal: non-integral form coefficients");
    return reduce_form(QuadForm{mpz_class(qa), mpz_class(qb), mpz_class(qc)});
}

AlgebraicElementE principal_generator(const IdealLattice& ideal) {
    const FieldData& fd = ideal.field;
    if (ideal.a11.get_den() != 1 || ideal.a21.get_den() != 1 ||
        ideal.a22.get_den() != 1)
        throw Error("principal_generator: ideal must be integral");
    mpz_class n_q = ideal.norm().get_num();
    mpz_class a22 = ideal.a22.get_num();

    std::vector<AlgebraicElementE> found;
    // |y| <= sqrt(4 N / D); members have y = a22 * t
    mpz_class four_n = 4 * n_q;
    for (mpz_class y(0);; y += a22) {
        mpz_class dy2 = fd.D * y * y;
        if (dy2 > four_n)
            break;
        mpz_class disc = four_n - dy2;
        mpz_class s;
        if (mpz_perfect_square_p(disc.get_mpz_t())) {
            mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
            for (int sy = 0; sy < 2; ++sy) {
                mpz_class yy = sy ? -y : y;
                if (sy == 1 && y == 0)
                    continue;
                for (int sx = 0; sx < 2; ++sx) {
                    mpz_class ss = sx ? -s : s;
                    if (sx == 1 && s == 0)
                        continue;
                    mpz_class num = fd.half_integral ? (ss - yy) : ss;
                    if (num % 2 != 0)
                        continue;
                    AlgebraicElementE cand{mpq_class(num / 2), mpq_class(yy)};
                    if (cand.norm(fd) == n_q && ideal.contains(cand))
                        found.push_back(cand);
                }
            }
        }
    }
    if (found.empty())
        throw NonPrincipal("principal_generator: no element of norm N(I)");

    // canonical representative: embedding argument in (-pi/w_E, pi/w_E]
    const long p = 128;
    BigReal bound = BigReal::pi(p) / fd.w_e;
    BigReal eps = BigReal::pow2(-100, p);
    for (const auto& cand : found) {
        BigReal arg = cand.embed(fd, p).arg();
        if (arg.cmp(bound + eps) <= 0 && arg.cmp(eps - bound) > 0)
            return cand;
    }
    // window edges tile the circle, so this only triggers on rounding ties
    AlgebraicElementE best = found.front();
    BigReal best_abs = best.embed(fd, p).arg().abs();
    for (const auto& cand : found) {
        BigReal a = cand.embed(fd, p).arg().abs();
        if (a < best_abs) {
            best = cand;
            best_abs = a;
        }
    }
    return best;
}

std::pair<BigReal, mpz_class> norm_lemma_check(const AlgebraicElementE& x,
                                               const FieldData& field,
                                               const PrecisionContext& ctx) {
    if (x.is_zero())
        throw ZeroElement("norm_lemma_check: x must be nonzero");
    if (!x.is_integral())
        throw Error("norm_lemma_check: x must be integral");
    long wp = ctx.work_bits();
    BigReal analytic =
        x.embed(field, wp).abs() * x.conj(field).embed(field, wp).abs();
    mpq_class n = x.norm(field);
    return {analytic, mpz_class(n)};
}

} // namespace cmv
