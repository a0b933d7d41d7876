#include <cmv/heights.hpp>

#include <cmv/errors.hpp>
#include <cmv/gammazeta.hpp>
#include <cmv/modforms.hpp>

#include <numeric>

namespace cmv {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<long> cyclic_orders)
    : orders_(std::move(cyclic_orders)) {
    size_ = 1;
    for (long n : orders_) {
        if (n < 1)
            throw Error("FiniteAbelianGroup: cyclic orders must be >= 1");
        size_ *= static_cast<std::size_t>(n);
    }
}

std::size_t FiniteAbelianGroup::compose(std::size_t i, std::size_t j) const {
    std::size_t r = 0, mult = 1;
    for (long n : orders_) {
        auto un = static_cast<std::size_t>(n);
        r += ((i + j) % un) * mult;
        i /= un;
        j /= un;
        mult *= un;
    }
    return r;
}

std::size_t FiniteAbelianGroup::inverse(std::size_t i) const {
    std::size_t r = 0, mult = 1;
    for (long n : orders_) {
        auto un = static_cast<std::size_t>(n);
        r += ((un - i % un) % un) * mult;
        i /= un;
        mult *= un;
    }
    return r;
}

GroupFunction GroupFunction::indicator(const FiniteAbelianGroup& g,
                                       std::size_t at) {
    GroupFunction f{g, std::vector<QQi>(g.size())};
    f.values[at] = QQi{1, 0};
    return f;
}

GroupFunction GroupFunction::constant(const FiniteAbelianGroup& g,
                                      const QQi& v) {
    GroupFunction f{g, std::vector<QQi>(g.size(), v)};
    return f;
}

GroupFunction convolve(const GroupFunction& f, const GroupFunction& g) {
    if (!(f.group == g.group))
        throw GroupMismatch("convolve: functions live on different groups");
    const auto n = f.group.size();
    GroupFunction r{f.group, std::vector<QQi>(n)};
    mpq_class inv_n(1, static_cast<unsigned long>(n));
    for (std::size_t l = 0; l < n; ++l) {
        QQi s;
        for (std::size_t c = 0; c < n; ++c)
            s = s + f.values[c] *
                        g.values[f.group.compose(f.group.inverse(c), l)];
        r.values[l] = s * inv_n;
    }
    return r;
}

QQi inner(const GroupFunction& f, const GroupFunction& g) {
    if (!(f.group == g.group))
        throw GroupMismatch("inner: functions live on different groups");
    QQi s;
    for (std::size_t c = 0; c < f.group.size(); ++c)
        s = s + f.values[c] * g.values[c].conj();
    return s * mpq_class(1, static_cast<unsigned long>(f.group.size()));
}

namespace {

/// sum_j chi(j) log Gamma(j/D), the shared Lerch ingredient.
BigReal chi_lngamma_sum(const FieldData& field, const PrecisionContext& ctx) {
    long wp = ctx.work_bits();
    BigReal s = BigReal::of(0L, wp);
    for (long j = 1; j < field.D; ++j) {
        int chi = kronecker_chi(field.D, j);
        if (chi == 0)
            continue;
        BigReal lg = lngamma_real(
            BigReal::of(mpq_class(j, field.D), wp), ctx);
        s += (chi > 0) ? lg : -lg;
    }
    return s;
}

} // namespace

BigReal gamma_product(const FieldData& field, const PrecisionContext& ctx) {
    return chi_lngamma_sum(field, ctx).exp();
}

LFunctionData lfunction_data(const FieldData& field,
                             const PrecisionContext& ctx) {
    if (field.h <= 0)
        throw Error("lfunction_data: class number not computed");
    long wp = ctx.work_bits();
    mpq_class l0 = mpq_class(2 * field.h) / field.w_e;
    // L'(chi,0)/L(chi,0) = -log D + (w_E/2h) sum_j chi(j) log Gamma(j/D)
    BigReal ratio = -BigReal::of(field.D, wp).log() +
                    chi_lngamma_sum(field, ctx) *
                        BigReal::of(mpq_class(field.w_e) / (2 * field.h), wp);
    return LFunctionData{l0, ratio * BigReal::of(l0, wp), field.D};
}

BigReal faltings_gamma(const FieldData& field, const PrecisionContext& ctx) {
    long wp = ctx.work_bits();
    BigReal log_d = BigReal::of(field.D, wp).log();
    mpq_class coeff = mpq_class(field.w_e) / (4 * field.h);
    return log_d / 4 - chi_lngamma_sum(field, ctx) * BigReal::of(coeff, wp);
}

BigReal faltings_eta(const ClassGroup& cg, const PrecisionContext& ctx) {
    long wp = ctx.work_bits();
    BigReal four_pi = BigReal::pi(wp) * 4;
    BigReal s = BigReal::of(0L, wp);
    for (const QuadForm& f : cg.forms) {
        BigComplex z = cm_point(f, wp);
        BigReal term = z.im() * eta(z, ctx).abs().pow_si(4) * four_pi;
        s += term.log();
    }
    return -(s / (2 * cg.field.h));
}

HeightReport cs_verify(const ClassGroup& cg, const PrecisionContext& ctx) {
    const FieldData& field = cg.field;
    long wp = ctx.work_bits();
    HeightReport rep(wp);
    rep.D = field.D;
    rep.h = field.h;
    rep.w_e = field.w_e;
    rep.bits = ctx.bits();

    rep.h_fal_gamma = faltings_gamma(field, ctx);
    rep.h_fal_eta = faltings_eta(cg, ctx);

    // LHS = [prod_a Im(z_a) |eta(z_a)|^4 (4 pi)]^(1/2h)
    BigReal four_pi = BigReal::pi(wp) * 4;
    BigReal log_prod = BigReal::of(0L, wp);
    for (const QuadForm& f : cg.forms) {
        BigComplex z = cm_point(f, wp);
        log_prod += (z.im() * eta(z, ctx).abs().pow_si(4) * four_pi).log();
    }
    rep.cs_lhs = (log_prod / (2 * field.h)).exp();

    // RHS = D^(-1/4) [prod_j Gamma(j/D)^chi(j)]^(w_E/4h)
    BigReal rhs_log =
        -(BigReal::of(field.D, wp).log() / 4) +
        chi_lngamma_sum(field, ctx) *
            BigReal::of(mpq_class(field.w_e) / (4 * field.h), wp);
    rep.cs_rhs = rhs_log.exp();

    BigReal rel = ((rep.cs_lhs - rep.cs_rhs) / rep.cs_rhs).abs();
    BigReal hdiff = (rep.h_fal_gamma - rep.h_fal_eta).abs();
    rep.max_abs_diff = (rel > hdiff) ? rel : hdiff;
    rep.pass = rep.max_abs_diff < BigReal::pow2(ctx.tol_exp(), wp);
    return rep;
}

} // namespace cmv
