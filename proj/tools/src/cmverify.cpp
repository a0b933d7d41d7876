// Command-line driver: per-discriminant verification with JSON reports.
//
// Exit codes: 0 = every check passed, 1 = a numeric check failed even after
// the doubled-precision retry, 2 = usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmv/algrec.hpp>
#include <cmv/errors.hpp>
#include <cmv/heights.hpp>
#include <cmv/modforms.hpp>
#include <cmv/units.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

using json = nlohmann::json;
using namespace cmv;

namespace {

std::size_t digits_for(long bits) {
    return static_cast<std::size_t>(
        std::ceil(static_cast<double>(bits) * std::log10(2.0)));
}

std::string dstr(const BigReal& x, long bits) { return x.str(digits_for(bits)); }

json poly_json(const IntPolynomial& p) {
    json arr = json::array();
    for (const mpz_class& c : p.coeffs)
        arr.push_back(c.get_str());
    return arr;
}

long d0_from_disc(long d) { return (d % 4 == 0) ? d / 4 : d; }

struct Verb {
    bool class_group = false;
    bool cs = false;
    bool units = false;
    bool invariant = false;
    bool hilbert = false;
    bool conjecture = false;
};

/// One discriminant record; throws RecognitionFailed/VerificationFailed on
/// numeric trouble so the caller can retry at doubled precision.
json build_record(long disc, long bits, const Verb& verb) {
    PrecisionContext ctx(bits);
    FieldData field = field_data(d0_from_disc(disc));
    ClassGroup cg = reduced_forms(field);
    field = cg.field;

    json rec;
    rec["D"] = field.D;
    rec["h"] = field.h;
    rec["w_E"] = field.w_e;
    rec["bits_used"] = bits;
    json forms = json::array();
    for (const QuadForm& f : cg.forms)
        forms.push_back({f.a.get_str(), f.b.get_str(), f.c.get_str()});
    rec["forms"] = forms;

    bool pass = true;
    BigReal tol = BigReal::pow2(ctx.tol_exp(), ctx.work_bits());

    if (verb.cs) {
        HeightReport hr = cs_verify(cg, ctx);
        rec["h_fal_gamma"] = dstr(hr.h_fal_gamma, bits);
        rec["h_fal_eta"] = dstr(hr.h_fal_eta, bits);
        rec["cs_lhs"] = dstr(hr.cs_lhs, bits);
        rec["cs_rhs"] = dstr(hr.cs_rhs, bits);
        pass = pass && hr.pass;
    }

    if (verb.units || verb.invariant || verb.conjecture) {
        EllipticUnitTable table = rho_table(field, ctx);

        if (verb.units) {
            json rho_abs = json::array(), unit_checks = json::array();
            BigReal max_coc = BigReal::of(0L, 64);
            BigReal max_absres = BigReal::of(0L, 64);
            for (std::size_t a = 0; a < cg.size(); ++a) {
                rho_abs.push_back(dstr(table.rho[a].abs(), bits));
                BigReal n = unit_norm_check(table, a);
                unit_checks.push_back(dstr(n, bits));
                pass = pass && (n - 1).abs() < tol;
                BigReal ar = check_abs_formula(table, a);
                if (ar > max_absres)
                    max_absres = ar;
                for (std::size_t b = 0; b < cg.size(); ++b) {
                    BigReal c = cocycle_residual(table, a, b);
                    if (c > max_coc)
                        max_coc = c;
                }
            }
            rec["rho_abs"] = rho_abs;
            rec["unit_checks"] = unit_checks;
            rec["cocycle_residual_max"] = dstr(max_coc, bits);
            rec["abs_formula_residual_max"] = dstr(max_absres, bits);
            pass = pass && max_coc < tol && max_absres < tol;
        }

        if (verb.invariant || verb.conjecture) {
            ConjugateVector uc = class_invariant_uc(table);
            if (verb.invariant) {
                rec["u_c"] = dstr(uc.values[0].re(), bits);
                IntPolynomial mp = minpoly_from_conjugates(uc.values, ctx);
                rec["u_c_minpoly"] = poly_json(mp);
                IntPolynomial hcp = hilbert_class_polynomial(cg, ctx);
                rec["hcp"] = poly_json(hcp);
                BigReal hh = coeff_height(hcp);
                rec["height_ratio"] =
                    hh.sign() > 0 ? dstr(coeff_height(mp) / hh, bits)
                                  : std::string("0");
            }
            if (verb.conjecture) {
                ConjectureReport cr = conjecture_verify(field, table, ctx);
                BigReal worst = cr.max_rel_residual > cr.max_spread
                                    ? cr.max_rel_residual
                                    : cr.max_spread;
                rec["conjecture_residual_max"] = dstr(worst, bits);
                rec["m"] = cr.m;
                pass = pass && cr.pass;
            }
        }
    }

    if (verb.hilbert && !verb.invariant) {
        IntPolynomial hcp = hilbert_class_polynomial(cg, ctx);
        rec["hcp"] = poly_json(hcp);
    }

    rec["pass"] = pass;
    return rec;
}

json record_with_retry(long disc, long bits, const Verb& verb, bool quiet) {
    try {
        json rec = build_record(disc, bits, verb);
        rec["retries"] = 0;
        return rec;
    } catch (const RecognitionFailed& e) {
        if (!quiet)
            std::cerr << "retrying D=" << disc << " at " << 2 * bits
                      << " bits: " << e.what() << "\n";
    } catch (const VerificationFailed& e) {
        if (!quiet)
            std::cerr << "retrying D=" << disc << " at " << 2 * bits
                      << " bits: " << e.what() << "\n";
    }
    try {
        json rec = build_record(disc, 2 * bits, verb);
        rec["retries"] = 1;
        return rec;
    } catch (const Error& e) {
        json rec;
        rec["D"] = disc;
        rec["bits_used"] = 2 * bits;
        rec["retries"] = 1;
        rec["error"] = e.what();
        rec["pass"] = false;
        return rec;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cmverify: CM elliptic curve identity verification"};
    app.require_subcommand(1);
    app.fallthrough();

    long disc = 0, d0 = 0, bits = 256, dmax = 0;
    std::string json_path;
    bool quiet = false;
    app.add_option("-D,--disc", disc, "positive D for discriminant -D");
    app.add_option("--d0", d0, "squarefree d0 for the field Q(sqrt(-d0))");
    app.add_option("--bits", bits, "working precision in bits (default 256)");
    app.add_option("--dmax", dmax, "sweep bound on D");
    app.add_option("--json", json_path, "write the JSON report to this path");
    app.add_flag("-q,--quiet", quiet, "suppress stdout report");

    auto* v_cs = app.add_subcommand("cs-verify", "Chowla-Selberg identity");
    auto* v_cg = app.add_subcommand("class-group", "reduced forms");
    auto* v_eu = app.add_subcommand("elliptic-units", "rho table and checks");
    auto* v_ci = app.add_subcommand("class-invariant", "u_c and minpoly");
    auto* v_hp = app.add_subcommand("hilbert-poly", "Hilbert class polynomial");
    auto* v_cj = app.add_subcommand("conjecture-check", "refined conjecture");
    auto* v_sw = app.add_subcommand("sweep", "all checks, all D <= dmax");

    CLI11_PARSE(app, argc, argv);

    if (bits < 64) {
        std::cerr << "error: bits must be >= 64\n";
        return 2;
    }

    Verb verb;
    verb.class_group = v_cg->parsed();
    verb.cs = v_cs->parsed() || v_sw->parsed();
    verb.units = v_eu->parsed() || v_sw->parsed();
    verb.invariant = v_ci->parsed() || v_sw->parsed();
    verb.hilbert = v_hp->parsed() || v_sw->parsed();
    verb.conjecture = v_cj->parsed() || v_sw->parsed();

    std::vector<long> discs;
    if (v_sw->parsed()) {
        if (dmax < 3) {
            std::cerr << "error: sweep requires --dmax >= 3\n";
            return 2;
        }
        for (long d = 3; d <= dmax; ++d)
            if (is_fundamental(d))
                discs.push_back(d);
    } else {
        if (disc != 0 && d0 != 0) {
            std::cerr << "error: give either -D or --d0, not both\n";
            return 2;
        }
        long d = disc;
        if (d == 0) {
            if (d0 == 0) {
                std::cerr << "error: a discriminant is required (-D or --d0)\n";
                return 2;
            }
            try {
                d = field_data(d0).D;
            } catch (const Error& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 2;
            }
        }
        if (!is_fundamental(d)) {
            std::cerr << "error: -" << d << " is not a fundamental discriminant\n";
            return 2;
        }
        discs.push_back(d);
    }

    json report;
    report["bits"] = bits;
    json records = json::array();
    bool all_pass = true;
    for (long d : discs) {
        json rec = record_with_retry(d, bits, verb, quiet);
        all_pass = all_pass && rec["pass"].get<bool>();
        records.push_back(std::move(rec));
    }
    report["records"] = std::move(records);
    report["pass"] = all_pass;

    std::string out = report.dump(2);
    out.push_back('\n');
    if (!json_path.empty()) {
        std::ofstream f(json_path, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot open " << json_path << "\n";
            return 2;
        }
        f << out;
    }
    if (!quiet)
        std::cout << out;
    return all_pass ? 0 : 1;
}
