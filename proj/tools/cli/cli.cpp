#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <ostream>

#include "hecl/arith.hpp"
#include "hecl/cyclo.hpp"
#include "hecl/error.hpp"
#include "hecl/frobenius.hpp"
#include "hecl/gf.hpp"
#include "hecl/lfunc.hpp"
#include "hecl/oracle.hpp"
#include "hecl/stats.hpp"

namespace hecl::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
    std::string command;
    unsigned ell = 0;
    std::string q;
    std::string a;
    std::string b;
    std::string char_base;
    std::string t;
    std::string split = "all";
    bool square = false;
    bool non_square = false;
    unsigned power = 1;
    std::uint64_t max_elements = oracle::OracleBudget{}.max_elements;
    std::uint64_t max_pairs = oracle::OracleBudget{}.max_pairs;
    std::uint64_t cap = cyclo::kDefaultEnumerationCap;
    bool force_enumeration = false;
    bool json = false;
};

void require(bool ok, const std::string& what) {
    if (!ok) raise(ErrorKind::InvalidArgument, what);
}

gf::FieldPtr base_field(const Options& o) {
    require(!o.q.empty(), "--q is required");
    auto [p, e] = gf::parse_field_size(o.q);
    // Accept a prime power written out, e.g. 9 for 3^2.
    if (e == 1 && p > 1 && !arith::is_prime(p)) {
        const auto primes = arith::prime_factors(p);
        if (primes.size() == 1) {
            const std::uint64_t r = primes.front();
            unsigned k = 0;
            for (std::uint64_t x = p; x > 1; x /= r) ++k;
            p = r;
            e = k;
        }
    }
    return gf::build_field(p, e);
}

void require_ell(const Options& o) { require(o.ell != 0, "--ell is required"); }

frobenius::CurveParams curve_from(const Options& o, const gf::FieldPtr& base) {
    require_ell(o);
    require(!o.a.empty() && !o.b.empty(), "--a and --b are required");
    return frobenius::make_curve(o.ell, base, gf::parse_element(*base, o.a), gf::parse_element(*base, o.b));
}

frobenius::AnalyzeOptions analyze_options(const Options& o, const gf::FieldPtr& base) {
    frobenius::AnalyzeOptions opts;
    opts.enumeration_cap = o.cap;
    opts.force_enumeration = o.force_enumeration;
    if (!o.char_base.empty()) {
        const unsigned m = frobenius::multiplicative_order(base->order(), o.ell);
        const gf::FieldPtr ext = gf::extension_field(base, m);
        opts.char_base = gf::parse_element(*ext, o.char_base);
    }
    return opts;
}

oracle::OracleBudget budget_from(const Options& o) { return {o.max_elements, o.max_pairs}; }

std::uint64_t parse_u64(std::string_view s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    require(ec == std::errc{} && ptr == s.data() + s.size() && !s.empty(), "cannot parse '" + std::string(s) + "' as a positive integer");
    return v;
}

/// "k" or "a..b".
std::vector<std::uint64_t> parse_t(const std::string& text) {
    std::vector<std::uint64_t> ts;
    const auto dots = text.find("..");
    std::uint64_t lo, hi;
    if (dots == std::string::npos) {
        lo = hi = parse_u64(text);
    } else {
        lo = parse_u64(std::string_view(text).substr(0, dots));
        hi = parse_u64(std::string_view(text).substr(dots + 2));
    }
    require(lo >= 1 && lo <= hi, "--t must be k or a..b with 1 <= a <= b");
    require(hi - lo < 100000, "--t range too long");
    for (std::uint64_t t = lo; t <= hi; ++t) ts.push_back(t);
    return ts;
}

std::string curve_line(const frobenius::CurveParams& c) {
    const gf::Field& f = *c.base_field;
    return "ell=" + std::to_string(c.ell) + " q=" + std::to_string(f.order()) + " a=" + gf::format_element(f, c.a) +
           " b=" + gf::format_element(f, c.b);
}

json lpoly_json(const lfunc::LPoly& l) {
    json coeffs = json::array();
    for (const auto& c : l.coeffs) coeffs.push_back(c.get_str());
    return json{{"g", l.g}, {"q", l.q}, {"coeffs", coeffs}, {"class_number", l.class_number.get_str()}};
}

json cyc_json(const cyclo::CycInt& c) {
    json coeffs = json::array();
    for (const auto& a : c.slots()) coeffs.push_back(a.get_str());
    return json{{"ell", c.ell()}, {"coeffs", coeffs}};
}

json rational_json(const mpq_class& x) { return json{{"num", x.get_num().get_str()}, {"den", x.get_den().get_str()}}; }

std::string rational_text(const mpq_class& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

void print_coeffs(std::ostream& out, const lfunc::LPoly& l, bool skip_zero) {
    for (std::size_t i = 0; i < l.coeffs.size(); ++i) {
        if (skip_zero && l.coeffs[i] == 0) continue;
        out << "c_" << i << " = " << l.coeffs[i].get_str() << "\n";
    }
}

int cmd_lpoly(const Options& o, std::ostream& out) {
    const auto base = base_field(o);
    const auto curve = curve_from(o, base);
    if (curve.genus() == 0) {
        const auto l = lfunc::trivial_lpoly(base->order());
        if (o.json) {
            out << json{{"ell", o.ell}, {"q", base->order()}, {"genus", 0}, {"lpoly", lpoly_json(l)}}.dump(2) << "\n";
        } else {
            out << curve_line(curve) << " genus=0\nL = 1\nh = 1\n";
        }
        return kOk;
    }
    const auto profile = frobenius::analyze(curve, analyze_options(o, base));
    const auto l = lfunc::lpoly_from_profile(profile, curve);
    if (o.json) {
        out << json{{"ell", o.ell},
                    {"q", base->order()},
                    {"a", gf::format_element(*base, curve.a)},
                    {"b", gf::format_element(*base, curve.b)},
                    {"genus", profile.genus},
                    {"m", profile.m},
                    {"n", profile.n},
                    {"kappa_square", profile.kappa_square},
                    {"lpoly", lpoly_json(l)}}
                   .dump(2)
            << "\n";
        return kOk;
    }
    out << curve_line(curve) << " genus=" << profile.genus << " m=" << profile.m << " n=" << profile.n
        << " kappa=" << (profile.kappa_square ? "square" : "non-square") << "\n";
    print_coeffs(out, l, false);
    out << "h = " << l.class_number.get_str() << "\n";
    return kOk;
}

int cmd_classnum(const Options& o, std::ostream& out) {
    const auto base = base_field(o);
    const auto curve = curve_from(o, base);
    const auto l = lfunc::lpoly_for_curve(curve, analyze_options(o, base));
    if (o.json) {
        out << json{{"ell", o.ell}, {"q", base->order()}, {"genus", l.g}, {"class_number", l.class_number.get_str()}}.dump(2) << "\n";
    } else {
        out << "h = " << l.class_number.get_str() << "\n";
    }
    return kOk;
}

int cmd_points_or_trace(const Options& o, std::ostream& out, bool points) {
    const auto base = base_field(o);
    const auto curve = curve_from(o, base);
    if (curve.genus() == 0) raise(ErrorKind::GenusZero, "a^2 - 4b = 0: the curve has genus 0");
    const auto ts = parse_t(o.t.empty() ? "1" : o.t);
    const auto profile = frobenius::analyze(curve, analyze_options(o, base));
    json rows = json::array();
    if (!o.json) out << (points ? "t N_t" : "t a(q^t)") << "\n";
    for (auto t : ts) {
        const mpz_class v = points ? frobenius::point_count(profile, curve, t) : frobenius::trace(profile, curve, t);
        if (o.json) {
            rows.push_back(json{{"t", t}, {points ? "N" : "a", v.get_str()}});
        } else {
            out << t << " " << v.get_str() << "\n";
        }
    }
    if (o.json) out << json{{"ell", o.ell}, {"q", base->order()}, {points ? "points" : "traces", rows}}.dump(2) << "\n";
    return kOk;
}

int cmd_jacobi(const Options& o, std::ostream& out) {
    require_ell(o);
    const auto base = base_field(o);
    const auto opts = analyze_options(o, base);
    const auto family = frobenius::FamilyContext::create(o.ell, base, opts);
    const cyclo::CycInt& j = family->jacobi();
    const cyclo::CharSpec& chi = family->character();
    const cyclo::CycInt shown = o.power == 1 ? j : cyclo::signed_power(j, o.power).canonical();
    const auto report = cyclo::identity_report(j, mpz_class(std::to_string(chi.field->order())), o.ell);
    if (o.json) {
        json checks = json::array();
        for (const auto& c : report.checks) {
            checks.push_back(json{{"name", c.name}, {"applicable", c.applicable}, {"passed", c.passed}, {"detail", c.detail}});
        }
        json raw = json::array();
        for (const auto& a : shown.slots()) raw.push_back(a.get_str());
        out << json{{"ell", o.ell},
                    {"field", chi.field->name()},
                    {"m", family->m()},
                    {"char_base", gf::format_element(*chi.field, chi.base)},
                    {"power", o.power},
                    {"jacobi", cyc_json(shown.canonical())},
                    {"raw_coeffs", raw},
                    {"checks", checks}}
                   .dump(2)
            << "\n";
        return kOk;
    }
    out << "field " << chi.field->name() << " (m=" << family->m() << "), lambda_1(" << gf::format_element(*chi.field, chi.base)
        << ") = z\n";
    if (o.power == 1) {
        out << "J = " << j.to_text() << "\n";
    } else {
        out << "(-1)^" << (o.power - 1) << " J^" << o.power << " = " << shown.to_text() << "  (mod 1 + z + ... + z^" << (o.ell - 1)
            << ")\n";
    }
    out << "coeffs:";
    for (const auto& a : shown.slots()) out << " " << a.get_str();
    out << "\n";
    for (const auto& c : report.checks) {
        out << (c.applicable ? (c.passed ? "pass" : "FAIL") : "skip") << "  " << c.name << "  (" << c.detail << ")\n";
    }
    return report.all_passed() ? kOk : kMismatch;
}

int cmd_closed_form(const Options& o, std::ostream& out) {
    require_ell(o);
    require(!(o.square && o.non_square), "--square and --non-square are exclusive");
    const auto base = base_field(o);
    std::optional<bool> sq;
    if (o.square) sq = true;
    if (o.non_square) sq = false;
    const auto l = lfunc::closed_form(o.ell, base, sq, o.cap);
    const unsigned m = frobenius::multiplicative_order(base->order(), o.ell);
    if (o.json) {
        out << json{{"ell", o.ell}, {"q", base->order()}, {"m", m}, {"lpoly", lpoly_json(l)}}.dump(2) << "\n";
        return kOk;
    }
    out << "ell=" << o.ell << " q=" << base->order() << " m=" << m << " genus=" << l.g << "\n";
    print_coeffs(out, l, true);
    const std::string h = l.class_number.get_str();
    out << "h = " << h << "\n";
    out << "digits = " << h.size() << "\n";
    return kOk;
}

int cmd_average(const Options& o, std::ostream& out) {
    require_ell(o);
    const auto base = base_field(o);
    const auto split = stats::parse_split(o.split);
    const auto report = stats::average_class_number(o.ell, base, split, analyze_options(o, base));
    std::optional<mpq_class> closed;
    if (o.ell == 5 || o.ell == 7) closed = stats::closed_form_average(o.ell, base, split, o.cap);
    if (o.json) {
        json table = json::array();
        for (const auto& e : report.class_table) {
            table.push_back(json{{"n", e.n}, {"kappa_square", e.kappa_square}, {"h", e.h.get_str()}, {"multiplicity", e.multiplicity}});
        }
        out << json{{"ell", o.ell},
                    {"q", base->order()},
                    {"split", std::string(stats::to_string(split))},
                    {"family_size", report.family_size},
                    {"class_table", table},
                    {"average", rational_json(report.average)},
                    {"closed_form", closed ? rational_json(*closed) : json(nullptr)}}
                   .dump(2)
            << "\n";
        return kOk;
    }
    out << "ell=" << o.ell << " q=" << base->order() << " split=" << stats::to_string(split) << " family=" << report.family_size << "\n";
    for (const auto& e : report.class_table) {
        out << "n=" << e.n << " kappa=" << (e.kappa_square ? "square" : "non-square") << " h=" << e.h.get_str()
            << " curves=" << e.multiplicity << "\n";
    }
    out << "average = " << rational_text(report.average) << "\n";
    if (closed) out << "closed form = " << rational_text(*closed) << "\n";
    return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const auto base = base_field(o);
    const auto curve = curve_from(o, base);
    const auto budget = budget_from(o);
    const auto opts = analyze_options(o, base);
    const std::uint64_t q = base->order();
    const unsigned g = curve.genus();

    std::vector<std::uint64_t> ts;
    if (!o.t.empty()) {
        ts = parse_t(o.t);
    } else {
        for (unsigned t = 1; t <= std::max(g, 1u); ++t) {
            const auto qt = arith::checked_pow(q, t);
            if (!qt || *qt > budget.max_elements) break;
            ts.push_back(t);
        }
        require(!ts.empty(), "F_q itself exceeds the oracle budget");
    }

    bool ok = true;
    json rows = json::array();
    if (!o.json) out << "t formula oracle\n";
    std::optional<frobenius::TraceProfile> profile;
    if (g > 0) profile = frobenius::analyze(curve, opts);
    for (auto t : ts) {
        mpz_class formula;
        if (profile) {
            formula = frobenius::point_count(*profile, curve, t);
        } else {
            mpz_ui_pow_ui(formula.get_mpz_t(), q, t);  // rational function field: q^t + 1 places
            formula += 1;
        }
        const mpz_class naive = oracle::count_points_naive(curve, static_cast<unsigned>(t), budget);
        const bool match = formula == naive;
        ok = ok && match;
        if (o.json) {
            rows.push_back(json{{"t", t}, {"formula", formula.get_str()}, {"oracle", naive.get_str()}, {"match", match}});
        } else {
            out << t << " " << formula.get_str() << " " << naive.get_str() << (match ? " ok" : " MISMATCH") << "\n";
        }
    }

    json lpoly_match = nullptr;
    const auto qg = arith::checked_pow(q, g);
    if (g > 0 && qg && *qg <= budget.max_elements) {
        const bool same = lfunc::lpoly_from_profile(*profile, curve).coeffs == oracle::lpoly_from_counts(curve, budget).coeffs;
        ok = ok && same;
        lpoly_match = same;
        if (!o.json) out << "L-polynomial from counts: " << (same ? "match" : "MISMATCH") << "\n";
    }
    if (o.json) {
        out << json{{"ell", o.ell}, {"q", q}, {"rows", rows}, {"lpoly_match", lpoly_match}, {"ok", ok}}.dump(2) << "\n";
    } else {
        out << (ok ? "verified" : "verification FAILED") << "\n";
    }
    return ok ? kOk : kMismatch;
}

int exit_code_for(ErrorKind kind) {
    return kind == ErrorKind::FieldTooLarge || kind == ErrorKind::BudgetExceeded ? kBudgetExceeded : kDomainError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"L-polynomials, class numbers and point counts of y^ell = x^2 + a x + b over F_q"};
    app.name(args.empty() ? "hecl" : args.front());
    app.set_config("--config", "", "Read options from a TOML or INI file");
    app.require_subcommand(1, 1);

    app.add_option("--ell", o.ell, "Odd prime ell");
    app.add_option("--q", o.q, "Base field size, p or p^e");
    app.add_option("--a", o.a, "Coefficient a (decimal, g^k or [c0,c1,...])");
    app.add_option("--b", o.b, "Coefficient b");
    app.add_option("--char-base", o.char_base, "Element of F_{q^m} with lambda_1(base) = z (default: generator)");
    app.add_option("--t", o.t, "Extension degree t, or a range a..b");
    app.add_option("--split", o.split, "Family: all, square or non-square");
    app.add_flag("--square", o.square, "Square discriminant (closed-form)");
    app.add_flag("--non-square", o.non_square, "Non-square discriminant (closed-form)");
    app.add_option("--power", o.power, "Show (-1)^(r-1) J^r instead of J (jacobi)")->check(CLI::PositiveNumber);
    app.add_option("--max-elements", o.max_elements, "Oracle cap on enumerated field size");
    app.add_option("--max-pairs", o.max_pairs, "Oracle cap for diagonal enumeration");
    app.add_option("--cap", o.cap, "Cap on field size for Jacobi-sum enumeration");
    app.add_flag("--force-enumeration", o.force_enumeration, "Enumerate J even when the even-m closed form applies");
    app.add_flag("--json", o.json, "Emit one JSON document");

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"lpoly", "L-polynomial and class number of one curve"},
        {"classnum", "Class number of one curve"},
        {"points", "Number of F_{q^t}-points"},
        {"trace", "Trace of Frobenius a(q^t)"},
        {"jacobi", "Jacobi sum over F_{q^m} and its identity checks"},
        {"closed-form", "Closed-form L-polynomial for even m or m = (ell-1)/2"},
        {"average", "Average class number over a family"},
        {"verify", "Formula against brute-force point counts"},
    };
    for (const auto& [name, description] : commands) {
        auto* sub = app.add_subcommand(name, description);
        sub->fallthrough();
        sub->callback([&o, name = name] { o.command = name; });
    }

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kDomainError;
    }

    try {
        if (o.command == "lpoly") return cmd_lpoly(o, out);
        if (o.command == "classnum") return cmd_classnum(o, out);
        if (o.command == "points") return cmd_points_or_trace(o, out, true);
        if (o.command == "trace") return cmd_points_or_trace(o, out, false);
        if (o.command == "jacobi") return cmd_jacobi(o, out);
        if (o.command == "closed-form") return cmd_closed_form(o, out);
        if (o.command == "average") return cmd_average(o, out);
        if (o.command == "verify") return cmd_verify(o, out);
        err << "error: unknown command\n";
        return kDomainError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    }
}

}  // namespace hecl::cli
