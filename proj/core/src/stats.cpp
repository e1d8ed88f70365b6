#include "hecl/stats.hpp"

#include <map>

#include "hecl/arith.hpp"
#include "hecl/error.hpp"
#include "hecl/lfunc.hpp"

namespace hecl::stats {

std::string_view to_string(Split split) noexcept {
    switch (split) {
        case Split::All: return "all";
        case Split::Square: return "square";
        case Split::NonSquare: return "non-square";
    }
    return "all";
}

Split parse_split(std::string_view text) {
    if (text == "all") return Split::All;
    if (text == "square" || text == "sq") return Split::Square;
    if (text == "non-square" || text == "nonsq" || text == "non-sq") return Split::NonSquare;
    raise(ErrorKind::InvalidArgument, "unknown split '" + std::string(text) + "' (expected all, square or non-square)");
}

namespace {

using ClassKey = std::pair<unsigned, bool>;  // (n, kappa_square)

struct Tally {
    std::shared_ptr<frobenius::FamilyContext> family;
    std::map<ClassKey, std::uint64_t> counts;
    std::uint64_t size = 0;
};

Tally tally_family(unsigned ell, const gf::FieldPtr& base, Split split, const frobenius::AnalyzeOptions& options) {
    if (!base) raise(ErrorKind::InvalidArgument, "family needs a base field");
    Tally tally;
    tally.family = frobenius::FamilyContext::create(ell, base, options);
    const gf::Field& f = *base;
    for (gf::Index ia = 0; ia < f.order(); ++ia) {
        const gf::FieldElem a = f.element(ia);
        for (gf::Index ib = 0; ib < f.order(); ++ib) {
            const gf::FieldElem b = f.element(ib);
            const gf::FieldElem kappa = f.sub(f.mul(a, a), f.scale(b, 4));
            if (f.is_zero(kappa)) continue;
            if (split != Split::All && f.is_square(kappa) != (split == Split::Square)) continue;
            const frobenius::CurveClass cls = tally.family->classify(a, b);
            ++tally.counts[{cls.n, cls.kappa_square}];
            ++tally.size;
        }
    }
    return tally;
}

mpz_class power(std::uint64_t q, unsigned e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), q, e);
    return r;
}

}  // namespace

AverageReport average_class_number(unsigned ell, const gf::FieldPtr& base, Split split, const frobenius::AnalyzeOptions& options) {
    Tally tally = tally_family(ell, base, split, options);
    AverageReport report;
    report.ell = ell;
    report.q = base->order();
    report.split = split;
    report.family_size = tally.size;
    mpz_class total = 0;
    for (const auto& [key, mult] : tally.counts) {
        const frobenius::CurveClass cls{false, key.first, key.second};
        const frobenius::TraceProfile profile = tally.family->profile(cls);
        const lfunc::LPoly l = lfunc::lpoly_from_traces(profile.S, profile.genus, profile.q);
        report.class_table.push_back({key.first, key.second, l.class_number, mult});
        total += l.class_number * mpz_class(std::to_string(mult));
    }
    if (tally.size == 0) raise(ErrorKind::InvalidArgument, "empty family");
    report.average = mpq_class(total, mpz_class(std::to_string(tally.size)));
    report.average.canonicalize();
    return report;
}

Ell7Sums ell7_sums(const cyclo::CycInt& j) {
    if (j.ell() != 7) raise(ErrorKind::UnsupportedEll, "the twenty-triple sum is defined for ell = 7");
    const cyclo::SymmetricSums s = cyclo::symmetric_sums(j);
    static constexpr int kTriples[20][3] = {{1, 2, 3}, {1, 2, 5}, {1, 3, 5}, {1, 3, 6}, {1, 4, 5}, {1, 4, 6}, {1, 4, 7},
                                            {1, 6, 7}, {2, 3, 4}, {2, 3, 6}, {2, 4, 6}, {2, 4, 7}, {2, 5, 6}, {2, 5, 7},
                                            {3, 4, 5}, {3, 4, 7}, {3, 5, 7}, {3, 6, 7}, {4, 5, 6}, {5, 6, 7}};
    Ell7Sums d;
    d.sum_sq = s.sum_sq;
    d.sum_pair = s.sum_pair;
    d.sum_triple = s.sum_triple;
    for (const auto& t : kTriples) d.frak_a += j.slot(t[0]) * j.slot(t[1]) * j.slot(t[2]);
    return d;
}

mpq_class closed_form_average(unsigned ell, const gf::FieldPtr& base, Split split, std::uint64_t cap) {
    if (ell != 5 && ell != 7) raise(ErrorKind::UnsupportedEll, "closed-form averages exist for ell = 5 and ell = 7 only");
    if (!base) raise(ErrorKind::InvalidArgument, "closed form needs a base field");
    const std::uint64_t q = base->order();
    const unsigned m = frobenius::multiplicative_order(q, ell);
    const mpz_class Q = q;

    if (ell == 5) return m <= 2 ? mpq_class(power(q + 1, 2)) : mpq_class(power(q, 2) + 1);

    if (m == 2) return mpq_class(power(q + 1, 3));
    if (m == 6) return mpq_class(power(q, 3) + 1);
    if (split == Split::All) return m == 1 ? mpq_class(power(q + 1, 3)) : mpq_class(power(q, 3) + 1);

    const bool square = split == Split::Square;
    if (m == 1) {
        const cyclo::CycInt j = cyclo::jacobi_sum(base, ell, base->gen(), cap);
        const Ell7Sums d = ell7_sums(j);
        const mpz_class core = 7 * (2 * d.sum_triple - d.frak_a);
        if (square) return mpq_class(Q * Q * Q + 3 * Q * Q + 2 + core);
        return mpq_class(Q * Q * Q + 3 * Q * Q + 6 * Q - core);
    }
    // m = 3: every curve of a split has the same class number.
    const auto qm = arith::checked_pow(q, m);
    if (!qm || *qm > cap) raise(ErrorKind::FieldTooLarge, "F_" + std::to_string(q) + "^3 exceeds the enumeration cap");
    const mpz_class a = lfunc::a1ell_qr(*gf::extension_field(base, m), ell, cap);
    const mpz_class top = 7 * a + 1;
    if (!mpz_divisible_ui_p(top.get_mpz_t(), 3)) raise(ErrorKind::NonIntegralCoefficient, "(7a + 1)/3 is not an integer");
    const mpz_class shift = top / 3;
    const mpz_class base_value = power(q, 3) + 1;
    return mpq_class(square ? mpz_class(base_value + shift) : mpz_class(base_value - shift));
}

mpq_class average_trace(unsigned ell, const gf::FieldPtr& base, std::uint64_t t, Split split, const frobenius::AnalyzeOptions& options) {
    if (!base) raise(ErrorKind::InvalidArgument, "family needs a base field");
    const unsigned m = frobenius::multiplicative_order(base->order(), ell);
    if (m != 1) raise(ErrorKind::UnsupportedM, "average traces are implemented for m = 1 only (here m = " + std::to_string(m) + ")");
    Tally tally = tally_family(ell, base, split, options);
    if (tally.size == 0) raise(ErrorKind::InvalidArgument, "empty family");
    mpz_class total = 0;
    for (const auto& [key, mult] : tally.counts) {
        total += tally.family->trace({false, key.first, key.second}, t) * mpz_class(std::to_string(mult));
    }
    mpq_class avg(total, mpz_class(std::to_string(tally.size)));
    avg.canonicalize();
    return avg;
}

}  // namespace hecl::stats
