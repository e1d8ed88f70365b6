#include "hecl/lfunc.hpp"

#include "hecl/arith.hpp"
#include "hecl/error.hpp"

namespace hecl::lfunc {

namespace {

mpz_class power(std::uint64_t q, std::uint64_t e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), q, e);
    return r;
}

mpz_class binomial(unsigned n, unsigned k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

LPoly finish(std::vector<mpz_class> coeffs, unsigned g, std::uint64_t q) {
    LPoly l;
    l.g = g;
    l.q = q;
    l.coeffs = std::move(coeffs);
    l.class_number = class_number(l);
    return l;
}

}  // namespace

LPoly lpoly_from_traces(const std::vector<mpz_class>& S, unsigned g, std::uint64_t q) {
    if (S.size() < g) raise(ErrorKind::InvalidArgument, "need S_1..S_g, got " + std::to_string(S.size()) + " values for g = " + std::to_string(g));
    std::vector<mpz_class> c(2 * g + 1);
    c[0] = 1;
    for (unsigned t = 1; t <= g; ++t) {
        mpz_class acc = 0;
        for (unsigned i = 1; i <= t; ++i) acc += S[i - 1] * c[t - i];
        if (!mpz_divisible_ui_p(acc.get_mpz_t(), t)) {
            raise(ErrorKind::NonIntegralCoefficient, "c_" + std::to_string(t) + " = " + acc.get_str() + "/" + std::to_string(t) + " is not an integer");
        }
        mpz_divexact_ui(c[t].get_mpz_t(), acc.get_mpz_t(), t);
    }
    for (unsigned i = 0; i < g; ++i) c[2 * g - i] = power(q, g - i) * c[i];
    return finish(std::move(c), g, q);
}

LPoly lpoly_from_profile(const frobenius::TraceProfile& profile, const frobenius::CurveParams& curve) {
    if (curve.genus() == 0) raise(ErrorKind::GenusZero, "kappa = 0 gives L = 1");
    return lpoly_from_traces(profile.S, profile.genus, profile.q);
}

LPoly trivial_lpoly(std::uint64_t q) { return finish({mpz_class(1)}, 0, q); }

LPoly lpoly_for_curve(const frobenius::CurveParams& curve, const frobenius::AnalyzeOptions& options) {
    if (curve.genus() == 0) return trivial_lpoly(curve.base_field->order());
    return lpoly_from_profile(frobenius::analyze(curve, options), curve);
}

mpz_class class_number(const LPoly& l) {
    if (l.coeffs.size() != 2 * l.g + 1) raise(ErrorKind::InvalidArgument, "L-polynomial must have 2g + 1 coefficients");
    mpz_class folded = l.coeffs[l.g];
    for (unsigned i = 0; i < l.g; ++i) folded += (power(l.q, l.g - i) + 1) * l.coeffs[i];
    mpz_class direct = 0;
    for (const auto& c : l.coeffs) direct += c;
    if (folded != direct) {
        raise(ErrorKind::InvalidArgument, "coefficients violate the functional equation: L(1) = " + direct.get_str() +
                                              " but the folded sum is " + folded.get_str());
    }
    return direct;
}

mpz_class a1ell_qr(const gf::Field& field, unsigned ell, std::uint64_t cap) {
    const std::uint64_t units = field.order() - 1;
    if (ell < 2 || units % ell != 0) raise(ErrorKind::OrderMismatch, std::to_string(ell) + " does not divide " + field.name() + " order - 1");
    if (field.order() > cap) raise(ErrorKind::FieldTooLarge, "quadratic-residue count over " + field.name() + " exceeds the cap");
    const std::uint64_t count = (units - ell) / ell;
    std::uint64_t squares = 0;
    if (field.has_tables()) {
        const auto zech = field.zech_table();
        const std::uint64_t half = units / 2;
        for (std::uint64_t i = 1; i <= count; ++i) {
            // 1 - g^(ell i) = 1 + g^(ell i + half)
            const std::uint64_t k = (ell * i + half) % units;
            if ((zech[k] & 1u) == 0) ++squares;
        }
    } else {
        const gf::FieldElem step = field.gen_pow(ell);
        gf::FieldElem h = step;
        for (std::uint64_t i = 1; i <= count; ++i, h = field.mul(h, step)) {
            if (field.is_square(field.sub(field.one(), h))) ++squares;
        }
    }
    return mpz_class(2) * mpz_class(static_cast<unsigned long>(squares)) - mpz_class(static_cast<unsigned long>(count));
}

LPoly closed_form(unsigned ell, const gf::FieldPtr& base, std::optional<bool> kappa_square, std::uint64_t cap) {
    if (!base) raise(ErrorKind::InvalidArgument, "closed form needs a base field");
    if (ell < 3 || !arith::is_prime(ell)) raise(ErrorKind::NotPrime, "ell = " + std::to_string(ell) + " is not an odd prime");
    const std::uint64_t q = base->order();
    const unsigned m = frobenius::multiplicative_order(q, ell);
    const unsigned g = (ell - 1) / 2;
    std::vector<mpz_class> c(2 * g + 1);

    if (m % 2 == 0) {
        // (1 + q^(m/2) u^m)^((ell-1)/m)
        const unsigned k = (ell - 1) / m;
        for (unsigned i = 0; i <= k; ++i) c[i * m] = binomial(k, i) * power(q, i * m / 2);
        return finish(std::move(c), g, q);
    }
    if (m != g) {
        raise(ErrorKind::UnsupportedM, "no closed form for odd m = " + std::to_string(m) + " < (ell - 1)/2 = " + std::to_string(g));
    }
    if (!kappa_square) raise(ErrorKind::InvalidArgument, "m = (ell - 1)/2 is odd; the squareness of a^2 - 4b is required");
    const auto qm = arith::checked_pow(q, m);
    if (!qm || *qm > cap) raise(ErrorKind::FieldTooLarge, "F_" + std::to_string(q) + "^" + std::to_string(m) + " exceeds the enumeration cap");

    const gf::FieldPtr ext = gf::extension_field(base, m);
    const mpz_class a = a1ell_qr(*ext, ell, cap);
    mpz_class top = ell * a + 1;
    if (!mpz_divisible_ui_p(top.get_mpz_t(), m)) {
        raise(ErrorKind::NonIntegralCoefficient, "(ell·a + 1)/m = " + top.get_str() + "/" + std::to_string(m) + " is not an integer");
    }
    mpz_divexact_ui(top.get_mpz_t(), top.get_mpz_t(), m);
    // S_m = F_{1,ell} = ell·a + 1 for a square discriminant and -F_{1,ell} otherwise; c_m = S_m/m.
    c[0] = 1;
    c[g] = *kappa_square ? top : mpz_class(-top);
    c[2 * g] = power(q, g);
    return finish(std::move(c), g, q);
}

}  // namespace hecl::lfunc
