#include "hecl/frobenius.hpp"

#include "hecl/arith.hpp"
#include "hecl/error.hpp"

namespace hecl::frobenius {

namespace {

void require_ell(unsigned ell, const gf::Field& base) {
    if (ell < 3 || !arith::is_prime(ell)) raise(ErrorKind::NotPrime, "ell = " + std::to_string(ell) + " is not an odd prime");
    if (base.characteristic() == ell) raise(ErrorKind::Divisible, "ell = " + std::to_string(ell) + " divides q = " + std::to_string(base.order()));
}

gf::FieldElem discriminant(const gf::Field& f, const gf::FieldElem& a, const gf::FieldElem& b) {
    return f.sub(f.mul(a, a), f.scale(b, 4));
}

}  // namespace

unsigned multiplicative_order(std::uint64_t q, unsigned ell) {
    if (ell < 2) raise(ErrorKind::InvalidArgument, "ell must be at least 2");
    const std::uint64_t r = q % ell;
    if (r == 0) raise(ErrorKind::Divisible, std::to_string(ell) + " divides " + std::to_string(q));
    std::uint64_t x = r;
    unsigned m = 1;
    while (x != 1) {
        x = (x * r) % ell;
        ++m;
    }
    return m;
}

unsigned CurveParams::genus() const {
    if (!base_field || base_field->is_zero(kappa)) return 0;
    return (ell - 1) / 2;
}

unsigned genus(const CurveParams& curve) { return curve.genus(); }

CurveParams make_curve(unsigned ell, gf::FieldPtr base_field, gf::FieldElem a, gf::FieldElem b) {
    if (!base_field) raise(ErrorKind::InvalidArgument, "curve needs a base field");
    require_ell(ell, *base_field);
    base_field->validate(a);
    base_field->validate(b);
    gf::FieldElem kappa = discriminant(*base_field, a, b);
    return CurveParams{ell, std::move(base_field), std::move(a), std::move(b), std::move(kappa)};
}

std::shared_ptr<FamilyContext> FamilyContext::create(unsigned ell, gf::FieldPtr base_field, AnalyzeOptions options) {
    return std::shared_ptr<FamilyContext>(new FamilyContext(ell, std::move(base_field), std::move(options)));
}

FamilyContext::FamilyContext(unsigned ell, gf::FieldPtr base_field, AnalyzeOptions options)
    : ell_(ell), base_(std::move(base_field)), options_(std::move(options)) {
    if (!base_) raise(ErrorKind::InvalidArgument, "family needs a base field");
    require_ell(ell_, *base_);
    m_ = multiplicative_order(base_->order(), ell_);
    closed_form_ = m_ % 2 == 0 && !options_.force_enumeration;
}

void FamilyContext::ensure_extension() const {
    std::call_once(ext_once_, [this] {
        ext_ = gf::extension_field(base_, m_);
        char_ = cyclo::make_char(ext_, ell_, options_.char_base);
    });
}

const gf::FieldPtr& FamilyContext::extension() const {
    ensure_extension();
    return ext_;
}

const cyclo::CharSpec& FamilyContext::character() const {
    ensure_extension();
    return *char_;
}

const cyclo::CycInt& FamilyContext::jacobi() const {
    // Check the cap before building F_{q^m} at all.
    auto qm = arith::checked_pow(base_->order(), m_);
    if (!qm || *qm > options_.enumeration_cap) {
        raise(ErrorKind::FieldTooLarge, "Jacobi sum over F_" + std::to_string(base_->order()) + "^" + std::to_string(m_) +
                                            " exceeds the enumeration cap " + std::to_string(options_.enumeration_cap));
    }
    std::call_once(jacobi_once_, [this] { jacobi_ = cyclo::jacobi_sum(character(), options_.enumeration_cap); });
    return *jacobi_;
}

CurveClass FamilyContext::classify(const gf::FieldElem& a, const gf::FieldElem& b) const {
    const gf::Field& f = *base_;
    CurveClass cls;
    const gf::FieldElem kappa = discriminant(f, a, b);
    if (f.is_zero(kappa)) {
        cls.kappa_zero = true;
        return cls;
    }
    // -kappa/4
    const gf::FieldElem x = f.mul(f.neg(kappa), f.inv(f.from_int(4)));
    const auto qm = arith::checked_pow(f.order(), m_);
    const bool evaluate_upstairs = !closed_form_ && qm && *qm <= options_.enumeration_cap;
    if (m_ == 1 || evaluate_upstairs) {
        const gf::Field& ext = *extension();
        cls.kappa_square = ext.is_square(gf::embed(f, ext, kappa));
        cls.n = cyclo::char_eval_ell(character(), gf::embed(f, ext, x));
        return cls;
    }
    // m > 1: ell divides (q^m - 1)/(q - 1), so lambda_1 is trivial on F_q^x.
    // Every element of F_q is a square in F_{q^m} for even m; for odd m
    // squareness does not change.
    cls.n = ell_;
    cls.kappa_square = m_ % 2 == 0 ? true : f.is_square(kappa);
    return cls;
}

cyclo::CycInt FamilyContext::signed_power(std::uint64_t r) const {
    const cyclo::CycInt& j = jacobi();
    std::lock_guard lock(powers_mutex_);
    if (powers_.empty()) powers_.push_back(j);
    while (powers_.size() < r) powers_.push_back(powers_.back() * j);
    cyclo::CycInt p = powers_[r - 1];
    if (r % 2 == 0) p *= -1;
    return p;
}

mpz_class FamilyContext::frobenius_value(std::uint64_t r, unsigned n) const {
    if (r == 0) raise(ErrorKind::InvalidArgument, "r must be positive");
    if (n < 1 || n > ell_) raise(ErrorKind::IndexOutOfRange, "n = " + std::to_string(n) + " outside 1.." + std::to_string(ell_));
    if (closed_form_) {
        // J = q^(m/2) here, so F_{r,n} = (-1)^(r-1) (ell - 1) q^(rm/2).
        mpz_class v;
        mpz_ui_pow_ui(v.get_mpz_t(), base_->order(), r * m_ / 2);
        v *= ell_ - 1;
        if (r % 2 == 0) v = -v;
        return v;
    }
    return cyclo::frobenius_shift(signed_power(r), r, n);
}

mpz_class FamilyContext::trace(const CurveClass& cls, std::uint64_t t) const {
    if (t == 0) raise(ErrorKind::InvalidArgument, "t must be positive");
    if (cls.kappa_zero) raise(ErrorKind::GenusZero, "kappa = 0 gives a rational function field");
    if (t % m_ != 0) return 0;
    const std::uint64_t r = t / m_;
    const mpz_class f = frobenius_value(r, cls.n);
    if (cls.kappa_square) return -f;
    return r % 2 == 1 ? f : mpz_class(-f);
}

TraceProfile FamilyContext::profile(const CurveClass& cls) const {
    if (cls.kappa_zero) raise(ErrorKind::GenusZero, "kappa = 0 gives a rational function field");
    TraceProfile p;
    p.ell = ell_;
    p.q = q();
    p.genus = genus();
    p.m = m_;
    p.n = cls.n;
    p.kappa_square = cls.kappa_square;
    if (!closed_form_) p.jacobi = jacobi();
    for (unsigned t = 1; t <= p.genus; ++t) p.S.push_back(-trace(cls, t));
    for (std::uint64_t r = 1; r * m_ <= p.genus; ++r) p.F_values.emplace(r, frobenius_value(r, cls.n));
    p.family = shared_from_this();
    return p;
}

TraceProfile analyze(const CurveParams& curve, const AnalyzeOptions& options) {
    if (curve.genus() == 0) raise(ErrorKind::GenusZero, "kappa = 0 gives a rational function field");
    auto family = FamilyContext::create(curve.ell, curve.base_field, options);
    return family->profile(family->classify(curve.a, curve.b));
}

namespace {

const FamilyContext& family_of(const TraceProfile& profile, const CurveParams& curve) {
    if (curve.genus() == 0) raise(ErrorKind::GenusZero, "kappa = 0 gives a rational function field");
    if (!profile.family) raise(ErrorKind::InvalidArgument, "profile was not produced by analyze");
    return *profile.family;
}

}  // namespace

mpz_class trace(const TraceProfile& profile, const CurveParams& curve, std::uint64_t t) {
    return family_of(profile, curve).trace(CurveClass{false, profile.n, profile.kappa_square}, t);
}

mpz_class point_count(const TraceProfile& profile, const CurveParams& curve, std::uint64_t t) {
    mpz_class qt;
    mpz_ui_pow_ui(qt.get_mpz_t(), profile.q, t);
    return qt + 1 - trace(profile, curve, t);
}

}  // namespace hecl::frobenius
