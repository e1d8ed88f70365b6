#pragma once

// Frobenius data of y^ell = x^2 + a x + b over F_q: the order m of q mod ell,
// the character value n, squareness of the discriminant, and the traces
// a(q^t) built from signed powers of a Jacobi sum over F_{q^m}.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "hecl/cyclo.hpp"
#include "hecl/gf.hpp"

namespace hecl::frobenius {

/// Smallest m >= 1 with q^m = 1 mod ell. Throws Divisible when ell | q.
unsigned multiplicative_order(std::uint64_t q, unsigned ell);

struct CurveParams {
    unsigned ell = 0;
    gf::FieldPtr base_field;
    gf::FieldElem a;
    gf::FieldElem b;
    gf::FieldElem kappa;  // a^2 - 4b

    unsigned genus() const;
};

/// Validates ell (odd prime, not the characteristic) and the coefficients.
CurveParams make_curve(unsigned ell, gf::FieldPtr base_field, gf::FieldElem a, gf::FieldElem b);
unsigned genus(const CurveParams& curve);

struct AnalyzeOptions {
    /// Element of F_{q^m} sent to z by lambda_1; defaults to the generator of F_{q^m}.
    std::optional<gf::FieldElem> char_base;
    std::uint64_t enumeration_cap = cyclo::kDefaultEnumerationCap;
    /// Compute J over F_{q^m} even when m is even and the closed form would do.
    bool force_enumeration = false;
};

/// What a curve contributes beyond (ell, q): n and the squareness of kappa.
struct CurveClass {
    bool kappa_zero = false;
    unsigned n = 0;
    bool kappa_square = false;

    friend auto operator<=>(const CurveClass&, const CurveClass&) = default;
};

class FamilyContext;

struct TraceProfile {
    unsigned ell = 0;
    std::uint64_t q = 0;
    unsigned genus = 0;
    unsigned m = 0;
    unsigned n = 0;
    bool kappa_square = false;
    /// Absent on the even-m closed-form path.
    std::optional<cyclo::CycInt> jacobi;
    /// S_1..S_g.
    std::vector<mpz_class> S;
    /// r -> F_{r,n} for 1 <= r <= g/m.
    std::map<std::uint64_t, mpz_class> F_values;
    std::shared_ptr<const FamilyContext> family;
};

/// Everything shared by the curves y^ell = x^2 + a x + b over one base field
/// with one character convention: F_{q^m}, J and its signed powers.
/// Lazily computed pieces are guarded, so a context may be shared across threads.
class FamilyContext : public std::enable_shared_from_this<FamilyContext> {
public:
    static std::shared_ptr<FamilyContext> create(unsigned ell, gf::FieldPtr base_field, AnalyzeOptions options = {});

    unsigned ell() const noexcept { return ell_; }
    unsigned m() const noexcept { return m_; }
    unsigned genus() const noexcept { return (ell_ - 1) / 2; }
    std::uint64_t q() const noexcept { return base_->order(); }
    const gf::FieldPtr& base_field() const noexcept { return base_; }
    /// True when traces come from the even-m closed form and no J is built.
    bool closed_form_path() const noexcept { return closed_form_; }

    /// F_{q^m} with its character; builds it on first use.
    const gf::FieldPtr& extension() const;
    const cyclo::CharSpec& character() const;
    /// J over F_{q^m}; throws FieldTooLarge beyond the enumeration cap.
    const cyclo::CycInt& jacobi() const;

    CurveClass classify(const gf::FieldElem& a, const gf::FieldElem& b) const;
    /// F_{r,n}.
    mpz_class frobenius_value(std::uint64_t r, unsigned n) const;
    /// a(q^t) for a curve of the given class.
    mpz_class trace(const CurveClass& cls, std::uint64_t t) const;
    TraceProfile profile(const CurveClass& cls) const;

private:
    FamilyContext(unsigned ell, gf::FieldPtr base_field, AnalyzeOptions options);
    void ensure_extension() const;
    /// (-1)^(r-1) J^r, cached.
    cyclo::CycInt signed_power(std::uint64_t r) const;

    unsigned ell_;
    gf::FieldPtr base_;
    AnalyzeOptions options_;
    unsigned m_;
    bool closed_form_;

    mutable std::once_flag ext_once_;
    mutable gf::FieldPtr ext_;
    mutable std::optional<cyclo::CharSpec> char_;
    mutable std::once_flag jacobi_once_;
    mutable std::optional<cyclo::CycInt> jacobi_;
    mutable std::mutex powers_mutex_;
    mutable std::vector<cyclo::CycInt> powers_;  // powers_[r - 1] = J^r
};

/// Throws GenusZero when kappa = 0 and FieldTooLarge when m is odd and q^m is
/// beyond the enumeration cap.
TraceProfile analyze(const CurveParams& curve, const AnalyzeOptions& options = {});

/// a(q^t).
mpz_class trace(const TraceProfile& profile, const CurveParams& curve, std::uint64_t t);
/// N_t = q^t + 1 - a(q^t).
mpz_class point_count(const TraceProfile& profile, const CurveParams& curve, std::uint64_t t);

}  // namespace hecl::frobenius
