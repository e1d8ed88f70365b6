#pragma once

// L-polynomials L(u) = c_0 + c_1 u + ... + c_{2g} u^{2g} from power sums of
// Frobenius, their class numbers L(1), and the closed forms available when the
// order of q mod ell is even or equal to (ell - 1)/2.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "hecl/cyclo.hpp"
#include "hecl/frobenius.hpp"
#include "hecl/gf.hpp"

namespace hecl::lfunc {

struct LPoly {
    unsigned g = 0;
    std::uint64_t q = 0;
    /// c_0..c_{2g}.
    std::vector<mpz_class> coeffs;
    mpz_class class_number;
};

/// Newton recursion on S_1..S_g, then c_{2g-i} = q^(g-i) c_i.
/// Throws NonIntegralCoefficient when some t·c_t is not divisible by t.
LPoly lpoly_from_traces(const std::vector<mpz_class>& S, unsigned g, std::uint64_t q);

LPoly lpoly_from_profile(const frobenius::TraceProfile& profile, const frobenius::CurveParams& curve);
/// Same, but returns L = 1 for kappa = 0 instead of failing.
LPoly lpoly_for_curve(const frobenius::CurveParams& curve, const frobenius::AnalyzeOptions& options = {});

/// sum_{i<g} (q^(g-i) + 1) c_i + c_g; also evaluates L(1) directly and throws
/// InvalidArgument if the two disagree (the coefficients violate the functional equation).
mpz_class class_number(const LPoly& l);

/// a_{1,ell} from the squares among 1 - h, h running over the nontrivial
/// ell-th powers of F_{q^m}.
mpz_class a1ell_qr(const gf::Field& field, unsigned ell, std::uint64_t cap = cyclo::kDefaultEnumerationCap);

/// Closed-form L-polynomial for the family over `base`. Needs kappa_square when
/// m = (ell - 1)/2 is odd; ignores it otherwise. Throws UnsupportedM for odd
/// m < (ell - 1)/2.
LPoly closed_form(unsigned ell, const gf::FieldPtr& base, std::optional<bool> kappa_square = std::nullopt,
                  std::uint64_t cap = cyclo::kDefaultEnumerationCap);

/// The genus-zero L-polynomial, L = 1.
LPoly trivial_lpoly(std::uint64_t q);

}  // namespace hecl::lfunc
