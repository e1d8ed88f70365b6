#pragma once

// Brute-force counts used to check the formulas: points on y^ell = x^2 + a x + b
// over F_{q^t}, solutions of small diagonal equations, and L-polynomials
// rebuilt from raw point counts.

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "hecl/frobenius.hpp"
#include "hecl/gf.hpp"
#include "hecl/lfunc.hpp"

namespace hecl::oracle {

struct OracleBudget {
    /// Largest field that may be enumerated.
    std::uint64_t max_elements = std::uint64_t{1} << 26;
    /// Largest order^(number of variables) for diagonal equations.
    std::uint64_t max_pairs = std::uint64_t{1} << 26;
};

/// Counts points of y^ell = x^2 + a x + b over one F_{q^t} for many (a, b).
/// The field and the table v -> #{y : y^ell = v} are built once.
class PointCounter {
public:
    PointCounter(unsigned ell, gf::FieldPtr base_field, unsigned t, const OracleBudget& budget = {});

    const gf::FieldPtr& field() const noexcept { return ext_; }
    /// True when y -> y^ell is a bijection of F_{q^t} (every fiber has size 1).
    bool bijective() const noexcept { return bijective_; }

    /// Affine solutions plus the single point at infinity; a, b live in the base field.
    std::uint64_t count(const gf::FieldElem& a, const gf::FieldElem& b) const;

private:
    std::uint64_t count_with_tables(const gf::FieldElem& a, const gf::FieldElem& b) const;
    std::uint64_t count_generic(const gf::FieldElem& a, const gf::FieldElem& b) const;

    unsigned ell_;
    gf::FieldPtr base_;
    gf::FieldPtr ext_;
    bool bijective_ = false;
    // Indexed by discrete log when ext_ has tables, else by element index.
    std::vector<std::uint16_t> fiber_;
};

/// 1 + #{(x, y) in F_{q^t}^2 : y^ell = x^2 + a x + b}. Throws BudgetExceeded.
mpz_class count_points_naive(const frobenius::CurveParams& curve, unsigned t, const OracleBudget& budget = {});

struct DiagonalTerm {
    gf::FieldElem coefficient;
    unsigned exponent = 1;
};

/// #{(x_1, ..., x_k) : sum c_i x_i^(e_i) = rhs}, by enumeration.
/// Throws ZeroRhs for rhs = 0 and BudgetExceeded when order^k > max_pairs.
std::uint64_t diagonal_count_naive(const gf::Field& field, const std::vector<DiagonalTerm>& terms, const gf::FieldElem& rhs,
                                   const OracleBudget& budget = {});

/// S_t = N_t - (q^t + 1) from enumeration for t = 1..g, then the Newton recursion.
lfunc::LPoly lpoly_from_counts(const frobenius::CurveParams& curve, const OracleBudget& budget = {});

}  // namespace hecl::oracle
