#pragma once

// Averages of class numbers and traces over the family of all curves
// y^ell = x^2 + a x + b with (a, b) in F_q^2 and a^2 - 4b != 0, or over the
// half where a^2 - 4b is (or is not) a square in F_q.

#include <gmpxx.h>

#include <cstdint>
#include <string_view>
#include <vector>

#include "hecl/cyclo.hpp"
#include "hecl/frobenius.hpp"
#include "hecl/gf.hpp"

namespace hecl::stats {

enum class Split { All, Square, NonSquare };

std::string_view to_string(Split split) noexcept;
/// "all", "square" / "sq", "non-square" / "nonsq"; throws InvalidArgument otherwise.
Split parse_split(std::string_view text);

struct ClassEntry {
    unsigned n = 0;
    /// Squareness of a^2 - 4b in F_{q^m}.
    bool kappa_square = false;
    mpz_class h;
    std::uint64_t multiplicity = 0;
};

struct AverageReport {
    unsigned ell = 0;
    std::uint64_t q = 0;
    Split split = Split::All;
    std::uint64_t family_size = 0;
    /// Sorted by (n, kappa_square).
    std::vector<ClassEntry> class_table;
    mpq_class average;
};

/// Enumerates the family; class numbers come from one L-polynomial per
/// (n, kappa_square) class.
AverageReport average_class_number(unsigned ell, const gf::FieldPtr& base, Split split,
                                   const frobenius::AnalyzeOptions& options = {});

/// Symmetric functions of the seven Jacobi-sum coefficients used by the ell = 7 averages.
struct Ell7Sums {
    mpz_class sum_sq;
    mpz_class sum_pair;
    mpz_class sum_triple;
    /// a1a2a3 + a1a2a5 + ... + a5a6a7 (twenty triples).
    mpz_class frak_a;
};
Ell7Sums ell7_sums(const cyclo::CycInt& j);

/// Closed-form average for ell in {5, 7}; throws UnsupportedEll otherwise.
mpq_class closed_form_average(unsigned ell, const gf::FieldPtr& base, Split split,
                              std::uint64_t cap = cyclo::kDefaultEnumerationCap);

/// Average of a(q^t) over the family; only for m = 1 (throws UnsupportedM).
mpq_class average_trace(unsigned ell, const gf::FieldPtr& base, std::uint64_t t, Split split,
                        const frobenius::AnalyzeOptions& options = {});

}  // namespace hecl::stats
