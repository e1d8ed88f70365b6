#pragma once

// Cyclotomic integers sum a_i z^i with z^ell = 1, kept in the redundant
// ell-slot form (no reduction by 1 + z + ... + z^(ell-1)), plus the order-ell
// and quadratic characters and their Jacobi sum.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hecl/gf.hpp"

namespace hecl::cyclo {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 24;

class CycInt {
public:
    /// The zero element of Z[z]/(z^ell - 1).
    explicit CycInt(unsigned ell);
    /// Coefficients a_1..a_ell (a_ell is the constant term).
    CycInt(unsigned ell, std::vector<mpz_class> slots);

    unsigned ell() const noexcept { return static_cast<unsigned>(c_.size()); }
    /// a_i for i in 1..ell; slot ell is the coefficient of z^0.
    const mpz_class& slot(unsigned i) const;
    void set_slot(unsigned i, mpz_class value);
    /// Coefficient of z^e for any integer exponent e.
    const mpz_class& at_exponent(std::int64_t e) const;
    /// a_1..a_ell.
    std::vector<mpz_class> slots() const;
    mpz_class coeff_sum() const;

    /// Complex conjugation: z^i -> z^(ell - i).
    CycInt conj() const;
    /// Representative with a_{ell-1} = 0 (shift by a multiple of the all-ones vector).
    CycInt canonical() const;
    /// Exact slot-wise equality, unlike operator== which works modulo all-ones.
    bool same_representative(const CycInt& other) const { return c_ == other.c_; }

    CycInt& operator+=(const CycInt& other);
    CycInt& operator-=(const CycInt& other);
    CycInt& operator*=(const mpz_class& k);
    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
    friend CycInt operator-(CycInt a) { return a *= -1; }
    friend CycInt operator*(CycInt a, const mpz_class& k) { return a *= k; }
    /// Cyclic convolution.
    friend CycInt operator*(const CycInt& a, const CycInt& b);
    /// Equal when the difference is a constant vector (1 + z + ... + z^(ell-1) = 0).
    friend bool operator==(const CycInt& a, const CycInt& b);

    /// "a_1·z^1 + ... + a_ell", zero terms omitted.
    std::string to_text() const;

private:
    void require_same_ell(const CycInt& other) const;

    // c_[e] is the coefficient of z^e, e in [0, ell).
    std::vector<mpz_class> c_;
};

/// Multiplicative character of order ell (or 2) on a field, fixed by its value
/// z at `base`.
struct CharSpec {
    gf::FieldPtr field;
    unsigned ell = 0;
    gf::FieldElem base;
    /// Inverse of dlog(base) modulo ell.
    std::uint64_t t_inverse = 0;
};

/// Throws OrderMismatch when ell does not divide order - 1 and InvalidArgument
/// when the character cannot send base to z. Default base: the field generator.
CharSpec make_char(gf::FieldPtr field, unsigned ell, std::optional<gf::FieldElem> base = std::nullopt);

/// n in 1..ell with lambda_1(x) = z^n (n = ell is the trivial value).
unsigned char_eval_ell(const CharSpec& chi, const gf::FieldElem& x);
/// Quadratic character: +1 or -1.
int quadratic_char(const gf::Field& field, const gf::FieldElem& x);

/// J(lambda_1, lambda_2) = sum over c1 + c2 = 1 of lambda_1(c1) lambda_2(c2).
CycInt jacobi_sum(const CharSpec& chi, std::uint64_t cap = kDefaultEnumerationCap);
CycInt jacobi_sum(const gf::FieldPtr& field, unsigned ell, const gf::FieldElem& base,
                  std::uint64_t cap = kDefaultEnumerationCap);

CycInt pow(const CycInt& x, std::uint64_t e);
/// (-1)^(r-1) J^r.
CycInt signed_power(const CycInt& j, std::uint64_t r);
/// ell·a_k - sum a_i with k = ell - r·n mod ell (k = 0 read as slot ell).
mpz_class frobenius_shift(const CycInt& c, std::uint64_t r, unsigned n);

struct IdentityCheck {
    std::string name;
    bool applicable = true;
    bool passed = true;
    std::string detail;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    bool all_passed() const;
};

/// Sum and norm identities of a Jacobi sum over a field of order q, plus the
/// quadratic/cubic coefficient identities available for ell = 5 and ell = 7.
IdentityReport identity_report(const CycInt& j, const mpz_class& q, unsigned ell);

/// Elementary symmetric sums e_1, e_2, e_3 of the ell coefficients.
struct SymmetricSums {
    mpz_class sum, sum_sq, sum_cube, sum_pair, sum_triple;
};
SymmetricSums symmetric_sums(const CycInt& j);

/// Base of the lifted character lambda o Norm on an extension: super.gen^dlog_sub(base).
gf::FieldElem lift_char_base(const gf::Field& sub, const gf::Field& super, const gf::FieldElem& base);

/// Number of (x, y) with c1 x^ell + c2 y^2 = rhs predicted from J:
/// order + lambda_2(rhs/c2) F_{1,n} with z^n = lambda_1(rhs/c1).
mpz_class diagonal_count_formula(const CharSpec& chi, const CycInt& j, const gf::FieldElem& c1, const gf::FieldElem& c2,
                                 const gf::FieldElem& rhs);

}  // namespace hecl::cyclo
