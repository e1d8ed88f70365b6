#include "hecl/cyclo.hpp"

#include <sstream>

#include "hecl/arith.hpp"
#include "hecl/error.hpp"

namespace hecl::cyclo {

namespace {

void require_ell(unsigned ell) {
    if (ell < 2) raise(ErrorKind::InvalidArgument, "cyclotomic order must be at least 2");
}

}  // namespace

CycInt::CycInt(unsigned ell) : c_((require_ell(ell), ell)) {}

CycInt::CycInt(unsigned ell, std::vector<mpz_class> slots) : c_((require_ell(ell), ell)) {
    if (slots.size() != ell) {
        raise(ErrorKind::InvalidArgument, "expected " + std::to_string(ell) + " coefficients, got " + std::to_string(slots.size()));
    }
    for (unsigned i = 1; i <= ell; ++i) c_[i % ell] = std::move(slots[i - 1]);
}

const mpz_class& CycInt::slot(unsigned i) const {
    if (i < 1 || i > ell()) raise(ErrorKind::IndexOutOfRange, "slot " + std::to_string(i) + " outside 1.." + std::to_string(ell()));
    return c_[i % ell()];
}

void CycInt::set_slot(unsigned i, mpz_class value) {
    if (i < 1 || i > ell()) raise(ErrorKind::IndexOutOfRange, "slot " + std::to_string(i) + " outside 1.." + std::to_string(ell()));
    c_[i % ell()] = std::move(value);
}

const mpz_class& CycInt::at_exponent(std::int64_t e) const {
    const auto l = static_cast<std::int64_t>(ell());
    return c_[static_cast<std::size_t>(((e % l) + l) % l)];
}

std::vector<mpz_class> CycInt::slots() const {
    std::vector<mpz_class> out;
    out.reserve(ell());
    for (unsigned i = 1; i <= ell(); ++i) out.push_back(c_[i % ell()]);
    return out;
}

mpz_class CycInt::coeff_sum() const {
    mpz_class s = 0;
    for (const auto& c : c_) s += c;
    return s;
}

CycInt CycInt::conj() const {
    CycInt r(ell());
    for (unsigned e = 0; e < ell(); ++e) r.c_[(ell() - e) % ell()] = c_[e];
    return r;
}

CycInt CycInt::canonical() const {
    CycInt r = *this;
    const mpz_class shift = c_[ell() - 1];
    for (auto& c : r.c_) c -= shift;
    return r;
}

void CycInt::require_same_ell(const CycInt& other) const {
    if (ell() != other.ell()) raise(ErrorKind::InvalidArgument, "cyclotomic orders differ");
}

CycInt& CycInt::operator+=(const CycInt& other) {
    require_same_ell(other);
    for (unsigned e = 0; e < ell(); ++e) c_[e] += other.c_[e];
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& other) {
    require_same_ell(other);
    for (unsigned e = 0; e < ell(); ++e) c_[e] -= other.c_[e];
    return *this;
}

CycInt& CycInt::operator*=(const mpz_class& k) {
    for (auto& c : c_) c *= k;
    return *this;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
    a.require_same_ell(b);
    const unsigned l = a.ell();
    CycInt r(l);
    for (unsigned i = 0; i < l; ++i) {
        if (a.c_[i] == 0) continue;
        for (unsigned j = 0; j < l; ++j) {
            unsigned k = i + j;
            if (k >= l) k -= l;
            mpz_addmul(r.c_[k].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
        }
    }
    return r;
}

bool operator==(const CycInt& a, const CycInt& b) {
    if (a.ell() != b.ell()) return false;
    const mpz_class d0 = a.c_[0] - b.c_[0];
    for (unsigned e = 1; e < a.ell(); ++e) {
        if (a.c_[e] - b.c_[e] != d0) return false;
    }
    return true;
}

std::string CycInt::to_text() const {
    std::ostringstream out;
    bool first = true;
    for (unsigned i = 1; i <= ell(); ++i) {
        const mpz_class& a = slot(i);
        if (a == 0) continue;
        mpz_class mag = abs(a);
        if (first) {
            if (a < 0) out << "-";
        } else {
            out << (a < 0 ? " - " : " + ");
        }
        first = false;
        out << mag.get_str();
        if (i != ell()) out << "·z^" << i;
    }
    if (first) return "0";
    return out.str();
}

CharSpec make_char(gf::FieldPtr field, unsigned ell, std::optional<gf::FieldElem> base) {
    if (!field) raise(ErrorKind::InvalidArgument, "character needs a field");
    if (ell < 2) raise(ErrorKind::InvalidArgument, "character order must be at least 2");
    const std::uint64_t units = field->order() - 1;
    if (units % ell != 0) {
        raise(ErrorKind::OrderMismatch, std::to_string(ell) + " does not divide " + std::to_string(field->order()) + " - 1");
    }
    gf::FieldElem b = base ? std::move(*base) : field->gen();
    field->validate(b);
    const std::uint64_t t = field->dlog(b) % ell;
    if (t == 0) {
        raise(ErrorKind::InvalidArgument, "character base " + gf::format_element(*field, b) + " is an " + std::to_string(ell) +
                                              "-th power; it cannot map to a primitive root of unity");
    }
    return CharSpec{std::move(field), ell, std::move(b), arith::inv_mod(t, ell)};
}

unsigned char_eval_ell(const CharSpec& chi, const gf::FieldElem& x) {
    const std::uint64_t k = chi.field->dlog(x) % chi.ell;
    const std::uint64_t n = (k * chi.t_inverse) % chi.ell;
    return n == 0 ? chi.ell : static_cast<unsigned>(n);
}

int quadratic_char(const gf::Field& field, const gf::FieldElem& x) { return field.is_square(x) ? 1 : -1; }

CycInt jacobi_sum(const CharSpec& chi, std::uint64_t cap) {
    const gf::Field& f = *chi.field;
    if (f.order() > cap) {
        raise(ErrorKind::FieldTooLarge, "Jacobi sum over " + f.name() + " exceeds the enumeration cap " + std::to_string(cap));
    }
    const unsigned ell = chi.ell;
    const std::uint64_t units = f.order() - 1;
    std::vector<std::int64_t> acc(ell, 0);  // by exponent

    if (f.has_tables()) {
        const auto zech = f.zech_table();
        const std::uint64_t half = units / 2;
        std::uint64_t slot = 0;  // k·t_inverse mod ell, updated incrementally
        for (std::uint64_t k = 1; k < units; ++k) {
            slot += chi.t_inverse;
            if (slot >= ell) slot -= ell;
            std::uint64_t shifted = k + half;
            if (shifted >= units) shifted -= units;
            // 1 - g^k = 1 + g^(k + half)
            acc[slot] += (zech[shifted] & 1u) ? -1 : 1;
        }
    } else {
        const gf::FieldElem one = f.one();
        for (gf::Index idx = 0; idx < f.order(); ++idx) {
            const gf::FieldElem c1 = f.element(idx);
            if (f.is_zero(c1) || c1 == one) continue;
            const unsigned n = char_eval_ell(chi, c1);
            acc[n % ell] += quadratic_char(f, f.sub(one, c1));
        }
    }
    CycInt j(ell);
    for (unsigned e = 0; e < ell; ++e) j.set_slot(e == 0 ? ell : e, mpz_class(static_cast<long>(acc[e])));
    return j;
}

CycInt jacobi_sum(const gf::FieldPtr& field, unsigned ell, const gf::FieldElem& base, std::uint64_t cap) {
    return jacobi_sum(make_char(field, ell, base), cap);
}

CycInt pow(const CycInt& x, std::uint64_t e) {
    CycInt result(x.ell());
    result.set_slot(x.ell(), 1);
    CycInt b = x;
    while (e) {
        if (e & 1) result = result * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return result;
}

CycInt signed_power(const CycInt& j, std::uint64_t r) {
    if (r == 0) raise(ErrorKind::InvalidArgument, "power must be positive");
    CycInt p = pow(j, r);
    if (r % 2 == 0) p *= -1;
    return p;
}

mpz_class frobenius_shift(const CycInt& c, std::uint64_t r, unsigned n) {
    const unsigned ell = c.ell();
    if (n < 1 || n > ell) raise(ErrorKind::IndexOutOfRange, "n = " + std::to_string(n) + " outside 1.." + std::to_string(ell));
    if (r == 0) raise(ErrorKind::InvalidArgument, "r must be positive");
    const std::uint64_t rn = ((r % ell) * n) % ell;
    const std::uint64_t k = (ell - rn) % ell;
    return mpz_class(ell) * c.at_exponent(static_cast<std::int64_t>(k)) - c.coeff_sum();
}

bool IdentityReport::all_passed() const {
    for (const auto& c : checks) {
        if (c.applicable && !c.passed) return false;
    }
    return true;
}

SymmetricSums symmetric_sums(const CycInt& j) {
    SymmetricSums s;
    for (unsigned i = 1; i <= j.ell(); ++i) {
        const mpz_class& a = j.slot(i);
        s.sum += a;
        s.sum_sq += a * a;
        s.sum_cube += a * a * a;
    }
    s.sum_pair = (s.sum * s.sum - s.sum_sq) / 2;
    s.sum_triple = (s.sum * s.sum * s.sum - 3 * s.sum * s.sum_sq + 2 * s.sum_cube) / 6;
    return s;
}

IdentityReport identity_report(const CycInt& j, const mpz_class& q, unsigned ell) {
    IdentityReport report;
    if (j.ell() != ell) raise(ErrorKind::InvalidArgument, "Jacobi sum has the wrong cyclotomic order");
    const SymmetricSums s = symmetric_sums(j);

    report.checks.push_back({"coefficient sum is -1", true, s.sum == -1, "sum = " + s.sum.get_str()});

    CycInt target(ell);
    target.set_slot(ell, q);
    const CycInt norm = j * j.conj();
    report.checks.push_back({"J·conj(J) = q", true, norm == target, norm.canonical().to_text()});

    IdentityCheck quad{"q from sum of squares and pair sum", ell == 5 || ell == 7, true, ""};
    if (quad.applicable) {
        // q = sum a^2 - (2/(ell-1)) sum_{i<j} a_i a_j, cleared of the denominator
        const mpz_class lhs = mpz_class(ell - 1) * q;
        const mpz_class rhs = mpz_class(ell - 1) * s.sum_sq - 2 * s.sum_pair;
        quad.passed = lhs == rhs;
        quad.detail = "sum a^2 = " + s.sum_sq.get_str() + ", pair sum = " + s.sum_pair.get_str();
    } else {
        quad.detail = "only for ell in {5, 7}";
    }
    report.checks.push_back(quad);

    IdentityCheck seven{"ell = 7 power-sum identities", ell == 7, true, ""};
    if (seven.applicable) {
        const bool sq = 7 * s.sum_sq == 6 * q + 1;
        const bool pair = 7 * s.sum_pair == -3 * q + 3;
        const bool cube = 7 * (s.sum_cube - 3 * s.sum_triple) == -9 * q + 2;
        seven.passed = sq && pair && cube;
        seven.detail = "sum a^2 = " + s.sum_sq.get_str() + ", pair sum = " + s.sum_pair.get_str() +
                       ", sum a^3 - 3·triple sum = " + mpz_class(s.sum_cube - 3 * s.sum_triple).get_str();
    } else {
        seven.detail = "only for ell = 7";
    }
    report.checks.push_back(seven);
    return report;
}

gf::FieldElem lift_char_base(const gf::Field& sub, const gf::Field& super, const gf::FieldElem& base) {
    if (!gf::gens_compatible(sub, super)) {
        raise(ErrorKind::IncompatibleFields, sub.name() + " and " + super.name() + " have incompatible generators");
    }
    return super.gen_pow(sub.dlog(base));
}

mpz_class diagonal_count_formula(const CharSpec& chi, const CycInt& j, const gf::FieldElem& c1, const gf::FieldElem& c2,
                                 const gf::FieldElem& rhs) {
    const gf::Field& f = *chi.field;
    if (f.is_zero(rhs)) raise(ErrorKind::ZeroRhs, "right-hand side must be nonzero");
    const unsigned n = char_eval_ell(chi, f.mul(rhs, f.inv(c1)));
    const int sign = quadratic_char(f, f.mul(rhs, f.inv(c2)));
    return mpz_class(f.order()) + sign * frobenius_shift(j, 1, n);
}

}  // namespace hecl::cyclo
