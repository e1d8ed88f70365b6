#include "hecl/oracle.hpp"

#include <algorithm>

#include "hecl/arith.hpp"
#include "hecl/error.hpp"

namespace hecl::oracle {

namespace {

std::uint64_t field_size_or_throw(std::uint64_t q, unsigned t, const OracleBudget& budget) {
    const auto qt = arith::checked_pow(q, t);
    if (!qt || *qt > budget.max_elements) {
        raise(ErrorKind::BudgetExceeded, std::to_string(q) + "^" + std::to_string(t) + " exceeds the oracle budget of " +
                                             std::to_string(budget.max_elements) + " elements");
    }
    return *qt;
}

// Packed-index addition and subtraction (digit-wise mod p).
gf::Index index_add(gf::Index x, gf::Index y, std::uint64_t p, unsigned d) {
    gf::Index r = 0, scale = 1;
    for (unsigned i = 0; i < d; ++i) {
        std::uint64_t s = x % p + y % p;
        if (s >= p) s -= p;
        r += s * scale;
        scale *= p;
        x /= p;
        y /= p;
    }
    return r;
}

gf::Index index_sub(gf::Index x, gf::Index y, std::uint64_t p, unsigned d) {
    gf::Index r = 0, scale = 1;
    for (unsigned i = 0; i < d; ++i) {
        const std::uint64_t s = (x % p + p - y % p) % p;
        r += s * scale;
        scale *= p;
        x /= p;
        y /= p;
    }
    return r;
}

}  // namespace

PointCounter::PointCounter(unsigned ell, gf::FieldPtr base_field, unsigned t, const OracleBudget& budget)
    : ell_(ell), base_(std::move(base_field)) {
    if (!base_) raise(ErrorKind::InvalidArgument, "point counter needs a base field");
    if (t == 0) raise(ErrorKind::InvalidArgument, "t must be positive");
    if (ell < 2) raise(ErrorKind::InvalidArgument, "ell must be at least 2");
    field_size_or_throw(base_->order(), t, budget);
    ext_ = gf::extension_field(base_, t);
    const gf::Field& f = *ext_;
    const std::uint64_t units = f.order() - 1;

    if (f.has_tables()) {
        fiber_.assign(units, 0);
        for (std::uint64_t k = 0; k < units; ++k) ++fiber_[(k * ell) % units];
    } else {
        fiber_.assign(f.order(), 0);
        for (gf::Index idx = 1; idx < f.order(); ++idx) ++fiber_[f.index(f.pow(f.element(idx), ell))];
        fiber_[0] = 1;  // drop the zero slot from the bijectivity test below
    }
    bijective_ = std::all_of(fiber_.begin() + (f.has_tables() ? 0 : 1), fiber_.end(), [](std::uint16_t c) { return c == 1; });
}

std::uint64_t PointCounter::count(const gf::FieldElem& a, const gf::FieldElem& b) const {
    base_->validate(a);
    base_->validate(b);
    // Each x contributes exactly one y.
    if (bijective_) return ext_->order() + 1;
    return ext_->has_tables() ? count_with_tables(a, b) : count_generic(a, b);
}

std::uint64_t PointCounter::count_with_tables(const gf::FieldElem& a_base, const gf::FieldElem& b_base) const {
    const gf::Field& f = *ext_;
    const std::uint64_t units = f.order() - 1;
    const auto zech = f.zech_table();
    const gf::FieldElem a = gf::embed(*base_, f, a_base);
    const gf::FieldElem b = gf::embed(*base_, f, b_base);
    const bool a_zero = f.is_zero(a), b_zero = f.is_zero(b);
    const std::uint64_t la = a_zero ? 0 : f.log_of(f.index(a));
    const std::uint64_t lb = b_zero ? 0 : f.log_of(f.index(b));

    // x = 0
    std::uint64_t affine = b_zero ? 1 : fiber_[lb];
    // x = g^k: s = x^2 + a x = x (x + a), then f(x) = s + b, all in logs.
    std::uint64_t k_minus_a = (units - la) % units;  // k - la mod units, advanced with k
    for (std::uint64_t k = 0; k < units; ++k, k_minus_a = (k_minus_a + 1 == units) ? 0 : k_minus_a + 1) {
        bool s_zero = false;
        std::uint64_t ls;
        if (a_zero) {
            ls = 2 * k;
        } else {
            const std::uint32_t z = zech[k_minus_a];  // log(1 + x/a)
            if (z == gf::kLogZero) {
                s_zero = true;
                ls = 0;
            } else {
                ls = k + la + z;
            }
        }
        if (ls >= units) ls %= units;
        if (b_zero) {
            affine += s_zero ? 1 : fiber_[ls];
            continue;
        }
        if (s_zero) {
            affine += fiber_[lb];
            continue;
        }
        std::uint64_t diff = ls >= lb ? ls - lb : ls + units - lb;
        const std::uint32_t z = zech[diff];  // log(1 + s/b)
        if (z == gf::kLogZero) {
            affine += 1;
        } else {
            std::uint64_t lf = lb + z;
            if (lf >= units) lf -= units;
            affine += fiber_[lf];
        }
    }
    return affine + 1;
}

std::uint64_t PointCounter::count_generic(const gf::FieldElem& a_base, const gf::FieldElem& b_base) const {
    const gf::Field& f = *ext_;
    const gf::FieldElem a = gf::embed(*base_, f, a_base);
    const gf::FieldElem b = gf::embed(*base_, f, b_base);
    std::uint64_t affine = 0;
    for (gf::Index idx = 0; idx < f.order(); ++idx) {
        const gf::FieldElem x = f.element(idx);
        const gf::FieldElem v = f.add(f.mul(f.add(x, a), x), b);
        affine += f.is_zero(v) ? 1 : fiber_[f.index(v)];
    }
    return affine + 1;
}

mpz_class count_points_naive(const frobenius::CurveParams& curve, unsigned t, const OracleBudget& budget) {
    if (!curve.base_field) raise(ErrorKind::InvalidArgument, "curve has no base field");
    PointCounter counter(curve.ell, curve.base_field, t, budget);
    return mpz_class(std::to_string(counter.count(curve.a, curve.b)));
}

std::uint64_t diagonal_count_naive(const gf::Field& field, const std::vector<DiagonalTerm>& terms, const gf::FieldElem& rhs,
                                   const OracleBudget& budget) {
    if (terms.empty()) raise(ErrorKind::InvalidArgument, "diagonal equation needs at least one term");
    field.validate(rhs);
    if (field.is_zero(rhs)) raise(ErrorKind::ZeroRhs, "right-hand side must be nonzero");
    const auto work = arith::checked_pow(field.order(), static_cast<unsigned>(terms.size()));
    if (!work || *work > budget.max_pairs) {
        raise(ErrorKind::BudgetExceeded, "enumerating " + std::to_string(terms.size()) + " variables over " + field.name() +
                                             " exceeds the budget of " + std::to_string(budget.max_pairs));
    }
    const std::uint64_t order = field.order();
    const std::uint64_t p = field.characteristic();
    const unsigned d = field.degree();

    // value_counts[v] = #{x : c x^e = v}
    auto value_counts = [&](const DiagonalTerm& term) {
        if (term.exponent == 0) raise(ErrorKind::InvalidArgument, "exponents must be positive");
        field.validate(term.coefficient);
        std::vector<std::uint64_t> counts(order, 0);
        for (gf::Index idx = 0; idx < order; ++idx) {
            const gf::FieldElem x = field.element(idx);
            ++counts[field.index(field.mul(term.coefficient, field.pow(x, term.exponent)))];
        }
        return counts;
    };

    std::vector<std::uint64_t> dist = value_counts(terms.front());
    for (std::size_t j = 1; j + 1 < terms.size(); ++j) {
        const auto counts = value_counts(terms[j]);
        std::vector<std::uint64_t> next(order, 0);
        for (gf::Index v = 0; v < order; ++v) {
            if (!dist[v]) continue;
            for (gf::Index u = 0; u < order; ++u) {
                if (counts[u]) next[index_add(v, u, p, d)] += dist[v] * counts[u];
            }
        }
        dist = std::move(next);
    }
    const gf::Index target = field.index(rhs);
    if (terms.size() == 1) return dist[target];
    const auto last = value_counts(terms.back());
    std::uint64_t total = 0;
    for (gf::Index v = 0; v < order; ++v) {
        if (dist[v]) total += dist[v] * last[index_sub(target, v, p, d)];
    }
    return total;
}

lfunc::LPoly lpoly_from_counts(const frobenius::CurveParams& curve, const OracleBudget& budget) {
    const unsigned g = curve.genus();
    const std::uint64_t q = curve.base_field->order();
    if (g == 0) return lfunc::trivial_lpoly(q);
    field_size_or_throw(q, g, budget);
    std::vector<mpz_class> S;
    for (unsigned t = 1; t <= g; ++t) {
        mpz_class qt;
        mpz_ui_pow_ui(qt.get_mpz_t(), q, t);
        S.push_back(count_points_naive(curve, t, budget) - qt - 1);
    }
    return lfunc::lpoly_from_traces(S, g, q);
}

}  // namespace hecl::oracle
