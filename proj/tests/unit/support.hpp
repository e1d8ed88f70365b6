#pragma once

// Slow, definition-level reference computations used as oracles by the unit
// tests. Only the basic Field operations are used here (add, mul, pow); no
// tables, no Zech logs, no library shortcuts.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "hecl/gf.hpp"

namespace support {

using hecl::gf::Field;
using hecl::gf::FieldElem;
using hecl::gf::FieldPtr;
using hecl::gf::Index;

/// index -> k with gen^k = element, built by walking powers of gen.
inline std::map<Index, std::uint64_t> walk_logs(const Field& f) {
    std::map<Index, std::uint64_t> logs;
    FieldElem x = f.one();
    for (std::uint64_t k = 0; k + 1 < f.order(); ++k) {
        logs.emplace(f.index(x), k);
        x = f.mul(x, f.gen());
    }
    return logs;
}

/// Euler's criterion: +1, -1, or 0 for x = 0.
inline int legendre(const Field& f, const FieldElem& x) {
    if (f.is_zero(x)) return 0;
    return f.pow(x, (f.order() - 1) / 2) == f.one() ? 1 : -1;
}

/// Coefficients a_1..a_ell of sum over c1 + c2 = 1 of lambda_1(c1) lambda_2(c2),
/// with lambda_1(base) = z; slot ell holds the z^0 coefficient.
inline std::vector<mpz_class> jacobi_by_definition(const Field& f, unsigned ell, const FieldElem& base) {
    const auto logs = walk_logs(f);
    const std::uint64_t t = logs.at(f.index(base)) % ell;
    std::uint64_t t_inv = 1;
    while ((t * t_inv) % ell != 1) ++t_inv;
    std::vector<mpz_class> slots(ell, 0);
    for (Index i = 0; i < f.order(); ++i) {
        const FieldElem c1 = f.element(i);
        const FieldElem c2 = f.sub(f.one(), c1);
        if (f.is_zero(c1) || f.is_zero(c2)) continue;  // lambda(0) = 0
        const std::uint64_t e = (logs.at(i) % ell) * t_inv % ell;
        slots[e == 0 ? ell - 1 : e - 1] += legendre(f, c2);
    }
    return slots;
}

/// 1 + #{(x, y) : y^ell = x^2 + a x + b} over f, by a double loop.
inline std::uint64_t points_by_definition(const Field& f, unsigned ell, const FieldElem& a, const FieldElem& b) {
    std::map<Index, std::uint64_t> fiber;
    for (Index iy = 0; iy < f.order(); ++iy) ++fiber[f.index(f.pow(f.element(iy), ell))];
    std::uint64_t count = 1;
    for (Index ix = 0; ix < f.order(); ++ix) {
        const FieldElem x = f.element(ix);
        const FieldElem v = f.add(f.add(f.mul(x, x), f.mul(a, x)), b);
        auto it = fiber.find(f.index(v));
        if (it != fiber.end()) count += it->second;
    }
    return count;
}

/// Coefficients of prod (1 - alpha_i u) given through power sums is what the
/// library does; this instead multiplies out the zeta function numerator from
/// point counts via log L(u) = sum S_t u^t / t using exact rationals.
inline std::vector<mpz_class> lpoly_by_series(const std::vector<mpz_class>& S, unsigned degree) {
    // L = exp(P), P = sum S_t u^t / t; L' = P' L.
    std::vector<mpq_class> L(degree + 1, 0);
    L[0] = 1;
    for (unsigned n = 1; n <= degree; ++n) {
        mpq_class acc = 0;
        for (unsigned k = 1; k <= n && k <= S.size(); ++k) acc += mpq_class(S[k - 1]) * L[n - k];
        L[n] = acc / n;
    }
    std::vector<mpz_class> out;
    for (auto& c : L) {
        c.canonicalize();
        if (c.get_den() != 1) return {};
        out.push_back(c.get_num());
    }
    return out;
}

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(20240613);
    return gen;
}

inline FieldElem random_element(const Field& f) {
    std::uniform_int_distribution<Index> pick(0, f.order() - 1);
    return f.element(pick(rng()));
}

inline FieldElem random_unit(const Field& f) {
    std::uniform_int_distribution<Index> pick(1, f.order() - 1);
    FieldElem x = f.element(pick(rng()));
    while (f.is_zero(x)) x = f.element(pick(rng()));
    return x;
}

inline mpz_class power(std::uint64_t q, unsigned e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), q, e);
    return r;
}

}  // namespace support
