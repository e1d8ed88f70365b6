#include "hecl/arith.hpp"

#include <algorithm>
#include <numeric>

#include "hecl/error.hpp"

namespace hecl::arith {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0) return n == small;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set is deterministic below 3.3e24.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

std::uint64_t pollard_rho(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        auto f = [&](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
        std::uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    for (std::uint64_t p = 2; p < 1000 && p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
            factor_into(n, out);
            return;
        }
    }
    std::uint64_t d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    factor_into(n, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t p, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (r > (std::uint64_t{1} << 63) / p) return std::nullopt;
        r *= p;
    }
    return r;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
    __int128 t = 0, new_t = 1;
    __int128 r = m, new_r = a % m;
    while (new_r != 0) {
        __int128 quotient = r / new_r;
        t -= quotient * new_t;
        std::swap(t, new_t);
        r -= quotient * new_r;
        std::swap(r, new_r);
    }
    if (r != 1) raise(ErrorKind::InvalidArgument, "value is not invertible modulo " + std::to_string(m));
    if (t < 0) t += m;
    return static_cast<std::uint64_t>(t);
}

}  // namespace hecl::arith
