#pragma once

// Finite fields F_{p^d} for odd p, with a fixed multiplicative generator.
//
// Elements are little-endian coefficient vectors modulo the field's monic
// modulus. Each element also has a packed integer Index = sum c_i p^i, which
// is what the log/antilog tables and the hot enumeration loops work with.

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hecl::gf {

using Index = std::uint64_t;

inline constexpr std::uint64_t kDefaultTableLimit = std::uint64_t{1} << 24;
inline constexpr std::uint64_t kBsgsLimit = std::uint64_t{1} << 40;
inline constexpr std::uint32_t kLogZero = 0xFFFFFFFFu;

struct FieldElem {
    std::vector<std::uint64_t> coeffs;

    friend bool operator==(const FieldElem&, const FieldElem&) = default;
};

struct FieldOptions {
    /// Log, antilog and Zech tables are built when the order is at most this.
    std::uint64_t table_limit = kDefaultTableLimit;
    /// Pins the generator instead of the canonical one.
    std::optional<FieldElem> gen;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
public:
    struct Private;
    Field(Private, std::uint64_t p, unsigned d, std::vector<std::uint64_t> modulus, std::uint64_t table_limit);

    std::uint64_t characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return d_; }
    std::uint64_t order() const noexcept { return order_; }
    /// Coefficients c_0..c_d of the monic modulus (length d + 1).
    const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }
    const FieldElem& gen() const noexcept { return gen_; }
    /// True when the modulus is the Conway polynomial and gen is its root (or the
    /// least primitive root for prime fields).
    bool canonical() const noexcept { return canonical_; }
    bool has_tables() const noexcept { return !exp_.empty(); }
    std::string name() const;

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem from_int(std::int64_t value) const;
    FieldElem element(Index index) const;
    Index index(const FieldElem& x) const;
    /// Throws InvalidArgument unless x has d residues in [0, p).
    void validate(const FieldElem& x) const;
    bool is_zero(const FieldElem& x) const;

    FieldElem add(const FieldElem& x, const FieldElem& y) const;
    FieldElem sub(const FieldElem& x, const FieldElem& y) const;
    FieldElem neg(const FieldElem& x) const;
    FieldElem mul(const FieldElem& x, const FieldElem& y) const;
    FieldElem scale(const FieldElem& x, std::uint64_t c) const;
    FieldElem inv(const FieldElem& x) const;
    FieldElem pow(const FieldElem& x, std::uint64_t e) const;
    /// gen^(k mod (order - 1)).
    FieldElem gen_pow(std::uint64_t k) const;

    /// Exponent k in [0, order - 2] with gen^k = x. Table lookup up to the table
    /// limit, baby-step/giant-step up to 2^40.
    std::uint64_t dlog(const FieldElem& x) const;
    bool is_square(const FieldElem& x) const;

    // Table fast path; all of these require has_tables().
    std::uint32_t log_of(Index index) const { return log_[index]; }
    Index exp_of(std::uint64_t k) const { return exp_[k]; }
    /// log(1 + gen^k), or kLogZero when 1 + gen^k = 0.
    std::uint32_t zech(std::uint64_t k) const { return zech_[k]; }
    std::span<const std::uint32_t> log_table() const { return log_; }
    std::span<const std::uint32_t> zech_table() const { return zech_; }

    /// Minimal polynomial of gen over F_p (coefficients c_0..c_d).
    std::vector<std::uint64_t> gen_minimal_polynomial() const;

private:
    friend FieldPtr build_field(std::uint64_t, unsigned, std::optional<std::vector<std::uint64_t>>, FieldOptions);
    friend FieldPtr extension_field(const FieldPtr&, unsigned, FieldOptions);

    void set_generator(std::optional<FieldElem> requested);
    void build_tables();
    void require_nonzero(const FieldElem& x, std::string_view op) const;
    std::uint64_t bsgs(const FieldElem& x) const;

    std::uint64_t p_;
    unsigned d_;
    std::uint64_t order_;
    std::vector<std::uint64_t> modulus_;
    std::uint64_t table_limit_;
    FieldElem gen_;
    bool canonical_ = false;
    std::vector<std::uint64_t> unit_primes_;

    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> zech_;

    mutable std::once_flag bsgs_once_;
    mutable std::unordered_map<Index, std::uint64_t> baby_steps_;
    mutable std::uint64_t bsgs_stride_ = 0;
};

/// Builds F_{p^d}. Without a modulus the Conway polynomial is used and gen is
/// the class of x (the least primitive root when d = 1).
FieldPtr build_field(std::uint64_t p, unsigned d, std::optional<std::vector<std::uint64_t>> modulus = std::nullopt,
                     FieldOptions options = {});

/// F_{q^m} containing base = F_q, with a generator chosen so that `embed`
/// from base is a field homomorphism.
FieldPtr extension_field(const FieldPtr& base, unsigned m, FieldOptions options = {});

/// Conway polynomial C_{p,d}, coefficients c_0..c_d. Cached per (p, d).
std::vector<std::uint64_t> conway_polynomial(std::uint64_t p, unsigned d);

std::uint64_t smallest_primitive_root(std::uint64_t p);

std::uint64_t dlog(const Field& field, const FieldElem& x);
bool is_square(const Field& field, const FieldElem& x);

/// True when gen_super^((Q-1)/(q-1)) is a conjugate of gen_sub, i.e. the map
/// gen_sub^k -> gen_super^(k(Q-1)/(q-1)) respects addition.
bool gens_compatible(const Field& sub, const Field& super);

/// gen_sub^k -> gen_super^(k(Q-1)/(q-1)); 0 -> 0.
FieldElem embed(const Field& sub, const Field& super, const FieldElem& x);

/// x^((Q-1)/(q-1)), returned as an element of sub.
FieldElem norm(const Field& super, const Field& sub, const FieldElem& x);

/// Element grammar: decimal residue (embedded from F_p), `g^k` (power of gen),
/// or a coefficient list `[c0,c1,...]`.
FieldElem parse_element(const Field& field, std::string_view text);
/// Decimal residue for prime fields, `[c0,...,c_{d-1}]` otherwise.
std::string format_element(const Field& field, const FieldElem& x);

/// Parses `p` or `p^e` into (p, e).
std::pair<std::uint64_t, unsigned> parse_field_size(std::string_view text);

}  // namespace hecl::gf
