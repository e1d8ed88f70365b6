#include "hecl/gf.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <numeric>

#include "hecl/arith.hpp"
#include "hecl/error.hpp"

namespace hecl::gf {

struct Field::Private {};

namespace {

using Poly = std::vector<std::uint64_t>;

// Arithmetic in F_p[x]/(f) for a monic f of degree d, on length-d coefficient vectors.
class PolyRing {
public:
    PolyRing(std::uint64_t p, const std::vector<std::uint64_t>& f) : p_(p), d_(static_cast<unsigned>(f.size() - 1)), f_(f) {}

    unsigned degree() const { return d_; }

    Poly one() const {
        Poly r(d_, 0);
        r[0] = 1 % p_;
        return r;
    }

    Poly x() const {
        Poly r(d_, 0);
        if (d_ == 1) {
            r[0] = (p_ - f_[0]) % p_;
        } else {
            r[1] = 1;
        }
        return r;
    }

    Poly mul(const Poly& a, const Poly& b) const {
        std::vector<std::uint64_t> tmp(2 * d_ - 1, 0);
        for (unsigned i = 0; i < d_; ++i) {
            if (a[i] == 0) continue;
            for (unsigned j = 0; j < d_; ++j) {
                tmp[i + j] = (tmp[i + j] + a[i] * b[j]) % p_;
            }
        }
        for (unsigned k = 2 * d_ - 2; k >= d_; --k) {
            const std::uint64_t t = tmp[k];
            if (t == 0) continue;
            for (unsigned i = 0; i < d_; ++i) {
                tmp[k - d_ + i] = (tmp[k - d_ + i] + t * ((p_ - f_[i]) % p_)) % p_;
            }
        }
        tmp.resize(d_);
        return tmp;
    }

    Poly pow(Poly base, std::uint64_t e) const {
        Poly result = one();
        while (e) {
            if (e & 1) result = mul(result, base);
            e >>= 1;
            if (e) base = mul(base, base);
        }
        return result;
    }

    // In-place multiplication by x.
    void shift(Poly& c) const {
        const std::uint64_t top = c[d_ - 1];
        for (unsigned i = d_ - 1; i > 0; --i) c[i] = c[i - 1];
        c[0] = 0;
        if (top == 0) return;
        for (unsigned i = 0; i < d_; ++i) c[i] = (c[i] + top * ((p_ - f_[i]) % p_)) % p_;
    }

private:
    std::uint64_t p_;
    unsigned d_;
    std::vector<std::uint64_t> f_;
};

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo b over F_p; b must be nonzero after trimming.
Poly poly_rem(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    const std::uint64_t lead_inv = arith::inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint64_t factor = arith::mul_mod(a.back(), lead_inv, p);
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] = (a[shift + i] + p - arith::mul_mod(factor, b[i], p)) % p;
        }
        trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Rabin's test: f of degree d is irreducible iff x^(p^d) = x mod f and
// gcd(x^(p^(d/r)) - x, f) = 1 for every prime r | d.
bool is_irreducible(std::uint64_t p, const std::vector<std::uint64_t>& f) {
    const unsigned d = static_cast<unsigned>(f.size() - 1);
    if (d == 1) return true;
    PolyRing ring(p, f);
    auto frobenius_power = [&](unsigned k) {
        Poly y = ring.x();
        for (unsigned i = 0; i < k; ++i) y = ring.pow(y, p);
        return y;
    };
    Poly full = frobenius_power(d);
    if (full != ring.x()) return false;
    for (std::uint64_t r : arith::prime_factors(d)) {
        Poly y = frobenius_power(d / static_cast<unsigned>(r));
        y[1] = (y[1] + p - 1) % p;
        Poly g = poly_gcd(f, y, p);
        if (g.size() != 1) return false;
    }
    return true;
}

bool has_order(const PolyRing& ring, const Poly& x, std::uint64_t group_order, const std::vector<std::uint64_t>& primes) {
    if (ring.pow(x, group_order) != ring.one()) return false;
    for (std::uint64_t r : primes) {
        if (ring.pow(x, group_order / r) == ring.one()) return false;
    }
    return true;
}

Poly eval_in_ring(const PolyRing& ring, const std::vector<std::uint64_t>& poly, const Poly& at, std::uint64_t p) {
    Poly acc(ring.degree(), 0);
    for (std::size_t i = poly.size(); i-- > 0;) {
        acc = ring.mul(acc, at);
        acc[0] = (acc[0] + poly[i]) % p;
    }
    return acc;
}

std::uint64_t field_order_or_throw(std::uint64_t p, unsigned d) {
    auto order = arith::checked_pow(p, d);
    if (!order) raise(ErrorKind::FieldTooLarge, std::to_string(p) + "^" + std::to_string(d) + " does not fit in 63 bits");
    return *order;
}

std::mutex conway_mutex;
std::map<std::pair<std::uint64_t, unsigned>, std::vector<std::uint64_t>> conway_cache;

std::vector<std::uint64_t> search_conway(std::uint64_t p, unsigned d) {
    const std::uint64_t g = smallest_primitive_root(p);
    if (d == 1) return {(p - g) % p, 1};

    const std::uint64_t order = field_order_or_throw(p, d);
    const std::uint64_t units = order - 1;
    const auto primes = arith::prime_factors(units);

    struct SubfieldCheck {
        std::vector<std::uint64_t> poly;
        std::uint64_t exponent;
    };
    std::vector<SubfieldCheck> checks;
    for (std::uint64_t r : arith::prime_factors(d)) {
        const unsigned sub = d / static_cast<unsigned>(r);
        if (sub == 1) continue;  // enforced by the constant term below
        checks.push_back({conway_polynomial(p, sub), units / (*arith::checked_pow(p, sub) - 1)});
    }

    // Conway order: x^d - a_1 x^{d-1} + a_2 x^{d-2} - ... + (-1)^d a_d, least
    // (a_1, ..., a_d) first. Compatibility with F_p forces a_d = g.
    const std::uint64_t free_count = *arith::checked_pow(p, d - 1);
    std::vector<std::uint64_t> alpha(d + 1, 0);
    alpha[d] = g;
    for (std::uint64_t counter = 0; counter < free_count; ++counter) {
        std::uint64_t rest = counter;
        for (unsigned i = d - 1; i >= 1; --i) {
            alpha[i] = rest % p;
            rest /= p;
        }
        std::vector<std::uint64_t> f(d + 1, 0);
        f[d] = 1;
        for (unsigned i = 1; i <= d; ++i) f[d - i] = (i % 2 == 0) ? alpha[i] : (p - alpha[i]) % p;

        PolyRing ring(p, f);
        const Poly x = ring.x();
        if (!has_order(ring, x, units, primes)) continue;
        bool compatible = true;
        for (const auto& check : checks) {
            Poly y = ring.pow(x, check.exponent);
            Poly value = eval_in_ring(ring, check.poly, y, p);
            if (std::any_of(value.begin(), value.end(), [](std::uint64_t c) { return c != 0; })) {
                compatible = false;
                break;
            }
        }
        if (compatible) return f;
    }
    raise(ErrorKind::NotIrreducible, "no Conway polynomial found for " + std::to_string(p) + "^" + std::to_string(d));
}

}  // namespace

std::uint64_t smallest_primitive_root(std::uint64_t p) {
    if (p == 2) return 1;
    const auto primes = arith::prime_factors(p - 1);
    for (std::uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (std::uint64_t r : primes) {
            if (arith::pow_mod(g, (p - 1) / r, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    raise(ErrorKind::NotPrime, std::to_string(p) + " has no primitive root");
}

std::vector<std::uint64_t> conway_polynomial(std::uint64_t p, unsigned d) {
    {
        std::lock_guard lock(conway_mutex);
        auto it = conway_cache.find({p, d});
        if (it != conway_cache.end()) return it->second;
    }
    auto f = search_conway(p, d);
    std::lock_guard lock(conway_mutex);
    conway_cache.emplace(std::make_pair(p, d), f);
    return f;
}

Field::Field(Private, std::uint64_t p, unsigned d, std::vector<std::uint64_t> modulus, std::uint64_t table_limit)
    : p_(p), d_(d), order_(field_order_or_throw(p, d)), modulus_(std::move(modulus)), table_limit_(table_limit) {
    unit_primes_ = arith::prime_factors(order_ - 1);
}

std::string Field::name() const {
    return d_ == 1 ? "F_" + std::to_string(p_) : "F_" + std::to_string(p_) + "^" + std::to_string(d_);
}

FieldElem Field::zero() const { return FieldElem{std::vector<std::uint64_t>(d_, 0)}; }

FieldElem Field::one() const {
    FieldElem r = zero();
    r.coeffs[0] = 1;
    return r;
}

FieldElem Field::from_int(std::int64_t value) const {
    FieldElem r = zero();
    const auto p = static_cast<std::int64_t>(p_);
    std::int64_t v = value % p;
    if (v < 0) v += p;
    r.coeffs[0] = static_cast<std::uint64_t>(v);
    return r;
}

FieldElem Field::element(Index index) const {
    if (index >= order_) raise(ErrorKind::IndexOutOfRange, "element index " + std::to_string(index) + " outside " + name());
    FieldElem r = zero();
    for (unsigned i = 0; i < d_; ++i) {
        r.coeffs[i] = index % p_;
        index /= p_;
    }
    return r;
}

Index Field::index(const FieldElem& x) const {
    Index idx = 0;
    for (unsigned i = d_; i-- > 0;) idx = idx * p_ + x.coeffs[i];
    return idx;
}

void Field::validate(const FieldElem& x) const {
    if (x.coeffs.size() != d_) {
        raise(ErrorKind::InvalidArgument, "element has " + std::to_string(x.coeffs.size()) + " coefficients, " + name() +
                                              " needs " + std::to_string(d_));
    }
    for (std::uint64_t c : x.coeffs) {
        if (c >= p_) raise(ErrorKind::InvalidArgument, "coefficient " + std::to_string(c) + " is not reduced mod " + std::to_string(p_));
    }
}

bool Field::is_zero(const FieldElem& x) const {
    return std::all_of(x.coeffs.begin(), x.coeffs.end(), [](std::uint64_t c) { return c == 0; });
}

FieldElem Field::add(const FieldElem& x, const FieldElem& y) const {
    FieldElem r = zero();
    for (unsigned i = 0; i < d_; ++i) r.coeffs[i] = (x.coeffs[i] + y.coeffs[i]) % p_;
    return r;
}

FieldElem Field::sub(const FieldElem& x, const FieldElem& y) const {
    FieldElem r = zero();
    for (unsigned i = 0; i < d_; ++i) r.coeffs[i] = (x.coeffs[i] + p_ - y.coeffs[i]) % p_;
    return r;
}

FieldElem Field::neg(const FieldElem& x) const {
    FieldElem r = zero();
    for (unsigned i = 0; i < d_; ++i) r.coeffs[i] = (p_ - x.coeffs[i]) % p_;
    return r;
}

FieldElem Field::mul(const FieldElem& x, const FieldElem& y) const {
    return FieldElem{PolyRing(p_, modulus_).mul(x.coeffs, y.coeffs)};
}

FieldElem Field::scale(const FieldElem& x, std::uint64_t c) const {
    FieldElem r = zero();
    for (unsigned i = 0; i < d_; ++i) r.coeffs[i] = arith::mul_mod(x.coeffs[i], c % p_, p_);
    return r;
}

FieldElem Field::pow(const FieldElem& x, std::uint64_t e) const {
    return FieldElem{PolyRing(p_, modulus_).pow(x.coeffs, e)};
}

FieldElem Field::inv(const FieldElem& x) const {
    require_nonzero(x, "inverse");
    return pow(x, order_ - 2);
}

FieldElem Field::gen_pow(std::uint64_t k) const {
    k %= order_ - 1;
    if (has_tables()) return element(exp_[k]);
    return pow(gen_, k);
}

void Field::require_nonzero(const FieldElem& x, std::string_view op) const {
    if (is_zero(x)) raise(ErrorKind::ZeroElement, std::string(op) + " of zero in " + name());
}

std::uint64_t Field::dlog(const FieldElem& x) const {
    require_nonzero(x, "discrete log");
    if (has_tables()) return log_[index(x)];
    if (order_ > kBsgsLimit) raise(ErrorKind::FieldTooLarge, "no discrete log method for " + name());
    return bsgs(x);
}

std::uint64_t Field::bsgs(const FieldElem& x) const {
    const std::uint64_t units = order_ - 1;
    std::call_once(bsgs_once_, [&] {
        bsgs_stride_ = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(units))));
        baby_steps_.reserve(bsgs_stride_);
        FieldElem cur = one();
        for (std::uint64_t j = 0; j < bsgs_stride_; ++j) {
            baby_steps_.emplace(index(cur), j);
            cur = mul(cur, gen_);
        }
    });
    const FieldElem giant = pow(inv(gen_), bsgs_stride_);
    FieldElem y = x;
    for (std::uint64_t i = 0; i <= bsgs_stride_; ++i) {
        auto it = baby_steps_.find(index(y));
        if (it != baby_steps_.end()) return (i * bsgs_stride_ + it->second) % units;
        y = mul(y, giant);
    }
    raise(ErrorKind::InvalidArgument, "discrete log failed; generator is not primitive");
}

bool Field::is_square(const FieldElem& x) const {
    require_nonzero(x, "square test");
    if (has_tables()) return log_[index(x)] % 2 == 0;
    return pow(x, (order_ - 1) / 2) == one();
}

std::vector<std::uint64_t> Field::gen_minimal_polynomial() const {
    // prod_{i<d} (t - gen^{p^i}), coefficients in the field, result lies in F_p.
    std::vector<FieldElem> poly{one()};
    FieldElem conj = gen_;
    for (unsigned i = 0; i < d_; ++i) {
        std::vector<FieldElem> next(poly.size() + 1, zero());
        const FieldElem minus = neg(conj);
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] = add(next[k + 1], poly[k]);
            next[k] = add(next[k], mul(poly[k], minus));
        }
        poly = std::move(next);
        conj = pow(conj, p_);
    }
    std::vector<std::uint64_t> out;
    out.reserve(poly.size());
    for (const auto& c : poly) out.push_back(c.coeffs[0]);
    return out;
}

void Field::set_generator(std::optional<FieldElem> requested) {
    PolyRing ring(p_, modulus_);
    const std::uint64_t units = order_ - 1;
    auto primitive = [&](const Poly& x) { return has_order(ring, x, units, unit_primes_); };
    if (requested) {
        validate(*requested);
        if (!primitive(requested->coeffs)) {
            raise(ErrorKind::InvalidArgument, "requested generator " + format_element(*this, *requested) + " is not primitive in " + name());
        }
        gen_ = std::move(*requested);
        return;
    }
    if (d_ == 1) {
        gen_ = from_int(static_cast<std::int64_t>(smallest_primitive_root(p_)));
        return;
    }
    if (primitive(ring.x())) {
        gen_ = FieldElem{ring.x()};
        return;
    }
    for (Index idx = 2; idx < order_; ++idx) {
        FieldElem candidate = element(idx);
        if (primitive(candidate.coeffs)) {
            gen_ = std::move(candidate);
            return;
        }
    }
    raise(ErrorKind::NotIrreducible, "no generator found in " + name());
}

void Field::build_tables() {
    if (order_ > table_limit_ || order_ > (std::uint64_t{1} << 32)) return;
    const std::uint64_t units = order_ - 1;
    PolyRing ring(p_, modulus_);

    // Walk the powers of x when it is primitive (a cheap shift), else of gen.
    const bool walk_x = d_ > 1 && has_order(ring, ring.x(), units, unit_primes_);
    std::vector<std::uint32_t> walk_exp(units);
    Poly cur = ring.one();
    for (std::uint64_t k = 0; k < units; ++k) {
        walk_exp[k] = static_cast<std::uint32_t>(index(FieldElem{cur}));
        if (walk_x) {
            ring.shift(cur);
        } else {
            cur = ring.mul(cur, gen_.coeffs);
        }
    }
    log_.assign(order_, kLogZero);
    for (std::uint64_t k = 0; k < units; ++k) log_[walk_exp[k]] = static_cast<std::uint32_t>(k);
    if (walk_x) {
        const std::uint64_t s = log_[index(gen_)];
        const std::uint64_t s_inv = arith::inv_mod(s, units);
        for (Index idx = 1; idx < order_; ++idx) log_[idx] = static_cast<std::uint32_t>(arith::mul_mod(log_[idx], s_inv, units));
    }
    exp_.assign(units, 0);
    for (Index idx = 1; idx < order_; ++idx) exp_[log_[idx]] = static_cast<std::uint32_t>(idx);

    zech_.assign(units, kLogZero);
    for (std::uint64_t k = 0; k < units; ++k) {
        const Index idx = exp_[k];
        const Index plus_one = (idx % p_ == p_ - 1) ? idx - (p_ - 1) : idx + 1;
        zech_[k] = plus_one == 0 ? kLogZero : log_[plus_one];
    }
}

FieldPtr build_field(std::uint64_t p, unsigned d, std::optional<std::vector<std::uint64_t>> modulus, FieldOptions options) {
    if (p % 2 == 0 || !arith::is_prime(p)) raise(ErrorKind::NotPrime, std::to_string(p) + " is not an odd prime");
    if (p >= (std::uint64_t{1} << 31)) raise(ErrorKind::FieldTooLarge, "characteristic must be below 2^31");
    if (d == 0) raise(ErrorKind::InvalidArgument, "extension degree must be positive");
    field_order_or_throw(p, d);

    const bool canonical_modulus = !modulus.has_value();
    std::vector<std::uint64_t> f;
    if (modulus) {
        f = std::move(*modulus);
        if (f.size() != d + 1 || f.back() != 1) raise(ErrorKind::InvalidArgument, "modulus must be monic of degree " + std::to_string(d));
        for (auto c : f) {
            if (c >= p) raise(ErrorKind::InvalidArgument, "modulus coefficients must be reduced mod p");
        }
        if (!is_irreducible(p, f)) raise(ErrorKind::NotIrreducible, "modulus is reducible over F_" + std::to_string(p));
    } else if (d == 1) {
        f = {0, 1};
    } else {
        f = conway_polynomial(p, d);
    }

    const bool pinned = options.gen.has_value();
    auto field = std::make_shared<Field>(Field::Private{}, p, d, std::move(f), options.table_limit);
    field->set_generator(std::move(options.gen));
    if (canonical_modulus) {
        if (!pinned) {
            field->canonical_ = true;
        } else if (d == 1) {
            field->canonical_ = field->gen_.coeffs[0] == smallest_primitive_root(p);
        } else {
            field->canonical_ = field->gen_.coeffs == PolyRing(p, field->modulus_).x();
        }
    }
    field->build_tables();
    return field;
}

FieldPtr extension_field(const FieldPtr& base, unsigned m, FieldOptions options) {
    if (m == 0) raise(ErrorKind::InvalidArgument, "extension degree must be positive");
    const std::uint64_t p = base->characteristic();
    const unsigned total = base->degree() * m;
    if (m == 1 && !options.gen) return base;
    if (base->canonical() || options.gen) return build_field(p, total, std::nullopt, std::move(options));

    // The base has its own modulus or generator: keep the Conway modulus upstairs
    // but choose gen so that gen^((Q-1)/(q-1)) is a conjugate of the base generator.
    FieldOptions probe = options;
    probe.table_limit = 0;
    auto canonical = build_field(p, total, std::nullopt, probe);
    const std::uint64_t q = base->order();
    const std::uint64_t units = canonical->order() - 1;
    const std::uint64_t cofactor = units / (q - 1);
    const auto minpoly = base->gen_minimal_polynomial();
    const FieldElem step = canonical->pow(canonical->gen(), cofactor);
    FieldElem y = canonical->one();
    for (std::uint64_t k = 0; k < q - 1; ++k, y = canonical->mul(y, step)) {
        if (arith::gcd(k, q - 1) != 1) continue;
        FieldElem value = canonical->zero();
        for (std::size_t i = minpoly.size(); i-- > 0;) {
            value = canonical->add(canonical->mul(value, y), canonical->from_int(static_cast<std::int64_t>(minpoly[i])));
        }
        if (!canonical->is_zero(value)) continue;
        std::uint64_t s = k;
        while (arith::gcd(s, units) != 1) s += q - 1;
        options.gen = canonical->pow(canonical->gen(), s);
        return build_field(p, total, std::nullopt, std::move(options));
    }
    raise(ErrorKind::IncompatibleFields, "no embedding of " + base->name() + " found");
}

std::uint64_t dlog(const Field& field, const FieldElem& x) { return field.dlog(x); }

bool is_square(const Field& field, const FieldElem& x) { return field.is_square(x); }

namespace {

std::uint64_t embedding_cofactor(const Field& sub, const Field& super) {
    if (sub.characteristic() != super.characteristic() || super.degree() % sub.degree() != 0) {
        raise(ErrorKind::IncompatibleFields, sub.name() + " is not a subfield of " + super.name());
    }
    return (super.order() - 1) / (sub.order() - 1);
}

void require_compatible(const Field& sub, const Field& super) {
    if (!gens_compatible(sub, super)) {
        raise(ErrorKind::IncompatibleFields, "generators of " + sub.name() + " and " + super.name() + " are not compatible");
    }
}

}  // namespace

bool gens_compatible(const Field& sub, const Field& super) {
    const std::uint64_t cofactor = embedding_cofactor(sub, super);
    const FieldElem image = super.pow(super.gen(), cofactor);
    if (sub.degree() == 1) return image == super.from_int(static_cast<std::int64_t>(sub.gen().coeffs[0]));
    const auto minpoly = sub.gen_minimal_polynomial();
    FieldElem value = super.zero();
    for (std::size_t i = minpoly.size(); i-- > 0;) {
        value = super.add(super.mul(value, image), super.from_int(static_cast<std::int64_t>(minpoly[i])));
    }
    return super.is_zero(value);
}

FieldElem embed(const Field& sub, const Field& super, const FieldElem& x) {
    const std::uint64_t cofactor = embedding_cofactor(sub, super);
    sub.validate(x);
    require_compatible(sub, super);
    if (sub.is_zero(x)) return super.zero();
    return super.gen_pow(sub.dlog(x) * cofactor);
}

FieldElem norm(const Field& super, const Field& sub, const FieldElem& x) {
    embedding_cofactor(sub, super);
    super.validate(x);
    require_compatible(sub, super);
    const std::uint64_t k = super.dlog(x);
    return sub.gen_pow(k % (sub.order() - 1));
}

namespace {

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

template <typename Int>
Int parse_int(std::string_view s, std::string_view what) {
    s = strip(s);
    Int value{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        raise(ErrorKind::InvalidArgument, "cannot parse " + std::string(what) + " '" + std::string(s) + "'");
    }
    return value;
}

}  // namespace

FieldElem parse_element(const Field& field, std::string_view text) {
    text = strip(text);
    if (text == "g") return field.gen();
    if (text.starts_with("g^")) {
        const auto k = parse_int<std::uint64_t>(text.substr(2), "exponent");
        return field.gen_pow(k);
    }
    if (text.starts_with("[")) {
        if (!text.ends_with("]")) raise(ErrorKind::InvalidArgument, "unterminated coefficient list '" + std::string(text) + "'");
        std::string_view body = text.substr(1, text.size() - 2);
        FieldElem r = field.zero();
        std::size_t i = 0;
        while (!strip(body).empty()) {
            const auto comma = body.find(',');
            const auto piece = body.substr(0, comma);
            if (i >= field.degree()) raise(ErrorKind::InvalidArgument, "too many coefficients for " + field.name());
            const auto c = parse_int<std::int64_t>(piece, "coefficient");
            const auto p = static_cast<std::int64_t>(field.characteristic());
            r.coeffs[i++] = static_cast<std::uint64_t>(((c % p) + p) % p);
            if (comma == std::string_view::npos) break;
            body.remove_prefix(comma + 1);
        }
        return r;
    }
    return field.from_int(parse_int<std::int64_t>(text, "element"));
}

std::string format_element(const Field& field, const FieldElem& x) {
    if (field.degree() == 1) return std::to_string(x.coeffs.at(0));
    std::string out = "[";
    for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(x.coeffs[i]);
    }
    return out + "]";
}

std::pair<std::uint64_t, unsigned> parse_field_size(std::string_view text) {
    text = strip(text);
    const auto caret = text.find('^');
    if (caret == std::string_view::npos) return {parse_int<std::uint64_t>(text, "field size"), 1};
    return {parse_int<std::uint64_t>(text.substr(0, caret), "characteristic"), parse_int<unsigned>(text.substr(caret + 1), "degree")};
}

}  // namespace hecl::gf
