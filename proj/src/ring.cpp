#include "pseries/ring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace pseries {

namespace {

constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 62;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kMaxOrder / a) throw std::overflow_error("ring order too large");
    return a * b;
}

std::uint64_t ipow(std::uint64_t base, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) r = checked_mul(r, base);
    return r;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

// Polynomials over F_p, constant term first.
using Poly = std::vector<std::uint64_t>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint64_t inv_mod_prime(std::uint64_t a, std::uint64_t p) {
    std::uint64_t r = 1, e = p - 2;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

// Remainder of f modulo g over F_p (g nonzero).
Poly poly_rem(Poly f, const Poly& g, std::uint64_t p) {
    trim(f);
    const std::uint64_t lead_inv = inv_mod_prime(g.back(), p);
    while (f.size() >= g.size()) {
        const std::uint64_t c = mulmod(f.back(), lead_inv, p);
        const std::size_t shift = f.size() - g.size();
        for (std::size_t i = 0; i < g.size(); ++i) {
            f[shift + i] = (f[shift + i] + p - mulmod(c, g[i], p)) % p;
        }
        trim(f);
    }
    return f;
}

bool is_irreducible(const Poly& f, std::uint64_t p) {
    const std::size_t deg = f.size() - 1;
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        // every monic polynomial of degree d
        Poly g(d + 1, 0);
        g[d] = 1;
        const std::uint64_t count = ipow(p, static_cast<unsigned>(d));
        for (std::uint64_t code = 0; code < count; ++code) {
            std::uint64_t c = code;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = c % p;
                c /= p;
            }
            if (poly_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::uint32_t fnv1a(std::string_view s) {
    std::uint32_t h = 2166136261u;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 16777619u;
    }
    return h;
}

}  // namespace

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// LocalRingSpec

LocalRingSpec LocalRingSpec::integers_mod(std::uint64_t p, unsigned k) {
    if (!is_prime(p)) throw std::invalid_argument("Z/p^k needs a prime p, got " + std::to_string(p));
    if (k < 1) throw std::invalid_argument("Z/p^k needs k >= 1");
    LocalRingSpec r;
    r.kind_ = Kind::IntegersMod;
    r.p_ = p;
    r.k_ = k;
    r.q_ = ipow(p, k);
    return r;
}

LocalRingSpec LocalRingSpec::galois_field(std::uint64_t p, unsigned k) {
    if (!is_prime(p)) throw std::invalid_argument("GF(p,k) needs a prime p, got " + std::to_string(p));
    if (k < 1) throw std::invalid_argument("GF(p,k) needs k >= 1");
    LocalRingSpec r;
    r.kind_ = Kind::GaloisField;
    r.p_ = p;
    r.k_ = k;
    r.q_ = ipow(p, k);
    // Lexicographic with the constant term most significant: the constant
    // term is the slowest-varying digit.
    Poly f(k + 1, 0);
    f[k] = 1;
    const std::uint64_t count = r.q_;
    for (std::uint64_t code = 0; code < count; ++code) {
        std::uint64_t c = code;
        for (unsigned i = k; i-- > 0;) {
            f[i] = c % p;
            c /= p;
        }
        if (is_irreducible(f, p)) {
            r.modulus_ = f;
            return r;
        }
    }
    throw std::logic_error("no irreducible polynomial found");
}

std::uint64_t LocalRingSpec::unit_count() const noexcept {
    if (kind_ == Kind::GaloisField) return q_ - 1;
    return q_ - q_ / p_;
}

std::uint64_t LocalRingSpec::unit_exponent() const noexcept {
    if (kind_ == Kind::GaloisField) return q_ - 1;
    if (p_ == 2) {
        if (k_ == 1) return 1;
        if (k_ == 2) return 2;
        return q_ / 4;
    }
    return q_ - q_ / p_;
}

std::vector<std::uint64_t> LocalRingSpec::digits(std::uint64_t a) const {
    std::vector<std::uint64_t> d(k_);
    for (unsigned i = 0; i < k_; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

std::uint64_t LocalRingSpec::from_digits(std::span<const std::uint64_t> d) const {
    std::uint64_t a = 0;
    for (std::size_t i = d.size(); i-- > 0;) a = a * p_ + d[i];
    return a;
}

std::uint64_t LocalRingSpec::add(std::uint64_t a, std::uint64_t b) const {
    if (kind_ == Kind::IntegersMod) return (a + b) % q_;
    auto da = digits(a), db = digits(b);
    for (unsigned i = 0; i < k_; ++i) da[i] = (da[i] + db[i]) % p_;
    return from_digits(da);
}

std::uint64_t LocalRingSpec::neg(std::uint64_t a) const {
    if (kind_ == Kind::IntegersMod) return (q_ - a) % q_;
    auto da = digits(a);
    for (auto& x : da) x = (p_ - x) % p_;
    return from_digits(da);
}

std::uint64_t LocalRingSpec::sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

std::uint64_t LocalRingSpec::mul(std::uint64_t a, std::uint64_t b) const {
    if (kind_ == Kind::IntegersMod) return mulmod(a, b, q_);
    const auto da = digits(a), db = digits(b);
    Poly prod(2 * k_ - 1, 0);
    for (unsigned i = 0; i < k_; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < k_; ++j) {
            prod[i + j] = (prod[i + j] + mulmod(da[i], db[j], p_)) % p_;
        }
    }
    Poly r = poly_rem(std::move(prod), modulus_, p_);
    r.resize(k_, 0);
    return from_digits(r);
}

bool LocalRingSpec::is_unit(std::uint64_t a) const {
    if (kind_ == Kind::IntegersMod) return a % p_ != 0;
    return a != 0;
}

std::optional<std::uint64_t> LocalRingSpec::inverse(std::uint64_t a) const {
    if (!is_unit(a)) return std::nullopt;
    if (kind_ == Kind::IntegersMod) {
        // extended Euclid on (a, q)
        __int128 r0 = static_cast<__int128>(q_), r1 = a, s0 = 0, s1 = 1;
        while (r1 != 0) {
            const __int128 t = r0 / r1;
            r0 -= t * r1;
            std::swap(r0, r1);
            s0 -= t * s1;
            std::swap(s0, s1);
        }
        __int128 s = s0 % static_cast<__int128>(q_);
        if (s < 0) s += q_;
        return static_cast<std::uint64_t>(s);
    }
    // a^(q-2) in the multiplicative group of the field
    std::uint64_t r = 1, base = a, e = q_ - 2;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

LocalRingSpec LocalRingSpec::residue_field() const {
    if (kind_ == Kind::GaloisField) return *this;
    return galois_field(p_, 1);
}

std::uint64_t LocalRingSpec::reduce(std::uint64_t a) const {
    if (kind_ == Kind::GaloisField) return a;
    return a % p_;
}

std::string LocalRingSpec::to_string() const {
    if (kind_ == Kind::IntegersMod) return "Z/" + std::to_string(q_);
    return "GF(" + std::to_string(p_) + "," + std::to_string(k_) + ")";
}

std::string LocalRingSpec::element_to_string(std::uint64_t a) const {
    if (kind_ == Kind::IntegersMod || k_ == 1) return std::to_string(a);
    const auto d = digits(a);
    std::string out;
    for (unsigned i = k_; i-- > 0;) {
        if (d[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0 || d[i] != 1) out += std::to_string(d[i]);
        if (i >= 1) out += "x";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// RingSpec

RingSpec::RingSpec(std::vector<LocalRingSpec> locals) : locals_(std::move(locals)) {
    if (locals_.empty()) throw std::invalid_argument("a ring needs at least one local factor");
    stride_.assign(locals_.size(), 1);
    order_ = 1;
    for (std::size_t j = locals_.size(); j-- > 0;) {
        stride_[j] = order_;
        order_ = checked_mul(order_, locals_[j].order());
    }
    fingerprint_ = fnv1a(canonical());
}

std::uint64_t RingSpec::unit_count() const noexcept {
    std::uint64_t c = 1;
    for (const auto& l : locals_) c *= l.unit_count();
    return c;
}

std::uint64_t RingSpec::unit_exponent() const noexcept {
    std::uint64_t e = 1;
    for (const auto& l : locals_) e = std::lcm(e, l.unit_exponent());
    return e;
}

void RingSpec::check(RingElem a) const {
    if (a.ring != fingerprint_) throw RingMismatch("element belongs to a different ring than " + canonical());
    if (a.code >= order_) throw std::out_of_range("element code out of range");
}

RingElem RingSpec::make(std::span<const std::uint64_t> components) const {
    if (components.size() != locals_.size()) throw std::invalid_argument("wrong number of components");
    std::uint64_t code = 0;
    for (std::size_t j = 0; j < locals_.size(); ++j) {
        if (components[j] >= locals_[j].order()) throw std::out_of_range("component out of range");
        code += components[j] * stride_[j];
    }
    return RingElem{code, fingerprint_};
}

RingElem RingSpec::from_code(std::uint64_t code) const {
    if (code >= order_) throw std::out_of_range("element code out of range");
    return RingElem{code, fingerprint_};
}

std::uint64_t RingSpec::component(RingElem a, std::size_t j) const {
    return (a.code / stride_[j]) % locals_[j].order();
}

std::vector<std::uint64_t> RingSpec::components(RingElem a) const {
    std::vector<std::uint64_t> c(locals_.size());
    for (std::size_t j = 0; j < locals_.size(); ++j) c[j] = component(a, j);
    return c;
}

RingElem RingSpec::one() const {
    std::vector<std::uint64_t> c(locals_.size(), 1);
    return make(c);
}

RingElem RingSpec::add(RingElem a, RingElem b) const {
    check(a);
    check(b);
    std::uint64_t code = 0;
    for (std::size_t j = 0; j < locals_.size(); ++j) {
        code += locals_[j].add(component(a, j), component(b, j)) * stride_[j];
    }
    return RingElem{code, fingerprint_};
}

RingElem RingSpec::neg(RingElem a) const {
    check(a);
    std::uint64_t code = 0;
    for (std::size_t j = 0; j < locals_.size(); ++j) code += locals_[j].neg(component(a, j)) * stride_[j];
    return RingElem{code, fingerprint_};
}

RingElem RingSpec::sub(RingElem a, RingElem b) const { return add(a, neg(b)); }

RingElem RingSpec::mul(RingElem a, RingElem b) const {
    check(a);
    check(b);
    std::uint64_t code = 0;
    for (std::size_t j = 0; j < locals_.size(); ++j) {
        code += locals_[j].mul(component(a, j), component(b, j)) * stride_[j];
    }
    return RingElem{code, fingerprint_};
}

bool RingSpec::is_unit(RingElem a) const {
    check(a);
    for (std::size_t j = 0; j < locals_.size(); ++j) {
        if (!locals_[j].is_unit(component(a, j))) return false;
    }
    return true;
}

std::optional<RingElem> RingSpec::inverse(RingElem a) const {
    check(a);
    std::uint64_t code = 0;
    for (std::size_t j = 0; j < locals_.size(); ++j) {
        auto inv = locals_[j].inverse(component(a, j));
        if (!inv) return std::nullopt;
        code += *inv * stride_[j];
    }
    return RingElem{code, fingerprint_};
}

std::vector<RingElem> RingSpec::elements() const {
    std::vector<RingElem> out;
    out.reserve(order_);
    for (std::uint64_t c = 0; c < order_; ++c) out.push_back(RingElem{c, fingerprint_});
    return out;
}

std::string RingSpec::canonical() const {
    std::string s;
    for (std::size_t j = 0; j < locals_.size(); ++j) {
        if (j) s += " x ";
        s += locals_[j].to_string();
    }
    return s;
}

std::string RingSpec::element_to_string(RingElem a) const {
    check(a);
    if (locals_.size() == 1) return locals_[0].element_to_string(a.code);
    std::string s = "(";
    for (std::size_t j = 0; j < locals_.size(); ++j) {
        if (j) s += ",";
        s += locals_[j].element_to_string(component(a, j));
    }
    return s + ")";
}

RingElem ring_arith(const RingSpec& ring, RingElem a, RingElem b, RingOp op) {
    switch (op) {
        case RingOp::Add: return ring.add(a, b);
        case RingOp::Mul: return ring.mul(a, b);
        case RingOp::Neg: return ring.neg(a);
    }
    throw std::invalid_argument("unknown ring op");
}

std::vector<UnitEntry> units(const RingSpec& ring) {
    std::vector<UnitEntry> out;
    for (const RingElem a : ring.elements()) {
        if (auto inv = ring.inverse(a)) out.push_back({a, *inv});
    }
    return out;
}

ResidueData residue_structure(const RingSpec& ring) {
    ResidueData data;
    for (const auto& local : ring.locals()) {
        LocalResidueData f{.maximal_ideal = {}, .residue_field = local.residue_field(), .reduction = {}};
        const std::uint64_t q = local.order();
        f.reduction.resize(q);
        for (std::uint64_t a = 0; a < q; ++a) {
            f.reduction[a] = local.reduce(a);
            if (f.reduction[a] == 0) f.maximal_ideal.push_back(a);
        }
        const auto& k = f.residue_field;
        std::vector<bool> hit(k.order(), false);
        for (std::uint64_t a = 0; a < q; ++a) {
            hit[f.reduction[a]] = true;
            for (std::uint64_t b = 0; b < q; ++b) {
                if (f.reduction[local.add(a, b)] != k.add(f.reduction[a], f.reduction[b]) ||
                    f.reduction[local.mul(a, b)] != k.mul(f.reduction[a], f.reduction[b])) {
                    throw std::logic_error("reduction of " + local.to_string() + " is not a homomorphism");
                }
            }
        }
        if (!std::all_of(hit.begin(), hit.end(), [](bool h) { return h; })) {
            throw std::logic_error("reduction of " + local.to_string() + " is not surjective");
        }
        for (std::uint64_t a : f.maximal_ideal) {
            if (local.is_unit(a)) throw std::logic_error("maximal ideal contains a unit");
        }
        data.factors.push_back(std::move(f));
    }
    return data;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class SpecParser {
public:
    explicit SpecParser(std::string_view text) : text_(text) {}

    RingSpec parse() {
        std::vector<LocalRingSpec> locals;
        skip_ws();
        parse_local(locals);
        skip_ws();
        while (pos_ < text_.size()) {
            if (text_[pos_] != 'x') fail("expected 'x' between factors");
            ++pos_;
            skip_ws();
            parse_local(locals);
            skip_ws();
        }
        return RingSpec(std::move(locals));
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(std::string_view token) {
        if (text_.substr(pos_, token.size()) != token) fail("expected '" + std::string(token) + "'");
        pos_ += token.size();
    }

    std::uint64_t number() {
        skip_ws();
        const std::size_t start = pos_;
        std::uint64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            const std::uint64_t d = static_cast<std::uint64_t>(text_[pos_] - '0');
            if (v > (kMaxOrder - d) / 10) {
                pos_ = start;
                fail("number too large");
            }
            v = v * 10 + d;
            ++pos_;
        }
        if (pos_ == start) fail("expected a number");
        return v;
    }

    void parse_local(std::vector<LocalRingSpec>& out) {
        const std::size_t start = pos_;
        if (text_.substr(pos_, 2) == "Z/") {
            pos_ += 2;
            const std::size_t num_pos = pos_;
            const std::uint64_t n = number();
            if (n < 2) {
                pos_ = num_pos;
                fail("Z/N needs N >= 2");
            }
            std::uint64_t rest = n;
            for (std::uint64_t p = 2; p * p <= rest; ++p) {
                unsigned k = 0;
                while (rest % p == 0) {
                    rest /= p;
                    ++k;
                }
                if (k) out.push_back(LocalRingSpec::integers_mod(p, k));
            }
            if (rest > 1) out.push_back(LocalRingSpec::integers_mod(rest, 1));
            return;
        }
        if (text_.substr(pos_, 3) == "GF(") {
            pos_ += 3;
            const std::size_t p_pos = pos_;
            const std::uint64_t p = number();
            skip_ws();
            expect(",");
            const std::size_t k_pos = pos_;
            const std::uint64_t k = number();
            skip_ws();
            expect(")");
            if (!is_prime(p)) {
                pos_ = p_pos;
                fail("GF(p,k) needs a prime p");
            }
            if (k < 1 || k > 62) {
                pos_ = k_pos;
                fail("GF(p,k) needs 1 <= k");
            }
            try {
                out.push_back(LocalRingSpec::galois_field(p, static_cast<unsigned>(k)));
            } catch (const std::overflow_error&) {
                pos_ = start;
                fail("field too large");
            }
            return;
        }
        fail("expected 'Z/' or 'GF('");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

RingSpec parse_ring_spec(std::string_view text) { return SpecParser(text).parse(); }

}  // namespace pseries
