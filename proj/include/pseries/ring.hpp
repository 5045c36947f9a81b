#pragma once

// Finite commutative rings presented as products of local rings Z/p^k and
// GF(p,k). Elements are stored as a single mixed-radix code (first factor
// most significant), so element tables stay compact and ordering is
// lexicographic on the component tuple.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pseries {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Raised when operands of a ring operation come from different rings.
class RingMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

bool is_prime(std::uint64_t p);

/// A local factor: either Z/p^k or GF(p,k) = F_p[x]/(f) with f monic irreducible.
class LocalRingSpec {
public:
    enum class Kind { IntegersMod, GaloisField };

    static LocalRingSpec integers_mod(std::uint64_t p, unsigned k);
    /// Uses the lexicographically smallest monic irreducible of degree k
    /// (coefficients compared from the constant term upwards).
    static LocalRingSpec galois_field(std::uint64_t p, unsigned k);

    Kind kind() const noexcept { return kind_; }
    std::uint64_t prime() const noexcept { return p_; }
    unsigned exponent_k() const noexcept { return k_; }
    /// Monic modulus, constant term first, length k+1. Empty for Z/p^k.
    const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }

    std::uint64_t order() const noexcept { return q_; }
    std::uint64_t unit_count() const noexcept;
    /// Exponent of the unit group (lcm of element orders).
    std::uint64_t unit_exponent() const noexcept;
    bool is_field() const noexcept { return kind_ == Kind::GaloisField || k_ == 1; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t one() const noexcept { return 1; }
    bool is_unit(std::uint64_t a) const;
    std::optional<std::uint64_t> inverse(std::uint64_t a) const;

    /// Residue field R/m; Z/p^k reduces to GF(p,1), GF(p,k) to itself.
    LocalRingSpec residue_field() const;
    /// Image of a in the residue field (code in residue_field()).
    std::uint64_t reduce(std::uint64_t a) const;
    bool in_maximal_ideal(std::uint64_t a) const { return reduce(a) == 0; }

    /// "Z/9" or "GF(2,2)".
    std::string to_string() const;
    std::string element_to_string(std::uint64_t a) const;

    friend bool operator==(const LocalRingSpec&, const LocalRingSpec&) = default;

private:
    LocalRingSpec() = default;

    std::vector<std::uint64_t> digits(std::uint64_t a) const;
    std::uint64_t from_digits(std::span<const std::uint64_t> d) const;

    Kind kind_ = Kind::IntegersMod;
    std::uint64_t p_ = 2;
    unsigned k_ = 1;
    std::uint64_t q_ = 2;
    std::vector<std::uint64_t> modulus_;
};

struct RingElem {
    std::uint64_t code = 0;
    std::uint32_t ring = 0;  // fingerprint of the owning RingSpec

    friend bool operator==(const RingElem&, const RingElem&) = default;
    friend auto operator<=>(const RingElem&, const RingElem&) = default;
};

enum class RingOp { Add, Mul, Neg };

class RingSpec {
public:
    explicit RingSpec(std::vector<LocalRingSpec> locals);

    std::span<const LocalRingSpec> locals() const noexcept { return locals_; }
    std::size_t factor_count() const noexcept { return locals_.size(); }
    const LocalRingSpec& local(std::size_t j) const { return locals_.at(j); }

    std::uint64_t order() const noexcept { return order_; }
    std::uint64_t unit_count() const noexcept;
    std::uint64_t unit_exponent() const noexcept;
    std::uint32_t fingerprint() const noexcept { return fingerprint_; }

    RingElem make(std::span<const std::uint64_t> components) const;
    RingElem from_code(std::uint64_t code) const;
    std::uint64_t component(RingElem a, std::size_t j) const;
    std::vector<std::uint64_t> components(RingElem a) const;

    RingElem zero() const { return from_code(0); }
    RingElem one() const;

    RingElem add(RingElem a, RingElem b) const;
    RingElem sub(RingElem a, RingElem b) const;
    RingElem neg(RingElem a) const;
    RingElem mul(RingElem a, RingElem b) const;
    bool is_unit(RingElem a) const;
    std::optional<RingElem> inverse(RingElem a) const;

    /// All elements in code order.
    std::vector<RingElem> elements() const;

    /// Canonical form, e.g. "Z/2 x Z/3"; used as a report key.
    std::string canonical() const;
    std::string element_to_string(RingElem a) const;

    friend bool operator==(const RingSpec& a, const RingSpec& b) { return a.locals_ == b.locals_; }

private:
    void check(RingElem a) const;

    std::vector<LocalRingSpec> locals_;
    std::vector<std::uint64_t> stride_;
    std::uint64_t order_ = 1;
    std::uint32_t fingerprint_ = 0;
};

/// Parses `local ("x" local)*` with `local := "Z/" N | "GF(" p "," k ")"`.
/// Z/N is split into prime-power factors in increasing prime order.
RingSpec parse_ring_spec(std::string_view text);

RingElem ring_arith(const RingSpec& ring, RingElem a, RingElem b, RingOp op);

struct UnitEntry {
    RingElem value;
    RingElem inverse;
};

/// Every invertible element with its inverse, in code order.
std::vector<UnitEntry> units(const RingSpec& ring);

struct LocalResidueData {
    std::vector<std::uint64_t> maximal_ideal;  // codes in the local ring
    LocalRingSpec residue_field;
    std::vector<std::uint64_t> reduction;  // reduction[a] = image code
};

struct ResidueData {
    std::vector<LocalResidueData> factors;
};

/// Builds the reduction tables and checks that each is a surjective ring
/// homomorphism with kernel the maximal ideal; throws std::logic_error otherwise.
ResidueData residue_structure(const RingSpec& ring);

}  // namespace pseries
