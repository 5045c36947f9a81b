#pragma once

// Characters of R^x and of the diagonal torus L = (R^x)^n, the Weyl group
// action on them, and the partition counting that goes with it.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pseries/cyclo.hpp"
#include "pseries/matgroup.hpp"
#include "pseries/ring.hpp"

namespace pseries {

class NotAbelian : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// H = C_{d_1} x ... x C_{d_s} with d_1 >= d_2 >= ... (each d_i > 1).
struct AbelianStructure {
    std::vector<std::uint64_t> orders;
    std::vector<std::size_t> generators;             // element indices
    std::vector<std::vector<std::uint64_t>> logs;    // logs[x] = exponent vector of x

    std::uint64_t order() const;
    std::uint64_t exponent() const;
};

/// Decomposes the abelian group {0..size-1} with the given product;
/// `identity` is the neutral index. Throws NotAbelian on non-commuting pairs.
AbelianStructure abelian_decompose(std::size_t size, std::size_t identity,
                                   const std::function<std::size_t(std::size_t, std::size_t)>& mul);

/// A character of one local unit group: exponents against the generators.
struct UnitChar {
    std::vector<std::uint64_t> exps;

    bool is_trivial() const;
    /// "[1]" or "[0 2]"; "[]" for the trivial group.
    std::string to_string() const;

    friend bool operator==(const UnitChar&, const UnitChar&) = default;
    friend auto operator<=>(const UnitChar&, const UnitChar&) = default;
};

/// A character of L: parts[j][i] is the character of the i-th diagonal entry
/// in local factor j.
struct LeviChar {
    std::vector<std::vector<UnitChar>> parts;

    /// "[0][1]x[][]": factors joined by "x", positions concatenated.
    std::string to_string() const;

    friend bool operator==(const LeviChar&, const LeviChar&) = default;
    friend auto operator<=>(const LeviChar&, const LeviChar&) = default;
};

/// Unit group of one local factor with its cyclic decomposition.
struct LocalUnits {
    LocalRingSpec ring;
    std::vector<std::uint64_t> codes;  // units in code order
    std::vector<std::int64_t> index;   // code -> position in `codes`, or -1
    AbelianStructure structure;

    std::uint64_t char_count() const { return structure.order(); }
    /// k-th character in lexicographic exponent order.
    UnitChar character(std::uint64_t k) const;
    std::vector<UnitChar> characters() const;
};

/// Everything needed to evaluate characters of L for GL_n(R).
class CharacterSystem {
public:
    CharacterSystem(const RingSpec& ring, unsigned n);

    const RingSpec& ring() const noexcept { return ring_; }
    unsigned n() const noexcept { return n_; }
    /// Shared conductor e: exponent of R^x.
    unsigned conductor() const noexcept { return conductor_; }
    const CycloField& field() const { return CycloField::get(conductor_); }
    const LocalUnits& local_units(std::size_t j) const { return locals_.at(j); }

    /// Exponent k with chi(r) = zeta_e^k for a unit r of local factor j.
    std::uint64_t unit_exponent(std::size_t j, const UnitChar& chi, std::uint64_t code) const;
    /// Exponent k with chi(diag(d)) = zeta_e^k; d lists the diagonal entries.
    std::uint64_t levi_exponent(const LeviChar& chi, const std::vector<RingElem>& diag) const;
    CycloNum value(const LeviChar& chi, const std::vector<RingElem>& diag) const;
    /// chi evaluated on a diagonal matrix of the table.
    CycloNum value(const LeviChar& chi, const GroupTable& table, std::size_t l) const;

    LeviChar trivial() const;
    /// chi_1 tensored n times; chi_1 has one unit character per local factor.
    LeviChar power(const std::vector<UnitChar>& chi1) const;

    /// W = S_n x ... x S_n in the same order as GroupTable::weyl().
    const std::vector<PermWord>& weyl() const noexcept { return weyl_; }

private:
    RingSpec ring_;
    unsigned n_;
    unsigned conductor_;
    std::vector<LocalUnits> locals_;
    std::vector<PermWord> weyl_;
};

/// Every character of L, lexicographic in exponent tuples.
std::vector<LeviChar> all_levi_chars(const CharacterSystem& sys);

/// w*chi: (w*chi)_{w(i)} = chi_i in each factor.
LeviChar w_act(const PermWord& w, const LeviChar& chi);

/// Indices into sys.weyl() of the stabilizer W_chi.
std::vector<std::size_t> stabilizer(const CharacterSystem& sys, const LeviChar& chi);

/// Lexicographically least member of the W-orbit (each factor sorted).
LeviChar orbit_representative(const LeviChar& chi);
/// A Weyl element w (index into sys.weyl()) with w*chi = orbit_representative(chi).
std::size_t normalizing_word(const CharacterSystem& sys, const LeviChar& chi);
/// Orbit representatives in lexicographic order.
std::vector<LeviChar> orbit_representatives(const CharacterSystem& sys);

/// Multiplicities of equal components, per local factor (W_chi = prod S_{n_i}).
std::vector<std::vector<unsigned>> stabilizer_shape(const LeviChar& chi);

using Partition = std::vector<unsigned>;

/// Partitions of n, parts weakly decreasing, in reverse lexicographic order.
std::vector<Partition> partitions(unsigned n);
BigInt partition_count(unsigned n);
/// P_k(n) from the generating function prod_i (1 - x^i)^-k.
BigInt multipartition_count(unsigned k, unsigned n);
/// Irreducible degree of S_n for the partition (hook length formula).
BigInt sn_irrep_degree(const Partition& lambda);

/// Number of conjugacy classes (= irreducibles) of W_chi.
BigInt irrep_count_of_stabilizer(const LeviChar& chi);
/// Irreducible degrees of W_chi, sorted ascending.
std::vector<BigInt> stabilizer_irrep_degrees(const LeviChar& chi);

}  // namespace pseries
