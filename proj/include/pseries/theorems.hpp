#pragma once

// Verification engine for the principal series of GL_n(R): the Halmos
// element z, structural checks on G, intertwining numbers computed two
// ways, endomorphism algebras and their Wedderburn blocks, and counting.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pseries/abchar.hpp"
#include "pseries/groupalg.hpp"
#include "pseries/matgroup.hpp"

namespace pseries {

/// Raised when a computation contradicts a property that must hold
/// (no invertible z, non-idempotent E_chi, oracles disagreeing, ...).
class VerificationAlarm : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CheckResult {
    std::string id;
    bool passed = false;
    nlohmann::json expected;
    nlohmann::json actual;
    double millis = 0;
};

struct VerifyReport {
    std::string ring;
    unsigned n = 0;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool all_passed() const;
    std::size_t failures() const;
    void append(const VerifyReport& other);
    /// Stable, key-sorted. "millis" is null unless include_timing.
    nlohmann::json to_json(bool include_timing = false) const;
};

/// z with its certificate.
struct HalmosElement {
    AlgElem z;
    AlgElem z_inverse;
    std::vector<AlgElem> basis;     // basis of A = <e_U, e_V>
    std::size_t raw_nullity = 0;    // solution-space dimension under the four identities
    std::size_t nullity = 0;        // ... plus z = 1 on the block where e_U = e_V = 0
    bool has_null_block = false;
    unsigned attempts = 0;          // candidates tried before an invertible one
};

struct EndAlgebra {
    std::size_t dim = 0;
    std::size_t center_dim = 0;
    std::vector<unsigned> blocks;   // sorted block sizes d_i
    unsigned attempts = 0;          // random central elements used
    double max_residual = 0;        // worst |trace - round(trace)|
};

/// Cached objects for one GL_n(R).
class PrincipalSeries {
public:
    PrincipalSeries(const GroupTable& table, std::uint64_t seed = 1);

    const GroupTable& table() const noexcept { return table_; }
    const CharacterSystem& chars() const noexcept { return chars_; }
    std::uint64_t seed() const noexcept { return seed_; }

    const AlgElem& e_U() const noexcept { return e_U_; }
    const AlgElem& e_V() const noexcept { return e_V_; }
    const AlgElem& e_UV() const noexcept { return e_UV_; }

    const HalmosElement& halmos();
    const AlgElem& e_chi(const LeviChar& chi);
    /// E_chi = z e_U e_V e_chi
    const AlgElem& E(const LeviChar& chi);

    /// Representatives of (LV)\G/(LU).
    const std::vector<std::size_t>& levi_double_cosets();
    /// Representatives of G/(LU).
    const std::vector<std::size_t>& levi_left_cosets();
    const std::vector<std::vector<std::size_t>>& classes();
    /// Character of C[G]E_chi, one value per class of classes().
    const std::vector<CycloNum>& pind_character(const LeviChar& chi);
    const EndAlgebra& end_algebra(const LeviChar& chi);

private:
    const GroupTable& table_;
    CharacterSystem chars_;
    std::uint64_t seed_;
    AlgElem e_U_, e_V_, e_UV_;
    std::optional<HalmosElement> halmos_;
    std::map<LeviChar, AlgElem> e_chi_, E_;
    std::optional<std::vector<std::size_t>> dcosets_, lcosets_;
    std::optional<std::vector<std::vector<std::size_t>>> classes_;
    std::vector<std::size_t> class_of_;
    std::map<LeviChar, std::vector<CycloNum>> characters_;
    std::map<LeviChar, EndAlgebra> end_algebras_;
};

/// Representatives (smallest members) of the right cosets H g.
std::vector<std::size_t> right_coset_reps(const GroupTable& table, const std::vector<std::size_t>& H);
/// Representatives (smallest members) of the left cosets g H.
std::vector<std::size_t> left_coset_reps(const GroupTable& table, const std::vector<std::size_t>& H);

/// Solves for z inside A. Throws VerificationAlarm if no invertible solution is found.
HalmosElement compute_halmos_z(const GroupTable& table, std::uint64_t seed = 1);

/// The six structural checks on G (ids ulv-injective ... cell-separation).
VerifyReport check_proposition_G(const GroupTable& table);

/// e_V e_{U^w} e_{V^w} = e_V e_U e_{V^w} for every w.
CheckResult check_idempotent_triple(PrincipalSeries& ps);
/// Rank equalities certifying phi_w for a single Weyl element (index into weyl()).
CheckResult check_phi_w(PrincipalSeries& ps, std::size_t w);
/// Rank equalities certifying Phi on C[L]-bimodules for a single w.
CheckResult check_summand(PrincipalSeries& ps, std::size_t w);
CheckResult check_lin_independence(PrincipalSeries& ps);
/// span{g E_chi} = span{g e_U e_V e_chi} and E_chi^2 = E_chi, for every chi.
CheckResult check_end_sandwich(PrincipalSeries& ps);

std::size_t intertwining_dim_formula(const CharacterSystem& sys, const LeviChar& chi, const LeviChar& sigma);
/// Span rank of E_sigma g E_chi.
std::size_t intertwining_dim_oracle(PrincipalSeries& ps, const LeviChar& chi, const LeviChar& sigma);
/// Averaged inner product of the characters of C[G]E_chi and C[G]E_sigma.
std::size_t intertwining_dim_characters(PrincipalSeries& ps, const LeviChar& chi, const LeviChar& sigma);

struct IntertwiningTable {
    std::vector<LeviChar> chars;
    std::vector<std::vector<std::size_t>> formula, oracle, characters;
};
IntertwiningTable intertwining_table(PrincipalSeries& ps);
/// CSV with one row per ordered pair.
std::string intertwining_csv(const IntertwiningTable& t);

EndAlgebra end_algebra_blocks(PrincipalSeries& ps, const LeviChar& chi);

/// chi1 has one unit character per local factor.
CheckResult check_scalar_twist(PrincipalSeries& ps, const std::vector<UnitChar>& chi1);
CheckResult check_levi_support(PrincipalSeries& ps, const std::vector<unsigned>& composition);
/// All compositions of n in lexicographic order.
std::vector<std::vector<unsigned>> compositions(unsigned n);

struct PrincipalSeriesCount {
    BigInt pipeline;
    BigInt formula;
    BigInt stabilizer_classes;
};
PrincipalSeriesCount count_principal_series(PrincipalSeries& ps);
/// Formula only: prod_j P_{k_j}(n), k_j = |R_j^x|.
BigInt principal_series_formula(const RingSpec& ring, unsigned n);
/// Number of Wedderburn blocks of End(pind 1_L).
std::size_t count_pind_trivial_constituents(PrincipalSeries& ps);

/// Stable identifiers of every check, in report order.
const std::vector<std::string>& check_ids();

/// Largest |G| the group-algebra pipeline is run on by default.
inline constexpr std::uint64_t kDefaultMaxOrder = 2048;

/// |GL_n(R)| from the residue fields, without enumeration.
BigInt gl_order(const RingSpec& ring, unsigned n);
/// Throws SizeGuardExceeded when |GL_n(R)| > max_order.
void require_pipeline_size(const RingSpec& ring, unsigned n, std::uint64_t max_order);

struct VerifyOptions {
    std::uint64_t seed = 1;
    std::set<std::string> only;   // empty: all
    std::set<std::string> skip;
    std::uint64_t max_candidates = kDefaultMaxCandidates;
    std::uint64_t max_order = kDefaultMaxOrder;
};

/// Runs every selected check on GL_n(ring). Throws SizeGuardExceeded.
VerifyReport run_verification(const RingSpec& ring, unsigned n, const VerifyOptions& opts);

}  // namespace pseries
