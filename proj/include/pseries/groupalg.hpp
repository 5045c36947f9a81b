#pragma once

// The group algebra C[G] with exact cyclotomic coefficients.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pseries/abchar.hpp"
#include "pseries/cyclo.hpp"
#include "pseries/linalg.hpp"
#include "pseries/matgroup.hpp"

namespace pseries {

class TableMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Sparse element sum_g a_g g; terms sorted by index, no zero coefficients.
class AlgElem {
public:
    using Term = std::pair<std::uint32_t, CycloNum>;

    AlgElem() = default;
    explicit AlgElem(const GroupTable& table) : table_(&table) {}
    AlgElem(const GroupTable& table, std::vector<Term> terms);

    static AlgElem delta(const GroupTable& table, std::size_t g, const CycloNum& c = CycloNum(1));
    static AlgElem one(const GroupTable& table) { return delta(table, table.identity()); }
    /// From a dense coefficient vector of length |G|.
    static AlgElem from_dense(const GroupTable& table, const CycloVector& v);

    const GroupTable* table() const noexcept { return table_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t support_size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    CycloNum coeff(std::size_t g) const;
    CycloVector dense() const;

    AlgElem& operator+=(const AlgElem& b);
    AlgElem& operator-=(const AlgElem& b);
    AlgElem operator-() const;
    AlgElem scaled(const CycloNum& c) const;

    friend AlgElem operator+(AlgElem a, const AlgElem& b) { return a += b; }
    friend AlgElem operator-(AlgElem a, const AlgElem& b) { return a -= b; }
    friend AlgElem operator*(const AlgElem& a, const AlgElem& b);
    friend AlgElem operator*(const CycloNum& c, const AlgElem& a) { return a.scaled(c); }
    friend bool operator==(const AlgElem& a, const AlgElem& b);

    /// "{0: 1/2, 5: -1/2}"
    std::string to_string() const;

private:
    const GroupTable* join(const AlgElem& b) const;

    const GroupTable* table_ = nullptr;
    std::vector<Term> terms_;
};

AlgElem convolve(const AlgElem& a, const AlgElem& b);
/// sum_g conj(a_g) g^-1
AlgElem star(const AlgElem& a);
/// sum_g conj(a_g) b_g
CycloNum inner(const AlgElem& a, const AlgElem& b);

/// g * a and a * g without a general convolution.
AlgElem left_translate(std::size_t g, const AlgElem& a);
AlgElem right_translate(const AlgElem& a, std::size_t g);

/// |H|^-1 sum_{h in H} h. Throws std::invalid_argument unless H is a subgroup.
AlgElem idempotent_subgroup(const GroupTable& table, const std::vector<std::size_t>& H);
AlgElem idempotent_subgroup(const GroupTable& table, Subgroup which);
/// |L|^-1 sum_{l in L} chi(l)^-1 l
AlgElem idempotent_char(const GroupTable& table, const CharacterSystem& sys, const LeviChar& chi);

/// Dimension of the span.
std::size_t span_rank(const std::vector<AlgElem>& generators);

/// Dense vectors as accepted by SpanBasis.
CycloVector to_vector(const AlgElem& a);

}  // namespace pseries
