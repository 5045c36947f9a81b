#pragma once

// GL_n(R) for a finite ring R = R_1 x ... x R_m, fully enumerated.
//
// The table is assembled from one local table per factor. Global element
// indices follow lexicographic order of the entry tuple, except that the
// identity is pinned to index 0.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pseries/ring.hpp"

namespace pseries {

class SizeGuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultMaxCandidates = 100'000'000;

struct Mat {
    unsigned n = 0;
    std::vector<RingElem> entries;  // row-major

    RingElem& at(unsigned i, unsigned j) { return entries[i * n + j]; }
    const RingElem& at(unsigned i, unsigned j) const { return entries[i * n + j]; }

    static Mat identity(const RingSpec& ring, unsigned n);
    friend bool operator==(const Mat&, const Mat&) = default;
};

Mat mat_mul(const RingSpec& ring, const Mat& a, const Mat& b);
RingElem determinant(const RingSpec& ring, const Mat& a);
std::string mat_to_string(const RingSpec& ring, const Mat& a);

/// An element of W = S_n x ... x S_n (one factor per local ring). The image
/// of c under factor j is perms[j][c]; the permutation matrix P has
/// P[perms[j][c]][c] = 1 in that factor, so composition matches matrix product.
struct PermWord {
    std::vector<std::vector<unsigned>> perms;

    static PermWord identity(std::size_t factors, unsigned n);
    /// Inversion count summed over factors (word length in the simple transpositions).
    unsigned length() const;
    PermWord compose(const PermWord& rhs) const;  // this o rhs
    PermWord inverse() const;
    bool is_identity() const;
    /// One-line notation, 1-based, factors joined by "x": "[2 1]x[1 2]".
    std::string to_string() const;

    friend bool operator==(const PermWord&, const PermWord&) = default;
    friend auto operator<=>(const PermWord&, const PermWord&) = default;
};

enum class Subgroup { U, V, L, N, W, G0 };

const char* subgroup_name(Subgroup s);

class GroupTable {
public:
    /// Enumerates GL_n(R). Throws SizeGuardExceeded when the number of
    /// candidate matrices (sum over local factors of |R_j|^(n^2)) exceeds the bound.
    static GroupTable build(const RingSpec& ring, unsigned n, std::uint64_t max_candidates = kDefaultMaxCandidates);

    const RingSpec& ring() const noexcept { return ring_; }
    unsigned n() const noexcept { return n_; }
    std::size_t order() const noexcept { return elements_.size(); }
    std::size_t identity() const noexcept { return 0; }

    const Mat& element(std::size_t g) const { return elements_.at(g); }
    std::optional<std::size_t> index_of(const Mat& m) const;
    std::size_t mul(std::size_t a, std::size_t b) const;
    std::size_t inv(std::size_t a) const { return inverse_[a]; }
    /// w^-1 g w
    std::size_t conjugate(std::size_t g, std::size_t w) const { return mul(inv(w), mul(g, w)); }
    RingElem det(std::size_t g) const;

    const std::vector<std::size_t>& subgroup(Subgroup s) const { return subgroups_[static_cast<int>(s)]; }
    bool contains(Subgroup s, std::size_t g) const { return membership_[static_cast<int>(s)][g] != 0; }

    /// Weyl elements in product-lexicographic order, and their matrices.
    const std::vector<PermWord>& weyl() const noexcept { return weyl_; }
    std::size_t weyl_matrix(std::size_t w) const { return weyl_matrix_[w]; }
    std::size_t weyl_index(const PermWord& w) const;
    /// Index into weyl() of the Bruhat cell containing g.
    std::size_t bruhat_label(std::size_t g) const { return bruhat_[g]; }

    /// Entrywise reduction modulo the maximal ideals, as a matrix over the
    /// product of residue fields (see residue_ring()).
    Mat reduce(std::size_t g) const;
    const RingSpec& residue_ring() const noexcept { return residue_ring_; }

    std::size_t local_count(std::size_t j) const { return locals_[j].order(); }
    /// Index of the j-th local component of g inside the local table.
    std::size_t local_part(std::size_t g, std::size_t j) const { return parts_[g * locals_.size() + j]; }

private:
    struct LocalTable {
        LocalRingSpec ring;
        unsigned n = 0;
        std::vector<std::vector<std::uint64_t>> entries;  // lexicographic order
        std::vector<std::uint64_t> keys;
        std::vector<std::uint64_t> dets;
        std::vector<std::uint32_t> mul_table;  // empty when too large
        std::vector<std::uint32_t> bruhat;     // index into S_n list
        std::size_t order() const { return entries.size(); }
        std::size_t mul(std::size_t a, std::size_t b) const;
        std::optional<std::size_t> find(const std::vector<std::uint64_t>& m) const;
        std::uint64_t key(const std::vector<std::uint64_t>& m) const;
    };

    static LocalTable build_local(const LocalRingSpec& ring, unsigned n);

    GroupTable(RingSpec ring, RingSpec residue) : ring_(std::move(ring)), residue_ring_(std::move(residue)) {}

    RingSpec ring_;
    RingSpec residue_ring_;
    unsigned n_ = 0;
    std::vector<LocalTable> locals_;
    std::vector<Mat> elements_;
    std::vector<std::uint64_t> keys_;
    std::vector<std::uint32_t> parts_;         // flattened local indices
    std::vector<std::uint32_t> tuple_to_index_;  // mixed radix over local indices
    std::vector<std::size_t> tuple_stride_;
    std::vector<std::uint32_t> inverse_;
    std::vector<std::uint32_t> mul_table_;  // empty when too large
    std::vector<std::vector<std::size_t>> subgroups_;
    std::vector<std::vector<std::uint8_t>> membership_;
    std::vector<PermWord> weyl_;
    std::vector<std::size_t> weyl_matrix_;
    std::vector<std::uint32_t> bruhat_;
};

/// Alias for GroupTable::build.
GroupTable enumerate_gl(const RingSpec& ring, unsigned n, std::uint64_t max_candidates = kDefaultMaxCandidates);

/// Element indices of a distinguished subgroup.
std::vector<std::size_t> subgroup(const GroupTable& table, Subgroup which);

/// Bruhat cell of an invertible g: reduce modulo the maximal ideals and
/// eliminate over each residue field (lower-unipotent row moves on the
/// left, upper-triangular column moves on the right) down to a monomial
/// matrix; the result is its permutation part.
PermWord bruhat_cell(const GroupTable& table, const Mat& g);

struct ULVFactor {
    Mat u, l, v;
};

/// g = u l v with u upper unipotent, l diagonal, v lower unipotent, if such
/// a factorization exists (it is then unique).
std::optional<ULVFactor> factor_ULV(const GroupTable& table, const Mat& g);

/// {w^-1 h w : h in H}, sorted.
std::vector<std::size_t> conjugate_subgroup(const GroupTable& table, const std::vector<std::size_t>& H, std::size_t w);

/// Sorted intersection of two sorted index lists.
std::vector<std::size_t> intersect(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b);

/// Smallest element of each double coset H g K, in increasing order.
std::vector<std::size_t> double_coset_reps(const GroupTable& table, const std::vector<std::size_t>& H,
                                           const std::vector<std::size_t>& K);

/// The set S_1 S_2 ... S_k as a sorted index list.
std::vector<std::size_t> product_set(const GroupTable& table, const std::vector<std::vector<std::size_t>>& factors);

/// Conjugacy classes, each sorted, ordered by smallest member.
std::vector<std::vector<std::size_t>> conjugacy_classes(const GroupTable& table);

/// |GL_n(F_q)| = prod_{i<n} (q^n - q^i).
std::uint64_t gl_order_over_field(std::uint64_t q, unsigned n);

/// All permutations of {0..n-1} in lexicographic order of one-line notation.
std::vector<std::vector<unsigned>> all_permutations(unsigned n);

}  // namespace pseries
