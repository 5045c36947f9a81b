#pragma once

// Dense exact linear algebra over Q(zeta_e).

#include <cstddef>
#include <optional>
#include <vector>

#include "pseries/cyclo.hpp"

namespace pseries {

using CycloVector = std::vector<CycloNum>;

class CycloMatrix {
public:
    CycloMatrix() = default;
    CycloMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static CycloMatrix identity(std::size_t n);
    static CycloMatrix from_rows(const std::vector<CycloVector>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    CycloNum& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const CycloNum& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    CycloVector row(std::size_t r) const;
    CycloVector column(std::size_t c) const;

    /// Shared conductor of all entries (1 when every entry is rational).
    /// Throws ConductorMismatch if entries disagree.
    unsigned conductor() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<CycloNum> data_;
};

/// Exact rank; pivots are chosen as the first nonzero entry in column order.
std::size_t rank(const CycloMatrix& m);

struct AffineSolution {
    bool consistent = false;
    CycloVector particular;             // free variables set to zero
    std::vector<CycloVector> nullspace;  // basis of {x : Mx = 0}
};

/// Solves M x = rhs for a single right-hand column.
AffineSolution solve_affine(const CycloMatrix& m, const CycloMatrix& rhs);

/// Incremental row-echelon basis of a subspace of K^dim. Vectors may be
/// offered in any order; dependent ones are rejected. Coordinates are
/// reported against the accepted vectors in acceptance order.
class SpanBasis {
public:
    explicit SpanBasis(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const noexcept { return dim_; }
    std::size_t rank() const noexcept { return rows_.size(); }

    /// Returns true and keeps v if it is independent of the current span.
    bool insert(const CycloVector& v);
    bool contains(const CycloVector& v) const;
    std::optional<CycloVector> coordinates(const CycloVector& v) const;

    const std::vector<CycloVector>& accepted() const noexcept { return accepted_; }

private:
    struct Row {
        CycloVector values;
        std::vector<std::size_t> support;
        std::size_t pivot;
        CycloVector combination;  // row = sum combination[k] * accepted[k]
    };

    // Reduces v in place; returns the multipliers used per row.
    CycloVector reduce(CycloVector& v) const;

    std::size_t dim_;
    std::vector<Row> rows_;
    std::vector<CycloVector> accepted_;
};

}  // namespace pseries
