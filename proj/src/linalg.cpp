#include "pseries/linalg.hpp"

#include <stdexcept>

namespace pseries {

CycloMatrix CycloMatrix::identity(std::size_t n) {
    CycloMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = CycloNum(1);
    return m;
}

CycloMatrix CycloMatrix::from_rows(const std::vector<CycloVector>& rows) {
    if (rows.empty()) return {};
    CycloMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged rows");
        for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

CycloVector CycloMatrix::row(std::size_t r) const {
    return CycloVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                       data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

CycloVector CycloMatrix::column(std::size_t c) const {
    CycloVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

unsigned CycloMatrix::conductor() const {
    const CycloField* f = nullptr;
    for (const auto& x : data_) {
        if (!x.field()) continue;
        if (f && f != x.field()) throw ConductorMismatch("matrix entries have different conductors");
        f = x.field();
    }
    return f ? f->conductor() : 1;
}

namespace {

// Row-reduces m in place to reduced echelon form over the first `ncols`
// columns; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(std::vector<CycloVector>& m, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
        std::size_t sel = r;
        while (sel < m.size() && m[sel][c].is_zero()) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[r], m[sel]);
        const CycloNum inv = m[r][c].inverse();
        for (auto& x : m[r]) {
            if (!x.is_zero()) x *= inv;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            const CycloNum f = -m[i][c];
            for (std::size_t j = c; j < m[i].size(); ++j) {
                if (!m[r][j].is_zero()) m[i][j].add_product(f, m[r][j]);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const CycloMatrix& m) {
    m.conductor();
    std::vector<CycloVector> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    // forward elimination only
    std::size_t rk = 0;
    for (std::size_t c = 0; c < m.cols() && rk < rows.size(); ++c) {
        std::size_t sel = rk;
        while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rk], rows[sel]);
        const CycloNum inv = rows[rk][c].inverse();
        for (std::size_t i = rk + 1; i < rows.size(); ++i) {
            if (rows[i][c].is_zero()) continue;
            const CycloNum f = -(rows[i][c] * inv);
            for (std::size_t j = c; j < m.cols(); ++j) {
                if (!rows[rk][j].is_zero()) rows[i][j].add_product(f, rows[rk][j]);
            }
        }
        ++rk;
    }
    return rk;
}

AffineSolution solve_affine(const CycloMatrix& m, const CycloMatrix& rhs) {
    if (rhs.rows() != m.rows() || rhs.cols() != 1) throw std::invalid_argument("rhs must be a column matching M");
    const std::size_t n = m.cols();
    std::vector<CycloVector> aug(m.rows(), CycloVector(n + 1));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < n; ++c) aug[r][c] = m(r, c);
        aug[r][n] = rhs(r, 0);
    }
    const auto pivots = rref(aug, n);

    AffineSolution sol;
    for (std::size_t r = pivots.size(); r < aug.size(); ++r) {
        if (!aug[r][n].is_zero()) return sol;
    }
    sol.consistent = true;
    sol.particular.assign(n, CycloNum());
    std::vector<bool> is_pivot(n, false);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        is_pivot[pivots[i]] = true;
        sol.particular[pivots[i]] = aug[i][n];
    }
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        CycloVector v(n);
        v[f] = CycloNum(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -aug[i][f];
        sol.nullspace.push_back(std::move(v));
    }
    return sol;
}

// ---------------------------------------------------------------------------
// SpanBasis

CycloVector SpanBasis::reduce(CycloVector& v) const {
    CycloVector mult(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Row& row = rows_[i];
        if (v[row.pivot].is_zero()) continue;
        const CycloNum f = v[row.pivot];
        const CycloNum neg = -f;
        for (std::size_t c : row.support) v[c].add_product(neg, row.values[c]);
        mult[i] = f;
    }
    return mult;
}

bool SpanBasis::insert(const CycloVector& v) {
    if (v.size() != dim_) throw std::invalid_argument("vector has wrong dimension");
    CycloVector w = v;
    const CycloVector mult = reduce(w);
    std::size_t pivot = dim_;
    for (std::size_t c = 0; c < dim_; ++c) {
        if (!w[c].is_zero()) {
            pivot = c;
            break;
        }
    }
    if (pivot == dim_) return false;

    const std::size_t k = accepted_.size();
    const CycloNum inv = w[pivot].inverse();
    Row row;
    row.pivot = pivot;
    for (std::size_t c = pivot; c < dim_; ++c) {
        if (w[c].is_zero()) continue;
        w[c] *= inv;
        row.support.push_back(c);
    }
    row.values = std::move(w);
    // row = (v - sum mult_i row_i) * inv
    row.combination.assign(k + 1, CycloNum());
    row.combination[k] = CycloNum(1);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (mult[i].is_zero()) continue;
        const CycloNum neg = -mult[i];
        const auto& comb = rows_[i].combination;
        for (std::size_t j = 0; j < comb.size(); ++j) {
            if (!comb[j].is_zero()) row.combination[j].add_product(neg, comb[j]);
        }
    }
    for (auto& x : row.combination) {
        if (!x.is_zero()) x *= inv;
    }
    rows_.push_back(std::move(row));
    accepted_.push_back(v);
    return true;
}

bool SpanBasis::contains(const CycloVector& v) const {
    if (v.size() != dim_) throw std::invalid_argument("vector has wrong dimension");
    CycloVector w = v;
    reduce(w);
    for (const auto& x : w) {
        if (!x.is_zero()) return false;
    }
    return true;
}

std::optional<CycloVector> SpanBasis::coordinates(const CycloVector& v) const {
    if (v.size() != dim_) throw std::invalid_argument("vector has wrong dimension");
    CycloVector w = v;
    const CycloVector mult = reduce(w);
    for (const auto& x : w) {
        if (!x.is_zero()) return std::nullopt;
    }
    CycloVector coords(accepted_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (mult[i].is_zero()) continue;
        const auto& comb = rows_[i].combination;
        for (std::size_t j = 0; j < comb.size(); ++j) {
            if (!comb[j].is_zero()) coords[j].add_product(mult[i], comb[j]);
        }
    }
    return coords;
}

}  // namespace pseries
