#include "pseries/matgroup.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace pseries {

namespace {

constexpr std::size_t kMaxTableOrder = 2048;
constexpr std::size_t kMaxGroupOrder = std::size_t{1} << 26;

using LocalMat = std::vector<std::uint64_t>;

std::uint64_t local_det(const LocalRingSpec& r, const LocalMat& m, unsigned n,
                        const std::vector<std::vector<unsigned>>& perms) {
    std::uint64_t total = 0;
    for (const auto& p : perms) {
        // sign from inversion parity
        unsigned inv = 0;
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = i + 1; j < n; ++j) inv += p[i] > p[j];
        std::uint64_t term = 1;
        for (unsigned i = 0; i < n && term != 0; ++i) term = r.mul(term, m[i * n + p[i]]);
        total = (inv % 2) ? r.sub(total, term) : r.add(total, term);
    }
    return total;
}

LocalMat local_mul(const LocalRingSpec& r, const LocalMat& a, const LocalMat& b, unsigned n) {
    LocalMat c(n * n, 0);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned k = 0; k < n; ++k) {
            const std::uint64_t x = a[i * n + k];
            if (x == 0) continue;
            for (unsigned j = 0; j < n; ++j) c[i * n + j] = r.add(c[i * n + j], r.mul(x, b[k * n + j]));
        }
    return c;
}

// Inverse via adjugate; m must have unit determinant.
LocalMat local_inverse(const LocalRingSpec& r, const LocalMat& m, unsigned n) {
    const auto perms = all_permutations(n);
    const auto det_inv = r.inverse(local_det(r, m, n, perms));
    if (!det_inv) throw std::logic_error("matrix is not invertible");
    if (n == 1) return {*det_inv};
    const auto minor_perms = all_permutations(n - 1);
    LocalMat out(n * n, 0);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            LocalMat minor;
            minor.reserve((n - 1) * (n - 1));
            for (unsigned a = 0; a < n; ++a) {
                if (a == i) continue;
                for (unsigned b = 0; b < n; ++b)
                    if (b != j) minor.push_back(m[a * n + b]);
            }
            std::uint64_t c = local_det(r, minor, n - 1, minor_perms);
            if ((i + j) % 2) c = r.neg(c);
            out[j * n + i] = r.mul(c, *det_inv);  // adjugate is the transposed cofactor matrix
        }
    return out;
}

// Lehmer-code rank of a permutation among all_permutations(n).
std::size_t perm_rank(const std::vector<unsigned>& p) {
    const std::size_t n = p.size();
    std::size_t rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t smaller = 0;
        for (std::size_t j = i + 1; j < n; ++j) smaller += p[j] < p[i];
        std::size_t fact = 1;
        for (std::size_t k = 2; k < n - i; ++k) fact *= k;
        rank += smaller * fact;
    }
    return rank;
}

// Eliminates an invertible matrix over a field to monomial form using
// lower-unipotent row moves and upper-triangular column moves; returns the
// permutation (image of each column).
std::vector<unsigned> eliminate_to_permutation(const LocalRingSpec& field, LocalMat m, unsigned n) {
    std::vector<unsigned> perm(n, n);
    std::vector<bool> col_used(n, false);
    for (unsigned row = 0; row < n; ++row) {
        unsigned col = n;
        for (unsigned c = 0; c < n; ++c) {
            if (!col_used[c] && m[row * n + c] != 0) {
                col = c;
                break;
            }
        }
        if (col == n) throw std::invalid_argument("matrix is singular over the residue field");
        const std::uint64_t pinv = *field.inverse(m[row * n + col]);
        // clear the rest of the row with the pivot column (columns to the right only)
        for (unsigned c = col + 1; c < n; ++c) {
            const std::uint64_t x = m[row * n + c];
            if (x == 0) continue;
            const std::uint64_t t = field.mul(x, pinv);
            for (unsigned r = 0; r < n; ++r) m[r * n + c] = field.sub(m[r * n + c], field.mul(t, m[r * n + col]));
        }
        // clear the pivot column below with the pivot row
        for (unsigned r = row + 1; r < n; ++r) {
            const std::uint64_t x = m[r * n + col];
            if (x == 0) continue;
            const std::uint64_t t = field.mul(x, pinv);
            for (unsigned c = 0; c < n; ++c) m[r * n + c] = field.sub(m[r * n + c], field.mul(t, m[row * n + c]));
        }
        col_used[col] = true;
        perm[col] = row;
    }
    return perm;
}

std::vector<unsigned> local_bruhat(const LocalRingSpec& ring, const LocalMat& m, unsigned n) {
    const LocalRingSpec k = ring.residue_field();
    LocalMat red(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) red[i] = ring.reduce(m[i]);
    return eliminate_to_permutation(k, std::move(red), n);
}

enum LocalFlags : std::uint8_t {
    kU = 1 << 0,
    kV = 1 << 1,
    kL = 1 << 2,
    kN = 1 << 3,
    kW = 1 << 4,
    kG0 = 1 << 5,
};

std::uint8_t local_flags(const LocalRingSpec& r, const LocalMat& m, unsigned n) {
    bool upper = true, lower = true, diag = true, monomial = true, perm = true, kernel = true;
    for (unsigned i = 0; i < n; ++i) {
        unsigned nonzero = 0;
        for (unsigned j = 0; j < n; ++j) {
            const std::uint64_t x = m[i * n + j];
            if (i == j && x != 1) upper = lower = false;
            if (i > j && x != 0) upper = false;
            if (i < j && x != 0) lower = false;
            if (i != j && x != 0) diag = false;
            if (x != 0) {
                ++nonzero;
                if (x != 1) perm = false;
            }
            if (r.reduce(x) != (i == j ? 1u : 0u)) kernel = false;
        }
        if (nonzero != 1) monomial = false;
    }
    for (unsigned j = 0; j < n && monomial; ++j) {
        unsigned nonzero = 0;
        for (unsigned i = 0; i < n; ++i) nonzero += m[i * n + j] != 0;
        if (nonzero != 1) monomial = false;
    }
    perm = perm && monomial;
    std::uint8_t f = 0;
    if (upper) f |= kU;
    if (lower) f |= kV;
    if (diag) f |= kL;
    if (monomial) f |= kN;
    if (perm) f |= kW;
    if (kernel) f |= kG0;
    return f;
}

}  // namespace

// ---------------------------------------------------------------------------
// Mat, PermWord

Mat Mat::identity(const RingSpec& ring, unsigned n) {
    Mat m{n, std::vector<RingElem>(n * n, ring.zero())};
    for (unsigned i = 0; i < n; ++i) m.at(i, i) = ring.one();
    return m;
}

Mat mat_mul(const RingSpec& ring, const Mat& a, const Mat& b) {
    if (a.n != b.n) throw std::invalid_argument("matrix size mismatch");
    const unsigned n = a.n;
    Mat c{n, std::vector<RingElem>(n * n, ring.zero())};
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            RingElem s = ring.zero();
            for (unsigned k = 0; k < n; ++k) s = ring.add(s, ring.mul(a.at(i, k), b.at(k, j)));
            c.at(i, j) = s;
        }
    return c;
}

RingElem determinant(const RingSpec& ring, const Mat& a) {
    RingElem total = ring.zero();
    for (const auto& p : all_permutations(a.n)) {
        unsigned inv = 0;
        for (unsigned i = 0; i < a.n; ++i)
            for (unsigned j = i + 1; j < a.n; ++j) inv += p[i] > p[j];
        RingElem term = ring.one();
        for (unsigned i = 0; i < a.n; ++i) term = ring.mul(term, a.at(i, p[i]));
        total = (inv % 2) ? ring.sub(total, term) : ring.add(total, term);
    }
    return total;
}

std::string mat_to_string(const RingSpec& ring, const Mat& a) {
    std::string s = "[";
    for (unsigned i = 0; i < a.n; ++i) {
        s += i ? ",[" : "[";
        for (unsigned j = 0; j < a.n; ++j) {
            if (j) s += ",";
            s += ring.element_to_string(a.at(i, j));
        }
        s += "]";
    }
    return s + "]";
}

PermWord PermWord::identity(std::size_t factors, unsigned n) {
    std::vector<unsigned> id(n);
    std::iota(id.begin(), id.end(), 0u);
    return PermWord{std::vector<std::vector<unsigned>>(factors, id)};
}

unsigned PermWord::length() const {
    unsigned len = 0;
    for (const auto& p : perms)
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j) len += p[i] > p[j];
    return len;
}

PermWord PermWord::compose(const PermWord& rhs) const {
    if (perms.size() != rhs.perms.size()) throw std::invalid_argument("Weyl factor count mismatch");
    PermWord out;
    out.perms.resize(perms.size());
    for (std::size_t j = 0; j < perms.size(); ++j) {
        const auto& a = perms[j];
        const auto& b = rhs.perms[j];
        out.perms[j].resize(a.size());
        for (std::size_t c = 0; c < a.size(); ++c) out.perms[j][c] = a[b[c]];
    }
    return out;
}

PermWord PermWord::inverse() const {
    PermWord out = *this;
    for (std::size_t j = 0; j < perms.size(); ++j)
        for (std::size_t c = 0; c < perms[j].size(); ++c) out.perms[j][perms[j][c]] = static_cast<unsigned>(c);
    return out;
}

bool PermWord::is_identity() const {
    for (const auto& p : perms)
        for (std::size_t c = 0; c < p.size(); ++c)
            if (p[c] != c) return false;
    return true;
}

std::string PermWord::to_string() const {
    std::string s;
    for (std::size_t j = 0; j < perms.size(); ++j) {
        if (j) s += "x";
        s += "[";
        for (std::size_t c = 0; c < perms[j].size(); ++c) {
            if (c) s += " ";
            s += std::to_string(perms[j][c] + 1);
        }
        s += "]";
    }
    return s;
}

const char* subgroup_name(Subgroup s) {
    switch (s) {
        case Subgroup::U: return "U";
        case Subgroup::V: return "V";
        case Subgroup::L: return "L";
        case Subgroup::N: return "N";
        case Subgroup::W: return "W";
        case Subgroup::G0: return "G0";
    }
    return "?";
}

std::vector<std::vector<unsigned>> all_permutations(unsigned n) {
    std::vector<unsigned> p(n);
    std::iota(p.begin(), p.end(), 0u);
    std::vector<std::vector<unsigned>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::uint64_t gl_order_over_field(std::uint64_t q, unsigned n) {
    std::uint64_t qn = 1;
    for (unsigned i = 0; i < n; ++i) qn *= q;
    std::uint64_t order = 1, qi = 1;
    for (unsigned i = 0; i < n; ++i) {
        order *= qn - qi;
        qi *= q;
    }
    return order;
}

// ---------------------------------------------------------------------------
// Local tables

std::uint64_t GroupTable::LocalTable::key(const std::vector<std::uint64_t>& m) const {
    std::uint64_t k = 0;
    for (std::uint64_t x : m) k = k * ring.order() + x;
    return k;
}

std::optional<std::size_t> GroupTable::LocalTable::find(const std::vector<std::uint64_t>& m) const {
    const std::uint64_t k = key(m);
    auto it = std::lower_bound(keys.begin(), keys.end(), k);
    if (it == keys.end() || *it != k) return std::nullopt;
    return static_cast<std::size_t>(it - keys.begin());
}

std::size_t GroupTable::LocalTable::mul(std::size_t a, std::size_t b) const {
    if (!mul_table.empty()) return mul_table[a * order() + b];
    return *find(local_mul(ring, entries[a], entries[b], n));
}

GroupTable::LocalTable GroupTable::build_local(const LocalRingSpec& ring, unsigned n) {
    LocalTable t{.ring = ring, .n = n, .entries = {}, .keys = {}, .dets = {}, .mul_table = {}, .bruhat = {}};
    const std::uint64_t q = ring.order();
    const unsigned cells = n * n;
    const auto perms = all_permutations(n);
    LocalMat m(cells, 0);
    std::uint64_t key = 0;
    while (true) {
        const std::uint64_t d = local_det(ring, m, n, perms);
        if (ring.is_unit(d)) {
            t.entries.push_back(m);
            t.keys.push_back(key);
            t.dets.push_back(d);
        }
        // odometer: last entry fastest
        unsigned pos = cells;
        while (pos > 0) {
            --pos;
            if (++m[pos] < q) break;
            m[pos] = 0;
            if (pos == 0) {
                pos = cells + 1;
                break;
            }
        }
        if (pos == cells + 1) break;
        ++key;
    }
    const std::size_t order = t.entries.size();
    if (order <= kMaxTableOrder) {
        t.mul_table.resize(order * order);
        for (std::size_t a = 0; a < order; ++a)
            for (std::size_t b = 0; b < order; ++b)
                t.mul_table[a * order + b] = static_cast<std::uint32_t>(*t.find(local_mul(ring, t.entries[a], t.entries[b], n)));
    }
    t.bruhat.reserve(order);
    for (const auto& e : t.entries) t.bruhat.push_back(static_cast<std::uint32_t>(perm_rank(local_bruhat(ring, e, n))));
    return t;
}

// ---------------------------------------------------------------------------
// GroupTable

GroupTable GroupTable::build(const RingSpec& ring, unsigned n, std::uint64_t max_candidates) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    long double candidates = 0;
    for (const auto& l : ring.locals()) candidates += std::pow(static_cast<long double>(l.order()), n * n);
    if (candidates > static_cast<long double>(max_candidates)) {
        throw SizeGuardExceeded("GL_" + std::to_string(n) + "(" + ring.canonical() + ") needs " +
                                std::to_string(static_cast<unsigned long long>(candidates)) +
                                " candidate matrices, above the bound " + std::to_string(max_candidates));
    }

    std::vector<LocalRingSpec> residue_locals;
    for (const auto& l : ring.locals()) residue_locals.push_back(l.residue_field());
    GroupTable g(ring, RingSpec(residue_locals));
    g.n_ = n;
    long double total = 1;
    for (const auto& l : ring.locals()) {
        g.locals_.push_back(build_local(l, n));
        total *= static_cast<long double>(g.locals_.back().order());
    }
    if (total > static_cast<long double>(kMaxGroupOrder)) throw SizeGuardExceeded("group order too large to tabulate");

    const std::size_t m = g.locals_.size();
    const std::size_t cells = n * n;
    g.tuple_stride_.assign(m, 1);
    std::size_t order = 1;
    for (std::size_t j = m; j-- > 0;) {
        g.tuple_stride_[j] = order;
        order *= g.locals_[j].order();
    }

    // all tuples, factor 0 most significant
    std::vector<std::vector<RingElem>> entries(order);
    std::vector<std::uint32_t> tuples(order * m);
    std::vector<std::uint64_t> comp(m);
    for (std::size_t t = 0; t < order; ++t) {
        for (std::size_t j = 0; j < m; ++j) tuples[t * m + j] = static_cast<std::uint32_t>((t / g.tuple_stride_[j]) % g.locals_[j].order());
        auto& e = entries[t];
        e.resize(cells);
        for (std::size_t c = 0; c < cells; ++c) {
            for (std::size_t j = 0; j < m; ++j) comp[j] = g.locals_[j].entries[tuples[t * m + j]][c];
            e[c] = ring.make(comp);
        }
    }
    const Mat id = Mat::identity(ring, n);
    std::vector<std::size_t> perm(order);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        const bool ia = entries[a] == id.entries, ib = entries[b] == id.entries;
        if (ia != ib) return ia;
        return entries[a] < entries[b];
    });

    g.elements_.resize(order);
    g.parts_.resize(order * m);
    g.tuple_to_index_.resize(order);
    for (std::size_t idx = 0; idx < order; ++idx) {
        const std::size_t t = perm[idx];
        g.elements_[idx] = Mat{n, std::move(entries[t])};
        for (std::size_t j = 0; j < m; ++j) g.parts_[idx * m + j] = tuples[t * m + j];
        g.tuple_to_index_[t] = static_cast<std::uint32_t>(idx);
    }

    // inverses
    std::vector<std::vector<std::size_t>> local_inv(m);
    for (std::size_t j = 0; j < m; ++j) {
        const auto& lt = g.locals_[j];
        local_inv[j].resize(lt.order());
        for (std::size_t a = 0; a < lt.order(); ++a) local_inv[j][a] = *lt.find(local_inverse(lt.ring, lt.entries[a], n));
    }
    g.inverse_.resize(order);
    for (std::size_t idx = 0; idx < order; ++idx) {
        std::size_t t = 0;
        for (std::size_t j = 0; j < m; ++j) t += local_inv[j][g.parts_[idx * m + j]] * g.tuple_stride_[j];
        g.inverse_[idx] = g.tuple_to_index_[t];
    }

    if (order <= kMaxTableOrder) {
        g.mul_table_.resize(order * order);
        for (std::size_t a = 0; a < order; ++a)
            for (std::size_t b = 0; b < order; ++b) {
                std::size_t t = 0;
                for (std::size_t j = 0; j < m; ++j)
                    t += g.locals_[j].mul(g.parts_[a * m + j], g.parts_[b * m + j]) * g.tuple_stride_[j];
                g.mul_table_[a * order + b] = g.tuple_to_index_[t];
            }
    }

    // subgroups
    std::vector<std::vector<std::uint8_t>> local_flag_sets(m);
    for (std::size_t j = 0; j < m; ++j) {
        const auto& lt = g.locals_[j];
        for (const auto& e : lt.entries) local_flag_sets[j].push_back(local_flags(lt.ring, e, n));
    }
    const std::uint8_t bits[] = {kU, kV, kL, kN, kW, kG0};
    g.subgroups_.assign(6, {});
    g.membership_.assign(6, std::vector<std::uint8_t>(order, 0));
    for (std::size_t idx = 0; idx < order; ++idx) {
        std::uint8_t f = 0xff;
        for (std::size_t j = 0; j < m; ++j) f &= local_flag_sets[j][g.parts_[idx * m + j]];
        for (int s = 0; s < 6; ++s) {
            if (f & bits[s]) {
                g.membership_[s][idx] = 1;
                g.subgroups_[s].push_back(idx);
            }
        }
    }

    // Weyl group: product of S_n, factor 0 most significant
    const auto sn = all_permutations(n);
    std::size_t wcount = 1;
    for (std::size_t j = 0; j < m; ++j) wcount *= sn.size();
    for (std::size_t w = 0; w < wcount; ++w) {
        PermWord word;
        std::size_t rest = w;
        std::vector<std::size_t> digits(m);
        for (std::size_t j = m; j-- > 0;) {
            digits[j] = rest % sn.size();
            rest /= sn.size();
        }
        for (std::size_t j = 0; j < m; ++j) word.perms.push_back(sn[digits[j]]);
        Mat pm{n, std::vector<RingElem>(cells, ring.zero())};
        for (std::size_t c = 0; c < n; ++c) {
            for (std::size_t j = 0; j < m; ++j) comp[j] = 0;
            for (std::size_t r = 0; r < n; ++r) {
                for (std::size_t j = 0; j < m; ++j) comp[j] = word.perms[j][c] == r ? 1 : 0;
                pm.at(static_cast<unsigned>(r), static_cast<unsigned>(c)) = ring.make(comp);
            }
        }
        g.weyl_.push_back(std::move(word));
        g.weyl_matrix_.push_back(*g.index_of(pm));
    }

    g.bruhat_.resize(order);
    for (std::size_t idx = 0; idx < order; ++idx) {
        std::size_t w = 0;
        for (std::size_t j = 0; j < m; ++j) w = w * sn.size() + g.locals_[j].bruhat[g.parts_[idx * m + j]];
        g.bruhat_[idx] = static_cast<std::uint32_t>(w);
    }
    return g;
}

std::optional<std::size_t> GroupTable::index_of(const Mat& mat) const {
    if (mat.n != n_) return std::nullopt;
    std::size_t t = 0;
    for (std::size_t j = 0; j < locals_.size(); ++j) {
        LocalMat lm(mat.entries.size());
        for (std::size_t c = 0; c < lm.size(); ++c) lm[c] = ring_.component(mat.entries[c], j);
        auto li = locals_[j].find(lm);
        if (!li) return std::nullopt;
        t += *li * tuple_stride_[j];
    }
    return tuple_to_index_[t];
}

std::size_t GroupTable::mul(std::size_t a, std::size_t b) const {
    const std::size_t order = elements_.size();
    if (!mul_table_.empty()) return mul_table_[a * order + b];
    const std::size_t m = locals_.size();
    std::size_t t = 0;
    for (std::size_t j = 0; j < m; ++j) t += locals_[j].mul(parts_[a * m + j], parts_[b * m + j]) * tuple_stride_[j];
    return tuple_to_index_[t];
}

RingElem GroupTable::det(std::size_t g) const {
    const std::size_t m = locals_.size();
    std::vector<std::uint64_t> comp(m);
    for (std::size_t j = 0; j < m; ++j) comp[j] = locals_[j].dets[parts_[g * m + j]];
    return ring_.make(comp);
}

std::size_t GroupTable::weyl_index(const PermWord& w) const {
    auto it = std::find(weyl_.begin(), weyl_.end(), w);
    if (it == weyl_.end()) throw std::invalid_argument("not a Weyl element of this group: " + w.to_string());
    return static_cast<std::size_t>(it - weyl_.begin());
}

Mat GroupTable::reduce(std::size_t g) const {
    const Mat& a = elements_.at(g);
    const std::size_t m = locals_.size();
    Mat out{n_, std::vector<RingElem>(a.entries.size())};
    std::vector<std::uint64_t> comp(m);
    for (std::size_t c = 0; c < a.entries.size(); ++c) {
        for (std::size_t j = 0; j < m; ++j) comp[j] = ring_.local(j).reduce(ring_.component(a.entries[c], j));
        out.entries[c] = residue_ring_.make(comp);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Free functions

GroupTable enumerate_gl(const RingSpec& ring, unsigned n, std::uint64_t max_candidates) {
    return GroupTable::build(ring, n, max_candidates);
}

std::vector<std::size_t> subgroup(const GroupTable& table, Subgroup which) { return table.subgroup(which); }

PermWord bruhat_cell(const GroupTable& table, const Mat& g) {
    const RingSpec& ring = table.ring();
    if (!ring.is_unit(determinant(ring, g))) throw std::invalid_argument("bruhat_cell needs an invertible matrix");
    PermWord w;
    for (std::size_t j = 0; j < ring.factor_count(); ++j) {
        LocalMat lm(g.entries.size());
        for (std::size_t c = 0; c < lm.size(); ++c) lm[c] = ring.component(g.entries[c], j);
        w.perms.push_back(local_bruhat(ring.local(j), lm, g.n));
    }
    return w;
}

std::optional<ULVFactor> factor_ULV(const GroupTable& table, const Mat& g) {
    const RingSpec& ring = table.ring();
    const unsigned n = g.n;
    Mat a = g;
    Mat u = Mat::identity(ring, n), v = Mat::identity(ring, n);
    for (unsigned i = n; i-- > 0;) {
        const auto pinv = ring.inverse(a.at(i, i));
        if (!pinv) return std::nullopt;
        for (unsigned r = 0; r < i; ++r) {
            const RingElem t = ring.mul(a.at(r, i), *pinv);
            if (t == ring.zero()) continue;
            for (unsigned c = 0; c < n; ++c) a.at(r, c) = ring.sub(a.at(r, c), ring.mul(t, a.at(i, c)));
            // u <- u (I + t e_ri)
            for (unsigned row = 0; row < n; ++row) u.at(row, i) = ring.add(u.at(row, i), ring.mul(t, u.at(row, r)));
        }
        for (unsigned c = 0; c < i; ++c) {
            const RingElem s = ring.mul(a.at(i, c), *pinv);
            if (s == ring.zero()) continue;
            for (unsigned r = 0; r < n; ++r) a.at(r, c) = ring.sub(a.at(r, c), ring.mul(s, a.at(r, i)));
            // v <- (I + s e_ic) v
            for (unsigned col = 0; col < n; ++col) v.at(i, col) = ring.add(v.at(i, col), ring.mul(s, v.at(c, col)));
        }
    }
    if (mat_mul(ring, mat_mul(ring, u, a), v) != g) throw std::logic_error("ULV factorization failed to reproduce g");
    return ULVFactor{std::move(u), std::move(a), std::move(v)};
}

std::vector<std::size_t> conjugate_subgroup(const GroupTable& table, const std::vector<std::size_t>& H, std::size_t w) {
    std::vector<std::size_t> out;
    out.reserve(H.size());
    for (std::size_t h : H) out.push_back(table.conjugate(h, w));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> intersect(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    std::vector<std::size_t> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<std::size_t> double_coset_reps(const GroupTable& table, const std::vector<std::size_t>& H,
                                           const std::vector<std::size_t>& K) {
    std::vector<std::uint8_t> seen(table.order(), 0);
    std::vector<std::size_t> reps;
    for (std::size_t g = 0; g < table.order(); ++g) {
        if (seen[g]) continue;
        reps.push_back(g);
        for (std::size_t h : H) {
            const std::size_t hg = table.mul(h, g);
            for (std::size_t k : K) seen[table.mul(hg, k)] = 1;
        }
    }
    return reps;
}

std::vector<std::size_t> product_set(const GroupTable& table, const std::vector<std::vector<std::size_t>>& factors) {
    std::vector<std::uint8_t> cur(table.order(), 0);
    cur[table.identity()] = 1;
    for (const auto& f : factors) {
        std::vector<std::uint8_t> next(table.order(), 0);
        for (std::size_t x = 0; x < table.order(); ++x) {
            if (!cur[x]) continue;
            for (std::size_t s : f) next[table.mul(x, s)] = 1;
        }
        cur = std::move(next);
    }
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < table.order(); ++x)
        if (cur[x]) out.push_back(x);
    return out;
}

std::vector<std::vector<std::size_t>> conjugacy_classes(const GroupTable& table) {
    std::vector<std::uint8_t> seen(table.order(), 0);
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t g = 0; g < table.order(); ++g) {
        if (seen[g]) continue;
        std::vector<std::size_t> cls;
        for (std::size_t x = 0; x < table.order(); ++x) {
            const std::size_t c = table.conjugate(g, x);
            if (!seen[c]) {
                seen[c] = 1;
                cls.push_back(c);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

}  // namespace pseries
