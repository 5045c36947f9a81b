#include "pseries/groupalg.hpp"

#include <algorithm>

namespace pseries {

AlgElem::AlgElem(const GroupTable& table, std::vector<Term> terms) : table_(&table), terms_(std::move(terms)) {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> merged;
    for (auto& t : terms_) {
        if (t.first >= table.order()) throw std::out_of_range("group index out of range");
        if (!merged.empty() && merged.back().first == t.first) {
            merged.back().second += t.second;
        } else {
            merged.push_back(std::move(t));
        }
    }
    std::erase_if(merged, [](const Term& t) { return t.second.is_zero(); });
    terms_ = std::move(merged);
}

AlgElem AlgElem::delta(const GroupTable& table, std::size_t g, const CycloNum& c) {
    AlgElem a(table);
    if (g >= table.order()) throw std::out_of_range("group index out of range");
    if (!c.is_zero()) a.terms_.emplace_back(static_cast<std::uint32_t>(g), c);
    return a;
}

AlgElem AlgElem::from_dense(const GroupTable& table, const CycloVector& v) {
    if (v.size() != table.order()) throw std::invalid_argument("dense vector has wrong length");
    AlgElem a(table);
    for (std::size_t g = 0; g < v.size(); ++g)
        if (!v[g].is_zero()) a.terms_.emplace_back(static_cast<std::uint32_t>(g), v[g]);
    return a;
}

CycloNum AlgElem::coeff(std::size_t g) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), g, [](const Term& t, std::size_t x) { return t.first < x; });
    if (it == terms_.end() || it->first != g) return CycloNum();
    return it->second;
}

CycloVector AlgElem::dense() const {
    if (!table_) throw TableMismatch("element has no group table");
    CycloVector v(table_->order());
    for (const auto& [g, c] : terms_) v[g] = c;
    return v;
}

const GroupTable* AlgElem::join(const AlgElem& b) const {
    if (table_ && b.table_ && table_ != b.table_) throw TableMismatch("group algebra elements from different tables");
    return table_ ? table_ : b.table_;
}

namespace {

std::vector<AlgElem::Term> merge(const std::vector<AlgElem::Term>& a, const std::vector<AlgElem::Term>& b, bool subtract) {
    std::vector<AlgElem::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, subtract ? -b[j].second : b[j].second);
            ++j;
        } else {
            CycloNum c = subtract ? a[i].second - b[j].second : a[i].second + b[j].second;
            if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

AlgElem& AlgElem::operator+=(const AlgElem& b) {
    table_ = join(b);
    terms_ = merge(terms_, b.terms_, false);
    return *this;
}

AlgElem& AlgElem::operator-=(const AlgElem& b) {
    table_ = join(b);
    terms_ = merge(terms_, b.terms_, true);
    return *this;
}

AlgElem AlgElem::operator-() const {
    AlgElem r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

AlgElem AlgElem::scaled(const CycloNum& c) const {
    AlgElem r(*table_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [g, x] : terms_) r.terms_.emplace_back(g, x * c);
    return r;
}

AlgElem operator*(const AlgElem& a, const AlgElem& b) {
    const GroupTable* t = a.join(b);
    if (!t) return AlgElem();
    AlgElem out(*t);
    if (a.terms_.empty() || b.terms_.empty()) return out;
    std::vector<CycloNum> acc(t->order());
    std::vector<std::uint8_t> touched(t->order(), 0);
    for (const auto& [x, ax] : a.terms_)
        for (const auto& [y, by] : b.terms_) {
            const std::size_t g = t->mul(x, y);
            acc[g].add_product(ax, by);
            touched[g] = 1;
        }
    for (std::size_t g = 0; g < acc.size(); ++g)
        if (touched[g] && !acc[g].is_zero()) out.terms_.emplace_back(static_cast<std::uint32_t>(g), std::move(acc[g]));
    return out;
}

bool operator==(const AlgElem& a, const AlgElem& b) {
    a.join(b);
    return a.terms_ == b.terms_;
}

std::string AlgElem::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(terms_[i].first) + ": " + terms_[i].second.to_string();
    }
    return s + "}";
}

AlgElem convolve(const AlgElem& a, const AlgElem& b) { return a * b; }

AlgElem star(const AlgElem& a) {
    if (!a.table()) return a;
    const GroupTable& t = *a.table();
    std::vector<AlgElem::Term> terms;
    terms.reserve(a.support_size());
    for (const auto& [g, c] : a.terms()) terms.emplace_back(static_cast<std::uint32_t>(t.inv(g)), c.conj());
    return AlgElem(t, std::move(terms));
}

CycloNum inner(const AlgElem& a, const AlgElem& b) {
    if (a.table() && b.table() && a.table() != b.table()) throw TableMismatch("group algebra elements from different tables");
    CycloNum s;
    const auto& x = a.terms();
    const auto& y = b.terms();
    std::size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        if (x[i].first < y[j].first) {
            ++i;
        } else if (y[j].first < x[i].first) {
            ++j;
        } else {
            s.add_product(x[i].second.conj(), y[j].second);
            ++i;
            ++j;
        }
    }
    return s;
}

AlgElem left_translate(std::size_t g, const AlgElem& a) {
    const GroupTable& t = *a.table();
    std::vector<AlgElem::Term> terms;
    terms.reserve(a.support_size());
    for (const auto& [x, c] : a.terms()) terms.emplace_back(static_cast<std::uint32_t>(t.mul(g, x)), c);
    return AlgElem(t, std::move(terms));
}

AlgElem right_translate(const AlgElem& a, std::size_t g) {
    const GroupTable& t = *a.table();
    std::vector<AlgElem::Term> terms;
    terms.reserve(a.support_size());
    for (const auto& [x, c] : a.terms()) terms.emplace_back(static_cast<std::uint32_t>(t.mul(x, g)), c);
    return AlgElem(t, std::move(terms));
}

AlgElem idempotent_subgroup(const GroupTable& table, const std::vector<std::size_t>& H) {
    if (H.empty()) throw std::invalid_argument("empty subgroup");
    std::vector<std::uint8_t> member(table.order(), 0);
    for (std::size_t h : H) {
        if (h >= table.order()) throw std::out_of_range("group index out of range");
        if (member[h]) throw std::invalid_argument("subgroup list has repeated elements");
        member[h] = 1;
    }
    for (std::size_t a : H)
        for (std::size_t b : H)
            if (!member[table.mul(a, b)]) throw std::invalid_argument("list is not closed under products");
    const CycloNum c(Rational(1, static_cast<long>(H.size())));
    std::vector<AlgElem::Term> terms;
    for (std::size_t h : H) terms.emplace_back(static_cast<std::uint32_t>(h), c);
    return AlgElem(table, std::move(terms));
}

AlgElem idempotent_subgroup(const GroupTable& table, Subgroup which) {
    const auto& H = table.subgroup(which);
    const CycloNum c(Rational(1, static_cast<long>(H.size())));
    std::vector<AlgElem::Term> terms;
    for (std::size_t h : H) terms.emplace_back(static_cast<std::uint32_t>(h), c);
    return AlgElem(table, std::move(terms));
}

AlgElem idempotent_char(const GroupTable& table, const CharacterSystem& sys, const LeviChar& chi) {
    const auto& L = table.subgroup(Subgroup::L);
    const Rational scale(1, static_cast<long>(L.size()));
    const auto& f = sys.field();
    std::vector<AlgElem::Term> terms;
    for (std::size_t l : L) {
        const Mat& m = table.element(l);
        std::vector<RingElem> diag;
        for (unsigned i = 0; i < table.n(); ++i) diag.push_back(m.at(i, i));
        const auto k = sys.levi_exponent(chi, diag);
        terms.emplace_back(static_cast<std::uint32_t>(l), f.zeta_power(-static_cast<long long>(k)) * CycloNum(scale));
    }
    return AlgElem(table, std::move(terms));
}

CycloVector to_vector(const AlgElem& a) { return a.dense(); }

std::size_t span_rank(const std::vector<AlgElem>& generators) {
    if (generators.empty()) return 0;
    const GroupTable* t = nullptr;
    for (const auto& g : generators) {
        if (!g.table()) continue;
        if (t && t != g.table()) throw TableMismatch("generators from different tables");
        t = g.table();
    }
    if (!t) return 0;
    SpanBasis basis(t->order());
    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        basis.insert(g.dense());
        if (basis.rank() == t->order()) break;
    }
    return basis.rank();
}

}  // namespace pseries
