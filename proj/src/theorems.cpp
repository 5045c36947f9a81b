#include "pseries/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <random>

#include <Eigen/Dense>

namespace pseries {

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 1469598103934665603ull) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

CycloVector coords_in(const SpanBasis& basis, const AlgElem& a) {
    auto c = basis.coordinates(a.dense());
    if (!c) throw std::logic_error("element is not in the expected span");
    return *c;
}

AlgElem combine(const GroupTable& t, const std::vector<AlgElem>& basis, const CycloVector& c) {
    AlgElem out(t);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!c[i].is_zero()) out += basis[i].scaled(c[i]);
    return out;
}

std::vector<std::uint8_t> bitmap(const GroupTable& t, const std::vector<std::size_t>& s) {
    std::vector<std::uint8_t> m(t.order(), 0);
    for (auto x : s) m[x] = 1;
    return m;
}

std::size_t bigint_to_size(const BigInt& b) { return static_cast<std::size_t>(b.get_ui()); }

// all g whose matrix satisfies pred
std::vector<std::size_t> filter(const GroupTable& t, const std::function<bool(const Mat&)>& pred) {
    std::vector<std::size_t> out;
    for (std::size_t g = 0; g < t.order(); ++g)
        if (pred(t.element(g))) out.push_back(g);
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Report

bool VerifyReport::all_passed() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; }));
}

void VerifyReport::append(const VerifyReport& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

nlohmann::json VerifyReport::to_json(bool include_timing) const {
    nlohmann::json j;
    j["ring"] = ring;
    j["n"] = n;
    j["seed"] = seed;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json e;
        e["id"] = c.id;
        e["status"] = c.passed ? "pass" : "fail";
        e["expected"] = c.expected;
        e["actual"] = c.actual;
        e["millis"] = include_timing ? nlohmann::json(std::round(c.millis * 1000) / 1000) : nlohmann::json(nullptr);
        j["checks"].push_back(std::move(e));
    }
    j["summary"] = {{"total", checks.size()}, {"passed", checks.size() - failures()}, {"failed", failures()},
                    {"status", all_passed() ? "pass" : "fail"}};
    return j;
}

// ---------------------------------------------------------------------------
// Cosets

std::vector<std::size_t> right_coset_reps(const GroupTable& table, const std::vector<std::size_t>& H) {
    std::vector<std::uint8_t> seen(table.order(), 0);
    std::vector<std::size_t> reps;
    for (std::size_t g = 0; g < table.order(); ++g) {
        if (seen[g]) continue;
        reps.push_back(g);
        for (std::size_t h : H) seen[table.mul(h, g)] = 1;
    }
    return reps;
}

std::vector<std::size_t> left_coset_reps(const GroupTable& table, const std::vector<std::size_t>& H) {
    std::vector<std::uint8_t> seen(table.order(), 0);
    std::vector<std::size_t> reps;
    for (std::size_t g = 0; g < table.order(); ++g) {
        if (seen[g]) continue;
        reps.push_back(g);
        for (std::size_t h : H) seen[table.mul(g, h)] = 1;
    }
    return reps;
}

// ---------------------------------------------------------------------------
// Halmos element

HalmosElement compute_halmos_z(const GroupTable& t, std::uint64_t seed) {
    const AlgElem one = AlgElem::one(t);
    const AlgElem eu = idempotent_subgroup(t, Subgroup::U);
    const AlgElem ev = idempotent_subgroup(t, Subgroup::V);

    // basis of A from alternating words, until a whole word length adds nothing
    SpanBasis span(t.order());
    std::vector<AlgElem> basis;
    auto offer = [&](const AlgElem& a) {
        if (!span.insert(a.dense())) return false;
        basis.push_back(a);
        return true;
    };
    offer(one);
    AlgElem wu = eu, wv = ev;
    while (true) {
        const bool a = offer(wu);
        const bool b = offer(wv);
        if (!a && !b) break;
        AlgElem nu = eu * wv;
        AlgElem nv = ev * wu;
        wu = std::move(nu);
        wv = std::move(nv);
    }
    const std::size_t d = basis.size();
    auto coords = [&](const AlgElem& a) { return coords_in(span, a); };

    // right actions of the generators on each basis element
    std::vector<AlgElem> b_eu, b_ev;
    for (const auto& b : basis) {
        b_eu.push_back(b * eu);
        b_ev.push_back(b * ev);
    }

    // Pi0: central idempotent spanning {a in A : a e_U = a e_V = 0}
    std::optional<AlgElem> pi0;
    {
        CycloMatrix m(2 * d, d);
        for (std::size_t i = 0; i < d; ++i) {
            const auto c1 = coords(b_eu[i]), c2 = coords(b_ev[i]);
            for (std::size_t r = 0; r < d; ++r) {
                m(r, i) = c1[r];
                m(d + r, i) = c2[r];
            }
        }
        const auto sol = solve_affine(m, CycloMatrix(2 * d, 1));
        if (sol.nullspace.size() > 1) throw std::logic_error("annihilator of e_U and e_V has dimension above one");
        if (sol.nullspace.size() == 1) {
            const AlgElem a = combine(t, basis, sol.nullspace[0]);
            const AlgElem a2 = a * a;
            const auto g = a.terms().front().first;
            const CycloNum lambda = a2.coeff(g) / a.coeff(g);
            if (lambda.is_zero() || a2 != a.scaled(lambda)) throw VerificationAlarm("annihilator block is not spanned by an idempotent");
            pi0 = a.scaled(lambda.inverse());
        }
    }

    const AlgElem uv = eu * ev, vu = ev * eu;
    const CycloVector c_uv = coords(uv), c_vu = coords(vu);
    const std::size_t blocks = pi0 ? 6 : 5;
    CycloMatrix m(blocks * d, d), rhs(blocks * d, 1);
    for (std::size_t i = 0; i < d; ++i) {
        const AlgElem& b = basis[i];
        std::vector<CycloVector> cols;
        cols.push_back(coords(b_eu[i] - eu * b));
        cols.push_back(coords(b_ev[i] - ev * b));
        cols.push_back(coords(star(b) - b));
        cols.push_back(coords(((b_eu[i] * ev) * eu) * ev));
        cols.push_back(coords(((b_ev[i] * eu) * ev) * eu));
        if (pi0) cols.push_back(coords(b * *pi0));
        for (std::size_t k = 0; k < blocks; ++k)
            for (std::size_t r = 0; r < d; ++r) m(k * d + r, i) = cols[k][r];
    }
    for (std::size_t r = 0; r < d; ++r) {
        rhs(3 * d + r, 0) = c_uv[r];
        rhs(4 * d + r, 0) = c_vu[r];
    }
    if (pi0) {
        const CycloVector c_pi = coords(*pi0);
        for (std::size_t r = 0; r < d; ++r) rhs(5 * d + r, 0) = c_pi[r];
    }

    HalmosElement h;
    h.basis = basis;
    h.has_null_block = pi0.has_value();
    {
        CycloMatrix raw(5 * d, d), raw_rhs(5 * d, 1);
        for (std::size_t r = 0; r < 5 * d; ++r) {
            for (std::size_t c = 0; c < d; ++c) raw(r, c) = m(r, c);
            raw_rhs(r, 0) = rhs(r, 0);
        }
        const auto raw_sol = solve_affine(raw, raw_rhs);
        if (!raw_sol.consistent) throw VerificationAlarm("the defining identities of z have no solution in A");
        h.raw_nullity = raw_sol.nullspace.size();
    }
    const auto sol = solve_affine(m, rhs);
    if (!sol.consistent) throw VerificationAlarm("the normalized identities of z have no solution in A");
    h.nullity = sol.nullspace.size();

    CycloVector unit(d);
    unit[0] = CycloNum(1);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (unsigned attempt = 0; attempt <= 50; ++attempt) {
        CycloVector c = sol.particular;
        if (attempt > 0) {
            if (sol.nullspace.empty()) break;
            for (const auto& nv : sol.nullspace) {
                const CycloNum r(coef(rng));
                for (std::size_t i = 0; i < d; ++i) c[i].add_product(r, nv[i]);
            }
        }
        const AlgElem z = combine(t, basis, c);
        CycloMatrix left(d, d);
        for (std::size_t k = 0; k < d; ++k) {
            const auto col = coords(z * basis[k]);
            for (std::size_t r = 0; r < d; ++r) left(r, k) = col[r];
        }
        CycloMatrix target(d, 1);
        target(0, 0) = CycloNum(1);
        const auto inv = solve_affine(left, target);
        h.attempts = attempt + 1;
        if (!inv.consistent || !inv.nullspace.empty()) continue;
        h.z = z;
        h.z_inverse = combine(t, basis, inv.particular);
        if (h.z * h.z_inverse != one) throw std::logic_error("inverse of z failed to verify");
        return h;
    }
    throw VerificationAlarm("no invertible solution for z found");
}

// ---------------------------------------------------------------------------
// PrincipalSeries

PrincipalSeries::PrincipalSeries(const GroupTable& table, std::uint64_t seed)
    : table_(table),
      chars_(table.ring(), table.n()),
      seed_(seed),
      e_U_(idempotent_subgroup(table, Subgroup::U)),
      e_V_(idempotent_subgroup(table, Subgroup::V)),
      e_UV_(e_U_ * e_V_) {}

const HalmosElement& PrincipalSeries::halmos() {
    if (!halmos_) halmos_ = compute_halmos_z(table_, seed_);
    return *halmos_;
}

const AlgElem& PrincipalSeries::e_chi(const LeviChar& chi) {
    auto it = e_chi_.find(chi);
    if (it == e_chi_.end()) it = e_chi_.emplace(chi, idempotent_char(table_, chars_, chi)).first;
    return it->second;
}

const AlgElem& PrincipalSeries::E(const LeviChar& chi) {
    auto it = E_.find(chi);
    if (it == E_.end()) {
        AlgElem e = halmos().z * (e_UV_ * e_chi(chi));
        if (e * e != e) throw VerificationAlarm("E_chi is not idempotent for " + chi.to_string());
        it = E_.emplace(chi, std::move(e)).first;
    }
    return it->second;
}

const std::vector<std::size_t>& PrincipalSeries::levi_double_cosets() {
    if (!dcosets_) {
        const auto lv = product_set(table_, {table_.subgroup(Subgroup::L), table_.subgroup(Subgroup::V)});
        const auto lu = product_set(table_, {table_.subgroup(Subgroup::L), table_.subgroup(Subgroup::U)});
        dcosets_ = double_coset_reps(table_, lv, lu);
    }
    return *dcosets_;
}

const std::vector<std::size_t>& PrincipalSeries::levi_left_cosets() {
    if (!lcosets_) {
        const auto lu = product_set(table_, {table_.subgroup(Subgroup::L), table_.subgroup(Subgroup::U)});
        lcosets_ = left_coset_reps(table_, lu);
    }
    return *lcosets_;
}

const std::vector<std::vector<std::size_t>>& PrincipalSeries::classes() {
    if (!classes_) {
        classes_ = conjugacy_classes(table_);
        class_of_.assign(table_.order(), 0);
        for (std::size_t c = 0; c < classes_->size(); ++c)
            for (std::size_t g : (*classes_)[c]) class_of_[g] = c;
    }
    return *classes_;
}

const std::vector<CycloNum>& PrincipalSeries::pind_character(const LeviChar& chi) {
    auto it = characters_.find(chi);
    if (it != characters_.end()) return it->second;
    const auto& cls = classes();
    const AlgElem& e = E(chi);
    std::vector<CycloNum> sums(cls.size());
    for (const auto& [g, c] : e.terms()) sums[class_of_[g]] += c;
    // trace of g on C[G]E is sum_x E(x^-1 g^-1 x) = |C_G(g)| * (sum of E over the class of g^-1)
    std::vector<CycloNum> values(cls.size());
    const long order = static_cast<long>(table_.order());
    for (std::size_t c = 0; c < cls.size(); ++c) {
        const std::size_t inv_class = class_of_[table_.inv(cls[c].front())];
        values[c] = sums[inv_class] * CycloNum(Rational(order, static_cast<long>(cls[c].size())));
    }
    return characters_.emplace(chi, std::move(values)).first->second;
}

const EndAlgebra& PrincipalSeries::end_algebra(const LeviChar& chi) {
    auto it = end_algebras_.find(chi);
    if (it == end_algebras_.end()) it = end_algebras_.emplace(chi, end_algebra_blocks(*this, chi)).first;
    return it->second;
}

// ---------------------------------------------------------------------------
// Structure of G

namespace {

CheckResult check_ulv_injective(const GroupTable& t) {
    CheckResult r;
    r.id = "ulv-injective";
    const auto& U = t.subgroup(Subgroup::U);
    const auto& L = t.subgroup(Subgroup::L);
    const auto& V = t.subgroup(Subgroup::V);
    const std::size_t expected = U.size() * L.size() * V.size();
    const std::size_t actual = product_set(t, {U, L, V}).size();
    r.expected = {{"distinct_products", expected}};
    r.actual = {{"distinct_products", actual}};
    r.passed = expected == actual;
    return r;
}

CheckResult check_reduction_surjective(const GroupTable& t) {
    CheckResult r;
    r.id = "reduction-surjective";
    std::set<std::vector<RingElem>> image;
    for (std::size_t g = 0; g < t.order(); ++g) image.insert(t.reduce(g).entries);
    std::uint64_t expected = 1;
    for (const auto& k : t.residue_ring().locals()) expected *= gl_order_over_field(k.order(), t.n());
    const std::size_t kernel = t.subgroup(Subgroup::G0).size();
    r.expected = {{"image", expected}, {"order", expected * kernel}};
    r.actual = {{"image", image.size()}, {"order", t.order()}};
    r.passed = image.size() == expected && t.order() == expected * kernel;
    return r;
}

CheckResult check_kernel_factorization(const GroupTable& t) {
    CheckResult r;
    r.id = "kernel-factorization";
    const auto& G0 = t.subgroup(Subgroup::G0);
    const std::vector<std::vector<std::size_t>> parts{intersect(t.subgroup(Subgroup::U), G0),
                                                      intersect(t.subgroup(Subgroup::L), G0),
                                                      intersect(t.subgroup(Subgroup::V), G0)};
    const char* names = "ULV";
    std::vector<unsigned> order{0, 1, 2};
    nlohmann::json actual = nlohmann::json::object(), expected = nlohmann::json::object();
    bool ok = parts[0].size() * parts[1].size() * parts[2].size() == G0.size();
    do {
        std::string key;
        for (unsigned i : order) key += names[i];
        const auto prod = product_set(t, {parts[order[0]], parts[order[1]], parts[order[2]]});
        ok = ok && prod == G0;
        actual[key] = prod.size();
        expected[key] = G0.size();
    } while (std::next_permutation(order.begin(), order.end()));
    r.expected = expected;
    r.actual = actual;
    r.passed = ok;
    return r;
}

CheckResult check_unipotent_split(const GroupTable& t) {
    CheckResult r;
    r.id = "unipotent-split";
    const auto& U = t.subgroup(Subgroup::U);
    const auto& V = t.subgroup(Subgroup::V);
    std::size_t good = 0;
    for (std::size_t w = 0; w < t.weyl().size(); ++w) {
        const std::size_t wm = t.weyl_matrix(w);
        const auto Uw = conjugate_subgroup(t, U, wm), Vw = conjugate_subgroup(t, V, wm);
        bool ok = true;
        for (const auto* X : {&U, &V}) {
            const auto a = intersect(*X, Uw), b = intersect(*X, Vw);
            ok = ok && a.size() * b.size() == X->size() && product_set(t, {a, b}) == *X;
        }
        good += ok;
    }
    r.expected = {{"weyl_elements_split", t.weyl().size()}};
    r.actual = {{"weyl_elements_split", good}};
    r.passed = good == t.weyl().size();
    return r;
}

CheckResult check_bruhat_partition(const GroupTable& t) {
    CheckResult r;
    r.id = "bruhat-partition";
    std::vector<std::size_t> cell_sizes, fiber_sizes;
    bool ok = true;
    std::vector<std::size_t> total(t.order(), 0);
    for (std::size_t w = 0; w < t.weyl().size(); ++w) {
        const auto cell = product_set(t, {t.subgroup(Subgroup::V), {t.weyl_matrix(w)}, t.subgroup(Subgroup::L),
                                          t.subgroup(Subgroup::U), t.subgroup(Subgroup::G0)});
        std::vector<std::size_t> fiber;
        for (std::size_t g = 0; g < t.order(); ++g)
            if (t.bruhat_label(g) == w) fiber.push_back(g);
        for (std::size_t g : cell) ++total[g];
        ok = ok && cell == fiber;
        cell_sizes.push_back(cell.size());
        fiber_sizes.push_back(fiber.size());
    }
    // cells cover G exactly once
    ok = ok && std::all_of(total.begin(), total.end(), [](std::size_t c) { return c == 1; });
    r.expected = {{"cell_sizes", cell_sizes}};
    r.actual = {{"cell_sizes", fiber_sizes}};
    r.passed = ok;
    return r;
}

CheckResult check_cell_separation(const GroupTable& t) {
    CheckResult r;
    r.id = "cell-separation";
    const auto ulv = bitmap(t, product_set(t, {t.subgroup(Subgroup::U), t.subgroup(Subgroup::L), t.subgroup(Subgroup::V)}));
    const auto& W = t.weyl();
    std::size_t pairs = 0, violations = 0;
    for (std::size_t a = 0; a < W.size(); ++a)
        for (std::size_t b = 0; b < W.size(); ++b) {
            if (a == b || W[a].length() > W[b].length()) continue;
            ++pairs;
            const std::size_t tinv = t.inv(t.weyl_matrix(a)), rm = t.weyl_matrix(b);
            for (std::size_t u : t.subgroup(Subgroup::U)) {
                if (ulv[t.mul(t.mul(tinv, u), rm)]) {
                    ++violations;
                    break;
                }
            }
        }
    r.expected = {{"pairs", pairs}, {"violations", 0}};
    r.actual = {{"pairs", pairs}, {"violations", violations}};
    r.passed = violations == 0;
    return r;
}

}  // namespace

VerifyReport check_proposition_G(const GroupTable& t) {
    VerifyReport rep;
    rep.ring = t.ring().canonical();
    rep.n = t.n();
    for (auto fn : {check_ulv_injective, check_reduction_surjective, check_kernel_factorization, check_unipotent_split,
                    check_bruhat_partition, check_cell_separation}) {
        const auto start = Clock::now();
        CheckResult c = fn(t);
        c.millis = millis_since(start);
        rep.checks.push_back(std::move(c));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Idempotent identities and bimodule maps

CheckResult check_idempotent_triple(PrincipalSeries& ps) {
    const GroupTable& t = ps.table();
    CheckResult r;
    r.id = "idempotent-triple";
    std::size_t good = 0;
    for (std::size_t w = 0; w < t.weyl().size(); ++w) {
        const std::size_t wm = t.weyl_matrix(w);
        const AlgElem euw = idempotent_subgroup(t, conjugate_subgroup(t, t.subgroup(Subgroup::U), wm));
        const AlgElem evw = idempotent_subgroup(t, conjugate_subgroup(t, t.subgroup(Subgroup::V), wm));
        good += (ps.e_V() * euw) * evw == (ps.e_V() * ps.e_U()) * evw;
    }
    r.expected = {{"identities", t.weyl().size()}};
    r.actual = {{"identities", good}};
    r.passed = good == t.weyl().size();
    return r;
}

CheckResult check_phi_w(PrincipalSeries& ps, std::size_t w) {
    const GroupTable& t = ps.table();
    CheckResult r;
    r.id = "phi-isomorphism";
    const std::size_t wm = t.weyl_matrix(w);
    const auto Vw = conjugate_subgroup(t, t.subgroup(Subgroup::V), wm);
    const AlgElem euw = idempotent_subgroup(t, conjugate_subgroup(t, t.subgroup(Subgroup::U), wm));
    const AlgElem evw = idempotent_subgroup(t, Vw);
    const AlgElem x = euw * evw;
    const AlgElem y = ps.e_V() * x;
    // x = x e_{V^w}, so right translates only depend on the coset V^w g
    std::vector<AlgElem> gx, gy;
    for (std::size_t g : right_coset_reps(t, Vw)) {
        gx.push_back(right_translate(x, g));
        gy.push_back(right_translate(y, g));
    }
    const std::size_t rx = span_rank(gx), ry = span_rank(gy);
    const bool conj = right_translate(ps.e_UV(), wm) == left_translate(wm, x);
    r.expected = {{"w", t.weyl()[w].to_string()}, {"rank", rx}, {"conjugation_identity", true}};
    r.actual = {{"w", t.weyl()[w].to_string()}, {"rank", ry}, {"conjugation_identity", conj}};
    r.passed = rx == ry && conj;
    return r;
}

CheckResult check_summand(PrincipalSeries& ps, std::size_t w) {
    const GroupTable& t = ps.table();
    CheckResult r;
    r.id = "summand-isomorphism";
    const AlgElem& uv = ps.e_UV();
    const std::size_t wm = t.weyl_matrix(w);
    std::vector<AlgElem> phi;
    for (std::size_t l : t.subgroup(Subgroup::L)) phi.push_back(right_translate(uv, t.mul(wm, l)) * uv);
    std::vector<AlgElem> cell;
    for (std::size_t g : double_coset_reps(t, t.subgroup(Subgroup::V), t.subgroup(Subgroup::U)))
        if (t.bruhat_label(g) == w) cell.push_back(right_translate(uv, g) * uv);
    const std::size_t r_phi = span_rank(phi), r_cell = span_rank(cell);
    std::vector<AlgElem> both = phi;
    both.insert(both.end(), cell.begin(), cell.end());
    const std::size_t r_both = span_rank(both);
    const std::size_t L = t.subgroup(Subgroup::L).size();
    r.expected = {{"w", t.weyl()[w].to_string()}, {"image_rank", L}, {"cell_rank", L}, {"joint_rank", L}};
    r.actual = {{"w", t.weyl()[w].to_string()}, {"image_rank", r_phi}, {"cell_rank", r_cell}, {"joint_rank", r_both}};
    r.passed = r_phi == L && r_cell == L && r_both == L;
    return r;
}

CheckResult check_lin_independence(PrincipalSeries& ps) {
    const GroupTable& t = ps.table();
    CheckResult r;
    r.id = "independence";
    const AlgElem& uv = ps.e_UV();
    std::vector<AlgElem> gens;
    for (std::size_t w = 0; w < t.weyl().size(); ++w)
        for (std::size_t l : t.subgroup(Subgroup::L)) gens.push_back(right_translate(uv, t.mul(t.weyl_matrix(w), l)) * uv);
    const std::size_t expected = t.weyl().size() * t.subgroup(Subgroup::L).size();
    const std::size_t actual = span_rank(gens);
    r.expected = {{"rank", expected}};
    r.actual = {{"rank", actual}};
    r.passed = expected == actual;
    return r;
}

CheckResult check_end_sandwich(PrincipalSeries& ps) {
    const GroupTable& t = ps.table();
    CheckResult r;
    r.id = "end-sandwich";
    nlohmann::json expected = nlohmann::json::object(), actual = nlohmann::json::object();
    bool ok = true;
    for (const auto& chi : all_levi_chars(ps.chars())) {
        const AlgElem& e = ps.E(chi);
        const AlgElem x = ps.e_UV() * ps.e_chi(chi);
        std::vector<AlgElem> ge, gx;
        for (std::size_t g : ps.levi_left_cosets()) {
            ge.push_back(left_translate(g, e));
            gx.push_back(left_translate(g, x));
        }
        const std::size_t re = span_rank(ge), rx = span_rank(gx);
        std::vector<AlgElem> both = ge;
        both.insert(both.end(), gx.begin(), gx.end());
        const std::size_t rb = span_rank(both);
        const bool idem = e * e == e;
        ok = ok && idem && re == rx && rb == rx;
        expected[chi.to_string()] = {{"rank", rx}, {"joint_rank", rx}, {"idempotent", true}};
        actual[chi.to_string()] = {{"rank", re}, {"joint_rank", rb}, {"idempotent", idem}};
    }
    (void)t;
    r.expected = expected;
    r.actual = actual;
    r.passed = ok;
    return r;
}

// ---------------------------------------------------------------------------
// Intertwining numbers

std::size_t intertwining_dim_formula(const CharacterSystem& sys, const LeviChar& chi, const LeviChar& sigma) {
    std::size_t count = 0;
    for (const auto& w : sys.weyl()) count += w_act(w, chi) == sigma;
    return count;
}

std::size_t intertwining_dim_oracle(PrincipalSeries& ps, const LeviChar& chi, const LeviChar& sigma) {
    const AlgElem& ec = ps.E(chi);
    const AlgElem& es = ps.E(sigma);
    std::vector<AlgElem> gens;
    for (std::size_t g : ps.levi_double_cosets()) gens.push_back(es * left_translate(g, ec));
    return span_rank(gens);
}

std::size_t intertwining_dim_characters(PrincipalSeries& ps, const LeviChar& chi, const LeviChar& sigma) {
    const auto& cls = ps.classes();
    const auto& a = ps.pind_character(chi);
    const auto& b = ps.pind_character(sigma);
    CycloNum s;
    for (std::size_t c = 0; c < cls.size(); ++c) s.add_product(a[c].conj() * CycloNum(static_cast<long>(cls[c].size())), b[c]);
    s *= CycloNum(Rational(1, static_cast<long>(ps.table().order())));
    if (!s.is_rational()) throw VerificationAlarm("character inner product is not rational");
    const Rational q = s.rational_value();
    if (q.get_den() != 1 || q < 0) throw VerificationAlarm("character inner product is not a non-negative integer: " + q.get_str());
    return static_cast<std::size_t>(q.get_num().get_ui());
}

IntertwiningTable intertwining_table(PrincipalSeries& ps) {
    IntertwiningTable t;
    t.chars = all_levi_chars(ps.chars());
    const std::size_t k = t.chars.size();
    t.formula.assign(k, std::vector<std::size_t>(k));
    t.oracle = t.characters = t.formula;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            t.formula[i][j] = intertwining_dim_formula(ps.chars(), t.chars[i], t.chars[j]);
            t.oracle[i][j] = intertwining_dim_oracle(ps, t.chars[i], t.chars[j]);
            t.characters[i][j] = intertwining_dim_characters(ps, t.chars[i], t.chars[j]);
        }
    return t;
}

std::string intertwining_csv(const IntertwiningTable& t) {
    std::string out = "chi,sigma,formula,oracle,characters\n";
    for (std::size_t i = 0; i < t.chars.size(); ++i)
        for (std::size_t j = 0; j < t.chars.size(); ++j) {
            out += t.chars[i].to_string() + "," + t.chars[j].to_string() + "," + std::to_string(t.formula[i][j]) + "," +
                   std::to_string(t.oracle[i][j]) + "," + std::to_string(t.characters[i][j]) + "\n";
        }
    return out;
}

// ---------------------------------------------------------------------------
// Endomorphism algebras

EndAlgebra end_algebra_blocks(PrincipalSeries& ps, const LeviChar& chi) {
    const GroupTable& t = ps.table();
    const AlgElem& e = ps.E(chi);
    SpanBasis span(t.order());
    std::vector<AlgElem> basis;
    for (std::size_t g : ps.levi_double_cosets()) {
        AlgElem b = e * left_translate(g, e);
        if (span.insert(b.dense())) basis.push_back(std::move(b));
    }
    const std::size_t d = basis.size();
    EndAlgebra out;
    out.dim = d;

    // structure constants: prod[i][j] = coordinates of b_i b_j
    std::vector<std::vector<CycloVector>> prod(d, std::vector<CycloVector>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) prod[i][j] = coords_in(span, basis[i] * basis[j]);

    // center: sum_i x_i (b_i b_j - b_j b_i) = 0 for all j
    CycloMatrix comm(d * d, d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t k = 0; k < d; ++k) comm(j * d + k, i) = prod[i][j][k] - prod[j][i][k];
    const auto center = solve_affine(comm, CycloMatrix(d * d, 1)).nullspace;
    out.center_dim = center.size();
    if (d == 0) return out;

    std::mt19937_64 rng(ps.seed() ^ fnv1a(chi.to_string()));
    std::uniform_int_distribution<int> coef(1, 1000);
    for (unsigned attempt = 1; attempt <= 5; ++attempt) {
        out.attempts = attempt;
        CycloVector c(d);
        for (const auto& v : center) {
            const CycloNum r(coef(rng));
            for (std::size_t i = 0; i < d; ++i) c[i].add_product(r, v[i]);
        }
        // left multiplication by c on B
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
        for (std::size_t j = 0; j < d; ++j) {
            CycloVector col(d);
            for (std::size_t i = 0; i < d; ++i)
                if (!c[i].is_zero())
                    for (std::size_t k = 0; k < d; ++k) col[k].add_product(c[i], prod[i][j][k]);
            for (std::size_t k = 0; k < d; ++k)
                m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) = to_float(col[k]);
        }
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
        if (solver.info() != Eigen::Success) continue;
        std::vector<std::complex<double>> ev(solver.eigenvalues().data(), solver.eigenvalues().data() + d);
        double scale = 1;
        for (const auto& x : ev) scale = std::max(scale, std::abs(x));
        // single-linkage clustering
        std::vector<std::complex<double>> centers;
        std::vector<std::size_t> sizes;
        for (const auto& x : ev) {
            bool placed = false;
            for (std::size_t k = 0; k < centers.size(); ++k) {
                if (std::abs(centers[k] - x) < 1e-6 * scale) {
                    centers[k] = (centers[k] * static_cast<double>(sizes[k]) + x) / static_cast<double>(sizes[k] + 1);
                    ++sizes[k];
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                centers.push_back(x);
                sizes.push_back(1);
            }
        }
        double min_gap = std::numeric_limits<double>::infinity();
        for (std::size_t a = 0; a < centers.size(); ++a)
            for (std::size_t b = a + 1; b < centers.size(); ++b) min_gap = std::min(min_gap, std::abs(centers[a] - centers[b]));
        if (centers.size() != out.center_dim || min_gap < 1e-8 * scale) continue;

        std::vector<unsigned> blocks;
        double worst = 0;
        bool square = true;
        const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(m.rows(), m.cols());
        for (std::size_t k = 0; k < centers.size(); ++k) {
            Eigen::MatrixXcd p = id;
            for (std::size_t o = 0; o < centers.size(); ++o)
                if (o != k) p = p * (m - centers[o] * id) / (centers[k] - centers[o]);
            const double tr = p.trace().real();
            const double rounded = std::round(tr);
            worst = std::max(worst, std::abs(tr - rounded));
            const auto di = static_cast<unsigned>(std::llround(std::sqrt(std::max(rounded, 0.0))));
            if (static_cast<double>(di) * di != rounded) square = false;
            blocks.push_back(di);
        }
        out.max_residual = worst;
        if (worst >= 1e-6) throw VerificationAlarm("block trace rounding residual too large for " + chi.to_string());
        if (!square) throw VerificationAlarm("block trace is not a perfect square for " + chi.to_string());
        std::size_t sum = 0;
        for (unsigned b : blocks) sum += static_cast<std::size_t>(b) * b;
        if (sum != d) throw VerificationAlarm("block sizes do not add up to the algebra dimension for " + chi.to_string());
        std::sort(blocks.begin(), blocks.end());
        out.blocks = blocks;
        return out;
    }
    throw VerificationAlarm("eigen-splitting failed to separate the blocks of End(pind " + chi.to_string() + ")");
}

namespace {

// Brute-force class count of the stabilizer, from the permutation words.
std::size_t stabilizer_class_count(const CharacterSystem& sys, const LeviChar& chi) {
    std::vector<PermWord> H;
    for (std::size_t w : stabilizer(sys, chi)) H.push_back(sys.weyl()[w]);
    std::set<PermWord> seen;
    std::size_t classes = 0;
    for (const auto& h : H) {
        if (seen.count(h)) continue;
        ++classes;
        for (const auto& x : H) seen.insert(x.inverse().compose(h).compose(x));
    }
    return classes;
}

nlohmann::json end_algebra_entry(PrincipalSeries& ps, const LeviChar& chi, bool& ok) {
    const EndAlgebra& b = ps.end_algebra(chi);
    const std::size_t stab = stabilizer(ps.chars(), chi).size();
    std::vector<unsigned> degrees;
    for (const auto& x : stabilizer_irrep_degrees(chi)) degrees.push_back(static_cast<unsigned>(x.get_ui()));
    const std::size_t classes = stabilizer_class_count(ps.chars(), chi);
    ok = ok && b.dim == stab && b.blocks == degrees && b.blocks.size() == classes && b.center_dim == classes;
    return {{"dim", b.dim}, {"blocks", b.blocks}, {"center_dim", b.center_dim}};
}

}  // namespace

// ---------------------------------------------------------------------------
// Scalar twist and Levi support

CheckResult check_scalar_twist(PrincipalSeries& ps, const std::vector<UnitChar>& chi1) {
    const GroupTable& t = ps.table();
    const CharacterSystem& sys = ps.chars();
    CheckResult r;
    r.id = "scalar-twist";
    const unsigned e = sys.conductor();
    auto twist_exp = [&](std::size_t g) {
        const RingElem d = t.det(g);
        std::uint64_t k = 0;
        for (std::size_t j = 0; j < chi1.size(); ++j) k = (k + sys.unit_exponent(j, chi1[j], t.ring().component(d, j))) % e;
        return k;
    };
    auto twist = [&](const AlgElem& a) {
        std::vector<AlgElem::Term> terms;
        for (const auto& [g, c] : a.terms()) terms.emplace_back(g, c * sys.field().zeta_power(static_cast<long long>(twist_exp(g))));
        return AlgElem(t, std::move(terms));
    };

    // generating set and its closure
    std::vector<std::size_t> gens;
    for (Subgroup s : {Subgroup::U, Subgroup::V, Subgroup::L, Subgroup::W, Subgroup::G0})
        for (std::size_t g : t.subgroup(s)) gens.push_back(g);
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<std::uint8_t> reached(t.order(), 0);
    std::vector<std::size_t> frontier{t.identity()};
    reached[t.identity()] = 1;
    std::size_t count = 1;
    while (!frontier.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t x : frontier)
            for (std::size_t s : gens) {
                const std::size_t y = t.mul(x, s);
                if (!reached[y]) {
                    reached[y] = 1;
                    ++count;
                    next.push_back(y);
                }
            }
        frontier = std::move(next);
    }
    bool multiplicative = true;
    for (std::size_t a : gens)
        for (std::size_t b : gens)
            multiplicative = multiplicative && (twist_exp(a) + twist_exp(b)) % e == twist_exp(t.mul(a, b));

    const bool fixes_u = twist(ps.e_U()) == ps.e_U();
    const bool fixes_v = twist(ps.e_V()) == ps.e_V();
    const bool to_el = twist(ps.e_chi(sys.power(chi1))) == idempotent_subgroup(t, Subgroup::L);
    std::string name;
    for (std::size_t j = 0; j < chi1.size(); ++j) name += (j ? "x" : "") + chi1[j].to_string();
    r.expected = {{"chi1", name}, {"generates", t.order()}, {"multiplicative", true}, {"fixes_eU", true},
                  {"fixes_eV", true}, {"maps_echi_to_eL", true}};
    r.actual = {{"chi1", name}, {"generates", count}, {"multiplicative", multiplicative}, {"fixes_eU", fixes_u},
                {"fixes_eV", fixes_v}, {"maps_echi_to_eL", to_el}};
    r.passed = count == t.order() && multiplicative && fixes_u && fixes_v && to_el;
    return r;
}

std::vector<std::vector<unsigned>> compositions(unsigned n) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur;
    std::function<void(unsigned)> rec = [&](unsigned left) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (unsigned p = 1; p <= left; ++p) {
            cur.push_back(p);
            rec(left - p);
            cur.pop_back();
        }
    };
    rec(n);
    return out;
}

CheckResult check_levi_support(PrincipalSeries& ps, const std::vector<unsigned>& composition) {
    const GroupTable& t = ps.table();
    const RingSpec& R = t.ring();
    const unsigned n = t.n();
    CheckResult r;
    r.id = "levi-support";
    std::vector<unsigned> block;
    for (std::size_t b = 0; b < composition.size(); ++b)
        for (unsigned i = 0; i < composition[b]; ++i) block.push_back(static_cast<unsigned>(b));
    if (block.size() != n) throw std::invalid_argument("composition does not sum to n");
    const RingElem zero = R.zero(), one = R.one();
    auto is_delta = [&](const Mat& m, unsigned i, unsigned j) { return m.at(i, j) == (i == j ? one : zero); };

    const auto Lp = filter(t, [&](const Mat& m) {
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j)
                if (block[i] != block[j] && m.at(i, j) != zero) return false;
        return true;
    });
    const auto Up = intersect(Lp, t.subgroup(Subgroup::U));
    const auto Vp = intersect(Lp, t.subgroup(Subgroup::V));
    const auto Upp = filter(t, [&](const Mat& m) {
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j)
                if (block[i] >= block[j] && !is_delta(m, i, j)) return false;
        return true;
    });
    const auto Vpp = filter(t, [&](const Mat& m) {
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j)
                if (block[i] <= block[j] && !is_delta(m, i, j)) return false;
        return true;
    });
    const bool fu = idempotent_subgroup(t, Up) * idempotent_subgroup(t, Upp) == ps.e_U();
    const bool fv = idempotent_subgroup(t, Vp) * idempotent_subgroup(t, Vpp) == ps.e_V();
    const std::size_t expected = Lp.size() * Upp.size() * Vpp.size();
    const std::size_t actual = product_set(t, {Lp, Upp, Vpp}).size();
    std::string name;
    for (std::size_t b = 0; b < composition.size(); ++b) name += (b ? "," : "") + std::to_string(composition[b]);
    r.expected = {{"composition", name}, {"eU_factors", true}, {"eV_factors", true}, {"distinct_products", expected}};
    r.actual = {{"composition", name}, {"eU_factors", fu}, {"eV_factors", fv}, {"distinct_products", actual}};
    r.passed = fu && fv && expected == actual;
    return r;
}

// ---------------------------------------------------------------------------
// Counting

BigInt gl_order(const RingSpec& ring, unsigned n) {
    BigInt order = 1;
    for (const auto& l : ring.locals()) {
        const std::uint64_t q = l.residue_field().order();
        BigInt kernel;
        mpz_ui_pow_ui(kernel.get_mpz_t(), l.order() / q, static_cast<unsigned long>(n) * n);
        order *= BigInt(std::to_string(gl_order_over_field(q, n))) * kernel;
    }
    return order;
}

void require_pipeline_size(const RingSpec& ring, unsigned n, std::uint64_t max_order) {
    const BigInt order = gl_order(ring, n);
    if (order > BigInt(std::to_string(max_order)))
        throw SizeGuardExceeded("|GL_" + std::to_string(n) + "(" + ring.canonical() + ")| = " + order.get_str() +
                                " exceeds the group-algebra limit " + std::to_string(max_order));
}

BigInt principal_series_formula(const RingSpec& ring, unsigned n) {
    BigInt c = 1;
    for (const auto& l : ring.locals()) c *= multipartition_count(static_cast<unsigned>(l.unit_count()), n);
    return c;
}

PrincipalSeriesCount count_principal_series(PrincipalSeries& ps) {
    PrincipalSeriesCount c{0, principal_series_formula(ps.table().ring(), ps.table().n()), 0};
    for (const auto& chi : orbit_representatives(ps.chars())) {
        c.pipeline += static_cast<unsigned long>(ps.end_algebra(chi).blocks.size());
        c.stabilizer_classes += irrep_count_of_stabilizer(chi);
    }
    return c;
}

std::size_t count_pind_trivial_constituents(PrincipalSeries& ps) {
    return ps.end_algebra(ps.chars().trivial()).blocks.size();
}

// ---------------------------------------------------------------------------
// Driver

const std::vector<std::string>& check_ids() {
    static const std::vector<std::string> ids{
        "ulv-injective",      "reduction-surjective", "kernel-factorization", "unipotent-split",
        "bruhat-partition",   "cell-separation",      "halmos-element",       "idempotent-triple",
        "phi-isomorphism",    "summand-isomorphism",  "independence",         "end-sandwich",
        "intertwining",       "end-algebra",          "scalar-twist",         "levi-support",
        "trivial-constituents", "local-reduction",    "principal-series-count"};
    return ids;
}

namespace {

CheckResult merge_results(const std::string& id, const std::vector<CheckResult>& parts) {
    CheckResult r;
    r.id = id;
    r.passed = true;
    r.expected = nlohmann::json::array();
    r.actual = nlohmann::json::array();
    for (const auto& p : parts) {
        r.passed = r.passed && p.passed;
        r.expected.push_back(p.expected);
        r.actual.push_back(p.actual);
    }
    return r;
}

CheckResult run_halmos(PrincipalSeries& ps) {
    CheckResult r;
    r.id = "halmos-element";
    const GroupTable& t = ps.table();
    const HalmosElement& h = ps.halmos();
    const AlgElem& z = h.z;
    const AlgElem uv = ps.e_UV(), vu = ps.e_V() * ps.e_U();
    const bool self_adjoint = star(z) == z;
    const bool central = z * ps.e_U() == ps.e_U() * z && z * ps.e_V() == ps.e_V() * z;
    const bool uv_id = z * (uv * uv) == uv;
    const bool vu_id = z * (vu * vu) == vu;
    const bool invertible = z * h.z_inverse == AlgElem::one(t);
    bool fields = true;
    for (const auto& l : t.ring().locals()) fields = fields && l.is_field();
    r.expected = {{"self_adjoint", true}, {"central", true}, {"uv_identity", true}, {"vu_identity", true}, {"invertible", true}};
    r.actual = {{"self_adjoint", self_adjoint}, {"central", central}, {"uv_identity", uv_id}, {"vu_identity", vu_id},
                {"invertible", invertible}, {"raw_nullity", h.raw_nullity}, {"nullity", h.nullity},
                {"dim_A", h.basis.size()}};
    if (fields) r.expected["nullity"] = 0;
    r.passed = self_adjoint && central && uv_id && vu_id && invertible && (!fields || h.nullity == 0);
    return r;
}

CheckResult run_intertwining(PrincipalSeries& ps) {
    CheckResult r;
    r.id = "intertwining";
    const auto tab = intertwining_table(ps);
    r.expected = {{"dims", tab.formula}};
    r.actual = {{"dims", tab.oracle}, {"character_dims", tab.characters}};
    r.passed = tab.formula == tab.oracle && tab.formula == tab.characters;
    return r;
}

CheckResult run_end_algebra(PrincipalSeries& ps) {
    CheckResult r;
    r.id = "end-algebra";
    bool ok = true;
    nlohmann::json expected = nlohmann::json::object(), actual = nlohmann::json::object();
    auto add = [&](const LeviChar& chi) {
        if (actual.contains(chi.to_string())) return;
        std::vector<unsigned> degrees;
        for (const auto& x : stabilizer_irrep_degrees(chi)) degrees.push_back(static_cast<unsigned>(x.get_ui()));
        const std::size_t classes = stabilizer_class_count(ps.chars(), chi);
        expected[chi.to_string()] = {{"dim", stabilizer(ps.chars(), chi).size()}, {"blocks", degrees}, {"center_dim", classes}};
        actual[chi.to_string()] = end_algebra_entry(ps, chi, ok);
    };
    for (const auto& rep : orbit_representatives(ps.chars())) {
        add(rep);
        // an unsorted member of the same orbit, when there is one
        LeviChar other = rep;
        for (const auto& w : ps.chars().weyl()) other = std::max(other, w_act(w, rep));
        add(other);
    }
    r.expected = expected;
    r.actual = actual;
    r.passed = ok;
    return r;
}

std::vector<std::vector<UnitChar>> all_unit_chars(const CharacterSystem& sys) {
    std::vector<std::vector<UnitChar>> out{{}};
    for (std::size_t j = 0; j < sys.ring().factor_count(); ++j) {
        std::vector<std::vector<UnitChar>> next;
        for (const auto& prefix : out)
            for (const auto& c : sys.local_units(j).characters()) {
                auto v = prefix;
                v.push_back(c);
                next.push_back(std::move(v));
            }
        out = std::move(next);
    }
    return out;
}

CheckResult run_local_reduction(PrincipalSeries& ps, const VerifyOptions& opts) {
    CheckResult r;
    r.id = "local-reduction";
    const GroupTable& t = ps.table();
    const auto whole = count_principal_series(ps).pipeline;
    if (t.ring().factor_count() == 1) {
        r.expected = {{"product_of_local_counts", whole.get_str()}};
        r.actual = {{"pipeline", whole.get_str()}, {"local_counts", {whole.get_str()}}};
        r.passed = true;
        return r;
    }
    BigInt product = 1;
    std::vector<std::string> locals;
    for (const auto& l : t.ring().locals()) {
        const GroupTable lt = GroupTable::build(RingSpec({l}), t.n(), opts.max_candidates);
        PrincipalSeries lps(lt, opts.seed);
        const auto c = count_principal_series(lps).pipeline;
        product *= c;
        locals.push_back(c.get_str());
    }
    r.expected = {{"product_of_local_counts", product.get_str()}};
    r.actual = {{"pipeline", whole.get_str()}, {"local_counts", locals}};
    r.passed = product == whole;
    return r;
}

}  // namespace

VerifyReport run_verification(const RingSpec& ring, unsigned n, const VerifyOptions& opts) {
    for (const auto& id : opts.only)
        if (std::find(check_ids().begin(), check_ids().end(), id) == check_ids().end())
            throw std::invalid_argument("unknown check id: " + id);
    for (const auto& id : opts.skip)
        if (std::find(check_ids().begin(), check_ids().end(), id) == check_ids().end())
            throw std::invalid_argument("unknown check id: " + id);
    auto enabled = [&](const std::string& id) { return (opts.only.empty() || opts.only.count(id)) && !opts.skip.count(id); };

    require_pipeline_size(ring, n, opts.max_order);
    const GroupTable table = GroupTable::build(ring, n, opts.max_candidates);
    PrincipalSeries ps(table, opts.seed);
    VerifyReport rep;
    rep.ring = ring.canonical();
    rep.n = n;
    rep.seed = opts.seed;

    auto timed = [&](const std::string& id, const std::function<CheckResult()>& fn) {
        if (!enabled(id)) return;
        const auto start = Clock::now();
        CheckResult c;
        try {
            c = fn();
        } catch (const VerificationAlarm& e) {
            c = CheckResult{id, false, nullptr, {{"alarm", e.what()}}};
        }
        c.id = id;
        c.millis = millis_since(start);
        rep.checks.push_back(std::move(c));
    };

    timed("ulv-injective", [&] { return check_ulv_injective(table); });
    timed("reduction-surjective", [&] { return check_reduction_surjective(table); });
    timed("kernel-factorization", [&] { return check_kernel_factorization(table); });
    timed("unipotent-split", [&] { return check_unipotent_split(table); });
    timed("bruhat-partition", [&] { return check_bruhat_partition(table); });
    timed("cell-separation", [&] { return check_cell_separation(table); });
    timed("halmos-element", [&] { return run_halmos(ps); });
    timed("idempotent-triple", [&] { return check_idempotent_triple(ps); });
    timed("phi-isomorphism", [&] {
        std::vector<CheckResult> parts;
        for (std::size_t w = 0; w < table.weyl().size(); ++w) parts.push_back(check_phi_w(ps, w));
        return merge_results("phi-isomorphism", parts);
    });
    timed("summand-isomorphism", [&] {
        std::vector<CheckResult> parts;
        for (std::size_t w = 0; w < table.weyl().size(); ++w) parts.push_back(check_summand(ps, w));
        return merge_results("summand-isomorphism", parts);
    });
    timed("independence", [&] { return check_lin_independence(ps); });
    timed("end-sandwich", [&] { return check_end_sandwich(ps); });
    timed("intertwining", [&] { return run_intertwining(ps); });
    timed("end-algebra", [&] { return run_end_algebra(ps); });
    timed("scalar-twist", [&] {
        std::vector<CheckResult> parts;
        for (const auto& chi1 : all_unit_chars(ps.chars())) parts.push_back(check_scalar_twist(ps, chi1));
        return merge_results("scalar-twist", parts);
    });
    timed("levi-support", [&] {
        std::vector<CheckResult> parts;
        for (const auto& comp : compositions(n)) parts.push_back(check_levi_support(ps, comp));
        return merge_results("levi-support", parts);
    });
    timed("trivial-constituents", [&] {
        CheckResult r;
        r.id = "trivial-constituents";
        const std::size_t blocks = count_pind_trivial_constituents(ps);
        BigInt expected = 1;
        for (std::size_t j = 0; j < ring.factor_count(); ++j) expected *= partition_count(n);
        r.expected = {{"constituents", bigint_to_size(expected)}};
        r.actual = {{"constituents", blocks}};
        r.passed = expected == static_cast<unsigned long>(blocks);
        return r;
    });
    timed("local-reduction", [&] { return run_local_reduction(ps, opts); });
    timed("principal-series-count", [&] {
        CheckResult r;
        r.id = "principal-series-count";
        const auto c = count_principal_series(ps);
        r.expected = {{"formula", c.formula.get_str()}};
        r.actual = {{"pipeline", c.pipeline.get_str()}, {"stabilizer_classes", c.stabilizer_classes.get_str()}};
        r.passed = c.pipeline == c.formula && c.stabilizer_classes == c.formula;
        return r;
    });
    return rep;
}

}  // namespace pseries
