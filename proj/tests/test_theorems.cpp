#include <gtest/gtest.h>

#include "pseries/theorems.hpp"

using namespace pseries;

namespace {

GroupTable table(const char* ring, unsigned n) { return GroupTable::build(parse_ring_spec(ring), n); }

// single local factor with cyclic units: exponents per diagonal position
LeviChar chi_of(std::vector<std::uint64_t> exps) {
    LeviChar c;
    c.parts.emplace_back();
    for (auto e : exps) c.parts[0].push_back(UnitChar{{e}});
    return c;
}

std::vector<unsigned> blocks(const char* ring, unsigned n, const LeviChar& chi) {
    const auto t = table(ring, n);
    PrincipalSeries ps(t);
    return ps.end_algebra(chi).blocks;
}

}  // namespace

TEST(Halmos, TrivialRankOneGroup) {
    const auto t = table("GF(3,1)", 1);
    const auto h = compute_halmos_z(t);
    EXPECT_EQ(h.z * h.z_inverse, AlgElem::one(t));
    EXPECT_EQ(h.nullity, 0u);
}

TEST(Halmos, FieldCaseIsUnique) {
    for (const char* r : {"GF(2,1)", "GF(3,1)"}) {
        const auto t = table(r, 2);
        const auto h = compute_halmos_z(t);
        EXPECT_EQ(h.nullity, 0u) << r;
        EXPECT_EQ(star(h.z), h.z);
        const AlgElem eu = idempotent_subgroup(t, Subgroup::U), ev = idempotent_subgroup(t, Subgroup::V);
        EXPECT_EQ(h.z * eu, eu * h.z);
        EXPECT_EQ(h.z * ((eu * ev) * (eu * ev)), eu * ev);
        EXPECT_EQ(h.z * ((ev * eu) * (ev * eu)), ev * eu);
    }
}

TEST(Halmos, NonFieldRing) {
    const auto t = table("Z/4", 2);
    const auto h = compute_halmos_z(t);
    EXPECT_EQ(h.z * h.z_inverse, AlgElem::one(t));
    const AlgElem eu = idempotent_subgroup(t, Subgroup::U), ev = idempotent_subgroup(t, Subgroup::V);
    EXPECT_EQ(h.z * ((eu * ev) * (eu * ev)), eu * ev);
    EXPECT_GE(h.raw_nullity, h.nullity);
}

TEST(Halmos, SeedOnlyMattersWhenNotUnique) {
    const auto t = table("GF(3,1)", 2);
    EXPECT_EQ(compute_halmos_z(t, 1).z, compute_halmos_z(t, 99).z);
}

TEST(StructureOfG, AllChecksPass) {
    for (auto [r, n] : std::vector<std::pair<const char*, unsigned>>{{"GF(2,1)", 2}, {"GF(3,1)", 2}, {"Z/4", 2}, {"GF(2,1)", 3}, {"GF(2,1)", 1}}) {
        const auto t = table(r, n);
        const auto rep = check_proposition_G(t);
        ASSERT_EQ(rep.checks.size(), 6u);
        for (const auto& c : rep.checks) EXPECT_TRUE(c.passed) << r << " n=" << n << " " << c.id << " " << c.actual.dump();
    }
}

TEST(CosetReps, CountsMatchIndex) {
    const auto t = table("GF(3,1)", 2);
    const auto& U = t.subgroup(Subgroup::U);
    EXPECT_EQ(left_coset_reps(t, U).size(), t.order() / U.size());
    EXPECT_EQ(right_coset_reps(t, U).size(), t.order() / U.size());
}

TEST(BimoduleChecks, PassOnSmallGroups) {
    for (auto [r, n] : std::vector<std::pair<const char*, unsigned>>{{"GF(3,1)", 2}, {"Z/4", 2}, {"GF(2,1)", 3}}) {
        const auto t = table(r, n);
        PrincipalSeries ps(t);
        EXPECT_TRUE(check_idempotent_triple(ps).passed) << r;
        for (std::size_t w = 0; w < t.weyl().size(); ++w) {
            const auto phi = check_phi_w(ps, w);
            EXPECT_TRUE(phi.passed) << r << " " << phi.actual.dump();
            const auto s = check_summand(ps, w);
            EXPECT_TRUE(s.passed) << r << " " << s.actual.dump();
        }
        EXPECT_TRUE(check_lin_independence(ps).passed) << r;
        EXPECT_TRUE(check_end_sandwich(ps).passed) << r;
    }
}

TEST(Intertwining, Examples) {
    {
        const auto t = table("GF(2,1)", 2);
        PrincipalSeries ps(t);
        const auto one = ps.chars().trivial();
        EXPECT_EQ(intertwining_dim_oracle(ps, one, one), 2u);
        EXPECT_EQ(intertwining_dim_characters(ps, one, one), 2u);
    }
    {
        const auto t = table("GF(3,1)", 2);
        PrincipalSeries ps(t);
        EXPECT_EQ(intertwining_dim_oracle(ps, chi_of({0, 1}), chi_of({1, 1})), 0u);
        EXPECT_EQ(intertwining_dim_oracle(ps, chi_of({0, 1}), chi_of({1, 0})), 1u);
        EXPECT_EQ(intertwining_dim_oracle(ps, chi_of({1, 1}), chi_of({1, 1})), 2u);
    }
}

TEST(Intertwining, ThreeWaysAgree) {
    for (const char* r : {"GF(3,1)", "Z/4"}) {
        const auto t = table(r, 2);
        PrincipalSeries ps(t);
        const auto tab = intertwining_table(ps);
        EXPECT_EQ(tab.formula, tab.oracle) << r;
        EXPECT_EQ(tab.formula, tab.characters) << r;
    }
}

TEST(Intertwining, DoubleCosetsSufficeAgainstAllOfG) {
    const auto t = table("GF(3,1)", 2);
    PrincipalSeries ps(t);
    const auto chars = all_levi_chars(ps.chars());
    for (const auto& a : chars)
        for (const auto& b : chars) {
            std::vector<AlgElem> gens;
            for (std::size_t g = 0; g < t.order(); ++g) gens.push_back(ps.E(b) * left_translate(g, ps.E(a)));
            EXPECT_EQ(span_rank(gens), intertwining_dim_oracle(ps, a, b));
        }
}

TEST(Intertwining, CsvShape) {
    const auto t = table("GF(2,1)", 2);
    PrincipalSeries ps(t);
    EXPECT_EQ(intertwining_csv(intertwining_table(ps)), "chi,sigma,formula,oracle,characters\n[][],[][],2,2,2\n");
}

TEST(EndAlgebra, BlockExamples) {
    {
        const auto t = table("GF(2,1)", 3);
        PrincipalSeries ps(t);
        EXPECT_EQ(ps.end_algebra(ps.chars().trivial()).blocks, (std::vector<unsigned>{1, 1, 2}));
        EXPECT_EQ(ps.end_algebra(ps.chars().trivial()).dim, 6u);
    }
    EXPECT_EQ(blocks("Z/4", 2, chi_of({0, 0})), (std::vector<unsigned>{1, 1}));
    EXPECT_EQ(blocks("Z/4", 2, chi_of({0, 1})), (std::vector<unsigned>{1}));
    EXPECT_EQ(blocks("GF(3,1)", 2, chi_of({0, 1})), (std::vector<unsigned>{1}));
    EXPECT_EQ(blocks("GF(3,1)", 2, chi_of({1, 0})), (std::vector<unsigned>{1}));
}

TEST(EndAlgebra, CenterMatchesBlockCount) {
    const auto t = table("GF(3,1)", 2);
    PrincipalSeries ps(t);
    for (const auto& chi : all_levi_chars(ps.chars())) {
        const auto& e = ps.end_algebra(chi);
        EXPECT_EQ(e.center_dim, e.blocks.size());
        std::size_t sum = 0;
        for (unsigned b : e.blocks) sum += b * b;
        EXPECT_EQ(sum, e.dim);
        EXPECT_LT(e.max_residual, 1e-6);
    }
}

TEST(ScalarTwist, AllUnitCharacters) {
    for (const char* r : {"GF(3,1)", "Z/4", "GF(5,1)"}) {
        const auto t = table(r, std::string(r) == "GF(5,1)" ? 1 : 2);
        PrincipalSeries ps(t);
        for (const auto& c : ps.chars().local_units(0).characters()) {
            const auto res = check_scalar_twist(ps, {c});
            EXPECT_TRUE(res.passed) << r << " " << res.actual.dump();
        }
    }
}

TEST(LeviSupport, Compositions) {
    EXPECT_EQ(compositions(1).size(), 1u);
    EXPECT_EQ(compositions(3).size(), 4u);
    EXPECT_EQ(compositions(4).size(), 8u);
    EXPECT_EQ(compositions(3).front(), (std::vector<unsigned>{1, 1, 1}));
    for (auto [r, n] : std::vector<std::pair<const char*, unsigned>>{{"GF(3,1)", 2}, {"Z/4", 2}, {"GF(2,1)", 3}}) {
        const auto t = table(r, n);
        PrincipalSeries ps(t);
        for (const auto& comp : compositions(n)) {
            const auto res = check_levi_support(ps, comp);
            EXPECT_TRUE(res.passed) << r << " " << res.actual.dump();
        }
    }
}

TEST(Counting, SmallCases) {
    for (auto [r, n, expected] : std::vector<std::tuple<const char*, unsigned, unsigned>>{
             {"GF(2,1)", 2, 2}, {"GF(3,1)", 2, 5}, {"Z/4", 2, 5}, {"GF(2,1)", 3, 3}, {"GF(2,1)", 1, 1}, {"GF(3,1)", 1, 2}}) {
        const auto t = table(r, n);
        PrincipalSeries ps(t);
        const auto c = count_principal_series(ps);
        EXPECT_EQ(c.pipeline, expected) << r << " n=" << n;
        EXPECT_EQ(c.formula, expected) << r;
        EXPECT_EQ(c.stabilizer_classes, expected) << r;
    }
}

TEST(Counting, FormulaOnly) {
    EXPECT_EQ(principal_series_formula(parse_ring_spec("Z/6"), 3), 30);
    EXPECT_EQ(principal_series_formula(parse_ring_spec("Z/6"), 2), 10);
    EXPECT_EQ(principal_series_formula(parse_ring_spec("GF(5,1)"), 2), 14);
}

TEST(Counting, TrivialConstituents) {
    for (auto [r, n, expected] :
         std::vector<std::tuple<const char*, unsigned, std::size_t>>{{"Z/4", 2, 2}, {"GF(2,1)", 3, 3}, {"GF(3,1)", 2, 2}}) {
        const auto t = table(r, n);
        PrincipalSeries ps(t);
        EXPECT_EQ(count_pind_trivial_constituents(ps), expected) << r;
    }
}

TEST(Verification, AllChecksPassOnGL2F2) {
    const auto rep = run_verification(parse_ring_spec("GF(2,1)"), 2, {});
    ASSERT_EQ(rep.checks.size(), check_ids().size());
    for (std::size_t i = 0; i < rep.checks.size(); ++i) {
        EXPECT_EQ(rep.checks[i].id, check_ids()[i]);
        EXPECT_TRUE(rep.checks[i].passed) << rep.checks[i].id << " " << rep.checks[i].actual.dump();
    }
    EXPECT_TRUE(rep.all_passed());
}

TEST(Verification, OnlyAndSkip) {
    VerifyOptions o;
    o.only = {"ulv-injective", "independence"};
    o.skip = {"independence"};
    const auto rep = run_verification(parse_ring_spec("GF(3,1)"), 2, o);
    ASSERT_EQ(rep.checks.size(), 1u);
    EXPECT_EQ(rep.checks[0].id, "ulv-injective");
    o.only = {"no-such-check"};
    EXPECT_THROW(run_verification(parse_ring_spec("GF(3,1)"), 2, o), std::invalid_argument);
}

TEST(Verification, JsonIsDeterministic) {
    VerifyOptions o;
    o.seed = 7;
    o.skip = {"local-reduction"};
    const auto a = run_verification(parse_ring_spec("Z/4"), 2, o).to_json().dump();
    const auto b = run_verification(parse_ring_spec("Z/4"), 2, o).to_json().dump();
    EXPECT_EQ(a, b);
    const auto j = nlohmann::json::parse(a);
    EXPECT_EQ(j["seed"], 7);
    EXPECT_TRUE(j["checks"][0]["millis"].is_null());
    EXPECT_EQ(j["summary"]["status"], "pass");
}

TEST(Verification, SizeGuard) {
    VerifyOptions o;
    o.max_candidates = 50;
    EXPECT_THROW(run_verification(parse_ring_spec("GF(3,1)"), 2, o), SizeGuardExceeded);
}
