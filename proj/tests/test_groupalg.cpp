#include <gtest/gtest.h>

#include <random>

#include "pseries/groupalg.hpp"

using namespace pseries;

namespace {

AlgElem random_elem(const GroupTable& g, std::mt19937_64& rng, unsigned conductor, std::size_t terms = 6) {
    std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
    std::uniform_int_distribution<int> val(-3, 3);
    const auto& f = CycloField::get(conductor);
    AlgElem a(g);
    for (std::size_t i = 0; i < terms; ++i) {
        std::vector<Rational> c(f.degree());
        for (auto& x : c) x = val(rng);
        a += AlgElem::delta(g, pick(rng), CycloNum(f, c));
    }
    return a;
}

}  // namespace

TEST(Convolve, Examples) {
    const auto g = enumerate_gl(parse_ring_spec("GF(2,1)"), 2);
    for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t b = 0; b < g.order(); ++b)
            EXPECT_EQ(AlgElem::delta(g, a) * AlgElem::delta(g, b), AlgElem::delta(g, g.mul(a, b)));
    const AlgElem eu = idempotent_subgroup(g, Subgroup::U), ev = idempotent_subgroup(g, Subgroup::V);
    EXPECT_EQ(eu * eu, eu);
    EXPECT_NE(eu * ev, ev * eu);
}

TEST(Convolve, TableMismatch) {
    const auto g = enumerate_gl(parse_ring_spec("GF(2,1)"), 2);
    const auto h = enumerate_gl(parse_ring_spec("GF(2,1)"), 2);
    EXPECT_THROW(AlgElem::one(g) * AlgElem::one(h), TableMismatch);
}

TEST(Star, Examples) {
    const auto g = enumerate_gl(parse_ring_spec("Z/4"), 2);
    for (std::size_t a = 0; a < g.order(); a += 5) EXPECT_EQ(star(AlgElem::delta(g, a)), AlgElem::delta(g, g.inv(a)));
    for (Subgroup s : {Subgroup::U, Subgroup::V, Subgroup::L, Subgroup::N, Subgroup::W, Subgroup::G0}) {
        const AlgElem e = idempotent_subgroup(g, s);
        EXPECT_EQ(star(e), e);
        EXPECT_EQ(e * e, e);
    }
    const CycloNum i = CycloNum::zeta(CycloField::get(4));
    EXPECT_EQ(star(AlgElem::delta(g, 7, i)), AlgElem::delta(g, g.inv(7), -i));
}

TEST(Inner, Examples) {
    const auto g = enumerate_gl(parse_ring_spec("Z/4"), 2);
    EXPECT_EQ(inner(AlgElem::delta(g, 3), AlgElem::delta(g, 3)), CycloNum(1));
    EXPECT_EQ(inner(AlgElem::delta(g, 3), AlgElem::delta(g, 4)), CycloNum(0));
    const AlgElem eu = idempotent_subgroup(g, Subgroup::U);
    EXPECT_EQ(inner(eu, eu), CycloNum(Rational(1, 4)));
}

// <abc|d> = <b|a* d c*> and (ab)* = b* a*
TEST(Inner, AdjointIdentity) {
    const auto g = enumerate_gl(parse_ring_spec("GF(3,1)"), 2);
    std::mt19937_64 rng(42);
    for (int t = 0; t < 20; ++t) {
        const AlgElem a = random_elem(g, rng, 4), b = random_elem(g, rng, 4), c = random_elem(g, rng, 4),
                      d = random_elem(g, rng, 4);
        EXPECT_EQ(inner(a * b * c, d), inner(b, star(a) * d * star(c)));
        EXPECT_EQ(star(a * b), star(b) * star(a));
        EXPECT_EQ(star(star(a)), a);
        const CycloNum i = CycloNum::zeta(CycloField::get(4));
        EXPECT_EQ(star(i * a), i.conj() * star(a));
    }
}

TEST(Idempotents, SubgroupExamples) {
    const auto g = enumerate_gl(parse_ring_spec("Z/4"), 2);
    EXPECT_EQ(idempotent_subgroup(g, std::vector<std::size_t>{0}), AlgElem::one(g));
    const AlgElem eu = idempotent_subgroup(g, Subgroup::U);
    EXPECT_EQ(eu.support_size(), 4u);
    for (const auto& t : eu.terms()) EXPECT_EQ(t.second, CycloNum(Rational(1, 4)));
    const AlgElem el = idempotent_subgroup(g, Subgroup::L);
    EXPECT_EQ(el * eu, eu * el);
    EXPECT_THROW(idempotent_subgroup(g, std::vector<std::size_t>{0, 5}), std::invalid_argument);
}

TEST(Idempotents, UnipotentCommuteWithTorus) {
    for (const char* spec : {"Z/4", "Z/6", "GF(3,1)"}) {
        const auto g = enumerate_gl(parse_ring_spec(spec), 2);
        const AlgElem eu = idempotent_subgroup(g, Subgroup::U), ev = idempotent_subgroup(g, Subgroup::V);
        for (std::size_t l : g.subgroup(Subgroup::L)) {
            const AlgElem dl = AlgElem::delta(g, l);
            EXPECT_EQ(dl * eu, eu * dl);
            EXPECT_EQ(dl * ev, ev * dl);
        }
    }
}

TEST(Idempotents, CharacterProjectors) {
    const auto g = enumerate_gl(parse_ring_spec("GF(3,1)"), 2);
    const CharacterSystem sys(g.ring(), 2);
    const auto chars = all_levi_chars(sys);
    EXPECT_EQ(idempotent_char(g, sys, sys.trivial()), idempotent_subgroup(g, Subgroup::L));
    AlgElem sum(g);
    for (const auto& a : chars) {
        const AlgElem ea = idempotent_char(g, sys, a);
        sum += ea;
        EXPECT_EQ(ea * ea, ea);
        EXPECT_EQ(ea * idempotent_subgroup(g, Subgroup::U), idempotent_subgroup(g, Subgroup::U) * ea);
        for (const auto& b : chars)
            if (a != b) EXPECT_TRUE((ea * idempotent_char(g, sys, b)).is_zero());
    }
    EXPECT_EQ(sum, AlgElem::one(g));
}

TEST(Idempotents, CharacterProjectorsWithIrrationalValues) {
    const auto g = enumerate_gl(parse_ring_spec("GF(5,1)"), 1);
    const CharacterSystem sys(g.ring(), 1);
    EXPECT_EQ(sys.conductor(), 4u);
    AlgElem sum(g);
    for (const auto& a : all_levi_chars(sys)) {
        const AlgElem ea = idempotent_char(g, sys, a);
        EXPECT_EQ(ea * ea, ea);
        EXPECT_EQ(star(ea), ea);
        sum += ea;
    }
    EXPECT_EQ(sum, AlgElem::one(g));
}

TEST(SpanRank, Examples) {
    const auto g = enumerate_gl(parse_ring_spec("GF(3,1)"), 2);
    std::vector<AlgElem> deltas, cosets;
    const AlgElem eu = idempotent_subgroup(g, Subgroup::U);
    for (std::size_t x = 0; x < g.order(); ++x) {
        deltas.push_back(AlgElem::delta(g, x));
        cosets.push_back(left_translate(x, eu));
    }
    EXPECT_EQ(span_rank(deltas), g.order());
    EXPECT_EQ(span_rank(cosets), g.order() / 3);
    EXPECT_EQ(span_rank({}), 0u);
    EXPECT_EQ(left_translate(5, eu), AlgElem::delta(g, 5) * eu);
    EXPECT_EQ(right_translate(eu, 5), eu * AlgElem::delta(g, 5));
}
