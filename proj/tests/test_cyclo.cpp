#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "pseries/cyclo.hpp"

using namespace pseries;

namespace {

CycloNum random_element(const CycloField& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    std::vector<Rational> c(f.degree());
    for (auto& x : c) {
        x = Rational(num(rng), den(rng));
        x.canonicalize();
    }
    return CycloNum(f, c);
}

}  // namespace

TEST(Cyclotomic, Polynomials) {
    auto coeffs = [](unsigned e) {
        std::vector<long> out;
        for (const auto& c : CycloField::get(e).cyclotomic_polynomial()) out.push_back(c.get_si());
        return out;
    };
    EXPECT_EQ(coeffs(1), (std::vector<long>{-1, 1}));
    EXPECT_EQ(coeffs(4), (std::vector<long>{1, 0, 1}));
    EXPECT_EQ(coeffs(6), (std::vector<long>{1, -1, 1}));
    EXPECT_EQ(coeffs(8), (std::vector<long>{1, 0, 0, 0, 1}));
    EXPECT_EQ(coeffs(12), (std::vector<long>{1, 0, -1, 0, 1}));
    // Phi_105 is the first with a coefficient -2
    bool found = false;
    for (const auto& c : CycloField::get(105).cyclotomic_polynomial()) found |= (c == -2);
    EXPECT_TRUE(found);
}

TEST(CycloArith, Examples) {
    const auto& f4 = CycloField::get(4);
    const CycloNum z = CycloNum::zeta(f4);
    EXPECT_EQ(cyclo_arith(z, z, CycloOp::Mul), CycloNum(-1));
    EXPECT_EQ(cyclo_arith(z, z, CycloOp::Conj), -z);

    const auto& f6 = CycloField::get(6);
    const CycloNum w = CycloNum::zeta(f6);
    EXPECT_EQ(w * w, w - CycloNum(1));
    EXPECT_EQ((w * w).to_string(), "-1 + z");
}

TEST(CycloArith, InverseOfZeroThrows) {
    EXPECT_THROW(CycloNum().inverse(), std::domain_error);
    EXPECT_THROW(CycloNum(CycloField::get(5), {0, 0, 0, 0}).inverse(), std::domain_error);
}

TEST(CycloArith, ConductorMismatchThrows) {
    const CycloNum a = CycloNum::zeta(CycloField::get(4));
    const CycloNum b = CycloNum::zeta(CycloField::get(3));
    EXPECT_THROW(a + b, ConductorMismatch);
    EXPECT_THROW(cyclo_arith(a, b, CycloOp::Mul), ConductorMismatch);
    EXPECT_NO_THROW(a + CycloNum(Rational(1, 2)));
}

TEST(CycloArith, RootsOfUnity) {
    for (unsigned e : {1u, 2u, 3u, 4u, 5u, 6u, 8u, 9u, 12u}) {
        const auto& f = CycloField::get(e);
        EXPECT_TRUE(f.zeta_power(e).is_one()) << e;
        EXPECT_EQ(f.zeta_power(-1), f.zeta_power(e - 1));
        CycloNum sum;
        for (unsigned j = 0; j < e; ++j) sum += f.zeta_power(j);
        if (e > 1) EXPECT_TRUE(sum.is_zero()) << e;
    }
}

TEST(CycloArith, FieldAxiomsOnRandomElements) {
    std::mt19937_64 rng(7);
    for (unsigned e : {1u, 2u, 3u, 4u, 6u, 8u}) {
        const auto& f = CycloField::get(e);
        for (int i = 0; i < 100; ++i) {
            const CycloNum a = random_element(f, rng), b = random_element(f, rng), c = random_element(f, rng);
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * b, b * a);
            if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
            EXPECT_EQ(a.conj().conj(), a);
            EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
            EXPECT_EQ((a + b).conj(), a.conj() + b.conj());
        }
    }
}

TEST(CycloArith, AddProduct) {
    const auto& f = CycloField::get(8);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        const CycloNum a = random_element(f, rng), b = random_element(f, rng);
        CycloNum acc = random_element(f, rng);
        const CycloNum expect = acc + a * b;
        acc.add_product(a, b);
        EXPECT_EQ(acc, expect);
    }
    CycloNum r(3);
    r.add_product(CycloNum::zeta(f, 2), CycloNum::zeta(f, 2));
    EXPECT_EQ(r, CycloNum(3) + f.zeta_power(4));
}

TEST(CycloArith, RationalPromotion) {
    const auto& f = CycloField::get(3);
    const CycloNum a = CycloNum(Rational(1, 2)) + f.zeta_power(1) - f.zeta_power(1);
    EXPECT_TRUE(a.is_rational());
    EXPECT_EQ(a.rational_value(), Rational(1, 2));
    EXPECT_EQ(a, CycloNum(Rational(1, 2)));
    EXPECT_THROW(f.zeta_power(1).rational_value(), std::domain_error);
}

TEST(ToFloat, Embedding) {
    EXPECT_NEAR(to_float(CycloNum(Rational(1, 2))).real(), 0.5, 1e-15);
    const auto i = to_float(CycloNum::zeta(CycloField::get(4)));
    EXPECT_NEAR(i.real(), 0.0, 1e-12);
    EXPECT_NEAR(i.imag(), 1.0, 1e-12);
    const auto w = to_float(CycloNum::zeta(CycloField::get(6)));
    EXPECT_NEAR(w.real(), 0.5, 1e-12);
    EXPECT_NEAR(w.imag(), std::sqrt(3.0) / 2, 1e-12);
}

TEST(EulerPhi, Values) {
    EXPECT_EQ(euler_phi(1), 1u);
    EXPECT_EQ(euler_phi(8), 4u);
    EXPECT_EQ(euler_phi(12), 4u);
    EXPECT_EQ(euler_phi(105), 48u);
}
