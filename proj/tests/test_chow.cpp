#include <random>

#include <gtest/gtest.h>

#include "ballcover/chow.hpp"

using namespace ballcover;

namespace {

ChowClass h(const Ambient& a, std::size_t i) { return hyperplane(a, i); }
ChowClass one(const Ambient& a) { return ChowClass::one(a); }

ChowClass random_class(const Ambient& amb, std::mt19937& rng, bool unit) {
    std::uniform_int_distribution<int> coef(-3, 3);
    ChowClass c(amb);
    std::vector<int> e(amb.factors(), 0);
    // walk every exponent vector within the bounds
    for (;;) {
        bool constant = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
        c += ChowClass::monomial(amb, e, constant && unit ? Rational(1) : Rational(coef(rng)));
        std::size_t i = 0;
        while (i < e.size() && e[i] == amb.dim(i)) e[i++] = 0;
        if (i == e.size()) break;
        ++e[i];
    }
    return c;
}

}  // namespace

TEST(Ambient, Validation) {
    EXPECT_THROW(Ambient(std::vector<int>{}), validation_error);
    EXPECT_THROW(Ambient({1, 0}), validation_error);
    EXPECT_THROW(Ambient(std::vector<int>(17, 1)), validation_error);
    EXPECT_NO_THROW(Ambient(std::vector<int>(16, 1)));
    EXPECT_EQ(Ambient({1, 2, 3}).dimension(), 6);
    EXPECT_EQ(Ambient::p1_power(3).str(), "P^1 x P^1 x P^1");
}

TEST(ClassOf, Examples) {
    const Ambient a = Ambient::p1_power(3);
    EXPECT_EQ(class_of(a, {3, 3, 0}), h(a, 0) * Rational(3) + h(a, 1) * Rational(3));
    EXPECT_TRUE(class_of(a, {0, 0, 0}).is_zero());
    const Ambient p3({3});
    EXPECT_EQ(class_of(p3, {2}), h(p3, 0) * Rational(2));
    EXPECT_THROW(class_of(a, {1, 1}), validation_error);
}

TEST(Multiply, Examples) {
    const Ambient a = Ambient::p1_power(2);
    EXPECT_TRUE((h(a, 0) * h(a, 0)).is_zero());
    EXPECT_EQ((one(a) + h(a, 0)) * (one(a) + h(a, 1)), one(a) + h(a, 0) + h(a, 1) + h(a, 0) * h(a, 1));
    const Ambient p3({3});
    EXPECT_EQ((h(p3, 0) * Rational(2)) * (h(p3, 0) * Rational(2)), ChowClass::monomial(p3, {2}, 4));
    EXPECT_THROW(h(a, 0) * h(p3, 0), validation_error);
}

TEST(InverseUnit, Examples) {
    const Ambient p1 = Ambient::p1_power(1);
    EXPECT_EQ(inverse_unit(one(p1) + h(p1, 0) * Rational(3)), one(p1) - h(p1, 0) * Rational(3));

    const Ambient a = Ambient::p1_power(2);
    const ChowClass u = one(a) + class_of(a, {3, 3});
    const ChowClass expected = one(a) - class_of(a, {3, 3}) + ChowClass::monomial(a, {1, 1}, 18);
    EXPECT_EQ(inverse_unit(u), expected);
    EXPECT_EQ(u * expected, one(a));

    const Ambient p3({3});
    const ChowClass v = one(p3) + class_of(p3, {2});
    const ChowClass w = one(p3) - class_of(p3, {2}) + ChowClass::monomial(p3, {2}, 4) - ChowClass::monomial(p3, {3}, 8);
    EXPECT_EQ(inverse_unit(v), w);
    EXPECT_EQ(v * w, one(p3));

    EXPECT_THROW(inverse_unit(ChowClass::constant(a, 2)), validation_error);
    EXPECT_THROW(inverse_unit(h(a, 0)), validation_error);
}

TEST(TotalChern, Examples) {
    const Ambient a = Ambient::p1_power(2);
    EXPECT_EQ(total_chern(a), (one(a) + h(a, 0) * Rational(2)) * (one(a) + h(a, 1) * Rational(2)));
    EXPECT_EQ(total_chern(a), one(a) + h(a, 0) * Rational(2) + h(a, 1) * Rational(2) +
                                  ChowClass::monomial(a, {1, 1}, 4));
    const Ambient p3({3});
    EXPECT_EQ(total_chern(p3), one(p3) + class_of(p3, {4}) + ChowClass::monomial(p3, {2}, 6) +
                                   ChowClass::monomial(p3, {3}, 4));
    const Ambient p1 = Ambient::p1_power(1);
    EXPECT_EQ(total_chern(p1), one(p1) + h(p1, 0) * Rational(2));
}

TEST(Integrate, Examples) {
    EXPECT_EQ(integrate(total_chern(Ambient::p1_power(3))), 8);
    const Ambient a = Ambient::p1_power(2);
    EXPECT_EQ(integrate(total_chern(a) * inverse_unit(one(a) + class_of(a, {3, 3}))), 10);
    EXPECT_EQ(integrate(one(a)), 0);
    EXPECT_EQ(integrate(one(Ambient({3}))), 0);
}

TEST(ChowProperties, EulerCharacteristicOfProducts) {
    for (const auto& dims : std::vector<std::vector<int>>{{1}, {2}, {3}, {1, 1}, {1, 2}, {2, 2}, {1, 1, 3}, {4, 1}}) {
        const Ambient a(dims);
        Rational expected = 1;
        for (int n : dims) expected *= n + 1;
        EXPECT_EQ(integrate(total_chern(a)), expected) << a.str();
    }
}

TEST(ChowProperties, RandomUnitsInvert) {
    std::mt19937 rng(20240611);
    for (const auto& dims : std::vector<std::vector<int>>{{1, 1}, {2, 1}, {1, 1, 1}, {3}, {2, 2}}) {
        const Ambient a(dims);
        for (int trial = 0; trial < 20; ++trial) {
            const ChowClass u = random_class(a, rng, true);
            EXPECT_EQ(u * inverse_unit(u), one(a)) << u.str();
        }
    }
}

TEST(ChowProperties, CommutativeAssociativeTruncating) {
    std::mt19937 rng(7);
    const Ambient a({1, 2, 1});
    for (int trial = 0; trial < 20; ++trial) {
        const ChowClass x = random_class(a, rng, false);
        const ChowClass y = random_class(a, rng, false);
        const ChowClass z = random_class(a, rng, false);
        EXPECT_EQ(x * y, y * x);
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x * (y + z), x * y + x * z);
    }
    for (std::size_t i = 0; i < a.factors(); ++i) {
        ChowClass top = one(a);
        for (int k = 0; k < a.dim(i); ++k) top *= h(a, i);
        EXPECT_FALSE(top.is_zero());
        EXPECT_TRUE((random_class(a, rng, false) * top * h(a, i)).is_zero());
    }
}

TEST(ChowClass, NormalizedStorage) {
    const Ambient a = Ambient::p1_power(2);
    const ChowClass x = h(a, 0) - h(a, 0);
    EXPECT_TRUE(x.is_zero());
    EXPECT_TRUE(x.terms().empty());
    EXPECT_TRUE((h(a, 0) * Rational(0)).terms().empty());
    EXPECT_EQ(class_of(a, {3, 2}).str(), "2*h2 + 3*h1");
}
