// Bracket table, generator classification, and exact-rational plumbing.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "svir/algebra.hpp"
#include "svir/rational.hpp"

using namespace svir;

namespace {

// All generators of one sector with doubled index in [-span, span], plus C.
std::vector<GeneratorIndex> window(Sector s, int span) {
    std::vector<GeneratorIndex> out;
    for (int d = -span; d <= span; ++d) {
        if (d % 2 == 0) out.push_back(gen_L(s, d / 2));
        if ((d % 2 != 0) == (eps_doubled(s) == 1)) out.push_back(gen_G_doubled(s, d));
    }
    out.push_back(gen_C(s));
    return out;
}

}  // namespace

TEST_CASE("rational parsing accepts p, -p and p/q and canonicalizes") {
    CHECK(parse_rational("4") == make_rational(4));
    CHECK(parse_rational("-7") == make_rational(-7));
    CHECK(parse_rational("2/4") == make_rational(1, 2));
    CHECK(parse_rational("-6/4") == make_rational(-3, 2));
    CHECK(parse_rational("0") == Rational(0));
    CHECK(to_string(parse_rational("-6/4")) == "-3/2");
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
}

TEST_CASE("generator factories validate index parity per sector") {
    CHECK(gen_G_doubled(Sector::NeveuSchwarz, 3).d == 3);
    CHECK(gen_G_doubled(Sector::Ramond, 2).d == 2);
    // NS G-indices are odd halves (odd doubled), Ramond integers (even doubled).
    CHECK_THROWS_AS(gen_G_doubled(Sector::NeveuSchwarz, 2), std::invalid_argument);
    CHECK_THROWS_AS(gen_G_doubled(Sector::Ramond, 3), std::invalid_argument);
}

TEST_CASE("parity weight and classification of generators") {
    const auto L2 = gen_L(Sector::NeveuSchwarz, 2);
    const auto Gm = gen_G_doubled(Sector::NeveuSchwarz, -1);
    CHECK(parity(L2) == Parity::Even);
    CHECK(parity(Gm) == Parity::Odd);
    CHECK(parity(gen_C(Sector::Ramond)) == Parity::Even);
    CHECK(weight_doubled(L2) == 4);
    CHECK(weight_doubled(Gm) == -1);
    CHECK(weight_doubled(gen_C(Sector::NeveuSchwarz)) == 0);

    // Creation boundary: L up to index 0; G up to 1/2 (NS) respectively 1 (R).
    CHECK(is_creation(gen_L(Sector::NeveuSchwarz, 0)));
    CHECK(!is_creation(gen_L(Sector::NeveuSchwarz, 1)));
    CHECK(is_creation(gen_G_doubled(Sector::NeveuSchwarz, 1)));
    CHECK(!is_creation(gen_G_doubled(Sector::NeveuSchwarz, 3)));
    CHECK(is_creation(gen_G_doubled(Sector::Ramond, 2)));
    CHECK(!is_creation(gen_G_doubled(Sector::Ramond, 4)));
    CHECK(!is_creation(gen_C(Sector::Ramond)));

    CHECK(is_psi_domain(gen_L(Sector::NeveuSchwarz, 1)));
    CHECK(!is_psi_domain(gen_L(Sector::NeveuSchwarz, 0)));
    CHECK(is_psi_domain(gen_G_doubled(Sector::NeveuSchwarz, 3)));
    CHECK(!is_psi_domain(gen_G_doubled(Sector::NeveuSchwarz, 1)));
    CHECK(is_psi_domain(gen_G_doubled(Sector::Ramond, 4)));
    CHECK(!is_psi_domain(gen_G_doubled(Sector::Ramond, 2)));
}

TEST_CASE("frozen bracket values in the even part") {
    const Sector s = Sector::NeveuSchwarz;
    // [L_2, L_-2] = 4 L_0 + (8-2)/12 C = 4 L_0 + 1/2 C
    LieElement expected;
    expected.add(gen_L(s, 0), make_rational(4));
    expected.add(gen_C(s), make_rational(1, 2));
    CHECK(bracket(gen_L(s, 2), gen_L(s, -2)) == expected);

    // [L_3, L_-3] = 6 L_0 + (27-3)/12 C = 6 L_0 + 2 C
    LieElement expected3;
    expected3.add(gen_L(s, 0), make_rational(6));
    expected3.add(gen_C(s), make_rational(2));
    CHECK(bracket(gen_L(s, 3), gen_L(s, -3)) == expected3);

    // [L_1, L_-1] = 2 L_0, no central term (1^3 - 1 = 0)
    LieElement expected1;
    expected1.add(gen_L(s, 0), make_rational(2));
    CHECK(bracket(gen_L(s, 1), gen_L(s, -1)) == expected1);

    // [L_2, L_1] = L_3
    LieElement l3;
    l3.add(gen_L(s, 3), make_rational(1));
    CHECK(bracket(gen_L(s, 2), gen_L(s, 1)) == l3);
}

TEST_CASE("frozen bracket values in the mixed part") {
    const Sector s = Sector::NeveuSchwarz;
    // [L_2, G_-1/2] = (1 + 1/2) G_3/2
    LieElement expected;
    expected.add(gen_G_doubled(s, 3), make_rational(3, 2));
    CHECK(bracket(gen_L(s, 2), gen_G_doubled(s, -1)) == expected);

    // [L_1, G_1/2] = 0 (coefficient 1/2 - 1/2)
    CHECK(bracket(gen_L(s, 1), gen_G_doubled(s, 1)).is_zero());

    // [L_-1, G_3/2] = (-1/2 - 3/2) G_1/2
    LieElement e2;
    e2.add(gen_G_doubled(s, 1), make_rational(-2));
    CHECK(bracket(gen_L(s, -1), gen_G_doubled(s, 3)) == e2);

    // Ramond: [L_1, G_1] = (1/2 - 1) G_2
    LieElement e3;
    e3.add(gen_G_doubled(Sector::Ramond, 4), make_rational(-1, 2));
    CHECK(bracket(gen_L(Sector::Ramond, 1), gen_G_doubled(Sector::Ramond, 2)) == e3);
}

TEST_CASE("frozen bracket values in the odd part") {
    const Sector ns = Sector::NeveuSchwarz;
    // [G_1/2, G_-1/2] = 2 L_0 (central term vanishes: (1/4 - 1/4)/3)
    LieElement expected;
    expected.add(gen_L(ns, 0), make_rational(2));
    CHECK(bracket(gen_G_doubled(ns, 1), gen_G_doubled(ns, -1)) == expected);

    // [G_3/2, G_-3/2] = 2 L_0 + (9/4 - 1/4)/3 C = 2 L_0 + 2/3 C
    LieElement e2;
    e2.add(gen_L(ns, 0), make_rational(2));
    e2.add(gen_C(ns), make_rational(2, 3));
    CHECK(bracket(gen_G_doubled(ns, 3), gen_G_doubled(ns, -3)) == e2);

    // [G_3/2, G_1/2] = 2 L_2
    LieElement e3;
    e3.add(gen_L(ns, 2), make_rational(2));
    CHECK(bracket(gen_G_doubled(ns, 3), gen_G_doubled(ns, 1)) == e3);

    // Ramond zero mode: [G_0, G_0] = 2 L_0 + (0 - 1/4)/3 C = 2 L_0 - 1/12 C
    const Sector r = Sector::Ramond;
    LieElement e4;
    e4.add(gen_L(r, 0), make_rational(2));
    e4.add(gen_C(r), make_rational(-1, 12));
    CHECK(bracket(gen_G_doubled(r, 0), gen_G_doubled(r, 0)) == e4);
}

TEST_CASE("the central element brackets to zero with everything") {
    for (Sector s : {Sector::NeveuSchwarz, Sector::Ramond}) {
        for (const auto& g : window(s, 8)) {
            CHECK(bracket(gen_C(s), g).is_zero());
            CHECK(bracket(g, gen_C(s)).is_zero());
        }
    }
}

TEST_CASE("antisymmetry on an exhaustive window") {
    for (Sector s : {Sector::NeveuSchwarz, Sector::Ramond}) {
        const auto gens = window(s, 8);
        for (const auto& x : gens) {
            for (const auto& y : gens) {
                // [x,y] = -(-1)^{|x||y|}[y,x]
                const bool both_odd =
                    parity(x) == Parity::Odd && parity(y) == Parity::Odd;
                LieElement rhs = bracket(y, x);
                rhs *= both_odd ? Rational(1) : Rational(-1);
                CHECK(bracket(x, y) == rhs);
            }
        }
    }
}

TEST_CASE("super Jacobi identity on sampled triples") {
    for (Sector s : {Sector::NeveuSchwarz, Sector::Ramond}) {
        const auto gens = window(s, 5);
        for (const auto& x : gens) {
            for (const auto& y : gens) {
                for (const auto& z : gens) {
                    // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|}[y,[x,z]]
                    const bool both_odd =
                        parity(x) == Parity::Odd && parity(y) == Parity::Odd;
                    const LieElement lhs = bracket(LieElement(x), bracket(y, z));
                    LieElement rhs = bracket(bracket(x, y), LieElement(z));
                    LieElement mixed = bracket(LieElement(y), bracket(x, z));
                    mixed *= both_odd ? Rational(-1) : Rational(1);
                    rhs += mixed;
                    REQUIRE(lhs == rhs);
                }
            }
        }
    }
}

TEST_CASE("bilinear bracket distributes over combinations") {
    const Sector s = Sector::NeveuSchwarz;
    LieElement x;
    x.add(gen_L(s, 2), make_rational(2));
    x.add(gen_G_doubled(s, 1), make_rational(-1, 3));
    LieElement y;
    y.add(gen_L(s, -2), make_rational(1));
    y.add(gen_G_doubled(s, -1), make_rational(5));

    LieElement expected;
    for (const auto& [gx, cx] : x.terms())
        for (const auto& [gy, cy] : y.terms()) {
            LieElement part = bracket(gx, gy);
            part *= cx * cy;
            expected += part;
        }
    CHECK(bracket(x, y) == expected);
}

TEST_CASE("mixing sectors is rejected") {
    CHECK_THROWS_AS(
        bracket(gen_L(Sector::NeveuSchwarz, 1), gen_L(Sector::Ramond, -1)),
        std::invalid_argument);
    LieElement mixed;
    mixed.add(gen_L(Sector::NeveuSchwarz, 1), make_rational(1));
    CHECK_THROWS_AS(mixed.add(gen_L(Sector::Ramond, 2), make_rational(1)),
                    std::invalid_argument);
}

TEST_CASE("formatting of generators and combinations") {
    const Sector ns = Sector::NeveuSchwarz;
    CHECK(format_generator(gen_L(ns, -2)) == "L(-2)");
    CHECK(format_generator(gen_G_doubled(ns, -3)) == "G(-3/2)");
    CHECK(format_generator(gen_G_doubled(Sector::Ramond, 2)) == "G(1)");
    CHECK(format_generator(gen_G_doubled(Sector::Ramond, 0)) == "G(0)");
    CHECK(format_generator(gen_C(ns)) == "C");

    CHECK(format_lie_element(LieElement()) == "0");
    CHECK(format_lie_element(bracket(gen_L(ns, 2), gen_L(ns, -2))) == "4 L(0) + 1/2 C");

    LieElement neg;
    neg.add(gen_G_doubled(ns, 1), make_rational(-1));
    CHECK(format_lie_element(neg) == "-G(1/2)");

    LieElement mixed_signs;
    mixed_signs.add(gen_L(ns, 0), make_rational(1));
    mixed_signs.add(gen_L(ns, 1), make_rational(-3, 4));
    CHECK(format_lie_element(mixed_signs) == "L(0) - 3/4 L(1)");
}

TEST_CASE("zero coefficients vanish from combinations") {
    const Sector s = Sector::Ramond;
    LieElement x;
    x.add(gen_L(s, 1), make_rational(2));
    x.add(gen_L(s, 1), make_rational(-2));
    CHECK(x.is_zero());
    CHECK(x.terms().empty());
}
