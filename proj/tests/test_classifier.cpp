#include <doctest.h>

#include <random>

#include "mproj/classifier.hpp"
#include "mproj/report_json.hpp"
#include "oracles.hpp"

using namespace mproj;

namespace {

ProjPoint pt(std::initializer_list<Rational> c)
{
    return ProjPoint(std::vector<Rational>(c));
}

std::vector<BigInt> ints(std::initializer_list<int> v)
{
    return std::vector<BigInt>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("parse_partition examples")
{
    const auto p = parse_partition("1,2,1");
    CHECK(to_string(p) == "2,1,1");
    CHECK(p.n() == 4);
    CHECK(parse_partition("5").n() == 5);
    CHECK(parse_partition(" 3 1  2 ") == parse_partition("1,2,3"));
    CHECK(parse_partition("2, 1") == parse_partition("1 2"));
}

TEST_CASE("parse_partition errors name the token")
{
    CHECK_THROWS_WITH_AS(parse_partition("2,0"), doctest::Contains("'0'"), ParseError);
    CHECK_THROWS_WITH_AS(parse_partition("2,-1"), doctest::Contains("'-1'"), ParseError);
    CHECK_THROWS_WITH_AS(parse_partition("2,x"), doctest::Contains("'x'"), ParseError);
    CHECK_THROWS_WITH_AS(parse_partition("1.5"), doctest::Contains("'1.5'"), ParseError);
    CHECK_THROWS_AS(parse_partition(""), ParseError);
    CHECK_THROWS_AS(parse_partition("   "), ParseError);
    CHECK_THROWS_AS(parse_partition("1,,2"), ParseError);
    CHECK_THROWS_AS(parse_partition("1,2,"), ParseError);
    CHECK_THROWS_AS(parse_partition("99999999999999999999"), ParseError);
}

TEST_CASE("cohomology_character examples")
{
    CHECK(to_string(cohomology_character(parse_partition("1"))) == "q + q^-1");
    CHECK(to_string(cohomology_character(parse_partition("1,1"))) == "q^2 + 2 + q^-2");
    CHECK(to_string(cohomology_character(parse_partition("2,1"))) == "q^3 + 2*q + 2*q^-1 + q^-3");
}

TEST_CASE("classify examples")
{
    auto v = classify(parse_partition("2,1"), parse_partition("1,1,1"));
    CHECK(v.verdict == Verdict::NON_ISOMORPHIC);
    CHECK(v.reason == VerdictReason::DISTINCT_CHARACTERS);
    REQUIRE(v.evidence);
    CHECK(to_string(v.evidence->character1) == "q^3 + 2*q + 2*q^-1 + q^-3");
    CHECK(to_string(v.evidence->character2) == "q^3 + 3*q + 3*q^-1 + q^-3");
    CHECK(evidence_is_consistent(v));

    v = classify(parse_partition("1,2"), parse_partition("2,1"));
    CHECK(v.verdict == Verdict::ISOMORPHIC);
    CHECK(v.reason == VerdictReason::SAME_PARTITION);
    CHECK(evidence_is_consistent(v));

    v = classify(parse_partition("3"), parse_partition("2,2"));
    CHECK(v.verdict == Verdict::NON_ISOMORPHIC);
    CHECK(v.reason == VerdictReason::DIMENSION_MISMATCH);
    CHECK_FALSE(v.evidence);
    CHECK(evidence_is_consistent(v));
}

TEST_CASE("verdict JSON follows the documented schema")
{
    const auto j = to_json(classify(parse_partition("2,1"), parse_partition("1,1,1")));
    std::vector<std::string> keys;
    for (const auto& [k, _] : j.items())
        keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"verdict", "reason", "n1", "n2", "partition1",
                                           "partition2", "character1", "character2",
                                           "factorization1", "factorization2"});
    CHECK(j["verdict"] == "NON_ISOMORPHIC");
    CHECK(j["n1"] == 3);
    CHECK(j["character1"] == "q^3 + 2*q + 2*q^-1 + q^-3");
    CHECK(j["factorization2"] == "1^3");

    const auto mismatch = to_json(classify(parse_partition("3"), parse_partition("2,2")));
    CHECK(mismatch["reason"] == "DIMENSION_MISMATCH");
    CHECK(mismatch["character1"].is_null());
}

TEST_CASE("poincare_of_multiprojective examples")
{
    for (unsigned n = 1; n <= 8; ++n)
        CHECK(poincare_of_multiprojective(Partition({n})) == poincare_genus_zero(n));
    CHECK(poincare_of_multiprojective(parse_partition("1,1")).betti() == ints({1, 0, 2, 0, 1}));
    CHECK(poincare_of_multiprojective(parse_partition("2,1")).betti() ==
          ints({1, 0, 2, 0, 2, 0, 1}));
}

TEST_CASE("property: degree/weight dictionary for partitions of n <= 12")
{
    for (unsigned n = 1; n <= 12; ++n) {
        for (const auto& parts : integer_partitions(n)) {
            const Partition p(parts);
            const auto poincare = poincare_of_multiprojective(p);
            const auto ch = cohomology_character(p);
            REQUIRE(poincare.betti().size() == 2 * n + 1);
            BigInt dim = 1;
            for (unsigned x : parts)
                dim *= x + 1;
            CHECK(poincare.total() == dim);
            for (unsigned d = 0; d <= 2 * n; ++d) {
                if (d % 2 == 0)
                    CHECK(poincare[d] == ch.multiplicity(static_cast<int>(n) - static_cast<int>(d)));
                else
                    CHECK(poincare[d] == 0);
            }
        }
    }
}

TEST_CASE("property: classification is complete for n <= 12")
{
    for (unsigned n = 1; n <= 12; ++n) {
        const auto parts = integer_partitions(n);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            for (std::size_t j = i + 1; j < parts.size(); ++j) {
                const auto v = classify(Partition(parts[i]), Partition(parts[j]));
                CHECK(v.verdict == Verdict::NON_ISOMORPHIC);
                CHECK(v.evidence->character1 != v.evidence->character2);
                CHECK(evidence_is_consistent(v));
            }
        }
    }
}

TEST_CASE("sym2_p1_map examples")
{
    CHECK(sym2_p1_map(pt({1, 0}), pt({0, 1})) == pt({0, 0, 1}));
    CHECK(sym2_p1_map(pt({1, 1}), pt({1, 1})) == pt({1, 1, 2}));
    CHECK(to_string(sym2_p1_map(pt({1, 1}), pt({1, 1}))) == "[1:1:2]");
    CHECK_THROWS_AS(pt({0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(sym2_p1_map(pt({1, 0, 0}), pt({0, 1})), std::invalid_argument);
}

TEST_CASE("ProjPoint equality is up to scalars")
{
    CHECK(pt({2, 4}) == pt({Rational(1, 3), Rational(2, 3)}));
    CHECK(pt({0, 5}) == pt({0, -1}));
    CHECK_FALSE(pt({1, 2}) == pt({2, 1}));
    CHECK_FALSE(pt({1, 2}) == pt({1, 2, 0}));
    CHECK(pt({0, 3, 6}).normalized().coords()[1] == 1);
}

TEST_CASE("property: sym2_p1_map symmetry, equivariance, nonvanishing")
{
    std::mt19937_64 rng(314);
    const auto random_point = [&] {
        for (;;) {
            Rational a = oracle::random_rational(rng), b = oracle::random_rational(rng);
            if (a != 0 || b != 0)
                return pt({a, b});
        }
    };
    for (int i = 0; i < 1000; ++i) {
        const auto z = random_point();
        const auto w = random_point();
        Rational s = 0;
        while (s == 0)
            s = oracle::random_rational(rng);
        const auto img = sym2_p1_map(z, w);
        CHECK(img == sym2_p1_map(w, z));
        CHECK(img == sym2_p1_map(pt({s * z.coords()[0], s * z.coords()[1]}), w));
        // Direct substitution.
        const auto zc = z.coords();
        const auto wc = w.coords();
        CHECK(img.coords()[0] == zc[0] * wc[0]);
        CHECK(img.coords()[1] == zc[1] * wc[1]);
        CHECK(img.coords()[2] == zc[0] * wc[1] + zc[1] * wc[0]);
    }
    // Every combination of zero patterns on valid points.
    const std::vector<ProjPoint> corners{pt({1, 0}), pt({0, 1}), pt({1, 1}), pt({1, -1}),
                                         pt({-2, 0}), pt({0, Rational(1, 7)})};
    for (const auto& z : corners)
        for (const auto& w : corners)
            CHECK_NOTHROW(sym2_p1_map(z, w));
}
