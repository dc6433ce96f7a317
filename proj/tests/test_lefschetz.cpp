#include <doctest.h>

#include "mproj/lefschetz.hpp"
#include "oracles.hpp"

using namespace mproj;

namespace {

oracle::DenseQ to_dense(const SparseMatrix<Rational>& m)
{
    oracle::DenseQ d(static_cast<std::size_t>(m.rows()),
                     std::vector<Rational>(static_cast<std::size_t>(m.cols()), Rational(0)));
    for (Eigen::Index k = 0; k < m.outerSize(); ++k)
        for (SparseMatrix<Rational>::InnerIterator it(m, k); it; ++it)
            d[it.row()][it.col()] = it.value();
    return d;
}

bool all_zero(const SparseMatrix<Rational>& m)
{
    for (Eigen::Index k = 0; k < m.outerSize(); ++k)
        for (SparseMatrix<Rational>::InnerIterator it(m, k); it; ++it)
            if (it.value() != 0)
                return false;
    return true;
}

Rational entry(const SparseMatrix<Rational>& m, Eigen::Index i, Eigen::Index j)
{
    return m.coeff(i, j);
}

}  // namespace

TEST_CASE("build_cohomology_module examples")
{
    const auto m0 = build_cohomology_module(0);
    CHECK(m0.dim() == 1);
    CHECK(m0.X().nonZeros() == 0);
    CHECK(m0.Y().nonZeros() == 0);
    CHECK(m0.H().nonZeros() == 0);

    const auto m1 = build_cohomology_module(1);
    CHECK(m1.basis_weights() == std::vector<int>{1, -1});
    CHECK(entry(m1.H(), 0, 0) == 1);
    CHECK(entry(m1.H(), 1, 1) == -1);
    CHECK(entry(m1.Y(), 1, 0) == 1);  // Y e_0 = e_1
    CHECK(entry(m1.X(), 0, 1) == 1);  // X e_1 = 1 * e_0
    CHECK(m1.Y().nonZeros() == 1);
    CHECK(m1.X().nonZeros() == 1);

    const auto m2 = build_cohomology_module(2);
    CHECK(m2.basis_weights() == std::vector<int>{2, 0, -2});
    CHECK(entry(m2.X(), 0, 1) == 2);
    CHECK(entry(m2.X(), 1, 2) == 2);
}

TEST_CASE("X coefficients follow the recurrence forced by [X,Y] = H")
{
    // mu_0 = 0 and mu_(p+1) - mu_p = n - 2p, independently of the closed form.
    for (unsigned n = 0; n <= 30; ++n) {
        const auto m = build_cohomology_module(n);
        Rational mu = 0;
        for (unsigned p = 0; p < n; ++p) {
            mu += static_cast<int>(n) - 2 * static_cast<int>(p);
            CHECK(entry(m.X(), p, p + 1) == mu);
        }
    }
}

TEST_CASE("verify_brackets passes on P^7 and agrees with dense multiplication")
{
    const auto m = build_cohomology_module(7);
    const auto rep = verify_brackets(m);
    REQUIRE(rep.relations.size() == 3);
    CHECK(rep.all_pass());
    for (const auto& r : rep.relations)
        CHECK(r.max_abs_discrepancy_numerator == 0);

    const auto x = to_dense(m.X()), y = to_dense(m.Y()), h = to_dense(m.H());
    CHECK(oracle::dense_commutator(x, y) == h);
    auto two_x = x, minus_two_y = y;
    for (auto& row : two_x)
        for (auto& v : row)
            v *= 2;
    for (auto& row : minus_two_y)
        for (auto& v : row)
            v *= -2;
    CHECK(oracle::dense_commutator(h, x) == two_x);
    CHECK(oracle::dense_commutator(h, y) == minus_two_y);
}

TEST_CASE("verify_brackets detects a zeroed X")
{
    for (unsigned n = 1; n <= 5; ++n) {
        const auto m = build_cohomology_module(n);
        const Sl2MatrixModule<Rational> broken(SparseMatrix<Rational>(m.dim(), m.dim()), m.Y(),
                                               m.basis_weights());
        const auto rep = verify_brackets(broken);
        CHECK_FALSE(rep.at("XY-YX=H").pass);
        CHECK(rep.at("XY-YX=H").max_abs_discrepancy_numerator == n);
        CHECK(rep.at("HY-YH=-2Y").pass);
        CHECK_FALSE(rep.all_pass());
    }
    CHECK(verify_brackets(build_cohomology_module(0)).all_pass());
}

TEST_CASE("Sl2MatrixModule validates shapes")
{
    SparseMatrix<Rational> z2(2, 2), z3(3, 3);
    CHECK_THROWS_AS(Sl2MatrixModule<Rational>(z2, z3, {1, -1}), std::invalid_argument);
    CHECK_THROWS_AS(Sl2MatrixModule<Rational>(SparseMatrix<Rational>(0, 0),
                                              SparseMatrix<Rational>(0, 0), {}),
                    std::invalid_argument);
}

TEST_CASE("tensor_modules examples")
{
    const auto m1 = build_cohomology_module(1);
    const auto m11 = tensor_modules(m1, m1);
    CHECK(m11.dim() == 4);
    CHECK(m11.basis_weights() == std::vector<int>{2, 0, 0, -2});
    CHECK(verify_brackets(m11).all_pass());

    const auto m2 = build_cohomology_module(2);
    const auto m21 = tensor_modules(m2, m1);
    CHECK(m21.basis_weights() == std::vector<int>{3, 1, 1, -1, -1, -3});

    // Tensoring with the trivial module changes nothing.
    const auto m0 = build_cohomology_module(0);
    const auto m20 = tensor_modules(m2, m0);
    CHECK(m20.basis_weights() == m2.basis_weights());
    CHECK(all_zero(m20.X() - m2.X()));
    CHECK(all_zero(m20.Y() - m2.Y()));
}

TEST_CASE("module_character examples")
{
    for (unsigned n = 0; n <= 12; ++n)
        CHECK(module_character(build_cohomology_module(n)) == irrep_character(n));
    CHECK(to_string(module_character(build_cohomology_module(0))) == "1");
    const auto m1 = build_cohomology_module(1);
    CHECK(to_string(module_character(tensor_modules(m1, m1))) == "q^2 + 2 + q^-2");
}

TEST_CASE("is_irreducible examples")
{
    for (unsigned n = 0; n <= 50; ++n)
        CHECK(is_irreducible(build_cohomology_module(n)));
    const auto m1 = build_cohomology_module(1);
    CHECK_FALSE(is_irreducible(tensor_modules(m1, m1)));
}

TEST_CASE("property: cohomology modules up to n = 50")
{
    for (unsigned n = 0; n <= 50; ++n) {
        const auto m = build_cohomology_module(n);
        CHECK(verify_brackets(m).all_pass());
        CHECK(m.dim() == n + 1);
        CHECK(module_character(m) == irrep_character(n));
        for (int k = 0; k <= static_cast<int>(n); ++k)
            if ((static_cast<int>(n) - k) % 2 == 0)
                CHECK(lefschetz_power_is_bijection(m, k));
    }
}

TEST_CASE("X raises and Y lowers weight by 2")
{
    const std::vector<unsigned> labels{3, 2, 1};
    const auto m = multiprojective_module(labels);
    const auto& w = m.basis_weights();
    for (Eigen::Index k = 0; k < m.X().outerSize(); ++k)
        for (SparseMatrix<Rational>::InnerIterator it(m.X(), k); it; ++it)
            CHECK(w[it.row()] == w[it.col()] + 2);
    for (Eigen::Index k = 0; k < m.Y().outerSize(); ++k)
        for (SparseMatrix<Rational>::InnerIterator it(m.Y(), k); it; ++it)
            CHECK(w[it.row()] == w[it.col()] - 2);
}

TEST_CASE("property: Kunneth modules for partitions of n <= 10")
{
    for (unsigned n = 1; n <= 10; ++n) {
        for (const auto& parts : integer_partitions(n)) {
            const auto m = multiprojective_module(parts);
            CHECK(verify_brackets(m).all_pass());
            CHECK(module_character(m) == tensor_of_irreps(parts));
            CHECK(is_irreducible(m) == (parts.size() == 1));
        }
    }
}

TEST_CASE("property: rank count of highest-weight vectors matches Clebsch-Gordan")
{
    for (unsigned n = 1; n <= 7; ++n) {
        for (const auto& parts : integer_partitions(n)) {
            const auto m = multiprojective_module(parts);
            CHECK(highest_weight_decomposition(m) == clebsch_gordan_decompose(module_character(m)));
            // Hard Lefschetz holds in every finite-dimensional module.
            for (int k = 0; k <= static_cast<int>(n); ++k)
                CHECK(lefschetz_power_is_bijection(m, k));
        }
    }
}

TEST_CASE("BigInt scalar gives the same module")
{
    const std::vector<unsigned> labels{2, 2, 1};
    const auto mz = multiprojective_module<BigInt>(labels);
    const auto mq = multiprojective_module<Rational>(labels);
    CHECK(verify_brackets(mz).all_pass());
    CHECK(module_character(mz) == module_character(mq));
    CHECK(highest_weight_decomposition(mz) == highest_weight_decomposition(mq));
}

TEST_CASE("exact_rank")
{
    DenseMatrix<Rational> a(3, 3);
    a << 1, 2, 3, 4, 5, 6, 7, 8, 9;
    CHECK(exact_rank(a) == 2);
    DenseMatrix<BigInt> b(3, 4);
    b << 0, 0, 2, 1, 0, 0, 4, 2, 1, 3, 0, 0;
    CHECK(exact_rank(b) == 2);
    CHECK(exact_rank(DenseMatrix<Rational>::Identity(5, 5).eval()) == 5);
    CHECK(exact_rank(DenseMatrix<Rational>::Zero(2, 3).eval()) == 0);
}
