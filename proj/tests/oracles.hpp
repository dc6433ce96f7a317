#ifndef MPROJ_TESTS_ORACLES_HPP
#define MPROJ_TESTS_ORACLES_HPP

// Reference computations used only by the tests. None of them call into the
// library code paths they are used to check.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "mproj/exactalg.hpp"

namespace oracle {

using mproj::BigInt;
using mproj::Rational;

/// Pascal's triangle row by row.
inline BigInt pascal_binom(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    std::vector<BigInt> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<BigInt> next(i + 1, BigInt(1));
        for (int j = 1; j < i; ++j)
            next[j] = row[j - 1] + row[j];
        row = std::move(next);
    }
    return row[k];
}

/// Weight multiset of Sym^n1(C^2) x ... x Sym^nr(C^2), counted by walking
/// every basis tensor e_j1 x ... x e_jr (weight sum of n_i - 2 j_i).
inline std::map<int, std::int64_t> weight_count(const std::vector<unsigned>& labels)
{
    std::map<int, std::int64_t> counts;
    std::vector<unsigned> idx(labels.size(), 0);
    for (;;) {
        int w = 0;
        for (std::size_t i = 0; i < labels.size(); ++i)
            w += static_cast<int>(labels[i]) - 2 * static_cast<int>(idx[i]);
        ++counts[w];
        std::size_t i = 0;
        while (i < labels.size() && idx[i] == labels[i]) {
            idx[i] = 0;
            ++i;
        }
        if (i == labels.size())
            break;
        ++idx[i];
    }
    return counts;
}

/// Coefficient of t^n x^r in (1+tx)^2g / ((1-t)(1-tx^2)) by summing over
/// the exponent triples (a, b, c): t^a x^a from the numerator, t^b x^2b and
/// t^c from the two geometric factors.
inline BigInt series_coefficient_by_triples(int g, int n, int r)
{
    BigInt total = 0;
    for (int a = 0; a <= n; ++a)
        for (int b = 0; a + b <= n; ++b)
            if (a + 2 * b == r)
                total += pascal_binom(2 * g, a);
    return total;
}

/// Number of partitions of n by the standard dynamic program over part sizes.
inline std::uint64_t partition_count(unsigned n)
{
    std::vector<std::uint64_t> p(n + 1, 0);
    p[0] = 1;
    for (unsigned part = 1; part <= n; ++part)
        for (unsigned s = part; s <= n; ++s)
            p[s] += p[s - part];
    return p[n];
}

using DenseQ = std::vector<std::vector<Rational>>;

inline DenseQ dense_mul(const DenseQ& a, const DenseQ& b)
{
    const std::size_t n = a.size();
    DenseQ c(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (a[i][k] != 0)
                for (std::size_t j = 0; j < n; ++j)
                    c[i][j] += a[i][k] * b[k][j];
    return c;
}

inline DenseQ dense_commutator(const DenseQ& a, const DenseQ& b)
{
    DenseQ ab = dense_mul(a, b);
    const DenseQ ba = dense_mul(b, a);
    for (std::size_t i = 0; i < ab.size(); ++i)
        for (std::size_t j = 0; j < ab.size(); ++j)
            ab[i][j] -= ba[i][j];
    return ab;
}

/// Small random rational with nonzero denominator.
inline Rational random_rational(std::mt19937_64& rng, int range = 20)
{
    std::uniform_int_distribution<int> num(-range, range);
    std::uniform_int_distribution<int> den(1, range);
    return Rational(num(rng), den(rng));
}

}  // namespace oracle

#endif  // MPROJ_TESTS_ORACLES_HPP
