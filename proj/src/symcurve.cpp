#include "mproj/symcurve.hpp"

#include <algorithm>
#include <stdexcept>

namespace mproj {

PoincarePolynomial::PoincarePolynomial(std::vector<BigInt> betti) : betti_(std::move(betti))
{
    if (betti_.size() % 2 == 0)
        throw std::invalid_argument("PoincarePolynomial: need 2n+1 Betti numbers, got " +
                                    std::to_string(betti_.size()));
    if (betti_.front() != 1)
        throw std::invalid_argument("PoincarePolynomial: B_0 must be 1, got " +
                                    betti_.front().str());
    const std::size_t top = betti_.size() - 1;
    for (std::size_t r = 0; r <= top; ++r) {
        if (betti_[r] < 0)
            throw std::invalid_argument("PoincarePolynomial: negative Betti number B_" +
                                        std::to_string(r));
        if (betti_[r] != betti_[top - r])
            throw std::invalid_argument("PoincarePolynomial: duality fails, B_" +
                                        std::to_string(r) + " != B_" + std::to_string(top - r));
    }
}

BigInt PoincarePolynomial::total() const
{
    BigInt s = 0;
    for (const auto& b : betti_)
        s += b;
    return s;
}

std::string to_string(const PoincarePolynomial& p)
{
    std::string out;
    const auto& b = p.betti();
    for (std::size_t r = 0; r < b.size(); ++r) {
        if (b[r] == 0)
            continue;
        if (!out.empty())
            out += " + ";
        if (r == 0 || b[r] != 1)
            out += b[r].str();
        if (r >= 1)
            out += "x";
        if (r >= 2)
            out += "^" + std::to_string(r);
    }
    return out;
}

BigInt betti_closed(unsigned g, unsigned n, unsigned r)
{
    if (g == 0)
        throw std::invalid_argument(
            "betti_closed: the closed formula needs genus >= 1; use poincare_genus_zero for g = 0");
    if (r > 2 * n)
        throw std::invalid_argument("betti_closed: degree r = " + std::to_string(r) +
                                    " outside [0, " + std::to_string(2 * n) + "]");
    if (r > n)
        r = 2 * n - r;
    // Terms with r - 2j > 2g vanish, so start j where r - 2j <= 2g.
    const std::int64_t two_g = 2 * static_cast<std::int64_t>(g);
    std::int64_t k = r;
    if (k > two_g)
        k -= ((k - two_g + 1) / 2) * 2;
    BigInt b = 0;
    for (; k >= 0; k -= 2)
        b += binom(two_g, k);
    return b;
}

TruncatedBiseries macdonald_series(unsigned g, unsigned tcap)
{
    const auto one_plus_tx = TruncatedBiseries::one(tcap) + TruncatedBiseries::monomial(tcap, 1, 1);
    const auto numerator = series_pow(one_plus_tx, 2 * g);
    const auto inv_one_minus_t = series_geometric(TruncatedBiseries::monomial(tcap, 1, 0));
    const auto inv_one_minus_tx2 = series_geometric(TruncatedBiseries::monomial(tcap, 1, 2));
    return series_mul(series_mul(numerator, inv_one_minus_t), inv_one_minus_tx2);
}

PoincarePolynomial poincare_via_series(unsigned g, unsigned n)
{
    if (g == 0)
        throw std::invalid_argument(
            "poincare_via_series: the generating series is stated for genus >= 1; use "
            "poincare_genus_zero for g = 0");
    const auto series = macdonald_series(g, n);
    std::vector<BigInt> betti = series.row(n);
    if (betti.size() != 2 * static_cast<std::size_t>(n) + 1)
        throw std::logic_error("poincare_via_series: t^n coefficient has degree " +
                               std::to_string(static_cast<long>(betti.size()) - 1) +
                               ", expected " + std::to_string(2 * n));
    return PoincarePolynomial(std::move(betti));
}

PoincarePolynomial poincare_genus_zero(unsigned n)
{
    std::vector<BigInt> betti(2 * static_cast<std::size_t>(n) + 1, BigInt(0));
    for (std::size_t i = 0; i < betti.size(); i += 2)
        betti[i] = 1;
    return PoincarePolynomial(std::move(betti));
}

PoincarePolynomial poincare_symmetric_product(unsigned g, unsigned n)
{
    return g == 0 ? poincare_genus_zero(n) : poincare_via_series(g, n);
}

BigInt total_dim_cohomology(unsigned g, unsigned n)
{
    if (g == 0)
        return BigInt(n) + 1;
    const unsigned upper = std::min(n, 2 * g);
    BigInt s = 0;
    for (unsigned i = 0; i <= upper; ++i)
        s += binom(2 * static_cast<std::int64_t>(g), i) * (n + 1 - i);
    return s;
}

BigInt dim_sym_of_cohomology(unsigned g, unsigned n)
{
    return binom(2 * static_cast<std::int64_t>(g) + n + 1, n);
}

std::string to_string(DimRelation r)
{
    switch (r) {
    case DimRelation::STRICTLY_LESS:
        return "STRICTLY_LESS";
    case DimRelation::EQUAL:
        return "EQUAL";
    case DimRelation::STRICTLY_GREATER:
        return "STRICTLY_GREATER";
    }
    return "?";
}

DimComparison compare_dimensions(unsigned g, unsigned n)
{
    DimComparison c;
    c.genus = g;
    c.n = n;
    c.cohomology_dim = total_dim_cohomology(g, n);
    c.sym_dim = dim_sym_of_cohomology(g, n);
    c.relation = c.cohomology_dim < c.sym_dim   ? DimRelation::STRICTLY_LESS
                 : c.cohomology_dim == c.sym_dim ? DimRelation::EQUAL
                                                 : DimRelation::STRICTLY_GREATER;
    return c;
}

DimComparison genus_obstruction_report(unsigned g, unsigned n)
{
    if (n < 2)
        throw std::invalid_argument("genus_obstruction_report: need n >= 2, got " +
                                    std::to_string(n));
    return compare_dimensions(g, n);
}

}  // namespace mproj
