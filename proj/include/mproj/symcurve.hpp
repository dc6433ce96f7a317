#ifndef MPROJ_SYMCURVE_HPP
#define MPROJ_SYMCURVE_HPP

#include <string>
#include <vector>

#include "mproj/exactalg.hpp"

namespace mproj {

/**
 * Betti numbers B_0..B_2n of a compact 2n-real-dimensional space.
 * Construction enforces odd length, B_0 = 1 and Poincare duality.
 */
class PoincarePolynomial {
public:
    explicit PoincarePolynomial(std::vector<BigInt> betti);

    const std::vector<BigInt>& betti() const { return betti_; }
    const BigInt& operator[](std::size_t r) const { return betti_.at(r); }
    /// Complex dimension n.
    unsigned half_dimension() const { return static_cast<unsigned>(betti_.size() / 2); }
    BigInt total() const;

    friend bool operator==(const PoincarePolynomial&, const PoincarePolynomial&) = default;

private:
    std::vector<BigInt> betti_;
};

/// `1 + 2x + 2x^2 + 2x^3 + x^4`; zero coefficients are skipped.
std::string to_string(const PoincarePolynomial& p);

/// r-th Betti number of Sym^n of a genus-g curve, g >= 1, 0 <= r <= 2n:
/// sum over j of C(2g, r - 2j) for r <= n, mirrored for r > n.
/// Throws std::invalid_argument for g = 0 or r out of range.
BigInt betti_closed(unsigned g, unsigned n, unsigned r);

/// (1+tx)^2g / ((1-t)(1-tx^2)) truncated at t^tcap.
TruncatedBiseries macdonald_series(unsigned g, unsigned tcap);

/// Poincare polynomial of Sym^n(C), genus g >= 1, read from the t^n
/// coefficient of the generating series.
PoincarePolynomial poincare_via_series(unsigned g, unsigned n);

/// Poincare polynomial of P^n: ones in even degrees.
PoincarePolynomial poincare_genus_zero(unsigned n);

/// Poincare polynomial of Sym^n of a genus-g curve, routed to the
/// projective-space rule at g = 0 and to the series otherwise.
PoincarePolynomial poincare_symmetric_product(unsigned g, unsigned n);

/// dim H^*(Sym^n(C)) = sum_{i <= min(n,2g)} C(2g,i)(n+1-i); n+1 at g = 0.
BigInt total_dim_cohomology(unsigned g, unsigned n);

/// dim Sym^n(H^*(C)) = C(2g+n+1, n), with H^*(C) taken as an ungraded
/// space of dimension 2g+2.
BigInt dim_sym_of_cohomology(unsigned g, unsigned n);

enum class DimRelation { STRICTLY_LESS, EQUAL, STRICTLY_GREATER };

std::string to_string(DimRelation r);

struct DimComparison {
    unsigned genus = 0;
    unsigned n = 0;
    BigInt cohomology_dim;  // dim H^*(Sym^n(C))
    BigInt sym_dim;         // dim Sym^n(H^*(C))
    DimRelation relation = DimRelation::EQUAL;
};

/// Both dimensions and how they compare, for any n >= 1.
DimComparison compare_dimensions(unsigned g, unsigned n);

/// compare_dimensions restricted to n >= 2, where the genus decides the
/// outcome. Throws std::invalid_argument for n < 2.
DimComparison genus_obstruction_report(unsigned g, unsigned n);

}  // namespace mproj

#endif  // MPROJ_SYMCURVE_HPP
