#ifndef MPROJ_EXACTALG_HPP
#define MPROJ_EXACTALG_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace mproj {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
BigInt binom(std::int64_t n, std::int64_t k);

/**
 * Laurent polynomial in one variable q with big-integer coefficients.
 *
 * Stored sparse: exponent -> nonzero coefficient. The zero polynomial is
 * the empty map. Values are immutable once built; arithmetic returns new
 * values.
 */
class LaurentPoly {
public:
    using Terms = std::map<int, BigInt>;

    LaurentPoly() = default;
    explicit LaurentPoly(Terms terms);

    static LaurentPoly constant(const BigInt& c);
    static LaurentPoly monomial(int exponent, const BigInt& c = 1);

    const Terms& terms() const { return terms_; }
    BigInt coeff(int exponent) const;
    bool is_zero() const { return terms_.empty(); }

    // Only meaningful for nonzero polynomials.
    int max_exponent() const { return terms_.rbegin()->first; }
    int min_exponent() const { return terms_.begin()->first; }

    /// Value at q = 1.
    BigInt coefficient_sum() const;

    /// p(q^-1); palindromic polynomials are fixed by this.
    LaurentPoly reflected() const;

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

private:
    Terms terms_;
};

/// Exact convolution product.
LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b);

/// Canonical text form, descending exponents: `q^3 + 2*q + 2*q^-1 + q^-3`.
std::string to_string(const LaurentPoly& p);

/// Inverse of to_string. Also tolerates missing spaces, `2q`, and repeated
/// exponents (which are summed). Throws std::invalid_argument.
LaurentPoly parse_laurent(std::string_view text);

/**
 * Power series in t, truncated above t^tcap, whose coefficients are
 * polynomials in x. Both directions are stored dense; each x-polynomial
 * carries no trailing zeros (the zero polynomial is empty).
 */
class TruncatedBiseries {
public:
    using XPoly = std::vector<BigInt>;

    explicit TruncatedBiseries(unsigned tcap);
    TruncatedBiseries(unsigned tcap, std::vector<XPoly> rows);

    static TruncatedBiseries one(unsigned tcap);
    /// c * t^tdeg * x^xdeg (zero if tdeg > tcap).
    static TruncatedBiseries monomial(unsigned tcap, unsigned tdeg, unsigned xdeg,
                                      const BigInt& c = 1);

    unsigned tcap() const { return tcap_; }
    /// Coefficient of t^i as a polynomial in x.
    const XPoly& row(unsigned i) const { return rows_.at(i); }
    BigInt coeff(unsigned tdeg, unsigned xdeg) const;

    friend TruncatedBiseries operator+(const TruncatedBiseries& a,
                                       const TruncatedBiseries& b);
    friend TruncatedBiseries operator-(const TruncatedBiseries& a,
                                       const TruncatedBiseries& b);
    friend bool operator==(const TruncatedBiseries& a,
                           const TruncatedBiseries& b) = default;

private:
    unsigned tcap_;
    std::vector<XPoly> rows_;  // size tcap_ + 1
};

/// Truncated product. Throws std::invalid_argument when the caps differ.
TruncatedBiseries series_mul(const TruncatedBiseries& a, const TruncatedBiseries& b);

/// Inverse of (1 - u), i.e. sum of u^k up to tcap. Requires u to have no
/// t^0 term; throws std::domain_error otherwise.
TruncatedBiseries series_geometric(const TruncatedBiseries& u);

/// u^k by repeated squaring, truncated at u's cap.
TruncatedBiseries series_pow(const TruncatedBiseries& u, unsigned k);

}  // namespace mproj

#endif  // MPROJ_EXACTALG_HPP
