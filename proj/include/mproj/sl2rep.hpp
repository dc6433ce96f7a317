#ifndef MPROJ_SL2REP_HPP
#define MPROJ_SL2REP_HPP

#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mproj/exactalg.hpp"

namespace mproj {

/// Raised when a Laurent polynomial cannot be the character of an
/// sl(2)-module of the requested shape.
class CharacterError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/**
 * Character of a finite-dimensional sl(2)-module: the multiset of
 * H-eigenvalues encoded as a Laurent polynomial in q.
 *
 * Construction checks that the polynomial is palindromic with nonnegative
 * coefficients. Weight monotonicity is not enforced here; it is checked by
 * clebsch_gordan_decompose, which is where a violation becomes an error.
 */
class Character {
public:
    /// The zero character (zero-dimensional module).
    Character() = default;
    explicit Character(LaurentPoly poly);

    const LaurentPoly& poly() const { return poly_; }
    BigInt dimension() const { return poly_.coefficient_sum(); }
    /// Highest weight; 0 for the zero character.
    int top_weight() const { return poly_.is_zero() ? 0 : poly_.max_exponent(); }
    BigInt multiplicity(int weight) const { return poly_.coeff(weight); }

    friend bool operator==(const Character&, const Character&) = default;

private:
    LaurentPoly poly_;
};

std::string to_string(const Character& c);

/**
 * Multiset of irreducible labels n (each standing for Sym^n(C^2)),
 * kept in descending order with multiplicities.
 */
class IrrepMultiset {
public:
    using Counts = std::map<unsigned, unsigned, std::greater<>>;

    IrrepMultiset() = default;
    explicit IrrepMultiset(Counts counts);
    explicit IrrepMultiset(std::span<const unsigned> labels);

    const Counts& counts() const { return counts_; }
    /// Labels expanded and sorted descending, e.g. {3,1,1}.
    std::vector<unsigned> labels() const;
    unsigned multiplicity(unsigned label) const;
    std::size_t size() const;
    unsigned label_sum() const;
    bool empty() const { return counts_.empty(); }
    /// No trivial (label 0) summands.
    bool is_nontrivial() const { return !counts_.contains(0); }

    friend bool operator==(const IrrepMultiset&, const IrrepMultiset&) = default;

private:
    Counts counts_;
};

/// Canonical text: `3,1^2` for {3,1,1}; empty multiset prints as "".
std::string to_string(const IrrepMultiset& m);
/// Accepts the canonical text and plain lists such as `3,1,1`.
IrrepMultiset parse_irrep_multiset(std::string_view text);

/// All partitions of n (positive parts, descending), in reverse
/// lexicographic order: (n), (n-1,1), ..., (1,...,1). n = 0 yields none.
std::vector<std::vector<unsigned>> integer_partitions(unsigned n);

/// Calls visit on each partition of n into exactly `parts` parts.
void for_each_partition(unsigned n, unsigned parts,
                        const std::function<bool(std::span<const unsigned>)>& visit);

/// q^n + q^(n-2) + ... + q^-n.
Character irrep_character(unsigned n);

/// Product of characters. Throws std::invalid_argument on an empty list.
Character tensor_character(std::span<const Character> factors);
/// Convenience: tensor product of irrep_character(label) over the labels.
Character tensor_of_irreps(std::span<const unsigned> labels);

/// Direct-sum decomposition into irreducibles by weight peeling:
/// mult(k) = c(q^k) - c(q^(k+2)). Throws CharacterError("not a module
/// character") when some multiplicity is negative.
IrrepMultiset clebsch_gordan_decompose(const Character& c);

/// The unique multiset of positive labels whose irreducible characters
/// multiply to c. Throws CharacterError("not a tensor of nontrivial
/// irreducibles") when none exists.
IrrepMultiset factor_tensor_of_irreps(const Character& c);

}  // namespace mproj

#endif  // MPROJ_SL2REP_HPP
