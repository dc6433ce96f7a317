#ifndef MPROJ_CLASSIFIER_HPP
#define MPROJ_CLASSIFIER_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mproj/exactalg.hpp"
#include "mproj/sl2rep.hpp"
#include "mproj/symcurve.hpp"

namespace mproj {

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Label of the multiprojective space P^n1 x ... x P^nr: a nonempty list of
/// positive parts, sorted descending.
class Partition {
public:
    /// Sorts the parts; throws std::invalid_argument on an empty list or a
    /// zero part.
    explicit Partition(std::vector<unsigned> parts);

    std::span<const unsigned> parts() const { return parts_; }
    unsigned n() const { return n_; }
    std::size_t size() const { return parts_.size(); }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<unsigned> parts_;
    unsigned n_ = 0;
};

/// `2,1,1`.
std::string to_string(const Partition& p);

/// Comma- and/or space-separated positive integers in any order.
/// Throws ParseError naming the offending token.
Partition parse_partition(std::string_view text);

/// Character of H^*(P^n1 x ... x P^nr) under the diagonal sl(2) action.
Character cohomology_character(const Partition& p);

/// Kunneth product of the projective-space Poincare polynomials.
PoincarePolynomial poincare_of_multiprojective(const Partition& p);

enum class Verdict { ISOMORPHIC, NON_ISOMORPHIC };
enum class VerdictReason { DIMENSION_MISMATCH, SAME_PARTITION, DISTINCT_CHARACTERS };

std::string to_string(Verdict v);
std::string to_string(VerdictReason r);

/// Representation-theoretic witness attached to a verdict.
struct VerdictEvidence {
    Character character1, character2;
    IrrepMultiset factorization1, factorization2;
};

struct ClassificationVerdict {
    Verdict verdict = Verdict::NON_ISOMORPHIC;
    VerdictReason reason = VerdictReason::DIMENSION_MISMATCH;
    Partition partition1, partition2;
    /// Absent only for DIMENSION_MISMATCH, which is decided before any
    /// character is computed.
    std::optional<VerdictEvidence> evidence;
};

/// Decides whether P^p1 and P^p2 are isomorphic and records the evidence.
ClassificationVerdict classify(const Partition& p1, const Partition& p2);

/// Whether the evidence alone supports the verdict: factorizations recover
/// the input partitions, and the characters agree exactly when the verdict
/// is ISOMORPHIC.
bool evidence_is_consistent(const ClassificationVerdict& v);

/// Point of projective space with exact rational homogeneous coordinates.
/// Equality is up to a nonzero common scalar.
class ProjPoint {
public:
    /// Throws std::invalid_argument when empty or all zero.
    explicit ProjPoint(std::vector<Rational> coords);

    std::span<const Rational> coords() const { return coords_; }
    std::size_t size() const { return coords_.size(); }
    /// Representative with first nonzero coordinate equal to 1.
    ProjPoint normalized() const;

    friend bool operator==(const ProjPoint& a, const ProjPoint& b);

private:
    std::vector<Rational> coords_;
};

std::string to_string(const ProjPoint& p);

/// [z1:z2], [w1:w2] -> [z1 w1 : z2 w2 : z1 w2 + z2 w1], the map
/// P^1 x P^1 -> P^2 that factors through Sym^2(P^1).
ProjPoint sym2_p1_map(const ProjPoint& z, const ProjPoint& w);

}  // namespace mproj

#endif  // MPROJ_CLASSIFIER_HPP
