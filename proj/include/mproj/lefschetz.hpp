#ifndef MPROJ_LEFSCHETZ_HPP
#define MPROJ_LEFSCHETZ_HPP

// Explicit sl(2) action on the cohomology of projective space and on
// Kunneth products of such spaces. The operators are exact sparse matrices
// templated on the scalar type; Rational is the default, BigInt also works
// since every entry produced here is integral.

#include <algorithm>
#include <concepts>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <unsupported/Eigen/KroneckerProduct>

#include "mproj/exactalg.hpp"
#include "mproj/sl2rep.hpp"

namespace mproj {

template <typename Scalar>
using SparseMatrix = Eigen::SparseMatrix<Scalar>;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

inline BigInt abs_numerator(const Rational& v)
{
    return abs(numerator(v));
}

inline BigInt abs_numerator(const BigInt& v)
{
    return abs(v);
}

template <std::integral I>
BigInt abs_numerator(I v)
{
    return abs(BigInt(v));
}

/// Drops explicitly stored zeros.
template <typename Scalar>
void prune_zeros(SparseMatrix<Scalar>& m)
{
    m.prune([](Eigen::Index, Eigen::Index, const Scalar& v) { return v != Scalar(0); });
}

/**
 * A finite-dimensional sl(2)-module given by the matrices of X, Y and H on
 * a basis of H-eigenvectors.
 *
 * H is always diagonal and equal to diag(basis_weights); it is built from
 * the weights rather than supplied. X and Y are not checked against the
 * bracket relations on construction, so broken modules can be represented
 * and then diagnosed with verify_brackets.
 */
template <typename Scalar = Rational>
class Sl2MatrixModule {
public:
    using Matrix = SparseMatrix<Scalar>;

    Sl2MatrixModule(Matrix x, Matrix y, std::vector<int> basis_weights)
        : x_(std::move(x)), y_(std::move(y)), weights_(std::move(basis_weights))
    {
        const auto d = static_cast<Eigen::Index>(weights_.size());
        if (d == 0)
            throw std::invalid_argument("Sl2MatrixModule: dimension must be positive");
        if (x_.rows() != d || x_.cols() != d || y_.rows() != d || y_.cols() != d)
            throw std::invalid_argument("Sl2MatrixModule: X and Y must be " + std::to_string(d) +
                                        "x" + std::to_string(d));
        h_.resize(d, d);
        std::vector<Eigen::Triplet<Scalar>> diag;
        for (Eigen::Index i = 0; i < d; ++i)
            if (weights_[i] != 0)
                diag.emplace_back(i, i, Scalar(weights_[i]));
        h_.setFromTriplets(diag.begin(), diag.end());
        prune_zeros(x_);
        prune_zeros(y_);
    }

    Eigen::Index dim() const { return static_cast<Eigen::Index>(weights_.size()); }
    const Matrix& X() const { return x_; }
    const Matrix& Y() const { return y_; }
    const Matrix& H() const { return h_; }
    const std::vector<int>& basis_weights() const { return weights_; }

    /// Basis indices whose weight equals w, ascending.
    std::vector<Eigen::Index> weight_space(int w) const
    {
        std::vector<Eigen::Index> idx;
        for (Eigen::Index i = 0; i < dim(); ++i)
            if (weights_[i] == w)
                idx.push_back(i);
        return idx;
    }

private:
    Matrix x_, y_, h_;
    std::vector<int> weights_;
};

/**
 * H^*(P^n) as an sl(2)-module. Basis e_0..e_n stands for H^0, H^2, ...,
 * H^2n with H e_p = (n - 2p) e_p. Y is cup product with the hyperplane
 * class, Y e_p = e_(p+1). X is the adjoint normalized by [X,Y] = H and
 * X e_0 = 0, which forces X e_p = p(n - p + 1) e_(p-1).
 */
template <typename Scalar = Rational>
Sl2MatrixModule<Scalar> build_cohomology_module(unsigned n)
{
    const auto d = static_cast<Eigen::Index>(n) + 1;
    std::vector<Eigen::Triplet<Scalar>> xt, yt;
    std::vector<int> weights(d);
    for (Eigen::Index p = 0; p < d; ++p) {
        weights[p] = static_cast<int>(n) - 2 * static_cast<int>(p);
        if (p + 1 < d)
            yt.emplace_back(p + 1, p, Scalar(1));
        if (p >= 1)
            xt.emplace_back(p - 1, p, Scalar(p * (static_cast<Eigen::Index>(n) - p + 1)));
    }
    SparseMatrix<Scalar> x(d, d), y(d, d);
    x.setFromTriplets(xt.begin(), xt.end());
    y.setFromTriplets(yt.begin(), yt.end());
    return Sl2MatrixModule<Scalar>(std::move(x), std::move(y), std::move(weights));
}

/// Outcome of checking one bracket relation.
struct RelationCheck {
    std::string relation;  // "XY-YX=H", "HX-XH=2X" or "HY-YH=-2Y"
    bool pass = false;
    /// Largest |numerator| among entries of lhs - rhs; zero iff pass.
    BigInt max_abs_discrepancy_numerator = 0;
};

struct BracketReport {
    std::vector<RelationCheck> relations;

    bool all_pass() const
    {
        return std::all_of(relations.begin(), relations.end(),
                           [](const RelationCheck& r) { return r.pass; });
    }
    const RelationCheck& at(const std::string& relation) const
    {
        for (const auto& r : relations)
            if (r.relation == relation)
                return r;
        throw std::out_of_range("no relation named " + relation);
    }
};

namespace detail {

template <typename Scalar>
RelationCheck check_zero(std::string name, SparseMatrix<Scalar> diff)
{
    prune_zeros(diff);
    RelationCheck r{std::move(name), diff.nonZeros() == 0, 0};
    for (Eigen::Index k = 0; k < diff.outerSize(); ++k)
        for (typename SparseMatrix<Scalar>::InnerIterator it(diff, k); it; ++it)
            r.max_abs_discrepancy_numerator =
                std::max(r.max_abs_discrepancy_numerator, abs_numerator(it.value()));
    return r;
}

}  // namespace detail

/// Checks [X,Y] = H, [H,X] = 2X and [H,Y] = -2Y as exact matrix identities.
template <typename Scalar>
BracketReport verify_brackets(const Sl2MatrixModule<Scalar>& m)
{
    using Matrix = SparseMatrix<Scalar>;
    const Matrix& x = m.X();
    const Matrix& y = m.Y();
    const Matrix& h = m.H();
    BracketReport rep;
    rep.relations.push_back(
        detail::check_zero<Scalar>("XY-YX=H", Matrix(Matrix(x * y) - Matrix(y * x) - h)));
    rep.relations.push_back(detail::check_zero<Scalar>(
        "HX-XH=2X", Matrix(Matrix(h * x) - Matrix(x * h) - Scalar(2) * x)));
    rep.relations.push_back(detail::check_zero<Scalar>(
        "HY-YH=-2Y", Matrix(Matrix(h * y) - Matrix(y * h) + Scalar(2) * y)));
    return rep;
}

/// Kunneth tensor product; X and Y act by the Leibniz rule
/// X (x) 1 + 1 (x) X. Basis index of e_i (x) f_j is i * dim(b) + j.
template <typename Scalar>
Sl2MatrixModule<Scalar> tensor_modules(const Sl2MatrixModule<Scalar>& a,
                                       const Sl2MatrixModule<Scalar>& b)
{
    using Matrix = SparseMatrix<Scalar>;
    Matrix ia(a.dim(), a.dim()), ib(b.dim(), b.dim());
    ia.setIdentity();
    ib.setIdentity();
    Matrix x = Matrix(Eigen::kroneckerProduct(a.X(), ib)) + Matrix(Eigen::kroneckerProduct(ia, b.X()));
    Matrix y = Matrix(Eigen::kroneckerProduct(a.Y(), ib)) + Matrix(Eigen::kroneckerProduct(ia, b.Y()));
    std::vector<int> weights;
    weights.reserve(static_cast<std::size_t>(a.dim() * b.dim()));
    for (int wa : a.basis_weights())
        for (int wb : b.basis_weights())
            weights.push_back(wa + wb);
    return Sl2MatrixModule<Scalar>(std::move(x), std::move(y), std::move(weights));
}

/// H^*(P^n1 x ... x P^nr) as the tensor product of the factor modules.
template <typename Scalar = Rational>
Sl2MatrixModule<Scalar> multiprojective_module(std::span<const unsigned> labels)
{
    if (labels.empty())
        throw std::invalid_argument("multiprojective_module: empty partition");
    Sl2MatrixModule<Scalar> m = build_cohomology_module<Scalar>(labels.front());
    for (unsigned n : labels.subspan(1))
        m = tensor_modules(m, build_cohomology_module<Scalar>(n));
    return m;
}

/// Character read off from the diagonal of H.
template <typename Scalar>
Character module_character(const Sl2MatrixModule<Scalar>& m)
{
    LaurentPoly::Terms t;
    for (int w : m.basis_weights())
        t[w] += 1;
    return Character(LaurentPoly(std::move(t)));
}

/**
 * True iff the top weight space is one-dimensional and the Y-string of a
 * highest-weight vector spans the module. The string vectors sit in
 * distinct weight spaces, so they are independent exactly when nonzero.
 * Assumes the bracket relations hold.
 */
template <typename Scalar>
bool is_irreducible(const Sl2MatrixModule<Scalar>& m)
{
    const auto& w = m.basis_weights();
    const int top = *std::max_element(w.begin(), w.end());
    const auto top_space = m.weight_space(top);
    if (top_space.size() != 1)
        return false;
    DenseVector<Scalar> v = DenseVector<Scalar>::Zero(m.dim());
    v(top_space.front()) = Scalar(1);
    Eigen::Index spanned = 0;
    for (;;) {
        const bool nonzero = std::any_of(v.data(), v.data() + v.size(),
                                         [](const Scalar& s) { return s != Scalar(0); });
        if (!nonzero)
            break;
        if (++spanned > m.dim())
            return false;
        v = m.Y() * v;
    }
    return spanned == m.dim();
}

/// Rank by fraction-free (Bareiss) elimination. Exact for any integral
/// domain scalar, including Rational and BigInt.
template <typename Scalar>
Eigen::Index exact_rank(DenseMatrix<Scalar> a)
{
    const Eigen::Index rows = a.rows();
    const Eigen::Index cols = a.cols();
    Eigen::Index rank = 0;
    Scalar prev(1);
    for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
        Eigen::Index piv = rank;
        while (piv < rows && a(piv, c) == Scalar(0))
            ++piv;
        if (piv == rows)
            continue;
        if (piv != rank)
            a.row(piv).swap(a.row(rank));
        for (Eigen::Index i = rank + 1; i < rows; ++i) {
            for (Eigen::Index j = c + 1; j < cols; ++j)
                a(i, j) = Scalar((a(rank, c) * a(i, j) - a(i, c) * a(rank, j)) / prev);
            a(i, c) = Scalar(0);
        }
        prev = a(rank, c);
        ++rank;
    }
    return rank;
}

/// Dense block of m restricted to the given rows and columns.
template <typename Scalar>
DenseMatrix<Scalar> restrict_to(const SparseMatrix<Scalar>& m, std::span<const Eigen::Index> rows,
                                std::span<const Eigen::Index> cols)
{
    std::map<Eigen::Index, Eigen::Index> row_pos;
    for (std::size_t i = 0; i < rows.size(); ++i)
        row_pos.emplace(rows[i], static_cast<Eigen::Index>(i));
    DenseMatrix<Scalar> out = DenseMatrix<Scalar>::Zero(static_cast<Eigen::Index>(rows.size()),
                                                        static_cast<Eigen::Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (typename SparseMatrix<Scalar>::InnerIterator it(m, cols[j]); it; ++it)
            if (auto r = row_pos.find(it.row()); r != row_pos.end())
                out(r->second, static_cast<Eigen::Index>(j)) = it.value();
    return out;
}

/// Dimension of ker X inside the weight-w space: the number of independent
/// highest-weight vectors of weight w.
template <typename Scalar>
Eigen::Index highest_weight_vector_count(const Sl2MatrixModule<Scalar>& m, int w)
{
    const auto source = m.weight_space(w);
    if (source.empty())
        return 0;
    const auto target = m.weight_space(w + 2);
    if (target.empty())
        return static_cast<Eigen::Index>(source.size());
    return static_cast<Eigen::Index>(source.size()) - exact_rank(restrict_to(m.X(), target, source));
}

/// Irreducible summands counted by matrix rank instead of weight counting.
template <typename Scalar>
IrrepMultiset highest_weight_decomposition(const Sl2MatrixModule<Scalar>& m)
{
    const auto& w = m.basis_weights();
    const int top = *std::max_element(w.begin(), w.end());
    IrrepMultiset::Counts counts;
    for (int k = 0; k <= top; ++k)
        if (auto c = highest_weight_vector_count(m, k); c > 0)
            counts[static_cast<unsigned>(k)] = static_cast<unsigned>(c);
    return IrrepMultiset(std::move(counts));
}

/// Whether Y^k maps the weight-k space bijectively onto the weight-(-k)
/// space (hard Lefschetz shape). Requires k >= 0.
template <typename Scalar>
bool lefschetz_power_is_bijection(const Sl2MatrixModule<Scalar>& m, int k)
{
    if (k < 0)
        throw std::invalid_argument("lefschetz_power_is_bijection: k must be nonnegative");
    const auto source = m.weight_space(k);
    const auto target = m.weight_space(-k);
    if (source.size() != target.size())
        return false;
    if (source.empty())
        return true;
    SparseMatrix<Scalar> power(m.dim(), m.dim());
    power.setIdentity();
    for (int i = 0; i < k; ++i)
        power = SparseMatrix<Scalar>(m.Y() * power);
    return exact_rank(restrict_to(power, target, source)) ==
           static_cast<Eigen::Index>(source.size());
}

}  // namespace mproj

#endif  // MPROJ_LEFSCHETZ_HPP
