#pragma once

// Exact linear algebra over Q and Z on Eigen dense containers.
//
// Every routine is templated on the scalar type and only uses field (or, for
// the Smith form, Euclidean ring) operations, so it is exact for Rational and
// Integer. Vectors that form a set of generators are stored as the COLUMNS of
// a matrix.

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include "radrank/errors.hpp"

namespace radrank {

namespace mp = boost::multiprecision;

using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RationalVector = Vector<Rational>;
using RationalMatrix = Matrix<Rational>;
using IntegerVector = Vector<Integer>;
using IntegerMatrix = Matrix<Integer>;

/// Lower bound on one variable; nullopt means the variable is free.
template <typename Scalar>
using LowerBound = std::optional<Scalar>;

// "a/b" with b > 0 in lowest terms, or "a" when b = 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
/// Accepts "a", "-a", "a/b" with b != 0; the result is normalized.
/// Throws FormatError on anything else.
Rational parse_rational(std::string_view text);

namespace detail {

template <typename Scalar>
void pivot(Matrix<Scalar>& tableau, Eigen::Index row, Eigen::Index col)
{
    const Scalar p = tableau(row, col);
    tableau.row(row) /= p;
    for (Eigen::Index i = 0; i < tableau.rows(); ++i) {
        if (i == row || tableau(i, col) == 0) continue;
        const Scalar f = tableau(i, col);
        tableau.row(i) -= f * tableau.row(row);
    }
}

// Reduces m in place to row echelon form; returns the rank.
template <typename Scalar>
Eigen::Index row_echelon(Matrix<Scalar>& m)
{
    Eigen::Index rank = 0;
    for (Eigen::Index c = 0; c < m.cols() && rank < m.rows(); ++c) {
        Eigen::Index p = rank;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        m.row(p).swap(m.row(rank));
        for (Eigen::Index i = rank + 1; i < m.rows(); ++i) {
            if (m(i, c) == 0) continue;
            const Scalar f = m(i, c) / m(rank, c);
            m.row(i) -= f * m.row(rank);
        }
        ++rank;
    }
    return rank;
}

}  // namespace detail

/// Decides whether A x = b has a solution with x_j >= lower[j] for every
/// bounded j. Returns a witness or nullopt (definitively infeasible).
///
/// Phase-one simplex with Bland's rule on an exact tableau; free variables
/// are split into a difference of two nonnegative ones.
template <typename DerivedA, typename DerivedB>
std::optional<Vector<typename DerivedA::Scalar>> lp_feasible(
    const Eigen::MatrixBase<DerivedA>& A, const Eigen::MatrixBase<DerivedB>& b,
    std::span<const LowerBound<typename DerivedA::Scalar>> lower)
{
    using Scalar = typename DerivedA::Scalar;
    using Eigen::Index;
    const Index rows = A.rows();
    const Index cols = A.cols();
    if (b.size() != rows)
        throw ShapeError("lp_feasible: right-hand side has " + std::to_string(b.size()) +
                         " entries, matrix has " + std::to_string(rows) + " rows");
    if (static_cast<Index>(lower.size()) != cols)
        throw ShapeError("lp_feasible: " + std::to_string(lower.size()) + " bounds for " +
                         std::to_string(cols) + " columns");

    std::vector<Index> pos_col(cols);
    std::vector<Index> neg_col(cols, -1);
    Index n = 0;
    for (Index j = 0; j < cols; ++j) {
        pos_col[j] = n++;
        if (!lower[j]) neg_col[j] = n++;
    }

    Vector<Scalar> rhs = b;
    for (Index j = 0; j < cols; ++j)
        if (lower[j] && *lower[j] != 0) rhs -= A.col(j) * *lower[j];

    // Columns [0, n) structural, [n, n + rows) artificial, last = right-hand side.
    // Row `rows` holds the reduced costs of the phase-one objective.
    const Index last = n + rows;
    Matrix<Scalar> t = Matrix<Scalar>::Zero(rows + 1, last + 1);
    for (Index i = 0; i < rows; ++i) {
        const Scalar sign = rhs(i) < 0 ? Scalar(-1) : Scalar(1);
        for (Index j = 0; j < cols; ++j) {
            t(i, pos_col[j]) = sign * A(i, j);
            if (neg_col[j] >= 0) t(i, neg_col[j]) = -sign * A(i, j);
        }
        t(i, n + i) = 1;
        t(i, last) = sign * rhs(i);
    }
    for (Index j = 0; j < n; ++j) t(rows, j) = -t.col(j).head(rows).sum();
    t(rows, last) = -t.col(last).head(rows).sum();

    std::vector<Index> basis(rows);
    for (Index i = 0; i < rows; ++i) basis[i] = n + i;

    for (;;) {
        Index enter = -1;
        for (Index j = 0; j < n; ++j) {
            if (t(rows, j) < 0) {
                enter = j;
                break;
            }
        }
        if (enter < 0) break;
        Index leave = -1;
        Scalar best;
        for (Index i = 0; i < rows; ++i) {
            if (t(i, enter) <= 0) continue;
            Scalar ratio = t(i, last) / t(i, enter);
            if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = std::move(ratio);
            }
        }
        // The phase-one objective is bounded below by zero.
        if (leave < 0) break;
        detail::pivot(t, leave, enter);
        basis[leave] = enter;
    }

    if (t(rows, last) != 0) return std::nullopt;

    Vector<Scalar> y = Vector<Scalar>::Zero(n);
    for (Index i = 0; i < rows; ++i)
        if (basis[i] < n) y(basis[i]) = t(i, last);

    Vector<Scalar> x(cols);
    for (Index j = 0; j < cols; ++j) {
        x(j) = lower[j] ? *lower[j] + y(pos_col[j]) : Scalar(y(pos_col[j]) - y(neg_col[j]));
    }
    return x;
}

template <typename DerivedA, typename DerivedB>
std::optional<Vector<typename DerivedA::Scalar>> lp_feasible(
    const Eigen::MatrixBase<DerivedA>& A, const Eigen::MatrixBase<DerivedB>& b,
    const std::vector<LowerBound<typename DerivedA::Scalar>>& lower)
{
    return lp_feasible(A, b, std::span<const LowerBound<typename DerivedA::Scalar>>(lower));
}

/// Membership of v in the positive cone of the columns of gens. On success
/// returns coefficients lambda >= 0 with gens * lambda = v. The empty
/// combination represents the zero vector.
template <typename DerivedV, typename DerivedG>
std::optional<Vector<typename DerivedG::Scalar>> cone_member(const Eigen::MatrixBase<DerivedV>& v,
                                                             const Eigen::MatrixBase<DerivedG>& gens)
{
    using Scalar = typename DerivedG::Scalar;
    if (gens.rows() != v.size())
        throw ShapeError("cone_member: vector of dimension " + std::to_string(v.size()) +
                         ", generators of dimension " + std::to_string(gens.rows()));
    const std::vector<LowerBound<Scalar>> bounds(gens.cols(), Scalar(0));
    return lp_feasible(gens, v, bounds);
}

/// Finds lambda with every lambda_i >= 1 and gens * lambda = 0, i.e. a strictly
/// positive linear relation among all columns.
template <typename DerivedG>
std::optional<Vector<typename DerivedG::Scalar>> strict_zero_combination(const Eigen::MatrixBase<DerivedG>& gens)
{
    using Scalar = typename DerivedG::Scalar;
    if (gens.cols() == 0) throw ArgumentError("strict_zero_combination: no generators");
    const std::vector<LowerBound<Scalar>> bounds(gens.cols(), Scalar(1));
    return lp_feasible(gens, Vector<Scalar>::Zero(gens.rows()), bounds);
}

/// Dimension of the span of the columns.
template <typename Derived>
Eigen::Index linear_rank(const Eigen::MatrixBase<Derived>& vectors)
{
    Matrix<typename Derived::Scalar> work = vectors;
    return detail::row_echelon(work);
}

/// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... , d_i >= 0.
template <typename Scalar>
struct SmithForm {
    Matrix<Scalar> U;
    Matrix<Scalar> D;
    Matrix<Scalar> V;

    Eigen::Index rank() const
    {
        Eigen::Index r = 0;
        for (Eigen::Index i = 0; i < std::min(D.rows(), D.cols()); ++i)
            if (D(i, i) != 0) ++r;
        return r;
    }
};

template <typename Derived>
SmithForm<typename Derived::Scalar> smith_normal_form(const Eigen::MatrixBase<Derived>& M)
{
    using Scalar = typename Derived::Scalar;
    using Eigen::Index;
    const Index m = M.rows();
    const Index n = M.cols();
    SmithForm<Scalar> f{Matrix<Scalar>::Identity(m, m), M, Matrix<Scalar>::Identity(n, n)};
    auto& D = f.D;

    auto add_row = [&](Index dst, Index src, const Scalar& k) {
        D.row(dst) += k * D.row(src);
        f.U.row(dst) += k * f.U.row(src);
    };
    auto add_col = [&](Index dst, Index src, const Scalar& k) {
        D.col(dst) += k * D.col(src);
        f.V.col(dst) += k * f.V.col(src);
    };

    for (Index t = 0; t < std::min(m, n); ++t) {
        for (;;) {
            Index pr = -1;
            Index pc = -1;
            for (Index i = t; i < m; ++i)
                for (Index j = t; j < n; ++j)
                    if (D(i, j) != 0 && (pr < 0 || abs(D(i, j)) < abs(D(pr, pc)))) {
                        pr = i;
                        pc = j;
                    }
            if (pr < 0) return f;
            D.row(pr).swap(D.row(t));
            f.U.row(pr).swap(f.U.row(t));
            D.col(pc).swap(D.col(t));
            f.V.col(pc).swap(f.V.col(t));

            bool clean = true;
            for (Index i = t + 1; i < m; ++i) {
                if (D(i, t) == 0) continue;
                add_row(i, t, Scalar(-(D(i, t) / D(t, t))));
                if (D(i, t) != 0) clean = false;
            }
            for (Index j = t + 1; j < n; ++j) {
                if (D(t, j) == 0) continue;
                add_col(j, t, Scalar(-(D(t, j) / D(t, t))));
                if (D(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            Index bad = -1;
            for (Index i = t + 1; i < m && bad < 0; ++i)
                for (Index j = t + 1; j < n; ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            add_row(t, bad, Scalar(1));
        }
        if (D(t, t) < 0) {
            D.row(t) *= Scalar(-1);
            f.U.row(t) *= Scalar(-1);
        }
    }
    return f;
}

/// Exact determinant by Gaussian elimination; Integer inputs are promoted to Rational.
template <typename Derived>
Rational determinant(const Eigen::MatrixBase<Derived>& square)
{
    if (square.rows() != square.cols()) throw ShapeError("determinant: matrix is not square");
    RationalMatrix m = square.template cast<Rational>();
    Rational det = 1;
    const Eigen::Index n = m.rows();
    for (Eigen::Index c = 0; c < n; ++c) {
        Eigen::Index p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) return Rational(0);
        if (p != c) {
            m.row(p).swap(m.row(c));
            det = -det;
        }
        det *= m(c, c);
        for (Eigen::Index i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            const Rational f = m(i, c) / m(c, c);
            m.row(i) -= f * m.row(c);
        }
    }
    return det;
}

}  // namespace radrank
