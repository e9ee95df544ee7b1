#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <optional>
#include <utility>
#include <vector>

#include "strathom/errors.hpp"

namespace strathom {

/// Exact scalar used throughout the library. All homological computations
/// are carried out over arbitrary-precision integers; overflow cannot occur.
using Integer = boost::multiprecision::cpp_int;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = DenseMatrix<Integer>;
using IntVector = DenseVector<Integer>;

using Index = Eigen::Index;

namespace detail {

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
    return x < 0 ? Scalar(-x) : x;
}

/// Quotient q minimizing |a - q*b| (ties toward the truncating quotient).
template <typename Scalar>
Scalar nearest_quotient(const Scalar& a, const Scalar& b) {
    Scalar q = a / b;  // truncating
    Scalar r = a - q * b;
    if (Scalar(2) * abs_value(r) > abs_value(b)) q += (r < 0) == (b < 0) ? Scalar(1) : Scalar(-1);
    return q;
}

}  // namespace detail

/// Result of a Smith decomposition: left * m * right = diagonal, with both
/// transforms unimodular and the diagonal entries nonnegative, each dividing
/// the next.
template <typename Scalar>
struct SmithDecomposition {
    DenseMatrix<Scalar> left;      // m x m
    DenseMatrix<Scalar> right;     // n x n
    std::vector<Scalar> diagonal;  // min(m, n) entries, d1 | d2 | ...

    Index rank() const {
        Index r = 0;
        for (const Scalar& d : diagonal)
            if (d != 0) ++r;
        return r;
    }

    /// Rank of the matrix over the prime field F_q, or over Q when q = 0.
    /// The transforms are invertible over every field, so the rank is the
    /// number of diagonal entries that stay nonzero mod q.
    Index rank_over(long long q) const {
        Index r = 0;
        for (const Scalar& d : diagonal) {
            if (q == 0 ? d != 0 : d % Scalar(q) != 0) ++r;
        }
        return r;
    }
};

/// Smith normal form by row/column reduction with the pivot chosen of
/// minimal nonzero absolute value, which keeps intermediate entries small.
template <typename Derived>
SmithDecomposition<typename Derived::Scalar> smith_normal_form(const Eigen::MatrixBase<Derived>& input) {
    using Scalar = typename Derived::Scalar;
    using Mat = DenseMatrix<Scalar>;
    Mat a = input;
    const Index m = a.rows(), n = a.cols();
    Mat u = Mat::Identity(m, m);
    Mat v = Mat::Identity(n, n);

    const Index steps = std::min(m, n);
    Index t = 0;
    for (; t < steps; ++t) {
        // Locate the minimal-magnitude nonzero entry of the trailing block.
        Index pi = -1, pj = -1;
        Scalar best = 0;
        for (Index j = t; j < n; ++j) {
            for (Index i = t; i < m; ++i) {
                const Scalar& x = a(i, j);
                if (x == 0) continue;
                Scalar ax = detail::abs_value(x);
                if (pi < 0 || ax < best) {
                    pi = i;
                    pj = j;
                    best = ax;
                }
            }
        }
        if (pi < 0) break;  // trailing block is zero
        if (pi != t) {
            a.row(pi).swap(a.row(t));
            u.row(pi).swap(u.row(t));
        }
        if (pj != t) {
            a.col(pj).swap(a.col(t));
            v.col(pj).swap(v.col(t));
        }

        for (;;) {
            bool clean = true;
            for (Index i = t + 1; i < m; ++i) {
                if (a(i, t) == 0) continue;
                Scalar q = detail::nearest_quotient(a(i, t), a(t, t));
                if (q != 0) {
                    a.row(i) -= q * a.row(t);
                    u.row(i) -= q * u.row(t);
                }
                if (a(i, t) != 0) {  // remainder became the smaller pivot
                    a.row(i).swap(a.row(t));
                    u.row(i).swap(u.row(t));
                    clean = false;
                }
            }
            for (Index j = t + 1; j < n; ++j) {
                if (a(t, j) == 0) continue;
                Scalar q = detail::nearest_quotient(a(t, j), a(t, t));
                if (q != 0) {
                    a.col(j) -= q * a.col(t);
                    v.col(j) -= q * v.col(t);
                }
                if (a(t, j) != 0) {
                    a.col(j).swap(a.col(t));
                    v.col(j).swap(v.col(t));
                    clean = false;
                }
            }
            if (!clean) continue;

            // Pivot must divide the whole trailing block; if not, fold the
            // offending row in and keep reducing.
            bool divisible = true;
            for (Index i = t + 1; i < m && divisible; ++i) {
                for (Index j = t + 1; j < n; ++j) {
                    if (a(i, j) % a(t, t) != 0) {
                        a.row(t) += a.row(i);
                        u.row(t) += u.row(i);
                        divisible = false;
                        break;
                    }
                }
            }
            if (divisible) break;
        }

        if (a(t, t) < 0) {
            a.row(t) = -a.row(t);
            u.row(t) = -u.row(t);
        }
    }

    SmithDecomposition<Scalar> out;
    out.left = std::move(u);
    out.right = std::move(v);
    out.diagonal.resize(static_cast<std::size_t>(steps));
    for (Index i = 0; i < steps; ++i) out.diagonal[static_cast<std::size_t>(i)] = a(i, i);
    return out;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
    return smith_normal_form(m).rank();
}

/// Exact determinant by fraction-free (Bareiss) elimination.
template <typename Derived>
typename Derived::Scalar determinant_exact(const Eigen::MatrixBase<Derived>& input) {
    using Scalar = typename Derived::Scalar;
    DenseMatrix<Scalar> a = input;
    const Index n = a.rows();
    if (n != a.cols()) throw ValidationError("determinant of a non-square matrix");
    if (n == 0) return Scalar(1);
    Scalar prev = 1;
    int sign = 1;
    for (Index k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            Index swap_row = -1;
            for (Index i = k + 1; i < n; ++i)
                if (a(i, k) != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return Scalar(0);
            a.row(k).swap(a.row(swap_row));
            sign = -sign;
        }
        for (Index i = k + 1; i < n; ++i) {
            for (Index j = k + 1; j < n; ++j) {
                a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : Scalar(-a(n - 1, n - 1));
}

/// Column-style Hermite normal form: the result spans the same column
/// lattice, is in column echelon form with positive pivots, entries of a
/// pivot row in earlier columns reduced into [0, pivot), and zero columns
/// dropped. This is the canonical representative of a column lattice.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> hermite_normal_form(const Eigen::MatrixBase<Derived>& input) {
    using Scalar = typename Derived::Scalar;
    DenseMatrix<Scalar> h = input;
    const Index m = h.rows(), n = h.cols();
    Index r = 0;  // next pivot column
    for (Index i = 0; i < m && r < n; ++i) {
        // gcd-reduce row i across columns r..n-1
        for (;;) {
            Index p = -1;
            Scalar best = 0;
            for (Index j = r; j < n; ++j) {
                if (h(i, j) == 0) continue;
                Scalar aj = detail::abs_value(h(i, j));
                if (p < 0 || aj < best) {
                    p = j;
                    best = aj;
                }
            }
            if (p < 0) break;  // row is zero from column r on
            if (p != r) h.col(p).swap(h.col(r));
            bool clean = true;
            for (Index j = r + 1; j < n; ++j) {
                if (h(i, j) == 0) continue;
                Scalar q = detail::nearest_quotient(h(i, j), h(i, r));
                if (q != 0) h.col(j) -= q * h.col(r);
                if (h(i, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h(i, r) == 0) continue;  // no pivot in this row
        if (h(i, r) < 0) h.col(r) = -h.col(r);
        // reduce earlier pivot columns against this one
        for (Index j = 0; j < r; ++j) {
            Scalar q = h(i, j) / h(i, r);
            Scalar rem = h(i, j) - q * h(i, r);
            if (rem < 0) q -= 1;
            if (q != 0) h.col(j) -= q * h.col(r);
        }
        ++r;
    }
    // Columns r..n-1 are zero; also rotate pivots in front (they already are).
    DenseMatrix<Scalar> out = h.leftCols(r);
    return out;
}

/// Basis of the integer kernel of m, canonicalized by Hermite normal form.
/// The columns are primitive and span a saturated subgroup (the kernel of an
/// integer matrix is always a direct summand).
template <typename Derived>
DenseMatrix<typename Derived::Scalar> kernel_basis(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    auto snf = smith_normal_form(m);
    const Index r = snf.rank();
    const Index n = m.cols();
    DenseMatrix<Scalar> raw = snf.right.rightCols(n - r);
    return hermite_normal_form(raw);
}

/// Solves a * x = b exactly over the integers (b may have several columns).
/// Returns std::nullopt when no integer solution exists. When the columns of
/// a are linearly independent the solution is unique.
template <typename Scalar>
std::optional<DenseMatrix<Scalar>> solve_integer(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b,
                                                 const SmithDecomposition<Scalar>* precomputed = nullptr) {
    SmithDecomposition<Scalar> local;
    const SmithDecomposition<Scalar>* snf = precomputed;
    if (snf == nullptr) {
        local = smith_normal_form(a);
        snf = &local;
    }
    if (a.rows() != b.rows()) throw ValidationError("solve_integer: shape mismatch");
    const Index n = a.cols();
    DenseMatrix<Scalar> y = snf->left * b;
    DenseMatrix<Scalar> z = DenseMatrix<Scalar>::Zero(n, b.cols());
    for (Index c = 0; c < b.cols(); ++c) {
        for (Index i = 0; i < y.rows(); ++i) {
            if (i < static_cast<Index>(snf->diagonal.size()) && snf->diagonal[static_cast<std::size_t>(i)] != 0) {
                const Scalar& d = snf->diagonal[static_cast<std::size_t>(i)];
                if (y(i, c) % d != 0) return std::nullopt;
                if (i < n) z(i, c) = y(i, c) / d;
            } else if (y(i, c) != 0) {
                return std::nullopt;
            }
        }
    }
    return snf->right * z;
}

/// Column lattices. A lattice is presented by any integer matrix whose
/// columns generate it; the canonical form is the Hermite normal form.
template <typename Scalar>
DenseMatrix<Scalar> lattice_sum(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
    if (a.rows() != b.rows()) throw ValidationError("lattice_sum: ambient dimensions differ");
    DenseMatrix<Scalar> joined(a.rows(), a.cols() + b.cols());
    joined << a, b;
    return hermite_normal_form(joined);
}

template <typename Scalar>
bool lattice_contains(const DenseMatrix<Scalar>& generators, const DenseMatrix<Scalar>& vectors) {
    if (vectors.cols() == 0) return true;
    return solve_integer<Scalar>(generators, vectors).has_value();
}

template <typename Scalar>
bool lattice_equal(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
    return hermite_normal_form(a) == hermite_normal_form(b);
}

/// Generators of { x : a * x lies in the lattice spanned by l }.
template <typename Scalar>
DenseMatrix<Scalar> preimage_lattice(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& l) {
    if (a.rows() != l.rows()) throw ValidationError("preimage_lattice: ambient dimensions differ");
    DenseMatrix<Scalar> joined(a.rows(), a.cols() + l.cols());
    joined << a, l;
    DenseMatrix<Scalar> k = kernel_basis(joined);
    DenseMatrix<Scalar> top = k.topRows(a.cols());
    return hermite_normal_form(top);
}

}  // namespace strathom
