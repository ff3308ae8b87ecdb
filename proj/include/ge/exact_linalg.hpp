#ifndef GE_EXACT_LINALG_HPP
#define GE_EXACT_LINALG_HPP

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace ge {

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
using Rational = boost::multiprecision::mpq_rational;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = DenseMatrix<Rational>;
using RationalVector = DenseVector<Rational>;

/// "num/den", or "num" for integers.
inline std::string to_string(const Rational& q)
{
    return q.str();
}

/// Reduced row echelon form for exact scalar types (no pivot tolerance).
template <typename Scalar>
struct RowEchelon
{
    DenseMatrix<Scalar> reduced;
    std::vector<Eigen::Index> pivot_cols;  ///< pivot column of row r
    Eigen::Index rank() const { return static_cast<Eigen::Index>(pivot_cols.size()); }
};

template <typename Scalar>
RowEchelon<Scalar> reduced_row_echelon(DenseMatrix<Scalar> m)
{
    using Eigen::Index;
    RowEchelon<Scalar> out;
    Index row = 0;
    for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Index pivot = -1;
        for (Index r = row; r < m.rows(); ++r)
            if (m(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        if (pivot != row)
            m.row(pivot).swap(m.row(row));
        const Scalar inv = Scalar(1) / m(row, col);
        for (Index c = col; c < m.cols(); ++c)
            m(row, c) *= inv;
        for (Index r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0)
                continue;
            const Scalar f = m(r, col);
            for (Index c = col; c < m.cols(); ++c)
                m(r, c) -= f * m(row, c);
        }
        out.pivot_cols.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

template <typename Scalar>
Eigen::Index exact_rank(const DenseMatrix<Scalar>& m)
{
    return reduced_row_echelon<Scalar>(m).rank();
}

/// Unique solution of the square system A x = b, or nothing if A is singular.
template <typename Scalar>
std::optional<DenseVector<Scalar>> solve_exact(const DenseMatrix<Scalar>& a, const DenseVector<Scalar>& b)
{
    using Eigen::Index;
    const Index n = a.rows();
    if (a.cols() != n || b.size() != n)
        return std::nullopt;
    if (n == 0)
        return DenseVector<Scalar>(0);
    DenseMatrix<Scalar> aug(n, n + 1);
    aug.leftCols(n) = a;
    aug.col(n) = b;
    auto ech = reduced_row_echelon<Scalar>(std::move(aug));
    if (ech.rank() != n || ech.pivot_cols.back() != n - 1)
        return std::nullopt;
    return DenseVector<Scalar>(ech.reduced.col(n));
}

/// Incrementally maintained set of linearly independent rows.
template <typename Scalar>
class IndependentRows
{
public:
    explicit IndependentRows(Eigen::Index width) : m_width(width) {}

    /// Adds `row` if it is independent of the rows held so far.
    bool try_add(DenseVector<Scalar> row)
    {
        for (std::size_t r = 0; r < m_rows.size(); ++r) {
            const Eigen::Index p = m_pivots[r];
            if (row(p) != 0) {
                const Scalar f = row(p);
                row -= f * m_rows[r];
            }
        }
        Eigen::Index p = -1;
        for (Eigen::Index c = 0; c < m_width; ++c)
            if (row(c) != 0) {
                p = c;
                break;
            }
        if (p < 0)
            return false;
        row /= Scalar(row(p));
        m_rows.push_back(std::move(row));
        m_pivots.push_back(p);
        return true;
    }

    /// Removes the most recently added row. Stored rows are only reduced
    /// against earlier ones, so this restores the previous state exactly.
    void pop()
    {
        m_rows.pop_back();
        m_pivots.pop_back();
    }

    std::size_t size() const { return m_rows.size(); }

private:
    Eigen::Index m_width;
    std::vector<DenseVector<Scalar>> m_rows;
    std::vector<Eigen::Index> m_pivots;
};

}  // namespace ge

#endif  // GE_EXACT_LINALG_HPP
