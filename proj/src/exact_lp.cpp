#include "ge/exact_lp.hpp"

#include <stdexcept>

namespace ge {

std::optional<RationalVector> find_feasible_point(const RationalMatrix& a, const RationalVector& b)
{
    using Eigen::Index;
    const Index m = a.rows();
    const Index n = a.cols();
    if (b.size() != m)
        throw std::invalid_argument("find_feasible_point: right-hand side has the wrong length");

    // Tableau columns: n structural, m artificial, 1 right-hand side.
    // Row m holds the reduced costs of  min sum(artificials).
    const Index rhs = n + m;
    RationalMatrix t = RationalMatrix::Zero(m + 1, n + m + 1);
    for (Index i = 0; i < m; ++i) {
        const bool flip = b(i) < 0;
        for (Index j = 0; j < n; ++j)
            t(i, j) = flip ? Rational(-a(i, j)) : a(i, j);
        t(i, rhs) = flip ? Rational(-b(i)) : b(i);
        t(i, n + i) = 1;
    }
    for (Index j = 0; j < n; ++j) {
        Rational s = 0;
        for (Index i = 0; i < m; ++i)
            s += t(i, j);
        t(m, j) = -s;
    }
    {
        Rational s = 0;
        for (Index i = 0; i < m; ++i)
            s += t(i, rhs);
        t(m, rhs) = -s;
    }
    std::vector<Index> basis(static_cast<std::size_t>(m));
    for (Index i = 0; i < m; ++i)
        basis[static_cast<std::size_t>(i)] = n + i;

    for (;;) {
        // Bland: lowest-index column with negative reduced cost enters.
        Index enter = -1;
        for (Index j = 0; j < n + m; ++j)
            if (t(m, j) < 0) {
                enter = j;
                break;
            }
        if (enter < 0)
            break;

        // Minimum ratio; ties go to the lowest basic variable index.
        Index leave = -1;
        Rational best;
        for (Index i = 0; i < m; ++i) {
            if (t(i, enter) <= 0)
                continue;
            const Rational ratio = t(i, rhs) / t(i, enter);
            if (leave < 0 || ratio < best ||
                (ratio == best && basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0)
            throw std::logic_error("find_feasible_point: phase-one objective unbounded");

        const Rational inv = Rational(1) / t(leave, enter);
        for (Index c = 0; c <= rhs; ++c)
            t(leave, c) *= inv;
        for (Index r = 0; r <= m; ++r) {
            if (r == leave || t(r, enter) == 0)
                continue;
            const Rational f = t(r, enter);
            for (Index c = 0; c <= rhs; ++c)
                t(r, c) -= f * t(leave, c);
        }
        basis[static_cast<std::size_t>(leave)] = enter;
    }

    if (t(m, rhs) != 0)
        return std::nullopt;
    RationalVector y = RationalVector::Zero(n);
    for (Index i = 0; i < m; ++i)
        if (basis[static_cast<std::size_t>(i)] < n)
            y(basis[static_cast<std::size_t>(i)]) = t(i, rhs);
    return y;
}

}  // namespace ge
