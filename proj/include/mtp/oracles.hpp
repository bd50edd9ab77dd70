#ifndef MTP_ORACLES_HPP
#define MTP_ORACLES_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "mtp/nodes.hpp"
#include "mtp/polynomial.hpp"
#include "mtp/scalar.hpp"

// Reference constructions of the same Hermite interpolant that share nothing
// with the explicit formula except polynomial arithmetic. Uniqueness of the
// interpolant means all routes must agree.
namespace mtp::oracles {

template <Scalar T>
struct LinearSystem {
    std::vector<std::vector<T>> matrix;
    std::vector<T> rhs;

    std::size_t size() const noexcept { return rhs.size(); }
};

/// One row per condition p^{(n)}(a_i) = f^{(n)}(a_i), ordered node-major.
/// Column d holds d!/(d-n)! a_i^{d-n}.
template <Scalar T>
LinearSystem<T> confluent_vandermonde_system(const NodeSet<T>& nodes, const JetTable<T>& jets)
{
    require_consistent(nodes, jets);
    const unsigned k = jets.order();
    const std::size_t size = nodes.size() * (k + 1);
    LinearSystem<T> system;
    system.matrix.assign(size, std::vector<T>(size, T(0)));
    system.rhs.reserve(size);
    std::size_t row = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (unsigned n = 0; n <= k; ++n, ++row) {
            for (std::size_t d = n; d < size; ++d) {
                T falling(1);
                for (std::size_t t = 0; t < n; ++t)
                    falling *= T(static_cast<long>(d - t));
                T power(1);
                for (std::size_t t = n; t < d; ++t)
                    power *= nodes[i];
                system.matrix[row][d] = falling * power;
            }
            system.rhs.push_back(jets(i, n));
        }
    }
    return system;
}

namespace detail {

    // Clears denominators row by row, then runs Bareiss fraction-free
    // elimination on the integer augmented matrix and back-substitutes.
    inline std::vector<Rational> solve_exact(const LinearSystem<Rational>& system)
    {
        using boost::multiprecision::denominator;
        using boost::multiprecision::numerator;
        const std::size_t n = system.size();

        std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n + 1));
        for (std::size_t r = 0; r < n; ++r) {
            Integer lcm = denominator(system.rhs[r]);
            for (const auto& v : system.matrix[r]) {
                const Integer& d = denominator(v);
                lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
            }
            for (std::size_t c = 0; c < n; ++c)
                a[r][c] = numerator(system.matrix[r][c]) * (lcm / denominator(system.matrix[r][c]));
            a[r][n] = numerator(system.rhs[r]) * (lcm / denominator(system.rhs[r]));
        }

        Integer previous = 1;
        for (std::size_t p = 0; p < n; ++p) {
            if (a[p][p] == 0) {
                std::size_t swap_row = p + 1;
                while (swap_row < n && a[swap_row][p] == 0)
                    ++swap_row;
                if (swap_row == n)
                    throw singular_system_error("confluent Vandermonde system is singular");
                std::swap(a[p], a[swap_row]);
            }
            for (std::size_t r = p + 1; r < n; ++r) {
                for (std::size_t c = p + 1; c <= n; ++c)
                    a[r][c] = (a[r][c] * a[p][p] - a[r][p] * a[p][c]) / previous;
                a[r][p] = 0;
            }
            previous = a[p][p];
        }

        std::vector<Rational> x(n);
        for (std::size_t r = n; r-- > 0;) {
            Rational acc(a[r][n]);
            for (std::size_t c = r + 1; c < n; ++c)
                acc -= Rational(a[r][c]) * x[c];
            x[r] = acc / Rational(a[r][r]);
        }
        return x;
    }

    // Row-pivoted LU of a square matrix, kept for repeated solves.
    struct FloatingLu {
        std::vector<std::vector<double>> lu;
        std::vector<std::size_t> perm;

        explicit FloatingLu(std::vector<std::vector<double>> a) : lu(std::move(a)), perm(lu.size())
        {
            const std::size_t n = lu.size();
            for (std::size_t i = 0; i < n; ++i)
                perm[i] = i;
            for (std::size_t p = 0; p < n; ++p) {
                std::size_t pivot = p;
                for (std::size_t r = p + 1; r < n; ++r)
                    if (std::fabs(lu[r][p]) > std::fabs(lu[pivot][p]))
                        pivot = r;
                if (lu[pivot][p] == 0.0)
                    throw singular_system_error("confluent Vandermonde system is numerically singular");
                std::swap(lu[p], lu[pivot]);
                std::swap(perm[p], perm[pivot]);
                for (std::size_t r = p + 1; r < n; ++r) {
                    const double factor = lu[r][p] / lu[p][p];
                    lu[r][p] = factor;
                    for (std::size_t c = p + 1; c < n; ++c)
                        lu[r][c] -= factor * lu[p][c];
                }
            }
        }

        std::vector<double> solve(const std::vector<double>& b) const
        {
            const std::size_t n = lu.size();
            std::vector<double> y(n);
            for (std::size_t r = 0; r < n; ++r) {
                double acc = b[perm[r]];
                for (std::size_t c = 0; c < r; ++c)
                    acc -= lu[r][c] * y[c];
                y[r] = acc;
            }
            for (std::size_t r = n; r-- > 0;) {
                double acc = y[r];
                for (std::size_t c = r + 1; c < n; ++c)
                    acc -= lu[r][c] * y[c];
                y[r] = acc / lu[r][r];
            }
            return y;
        }
    };

    // Exact image of a double system; every double is a dyadic rational.
    inline LinearSystem<Rational> exact_image(const LinearSystem<double>& system)
    {
        LinearSystem<Rational> out;
        for (const auto& row : system.matrix)
            out.matrix.emplace_back(row.begin(), row.end());
        out.rhs.assign(system.rhs.begin(), system.rhs.end());
        return out;
    }

    // Partial pivoting followed by iterative refinement against `reference`,
    // whose residuals are formed exactly. The reference may be the unrounded
    // system the floating one approximates, in which case the refinement
    // converges to its solution rounded to double.
    inline std::vector<double> solve_floating(const LinearSystem<double>& system,
                                              const LinearSystem<Rational>& reference,
                                              unsigned refinement_steps = 6)
    {
        const std::size_t n = system.size();
        const FloatingLu factors(system.matrix);
        std::vector<double> x = factors.solve(system.rhs);
        for (unsigned step = 0; step < refinement_steps; ++step) {
            std::vector<double> residual(n);
            bool zero = true;
            for (std::size_t r = 0; r < n; ++r) {
                Rational acc = reference.rhs[r];
                for (std::size_t c = 0; c < n; ++c)
                    acc -= reference.matrix[r][c] * Rational(x[c]);
                residual[r] = acc.convert_to<double>();
                zero = zero && residual[r] == 0.0;
            }
            if (zero)
                break;
            const std::vector<double> correction = factors.solve(residual);
            bool moved = false;
            for (std::size_t c = 0; c < n; ++c) {
                const double next = x[c] + correction[c];
                moved = moved || next != x[c];
                x[c] = next;
            }
            if (!moved)
                break;
        }
        return x;
    }

    inline std::vector<double> solve_floating(const LinearSystem<double>& system)
    {
        return solve_floating(system, exact_image(system));
    }

} // namespace detail

template <Scalar T>
std::vector<T> solve(const LinearSystem<T>& system)
{
    if constexpr (is_exact_v<T>)
        return detail::solve_exact(system);
    else
        return detail::solve_floating(system);
}

/// matrix * x
template <Scalar T>
std::vector<T> apply(const LinearSystem<T>& system, const std::vector<T>& x)
{
    std::vector<T> out(system.size(), T(0));
    for (std::size_t r = 0; r < system.size(); ++r)
        for (std::size_t c = 0; c < x.size() && c < system.size(); ++c)
            out[r] += system.matrix[r][c] * x[c];
    return out;
}

/// In floating mode the refinement residuals use the system built exactly
/// from the given (double) nodes and jets.
template <Scalar T>
Polynomial<T> hermite_vandermonde_solve(const NodeSet<T>& nodes, const JetTable<T>& jets)
{
    if constexpr (is_exact_v<T>) {
        return Polynomial<T>(solve(confluent_vandermonde_system(nodes, jets)));
    } else {
        std::vector<std::vector<Rational>> rows;
        for (const auto& row : jets.rows())
            rows.emplace_back(row.begin(), row.end());
        const NodeSet<Rational> exact_nodes(std::vector<Rational>(nodes.values().begin(), nodes.values().end()));
        return Polynomial<T>(detail::solve_floating(confluent_vandermonde_system(nodes, jets),
                                                    confluent_vandermonde_system(exact_nodes, JetTable<Rational>(rows))));
    }
}

/// Newton form over the node sequence a_0 (k+1 times), a_1 (k+1 times), ...
/// A divided difference over r+1 copies of one node is f^{(r)}(a)/r!.
template <Scalar T>
Polynomial<T> newton_hermite(const NodeSet<T>& nodes, const JetTable<T>& jets)
{
    require_consistent(nodes, jets);
    const unsigned k = jets.order();
    const std::size_t size = nodes.size() * (k + 1);
    auto owner = [k](std::size_t position) { return position / (k + 1); };

    // column[t] holds f[z_t, ..., z_{t+r}] after pass r.
    std::vector<T> column(size);
    for (std::size_t t = 0; t < size; ++t)
        column[t] = jets(owner(t), 0);
    std::vector<T> leading{column[0]};

    T factorial(1);
    for (std::size_t r = 1; r < size; ++r) {
        if (r <= k)
            factorial *= T(static_cast<long>(r));
        for (std::size_t t = 0; t + r < size; ++t) {
            const std::size_t first = owner(t);
            const std::size_t last = owner(t + r);
            if (first == last)
                column[t] = jets(first, static_cast<unsigned>(r)) / factorial;
            else
                column[t] = (column[t + 1] - column[t]) / (nodes[last] - nodes[first]);
        }
        leading.push_back(column[0]);
    }

    // Nested (Horner-like) expansion of sum_r leading[r] prod_{t<r} (x - z_t).
    Polynomial<T> result = Polynomial<T>::constant(leading.back());
    for (std::size_t r = size - 1; r-- > 0;)
        result = result * Polynomial<T>::linear_root(nodes[owner(r)]) + Polynomial<T>::constant(leading[r]);
    return result;
}

} // namespace mtp::oracles

#endif // MTP_ORACLES_HPP
