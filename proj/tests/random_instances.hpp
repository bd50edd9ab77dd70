#ifndef MTP_TESTS_RANDOM_INSTANCES_HPP
#define MTP_TESTS_RANDOM_INSTANCES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "mtp/nodes.hpp"
#include "mtp/polynomial.hpp"
#include "mtp/scalar.hpp"

// Seeded generators for property tests and the acceptance suite.
namespace mtp::testing {

class InstanceGenerator {
public:
    explicit InstanceGenerator(std::uint64_t seed)
        : rng_(seed)
    {
    }

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    /// p/q with |p| <= max_numerator, 1 <= q <= max_denominator.
    Rational rational(long max_numerator, long max_denominator)
    {
        return Rational(integer(-max_numerator, max_numerator), integer(1, max_denominator));
    }

    /// m distinct rationals in [lo, hi] with denominators up to max_denominator.
    std::vector<Rational> distinct_nodes(std::size_t m, long lo = -3, long hi = 3, long max_denominator = 20)
    {
        std::vector<Rational> nodes;
        while (nodes.size() < m) {
            const long q = integer(1, max_denominator);
            Rational candidate(integer(lo * q, hi * q), q);
            if (std::find(nodes.begin(), nodes.end(), candidate) == nodes.end())
                nodes.push_back(candidate);
        }
        return nodes;
    }

    JetTable<Rational> rational_jets(std::size_t m, unsigned k, long max_numerator = 100, long max_denominator = 100)
    {
        std::vector<std::vector<Rational>> rows(m);
        for (auto& row : rows)
            for (unsigned n = 0; n <= k; ++n)
                row.push_back(rational(max_numerator, max_denominator));
        return JetTable<Rational>(std::move(rows));
    }

    Polynomial<Rational> rational_polynomial(std::size_t degree, long max_numerator = 20, long max_denominator = 10)
    {
        std::vector<Rational> c;
        for (std::size_t i = 0; i <= degree; ++i)
            c.push_back(rational(max_numerator, max_denominator));
        return Polynomial<Rational>(std::move(c));
    }

    /// m nodes in [lo, hi], pairwise at least `gap` apart.
    std::vector<double> separated_nodes(std::size_t m, double lo, double hi, double gap)
    {
        for (;;) {
            std::vector<double> nodes;
            for (std::size_t i = 0; i < m; ++i)
                nodes.push_back(uniform(lo, hi));
            bool ok = true;
            for (std::size_t i = 0; i < m && ok; ++i)
                for (std::size_t j = i + 1; j < m && ok; ++j)
                    ok = std::abs(nodes[i] - nodes[j]) >= gap;
            if (ok)
                return nodes;
        }
    }

    JetTable<double> floating_jets(std::size_t m, unsigned k, double lo = -1, double hi = 1)
    {
        std::vector<std::vector<double>> rows(m);
        for (auto& row : rows)
            for (unsigned n = 0; n <= k; ++n)
                row.push_back(uniform(lo, hi));
        return JetTable<double>(std::move(rows));
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// Jets of a polynomial at the given nodes, computed exactly.
template <Scalar T>
JetTable<T> jets_of(const Polynomial<T>& p, const NodeSet<T>& nodes, unsigned k)
{
    std::vector<std::vector<T>> rows;
    for (const auto& a : nodes) {
        std::vector<T> row;
        for (unsigned n = 0; n <= k; ++n)
            row.push_back(nth_derivative_at(p, n, a));
        rows.push_back(std::move(row));
    }
    return JetTable<T>(std::move(rows));
}

} // namespace mtp::testing

#endif // MTP_TESTS_RANDOM_INSTANCES_HPP
