#include <cmath>

#include <gtest/gtest.h>

#include "mtp/functions.hpp"
#include "mtp/multipoint_taylor.hpp"
#include "mtp/oracles.hpp"
#include "random_instances.hpp"

namespace {

using namespace mtp;
using P = Polynomial<Rational>;
using mtp::testing::InstanceGenerator;

NodeSet<Rational> rational_nodes(std::initializer_list<long> values)
{
    std::vector<Rational> v;
    for (long x : values)
        v.emplace_back(x);
    return NodeSet<Rational>(v);
}

JetTable<Rational> rational_jets(std::initializer_list<std::initializer_list<long>> rows)
{
    std::vector<std::vector<Rational>> out;
    for (const auto& row : rows)
        out.emplace_back(row.begin(), row.end());
    return JetTable<Rational>(out);
}

double max_relative_gap(const Polynomial<double>& a, const Polynomial<double>& b)
{
    const std::size_t length = std::max(a.coefficients().size(), b.coefficients().size());
    double worst = 0;
    for (std::size_t d = 0; d < length; ++d) {
        const double scale = std::max(std::fabs(a[d]), std::fabs(b[d]));
        if (scale > 0)
            worst = std::max(worst, std::fabs(a[d] - b[d]) / scale);
    }
    return worst;
}

TEST(ConfluentVandermonde, RowLayout)
{
    const auto system = oracles::confluent_vandermonde_system(rational_nodes({2, 3}), rational_jets({{1, 2}, {3, 4}}));
    ASSERT_EQ(system.size(), 4u);
    // value row at 2: 1, 2, 4, 8; derivative row at 2: 0, 1, 4, 12
    EXPECT_EQ(system.matrix[0], (std::vector<Rational>{1, 2, 4, 8}));
    EXPECT_EQ(system.matrix[1], (std::vector<Rational>{0, 1, 4, 12}));
    EXPECT_EQ(system.matrix[3], (std::vector<Rational>{0, 1, 6, 27}));
    EXPECT_EQ(system.rhs, (std::vector<Rational>{1, 2, 3, 4}));
}

TEST(VandermondeSolve, Examples)
{
    EXPECT_EQ(oracles::hermite_vandermonde_solve(rational_nodes({0}), rational_jets({{7, -3}})), P({7, -3}));
    EXPECT_EQ(oracles::hermite_vandermonde_solve(rational_nodes({0, 1}), rational_jets({{0}, {1}})), P({0, 1}));
    EXPECT_EQ(oracles::hermite_vandermonde_solve(rational_nodes({0, 1}), rational_jets({{0, 0}, {1, 3}})),
              P({0, 0, 0, 1}));
}

TEST(NewtonHermite, Examples)
{
    EXPECT_EQ(oracles::newton_hermite(rational_nodes({0}), rational_jets({{1, 1, 1}})), P({1, 1, Rational(1, 2)}));
    EXPECT_EQ(oracles::newton_hermite(rational_nodes({0, 1, 2}), rational_jets({{1}, {2}, {5}})), P({1, 0, 1}));
    EXPECT_EQ(oracles::newton_hermite(rational_nodes({0, 1}), rational_jets({{0, 0}, {1, 3}})), P({0, 0, 0, 1}));
}

TEST(NewtonHermite, FloatingExpAgreesWithVandermonde)
{
    const NodeSet<double> nodes({0.0, 1.0});
    const auto jets = make_jets(*find_function("exp"), nodes, 1);
    const auto newton = oracles::newton_hermite(nodes, jets);
    const auto vandermonde = oracles::hermite_vandermonde_solve(nodes, jets);
    EXPECT_LE(max_relative_gap(newton, vandermonde), 1e-10);
}

TEST(VandermondeSolve, SingularSystemThrows)
{
    oracles::LinearSystem<Rational> exact{{{1, 2}, {2, 4}}, {1, 2}};
    EXPECT_THROW(oracles::solve(exact), singular_system_error);
    oracles::LinearSystem<double> floating{{{1, 2}, {2, 4}}, {1, 2}};
    EXPECT_THROW(oracles::solve(floating), singular_system_error);
}

TEST(VandermondeSolve, FloatingSolveMatchesExactOnDyadicSystem)
{
    oracles::LinearSystem<double> system{{{4, 1, 0}, {1, 4, 1}, {0, 1, 4}}, {5, 6, 5}};
    const auto x = oracles::solve(system);
    for (double v : x)
        EXPECT_DOUBLE_EQ(v, 1.0);
}

TEST(OracleProperty, TripleAgreementExact)
{
    InstanceGenerator gen(301);
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t m = static_cast<std::size_t>(gen.integer(1, 4));
        const unsigned k = static_cast<unsigned>(gen.integer(0, 4));
        const NodeSet<Rational> nodes(gen.distinct_nodes(m));
        const auto jets = gen.rational_jets(m, k);
        const P explicit_form = to_monomial(build_mtp(nodes, jets));
        ASSERT_EQ(explicit_form, oracles::hermite_vandermonde_solve(nodes, jets)) << "m=" << m << " k=" << k;
        ASSERT_EQ(explicit_form, oracles::newton_hermite(nodes, jets)) << "m=" << m << " k=" << k;
    }
}

TEST(OracleProperty, VandermondeResidualExact)
{
    InstanceGenerator gen(302);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t m = static_cast<std::size_t>(gen.integer(1, 4));
        const unsigned k = static_cast<unsigned>(gen.integer(0, 3));
        const NodeSet<Rational> nodes(gen.distinct_nodes(m));
        const auto system = oracles::confluent_vandermonde_system(nodes, gen.rational_jets(m, k));
        ASSERT_EQ(oracles::apply(system, oracles::solve(system)), system.rhs);
    }
}

TEST(OracleProperty, VandermondeResidualFloating)
{
    InstanceGenerator gen(303);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t m = static_cast<std::size_t>(gen.integer(1, 3));
        const unsigned k = static_cast<unsigned>(gen.integer(0, 3));
        const NodeSet<double> nodes(gen.separated_nodes(m, -2, 2, 0.5));
        const auto system = oracles::confluent_vandermonde_system(nodes, gen.floating_jets(m, k));
        const auto x = oracles::solve(system);
        const auto back = oracles::apply(system, x);
        for (std::size_t r = 0; r < system.size(); ++r) {
            // relative to the size of the terms that cancel in row r
            double scale = std::fabs(system.rhs[r]);
            for (std::size_t c = 0; c < system.size(); ++c)
                scale = std::max(scale, std::fabs(system.matrix[r][c] * x[c]));
            ASSERT_LE(std::fabs(back[r] - system.rhs[r]), 1e-10 * scale) << "trial " << trial << " row " << r;
        }
    }
}

TEST(OracleProperty, FloatingTripleAgreement)
{
    InstanceGenerator gen(304);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t m = static_cast<std::size_t>(gen.integer(1, 3));
        const unsigned k = static_cast<unsigned>(gen.integer(0, 3));
        const NodeSet<double> nodes(gen.separated_nodes(m, -2, 2, 0.5));
        const auto jets = gen.floating_jets(m, k);
        const auto explicit_form = to_monomial(build_mtp(nodes, jets));
        const auto vandermonde = oracles::hermite_vandermonde_solve(nodes, jets);
        const auto newton = oracles::newton_hermite(nodes, jets);
        ASSERT_LE(max_relative_gap(explicit_form, vandermonde), 1e-10) << "trial " << trial;
        ASSERT_LE(max_relative_gap(explicit_form, newton), 1e-10) << "trial " << trial;
        ASSERT_LE(max_relative_gap(vandermonde, newton), 1e-10) << "trial " << trial;
    }
}

TEST(OracleProperty, NewtonWithoutDerivativesIsLagrange)
{
    InstanceGenerator gen(305);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t m = static_cast<std::size_t>(gen.integer(1, 6));
        const NodeSet<Rational> nodes(gen.distinct_nodes(m));
        const auto jets = gen.rational_jets(m, 0);
        std::vector<Rational> values;
        for (std::size_t i = 0; i < m; ++i)
            values.push_back(jets(i, 0));
        ASSERT_EQ(oracles::newton_hermite(nodes, jets), lagrange_polynomial(nodes, std::span<const Rational>(values)));
    }
}

} // namespace
