#ifndef MTP_MULTIPOINT_TAYLOR_HPP
#define MTP_MULTIPOINT_TAYLOR_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mtp/combinatorics.hpp"
#include "mtp/nodes.hpp"
#include "mtp/polynomial.hpp"
#include "mtp/scalar.hpp"

// Explicit multi-point Taylor (Hermite) interpolant.
//
// For m distinct nodes a_g and derivative data f^{(n)}(a_g), n = 0..k,
//
//   P(x) = sum_g  L_g(x)^{k+1}  sum_{n=0}^{k} (x - a_g)^n / n!  F[g][n]
//
// with L_g the Lagrange basis factor of node g and
//
//   F[g][n] = sum_{j_0+..+j_{m-1} = n} multinomial(n; j) f^{(j_g)}(a_g)
//             prod_{l != g} (k + j_l)!/k! (a_l - a_g)^{-j_l}.
//
// P has degree at most mk + m - 1 and matches all m(k+1) derivative values.
namespace mtp {

/// Precomputed (k+j)!/k! (a_l - a_g)^{-j} for one anchor node g, every
/// other node l and every j in 0..k.
template <Scalar T>
class RatioTable {
public:
    RatioTable(std::size_t anchor, unsigned order, std::vector<std::vector<T>> entries)
        : anchor_(anchor)
        , order_(order)
        , entries_(std::move(entries))
    {
    }

    std::size_t anchor() const noexcept { return anchor_; }
    unsigned order() const noexcept { return order_; }

    const T& operator()(std::size_t l, unsigned j) const
    {
        if (l == anchor_)
            throw std::out_of_range("ratio table has no entry for its anchor node");
        return entries_.at(l).at(j);
    }

private:
    std::size_t anchor_;
    unsigned order_;
    std::vector<std::vector<T>> entries_; // row `anchor_` is empty
};

namespace detail {

    // (k+j)!/k! / (a_l - a_g)^j; the power is accumulated by multiplication
    // and divided once.
    template <Scalar T>
    T ratio_factor(const NodeSet<T>& nodes, unsigned k, std::size_t g, std::size_t l, unsigned j)
    {
        const T diff = nodes[l] - nodes[g];
        T power(1);
        for (unsigned t = 0; t < j; ++t)
            power *= diff;
        return scalar_traits<T>::from_integer(combinatorics::falling_factorial_ratio(k, j)) / power;
    }

    template <Scalar T, class Factor>
    T f_coefficient_sum(std::size_t m, const JetTable<T>& jets, std::size_t g, unsigned n, Factor&& factor)
    {
        T sum(0);
        combinatorics::for_each_composition(n, static_cast<unsigned>(m), [&](const std::vector<unsigned>& j) {
            T term = scalar_traits<T>::from_integer(combinatorics::multinomial(n, combinatorics::Composition(j)));
            term *= jets(g, j[g]);
            for (std::size_t l = 0; l < m; ++l)
                if (l != g)
                    term *= factor(l, j[l]);
            sum += term;
        });
        return sum;
    }

    template <Scalar T>
    void check_f_indices(std::size_t m, unsigned k, std::size_t g, unsigned n)
    {
        if (g >= m)
            throw std::out_of_range("node index " + std::to_string(g) + " out of range for "
                                    + std::to_string(m) + " nodes");
        if (n > k)
            throw std::out_of_range("derivative order " + std::to_string(n) + " exceeds k = "
                                    + std::to_string(k));
    }

} // namespace detail

template <Scalar T>
RatioTable<T> precompute_ratio_table(const NodeSet<T>& nodes, unsigned k, std::size_t g)
{
    if (g >= nodes.size())
        throw std::out_of_range("anchor node index out of range");
    std::vector<std::vector<T>> entries(nodes.size());
    for (std::size_t l = 0; l < nodes.size(); ++l) {
        if (l == g)
            continue;
        entries[l].reserve(k + 1);
        for (unsigned j = 0; j <= k; ++j)
            entries[l].push_back(detail::ratio_factor(nodes, k, g, l, j));
    }
    return RatioTable<T>(g, k, std::move(entries));
}

/// F[g][n], computing every node-difference factor on the fly.
template <Scalar T>
T compute_f_coefficient(const NodeSet<T>& nodes, const JetTable<T>& jets, std::size_t g, unsigned n)
{
    require_consistent(nodes, jets);
    const unsigned k = jets.order();
    detail::check_f_indices<T>(nodes.size(), k, g, n);
    return detail::f_coefficient_sum(nodes.size(), jets, g, n, [&](std::size_t l, unsigned j) {
        return detail::ratio_factor(nodes, k, g, l, j);
    });
}

/// F[g][n], reading node-difference factors from a precomputed table.
template <Scalar T>
T compute_f_coefficient(const NodeSet<T>& nodes, const JetTable<T>& jets, std::size_t g, unsigned n,
                        const RatioTable<T>& ratios)
{
    require_consistent(nodes, jets);
    const unsigned k = jets.order();
    detail::check_f_indices<T>(nodes.size(), k, g, n);
    if (ratios.anchor() != g || ratios.order() != k)
        throw std::invalid_argument("ratio table was built for a different anchor or order");
    return detail::f_coefficient_sum(nodes.size(), jets, g, n,
                                     [&](std::size_t l, unsigned j) -> const T& { return ratios(l, j); });
}

/// m x (k+1) table of F coefficients, entry (g, n).
template <Scalar T>
class FCoefficientTable {
public:
    FCoefficientTable(std::size_t node_count, unsigned order)
        : order_(order)
        , entries_(node_count, std::vector<T>(order + 1, T(0)))
    {
    }

    std::size_t node_count() const noexcept { return entries_.size(); }
    unsigned order() const noexcept { return order_; }
    const T& operator()(std::size_t g, unsigned n) const { return entries_.at(g).at(n); }
    T& operator()(std::size_t g, unsigned n) { return entries_.at(g).at(n); }

private:
    unsigned order_;
    std::vector<std::vector<T>> entries_;
};

/// prod_{h != g} (x - a_h) / (a_g - a_h)
template <Scalar T>
Polynomial<T> lagrange_factor(const NodeSet<T>& nodes, std::size_t g)
{
    Polynomial<T> numerator = Polynomial<T>::constant(T(1));
    T denominator(1);
    for (std::size_t h = 0; h < nodes.size(); ++h) {
        if (h == g)
            continue;
        numerator = numerator * Polynomial<T>::linear_root(nodes[h]);
        denominator *= nodes[g] - nodes[h];
    }
    return scale(numerator, T(T(1) / denominator));
}

/// L_g(x)^{k+1} for every node, expanded in the monomial basis.
template <Scalar T>
std::vector<Polynomial<T>> precompute_basis_powers(const NodeSet<T>& nodes, unsigned k)
{
    std::vector<Polynomial<T>> powers;
    powers.reserve(nodes.size());
    for (std::size_t g = 0; g < nodes.size(); ++g)
        powers.push_back(pow(lagrange_factor(nodes, g), k + 1));
    return powers;
}

/// Structured interpolant: nodes, order, F coefficients and the reusable
/// precomputed factors. Immutable once built.
template <Scalar T>
class MtpModel {
public:
    const NodeSet<T>& nodes() const noexcept { return nodes_; }
    unsigned order() const noexcept { return order_; }
    const FCoefficientTable<T>& f_table() const noexcept { return f_table_; }
    const std::vector<Polynomial<T>>& basis_powers() const noexcept { return basis_powers_; }
    const std::vector<RatioTable<T>>& ratio_tables() const noexcept { return ratio_tables_; }

    /// mk + m - 1
    std::size_t degree_bound() const noexcept { return nodes_.size() * (order_ + 1) - 1; }

private:
    template <Scalar U>
    friend MtpModel<U> build_mtp(const NodeSet<U>&, const JetTable<U>&);

    MtpModel(NodeSet<T> nodes, unsigned order, FCoefficientTable<T> f_table,
             std::vector<Polynomial<T>> basis_powers, std::vector<RatioTable<T>> ratio_tables)
        : nodes_(std::move(nodes))
        , order_(order)
        , f_table_(std::move(f_table))
        , basis_powers_(std::move(basis_powers))
        , ratio_tables_(std::move(ratio_tables))
    {
    }

    NodeSet<T> nodes_;
    unsigned order_;
    FCoefficientTable<T> f_table_;
    std::vector<Polynomial<T>> basis_powers_;
    std::vector<RatioTable<T>> ratio_tables_;
};

template <Scalar T>
MtpModel<T> build_mtp(const NodeSet<T>& nodes, const JetTable<T>& jets)
{
    require_consistent(nodes, jets);
    const unsigned k = jets.order();
    const std::size_t m = nodes.size();

    std::vector<RatioTable<T>> ratios;
    ratios.reserve(m);
    for (std::size_t g = 0; g < m; ++g)
        ratios.push_back(precompute_ratio_table(nodes, k, g));

    // Each (g, n) cell is independent of every other.
    FCoefficientTable<T> f_table(m, k);
    for (std::size_t g = 0; g < m; ++g)
        for (unsigned n = 0; n <= k; ++n)
            f_table(g, n) = compute_f_coefficient(nodes, jets, g, n, ratios[g]);

    return MtpModel<T>(nodes, k, std::move(f_table), precompute_basis_powers(nodes, k), std::move(ratios));
}

/// Evaluates the structured form directly, without expanding to monomials.
template <Scalar T>
T eval_structured(const MtpModel<T>& model, const T& x)
{
    const auto& nodes = model.nodes();
    const unsigned k = model.order();
    T total(0);
    for (std::size_t g = 0; g < nodes.size(); ++g) {
        T lagrange(1);
        for (std::size_t h = 0; h < nodes.size(); ++h)
            if (h != g)
                lagrange *= (x - nodes[h]) / (nodes[g] - nodes[h]);
        T weight(1);
        for (unsigned t = 0; t <= k; ++t)
            weight *= lagrange;

        // sum_n (x - a_g)^n / n! F[g][n]
        const T offset = x - nodes[g];
        T taylor_term(1);
        T inner(0);
        for (unsigned n = 0; n <= k; ++n) {
            if (n > 0)
                taylor_term = taylor_term * offset / T(static_cast<long>(n));
            inner += taylor_term * model.f_table()(g, n);
        }
        total += weight * inner;
    }
    return total;
}

/// Full expansion in the monomial basis.
template <Scalar T>
Polynomial<T> to_monomial(const MtpModel<T>& model)
{
    const auto& nodes = model.nodes();
    const unsigned k = model.order();
    Polynomial<T> total;
    for (std::size_t g = 0; g < nodes.size(); ++g) {
        const Polynomial<T> shift = Polynomial<T>::linear_root(nodes[g]);
        Polynomial<T> shift_power = Polynomial<T>::constant(T(1));
        Polynomial<T> inner;
        T inverse_factorial(1);
        for (unsigned n = 0; n <= k; ++n) {
            if (n > 0) {
                shift_power = shift_power * shift;
                inverse_factorial /= T(static_cast<long>(n));
            }
            inner = inner + scale(shift_power, T(model.f_table()(g, n) * inverse_factorial));
        }
        total = total + model.basis_powers()[g] * inner;
    }
    return total;
}

template <Scalar T>
struct ConditionResidual {
    std::size_t node;
    unsigned order;
    T expected;
    T actual;
    T abs_residual;
    T rel_residual; // abs_residual / |expected|, or abs_residual when expected == 0
};

template <Scalar T>
struct VerificationReport {
    std::vector<ConditionResidual<T>> rows;
    T max_abs_residual{0};
    T tolerance{0};
    bool passed = true;
};

/// Checks P^{(n)}(a_i) == jets(i, n) for every node and order, differentiating
/// the monomial expansion. Exact mode requires tolerance 0.
template <Scalar T>
VerificationReport<T> verify_conditions(const MtpModel<T>& model, const JetTable<T>& jets, const T& tolerance)
{
    if (tolerance < 0)
        throw std::invalid_argument("tolerance must be non-negative");
    if constexpr (is_exact_v<T>) {
        if (tolerance != 0)
            throw std::invalid_argument("exact verification requires tolerance 0");
    }
    require_consistent(model.nodes(), jets);
    if (jets.order() != model.order())
        throw std::invalid_argument("jet table order differs from the model order");

    std::vector<Polynomial<T>> derivatives{to_monomial(model)};
    for (unsigned n = 1; n <= model.order(); ++n)
        derivatives.push_back(derivative(derivatives.back()));

    VerificationReport<T> report;
    report.tolerance = tolerance;
    for (std::size_t i = 0; i < model.nodes().size(); ++i) {
        for (unsigned n = 0; n <= model.order(); ++n) {
            ConditionResidual<T> row{i, n, jets(i, n), derivatives[n](model.nodes()[i]), T(0), T(0)};
            row.abs_residual = abs_value(T(row.actual - row.expected));
            row.rel_residual = row.expected == 0 ? row.abs_residual : T(row.abs_residual / abs_value(row.expected));
            if (row.abs_residual > report.max_abs_residual)
                report.max_abs_residual = row.abs_residual;
            if (!(row.abs_residual <= tolerance))
                report.passed = false;
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

/// sum_n (x - a)^n / n! f^{(n)}(a), expanded.
template <Scalar T>
Polynomial<T> taylor_polynomial(const T& a, std::span<const T> jets)
{
    const Polynomial<T> shift = Polynomial<T>::linear_root(a);
    Polynomial<T> power = Polynomial<T>::constant(T(1));
    Polynomial<T> sum;
    T factorial(1);
    for (std::size_t n = 0; n < jets.size(); ++n) {
        if (n > 0) {
            power = power * shift;
            factorial *= T(static_cast<long>(n));
        }
        sum = sum + scale(power, T(jets[n] / factorial));
    }
    return sum;
}

/// sum_g f(a_g) prod_{h != g} (x - a_h)/(a_g - a_h), expanded.
template <Scalar T>
Polynomial<T> lagrange_polynomial(const NodeSet<T>& nodes, std::span<const T> values)
{
    if (values.size() != nodes.size())
        throw std::invalid_argument("lagrange_polynomial: one value per node required");
    Polynomial<T> sum;
    for (std::size_t g = 0; g < nodes.size(); ++g) {
        Polynomial<T> term = Polynomial<T>::constant(values[g]);
        for (std::size_t h = 0; h < nodes.size(); ++h) {
            if (h == g)
                continue;
            term = term * Polynomial<T>(std::vector<T>{T(-nodes[h] / (nodes[g] - nodes[h])),
                                                       T(T(1) / (nodes[g] - nodes[h]))});
        }
        sum = sum + term;
    }
    return sum;
}

} // namespace mtp

#endif // MTP_MULTIPOINT_TAYLOR_HPP
