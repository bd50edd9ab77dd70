#ifndef MTP_FUNCTIONS_HPP
#define MTP_FUNCTIONS_HPP

#include <cmath>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mtp/nodes.hpp"
#include "mtp/polynomial.hpp"
#include "mtp/scalar.hpp"

namespace mtp {

/// A named test function with closed-form derivatives of every order.
/// Polynomial entries also carry their exact rational coefficients and are
/// the only ones usable in exact mode.
class AnalyticFunction {
public:
    using Derivative = std::function<double(unsigned, double)>;

    AnalyticFunction(std::string name, Derivative derivative)
        : name_(std::move(name))
        , derivative_(std::move(derivative))
    {
    }

    AnalyticFunction(std::string name, Polynomial<Rational> exact)
        : name_(std::move(name))
        , exact_(std::move(exact))
    {
        std::vector<double> coefficients;
        for (const auto& c : exact_->coefficients())
            coefficients.push_back(c.convert_to<double>());
        Polynomial<double> floating(std::move(coefficients));
        derivative_ = [floating](unsigned n, double x) { return mtp::nth_derivative_at(floating, n, x); };
    }

    const std::string& name() const noexcept { return name_; }
    bool is_polynomial() const noexcept { return exact_.has_value(); }
    const std::optional<Polynomial<Rational>>& exact_polynomial() const noexcept { return exact_; }

    double value_at(double x) const { return derivative_(0, x); }
    double nth_derivative_at(unsigned n, double x) const { return derivative_(n, x); }

    Rational value_at(const Rational& x) const { return nth_derivative_at(0, x); }
    Rational nth_derivative_at(unsigned n, const Rational& x) const
    {
        if (!exact_)
            throw std::domain_error("'" + name_ + "' has no exact rational values");
        return mtp::nth_derivative_at(*exact_, n, x);
    }

private:
    std::string name_;
    Derivative derivative_;
    std::optional<Polynomial<Rational>> exact_;
};

namespace detail {

    // Numerators N_n of d^n/dx^n 1/(1+x^2) = N_n(x) / (1+x^2)^{n+1}:
    //   N_0 = 1,  N_{n+1} = (1+x^2) N_n' - 2(n+1) x N_n.
    inline Polynomial<Rational> runge_numerator_step(const Polynomial<Rational>& current, unsigned n)
    {
        const Polynomial<Rational> one_plus_x2{1, 0, 1};
        const Polynomial<Rational> x_term{0, Rational(-2 * static_cast<long>(n + 1))};
        return one_plus_x2 * derivative(current) + x_term * current;
    }

    class RungeDerivatives {
    public:
        static constexpr unsigned cached_orders = 33;

        RungeDerivatives()
        {
            Polynomial<Rational> current{1};
            for (unsigned n = 0; n < cached_orders; ++n) {
                numerators_.push_back(to_floating(current));
                current = runge_numerator_step(current, n);
            }
        }

        double operator()(unsigned n, double x) const
        {
            const double base = 1.0 + x * x;
            if (n < numerators_.size())
                return numerators_[n](x) / std::pow(base, static_cast<int>(n + 1));
            Polynomial<Rational> current{1};
            for (unsigned t = 0; t < n; ++t)
                current = runge_numerator_step(current, t);
            return to_floating(current)(x) / std::pow(base, static_cast<int>(n + 1));
        }

    private:
        static Polynomial<double> to_floating(const Polynomial<Rational>& p)
        {
            std::vector<double> c;
            for (const auto& v : p.coefficients())
                c.push_back(v.convert_to<double>());
            return Polynomial<double>(std::move(c));
        }

        std::vector<Polynomial<double>> numerators_;
    };

} // namespace detail

/// exp, sin, cos, runge = 1/(1+x^2), and a few fixed polynomials. The names
/// are the identifiers used by problem files.
inline std::vector<AnalyticFunction> catalog()
{
    std::vector<AnalyticFunction> out;
    out.reserve(7);
    out.emplace_back("exp", [](unsigned, double x) { return std::exp(x); });
    out.emplace_back("sin", [](unsigned n, double x) {
        switch (n % 4) {
        case 0: return std::sin(x);
        case 1: return std::cos(x);
        case 2: return -std::sin(x);
        default: return -std::cos(x);
        }
    });
    out.emplace_back("cos", [](unsigned n, double x) {
        switch (n % 4) {
        case 0: return std::cos(x);
        case 1: return -std::sin(x);
        case 2: return -std::cos(x);
        default: return std::sin(x);
        }
    });
    auto runge = std::make_shared<const detail::RungeDerivatives>();
    out.emplace_back("runge", [runge](unsigned n, double x) { return (*runge)(n, x); });
    out.emplace_back("cube", Polynomial<Rational>{0, 0, 0, 1});
    out.emplace_back("quadratic", Polynomial<Rational>{1, 0, 1});
    out.emplace_back("quintic", Polynomial<Rational>{Rational(1, 2), -2, 0, Rational(3, 4), 0, Rational(-1, 5)});
    return out;
}

inline std::optional<AnalyticFunction> find_function(std::string_view name)
{
    for (auto& f : catalog())
        if (f.name() == name)
            return f;
    return std::nullopt;
}

/// jets(i, n) = f^{(n)}(a_i). Exact mode needs a polynomial entry.
template <Scalar T>
JetTable<T> make_jets(const AnalyticFunction& f, const NodeSet<T>& nodes, unsigned k)
{
    if constexpr (is_exact_v<T>) {
        if (!f.is_polynomial())
            throw std::domain_error("'" + f.name() + "' is transcendental; exact jets need a polynomial");
    }
    std::vector<std::vector<T>> rows;
    for (const auto& a : nodes) {
        std::vector<T> row;
        for (unsigned n = 0; n <= k; ++n)
            row.push_back(f.nth_derivative_at(n, a));
        rows.push_back(std::move(row));
    }
    return JetTable<T>(std::move(rows));
}

} // namespace mtp

#endif // MTP_FUNCTIONS_HPP
