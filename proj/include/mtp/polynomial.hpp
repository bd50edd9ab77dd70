#ifndef MTP_POLYNOMIAL_HPP
#define MTP_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mtp/scalar.hpp"

namespace mtp {

/// Dense polynomial in the monomial basis, constant term first.
///
/// Values are immutable. Trailing zero coefficients are always stripped, so
/// the zero polynomial has no coefficients and no degree (`degree()` returns
/// std::nullopt, standing in for minus infinity).
///
/// In floating mode `trimmed()` can additionally drop trailing coefficients
/// whose magnitude is at or below a threshold. The default threshold is zero:
/// nothing is silently discarded.
template <Scalar T>
class Polynomial {
public:
    using value_type = T;

    Polynomial() = default;

    explicit Polynomial(std::vector<T> coefficients)
        : coefficients_(std::move(coefficients))
    {
        strip(T(0));
    }

    Polynomial(std::initializer_list<T> coefficients)
        : Polynomial(std::vector<T>(coefficients))
    {
    }

    static Polynomial constant(const T& c) { return Polynomial(std::vector<T>{c}); }

    /// x - a
    static Polynomial linear_root(const T& a) { return Polynomial(std::vector<T>{T(-a), T(1)}); }

    const std::vector<T>& coefficients() const noexcept { return coefficients_; }

    std::optional<std::size_t> degree() const noexcept
    {
        if (coefficients_.empty())
            return std::nullopt;
        return coefficients_.size() - 1;
    }

    bool is_zero() const noexcept { return coefficients_.empty(); }

    /// Coefficient of x^i, zero past the degree.
    T operator[](std::size_t i) const { return i < coefficients_.size() ? coefficients_[i] : T(0); }

    /// Drops trailing coefficients with |c| <= threshold. Exact mode only
    /// accepts a zero threshold.
    Polynomial trimmed(const T& threshold) const
    {
        if constexpr (is_exact_v<T>) {
            if (threshold != 0)
                throw std::invalid_argument("trim threshold must be zero in exact mode");
        }
        Polynomial p = *this;
        p.strip(threshold);
        return p;
    }

    /// Horner evaluation.
    T operator()(const T& x) const
    {
        T acc(0);
        for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    friend Polynomial operator+(const Polynomial& p, const Polynomial& q)
    {
        std::vector<T> c(std::max(p.coefficients_.size(), q.coefficients_.size()), T(0));
        for (std::size_t i = 0; i < p.coefficients_.size(); ++i)
            c[i] += p.coefficients_[i];
        for (std::size_t i = 0; i < q.coefficients_.size(); ++i)
            c[i] += q.coefficients_[i];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator-(const Polynomial& p)
    {
        std::vector<T> c = p.coefficients_;
        for (auto& v : c)
            v = -v;
        return Polynomial(std::move(c));
    }

    friend Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

    friend Polynomial operator*(const Polynomial& p, const Polynomial& q)
    {
        if (p.is_zero() || q.is_zero())
            return Polynomial();
        std::vector<T> c(p.coefficients_.size() + q.coefficients_.size() - 1, T(0));
        for (std::size_t i = 0; i < p.coefficients_.size(); ++i)
            for (std::size_t j = 0; j < q.coefficients_.size(); ++j)
                c[i + j] += p.coefficients_[i] * q.coefficients_[j];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const Polynomial& p, const T& s) { return scale(p, s); }
    friend Polynomial operator*(const T& s, const Polynomial& p) { return scale(p, s); }

    friend Polynomial scale(const Polynomial& p, const T& s)
    {
        std::vector<T> c = p.coefficients_;
        for (auto& v : c)
            v *= s;
        return Polynomial(std::move(c));
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p)
    {
        os << '[';
        for (std::size_t i = 0; i < p.coefficients_.size(); ++i)
            os << (i ? ", " : "") << to_string(p.coefficients_[i]);
        return os << ']';
    }

private:
    void strip(const T& threshold)
    {
        while (!coefficients_.empty() && abs_value(coefficients_.back()) <= threshold)
            coefficients_.pop_back();
    }

    std::vector<T> coefficients_;
};

template <Scalar T>
T eval(const Polynomial<T>& p, const T& x)
{
    return p(x);
}

template <Scalar T>
Polynomial<T> derivative(const Polynomial<T>& p)
{
    const auto& c = p.coefficients();
    if (c.size() <= 1)
        return Polynomial<T>();
    std::vector<T> d(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i)
        d[i - 1] = c[i] * T(static_cast<long>(i));
    return Polynomial<T>(std::move(d));
}

/// p^{(n)}(x)
template <Scalar T>
T nth_derivative_at(const Polynomial<T>& p, unsigned n, const T& x)
{
    Polynomial<T> d = p;
    for (unsigned i = 0; i < n && !d.is_zero(); ++i)
        d = derivative(d);
    return d(x);
}

template <Scalar T>
Polynomial<T> pow(Polynomial<T> base, unsigned e)
{
    Polynomial<T> result = Polynomial<T>::constant(T(1));
    while (e > 0) {
        if (e & 1u)
            result = result * base;
        e >>= 1;
        if (e > 0)
            base = base * base;
    }
    return result;
}

} // namespace mtp

#endif // MTP_POLYNOMIAL_HPP
