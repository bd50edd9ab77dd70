#ifndef MTP_COMBINATORICS_HPP
#define MTP_COMBINATORICS_HPP

#include <cstddef>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "mtp/scalar.hpp"

// Exact integer kernels behind the explicit multi-point Taylor formula, and
// standalone checkers for the binomial identities that make it interpolate.
// Nothing in here touches floating point.
namespace mtp::combinatorics {

/// A weak composition: an ordered tuple of non-negative parts with a fixed sum.
class Composition {
public:
    explicit Composition(std::vector<unsigned> parts)
        : parts_(std::move(parts))
        , total_(std::accumulate(parts_.begin(), parts_.end(), 0u))
    {
        if (parts_.empty())
            throw std::invalid_argument("composition needs at least one part");
    }

    const std::vector<unsigned>& parts() const noexcept { return parts_; }
    unsigned total() const noexcept { return total_; }
    std::size_t size() const noexcept { return parts_.size(); }
    unsigned operator[](std::size_t i) const { return parts_[i]; }

    friend bool operator==(const Composition&, const Composition&) = default;

private:
    std::vector<unsigned> parts_;
    unsigned total_;
};

/// C(n, r); zero outside 0 <= r <= n.
inline Integer binomial(long n, long r)
{
    if (n < 0 || r < 0 || r > n)
        return 0;
    if (r > n - r)
        r = n - r;
    Integer result = 1;
    for (long i = 1; i <= r; ++i) {
        result *= n - r + i;
        result /= i;
    }
    return result;
}

inline Integer factorial(unsigned n)
{
    Integer result = 1;
    for (unsigned i = 2; i <= n; ++i)
        result *= i;
    return result;
}

/// n! / (j_1! ... j_m!). The parts must sum to n.
inline Integer multinomial(unsigned n, const Composition& parts)
{
    if (parts.total() != n)
        throw std::invalid_argument("multinomial: parts sum to " + std::to_string(parts.total())
                                    + ", expected " + std::to_string(n));
    Integer denominator = 1;
    for (unsigned j : parts.parts())
        denominator *= factorial(j);
    return factorial(n) / denominator;
}

/// Calls `visit(parts)` for every weak composition of `n` into `m` parts, in
/// lexicographic order with the first part descending: (n,0,..), (n-1,1,..), ...
/// The span handed to `visit` is only valid during the call.
template <class Visitor>
void for_each_composition(unsigned n, unsigned m, Visitor&& visit)
{
    if (m == 0)
        throw std::invalid_argument("compositions need at least one part");
    std::vector<unsigned> parts(m, 0);
    std::function<void(unsigned, unsigned)> fill = [&](unsigned slot, unsigned remaining) {
        if (slot + 1 == m) {
            parts[slot] = remaining;
            visit(static_cast<const std::vector<unsigned>&>(parts));
            return;
        }
        for (unsigned first = remaining + 1; first-- > 0;) {
            parts[slot] = first;
            fill(slot + 1, remaining - first);
        }
    };
    fill(0, n);
}

inline std::vector<Composition> compositions(unsigned n, unsigned m)
{
    std::vector<Composition> out;
    for_each_composition(n, m, [&](const std::vector<unsigned>& parts) { out.emplace_back(parts); });
    return out;
}

/// (k+j)!/k! as the product (k+1)(k+2)...(k+j).
inline Integer falling_factorial_ratio(unsigned k, unsigned j)
{
    Integer result = 1;
    for (unsigned t = 1; t <= j; ++t)
        result *= k + t;
    return result;
}

/// Sum over every splitting j_v + k_v = s_v of
///   prod_v (-1)^{k_v} C(k + j_v, j_v) C(k + 1, k_v).
/// `s` covers only the active slots; the caller has already dropped the
/// anchor index. Equals 1 for the all-zero composition and 0 whenever
/// 1 <= total(s) <= k.
inline Integer d_term(unsigned k, const Composition& s)
{
    const std::size_t slots = s.size();
    std::vector<unsigned> split(slots, 0); // k_v for each slot; j_v = s_v - k_v
    Integer sum = 0;
    for (;;) {
        Integer term = 1;
        for (std::size_t v = 0; v < slots && term != 0; ++v) {
            const unsigned kv = split[v];
            const unsigned jv = s[v] - kv;
            term *= binomial(k + jv, jv) * binomial(k + 1, kv);
            if (kv % 2 == 1)
                term = -term;
        }
        sum += term;

        std::size_t v = 0;
        while (v < slots && split[v] == s[v])
            split[v++] = 0;
        if (v == slots)
            break;
        ++split[v];
    }
    return sum;
}

/// sum_{q=0}^{n+1} (-1)^q C(k+n+1-q, n+1-q) C(k+1, q), computed without
/// assuming it vanishes.
inline Integer alternating_sum(unsigned n, unsigned k)
{
    Integer sum = 0;
    for (long q = 0; q <= static_cast<long>(n) + 1; ++q) {
        Integer term = binomial(k + n + 1 - q, n + 1 - q) * binomial(k + 1, q);
        sum += (q % 2 == 0) ? term : Integer(-term);
    }
    return sum;
}

/// The q-th summand of `alternating_sum` in its original form.
inline Integer t_term_unrearranged(unsigned n, unsigned k, unsigned q)
{
    if (q > n + 1)
        throw std::out_of_range("t_term: q must lie in [0, n+1]");
    Integer term = binomial(k + n + 1 - q, n + 1 - q) * binomial(k + 1, q);
    return q % 2 == 0 ? term : Integer(-term);
}

/// The same summand rearranged as (k+1)/(n+1) (-1)^q C(k+n+1-q, n) C(n+1, q).
inline Rational t_term(unsigned n, unsigned k, unsigned q)
{
    if (q > n + 1)
        throw std::out_of_range("t_term: q must lie in [0, n+1]");
    Rational term(binomial(k + n + 1 - q, n) * binomial(n + 1, q));
    term *= Rational(k + 1, n + 1);
    return q % 2 == 0 ? term : Rational(-term);
}

/// Closed form of the partial sum S_p = sum_{q<=p+1} T_n(q):
///   S_p == -(p+2)(k+n-p) / ((n+1)(k+1)) * T_n(p+2),
/// checked in exact rationals. Valid for 1 <= n <= k and 0 <= p <= n-1; p = n
/// would need T_n(n+2), which is undefined.
inline bool partial_sum_check(unsigned n, unsigned k, unsigned p)
{
    if (n < 1 || n > k)
        throw std::invalid_argument("partial_sum_check: requires 1 <= n <= k");
    if (p >= n)
        throw std::invalid_argument("partial_sum_check: requires p <= n - 1");
    Rational partial = 0;
    for (unsigned q = 0; q <= p + 1; ++q)
        partial += t_term(n, k, q);
    Rational closed = -Rational(Integer(p + 2) * (k + n - p), Integer(n + 1) * (k + 1)) * t_term(n, k, p + 2);
    return partial == closed;
}

} // namespace mtp::combinatorics

#endif // MTP_COMBINATORICS_HPP
