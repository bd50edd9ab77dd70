#ifndef MTP_IDENTITY_SUITE_HPP
#define MTP_IDENTITY_SUITE_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "mtp/combinatorics.hpp"

namespace mtp {

/// Search ranges for each identity family.
struct IdentitySuiteLimits {
    // d_term: every composition over 1..d_term_slots_max active slots with
    // total 0..min(d_term_total_max, k), for k in 0..d_term_k_max.
    unsigned d_term_slots_max = 3;
    unsigned d_term_k_max = 6;
    unsigned d_term_total_max = 6;
    // alternating_sum(n, k) == 0 for 1 <= n <= k <= alternating_k_max, n <= alternating_n_max.
    unsigned alternating_n_max = 30;
    unsigned alternating_k_max = 30;
    // t_term dual forms (0 <= n <= n_max, 0 <= k <= k_max, 0 <= q <= n+1) and
    // partial_sum_check (1 <= n <= min(n_max, k), k <= k_max, 0 <= p < n).
    unsigned binomial_n_max = 8;
    unsigned binomial_k_max = 12;

    /// The same (n, k, m) bounds for every family, as exposed by the CLI.
    static IdentitySuiteLimits uniform(unsigned n_max, unsigned k_max, unsigned m_max)
    {
        IdentitySuiteLimits limits;
        limits.d_term_slots_max = m_max > 0 ? m_max - 1 : 0;
        limits.d_term_k_max = k_max;
        limits.d_term_total_max = n_max;
        limits.alternating_n_max = n_max;
        limits.alternating_k_max = k_max;
        limits.binomial_n_max = n_max;
        limits.binomial_k_max = k_max;
        return limits;
    }
};

struct IdentityFamilyResult {
    std::string name;
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::vector<std::string> failure_samples; // first few failing cases
};

struct IdentitySuiteResult {
    std::vector<IdentityFamilyResult> families;

    std::size_t checks() const
    {
        std::size_t n = 0;
        for (const auto& f : families)
            n += f.checks;
        return n;
    }
    std::size_t failures() const
    {
        std::size_t n = 0;
        for (const auto& f : families)
            n += f.failures;
        return n;
    }
    bool passed() const { return failures() == 0; }
};

namespace detail {

    inline void record(IdentityFamilyResult& family, bool ok, const std::string& label)
    {
        ++family.checks;
        if (!ok) {
            ++family.failures;
            if (family.failure_samples.size() < 8)
                family.failure_samples.push_back(label);
        }
    }

} // namespace detail

inline IdentitySuiteResult run_identity_suite(const IdentitySuiteLimits& limits)
{
    using namespace combinatorics;
    IdentitySuiteResult result;

    IdentityFamilyResult d_terms;
    d_terms.name = "d_term";
    for (unsigned slots = 1; slots <= limits.d_term_slots_max; ++slots) {
        for (unsigned k = 0; k <= limits.d_term_k_max; ++k) {
            const unsigned total_max = std::min(limits.d_term_total_max, k);
            for (unsigned total = 0; total <= total_max; ++total) {
                for_each_composition(total, slots, [&](const std::vector<unsigned>& parts) {
                    const Integer expected = total == 0 ? 1 : 0;
                    detail::record(d_terms, d_term(k, Composition(parts)) == expected,
                                   "k=" + std::to_string(k) + " total=" + std::to_string(total)
                                       + " slots=" + std::to_string(slots));
                });
            }
        }
    }
    result.families.push_back(std::move(d_terms));

    IdentityFamilyResult alternating;
    alternating.name = "alternating_sum";
    for (unsigned k = 1; k <= limits.alternating_k_max; ++k)
        for (unsigned n = 1; n <= std::min(k, limits.alternating_n_max); ++n)
            detail::record(alternating, alternating_sum(n, k) == 0,
                           "n=" + std::to_string(n) + " k=" + std::to_string(k));
    result.families.push_back(std::move(alternating));

    IdentityFamilyResult dual_forms;
    dual_forms.name = "t_term";
    for (unsigned n = 0; n <= limits.binomial_n_max; ++n)
        for (unsigned k = 0; k <= limits.binomial_k_max; ++k)
            for (unsigned q = 0; q <= n + 1; ++q)
                detail::record(dual_forms, t_term(n, k, q) == Rational(t_term_unrearranged(n, k, q)),
                               "n=" + std::to_string(n) + " k=" + std::to_string(k) + " q=" + std::to_string(q));
    result.families.push_back(std::move(dual_forms));

    IdentityFamilyResult partial;
    partial.name = "partial_sum";
    for (unsigned k = 1; k <= limits.binomial_k_max; ++k)
        for (unsigned n = 1; n <= std::min(k, limits.binomial_n_max); ++n)
            for (unsigned p = 0; p < n; ++p)
                detail::record(partial, partial_sum_check(n, k, p),
                               "n=" + std::to_string(n) + " k=" + std::to_string(k) + " p=" + std::to_string(p));
    result.families.push_back(std::move(partial));

    return result;
}

} // namespace mtp

#endif // MTP_IDENTITY_SUITE_HPP
