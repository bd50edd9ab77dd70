#ifndef MTP_COMMANDS_HPP
#define MTP_COMMANDS_HPP

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mtp/identity_suite.hpp"
#include "mtp/multipoint_taylor.hpp"
#include "mtp/oracles.hpp"
#include "mtp/problem.hpp"

// Batch front end behind the `mtp` executable. Every command writes CSV
// (header row, comma separated, LF) to `out`, diagnostics to `err`, and
// returns a process exit code.
namespace mtp::cli {

enum ExitCode : int {
    success = 0,
    verification_failure = 1,
    parse_failure = 2,
    separation_failure = 3,
    singular_system = 4,
};

inline constexpr double default_floating_tolerance = 1e-9;
inline constexpr double compare_relative_tolerance = 1e-10;

namespace detail {

    // Runs `body` into a buffer so a failing command never leaves partial CSV.
    inline int guarded(std::ostream& out, std::ostream& err, const std::function<int(std::ostream&)>& body)
    {
        std::ostringstream buffer;
        try {
            const int code = body(buffer);
            out << buffer.str();
            return code;
        } catch (const parse_error& e) {
            err << "parse error: " << e.what() << '\n';
            return parse_failure;
        } catch (const separation_error& e) {
            err << "separation error: " << e.what() << '\n';
            return separation_failure;
        } catch (const singular_system_error& e) {
            err << "singular system: " << e.what() << '\n';
            return singular_system;
        } catch (const std::exception& e) {
            err << "error: " << e.what() << '\n';
            return parse_failure;
        }
    }

    template <class Body>
    int with_mode(const ProblemFile& problem, Body&& body)
    {
        if (problem.mode == Mode::rational)
            return body(instantiate<Rational>(problem));
        return body(instantiate<double>(problem));
    }

    template <Scalar T>
    std::string csv(const T& v)
    {
        return to_string(v);
    }

} // namespace detail

/// Monomial coefficients, then a blank line, then the F-coefficient table.
inline int cmd_build(const ProblemFile& problem, std::ostream& out, std::ostream& err)
{
    return detail::guarded(out, err, [&](std::ostream& os) {
        return detail::with_mode(problem, [&]<Scalar T>(const TypedProblem<T>& typed) {
            const MtpModel<T> model = build_mtp(typed.nodes, typed.jets);
            const Polynomial<T> p = to_monomial(model);
            os << "index,coefficient\n";
            for (std::size_t d = 0; d < p.coefficients().size(); ++d)
                os << d << ',' << detail::csv(p.coefficients()[d]) << '\n';
            os << "\nnode,order,f_coefficient\n";
            for (std::size_t g = 0; g < model.nodes().size(); ++g)
                for (unsigned n = 0; n <= model.order(); ++n)
                    os << g << ',' << n << ',' << detail::csv(model.f_table()(g, n)) << '\n';
            return int(success);
        });
    });
}

/// One row per interpolation condition. Rational mode always uses tolerance 0.
inline int cmd_verify(const ProblemFile& problem, std::optional<double> tolerance, std::ostream& out,
                      std::ostream& err)
{
    return detail::guarded(out, err, [&](std::ostream& os) {
        return detail::with_mode(problem, [&]<Scalar T>(const TypedProblem<T>& typed) {
            T tol(0);
            if constexpr (is_exact_v<T>) {
                if (tolerance && *tolerance != 0)
                    err << "note: rational mode verifies exactly; --tolerance ignored\n";
            } else {
                tol = tolerance.value_or(default_floating_tolerance);
                if (tol < 0)
                    throw parse_error("tolerance must be non-negative");
            }
            const MtpModel<T> model = build_mtp(typed.nodes, typed.jets);
            // Inline jets next to a catalog function are checked against the
            // function's own derivatives.
            const JetTable<T> expected = typed.function && !problem.jets.empty()
                                             ? make_jets(*typed.function, typed.nodes, problem.k)
                                             : typed.jets;
            const VerificationReport<T> report = verify_conditions(model, expected, tol);
            os << "node,order,expected,actual,abs_residual\n";
            for (const auto& row : report.rows)
                os << row.node << ',' << row.order << ',' << detail::csv(row.expected) << ','
                   << detail::csv(row.actual) << ',' << detail::csv(row.abs_residual) << '\n';
            err << "max abs residual " << to_string(report.max_abs_residual) << " (tolerance " << to_string(tol)
                << "): " << (report.passed ? "pass" : "FAIL") << '\n';
            return int(report.passed ? success : verification_failure);
        });
    });
}

/// Largest pairwise deviation among three coefficient values: the exact
/// difference in rational mode, and in floating mode the difference divided
/// by `scale` (the largest coefficient magnitude of the three polynomials).
/// Coefficients that vanish in exact arithmetic come out as rounding noise,
/// so dividing by their own size would be meaningless.
template <Scalar T>
T coefficient_deviation(const T& a, const T& b, const T& c, const T& scale)
{
    const T spread = std::max({abs_value(T(a - b)), abs_value(T(a - c)), abs_value(T(b - c))});
    if constexpr (is_exact_v<T>)
        return spread;
    else
        return scale == 0 ? T(0) : spread / scale;
}

/// Explicit formula against the Vandermonde and Newton-Hermite oracles.
inline int cmd_compare(const ProblemFile& problem, std::ostream& out, std::ostream& err)
{
    return detail::guarded(out, err, [&](std::ostream& os) {
        return detail::with_mode(problem, [&]<Scalar T>(const TypedProblem<T>& typed) {
            const Polynomial<T> explicit_form = to_monomial(build_mtp(typed.nodes, typed.jets));
            const Polynomial<T> vandermonde = oracles::hermite_vandermonde_solve(typed.nodes, typed.jets);
            const Polynomial<T> newton = oracles::newton_hermite(typed.nodes, typed.jets);
            const std::size_t length = std::max({explicit_form.coefficients().size(),
                                                 vandermonde.coefficients().size(),
                                                 newton.coefficients().size()});
            T scale(0);
            for (const auto* p : {&explicit_form, &vandermonde, &newton})
                for (const T& c : p->coefficients())
                    scale = std::max(scale, abs_value(c));
            const T limit = is_exact_v<T> ? T(0) : T(compare_relative_tolerance);
            T worst(0);
            os << "index,explicit,vandermonde,newton,max_deviation\n";
            for (std::size_t d = 0; d < length; ++d) {
                const T deviation = coefficient_deviation(explicit_form[d], vandermonde[d], newton[d], scale);
                worst = std::max(worst, deviation);
                os << d << ',' << detail::csv(explicit_form[d]) << ',' << detail::csv(vandermonde[d]) << ','
                   << detail::csv(newton[d]) << ',' << detail::csv(deviation) << '\n';
            }
            const bool agree = worst <= limit;
            err << "max deviation " << to_string(worst) << ": " << (agree ? "agree" : "DISAGREE") << '\n';
            return int(agree ? success : verification_failure);
        });
    });
}

/// Interpolant against the catalog function on a uniform grid, optionally
/// alongside the single-point Taylor polynomial of the same degree
/// (mk + m - 1) centred at the first node.
inline int cmd_grid(const ProblemFile& problem, bool stp_compare, std::ostream& out, std::ostream& err)
{
    return detail::guarded(out, err, [&](std::ostream& os) {
        return detail::with_mode(problem, [&]<Scalar T>(const TypedProblem<T>& typed) {
            if (!typed.function)
                throw parse_error("grid needs a catalog 'function' to compare against");
            if (!typed.grid)
                throw parse_error("grid needs a 'grid' line");
            const AnalyticFunction& f = *typed.function;
            const MtpModel<T> model = build_mtp(typed.nodes, typed.jets);

            // Exact mode evaluates the monomial expansion, floating mode the
            // structured form.
            std::optional<Polynomial<T>> monomial;
            if constexpr (is_exact_v<T>)
                monomial = to_monomial(model);

            std::optional<Polynomial<T>> stp;
            if (stp_compare) {
                const T& centre = typed.nodes[0];
                std::vector<T> jets;
                for (std::size_t n = 0; n <= model.degree_bound(); ++n)
                    jets.push_back(f.nth_derivative_at(static_cast<unsigned>(n), centre));
                stp = taylor_polynomial<T>(centre, jets);
            }

            os << "x,mtp,f,abs_error" << (stp ? ",stp,stp_abs_error" : "") << '\n';
            for (const T& x : typed.grid->points()) {
                const T value = monomial ? (*monomial)(x) : eval_structured(model, x);
                const T truth = f.value_at(x);
                os << detail::csv(x) << ',' << detail::csv(value) << ',' << detail::csv(truth) << ','
                   << detail::csv(abs_value(T(value - truth)));
                if (stp) {
                    const T s = (*stp)(x);
                    os << ',' << detail::csv(s) << ',' << detail::csv(abs_value(T(s - truth)));
                }
                os << '\n';
            }
            return int(success);
        });
    });
}

/// Exhaustive checks of the integer identities behind the formula.
inline int cmd_identities(const IdentitySuiteLimits& limits, std::ostream& out, std::ostream& err)
{
    return detail::guarded(out, err, [&](std::ostream& os) {
        const IdentitySuiteResult result = run_identity_suite(limits);
        os << "family,checks,failures\n";
        for (const auto& family : result.families) {
            os << family.name << ',' << family.checks << ',' << family.failures << '\n';
            for (const auto& sample : family.failure_samples)
                err << family.name << " failed at " << sample << '\n';
        }
        os << "total," << result.checks() << ',' << result.failures() << '\n';
        return int(result.passed() ? success : verification_failure);
    });
}

struct Invocation {
    std::string command;
    std::optional<std::string> problem_path;
    std::optional<double> tolerance;
    bool stp_compare = false;
    std::optional<std::string> out_path;
    unsigned n_max = 6;
    unsigned k_max = 6;
    unsigned m_max = 4;
};

/// Reads the problem file (when the command needs one), dispatches, and
/// routes output to stdout or --out.
inline int run(const Invocation& call, std::ostream& out, std::ostream& err)
{
    std::ofstream file;
    if (call.out_path) {
        file.open(*call.out_path, std::ios::binary);
        if (!file) {
            err << "cannot open output file '" << *call.out_path << "'\n";
            return parse_failure;
        }
    }
    std::ostream& sink = call.out_path ? static_cast<std::ostream&>(file) : out;

    if (call.command == "identities") {
        if (call.n_max == 0 || call.k_max == 0 || call.m_max == 0) {
            err << "--n-max, --k-max and --m-max must be positive\n";
            return parse_failure;
        }
        return cmd_identities(IdentitySuiteLimits::uniform(call.n_max, call.k_max, call.m_max), sink, err);
    }

    if (!call.problem_path) {
        err << "'" << call.command << "' needs a problem file\n";
        return parse_failure;
    }
    std::ifstream in(*call.problem_path);
    if (!in) {
        err << "cannot read problem file '" << *call.problem_path << "'\n";
        return parse_failure;
    }
    ProblemFile problem;
    try {
        problem = parse_problem(in);
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << '\n';
        return parse_failure;
    }

    if (call.command == "build")
        return cmd_build(problem, sink, err);
    if (call.command == "verify")
        return cmd_verify(problem, call.tolerance, sink, err);
    if (call.command == "compare")
        return cmd_compare(problem, sink, err);
    if (call.command == "grid")
        return cmd_grid(problem, call.stp_compare, sink, err);
    err << "unknown command '" << call.command << "'\n";
    return parse_failure;
}

} // namespace mtp::cli

#endif // MTP_COMMANDS_HPP
