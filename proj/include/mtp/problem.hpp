#ifndef MTP_PROBLEM_HPP
#define MTP_PROBLEM_HPP

#include <charconv>
#include <cstddef>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "mtp/functions.hpp"
#include "mtp/nodes.hpp"
#include "mtp/scalar.hpp"

// Problem file format, version 1. Line oriented; '#' starts a comment.
//
//   mtp-problem v1
//   mode = rational            # or floating
//   nodes = 0, 1/2, 1
//   k = 1
//   jets = 1, 0                # one `jets` line per node, in node order ...
//   jets = 2, 3
//   jets = 0, 1/3
//   function = exp             # ... or a catalog function instead of jets
//
// With both present, the jets are the interpolation data and the function
// is the reference that `verify` and `grid` measure against.
//   grid = 0, 1, 11            # optional: start, stop, point count
//   separation = 1e-10         # optional floating-mode separation guard
//
// Numbers are kept as text until the mode is known, so rational problems
// never pass through binary floating point.
namespace mtp {

enum class Mode { rational, floating };

struct ProblemFile {
    Mode mode = Mode::rational;
    std::vector<std::string> nodes;
    unsigned k = 0;
    std::vector<std::vector<std::string>> jets;
    std::optional<std::string> function;
    struct GridSpec {
        std::string start;
        std::string stop;
        std::size_t count = 0;
    };
    std::optional<GridSpec> grid;
    std::optional<std::string> separation;
};

inline constexpr std::string_view problem_header = "mtp-problem v1";

namespace detail {

    inline std::string_view trim(std::string_view s)
    {
        const auto first = s.find_first_not_of(" \t\r");
        if (first == std::string_view::npos)
            return {};
        const auto last = s.find_last_not_of(" \t\r");
        return s.substr(first, last - first + 1);
    }

    inline std::vector<std::string> split_list(std::string_view s)
    {
        std::vector<std::string> out;
        std::size_t start = 0;
        for (;;) {
            const auto comma = s.find(',', start);
            std::string_view item = trim(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start));
            if (item.empty())
                throw parse_error("empty item in list '" + std::string(s) + "'");
            out.emplace_back(item);
            if (comma == std::string_view::npos)
                break;
            start = comma + 1;
        }
        return out;
    }

    template <class Int>
    Int parse_count(std::string_view s, const char* what)
    {
        s = trim(s);
        Int v{};
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
            throw parse_error(std::string(what) + ": expected a non-negative integer, got '" + std::string(s) + "'");
        return v;
    }

} // namespace detail

inline ProblemFile parse_problem(std::istream& in)
{
    ProblemFile problem;
    std::string line;
    std::size_t line_number = 0;
    bool seen_header = false;
    bool seen_mode = false;
    bool seen_k = false;

    while (std::getline(in, line)) {
        ++line_number;
        std::string_view text = line;
        if (auto hash = text.find('#'); hash != std::string_view::npos)
            text = text.substr(0, hash);
        text = detail::trim(text);
        if (text.empty())
            continue;
        auto fail = [&](const std::string& message) {
            throw parse_error("line " + std::to_string(line_number) + ": " + message);
        };
        if (!seen_header) {
            if (text != problem_header)
                fail("expected header '" + std::string(problem_header) + "'");
            seen_header = true;
            continue;
        }
        const auto eq = text.find('=');
        if (eq == std::string_view::npos)
            fail("expected 'key = value'");
        const std::string key(detail::trim(text.substr(0, eq)));
        const std::string_view value = detail::trim(text.substr(eq + 1));
        if (value.empty())
            fail("missing value for '" + key + "'");

        try {
            if (key == "mode") {
                if (value == "rational")
                    problem.mode = Mode::rational;
                else if (value == "floating")
                    problem.mode = Mode::floating;
                else
                    fail("mode must be 'rational' or 'floating'");
                seen_mode = true;
            } else if (key == "nodes") {
                if (!problem.nodes.empty())
                    fail("duplicate 'nodes'");
                problem.nodes = detail::split_list(value);
            } else if (key == "k") {
                problem.k = detail::parse_count<unsigned>(value, "k");
                seen_k = true;
            } else if (key == "jets") {
                problem.jets.push_back(detail::split_list(value));
            } else if (key == "function") {
                problem.function = std::string(value);
            } else if (key == "grid") {
                auto items = detail::split_list(value);
                if (items.size() != 3)
                    fail("grid needs start, stop, count");
                problem.grid = ProblemFile::GridSpec{items[0], items[1],
                                                     detail::parse_count<std::size_t>(items[2], "grid count")};
                if (problem.grid->count == 0)
                    fail("grid count must be positive");
            } else if (key == "separation") {
                problem.separation = std::string(value);
            } else {
                fail("unknown key '" + key + "'");
            }
        } catch (const parse_error& e) {
            const std::string what = e.what();
            if (what.rfind("line ", 0) == 0)
                throw;
            fail(what);
        }
    }

    if (!seen_header)
        throw parse_error("empty problem file");
    if (!seen_mode)
        throw parse_error("missing 'mode'");
    if (problem.nodes.empty())
        throw parse_error("missing 'nodes'");
    if (!seen_k)
        throw parse_error("missing 'k'");
    if (!problem.function && problem.jets.empty())
        throw parse_error("missing 'jets' or 'function'");
    if (!problem.jets.empty()) {
        if (problem.jets.size() != problem.nodes.size())
            throw parse_error("expected " + std::to_string(problem.nodes.size()) + " 'jets' lines, got "
                              + std::to_string(problem.jets.size()));
        for (const auto& row : problem.jets)
            if (row.size() != problem.k + 1)
                throw parse_error("each 'jets' line needs k+1 = " + std::to_string(problem.k + 1) + " values");
    }
    return problem;
}

inline ProblemFile parse_problem(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_problem(in);
}

template <Scalar T>
struct Grid {
    T start;
    T stop;
    std::size_t count;

    std::vector<T> points() const
    {
        if (count == 1)
            return {start};
        std::vector<T> out;
        out.reserve(count);
        const T step = (stop - start) / T(static_cast<long>(count - 1));
        for (std::size_t i = 0; i < count; ++i)
            out.push_back(i + 1 == count ? stop : T(start + step * T(static_cast<long>(i))));
        return out;
    }
};

/// A problem with its numbers parsed in the scalar type of its mode.
template <Scalar T>
struct TypedProblem {
    NodeSet<T> nodes;
    JetTable<T> jets;
    std::optional<AnalyticFunction> function;
    std::optional<Grid<T>> grid;
};

/// Parse errors surface as parse_error; coincident or too-close nodes as
/// separation_error.
template <Scalar T>
TypedProblem<T> instantiate(const ProblemFile& problem)
{
    std::vector<T> node_values;
    for (const auto& s : problem.nodes)
        node_values.push_back(parse_scalar<T>(s));
    T separation = scalar_traits<T>::default_separation();
    if (problem.separation) {
        if constexpr (is_exact_v<T>)
            throw parse_error("'separation' only applies in floating mode");
        else
            separation = parse_scalar<T>(*problem.separation);
    }
    if (separation < 0)
        throw parse_error("'separation' must be non-negative");
    NodeSet<T> nodes(std::move(node_values), separation);

    std::optional<AnalyticFunction> function;
    std::optional<JetTable<T>> jets;
    if (problem.function) {
        function = find_function(*problem.function);
        if (!function)
            throw parse_error("unknown function '" + *problem.function + "'");
        if (is_exact_v<T> && !function->is_polynomial())
            throw parse_error("function '" + *problem.function + "' is not a polynomial; use mode = floating");
    }
    if (problem.jets.empty()) {
        jets = make_jets(*function, nodes, problem.k);
    } else {
        std::vector<std::vector<T>> rows;
        for (const auto& row : problem.jets) {
            std::vector<T> values;
            for (const auto& s : row)
                values.push_back(parse_scalar<T>(s));
            rows.push_back(std::move(values));
        }
        jets = JetTable<T>(std::move(rows));
    }

    std::optional<Grid<T>> grid;
    if (problem.grid)
        grid = Grid<T>{parse_scalar<T>(problem.grid->start), parse_scalar<T>(problem.grid->stop), problem.grid->count};

    return TypedProblem<T>{std::move(nodes), std::move(*jets), std::move(function), std::move(grid)};
}

} // namespace mtp

#endif // MTP_PROBLEM_HPP
