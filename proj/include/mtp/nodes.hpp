#ifndef MTP_NODES_HPP
#define MTP_NODES_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mtp/scalar.hpp"

namespace mtp {

/// Pairwise-distinct interpolation nodes a_0..a_{m-1}.
///
/// Exact mode requires the nodes to differ. Floating mode additionally
/// rejects pairs closer than `separation` (default 1e-10): the explicit
/// formula divides by node differences raised to the k-th power.
template <Scalar T>
class NodeSet {
public:
    explicit NodeSet(std::vector<T> nodes, T separation = scalar_traits<T>::default_separation())
        : nodes_(std::move(nodes))
        , separation_(std::move(separation))
    {
        if (nodes_.empty())
            throw std::invalid_argument("node set must not be empty");
        if (separation_ < 0)
            throw std::invalid_argument("separation guard must be non-negative");
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            for (std::size_t j = i + 1; j < nodes_.size(); ++j) {
                T gap = abs_value(T(nodes_[i] - nodes_[j]));
                if (gap == 0 || gap < separation_)
                    throw separation_error("nodes " + std::to_string(i) + " and " + std::to_string(j) + " ("
                                           + to_string(nodes_[i]) + ", " + to_string(nodes_[j])
                                           + ") are closer than the separation guard "
                                           + to_string(separation_));
            }
        }
    }

    std::size_t size() const noexcept { return nodes_.size(); }
    const T& operator[](std::size_t i) const { return nodes_[i]; }
    const std::vector<T>& values() const noexcept { return nodes_; }
    const T& separation() const noexcept { return separation_; }

    auto begin() const noexcept { return nodes_.begin(); }
    auto end() const noexcept { return nodes_.end(); }

private:
    std::vector<T> nodes_;
    T separation_;
};

/// Derivative data f^{(n)}(a_i): one row per node, k+1 entries per row.
/// Row i belongs to node i.
template <Scalar T>
class JetTable {
public:
    explicit JetTable(std::vector<std::vector<T>> rows)
        : rows_(std::move(rows))
    {
        if (rows_.empty())
            throw std::invalid_argument("jet table must have at least one row");
        const std::size_t width = rows_.front().size();
        if (width == 0)
            throw std::invalid_argument("jet rows must hold at least f(a_i)");
        for (const auto& row : rows_)
            if (row.size() != width)
                throw std::invalid_argument("jet rows must all have k+1 entries");
    }

    std::size_t node_count() const noexcept { return rows_.size(); }
    unsigned order() const noexcept { return static_cast<unsigned>(rows_.front().size() - 1); }

    const T& operator()(std::size_t node, unsigned n) const { return rows_.at(node).at(n); }
    std::span<const T> row(std::size_t node) const { return rows_.at(node); }
    const std::vector<std::vector<T>>& rows() const noexcept { return rows_; }

    /// Copy with a single entry replaced.
    JetTable with_entry(std::size_t node, unsigned n, T value) const
    {
        JetTable copy = *this;
        copy.rows_.at(node).at(n) = std::move(value);
        return copy;
    }

private:
    std::vector<std::vector<T>> rows_;
};

template <Scalar T>
void require_consistent(const NodeSet<T>& nodes, const JetTable<T>& jets)
{
    if (nodes.size() != jets.node_count())
        throw std::invalid_argument("jet table has " + std::to_string(jets.node_count()) + " rows for "
                                    + std::to_string(nodes.size()) + " nodes");
}

} // namespace mtp

#endif // MTP_NODES_HPP
