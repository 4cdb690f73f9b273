#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "icsol/gf2.hpp"

namespace icsol {

// Message subsets are bitmasks over 0..K-1 (K <= 64).
std::uint64_t mask_from(const std::vector<int> &indices);
std::vector<int> mask_to_list(std::uint64_t mask);
inline std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

struct Receiver {
    int id = 0;            // external id, as read from the instance file
    std::uint64_t wants = 0; // W_k, bitmask of 0-indexed messages
    std::uint64_t knows = 0; // K_k, bitmask of 0-indexed messages
    bool operator==(const Receiver &) const = default;
};

/// Groupcast index-coding problem: K messages, m receivers with
/// want-sets and side-information. Immutable after construction.
class GroupcastProblem {
public:
    GroupcastProblem(int message_count, std::vector<Receiver> receivers);

    int message_count() const { return k_; }
    const std::vector<Receiver> &receivers() const { return recv_; }
    // gamma_k: positions (into receivers()) of the receivers wanting message k
    const std::vector<std::vector<int>> &demand_index() const { return demand_; }

    std::vector<int> unwanted_messages() const;
    // exactly one receiver per message, each with a singleton want-set
    bool is_single_unicast() const;

    bool operator==(const GroupcastProblem &) const = default;

private:
    int k_;
    std::vector<Receiver> recv_;
    std::vector<std::vector<int>> demand_;
};

/// Side-information graph of a single-unicast problem. Vertices are
/// messages 0..K-1; edge (i,j) means the receiver wanting x_{i+1}
/// knows x_{j+1}. No self-loops.
class SideInfoGraph {
public:
    explicit SideInfoGraph(int vertex_count);

    int vertex_count() const { return k_; }
    bool has_edge(int i, int j) const { return (out_[static_cast<std::size_t>(i)] >> j) & 1; }
    void add_edge(int i, int j);
    void remove_edge(int i, int j);
    std::uint64_t out_neighbors(int i) const { return out_[static_cast<std::size_t>(i)]; }
    std::uint64_t in_neighbors(int i) const;
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const; // lexicographic

    bool operator==(const SideInfoGraph &) const = default;

private:
    int k_;
    std::vector<std::uint64_t> out_;
};

using IntMatrix = std::vector<std::vector<long long>>;

/// Sum of adjacency-matrix powers A^first + ... + A^n with saturating
/// arithmetic (entries capped at 2^31-1). Defaults to first = 0, i.e.
/// the sum includes A^0 = I.
IntMatrix adjacency_power_sum(const SideInfoGraph &g, int n, int first = 0);

/// B = A^T o A (element-wise AND): symmetric marker of undirected
/// (bidirected) edge pairs.
Gf2Matrix hadamard_undirected(const SideInfoGraph &g);

enum class Fit : unsigned char { Zero, One, Free };

/// K x K ternary pattern: forced ones on the diagonal, Free at edges,
/// forced zeros elsewhere.
class FittingPattern {
public:
    static FittingPattern from_graph(const SideInfoGraph &g);
    int size() const { return k_; }
    Fit at(int i, int j) const { return cells_[static_cast<std::size_t>(i * k_ + j)]; }
    bool matches(const Gf2Matrix &m) const;

private:
    explicit FittingPattern(int k) : k_(k), cells_(static_cast<std::size_t>(k) * k, Fit::Zero) {}
    int k_;
    std::vector<Fit> cells_;
};

/// Replace every receiver wanting several messages by one copy per
/// wanted message (same side-information).
GroupcastProblem split_want_sets(const GroupcastProblem &p);

/// Side-information graph of a single-unicast problem; throws
/// StructureError naming the offending message otherwise.
SideInfoGraph to_graph(const GroupcastProblem &p);

} // namespace icsol
