#pragma once

// Shared test utilities: fixture loading, seeded random instances, and
// independent naive oracles (deliberately written with different
// algorithms than the library under test).

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "icsol/io.hpp"
#include "icsol/problem.hpp"

namespace testutil {

inline std::string fixture_path(const std::string &name) {
    return std::string(ICSOL_FIXTURE_DIR) + "/" + name;
}

inline std::string read_text(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("missing fixture: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline icsol::GroupcastProblem load_groupcast(const std::string &name) {
    auto parsed = icsol::parse_instance(read_text(fixture_path(name)));
    if (!parsed.groupcast)
        throw std::runtime_error("fixture is not a groupcast instance: " + name);
    return *parsed.groupcast;
}

inline icsol::SideInfoGraph load_graph(const std::string &name) {
    auto parsed = icsol::parse_instance(read_text(fixture_path(name)));
    if (!parsed.graph)
        throw std::runtime_error("fixture is not a unicast graph: " + name);
    return *parsed.graph;
}

inline icsol::SideInfoGraph random_graph(std::mt19937 &rng, int k, double p) {
    icsol::SideInfoGraph g(k);
    std::bernoulli_distribution coin(p);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && coin(rng))
                g.add_edge(i, j);
    return g;
}

// single-unicast problem whose side-information graph is g
inline icsol::GroupcastProblem problem_from_graph(const icsol::SideInfoGraph &g) {
    std::vector<icsol::Receiver> recv;
    for (int v = 0; v < g.vertex_count(); ++v)
        recv.push_back({v + 1, icsol::bit(v), g.out_neighbors(v)});
    return {g.vertex_count(), std::move(recv)};
}

inline icsol::GroupcastProblem random_groupcast(std::mt19937 &rng, int k, int m) {
    std::uniform_int_distribution<int> pick(0, k - 1);
    std::bernoulli_distribution coin(0.4);
    std::vector<icsol::Receiver> recv;
    for (int r = 0; r < m; ++r) {
        std::uint64_t wants = icsol::bit(pick(rng));
        for (int j = 0; j < k; ++j)
            if (coin(rng) && coin(rng))
                wants |= icsol::bit(j);
        std::uint64_t knows = 0;
        for (int j = 0; j < k; ++j)
            if (!(wants & icsol::bit(j)) && coin(rng))
                knows |= icsol::bit(j);
        recv.push_back({r + 1, wants, knows});
    }
    return {k, std::move(recv)};
}

// Gaussian elimination over GF(2) on plain int rows: an oracle for
// icsol::rank written without bit packing.
inline int naive_rank(std::vector<std::vector<int>> m) {
    if (m.empty())
        return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    int r = 0;
    for (std::size_t c = 0; c < cols && static_cast<std::size_t>(r) < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t i = static_cast<std::size_t>(r); i < rows; ++i)
            if (m[i][c]) {
                pivot = i;
                break;
            }
        if (pivot == rows)
            continue;
        std::swap(m[static_cast<std::size_t>(r)], m[pivot]);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != static_cast<std::size_t>(r) && m[i][c])
                for (std::size_t j = 0; j < cols; ++j)
                    m[i][j] ^= m[static_cast<std::size_t>(r)][j];
        ++r;
    }
    return r;
}

// Exhaustive minrank oracle: enumerate every 0/1 assignment of the
// free (edge) cells and take the minimum naive rank. Guarded to small
// edge counts; throws if the graph is too dense for brute force.
inline int naive_minrank(const icsol::SideInfoGraph &g, int max_edges = 20) {
    int k = g.vertex_count();
    std::vector<std::pair<int, int>> free_cells = g.edges();
    int e = static_cast<int>(free_cells.size());
    if (e > max_edges)
        throw std::runtime_error("naive_minrank: too many edges for brute force");
    int best = k;
    for (std::uint64_t assign = 0; assign < (std::uint64_t{1} << e); ++assign) {
        std::vector<std::vector<int>> m(static_cast<std::size_t>(k),
                                        std::vector<int>(static_cast<std::size_t>(k), 0));
        for (int i = 0; i < k; ++i)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
        for (int c = 0; c < e; ++c)
            if ((assign >> c) & 1)
                m[static_cast<std::size_t>(free_cells[static_cast<std::size_t>(c)].first)]
                 [static_cast<std::size_t>(free_cells[static_cast<std::size_t>(c)].second)] = 1;
        int r = naive_rank(m);
        if (r < best)
            best = r;
        if (best == 1)
            break;
    }
    return best;
}

// Cycle-membership oracle: v is on a directed cycle of the induced
// subgraph iff some out-neighbor reaches v (plain BFS, no SCCs).
inline bool on_cycle_oracle(const icsol::SideInfoGraph &g, std::uint64_t restrict_mask, int v) {
    for (int u : icsol::mask_to_list(g.out_neighbors(v) & restrict_mask)) {
        std::vector<int> queue{u};
        std::uint64_t seen = icsol::bit(u);
        while (!queue.empty()) {
            int x = queue.back();
            queue.pop_back();
            if (x == v)
                return true;
            for (int y : icsol::mask_to_list(g.out_neighbors(x) & restrict_mask & ~seen)) {
                seen |= icsol::bit(y);
                queue.push_back(y);
            }
        }
    }
    return false;
}

} // namespace testutil
