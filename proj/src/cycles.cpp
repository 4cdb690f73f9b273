#include "icsol/cycles.hpp"

#include <algorithm>
#include <array>
#include <queue>

#include "icsol/errors.hpp"

namespace icsol {

Clique::Clique(std::vector<int> vs) : vertices(std::move(vs)) {
    if (vertices.empty())
        throw ArgumentError("clique must be nonempty");
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw ArgumentError("clique has repeated vertices");
}

Clique::Clique(std::vector<int> vs, const SideInfoGraph &g) : Clique(std::move(vs)) {
    for (int v : vertices)
        if (v < 0 || v >= g.vertex_count())
            throw StructureError("clique vertex out of range");
    for (int a : vertices)
        for (int b : vertices)
            if (a != b && !g.has_edge(a, b))
                throw StructureError("clique pair (" + std::to_string(a + 1) + "," +
                                     std::to_string(b + 1) + ") is not bidirected");
}

std::uint64_t Clique::mask() const {
    std::uint64_t m = 0;
    for (int v : vertices)
        m |= bit(v);
    return m;
}

namespace {

// Iterative Tarjan SCC restricted to the vertices of `restrict_mask`.
// Returns, per vertex, its component id (or -1 outside the mask).
struct SccResult {
    std::vector<int> comp;
    std::vector<int> comp_size;
};

SccResult scc(const SideInfoGraph &g, std::uint64_t restrict_mask) {
    int k = g.vertex_count();
    SccResult res;
    res.comp.assign(static_cast<std::size_t>(k), -1);
    std::vector<int> index(static_cast<std::size_t>(k), -1), low(static_cast<std::size_t>(k), 0);
    std::vector<bool> on_stack(static_cast<std::size_t>(k), false);
    std::vector<int> stack;
    int next_index = 0;

    struct Frame {
        int v;
        std::uint64_t remaining; // out-neighbors not yet visited
    };
    std::vector<Frame> frames;

    for (int root = 0; root < k; ++root) {
        if (!((restrict_mask >> root) & 1) || index[static_cast<std::size_t>(root)] >= 0)
            continue;
        frames.push_back({root, g.out_neighbors(root) & restrict_mask});
        index[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = next_index++;
        stack.push_back(root);
        on_stack[static_cast<std::size_t>(root)] = true;
        while (!frames.empty()) {
            Frame &f = frames.back();
            if (f.remaining) {
                int w = mask_to_list(f.remaining & (~f.remaining + 1)).front();
                f.remaining &= f.remaining - 1;
                if (index[static_cast<std::size_t>(w)] < 0) {
                    index[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = next_index++;
                    stack.push_back(w);
                    on_stack[static_cast<std::size_t>(w)] = true;
                    frames.push_back({w, g.out_neighbors(w) & restrict_mask});
                } else if (on_stack[static_cast<std::size_t>(w)]) {
                    low[static_cast<std::size_t>(f.v)] =
                        std::min(low[static_cast<std::size_t>(f.v)], index[static_cast<std::size_t>(w)]);
                }
            } else {
                int v = f.v;
                frames.pop_back();
                if (!frames.empty())
                    low[static_cast<std::size_t>(frames.back().v)] =
                        std::min(low[static_cast<std::size_t>(frames.back().v)],
                                 low[static_cast<std::size_t>(v)]);
                if (low[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
                    int id = static_cast<int>(res.comp_size.size());
                    int size = 0;
                    while (true) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[static_cast<std::size_t>(w)] = false;
                        res.comp[static_cast<std::size_t>(w)] = id;
                        ++size;
                        if (w == v)
                            break;
                    }
                    res.comp_size.push_back(size);
                }
            }
        }
    }
    return res;
}

} // namespace

std::uint64_t on_some_cycle(const SideInfoGraph &g, std::uint64_t restrict_mask) {
    SccResult r = scc(g, restrict_mask);
    std::uint64_t out = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int c = r.comp[static_cast<std::size_t>(v)];
        // no self-loops, so a cycle through v needs an SCC of size >= 2
        if (c >= 0 && r.comp_size[static_cast<std::size_t>(c)] >= 2)
            out |= bit(v);
    }
    return out;
}

CycleFreeVerdict cycle_free_pair(const SideInfoGraph &g, const Clique &ci, const Clique &cj) {
    if (ci.mask() & cj.mask())
        throw ArgumentError("cycle_free_pair: cliques overlap");
    std::uint64_t all = (g.vertex_count() == 64) ? ~std::uint64_t{0} : bit(g.vertex_count()) - 1;
    std::uint64_t vr = all & ~(ci.mask() | cj.mask());
    for (int a : ci.vertices) {
        if (on_some_cycle(g, vr | bit(a)) & bit(a))
            continue; // condition (a) fails for every pair using this x_k
        for (int b : cj.vertices) {
            if (on_some_cycle(g, vr | bit(b)) & bit(b))
                continue; // (b) fails
            std::uint64_t both = on_some_cycle(g, vr | bit(a) | bit(b));
            if ((both & bit(a)) || (both & bit(b)))
                continue; // (c) fails
            return {true, a, b};
        }
    }
    return {false, -1, -1};
}

namespace {

// Shortest directed cycle through `start` within `mask`, as an ordered
// vertex list, or empty if none. BFS with ascending-neighbor expansion.
std::vector<int> shortest_cycle_through(const SideInfoGraph &g, int start, std::uint64_t mask) {
    int k = g.vertex_count();
    std::vector<int> dist(static_cast<std::size_t>(k), -1), parent(static_cast<std::size_t>(k), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(start)] = 0;
    q.push(start);
    int best_u = -1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (best_u >= 0 && dist[static_cast<std::size_t>(v)] >= dist[static_cast<std::size_t>(best_u)])
            break; // no shorter closing vertex can appear later
        if (g.has_edge(v, start) && v != start) {
            best_u = v;
            continue;
        }
        for (int w : mask_to_list(g.out_neighbors(v) & mask))
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                parent[static_cast<std::size_t>(w)] = v;
                q.push(w);
            }
    }
    if (best_u < 0)
        return {};
    std::vector<int> path;
    for (int v = best_u; v >= 0; v = parent[static_cast<std::size_t>(v)])
        path.push_back(v);
    std::reverse(path.begin(), path.end()); // start .. best_u
    return path;
}

} // namespace

CycleCover greedy_cycle_cover(const SideInfoGraph &g) {
    int k = g.vertex_count();
    std::uint64_t mask = (k == 64) ? ~std::uint64_t{0} : bit(k) - 1;
    CycleCover cover;
    while (true) {
        std::vector<int> best;
        for (int v = 0; v < k; ++v) {
            if (!((mask >> v) & 1))
                continue;
            std::vector<int> c = shortest_cycle_through(g, v, mask);
            if (!c.empty() && (best.empty() || c.size() < best.size()))
                best = c; // ties keep the lowest start index (scanned ascending)
        }
        if (best.empty())
            break;
        for (int v : best)
            mask &= ~bit(v);
        cover.cycles.push_back({std::move(best)});
    }
    cover.uncovered = mask_to_list(mask);
    return cover;
}

} // namespace icsol
