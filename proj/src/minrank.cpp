#include "icsol/minrank.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <string>
#include <unordered_set>

#include "icsol/errors.hpp"

namespace icsol {

namespace {

std::uint64_t full_mask(int k) { return (k >= 64) ? ~std::uint64_t{0} : (bit(k) - 1); }

std::string vertex_list(std::uint64_t mask) {
    std::ostringstream out;
    bool first = true;
    for (int v : mask_to_list(mask)) {
        if (!first)
            out << ',';
        out << v + 1;
        first = false;
    }
    return out.str();
}

} // namespace

int mais(const SideInfoGraph &g, int limit) {
    int k = g.vertex_count();
    if (k > limit)
        throw ResourceError("mais: " + std::to_string(k) + " vertices exceed the exact limit " +
                            std::to_string(limit) + "; raise --mais-limit to override");
    if (k == 0)
        return 0;
    for (int s = k; s >= 1; --s) {
        // Gosper's hack over size-s subsets, ascending
        std::uint64_t sub = bit(s) - 1;
        std::uint64_t top = bit(k);
        while (sub < top) {
            if (on_some_cycle(g, sub) == 0)
                return s;
            std::uint64_t c = sub & (~sub + 1);
            std::uint64_t r = sub + c;
            sub = (((r ^ sub) >> 2) / c) | r;
        }
    }
    return 0; // unreachable: singletons are always acyclic
}

StripResult strip_acyclic(const SideInfoGraph &g) {
    int k = g.vertex_count();
    std::uint64_t kept = full_mask(k);
    // removing non-cycle vertices never creates or destroys other
    // cycles, but iterate to a fixpoint anyway (cheap, and explicit)
    while (true) {
        std::uint64_t cyc = on_some_cycle(g, kept);
        if (cyc == kept)
            break;
        kept = cyc;
    }
    StripResult res{SideInfoGraph(std::popcount(kept)), mask_to_list(kept),
                    mask_to_list(full_mask(k) & ~kept)};
    for (std::size_t a = 0; a < res.kept.size(); ++a)
        for (std::size_t b = 0; b < res.kept.size(); ++b)
            if (a != b && g.has_edge(res.kept[a], res.kept[b]))
                res.graph.add_edge(static_cast<int>(a), static_cast<int>(b));
    return res;
}

SideInfoGraph theorem2_reduce(const SideInfoGraph &g, const CliqueCover &cover,
                              std::vector<std::string> *audit) {
    validate_cover(cover, g);
    std::vector<Clique> cliques = cover.cliques;
    std::sort(cliques.begin(), cliques.end(),
              [](const Clique &a, const Clique &b) { return a.smallest() < b.smallest(); });
    SideInfoGraph out = g;
    int t = static_cast<int>(cliques.size());
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
            CycleFreeVerdict v = cycle_free_pair(out, cliques[static_cast<std::size_t>(i)],
                                                 cliques[static_cast<std::size_t>(j)]);
            if (!v.cycle_free)
                continue;
            bool deleted = false;
            for (int a : cliques[static_cast<std::size_t>(i)].vertices)
                for (int b : cliques[static_cast<std::size_t>(j)].vertices) {
                    deleted |= out.has_edge(a, b) || out.has_edge(b, a);
                    out.remove_edge(a, b);
                    out.remove_edge(b, a);
                }
            if (audit && deleted)
                audit->push_back("t2-delete " + std::to_string(v.witness_a + 1) + " " +
                                 std::to_string(v.witness_b + 1) + " (cliques " +
                                 vertex_list(cliques[static_cast<std::size_t>(i)].mask()) + "|" +
                                 vertex_list(cliques[static_cast<std::size_t>(j)].mask()) + ")");
        }
    return out;
}

ReducedGraph construction1_reduce(const SideInfoGraph &g, const CliqueCover &cover) {
    validate_cover(cover, g);
    std::vector<Clique> cliques = cover.cliques;
    std::sort(cliques.begin(), cliques.end(),
              [](const Clique &a, const Clique &b) { return a.smallest() < b.smallest(); });
    int t = static_cast<int>(cliques.size());
    ReducedGraph r{SideInfoGraph(t), cliques};
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) {
            if (i == j)
                continue;
            bool complete = true;
            for (int a : cliques[static_cast<std::size_t>(i)].vertices)
                for (int b : cliques[static_cast<std::size_t>(j)].vertices)
                    complete &= g.has_edge(a, b);
            if (complete)
                r.graph.add_edge(i, j);
        }
    return r;
}

namespace {

// isolate (keep, but drop all edges at) every vertex on no cycle;
// minrank-preserving because an isolated vertex contributes exactly
// the +1 the acyclic-vertex theorem assigns to a stripped vertex
SideInfoGraph isolate_acyclic(const SideInfoGraph &g, std::vector<std::string> *audit) {
    std::uint64_t kept = full_mask(g.vertex_count());
    while (true) {
        std::uint64_t cyc = on_some_cycle(g, kept);
        if (cyc == kept)
            break;
        kept = cyc;
    }
    SideInfoGraph out(g.vertex_count());
    for (auto [i, j] : g.edges())
        if ((kept >> i & 1) && (kept >> j & 1))
            out.add_edge(i, j);
    if (audit)
        for (int v : mask_to_list(full_mask(g.vertex_count()) & ~kept))
            audit->push_back("strip " + std::to_string(v + 1));
    return out;
}

std::vector<std::uint64_t> weak_components(const SideInfoGraph &g) {
    int k = g.vertex_count();
    std::vector<int> comp(static_cast<std::size_t>(k), -1);
    std::vector<std::uint64_t> out;
    for (int v = 0; v < k; ++v) {
        if (comp[static_cast<std::size_t>(v)] >= 0)
            continue;
        std::uint64_t members = 0;
        std::vector<int> stack{v};
        comp[static_cast<std::size_t>(v)] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            members |= bit(u);
            std::uint64_t nb = g.out_neighbors(u) | g.in_neighbors(u);
            for (int w : mask_to_list(nb))
                if (comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = comp[static_cast<std::size_t>(v)];
                    stack.push_back(w);
                }
        }
        out.push_back(members);
    }
    return out;
}

} // namespace

PipelineResult reduce_pipeline(const SideInfoGraph &g) {
    PipelineResult res;
    SideInfoGraph g1 = isolate_acyclic(g, &res.audit);
    std::vector<std::uint64_t> comps = weak_components(g1);
    if (comps.size() > 1)
        for (std::uint64_t c : comps)
            res.audit.push_back("split " + vertex_list(c));
    CliqueCover cover = algorithm1_cover(g1);
    SideInfoGraph g2 = theorem2_reduce(g1, cover, &res.audit);
    res.reduced = construction1_reduce(g2, cover);
    for (const Clique &c : res.reduced.origin)
        if (c.size() > 1)
            res.audit.push_back("merge y" + std::to_string(c.smallest() + 1) +
                                " := " + vertex_list(c.mask()));
    // exactness: every clique pair cycle-free in the pruned graph
    res.exact = true;
    int t = static_cast<int>(res.reduced.origin.size());
    for (int i = 0; i < t && res.exact; ++i)
        for (int j = i + 1; j < t && res.exact; ++j)
            res.exact = cycle_free_pair(g2, res.reduced.origin[static_cast<std::size_t>(i)],
                                        res.reduced.origin[static_cast<std::size_t>(j)])
                            .cycle_free;
    return res;
}

namespace {

// fully reduced GF(2) basis over bitmask rows, kept sorted by pivot
// (lowest set bit); canonical for its rowspace
bool basis_insert(std::vector<std::uint64_t> &basis, std::uint64_t v) {
    for (std::uint64_t b : basis)
        if (v & (b & (~b + 1)))
            v ^= b;
    if (!v)
        return false;
    std::uint64_t pivot = v & (~v + 1);
    for (std::uint64_t &b : basis)
        if (b & pivot)
            b ^= v;
    basis.push_back(v);
    std::sort(basis.begin(), basis.end(),
              [](std::uint64_t a, std::uint64_t b) { return (a & (~a + 1)) < (b & (~b + 1)); });
    return true;
}

struct Search {
    const SideInfoGraph *g = nullptr;
    int k = 0;
    int lower = 0;
    int best = 0;
    std::vector<std::uint64_t> rows, best_rows;
    std::unordered_set<std::string> seen;
    bool done = false;

    void run(int depth, const std::vector<std::uint64_t> &basis) {
        if (done)
            return;
        int r = static_cast<int>(basis.size());
        if (r >= best)
            return; // cannot strictly improve
        if (depth == k) {
            best = r;
            best_rows = rows;
            if (best == lower)
                done = true;
            return;
        }
        std::string key(reinterpret_cast<const char *>(&depth), sizeof depth);
        key.append(reinterpret_cast<const char *>(basis.data()), basis.size() * sizeof(std::uint64_t));
        if (!seen.insert(std::move(key)).second)
            return;
        std::uint64_t nbr = g->out_neighbors(depth);
        std::uint64_t sub = 0;
        while (true) { // ascending submask enumeration of the neighborhood
            std::uint64_t row = bit(depth) | sub;
            rows[static_cast<std::size_t>(depth)] = row;
            std::vector<std::uint64_t> next = basis;
            basis_insert(next, row);
            run(depth + 1, next);
            if (done)
                return;
            if (sub == nbr)
                break;
            sub = (sub - nbr) & nbr;
        }
    }
};

} // namespace

MinrankResult minrank_exact(const SideInfoGraph &g, const MinrankOptions &opts) {
    int k = g.vertex_count();
    MinrankResult res;
    if (k == 0) {
        res.certificate = Gf2Matrix(0, 0);
        return res;
    }

    res.mais_lower = mais(g, opts.mais_limit);
    CliqueCover orig_cover = algorithm1_cover(g);
    res.cover_upper = cover_code_length(orig_cover);

    SideInfoGraph g1 = isolate_acyclic(g, &res.reductions);
    CliqueCover cover = algorithm1_cover(g1);
    SideInfoGraph g2 = theorem2_reduce(g1, cover, &res.reductions);

    int free_cells = g2.edge_count();
    if (free_cells > opts.free_cell_budget)
        throw ResourceError("minrank: " + std::to_string(free_cells) +
                            " free cells after reduction exceed the budget " +
                            std::to_string(opts.free_cell_budget) +
                            "; reduce the instance or raise --budget");

    // lower bound may use the reduced graph: fewer edges, same minrank
    int lower = std::max(res.mais_lower, mais(g2, opts.mais_limit));

    Search s;
    s.g = &g2;
    s.k = k;
    s.lower = lower;
    s.best = static_cast<int>(cover.cliques.size());
    s.rows.assign(static_cast<std::size_t>(k), 0);
    s.best_rows.assign(static_cast<std::size_t>(k), 0);
    for (const Clique &c : cover.cliques)
        for (int v : c.vertices)
            s.best_rows[static_cast<std::size_t>(v)] = c.mask(); // incumbent certificate
    if (s.best > lower)
        s.run(0, {});

    res.value = s.best;
    res.certificate = Gf2Matrix(k, k);
    for (int i = 0; i < k; ++i)
        for (int j : mask_to_list(s.best_rows[static_cast<std::size_t>(i)]))
            res.certificate.set(i, j, true);
    return res;
}

} // namespace icsol
