#include "icsol/cover.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <tuple>

#include "icsol/errors.hpp"

namespace icsol {

void validate_cover(const CliqueCover &c, const SideInfoGraph &g) {
    std::uint64_t seen = 0;
    for (const Clique &cl : c.cliques) {
        Clique check(cl.vertices, g); // throws unless a valid clique
        if (seen & check.mask())
            throw StructureError("cover cliques overlap");
        seen |= check.mask();
    }
    std::uint64_t all = (g.vertex_count() == 64) ? ~std::uint64_t{0} : bit(g.vertex_count()) - 1;
    if (seen != all)
        throw StructureError("cover does not span all vertices");
}

namespace {

void sort_cover(CliqueCover &c) {
    std::sort(c.cliques.begin(), c.cliques.end(),
              [](const Clique &a, const Clique &b) { return a.smallest() < b.smallest(); });
}

} // namespace

CliqueCover algorithm1_cover(const SideInfoGraph &g) {
    int k = g.vertex_count();
    // groups of original vertices; a group's adjacency is the AND over
    // its members (equivalent to Hadamard-merging matrix rows/columns)
    std::vector<std::vector<int>> groups;
    for (int v = 0; v < k; ++v)
        groups.push_back({v});
    std::vector<std::vector<int>> done;

    auto group_edge = [&](const std::vector<int> &a, const std::vector<int> &b) {
        for (int x : a)
            for (int y : b)
                if (!g.has_edge(x, y))
                    return false;
        return true;
    };

    while (!groups.empty()) {
        int n = static_cast<int>(groups.size());
        // B over current groups: 1 iff all cross edges exist both ways
        std::vector<std::uint64_t> b(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (group_edge(groups[static_cast<std::size_t>(i)], groups[static_cast<std::size_t>(j)]) &&
                    group_edge(groups[static_cast<std::size_t>(j)], groups[static_cast<std::size_t>(i)])) {
                    b[static_cast<std::size_t>(i)] |= bit(j);
                    b[static_cast<std::size_t>(j)] |= bit(i);
                }
        std::vector<int> weight(static_cast<std::size_t>(n));
        bool any = false;
        for (int i = 0; i < n; ++i) {
            weight[static_cast<std::size_t>(i)] = std::popcount(b[static_cast<std::size_t>(i)]);
            any |= weight[static_cast<std::size_t>(i)] > 0;
        }
        if (!any)
            break;
        // ascending B-row Hamming weight, ties by lowest current index
        std::vector<int> order;
        for (int i = 0; i < n; ++i)
            if (weight[static_cast<std::size_t>(i)] > 0)
                order.push_back(i);
        std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
            return weight[static_cast<std::size_t>(x)] < weight[static_cast<std::size_t>(y)];
        });
        std::vector<bool> paired(static_cast<std::size_t>(n), false);
        std::vector<std::pair<int, int>> merges;
        for (int i : order) {
            if (paired[static_cast<std::size_t>(i)])
                continue;
            int partner = -1;
            for (int j : mask_to_list(b[static_cast<std::size_t>(i)])) {
                if (paired[static_cast<std::size_t>(j)] || j == i)
                    continue;
                if (partner < 0 ||
                    weight[static_cast<std::size_t>(j)] < weight[static_cast<std::size_t>(partner)])
                    partner = j; // ties by lowest index: mask_to_list is ascending
            }
            if (partner < 0)
                continue;
            paired[static_cast<std::size_t>(i)] = paired[static_cast<std::size_t>(partner)] = true;
            merges.emplace_back(i, partner);
        }
        // apply merges, retire zero-weight rows, reindex
        std::vector<bool> remove(static_cast<std::size_t>(n), false);
        for (auto [i, j] : merges) {
            auto &gi = groups[static_cast<std::size_t>(std::min(i, j))];
            auto &gj = groups[static_cast<std::size_t>(std::max(i, j))];
            gi.insert(gi.end(), gj.begin(), gj.end());
            remove[static_cast<std::size_t>(std::max(i, j))] = true;
        }
        std::vector<std::vector<int>> next;
        for (int i = 0; i < n; ++i) {
            if (remove[static_cast<std::size_t>(i)])
                continue;
            if (weight[static_cast<std::size_t>(i)] == 0) {
                done.push_back(groups[static_cast<std::size_t>(i)]);
                continue;
            }
            next.push_back(groups[static_cast<std::size_t>(i)]);
        }
        groups = std::move(next);
    }
    for (auto &grp : groups)
        done.push_back(grp);

    CliqueCover cover;
    for (auto &grp : done)
        cover.cliques.emplace_back(std::move(grp), g);
    sort_cover(cover);
    validate_cover(cover, g);
    return cover;
}

namespace {

// ternary pattern entry on the group-contracted fitting matrix:
// meet over member pairs (1 beats *, 0 beats *)
Fit group_cell(const FittingPattern &p, const std::vector<int> &a, const std::vector<int> &b) {
    bool has_one = false, has_zero = false, has_free = false;
    for (int x : a)
        for (int y : b)
            switch (p.at(x, y)) {
            case Fit::One:
                has_one = true;
                break;
            case Fit::Zero:
                has_zero = true;
                break;
            case Fit::Free:
                has_free = true;
                break;
            }
    if (has_one && has_zero)
        throw StructureError("fitting-pattern merge produced a 0/1 conflict");
    if (has_one)
        return Fit::One;
    if (has_zero)
        return Fit::Zero;
    (void)has_free;
    return Fit::Free;
}

std::optional<int> entry_distance(Fit a, Fit b) {
    if (a == b)
        return 0;
    if (a == Fit::Free || b == Fit::Free)
        return 1; // d(0,*) = d(1,*) = 1
    return std::nullopt; // d(0,1) = infinity
}

std::optional<int> add_dist(std::optional<int> a, std::optional<int> b) {
    if (!a || !b)
        return std::nullopt;
    return *a + *b;
}

CliqueCover ldg_like(const SideInfoGraph &g, bool extended) {
    FittingPattern p = FittingPattern::from_graph(g);
    int k = g.vertex_count();
    std::vector<std::vector<int>> groups;
    for (int v = 0; v < k; ++v)
        groups.push_back({v});

    while (groups.size() > 1) {
        int n = static_cast<int>(groups.size());
        auto cell = [&](int i, int j) {
            return group_cell(p, groups[static_cast<std::size_t>(i)], groups[static_cast<std::size_t>(j)]);
        };
        // selection key: (distance, rows-before-columns, lexicographic pair)
        std::optional<std::tuple<int, int, int, int>> best;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                std::optional<int> dr(0), dc(0);
                for (int c = 0; c < n; ++c) {
                    dr = add_dist(dr, entry_distance(cell(i, c), cell(j, c)));
                    if (extended)
                        dc = add_dist(dc, entry_distance(cell(c, i), cell(c, j)));
                    if (!dr && (!extended || !dc))
                        break;
                }
                if (dr) {
                    std::tuple<int, int, int, int> key{*dr, 0, i, j};
                    if (!best || key < *best)
                        best = key;
                }
                if (extended && dc) {
                    std::tuple<int, int, int, int> key{*dc, 1, i, j};
                    if (!best || key < *best)
                        best = key;
                }
            }
        if (!best)
            break;
        int bi = std::get<2>(*best), bj = std::get<3>(*best);
        // a merge joins the two vertex groups whichever orientation won
        auto merged = groups[static_cast<std::size_t>(bi)];
        merged.insert(merged.end(), groups[static_cast<std::size_t>(bj)].begin(),
                      groups[static_cast<std::size_t>(bj)].end());
        groups.erase(groups.begin() + bj);
        groups[static_cast<std::size_t>(bi)] = std::move(merged);
    }

    CliqueCover cover;
    for (auto &grp : groups)
        cover.cliques.emplace_back(std::move(grp), g);
    sort_cover(cover);
    validate_cover(cover, g);
    return cover;
}

} // namespace

CliqueCover ldg_cover(const SideInfoGraph &g) { return ldg_like(g, false); }

CliqueCover eldg_cover(const SideInfoGraph &g) { return ldg_like(g, true); }

int cover_code_length(const CliqueCover &c) {
    if (c.cliques.empty())
        throw ArgumentError("empty cover has no code length");
    return c.size();
}

std::optional<int> row_distance(const FittingPattern &p, int i, int j) {
    std::optional<int> d(0);
    for (int c = 0; c < p.size(); ++c)
        d = add_dist(d, entry_distance(p.at(i, c), p.at(j, c)));
    return d;
}

std::optional<int> col_distance(const FittingPattern &p, int i, int j) {
    std::optional<int> d(0);
    for (int c = 0; c < p.size(); ++c)
        d = add_dist(d, entry_distance(p.at(c, i), p.at(c, j)));
    return d;
}

std::string cover_report(const CliqueCover &c) {
    std::ostringstream out;
    for (const Clique &cl : c.cliques) {
        out << "clique:";
        for (int v : cl.vertices)
            out << " x" << v + 1;
        out << "\n";
    }
    return out.str();
}

} // namespace icsol
