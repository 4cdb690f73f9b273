#include "icsol/groupcast.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "icsol/errors.hpp"

namespace icsol {

GroupcastProblem theorem4_convert(const GroupcastProblem &p) {
    int k = p.message_count();
    std::uint64_t all = (k == 64) ? ~std::uint64_t{0} : bit(k) - 1;
    std::vector<Receiver> out;
    for (int m = 0; m < k; ++m) {
        const std::vector<int> &gamma = p.demand_index()[static_cast<std::size_t>(m)];
        if (gamma.empty())
            continue; // wanted by nobody: no converted receiver
        std::uint64_t inter = all;
        for (int r : gamma)
            inter &= p.receivers()[static_cast<std::size_t>(r)].knows;
        out.push_back({m + 1, bit(m), inter});
    }
    return {k, std::move(out)};
}

namespace {

// side-information graph of a converted problem restricted to the
// wanted messages; `wanted` lists original message ids ascending
SideInfoGraph wanted_subgraph(const GroupcastProblem &conv, std::vector<int> &wanted) {
    wanted.clear();
    for (const Receiver &r : conv.receivers())
        wanted.push_back(mask_to_list(r.wants).front());
    std::sort(wanted.begin(), wanted.end());
    std::vector<int> pos(static_cast<std::size_t>(conv.message_count()), -1);
    for (std::size_t i = 0; i < wanted.size(); ++i)
        pos[static_cast<std::size_t>(wanted[i])] = static_cast<int>(i);
    SideInfoGraph g(static_cast<int>(wanted.size()));
    for (const Receiver &r : conv.receivers()) {
        int from = pos[static_cast<std::size_t>(mask_to_list(r.wants).front())];
        for (int j : mask_to_list(r.knows))
            if (pos[static_cast<std::size_t>(j)] >= 0)
                g.add_edge(from, pos[static_cast<std::size_t>(j)]);
    }
    return g;
}

IndexCode expand_code(const IndexCode &sub, int k, const std::vector<int> &wanted) {
    IndexCode out;
    out.message_count = k;
    for (const Gf2Vector &s : sub.symbols) {
        Gf2Vector v(k);
        for (int i : s.support())
            v.set(wanted[static_cast<std::size_t>(i)], true);
        out.symbols.push_back(std::move(v));
    }
    return out;
}

} // namespace

ConstructionResult construction2(const GroupcastProblem &p) {
    ConstructionResult res;
    GroupcastProblem conv = theorem4_convert(p);
    std::vector<int> wanted;
    SideInfoGraph g = wanted_subgraph(conv, wanted);

    PipelineResult pipe = reduce_pipeline(g);
    res.audit = pipe.audit;
    CycleCover cycles = greedy_cycle_cover(pipe.reduced.graph);
    IndexCode sub = build_code(pipe.reduced, cycles, &res.audit);
    // build_code sizes symbols by the largest clique member; restore
    // the full wanted-subset width before expanding
    for (Gf2Vector &s : sub.symbols)
        if (s.length() < static_cast<int>(wanted.size())) {
            Gf2Vector widened(static_cast<int>(wanted.size()));
            for (int i : s.support())
                widened.set(i, true);
            s = widened;
        }
    res.code = expand_code(sub, p.message_count(), wanted);
    res.report = verify_decodable(res.code, p);
    if (!res.report.overall) {
        // clique-cover code over all super-vertices: always decodable
        res.used_fallback = true;
        res.audit.push_back("fallback clique-cover code");
        IndexCode cc = clique_code(static_cast<int>(wanted.size()), pipe.reduced.origin);
        res.code = expand_code(cc, p.message_count(), wanted);
        res.report = verify_decodable(res.code, p);
        if (!res.report.overall)
            throw std::logic_error("construction2: fallback clique code failed verification");
    }
    return res;
}

namespace {

bool is_prime_power(int n) {
    if (n < 2)
        return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            while (n % d == 0)
                n /= d;
            return n == 1;
        }
    return true;
}

int next_prime_power(int n) {
    int q = std::max(2, n);
    while (!is_prime_power(q))
        ++q;
    return q;
}

} // namespace

PartitionPlan partition_multicast_length(const GroupcastProblem &p, int limit) {
    if (!p.is_single_unicast())
        throw StructureError(
            "partition multicast needs the single-unicast form; apply theorem4_convert first");
    int k = p.message_count();
    if (k > limit)
        throw ResourceError("partition multicast: " + std::to_string(k) +
                            " messages exceed the limit " + std::to_string(limit) +
                            "; raise --pm-limit to override");

    // per-subset part cost and MDS field need
    int nsub = 1 << k;
    std::vector<int> cost(static_cast<std::size_t>(nsub), 0);
    std::vector<int> need(static_cast<std::size_t>(nsub), 0);
    std::vector<int> kappa(static_cast<std::size_t>(nsub), 0);
    for (int s = 1; s < nsub; ++s) {
        std::uint64_t part = static_cast<std::uint64_t>(s);
        int size = std::popcount(part);
        int min_know = -1;
        for (const Receiver &r : p.receivers()) {
            if (!(r.wants & part))
                continue; // irrelevant receiver
            int know = std::popcount(r.knows & part);
            if (min_know < 0 || know < min_know)
                min_know = know;
        }
        if (min_know < 0)
            continue; // no receiver wants anything here: nothing to send
        kappa[static_cast<std::size_t>(s)] = size - 1 - min_know;
        cost[static_cast<std::size_t>(s)] = kappa[static_cast<std::size_t>(s)] + 1;
        // an [n, kappa+1] MDS code with 1 < kappa+1 < n needs q >= n
        if (cost[static_cast<std::size_t>(s)] > 1 && cost[static_cast<std::size_t>(s)] < size)
            need[static_cast<std::size_t>(s)] = size;
    }

    // restricted-growth-string enumeration of all set partitions;
    // best by (total length, field need, fewer parts, lexicographic)
    std::vector<int> rgs(static_cast<std::size_t>(k), 0);
    std::vector<std::uint64_t> blocks;
    std::vector<std::uint64_t> best_blocks;
    long long best_total = -1;
    int best_need = 0;
    auto consider = [&]() {
        long long total = 0;
        int mx_need = 0;
        for (std::uint64_t b : blocks) {
            total += cost[static_cast<std::size_t>(b)];
            mx_need = std::max(mx_need, need[static_cast<std::size_t>(b)]);
        }
        // rgs enumeration order is already lexicographic; parts counted
        // implicitly: any later plan must strictly improve the key
        if (best_total < 0 || total < best_total ||
            (total == best_total && mx_need < best_need) ||
            (total == best_total && mx_need == best_need &&
             blocks.size() < best_blocks.size())) {
            best_total = total;
            best_need = mx_need;
            best_blocks = blocks;
        }
    };
    auto rec = [&](auto &&self, int elem) -> void {
        if (elem == k) {
            consider();
            return;
        }
        int nb = static_cast<int>(blocks.size());
        for (int b = 0; b <= nb && b < k; ++b) {
            rgs[static_cast<std::size_t>(elem)] = b;
            if (b == nb)
                blocks.push_back(0);
            blocks[static_cast<std::size_t>(b)] |= bit(elem);
            self(self, elem + 1);
            blocks[static_cast<std::size_t>(b)] &= ~bit(elem);
            if (b == nb)
                blocks.pop_back();
        }
    };
    rec(rec, 0);

    PartitionPlan plan;
    plan.parts = best_blocks;
    for (std::uint64_t b : best_blocks)
        plan.kappa.push_back(kappa[static_cast<std::size_t>(b)]);
    plan.total_length = static_cast<int>(best_total);
    plan.min_field_size = best_need <= 2 ? 2 : next_prime_power(best_need);
    return plan;
}

Comparison compare_methods(const GroupcastProblem &p, int pm_limit) {
    Comparison c;
    ConstructionResult built = construction2(p);
    c.l_star = code_length(built.code);
    c.field_star = 2;
    PartitionPlan plan = partition_multicast_length(theorem4_convert(p), pm_limit);
    c.l_pm = plan.total_length;
    c.field_pm = plan.min_field_size;
    return c;
}

} // namespace icsol
