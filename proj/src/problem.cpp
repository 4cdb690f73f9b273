#include "icsol/problem.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "icsol/errors.hpp"

namespace icsol {

std::uint64_t mask_from(const std::vector<int> &indices) {
    std::uint64_t m = 0;
    for (int i : indices)
        m |= bit(i);
    return m;
}

std::vector<int> mask_to_list(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

GroupcastProblem::GroupcastProblem(int message_count, std::vector<Receiver> receivers)
    : k_(message_count), recv_(std::move(receivers)) {
    if (k_ < 1 || k_ > 64)
        throw StructureError("message count must be in [1, 64]");
    std::uint64_t all = (k_ == 64) ? ~std::uint64_t{0} : bit(k_) - 1;
    demand_.assign(static_cast<std::size_t>(k_), {});
    for (std::size_t r = 0; r < recv_.size(); ++r) {
        const Receiver &rec = recv_[r];
        if (rec.wants & ~all)
            throw StructureError("receiver " + std::to_string(rec.id) +
                                 ": want-set index out of range");
        if (rec.knows & ~all)
            throw StructureError("receiver " + std::to_string(rec.id) +
                                 ": side-information index out of range");
        if (rec.wants & rec.knows)
            throw StructureError("receiver " + std::to_string(rec.id) +
                                 ": want-set and side-information overlap");
        for (int k : mask_to_list(rec.wants))
            demand_[static_cast<std::size_t>(k)].push_back(static_cast<int>(r));
    }
}

std::vector<int> GroupcastProblem::unwanted_messages() const {
    std::vector<int> out;
    for (int k = 0; k < k_; ++k)
        if (demand_[static_cast<std::size_t>(k)].empty())
            out.push_back(k);
    return out;
}

bool GroupcastProblem::is_single_unicast() const {
    for (const Receiver &r : recv_)
        if (std::popcount(r.wants) != 1)
            return false;
    for (const auto &d : demand_)
        if (d.size() != 1)
            return false;
    return true;
}

SideInfoGraph::SideInfoGraph(int vertex_count) : k_(vertex_count) {
    if (k_ < 0 || k_ > 64)
        throw StructureError("vertex count must be in [0, 64]");
    out_.assign(static_cast<std::size_t>(k_), 0);
}

void SideInfoGraph::add_edge(int i, int j) {
    if (i < 0 || i >= k_ || j < 0 || j >= k_)
        throw StructureError("edge endpoint out of range");
    if (i == j)
        throw StructureError("self-loops are not allowed");
    out_[static_cast<std::size_t>(i)] |= bit(j);
}

void SideInfoGraph::remove_edge(int i, int j) {
    if (i < 0 || i >= k_ || j < 0 || j >= k_)
        throw StructureError("edge endpoint out of range");
    out_[static_cast<std::size_t>(i)] &= ~bit(j);
}

std::uint64_t SideInfoGraph::in_neighbors(int i) const {
    std::uint64_t m = 0;
    for (int v = 0; v < k_; ++v)
        if (has_edge(v, i))
            m |= bit(v);
    return m;
}

int SideInfoGraph::edge_count() const {
    int n = 0;
    for (std::uint64_t o : out_)
        n += std::popcount(o);
    return n;
}

std::vector<std::pair<int, int>> SideInfoGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < k_; ++i)
        for (int j : mask_to_list(out_[static_cast<std::size_t>(i)]))
            out.emplace_back(i, j);
    return out;
}

IntMatrix adjacency_power_sum(const SideInfoGraph &g, int n, int first) {
    if (n < 1)
        throw ArgumentError("power sum requires n >= 1");
    if (first < 0 || first > n)
        throw ArgumentError("first power must lie in [0, n]");
    const long long cap = 2147483647LL; // saturate; only zero-vs-nonzero matters downstream
    int k = g.vertex_count();
    auto zero = IntMatrix(static_cast<std::size_t>(k), std::vector<long long>(static_cast<std::size_t>(k), 0));
    IntMatrix a = zero;
    for (auto [i, j] : g.edges())
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
    IntMatrix power = zero; // A^0
    for (int i = 0; i < k; ++i)
        power[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    IntMatrix sum = zero;
    auto add_into = [&](IntMatrix &dst, const IntMatrix &src) {
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                long long &d = dst[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                d = std::min(cap, d + src[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
            }
    };
    for (int p = 0; p <= n; ++p) {
        if (p > 0) {
            IntMatrix next = zero;
            for (int i = 0; i < k; ++i)
                for (int l = 0; l < k; ++l) {
                    long long v = power[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)];
                    if (!v)
                        continue;
                    for (int j = 0; j < k; ++j) {
                        long long &d = next[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                        d = std::min(cap, d + v * a[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)]);
                    }
                }
            power = std::move(next);
        }
        if (p >= first)
            add_into(sum, power);
    }
    return sum;
}

Gf2Matrix hadamard_undirected(const SideInfoGraph &g) {
    int k = g.vertex_count();
    Gf2Matrix b(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && g.has_edge(i, j) && g.has_edge(j, i))
                b.set(i, j, true);
    return b;
}

FittingPattern FittingPattern::from_graph(const SideInfoGraph &g) {
    FittingPattern p(g.vertex_count());
    for (int i = 0; i < p.k_; ++i) {
        p.cells_[static_cast<std::size_t>(i * p.k_ + i)] = Fit::One;
        for (int j : mask_to_list(g.out_neighbors(i)))
            p.cells_[static_cast<std::size_t>(i * p.k_ + j)] = Fit::Free;
    }
    return p;
}

bool FittingPattern::matches(const Gf2Matrix &m) const {
    if (m.nrows() != k_ || m.ncols() != k_)
        return false;
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j) {
            Fit f = at(i, j);
            bool v = m.get(i, j);
            if ((f == Fit::One && !v) || (f == Fit::Zero && v))
                return false;
        }
    return true;
}

GroupcastProblem split_want_sets(const GroupcastProblem &p) {
    std::vector<Receiver> out;
    int next_id = 1;
    for (const Receiver &r : p.receivers())
        for (int k : mask_to_list(r.wants))
            out.push_back({next_id++, bit(k), r.knows});
    return {p.message_count(), std::move(out)};
}

SideInfoGraph to_graph(const GroupcastProblem &p) {
    int k = p.message_count();
    for (int m = 0; m < k; ++m) {
        std::size_t n = p.demand_index()[static_cast<std::size_t>(m)].size();
        if (n != 1)
            throw StructureError("not single-unicast: message " + std::to_string(m + 1) +
                                 " is wanted by " + std::to_string(n) + " receivers");
    }
    for (const Receiver &r : p.receivers())
        if (std::popcount(r.wants) != 1)
            throw StructureError("not single-unicast: receiver " + std::to_string(r.id) +
                                 " wants " + std::to_string(std::popcount(r.wants)) + " messages");
    SideInfoGraph g(k);
    for (int m = 0; m < k; ++m) {
        const Receiver &r = p.receivers()[static_cast<std::size_t>(
            p.demand_index()[static_cast<std::size_t>(m)].front())];
        for (int j : mask_to_list(r.knows))
            g.add_edge(m, j);
    }
    return g;
}

} // namespace icsol
