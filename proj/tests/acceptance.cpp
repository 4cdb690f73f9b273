// Acceptance harness: one pass/fail line per criterion, nonzero exit
// if any criterion fails. Each criterion carries a wall-clock limit.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "icsol/code.hpp"
#include "icsol/cover.hpp"
#include "icsol/groupcast.hpp"
#include "icsol/io.hpp"
#include "icsol/minrank.hpp"

using namespace icsol;

namespace {

struct Criterion {
    int number;
    double limit_seconds;
    std::function<void(std::ostream &)> body; // writes failure details
};

void expect(std::ostream &fail, bool ok, const std::string &what) {
    if (!ok)
        fail << "  check failed: " << what << "\n";
}

SideInfoGraph induced(const SideInfoGraph &g, const std::vector<int> &vs) {
    SideInfoGraph out(static_cast<int>(vs.size()));
    for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = 0; b < vs.size(); ++b)
            if (a != b && g.has_edge(vs[a], vs[b]))
                out.add_edge(static_cast<int>(a), static_cast<int>(b));
    return out;
}

// remove every edge incident to the masked vertices, optionally
// keeping edges internal to the mask (clique isolation)
SideInfoGraph isolate(const SideInfoGraph &g, std::uint64_t mask, bool keep_internal) {
    SideInfoGraph out(g.vertex_count());
    for (auto [i, j] : g.edges()) {
        bool ti = (mask >> i) & 1, tj = (mask >> j) & 1;
        if ((!ti && !tj) || (keep_internal && ti && tj))
            out.add_edge(i, j);
    }
    return out;
}

int exact(const SideInfoGraph &g) {
    MinrankOptions opts;
    opts.free_cell_budget = 64;
    return minrank_exact(g, opts).value;
}

// --- criterion 1: groupcast-to-unicast conversion ---------------------

void criterion1(std::ostream &fail) {
    GroupcastProblem conv = theorem4_convert(testutil::load_groupcast("table1.icp"));
    expect(fail, conv.is_single_unicast(), "converted problem is single-unicast");
    std::vector<std::vector<int>> want(7);
    for (const Receiver &r : conv.receivers())
        want[static_cast<std::size_t>(mask_to_list(r.wants).front())] = mask_to_list(r.knows);
    const std::vector<std::vector<int>> expected = {
        {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {6}, {0, 1}};
    for (int k = 0; k < 7; ++k) {
        std::ostringstream what;
        what << "derived side-information of x" << k + 1;
        expect(fail, want[static_cast<std::size_t>(k)] == expected[static_cast<std::size_t>(k)],
               what.str());
    }
}

// --- criterion 2: construction II on the groupcast fixture ------------

void criterion2(std::ostream &fail) {
    ConstructionResult res = construction2(testutil::load_groupcast("table1.icp"));
    expect(fail, res.report.overall, "code decodes for every original receiver");
    expect(fail, code_length(res.code) == 4, "code length is 4");
    std::vector<std::vector<int>> got;
    for (const Gf2Vector &s : res.code.symbols)
        got.push_back(s.support());
    std::sort(got.begin(), got.end());
    std::vector<std::vector<int>> expected = {{0, 1, 2}, {2, 3, 4}, {3, 4, 5}, {5, 6}};
    std::sort(expected.begin(), expected.end());
    expect(fail, got == expected, "symbol set is {x1+x2+x3, x3+x4+x5, x4+x5+x6, x6+x7}");
}

// --- criterion 3: six-row comparison table -----------------------------

void criterion3(std::ostream &fail) {
    const int l_star[6] = {3, 5, 4, 6, 6, 6};
    const int l_pm[6] = {4, 7, 5, 9, 8, 7};
    const int field_pm[6] = {2, 2, 2, 2, 13, 11};
    for (int row = 1; row <= 6; ++row) {
        std::string stem = "table4_row" + std::to_string(row);
        GroupcastProblem p = testutil::load_groupcast(stem + ".icp");
        IndexCode code =
            parse_code(testutil::read_text(testutil::fixture_path(stem + ".code")),
                       p.message_count());
        std::ostringstream tag;
        tag << "row " << row;
        expect(fail, code_length(code) == l_star[row - 1], tag.str() + ": code length");
        expect(fail, verify_decodable(code, p).overall, tag.str() + ": code decodes");
        if (p.message_count() <= 12) {
            PartitionPlan plan = partition_multicast_length(theorem4_convert(p));
            expect(fail, plan.total_length == l_pm[row - 1],
                   tag.str() + ": partition-multicast length");
            expect(fail, plan.min_field_size == field_pm[row - 1],
                   tag.str() + ": partition-multicast field size");
        }
    }
}

// --- criterion 4: printed power-sum matrix and vertex strip ------------

void criterion4(std::ostream &fail) {
    SideInfoGraph g = testutil::load_graph("section2_example.icg");
    // five entries of the printed matrix disagree with the walk counts
    // of the printed adjacency matrix; the recomputed values are used
    const int printed[7][7] = {
        {6, 7, 10, 6, 7, 16, 17}, {3, 3, 6, 7, 3, 7, 8}, {0, 0, 0, 0, 0, 3, 4},
        {7, 3, 6, 6, 3, 11, 13}, {3, 3, 7, 7, 3, 14, 14}, {0, 0, 0, 0, 0, 3, 4},
        {0, 0, 0, 0, 0, 4, 3}};
    IntMatrix s = adjacency_power_sum(g, 7, 1);
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) {
            std::ostringstream what;
            what << "power-sum entry (" << i + 1 << "," << j + 1 << ")";
            expect(fail,
                   s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == printed[i][j],
                   what.str());
        }
    expect(fail, s[2][2] == 0, "diagonal zero at (3,3)");

    StripResult strip = strip_acyclic(g);
    expect(fail, strip.stripped == std::vector<int>{2}, "strip removes exactly x3");
    expect(fail, exact(g) == exact(strip.graph) + 1, "minrank drops by exactly one");
}

// --- criterion 5: fifteen-vertex appendix reproduction -----------------

void criterion5(std::ostream &fail) {
    SideInfoGraph g = testutil::load_graph("appendix15.icg");
    FittingPattern pat = FittingPattern::from_graph(g);
    struct Entry {
        bool row;
        int i, j, d;
    };
    // three of the printed values are arithmetically inconsistent with
    // the printed fitting matrix; the recomputed values are used here
    // (12 for rows 4,5; 14 for columns 2,3; 10 for columns 4,5)
    const std::vector<Entry> finite = {
        {true, 1, 2, 9}, {true, 1, 3, 9}, {true, 2, 3, 8},  {true, 2, 4, 7},
        {true, 3, 5, 7}, {true, 4, 5, 12}, {false, 1, 2, 8}, {false, 1, 3, 8},
        {false, 2, 3, 14}, {false, 2, 4, 7}, {false, 3, 5, 7}, {false, 4, 5, 10}};
    for (const Entry &e : finite) {
        auto d = e.row ? row_distance(pat, e.i - 1, e.j - 1) : col_distance(pat, e.i - 1, e.j - 1);
        std::ostringstream what;
        what << (e.row ? "d_r(" : "d_c(") << e.i << "," << e.j << ") == " << e.d;
        expect(fail, d.has_value() && *d == e.d, what.str());
    }

    auto has = [](const CliqueCover &c, std::vector<int> vs) {
        std::sort(vs.begin(), vs.end());
        for (const Clique &cl : c.cliques)
            if (cl.vertices == vs)
                return true;
        return false;
    };
    CliqueCover eldg = eldg_cover(g);
    expect(fail, has(eldg, {1, 3}), "ELDG merges rows 2 and 4");
    expect(fail, has(eldg, {2, 4}), "ELDG merges rows 3 and 5");
    expect(fail, cover_code_length(eldg) == 13, "ELDG cover length 13");

    CliqueCover a1 = algorithm1_cover(g);
    expect(fail, has(a1, {0, 1, 2}), "algorithm 1 finds {x1,x2,x3}");
    expect(fail, has(a1, {3, 4}), "algorithm 1 finds {x4,x5}");
    expect(fail, cover_code_length(a1) == 12, "algorithm 1 cover length 12");
}

// --- criterion 6: oracle property suite --------------------------------

void criterion6(std::ostream &fail) {
    std::mt19937 rng(6001);
    const double probs[3] = {0.2, 0.4, 0.6};
    std::uniform_int_distribution<int> ksize(2, 8);
    for (int t = 0; t < 200; ++t) {
        SideInfoGraph g = testutil::random_graph(rng, ksize(rng), probs[t % 3]);
        int mr = exact(g);
        int lower = mais(g);
        int upper = cover_code_length(algorithm1_cover(g));
        expect(fail, lower <= mr && mr <= upper, "minrank within [mais, cover]");

        SideInfoGraph reduced = theorem2_reduce(g, algorithm1_cover(g));
        expect(fail, exact(reduced) == mr, "theorem-2 reduction preserves minrank");

        GroupcastProblem p = testutil::problem_from_graph(g);
        ConstructionResult res = construction2(p);
        expect(fail, res.report.overall, "construction II code decodes");
        expect(fail, code_length(res.code) >= mr, "construction II length >= minrank");
    }

    Clique ci({0, 1, 2}), cj({3, 4});
    expect(fail, !cycle_free_pair(testutil::load_graph("ex3_g1.icg"), ci, cj).cycle_free,
           "first example pair is not cycle-free");
    expect(fail, cycle_free_pair(testutil::load_graph("ex3_g2.icg"), ci, cj).cycle_free,
           "second example pair is cycle-free");
    expect(fail, cycle_free_pair(testutil::load_graph("ex3_g3.icg"), ci, cj).cycle_free,
           "third example pair is cycle-free");
}

// --- criterion 7: isolation and sandwich lemmas -------------------------

void criterion7(std::ostream &fail) {
    std::mt19937 rng(7001);
    std::uniform_int_distribution<int> ksize(3, 8);
    std::uniform_real_distribution<double> prob(0.15, 0.6);
    for (int t = 0; t < 100; ++t) {
        int k = ksize(rng);
        SideInfoGraph g = testutil::random_graph(rng, k, prob(rng));
        int mr = exact(g);

        // vertex isolation: minrank grows by at most one
        std::uniform_int_distribution<int> pick(0, k - 1);
        int v = pick(rng);
        int iso = exact(isolate(g, bit(v), false));
        expect(fail, iso >= mr && iso <= mr + 1, "vertex isolation adds at most 1");

        // clique isolation: keep the clique's internal edges
        CliqueCover cover = algorithm1_cover(g);
        std::uniform_int_distribution<int> cpick(0, static_cast<int>(cover.cliques.size()) - 1);
        const Clique &cl = cover.cliques[static_cast<std::size_t>(cpick(rng))];
        int ciso = exact(isolate(g, cl.mask(), true));
        expect(fail, ciso >= mr && ciso <= mr + 1, "clique isolation adds at most 1");

        // tri-partition sandwich: split into thirds, drop G1<->G3 edges
        std::vector<int> g1, g2, g3;
        for (int u = 0; u < k; ++u)
            (u % 3 == 0 ? g1 : u % 3 == 1 ? g2 : g3).push_back(u);
        SideInfoGraph tri(k);
        auto part_of = [&](int u) { return u % 3; };
        for (auto [i, j] : g.edges())
            if (!((part_of(i) == 0 && part_of(j) == 2) || (part_of(i) == 2 && part_of(j) == 0)))
                tri.add_edge(i, j);
        int whole = exact(tri);
        int m1 = exact(induced(tri, g1));
        int m2 = g2.empty() ? 0 : exact(induced(tri, g2));
        int m3 = g3.empty() ? 0 : exact(induced(tri, g3));
        expect(fail, m1 + m3 <= whole, "tri-partition lower bound");
        expect(fail, whole <= m1 + m2 + m3, "tri-partition upper bound");
    }
}

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, 1.0, criterion1},  {2, 5.0, criterion2},   {3, 300.0, criterion3},
        {4, 1.0, criterion4},  {5, 1.0, criterion5},   {6, 120.0, criterion6},
        {7, 120.0, criterion7}};
    bool all_ok = true;
    for (const Criterion &c : criteria) {
        std::ostringstream detail;
        auto start = std::chrono::steady_clock::now();
        try {
            c.body(detail);
        } catch (const std::exception &e) {
            detail << "  exception: " << e.what() << "\n";
        }
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds > c.limit_seconds)
            detail << "  runtime " << seconds << "s exceeds " << c.limit_seconds << "s\n";
        bool ok = detail.str().empty();
        all_ok = all_ok && ok;
        std::cout << "criterion " << c.number << ": " << (ok ? "PASS" : "FAIL") << "\n";
        if (!ok)
            std::cerr << "criterion " << c.number << " details:\n" << detail.str();
    }
    return all_ok ? 0 : 1;
}
