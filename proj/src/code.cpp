#include "icsol/code.hpp"

#include <algorithm>
#include <string>

#include "icsol/errors.hpp"

namespace icsol {

namespace {

std::string symbol_name(const Gf2Vector &v) {
    std::string out;
    for (int i : v.support()) {
        if (!out.empty())
            out += '+';
        out += 'x' + std::to_string(i + 1);
    }
    return out;
}

} // namespace

IndexCode build_code(const ReducedGraph &r, const CycleCover &cycles,
                     std::vector<std::string> *warnings) {
    int t = r.graph.vertex_count();
    if (static_cast<int>(r.origin.size()) != t)
        throw StructureError("reduced graph origin map size mismatch");
    int k = 0;
    for (const Clique &c : r.origin)
        k = std::max(k, c.vertices.back() + 1);

    auto check = [t](int v) {
        if (v < 0 || v >= t)
            throw StructureError("cycle cover references unknown vertex " + std::to_string(v + 1));
    };
    auto lift = [&](int super) {
        Gf2Vector v(k);
        for (int m : r.origin[static_cast<std::size_t>(super)].vertices)
            v.set(m, true);
        return v;
    };

    // canonical order: cycles by smallest origin member, each rotated
    // to start at its smallest vertex; then uncovered ascending
    std::vector<DirectedCycle> ordered = cycles.cycles;
    for (DirectedCycle &c : ordered) {
        for (int v : c.vertices)
            check(v);
        auto it = std::min_element(c.vertices.begin(), c.vertices.end());
        std::rotate(c.vertices.begin(), it, c.vertices.end());
    }
    std::sort(ordered.begin(), ordered.end(), [](const DirectedCycle &a, const DirectedCycle &b) {
        return a.vertices.front() < b.vertices.front();
    });

    IndexCode code;
    code.message_count = k;
    auto push = [&](Gf2Vector v) {
        if (v.is_zero())
            throw StructureError("constructed a zero code symbol");
        if (std::find(code.symbols.begin(), code.symbols.end(), v) != code.symbols.end()) {
            if (warnings)
                warnings->push_back("duplicate symbol " + symbol_name(v) + " dropped");
            return;
        }
        code.symbols.push_back(std::move(v));
    };
    for (const DirectedCycle &c : ordered)
        for (std::size_t i = 0; i + 1 < c.vertices.size(); ++i)
            push(lift(c.vertices[i]) ^ lift(c.vertices[i + 1]));
    for (int v : cycles.uncovered) {
        check(v);
        push(lift(v));
    }
    return code;
}

IndexCode clique_code(int message_count, const std::vector<Clique> &cliques) {
    IndexCode code;
    code.message_count = message_count;
    for (const Clique &c : cliques) {
        Gf2Vector v(message_count);
        for (int m : c.vertices)
            v.set(m, true);
        code.symbols.push_back(std::move(v));
    }
    return code;
}

DecodabilityReport verify_decodable(const IndexCode &code, const GroupcastProblem &p) {
    if (code.message_count != p.message_count())
        throw ArgumentError("code and problem have different message counts");
    int k = p.message_count();
    DecodabilityReport report;
    report.overall = true;
    for (const Receiver &r : p.receivers()) {
        std::vector<Gf2Vector> basis = code.symbols;
        for (int j : mask_to_list(r.knows))
            basis.push_back(Gf2Vector::unit(k, j));
        for (int w : mask_to_list(r.wants)) {
            bool ok = in_span(Gf2Vector::unit(k, w), basis);
            report.verdicts.push_back({r.id, w, ok});
            report.overall &= ok;
        }
    }
    return report;
}

} // namespace icsol
