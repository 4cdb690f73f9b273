#pragma once

#include <string>
#include <vector>

#include "icsol/cycles.hpp"
#include "icsol/gf2.hpp"
#include "icsol/minrank.hpp"
#include "icsol/problem.hpp"

namespace icsol {

/// A scalar linear index code: each symbol is the XOR of the messages
/// in its support.
struct IndexCode {
    int message_count = 0;
    std::vector<Gf2Vector> symbols;
};

inline int code_length(const IndexCode &code) { return static_cast<int>(code.symbols.size()); }

/// Build the code for a reduced graph from its cycle cover: a cycle
/// v_1..v_k contributes v_1+v_2, ..., v_{k-1}+v_k; uncovered vertices
/// are sent alone. Super-vertices are lifted to the XOR of their
/// origin clique. Duplicates after lifting are dropped with a warning.
IndexCode build_code(const ReducedGraph &r, const CycleCover &cycles,
                     std::vector<std::string> *warnings = nullptr);

/// One XOR symbol per clique (always decodable for the covered problem).
IndexCode clique_code(int message_count, const std::vector<Clique> &cliques);

struct Verdict {
    int receiver_id = 0;
    int message = 0; // 0-indexed
    bool decodable = false;
};

struct DecodabilityReport {
    std::vector<Verdict> verdicts;
    bool overall = false;
};

/// Per receiver and wanted message w: decodable iff e_w lies in the
/// GF(2) span of the code symbols and the receiver's side-information
/// unit vectors.
DecodabilityReport verify_decodable(const IndexCode &code, const GroupcastProblem &p);

} // namespace icsol
