#pragma once

#include <optional>
#include <string>
#include <vector>

#include "icsol/cycles.hpp"
#include "icsol/problem.hpp"

namespace icsol {

/// Partition of the vertex set into cliques, ordered by smallest member.
struct CliqueCover {
    std::vector<Clique> cliques;
    int size() const { return static_cast<int>(cliques.size()); }
};

/// Throws StructureError unless the cover partitions V(g) into valid cliques.
void validate_cover(const CliqueCover &c, const SideInfoGraph &g);

/// Hadamard-merging heuristic: iterate B = A^T o A, sort rows by
/// ascending B-row Hamming weight, pair greedily, merge rows and
/// columns by element-wise AND, drop zero-weight rows, repeat.
CliqueCover algorithm1_cover(const SideInfoGraph &g);

/// Least-difference greedy: repeatedly merge the vertex-group pair of
/// minimum finite inter-row distance on the (contracted) fitting pattern.
CliqueCover ldg_cover(const SideInfoGraph &g);

/// Extended LDG: considers both row and column distances each step;
/// ties prefer rows, then the lexicographically smallest pair.
CliqueCover eldg_cover(const SideInfoGraph &g);

/// One XOR symbol per clique: an upper bound on minrank.
int cover_code_length(const CliqueCover &c);

/// Inter-entry distances on a fitting pattern; nullopt means infinity.
/// d(0,0)=d(1,1)=d(*,*)=0, d(0,*)=d(1,*)=1, d(0,1)=inf; a row/column
/// distance is the infinity-absorbing sum over entries.
std::optional<int> row_distance(const FittingPattern &p, int i, int j);
std::optional<int> col_distance(const FittingPattern &p, int i, int j);

/// "clique: x1 x2 x3" lines: members ascending, cliques by smallest member.
std::string cover_report(const CliqueCover &c);

} // namespace icsol
