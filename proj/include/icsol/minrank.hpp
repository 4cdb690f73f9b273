#pragma once

#include <string>
#include <vector>

#include "icsol/cover.hpp"
#include "icsol/cycles.hpp"
#include "icsol/gf2.hpp"
#include "icsol/problem.hpp"

namespace icsol {

struct MinrankOptions {
    int free_cell_budget = 24; // max free cells searched after reduction
    int mais_limit = 20;       // max K for the exhaustive MAIS bound
    int workers = 1;           // accepted for CLI parity; search is deterministic
};

struct MinrankResult {
    int value = 0;
    Gf2Matrix certificate{0, 0}; // fits the original pattern, rank == value
    int mais_lower = 0;
    int cover_upper = 0;
    std::vector<std::string> reductions; // audit of strips / edge deletions
};

/// Maximum acyclic induced subgraph size (exhaustive, early exit).
int mais(const SideInfoGraph &g, int limit = 20);

/// Exact minrank over GF(2). Applies minrank-preserving reductions
/// (acyclic-vertex stripping, Theorem-2 edge deletion), then runs a
/// deterministic branch-and-bound over per-vertex fitting rows with
/// the clique-cover certificate as the incumbent and MAIS early exit.
MinrankResult minrank_exact(const SideInfoGraph &g, const MinrankOptions &opts = {});

struct StripResult {
    SideInfoGraph graph;       // induced subgraph on the kept vertices
    std::vector<int> kept;     // original ids of the reduced graph's vertices
    std::vector<int> stripped; // ascending; minrank(g) = minrank(graph) + |stripped|
};

/// Iteratively remove every vertex on no directed cycle.
StripResult strip_acyclic(const SideInfoGraph &g);

/// Theorem 2: for every clique pair found cycle-free (tested against
/// the progressively pruned graph, pairs in lexicographic order),
/// delete all edges between the pair. Minrank-preserving.
SideInfoGraph theorem2_reduce(const SideInfoGraph &g, const CliqueCover &cover,
                              std::vector<std::string> *audit = nullptr);

/// Construction-I result: super-vertices with their origin cliques.
struct ReducedGraph {
    SideInfoGraph graph{0};
    std::vector<Clique> origin; // origin[i] is super-vertex i's clique, by smallest member
};

/// Merge each clique into a super-vertex; super-edge (y_i, y_j) iff
/// all |C_i|*|C_j| cross edges exist. minrank(g) <= minrank(result).
ReducedGraph construction1_reduce(const SideInfoGraph &g, const CliqueCover &cover);

struct PipelineResult {
    ReducedGraph reduced;
    std::vector<std::string> audit;
    bool exact = false; // every clique pair cycle-free => minrank preserved
};

/// strip_acyclic -> component split -> algorithm1_cover ->
/// theorem2_reduce -> construction1_reduce, with an audit log.
/// Stripped vertices stay as isolated singleton super-vertices.
PipelineResult reduce_pipeline(const SideInfoGraph &g);

} // namespace icsol
