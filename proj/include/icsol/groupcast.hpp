#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "icsol/code.hpp"
#include "icsol/minrank.hpp"
#include "icsol/problem.hpp"

namespace icsol {

/// Theorem 4: one receiver per wanted message k, knowing the
/// intersection of the side-information of all receivers wanting k.
/// Messages wanted by nobody get no receiver.
GroupcastProblem theorem4_convert(const GroupcastProblem &p);

struct ConstructionResult {
    IndexCode code;
    DecodabilityReport report; // against the original groupcast problem
    std::vector<std::string> audit;
    bool used_fallback = false;
};

/// Construction II: convert -> graph -> reduce -> greedy cycle cover
/// -> build -> verify against the original problem; falls back to the
/// clique-cover code if verification fails.
ConstructionResult construction2(const GroupcastProblem &p);

struct PartitionPlan {
    std::vector<std::uint64_t> parts; // disjoint message masks covering [0..K)
    std::vector<int> kappa;           // per part
    int total_length = 0;             // sum of kappa+1 over relevant parts
    int min_field_size = 2;
};

/// Exhaustive partition-multicast baseline over all set partitions of
/// the messages (restricted-growth-string enumeration). A part P costs
/// kappa(P)+1 where kappa(P) = |P|-1 - min over receivers wanting
/// something in P of |K_j intersect P|.
PartitionPlan partition_multicast_length(const GroupcastProblem &p, int limit = 12);

struct Comparison {
    int l_star = 0;
    int field_star = 2; // Construction II works over GF(2)
    int l_pm = 0;
    int field_pm = 2;
};

Comparison compare_methods(const GroupcastProblem &p, int pm_limit = 12);

} // namespace icsol
