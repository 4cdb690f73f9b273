#pragma once

#include <optional>
#include <string>
#include <vector>

#include "icsol/code.hpp"
#include "icsol/problem.hpp"

namespace icsol {

/// Result of parsing an instance file: exactly one of the two payloads
/// is present, depending on the `problem` header line.
struct ParsedInstance {
    std::optional<GroupcastProblem> groupcast;
    std::optional<SideInfoGraph> graph;
    std::vector<std::string> warnings;
};

/// Line-oriented instance format, '#' comments:
///   problem groupcast | unicast-graph
///   messages <K>
///   receiver <id> wants <i...> knows <j...>   (groupcast body)
///   edge <i> <j>                              (unicast-graph body)
/// Indices in files are 1-based; the in-memory model is 0-based.
ParsedInstance parse_instance(const std::string &text);

std::string serialize_instance(const GroupcastProblem &p);
std::string serialize_instance(const SideInfoGraph &g);

/// Code text: one symbol per line, e.g. "x1+x2+x3".
IndexCode parse_code(const std::string &text, int message_count);
std::string serialize_code(const IndexCode &code);

} // namespace icsol
