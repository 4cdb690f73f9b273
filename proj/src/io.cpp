#include "icsol/io.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "icsol/errors.hpp"

namespace icsol {

namespace {

std::vector<std::string> tokenize(const std::string &line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream ss(body);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t)
        toks.push_back(t);
    return toks;
}

[[noreturn]] void fail(int line_no, const std::string &msg) {
    throw ParseError("line " + std::to_string(line_no) + ": " + msg);
}

int parse_int(const std::string &tok, int line_no) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size())
            fail(line_no, "invalid integer '" + tok + "'");
        return v;
    } catch (const ParseError &) {
        throw;
    } catch (...) {
        fail(line_no, "invalid integer '" + tok + "'");
    }
}

int parse_index(const std::string &tok, int k, int line_no) {
    int v = parse_int(tok, line_no);
    if (v < 1 || v > k)
        fail(line_no, "index " + tok + " out of range [1.." + std::to_string(k) + "]");
    return v - 1;
}

} // namespace

ParsedInstance parse_instance(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    auto next_tokens = [&](std::vector<std::string> &toks) {
        while (std::getline(in, line)) {
            ++line_no;
            toks = tokenize(line);
            if (!toks.empty())
                return true;
        }
        return false;
    };

    std::vector<std::string> toks;
    if (!next_tokens(toks))
        throw ParseError("line 1: missing 'problem' header");
    if (toks.size() != 2 || toks[0] != "problem" ||
        (toks[1] != "groupcast" && toks[1] != "unicast-graph"))
        fail(line_no, "expected 'problem groupcast' or 'problem unicast-graph'");
    bool groupcast = toks[1] == "groupcast";

    if (!next_tokens(toks))
        throw ParseError("line " + std::to_string(line_no + 1) + ": missing 'messages <K>'");
    if (toks.size() != 2 || toks[0] != "messages")
        fail(line_no, "expected 'messages <K>'");
    int k = parse_int(toks[1], line_no);
    if (k < 1 || k > 64)
        fail(line_no, "message count must be in [1, 64]");

    ParsedInstance out;
    if (groupcast) {
        std::vector<Receiver> receivers;
        std::set<int> seen_ids;
        while (next_tokens(toks)) {
            if (toks[0] != "receiver")
                fail(line_no, "expected 'receiver ...'");
            if (toks.size() < 4 || toks[2] != "wants")
                fail(line_no, "expected 'receiver <id> wants <i...> knows <j...>'");
            Receiver r;
            r.id = parse_int(toks[1], line_no);
            if (!seen_ids.insert(r.id).second)
                fail(line_no, "duplicate receiver id " + toks[1]);
            std::size_t pos = 3;
            while (pos < toks.size() && toks[pos] != "knows")
                r.wants |= bit(parse_index(toks[pos++], k, line_no));
            if (pos >= toks.size())
                fail(line_no, "missing 'knows' keyword");
            ++pos; // skip "knows"; the list may be empty
            while (pos < toks.size())
                r.knows |= bit(parse_index(toks[pos++], k, line_no));
            if (r.wants == 0)
                fail(line_no, "receiver " + toks[1] + " wants nothing");
            if (r.wants & r.knows)
                fail(line_no, "receiver " + toks[1] + ": want/know overlap");
            receivers.push_back(r);
        }
        if (receivers.empty())
            out.warnings.push_back("instance has no receivers");
        GroupcastProblem p(k, std::move(receivers));
        for (int m : p.unwanted_messages())
            out.warnings.push_back("message " + std::to_string(m + 1) + " is wanted by no receiver");
        out.groupcast = std::move(p);
    } else {
        SideInfoGraph g(k);
        while (next_tokens(toks)) {
            if (toks[0] != "edge" || toks.size() != 3)
                fail(line_no, "expected 'edge <i> <j>'");
            int i = parse_index(toks[1], k, line_no);
            int j = parse_index(toks[2], k, line_no);
            if (i == j)
                fail(line_no, "self-loop edge " + toks[1] + " " + toks[2]);
            g.add_edge(i, j);
        }
        out.graph = std::move(g);
    }
    return out;
}

std::string serialize_instance(const GroupcastProblem &p) {
    std::vector<Receiver> rs = p.receivers();
    std::sort(rs.begin(), rs.end(), [](const Receiver &a, const Receiver &b) { return a.id < b.id; });
    std::ostringstream out;
    out << "problem groupcast\n";
    out << "messages " << p.message_count() << "\n";
    for (const Receiver &r : rs) {
        out << "receiver " << r.id << " wants";
        for (int i : mask_to_list(r.wants))
            out << ' ' << i + 1;
        out << " knows";
        for (int j : mask_to_list(r.knows))
            out << ' ' << j + 1;
        out << "\n";
    }
    return out.str();
}

std::string serialize_instance(const SideInfoGraph &g) {
    std::ostringstream out;
    out << "problem unicast-graph\n";
    out << "messages " << g.vertex_count() << "\n";
    for (auto [i, j] : g.edges())
        out << "edge " << i + 1 << ' ' << j + 1 << "\n";
    return out.str();
}

IndexCode parse_code(const std::string &text, int message_count) {
    IndexCode code;
    code.message_count = message_count;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string body = line.substr(0, line.find('#'));
        // strip whitespace
        std::string sym;
        for (char c : body)
            if (!isspace(static_cast<unsigned char>(c)))
                sym += c;
        if (sym.empty())
            continue;
        Gf2Vector v(message_count);
        std::size_t pos = 0;
        while (pos < sym.size()) {
            if (sym[pos] != 'x')
                fail(line_no, "expected message term like 'x3'");
            ++pos;
            std::size_t start = pos;
            while (pos < sym.size() && isdigit(static_cast<unsigned char>(sym[pos])))
                ++pos;
            if (start == pos)
                fail(line_no, "missing message number after 'x'");
            int idx = parse_index(sym.substr(start, pos - start), message_count, line_no);
            if (v.get(idx))
                fail(line_no, "repeated term x" + std::to_string(idx + 1));
            v.set(idx, true);
            if (pos < sym.size()) {
                if (sym[pos] != '+')
                    fail(line_no, "expected '+' between terms");
                ++pos;
                if (pos == sym.size())
                    fail(line_no, "trailing '+'");
            }
        }
        code.symbols.push_back(v);
    }
    return code;
}

std::string serialize_code(const IndexCode &code) {
    std::ostringstream out;
    for (const Gf2Vector &s : code.symbols) {
        bool first = true;
        for (int i : s.support()) {
            if (!first)
                out << '+';
            out << 'x' << i + 1;
            first = false;
        }
        out << "\n";
    }
    return out.str();
}

} // namespace icsol
