// icsol: index-coding solver CLI
//
// Commands: convert, graph, reduce, cover, minrank, construct, verify,
// pm-baseline, compare. Exit codes: 0 success, 1 domain error (bad
// input data, budget exceeded, failed verification), 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "icsol/cover.hpp"
#include "icsol/errors.hpp"
#include "icsol/groupcast.hpp"
#include "icsol/io.hpp"
#include "icsol/minrank.hpp"

namespace {

struct RunConfig {
    std::string input;
    std::string code_path;
    int budget = 24;
    int mais_limit = 20;
    int pm_limit = 12;
    std::string format = "machine";
    int workers = 1;
    std::string method = "algo1"; // cover heuristic
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw icsol::ParseError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

icsol::ParsedInstance load_instance(const RunConfig &cfg) {
    icsol::ParsedInstance inst = icsol::parse_instance(read_file(cfg.input));
    for (const std::string &w : inst.warnings)
        std::cerr << "warning: " << w << "\n";
    return inst;
}

icsol::GroupcastProblem need_groupcast(const icsol::ParsedInstance &inst) {
    if (!inst.groupcast)
        throw icsol::StructureError("this command needs a groupcast instance (.icp)");
    return *inst.groupcast;
}

// accept a unicast graph directly, or convert a groupcast instance
icsol::SideInfoGraph need_graph(const icsol::ParsedInstance &inst) {
    if (inst.graph)
        return *inst.graph;
    return icsol::to_graph(icsol::theorem4_convert(*inst.groupcast));
}

int run(const std::string &command, const RunConfig &cfg) {
    bool machine = cfg.format == "machine";
    icsol::ParsedInstance inst = load_instance(cfg);

    if (command == "convert") {
        icsol::GroupcastProblem conv = icsol::theorem4_convert(need_groupcast(inst));
        if (machine) {
            std::cout << "K=" << conv.message_count() << "\n";
            for (const icsol::Receiver &r : conv.receivers()) {
                std::cout << "ktilde_" << icsol::mask_to_list(r.wants).front() + 1 << "=";
                bool first = true;
                for (int j : icsol::mask_to_list(r.knows)) {
                    std::cout << (first ? "" : ",") << j + 1;
                    first = false;
                }
                std::cout << "\n";
            }
        } else {
            std::cout << icsol::serialize_instance(conv);
        }
        return 0;
    }

    if (command == "graph") {
        std::cout << icsol::serialize_instance(need_graph(inst));
        return 0;
    }

    if (command == "reduce") {
        icsol::PipelineResult pipe = icsol::reduce_pipeline(need_graph(inst));
        for (const std::string &line : pipe.audit)
            std::cout << line << "\n";
        std::cout << "exact=" << (pipe.exact ? "true" : "false") << "\n";
        std::cout << "vertices=" << pipe.reduced.graph.vertex_count() << "\n";
        for (std::size_t i = 0; i < pipe.reduced.origin.size(); ++i) {
            std::cout << "origin y" << i + 1 << "=";
            bool first = true;
            for (int v : pipe.reduced.origin[i].vertices) {
                std::cout << (first ? "" : ",") << v + 1;
                first = false;
            }
            std::cout << "\n";
        }
        for (auto [i, j] : pipe.reduced.graph.edges())
            std::cout << "edge " << i + 1 << " " << j + 1 << "\n";
        return 0;
    }

    if (command == "cover") {
        icsol::SideInfoGraph g = need_graph(inst);
        icsol::CliqueCover cover;
        if (cfg.method == "algo1")
            cover = icsol::algorithm1_cover(g);
        else if (cfg.method == "ldg")
            cover = icsol::ldg_cover(g);
        else if (cfg.method == "eldg")
            cover = icsol::eldg_cover(g);
        else
            throw CLI::ValidationError("--method must be algo1, ldg, or eldg");
        std::cout << icsol::cover_report(cover);
        std::cout << "length=" << icsol::cover_code_length(cover) << "\n";
        return 0;
    }

    if (command == "minrank") {
        icsol::MinrankOptions opts{cfg.budget, cfg.mais_limit, cfg.workers};
        icsol::MinrankResult res = icsol::minrank_exact(need_graph(inst), opts);
        std::cout << "minrank=" << res.value << "\n";
        std::cout << "mais=" << res.mais_lower << "\n";
        std::cout << "cover=" << res.cover_upper << "\n";
        if (!machine) {
            for (const std::string &line : res.reductions)
                std::cout << line << "\n";
            for (int i = 0; i < res.certificate.nrows(); ++i) {
                std::cout << "row " << i + 1 << ":";
                for (int j : res.certificate.row(i).support())
                    std::cout << " " << j + 1;
                std::cout << "\n";
            }
        }
        return 0;
    }

    if (command == "construct") {
        icsol::ConstructionResult res = icsol::construction2(need_groupcast(inst));
        std::cout << icsol::serialize_code(res.code);
        std::cout << "length=" << icsol::code_length(res.code) << "\n";
        std::cout << "overall=" << (res.report.overall ? "true" : "false") << "\n";
        return res.report.overall ? 0 : 1;
    }

    if (command == "verify") {
        if (cfg.code_path.empty())
            throw CLI::ValidationError("verify requires --code <path>");
        icsol::GroupcastProblem p = need_groupcast(inst);
        icsol::IndexCode code = icsol::parse_code(read_file(cfg.code_path), p.message_count());
        icsol::DecodabilityReport report = icsol::verify_decodable(code, p);
        for (const icsol::Verdict &v : report.verdicts)
            std::cout << "verdict r=" << v.receiver_id << " m=x" << v.message + 1
                      << " ok=" << (v.decodable ? "true" : "false") << "\n";
        std::cout << "overall=" << (report.overall ? "true" : "false") << "\n";
        return report.overall ? 0 : 1;
    }

    if (command == "pm-baseline") {
        icsol::PartitionPlan plan = icsol::partition_multicast_length(
            icsol::theorem4_convert(need_groupcast(inst)), cfg.pm_limit);
        for (std::size_t i = 0; i < plan.parts.size(); ++i) {
            std::cout << "part=";
            bool first = true;
            for (int v : icsol::mask_to_list(plan.parts[i])) {
                std::cout << (first ? "" : ",") << v + 1;
                first = false;
            }
            std::cout << " kappa=" << plan.kappa[i] << "\n";
        }
        std::cout << "l_pm=" << plan.total_length << " field_pm=" << plan.min_field_size << "\n";
        return 0;
    }

    if (command == "compare") {
        icsol::Comparison c = icsol::compare_methods(need_groupcast(inst), cfg.pm_limit);
        if (machine) {
            std::cout << "l_star=" << c.l_star << " field_star=" << c.field_star
                      << " l_pm=" << c.l_pm << " field_pm=" << c.field_pm << "\n";
        } else {
            std::cout << "method          length  field\n";
            std::cout << "construction-2  " << c.l_star << "       " << c.field_star << "\n";
            std::cout << "partition-mc    " << c.l_pm << "       " << c.field_pm << "\n";
        }
        return 0;
    }

    throw CLI::ValidationError("unknown command: " + command);
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"icsol: binary index-code construction and minrank toolkit"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string command;
    for (const char *name : {"convert", "graph", "reduce", "cover", "minrank", "construct",
                             "verify", "pm-baseline", "compare"}) {
        CLI::App *sub = app.add_subcommand(name);
        sub->add_option("--input", cfg.input, "instance file (.icp or .icg)")->required();
        sub->add_option("--code", cfg.code_path, "index code file (.code)");
        sub->add_option("--budget", cfg.budget, "free-cell budget for exact minrank")
            ->check(CLI::PositiveNumber);
        sub->add_option("--mais-limit", cfg.mais_limit, "max K for the exhaustive MAIS bound")
            ->check(CLI::PositiveNumber);
        sub->add_option("--pm-limit", cfg.pm_limit, "max K for partition multicast")
            ->check(CLI::PositiveNumber);
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"text", "machine"}));
        sub->add_option("--workers", cfg.workers, "worker count (results are identical)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--method", cfg.method, "cover heuristic: algo1, ldg, eldg")
            ->check(CLI::IsMember({"algo1", "ldg", "eldg"}));
        sub->callback([&command, name]() { command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        return run(command, cfg);
    } catch (const CLI::ValidationError &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
