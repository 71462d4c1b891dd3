// Command-line front end: enumeration, generator construction, degreewise
// verification and point location, with plain-table and JSON output.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ciax/fiber.hpp"
#include "ciax/graph.hpp"
#include "ciax/ideal.hpp"
#include "ciax/json_io.hpp"
#include "ciax/staircase.hpp"
#include "ciax/variety.hpp"
#include "ciax/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapExceeded = 3;

struct Options {
    bool json = false;
    std::size_t fiber_cap = ciax::kDefaultFiberCap;
};

ciax::Shape parse_shape(const std::string& text) {
    std::istringstream in(text);
    int r1 = 0, r2 = 0, r3 = 0;
    char c1 = 0, c2 = 0;
    if (!(in >> r1 >> c1 >> r2 >> c2 >> r3) || c1 != ',' || c2 != ',' ||
        !in.eof()) {
        throw std::invalid_argument("shape must be three comma-separated integers");
    }
    return ciax::Shape(r1, r2, r3);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::size_t fiber_cap_from_env() {
    const char* raw = std::getenv("CIAX_FIBER_CAP");
    if (!raw) return ciax::kDefaultFiberCap;
    char* end = nullptr;
    const unsigned long long value = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0' || value == 0) {
        throw std::invalid_argument("CIAX_FIBER_CAP must be a positive integer");
    }
    return static_cast<std::size_t>(value);
}

int cmd_eta(int max, const Options& opt) {
    if (opt.json) {
        std::string out = "{";
        bool first = true;
        for (int p = 0; p <= max; ++p) {
            for (int q = 0; q <= max; ++q) {
                if (!first) out += ",";
                first = false;
                out += "\"" + std::to_string(p) + "," + std::to_string(q) + "\":\"" +
                       ciax::eta(p, q).get_str() + "\"";
            }
        }
        out += "}";
        std::cout << out << "\n";
        return kExitOk;
    }
    std::cout << "eta(p,q): admissible graphs on [p] + [q]\n";
    std::cout << "p\\q";
    for (int q = 0; q <= max; ++q) std::cout << "\t" << q;
    std::cout << "\n";
    for (int p = 0; p <= max; ++p) {
        std::cout << p;
        for (int q = 0; q <= max; ++q) {
            std::cout << "\t" << ciax::eta(p, q).get_str();
        }
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_enumerate(int r2, int r3, const Options& opt) {
    const auto graphs = ciax::enumerate_admissible(r2, r3);
    if (opt.json) {
        std::string out = "[";
        for (std::size_t t = 0; t < graphs.size(); ++t) {
            if (t) out += ",";
            out += ciax::to_json(graphs[t]);
        }
        out += "]";
        std::cout << out << "\n";
        return kExitOk;
    }
    std::cout << graphs.size() << " admissible graphs on [" << r2 << "] + [" << r3
              << "]\n";
    for (std::size_t t = 0; t < graphs.size(); ++t) {
        std::cout << t + 1 << ". " << to_string(graphs[t].graph()) << "   components "
                  << to_string(graphs[t]) << "\n";
    }
    return kExitOk;
}

int cmd_generators(const ciax::Shape& shape, const std::string& graph_file,
                   const Options& opt) {
    ciax::IdealPresentation ideal;
    if (graph_file.empty()) {
        ideal = ciax::generators_intersection_model(shape);
    } else {
        const ciax::AdmissibleGraph g = ciax::admissible_from_json(read_file(graph_file));
        if (g.left_size() != shape.r2 || g.right_size() != shape.r3) {
            throw std::invalid_argument("graph sizes do not match --shape");
        }
        ideal = ciax::generators_component(g, shape.r1);
    }
    if (opt.json) {
        std::cout << ciax::to_json(ideal) << "\n";
        return kExitOk;
    }
    std::cout << ideal.monomials.size() << " variable generators, "
              << ideal.binomials.size() << " binomial generators\n";
    for (const ciax::VarIndex& v : ideal.monomials) {
        std::cout << var_name(shape, v) << "\n";
    }
    for (const ciax::Binomial& b : ideal.binomials) {
        std::cout << to_string(b) << "\n";
    }
    return kExitOk;
}

int cmd_hilbert(const ciax::Shape& shape, long maxdeg, const Options& opt) {
    const ciax::IdealPresentation model = ciax::generators_intersection_model(shape);
    const auto degrees = ciax::multidegrees_up_to(shape, maxdeg);
    std::ostringstream json_rows;
    if (opt.json) json_rows << "[";
    bool first = true;
    if (!opt.json) {
        std::cout << "rows | slices | fiber | hilbert | initial\n";
    }
    for (const ciax::Multidegree& d : degrees) {
        const ciax::Fiber fiber = ciax::enumerate_fiber(shape, d, opt.fiber_cap);
        const std::size_t h = ciax::hilbert_value(model, d, opt.fiber_cap);
        const std::size_t init = fiber.points.size() - h;
        if (opt.json) {
            if (!first) json_rows << ",";
            first = false;
            json_rows << "{\"degree\":" << ciax::to_json(d) << ",\"fiber\":"
                      << fiber.points.size() << ",\"hilbert\":" << h
                      << ",\"initial\":" << init << "}";
            continue;
        }
        std::cout << "(";
        for (int i = 1; i <= shape.r1; ++i) {
            if (i > 1) std::cout << ",";
            std::cout << d.row(i).get_str();
        }
        std::cout << ") | (";
        for (int j = 1; j <= shape.r2; ++j) {
            for (int k = 1; k <= shape.r3; ++k) {
                if (j > 1 || k > 1) std::cout << ",";
                std::cout << d.slice(j, k).get_str();
            }
        }
        std::cout << ") | " << fiber.points.size() << " | " << h << " | " << init
                  << "\n";
    }
    if (opt.json) {
        json_rows << "]";
        std::cout << json_rows.str() << "\n";
    }
    return kExitOk;
}

int cmd_staircase(int rows, int cols, const Options& opt) {
    const auto paths = ciax::staircase_paths(rows, cols);
    if (opt.json) {
        std::string out = "[";
        for (std::size_t t = 0; t < paths.size(); ++t) {
            if (t) out += ",";
            out += "[";
            for (std::size_t c = 0; c < paths[t].cells.size(); ++c) {
                if (c) out += ",";
                out += "[" + std::to_string(paths[t].cells[c].first) + "," +
                       std::to_string(paths[t].cells[c].second) + "]";
            }
            out += "]";
        }
        out += "]";
        std::cout << out << "\n";
        return kExitOk;
    }
    std::cout << paths.size() << " staircase paths through a " << rows << "x" << cols
              << " matrix\n";
    for (const ciax::StaircasePath& path : paths) {
        bool first = true;
        for (const auto& [r, c] : path.cells) {
            if (!first) std::cout << " -> ";
            first = false;
            std::cout << "(" << r << "," << c << ")";
        }
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_decompose(const ciax::Shape& shape, const std::string& graph_file,
                  const Options& opt) {
    const ciax::AdmissibleGraph g = ciax::admissible_from_json(read_file(graph_file));
    if (g.left_size() != shape.r2 || g.right_size() != shape.r3) {
        throw std::invalid_argument("graph sizes do not match --shape");
    }
    const auto primes = ciax::sr_primary_decomposition(g, shape.r1);
    if (opt.json) {
        std::cout << ciax::to_json(primes) << "\n";
        return kExitOk;
    }
    std::cout << primes.size() << " primary components of the initial ideal\n";
    for (const ciax::MonomialPrime& prime : primes) {
        if (prime.variables.empty()) {
            std::cout << "(0)\n";
            continue;
        }
        std::cout << "(";
        for (std::size_t t = 0; t < prime.variables.size(); ++t) {
            if (t) std::cout << ", ";
            std::cout << var_name(shape, prime.variables[t]);
        }
        std::cout << ")\n";
    }
    return kExitOk;
}

int cmd_verify(const ciax::Shape& shape, std::optional<long> maxdeg,
               const std::string& checks_csv, unsigned long seed, const Options& opt) {
    std::vector<std::string> names;
    if (!checks_csv.empty()) {
        std::istringstream in(checks_csv);
        std::string name;
        while (std::getline(in, name, ',')) {
            if (!name.empty()) names.push_back(name);
        }
    }
    ciax::CheckOptions check_opt;
    check_opt.max_total_degree = maxdeg ? *maxdeg : ciax::default_degree_bound(shape);
    check_opt.seed = seed;
    check_opt.fiber_cap = opt.fiber_cap;

    const ciax::VerificationReport report = ciax::run_checks(shape, names, check_opt);
    if (opt.json) {
        std::cout << ciax::to_json(report) << "\n";
    } else {
        for (const ciax::CheckResult& check : report.checks) {
            std::cout << check.check << ": " << (check.pass ? "pass" : "FAIL") << "\n";
            if (!check.pass && !check.counterexample_json.empty()) {
                std::cout << "  counterexample: " << check.counterexample_json << "\n";
            }
        }
        std::cerr << "# elapsed " << report.elapsed_ms << " ms\n";
    }
    return report.all_pass() ? kExitOk : kExitCheckFailed;
}

int cmd_locate(const ciax::Shape& shape, const std::string& point_file,
               const Options& opt) {
    const ciax::Point p = ciax::point_from_json(read_file(point_file));
    if (!(p.shape == shape)) {
        throw std::invalid_argument("point shape does not match --shape");
    }
    const auto graphs = ciax::locate_point(p);
    if (opt.json) {
        std::string out = "[";
        for (std::size_t t = 0; t < graphs.size(); ++t) {
            if (t) out += ",";
            out += ciax::to_json(graphs[t]);
        }
        out += "]";
        std::cout << out << "\n";
        return kExitOk;
    }
    std::cout << graphs.size() << " components contain the point\n";
    for (const ciax::AdmissibleGraph& g : graphs) {
        std::cout << to_string(g.graph()) << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for the binomial ideal of the conditional-"
                 "independence intersection axiom"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    auto* json_flag = app.add_flag("--json", opt.json, "JSON output");
    auto* plain_flag = app.add_flag("--plain", "plain-table output (default)");
    json_flag->excludes(plain_flag);
    plain_flag->excludes(json_flag);

    int eta_max = 4;
    auto* eta_cmd = app.add_subcommand("eta", "table of admissible-graph counts");
    eta_cmd->add_option("--max", eta_max, "largest p and q")->check(CLI::NonNegativeNumber);

    int en_r2 = 0, en_r3 = 0;
    auto* enum_cmd = app.add_subcommand("enumerate", "list admissible graphs");
    enum_cmd->add_option("--r2", en_r2, "left vertex count")->required();
    enum_cmd->add_option("--r3", en_r3, "right vertex count")->required();

    std::string gen_shape, gen_graph;
    auto* gen_cmd = app.add_subcommand("generators",
                                       "generators of the model ideal or of P_G");
    gen_cmd->add_option("--shape", gen_shape, "r1,r2,r3")->required();
    gen_cmd->add_option("--component", gen_graph, "admissible graph JSON file");

    std::string hil_shape;
    long hil_maxdeg = 2;
    auto* hil_cmd = app.add_subcommand("hilbert", "per-multidegree Hilbert table");
    hil_cmd->add_option("--shape", hil_shape, "r1,r2,r3")->required();
    hil_cmd->add_option("--maxdeg", hil_maxdeg, "total degree bound")->required();

    int st_rows = 0, st_cols = 0;
    auto* st_cmd = app.add_subcommand("staircase", "staircase paths of a matrix");
    st_cmd->add_option("--rows", st_rows, "row count")->required();
    st_cmd->add_option("--cols", st_cols, "column count")->required();

    std::string dec_shape, dec_graph;
    auto* dec_cmd = app.add_subcommand(
        "decompose-initial", "primary components of the initial ideal of P_G");
    dec_cmd->add_option("--shape", dec_shape, "r1,r2,r3")->required();
    dec_cmd->add_option("--graph", dec_graph, "admissible graph JSON file")->required();

    std::string ver_shape, ver_checks;
    std::optional<long> ver_maxdeg;
    unsigned long ver_seed = 1;
    auto* ver_cmd = app.add_subcommand("verify", "run the degreewise checks");
    ver_cmd->add_option("--shape", ver_shape, "r1,r2,r3")->required();
    ver_cmd->add_option("--maxdeg", ver_maxdeg, "total degree bound");
    ver_cmd->add_option("--checks", ver_checks,
                        "comma list from claim1,claim2,hilbert,ideal,radical,variety");
    ver_cmd->add_option("--seed", ver_seed, "sampling seed");

    std::string loc_shape, loc_point;
    auto* loc_cmd = app.add_subcommand("locate", "components containing a point");
    loc_cmd->add_option("--shape", loc_shape, "r1,r2,r3")->required();
    loc_cmd->add_option("--point", loc_point, "point JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        opt.fiber_cap = fiber_cap_from_env();
        if (eta_cmd->parsed()) return cmd_eta(eta_max, opt);
        if (enum_cmd->parsed()) return cmd_enumerate(en_r2, en_r3, opt);
        if (gen_cmd->parsed()) {
            return cmd_generators(parse_shape(gen_shape), gen_graph, opt);
        }
        if (hil_cmd->parsed()) return cmd_hilbert(parse_shape(hil_shape), hil_maxdeg, opt);
        if (st_cmd->parsed()) return cmd_staircase(st_rows, st_cols, opt);
        if (dec_cmd->parsed()) return cmd_decompose(parse_shape(dec_shape), dec_graph, opt);
        if (ver_cmd->parsed()) {
            return cmd_verify(parse_shape(ver_shape), ver_maxdeg, ver_checks, ver_seed,
                              opt);
        }
        if (loc_cmd->parsed()) return cmd_locate(parse_shape(loc_shape), loc_point, opt);
    } catch (const ciax::FiberCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
