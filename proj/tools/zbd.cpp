#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "zbd/generators.hpp"
#include "zbd/graph_io.hpp"
#include "zbd/recognizer.hpp"
#include "zbd/reductions.hpp"
#include "zbd/spectral.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;
constexpr int kExitFormat = 65;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << content;
}

zbd::Graph load_graph(const std::string& path, const std::string& format) {
    return zbd::parse_graph(read_input(path), zbd::parse_format_name(format));
}

int run_recognize(const std::string& cls, const std::string& input, const std::string& format,
                  long long budget, const std::string& cert_path) {
    zbd::SplitMode mode;
    if (cls == "zykov")
        mode = zbd::SplitMode::Weak;
    else if (cls == "bd")
        mode = zbd::SplitMode::Strong;
    else
        throw UsageError("--class must be zykov or bd");
    zbd::Graph g = load_graph(input, format);
    zbd::Verdict v = zbd::recognize(g, mode, budget);
    nlohmann::ordered_json j;
    switch (v.kind) {
        case zbd::Verdict::Kind::Member: j["verdict"] = "member"; break;
        case zbd::Verdict::Kind::NonMember: j["verdict"] = "non_member"; break;
        case zbd::Verdict::Kind::Unknown: j["verdict"] = "unknown"; break;
    }
    j["nodes"] = v.nodes_explored;
    std::cout << j.dump() << "\n";
    if (!cert_path.empty()) {
        if (v.kind == zbd::Verdict::Kind::Member)
            write_file(cert_path, zbd::certificate_to_json(v.certificate));
        else if (v.kind == zbd::Verdict::Kind::NonMember)
            write_file(cert_path, zbd::certificate_to_json(v.witness));
    }
    if (v.kind == zbd::Verdict::Kind::Member) return kExitYes;
    if (v.kind == zbd::Verdict::Kind::NonMember) return kExitNo;
    return kExitUnknown;
}

int run_generate(const std::string& what, const std::string& param, const std::string& format,
                 const std::string& roles_path) {
    zbd::GraphFormat fmt = zbd::parse_format_name(format);
    zbd::Graph g;
    nlohmann::ordered_json sidecar;
    if (what == "zykov" || what == "descartes") {
        int k = std::stoi(param);
        zbd::LayeredGraph lg = what == "zykov" ? zbd::zykov(k) : zbd::descartes(k);
        g = lg.graph;
        auto stages = nlohmann::ordered_json::object();
        for (int v = 0; v < g.vertex_count(); ++v)
            stages[std::to_string(v)] = lg.stage_of[v];
        sidecar["stages"] = std::move(stages);
    } else if (what == "gallery") {
        zbd::GalleryGraph gg = zbd::gallery(param);
        g = gg.graph;
        auto roles = nlohmann::ordered_json::object();
        auto colors = nlohmann::ordered_json::object();
        for (const auto& [v, role] : gg.role_of) roles[std::to_string(v)] = role;
        for (const auto& [v, color] : gg.color_of) colors[std::to_string(v)] = color;
        sidecar["roles"] = std::move(roles);
        sidecar["colors"] = std::move(colors);
    } else if (what == "ug") {
        int c = std::stoi(param);
        zbd::UnequalityGadget ug = zbd::unequality_gadget(c);
        g = ug.graph;
        sidecar["ports"] = {{"a", ug.port_a}, {"b", ug.port_b}};
    } else {
        throw UsageError("unknown generator \"" + what + "\"");
    }
    std::cout << zbd::emit_graph(g, fmt);
    if (!roles_path.empty()) write_file(roles_path, sidecar.dump());
    return kExitYes;
}

int run_reduce_sat(const std::string& which, const std::string& cnf_path,
                   const std::string& wiring_name, const std::string& format,
                   const std::string& roles_path) {
    zbd::CnfInstance instance = zbd::parse_dimacs_cnf(read_input(cnf_path));
    zbd::SatGadget gadget;
    if (which == "sat-zykov") {
        gadget = zbd::sat_to_zykov(instance);
    } else {
        zbd::LiteralWiring wiring;
        if (wiring_name == "text")
            wiring = zbd::LiteralWiring::Text;
        else if (wiring_name == "symmetric")
            wiring = zbd::LiteralWiring::Symmetric;
        else
            throw UsageError("--literal-wiring must be text or symmetric");
        gadget = zbd::sat_to_bd(instance, wiring);
    }
    std::cout << zbd::emit_graph(gadget.gadget.graph, zbd::parse_format_name(format));
    if (!roles_path.empty()) write_file(roles_path, zbd::gadget_sidecar_json(gadget.gadget));
    return kExitYes;
}

int run_certify(const std::string& input, const std::string& format, const std::string& cert_path,
                long long budget) {
    zbd::Graph g = load_graph(input, format);
    zbd::ParsedCertificate cert;
    try {
        cert = zbd::parse_certificate_json(read_input(cert_path), g.vertex_count());
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        throw zbd::FormatError(e.what());
    }
    if (cert.peel) {
        std::string why;
        if (zbd::verify_peel(g, *cert.peel, &why)) return kExitYes;
        std::cerr << "certificate rejected: " << why << "\n";
        return kExitNo;
    }
    auto ok = zbd::verify_non_membership(g, *cert.non_membership, budget);
    if (!ok) {
        std::cerr << "verification budget exhausted\n";
        return kExitUnknown;
    }
    if (*ok) return kExitYes;
    std::cerr << "certificate rejected: witness subgraph has a non-empty splitting stable set\n";
    return kExitNo;
}

int run_witness(const std::string& input, const std::string& format, double tol,
                int mixing_samples, uint64_t seed) {
    zbd::Graph g = load_graph(input, format);
    zbd::SpectralReport report = zbd::expansion_non_zykov(g, tol);
    auto j = nlohmann::ordered_json::parse(zbd::spectral_report_to_json(report));
    if (mixing_samples > 0 && report.regular) {
        zbd::MixingReport mix = zbd::mixing_check(g, mixing_samples, seed, tol);
        j["mixing"] = {{"samples", mix.samples}, {"passed", mix.passed},
                       {"min_slack", mix.min_slack}};
    }
    std::cout << j.dump() << "\n";
    return report.witnessed ? kExitNo : kExitUnknown;
}

int run_stats(const std::string& input, const std::string& format) {
    zbd::Graph g = load_graph(input, format);
    zbd::StructureFlags flags = zbd::structure_flags(g);
    auto gr = zbd::girth(g);
    nlohmann::ordered_json j;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["components"] = zbd::connected_components(g).size();
    if (gr)
        j["girth"] = *gr;
    else
        j["girth"] = nullptr;
    j["is_forest"] = flags.is_forest;
    j["is_bipartite"] = flags.is_bipartite;
    j["is_triangle_free"] = flags.is_triangle_free;
    std::cout << j.dump() << "\n";
    return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zykov / Blanche Descartes graph class toolkit"};
    app.require_subcommand(1);

    std::string cls, input = "-", format = "graph6", cert_path, roles_path;
    long long budget = zbd::kDefaultSearchBudget;

    auto* rec = app.add_subcommand("recognize", "decide class membership");
    rec->add_option("--class", cls, "zykov (weak) or bd (strong)")->required();
    rec->add_option("--input", input, "graph file, - for stdin");
    rec->add_option("--format", format, "graph6, edge_list or dimacs_graph");
    rec->add_option("--budget", budget, "search node budget");
    rec->add_option("--certificate", cert_path, "write certificate JSON here");
    int threads = 1;
    rec->add_option("--threads", threads, "worker threads (only 1 supported)");

    std::string gen_what, gen_param;
    auto* gen = app.add_subcommand("generate", "emit a construction or gallery graph");
    gen->add_option("what", gen_what, "zykov, descartes, gallery or ug")->required();
    gen->add_option("param", gen_param, "k, c, or gallery name")->required();
    gen->add_option("--format", format, "output format");
    gen->add_option("--roles", roles_path, "write role/stage sidecar JSON here");

    std::string cnf_path, wiring = "symmetric", red_input = "-";
    long long mis_k = 0;
    int col_c = 2;
    auto* red = app.add_subcommand("reduce", "compile hardness reductions");
    red->require_subcommand(1);
    auto* red_zy = red->add_subcommand("sat-zykov", "3-SAT to Zykov membership");
    auto* red_bd = red->add_subcommand("sat-bd", "3-SAT to Blanche Descartes membership");
    for (auto* sub : {red_zy, red_bd}) {
        sub->add_option("--cnf", cnf_path, "DIMACS 3-CNF file, - for stdin")->required();
        sub->add_option("--format", format, "output format");
        sub->add_option("--roles", roles_path, "write color/role sidecar JSON here");
    }
    red_bd->add_option("--literal-wiring", wiring, "text or symmetric");
    auto* red_mis = red->add_subcommand("mis", "independent set bound transfer");
    red_mis->add_option("--input", red_input, "graph file")->required();
    red_mis->add_option("--format", format, "graph format");
    red_mis->add_option("--k", mis_k, "independent set bound")->required();
    auto* red_col = red->add_subcommand("coloring", "c-coloring preserving blow-up");
    red_col->add_option("--input", red_input, "graph file")->required();
    red_col->add_option("--format", format, "graph format");
    red_col->add_option("--c", col_c, "number of colors (2 or 3)")->required();

    auto* cert = app.add_subcommand("certify", "re-verify a certificate");
    cert->add_option("--input", input, "graph file")->required();
    cert->add_option("--format", format, "graph format");
    cert->add_option("--certificate", cert_path, "certificate JSON file")->required();
    cert->add_option("--budget", budget, "verification node budget");

    double tol = zbd::kDefaultSpectralTol;
    int mixing_samples = 0;
    uint64_t seed = 0;
    auto* wit = app.add_subcommand("witness", "spectral non-membership witness");
    wit->add_option("--input", input, "graph file")->required();
    wit->add_option("--format", format, "graph format");
    wit->add_option("--tol", tol, "eigenvalue tolerance");
    wit->add_option("--mixing-samples", mixing_samples, "audit this many random bipartitions");
    wit->add_option("--seed", seed, "bipartition sampling seed");

    auto* st = app.add_subcommand("stats", "basic structure report");
    st->add_option("--input", input, "graph file");
    st->add_option("--format", format, "graph format");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (rec->parsed()) {
            if (threads != 1) std::cerr << "note: --threads > 1 not implemented, using 1\n";
            return run_recognize(cls, input, format, budget, cert_path);
        }
        if (gen->parsed()) return run_generate(gen_what, gen_param, format, roles_path);
        if (red->parsed()) {
            if (red_zy->parsed()) return run_reduce_sat("sat-zykov", cnf_path, wiring, format, roles_path);
            if (red_bd->parsed()) return run_reduce_sat("sat-bd", cnf_path, wiring, format, roles_path);
            if (red_mis->parsed()) {
                auto [h, bound] = zbd::mis_reduction(load_graph(red_input, format), mis_k);
                std::cout << zbd::emit_graph(h, zbd::parse_format_name(format));
                std::cout << "bound " << bound << "\n";
                return kExitYes;
            }
            zbd::Graph h = zbd::coloring_reduction(load_graph(red_input, format), col_c);
            std::cerr << "vertices: " << h.vertex_count() << "\n";
            std::cout << zbd::emit_graph(h, zbd::parse_format_name(format));
            return kExitYes;
        }
        if (cert->parsed()) return run_certify(input, format, cert_path, budget);
        if (wit->parsed()) return run_witness(input, format, tol, mixing_samples, seed);
        return run_stats(input, format);
    } catch (const zbd::FormatError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitFormat;
    } catch (const zbd::SizeGuardError& e) {
        std::cerr << "refusing: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
