// Command-line front end: instance I/O, algorithm selection, verification,
// and brute-force oracles.  stdout carries one JSON result object per run;
// diagnostics go to stderr.
//
// Exit codes: 0 ok, 1 parse error, 2 validation error, 3 method/instance
// mismatch, 4 size guard exceeded, 5 verification failure.

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "sflow/embedded_dual.hpp"
#include "sflow/errors.hpp"
#include "sflow/flow_lp.hpp"
#include "sflow/ford_fulkerson.hpp"
#include "sflow/generators.hpp"
#include "sflow/io.hpp"

namespace {

using sflow::Json;
using sflow::Rational;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitValidation = 2;
constexpr int kExitUsage = 3;
constexpr int kExitGuard = 4;
constexpr int kExitVerify = 5;

struct VerificationFailure : sflow::Error {
    using Error::Error;
};

int exit_code_for(const std::exception& err) {
    if (dynamic_cast<const VerificationFailure*>(&err)) return kExitVerify;
    if (dynamic_cast<const sflow::ParseError*>(&err)) return kExitParse;
    if (dynamic_cast<const sflow::GuardError*>(&err)) return kExitGuard;
    if (dynamic_cast<const sflow::UsageError*>(&err)) return kExitUsage;
    if (dynamic_cast<const sflow::ValidationError*>(&err)) return kExitValidation;
    return kExitValidation;
}

struct Options {
    std::vector<std::string> paths;
    std::string method = "lp";
    bool check = true;
    bool combinatorial = false;
    bool brute = false;
    std::string kind = "comb-cut";
    std::string trace_path;
    std::string out_path;
    int jobs = 1;
    int max_size = 8;
    std::string gen_name;
    std::uint64_t seed = 1;
    int vertices = 6;
    int dim = 2;
    std::string density = "1/2";
    std::string edges;
    int source = 0;
    int sink = 1;
    int universe = 0;
    std::string sets;
    std::string certificate;
    std::string instance_path;
};

void write_trace(const std::string& path, const sflow::FfResult& result) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw sflow::ParseError("cannot write trace file " + path);
    for (const auto& step : result.trace) {
        Json line;
        line["iter"] = step.iteration;
        line["value"] = sflow::to_string(step.value);
        line["half_saturated"] = step.half_saturated_count;
        line["saturated"] = step.saturated;
        out << line.dump() << "\n";
    }
}

Json run_maxflow(const sflow::InstanceBundle& bundle, const Options& opt) {
    const auto& net = bundle.network;
    Json out;
    out["command"] = "maxflow";
    out["instance"] = bundle.name;
    out["method"] = opt.method;
    sflow::FlowResult flow;
    if (opt.method == "lp") {
        flow = sflow::max_flow_lp(net);
    } else if (opt.method == "ff") {
        const auto result = sflow::max_flow_ff(net);
        flow = result.flow;
        out["iterations"] = result.iterations;
        write_trace(opt.trace_path, result);
    } else if (opt.method == "dual") {
        if (!bundle.voids) {
            throw sflow::UsageError("method 'dual' needs a voids block in the instance");
        }
        flow = sflow::max_flow_shortest_path(net, *bundle.voids);
    } else {
        throw sflow::UsageError("unknown max-flow method '" + opt.method + "'");
    }
    if (!sflow::verify_flow(net, flow.flow, flow.value)) {
        throw VerificationFailure("computed flow failed verification");
    }
    out["value"] = sflow::to_string(flow.value);
    out["flow"] = sflow::format_rational_vector(flow.flow.coefficients);
    if (opt.check && opt.method != "lp") {
        const auto reference = sflow::max_flow_lp(net);
        if (reference.value != flow.value) {
            throw VerificationFailure("cross-check failed: " + sflow::to_string(flow.value) +
                                      " vs lp value " + sflow::to_string(reference.value));
        }
        out["check"] = "ok";
    } else if (opt.check) {
        out["check"] = "ok";
    }
    return out;
}

Json run_mincut(const sflow::InstanceBundle& bundle, const Options& opt) {
    const auto& net = bundle.network;
    Json out;
    out["command"] = "mincut";
    out["instance"] = bundle.name;
    out["method"] = opt.method;
    if (opt.combinatorial && opt.brute) {
        const auto cut = sflow::brute_min_combinatorial_cut(net, net.capacities, opt.max_size);
        out["combinatorial_cut"] = cut.cut;
        out["combinatorial_weight"] = sflow::to_string(cut.weight);
        return out;
    }
    if (opt.combinatorial && opt.method != "dual") {
        throw sflow::UsageError(
            "the cut program solves the topological cut only; a minimum combinatorial cut "
            "needs --method dual (embedded instances) or --brute");
    }

    sflow::CutResult cut;
    if (opt.method == "lp") {
        cut = sflow::min_cut_lp(net);
    } else if (opt.method == "dual") {
        if (!bundle.voids) {
            throw sflow::UsageError("method 'dual' needs a voids block in the instance");
        }
        const auto embedded = sflow::min_cut_via_min_cost_flow(net, *bundle.voids, net.capacities,
                                                               opt.combinatorial);
        cut = embedded.cut;
        if (opt.combinatorial) {
            out["combinatorial_cut"] = embedded.combinatorial_cut;
            out["combinatorial_weight"] = sflow::to_string(embedded.combinatorial_weight);
        }
    } else {
        throw sflow::UsageError("unknown min-cut method '" + opt.method + "'");
    }

    if (opt.check) {
        if (!sflow::verify_gamma_cut(net, cut.cochain)) {
            throw VerificationFailure("cut cochain failed gamma-cut verification");
        }
        if (!sflow::verify_directed_combinatorial_cut(net, cut.directed_cut)) {
            throw VerificationFailure("directed cut set failed verification");
        }
        out["verified"] = true;
    }
    out["value"] = sflow::to_string(cut.value);
    out["cochain"] = sflow::format_rational_vector(cut.cochain.coefficients);
    out["coboundary"] = sflow::format_rational_vector(cut.coboundary.coefficients);
    out["directed_cut"] = std::vector<int>(cut.directed_cut.begin(), cut.directed_cut.end());
    const Rational support_weight = sflow::cut_support_weight(net, cut);
    out["support_weight"] = sflow::to_string(support_weight);
    out["cut_norm"] = sflow::to_string(sflow::cut_norm(net, cut.cochain));
    if (support_weight > cut.value) {
        std::cerr << "warning: the coboundary support weighs " << sflow::to_string(support_weight)
                  << ", more than the cut value " << sflow::to_string(cut.value)
                  << "; it need not be a minimum combinatorial cut\n";
        out["warning"] = "support weight exceeds cut value";
    }
    return out;
}

Json run_brute(const sflow::InstanceBundle& bundle, const Options& opt) {
    const auto& net = bundle.network;
    Json out;
    out["command"] = "brute";
    out["instance"] = bundle.name;
    out["kind"] = opt.kind;
    if (opt.kind == "comb-cut") {
        const auto cut = sflow::brute_min_combinatorial_cut(net, net.capacities, opt.max_size);
        out["weight"] = sflow::to_string(cut.weight);
        out["cut"] = cut.cut;
        return out;
    }
    if (opt.kind == "flow") {
        if (net.top_dim() != 1) {
            throw sflow::UsageError("brute flow enumeration works on graphs only");
        }
        int source = -1, sink = -1;
        for (int v = 0; v < static_cast<int>(bundle.gamma.coefficients.size()); ++v) {
            if (bundle.gamma.coefficients[v] == 1) sink = v;
            if (bundle.gamma.coefficients[v] == -1) source = v;
        }
        if (source < 0 || sink < 0) {
            throw sflow::UsageError("brute flow enumeration needs gamma = sink - source");
        }
        const int n = net.base.sizes[0];
        if (n > 20) throw sflow::GuardError("brute flow enumeration limited to 20 vertices");
        std::vector<std::tuple<int, int, Rational>> arcs;
        const auto dense = net.real_boundary().to_dense();
        for (int e = 0; e < net.real_count(); ++e) {
            int tail = -1, head = -1;
            for (int v = 0; v < n; ++v) {
                if (dense[v][e] == -1) tail = v;
                if (dense[v][e] == 1) head = v;
            }
            arcs.emplace_back(tail, head, net.capacities[e]);
        }
        // Minimum over vertex partitions of the capacity leaving the source side.
        Rational best(-1);
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (!(mask & (1u << source)) || (mask & (1u << sink))) continue;
            Rational total(0);
            for (const auto& [a, b, cap] : arcs) {
                if ((mask & (1u << a)) && !(mask & (1u << b))) total += cap;
            }
            if (best < 0 || total < best) best = total;
        }
        out["value"] = sflow::to_string(best);
        return out;
    }
    throw sflow::UsageError("unknown brute kind '" + opt.kind + "'");
}

Json run_verify(const sflow::InstanceBundle& bundle, const Options& opt) {
    const auto& net = bundle.network;
    std::ifstream in(opt.certificate);
    if (!in) throw sflow::ParseError("cannot open " + opt.certificate);
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const nlohmann::json::parse_error& err) {
        throw sflow::ParseError(std::string("invalid certificate JSON: ") + err.what());
    }
    Json out;
    out["command"] = "verify";
    out["instance"] = bundle.name;
    const std::string kind = doc.at("kind").get<std::string>();
    out["kind"] = kind;
    if (kind == "flow") {
        std::vector<Rational> coeffs;
        for (const auto& item : doc.at("coefficients")) {
            if (!item.is_string()) throw sflow::ParseError("flow coefficients must be strings");
            coeffs.push_back(sflow::parse_rational(item.get<std::string>()));
        }
        if (!doc.at("value").is_string()) throw sflow::ParseError("flow value must be a string");
        const Rational value = sflow::parse_rational(doc.at("value").get<std::string>());
        if (static_cast<int>(coeffs.size()) != net.real_count()) {
            throw VerificationFailure("flow length mismatch");
        }
        for (int i = 0; i < net.real_count(); ++i) {
            if (coeffs[i] < 0 || coeffs[i] > net.capacities[i]) {
                throw VerificationFailure("capacity violated at simplex " +
                                          net.base.label(net.top_dim(), i));
            }
        }
        const auto image = net.real_boundary().apply(coeffs);
        for (size_t r = 0; r < image.size(); ++r) {
            if (image[r] != value * net.gamma.coefficients[r]) {
                throw VerificationFailure("conservation violated at " +
                                          net.base.label(net.top_dim() - 1, static_cast<int>(r)));
            }
        }
    } else if (kind == "cut") {
        std::vector<Rational> coeffs;
        for (const auto& item : doc.at("cochain")) {
            if (!item.is_string()) throw sflow::ParseError("cochain entries must be strings");
            coeffs.push_back(sflow::parse_rational(item.get<std::string>()));
        }
        const sflow::Cochain p(net.top_dim() - 1, coeffs);
        if (sflow::inner_product(p, net.gamma) != -1) {
            throw VerificationFailure("cochain does not evaluate to -1 on gamma");
        }
        if (!sflow::verify_gamma_cut(net, p)) {
            throw VerificationFailure("gamma stays null-homologous off the coboundary support");
        }
    } else {
        throw sflow::ParseError("certificate kind must be 'flow' or 'cut'");
    }
    out["ok"] = true;
    return out;
}

Json run_gen(const Options& opt) {
    sflow::InstanceBundle bundle;
    if (opt.gen_name == "md") {
        bundle = sflow::gen_md();
    } else if (opt.gen_name == "mdw") {
        bundle = sflow::gen_mdw();
    } else if (opt.gen_name == "octahedron") {
        bundle = sflow::gen_octahedron();
    } else if (opt.gen_name == "planar4") {
        bundle = sflow::gen_planar_cycle4();
    } else if (opt.gen_name == "graph") {
        std::vector<std::pair<int, int>> edges;
        std::vector<Rational> caps;
        std::stringstream stream(opt.edges);
        std::string token;
        while (std::getline(stream, token, ',')) {
            const auto arrow = token.find('>');
            const auto colon = token.find(':');
            if (arrow == std::string::npos || colon == std::string::npos || colon < arrow) {
                throw sflow::ParseError("edge format is tail>head:capacity");
            }
            edges.emplace_back(std::stoi(token.substr(0, arrow)),
                               std::stoi(token.substr(arrow + 1, colon - arrow - 1)));
            caps.push_back(sflow::parse_rational(token.substr(colon + 1)));
        }
        bundle = sflow::gen_graph(edges, caps, opt.source, opt.sink);
    } else if (opt.gen_name == "hitting-set") {
        std::vector<std::vector<int>> family;
        std::stringstream stream(opt.sets);
        std::string subset;
        while (std::getline(stream, subset, ';')) {
            std::vector<int> members;
            std::stringstream inner(subset);
            std::string element;
            while (std::getline(inner, element, ',')) members.push_back(std::stoi(element));
            family.push_back(std::move(members));
        }
        int universe = opt.universe;
        if (universe == 0) {
            for (const auto& s : family) {
                for (int e : s) universe = std::max(universe, e);
            }
        }
        bundle = sflow::gen_hitting_set(universe, family);
    } else if (opt.gen_name == "random") {
        bundle = sflow::gen_random(opt.seed, opt.vertices, opt.dim,
                                   sflow::parse_rational(opt.density));
    } else {
        throw sflow::UsageError("unknown generator '" + opt.gen_name + "'");
    }
    if (opt.out_path.empty()) throw sflow::UsageError("gen needs --out");
    sflow::save_instance_file(bundle, opt.out_path);
    Json out;
    out["command"] = "gen";
    out["name"] = bundle.name;
    out["path"] = opt.out_path;
    return out;
}

// One handler per instance path, optionally on worker threads; results print
// in input order.
int run_over_instances(const Options& opt,
                       const std::function<Json(const sflow::InstanceBundle&)>& handler) {
    const int count = static_cast<int>(opt.paths.size());
    if (count == 0) throw sflow::UsageError("no instance files given");
    std::vector<Json> results(count);
    std::vector<int> codes(count, kExitOk);
    std::vector<std::string> errors(count);

    std::mutex cursor_mutex;
    int cursor = 0;
    auto worker = [&]() {
        while (true) {
            int index;
            {
                std::scoped_lock lock(cursor_mutex);
                if (cursor >= count) return;
                index = cursor++;
            }
            try {
                const auto bundle = sflow::load_instance_file(opt.paths[index]);
                results[index] = handler(bundle);
            } catch (const std::exception& err) {
                codes[index] = exit_code_for(err);
                errors[index] = err.what();
            }
        }
    };
    const int jobs = std::max(1, std::min(opt.jobs, count));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    int exit_code = kExitOk;
    for (int i = 0; i < count; ++i) {
        if (codes[i] == kExitOk) {
            std::cout << results[i].dump() << "\n";
        } else {
            std::cerr << "error: " << opt.paths[i] << ": " << errors[i] << "\n";
            if (exit_code == kExitOk) exit_code = codes[i];
        }
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"max-flow and min-cut computations on simplicial flow networks"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("paths", opt.paths, "instance files")->required();
        cmd->add_option("--jobs", opt.jobs, "worker threads for multiple instances");
        cmd->add_flag("--check,!--no-check", opt.check, "cross-validate results (default on)");
        cmd->add_option("--max-size", opt.max_size, "brute-force subset size guard");
    };

    auto* maxflow = app.add_subcommand("maxflow", "maximum gamma-flow");
    add_common(maxflow);
    maxflow->add_option("--method", opt.method, "lp | ff | dual");
    maxflow->add_option("--trace", opt.trace_path, "write per-iteration trace records");

    auto* mincut = app.add_subcommand("mincut", "minimum gamma-cut");
    add_common(mincut);
    mincut->add_option("--method", opt.method, "lp | dual");
    mincut->add_flag("--combinatorial", opt.combinatorial, "least-weight combinatorial cut");
    mincut->add_flag("--brute", opt.brute, "exhaustive combinatorial search");

    auto* brute = app.add_subcommand("brute", "exhaustive oracles");
    add_common(brute);
    brute->add_option("--kind", opt.kind, "comb-cut | flow");

    auto* gen = app.add_subcommand("gen", "write a generated instance file");
    gen->add_option("name", opt.gen_name,
                    "md | mdw | octahedron | planar4 | graph | hitting-set | random")
        ->required();
    gen->add_option("--out", opt.out_path, "output path")->required();
    gen->add_option("--seed", opt.seed, "random seed");
    gen->add_option("--vertices", opt.vertices, "vertex count");
    gen->add_option("--dim", opt.dim, "dimension (1 or 2)");
    gen->add_option("--density", opt.density, "simplex density as p/q");
    gen->add_option("--edges", opt.edges, "graph edges, e.g. 0>1:1,1>2:3");
    gen->add_option("--source", opt.source, "graph source vertex");
    gen->add_option("--sink", opt.sink, "graph sink vertex");
    gen->add_option("--universe", opt.universe, "hitting set universe size");
    gen->add_option("--sets", opt.sets, "hitting set family, e.g. '1,2;2,3'");

    auto* verify = app.add_subcommand("verify", "check a flow or cut certificate");
    verify->add_option("instance", opt.instance_path, "instance file")->required();
    verify->add_option("certificate", opt.certificate, "certificate file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            std::cout << run_gen(opt).dump() << "\n";
            return kExitOk;
        }
        if (maxflow->parsed()) {
            return run_over_instances(opt, [&](const auto& b) { return run_maxflow(b, opt); });
        }
        if (mincut->parsed()) {
            return run_over_instances(opt, [&](const auto& b) { return run_mincut(b, opt); });
        }
        if (brute->parsed()) {
            return run_over_instances(opt, [&](const auto& b) { return run_brute(b, opt); });
        }
        if (verify->parsed()) {
            const auto bundle = sflow::load_instance_file(opt.instance_path);
            std::cout << run_verify(bundle, opt).dump() << "\n";
            return kExitOk;
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return exit_code_for(err);
    }
    return kExitOk;
}
