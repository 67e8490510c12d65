#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "agt/aut.hpp"
#include "agt/designs.hpp"
#include "agt/errors.hpp"
#include "agt/families.hpp"
#include "agt/graph.hpp"
#include "agt/homcore.hpp"
#include "agt/spectral.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitBound = 3;

const char* kSkipped = "skipped: bound";

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct Family {
    int arity;
    std::string params; // for usage messages
    std::function<agt::Graph(const std::vector<int>&)> build;
};

const std::map<std::string, Family>& family_registry() {
    using agt::Graph;
    static const std::map<std::string, Family> reg = {
        {"complete", {1, "n", [](const std::vector<int>& a) { return agt::complete_graph(a[0]); }}},
        {"empty", {1, "n", [](const std::vector<int>& a) { return agt::empty_graph(a[0]); }}},
        {"path", {1, "n", [](const std::vector<int>& a) { return agt::path_graph(a[0]); }}},
        {"cycle", {1, "n", [](const std::vector<int>& a) { return agt::cycle_graph(a[0]); }}},
        {"complete_bipartite",
         {2, "m n", [](const std::vector<int>& a) { return agt::complete_bipartite(a[0], a[1]); }}},
        {"hypercube", {1, "k", [](const std::vector<int>& a) { return agt::hypercube(a[0]); }}},
        {"johnson",
         {3, "v k i", [](const std::vector<int>& a) { return agt::johnson(a[0], a[1], a[2]); }}},
        {"odd", {1, "k", [](const std::vector<int>& a) { return agt::odd_graph(a[0]); }}},
        {"petersen", {0, "", [](const std::vector<int>&) { return agt::petersen(); }}},
        {"paley", {1, "q", [](const std::vector<int>& a) { return agt::paley(a[0]); }}},
        {"hamming",
         {2, "d q", [](const std::vector<int>& a) { return agt::hamming(a[0], a[1]); }}},
        {"heawood", {0, "", [](const std::vector<int>&) { return agt::heawood(); }}},
        {"coxeter", {0, "", [](const std::vector<int>&) { return agt::coxeter(); }}},
        {"tutte_coxeter", {0, "", [](const std::vector<int>&) { return agt::tutte_coxeter(); }}},
        {"hoffman_singleton",
         {0, "", [](const std::vector<int>&) { return agt::hoffman_singleton(); }}},
        {"folkman", {0, "", [](const std::vector<int>&) { return agt::folkman(); }}},
        {"shrikhande", {0, "", [](const std::vector<int>&) { return agt::shrikhande(); }}},
    };
    return reg;
}

int run_family(const std::string& name, const std::vector<int>& params,
               const std::string& out_path) {
    auto& reg = family_registry();
    auto it = reg.find(name);
    if (it == reg.end()) {
        std::cerr << "unknown family '" << name << "'; known:";
        for (auto& [key, fam] : reg) std::cerr << ' ' << key;
        std::cerr << '\n';
        return kExitUsage;
    }
    if (static_cast<int>(params.size()) != it->second.arity) {
        std::cerr << "family " << name << " expects " << it->second.arity << " parameter(s)";
        if (it->second.arity > 0) std::cerr << ": " << it->second.params;
        std::cerr << '\n';
        return kExitUsage;
    }
    agt::Graph g = it->second.build(params);
    std::string line = agt::graph6_encode(g) + "\n";
    if (out_path.empty() || out_path == "-") {
        std::cout << line;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << out_path << '\n';
            return kExitUsage;
        }
        out << line;
    }
    return 0;
}

json metrics_report(const agt::Graph& g) {
    json j;
    j["n"] = g.n();
    j["m"] = g.edge_count();
    int dmin = 0, dmax = 0;
    for (int v = 0; v < g.n(); ++v) {
        int d = g.degree(v);
        if (v == 0 || d < dmin) dmin = d;
        if (v == 0 || d > dmax) dmax = d;
    }
    j["degree_min"] = dmin;
    j["degree_max"] = dmax;
    if (auto k = g.regular_degree())
        j["regular"] = *k;
    else
        j["regular"] = nullptr;
    if (auto gi = agt::girth(g))
        j["girth"] = *gi;
    else
        j["girth"] = nullptr;
    j["connected"] = agt::is_connected(g);
    if (auto d = agt::diameter(g))
        j["diameter"] = *d;
    else
        j["diameter"] = nullptr;
    j["bipartite"] = agt::bipartition(g).has_value();
    return j;
}

json symmetry_report(const agt::Graph& g) {
    agt::SymmetryCertificate cert = agt::transitivity(g);
    json j;
    j["aut_order"] = cert.aut_order.str();
    json gens = json::array();
    for (const auto& p : cert.generators) gens.push_back(p.cycle_string());
    j["generators"] = gens;
    j["vertex_transitive"] = cert.vertex_transitive;
    j["edge_transitive"] = cert.edge_transitive;
    j["arc_transitive"] = cert.arc_transitive;
    j["max_s_arc_transitive"] = cert.max_s_arc_transitive;
    if (cert.s_arc_regular)
        j["s_arc_regular"] = *cert.s_arc_regular;
    else
        j["s_arc_regular"] = nullptr;
    j["distance_transitive"] = cert.distance_transitive;
    j["semisymmetric"] = cert.semisymmetric;
    j["vertex_orbits"] = cert.vertex_orbits;
    j["edge_orbits"] = cert.edge_orbits;
    j["arc_orbits"] = cert.arc_orbits;
    return j;
}

json regularity_report(const agt::Graph& g) {
    json j;
    if (auto p = agt::srg_check(g)) {
        json s;
        s["n"] = p->n;
        s["k"] = p->k;
        s["lambda"] = p->lambda;
        s["mu"] = p->mu;
        if (p->mu < p->k) {
            auto spec = agt::srg_spectrum(*p);
            json sp;
            sp["irrational"] = spec.irrational;
            sp["feasible"] = spec.feasible;
            if (spec.theta) sp["theta"] = *spec.theta;
            if (spec.tau) sp["tau"] = *spec.tau;
            if (spec.m_theta) sp["m_theta"] = *spec.m_theta;
            if (spec.m_tau) sp["m_tau"] = *spec.m_tau;
            s["spectrum"] = sp;
        } else {
            s["spectrum"] = nullptr; // complete multipartite boundary: mu = k
        }
        j["srg"] = s;
    } else {
        j["srg"] = nullptr;
    }
    bool connected = agt::is_connected(g);
    if (connected) {
        if (auto arr = agt::intersection_array(g)) {
            json a;
            a["b"] = arr->b;
            a["c"] = arr->c;
            j["intersection_array"] = a;
        } else {
            j["intersection_array"] = nullptr;
        }
    } else {
        j["intersection_array"] = nullptr;
    }
    j["moore"] = agt::is_moore(g);
    if (connected && agt::bipartition(g)) {
        if (auto gp = agt::generalized_polygon(g)) {
            json p;
            p["d"] = gp->d;
            p["s"] = gp->s;
            p["t"] = gp->t;
            p["thick"] = gp->thick;
            p["feit_higman_admissible"] = agt::feit_higman_admissible(gp->d, gp->s, gp->t);
            j["generalized_polygon"] = p;
        } else {
            j["generalized_polygon"] = nullptr;
        }
    } else {
        j["generalized_polygon"] = nullptr;
    }
    return j;
}

// evaluate one deep field, mapping size-bound refusals to a marker string
template <typename F>
json guarded(F&& f) {
    try {
        return f();
    } catch (const agt::bound_error&) {
        return kSkipped;
    }
}

json deep_report(const agt::Graph& g, int deep_limit) {
    json j;
    if (g.n() > deep_limit) {
        for (const char* key :
             {"core_n", "core_graph6", "is_core", "chromatic_number", "independence_number",
              "clique_number", "hamiltonian_cycle", "hamiltonian_path", "max_matching",
              "edge_connectivity", "vertex_connectivity"})
            j[key] = kSkipped;
        return j;
    }
    json core_n = kSkipped, core_g6 = kSkipped;
    try {
        agt::Graph c = agt::core(g);
        core_n = c.n();
        core_g6 = agt::graph6_encode(c);
    } catch (const agt::bound_error&) {
    }
    j["core_n"] = core_n;
    j["core_graph6"] = core_g6;
    j["is_core"] = guarded([&] { return json(agt::is_core(g)); });
    j["chromatic_number"] = guarded([&] { return json(agt::chromatic_number(g)); });
    j["independence_number"] = guarded([&] { return json(agt::independence_number(g)); });
    j["clique_number"] = guarded([&] { return json(agt::clique_number(g)); });
    j["hamiltonian_cycle"] = guarded([&] {
        auto c = agt::hamiltonian_cycle(g);
        return c ? json(*c) : json(nullptr);
    });
    j["hamiltonian_path"] = guarded([&] {
        auto p = agt::hamiltonian_path(g);
        return p ? json(*p) : json(nullptr);
    });
    j["max_matching"] = guarded([&] {
        auto m = agt::max_matching(g);
        json edges = json::array();
        for (auto [u, v] : m) edges.push_back(json::array({u, v}));
        json out;
        out["size"] = m.size();
        out["edges"] = edges;
        return out;
    });
    bool connected = agt::is_connected(g);
    j["edge_connectivity"] = guarded([&] {
        return json(connected ? agt::edge_connectivity(g) : 0);
    });
    j["vertex_connectivity"] = guarded([&] {
        return json(connected ? agt::vertex_connectivity(g) : 0);
    });
    return j;
}

void print_text_value(const std::string& key, const json& v, int indent) {
    std::string pad(indent, ' ');
    if (v.is_object()) {
        std::cout << pad << key << ":\n";
        for (auto& [k2, v2] : v.items()) print_text_value(k2, v2, indent + 2);
    } else {
        std::cout << pad << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                  << '\n';
    }
}

int run_analyze(const std::string& path, bool deep, bool as_json, int aut_limit,
                int deep_limit) {
    agt::Graph g = agt::read_graph_auto(slurp(path));
    json report;
    report["schema"] = "agt-report/1";
    report["input"] = path;
    report["metrics"] = metrics_report(g);
    if (g.n() > aut_limit) {
        report["symmetry"] = kSkipped;
    } else {
        try {
            report["symmetry"] = symmetry_report(g);
        } catch (const agt::bound_error&) {
            report["symmetry"] = kSkipped;
        }
    }
    report["regularity"] = regularity_report(g);
    if (deep) report["deep"] = deep_report(g, deep_limit);
    if (as_json) {
        std::cout << report.dump(2) << '\n';
    } else {
        for (auto& [key, value] : report.items()) print_text_value(key, value, 0);
    }
    return 0;
}

int run_verify_design(const std::string& path, int t, bool as_json) {
    agt::IncidenceStructure s = agt::parse_incidence(slurp(path));
    std::optional<agt::DesignParams> params = agt::is_t_design(s, t);
    json report;
    report["schema"] = "agt-report/1";
    report["input"] = path;
    report["points"] = s.v;
    report["blocks"] = static_cast<long long>(s.blocks.size());
    report["t"] = t;
    if (!params) {
        report["verdict"] = "not a " + std::to_string(t) + "-design";
    } else {
        std::ostringstream verdict;
        verdict << t << "-(" << params->v << "," << params->k << "," << params->lambda << ")";
        report["verdict"] = verdict.str();
        report["lambda"] = params->lambda;
        report["b"] = params->b;
        report["r"] = params->r;
        json chain = json::array();
        for (int sidx = 0; sidx <= t; ++sidx) {
            agt::Rational ls = agt::lambda_s(*params, sidx);
            chain.push_back(boost::rational_cast<long long>(ls));
        }
        report["lambda_chain"] = chain;
        if (t >= 2)
            report["fisher_b_ge_v"] = params->b >= params->v;
        else
            report["fisher_b_ge_v"] = nullptr;
    }
    if (as_json) {
        std::cout << report.dump(2) << '\n';
    } else {
        for (auto& [key, value] : report.items()) print_text_value(key, value, 0);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact certificates for highly regular graphs and designs"};
    app.require_subcommand(1);

    auto* fam = app.add_subcommand("family", "emit a named graph as graph6");
    std::string fam_name;
    std::vector<int> fam_params;
    std::string fam_out;
    fam->add_option("name", fam_name, "family name")->required();
    fam->add_option("params", fam_params, "integer parameters");
    fam->add_option("-o,--out", fam_out, "output path (default stdout)");

    auto* ana = app.add_subcommand("analyze", "report metrics and certificates for a graph");
    std::string ana_path;
    bool ana_deep = false, ana_json = false;
    int aut_limit = 256, deep_limit = 64;
    ana->add_option("input", ana_path, "graph6 or edge-list file, - for stdin")->required();
    ana->add_flag("--deep", ana_deep, "add core/coloring/Hamiltonicity/connectivity searches");
    ana->add_flag("--json", ana_json, "emit the JSON report");
    ana->add_option("--aut-limit", aut_limit, "largest n for the symmetry section");
    ana->add_option("--deep-limit", deep_limit, "largest n for the deep section");

    auto* ver = app.add_subcommand("verify-design", "check an incidence file as a t-design");
    std::string ver_path;
    int ver_t = 2;
    bool ver_json = false;
    ver->add_option("input", ver_path, "incidence file, - for stdin")->required();
    ver->add_option("--t", ver_t, "strength to test")->required();
    ver->add_flag("--json", ver_json, "emit the JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e); // --help and friends
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (fam->parsed()) return run_family(fam_name, fam_params, fam_out);
        if (ana->parsed()) return run_analyze(ana_path, ana_deep, ana_json, aut_limit, deep_limit);
        if (ver->parsed()) return run_verify_design(ver_path, ver_t, ver_json);
    } catch (const agt::parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const agt::bound_error& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return kExitBound;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return 0;
}
