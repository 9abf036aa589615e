#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cutpoly/cutlattice.hpp"
#include "cutpoly/graph.hpp"
#include "cutpoly/io.hpp"
#include "cutpoly/lifting.hpp"
#include "cutpoly/minors.hpp"
#include "cutpoly/normality.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using cutpoly::Graph;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct GlobalOpts {
    std::string format = "text";
    int threads = 0;
    long long budget = cutpoly::kDefaultSearchBudget;
    unsigned seed = 0;
};

std::string graph_checksum(const Graph& g) {
    // FNV-1a over the canonical edge list
    unsigned long long h = 1469598103934665603ULL;
    auto mix = [&](unsigned long long v) {
        h ^= v;
        h *= 1099511628211ULL;
    };
    mix(static_cast<unsigned long long>(g.num_vertices()));
    for (auto [u, v] : g.edges()) {
        mix(static_cast<unsigned long long>(u));
        mix(static_cast<unsigned long long>(v));
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", h);
    return buf;
}

Json digest(const Graph& g) {
    return Json{{"n", g.num_vertices()}, {"m", g.num_edges()}, {"checksum", graph_checksum(g)}};
}

Json witness_json(const cutpoly::MinorWitness& w) {
    Json sets = Json::object();
    for (const auto& [pv, set] : w.branch_sets) sets[std::to_string(pv)] = set;
    return Json{{"branch_sets", sets}};
}

Json hole_json(const cutpoly::Hole& h) {
    return Json{{"x", h.point.x}, {"alpha", h.point.alpha}};
}

std::string status_name(cutpoly::NormalityVerdict::Status s) {
    using S = cutpoly::NormalityVerdict::Status;
    switch (s) {
        case S::NormalCertified: return "normal_certified";
        case S::NormalUpToDegree: return "normal_up_to_degree";
        case S::NotNormal: return "not_normal";
        case S::Unknown: return "unknown";
    }
    return "unknown";
}

Json verdict_json(const cutpoly::NormalityVerdict& v) {
    Json j;
    j["status"] = status_name(v.status);
    j["rules"] = v.rules_fired;
    j["search_degree"] = v.search_degree;
    j["hole"] = v.hole ? hole_json(*v.hole) : Json(nullptr);
    j["minor_witness"] = v.minor_witness ? witness_json(*v.minor_witness) : Json(nullptr);
    return j;
}

class Reporter {
public:
    Reporter(const GlobalOpts& opts, std::string command)
        : opts_(opts), start_(std::chrono::steady_clock::now()) {
        report_["schema"] = 1;
        report_["command"] = std::move(command);
    }

    void set_digest(const Graph& g) { report_["digest"] = digest(g); }
    void set_result(Json result) { report_["result"] = std::move(result); }

    void emit(std::ostream& out) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start_)
                      .count();
        report_["timing_ms"] = ms;
        report_["budget"] = Json{{"limit", opts_.budget}};
        if (opts_.format == "json") {
            out << report_.dump(2) << "\n";
        } else {
            print_text(out, report_);
        }
    }

    Json& result() { return report_["result"]; }

private:
    static void print_text(std::ostream& out, const Json& j, int indent = 0) {
        std::string pad(indent, ' ');
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.key() == "schema") continue;
            if (it->is_object()) {
                out << pad << it.key() << ":\n";
                print_text(out, *it, indent + 2);
            } else {
                out << pad << it.key() << ": " << it->dump() << "\n";
            }
        }
    }

    const GlobalOpts& opts_;
    Json report_;
    std::chrono::steady_clock::time_point start_;
};

cutpoly::SearchOptions search_opts(const GlobalOpts& g) {
    cutpoly::SearchOptions o;
    o.budget = g.budget;
    o.threads = g.threads;
    return o;
}

// Accepts catalog names in compact form (K5, C6, W4, P3, K33, grid3x4) or
// as a name plus explicit parameters.
Graph parse_named(const std::string& name, const std::vector<int>& params) {
    if (!params.empty()) return cutpoly::make_named(name, params);
    if (name == "V8" || name == "prism" || name == "K5e") return cutpoly::make_named(name);
    if (name.size() >= 2 && (name[0] == 'K' || name[0] == 'C' || name[0] == 'W' || name[0] == 'P')) {
        std::string head(1, name[0]);
        std::string tail = name.substr(1);
        auto comma = tail.find_first_of(",x");
        if (head == "K" && comma != std::string::npos)
            return cutpoly::make_named("Kab", {std::stoi(tail.substr(0, comma)),
                                               std::stoi(tail.substr(comma + 1))});
        if (head == "K" && tail.size() == 2 && isdigit(tail[0]) && isdigit(tail[1]))
            return cutpoly::make_named("Kab", {tail[0] - '0', tail[1] - '0'});
        return cutpoly::make_named(head, {std::stoi(tail)});
    }
    if (name.rfind("grid", 0) == 0) {
        auto tail = name.substr(4);
        auto x = tail.find('x');
        if (x != std::string::npos)
            return cutpoly::make_named("grid", {std::stoi(tail.substr(0, x)),
                                                std::stoi(tail.substr(x + 1))});
    }
    return cutpoly::make_named(name, params);
}

int exit_from_verdict(const cutpoly::NormalityVerdict& v) {
    using S = cutpoly::NormalityVerdict::Status;
    if (v.status == S::NotNormal) return kExitViolation;
    if (v.status == S::Unknown) return kExitBudget;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for cut polytopes: membership oracles, "
                 "normality certification and constructive lifting"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--threads", g.threads, "worker threads (0 = all)");
    app.add_option("--budget", g.budget, "search node budget");
    app.add_option("--seed", g.seed, "seed for randomized helpers");

    std::string file, file2, point_str, oracle = "lattice", pattern, edge_str, shared_str;
    std::string out_file, dec1_file, dec2_file, gen_name;
    std::vector<int> gen_params;
    std::vector<std::string> files;
    long long max_degree = 3;
    bool full = false;

    auto* gen = app.add_subcommand("gen", "generate a catalog graph");
    gen->add_option("name", gen_name)->required();
    gen->add_option("params", gen_params);
    gen->add_option("-o,--output", out_file, "output file (default stdout)");

    auto* cuts = app.add_subcommand("cuts", "list the cut semimetric generators");
    cuts->add_option("file", file)->required();

    auto* facets = app.add_subcommand("facets", "cycle-inequality description (K5-minor-free only)");
    facets->add_option("file", file)->required();

    auto* member = app.add_subcommand("member", "membership oracles");
    member->add_option("file", file)->required();
    member->add_option("--point", point_str)->required();
    member->add_option("--oracle", oracle)->check(CLI::IsMember({"lattice", "cone", "semigroup"}));

    auto* normality = app.add_subcommand("normality", "bounded or full hole search");
    normality->add_option("file", file)->required();
    normality->add_option("--max-degree", max_degree);
    normality->add_flag("--full", full, "certify to degree |E|-1");

    auto* classify = app.add_subcommand("classify", "theorem-based classification");
    classify->add_option("file", file)->required();

    auto* hilbert = app.add_subcommand("hilbert", "nonhomogeneous Hilbert-basis violation search");
    hilbert->add_option("file", file)->required();
    hilbert->add_option("--max-degree", max_degree);

    auto* lift = app.add_subcommand("lift-delete", "lift a point across an edge deletion");
    lift->add_option("file", file)->required();
    lift->add_option("--edge", edge_str, "edge u,v present in the graph")->required();
    lift->add_option("--point", point_str, "point of the deleted graph, `x1 .. xm ; alpha`")->required();

    auto* merge = app.add_subcommand("merge", "merge decompositions across a clique sum");
    merge->add_option("file1", file)->required();
    merge->add_option("file2", file2)->required();
    merge->add_option("--shared", shared_str, "shared clique pairs v:w,...")->required();
    merge->add_option("--dec1", dec1_file)->required();
    merge->add_option("--dec2", dec2_file)->required();

    auto* minor = app.add_subcommand("minor", "minor containment test");
    minor->add_option("file", file)->required();
    minor->add_option("--pattern", pattern)->required();

    auto* explore = app.add_subcommand("explore", "batch classify + bounded search");
    explore->add_option("files", files)->required();
    explore->add_option("--max-degree", max_degree);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

#ifdef _OPENMP
    if (g.threads > 0) omp_set_num_threads(g.threads);
#endif

    try {
        if (*gen) {
            auto graph = parse_named(gen_name, gen_params);
            if (out_file.empty()) {
                cutpoly::write_graph(std::cout, graph);
            } else {
                cutpoly::write_graph_file(out_file, graph);
            }
            return kExitOk;
        }
        if (*cuts) {
            auto graph = cutpoly::read_graph_file(file);
            Reporter r(g, "cuts");
            r.set_digest(graph);
            auto basis = cutpoly::cut_generators(graph);
            Json gens = Json::array();
            for (const auto& cv : basis.generators)
                gens.push_back(Json{{"shore", cv.shore}, {"coords", cv.coords}});
            r.set_result(Json{{"count", basis.generators.size()}, {"generators", gens}});
            r.emit(std::cout);
            return kExitOk;
        }
        if (*facets) {
            auto graph = cutpoly::read_graph_file(file);
            Reporter r(g, "facets");
            r.set_digest(graph);
            auto sys = cutpoly::facet_inequalities(graph);
            Json ineqs = Json::array();
            for (const auto& iq : sys.cycle_inequalities)
                ineqs.push_back(Json{{"cycle", iq.cycle.vertices}, {"odd_set", iq.odd_set}});
            r.set_result(Json{{"box_bounds", sys.num_box},
                              {"cycle_inequalities", sys.cycle_inequalities.size()},
                              {"total", sys.num_box + sys.cycle_inequalities.size()},
                              {"inequalities", ineqs}});
            r.emit(std::cout);
            return kExitOk;
        }
        if (*member) {
            auto graph = cutpoly::read_graph_file(file);
            Reporter r(g, "member");
            r.set_digest(graph);
            bool inside = false;
            Json extra = Json(nullptr);
            if (oracle == "cone") {
                auto p = cutpoly::parse_rat_point(point_str);
                if (p.has_alpha) {
                    inside = cutpoly::ConeOracle(graph).contains(p.x, p.alpha);
                } else {
                    inside = cutpoly::in_cone_nonhomogeneous(graph, p.x);
                }
            } else {
                auto p = cutpoly::parse_int_point(point_str);
                if (oracle == "lattice") {
                    inside = cutpoly::in_lattice_nonhomogeneous(graph, p.x);
                } else {
                    if (!p.has_alpha) throw std::runtime_error("semigroup oracle needs `; alpha`");
                    auto d = cutpoly::decompose(graph, {p.x, p.alpha}, g.budget);
                    if (d.outcome == cutpoly::SearchOutcome::BudgetExceeded)
                        throw cutpoly::BudgetExceededError();
                    inside = d.found();
                    if (d.found()) extra = Json{{"parts", d.decomposition->parts}};
                }
            }
            r.set_result(Json{{"oracle", oracle}, {"member", inside}, {"witness", extra}});
            r.emit(std::cout);
            return kExitOk;
        }
        if (*normality) {
            auto graph = cutpoly::read_graph_file(file);
            Reporter r(g, "normality");
            r.set_digest(graph);
            auto mode = full ? cutpoly::NormalityMode::full_certification()
                             : cutpoly::NormalityMode::bounded(max_degree);
            auto v = cutpoly::verify_normality(graph, mode, search_opts(g));
            r.set_result(verdict_json(v));
            r.emit(std::cout);
            return exit_from_verdict(v);
        }
        if (*classify) {
            auto graph = cutpoly::read_graph_file(file);
            Reporter r(g, "classify");
            r.set_digest(graph);
            auto v = cutpoly::classify_normality(graph, g.budget);
            r.set_result(verdict_json(v));
            r.emit(std::cout);
            return exit_from_verdict(v);
        }
        if (*hilbert) {
            auto graph = cutpoly::read_graph_file(file);
            Reporter r(g, "hilbert");
            r.set_digest(graph);
            auto h = cutpoly::hilbert_check(graph, max_degree, search_opts(g));
            Json res;
            switch (h.status) {
                case cutpoly::HilbertResult::Status::NoViolationUpTo:
                    res = Json{{"status", "no_violation_up_to"}, {"bound", h.bound}};
                    break;
                case cutpoly::HilbertResult::Status::Violation:
                    res = Json{{"status", "violation"}, {"witness", *h.witness}};
                    break;
                case cutpoly::HilbertResult::Status::BudgetExceeded:
                    res = Json{{"status", "budget_exceeded"}};
                    break;
            }
            r.set_result(res);
            r.emit(std::cout);
            if (h.status == cutpoly::HilbertResult::Status::Violation) return kExitViolation;
            if (h.status == cutpoly::HilbertResult::Status::BudgetExceeded) return kExitBudget;
            return kExitOk;
        }
        if (*lift) {
            auto graph = cutpoly::read_graph_file(file);
            Reporter r(g, "lift-delete");
            r.set_digest(graph);
            auto comma = edge_str.find(',');
            if (comma == std::string::npos) throw std::runtime_error("--edge expects u,v");
            int u = std::stoi(edge_str.substr(0, comma));
            int v = std::stoi(edge_str.substr(comma + 1));
            int e0 = graph.edge_index(u, v);
            if (e0 < 0) throw std::runtime_error("edge not present in graph");
            auto p = cutpoly::parse_int_point(point_str);
            if (!p.has_alpha) throw std::runtime_error("point needs `; alpha`");
            auto bounds = cutpoly::gamma_bounds(graph, e0, p.x, p.alpha);
            auto lifted = cutpoly::lift_deletion(graph, e0, p.x, p.alpha);
            Json bj{{"lower", bounds.lower}, {"upper", bounds.upper}};
            if (bounds.has_cycle) {
                bj["x_max"] = bounds.x_max;
                bj["x_min"] = bounds.x_min;
            }
            bj["parity"] = bounds.parity_constrained ? Json(bounds.parity) : Json(nullptr);
            r.set_result(Json{{"gamma", lifted.x[e0]},
                              {"bounds", bj},
                              {"lifted", Json{{"x", lifted.x}, {"alpha", lifted.alpha}}}});
            r.emit(std::cout);
            return kExitOk;
        }
        if (*merge) {
            cutpoly::CliqueSumSpec spec;
            spec.g1 = cutpoly::read_graph_file(file);
            spec.g2 = cutpoly::read_graph_file(file2);
            std::istringstream ss(shared_str);
            std::string pair;
            while (std::getline(ss, pair, ',')) {
                auto colon = pair.find(':');
                if (colon == std::string::npos)
                    throw std::runtime_error("--shared expects v:w pairs");
                spec.shared.emplace_back(std::stoi(pair.substr(0, colon)),
                                         std::stoi(pair.substr(colon + 1)));
            }
            auto dec1 = cutpoly::read_shores_file(dec1_file);
            auto dec2 = cutpoly::read_shores_file(dec2_file);
            auto merged = cutpoly::merge_clique_sum(spec, dec1, dec2);
            auto cs = cutpoly::clique_sum(spec);
            Reporter r(g, "merge");
            r.set_digest(cs.glued);
            Json shores = Json::array();
            for (const auto& s : merged) shores.push_back(s);
            r.set_result(Json{{"degree", merged.size()}, {"shores", shores}});
            r.emit(std::cout);
            return kExitOk;
        }
        if (*minor) {
            auto graph = cutpoly::read_graph_file(file);
            Reporter r(g, "minor");
            r.set_digest(graph);
            auto pat = parse_named(pattern, {});
            auto res = cutpoly::has_minor(graph, pat, g.budget);
            if (res.outcome == cutpoly::SearchOutcome::BudgetExceeded)
                throw cutpoly::BudgetExceededError();
            r.set_result(Json{{"pattern", pattern},
                              {"minor", res.found()},
                              {"witness", res.found() ? witness_json(*res.witness) : Json(nullptr)}});
            r.emit(std::cout);
            return kExitOk;
        }
        if (*explore) {
            bool any_violation = false;
            for (const auto& path : files) {
                auto graph = cutpoly::read_graph_file(path);
                Json j;
                j["schema"] = 1;
                j["file"] = path;
                j["digest"] = digest(graph);
                auto cls = cutpoly::classify_normality(graph, g.budget);
                j["classify"] = verdict_json(cls);
                auto v = cutpoly::verify_normality(graph, cutpoly::NormalityMode::bounded(max_degree),
                                                   search_opts(g));
                j["search"] = verdict_json(v);
                if (cls.status == cutpoly::NormalityVerdict::Status::NotNormal ||
                    v.status == cutpoly::NormalityVerdict::Status::NotNormal)
                    any_violation = true;
                std::cout << j.dump() << "\n";
            }
            return any_violation ? kExitViolation : kExitOk;
        }
    } catch (const cutpoly::BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const cutpoly::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
