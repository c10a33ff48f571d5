// Command-line front end. Subcommands cover parsing and validation, the
// handle structure, the block vector algebra, pasting, the compatibility
// graphs, tau-point normalization, the model tables and the crossing-number
// bound reports. Identical inputs produce byte-identical output.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "kc/bound.hpp"
#include "kc/compat.hpp"
#include "kc/enumerate.hpp"
#include "kc/fixtures.hpp"
#include "kc/handles.hpp"
#include "kc/models.hpp"
#include "kc/moves.hpp"
#include "kc/pasting.hpp"
#include "kc/surface.hpp"

using nlohmann::json;
using namespace kc;

namespace {

constexpr int kSchemaVersion = 1;
constexpr std::uint64_t kDefaultSeed = 0x5eed;

struct Options {
    std::string format = "text";  // text | structured | dot
    std::uint64_t seed = kDefaultSeed;
    int verbosity = 0;
};

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Diagram load_diagram(const std::string& pd_path, const std::string& gauss_path,
                     const std::string& pd_inline) {
    if (!pd_inline.empty()) return Diagram::from_pd(pd_inline);
    if (!pd_path.empty()) return Diagram::from_pd(slurp(pd_path));
    if (!gauss_path.empty()) return Diagram::from_gauss(slurp(gauss_path));
    throw std::runtime_error("no diagram given; use --pd, --gauss or --pd-code");
}

std::vector<int> parse_ints(const std::string& csv, size_t want, const char* what) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string field;
    while (std::getline(ss, field, ',')) out.push_back(std::stoi(field));
    if (want != 0 && out.size() != want)
        throw std::runtime_error(std::string("expected ") + std::to_string(want) + " values for " +
                                 what);
    return out;
}

BlockVector parse_xi(const std::string& csv) {
    auto v = parse_ints(csv, 9, "a block vector");
    BlockVector b;
    for (int i = 0; i < 9; ++i) b[i] = v[i];
    return b;
}

json meta(const Options& opt) {
    json m;
    m["schema_version"] = kSchemaVersion;
    m["seed"] = opt.seed;
    return m;
}

json diagram_json(const Diagram& d) {
    json j;
    j["crossings"] = d.crossings();
    j["edges"] = d.edge_count();
    j["faces"] = d.face_count();
    j["pd"] = d.to_pd();
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{"combinatorial calculus for composite-knot crossing bounds"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "output format: text, structured or dot")
        ->check(CLI::IsMember({"text", "structured", "dot"}));
    app.add_option("--seed", opt.seed, "seed for randomized sweeps (fixed default)");
    app.add_flag("-v,--verbose", opt.verbosity, "more output");

    std::string pd_path, gauss_path, pd_inline;
    auto add_diagram_opts = [&](CLI::App* cmd) {
        cmd->add_option("--pd", pd_path, "PD code file ('-' for stdin)");
        cmd->add_option("--gauss", gauss_path, "gauss code file");
        cmd->add_option("--pd-code", pd_inline, "PD code given inline");
    };

    auto* parse_cmd = app.add_subcommand("parse", "parse a diagram and print canonical data");
    add_diagram_opts(parse_cmd);

    auto* faces_cmd = app.add_subcommand("faces", "list the faces of a diagram");
    add_diagram_opts(faces_cmd);

    auto* validate_cmd =
        app.add_subcommand("validate", "check the contact condition on a diagram");
    add_diagram_opts(validate_cmd);

    auto* dstruct_cmd = app.add_subcommand("dstructure", "handle structure of a diagram");
    add_diagram_opts(dstruct_cmd);

    std::string xi_csv;
    auto* params_cmd = app.add_subcommand("params", "parameters of a block vector");
    params_cmd->add_option("--xi", xi_csv, "nine block coordinates")->required();

    std::string params_csv;
    auto* recon_cmd = app.add_subcommand("reconstruct", "block vector from seven parameters");
    recon_cmd->add_option("--params", params_csv, "Iv+,Iv0,Iv-,h1+,h1-,h2,kappa")->required();

    std::string xi1_csv, xi2_csv, xi3_csv, xi4_csv, bands_csv = "0,0";
    auto* paste_cmd = app.add_subcommand("paste", "paste four block vectors into a 0-handle");
    paste_cmd->add_option("--xi1", xi1_csv)->required();
    paste_cmd->add_option("--xi2", xi2_csv)->required();
    paste_cmd->add_option("--xi3", xi3_csv)->required();
    paste_cmd->add_option("--xi4", xi4_csv)->required();
    paste_cmd->add_option("--bands", bands_csv, "band counts b+,b-");

    std::string which_graph = "block";
    auto* compat_cmd = app.add_subcommand("compat-graph", "compatibility graphs");
    compat_cmd->add_option("--which", which_graph, "block or subclass")
        ->check(CLI::IsMember({"block", "subclass"}));

    std::string state_path, policy_name = "default", dir_name = "up";
    auto* norm_cmd = app.add_subcommand("normalize", "normalize a tau-point state");
    add_diagram_opts(norm_cmd);
    norm_cmd->add_option("--state", state_path, "tau state file")->required();
    norm_cmd->add_option("--policy", policy_name, "default or first")
        ->check(CLI::IsMember({"default", "first"}));
    norm_cmd->add_option("--dir", dir_name, "up or down")->check(CLI::IsMember({"up", "down"}));

    auto* models_cmd = app.add_subcommand("models", "piece model catalog and tables");

    std::string assign_path, default_models;
    auto* budget_cmd = app.add_subcommand("budget", "per-crossing budget certificate");
    add_diagram_opts(budget_cmd);
    budget_cmd->add_option("--assign", assign_path,
                           "assignment file: lines 'crossing: Model,Model,...'");
    budget_cmd->add_option("--default-models", default_models,
                           "model list applied to every crossing, e.g. X2");

    std::string components_csv, table_path;
    auto* bound_cmd = app.add_subcommand("bound", "crossing-number bound report");
    bound_cmd->add_option("--components", components_csv, "comma-separated knot names")
        ->required();
    bound_cmd->add_option("--table", table_path, "knot table csv (default: bundled)");
    add_diagram_opts(bound_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);  // prints help or the usage error
        return rc == 0 ? 0 : 2;
    }

    const bool structured = opt.format == "structured";
    const bool dot = opt.format == "dot";

    if (parse_cmd->parsed()) {
        Diagram d = load_diagram(pd_path, gauss_path, pd_inline);
        if (structured) {
            json j = diagram_json(d);
            j["meta"] = meta(opt);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "crossings " << d.crossings() << " edges " << d.edge_count()
                      << " faces " << d.face_count() << "\n"
                      << d.to_pd();
        }
        return 0;
    }

    if (faces_cmd->parsed()) {
        Diagram d = load_diagram(pd_path, gauss_path, pd_inline);
        auto fs = d.faces();
        if (structured) {
            json j;
            j["meta"] = meta(opt);
            j["count"] = fs.size();
            j["faces"] = json::array();
            for (const auto& f : fs) {
                json fj;
                fj["id"] = f.id;
                fj["degree"] = f.degree();
                fj["corners"] = json::array();
                for (auto [c, k] : f.corners) fj["corners"].push_back({c, k});
                j["faces"].push_back(fj);
            }
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << fs.size() << " faces\n";
            for (const auto& f : fs) {
                std::cout << "face " << f.id << " degree " << f.degree() << ":";
                for (auto [c, k] : f.corners) std::cout << " (" << c << "," << k << ")";
                std::cout << "\n";
            }
        }
        return 0;
    }

    if (validate_cmd->parsed()) {
        Diagram d = load_diagram(pd_path, gauss_path, pd_inline);
        auto rep = d.validate_minimal_adjacency();
        if (structured) {
            json j;
            j["meta"] = meta(opt);
            j["ok"] = rep.ok();
            j["violations"] = json::array();
            for (const auto& v : rep.issues) j["violations"].push_back(v.text);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << rep.to_string();
        }
        return rep.ok() ? 0 : 1;
    }

    if (dstruct_cmd->parsed()) {
        Diagram d = load_diagram(pd_path, gauss_path, pd_inline);
        DStructure s = DStructure::build(d);
        if (dot) {
            std::cout << s.to_dot();
        } else if (structured) {
            json j;
            j["meta"] = meta(opt);
            j["handles"] = {{"three", 2},
                            {"two", s.two_handles()},
                            {"one", s.one_handles()},
                            {"zero", s.zero_handles()}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "handles: 2 three, " << s.two_handles() << " two, " << s.one_handles()
                      << " one, " << s.zero_handles() << " zero\n";
            for (int f = 0; f < s.two_handles(); ++f) {
                std::cout << "walk f" << f << ":";
                for (const auto& h : s.mainbody_walk(f)) std::cout << ' ' << h.to_string();
                std::cout << "\n";
            }
        }
        return 0;
    }

    if (params_cmd->parsed()) {
        BlockVector v = parse_xi(xi_csv);
        ParamVector p = params(v);
        DerivedVector dv = derived_of(v);
        if (structured) {
            json j;
            j["meta"] = meta(opt);
            j["params"] = {p.iv_plus, p.iv_zero, p.iv_minus, p.h1_plus,
                           p.h1_minus, p.h2,      p.kappa};
            j["derived"] = {dv.a_plus, dv.a_minus, dv.h_plus, dv.h_minus, dv.eta, dv.sigma};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << p.to_string() << "\n" << dv.to_string() << "\n";
        }
        return 0;
    }

    if (recon_cmd->parsed()) {
        auto v = parse_ints(params_csv, 7, "parameters");
        ParamVector p;
        for (int i = 0; i < 7; ++i) p[i] = v[i];
        BlockVector xi = reconstruct(p);
        if (structured) {
            json j;
            j["meta"] = meta(opt);
            j["vector"] = xi.to_string();
            json coords = json::array();
            for (int i = 0; i < 9; ++i) coords.push_back(xi[i]);
            j["coordinates"] = coords;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << xi.to_string() << "\n";
        }
        return 0;
    }

    if (paste_cmd->parsed()) {
        auto bands = parse_ints(bands_csv, 2, "bands");
        ZeroHandleConfig cfg = paste_blocks(parse_xi(xi1_csv), parse_xi(xi2_csv),
                                            parse_xi(xi3_csv), parse_xi(xi4_csv),
                                            BandSpec{bands[0], bands[1]});
        if (structured) {
            json j;
            j["meta"] = meta(opt);
            j["case"] = cfg.case_tag;
            j["config"] = cfg.to_string();
            j["axis_points"] = cfg.total_axis_points();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << cfg.to_string() << "\n";
        }
        return 0;
    }

    if (compat_cmd->parsed()) {
        CompatGraph g = which_graph == "block" ? block_type_graph() : subclass_graph();
        if (dot) {
            std::cout << g.to_dot();
        } else if (structured) {
            json j;
            j["meta"] = meta(opt);
            j["vertices"] = g.vertices;
            j["edges"] = json::array();
            for (const auto& e : g.edges)
                j["edges"].push_back({{"a", g.vertices[e.a]},
                                      {"b", g.vertices[e.b]},
                                      {"provenance", e.provenance}});
            j["realizable_cliques"] = g.realizable_cliques;
            j["unwitnessed_triangles"] = g.unwitnessed_triangles;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << g.provenance_report();
        }
        return 0;
    }

    if (norm_cmd->parsed()) {
        Diagram d = load_diagram(pd_path, gauss_path, pd_inline);
        TauState st = TauState::parse(slurp(state_path), d);
        MovePolicy policy =
            policy_name == "first" ? first_successor_policy() : default_policy();
        Direction dir = dir_name == "up" ? Direction::Up : Direction::Down;
        auto res = normalize(st, dir, policy);
        if (structured) {
            json j;
            j["meta"] = meta(opt);
            j["fixpoint"] = res.fixpoint_reached;
            j["standard_form"] = is_standard_form(res.state);
            j["state"] = res.state.to_string();
            j["trace"] = json::array();
            for (const auto& tr : res.trace) j["trace"].push_back(tr.to_string());
            std::cout << j.dump(2) << "\n";
        } else {
            for (const auto& tr : res.trace) std::cout << tr.to_string() << "\n";
            std::cout << res.state.to_string();
            std::cout << "standard_form " << (is_standard_form(res.state) ? "yes" : "no")
                      << "\n";
        }
        return 0;
    }

    if (models_cmd->parsed()) {
        if (structured) {
            json j;
            j["meta"] = meta(opt);
            j["models"] = json::array();
            for (const auto& mi : model_catalog()) {
                j["models"].push_back({{"name", model_name(mi.model)},
                                       {"one_handle_like", mi.one_handle_like},
                                       {"boundary_sheets", mi.boundary_sheets},
                                       {"knot_arcs", mi.knot_arcs},
                                       {"final_fifteen", mi.in_final_fifteen},
                                       {"budget", max_crossings(mi.model)},
                                       {"budget_provenance",
                                        mi.model == Model::X3 || mi.model == Model::Zbar3
                                            ? "stated"
                                            : "derived"},
                                       {"note", mi.note}});
            }
            j["cooccurrence"] = json::array();
            for (const auto& t : cooccurrence_sets())
                j["cooccurrence"].push_back(
                    {{"case", t.case_tag}, {"models", t.to_string()},
                     {"total", per_crossing_bound(t).total}});
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << models_table_text();
        }
        return 0;
    }

    if (budget_cmd->parsed()) {
        Diagram d = load_diagram(pd_path, gauss_path, pd_inline);
        std::map<int, ModelSet> assignment;
        if (!default_models.empty()) {
            ModelSet ms;
            std::stringstream ss(default_models);
            std::string name;
            while (std::getline(ss, name, ',')) {
                auto m = model_from_name(name);
                if (!m) throw std::runtime_error("unknown model " + name);
                ms.models.push_back(*m);
            }
            std::sort(ms.models.begin(), ms.models.end());
            for (int c = 0; c < d.crossings(); ++c) assignment[c] = ms;
        }
        if (!assign_path.empty()) {
            std::istringstream in(slurp(assign_path));
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty() || line[0] == '#') continue;
                auto colon = line.find(':');
                if (colon == std::string::npos)
                    throw std::runtime_error("bad assignment line: " + line);
                int c = std::stoi(line.substr(0, colon));
                ModelSet ms;
                std::stringstream ss(line.substr(colon + 1));
                std::string name;
                while (std::getline(ss, name, ',')) {
                    name.erase(0, name.find_first_not_of(' '));
                    name.erase(name.find_last_not_of(' ') + 1);
                    if (name.empty()) continue;
                    auto m = model_from_name(name);
                    if (!m) throw std::runtime_error("unknown model " + name);
                    ms.models.push_back(*m);
                }
                std::sort(ms.models.begin(), ms.models.end());
                assignment[c] = ms;
            }
        }
        BudgetCertificate cert = budget_certificate(d, assignment);
        if (structured) {
            json j;
            j["meta"] = meta(opt);
            j["total"] = cert.aggregate.total_budget;
            j["cap"] = cert.aggregate.cap;
            j["within_cap"] = cert.aggregate.within_cap;
            j["degenerate"] = cert.degenerate;
            j["inequality"] = cert.aggregate.inequality;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << cert.to_string();
        }
        return cert.aggregate.within_cap ? 0 : 1;
    }

    if (bound_cmd->parsed()) {
        KnotTable table = table_path.empty() ? fixture_table()
                                             : load_knot_table(slurp(table_path));
        std::vector<std::string> names;
        std::stringstream ss(components_csv);
        std::string n;
        while (std::getline(ss, n, ',')) names.push_back(n);
        std::optional<Diagram> given;
        if (!pd_path.empty() || !gauss_path.empty() || !pd_inline.empty())
            given = load_diagram(pd_path, gauss_path, pd_inline);
        BoundReport rep =
            check_bound(names, table, given, [](const std::string& nm) {
                return fixture_diagram(nm);
            });
        if (structured) {
            json j;
            j["meta"] = meta(opt);
            j["components"] = rep.components;
            j["S"] = rep.component_sum;
            j["c"] = rep.diagram_crossings;
            j["lower_bound"] = rep.lower_bound.to_string();
            j["verdict"] = rep.verdict;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << rep.to_string();
        }
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
