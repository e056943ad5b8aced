#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "lss/decomposition.hpp"
#include "lss/forest.hpp"
#include "lss/ideal.hpp"
#include "lss/matroid.hpp"
#include "lss/sampling.hpp"
#include "lss/verify.hpp"

namespace {

using namespace lss;

// Built-in example trees: a spider with three degree-4 vertices and a full
// binary tree on 11 vertices.
const char* kFigure1 = "n=11; 1-2 2-3 2-4 2-5 3-6 3-7 3-8 5-9 5-10 5-11";
const char* kBinaryFigure5 = "n=11; 1-2 1-3 2-4 3-5 3-6 4-11 5-7 5-8 6-9 6-10";

Forest demo_graph(const std::string& name) {
    if (name == "figure1") return parse_forest(kFigure1);
    if (name == "binary-figure5") return parse_forest(kBinaryFigure5);
    auto colon = name.find(':');
    std::string kind = name.substr(0, colon);
    if (kind == "star" && colon != std::string::npos)
        return star_graph(std::stoi(name.substr(colon + 1)));
    if (kind == "path" && colon != std::string::npos) {
        int n = std::stoi(name.substr(colon + 1));
        std::vector<Edge> edges;
        for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
        return Forest(n, std::move(edges));
    }
    if (kind == "caterpillar" && colon != std::string::npos) {
        auto second = name.find(':', colon + 1);
        if (second == std::string::npos)
            throw SyntaxError("caterpillar demo needs caterpillar:k:t1,...,tk");
        int k = std::stoi(name.substr(colon + 1, second - colon - 1));
        std::vector<int> t;
        std::istringstream ts(name.substr(second + 1));
        std::string tok;
        while (std::getline(ts, tok, ',')) t.push_back(std::stoi(tok));
        if (static_cast<int>(t.size()) != k)
            throw SyntaxError("caterpillar demo needs exactly k leaf counts");
        return caterpillar_graph(k, t);
    }
    throw SyntaxError("unknown demo graph '" + name + "'");
}

Forest load_graph(const std::string& graph_file, const std::string& demo) {
    if (!demo.empty()) return demo_graph(demo);
    if (graph_file.empty())
        throw SyntaxError("supply a graph via --graph FILE or --demo NAME");
    std::ifstream in(graph_file);
    if (!in) throw SyntaxError("cannot open '" + graph_file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_forest(buf.str());
}

VertexSet parse_subset(const std::string& text) {
    VertexSet s;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        s.insert(std::stoi(tok));
    }
    return s;
}

std::string set_to_string(const VertexSet& s) {
    std::string out = "{";
    for (Vertex v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
    return out + "}";
}

void print_decomposition(const DecompositionResult& res, bool json) {
    if (json) {
        std::cout << res.to_json() << "\n";
        return;
    }
    std::cout << "n=" << res.n << " d=" << res.d << " components="
              << res.components.size() << "\n";
    for (const auto& c : res.components)
        std::cout << "  S=" << set_to_string(c.S) << " dim=" << c.dim
                  << " induced_edges=" << c.induced_edge_count << "\n";
    std::cout << "variety_dim=" << res.variety_dim << "\n";
}

int run_verify(const Forest& f, int d, const std::string& checks_csv,
               const SampleConfig& cfg, int depth, int samples) {
    std::vector<std::string> checks;
    std::istringstream is(checks_csv);
    std::string tok;
    while (std::getline(is, tok, ',')) checks.push_back(tok);

    nlohmann::json report;
    report["seed"] = cfg.seed;
    report["checks"] = nlohmann::json::array();
    bool all_ok = true;
    for (const std::string& check : checks) {
        nlohmann::json entry;
        entry["name"] = check;
        bool ok = false;
        if (check == "orthogonality") {
            Point p = sample_UG(f, d, cfg);
            ok = check_orthogonality(p, f).empty();
        } else if (check == "faithful") {
            Point p = sample_UG(f, d, cfg);
            ok = check_faithful(p, f);
        } else if (check == "realize") {
            Point p = sample_UG(f, d, cfg);
            ok = check_realizes(p, f, d);
        } else if (check == "jacobian") {
            DecompositionResult dec = enumerate_admissible(f, d);
            ok = true;
            nlohmann::json details = nlohmann::json::array();
            for (const auto& c : dec.components) {
                JacobianCheck jc = jacobian_dimension_check(f, d, c.S, cfg);
                nlohmann::json dj;
                dj["S"] = std::vector<Vertex>(c.S.begin(), c.S.end());
                dj["confirmed"] = jc.confirmed;
                dj["rank"] = jc.jacobian_rank;
                dj["retries"] = jc.retries;
                details.push_back(dj);
                ok = ok && jc.confirmed;
            }
            entry["components"] = details;
        } else if (check == "degeneration") {
            std::vector<Vertex> high;
            for (Vertex i = 1; i <= f.vertex_count(); ++i)
                if (f.degree(i) >= d) high.push_back(i);
            ok = true;
            for (size_t mask = 1; mask < (size_t{1} << high.size()); ++mask) {
                VertexSet s;
                for (size_t b = 0; b < high.size(); ++b)
                    if (mask & (size_t{1} << b)) s.insert(high[b]);
                if (is_admissible(f, d, s)) continue;
                ok = ok && degeneration_test(f, d, s, cfg);
            }
        } else if (check == "irredundancy") {
            IrredundancyReport rep = irredundancy_test(f, d, cfg);
            ok = rep.all_ok;
            entry["pairs"] = rep.pairs.size();
        } else if (check == "vanishing") {
            GeneratorSet gens = ideal_closure(f, d, depth);
            ok = vanishing_test(gens, f, d, samples, cfg);
        } else {
            throw SyntaxError("unknown check '" + check + "'");
        }
        entry["ok"] = ok;
        all_ok = all_ok && ok;
        report["checks"].push_back(entry);
    }
    report["all_ok"] = all_ok;
    std::cout << report.dump(2) << "\n";
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"irreducible decomposition of orthogonal representation "
                 "varieties of forest complements"};
    app.require_subcommand(1);

    std::string graph_file, demo, subset_csv, checks_csv = "orthogonality";
    std::string format = "m2";
    int d = 3, depth = 1, samples = 5;
    SampleConfig cfg;
    unsigned long long seed = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--graph", graph_file, "edge-list or JSON graph file");
        sub->add_option("--demo", demo,
                        "figure1|star:n|caterpillar:k:t1,...,tk|binary-figure5|"
                        "path:n");
        sub->add_option("--d", d, "ambient dimension (>= 3)");
    };

    auto* decompose = app.add_subcommand("decompose", "irreducible components");
    bool as_json = false;
    add_common(decompose);
    decompose->add_flag("--json", as_json, "JSON output");

    auto* dims = app.add_subcommand("dims", "dimension of the variety");
    add_common(dims);

    auto* matroid = app.add_subcommand("matroid", "paving matroid of the graph");
    add_common(matroid);

    auto* ideal = app.add_subcommand("ideal", "generators by substitution closure");
    add_common(ideal);
    ideal->add_option("--depth", depth, "closure depth");
    ideal->add_option("--subset", subset_csv,
                      "admissible subset for a component ideal, e.g. 3,5");

    auto* verify = app.add_subcommand("verify", "exact certification checks");
    add_common(verify);
    verify->add_option("--checks", checks_csv,
                       "comma list: orthogonality,faithful,realize,jacobian,"
                       "degeneration,irredundancy,vanishing");
    verify->add_option("--seed", seed, "RNG seed");
    verify->add_option("--pool", cfg.pool, "rational pool bound");
    verify->add_option("--retries", cfg.max_retries, "max resampling attempts");
    verify->add_option("--depth", depth, "closure depth for vanishing");
    verify->add_option("--samples", samples, "sample count for vanishing");

    auto* exp = app.add_subcommand("export", "CAS script for the generators");
    add_common(exp);
    exp->add_option("--depth", depth, "closure depth");
    exp->add_option("--subset", subset_csv, "admissible subset, e.g. 3,5");
    exp->add_option("--format", format, "m2|singular|json");

    auto* demo_cmd = app.add_subcommand("demo", "print the built-in graphs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    cfg.seed = seed;
    try {
        if (demo_cmd->parsed()) {
            std::cout << "figure1: " << demo_graph("figure1").serialize() << "\n";
            std::cout << "binary-figure5: "
                      << demo_graph("binary-figure5").serialize() << "\n";
            std::cout << "star:8: " << demo_graph("star:8").serialize() << "\n";
            std::cout << "caterpillar:9:0,4,0,2,1,2,3,3,0: "
                      << demo_graph("caterpillar:9:0,4,0,2,1,2,3,3,0").serialize()
                      << "\n";
            std::cout << "path:6: " << demo_graph("path:6").serialize() << "\n";
            return 0;
        }
        Forest f = load_graph(graph_file, demo);
        if (decompose->parsed()) {
            print_decomposition(enumerate_admissible(f, d), as_json);
            return 0;
        }
        if (dims->parsed()) {
            std::cout << enumerate_admissible(f, d).variety_dim << "\n";
            return 0;
        }
        if (matroid->parsed()) {
            std::cout << matroid_of_forest(f, d).to_json() << "\n";
            return 0;
        }
        if (ideal->parsed()) {
            if (!subset_csv.empty()) {
                ComponentIdeal ci =
                    component_ideal(f, d, parse_subset(subset_csv), depth);
                std::cout << export_component_ideal(ci, f.vertex_count(),
                                                    ExportFormat::Json);
            } else {
                GeneratorSet gens = ideal_closure(f, d, depth);
                auto counts = gens.level_counts();
                for (size_t lvl = 0; lvl < counts.size(); ++lvl)
                    std::cout << "level " << lvl << ": " << counts[lvl]
                              << " generators\n";
                std::vector<Polynomial> top(gens.top().begin(),
                                            gens.top().end());
                std::cout << export_generators(top, f.vertex_count(), d,
                                               ExportFormat::Json);
            }
            return 0;
        }
        if (exp->parsed()) {
            ExportFormat fmt = parse_export_format(format);
            if (!subset_csv.empty()) {
                ComponentIdeal ci =
                    component_ideal(f, d, parse_subset(subset_csv), depth);
                std::cout << export_component_ideal(ci, f.vertex_count(), fmt);
            } else {
                GeneratorSet gens = ideal_closure(f, d, depth);
                std::vector<Polynomial> top(gens.top().begin(),
                                            gens.top().end());
                std::cout << export_generators(top, f.vertex_count(), d, fmt);
            }
            return 0;
        }
        if (verify->parsed())
            return run_verify(f, d, checks_csv, cfg, depth, samples);
    } catch (const SamplingFailed& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
