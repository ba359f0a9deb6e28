// dicolor: build circulant tournaments, enumerate acyclic colorings, analyze
// dicoloring graphs, construct recoloring walks and run the claim checks.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dicolor/dicolor.hpp"

namespace {

using namespace dicolor;

enum exit_code { ok = 0, verification_failed = 1, usage = 2, resource_cap = 3 };

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct source_options {
    std::optional<int> circulant;
    std::optional<std::string> reversed;  // jump number or "none"
    std::optional<std::string> file;
    std::optional<unsigned> delete_vertex;

    void attach(CLI::App* app) {
        app->add_option("--circulant", circulant, "circulant tournament C_{2n+1} with half order n")->check(CLI::Range(1, 2048));
        app->add_option("--reversed", reversed, "reversed jump j of the circulant (or 'none')");
        app->add_option("--file", file, "digraph file ('digraph N' + arcs, or 'circulant n j|none')");
        app->add_option("--delete", delete_vertex, "delete this vertex after building");
    }

    /// With `fallback`, an absent source means that circulant.
    digraph load(std::optional<circulant_spec> fallback = std::nullopt) const {
        if (fallback && !circulant && !file && !reversed && !delete_vertex) return circulant_tournament(*fallback);
        if (circulant.has_value() == file.has_value())
            throw usage_error("give exactly one digraph source: --circulant n or --file path");
        if (reversed && !circulant) throw usage_error("--reversed needs --circulant");
        digraph d;
        if (circulant) {
            circulant_spec spec{*circulant, std::nullopt};
            if (reversed && *reversed != "none") {
                try {
                    std::size_t used = 0;
                    spec.reversed_jump = std::stoi(*reversed, &used);
                    if (used != reversed->size()) throw std::invalid_argument(*reversed);
                } catch (const std::logic_error&) {
                    throw usage_error("--reversed expects an integer or 'none'");
                }
            }
            validate(spec);
            d = circulant_tournament(spec);
        } else {
            std::ifstream in(*file);
            if (!in) throw usage_error("cannot open " + *file);
            d = parse_digraph(in);
        }
        if (delete_vertex) {
            if (*delete_vertex >= d.num_vertices()) throw usage_error("--delete vertex out of range");
            d = dicolor::delete_vertex(d, *delete_vertex);
        }
        return d;
    }
};

void write_output(const std::string& text, const std::optional<std::string>& path) {
    if (!path) {
        std::cout << text;
        return;
    }
    std::ofstream out(*path);
    if (!out) throw usage_error("cannot write " + *path);
    out << text;
}

coloring parse_valid_coloring(const digraph& d, const std::string& text, unsigned k, const std::string& what) {
    const coloring c = parse_coloring(text, k);
    if (c.size() != d.num_vertices())
        throw usage_error(what + " has " + std::to_string(c.size()) + " entries; the digraph has " +
                          std::to_string(d.num_vertices()) + " vertices");
    if (auto bad = find_cyclic_class(d, c)) {
        std::ostringstream msg;
        msg << what << " is not acyclic: class " << static_cast<unsigned>(bad->class_color) << " {";
        for (std::size_t i = 0; i < bad->members.size(); ++i) msg << (i ? "," : "") << bad->members[i];
        msg << "} contains the cycle ";
        for (vertex v : bad->cycle) msg << v << " -> ";
        msg << bad->cycle.front();
        throw usage_error(msg.str());
    }
    return c;
}

std::vector<color> parse_color_list(const std::string& text) {
    std::vector<color> out;
    std::stringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            const int v = std::stoi(tok);
            if (v < 1 || v > static_cast<int>(max_palette)) throw std::out_of_range(tok);
            out.push_back(static_cast<color>(v));
        } catch (const std::logic_error&) {
            throw usage_error("bad color '" + tok + "' in list '" + text + "'");
        }
    }
    return out;
}

/// "a..b" or a single integer.
std::pair<unsigned, unsigned> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const auto v = static_cast<unsigned>(std::stoul(text));
            return {v, v};
        }
        return {static_cast<unsigned>(std::stoul(text.substr(0, dots))),
                static_cast<unsigned>(std::stoul(text.substr(dots + 2)))};
    } catch (const std::logic_error&) {
        throw usage_error("bad k range '" + text + "'; expected a..b");
    }
}

void check_palette(const digraph& d, unsigned k, bool allow_empty) {
    if (k < 1 || k > max_palette) throw usage_error("-k must be in 1.." + std::to_string(max_palette));
    if (!key_fits(d.num_vertices(), k))
        throw capacity_error("k^N does not fit the 64-bit coloring key", d.num_vertices());
    if (!allow_empty && static_cast<int>(k) < dichromatic_number(d))
        throw usage_error("k = " + std::to_string(k) + " is below the dichromatic number " +
                          std::to_string(dichromatic_number(d)) + "; pass --allow-empty to analyze the empty graph");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acyclic colorings of digraphs and their reconfiguration graphs"};
    app.require_subcommand(1);

    // gen
    source_options gen_src;
    std::optional<std::string> gen_out;
    bool gen_spec_line = false;
    auto* gen = app.add_subcommand("gen", "write a digraph in the text format");
    gen_src.attach(gen);
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");
    gen->add_flag("--spec-line", gen_spec_line, "write circulants as a one-line 'circulant n j' header");

    // analyze
    source_options an_src;
    unsigned an_k = 0;
    std::string an_format = "text";
    bool an_no_orbit = false, an_allow_empty = false;
    unsigned an_threads = 0;
    std::optional<std::string> an_out;
    auto* analyze_cmd = app.add_subcommand("analyze", "statistics of the k-dicoloring graph");
    an_src.attach(analyze_cmd);
    analyze_cmd->add_option("-k", an_k, "number of colors")->required();
    analyze_cmd->add_option("--format", an_format, "text or json")->check(CLI::IsMember({"text", "json"}));
    analyze_cmd->add_flag("--no-orbit", an_no_orbit, "disable orbit reduction of BFS sources");
    analyze_cmd->add_flag("--allow-empty", an_allow_empty, "allow k below the dichromatic number");
    analyze_cmd->add_option("--threads", an_threads, "BFS worker threads (0 = all cores)");
    analyze_cmd->add_option("-o,--output", an_out, "output file (default stdout)");

    // table
    source_options tb_src;
    std::string tb_range = "3..5";
    std::string tb_format = "text";
    bool tb_heavy = false, tb_no_orbit = false;
    double tb_budget = budget_from_env();
    unsigned tb_threads = 0;
    auto* table = app.add_subcommand("table", "one analysis row per k");
    tb_src.attach(table);
    table->add_option("-k,--k", tb_range, "k range a..b (default 3..5)");
    table->add_option("--format", tb_format, "text or json")->check(CLI::IsMember({"text", "json"}));
    table->add_flag("--heavy", tb_heavy, "run rows above the light threshold");
    table->add_option("--budget", tb_budget, "max k^N per row");
    table->add_flag("--no-orbit", tb_no_orbit, "disable orbit reduction");
    table->add_option("--threads", tb_threads, "BFS worker threads (0 = all cores)");

    // dist
    source_options ds_src;
    unsigned ds_k = 0;
    std::string ds_a, ds_b;
    bool ds_show = false;
    auto* dist = app.add_subcommand("dist", "reconfiguration distance between two colorings");
    ds_src.attach(dist);
    dist->add_option("-k", ds_k, "number of colors")->required();
    dist->add_option("alpha", ds_a, "first coloring, e.g. 1,1,2")->required();
    dist->add_option("beta", ds_b, "second coloring")->required();
    dist->add_flag("--show-walk", ds_show, "print one shortest walk");

    // walk
    source_options wk_src;
    std::string wk_builder;
    unsigned wk_k = 0;
    std::string wk_from, wk_to, wk_classes;
    unsigned wk_pair = 0, wk_class = 0;
    auto* walk = app.add_subcommand("walk", "build a recoloring walk with one of the walk builders");
    wk_src.attach(walk);
    walk->add_option("builder", wk_builder, "singletons | pair | interval")
        ->required()
        ->check(CLI::IsMember({"singletons", "pair", "interval"}));
    walk->add_option("-k", wk_k, "number of colors")->required();
    walk->add_option("--from", wk_from, "start coloring")->required();
    walk->add_option("--to", wk_to, "target coloring (singletons, pair)");
    walk->add_option("--classes", wk_classes, "designated singleton colors, e.g. 1,2,3");
    walk->add_option("--pair-class", wk_pair, "the two-vertex target class (pair)");
    walk->add_option("--class", wk_class, "class to extend to an interval (interval)");

    // verify
    verify_options vf;
    vf.budget = budget_from_env();
    std::string vf_claims;
    std::optional<std::string> vf_json;
    bool vf_list = false;
    auto* verify = app.add_subcommand("verify", "run the registered claim checks");
    verify->add_option("--claims", vf_claims, "comma-separated claim ids (default all)");
    verify->add_option("--budget", vf.budget, "max k^N per instance (env DICOLOR_BUDGET)");
    verify->add_flag("--heavy", vf.heavy, "include heavy instances");
    verify->add_option("--json", vf_json, "write the JSON summary to this path");
    verify->add_option("--threads", vf.threads, "BFS worker threads (0 = all cores)");
    verify->add_option("--seed", vf.seed, "seed for randomized checks");
    verify->add_option("--instances", vf.random_instances, "instances per randomized check");
    verify->add_flag("--list", vf_list, "list claim ids and exit");

    // export
    source_options ex_src;
    unsigned ex_k = 0;
    std::string ex_format = "dot";
    std::size_t ex_cap = default_export_cap;
    std::optional<std::string> ex_out;
    bool ex_allow_empty = false;
    auto* exp = app.add_subcommand("export", "write the dicoloring graph as DOT or CSV");
    ex_src.attach(exp);
    exp->add_option("-k", ex_k, "number of colors")->required();
    exp->add_option("--format", ex_format, "dot or csv")->check(CLI::IsMember({"dot", "csv"}));
    exp->add_option("--cap", ex_cap, "refuse graphs with more nodes than this");
    exp->add_option("-o,--output", ex_out, "output file (default stdout)");
    exp->add_flag("--allow-empty", ex_allow_empty, "allow k below the dichromatic number");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        if (*gen) {
            write_output(format_digraph(gen_src.load(), gen_spec_line), gen_out);
            return ok;
        }

        if (*analyze_cmd) {
            const auto d = an_src.load();
            check_palette(d, an_k, an_allow_empty);
            const auto rep = analyze(d, an_k, {!an_no_orbit, an_threads});
            write_output(an_format == "json" ? to_json(rep).dump(2) + "\n" : to_text(rep), an_out);
            return ok;
        }

        if (*table) {
            const auto d = tb_src.load(circulant_spec{3, 3});
            const auto [lo, hi] = parse_range(tb_range);
            constexpr double light_threshold = 2e5;
            nlohmann::json rows = nlohmann::json::array();
            if (tb_format == "text") std::cout << table_header() << '\n';
            for (unsigned k = lo; k <= hi && lo <= hi; ++k) {
                const double cost = candidate_functions(d.num_vertices(), k);
                std::string skip;
                if (cost > tb_budget)
                    skip = "k^N exceeds budget";
                else if (cost > light_threshold && !tb_heavy)
                    skip = "heavy row; pass --heavy";
                else if (static_cast<int>(k) < dichromatic_number(d))
                    skip = "k below the dichromatic number";
                if (!skip.empty()) {
                    if (tb_format == "text")
                        std::cout << "k=" << k << "  skipped (" << skip << ")\n";
                    else
                        rows.push_back({{"k", k}, {"skipped", skip}});
                    continue;
                }
                const auto rep = analyze(d, k, {!tb_no_orbit, tb_threads});
                if (tb_format == "text")
                    std::cout << table_row(rep) << std::endl;
                else
                    rows.push_back(to_json(rep));
            }
            if (tb_format == "json") std::cout << rows.dump(2) << '\n';
            return ok;
        }

        if (*dist) {
            const auto d = ds_src.load();
            check_palette(d, ds_k, false);
            const auto a = parse_valid_coloring(d, ds_a, ds_k, "alpha");
            const auto b = parse_valid_coloring(d, ds_b, ds_k, "beta");
            const auto path = shortest_path(d, a, b);
            if (!path) {
                std::cout << "unreachable\n";
                return ok;
            }
            std::cout << path->size() - 1 << '\n';
            if (ds_show)
                for (const auto& c : *path) std::cout << format_coloring(c) << '\n';
            return ok;
        }

        if (*walk) {
            const auto d = wk_src.load();
            check_palette(d, wk_k, false);
            const auto a = parse_valid_coloring(d, wk_from, wk_k, "start coloring");
            recoloring_walk w;
            std::size_t bound = 0;
            if (wk_builder == "interval") {
                if (!wk_class) throw usage_error("interval needs --class");
                w = extend_class_to_interval(d, a, static_cast<color>(wk_class));
                const std::size_t c0 = a.color_class(static_cast<color>(wk_class)).size();
                const auto n = static_cast<std::size_t>(d.provenance()->half_order);
                bound = c0 <= 1 ? n - c0 : n + 2 - c0;
            } else {
                if (wk_to.empty() || wk_classes.empty()) throw usage_error(wk_builder + " needs --to and --classes");
                const auto b = parse_valid_coloring(d, wk_to, wk_k, "target coloring");
                const auto classes = parse_color_list(wk_classes);
                if (wk_builder == "singletons") {
                    w = walk_singleton_classes(d, a, b, classes);
                    bound = classes.size();
                } else {
                    if (!wk_pair) throw usage_error("pair needs --pair-class");
                    w = walk_singletons_plus_pair(d, a, b, static_cast<color>(wk_pair), classes);
                    bound = classes.size() + 2;
                }
            }
            const auto v = validate_walk(d, w);
            std::cout << format_walk(w);
            std::cout << "# length " << w.length() << ", bound " << bound << '\n';
            std::cout << "# end " << format_coloring(w.end()) << '\n';
            if (v.ok) {
                std::cout << "# valid\n";
                return ok;
            }
            std::cout << "# invalid";
            if (v.first_invalid_step) std::cout << " at step " << *v.first_invalid_step;
            std::cout << ": " << v.reason << '\n';
            return verification_failed;
        }

        if (*verify) {
            if (vf_list) {
                for (const auto& e : registry()) std::cout << e.id << "  " << e.statement << '\n';
                return ok;
            }
            if (!vf_claims.empty()) {
                std::stringstream in(vf_claims);
                std::string id;
                while (std::getline(in, id, ','))
                    if (!id.empty()) vf.claims.push_back(id);
            }
            const auto results = run_all(vf);
            for (const auto& r : results) std::cout << format_result_line(r) << '\n';
            const auto summary = to_json(results, vf);
            std::cout << "summary: " << summary["summary"].dump() << '\n';
            if (vf_json) write_output(summary.dump(2) + "\n", vf_json);
            return any_failed(results) ? verification_failed : ok;
        }

        if (*exp) {
            const auto d = ex_src.load();
            check_palette(d, ex_k, ex_allow_empty);
            const auto g = build(d, ex_k);
            write_output(ex_format == "dot" ? to_dot(g, ex_cap) : to_csv(g, ex_cap), ex_out);
            return ok;
        }
    } catch (const capacity_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return resource_cap;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const dicolor::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    }
    return usage;
}
