#include <cstdint>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "folocal/bench.hpp"
#include "folocal/engine.hpp"
#include "folocal/generators.hpp"
#include "folocal/io.hpp"
#include "folocal/local_width.hpp"
#include "folocal/treewidth.hpp"

namespace {

using folocal::CoverStrategy;
using folocal::DomainError;
using folocal::EngineConfig;
using folocal::Structure;
using json = nlohmann::ordered_json;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

std::map<std::string, int> parse_params(const std::string& text) {
    std::map<std::string, int> out;
    if (text.empty())
        return out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw DomainError("parameter '" + item + "' is not of the form key=value");
        std::string key = item.substr(0, eq);
        std::string value = item.substr(eq + 1);
        try {
            std::size_t used = 0;
            int parsed = std::stoi(value, &used);
            if (used != value.size())
                throw std::invalid_argument(value);
            out[key] = parsed;
        } catch (const std::exception&) {
            throw DomainError("parameter '" + key + "' needs an integer value, got '" +
                              value + "'");
        }
    }
    return out;
}

int param_or(const std::map<std::string, int>& params, const std::string& key, int fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

int require_param(const std::map<std::string, int>& params, const std::string& key,
                  const std::string& family) {
    auto it = params.find(key);
    if (it == params.end())
        throw DomainError("family '" + family + "' needs parameter '" + key + "'");
    return it->second;
}

CoverStrategy parse_strategy(const std::string& name) {
    if (name == "peleg")
        return CoverStrategy::Peleg;
    if (name == "bfs-layers")
        return CoverStrategy::BfsLayers;
    throw DomainError("unknown strategy '" + name + "' (expected peleg or bfs-layers)");
}

Structure make_family_instance(const std::string& family, int size, std::uint64_t seed) {
    if (family == "grid")
        return folocal::gen_grid(size, size);
    if (family == "cycle")
        return folocal::gen_cycle(size);
    if (family == "rand-deg")
        return folocal::gen_rand_deg(size, 3, seed);
    throw DomainError("unknown bench family '" + family + "' (expected grid, cycle, rand-deg)");
}

int cmd_gen(const std::string& family, const std::string& params_text, std::uint64_t seed,
            const std::string& out_path) {
    auto params = parse_params(params_text);
    if (family == "grid") {
        folocal::save_structure(
            folocal::gen_grid(require_param(params, "width", family),
                              require_param(params, "height", family)),
            out_path);
    } else if (family == "cycle") {
        folocal::save_structure(folocal::gen_cycle(require_param(params, "n", family)),
                                out_path);
    } else if (family == "rand-deg") {
        folocal::save_structure(
            folocal::gen_rand_deg(require_param(params, "n", family),
                                  require_param(params, "deg", family), seed),
            out_path);
    } else if (family == "setcover") {
        auto instance = folocal::gen_setcover(require_param(params, "ground", family),
                                              require_param(params, "sets", family),
                                              param_or(params, "freq", 2),
                                              require_param(params, "cover", family), seed);
        folocal::save_structure(instance.structure, out_path);
        std::cerr << "planted optimum: " << instance.planted_optimum << "\n";
    } else {
        throw DomainError("unknown family '" + family +
                          "' (expected grid, rand-deg, cycle, setcover)");
    }
    return kExitTrue;
}

json leaf_to_json(const folocal::LeafReport& leaf) {
    json node;
    node["r"] = leaf.r;
    node["m"] = leaf.m;
    node["verdict"] = leaf.verdict;
    node["satisfiers"] = leaf.satisfier_count;
    node["pieces"] = leaf.piece_count;
    node["cover_total_size"] = leaf.cover_total_size;
    node["witnesses"] = leaf.witnesses;
    node["cover_ns"] = leaf.cover_ns;
    node["kernels_ns"] = leaf.kernels_ns;
    node["local_eval_ns"] = leaf.local_eval_ns;
    node["scattered_ns"] = leaf.scattered_ns;
    return node;
}

int cmd_check(const std::string& structure_path, const std::string& gnf_path,
              const std::string& strategy, int k, bool parallel) {
    Structure s = folocal::load_structure(structure_path);
    auto g = folocal::load_gnf(gnf_path);
    EngineConfig cfg;
    cfg.strategy = parse_strategy(strategy);
    cfg.k = k;
    cfg.parallel_pieces = parallel;
    auto report = folocal::check_sentence(s, g, cfg);

    json out;
    out["verdict"] = report.verdict;
    out["gaifman_ns"] = report.gaifman_ns;
    out["total_ns"] = report.total_ns;
    out["leaves"] = json::array();
    for (const auto& leaf : report.leaves)
        out["leaves"].push_back(leaf_to_json(leaf));
    std::cout << out.dump(2) << "\n";
    return report.verdict ? kExitTrue : kExitFalse;
}

int cmd_oracle(const std::string& structure_path, const std::string& gnf_path,
               const std::string& formula_path) {
    Structure s = folocal::load_structure(structure_path);
    if (s.universe_size() > 60)
        std::cerr << "warning: oracle is exponential; universe of " << s.universe_size()
                  << " elements may take a while\n";
    bool verdict = false;
    if (!gnf_path.empty()) {
        verdict = folocal::eval_gnf_naive(s, folocal::load_gnf(gnf_path));
    } else {
        auto phi = folocal::load_formula(formula_path);
        auto fv = folocal::free_variables(phi);
        if (!fv.empty())
            throw DomainError("formula file must contain a sentence; free variables: " +
                              *fv.begin() + (fv.size() > 1 ? ", ..." : ""));
        verdict = folocal::eval_naive(s, phi, {});
    }
    json out;
    out["verdict"] = verdict;
    std::cout << out.dump(2) << "\n";
    return verdict ? kExitTrue : kExitFalse;
}

int cmd_covers(const std::string& structure_path, int r, const std::string& strategy, int k) {
    Structure s = folocal::load_structure(structure_path);
    folocal::GaifmanGraph graph(s);
    folocal::Cover cover = parse_strategy(strategy) == CoverStrategy::Peleg
                               ? folocal::peleg_cover(graph, r, k)
                               : folocal::bfs_layer_cover(graph, r);
    folocal::kernels(graph, cover, r);
    auto report = folocal::validate_cover(graph, cover, true);

    std::cout << "index,size,kernel_size,width\n";
    for (int pi = 0; pi < cover.piece_count(); ++pi)
        std::cout << pi << ',' << cover.pieces[static_cast<std::size_t>(pi)].size() << ','
                  << cover.kernels[static_cast<std::size_t>(pi)].size() << ','
                  << report.piece_widths[static_cast<std::size_t>(pi)] << "\n";
    std::cout << "# pieces=" << cover.piece_count() << " total=" << cover.total_size()
              << " max=" << cover.max_piece_size() << " valid="
              << (report.ok() ? "true" : "false") << "\n";
    if (!report.ok()) {
        if (report.bad_element)
            std::cerr << "cover property 1 fails at element " << *report.bad_element << "\n";
        if (report.bad_piece)
            std::cerr << "cover property 2 fails at piece " << *report.bad_piece << "\n";
    }
    return report.ok() ? kExitTrue : kExitFalse;
}

int cmd_bench(const std::string& family, const std::string& sizes_text,
              const std::string& gnf_path, const std::string& strategy, int k,
              const std::string& out_path) {
    std::vector<int> sizes;
    std::stringstream stream(sizes_text);
    std::string item;
    while (std::getline(stream, item, ','))
        sizes.push_back(std::stoi(item));
    if (sizes.empty())
        throw DomainError("--sizes needs at least one value");
    for (std::size_t i = 1; i < sizes.size(); ++i)
        if (sizes[i] <= sizes[i - 1])
            throw DomainError("--sizes must be strictly ascending");

    auto g = folocal::load_gnf(gnf_path);
    EngineConfig cfg;
    cfg.strategy = parse_strategy(strategy);
    cfg.k = k;

    std::vector<folocal::BenchRow> rows;
    std::ostringstream csv;
    csv << folocal::bench_csv_header() << "\n";
    for (int size : sizes) {
        Structure s = make_family_instance(family, size, 1);
        rows.push_back(folocal::bench_check(family, s, g, cfg));
        csv << folocal::bench_csv_row(rows.back()) << "\n";
    }
    if (auto slope = folocal::loglog_slope(rows))
        csv << "# slope=" << *slope << "\n";

    std::cout << csv.str();
    if (!out_path.empty())
        folocal::write_file(out_path, csv.str());
    return kExitTrue;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Model checker for Gaifman-normal-form sentences on finite structures"};
    app.require_subcommand(1);

    std::string family, params_text, out_path, structure_path, gnf_path, formula_path;
    std::string strategy = "peleg";
    std::string sizes_text;
    std::uint64_t seed = 1;
    int k = 2;
    int r = 1;
    bool parallel = false;

    auto* gen = app.add_subcommand("gen", "Generate a structure file");
    gen->add_option("--family", family, "grid | rand-deg | cycle | setcover")->required();
    gen->add_option("--params", params_text, "comma separated key=value parameters");
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("-o,--out", out_path, "output path")->required();

    auto* check = app.add_subcommand("check", "Decide a sentence with the cover engine");
    check->add_option("--structure", structure_path)->required();
    check->add_option("--gnf", gnf_path)->required();
    check->add_option("--strategy", strategy, "peleg | bfs-layers");
    check->add_option("--k", k, "exponent for the peleg strategy");
    check->add_flag("--parallel", parallel, "evaluate pieces concurrently");

    auto* oracle = app.add_subcommand("oracle", "Decide by brute force (small inputs)");
    oracle->add_option("--structure", structure_path)->required();
    auto* oracle_gnf = oracle->add_option("--gnf", gnf_path);
    auto* oracle_formula = oracle->add_option("--formula", formula_path);
    oracle_gnf->excludes(oracle_formula);

    auto* covers = app.add_subcommand("covers", "Build, validate, and report a cover");
    covers->add_option("--structure", structure_path)->required();
    covers->add_option("--r", r, "cover radius")->required();
    covers->add_option("--strategy", strategy, "peleg | bfs-layers");
    covers->add_option("--k", k, "exponent for the peleg strategy");

    auto* bench = app.add_subcommand("bench", "Scaling benchmark over generated inputs");
    bench->add_option("--family", family, "grid | cycle | rand-deg")->required();
    bench->add_option("--sizes", sizes_text, "comma separated ascending sizes")->required();
    bench->add_option("--gnf", gnf_path)->required();
    bench->add_option("--strategy", strategy, "peleg | bfs-layers");
    bench->add_option("--k", k, "exponent for the peleg strategy");
    bench->add_option("--out", out_path, "CSV output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (gen->parsed())
            return cmd_gen(family, params_text, seed, out_path);
        if (check->parsed())
            return cmd_check(structure_path, gnf_path, strategy, k, parallel);
        if (oracle->parsed()) {
            if (gnf_path.empty() && formula_path.empty())
                throw DomainError("oracle needs --gnf or --formula");
            return cmd_oracle(structure_path, gnf_path, formula_path);
        }
        if (covers->parsed())
            return cmd_covers(structure_path, r, strategy, k);
        if (bench->parsed())
            return cmd_bench(family, sizes_text, gnf_path, strategy, k, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
