#include "pierce/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "pierce/arrangement.hpp"
#include "pierce/errors.hpp"
#include "pierce/families.hpp"
#include "pierce/json_io.hpp"
#include "pierce/setsystem.hpp"
#include "pierce/svg.hpp"

namespace pierce::cli {

namespace {

void print_json(const io::Json& value, std::ostream& out) {
    out << value.dump(2) << "\n";
}

io::Json offending_pair_names(const geom::RegionFamily& family,
                              const std::vector<std::pair<int, int>>& offenders) {
    io::Json pairs = io::Json::array();
    for (const auto& [i, j] : offenders)
        pairs.push_back({family.regions[i].name, family.regions[j].name});
    return pairs;
}

void write_text_file(const std::string& path, const std::string& contents) {
    std::ofstream file(path);
    if (!file) throw SchemaError("cannot write '" + path + "'");
    file << contents;
}

int cmd_analyze(const std::string& path, bool geometry, bool pretty,
                std::ostream& out) {
    const io::Json input = io::load_json_file(path);
    io::Json report;
    if (geometry) {
        const geom::RegionFamily family = io::region_family_from_json(input);
        const geom::Arrangement arrangement = geom::Arrangement::build(family);
        const auto [non_piercing, offenders] = geom::check_non_piercing(arrangement);
        std::vector<std::string> labels;
        for (const geom::PolygonRegion& region : family.regions)
            labels.push_back(region.name);
        const sets::SetSystem system =
            families::to_set_system(arrangement, std::move(labels));
        report = io::bound_report_to_json(sets::analyze(system));
        report["non_piercing"] = non_piercing;
        report["offending_pairs"] = offending_pair_names(family, offenders);
    } else {
        const sets::SetSystem system = io::set_system_from_json(input);
        report = io::bound_report_to_json(sets::analyze(system));
    }
    if (pretty) {
        out << "nu      = " << report["nu"].get<int>() << "\n"
            << "tau     = " << report["tau"].get<int>() << "\n"
            << "lambda  = " << report["lambda"].get<int>() << "\n"
            << "dsw     = " << report["dsw_bound"].get<std::string>() << "\n"
            << "theorem1= " << report["theorem1_bound"].get<std::string>() << "\n";
        if (report.contains("non_piercing"))
            out << "non-piercing: " << (report["non_piercing"].get<bool>() ? "yes" : "no")
                << "\n";
    } else {
        print_json(report, out);
    }
    return 0;
}

int cmd_nonpiercing(const std::string& path, std::ostream& out) {
    const geom::RegionFamily family =
        io::region_family_from_json(io::load_json_file(path));
    const auto [non_piercing, offenders] = geom::check_non_piercing(family);
    io::Json report;
    report["non_piercing"] = non_piercing;
    report["offending_pairs"] = offending_pair_names(family, offenders);
    print_json(report, out);
    return non_piercing ? 0 : 1;
}

int cmd_search(int trials, int set_count, std::uint64_t seed,
               const std::optional<std::string>& out_path, std::ostream& out) {
    families::GeneratorConfig config;
    config.seed = seed;
    config.family_size = set_count;
    const families::SearchReport report = families::lambda5_search(config, trials);
    const io::Json value = io::search_report_to_json(report);
    if (out_path) write_text_file(*out_path, value.dump(2) + "\n");
    print_json(value, out);
    return report.max_lambda >= 5 ? 1 : 0;
}

int cmd_bound(std::int64_t lambda, std::int64_t nu, std::ostream& out) {
    io::Json report;
    report["lambda"] = lambda;
    report["nu"] = nu;
    report["dsw_bound"] =
        sets::dsw_bound(static_cast<int>(lambda), static_cast<int>(nu)).str();
    print_json(report, out);
    return 0;
}

int cmd_fig1(const std::string& out_path, const std::optional<std::string>& svg_path,
             std::ostream& out, std::ostream& err) {
    const geom::RegionFamily family = families::fig1_family();
    // re-certify the golden data before writing anything
    int lambda = 0;
    bool non_piercing = false;
    try {
        const geom::Arrangement arrangement = geom::Arrangement::build(family);
        non_piercing = geom::check_non_piercing(arrangement).first;
        std::vector<std::string> labels;
        for (const geom::PolygonRegion& region : family.regions)
            labels.push_back(region.name);
        lambda =
            sets::dyadic_dual_vc(families::to_set_system(arrangement, std::move(labels)))
                .first;
    } catch (const Error& e) {
        err << "fig1 golden data failed re-certification: " << e.what() << "\n";
        return 1;
    }
    if (!non_piercing || lambda != 4) {
        err << "fig1 golden data failed re-certification: non_piercing="
            << (non_piercing ? "true" : "false") << " lambda=" << lambda << "\n";
        return 1;
    }
    write_text_file(out_path, io::region_family_to_json(family).dump(2) + "\n");
    if (svg_path) {
        std::ofstream svg(*svg_path);
        if (!svg) throw SchemaError("cannot write '" + *svg_path + "'");
        io::write_family_svg(family, svg);
    }
    io::Json report;
    report["out"] = out_path;
    report["lambda"] = lambda;
    report["non_piercing"] = non_piercing;
    print_json(report, out);
    return 0;
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact solvers and verified bounds for non-piercing region families"};
    app.name("pierce");
    app.require_subcommand(1);

    // analyze
    std::string analyze_path;
    bool flag_geometry = false, flag_abstract = false;
    bool flag_json = false, flag_pretty = false;
    CLI::App* analyze = app.add_subcommand(
        "analyze", "Compute nu, tau, lambda and the bound report for an input file");
    analyze->add_option("path", analyze_path, "input JSON file")->required();
    CLI::Option* geometry_opt =
        analyze->add_flag("--geometry", flag_geometry, "input is a region family");
    CLI::Option* abstract_opt =
        analyze->add_flag("--abstract", flag_abstract, "input is an abstract set system");
    geometry_opt->excludes(abstract_opt);
    abstract_opt->excludes(geometry_opt);
    CLI::Option* json_opt = analyze->add_flag("--json", flag_json, "JSON report (default)");
    CLI::Option* pretty_opt =
        analyze->add_flag("--pretty", flag_pretty, "human-readable report");
    json_opt->excludes(pretty_opt);
    pretty_opt->excludes(json_opt);

    // nonpiercing
    std::string nonpiercing_path;
    CLI::App* nonpiercing = app.add_subcommand(
        "nonpiercing", "Verify the non-piercing property of a region family");
    nonpiercing->add_option("path", nonpiercing_path, "region-family JSON file")
        ->required();

    // search
    int search_trials = 0, search_sets = 0;
    std::uint64_t search_seed = 0;
    std::string search_out;
    CLI::App* search = app.add_subcommand(
        "search", "Hunt for lambda >= 5 over random non-piercing families");
    search->add_option("--trials", search_trials, "number of trials")
        ->required()
        ->check(CLI::PositiveNumber);
    search->add_option("--sets", search_sets, "regions per family")
        ->required()
        ->check(CLI::PositiveNumber);
    search->add_option("--seed", search_seed, "base seed (default 0)");
    CLI::Option* search_out_opt =
        search->add_option("--out", search_out, "also write the report to this file");

    // bound
    std::int64_t bound_lambda = 0, bound_nu = 0;
    CLI::App* bound = app.add_subcommand("bound", "Evaluate the transversal bound exactly");
    bound->add_option("--lambda", bound_lambda, "dyadic dual VC-dimension")
        ->required()
        ->check(CLI::NonNegativeNumber);
    bound->add_option("--nu", bound_nu, "matching number")
        ->required()
        ->check(CLI::NonNegativeNumber);

    // fig1
    std::string fig1_out, fig1_svg;
    CLI::App* fig1 = app.add_subcommand(
        "fig1", "Emit the four-region family with lambda = 4 (re-certified)");
    fig1->add_option("--out", fig1_out, "output family JSON path")->required();
    CLI::Option* fig1_svg_opt = fig1->add_option("--svg", fig1_svg, "debug SVG path");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (analyze->parsed()) {
            if (!flag_geometry && !flag_abstract) {
                err << "analyze requires exactly one of --geometry or --abstract\n";
                return 2;
            }
            return cmd_analyze(analyze_path, flag_geometry, flag_pretty, out);
        }
        if (nonpiercing->parsed()) return cmd_nonpiercing(nonpiercing_path, out);
        if (search->parsed())
            return cmd_search(search_trials, search_sets, search_seed,
                              *search_out_opt ? std::optional(search_out) : std::nullopt,
                              out);
        if (bound->parsed()) return cmd_bound(bound_lambda, bound_nu, out);
        if (fig1->parsed())
            return cmd_fig1(fig1_out,
                            *fig1_svg_opt ? std::optional(fig1_svg) : std::nullopt, out,
                            err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand given\n";
    return 2;
}

} // namespace pierce::cli
