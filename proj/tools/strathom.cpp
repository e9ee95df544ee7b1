#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "strathom/io.hpp"

namespace {

using namespace strathom;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void emit(const std::string& output_path, const std::string& text) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw ValidationError("cannot write '" + output_path + "'");
    out << text;
}

StratifiedComplex load_space(const std::string& path, std::vector<std::string>* notes = nullptr) {
    return build_space(parse_complex(slurp(path)), notes);
}

Perversity load_perversity(const std::string& path, const StratifiedComplex& x) {
    if (path.empty()) return zero_perversity(x);
    return bind_perversity(parse_perversity(slurp(path)), x);
}

std::vector<int> parse_vertex_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw ValidationError("bad vertex index '" + item + "' in map description");
        }
    }
    return out;
}

struct Options {
    std::string complex_path, second_path, third_path;
    std::string perversity_path;
    std::string output_path;
    std::string map_text, map_a_text, map_b_text;
    long long p_min = 0, p_max = 0;
    long long field = 0;
};

int run(int argc, char** argv) {
    CLI::App app{"exact intersection homology for perverse stratified simplicial complexes"};
    app.require_subcommand(1);
    Options opt;

    auto add_output = [&](CLI::App* cmd) { cmd->add_option("--output", opt.output_path, "write the result to a file"); };
    auto add_perversity = [&](CLI::App* cmd) {
        cmd->add_option("--perversity", opt.perversity_path, "perversity document (defaults to the zero perversity)");
    };
    auto add_range = [&](CLI::App* cmd) {
        auto* lo = cmd->add_option("--p-min", opt.p_min, "smallest finite perversity value in the sweep");
        auto* hi = cmd->add_option("--p-max", opt.p_max, "largest finite perversity value in the sweep");
        lo->needs(hi);
        hi->needs(lo);
    };

    CLI::App* validate = app.add_subcommand("validate", "parse, normalize and frontier-check a complex document");
    validate->add_option("complex", opt.complex_path)->required();
    add_output(validate);

    CLI::App* strata = app.add_subcommand("strata", "list strata, codimensions and the closure order");
    strata->add_option("complex", opt.complex_path)->required();
    add_output(strata);

    CLI::App* homology_cmd = app.add_subcommand("homology", "integer or field-coefficient homology");
    homology_cmd->add_option("complex", opt.complex_path)->required();
    homology_cmd->add_option("--field", opt.field, "characteristic: 0 for Q, a prime for F_p");
    add_output(homology_cmd);

    CLI::App* allowable = app.add_subcommand("allowable", "per-simplex allowability and fullness report");
    allowable->add_option("complex", opt.complex_path)->required();
    add_perversity(allowable);
    add_output(allowable);

    CLI::App* gajer = app.add_subcommand("gajer", "subcomplex of fully allowable simplices");
    gajer->add_option("complex", opt.complex_path)->required();
    add_perversity(gajer);
    add_output(gajer);

    CLI::App* ih = app.add_subcommand("ih", "intersection homology over the integers");
    ih->add_option("complex", opt.complex_path)->required();
    add_perversity(ih);
    add_output(ih);

    CLI::App* cone_cmd = app.add_subcommand("cone", "stratified cone on a complex");
    cone_cmd->add_option("complex", opt.complex_path)->required();
    add_output(cone_cmd);

    CLI::App* suspend_cmd = app.add_subcommand("suspend", "suspension with both apexes at level zero");
    suspend_cmd->add_option("complex", opt.complex_path)->required();
    add_output(suspend_cmd);

    CLI::App* product_cmd = app.add_subcommand("product", "staircase triangulation of a product");
    product_cmd->add_option("left", opt.complex_path)->required();
    product_cmd->add_option("right", opt.second_path)->required();
    add_output(product_cmd);

    CLI::App* cylinder_cmd = app.add_subcommand("cylinder", "stratified mapping cylinder of a vertex map");
    cylinder_cmd->add_option("domain", opt.complex_path)->required();
    cylinder_cmd->add_option("codomain", opt.second_path)->required();
    cylinder_cmd->add_option("--map", opt.map_text, "comma-separated image vertex per domain vertex")->required();
    add_output(cylinder_cmd);

    CLI::App* pushout_cmd = app.add_subcommand("pushout", "double mapping cylinder presentation over a link");
    pushout_cmd->add_option("bottom", opt.complex_path, "the bottom stratum piece")->required();
    pushout_cmd->add_option("link", opt.second_path, "the common domain")->required();
    pushout_cmd->add_option("rest", opt.third_path, "the regular piece")->required();
    pushout_cmd->add_option("--map-a", opt.map_a_text, "link -> bottom vertex images")->required();
    pushout_cmd->add_option("--map-b", opt.map_b_text, "link -> rest vertex images")->required();
    add_output(pushout_cmd);

    CLI::App* subdivide_cmd = app.add_subcommand("subdivide", "barycentric subdivision with transported filtration");
    subdivide_cmd->add_option("complex", opt.complex_path)->required();
    add_output(subdivide_cmd);

    CLI::App* check = app.add_subcommand("check", "verification suites");
    check->require_subcommand(1);
    CLI::App* check_cone = check->add_subcommand("cone-formula", "intersection homology of a cone against the truncated base");
    check_cone->add_option("link", opt.complex_path)->required();
    add_range(check_cone);
    add_output(check_cone);
    CLI::App* check_mv = check->add_subcommand("mv", "long exact sequence for a two-piece closed cover");
    check_mv->add_option("complex", opt.complex_path)->required();
    check_mv->add_option("left", opt.second_path)->required();
    check_mv->add_option("right", opt.third_path)->required();
    add_perversity(check_mv);
    add_output(check_mv);
    CLI::App* check_bundle = check->add_subcommand("bundle", "rational truncation shadow for a trivially conified bundle");
    check_bundle->add_option("base", opt.complex_path)->required();
    check_bundle->add_option("fibre", opt.second_path)->required();
    add_range(check_bundle);
    add_output(check_bundle);

    CLI::App* report = app.add_subcommand("report", "measurement reports");
    report->require_subcommand(1);
    CLI::App* report_gap = report->add_subcommand("fullness-gap", "allowable-but-not-full simplices and homology comparisons");
    report_gap->add_option("complex", opt.complex_path)->required();
    add_perversity(report_gap);
    add_output(report_gap);
    CLI::App* report_sd = report->add_subcommand("subdivision", "sensitivity of the reports to one barycentric subdivision");
    report_sd->add_option("complex", opt.complex_path)->required();
    add_perversity(report_sd);
    add_output(report_sd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help() << "\n";
        return 2;
    }

    if (validate->parsed()) {
        std::vector<std::string> notes;
        const StratifiedComplex x = load_space(opt.complex_path, &notes);
        const FrontierVerdict verdict = check_frontier(x);
        nlohmann::json payload;
        payload["complex_hash"] = content_hash(x);
        payload["frontier"] = to_json(verdict);
        payload["notes"] = notes;
        payload["strata"] = to_json(x);
        emit(opt.output_path, serialize_report("validate", payload));
        return verdict.pass ? 0 : 1;
    }
    if (strata->parsed()) {
        const StratifiedComplex x = load_space(opt.complex_path);
        nlohmann::json payload = to_json(x);
        payload["complex_hash"] = content_hash(x);
        emit(opt.output_path, serialize_report("strata", payload));
        return 0;
    }
    if (homology_cmd->parsed()) {
        const StratifiedComplex x = load_space(opt.complex_path);
        nlohmann::json payload;
        payload["complex_hash"] = content_hash(x);
        if (homology_cmd->count("--field") > 0) {
            payload["characteristic"] = opt.field;
            payload["dimensions"] = homology_field(chain_complex(x.complex), opt.field);
        } else {
            payload["homology"] = to_json(homology(x.complex));
        }
        emit(opt.output_path, serialize_report("homology", payload));
        return 0;
    }
    if (allowable->parsed()) {
        const StratifiedComplex x = load_space(opt.complex_path);
        const Perversity p = load_perversity(opt.perversity_path, x);
        nlohmann::json payload = to_json(full_simplexes(x, p));
        payload["complex_hash"] = content_hash(x);
        emit(opt.output_path, serialize_report("allowable", payload));
        return 0;
    }
    if (gajer->parsed()) {
        const StratifiedComplex x = load_space(opt.complex_path);
        const Perversity p = load_perversity(opt.perversity_path, x);
        const GajerResult g = gajer_subcomplex(x, p);
        emit(opt.output_path, serialize_complex(stratify_trivially(g.complex)));
        return 0;
    }
    if (ih->parsed()) {
        const StratifiedComplex x = load_space(opt.complex_path);
        const Perversity p = load_perversity(opt.perversity_path, x);
        nlohmann::json payload;
        payload["complex_hash"] = content_hash(x);
        payload["intersection_homology"] = to_json(intersection_homology(x, p));
        emit(opt.output_path, serialize_report("ih", payload));
        return 0;
    }
    if (cone_cmd->parsed()) {
        emit(opt.output_path, serialize_complex(stratify_cone(load_space(opt.complex_path))));
        return 0;
    }
    if (suspend_cmd->parsed()) {
        emit(opt.output_path, serialize_complex(suspension(load_space(opt.complex_path).complex)));
        return 0;
    }
    if (product_cmd->parsed()) {
        const SimplicialComplex a = load_space(opt.complex_path).complex;
        const SimplicialComplex b = load_space(opt.second_path).complex;
        emit(opt.output_path, serialize_complex(stratify_trivially(ordered_product(a, b).complex)));
        return 0;
    }
    if (cylinder_cmd->parsed()) {
        const StratifiedComplex dom = load_space(opt.complex_path);
        const StratifiedComplex cod = load_space(opt.second_path);
        SimplicialMap f{dom.complex, cod.complex, parse_vertex_list(opt.map_text)};
        emit(opt.output_path, serialize_complex(stratify_cylinder(f, dom, cod)));
        return 0;
    }
    if (pushout_cmd->parsed()) {
        const ComplexDocument rest_doc = parse_complex(slurp(opt.third_path));
        const SimplicialComplex bottom = load_space(opt.complex_path).complex;
        const SimplicialComplex link = load_space(opt.second_path).complex;
        const StratifiedComplex rest = build_space(rest_doc);
        SimplicialMap a{link, bottom, parse_vertex_list(opt.map_a_text)};
        SimplicialMap b{link, rest.complex, parse_vertex_list(opt.map_b_text)};
        std::optional<StratifiedComplex> r_stratified;
        if (!rest_doc.filtration.empty()) r_stratified = rest;
        emit(opt.output_path, serialize_complex(quinn_pushout_build(a, b, r_stratified)));
        return 0;
    }
    if (subdivide_cmd->parsed()) {
        emit(opt.output_path, serialize_complex(subdivide_stratified(load_space(opt.complex_path)).space));
        return 0;
    }
    if (check_cone->parsed()) {
        const StratifiedComplex link = load_space(opt.complex_path);
        long long lo = check_cone->count("--p-min") ? opt.p_min : -2;
        long long hi = check_cone->count("--p-max") ? opt.p_max : link.complex.dim() + 2;
        const ConeFormulaReport r = cone_formula_check(link.complex, perversity_sweep(lo, hi));
        emit(opt.output_path, serialize_report("cone-formula", to_json(r)));
        return r.all_pass ? 0 : 1;
    }
    if (check_mv->parsed()) {
        const StratifiedComplex x = load_space(opt.complex_path);
        const SimplicialComplex u = load_space(opt.second_path).complex;
        const SimplicialComplex v = load_space(opt.third_path).complex;
        const Perversity p = load_perversity(opt.perversity_path, x);
        const MayerVietorisReport r = mayer_vietoris_check(x, u, v, p);
        emit(opt.output_path, serialize_report("mv", to_json(r)));
        return r.pass() ? 0 : 1;
    }
    if (check_bundle->parsed()) {
        const SimplicialComplex base = load_space(opt.complex_path).complex;
        const SimplicialComplex fibre = load_space(opt.second_path).complex;
        long long lo = check_bundle->count("--p-min") ? opt.p_min : -2;
        long long hi = check_bundle->count("--p-max") ? opt.p_max : fibre.dim() + 2;
        const BundleReport r = bundle_truncation_check(base, fibre, perversity_sweep(lo, hi));
        emit(opt.output_path, serialize_report("bundle", to_json(r)));
        return r.all_pass ? 0 : 1;
    }
    if (report_gap->parsed()) {
        const StratifiedComplex x = load_space(opt.complex_path);
        const Perversity p = load_perversity(opt.perversity_path, x);
        emit(opt.output_path, serialize_report("fullness-gap", to_json(fullness_gap_report(x, p))));
        return 0;
    }
    if (report_sd->parsed()) {
        const StratifiedComplex x = load_space(opt.complex_path);
        const Perversity p = load_perversity(opt.perversity_path, x);
        emit(opt.output_path, serialize_report("subdivision", to_json(subdivision_sensitivity_report(x, p))));
        return 0;
    }
    std::cerr << app.help() << "\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const strathom::ParseError& e) {
        std::cerr << "parse error at byte " << e.byte_offset() << ": " << e.what() << "\n";
        return 2;
    } catch (const strathom::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
