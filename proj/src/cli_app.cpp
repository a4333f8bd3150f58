#include "delone/cli_app.hpp"

#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "delone/catalog.hpp"
#include "delone/cluster.hpp"
#include "delone/metrics.hpp"
#include "delone/reachability.hpp"
#include "delone/regularity.hpp"
#include "delone/set_io.hpp"
#include "delone/stats.hpp"

namespace delone {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "1.0.0";

struct CommonOpts {
    std::string input_path;
    std::string catalog_name;
    std::string declared_R_sq;
    bool profile = false;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--input", c.input_path, "path to a set file (JSON)");
    cmd->add_option("--catalog", c.catalog_name, "name of a built-in catalog set");
    cmd->add_option("--declared-R-sq,--declared-R", c.declared_R_sq,
                    "override the declared squared covering radius (rational)");
    cmd->add_flag("--profile", c.profile, "include search statistics in the report");
}

PeriodicSet load_input(const CommonOpts& c) {
    if (c.input_path.empty() == c.catalog_name.empty())
        throw std::invalid_argument("provide exactly one of --input or --catalog");
    PeriodicSet x = c.input_path.empty() ? catalog_make(c.catalog_name)
                                         : load_set_file(c.input_path);
    if (!c.declared_R_sq.empty()) x.declared_R_sq = parse_rat(c.declared_R_sq);
    return x;
}

json stats_json() {
    const Stats& s = stats();
    json j;
    j["enum_nodes"] = s.enum_nodes.load();
    j["enum_sites"] = s.enum_sites.load();
    j["iso_nodes"] = s.iso_nodes.load();
    j["insphere_calls"] = s.insphere_calls.load();
    j["delaunay_cells"] = s.delaunay_cells.load();
    return j;
}

void emit_report(std::ostream& out, const std::string& command, const PeriodicSet& x,
                 json results, const CommonOpts& c,
                 std::optional<unsigned long long> seed = std::nullopt) {
    json doc;
    doc["schema"] = 1;
    doc["command"] = command;
    doc["input_digest"] = set_digest(x);
    doc["tool_version"] = kVersion;
    doc["results"] = std::move(results);
    if (seed) doc["seed"] = *seed;
    if (c.profile) doc["profile"] = stats_json();
    out << doc.dump(2) << "\n";
}

json verdict_json(const RegularityVerdict& v) {
    json j;
    j["method"] = method_name(v.method);
    j["verdict"] = verdict_name(v.verdict);
    json cert;
    for (const auto& [k, val] : v.certificate) cert[k] = val;
    j["certificate"] = std::move(cert);
    return j;
}

json site_json(const Site& s) {
    json j;
    j["motif"] = s.motif_index;
    j["translation"] = s.translation;
    return j;
}

// "INFINITE" or the smallest euclidean order among the class representatives.
std::string min_group_order(const PeriodicSet& x, const NRhoReport& rep, const Rat& rho_sq) {
    std::optional<Int> best;
    bool any_infinite = false;
    for (int idx : rep.class_representatives) {
        ClusterGroup g = cluster_group(x, get_cluster(x, idx, rho_sq));
        if (!g.euclidean_finite) {
            any_infinite = true;
            continue;
        }
        if (!best || g.euclidean_order < *best) best = g.euclidean_order;
    }
    if (best) return best->get_str();
    return any_infinite ? "INFINITE" : "1";
}

int cmd_info(std::ostream& out, const CommonOpts& c, int samples, unsigned long long seed) {
    PeriodicSet x = load_input(c);
    json res;
    res["dimension"] = x.dim();
    res["motif_size"] = x.motif_size();
    MetricParameters mp = metric_parameters(x);  // throws for d > 4 with no declared R
    res["packing_radius_sq"] = rat_str(mp.two_r_sq / 4);
    res["covering_radius_sq"] = rat_str(mp.R_sq);
    res["covering_exact"] = mp.R_exact;
    std::optional<unsigned long long> used_seed;
    if (!mp.R_exact && samples > 0) {
        DeclaredRadiusReport v = verify_declared_R(x, mp.R_sq, samples, seed);
        json vj;
        vj["samples"] = v.samples;
        vj["max_observed_sq"] = rat_str(v.max_observed_sq);
        vj["consistent"] = v.consistent;
        res["declared_verification"] = std::move(vj);
        used_seed = seed;
    }
    emit_report(out, "info", x, std::move(res), c, used_seed);
    return 0;
}

int cmd_nrho(std::ostream& out, const CommonOpts& c, const std::string& rho_max_str, bool csv) {
    PeriodicSet x = load_input(c);
    Rat cap = parse_rat(rho_max_str);
    std::vector<Rat> bps = breakpoints(x, cap);

    struct Row {
        Rat rho_sq;
        NRhoReport rep;
        std::string min_order;
    };
    std::vector<Row> rows;
    {
        NRhoReport zero = n_rho(x, Rat(0));
        rows.push_back({Rat(0), zero, min_group_order(x, zero, Rat(0))});
    }
    for (const Rat& b : bps) {
        NRhoReport rep = n_rho(x, b);
        rows.push_back({b, rep, min_group_order(x, rep, b)});
    }

    if (csv) {
        out << "rho_sq,N,min_group_order\n";
        for (const Row& r : rows)
            out << rat_str(r.rho_sq) << "," << r.rep.class_count << "," << r.min_order << "\n";
        return 0;
    }
    json res;
    res["rho_max_sq"] = rat_str(cap);
    json jrows = json::array();
    for (const Row& r : rows) {
        json j;
        j["rho_sq"] = rat_str(r.rho_sq);
        j["class_count"] = r.rep.class_count;
        j["class_representatives"] = r.rep.class_representatives;
        j["min_group_order"] = r.min_order;
        jrows.push_back(std::move(j));
    }
    res["rows"] = std::move(jrows);
    emit_report(out, "nrho", x, std::move(res), c);
    return 0;
}

int cmd_check_regular(std::ostream& out, const CommonOpts& c, const std::string& method,
                      const std::string& rho_max_str) {
    PeriodicSet x = load_input(c);
    auto local_cap = [&]() -> Rat {
        if (!rho_max_str.empty()) return parse_rat(rho_max_str);
        return Rat(16) * metric_parameters(x).R_sq;
    };
    std::vector<RegularityVerdict> verdicts;
    if (method == "tower" || method == "all") verdicts.push_back(tower_check(x));
    if (method == "local" || method == "all")
        verdicts.push_back(local_criterion_scan(x, local_cap()));
    if (method == "oracle" || method == "all") verdicts.push_back(oracle_is_regular(x));

    json res;
    json jv = json::array();
    for (const auto& v : verdicts) jv.push_back(verdict_json(v));
    res["verdicts"] = std::move(jv);
    emit_report(out, "check-regular", x, std::move(res), c);
    if (method != "all" && verdicts.size() == 1 &&
        verdicts[0].verdict == Verdict::INCONCLUSIVE)
        return 3;
    return 0;
}

int cmd_reach(std::ostream& out, const CommonOpts& c, const std::string& t_sq_str,
              std::optional<int> k, bool closure, int motif_index) {
    PeriodicSet x = load_input(c);
    Rat t_sq = parse_rat(t_sq_str);
    if (k.has_value() == closure)
        throw std::invalid_argument("provide exactly one of --k or --closure");
    json res;
    res["origin_motif"] = motif_index;
    res["t_sq"] = rat_str(t_sq);
    if (k) {
        ReachableSet rs = reachable_set(x, motif_index, t_sq, *k);
        res["k"] = *k;
        res["site_count"] = rs.sites.size();
        json sites = json::array();
        for (const Site& s : rs.sites) sites.push_back(site_json(s));
        res["sites"] = std::move(sites);
    } else {
        ReachableSet rs = reachability_closure(x, motif_index, t_sq);
        res["k"] = "UNBOUNDED";
        res["component_motifs"] = rs.component_motifs;
        json hnf = json::array();
        for (const auto& row : rs.closure_hnf) {
            json r = json::array();
            for (const Int& v : row) r.push_back(v.get_str());
            hnf.push_back(std::move(r));
        }
        res["closure_hnf"] = std::move(hnf);
        res["closure_denominator"] = rs.closure_denominator.get_str();
        res["rank"] = rs.rank;
        res["translation_complete"] = rs.translation_complete;
    }
    emit_report(out, "reach", x, std::move(res), c);
    return 0;
}

int cmd_bonded(std::ostream& out, const CommonOpts& c, const std::string& t_sq_str) {
    PeriodicSet x = load_input(c);
    Rat t_sq = parse_rat(t_sq_str);
    QuotientGraph g = build_quotient_graph(x, t_sq);
    std::map<int, std::vector<int>> comps;
    for (int j = 0; j < x.motif_size(); ++j) comps[g.component[j]].push_back(j);
    json res;
    res["t_sq"] = rat_str(t_sq);
    res["bonded"] = is_t_bonded(x, t_sq);
    json jc = json::array();
    for (const auto& [root, members] : comps) jc.push_back(members);
    res["components"] = std::move(jc);
    emit_report(out, "bonded", x, std::move(res), c);
    return 0;
}

int cmd_drop(std::ostream& out, const CommonOpts& c, int K) {
    PeriodicSet x = load_input(c);
    DropReport rep = drop_sequence(x, K);
    json res;
    res["R_sq"] = rat_str(rep.R_sq);
    json orders = json::array();
    for (const Int& o : rep.orders) orders.push_back(o.get_str());
    res["orders"] = std::move(orders);
    res["drop_count"] = rep.drop_count;
    emit_report(out, "drop", x, std::move(res), c);
    return 0;
}

int cmd_bounds(std::ostream& out, const CommonOpts& c) {
    PeriodicSet x = load_input(c);
    BoundsReport rep = bounds_report(x);
    json res;
    json checks = json::array();
    bool any_fail = false;
    for (const BoundCheck& bc : rep.checks) {
        json j;
        j["name"] = bc.name;
        j["status"] = bc.status;
        json vals;
        for (const auto& [k, v] : bc.values) vals[k] = v;
        j["values"] = std::move(vals);
        checks.push_back(std::move(j));
        any_fail = any_fail || bc.status == "FAIL";
    }
    res["checks"] = std::move(checks);
    res["any_fail"] = any_fail;
    emit_report(out, "bounds", x, std::move(res), c);
    return 0;
}

int cmd_catalog(std::ostream& out, const std::string& action, const std::string& name) {
    if (action == "list") {
        json doc;
        doc["schema"] = 1;
        doc["command"] = "catalog";
        doc["tool_version"] = kVersion;
        json names = json::array();
        for (const CatalogEntry& e : catalog_entries()) {
            json j;
            j["name"] = e.name;
            j["summary"] = e.summary;
            names.push_back(std::move(j));
        }
        doc["results"] = {{"sets", std::move(names)}};
        out << doc.dump(2) << "\n";
        return 0;
    }
    if (action == "emit") {
        if (name.empty()) throw std::invalid_argument("catalog emit requires a set name");
        PeriodicSet x = catalog_make(name);
        out << emit_set_json(x, name);
        return 0;
    }
    throw std::invalid_argument("catalog action must be 'list' or 'emit'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    stats().reset();
    CLI::App app{"exact analysis of periodic point sets: clusters, symmetry groups, regularity"};
    app.set_version_flag("--version", std::string("delone ") + kVersion);
    app.require_subcommand(1);

    CommonOpts c_info, c_nrho, c_reg, c_reach, c_bonded, c_drop, c_bounds;

    auto* info = app.add_subcommand("info", "dimensions, motif size, packing and covering radii");
    add_common(info, c_info);
    int samples = 0;
    unsigned long long seed = 1;
    info->add_option("--samples", samples, "sample count for declared covering radius screening");
    info->add_option("--seed", seed, "seed for the screening sampler");

    auto* nrho = app.add_subcommand("nrho", "cluster-class counting function across breakpoints");
    add_common(nrho, c_nrho);
    std::string rho_max;
    nrho->add_option("--rho-max-sq", rho_max, "largest squared radius to scan (rational)")
        ->required();
    bool csv = false;
    nrho->add_flag("--csv", csv, "emit plot rows instead of the JSON report");

    auto* reg = app.add_subcommand("check-regular", "certify or refute regularity");
    add_common(reg, c_reg);
    std::string method;
    reg->add_option("--method", method, "tower | local | oracle | all")
        ->required()
        ->check(CLI::IsMember({"tower", "local", "oracle", "all"}));
    std::string reg_cap;
    reg->add_option("--rho-max-sq", reg_cap, "scan cap for the local criterion (rational)");

    auto* reach = app.add_subcommand("reach", "bounded or unbounded step-reachability");
    add_common(reach, c_reach);
    std::string reach_t;
    reach->add_option("--t-sq", reach_t, "squared step bound (rational)")->required();
    int reach_k = -1;
    auto* kopt = reach->add_option("--k", reach_k, "maximum number of steps");
    bool closure = false;
    reach->add_flag("--closure", closure, "compute the unbounded closure description");
    int motif_index = 0;
    reach->add_option("--motif-index", motif_index, "origin motif index (default 0)");

    auto* bonded = app.add_subcommand("bonded", "whether every site is step-reachable");
    add_common(bonded, c_bonded);
    std::string bonded_t;
    bonded->add_option("--t-sq", bonded_t, "squared step bound (rational)")->required();

    auto* drop = app.add_subcommand("drop", "cluster-group orders at 2R, 4R, ..., 2KR");
    add_common(drop, c_drop);
    int K = 0;
    drop->add_option("--K", K, "number of radii to examine")->required();

    auto* bounds = app.add_subcommand("bounds", "evaluate the inequality battery");
    add_common(bounds, c_bounds);

    auto* cat = app.add_subcommand("catalog", "list catalog sets or emit one as a set file");
    std::string cat_action, cat_name;
    cat->add_option("action", cat_action, "list | emit")->required();
    cat->add_option("name", cat_name, "set name (for emit)");

    std::vector<std::string> argv_s;
    argv_s.push_back("delone");
    argv_s.insert(argv_s.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_s) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (info->parsed()) return cmd_info(out, c_info, samples, seed);
        if (nrho->parsed()) return cmd_nrho(out, c_nrho, rho_max, csv);
        if (reg->parsed()) return cmd_check_regular(out, c_reg, method, reg_cap);
        if (reach->parsed()) {
            std::optional<int> k;
            if (kopt->count() > 0) k = reach_k;
            return cmd_reach(out, c_reach, reach_t, k, closure, motif_index);
        }
        if (bonded->parsed()) return cmd_bonded(out, c_bonded, bonded_t);
        if (drop->parsed()) return cmd_drop(out, c_drop, K);
        if (bounds->parsed()) return cmd_bounds(out, c_bounds);
        if (cat->parsed()) return cmd_catalog(out, cat_action, cat_name);
        err << "no command given\n";
        return 2;
    } catch (const unsupported_dimension_error& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace delone
