#include "osculant/cli.hpp"

#include "osculant/catalog.hpp"
#include "osculant/config.hpp"
#include "osculant/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>

namespace osc::cli {

using Json = nlohmann::ordered_json;

std::string sha256_hex(std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr);
    std::ostringstream hex;
    for (unsigned int i = 0; i < length; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return hex.str();
}

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string config_path;
    std::string catalog;
    std::optional<unsigned> degree;
    std::optional<unsigned> ambient;
    std::uint64_t seed = 42;
    std::size_t samples = 5;
    std::int64_t height = 1000;
    std::string json_path;

    unsigned order = 1;
    bool order_given = false;
    unsigned max_order = 3;
    std::size_t trials = 100;
    std::optional<unsigned> target_order;
    std::string export_name;
    std::string out_path;
};

struct Variety {
    Parametrization parametrization;
    std::optional<FiberMap> fiber;
    std::vector<std::string> warnings;
    std::string source;
};

Variety load(const Options& o) {
    if (o.config_path.empty() == o.catalog.empty())
        throw UsageError("exactly one of --config or --catalog is required");
    if (!o.catalog.empty()) {
        auto entry = catalog_get(o.catalog, CatalogArgs{o.degree, o.ambient});
        return Variety{std::move(entry.parametrization), std::move(entry.fiber), {}, "catalog:" + o.catalog};
    }
    std::ifstream in(o.config_path, std::ios::binary);
    if (!in) throw UsageError("cannot read config '" + o.config_path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    auto loaded = load_variety(parse_config(buffer.str()));
    return Variety{std::move(loaded.parametrization), std::move(loaded.fiber), std::move(loaded.warnings), "config"};
}

SamplePlan plan_of(const Options& o) {
    if (o.samples == 0) throw UsageError("--samples must be positive");
    if (o.height < 1) throw UsageError("--height must be positive");
    return SamplePlan{o.seed, o.samples, o.height};
}

Json fractions(std::span<const Rational> v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_fraction_string(x));
    return out;
}

std::string point_text(const Parametrization& p, std::span<const Rational> t) {
    std::string out = "(";
    for (std::size_t j = 0; j < t.size(); ++j) {
        if (j) out += ", ";
        out += p.params()[j] + "=" + to_string(t[j]);
    }
    return out + ")";
}

std::string dims_text(const std::vector<long>& dims) {
    std::string out = "[";
    for (std::size_t i = 0; i < dims.size(); ++i) out += (i ? "," : "") + std::to_string(dims[i]);
    return out + "]";
}

Json rejections_json(const std::vector<Rejection>& rejected) {
    Json out = Json::array();
    for (const auto& r : rejected) out.push_back(Json{{"point", fractions(r.point)}, {"reason", r.reason}});
    return out;
}

struct Outcome {
    Json results;
    std::string verdict;  // "info", "pass", "fail", "not-applicable", or a dichotomy verdict
    int exit_code = 0;
};

using Command = std::function<Outcome(const Variety&, const SamplePlan&, std::ostream&)>;

Outcome cmd_profile(const Options& o, const Variety& v, const SamplePlan& plan, std::ostream& out) {
    const auto& p = v.parametrization;
    const auto prof = profile(p, o.max_order, plan);
    out << dims_text(prof.dims) << "\n";
    out << "witness " << point_text(p, prof.witness) << "\n";
    Json dims = Json::array();
    for (long d : prof.dims) dims.push_back(d);
    return {Json{{"max_order", o.max_order},
                 {"dims", dims},
                 {"witness", fractions(prof.witness)},
                 {"rejected", rejections_json(prof.rejected)}},
            "info", 0};
}

Outcome cmd_span(const Variety& v, const SamplePlan& plan, std::ostream& out) {
    const auto span = variety_span_dim(v.parametrization, plan);
    out << "span dimension " << span.dim << " (ambient P^" << v.parametrization.r() << ", " << span.points_used
        << " points)\n";
    return {Json{{"span_dim", span.dim},
                 {"ambient_dim", v.parametrization.r()},
                 {"points_used", span.points_used},
                 {"rejected", rejections_json(span.rejected)}},
            "info", 0};
}

Outcome cmd_osc_variety(const Options& o, const Variety& v, const SamplePlan& plan, std::ostream& out) {
    const auto& p = v.parametrization;
    const auto result = osculating_variety_dim(p, o.order, plan);
    const auto joint = joint_osculating_span_dim(p, o.order, plan);
    out << "dim T(" << o.order << ",X) = " << result.dim << " at " << point_text(p, result.witness) << "\n";
    out << "span of all order-" << o.order << " osculating spaces: " << joint.dim << "\n";
    return {Json{{"order", o.order},
                 {"osculating_variety_dim", result.dim},
                 {"joint_osculating_span_dim", joint.dim},
                 {"witness", fractions(result.witness)},
                 {"weights", fractions(result.weights)},
                 {"rejected", rejections_json(result.rejected)}},
            "info", 0};
}

Outcome cmd_lemma(const Options& o, const Variety& v, const SamplePlan& plan, std::ostream& out) {
    const auto report = lemma_inclusion_check(v.parametrization, o.order, o.trials, plan, o.target_order);
    const std::size_t held = report.trials.size() - report.failures;
    out << held << "/" << report.trials.size() << " inclusions hold (order " << report.order << ", target order "
        << report.target_order << ")\n";
    Json trials = Json::array();
    for (std::size_t i = 0; i < report.trials.size(); ++i) {
        const auto& t = report.trials[i];
        trials.push_back(Json{{"index", i},
                              {"t0", fractions(t.t0)},
                              {"a", fractions(t.a)},
                              {"b", fractions(t.b)},
                              {"w", fractions(t.w)},
                              {"derivative", fractions(t.derivative)},
                              {"beta", fractions(t.beta)},
                              {"regrouping_consistent", t.regrouping_consistent},
                              {"member", t.member}});
    }
    return {Json{{"order", report.order},
                 {"target_order", report.target_order},
                 {"trials", report.trials.size()},
                 {"failures", report.failures},
                 {"details", trials},
                 {"rejected", rejections_json(report.rejected)}},
            report.passed() ? "pass" : "fail", report.passed() ? 0 : 1};
}

Outcome cmd_constancy(const Options& o, const Variety& v, const SamplePlan& plan, std::ostream& out) {
    const auto& p = v.parametrization;
    const auto prof = profile(p, std::max(o.order, 1u), plan);
    const auto report = first_order_constancy_corank(p, o.order, prof.witness);
    out << "corank k' = " << report.corank << ", fiber dimension >= " << report.fiber_dim_lb << " at "
        << point_text(p, report.t0) << "\n";
    return {Json{{"order", report.order},
                 {"corank", report.corank},
                 {"fiber_dim_lb", report.fiber_dim_lb},
                 {"witness", fractions(report.t0)}},
            "info", 0};
}

Outcome cmd_dichotomy(const Options& o, const Variety& v, const SamplePlan& plan, std::ostream& out) {
    const auto& p = v.parametrization;
    const auto r = dichotomy_check(p, o.order, plan, v.fiber ? &*v.fiber : nullptr);
    out << "m = " << r.order << ", h = " << r.h << ", k = " << r.k << ", n = " << r.n << "\n";
    out << "span of X = " << r.variety_span << " (branch A needs <= " << r.h + r.k << ")\n";
    out << "corank k' = " << r.corank << ", fiber dimension >= " << r.fiber_dim_lb << "\n";
    Json fiber = nullptr;
    if (r.fiber) {
        const auto& f = *r.fiber;
        out << "fiber: constancy " << (f.constancy ? "exact" : "FAILED") << " at " << f.points.size()
            << " points, span " << f.span_dim << " (<= " << f.span_bound << "), dim " << f.dim << " (>= "
            << f.dim_bound << ")\n";
        Json points = Json::array();
        for (const auto& q : f.points) points.push_back(fractions(q));
        fiber = Json{{"points", points},
                     {"constancy", f.constancy},
                     {"span_dim", f.span_dim},
                     {"span_bound", f.span_bound},
                     {"dim", f.dim},
                     {"dim_bound", f.dim_bound},
                     {"passed", f.passed()}};
    }
    out << "verdict: " << to_string(r.verdict) << "\n";
    return {Json{{"order", r.order},
                 {"n", r.n},
                 {"h", r.h},
                 {"k", r.k},
                 {"applicable", r.applicable},
                 {"variety_span_dim", r.variety_span},
                 {"branch_a", r.branch_a},
                 {"corank", r.corank},
                 {"fiber_dim_lb", r.fiber_dim_lb},
                 {"fiber", fiber},
                 {"witness", fractions(r.witness)}},
            std::string(to_string(r.verdict)), r.failed() ? 1 : 0};
}

Outcome cmd_proposition(const Options& o, const Variety& v, const SamplePlan& plan, std::ostream& out) {
    const auto& p = v.parametrization;
    const unsigned m = o.order_given ? o.order : stabilization_order(p, plan);
    const auto r = proposition_check(p, m, plan);
    out << "m = " << r.order << ", h_m = " << r.h_m << ", h_{m+1} = " << r.h_next;
    if (r.span_dim) out << ", span of X = " << *r.span_dim;
    out << "\nverdict: " << to_string(r.outcome) << "\n";
    Json span = r.span_dim ? Json(*r.span_dim) : Json(nullptr);
    return {Json{{"order", r.order},
                 {"h_m", r.h_m},
                 {"h_next", r.h_next},
                 {"span_dim", span},
                 {"witness", fractions(r.witness)}},
            std::string(to_string(r.outcome)), r.outcome == osc::Outcome::fail ? 1 : 0};
}

Outcome cmd_bound(const Options& o, const Variety& v, const SamplePlan& plan, std::ostream& out) {
    const auto r = osculating_bound_check(v.parametrization, o.order, plan);
    out << "dim T(" << r.order << ",X) = " << r.osculating_variety_dim << " <= h_m + k = " << r.h_m + r.k << ": "
        << (r.passed ? "pass" : "fail") << "\n";
    return {Json{{"order", r.order},
                 {"h_m", r.h_m},
                 {"k", r.k},
                 {"osculating_variety_dim", r.osculating_variety_dim}},
            r.passed ? "pass" : "fail", r.passed ? 0 : 1};
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + path + "'");
    file << text;
}

int execute(const std::string& name, const Options& o, const Command& command, std::ostream& out,
            std::ostream& err) {
    const Variety v = load(o);
    const SamplePlan plan = plan_of(o);
    for (const auto& w : v.warnings) err << "warning: " << w << "\n";
    Outcome outcome = command(v, plan, out);
    if (!o.json_path.empty()) {
        Json report{{"schema", kSchema},
                    {"tool_version", kToolVersion},
                    {"command", name},
                    {"variety", Json{{"name", v.parametrization.name()},
                                     {"source", v.source},
                                     {"n", v.parametrization.n()},
                                     {"r", v.parametrization.r()}}},
                    {"config_digest",
                     "sha256:" + sha256_hex(export_config(v.parametrization, v.fiber ? &*v.fiber : nullptr))},
                    {"plan", Json{{"seed", plan.seed}, {"samples", plan.samples}, {"height", plan.height_bound}}},
                    {"warnings", v.warnings},
                    {"results", std::move(outcome.results)},
                    {"verdict", outcome.verdict}};
        write_text(o.json_path, report.dump(2) + "\n");
    }
    return outcome.exit_code;
}

void add_variety_options(CLI::App* sub, Options& o) {
    sub->add_option("--config", o.config_path, "variety config file");
    sub->add_option("--catalog", o.catalog, "catalog entry name");
    sub->add_option("--degree", o.degree, "degree for rnc, rnc_in_hyperplane, cone_rnc");
    sub->add_option("--ambient", o.ambient, "ambient dimension for rnc_in_hyperplane");
    sub->add_option("--seed", o.seed, "random seed")->capture_default_str();
    sub->add_option("--samples", o.samples, "general-point samples")->capture_default_str();
    sub->add_option("--height", o.height, "sample height bound")->capture_default_str();
    sub->add_option("--json", o.json_path, "write a JSON report");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact osculating spaces of parametrized projective varieties", "osc"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    std::string chosen;
    Command command;
    auto bind = [&](CLI::App* sub, Command c) {
        add_variety_options(sub, o);
        sub->callback([&, sub, c] {
            chosen = sub->get_name();
            command = c;
        });
    };

    auto* profile_cmd = app.add_subcommand("profile", "osculating dimensions h_0..h_M at a general point");
    profile_cmd->add_option("--max-order", o.max_order, "largest order M")->capture_default_str();
    bind(profile_cmd, [&](const Variety& v, const SamplePlan& p, std::ostream& s) { return cmd_profile(o, v, p, s); });

    auto* span_cmd = app.add_subcommand("span", "dimension of the linear span of X");
    bind(span_cmd, [&](const Variety& v, const SamplePlan& p, std::ostream& s) { return cmd_span(v, p, s); });

    auto* ovd_cmd = app.add_subcommand("osc-variety-dim", "dimension of the order-m osculating variety");
    ovd_cmd->add_option("--order", o.order, "order m")->required();
    bind(ovd_cmd, [&](const Variety& v, const SamplePlan& p, std::ostream& s) { return cmd_osc_variety(o, v, p, s); });

    auto* lemma_cmd = app.add_subcommand("lemma-check", "tangent vectors of T(m,X) lie in T(m+1,p,X)");
    lemma_cmd->add_option("--order", o.order, "order m")->required();
    lemma_cmd->add_option("--trials", o.trials, "random trials")->capture_default_str();
    lemma_cmd->add_option("--target-order", o.target_order, "test membership in this order instead of m+1");
    bind(lemma_cmd, [&](const Variety& v, const SamplePlan& p, std::ostream& s) { return cmd_lemma(o, v, p, s); });

    auto* constancy_cmd = app.add_subcommand("constancy", "first-order corank of q -> T(m,q,X)");
    constancy_cmd->add_option("--order", o.order, "order m")->required();
    bind(constancy_cmd,
         [&](const Variety& v, const SamplePlan& p, std::ostream& s) { return cmd_constancy(o, v, p, s); });

    auto* dichotomy_cmd = app.add_subcommand("dichotomy", "check the osculating-jump dichotomy at order m");
    dichotomy_cmd->add_option("--order", o.order, "order m")->required();
    bind(dichotomy_cmd,
         [&](const Variety& v, const SamplePlan& p, std::ostream& s) { return cmd_dichotomy(o, v, p, s); });

    auto* prop_cmd = app.add_subcommand("proposition", "h_m = h_{m+1} = h implies X spans a P^h");
    auto* prop_order = prop_cmd->add_option("--order", o.order, "order m (default: first stable order)");
    bind(prop_cmd, [&](const Variety& v, const SamplePlan& p, std::ostream& s) { return cmd_proposition(o, v, p, s); });

    auto* bound_cmd = app.add_subcommand("bound", "dim T(m,X) <= h_m + k");
    bound_cmd->add_option("--order", o.order, "order m")->required();
    bind(bound_cmd, [&](const Variety& v, const SamplePlan& p, std::ostream& s) { return cmd_bound(o, v, p, s); });

    auto* catalog_cmd = app.add_subcommand("catalog", "list or export catalog entries");
    catalog_cmd->require_subcommand(1);
    auto* list_cmd = catalog_cmd->add_subcommand("list", "list catalog entries");
    auto* export_cmd = catalog_cmd->add_subcommand("export", "write an entry in config format");
    export_cmd->add_option("name", o.export_name, "catalog entry")->required();
    export_cmd->add_option("--degree", o.degree, "degree for rnc, rnc_in_hyperplane, cone_rnc");
    export_cmd->add_option("--ambient", o.ambient, "ambient dimension for rnc_in_hyperplane");
    export_cmd->add_option("--out", o.out_path, "output file (default: stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }
    o.order_given = prop_order->count() > 0;

    try {
        if (list_cmd->parsed()) {
            for (const auto& name : catalog_names()) out << name << "\n";
            return 0;
        }
        if (export_cmd->parsed()) {
            const auto text = export_config(catalog_get(o.export_name, CatalogArgs{o.degree, o.ambient}));
            if (o.out_path.empty())
                out << text;
            else
                write_text(o.out_path, text);
            return 0;
        }
        return execute(chosen, o, command, out, err);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const RetryLimitExceeded& e) {
        err << "error: " << e.what() << "\n";
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
    } catch (const GeometryError& e) {
        err << "error: " << e.what() << "\n";
    }
    return 2;
}

} // namespace osc::cli
