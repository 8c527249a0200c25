#include "kron/cli.hpp"

#include <CLI11.hpp>

#include "kron/characters.hpp"
#include "kron/geometry.hpp"
#include "kron/json_io.hpp"
#include "kron/kronecker.hpp"
#include "kron/multitableau.hpp"
#include "kron/points.hpp"
#include "kron/selfcheck.hpp"

namespace kron {

namespace {

struct Options {
    int threads = 1;
    std::string lambda, mu, nu, tau;
    std::string method;
    int ell = 1;
    bool json = false;
    bool transport = false;
    bool decorate = false;
    bool pairs = false;
    bool polytope = false;
    int p = 0, q = 0, r = 0;
    int n = 0;
};

void add_triple_options(CLI::App* cmd, Options& o, bool nu_is_tau) {
    cmd->add_option("--lambda", o.lambda, "first partition, e.g. 3,2,1")->required();
    cmd->add_option("--mu", o.mu, "second partition")->required();
    if (nu_is_tau) cmd->add_option("--tau", o.tau, "composition of positive parts")->required();
    else cmd->add_option("--nu", o.nu, "third partition")->required();
}

Json jt_breakdown(const Partition& lambda, const Partition& mu, const Partition& nu, Count value) {
    const NormalizedTriple t = normalize_triple(lambda, mu, nu);
    Json terms = Json::array();
    if (!t.shortcut) {
        for (const auto& term : jt_expansion(t.nu))
            terms.push_back({{"sign", term.sign},
                             {"gamma", to_json(term.gamma)},
                             {"count", cached_count(t.lambda, t.mu, term.gamma)}});
    }
    return Json{{"lambda", to_json(lambda)}, {"mu", to_json(mu)}, {"nu", to_json(nu)}, {"method", "jt"},
                {"value", value},           {"terms", std::move(terms)}};
}

int cmd_g(const Options& o, std::ostream& out) {
    const Partition lambda = parse_partition(o.lambda);
    const Partition mu = parse_partition(o.mu);
    const Partition nu = parse_partition(o.nu);
    if (o.method == "jt") {
        const Count value = kron_via_cr(lambda, mu, nu, o.threads);
        if (o.json) out << jt_breakdown(lambda, mu, nu, value).dump() << "\n";
        else out << value << "\n";
    } else if (o.method == "faces") {
        const FaceResult res = kron_via_faces_detailed(lambda, mu, nu, o.ell, o.threads);
        if (o.json) {
            Json terms = Json::array();
            for (const auto& term : res.terms) terms.push_back(to_json(term));
            out << Json{{"lambda", to_json(lambda)}, {"mu", to_json(mu)}, {"nu", to_json(nu)}, {"method", "faces"},
                        {"ell", o.ell}, {"value", res.value}, {"terms", std::move(terms)}}
                       .dump()
                << "\n";
        } else {
            out << res.value << "\n";
        }
    } else {
        const Count value = g_oracle(lambda, mu, nu);
        if (o.json)
            out << Json{{"lambda", to_json(lambda)}, {"mu", to_json(mu)}, {"nu", to_json(nu)}, {"method", "oracle"},
                        {"value", value}}
                       .dump()
                << "\n";
        else out << value << "\n";
    }
    return 0;
}

int cmd_lr(const Options& o, std::ostream& out) {
    const Partition lambda = parse_partition(o.lambda);
    const Partition mu = parse_partition(o.mu);
    const Composition tau = parse_composition(o.tau);
    Count value;
    if (o.method == "polytope") value = count_points(CRSystem(lambda, mu, tau));
    else if (o.method == "tableaux") value = count_lr_pairs(lambda, mu, tau);
    else value = lr_oracle(lambda, mu, tau);
    out << value << "\n";
    return 0;
}

int cmd_count(const Options& o, std::ostream& out) {
    const CRSystem sys(parse_partition(o.lambda), parse_partition(o.mu), parse_composition(o.tau), o.transport);
    out << count_points(sys) << "\n";
    return 0;
}

int cmd_points(const Options& o, std::ostream& out) {
    const CRSystem sys(parse_partition(o.lambda), parse_partition(o.mu), parse_composition(o.tau));
    for_each_point(sys, [&](const Tensor3& x) {
        Json line = to_json(x);
        if (o.decorate) line["image"] = to_json(tensor_image(x));
        out << line.dump() << "\n";
    });
    return 0;
}

int cmd_expand(const Options& o, std::ostream& out) {
    const Partition nu = parse_partition(o.nu);
    Json terms = Json::array();
    if (o.pairs) {
        for (const auto& term : jt_pair_expansion(nu)) terms.push_back(to_json(term));
    } else {
        for (const auto& term : jt_expansion(nu)) terms.push_back(to_json(term));
    }
    out << terms.dump() << "\n";
    return 0;
}

int cmd_dim(const Options& o, std::ostream& out) {
    out << (o.polytope ? polytope_dim_bound(o.p, o.q, o.r) : cone_dim(o.p, o.q, o.r)) << "\n";
    return 0;
}

int cmd_explain(const Options& o, std::ostream& out) {
    const CRSystem sys(parse_partition(o.lambda), parse_partition(o.mu), parse_composition(o.tau), o.transport);
    out << to_json(sys).dump(2) << "\n";
    return 0;
}

int cmd_selfcheck(const Options& o, std::ostream& out) {
    const SelfcheckReport report = run_selfcheck(o.n, o.threads);
    out << report.text;
    return report.mismatches == 0 ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app("Kronecker coefficients from column-row polytopes", "kron");
    app.require_subcommand(1);
    app.add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1, 256));

    auto* g = app.add_subcommand("g", "Kronecker coefficient g(lambda, mu, nu)");
    add_triple_options(g, o, false);
    o.method = "jt";
    g->add_option("--method", o.method, "jt, faces or oracle")->check(CLI::IsMember({"jt", "faces", "oracle"}));
    g->add_option("--ell", o.ell, "face index for --method faces")->check(CLI::PositiveNumber);
    g->add_flag("--json", o.json, "print the term breakdown as JSON");

    auto* lr = app.add_subcommand("lr", "Littlewood-Richardson number lr(lambda, mu; tau)");
    add_triple_options(lr, o, true);
    auto* lr_method = lr->add_option("--method", o.method, "polytope, tableaux or characters")
                          ->check(CLI::IsMember({"polytope", "tableaux", "characters"}));

    auto* count = app.add_subcommand("count", "integer points of CR(lambda, mu; tau)");
    add_triple_options(count, o, true);
    count->add_flag("--transport", o.transport, "count the transportation polytope instead");

    auto* points = app.add_subcommand("points", "integer points as JSON lines");
    add_triple_options(points, o, true);
    points->add_flag("--decorate", o.decorate, "append the tableau image of each point");

    auto* expand = app.add_subcommand("expand", "Jacobi-Trudi terms of s_nu as JSON");
    expand->add_option("--nu", o.nu, "partition")->required();
    expand->add_flag("--pairs", o.pairs, "pair terms from the 2x2 minors");

    auto* dim = app.add_subcommand("dim", "dimension of the column-row cone");
    dim->add_option("--p", o.p)->required();
    dim->add_option("--q", o.q)->required();
    dim->add_option("--r", o.r)->required();
    dim->add_flag("--polytope", o.polytope, "upper bound for the polytope instead");

    auto* explain = app.add_subcommand("explain", "constraint lists of CR(lambda, mu; tau) as JSON");
    add_triple_options(explain, o, true);
    explain->add_flag("--transport", o.transport, "drop the column-row constraints");

    auto* selfcheck = app.add_subcommand("selfcheck", "compare all methods on every triple up to size n");
    selfcheck->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (g->parsed()) return cmd_g(o, out);
        if (lr->parsed()) {
            if (lr_method->count() == 0) o.method = "polytope";
            return cmd_lr(o, out);
        }
        if (count->parsed()) return cmd_count(o, out);
        if (points->parsed()) return cmd_points(o, out);
        if (expand->parsed()) return cmd_expand(o, out);
        if (dim->parsed()) return cmd_dim(o, out);
        if (explain->parsed()) return cmd_explain(o, out);
        if (selfcheck->parsed()) return cmd_selfcheck(o, out);
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    err << "internal error: no command ran\n";
    return 1;
}

} // namespace kron
