// acbm: exact almost contact B-metric geometry on Lie groups.
//
// Subcommands: validate, classify, connection, torsion, curvature,
// verify-example. Reports are deterministic in both text and JSON form;
// exit codes: 0 all checks pass, 1 some check failed, 2 input error.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "acbm/curvature.hpp"
#include "acbm/example_f6.hpp"
#include "acbm/geometry.hpp"
#include "acbm/manifold_spec.hpp"

namespace {

struct Options {
    std::string format = "text";
    std::string input;
    std::string connection = "phib";
    std::vector<std::string> binds;
    std::uint64_t seed = 20250;
    bool seed_given = false;
};

std::map<std::string, acbm::Rational> parse_binds(const std::vector<std::string>& binds) {
    std::map<std::string, acbm::Rational> out;
    for (const auto& b : binds) {
        const auto eq = b.find('=');
        if (eq == std::string::npos || eq == 0)
            throw acbm::ParseError("--bind expects name=rational, got '" + b + "'", 0, "bind");
        const std::string name = b.substr(0, eq);
        out[name] = acbm::parse_rational(b.substr(eq + 1));
    }
    return out;
}

acbm::AlgebraModel load_model(const Options& opt) {
    std::ifstream in(opt.input);
    if (!in) throw acbm::ParseError("cannot open input file '" + opt.input + "'", 0, "input");
    std::stringstream buffer;
    buffer << in.rdbuf();
    acbm::AlgebraModel model = acbm::to_model(acbm::parse_manifold_spec(buffer.str()));
    const auto binds = parse_binds(opt.binds);
    if (!binds.empty()) model = acbm::bind_parameters(model, binds);
    return model;
}

int emit(const acbm::Report& report, const Options& opt) {
    std::cout << (opt.format == "json" ? acbm::to_json(report) : acbm::to_text(report));
    return report.all_pass() ? 0 : 1;
}

std::string index_key(const char* name, std::initializer_list<int> idx1) {
    std::string out = name;
    out += '(';
    bool first = true;
    for (int i : idx1) {
        if (!first) out += ',';
        out += std::to_string(i);
        first = false;
    }
    out += ')';
    return out;
}

void list_components(acbm::CheckEntry& entry, const acbm::Tensor& t, const char* name) {
    acbm::for_each_index(t.dim(), t.rank(), [&](std::span<const int> idx) {
        const acbm::Poly& p = t.at(idx);
        if (p.is_zero()) return;
        std::string key = name;
        key += '(';
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (i) key += ',';
            key += std::to_string(idx[i] + 1);
        }
        key += ')';
        entry.components.emplace_back(std::move(key), p.to_string());
    });
    if (entry.components.empty()) entry.detail = "all components zero";
}

int cmd_validate(const Options& opt) {
    const acbm::AlgebraModel model = load_model(opt);
    acbm::Report report = acbm::validate_structure(model);
    report.append(acbm::check_jacobi(model));
    return emit(report, opt);
}

int cmd_classify(const Options& opt) {
    const acbm::AlgebraModel model = load_model(opt);
    acbm::Report structural = acbm::validate_structure(model);
    structural.append(acbm::check_jacobi(model));
    if (!structural.all_pass()) return emit(structural, opt);
    return emit(acbm::classify(model).to_report(), opt);
}

int cmd_connection(const Options& opt) {
    const acbm::AlgebraModel model = load_model(opt);
    const acbm::Connection lc = acbm::levi_civita(model);
    acbm::Report report;
    if (opt.connection == "lc") {
        auto metricity = acbm::check_zero("nabla g = 0", [&] {
            const int d = model.dim();
            acbm::Tensor r(d, {acbm::Slot::Covariant, acbm::Slot::Covariant, acbm::Slot::Covariant},
                           model.params());
            acbm::for_each_index(d, 3, [&](std::span<const int> idx) {
                const int i = idx[0], j = idx[1], k = idx[2];
                acbm::Poly s = acbm::Poly::zero(model.params());
                for (int mm = 0; mm < d; ++mm) {
                    s -= lc.gamma.at({mm, i, j}) * model.metric()[static_cast<std::size_t>(mm)][static_cast<std::size_t>(k)];
                    s -= lc.gamma.at({mm, i, k}) * model.metric()[static_cast<std::size_t>(j)][static_cast<std::size_t>(mm)];
                }
                r.at(idx) = std::move(s);
            });
            return r;
        }());
        auto& me = report.add(metricity.name, metricity.pass);
        if (!metricity.pass) me.witness = metricity.witness_text();
        auto torsion_free = acbm::check_zero("torsion-free", acbm::torsion_tensor(model, lc));
        auto& te = report.add(torsion_free.name, torsion_free.pass);
        if (!torsion_free.pass) te.witness = torsion_free.witness_text();
        auto& comps = report.add("Levi-Civita coefficients", true);
        list_components(comps, lc.gamma, "Gamma");
    } else {
        const acbm::Connection np = acbm::phib_connection(model, lc);
        report = acbm::naturality_checks(model, np);
        auto& comps = report.add("phiB coefficients", true);
        list_components(comps, np.gamma, "Gamma'");
    }
    return emit(report, opt);
}

int cmd_torsion(const Options& opt) {
    const acbm::AlgebraModel model = load_model(opt);
    const acbm::Connection lc = acbm::levi_civita(model);
    acbm::Report report;
    if (opt.connection == "lc") {
        const acbm::Tensor T = acbm::torsion_tensor(model, lc);
        auto zero = acbm::check_zero("Levi-Civita torsion vanishes", T);
        auto& e = report.add(zero.name, zero.pass);
        if (!zero.pass) e.witness = zero.witness_text();
        auto& comps = report.add("torsion components", true);
        list_components(comps, T, "T");
        return emit(report, opt);
    }
    const acbm::Connection np = acbm::phib_connection(model, lc);
    const acbm::TorsionAnalysis analysis = acbm::torsion_analysis(model, np);
    report.add("torsion dual construction (commutator vs closed form)", true);
    auto& comps = report.add("torsion components", true);
    list_components(comps, analysis.torsion, "T");
    auto& ft = report.add("torsion form t", true);
    list_components(ft, analysis.t, "t");
    auto& fts = report.add("torsion form t*", true);
    list_components(fts, analysis.t_star, "t*");
    auto& fth = report.add("torsion form t^", true);
    list_components(fth, analysis.t_hat, "t^");
    for (const auto& [name, verdict] : analysis.class_verdicts) {
        auto& e = report.add("torsion class " + name, verdict.pass);
        if (!verdict.pass) e.witness = verdict.witness_text();
    }
    return emit(report, opt);
}

int cmd_curvature(const Options& opt) {
    const acbm::AlgebraModel model = load_model(opt);
    const acbm::Connection lc = acbm::levi_civita(model);
    acbm::Report report;
    if (opt.connection == "lc") {
        const acbm::Tensor R = acbm::curvature_tensor(model, lc);
        const acbm::ScalarCurvatures sc = acbm::scalar_curvatures(model, R, lc);
        const acbm::KaehlerFlags flags = acbm::kaehler_type_flags(R, model);
        report.add("pair antisymmetries", flags.pair_antisymmetries);
        report.add("cyclic sum zero (first identity)", flags.cyclic_zero);
        report.add("phi-anti-invariance", flags.phi_anti_invariant);
        auto& comps = report.add("curvature components", true);
        list_components(comps, R, "R");
        auto& scal = report.add("scalar curvatures", true);
        scal.components.emplace_back("tau", sc.tau.to_string());
        scal.components.emplace_back("tau*", sc.tau_star.to_string());
        scal.components.emplace_back("|nabla xi|^2", sc.nabla_xi_norm2.to_string());
        return emit(report, opt);
    }
    const acbm::Connection np = acbm::phib_connection(model, lc);
    const acbm::CurvatureAnalysis analysis = acbm::phib_curvature(model, np);
    report.add("curvature dual construction (commutator vs potential form)", true);
    report.add("pair antisymmetries", analysis.kaehler_flags.pair_antisymmetries);
    report.add("cyclic sum zero (first identity)", analysis.kaehler_flags.cyclic_zero);
    report.add("phi-anti-invariance", analysis.kaehler_flags.phi_anti_invariant);
    auto& comps = report.add("curvature components", true);
    list_components(comps, analysis.r_prime, "R'");
    auto& scal = report.add("scalar curvatures", true);
    scal.components.emplace_back("tau'", analysis.tau_prime.to_string());
    scal.components.emplace_back("tau'*", analysis.tau_prime_star.to_string());
    const acbm::ClassReport cls = acbm::classify(model);
    if (cls.u) {
        const acbm::Tensor R = acbm::curvature_tensor(model, lc);
        report.append(acbm::curvature_u_identities(model, R, lc, analysis));
        if (cls.u1) report.append(acbm::xi_curvature_check(model, R, lc));
    }
    return emit(report, opt);
}

int cmd_verify_example(const Options& opt) {
    const auto binds = parse_binds(opt.binds);
    acbm::ExampleParams params;
    for (const auto& [name, value] : binds) {
        if (name == "l1") params.l1 = value;
        else if (name == "l2") params.l2 = value;
        else if (name == "l3") params.l3 = value;
        else if (name == "l4") params.l4 = value;
        else if (name == "m1") params.m1 = value;
        else if (name == "m3") params.m3 = value;
        else throw acbm::ParseError("unknown example parameter '" + name + "'", 0, "bind");
    }
    acbm::Report report = acbm::verify_paper_claims(params);
    if (opt.seed_given) {
        std::mt19937_64 rng(opt.seed);
        const int trials = 20;
        int failed_trial = -1;
        std::string failed_name;
        for (int t = 0; t < trials && failed_trial < 0; ++t) {
            const acbm::AlgebraModel base = acbm::build_example(params);
            const auto bindings = acbm::random_bindings(*base.params(), rng);
            const acbm::AlgebraModel bound = acbm::bind_parameters(base, bindings);
            const acbm::Report suite = acbm::natural_connection_suite(bound);
            if (!suite.all_pass()) {
                failed_trial = t;
                for (const auto& e : suite.entries)
                    if (!e.pass) {
                        failed_name = e.name;
                        break;
                    }
            }
        }
        auto& e = report.add("random instances (naturality and dual constructions)",
                             failed_trial < 0,
                             std::to_string(trials) + " trials, seed " + std::to_string(opt.seed));
        if (failed_trial >= 0)
            e.witness = "trial " + std::to_string(failed_trial + 1) + ": " + failed_name;
    }
    return emit(report, opt);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact symbolic engine for almost contact B-metric structures on Lie groups"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--seed", opt.seed, "Seed for randomized instantiation checks")
        ->capture_default_str();
    app.add_option("--bind", opt.binds, "Bind a parameter, e.g. --bind l1=1/2 (repeatable)");

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("--input", opt.input, "Manifold spec JSON file")->required();
    };
    auto add_connection = [&](CLI::App* cmd) {
        cmd->add_option("--connection", opt.connection, "Connection to analyze")
            ->check(CLI::IsMember({"lc", "phib"}))
            ->capture_default_str();
    };

    CLI::App* validate = app.add_subcommand("validate", "Check the structure axioms and the Jacobi identity");
    add_input(validate);
    CLI::App* classify = app.add_subcommand("classify", "Decide class memberships (F0, U, U1, U2, U3, sub-label)");
    add_input(classify);
    CLI::App* connection = app.add_subcommand("connection", "Connection coefficients and parallelism checks");
    add_input(connection);
    add_connection(connection);
    CLI::App* torsion = app.add_subcommand("torsion", "Torsion tensor, forms and class predicates");
    add_input(torsion);
    add_connection(torsion);
    CLI::App* curvature = app.add_subcommand("curvature", "Curvature tensor, scalar curvatures and identities");
    add_input(curvature);
    add_connection(curvature);
    CLI::App* verify = app.add_subcommand("verify-example", "Verify every claim about the built-in F6 family");
    for (CLI::App* sub : {validate, classify, connection, torsion, curvature, verify})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    opt.seed_given = app.count("--seed") > 0;

    try {
        if (validate->parsed()) return cmd_validate(opt);
        if (classify->parsed()) return cmd_classify(opt);
        if (connection->parsed()) return cmd_connection(opt);
        if (torsion->parsed()) return cmd_torsion(opt);
        if (curvature->parsed()) return cmd_curvature(opt);
        if (verify->parsed()) return cmd_verify_example(opt);
    } catch (const acbm::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const acbm::StructuralError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const acbm::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n" << e.detail;
        return 2;
    } catch (const acbm::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
