#pragma once

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "aml/analysis.hpp"
#include "aml/catalog.hpp"
#include "aml/monoid.hpp"
#include "aml/parse.hpp"
#include "aml/reduction.hpp"
#include "aml/report.hpp"
#include "aml/sweep.hpp"

namespace aml {

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

/// Default seed: the AML_SEED environment variable when set, else 0.
/// A --seed flag overrides the environment.
inline std::uint64_t seed_from_environment() {
    const char* env = std::getenv("AML_SEED");
    if (!env || *env == '\0') return 0;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == nullptr || *end != '\0')
        throw domain_error("AML_SEED must be an unsigned integer");
    return static_cast<std::uint64_t>(v);
}

inline std::vector<std::string> triple_names(std::size_t n) {
    std::vector<std::string> names;
    for (const char* block : {"x", "y", "z"})
        for (std::size_t i = 0; i < n; ++i)
            names.push_back(block + std::to_string(i + 1));
    return names;
}

inline nlohmann::json witness_json(const PolynomialMonoid& m,
                                   const std::optional<AssocWitness>& w) {
    if (!w) return nullptr;
    return {{"component", w->component + 1},
            {"monomial", term_to_string(w->monomial, Rational(1),
                                        triple_names(m.dimension()))},
            {"coefficient", to_string(w->coefficient)}};
}

inline nlohmann::json check_results(const PolynomialMonoid& m) {
    const CheckReport rep = check_monoid(m);
    nlohmann::json results;
    results["dimension"] = m.dimension();
    results["associative"] = rep.associative;
    results["witness"] = witness_json(m, rep.witness);
    results["commutative"] = rep.commutative;
    results["unit"] = rep.unit ? to_json(*rep.unit) : nlohmann::json(nullptr);
    const auto match = match_catalog(m);
    results["catalog_match"] = match ? nlohmann::json(to_text(*match)) : nullptr;
    return results;
}

inline nlohmann::json monoid_json(const PolynomialMonoid& m) {
    nlohmann::json j;
    j["dimension"] = m.dimension();
    nlohmann::json comps = nlohmann::json::array();
    const auto names = argument_pair_names(m.dimension());
    for (const auto& c : m.components()) comps.push_back(to_string(c, names));
    j["components"] = comps;
    j["unit"] = m.unit() ? to_json(*m.unit()) : nlohmann::json(nullptr);
    j["source"] = to_source_text(m);
    return j;
}

inline nlohmann::json components_json(const PolynomialMonoid& m,
                                      const std::vector<VarietyComponent>& comps,
                                      PointPredicate predicate) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& comp : comps) {
        nlohmann::json j = to_json(comp);
        j["verified"] = verify_component(m, comp, predicate);
        arr.push_back(std::move(j));
    }
    return arr;
}

}  // namespace detail

/// Parses and runs one command line (without the program name). Returns the
/// process exit code: 0 when the command succeeded and every checked property
/// holds, 1 when a mathematical check fails, 2 on usage or parse errors. The
/// JSON report goes to `out`, diagnostics to `err`.
inline int run_command(const std::vector<std::string>& argv, std::ostream& out,
                       std::ostream& err) {
    CLI::App app{"exact arithmetic for polynomial monoid structures on affine space"};
    app.require_subcommand(1);

    std::string file_arg, descriptor_arg, descriptor_arg2, side_arg;
    std::uint64_t trials = 200;
    std::int64_t quad[4] = {0, 0, 0, 0};
    std::optional<std::uint64_t> seed_flag;
    std::optional<std::uint64_t> dim_flag;
    SweepConfig sweep_cfg;

    CLI::App* cmd_check = app.add_subcommand("check", "verify the monoid axioms of a definition file");
    cmd_check->add_option("file", file_arg, "monoid definition file")->required();

    CLI::App* cmd_catalog = app.add_subcommand("catalog", "catalog information");
    CLI::App* cmd_catalog_list = cmd_catalog->add_subcommand("list", "list the classified families");
    cmd_catalog_list->add_option("--dim", dim_flag, "restrict to one dimension");
    cmd_catalog->require_subcommand(1);

    CLI::App* cmd_build = app.add_subcommand("build", "print the multiplication of a catalog descriptor");
    cmd_build->add_option("descriptor", descriptor_arg, "catalog descriptor, e.g. MAA_Q(1,2,1,3)")->required();

    CLI::App* cmd_compatible = app.add_subcommand("compatible", "decide compatibility of a quadruple");
    cmd_compatible->add_option("b", quad[0])->required();
    cmd_compatible->add_option("bp", quad[1])->required();
    cmd_compatible->add_option("c", quad[2])->required();
    cmd_compatible->add_option("cp", quad[3])->required();

    CLI::App* cmd_qpoly = app.add_subcommand("qpoly", "print the correction polynomial of a compatible quadruple");
    cmd_qpoly->add_option("b", quad[0])->required();
    cmd_qpoly->add_option("bp", quad[1])->required();
    cmd_qpoly->add_option("c", quad[2])->required();
    cmd_qpoly->add_option("cp", quad[3])->required();

    CLI::App* cmd_reduce = app.add_subcommand("reduce", "commutative reduction of a semicommutative descriptor");
    cmd_reduce->add_option("--side", side_arg, "left or right")
        ->required()
        ->check(CLI::IsMember({"left", "right"}));
    cmd_reduce->add_option("descriptor", descriptor_arg)->required();

    CLI::App* cmd_idem = app.add_subcommand("idempotents", "idempotent components of a catalog monoid");
    cmd_idem->add_option("descriptor", descriptor_arg)->required();

    CLI::App* cmd_center = app.add_subcommand("center", "center components of a catalog monoid");
    cmd_center->add_option("descriptor", descriptor_arg)->required();

    CLI::App* cmd_iso = app.add_subcommand("iso", "decide isomorphism of two descriptors");
    cmd_iso->add_option("first", descriptor_arg)->required();
    cmd_iso->add_option("second", descriptor_arg2)->required();

    CLI::App* cmd_fuzz = app.add_subcommand("fuzz", "seeded sampling check of associativity");
    cmd_fuzz->add_option("file", file_arg)->required();
    cmd_fuzz->add_option("--trials", trials, "number of sampled triples");
    cmd_fuzz->add_option("--seed", seed_flag, "generator seed (overrides AML_SEED)");

    CLI::App* cmd_sweep = app.add_subcommand("sweep", "run the full verification sweep");
    cmd_sweep->add_option("--max", sweep_cfg.max_param, "parameter bound for the quadruple sweeps");
    cmd_sweep->add_option("--q-max", sweep_cfg.max_q, "entry bound for compatible quadruples");
    cmd_sweep->add_option("--mutants", sweep_cfg.mutant_count, "number of seeded mutants");
    cmd_sweep->add_option("--seed", seed_flag, "mutation seed (overrides AML_SEED)");

    try {
        std::vector<std::string> reversed(argv.rbegin(), argv.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    Report report;
    report.command = argv;
    int code = 0;

    try {
        if (cmd_check->parsed()) {
            PolynomialMonoid m = parse_monoid(detail::read_file(file_arg));
            report.results = detail::check_results(m);
            const bool ok = report.results["associative"].get<bool>() &&
                            !report.results["unit"].is_null();
            code = ok ? 0 : 1;
        } else if (cmd_catalog_list->parsed()) {
            std::optional<std::size_t> dim;
            if (dim_flag) dim = static_cast<std::size_t>(*dim_flag);
            nlohmann::json families = nlohmann::json::array();
            for (const auto& f : catalog_families(dim))
                families.push_back({{"name", f.name},
                                    {"dim", f.dim},
                                    {"rank", f.rank},
                                    {"parameters", f.parameters},
                                    {"multiplication", f.multiplication}});
            report.results["families"] = families;
        } else if (cmd_build->parsed()) {
            const MonoidDescriptor d = parse_descriptor(descriptor_arg);
            const PolynomialMonoid m = build_monoid(d);
            report.results = detail::monoid_json(m);
            report.results["descriptor"] = to_text(d);
            report.results["display"] = display_name(d);
            report.results["rank"] = rank(d);
        } else if (cmd_compatible->parsed() || cmd_qpoly->parsed()) {
            const Quadruple p{quad[0], quad[1], quad[2], quad[3]};
            const auto witness = is_compatible(p);
            report.results["compatible"] = witness.has_value();
            if (witness) {
                report.results["d"] = witness->d;
                if (cmd_qpoly->parsed())
                    report.results["q"] =
                        to_string(q_poly(p), {"x1", "x2", "y1", "y2"});
            }
            code = witness ? 0 : 1;
        } else if (cmd_reduce->parsed()) {
            const MonoidDescriptor d = parse_descriptor(descriptor_arg);
            const Side side = side_arg == "left" ? Side::Left : Side::Right;
            const ReductionResult r = commutative_reduction(d, side);
            report.results["descriptor"] = to_text(d);
            report.results["side"] = to_string(side);
            report.results["identified"] = display_name(r.identified);
            report.results["identified_descriptor"] = to_text(r.identified);
            report.results["reduced"] = detail::monoid_json(r.reduced);
        } else if (cmd_idem->parsed()) {
            const MonoidDescriptor d = parse_descriptor(descriptor_arg);
            const PolynomialMonoid m = build_monoid(d);
            const auto comps = idempotent_components(d);
            report.results["descriptor"] = to_text(d);
            report.results["components"] =
                detail::components_json(m, comps, PointPredicate::Idempotent);
            const auto counts = component_count_vs_rank(d);
            report.results["count"] = counts.count;
            report.results["rank"] = counts.rank;
            report.results["equal_2r"] = counts.equal_2r;
        } else if (cmd_center->parsed()) {
            const MonoidDescriptor d = parse_descriptor(descriptor_arg);
            const PolynomialMonoid m = build_monoid(d);
            const auto comps = center_components(d);
            report.results["descriptor"] = to_text(d);
            report.results["components"] =
                detail::components_json(m, comps, PointPredicate::Central);
            report.results["expanded_count"] = expanded_component_count(comps);
            if ((d.family == Family::MAA || d.family == Family::MAAQ) &&
                !is_commutative_descriptor(d))
                report.results["rank1_count"] = center_component_count_rank1(d);
        } else if (cmd_iso->parsed()) {
            const MonoidDescriptor d1 = parse_descriptor(descriptor_arg);
            const MonoidDescriptor d2 = parse_descriptor(descriptor_arg2);
            report.results["first"] = to_text(d1);
            report.results["second"] = to_text(d2);
            report.results["isomorphic"] = to_string(are_isomorphic(d1, d2));
        } else if (cmd_fuzz->parsed()) {
            const std::uint64_t seed =
                seed_flag ? *seed_flag : detail::seed_from_environment();
            PolynomialMonoid m = parse_monoid(detail::read_file(file_arg));
            const SampleResult r = sample_associativity(m, trials, seed);
            report.seed = seed;
            report.results["associative_sampled"] = r.associative;
            report.results["trials"] = trials;
            report.results["trials_run"] = r.trials_run;
            report.results["counterexample"] =
                r.counterexample
                    ? nlohmann::json{{"x", to_json(r.counterexample->x)},
                                     {"y", to_json(r.counterexample->y)},
                                     {"z", to_json(r.counterexample->z)}}
                    : nlohmann::json(nullptr);
            code = r.associative ? 0 : 1;
        } else if (cmd_sweep->parsed()) {
            if (!cmd_sweep->count("--q-max")) sweep_cfg.max_q = sweep_cfg.max_param + 2;
            if (seed_flag)
                sweep_cfg.mutation_seed = *seed_flag;
            else if (std::getenv("AML_SEED"))
                sweep_cfg.mutation_seed = detail::seed_from_environment();
            report.seed = sweep_cfg.mutation_seed;
            const auto items = run_acceptance_sweep(sweep_cfg);
            bool all = true;
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& item : items) {
                all = all && item.pass;
                arr.push_back({{"name", item.name},
                               {"pass", item.pass},
                               {"checked", item.checked},
                               {"detail", item.detail}});
            }
            report.results["items"] = arr;
            report.results["pass"] = all;
            code = all ? 0 : 1;
        }
    } catch (const unit_error& e) {
        report.results["error"] = e.what();
        out << emit_report(report);
        err << "check failed: " << e.what() << "\n";
        return 1;
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    out << emit_report(report);
    return code;
}

}  // namespace aml
