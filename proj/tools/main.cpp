#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pbred/encoder.hpp"
#include "pbred/errors.hpp"
#include "pbred/pipeline.hpp"
#include "pbred/report.hpp"
#include "pbred/text_io.hpp"
#include "pbred/verify.hpp"

namespace {

// 0 success, 1 internal error, 2 bad input, 3 infeasible / no solution,
// 4 verification found a mismatch.
constexpr int kExitError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitMismatch = 4;

struct ReduceOptions {
    std::string instance_path;
    std::string equations_path;
    std::uint64_t states = 1000;
    bool no_search = false;
    std::size_t rounds = 1;
    std::size_t pattern_degree = 2;
    bool global_lambda = false;
    std::string deductions_path;
    std::string order = "msb";
    bool timings = false;
};

void add_reduce_options(CLI::App* cmd, ReduceOptions& opt, bool instance_only) {
    if (instance_only) {
        cmd->add_option("--instance", opt.instance_path, "instance file")->required();
    } else {
        auto* inst = cmd->add_option("--instance", opt.instance_path, "instance file");
        auto* eqs = cmd->add_option("--equations", opt.equations_path, "equations file");
        inst->excludes(eqs);
    }
    cmd->add_option("--states", opt.states, "search budget per round")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_flag("--no-search", opt.no_search, "stop after the simple judgments");
    cmd->add_option("--rounds", opt.rounds, "search rounds")->capture_default_str();
    cmd->add_option("--pattern-degree", opt.pattern_degree,
                    "largest vanishing product degree to extract (2 or 3)")
        ->capture_default_str();
    cmd->add_flag("--global-lambda", opt.global_lambda,
                  "rewrite whole polynomials with one weight per deduction");
    cmd->add_option("--deductions", opt.deductions_path, "extra deductions file (f == g lines)");
    cmd->add_option("--order", opt.order, "search order for instances: msb or lsb")
        ->check(CLI::IsMember({"msb", "lsb"}))
        ->capture_default_str();
    cmd->add_flag("--timings", opt.timings, "print wall-clock timings to stderr");
}

pbred::PipelineConfig build_config(const ReduceOptions& opt) {
    pbred::PipelineConfig config;
    if (!opt.no_search) config.states = opt.states;
    config.rounds = opt.rounds;
    config.pattern_degree_cap = opt.pattern_degree;
    config.global_lambda = opt.global_lambda;
    if (!opt.deductions_path.empty()) {
        for (auto& [f, g] : pbred::read_deduction_pairs_file(opt.deductions_path))
            config.user_deductions.push_back(
                pbred::make_deduction(std::move(f), std::move(g), pbred::DeductionSource::user));
    }
    return config;
}

struct ReduceRun {
    pbred::PipelineResult result;
    std::optional<pbred::Integer> product;
    std::optional<pbred::FactorizationInstance> instance;
};

ReduceRun run_reduction(const ReduceOptions& opt) {
    ReduceRun run;
    pbred::PipelineConfig config = build_config(opt);
    auto start = std::chrono::steady_clock::now();
    if (!opt.instance_path.empty()) {
        run.instance = pbred::read_instance_file(opt.instance_path);
        run.product = run.instance->product;
        if (opt.order == "lsb") config.search_order = run.instance->search_order_lsb_first();
        run.result = pbred::reduce_factorization(*run.instance, std::move(config));
    } else {
        auto equations = pbred::read_equations_file(opt.equations_path);
        run.result = pbred::reduce_pipeline(equations, config);
    }
    if (opt.timings) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::cerr << "reduction took " << ms << " ms\n";
    }
    return run;
}

std::string format_witness(const pbred::Assignment& a) {
    std::string out;
    for (const auto& [v, bit] : a.values()) {
        if (!out.empty()) out += ' ';
        out += 'x' + std::to_string(v) + '=' + (bit ? '1' : '0');
    }
    return out;
}

int cmd_encode(const std::string& product_text, unsigned p_bits, unsigned q_bits,
               const std::string& out_path) {
    pbred::Integer product(product_text);
    pbred::FactorizationInstance inst =
        p_bits ? pbred::encode(product, p_bits, q_bits) : pbred::encode_balanced(product);
    if (out_path.empty()) {
        pbred::write_instance(std::cout, inst);
    } else {
        pbred::write_instance_file(out_path, inst);
        std::cerr << "wrote " << inst.variables.size() << " variables, "
                  << inst.equations.size() << " equations to " << out_path << '\n';
    }
    return 0;
}

int cmd_reduce(const ReduceOptions& opt, bool machine, const std::string& out_polynomial,
               const std::string& out_substitution, const std::string& out_equations) {
    ReduceRun run = run_reduction(opt);
    if (!out_polynomial.empty())
        pbred::write_polynomial_file(out_polynomial, run.result.h_final);
    if (!out_substitution.empty())
        pbred::write_substitution_file(out_substitution, run.result.substitution);
    if (!out_equations.empty())
        pbred::write_equations_file(out_equations, run.result.final_equations);
    std::cout << (machine ? pbred::render_machine_report(run.result, run.product)
                          : pbred::render_stage_table(run.result, run.product));
    return 0;
}

int cmd_solve(const ReduceOptions& opt, std::size_t cap) {
    ReduceRun run = run_reduction(opt);
    const pbred::PipelineResult& res = run.result;

    std::set<pbred::var_index> mentioned;
    for (pbred::var_index v : res.h_final.support()) mentioned.insert(v);
    for (const pbred::BinaryEquation& eq : res.final_equations)
        for (const pbred::Polynomial* side : {&eq.lhs, &eq.rhs})
            for (pbred::var_index v : side->support()) mentioned.insert(v);
    std::vector<pbred::var_index> order(mentioned.begin(), mentioned.end());

    auto start = std::chrono::steady_clock::now();
    std::vector<pbred::Assignment> zeros = pbred::enumerate_zeros(res.h_final, order, cap);
    if (opt.timings) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::cerr << "enumeration over " << order.size() << " variables took " << ms << " ms\n";
    }
    if (zeros.empty()) {
        std::cerr << "no solution: the reduced polynomial has no zero\n";
        return kExitInfeasible;
    }

    pbred::Assignment state = zeros.front();
    const pbred::FactorizationInstance& inst = *run.instance;
    for (pbred::var_index v = 0; v < inst.variables.size(); ++v)
        if (!state.covers(v) && !res.substitution.eliminates(v)) state.set(v, false);
    pbred::Assignment full = res.substitution.lift(state);
    auto [p, q] = pbred::decode_factors(inst, full);
    std::cout << "p = " << p << '\n' << "q = " << q << '\n';
    return 0;
}

int cmd_verify(const std::string& before_path, const std::string& after_path,
               const std::string& substitution_path, std::size_t cap) {
    pbred::Polynomial before = pbred::read_polynomial_file(before_path);
    pbred::Polynomial after = pbred::read_polynomial_file(after_path);
    pbred::Substitution chain;
    if (!substitution_path.empty()) chain = pbred::read_substitution_file(substitution_path);

    pbred::EquivalenceVerdict v = pbred::compare_ground_states(before, after, chain, cap);
    switch (v.status) {
        case pbred::EquivalenceStatus::equivalent:
            std::cout << "equivalent: ground states preserved across " << v.checked_states
                      << " states\n";
            return 0;
        case pbred::EquivalenceStatus::too_large:
            std::cerr << "state space too large to enumerate (cap " << cap << ")\n";
            return kExitError;
        case pbred::EquivalenceStatus::negative_energy:
            std::cout << "negative energy " << *v.value << " at " << format_witness(*v.witness)
                      << '\n';
            return kExitMismatch;
        case pbred::EquivalenceStatus::spurious_ground_state:
            std::cout << "spurious ground state at " << format_witness(*v.witness) << '\n';
            return kExitMismatch;
        case pbred::EquivalenceStatus::ground_state_lost:
            std::cout << "ground state lost at " << format_witness(*v.witness) << '\n';
            return kExitMismatch;
    }
    return kExitError;
}

int cmd_stats(const std::string& path) {
    pbred::Polynomial p = pbred::read_polynomial_file(path);
    pbred::DegreeProfile profile = p.degree_profile();
    std::cout << "vars=" << profile.variable_count;
    for (auto it = profile.terms.rbegin(); it != profile.terms.rend(); ++it)
        std::cout << " deg" << it->first << '=' << it->second;
    std::cout << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"degree reduction for 0/1 polynomial systems"};
    app.require_subcommand(1);

    auto* encode = app.add_subcommand("encode", "build a factorization instance");
    std::string product_text, encode_out;
    unsigned p_bits = 0, q_bits = 0;
    encode->add_option("product", product_text, "odd product to factor")->required();
    auto* pb = encode->add_option("--p-bits", p_bits, "first factor width");
    auto* qb = encode->add_option("--q-bits", q_bits, "second factor width");
    pb->needs(qb);
    qb->needs(pb);
    encode->add_option("-o,--output", encode_out, "write the instance here (default stdout)");

    auto* reduce = app.add_subcommand("reduce", "lower the degree of a system's Hamiltonian");
    ReduceOptions reduce_opt;
    add_reduce_options(reduce, reduce_opt, false);
    bool machine = false;
    std::string out_polynomial, out_substitution, out_equations;
    reduce->add_flag("--machine", machine, "print key=value lines instead of the table");
    reduce->add_option("--out-polynomial", out_polynomial, "write the reduced polynomial here");
    reduce->add_option("--out-substitution", out_substitution, "write the elimination chain here");
    reduce->add_option("--out-equations", out_equations, "write the simplified equations here");

    auto* solve = app.add_subcommand("solve", "reduce, enumerate zeros and read off the factors");
    ReduceOptions solve_opt;
    add_reduce_options(solve, solve_opt, true);
    std::size_t solve_cap = 25;
    solve->add_option("--cap", solve_cap, "enumeration cap in variables")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "compare ground states of two polynomials");
    std::string before_path, after_path, substitution_path;
    std::size_t verify_cap = 22;
    verify->add_option("--before", before_path, "original polynomial file")->required();
    verify->add_option("--after", after_path, "reduced polynomial file")->required();
    verify->add_option("--substitution", substitution_path, "elimination chain file");
    verify->add_option("--cap", verify_cap, "enumeration cap in variables")->capture_default_str();

    auto* stats = app.add_subcommand("stats", "term counts by degree of a polynomial file");
    std::string stats_path;
    stats->add_option("file", stats_path, "polynomial file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (encode->parsed()) return cmd_encode(product_text, p_bits, q_bits, encode_out);
        if (reduce->parsed()) {
            if (reduce_opt.instance_path.empty() && reduce_opt.equations_path.empty()) {
                std::cerr << "reduce needs --instance or --equations\n";
                return kExitUsage;
            }
            return cmd_reduce(reduce_opt, machine, out_polynomial, out_substitution,
                              out_equations);
        }
        if (solve->parsed()) return cmd_solve(solve_opt, solve_cap);
        if (verify->parsed())
            return cmd_verify(before_path, after_path, substitution_path, verify_cap);
        if (stats->parsed()) return cmd_stats(stats_path);
    } catch (const pbred::ParseError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const pbred::InvalidProductError& e) {
        std::cerr << e.what() << '\n';
        return kExitInfeasible;
    } catch (const pbred::InfeasibleWidthsError& e) {
        std::cerr << e.what() << '\n';
        return kExitInfeasible;
    } catch (const pbred::InfeasibleError& e) {
        std::cerr << e.what() << '\n';
        return kExitInfeasible;
    } catch (const pbred::NoPlausibleStatesError& e) {
        std::cerr << e.what() << '\n';
        return kExitInfeasible;
    } catch (const pbred::Error& e) {
        std::cerr << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitUsage;
}
