#include "cli.hpp"

#include "dcasm/diagrams.hpp"
#include "dcasm/error.hpp"
#include "dcasm/oracle.hpp"
#include "dcasm/random_theory.hpp"
#include "dcasm/solver.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

namespace dcasm::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot read '" + path + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

void print_answers(std::ostream& out, const std::vector<CandidateModel>& models, const Signature& sig) {
    for (std::size_t i = 0; i < models.size(); ++i) {
        out << "Answer: " << i + 1 << '\n' << model_line(models[i], sig) << '\n';
    }
}

void print_diagrams(std::ostream& out, const std::vector<Diagram>& diagrams, const Signature& sig) {
    for (std::size_t i = 0; i < diagrams.size(); ++i) {
        out << "Diagram: " << i + 1 << '\n' << print_diagram(diagrams[i], sig);
    }
}

std::vector<Diagram> to_diagrams(const std::vector<CandidateModel>& models, const GroundProgram& program) {
    std::vector<Diagram> out;
    for (const auto& m : models) {
        out.push_back(answer_set_to_diagram(m, program));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Everything one input needs: the compiled program and a way to ask the
// oracle for the same diagrams.
class Job {
public:
    Job(const RunConfig& config, std::string_view text) : config_(config) {
        if (config.program) {
            source_ = parse_program(text);
            source_.all_intensional();
            source_.validate();
        } else {
            theory_ = parse_theory(text);
        }
    }
    explicit Job(const RunConfig& config, TheorySpec theory) : config_(config), theory_(std::move(theory)) {}

    bool herbrand() const { return config_.program && config_.herbrand; }

    GroundProgram compiled() const {
        if (!config_.program) {
            return compile(*theory_, config_.una);
        }
        if (config_.herbrand) {
            return source_;
        }
        GroundProgram out = eq_rewrite(source_);
        for (const auto& pair : program_una()) {
            GroundRule rule = GroundRule::constraint({{Atom{*out.eq, {pair.first, pair.second}}, true}});
            rule.origin = RuleOrigin::unique_names;
            out.rules.push_back(std::move(rule));
        }
        return out;
    }

    std::vector<CandidateModel> solve(const GroundProgram& program, bool force) const {
        SolveOptions options;
        options.force = force;
        return enumerate_stable_models(program, options);
    }

    std::vector<Diagram> oracle() const {
        OracleOptions options;
        options.force = config_.force;
        if (!config_.program) {
            return enumerate_dca_models(*theory_, una_pairs(*theory_, config_.una), options);
        }
        for (const auto& rule : source_.rules) {
            const bool negative = std::any_of(rule.body.begin(), rule.body.end(),
                                              [](const Literal& l) { return !l.positive; });
            if (negative || rule.kind == RuleKind::choice || rule.kind == RuleKind::cardinality_choice) {
                throw ValidationError(
                    "the oracle handles positive programs only (facts, disjunctive rules, constraints)");
            }
        }
        std::set<ConstPair> apart = program_una();
        if (config_.herbrand) {
            const TheorySpec all(source_.signature);
            apart = una_pairs(all, {UnaMode::no_una, {}});
        }
        return minimal_dca_models(program_formula(source_), source_.signature, options, apart);
    }

    const Signature& signature() const { return config_.program ? source_.signature : theory_->signature(); }

private:
    // A program carries no unique-name axioms of its own.
    std::set<ConstPair> program_una() const {
        if (config_.una.mode == UnaMode::theory) {
            return {};
        }
        return una_pairs(TheorySpec(source_.signature), config_.una);
    }

    const RunConfig& config_;
    std::optional<TheorySpec> theory_;
    GroundProgram source_;
};

std::vector<Diagram> herbrand_diagrams(const std::vector<CandidateModel>& models, const Signature& sig) {
    std::vector<Diagram> out;
    for (const auto& m : models) {
        out.push_back(diagram_of(DcaInterpretation::herbrand(sig, m), sig));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Diagram> solver_diagrams(const Job& job, bool force) {
    const GroundProgram program = job.compiled();
    const auto models = job.solve(program, force);
    return job.herbrand() ? herbrand_diagrams(models, program.signature) : to_diagrams(models, program);
}

void report_difference(std::ostream& err, const std::vector<Diagram>& solver, const std::vector<Diagram>& oracle,
                       const Signature& sig) {
    err << "solver and oracle disagree: " << solver.size() << " vs " << oracle.size() << " diagrams\n";
    for (const auto& d : solver) {
        if (!std::binary_search(oracle.begin(), oracle.end(), d)) {
            err << "  solver only: " << diagram_line(d, sig) << '\n';
        }
    }
    for (const auto& d : oracle) {
        if (!std::binary_search(solver.begin(), solver.end(), d)) {
            err << "  oracle only: " << diagram_line(d, sig) << '\n';
        }
    }
}

int check_random(const RunConfig& config, std::ostream& out, std::ostream& err) {
    std::mt19937_64 rng(config.seed);
    RandomBounds bounds;
    bounds.max_nulls = 2;
    for (std::size_t i = 0; i < *config.random; ++i) {
        TheorySpec theory = random_theory(rng, bounds);
        RunConfig local = config;
        local.una = {};
        Job job(local, theory);
        // The bounds keep every instance small; the solver guardrail is
        // sized for hand-written inputs.
        const auto solver = solver_diagrams(job, true);
        const auto oracle = job.oracle();
        if (solver != oracle) {
            err << "instance " << i + 1 << ":\n" << print_theory(theory);
            report_difference(err, solver, oracle, theory.signature());
            return exit_mismatch;
        }
    }
    out << "agree on " << *config.random << " random theories (seed " << config.seed << ")\n";
    return exit_ok;
}

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (config.random) {
        return check_random(config, out, err);
    }
    const Job job(config, read_file(config.input));
    switch (config.command) {
        case Command::translate:
        case Command::emit_asp: {
            const EmitStyle fallback = config.command == Command::translate ? EmitStyle::modern : EmitStyle::legacy;
            out << emit_asp_text(job.compiled(), config.style.value_or(fallback));
            return exit_ok;
        }
        case Command::solve: {
            const GroundProgram program = job.compiled();
            SolveOptions options;
            options.force = config.force;
            options.max_models = config.models;
            const auto models = enumerate_stable_models(program, options);
            print_answers(out, models, program.signature);
            if (!job.herbrand()) {
                print_diagrams(out, to_diagrams(models, program), job.signature());
            }
            err << models.size() << (models.size() == 1 ? " model\n" : " models\n");
            return exit_ok;
        }
        case Command::oracle: {
            auto diagrams = job.oracle();
            if (config.models != 0 && diagrams.size() > config.models) {
                diagrams.resize(config.models);
            }
            print_diagrams(out, diagrams, job.signature());
            err << diagrams.size() << (diagrams.size() == 1 ? " diagram\n" : " diagrams\n");
            return exit_ok;
        }
        case Command::check: {
            const auto solver = solver_diagrams(job, config.force);
            const auto oracle = job.oracle();
            if (solver != oracle) {
                report_difference(err, solver, oracle, job.signature());
                return exit_mismatch;
            }
            out << "agree: " << solver.size() << (solver.size() == 1 ? " diagram\n" : " diagrams\n");
            return exit_ok;
        }
    }
    return exit_error;
}

} // namespace

RunConfig parse_args(std::vector<std::string> args) {
    for (auto& a : args) {
        if (a == "-una") {
            a = "--una";
        } else if (a == "-no-una") {
            a = "--no-una";
        }
    }
    CLI::App app{"Stable DCA-models of relational theories with null values"};
    RunConfig config;
    std::string command;
    std::string style;
    std::vector<std::string> una;
    std::vector<std::string> no_una;
    std::optional<std::uint64_t> seed;
    const std::map<std::string, Command> commands{{"translate", Command::translate},
                                                  {"solve", Command::solve},
                                                  {"oracle", Command::oracle},
                                                  {"check", Command::check},
                                                  {"emit-asp", Command::emit_asp}};
    app.add_option("command", command, "translate | solve | oracle | check | emit-asp")
        ->required()
        ->check(CLI::IsMember({"translate", "solve", "oracle", "check", "emit-asp"}));
    app.add_option("input", config.input, "theory file (or ground program with --program)");
    auto* una_opt = app.add_option("--una", una, "a != b for every pair of listed constants")->expected(1, -1);
    auto* no_una_opt =
        app.add_option("--no-una", no_una, "a != b for every pair with a member outside the list")->expected(1, -1);
    una_opt->excludes(no_una_opt);
    app.add_option("--style", style, "emission style")->check(CLI::IsMember({"modern", "legacy"}));
    app.add_option("--models", config.models, "stop after N models (0 = all)")->check(CLI::NonNegativeNumber);
    app.add_flag("--force", config.force, "ignore size guardrails");
    app.add_flag("--program", config.program, "input is a ground program");
    app.add_flag("--herbrand", config.herbrand, "program mode: solve without the equality rewrite");
    auto* random_opt = app.add_option("--random", config.random, "check N random theories");
    auto* seed_opt = app.add_option("--seed", seed, "seed for --random");
    random_opt->needs(seed_opt);
    app.add_option("-o,--output", config.output, "write results to a file");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        throw CLI::CallForHelp();
    } catch (const CLI::ParseError& e) {
        throw Error(e.what());
    }
    config.command = commands.at(command);
    if (!style.empty()) {
        config.style = style == "legacy" ? EmitStyle::legacy : EmitStyle::modern;
    }
    if (!una.empty()) {
        config.una = {UnaMode::una, una};
    } else if (!no_una.empty()) {
        config.una = {UnaMode::no_una, no_una};
    }
    if (seed) {
        config.seed = *seed;
    }
    if (config.random) {
        if (config.command != Command::check) {
            throw Error("--random is only valid with check");
        }
        if (!config.input.empty()) {
            throw Error("--random takes no input file");
        }
    } else if (config.input.empty()) {
        throw Error("an input file is required");
    }
    if (config.herbrand && !config.program) {
        throw Error("--herbrand requires --program");
    }
    if (config.style && config.command != Command::translate && config.command != Command::emit_asp) {
        throw Error("--style applies to translate and emit-asp only");
    }
    return config;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    std::ostringstream buffer;
    int status = exit_ok;
    try {
        status = execute(config, buffer, err);
    } catch (const GuardrailError& e) {
        err << "error: " << e.what() << '\n';
        return exit_guardrail;
    } catch (const Error& e) {
        err << "error: " << (config.input.empty() ? "" : config.input + ":") << e.what() << '\n';
        return exit_error;
    }
    if (config.output.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(config.output, std::ios::binary);
        file << buffer.str();
        if (!file) {
            err << "error: cannot write '" << config.output << "'\n";
            return exit_error;
        }
    }
    return status;
}

int main(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    RunConfig config;
    try {
        config = parse_args(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << "usage: dcasm-cli <translate|solve|oracle|check|emit-asp> <file> [options]\n"
               "  -una c1 c2 ...     a != b for every pair of listed constants\n"
               "  -no-una c1 c2 ...  a != b for every pair with a member outside the list\n"
               "  --style modern|legacy\n"
               "  --models N         0 = all\n"
               "  --force            ignore size guardrails\n"
               "  --program          input is a ground program\n"
               "  --herbrand         with --program: no equality rewrite\n"
               "  --random N --seed S  (check only)\n"
               "  -o FILE\n";
        return exit_ok;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_error;
    }
    return run(config, out, err);
}

} // namespace dcasm::cli
