#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lagmul/complexes.hpp"
#include "lagmul/problem.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw lagmul::Error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void apply_env_limits() {
    if (const char* v = std::getenv("LAGMUL_MAX_TERMS")) {
        char* end = nullptr;
        unsigned long long n = std::strtoull(v, &end, 10);
        if (end && *end == '\0' && n > 0)
            lagmul::groebner_limits().max_terms = static_cast<std::size_t>(n);
    }
}

void emit(const lagmul::Json& report) {
    std::cout << report.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    using namespace lagmul;
    apply_env_limits();

    CLI::App app{"Exact critical-point counting on complete intersections"};
    app.require_subcommand(1);

    std::string order_name = "degrevlex";
    app.add_option("--order", order_name,
                   "Monomial order: degrevlex, grlex, or lex")
        ->capture_default_str();
    bool field_confirm = false;
    app.add_flag("--field-confirm", field_confirm,
                 "Rerun the dimension computations over Q and compare");
    bool timings = false;
    app.add_flag("--timings", timings,
                 "Include wall-clock timings (breaks byte determinism)");

    std::string check_file, milnor_file, en_file;
    auto* check = app.add_subcommand("check", "Hypothesis certificates");
    check->add_option("file", check_file, "Problem file")->required();

    auto* milnor = app.add_subcommand(
        "milnor", "Critical-point count, up to three independent ways");
    milnor->add_option("file", milnor_file, "Problem file")->required();
    std::string method = "all";
    milnor->add_option("--method", method,
                       "all, grobner, jacobian, or formula")
        ->capture_default_str();

    auto* en = app.add_subcommand(
        "en", "Complex construction and graded verification");
    en->add_option("file", en_file, "Problem file")->required();
    std::uint32_t truncate_deg = 0;
    auto* trunc_opt =
        en->add_option("--truncate", truncate_deg, "Strand degree cutoff");
    bool dump = false;
    en->add_flag("--dump", dump,
                 "Write the complex serialization to stderr");

    auto* random = app.add_subcommand(
        "random", "Seeded randomized three-way agreement harness");
    HarnessConfig cfg;
    random->add_option("--n", cfg.n_max, "Max variable count")
        ->capture_default_str();
    random->add_option("--r", cfg.r_max, "Max constraint count")
        ->capture_default_str();
    random->add_option("--dmax", cfg.d_max, "Max degree")
        ->capture_default_str();
    random->add_option("--char", cfg.characteristic, "Field characteristic")
        ->capture_default_str();
    random->add_option("--count", cfg.count,
                       "Hypothesis-passing systems to collect")
        ->capture_default_str();
    random->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        OrderKind order = order_kind_from_string(order_name);
        Json report;
        if (*check) {
            report = run_check(parse_problem(read_file(check_file)), order);
        } else if (*milnor) {
            report = run_milnor(parse_problem(read_file(milnor_file)), method,
                                order, field_confirm, timings);
        } else if (*en) {
            ProblemSpec spec = parse_problem(read_file(en_file));
            std::optional<std::uint32_t> trunc;
            if (trunc_opt->count() > 0) trunc = truncate_deg;
            if (dump) {
                ConstrainedSystem sys = build_system(spec, order);
                GradedFreeComplex total =
                    tensor_total(eagon_northcott(augmented_jacobian(sys),
                                                 sys.degrees()),
                                 koszul_complex(sys.constraints));
                dump_complex(total, std::cerr);
            }
            report = run_complex_verification(spec, trunc, order);
        } else {
            report = run_random_harness(cfg);
        }
        emit(report);
        // exit code 2 is reserved for a mathematical disagreement, which
        // would falsify the implementation rather than signal a bad input
        return report_has_disagreement(report) ? 2 : 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
