// extal: homology statistics from the variety of optimal LCS alignments.
//
// Exit codes: 0 success (including a NOT SATISFIED verdict), 1 reproduction
// check failure, 2 usage or input error, 3 DP cell budget exceeded,
// 4 degenerate model or letter law.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "extal/case_study.hpp"
#include "extal/errors.hpp"
#include "extal/extremal.hpp"
#include "extal/fasta.hpp"
#include "extal/genmodel.hpp"
#include "extal/model_file.hpp"
#include "extal/report_io.hpp"
#include "extal/rng.hpp"
#include "extal/stats.hpp"
#include "extal/svg.hpp"
#include "extal/theory.hpp"

namespace {

constexpr const char* version_string = "extal 0.1.0";

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw extal::ParseError("cannot write '" + path + "'");
    out << content;
}

extal::GeneratorSpec spec_for_mode(const extal::ModelFile& model, const std::string& mode) {
    if (mode == "related") return model.params;
    // independent mode draws i.i.d. pairs from the model's X-letter marginal
    const extal::LetterLawSummary law = extal::joint_letter_law(model.params);
    return extal::IndependentSpec{model.params.alphabet, law.marginal};
}

struct CompareArgs {
    std::string path_x, path_y;
    std::string alphabet = "ACGT";
    std::uint64_t max_cells = extal::default_cell_budget;
    bool json = false;
    bool version_stamp = false;
    std::string plot_path;
};

int run_compare(const CompareArgs& args) {
    const extal::Alphabet alphabet(args.alphabet);
    const extal::Sequence x = extal::read_sequence_file(args.path_x, alphabet);
    const extal::Sequence y = extal::read_sequence_file(args.path_y, alphabet);
    const extal::ExtremalPair pair = extal::extremal_pair(x, y, args.max_cells);
    const extal::HomologyReport report = extal::report_from_pair(pair, x, y);

    if (args.json) {
        std::cout << extal::report_json(report).dump(2) << "\n";
    } else {
        std::cout << extal::report_text(report);
        if (args.version_stamp) std::cout << "version           " << version_string << "\n";
    }
    if (!args.plot_path.empty()) {
        extal::PlotOptions options;
        options.title = x.id + " vs " + y.id;
        write_file(args.plot_path, extal::render_svg(pair, x.length(), y.length(), options));
    }
    return 0;
}

struct CaseStudyArgs {
    bool check = false;
    bool version_stamp = false;
    std::string csv_path;
};

int run_casestudy(const CaseStudyArgs& args) {
    const extal::CaseStudyTable table = extal::case_study_table();
    if (!args.csv_path.empty()) write_file(args.csv_path, extal::case_study_csv(table));
    if (args.check) {
        const extal::CheckResult result = extal::check_case_study(table);
        std::cout << extal::check_result_text(result);
        return result.exact_set_ok ? 0 : 1;
    }
    std::cout << extal::case_study_text(table);
    if (args.version_stamp) std::cout << "version: " << version_string << "\n";
    return 0;
}

struct SimulateArgs {
    std::string model = "related-default";
    std::string mode = "related";
    int n = 1000;
    int reps = 1;
    std::uint64_t seed = 0;
    std::string csv_path;
    std::string plot_first_path;
};

int run_simulate(const SimulateArgs& args) {
    const extal::ModelFile model = extal::resolve_model(args.model);
    const extal::GeneratorSpec spec = spec_for_mode(model, args.mode);
    const std::string label =
        args.mode == "related" ? model.name : model.name + ":independent";

    std::string csv = extal::simulate_csv_header();
    for (int r = 0; r < args.reps; ++r) {
        const std::uint64_t stream = extal::derive_stream(args.seed, static_cast<std::uint64_t>(r));
        const extal::RelatedPair pair = extal::generate_pair(spec, args.n, stream);
        const extal::ExtremalPair ext = extal::extremal_pair(pair.x, pair.y);
        const extal::HomologyReport rep = extal::report_from_pair(ext, pair.x, pair.y);
        csv += extal::simulate_csv_row(extal::ScalingRow{label, args.n, r, stream, rep.lcs,
                                                         rep.vertical, rep.horizontal,
                                                         rep.nonuniq_stretch, rep.uniq_points});
        if (r == 0 && !args.plot_first_path.empty()) {
            extal::PlotOptions options;
            options.title = label + " n=" + std::to_string(args.n);
            write_file(args.plot_first_path,
                       extal::render_svg(ext, pair.x.length(), pair.y.length(), options));
        }
    }
    if (args.csv_path.empty()) {
        std::cout << csv;
    } else {
        write_file(args.csv_path, csv);
    }
    return 0;
}

struct ScanArgs {
    std::vector<std::string> models;
    std::vector<int> n_list = {250, 500, 1000, 2000};
    int reps = 30;
    std::uint64_t seed = 0;
    std::string csv_path;
};

int run_scan(const ScanArgs& args) {
    std::vector<std::string> names = args.models;
    if (names.empty()) names = {"related-default", "independent-uniform"};
    std::vector<extal::LabeledModel> models;
    for (const auto& name : names) {
        const extal::ModelFile m = extal::resolve_model(name);
        models.push_back(extal::LabeledModel{m.name, m.params});
    }
    const extal::ScalingResult result =
        extal::scaling_experiment(models, args.n_list, args.reps, args.seed);
    if (args.csv_path.empty()) {
        std::cout << extal::scan_csv(result);
    } else {
        write_file(args.csv_path, extal::scan_csv(result));
    }
    std::cout << extal::scan_summary_text(result);
    return 0;
}

struct ConditionArgs {
    std::string model;
    double gamma_r = 0.0;
    bool have_gamma = false;
    bool estimate = false;
    int n = 1000;
    int reps = 20;
    std::uint64_t seed = 0;
};

int run_condition(const ConditionArgs& args) {
    const extal::ModelFile model = extal::resolve_model(args.model);
    const extal::LetterLawSummary law = extal::joint_letter_law(model.params);

    double gamma = args.gamma_r;
    std::string origin = "user-supplied";
    if (args.estimate) {
        const extal::GammaEstimate est =
            extal::estimate_gamma(extal::GeneratorSpec{model.params}, args.n, args.reps, args.seed);
        gamma = est.mean;
        origin = "plug-in estimate, n=" + std::to_string(args.n) +
                 ", reps=" + std::to_string(args.reps) +
                 ", stddev=" + extal::detail::fmt6(est.stddev);
    }
    const extal::ConditionReport report = extal::condition_lhs(law, gamma);
    std::cout << extal::condition_text(report, origin);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"homology statistics from the variety of optimal LCS alignments"};
    app.set_version_flag("--version", version_string);
    app.require_subcommand(1);

    CompareArgs compare_args;
    auto* cmd_compare = app.add_subcommand("compare", "compare two sequences");
    cmd_compare->add_option("x", compare_args.path_x, "first sequence (FASTA or raw text)")
        ->required();
    cmd_compare->add_option("y", compare_args.path_y, "second sequence (FASTA or raw text)")
        ->required();
    cmd_compare->add_option("--alphabet", compare_args.alphabet, "allowed symbols (default ACGT)");
    cmd_compare->add_option("--max-cells", compare_args.max_cells, "DP cell budget per table");
    cmd_compare->add_flag("--json", compare_args.json, "emit the report as JSON");
    cmd_compare->add_flag("--version-stamp", compare_args.version_stamp,
                          "append a version line to the text report");
    cmd_compare->add_option("--plot", compare_args.plot_path,
                            "write an SVG of the extremal alignments");

    CaseStudyArgs casestudy_args;
    auto* cmd_casestudy = app.add_subcommand("casestudy", "run the bundled four-gene case study");
    cmd_casestudy->add_flag("--check", casestudy_args.check,
                            "compare against the bundled reference table; exit 1 on unflagged "
                            "mismatches in the exact set");
    cmd_casestudy->add_option("--csv", casestudy_args.csv_path, "write the table as CSV");
    cmd_casestudy->add_flag("--version-stamp", casestudy_args.version_stamp,
                            "append a version line");

    SimulateArgs simulate_args;
    auto* cmd_simulate = app.add_subcommand("simulate", "generate sequence pairs and compare them");
    cmd_simulate->add_option("model", simulate_args.model,
                             "model file or built-in name (related-default, independent-uniform, "
                             "identity-keep090)");
    cmd_simulate->add_option("--n", simulate_args.n, "sequence length")->check(CLI::PositiveNumber);
    cmd_simulate->add_option("--reps", simulate_args.reps, "number of replicates")
        ->check(CLI::PositiveNumber);
    cmd_simulate->add_option("--seed", simulate_args.seed, "base seed");
    cmd_simulate->add_option("--mode", simulate_args.mode, "related or independent")
        ->check(CLI::IsMember({"related", "independent"}));
    cmd_simulate->add_option("--csv", simulate_args.csv_path, "write rows to a file");
    cmd_simulate->add_option("--plot-first", simulate_args.plot_first_path,
                             "write an SVG of the first replicate's extremal alignments");

    ScanArgs scan_args;
    auto* cmd_scan = app.add_subcommand("scan", "scaling sweep over sequence lengths");
    cmd_scan->add_option("models", scan_args.models,
                         "model files or built-in names (default: related-default and "
                         "independent-uniform)");
    cmd_scan->add_option("--n-list", scan_args.n_list, "ascending lengths")->delimiter(',');
    cmd_scan->add_option("--reps", scan_args.reps, "replicates per (model, n)")
        ->check(CLI::PositiveNumber);
    cmd_scan->add_option("--seed", scan_args.seed, "base seed");
    cmd_scan->add_option("--csv", scan_args.csv_path, "write rows to a file");

    ConditionArgs condition_args;
    auto* cmd_condition =
        app.add_subcommand("condition", "evaluate the relatedness condition for a model");
    cmd_condition->add_option("model", condition_args.model, "model file or built-in name")
        ->required();
    auto* gamma_opt =
        cmd_condition->add_option("--gamma-r", condition_args.gamma_r, "gamma_R in (0, 1]");
    auto* est_flag = cmd_condition->add_flag("--estimate", condition_args.estimate,
                                             "estimate gamma_R by Monte Carlo from the model");
    gamma_opt->excludes(est_flag);
    cmd_condition->add_option("--n", condition_args.n, "length for --estimate")
        ->check(CLI::PositiveNumber);
    cmd_condition->add_option("--reps", condition_args.reps, "replicates for --estimate")
        ->check(CLI::PositiveNumber);
    cmd_condition->add_option("--seed", condition_args.seed, "seed for --estimate");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    condition_args.have_gamma = gamma_opt->count() > 0;

    try {
        if (cmd_compare->parsed()) return run_compare(compare_args);
        if (cmd_casestudy->parsed()) return run_casestudy(casestudy_args);
        if (cmd_simulate->parsed()) return run_simulate(simulate_args);
        if (cmd_scan->parsed()) return run_scan(scan_args);
        if (cmd_condition->parsed()) {
            if (!condition_args.have_gamma && !condition_args.estimate) {
                std::cerr << "condition: provide --gamma-r VALUE or --estimate\n";
                return 2;
            }
            return run_condition(condition_args);
        }
    } catch (const extal::SizeLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const extal::DegenerateModelError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const extal::DegenerateLawError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const extal::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const extal::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
    return 0;
}
