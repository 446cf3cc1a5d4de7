#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "augtk/config.hpp"
#include "augtk/corpus.hpp"
#include "augtk/errors.hpp"
#include "augtk/eval.hpp"
#include "augtk/log.hpp"
#include "augtk/pipeline.hpp"
#include "augtk/record.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitBackend = 3;

std::string valid_technique_names() {
    std::string out;
    for (const auto t : augtk::all_techniques()) {
        if (!out.empty()) out += ", ";
        out += augtk::technique_name(t);
    }
    return out;
}

augtk::Technique parse_technique(const std::string& name) {
    const auto technique = augtk::technique_from_name(name);
    if (!technique)
        throw augtk::ConfigError("unknown technique \"" + name +
                                 "\"; valid names: " + valid_technique_names());
    return *technique;
}

std::vector<augtk::Technique> parse_technique_list(const std::string& csv) {
    if (csv == "all") return augtk::all_techniques();
    std::vector<augtk::Technique> out;
    std::string current;
    std::istringstream in(csv);
    while (std::getline(in, current, ',')) {
        if (!current.empty()) out.push_back(parse_technique(current));
    }
    if (out.empty())
        throw augtk::ConfigError("--techniques needs \"all\" or a comma-separated "
                                 "list of: " + valid_technique_names());
    return out;
}

void write_skip_log(const std::vector<augtk::AugmentationRecord>& records,
                    const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw augtk::DataError("cannot write skip log: " + path.string());
    for (const auto& r : records) {
        if (!r.skipped) continue;
        nlohmann::ordered_json line;
        line["source_id"] = r.source_id;
        line["technique"] = augtk::technique_name(r.technique);
        line["reason"] = r.skip_reason;
        out << line.dump() << "\n";
    }
}

void print_metrics(const augtk::EvalReport& report) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(3);
    out << std::left << std::setw(12) << "accuracy" << std::setw(12) << "precision"
        << std::setw(12) << "recall" << std::setw(12) << "f1_macro" << std::setw(12)
        << "f1_micro" << "\n";
    for (const double v : {report.accuracy, report.precision_macro,
                           report.recall_macro, report.f1_macro, report.f1_micro})
        out << std::left << std::setw(12) << v;
    std::cout << out.str() << "\n";
}

int cmd_augment(const std::string& config_path, const std::string& technique_name,
                const std::string& in_path, const std::string& out_path,
                std::optional<std::uint64_t> seed_override) {
    augtk::Config config = augtk::Config::load(config_path);
    if (seed_override) config.seed = *seed_override;
    const augtk::Technique technique = parse_technique(technique_name);

    const augtk::Corpus corpus = augtk::load_jsonl(in_path, config.language);
    const augtk::Runtime runtime(config);
    const auto [augmented, records] =
        augtk::augment_corpus(corpus, config.to_experiment(technique), runtime.deps());

    augtk::write_jsonl(augmented, out_path);
    write_skip_log(records, out_path + ".skips.jsonl");

    const std::size_t skips = records.size() - augmented.size();
    std::cout << "augmented " << augmented.size() << "/" << records.size()
              << " samples (" << skips << " skipped) -> " << out_path << "\n";
    return kExitOk;
}

int cmd_evaluate(const std::string& config_path, const std::string& train_path,
                 const std::string& test_path,
                 const std::optional<std::string>& report_path) {
    const augtk::Config config = augtk::Config::load(config_path);
    const augtk::Corpus train = augtk::load_jsonl(train_path, config.language);
    const augtk::Corpus test = augtk::load_jsonl(test_path, config.language);
    const augtk::EvalReport report = augtk::evaluate(train, test, config.smoothing);
    print_metrics(report);

    if (report_path) {
        nlohmann::ordered_json out = report.to_json();
        out["metadata"] = nlohmann::ordered_json{
            {"classifier", "char-ngram-nb"},
            {"train_size", train.size()},
            {"test_size", test.size()},
            {"technique", nullptr},
            {"seed", config.seed},
        };
        std::ofstream file(*report_path, std::ios::binary | std::ios::trunc);
        if (!file) throw augtk::DataError("cannot write report: " + *report_path);
        file << out.dump(2) << "\n";
    }
    return kExitOk;
}

int cmd_compare(const std::string& config_path, const std::string& in_path,
                const std::string& techniques_csv,
                const std::optional<std::string>& json_path) {
    const augtk::Config config = augtk::Config::load(config_path);
    const auto techniques = parse_technique_list(techniques_csv);
    const augtk::Corpus corpus = augtk::load_jsonl(in_path, config.language);
    const augtk::Runtime runtime(config);

    augtk::ComparisonTable table =
        augtk::compare_all(corpus, config.to_experiment(techniques.front()),
                           techniques, runtime.deps());
    table.dataset_name = std::filesystem::path(in_path).filename().string();

    std::cout << table.render_text();
    if (json_path) {
        std::ofstream file(*json_path, std::ios::binary | std::ios::trunc);
        if (!file) throw augtk::DataError("cannot write JSON report: " + *json_path);
        file << table.to_json().dump(2) << "\n";
    }
    return table.failed_rows() == table.rows.size() ? kExitBackend : kExitOk;
}

template <typename Fn>
int run_guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const augtk::BackendError& e) {
        std::cerr << "backend error: " << e.what() << "\n";
        return kExitBackend;
    } catch (const augtk::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const augtk::DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multilingual text augmentation toolkit and experiment harness"};
    app.require_subcommand(1);

    std::string config_path, technique, in_path, out_path, train_path, test_path;
    std::string techniques_csv = "all";
    std::optional<std::uint64_t> seed_override;
    std::optional<std::string> report_path, json_path;
    bool verbose = false;
    app.add_flag("-v,--verbose", verbose, "log informational messages");

    auto* augment = app.add_subcommand(
        "augment", "augment every sample of a JSONL corpus with one technique");
    augment->add_option("--config", config_path, "config file")->required();
    augment->add_option("--technique", technique,
                        "one of: " + valid_technique_names())->required();
    augment->add_option("--in", in_path, "input corpus JSONL")->required();
    augment->add_option("--out", out_path,
                        "output JSONL (skip log goes to <out>.skips.jsonl)")
        ->required();
    augment->add_option("--seed", seed_override, "override the config seed");

    auto* evaluate = app.add_subcommand(
        "evaluate", "train on one corpus, report the five metrics on another");
    evaluate->add_option("--config", config_path, "config file")->required();
    evaluate->add_option("--train", train_path, "training corpus JSONL")->required();
    evaluate->add_option("--test", test_path, "test corpus JSONL")->required();
    evaluate->add_option("--report", report_path, "write the report JSON here");

    auto* compare = app.add_subcommand(
        "compare", "run the pre/post-augmentation comparison per technique");
    compare->add_option("--config", config_path, "config file")->required();
    compare->add_option("--in", in_path, "dataset corpus JSONL")->required();
    compare->add_option("--techniques", techniques_csv,
                        "\"all\" or CSV of technique names");
    compare->add_option("--json", json_path, "write the comparison JSON here");

    CLI11_PARSE(app, argc, argv);
    if (verbose) augtk::log::set_threshold(augtk::log::Level::Info);

    if (augment->parsed())
        return run_guarded([&] {
            return cmd_augment(config_path, technique, in_path, out_path, seed_override);
        });
    if (evaluate->parsed())
        return run_guarded([&] {
            return cmd_evaluate(config_path, train_path, test_path, report_path);
        });
    return run_guarded([&] {
        return cmd_compare(config_path, in_path, techniques_csv, json_path);
    });
}
