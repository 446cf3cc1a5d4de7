#include "augtk/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iomanip>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "augtk/errors.hpp"
#include "augtk/log.hpp"
#include "augtk/rng.hpp"
#include "augtk/text.hpp"

namespace augtk {

namespace {

// stream tags for deriving stage seeds from the experiment seed
constexpr std::uint64_t kSplitStream = 0x10;
constexpr std::uint64_t kSampleStream = 0x20;

const std::map<std::string, std::string>& language_names() {
    static const std::map<std::string, std::string> names{
        {"sd", "Sindhi"},  {"mr", "Marathi"}, {"hi", "Hindi"},
        {"gu", "Gujarati"}, {"te", "Telugu"},  {"sa", "Sanskrit"},
        {"en", "English"},
    };
    return names;
}

}  // namespace

Script ScriptExpectation::resolve(const std::string& sample_text) const {
    if (!auto_detect) return script;
    return dominant_script(sample_text).first;
}

std::string ScriptExpectation::to_string() const {
    return auto_detect ? "auto" : script_name(script);
}

void ExperimentConfig::validate() const {
    if (train_size < 1)
        throw std::invalid_argument("ExperimentConfig: train_size must be >= 1");
    if (!(test_fraction > 0.0 && test_fraction < 1.0))
        throw std::invalid_argument("ExperimentConfig: test_fraction must be in (0, 1)");
    if (workers < 1)
        throw std::invalid_argument("ExperimentConfig: workers must be >= 1");
    eda.validate();
}

std::string ExperimentConfig::resolved_language_name() const {
    if (!language_name.empty()) return language_name;
    const auto it = language_names().find(language);
    return it != language_names().end() ? it->second : language;
}

namespace {

std::string technique_params_canonical(const ExperimentConfig& cfg,
                                       const PipelineDeps& deps) {
    std::ostringstream out;
    out << "technique=" << technique_name(cfg.technique) << ";seed=" << cfg.seed;
    if (is_eda(cfg.technique)) {
        out << ";" << cfg.eda.canonical();
    } else if (cfg.technique == Technique::BackTranslate) {
        out << ";pivot=" << cfg.pivot << ";script=" << cfg.expected_script.to_string();
    } else {
        out << ";max_tokens=" << deps.llm.max_tokens
            << ";temperature=" << deps.llm.temperature
            << ";min_script_ratio=" << deps.llm.min_script_ratio << ";len=["
            << deps.llm.len_lo << "," << deps.llm.len_hi << "]"
            << ";script=" << cfg.expected_script.to_string();
    }
    return out.str();
}

AugmentationRecord augment_one(const Sample& sample, const ExperimentConfig& cfg,
                               const PipelineDeps& deps,
                               const LlmAugmenter* augmenter,
                               const std::string& params_digest) {
    AugmentationRecord record;
    record.source_id = sample.id;
    record.technique = cfg.technique;
    record.label = sample.label;
    record.params_digest = params_digest;

    static const EmbeddingTable empty_table;
    static const StopwordSet empty_stopwords;
    const EmbeddingTable& lex = deps.lexicon ? *deps.lexicon : empty_table;
    const StopwordSet& stop = deps.stopwords ? *deps.stopwords : empty_stopwords;

    try {
        if (is_eda(cfg.technique)) {
            Mt19937Rng rng(Rng::mix(cfg.seed, sample.id));
            AugmentationRecord eda_record =
                eda_augment(sample, cfg.technique, cfg.eda, lex, stop, rng);
            record.text = std::move(eda_record.text);
            record.params_digest = params_digest;
            return record;
        }

        const Script expected = cfg.expected_script.resolve(sample.text);
        switch (cfg.technique) {
            case Technique::BackTranslate: {
                if (!deps.translator)
                    throw ConfigError("backtranslate requires a translation backend");
                const std::string out =
                    back_translate(sample.text, cfg.language, cfg.pivot,
                                   *deps.translator, deps.llm.retry, deps.sleep);
                const std::string trimmed = trim(out);
                if (trimmed.empty())
                    throw ValidationError("back-translation returned empty text", out);
                if (!validate_language(trimmed, expected, deps.llm.min_script_ratio)) {
                    const auto [actual, ratio] = dominant_script(trimmed);
                    std::ostringstream msg;
                    msg << "language compliance failed: expected "
                        << script_name(expected) << ", got " << script_name(actual)
                        << " at ratio " << ratio;
                    throw ValidationError(msg.str(), trimmed);
                }
                record.text = trimmed;
                return record;
            }
            case Technique::Paraphrase:
                record.text = augmenter->paraphrase(
                    sample, cfg.resolved_language_name(), expected);
                return record;
            case Technique::Expand:
                record.text =
                    augmenter->expand(sample, cfg.resolved_language_name(), expected);
                return record;
            case Technique::Generate:
                record.text = augmenter->generate(
                    sample, cfg.resolved_language_name(), expected);
                return record;
            default:
                throw std::logic_error("unreachable technique");
        }
    } catch (const ValidationError& e) {
        record.skipped = true;
        record.text.clear();
        record.skip_reason = e.what();
        log::warn("skipping sample ", sample.id, " (",
                  technique_name(cfg.technique), "): ", e.what(),
                  " [rejected: ", e.rejected_text().substr(0, 80), "]");
        return record;
    } catch (const BackendError& e) {
        record.skipped = true;
        record.text.clear();
        record.skip_reason = std::string(backend_error_kind_name(e.kind())) + ": " +
                             e.what();
        log::warn("skipping sample ", sample.id, " (",
                  technique_name(cfg.technique), "): ", e.what());
        return record;
    }
}

}  // namespace

std::pair<Corpus, std::vector<AugmentationRecord>> augment_corpus(
    const Corpus& corpus, const ExperimentConfig& config, const PipelineDeps& deps) {
    config.validate();
    if (corpus.empty()) throw DataError("augment_corpus: empty corpus");
    if (!is_eda(config.technique) && config.technique != Technique::BackTranslate &&
        !deps.completer)
        throw ConfigError(std::string(technique_name(config.technique)) +
                          " requires a completion backend");

    std::optional<LlmAugmenter> augmenter;
    if (deps.completer)
        augmenter.emplace(*deps.completer, deps.templates, deps.llm, deps.sleep);

    const std::string params_digest =
        digest(technique_params_canonical(config, deps));

    const auto& samples = corpus.samples();
    std::vector<AugmentationRecord> records(samples.size());
    const auto worker_count = std::min<std::size_t>(
        static_cast<std::size_t>(config.workers), samples.size());

    if (worker_count <= 1) {
        for (std::size_t i = 0; i < samples.size(); ++i)
            records[i] = augment_one(samples[i], config, deps,
                                     augmenter ? &*augmenter : nullptr, params_digest);
    } else {
        // per-sample rng streams make results schedule-independent; records
        // land in source order by index
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        workers.reserve(worker_count);
        for (std::size_t w = 0; w < worker_count; ++w) {
            workers.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= samples.size()) return;
                    records[i] =
                        augment_one(samples[i], config, deps,
                                    augmenter ? &*augmenter : nullptr, params_digest);
                }
            });
        }
        for (auto& t : workers) t.join();
    }

    std::vector<Sample> augmented;
    augmented.reserve(records.size());
    for (const auto& r : records) {
        if (r.skipped) continue;
        augmented.push_back(Sample{static_cast<std::uint64_t>(augmented.size()),
                                   r.text, r.label});
    }
    return {Corpus(corpus.language(), std::move(augmented)), std::move(records)};
}

std::pair<Corpus, Corpus> stratified_split(const Corpus& corpus, double test_fraction,
                                           std::uint64_t seed) {
    if (!(test_fraction > 0.0 && test_fraction < 1.0))
        throw std::invalid_argument("stratified_split: test_fraction must be in (0, 1)");

    std::map<std::string, std::vector<std::size_t>> by_label;
    for (std::size_t i = 0; i < corpus.size(); ++i)
        by_label[corpus.samples()[i].label].push_back(i);

    Mt19937Rng rng(Rng::mix(seed, kSplitStream));
    std::vector<bool> in_test(corpus.size(), false);
    for (auto& [label, indices] : by_label) {
        if (indices.size() < 2)
            throw DataError("stratified_split: class \"" + label +
                            "\" has fewer than 2 samples");
        const auto want = static_cast<std::size_t>(std::llround(
            test_fraction * static_cast<double>(indices.size())));
        const std::size_t take = std::clamp<std::size_t>(want, 1, indices.size() - 1);
        for (std::size_t i = 0; i < take; ++i) {
            const std::size_t j = i + rng.below(indices.size() - i);
            std::swap(indices[i], indices[j]);
            in_test[indices[i]] = true;
        }
    }

    std::vector<Sample> pool, test;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        Sample s = corpus.samples()[i];
        auto& side = in_test[i] ? test : pool;
        s.id = side.size();
        side.push_back(std::move(s));
    }
    return {Corpus(corpus.language(), std::move(pool)),
            Corpus(corpus.language(), std::move(test))};
}

namespace {

EvalReport report_delta(const EvalReport& post, const EvalReport& pre) {
    EvalReport d;
    d.accuracy = post.accuracy - pre.accuracy;
    d.precision_macro = post.precision_macro - pre.precision_macro;
    d.recall_macro = post.recall_macro - pre.recall_macro;
    d.f1_macro = post.f1_macro - pre.f1_macro;
    d.f1_micro = post.f1_micro - pre.f1_micro;
    return d;
}

std::vector<std::uint64_t> original_ids(const Corpus& dataset, const Corpus& test) {
    // test texts come verbatim from the dataset; recover their original ids
    // by (text, label) lookup
    std::map<std::pair<std::string, std::string>, std::vector<std::uint64_t>> lookup;
    for (const auto& s : dataset.samples())
        lookup[{s.text, s.label}].push_back(s.id);
    std::map<std::pair<std::string, std::string>, std::size_t> cursor;
    std::vector<std::uint64_t> ids;
    ids.reserve(test.size());
    for (const auto& s : test.samples()) {
        const auto key = std::make_pair(s.text, s.label);
        ids.push_back(lookup.at(key)[cursor[key]++ % lookup.at(key).size()]);
    }
    return ids;
}

}  // namespace

ComparisonReport run_experiment(const Corpus& dataset, const ExperimentConfig& config,
                                const PipelineDeps& deps) {
    config.validate();
    const auto [pool, test] = stratified_split(dataset, config.test_fraction, config.seed);
    const Corpus train =
        sample_train(pool, config.train_size, Rng::mix(config.seed, kSampleStream));

    ComparisonReport report;
    report.pre = evaluate(train, test, config.smoothing);
    const auto [augmented, records] = augment_corpus(train, config, deps);
    const Corpus post_train = concat(train, augmented);
    report.post = evaluate(post_train, test, config.smoothing);
    report.deltas = report_delta(report.post, report.pre);
    report.skip_count = static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(),
                      [](const AugmentationRecord& r) { return r.skipped; }));
    if (!augmented.empty())
        report.length_ratio = length_ratio_report(train, augmented);
    report.train_size = train.size();
    report.post_train_size = post_train.size();
    report.test_size = test.size();
    report.test_source_ids = original_ids(dataset, test);
    return report;
}

ComparisonTable compare_all(const Corpus& dataset, const ExperimentConfig& base_config,
                            const std::vector<Technique>& techniques,
                            const PipelineDeps& deps) {
    base_config.validate();
    const auto [pool, test] =
        stratified_split(dataset, base_config.test_fraction, base_config.seed);
    const Corpus train = sample_train(pool, base_config.train_size,
                                      Rng::mix(base_config.seed, kSampleStream));

    ComparisonTable table;
    table.language = dataset.language();
    table.seed = base_config.seed;
    table.baseline = evaluate(train, test, base_config.smoothing);
    table.train_size = train.size();
    table.test_size = test.size();

    for (const Technique technique : techniques) {
        ExperimentConfig cfg = base_config;
        cfg.technique = technique;
        TechniqueRow row;
        row.technique = technique;
        row.params_digest = digest(technique_params_canonical(cfg, deps));
        try {
            const auto [augmented, records] = augment_corpus(train, cfg, deps);
            const Corpus post_train = concat(train, augmented);
            row.report = evaluate(post_train, test, cfg.smoothing);
            row.deltas = report_delta(row.report, table.baseline);
            row.skips = static_cast<std::size_t>(
                std::count_if(records.begin(), records.end(),
                              [](const AugmentationRecord& r) { return r.skipped; }));
            if (!augmented.empty())
                row.length_ratio = length_ratio_report(train, augmented);
        } catch (const std::exception& e) {
            row.failed = true;
            row.error = e.what();
            log::error("technique ", technique_name(technique), " failed: ", e.what());
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::size_t ComparisonTable::failed_rows() const {
    return static_cast<std::size_t>(std::count_if(
        rows.begin(), rows.end(), [](const TechniqueRow& r) { return r.failed; }));
}

nlohmann::ordered_json ComparisonTable::to_json() const {
    nlohmann::ordered_json out;
    out["dataset"] = dataset_name;
    out["language"] = language;
    out["seed"] = seed;
    out["train_size"] = train_size;
    out["test_size"] = test_size;
    out["baseline"] = baseline.to_json();
    out["techniques"] = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json entry;
        entry["name"] = technique_name(row.technique);
        entry["params_digest"] = row.params_digest;
        if (row.failed) {
            entry["error"] = row.error;
        } else {
            entry["report"] = row.report.to_json();
            entry["deltas"] = row.deltas.to_json();
            entry["skips"] = row.skips;
            if (row.length_ratio) {
                entry["length_ratio"] = nlohmann::ordered_json{
                    {"mean_original", row.length_ratio->mean_original},
                    {"mean_augmented", row.length_ratio->mean_augmented},
                    {"ratio", row.length_ratio->ratio},
                };
            } else {
                entry["length_ratio"] = nullptr;
            }
        }
        out["techniques"].push_back(std::move(entry));
    }
    return out;
}

std::string ComparisonTable::render_text() const {
    std::ostringstream out;
    out << std::fixed << std::setprecision(3);
    const auto row_line = [&out](const std::string& name, const EvalReport& r,
                                 const std::string& delta_acc,
                                 const std::string& skips) {
        out << std::left << std::setw(16) << name << std::right;
        for (const double v : {r.accuracy, r.precision_macro, r.recall_macro,
                               r.f1_macro, r.f1_micro})
            out << std::setw(10) << v;
        out << std::setw(10) << delta_acc << std::setw(8) << skips << "\n";
    };

    out << std::left << std::setw(16) << "technique" << std::right << std::setw(10)
        << "accuracy" << std::setw(10) << "precision" << std::setw(10) << "recall"
        << std::setw(10) << "f1_macro" << std::setw(10) << "f1_micro" << std::setw(10)
        << "d_acc" << std::setw(8) << "skips" << "\n";
    row_line("baseline", baseline, "-", "-");
    for (const auto& row : rows) {
        if (row.failed) {
            out << std::left << std::setw(16) << technique_name(row.technique)
                << "ERROR: " << row.error << "\n";
            continue;
        }
        std::ostringstream delta;
        delta << std::showpos << std::fixed << std::setprecision(3)
              << row.deltas.accuracy;
        row_line(technique_name(row.technique), row.report, delta.str(),
                 std::to_string(row.skips));
    }
    return out.str();
}

}  // namespace augtk
