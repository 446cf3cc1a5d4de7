#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "augtk/corpus.hpp"

namespace augtk {

// Sparse counts of character n-grams (n in 1..3) over the raw text,
// whitespace included. "Character" means code point, so Indic text never
// splits mid-sequence.
using FeatureVector = std::map<std::string, std::size_t>;

FeatureVector featurize(const std::string& text);

// The five-metric bundle matching the comparison tables. All fields lie in
// [0, 1]; for single-label classification f1_micro equals accuracy.
struct EvalReport {
    double accuracy = 0.0;
    double precision_macro = 0.0;
    double recall_macro = 0.0;
    double f1_macro = 0.0;
    double f1_micro = 0.0;

    nlohmann::ordered_json to_json() const;
};

// Multinomial naive Bayes over character n-gram counts with additive
// smoothing. Deterministic: ordered containers everywhere, ties in predict
// broken by lexicographically smallest label.
class NBModel {
public:
    static NBModel train(const Corpus& corpus, double smoothing = 1.0);

    std::string predict(const std::string& text) const;
    const std::vector<std::string>& labels() const { return labels_; }

private:
    double smoothing_ = 1.0;
    std::vector<std::string> labels_;  // sorted
    std::map<std::string, double> log_prior_;
    // per label: log p(feature | label) for features seen with that label;
    // anything else falls back to the per-label smoothed floor
    std::map<std::string, std::map<std::string, double>> log_likelihood_;
    std::map<std::string, double> log_floor_;
};

// Confusion-matrix metrics. Per-class precision/recall define 0/0 as 0;
// macro is the unweighted mean over `labels`; micro-F1 comes from pooled
// counts and equals accuracy in this single-label setting.
EvalReport compute_metrics(const std::vector<std::string>& y_true,
                           const std::vector<std::string>& y_pred,
                           const std::vector<std::string>& labels);

// Trains on train_corpus, predicts every test text, returns the metrics.
// Every test label must appear in the training labels.
EvalReport evaluate(const Corpus& train_corpus, const Corpus& test_corpus,
                    double smoothing = 1.0);

}  // namespace augtk
