#include "augtk/eval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "augtk/errors.hpp"
#include "augtk/text.hpp"

namespace augtk {

FeatureVector featurize(const std::string& text) {
    // byte offsets of each code-point start, plus the end sentinel
    std::vector<std::size_t> starts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        starts.push_back(pos);
        decode_utf8(text, pos);
    }
    starts.push_back(text.size());

    FeatureVector features;
    const std::size_t cp_count = starts.size() - 1;
    for (std::size_t n = 1; n <= 3; ++n) {
        if (cp_count < n) break;
        for (std::size_t i = 0; i + n <= cp_count; ++i) {
            features[text.substr(starts[i], starts[i + n] - starts[i])] += 1;
        }
    }
    return features;
}

nlohmann::ordered_json EvalReport::to_json() const {
    return nlohmann::ordered_json{
        {"accuracy", accuracy},           {"precision_macro", precision_macro},
        {"recall_macro", recall_macro},   {"f1_macro", f1_macro},
        {"f1_micro", f1_micro},
    };
}

NBModel NBModel::train(const Corpus& corpus, double smoothing) {
    if (corpus.empty()) throw DataError("NBModel::train: empty corpus");
    if (!(smoothing > 0.0))
        throw std::invalid_argument("NBModel::train: smoothing must be > 0");

    NBModel model;
    model.smoothing_ = smoothing;
    model.labels_.assign(corpus.labels().begin(), corpus.labels().end());

    std::map<std::string, std::size_t> class_counts;
    std::map<std::string, std::map<std::string, std::size_t>> feature_counts;
    std::map<std::string, std::size_t> feature_totals;
    std::set<std::string> vocabulary;

    for (const auto& sample : corpus.samples()) {
        ++class_counts[sample.label];
        auto& counts = feature_counts[sample.label];
        for (const auto& [feature, count] : featurize(sample.text)) {
            counts[feature] += count;
            feature_totals[sample.label] += count;
            vocabulary.insert(feature);
        }
    }

    const double vocab_size = static_cast<double>(vocabulary.size());
    const double total_samples = static_cast<double>(corpus.size());
    for (const auto& label : model.labels_) {
        model.log_prior_[label] =
            std::log(static_cast<double>(class_counts[label]) / total_samples);
        const double denom =
            static_cast<double>(feature_totals[label]) + smoothing * vocab_size;
        model.log_floor_[label] = std::log(smoothing / denom);
        auto& likelihood = model.log_likelihood_[label];
        for (const auto& [feature, count] : feature_counts[label]) {
            likelihood[feature] =
                std::log((static_cast<double>(count) + smoothing) / denom);
        }
    }
    return model;
}

std::string NBModel::predict(const std::string& text) const {
    const FeatureVector features = featurize(text);
    std::string best_label;
    double best_score = 0.0;
    bool first = true;
    for (const auto& label : labels_) {
        double score = log_prior_.at(label);
        const auto& likelihood = log_likelihood_.at(label);
        const double floor = log_floor_.at(label);
        for (const auto& [feature, count] : features) {
            const auto it = likelihood.find(feature);
            const double ll = it != likelihood.end() ? it->second : floor;
            score += static_cast<double>(count) * ll;
        }
        // labels_ is sorted, so strict > keeps the lexicographically
        // smallest label on ties
        if (first || score > best_score) {
            best_score = score;
            best_label = label;
            first = false;
        }
    }
    return best_label;
}

EvalReport compute_metrics(const std::vector<std::string>& y_true,
                           const std::vector<std::string>& y_pred,
                           const std::vector<std::string>& labels) {
    if (y_true.size() != y_pred.size() || y_true.empty())
        throw std::invalid_argument("compute_metrics: y_true/y_pred must have equal "
                                    "non-zero length");
    std::map<std::string, std::size_t> label_index_check;
    for (const auto& l : labels) label_index_check[l] = 1;
    for (const auto& l : y_true)
        if (!label_index_check.count(l))
            throw std::invalid_argument("compute_metrics: unknown label in y_true: " + l);
    for (const auto& l : y_pred)
        if (!label_index_check.count(l))
            throw std::invalid_argument("compute_metrics: unknown label in y_pred: " + l);

    std::map<std::string, std::size_t> tp, fp, fn;
    std::size_t correct = 0;
    for (std::size_t i = 0; i < y_true.size(); ++i) {
        if (y_true[i] == y_pred[i]) {
            ++correct;
            ++tp[y_pred[i]];
        } else {
            ++fp[y_pred[i]];
            ++fn[y_true[i]];
        }
    }

    const auto safe_div = [](double num, double den) {
        return den == 0.0 ? 0.0 : num / den;  // 0/0 defined as 0
    };

    double precision_sum = 0.0, recall_sum = 0.0, f1_sum = 0.0;
    std::size_t pooled_tp = 0, pooled_fp = 0, pooled_fn = 0;
    for (const auto& label : labels) {
        const double tpc = static_cast<double>(tp[label]);
        const double fpc = static_cast<double>(fp[label]);
        const double fnc = static_cast<double>(fn[label]);
        const double precision = safe_div(tpc, tpc + fpc);
        const double recall = safe_div(tpc, tpc + fnc);
        const double f1 = safe_div(2.0 * precision * recall, precision + recall);
        precision_sum += precision;
        recall_sum += recall;
        f1_sum += f1;
        pooled_tp += tp[label];
        pooled_fp += fp[label];
        pooled_fn += fn[label];
    }

    const double n_labels = static_cast<double>(labels.size());
    EvalReport report;
    report.accuracy = static_cast<double>(correct) / static_cast<double>(y_true.size());
    report.precision_macro = precision_sum / n_labels;
    report.recall_macro = recall_sum / n_labels;
    report.f1_macro = f1_sum / n_labels;
    // 2TP / (2TP + FP + FN): numerator and denominator are exact integers in
    // double, so in the single-label setting (FP == FN == N - TP) this is the
    // same correctly-rounded quotient as accuracy, bit for bit.
    report.f1_micro = safe_div(2.0 * static_cast<double>(pooled_tp),
                               2.0 * static_cast<double>(pooled_tp) +
                                   static_cast<double>(pooled_fp) +
                                   static_cast<double>(pooled_fn));
    return report;
}

EvalReport evaluate(const Corpus& train_corpus, const Corpus& test_corpus,
                    double smoothing) {
    if (train_corpus.empty() || test_corpus.empty())
        throw DataError("evaluate: corpora must be non-empty");
    for (const auto& label : test_corpus.labels()) {
        if (!train_corpus.labels().count(label))
            throw DataError("evaluate: test label unseen in training: " + label);
    }
    const NBModel model = NBModel::train(train_corpus, smoothing);
    std::vector<std::string> y_true, y_pred;
    y_true.reserve(test_corpus.size());
    y_pred.reserve(test_corpus.size());
    for (const auto& sample : test_corpus.samples()) {
        y_true.push_back(sample.label);
        y_pred.push_back(model.predict(sample.text));
    }
    const std::vector<std::string> labels(train_corpus.labels().begin(),
                                          train_corpus.labels().end());
    return compute_metrics(y_true, y_pred, labels);
}

}  // namespace augtk
