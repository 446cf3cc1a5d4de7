#include "augtk/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

#include "augtk/errors.hpp"
#include "augtk/log.hpp"
#include "augtk/rng.hpp"

namespace augtk {

namespace {

bool blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isspace(c) != 0;
    });
}

void check_sample(const Sample& sample, const std::string& where) {
    if (sample.text.empty() || blank(sample.text))
        throw DataError(where + ": \"text\" is empty");
    if (sample.label.empty())
        throw DataError(where + ": \"label\" is empty");
}

}  // namespace

Corpus::Corpus(std::string language, std::vector<std::string> texts,
               std::vector<std::string> labels)
    : language_(std::move(language)) {
    if (texts.size() != labels.size())
        throw std::invalid_argument("Corpus: texts/labels size mismatch");
    samples_.reserve(texts.size());
    for (std::size_t i = 0; i < texts.size(); ++i) {
        Sample s{static_cast<std::uint64_t>(i), std::move(texts[i]), std::move(labels[i])};
        check_sample(s, "Corpus sample " + std::to_string(i));
        labels_.insert(s.label);
        samples_.push_back(std::move(s));
    }
}

Corpus::Corpus(std::string language, std::vector<Sample> samples)
    : language_(std::move(language)), samples_(std::move(samples)) {
    std::unordered_set<std::uint64_t> seen;
    for (const auto& s : samples_) {
        check_sample(s, "Corpus sample id " + std::to_string(s.id));
        if (!seen.insert(s.id).second)
            throw std::invalid_argument("Corpus: duplicate sample id " +
                                        std::to_string(s.id));
        labels_.insert(s.label);
    }
}

Corpus load_jsonl(const std::filesystem::path& path, const std::string& language) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open corpus file: " + path.string());

    std::vector<Sample> samples;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const std::string where = path.string() + ":" + std::to_string(line_no);
        nlohmann::json obj;
        try {
            obj = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw DataError(where + ": malformed JSON: " + e.what());
        }
        if (!obj.is_object()) throw DataError(where + ": line is not a JSON object");
        if (!obj.contains("text") || !obj["text"].is_string())
            throw DataError(where + ": missing string field \"text\"");
        if (!obj.contains("label") || !obj["label"].is_string())
            throw DataError(where + ": missing string field \"label\"");
        Sample s{static_cast<std::uint64_t>(samples.size()),
                 obj["text"].get<std::string>(), obj["label"].get<std::string>()};
        check_sample(s, where);
        samples.push_back(std::move(s));
    }
    return Corpus(language, std::move(samples));
}

void write_jsonl(const Corpus& corpus, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write corpus file: " + path.string());
    for (const auto& s : corpus.samples()) {
        nlohmann::ordered_json obj;
        obj["text"] = s.text;
        obj["label"] = s.label;
        out << obj.dump() << "\n";
    }
    if (!out) throw DataError("write failed: " + path.string());
}

Corpus sample_train(const Corpus& corpus, std::size_t n, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("sample_train: n must be >= 1");
    const std::size_t total = corpus.size();
    if (n >= total) {
        if (n > total) {
            log::warn("sample_train: requested ", n, " samples but corpus has only ",
                      total, "; returning all of them");
        }
        std::vector<Sample> all = corpus.samples();
        for (std::size_t i = 0; i < all.size(); ++i) all[i].id = i;
        return Corpus(corpus.language(), std::move(all));
    }

    Mt19937Rng rng(seed);
    std::vector<std::size_t> indices(total);
    std::iota(indices.begin(), indices.end(), 0);
    // Partial Fisher-Yates: the first n slots are the draw, in draw order.
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = i + rng.below(total - i);
        std::swap(indices[i], indices[j]);
    }
    std::vector<Sample> picked;
    picked.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Sample s = corpus.samples()[indices[i]];
        s.id = i;
        picked.push_back(std::move(s));
    }
    return Corpus(corpus.language(), std::move(picked));
}

Corpus binarize(const Corpus& corpus, const std::string& label_a,
                const std::string& label_b, std::uint64_t seed) {
    if (label_a == label_b)
        throw std::invalid_argument("binarize: the two labels must differ");
    if (corpus.labels().count(label_a) == 0)
        throw DataError("binarize: label not present in corpus: " + label_a);
    if (corpus.labels().count(label_b) == 0)
        throw DataError("binarize: label not present in corpus: " + label_b);

    std::vector<std::size_t> idx_a, idx_b;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& label = corpus.samples()[i].label;
        if (label == label_a) idx_a.push_back(i);
        else if (label == label_b) idx_b.push_back(i);
    }

    const std::size_t keep = std::min(idx_a.size(), idx_b.size());
    Mt19937Rng rng(seed);
    auto downsample = [&](std::vector<std::size_t>& idx) {
        for (std::size_t i = 0; i < keep; ++i) {
            const std::size_t j = i + rng.below(idx.size() - i);
            std::swap(idx[i], idx[j]);
        }
        idx.resize(keep);
        std::sort(idx.begin(), idx.end());  // restore original relative order
    };
    downsample(idx_a);
    downsample(idx_b);

    std::vector<std::size_t> merged;
    merged.reserve(2 * keep);
    merged.insert(merged.end(), idx_a.begin(), idx_a.end());
    merged.insert(merged.end(), idx_b.begin(), idx_b.end());
    std::sort(merged.begin(), merged.end());

    std::vector<Sample> kept;
    kept.reserve(merged.size());
    for (std::size_t i = 0; i < merged.size(); ++i) {
        Sample s = corpus.samples()[merged[i]];
        s.id = i;
        kept.push_back(std::move(s));
    }
    return Corpus(corpus.language(), std::move(kept));
}

Corpus concat(const Corpus& original, const Corpus& augmented) {
    if (original.language() != augmented.language())
        throw std::invalid_argument("concat: language mismatch: " +
                                    original.language() + " vs " +
                                    augmented.language());
    std::vector<Sample> merged;
    merged.reserve(original.size() + augmented.size());
    std::uint64_t next_id = 0;
    for (const auto& part : {original.samples(), augmented.samples()}) {
        for (const auto& s : part) {
            Sample copy = s;
            copy.id = next_id++;
            merged.push_back(std::move(copy));
        }
    }
    return Corpus(original.language(), std::move(merged));
}

}  // namespace augtk
