#include "augtk/eda.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "augtk/errors.hpp"
#include "augtk/text.hpp"

namespace augtk {

void EdaParams::validate() const {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::invalid_argument("EdaParams: alpha must be in (0, 1]");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("EdaParams: p must be in [0, 1]");
    if (k == 0) throw std::invalid_argument("EdaParams: k must be >= 1");
}

std::size_t EdaParams::edits_for_length(std::size_t token_count) const {
    // round half-up: alpha 0.1 over 25 tokens gives 3 edits
    const auto n = static_cast<std::size_t>(
        std::floor(alpha * static_cast<double>(token_count) + 0.5));
    return std::max<std::size_t>(1, n);
}

std::string EdaParams::canonical() const {
    std::ostringstream out;
    out << "alpha=" << alpha << ";p=" << p << ";k=" << k << ";min_sim=" << min_sim;
    return out.str();
}

namespace {

// Synonym lists are re-requested for repeated tokens, so memoize per call.
class SynonymCache {
public:
    SynonymCache(const EmbeddingTable& lex, const EdaParams& params)
        : lex_(lex), params_(params) {}

    const std::vector<std::pair<std::string, double>>& get(const std::string& token) {
        const auto it = cache_.find(token);
        if (it != cache_.end()) return it->second;
        return cache_.emplace(token, synonyms(lex_, token, params_.k, params_.min_sim))
            .first->second;
    }

private:
    const EmbeddingTable& lex_;
    const EdaParams& params_;
    std::unordered_map<std::string, std::vector<std::pair<std::string, double>>> cache_;
};

std::vector<std::size_t> eligible_positions(const std::vector<std::string>& tokens,
                                            const StopwordSet& stop,
                                            SynonymCache& cache) {
    std::vector<std::size_t> eligible;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (stop.contains(tokens[i])) continue;
        if (!cache.get(tokens[i]).empty()) eligible.push_back(i);
    }
    return eligible;
}

}  // namespace

std::vector<std::string> synonym_replacement(const std::vector<std::string>& tokens,
                                             std::size_t n,
                                             const EmbeddingTable& lex,
                                             const StopwordSet& stop,
                                             const EdaParams& params, Rng& rng) {
    if (n == 0) throw std::invalid_argument("synonym_replacement: n must be >= 1");
    SynonymCache cache(lex, params);
    std::vector<std::size_t> eligible = eligible_positions(tokens, stop, cache);
    if (eligible.empty()) return tokens;

    std::vector<std::string> out = tokens;
    const std::size_t picks = std::min(n, eligible.size());
    for (std::size_t i = 0; i < picks; ++i) {
        const std::size_t j = i + rng.below(eligible.size() - i);
        std::swap(eligible[i], eligible[j]);
        const std::size_t pos = eligible[i];
        const auto& candidates = cache.get(tokens[pos]);
        out[pos] = candidates[rng.below(candidates.size())].first;
    }
    return out;
}

std::vector<std::string> random_insertion(const std::vector<std::string>& tokens,
                                          std::size_t n, const EmbeddingTable& lex,
                                          const StopwordSet& stop,
                                          const EdaParams& params, Rng& rng) {
    if (n == 0) throw std::invalid_argument("random_insertion: n must be >= 1");
    SynonymCache cache(lex, params);
    std::vector<std::string> out = tokens;
    for (std::size_t round = 0; round < n; ++round) {
        // inserted synonyms may themselves be eligible in later rounds
        const auto eligible = eligible_positions(out, stop, cache);
        if (eligible.empty()) continue;
        const std::size_t pos = eligible[rng.below(eligible.size())];
        const auto& candidates = cache.get(out[pos]);
        const std::string synonym = candidates[rng.below(candidates.size())].first;
        const std::size_t at = rng.below(out.size() + 1);
        out.insert(out.begin() + static_cast<std::ptrdiff_t>(at), synonym);
    }
    return out;
}

std::vector<std::string> random_swap(const std::vector<std::string>& tokens,
                                     std::size_t n, Rng& rng) {
    if (tokens.size() < 2) return tokens;
    std::vector<std::string> out = tokens;
    for (std::size_t round = 0; round < n; ++round) {
        const std::size_t i = rng.below(out.size());
        std::size_t j = rng.below(out.size() - 1);
        if (j >= i) ++j;  // distinct positions; self-swap is a wasted edit
        std::swap(out[i], out[j]);
    }
    return out;
}

std::vector<std::string> random_deletion(const std::vector<std::string>& tokens,
                                         double p, Rng& rng) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("random_deletion: p must be in [0, 1]");
    if (tokens.size() < 2) return tokens;
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const auto& token : tokens) {
        if (rng.real01() >= p) out.push_back(token);
    }
    if (out.empty()) out.push_back(tokens[rng.below(tokens.size())]);
    return out;
}

AugmentationRecord eda_augment(const Sample& sample, Technique op,
                               const EdaParams& params, const EmbeddingTable& lex,
                               const StopwordSet& stop, Rng& rng) {
    params.validate();
    const auto tokens = tokenize(sample.text);
    if (tokens.empty())
        throw DataError("eda_augment: sample " + std::to_string(sample.id) +
                        " tokenizes to nothing");

    std::vector<std::string> edited;
    switch (op) {
        case Technique::SynonymReplacement:
            edited = synonym_replacement(tokens, params.edits_for_length(tokens.size()),
                                         lex, stop, params, rng);
            break;
        case Technique::RandomInsertion:
            edited = random_insertion(tokens, params.edits_for_length(tokens.size()),
                                      lex, stop, params, rng);
            break;
        case Technique::RandomSwap:
            edited = random_swap(tokens, params.edits_for_length(tokens.size()), rng);
            break;
        case Technique::RandomDeletion:
            edited = random_deletion(tokens, params.p, rng);
            break;
        default:
            throw std::invalid_argument("eda_augment: not an EDA technique: " +
                                        std::string(technique_name(op)));
    }

    AugmentationRecord record;
    record.source_id = sample.id;
    record.technique = op;
    record.text = detokenize(edited);
    record.label = sample.label;
    record.params_digest = digest(params.canonical());
    return record;
}

}  // namespace augtk
