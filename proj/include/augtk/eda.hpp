#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "augtk/corpus.hpp"
#include "augtk/lexicon.hpp"
#include "augtk/record.hpp"
#include "augtk/rng.hpp"

namespace augtk {

// Edit-strength parameters for the four EDA operations. For an L-token
// sentence, synonym replacement / insertion / swap each perform
// n = max(1, round(alpha * L)) edits; deletion keeps each token with
// probability 1 - p.
struct EdaParams {
    double alpha = 0.1;    // edit strength, in (0, 1]
    double p = 0.1;        // deletion probability, in [0, 1]
    std::size_t k = 10;    // synonym candidates per token
    double min_sim = 0.6;  // similarity floor for synonym candidates

    void validate() const;
    std::size_t edits_for_length(std::size_t token_count) const;
    std::string canonical() const;
};

// Replaces up to n distinct non-stopword positions whose tokens have at
// least one synonym, each by a synonym drawn uniformly from its candidate
// list. Token count is unchanged; with no eligible position the input is
// returned verbatim.
std::vector<std::string> synonym_replacement(const std::vector<std::string>& tokens,
                                             std::size_t n,
                                             const EmbeddingTable& lex,
                                             const StopwordSet& stop,
                                             const EdaParams& params, Rng& rng);

// n rounds of: pick a random non-stopword token that has synonyms, pick one
// synonym uniformly, insert it at a uniform position. Rounds with no
// eligible token are no-ops, so the result grows by at most n tokens.
std::vector<std::string> random_insertion(const std::vector<std::string>& tokens,
                                          std::size_t n, const EmbeddingTable& lex,
                                          const StopwordSet& stop,
                                          const EdaParams& params, Rng& rng);

// n swaps of two distinct uniformly chosen positions. The token multiset is
// preserved exactly; inputs shorter than two tokens are returned unchanged.
std::vector<std::string> random_swap(const std::vector<std::string>& tokens,
                                     std::size_t n, Rng& rng);

// Keeps each token independently with probability 1 - p. If every token is
// deleted, one uniformly chosen original token is returned instead, so the
// output is never empty. Single-token inputs are returned unchanged.
std::vector<std::string> random_deletion(const std::vector<std::string>& tokens,
                                         double p, Rng& rng);

// Tokenizes, applies the named EDA operation, detokenizes. The label is
// copied from the source sample; provenance records the operation and
// parameter digest. Text that tokenizes to nothing is an error.
AugmentationRecord eda_augment(const Sample& sample, Technique op,
                               const EdaParams& params, const EmbeddingTable& lex,
                               const StopwordSet& stop, Rng& rng);

}  // namespace augtk
