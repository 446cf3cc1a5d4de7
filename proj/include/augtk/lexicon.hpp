#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace augtk {

// token -> dense vector map; the synonym source for EDA. Rows are stored
// contiguously; L2 norms are precomputed at load. Immutable once built.
class EmbeddingTable {
public:
    EmbeddingTable() = default;
    explicit EmbeddingTable(std::size_t dim);

    // Plain-text vector format: header "<count> <dim>", then one line per
    // token: token followed by dim space-separated floats. A duplicate token
    // overwrites the earlier row (with a warning); a ragged row or a
    // header/body count mismatch is an error naming the line.
    static EmbeddingTable load(const std::filesystem::path& path);

    void add(const std::string& token, const std::vector<float>& vector);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return tokens_.size(); }
    bool contains(const std::string& token) const { return index_.count(token) != 0; }
    const std::vector<std::string>& tokens() const { return tokens_; }
    std::optional<std::size_t> row_of(const std::string& token) const;
    std::span<const float> row(std::size_t index) const;
    double norm(std::size_t index) const { return norms_[index]; }

private:
    std::size_t dim_ = 0;
    std::vector<float> data_;
    std::vector<std::string> tokens_;
    std::vector<double> norms_;
    std::unordered_map<std::string, std::size_t> index_;
};

// Cosine similarity dot(u,v) / (|u| |v|). Dimensions must match and neither
// vector may be all-zero.
double cosine(std::span<const float> u, std::span<const float> v);
double cosine(std::span<const double> u, std::span<const double> v);

// The k nearest entries to `token` by cosine similarity, excluding the token
// itself, filtered to similarity >= min_sim, sorted by descending similarity
// with lexicographic token tie-break. A token absent from the table (or with
// a zero-norm vector) yields an empty list. Exact linear scan.
std::vector<std::pair<std::string, double>> synonyms(const EmbeddingTable& table,
                                                     const std::string& token,
                                                     std::size_t k,
                                                     double min_sim);

// Per-language stopword list; may be empty (some target languages have no
// published list).
struct StopwordSet {
    std::string language;
    std::set<std::string> words;

    bool contains(const std::string& token) const { return words.count(token) != 0; }
};

// One token per line; blank lines and lines starting with '#' are skipped.
// A missing path yields the empty set with a logged warning.
StopwordSet load_stopwords(const std::optional<std::filesystem::path>& path,
                           const std::string& language);

}  // namespace augtk
