#include "augtk/lexicon.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "augtk/errors.hpp"
#include "augtk/kernels.hpp"
#include "augtk/log.hpp"

namespace augtk {

EmbeddingTable::EmbeddingTable(std::size_t dim) : dim_(dim) {
    if (dim == 0) throw std::invalid_argument("EmbeddingTable: dim must be >= 1");
}

void EmbeddingTable::add(const std::string& token, const std::vector<float>& vector) {
    if (dim_ == 0) dim_ = vector.size();
    if (vector.size() != dim_)
        throw std::invalid_argument("EmbeddingTable::add: vector of length " +
                                    std::to_string(vector.size()) + ", table dim " +
                                    std::to_string(dim_));
    const auto it = index_.find(token);
    if (it != index_.end()) {
        log::warn("duplicate token in embedding table, last wins: ", token);
        std::copy(vector.begin(), vector.end(), data_.begin() + it->second * dim_);
        norms_[it->second] =
            std::sqrt(kernels::squared_norm_scalar(vector.data(), dim_));
        return;
    }
    index_.emplace(token, tokens_.size());
    tokens_.push_back(token);
    data_.insert(data_.end(), vector.begin(), vector.end());
    norms_.push_back(std::sqrt(kernels::squared_norm_scalar(vector.data(), dim_)));
}

std::optional<std::size_t> EmbeddingTable::row_of(const std::string& token) const {
    const auto it = index_.find(token);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::span<const float> EmbeddingTable::row(std::size_t index) const {
    return {data_.data() + index * dim_, dim_};
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> parts;
    std::istringstream in(line);
    std::string part;
    while (in >> part) parts.push_back(std::move(part));
    return parts;
}

float parse_float(const std::string& s, const std::string& where) {
    float value = 0.0f;
    const auto* begin = s.data();
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
        throw DataError(where + ": not a number: \"" + s + "\"");
    return value;
}

}  // namespace

EmbeddingTable EmbeddingTable::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open vector file: " + path.string());

    std::string line;
    if (!std::getline(in, line))
        throw DataError(path.string() + ":1: missing \"<count> <dim>\" header");
    const auto header = split_ws(line);
    std::size_t count = 0, dim = 0;
    try {
        if (header.size() != 2) throw std::invalid_argument("field count");
        count = std::stoul(header[0]);
        dim = std::stoul(header[1]);
    } catch (const std::exception&) {
        throw DataError(path.string() + ":1: header must be \"<count> <dim>\", got \"" +
                        line + "\"");
    }
    if (dim == 0) throw DataError(path.string() + ":1: dim must be >= 1");

    EmbeddingTable table(dim);
    std::size_t line_no = 1;
    std::vector<float> row(dim);
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const std::string where = path.string() + ":" + std::to_string(line_no);
        const auto parts = split_ws(line);
        if (parts.size() != dim + 1)
            throw DataError(where + ": expected token + " + std::to_string(dim) +
                            " floats, got " + std::to_string(parts.size()) + " fields");
        for (std::size_t i = 0; i < dim; ++i) row[i] = parse_float(parts[i + 1], where);
        table.add(parts[0], row);
    }
    if (table.size() != count)
        throw DataError(path.string() + ": header declares " + std::to_string(count) +
                        " entries but file has " + std::to_string(table.size()));
    return table;
}

namespace {

template <typename T>
double cosine_impl(std::span<const T> u, std::span<const T> v) {
    if (u.size() != v.size())
        throw std::invalid_argument("cosine: dimension mismatch: " +
                                    std::to_string(u.size()) + " vs " +
                                    std::to_string(v.size()));
    double dot = 0.0, nu = 0.0, nv = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double a = static_cast<double>(u[i]);
        const double b = static_cast<double>(v[i]);
        dot += a * b;
        nu += a * a;
        nv += b * b;
    }
    if (nu == 0.0 || nv == 0.0)
        throw std::invalid_argument("cosine: zero-norm vector");
    return dot / (std::sqrt(nu) * std::sqrt(nv));
}

}  // namespace

double cosine(std::span<const float> u, std::span<const float> v) {
    return cosine_impl(u, v);
}

double cosine(std::span<const double> u, std::span<const double> v) {
    return cosine_impl(u, v);
}

std::vector<std::pair<std::string, double>> synonyms(const EmbeddingTable& table,
                                                     const std::string& token,
                                                     std::size_t k,
                                                     double min_sim) {
    if (k == 0) throw std::invalid_argument("synonyms: k must be >= 1");
    const auto query = table.row_of(token);
    if (!query) return {};
    const double query_norm = table.norm(*query);
    if (query_norm == 0.0) {
        log::warn("synonyms: query token has a zero vector: ", token);
        return {};
    }

    const auto q = table.row(*query);
    std::vector<std::pair<std::string, double>> candidates;
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (i == *query) continue;
        const double norm = table.norm(i);
        if (norm == 0.0) continue;
        const auto r = table.row(i);
        const double sim =
            kernels::dot(q.data(), r.data(), table.dim()) / (query_norm * norm);
        if (sim >= min_sim) candidates.emplace_back(table.tokens()[i], sim);
    }
    std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (candidates.size() > k) candidates.resize(k);
    return candidates;
}

StopwordSet load_stopwords(const std::optional<std::filesystem::path>& path,
                           const std::string& language) {
    StopwordSet set;
    set.language = language;
    if (!path) {
        log::warn("no stopword list for language \"", language,
                  "\"; proceeding with the empty set");
        return set;
    }
    std::ifstream in(*path);
    if (!in) throw DataError("cannot open stopword file: " + path->string());
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                                 line.back() == '\t'))
            line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        set.words.insert(line);
    }
    return set;
}

}  // namespace augtk
