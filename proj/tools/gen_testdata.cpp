// Generates the bundled synthetic two-script corpus plus everything needed
// to run the full comparison offline: embedding vectors whose clusters give
// the EDA operations real synonyms, a stopword list, recorded backend
// fixtures for all four service techniques, and a ready-to-use config.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "augtk/config.hpp"
#include "augtk/corpus.hpp"
#include "augtk/doubles.hpp"
#include "augtk/lexicon.hpp"
#include "augtk/pipeline.hpp"
#include "augtk/rng.hpp"

namespace {

using augtk::Mt19937Rng;
using augtk::Rng;

constexpr std::uint64_t kDataSeed = 7;
constexpr std::size_t kDim = 16;
constexpr std::size_t kWordsPerCluster = 14;
constexpr std::size_t kNeutralPerScript = 10;

const std::vector<std::string> kDevaConsonants = {
    "क", "ख", "ग", "घ", "च", "छ", "ज", "झ", "ट", "ठ", "ड", "त", "थ",
    "द", "ध", "न", "प", "फ", "ब", "भ", "म", "य", "र", "ल", "व", "स", "ह"};
const std::vector<std::string> kDevaMatras = {"", "ा", "ि", "ी", "ु", "ू", "े", "ो"};
const std::vector<std::string> kTeluguConsonants = {
    "క", "ఖ", "గ", "ఘ", "చ", "ఛ", "జ", "ఝ", "ట", "ఠ", "డ", "త", "థ",
    "ద", "ధ", "న", "ప", "ఫ", "బ", "భ", "మ", "య", "ర", "ల", "వ", "స", "హ"};
const std::vector<std::string> kTeluguMatras = {"", "ా", "ి", "ీ", "ు", "ూ", "ె", "ో"};

struct Cluster {
    std::string name;
    std::vector<std::string> words;
    std::size_t base_axis;  // dominant embedding dimension
};

std::string make_word(bool telugu, Rng& rng, std::set<std::string>& taken) {
    const auto& consonants = telugu ? kTeluguConsonants : kDevaConsonants;
    const auto& matras = telugu ? kTeluguMatras : kDevaMatras;
    for (;;) {
        std::string word;
        const std::size_t syllables = 2 + rng.below(3);
        for (std::size_t s = 0; s < syllables; ++s) {
            word += consonants[rng.below(consonants.size())];
            word += matras[rng.below(matras.size())];
        }
        if (taken.insert(word).second) return word;
    }
}

std::vector<float> make_vector(std::size_t base_axis, Rng& rng) {
    std::vector<float> v(kDim, 0.0f);
    v[base_axis] = 1.0f;
    for (auto& x : v)
        x += static_cast<float>((rng.real01() - 0.5) * 0.1);
    return v;
}

void write_vectors(const std::filesystem::path& path,
                   const std::vector<std::pair<std::string, std::vector<float>>>& rows) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << rows.size() << " " << kDim << "\n";
    for (const auto& [token, vec] : rows) {
        out << token;
        for (const float x : vec) {
            char buf[16];
            std::snprintf(buf, sizeof(buf), "%.6f", static_cast<double>(x));
            out << " " << buf;
        }
        out << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generate the bundled synthetic test dataset and fixtures"};
    std::string out_dir = "data/synthetic";
    std::string templates_dir = "data/templates";
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--templates", templates_dir, "prompt template directory");
    CLI11_PARSE(app, argc, argv);

    std::filesystem::create_directories(out_dir);
    const std::filesystem::path out(out_dir);

    // --- vocabulary: one embedding cluster per (script, polarity), plus a
    // neutral (stopword) cluster per script ---
    Mt19937Rng rng(kDataSeed);
    std::set<std::string> taken;
    std::vector<Cluster> clusters = {
        {"deva_pos", {}, 0}, {"deva_neg", {}, 1},
        {"telugu_pos", {}, 2}, {"telugu_neg", {}, 3},
        {"deva_neutral", {}, 4}, {"telugu_neutral", {}, 5},
    };
    for (auto& cluster : clusters) {
        const bool telugu = cluster.name.rfind("telugu", 0) == 0;
        const bool neutral = cluster.name.find("neutral") != std::string::npos;
        const std::size_t count = neutral ? kNeutralPerScript : kWordsPerCluster;
        for (std::size_t i = 0; i < count; ++i)
            cluster.words.push_back(make_word(telugu, rng, taken));
    }

    std::vector<std::pair<std::string, std::vector<float>>> vector_rows;
    for (const auto& cluster : clusters) {
        for (const auto& word : cluster.words)
            vector_rows.emplace_back(word, make_vector(cluster.base_axis, rng));
    }
    write_vectors(out / "vectors.txt", vector_rows);

    {
        std::ofstream stop(out / "stopwords.txt", std::ios::binary | std::ios::trunc);
        stop << "# neutral filler words of the synthetic corpus\n";
        for (const auto& word : clusters[4].words) stop << word << "\n";
        for (const auto& word : clusters[5].words) stop << word << "\n";
    }

    // --- 200 samples: 100 Devanagari then 100 Telugu, labels alternating ---
    std::vector<std::string> texts, labels;
    for (std::size_t i = 0; i < 200; ++i) {
        const bool telugu = i >= 100;
        const bool positive = i % 2 == 0;
        const auto& class_words =
            clusters[(telugu ? 2 : 0) + (positive ? 0 : 1)].words;
        const auto& neutral_words = clusters[telugu ? 5 : 4].words;
        Mt19937Rng sample_rng(Rng::mix(kDataSeed, 1000 + i));
        const std::size_t len = 9 + sample_rng.below(6);
        std::vector<std::string> tokens;
        tokens.reserve(len);
        for (std::size_t t = 0; t < len; ++t) {
            const bool from_class = sample_rng.real01() < 0.65;
            const auto& pool = from_class ? class_words : neutral_words;
            tokens.push_back(pool[sample_rng.below(pool.size())]);
        }
        texts.push_back(augtk::detokenize(tokens));
        labels.push_back(positive ? "pos" : "neg");
    }
    const augtk::Corpus corpus("xx", std::move(texts), std::move(labels));
    augtk::write_jsonl(corpus, out / "corpus.jsonl");

    // --- config the fixtures are recorded against (and shipped with) ---
    nlohmann::ordered_json config_json = {
        {"dataset", {{"language", "xx"},
                     {"language_name", "Synthetic"},
                     {"expected_script", "auto"}}},
        {"sampling", {{"train_size", 100}, {"seed", 42}, {"test_fraction", 0.3}}},
        {"eda", {{"alpha", 0.1}, {"p", 0.1}, {"k", 10}, {"min_sim", 0.6}}},
        {"backends",
         {{"translation", {{"kind", "fixture"},
                           {"fixtures", "fixtures_translation.jsonl"},
                           {"pivot", "en"}}},
          {"completion", {{"kind", "fixture"},
                          {"fixtures", "fixtures_completion.jsonl"},
                          {"max_tokens", 256},
                          {"temperature", 0.7}}},
          {"retry", {{"max_attempts", 3}, {"base_delay_ms", 1000}, {"backoff", 2.0}}},
          {"workers", 4}}},
        {"stopwords", "stopwords.txt"},
        {"vectors", "vectors.txt"},
        {"templates_dir",
         std::filesystem::relative(templates_dir, out_dir).string()},
    };
    {
        std::ofstream cfg_out(out / "config.json", std::ios::binary | std::ios::trunc);
        cfg_out << config_json.dump(2) << "\n";
    }

    // --- record fixtures by running the sim backends over the full corpus,
    // so any sampled subset replays offline ---
    const augtk::Config config = augtk::Config::load(out / "config.json");
    augtk::SimTranslation sim_translator;
    augtk::SimCompletion sim_completer;
    augtk::RecordingTranslation recording_translator(sim_translator);
    augtk::RecordingCompletion recording_completer(sim_completer);

    const augtk::EmbeddingTable lexicon = augtk::EmbeddingTable::load(out / "vectors.txt");
    const augtk::StopwordSet stopwords =
        augtk::load_stopwords(out / "stopwords.txt", "xx");

    augtk::PipelineDeps deps;
    deps.lexicon = &lexicon;
    deps.stopwords = &stopwords;
    deps.translator = &recording_translator;
    deps.completer = &recording_completer;
    deps.templates = augtk::PromptTemplates::from_dir(templates_dir);
    deps.llm = config.llm_options();

    for (const augtk::Technique technique :
         {augtk::Technique::BackTranslate, augtk::Technique::Paraphrase,
          augtk::Technique::Expand, augtk::Technique::Generate}) {
        const auto [augmented, records] =
            augtk::augment_corpus(corpus, config.to_experiment(technique), deps);
        std::size_t skips = records.size() - augmented.size();
        if (skips != 0) {
            std::cerr << "unexpected skips while recording "
                      << augtk::technique_name(technique) << ": " << skips << "\n";
            return 1;
        }
    }
    recording_translator.save(out / "fixtures_translation.jsonl");
    recording_completer.save(out / "fixtures_completion.jsonl");

    // --- verify playback round-trips before shipping ---
    const augtk::Runtime runtime(config);
    const augtk::Corpus dataset = augtk::load_jsonl(out / "corpus.jsonl", "xx");
    const auto table = augtk::compare_all(
        dataset, config.to_experiment(augtk::Technique::RandomDeletion),
        augtk::all_techniques(), runtime.deps());
    if (table.failed_rows() != 0) {
        std::cerr << "fixture playback self-check failed:\n" << table.render_text();
        return 1;
    }

    std::cout << "wrote synthetic dataset to " << out_dir << " ("
              << corpus.size() << " samples, " << vector_rows.size()
              << " vectors)\n";
    return 0;
}
