#include "augtk/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "augtk/doubles.hpp"
#include "augtk/errors.hpp"
#include "augtk/log.hpp"

namespace augtk {

namespace {

using nlohmann::json;

void check_keys(const json& obj, const std::string& section,
                const std::set<std::string>& allowed) {
    for (const auto& [key, value] : obj.items()) {
        if (!allowed.count(key)) {
            const std::string path = section.empty() ? key : section + "." + key;
            throw ConfigError("unknown config key: \"" + path + "\"");
        }
    }
}

template <typename T>
T get_or(const json& obj, const std::string& section, const std::string& key,
         T fallback) {
    if (!obj.contains(key)) return fallback;
    const std::string path = section.empty() ? key : section + "." + key;
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError("config key \"" + path + "\" has the wrong type");
    }
}

std::optional<std::filesystem::path> get_path(const json& obj,
                                              const std::string& section,
                                              const std::string& key,
                                              const std::filesystem::path& base) {
    if (!obj.contains(key) || obj.at(key).is_null()) return std::nullopt;
    const auto raw = get_or<std::string>(obj, section, key, {});
    if (raw.empty()) return std::nullopt;
    std::filesystem::path p(raw);
    if (p.is_relative()) p = base / p;
    return p;
}

ScriptExpectation parse_script(const std::string& value) {
    if (value == "auto") return ScriptExpectation::auto_per_sample();
    const auto script = script_from_name(value);
    if (!script)
        throw ConfigError("dataset.expected_script must be one of devanagari, "
                          "gujarati, telugu, arabic, latin, other, auto; got \"" +
                          value + "\"");
    return ScriptExpectation::fixed(*script);
}

}  // namespace

Config Config::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path.string());
    std::ostringstream body;
    body << in.rdbuf();
    return parse(body.str(), std::filesystem::absolute(path).parent_path());
}

Config Config::parse(const std::string& json_text,
                     const std::filesystem::path& base_dir) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) throw ConfigError("config root must be a JSON object");

    Config cfg;
    cfg.base_dir = base_dir;
    check_keys(root, "",
               {"dataset", "sampling", "eda", "backends", "validation", "stopwords",
                "vectors", "templates_dir", "smoothing"});

    if (root.contains("dataset")) {
        const auto& d = root["dataset"];
        check_keys(d, "dataset", {"path", "language", "language_name", "expected_script"});
        cfg.dataset_path = get_path(d, "dataset", "path", base_dir);
        cfg.language = get_or<std::string>(d, "dataset", "language", cfg.language);
        cfg.language_name =
            get_or<std::string>(d, "dataset", "language_name", cfg.language_name);
        cfg.expected_script =
            parse_script(get_or<std::string>(d, "dataset", "expected_script", "auto"));
    }

    if (root.contains("sampling")) {
        const auto& s = root["sampling"];
        check_keys(s, "sampling", {"train_size", "seed", "test_fraction"});
        cfg.train_size = get_or<std::size_t>(s, "sampling", "train_size", cfg.train_size);
        cfg.seed = get_or<std::uint64_t>(s, "sampling", "seed", cfg.seed);
        cfg.test_fraction =
            get_or<double>(s, "sampling", "test_fraction", cfg.test_fraction);
    }

    if (root.contains("eda")) {
        const auto& e = root["eda"];
        check_keys(e, "eda", {"alpha", "p", "k", "min_sim"});
        cfg.eda.alpha = get_or<double>(e, "eda", "alpha", cfg.eda.alpha);
        cfg.eda.p = get_or<double>(e, "eda", "p", cfg.eda.p);
        cfg.eda.k = get_or<std::size_t>(e, "eda", "k", cfg.eda.k);
        cfg.eda.min_sim = get_or<double>(e, "eda", "min_sim", cfg.eda.min_sim);
    }

    if (root.contains("backends")) {
        const auto& b = root["backends"];
        check_keys(b, "backends", {"translation", "completion", "retry", "workers"});
        if (b.contains("translation")) {
            const auto& t = b["translation"];
            check_keys(t, "backends.translation", {"kind", "url", "fixtures", "pivot"});
            auto& ts = cfg.backends.translation;
            ts.kind = get_or<std::string>(t, "backends.translation", "kind", ts.kind);
            ts.url = get_or<std::string>(t, "backends.translation", "url", ts.url);
            ts.fixtures = get_path(t, "backends.translation", "fixtures", base_dir);
            ts.pivot = get_or<std::string>(t, "backends.translation", "pivot", ts.pivot);
        }
        if (b.contains("completion")) {
            const auto& c = b["completion"];
            check_keys(c, "backends.completion",
                       {"kind", "url", "model", "fixtures", "max_tokens", "temperature"});
            auto& cs = cfg.backends.completion;
            cs.kind = get_or<std::string>(c, "backends.completion", "kind", cs.kind);
            cs.url = get_or<std::string>(c, "backends.completion", "url", cs.url);
            cs.model = get_or<std::string>(c, "backends.completion", "model", cs.model);
            cs.fixtures = get_path(c, "backends.completion", "fixtures", base_dir);
            cs.max_tokens =
                get_or<int>(c, "backends.completion", "max_tokens", cs.max_tokens);
            cs.temperature =
                get_or<double>(c, "backends.completion", "temperature", cs.temperature);
        }
        if (b.contains("retry")) {
            const auto& r = b["retry"];
            check_keys(r, "backends.retry", {"max_attempts", "base_delay_ms", "backoff"});
            auto& rp = cfg.backends.retry;
            rp.max_attempts =
                get_or<int>(r, "backends.retry", "max_attempts", rp.max_attempts);
            rp.base_delay = std::chrono::milliseconds(get_or<long long>(
                r, "backends.retry", "base_delay_ms",
                static_cast<long long>(rp.base_delay.count())));
            rp.backoff = get_or<double>(r, "backends.retry", "backoff", rp.backoff);
        }
        cfg.backends.workers =
            get_or<int>(b, "backends", "workers", cfg.backends.workers);
    }

    if (root.contains("validation")) {
        const auto& v = root["validation"];
        check_keys(v, "validation", {"min_script_ratio", "length_low", "length_high"});
        cfg.min_script_ratio =
            get_or<double>(v, "validation", "min_script_ratio", cfg.min_script_ratio);
        cfg.length_low = get_or<double>(v, "validation", "length_low", cfg.length_low);
        cfg.length_high = get_or<double>(v, "validation", "length_high", cfg.length_high);
    }

    cfg.stopwords = get_path(root, "", "stopwords", base_dir);
    cfg.vectors = get_path(root, "", "vectors", base_dir);
    cfg.templates_dir = get_path(root, "", "templates_dir", base_dir);
    cfg.smoothing = get_or<double>(root, "", "smoothing", cfg.smoothing);

    // surface bad values at load time, not mid-run
    cfg.eda.validate();
    cfg.backends.retry.validate();
    cfg.to_experiment(Technique::RandomDeletion).validate();
    return cfg;
}

ExperimentConfig Config::to_experiment(Technique technique) const {
    ExperimentConfig e;
    e.technique = technique;
    e.seed = seed;
    e.train_size = train_size;
    e.eda = eda;
    e.test_fraction = test_fraction;
    e.language = language;
    e.language_name = language_name;
    e.pivot = backends.translation.pivot;
    e.expected_script = expected_script;
    e.smoothing = smoothing;
    e.workers = backends.workers;
    return e;
}

LlmOptions Config::llm_options() const {
    LlmOptions o;
    o.max_tokens = backends.completion.max_tokens;
    o.temperature = backends.completion.temperature;
    o.retry = backends.retry;
    o.min_script_ratio = min_script_ratio;
    o.len_lo = length_low;
    o.len_hi = length_high;
    return o;
}

Runtime::Runtime(const Config& config) {
    if (config.vectors) {
        lexicon_ = EmbeddingTable::load(*config.vectors);
    } else {
        log::warn("no vectors path configured; synonym replacement and insertion "
                  "will leave sentences unchanged");
    }
    stopwords_ = load_stopwords(config.stopwords, config.language);
    templates_ = config.templates_dir ? PromptTemplates::from_dir(*config.templates_dir)
                                      : PromptTemplates::builtin_defaults();
    llm_ = config.llm_options();

    const auto& ts = config.backends.translation;
    if (ts.kind == "identity") {
        translator_ = std::make_unique<IdentityTranslation>();
    } else if (ts.kind == "reverse") {
        translator_ = std::make_unique<ReversingTranslation>();
    } else if (ts.kind == "sim") {
        translator_ = std::make_unique<SimTranslation>();
    } else if (ts.kind == "fixture") {
        if (!ts.fixtures)
            throw ConfigError("backends.translation.fixtures required for kind=fixture");
        translator_ = std::make_unique<FixtureTranslation>(*ts.fixtures);
    } else if (ts.kind == "http") {
        if (ts.url.empty())
            throw ConfigError("backends.translation.url required for kind=http");
        translator_ = std::make_unique<HttpTranslationClient>(ts.url);
    } else {
        throw ConfigError("backends.translation.kind must be one of http, identity, "
                          "reverse, sim, fixture; got \"" + ts.kind + "\"");
    }

    const auto& cs = config.backends.completion;
    if (cs.kind == "echo") {
        completer_ = std::make_unique<EchoCompletion>();
    } else if (cs.kind == "sim") {
        completer_ = std::make_unique<SimCompletion>();
    } else if (cs.kind == "fixture") {
        if (!cs.fixtures)
            throw ConfigError("backends.completion.fixtures required for kind=fixture");
        completer_ = std::make_unique<FixtureCompletion>(*cs.fixtures);
    } else if (cs.kind == "http") {
        if (cs.url.empty())
            throw ConfigError("backends.completion.url required for kind=http");
        completer_ = std::make_unique<HttpCompletionClient>(cs.url, cs.model);
    } else {
        throw ConfigError("backends.completion.kind must be one of http, echo, sim, "
                          "fixture; got \"" + cs.kind + "\"");
    }
}

PipelineDeps Runtime::deps() const {
    PipelineDeps d;
    d.lexicon = &lexicon_;
    d.stopwords = &stopwords_;
    d.translator = translator_.get();
    d.completer = completer_.get();
    d.templates = templates_;
    d.llm = llm_;
    return d;
}

}  // namespace augtk
