#include "forge/gateway/mock_backend.hpp"

#include <array>
#include <map>

#include <nlohmann/json.hpp>

#include "forge/core/digest.hpp"
#include "forge/core/errors.hpp"
#include "forge/core/rng.hpp"
#include "forge/core/text.hpp"
#include "forge/core/unicode.hpp"

namespace forge::gateway {

namespace {

// 1:1 letter substitution a..z -> distinct Arabic letters, so mock
// "translations" carry real Arabic-script codepoints and the Arabizi handler
// can invert them exactly. Unmapped codepoints (digits, punctuation,
// whitespace) pass through, preserving word structure.
constexpr std::array<char32_t, 26> kLatinToArabic = {
    0x0627, 0x0628, 0x062B, 0x062F, 0x0639, 0x0641, 0x063A, 0x062D, 0x064A,
    0x062C, 0x0643, 0x0644, 0x0645, 0x0646, 0x0648, 0x0637, 0x0642, 0x0631,
    0x0633, 0x062A, 0x0636, 0x0638, 0x0634, 0x062E, 0x0635, 0x0632};

const std::map<char32_t, char32_t>& arabic_to_latin() {
    static const std::map<char32_t, char32_t> m = [] {
        std::map<char32_t, char32_t> out;
        for (std::size_t i = 0; i < kLatinToArabic.size(); ++i)
            out[kLatinToArabic[i]] = static_cast<char32_t>('a' + i);
        return out;
    }();
    return m;
}

std::uint64_t bundle_seed(const PromptBundle& bundle) {
    return digest::derive_seed(0, bundle.rendered_text);
}

std::string slot_or_fail(const PromptBundle& bundle, const std::string& name) {
    auto it = bundle.slots.find(name);
    if (it == bundle.slots.end())
        fail("MissingSlot", bundle.template_id + ": mock needs slot " + name);
    return it->second;
}

nlohmann::json map_strings(const nlohmann::json& j,
                           const std::function<std::string(std::string_view)>& fn) {
    if (j.is_string()) return fn(j.get<std::string>());
    if (j.is_array()) {
        auto out = nlohmann::json::array();
        for (const auto& v : j) out.push_back(map_strings(v, fn));
        return out;
    }
    if (j.is_object()) {
        auto out = nlohmann::json::object();
        for (const auto& [k, v] : j.items()) out[k] = map_strings(v, fn);
        return out;
    }
    return j;
}

CompletionResult handle_translate(const PromptBundle& b) {
    return {MockBackend::to_mock_arabic(slot_or_fail(b, "English_text")), false};
}

CompletionResult handle_translate_json(const PromptBundle& b) {
    auto j = nlohmann::json::parse(slot_or_fail(b, "JSON_OBJECT"));
    return {map_strings(j, MockBackend::to_mock_arabic).dump(), false};
}

CompletionResult handle_arabizi(const PromptBundle& b) {
    auto j = nlohmann::json::parse(slot_or_fail(b, "JSON_OBJECT"));
    return {map_strings(j, MockBackend::to_mock_latin).dump(), false};
}

const std::vector<std::string>& mock_vocab() {
    static const std::vector<std::string> vocab = [] {
        // Mock-Arabic forms of a small wordlist; generation draws from these.
        const char* base[] = {
            "time",  "people", "year",   "house",  "day",    "man",    "thing",
            "world", "life",   "hand",   "part",   "child",  "eye",    "woman",
            "place", "work",   "week",   "case",   "point",  "number", "water",
            "food",  "street", "market", "family", "friend", "music",  "story",
            "bread", "tea",    "city",   "river",  "sun",    "moon",   "door",
            "heart", "voice",  "cloth",  "feast",  "dance",  "song",   "road",
            "boat",  "mountain", "field", "garden", "wall",  "night"};
        std::vector<std::string> out;
        for (const char* w : base) out.push_back(MockBackend::to_mock_arabic(w));
        return out;
    }();
    return vocab;
}

CompletionResult handle_generation(const PromptBundle& b) {
    Rng rng(bundle_seed(b));
    const auto& vocab = mock_vocab();
    // Weave a few context words in so generated text visibly depends on its
    // inputs, then pad with vocabulary draws.
    auto ctx_words = text::split_words(slot_or_fail(b, "context"));
    std::size_t total = 90 + rng.bounded(60);
    std::string out;
    for (std::size_t i = 0; i < total; ++i) {
        if (i) out.push_back(' ');
        if (!ctx_words.empty() && rng.bernoulli(0.15))
            out += ctx_words[rng.bounded(ctx_words.size())];
        else
            out += vocab[rng.bounded(vocab.size())];
        if (rng.bernoulli(0.12)) out.push_back('.');
    }
    return {out, false};
}

CompletionResult handle_refine(const PromptBundle& b) {
    auto words = text::split_words(slot_or_fail(b, "PERSONA_DESCRIPTION"));
    std::size_t keep = std::min<std::size_t>(30, words.empty() ? 0 : words.size() - 1);
    if (keep == 0) return {"", false};  // degenerate input -> degenerate summary
    std::string out;
    for (std::size_t i = 0; i < keep; ++i) {
        if (i) out.push_back(' ');
        out += words[i];
    }
    return {out, false};
}

CompletionResult handle_cultural_qa(const PromptBundle& b) {
    auto source = slot_or_fail(b, "Text");
    auto words = text::split_words(source);
    auto pairs = nlohmann::json::array();
    if (words.size() >= 5) {
        std::uint64_t seed = bundle_seed(b);
        Rng rng(seed);
        std::size_t n = 3 + seed % 3;
        for (std::size_t i = 0; i < n; ++i) {
            std::string topic = words[rng.bounded(words.size())];
            std::string instruction =
                MockBackend::to_mock_arabic("how to make ") + topic + "?";
            std::string response = MockBackend::to_mock_arabic("you start with ") + topic;
            for (int k = 0; k < 14; ++k) {
                response.push_back(' ');
                response += words[rng.bounded(words.size())];
            }
            pairs.push_back({{"instruction", instruction}, {"response", response}});
        }
    }
    nlohmann::json out{{"instruction_response_pairs", pairs}};
    // Half the time, wrap in markdown fences the way chatty teachers do;
    // complete_json must recover.
    if (bundle_seed(b) % 2 == 0)
        return {"```json\n" + out.dump(2) + "\n```", false};
    return {out.dump(2), false};
}

CompletionResult handle_judge(const PromptBundle& b) {
    auto ref = text::trim(slot_or_fail(b, "reference_answer"));
    auto ans = text::trim(slot_or_fail(b, "model_answer"));
    if (ref == ans) return {"10", false};
    auto score = bundle_seed(b) % 10;  // 0..9 for non-exact answers
    return {"The score is " + std::to_string(score) + ".", false};
}

} // namespace

std::string MockBackend::to_mock_arabic(std::string_view latin_text) {
    std::string out;
    out.reserve(latin_text.size() * 2);
    for (std::size_t i = 0; i < latin_text.size();) {
        char32_t cp = unicode::decode_utf8(latin_text, i);
        if (cp >= 'A' && cp <= 'Z') cp = cp - 'A' + 'a';
        if (cp >= 'a' && cp <= 'z')
            unicode::append_utf8(out, kLatinToArabic[cp - 'a']);
        else
            unicode::append_utf8(out, cp);
    }
    return out;
}

std::string MockBackend::to_mock_latin(std::string_view arabic_text) {
    std::string out;
    out.reserve(arabic_text.size());
    const auto& inv = arabic_to_latin();
    for (std::size_t i = 0; i < arabic_text.size();) {
        char32_t cp = unicode::decode_utf8(arabic_text, i);
        auto it = inv.find(cp);
        unicode::append_utf8(out, it != inv.end() ? it->second : cp);
    }
    return out;
}

MockBackend::MockBackend() {
    handlers_["mt.translate."] = handle_translate;
    handlers_["mt.translate_json."] = handle_translate_json;
    handlers_["arabizi.convert."] = handle_arabizi;
    handlers_["gen.text."] = handle_generation;
    handlers_["persona.refine"] = handle_refine;
    handlers_["sft.cultural_qa."] = handle_cultural_qa;
    handlers_["judge.correctness"] = handle_judge;
}

void MockBackend::set_handler(const std::string& prefix, Handler h) {
    std::lock_guard lock(mutex_);
    handlers_[prefix] = std::move(h);
}

const MockBackend::Handler* MockBackend::find_handler(
    const std::string& template_id) const {
    const Handler* best = nullptr;
    std::size_t best_len = 0;
    for (const auto& [prefix, h] : handlers_) {
        if (template_id.rfind(prefix, 0) == 0 &&
            (prefix.size() >= best_len || !best)) {
            best = &h;
            best_len = prefix.size();
        }
    }
    return best;
}

CompletionResult MockBackend::complete(const PromptBundle& bundle,
                                       const std::string& /*model_id*/) {
    calls_.fetch_add(1);
    if (failures_.fetch_sub(1) > 0)
        fail("TransportError", "injected mock failure");
    failures_.fetch_add(1);  // undo the decrement once exhausted

    std::lock_guard lock(mutex_);
    const Handler* h = find_handler(bundle.template_id);
    if (!h) fail("UnknownTemplate", "no mock handler for " + bundle.template_id);
    return (*h)(bundle);
}

} // namespace forge::gateway
