#include "forge/eval/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <map>

#include "forge/core/digest.hpp"
#include "forge/core/errors.hpp"
#include "forge/core/text.hpp"
#include "forge/core/unicode.hpp"

namespace forge::eval {

namespace {

constexpr int kCharOrder = 6;
constexpr int kWordOrder = 2;
constexpr int kOrders = kCharOrder + kWordOrder;
constexpr double kBeta2 = 4.0;  // beta = 2
constexpr const char* kWordMarker = "\xE2\x96\x81";  // U+2581, SentencePiece boundary

struct OrderStats {
    long hyp_total = 0;
    long ref_total = 0;
    long match = 0;
};
using Stats = std::array<OrderStats, kOrders>;

std::u32string codepoints_no_ws(std::string_view utf8) {
    std::string norm = unicode::nfc(utf8);
    std::u32string out;
    for (std::size_t i = 0; i < norm.size();) {
        char32_t cp = unicode::decode_utf8(norm, i);
        if (!unicode::is_whitespace(cp)) out.push_back(cp);
    }
    return out;
}

template <typename Seq>
std::map<Seq, long> ngram_counts(const Seq& items, int n) {
    std::map<Seq, long> out;
    if (static_cast<int>(items.size()) < n) return out;
    for (std::size_t i = 0; i + n <= items.size(); ++i)
        ++out[Seq(items.begin() + i, items.begin() + i + n)];
    return out;
}

template <typename Seq>
void accumulate_order(const Seq& hyp, const Seq& ref, int n, OrderStats& st) {
    auto h = ngram_counts(hyp, n);
    auto r = ngram_counts(ref, n);
    for (const auto& [g, c] : h) {
        st.hyp_total += c;
        auto it = r.find(g);
        if (it != r.end()) st.match += std::min(c, it->second);
    }
    for (const auto& [g, c] : r) st.ref_total += c;
}

Stats segment_stats(const std::string& hyp, const std::string& ref) {
    Stats st{};
    auto hc = codepoints_no_ws(hyp);
    auto rc = codepoints_no_ws(ref);
    for (int n = 1; n <= kCharOrder; ++n)
        accumulate_order(hc, rc, n, st[n - 1]);
    auto hw = text::split_words(hyp);
    auto rw = text::split_words(ref);
    for (int n = 1; n <= kWordOrder; ++n)
        accumulate_order(hw, rw, n, st[kCharOrder + n - 1]);
    return st;
}

double f_from_stats(const Stats& st) {
    double total = 0.0;
    int orders = 0;
    for (const auto& o : st) {
        if (o.hyp_total == 0 && o.ref_total == 0) continue;
        double p = o.hyp_total ? static_cast<double>(o.match) / o.hyp_total : 0.0;
        double r = o.ref_total ? static_cast<double>(o.match) / o.ref_total : 0.0;
        total += (p + r == 0.0) ? 0.0 : (1 + kBeta2) * p * r / (kBeta2 * p + r);
        ++orders;
    }
    if (orders == 0) return 100.0;  // both texts empty at every order
    return 100.0 * total / orders;
}

// Best reference for one segment: the one with the highest segment F.
Stats best_ref_stats(const std::string& hyp, const std::vector<std::string>& refs) {
    if (refs.empty()) fail("EmptyReference", "chrF++ needs at least one reference");
    Stats best{};
    double best_f = -1.0;
    for (const auto& ref : refs) {
        Stats st = segment_stats(hyp, ref);
        double f = f_from_stats(st);
        if (f > best_f) {
            best_f = f;
            best = st;
        }
    }
    return best;
}

} // namespace

double chrf_pp(const std::string& hyp, const std::vector<std::string>& refs) {
    return f_from_stats(best_ref_stats(hyp, refs));
}

double chrf_pp_corpus(const std::vector<std::string>& hyps,
                      const std::vector<std::vector<std::string>>& refs) {
    if (hyps.size() != refs.size())
        fail("EmptyReference", "hypothesis/reference count mismatch");
    Stats pooled{};
    for (std::size_t i = 0; i < hyps.size(); ++i) {
        Stats st = best_ref_stats(hyps[i], refs[i]);
        for (int k = 0; k < kOrders; ++k) {
            pooled[k].hyp_total += st[k].hyp_total;
            pooled[k].ref_total += st[k].ref_total;
            pooled[k].match += st[k].match;
        }
    }
    return f_from_stats(pooled);
}

SubwordTokenizer SubwordTokenizer::whitespace() {
    SubwordTokenizer t;
    t.id_ = "whitespace";
    return t;
}

SubwordTokenizer SubwordTokenizer::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("TokenizerLoadError", "cannot open vocabulary " + path);
    SubwordTokenizer t;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) t.vocab_.push_back(line);
    }
    if (t.vocab_.empty()) fail("TokenizerLoadError", "empty vocabulary " + path);
    std::sort(t.vocab_.begin(), t.vocab_.end());
    t.vocab_.erase(std::unique(t.vocab_.begin(), t.vocab_.end()), t.vocab_.end());
    t.id_ = "vocab:" + digest::sha256_file(path).substr(0, 16);
    for (const auto& piece : t.vocab_)
        if (piece.rfind(kWordMarker, 0) == 0) {
            t.word_marker_ = true;
            break;
        }
    return t;
}

std::vector<std::string> SubwordTokenizer::tokenize(std::string_view utf8) const {
    auto words = text::split_words(utf8);
    if (vocab_.empty()) return words;

    std::vector<std::string> out;
    for (auto& word : words) {
        if (word_marker_) word.insert(0, kWordMarker);
        std::size_t pos = 0;
        while (pos < word.size()) {
            // Longest vocabulary piece starting here; fall back to one
            // codepoint so segmentation always terminates.
            std::size_t best_len = 0;
            for (const auto& piece : vocab_) {
                if (piece.size() > best_len && piece.size() <= word.size() - pos &&
                    word.compare(pos, piece.size(), piece) == 0)
                    best_len = piece.size();
            }
            if (best_len == 0) {
                std::size_t i = pos;
                unicode::decode_utf8(word, i);
                best_len = i - pos;
            }
            out.push_back(word.substr(pos, best_len));
            pos += best_len;
        }
    }
    return out;
}

namespace {

std::map<std::string, long> token_ngrams(const std::vector<std::string>& toks, int n) {
    std::map<std::string, long> out;
    if (static_cast<int>(toks.size()) < n) return out;
    for (std::size_t i = 0; i + n <= toks.size(); ++i) {
        std::string key = toks[i];
        for (int k = 1; k < n; ++k) {
            key.push_back('\x1f');
            key += toks[i + k];
        }
        ++out[key];
    }
    return out;
}

} // namespace

double spbleu_corpus(const std::vector<std::string>& hyps,
                     const std::vector<std::vector<std::string>>& refs,
                     const SubwordTokenizer& tok) {
    if (hyps.size() != refs.size())
        fail("EmptyReference", "hypothesis/reference count mismatch");
    std::array<long, 4> num{}, den{};
    long hyp_len_total = 0, ref_len_total = 0;

    for (std::size_t i = 0; i < hyps.size(); ++i) {
        if (refs[i].empty()) fail("EmptyReference", "BLEU needs at least one reference");
        auto h = tok.tokenize(hyps[i]);
        std::vector<std::vector<std::string>> rs;
        for (const auto& r : refs[i]) rs.push_back(tok.tokenize(r));

        hyp_len_total += static_cast<long>(h.size());
        long best_rl = 0;
        long best_diff = -1;
        for (const auto& r : rs) {
            long rl = static_cast<long>(r.size());
            long diff = std::labs(rl - static_cast<long>(h.size()));
            if (best_diff < 0 || diff < best_diff || (diff == best_diff && rl < best_rl)) {
                best_diff = diff;
                best_rl = rl;
            }
        }
        ref_len_total += best_rl;

        for (int n = 1; n <= 4; ++n) {
            auto hgrams = token_ngrams(h, n);
            std::map<std::string, long> best;
            for (const auto& r : rs)
                for (const auto& [g, c] : token_ngrams(r, n))
                    best[g] = std::max(best[g], c);
            for (const auto& [g, c] : hgrams) {
                den[n - 1] += c;
                auto it = best.find(g);
                if (it != best.end()) num[n - 1] += std::min(c, it->second);
            }
        }
    }

    if (hyp_len_total == 0) return 0.0;
    double log_sum = 0.0;
    int orders = 0;
    for (int n = 0; n < 4; ++n) {
        if (den[n] == 0) continue;
        double p = std::max(static_cast<double>(num[n]), 0.01) / den[n];
        log_sum += std::log(p);
        ++orders;
    }
    if (orders == 0) return 0.0;
    double bp = hyp_len_total >= ref_len_total
                    ? 1.0
                    : std::exp(1.0 - static_cast<double>(ref_len_total) / hyp_len_total);
    return 100.0 * bp * std::exp(log_sum / orders);
}

double spbleu(const std::string& hyp, const std::vector<std::string>& refs,
              const SubwordTokenizer& tok) {
    return spbleu_corpus({hyp}, {refs}, tok);
}

} // namespace forge::eval
