#!/usr/bin/env python3
"""Independent reference implementations of chrF++ and corpus BLEU.

Written from the published metric definitions, deliberately apart from the
C++ code, to freeze oracle values for the metric fixtures. Definitions:

chrF++ (character F-score, word-order extension):
  - character n-grams of order 1..6 over the NFC text with all whitespace
    removed; word n-grams of order 1..2 over whitespace tokens
  - per order: P = match/hyp_total, R = match/ref_total,
    F = (1+b^2) P R / (b^2 P + R) with beta = 2
  - orders where hyp_total == ref_total == 0 are skipped; score is the mean
    F over remaining orders, times 100; all orders skipped -> 100 (both empty)
  - multi-reference: per segment pick the reference with the highest segment
    F; corpus score pools the chosen statistics before the F computation

BLEU (4-gram, corpus level, whitespace/subword tokens):
  - clipped n-gram matches against the best-overlap reference counts
  - numerator floor 0.01 on zero match counts; orders with zero hyp totals
    are dropped from the geometric mean
  - brevity penalty exp(1 - ref_len/hyp_len) capped at 1, reference length
    chosen closest to the hypothesis length (ties -> shorter)
"""
import json
import math
import unicodedata
from collections import Counter

BETA = 2.0
CHAR_ORDER = 6
WORD_ORDER = 2


def _nfc(s):
    return unicodedata.normalize("NFC", s)


def _char_ngrams(s, n):
    chars = [c for c in s if not c.isspace()]
    return Counter(tuple(chars[i:i + n]) for i in range(len(chars) - n + 1))


def _word_ngrams(s, n):
    words = s.split()
    return Counter(tuple(words[i:i + n]) for i in range(len(words) - n + 1))


def _stats_one(hyp, ref):
    """Per-order [hyp_total, ref_total, match] for all 8 orders."""
    out = []
    for n in range(1, CHAR_ORDER + 1):
        h, r = _char_ngrams(hyp, n), _char_ngrams(ref, n)
        m = sum(min(c, r[g]) for g, c in h.items())
        out.append([sum(h.values()), sum(r.values()), m])
    for n in range(1, WORD_ORDER + 1):
        h, r = _word_ngrams(hyp, n), _word_ngrams(ref, n)
        m = sum(min(c, r[g]) for g, c in h.items())
        out.append([sum(h.values()), sum(r.values()), m])
    return out


def _f_from_stats(stats):
    total_f, orders = 0.0, 0
    for hyp_total, ref_total, match in stats:
        if hyp_total == 0 and ref_total == 0:
            continue
        p = match / hyp_total if hyp_total else 0.0
        r = match / ref_total if ref_total else 0.0
        f = 0.0 if p + r == 0 else (1 + BETA**2) * p * r / (BETA**2 * p + r)
        total_f += f
        orders += 1
    if orders == 0:
        return 100.0  # both sides empty at every order: trivially identical
    return 100.0 * total_f / orders


def chrf_pp_segment(hyp, refs):
    hyp = _nfc(hyp)
    best = None
    for ref in refs:
        stats = _stats_one(hyp, _nfc(ref))
        f = _f_from_stats(stats)
        if best is None or f > best[0]:
            best = (f, stats)
    return best


def chrf_pp_corpus(hyps, refs_list):
    pooled = [[0, 0, 0] for _ in range(CHAR_ORDER + WORD_ORDER)]
    for hyp, refs in zip(hyps, refs_list):
        _, stats = chrf_pp_segment(hyp, refs)
        for i, s in enumerate(stats):
            for k in range(3):
                pooled[i][k] += s[k]
    return _f_from_stats(pooled)


def _closest_ref_len(hyp_len, ref_lens):
    return min(ref_lens, key=lambda rl: (abs(rl - hyp_len), rl))


def bleu_corpus(hyps, refs_list, tokenize=None):
    tokenize = tokenize or (lambda s: _nfc(s).split())
    num = [0] * 4
    den = [0] * 4
    hyp_len_total = 0
    ref_len_total = 0
    for hyp, refs in zip(hyps, refs_list):
        h = tokenize(hyp)
        rs = [tokenize(r) for r in refs]
        hyp_len_total += len(h)
        ref_len_total += _closest_ref_len(len(h), [len(r) for r in rs])
        for n in range(1, 5):
            hgrams = Counter(tuple(h[i:i + n]) for i in range(len(h) - n + 1))
            best = Counter()
            for r in rs:
                rgrams = Counter(tuple(r[i:i + n]) for i in range(len(r) - n + 1))
                for g, c in rgrams.items():
                    best[g] = max(best[g], c)
            num[n - 1] += sum(min(c, best[g]) for g, c in hgrams.items())
            den[n - 1] += sum(hgrams.values())
    if hyp_len_total == 0:
        return 0.0
    log_sum, orders = 0.0, 0
    for n in range(4):
        if den[n] == 0:
            continue
        p = max(num[n], 0.01) / den[n]
        log_sum += math.log(p)
        orders += 1
    if orders == 0:
        return 0.0
    bp = 1.0 if hyp_len_total >= ref_len_total else math.exp(1 - ref_len_total / hyp_len_total)
    return 100.0 * bp * math.exp(log_sum / orders)


if __name__ == "__main__":
    # quick self-checks of the pinned edge cases
    assert chrf_pp_corpus(["identical text"], [["identical text"]]) == 100.0
    assert chrf_pp_corpus([""], [["nonempty reference"]]) == 0.0
    assert bleu_corpus(["a b c d"], [["a b c d"]]) == 100.0
    disjoint = bleu_corpus(["q w e r t y"], [["a b c d e f"]])
    assert 0.0 < disjoint < 1.0, disjoint
    print(json.dumps({"disjoint_bleu": disjoint}))
