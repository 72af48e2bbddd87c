#!/usr/bin/env python3
"""Builds the 20-pair bilingual metric fixture and freezes oracle scores
computed by ref_metrics.py (the independent reference implementation).

Output: tests/fixtures/metrics/pairs.jsonl + oracle.json. Committed; tests
compare the C++ metrics against these frozen numbers within 1e-3.
"""
import json
import random
from pathlib import Path

import ref_metrics as rm

OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "metrics"
OUT.mkdir(parents=True, exist_ok=True)

rng = random.Random(902144)

AR = "مرحبا كيف حالك اليوم جميل شكرا بلد بيت طعام مدينة سوق شاي قهوة نهر شمس قمر".split()
EN = ("the quick brown fox jumps over lazy dog market bread tea house river "
      "mountain story friend music street night").split()


def sentence(pool, lo, hi):
    return " ".join(rng.choice(pool) for _ in range(rng.randint(lo, hi)))


def perturb(s, p_drop=0.15, p_swap=0.2, pool=None):
    words = s.split()
    out = []
    for w in words:
        r = rng.random()
        if r < p_drop:
            continue
        if r < p_drop + p_swap and pool:
            out.append(rng.choice(pool))
        else:
            out.append(w)
    return " ".join(out) if out else s


pairs = []
# 1: exact match (pinned 100.0 handled separately but also present in corpus)
s = sentence(EN, 6, 10)
pairs.append({"hyp": s, "refs": [s]})
# 2: exact Arabic match
s = sentence(AR, 6, 10)
pairs.append({"hyp": s, "refs": [s]})
# 3..8: English with varying degradation
for i in range(6):
    ref = sentence(EN, 8, 16)
    pairs.append({"hyp": perturb(ref, 0.05 + 0.06 * i, 0.05 * i, EN), "refs": [ref]})
# 9..14: Arabic with varying degradation
for i in range(6):
    ref = sentence(AR, 8, 16)
    pairs.append({"hyp": perturb(ref, 0.05 + 0.06 * i, 0.05 * i, AR), "refs": [ref]})
# 15..16: multi-reference (2 refs each)
for _ in range(2):
    ref1 = sentence(EN, 8, 12)
    ref2 = perturb(ref1, 0.1, 0.3, EN)
    hyp = perturb(ref2, 0.1, 0.1, EN)
    pairs.append({"hyp": hyp, "refs": [ref1, ref2]})
# 17: mixed-script pair
ref = sentence(AR, 4, 6) + " " + sentence(EN, 4, 6)
pairs.append({"hyp": perturb(ref, 0.1, 0.1, AR + EN), "refs": [ref]})
# 18: short strings
pairs.append({"hyp": "ok", "refs": ["ok then"]})
# 19: completely disjoint
pairs.append({"hyp": sentence(EN, 6, 8), "refs": [sentence(AR, 6, 8)]})
# 20: hypothesis much longer than reference (brevity penalty inverse case)
ref = sentence(EN, 5, 6)
pairs.append({"hyp": ref + " " + sentence(EN, 8, 10), "refs": [ref]})

assert len(pairs) == 20

with open(OUT / "pairs.jsonl", "w", encoding="utf-8") as f:
    for p in pairs:
        f.write(json.dumps(p, ensure_ascii=False) + "\n")

oracle = {
    "per_pair": [
        {
            "chrfpp": rm.chrf_pp_segment(p["hyp"], p["refs"])[0],
            "bleu": rm.bleu_corpus([p["hyp"]], [p["refs"]]),
        }
        for p in pairs
    ],
    "corpus_chrfpp": rm.chrf_pp_corpus([p["hyp"] for p in pairs],
                                       [p["refs"] for p in pairs]),
    "corpus_bleu": rm.bleu_corpus([p["hyp"] for p in pairs],
                                  [p["refs"] for p in pairs]),
}
with open(OUT / "oracle.json", "w", encoding="utf-8") as f:
    json.dump(oracle, f, indent=1)

print("corpus chrF++ =", oracle["corpus_chrfpp"])
print("corpus BLEU   =", oracle["corpus_bleu"])
print("pair 0 (exact):", oracle["per_pair"][0])
print("pair 18 (disjoint):", oracle["per_pair"][18])
