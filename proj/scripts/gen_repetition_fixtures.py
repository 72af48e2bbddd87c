#!/usr/bin/env python3
"""Builds the repetition-filter fixtures and their brute-force oracle.

Outputs (under tests/fixtures/repetition/):
  docs.jsonl       500 documents, 20 of them planted repetitive
  expected.json    oracle verdicts: rejected ids -> {rule, detail}
  clean10k.jsonl   10,000 clean single-sentence documents
  clean10k.json    oracle rejection count over clean10k (frozen)

The verdict() function here is the independent oracle: a direct, naive
restatement of the filter rules, kept free of any optimization so it can
arbitrate the C++ implementation.
"""

import json
import random
from collections import Counter
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "repetition"

MAX_5GRAM_REPEATS = 4        # rule a: reject when a word 5-gram occurs >= this
DUP_3GRAM_CHAR_FRACTION = 0.30  # rule b
DUP_LINE_FRACTION = 0.30        # rule c


def verdict(text: str):
    """Returns None (accept) or (rule, detail). Brute force on purpose."""
    words = text.split()

    # rule a: some word 5-gram occurs >= MAX_5GRAM_REPEATS times
    if len(words) >= 5:
        grams5 = [tuple(words[i:i + 5]) for i in range(len(words) - 4)]
        counts5 = Counter(grams5)
        for g in grams5:  # position order == first-occurrence order
            if counts5[g] >= MAX_5GRAM_REPEATS:
                return ("a", " ".join(g))

    # rule b: fraction of characters inside duplicated word 3-grams > threshold
    if len(words) >= 3:
        grams3 = [tuple(words[i:i + 3]) for i in range(len(words) - 2)]
        counts3 = Counter(grams3)
        marked = [False] * len(words)
        for i, g in enumerate(grams3):
            if counts3[g] >= 2:
                marked[i] = marked[i + 1] = marked[i + 2] = True
        total_chars = sum(len(w) for w in words)
        dup_chars = sum(len(w) for w, m in zip(words, marked) if m)
        if total_chars and dup_chars / total_chars > DUP_3GRAM_CHAR_FRACTION:
            best, best_n = None, 0
            for g in grams3:
                if counts3[g] >= 2 and counts3[g] > best_n:
                    best, best_n = g, counts3[g]
            return ("b", " ".join(best))

    # rule c: fraction of duplicate lines > threshold
    lines = [ln.strip() for ln in text.split("\n")]
    lines = [ln for ln in lines if ln]
    if lines:
        counts_l = Counter(lines)
        dups = sum(n - 1 for n in counts_l.values())
        if dups / len(lines) > DUP_LINE_FRACTION:
            best, best_n = None, 0
            for ln in lines:
                if counts_l[ln] > best_n:
                    best, best_n = ln, counts_l[ln]
            return ("c", best)

    return None


VOCAB = """
river market morning coffee street garden window mountain evening harbor
bread letter journey teacher student village city road bridge station
music story friend family dinner kitchen table chair lamp mirror
cloud rain summer winter spring autumn harvest field farmer basket
book page chapter library shelf candle paper pencil drawing painting
song dance festival wedding guest neighbor cousin uncle grandmother child
boat fisher net wave shore island lighthouse sailor captain anchor
clock tower bell square fountain statue museum theater ticket stage
train carriage platform luggage passenger conductor tunnel valley hill forest
tea sugar spice lemon olive almond honey butter cheese flour
door roof wall floor stair cellar attic yard fence gate
shirt coat shoe scarf button pocket thread needle fabric tailor
doctor nurse clinic medicine remedy fever rest sleep dream night
moon star sky horizon sunrise sunset shadow light warmth breeze
merchant stall price coin purse trade caravan route map compass
poem verse writer reader ink scroll archive record history memory
"""

WORDS = VOCAB.split()


def sentence(rng, lo=8, hi=18):
    return " ".join(rng.choice(WORDS) for _ in range(rng.randint(lo, hi)))


def clean_doc(rng):
    n_lines = rng.randint(1, 4)
    lines = []
    for _ in range(n_lines):
        n_sent = rng.randint(1, 3)
        lines.append(". ".join(sentence(rng) for _ in range(n_sent)) + ".")
    return "\n".join(lines)


def planted_rule_a(rng, k):
    phrase = " ".join(rng.sample(WORDS, 5))
    parts = []
    for _ in range(4 + k % 3):
        parts.append(sentence(rng, 4, 9))
        parts.append(phrase)
    parts.append(sentence(rng, 4, 9))
    return " ".join(parts)


def planted_rule_a_extreme(rng):
    phrase = " ".join(rng.sample(WORDS, 5))
    return " ".join([phrase] * 10)


def planted_rule_b(rng):
    tri = " ".join(rng.sample(WORDS, 3))
    parts = []
    fillers = rng.sample(WORDS, 6)
    for f in fillers:
        parts.append(tri)
        parts.append(f)
    # 6 tri occurrences (18 words) vs 6 fillers: ~75% of chars duplicated,
    # and every 5-gram contains a distinct filler, so rule a stays quiet.
    return " ".join(parts)


def planted_rule_c(rng):
    dup = rng.choice(WORDS)
    lines = []
    distinct = [sentence(rng, 5, 9) + "." for _ in range(4)]
    for i in range(4):
        lines.append(distinct[i])
        lines.append(dup)
    # 8 lines, 3 duplicates -> 0.375 > 0.30; the one-word line repeats are
    # separated by distinct lines, so no 3-gram duplicates either.
    return "\n".join(lines)


def main():
    rng = random.Random(441209)
    OUT.mkdir(parents=True, exist_ok=True)

    planted = []
    for k in range(8):
        planted.append(planted_rule_a(rng, k))
    for _ in range(6):
        planted.append(planted_rule_b(rng))
    for _ in range(3):
        planted.append(planted_rule_c(rng))
    for _ in range(3):
        planted.append(planted_rule_a_extreme(rng))
    assert len(planted) == 20

    docs = [("planted", t) for t in planted]
    docs += [("clean", clean_doc(rng)) for _ in range(480)]
    rng.shuffle(docs)

    expected = {}
    rows = []
    for i, (kind, text) in enumerate(docs):
        doc_id = f"rep-{i:04d}"
        v = verdict(text)
        if kind == "planted":
            assert v is not None, f"planted doc {doc_id} not caught by oracle"
        else:
            assert v is None, f"clean doc {doc_id} tripped the oracle: {v}"
        if v:
            expected[doc_id] = {"rule": v[0], "detail": v[1]}
        rows.append({"id": doc_id, "text": text})

    with open(OUT / "docs.jsonl", "w") as f:
        for r in rows:
            f.write(json.dumps(r, ensure_ascii=False) + "\n")
    with open(OUT / "expected.json", "w") as f:
        json.dump(expected, f, indent=1, sort_keys=True)
    print(f"docs.jsonl: {len(rows)} docs, {len(expected)} rejected by oracle")

    # Clean 10k single-sentence corpus + frozen oracle rejection count.
    rng2 = random.Random(771561)
    rejected = 0
    with open(OUT / "clean10k.jsonl", "w") as f:
        for i in range(10_000):
            text = sentence(rng2) + "."
            if verdict(text) is not None:
                rejected += 1
            f.write(json.dumps({"id": f"web-{i:05d}", "text": text},
                               ensure_ascii=False) + "\n")
    with open(OUT / "clean10k.json", "w") as f:
        json.dump({"docs": 10_000, "oracle_rejected": rejected}, f)
    print(f"clean10k.jsonl: rejected by oracle = {rejected}")


if __name__ == "__main__":
    main()
