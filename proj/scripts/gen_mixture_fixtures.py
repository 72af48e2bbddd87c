#!/usr/bin/env python3
"""Builds the desk-scale mixture fixtures: per-entry source corpora plus a
manifest whose targets follow the production word-count table scaled by 1e-6.

Outputs (under tests/fixtures/mixture/):
  <label>.jsonl    source documents for one manifest entry
  manifest.json    manifest with relative paths into the same directory
"""

import hashlib
import json
import math
import random
import unicodedata
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "mixture"


def sha256_fields(fields):
    h = hashlib.sha256()
    for f in fields:
        b = f.encode("utf-8")
        h.update(f"{len(b)}:".encode())
        h.update(b)
    return h.hexdigest()


assert sha256_fields(["ab", "c"]) == \
    "430fb1b4ac43316eca81fab27a1930ab8eff8fef6a1dc7903dce44bbc2790dc5"
assert sha256_fields(["a", "bc"]) == \
    "5310a58788781ab25d5ad7c3f85035824b4eb7bdfa394e0ac2186271472b5492"


def canonical_id(text, lang, script, source):
    return sha256_fields([unicodedata.normalize("NFC", text), lang, script, source])


LATIN_WORDS = (
    "river market morning coffee street garden window mountain evening harbor "
    "bread letter journey teacher student village city road bridge station "
    "music story friend family dinner kitchen table chair lamp mirror "
    "cloud rain summer winter spring autumn harvest field farmer basket"
).split()

ARABIC_WORDS = (
    "مرحبا بيت قهوة سوق نهر مدينة قمر شمس شاي طعام "
    "كيف حالك اليوم جميل شكرا بلد صباح مساء كتاب قلم "
    "باب شباك طريق جبل بحر سماء نجمة ورد شجرة حديقة"
).split()

ARABIZI_WORDS = (
    "sba7 lkhir kifash rak lyoum zwin bzaf chokran 3afak smiti "
    "mdina souk 9hwa atay khobz dar trik jbal b7ar sma"
).split()

# (label, lang, script, genre, source, nature, target_words)
# Targets follow the production mixture table scaled by 1e-6, rounded.
ENTRIES = [
    ("egy_wikipedia",      "egy", "arabic",  "wiki",        "native",    "real",      129),
    ("egy_mt_fineweb_edu", "egy", "arabic",  "educational", "mt",        "synthetic", 2080),
    ("egy_lhv",            "egy", "arabic",  "story",       "synthetic", "synthetic", 399),
    ("egy_fineweb2",       "egy", "arabic",  "web",         "native",    "real",      430),
    ("egy_arabizi",        "egy", "arabizi", "educational", "mt",        "synthetic", 206),
    ("mor_wikipedia",      "mor", "arabic",  "wiki",        "native",    "real",      2),
    ("mor_mt_fineweb_edu", "mor", "arabic",  "educational", "mt",        "synthetic", 2020),
    ("mor_lhv",            "mor", "arabic",  "story",       "synthetic", "synthetic", 207),
    ("mor_fineweb2",       "mor", "arabic",  "web",         "native",    "real",      1640),
    ("mor_arabizi",        "mor", "arabizi", "educational", "mt",        "synthetic", 467),
    ("egy_msa_cultural",   "msa", "arabic",  "web",         "retrieved", "real",      75),
    ("egy_msa_news",       "msa", "arabic",  "news",        "native",    "real",      347),
    ("mor_msa_cultural",   "msa", "arabic",  "web",         "retrieved", "real",      23),
    ("mor_msa_news",       "msa", "arabic",  "news",        "native",    "real",      220),
    ("msa_fineweb2",       "msa", "arabic",  "web",         "native",    "real",      28800),
    ("msa_wikipedia",      "msa", "arabic",  "wiki",        "native",    "real",      319),
    ("en_fineweb_edu",     "en",  "latin",   "educational", "native",    "real",      51570),
    ("fr_fineweb2",        "fr",  "latin",   "web",         "native",    "real",      9420),
    ("code_math",          "code", "latin",  "other",       "native",    "real",      818),
]


def doc_text(rng, script):
    words = {"arabic": ARABIC_WORDS, "arabizi": ARABIZI_WORDS}.get(script, LATIN_WORDS)
    n = rng.randint(15, 50)
    return " ".join(rng.choice(words) for _ in range(n))


def main():
    rng = random.Random(660341)
    OUT.mkdir(parents=True, exist_ok=True)

    manifest_entries = []
    for label, lang, script, genre, source, nature, target in ENTRIES:
        need = max(math.ceil(target * 1.3), target + 40)
        total = 0
        rows = []
        while total < need:
            text = doc_text(rng, script)
            wc = len(text.split())
            prov = {}
            if source in ("mt", "synthetic"):
                prov = {"template_id": "fixture", "teacher_model_id": "fixture-teacher"}
            rows.append({
                "id": canonical_id(text, lang, script, source),
                "lang": lang, "script": script, "genre": genre, "source": source,
                "text": text, "word_count": wc, "provenance": prov,
            })
            total += wc
        with open(OUT / f"{label}.jsonl", "w") as f:
            for r in rows:
                f.write(json.dumps(r, ensure_ascii=False) + "\n")
        manifest_entries.append({
            "label": label, "lang": lang, "nature": nature,
            "target_words": target, "path": f"{label}.jsonl",
            "allow_repeat": False,
        })
        print(f"{label}: {len(rows)} docs, {total} words (target {target})")

    manifest = {"seed": 20266, "words_per_shard": 20000, "entries": manifest_entries}
    with open(OUT / "manifest.json", "w") as f:
        json.dump(manifest, f, indent=1)
    grand = sum(e[-1] for e in ENTRIES)
    print(f"manifest total target: {grand} words")


if __name__ == "__main__":
    main()
