#!/usr/bin/env python3
"""Generates frozen Unicode fixtures for the core text tests.

Two files under tests/fixtures/unicode/:
  nfc_cases.jsonl       input string + its NFC form (via Python unicodedata)
  wordcount_cases.jsonl 50 texts + word counts from a naive whitespace split

Run from the repo root. The outputs are committed; tests never invoke Python.
"""
import json
import random
import unicodedata
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "unicode"
OUT.mkdir(parents=True, exist_ok=True)

rng = random.Random(20250819)


def nfc_cases():
    cases = [
        "café",                      # e + combining acute
        "café",                       # precomposed
        "أ",                    # alef + hamza above -> U+0623
        "أ",
        "ئِ",              # yeh + hamza + kasra
        "نَّ",              # noon + fatha + shadda (ccc reorder)
        "نَّ",
        "Å",                         # A + ring -> Å
        "Å",                          # ANGSTROM SIGN (NFC -> Å)
        "q̣̇",                   # ccc ordering
        "q̣̇",
        "한글",                    # hangul precomposed
        "한",              # hangul jamo -> composed
        "",
        "plain ascii text",
        "مرحبا hello",
    ]
    # random mixed strings: latin letters, combining marks, arabic letters
    pools = [
        list("abcdefgh"),
        ["́", "̀", "̣", "̇"],
        ["ا", "ب", "ت", "ي", "و", "ٔ", "َ", "ِ"],
        [" ", "\t"],
    ]
    for _ in range(60):
        n = rng.randint(1, 24)
        s = "".join(rng.choice(rng.choice(pools)) for _ in range(n))
        cases.append(s)
    with open(OUT / "nfc_cases.jsonl", "w", encoding="utf-8") as f:
        for s in cases:
            f.write(json.dumps({"input": s, "nfc": unicodedata.normalize("NFC", s)},
                               ensure_ascii=False) + "\n")


WORDS_EN = "time people year way day man thing world life hand part child eye woman place work week case point number".split()
WORDS_AR = "مرحبا كيف حالك اليوم جميل شكرا بلد بيت طعام مدينة".split()
SPACES = [" ", "  ", "\t", "\n", " \n ", " ", "  "]


def wordcount_cases():
    docs = []
    for i in range(50):
        n = rng.randint(0, 40)
        parts = []
        for _ in range(n):
            pool = WORDS_AR if rng.random() < 0.4 else WORDS_EN
            parts.append(rng.choice(pool))
        sep_text = rng.choice(SPACES).join(parts)
        if rng.random() < 0.3:
            sep_text = rng.choice(SPACES) + sep_text + rng.choice(SPACES)
        # oracle: naive split on unicode whitespace
        count = len(sep_text.split())
        docs.append({"text": sep_text, "expected_words": count})
    with open(OUT / "wordcount_cases.jsonl", "w", encoding="utf-8") as f:
        for d in docs:
            f.write(json.dumps(d, ensure_ascii=False) + "\n")


if __name__ == "__main__":
    nfc_cases()
    wordcount_cases()
    print("wrote", OUT)
