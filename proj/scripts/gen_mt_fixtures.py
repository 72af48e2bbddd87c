#!/usr/bin/env python3
"""Generates the structured-translation fixture and its field-wise oracle.

Emits under tests/fixtures/mt/:
  mcq50.jsonl        50 MCQ records: id, subject, question, options[4],
                     answer_index, difficulty
  mcq50_upper.jsonl  expected output of a mock "uppercase" translator over the
                     content keys (question, options) with every structural
                     field copied verbatim — computed here, never via the C++
"""

import json
import random
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
OUT = ROOT / "tests" / "fixtures" / "mt"

SUBJECTS = ["history", "geography", "biology", "mathematics", "literature"]
TOPICS = [
    "the river delta", "trade routes", "plant cells", "prime numbers",
    "old poetry", "mountain passes", "desert climates", "folk tales",
    "irrigation", "the spice trade", "bird migration", "square roots",
]
CONTENT_KEYS = ("question", "options")


def make_items(rng):
    items = []
    for i in range(50):
        topic = rng.choice(TOPICS)
        other = rng.choice([t for t in TOPICS if t != topic])
        options = [
            f"it concerns {topic}",
            f"it concerns {other}",
            f"nobody studied {topic} before",
            f"records about {other} were lost",
        ]
        rng.shuffle(options)
        items.append(
            {
                "id": f"mcq-{i:03d}",
                "subject": rng.choice(SUBJECTS),
                "question": f"Which statement about {topic} is supported by lesson {i}?",
                "options": options,
                "answer_index": rng.randrange(4),
                "difficulty": rng.randrange(1, 6),
            }
        )
    return items


def uppercase_expected(item):
    out = dict(item)
    for key in CONTENT_KEYS:
        v = item[key]
        out[key] = v.upper() if isinstance(v, str) else [s.upper() for s in v]
    return out


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    rng = random.Random(918273)
    items = make_items(rng)
    with open(OUT / "mcq50.jsonl", "w") as f:
        for it in items:
            f.write(json.dumps(it, sort_keys=True) + "\n")
    with open(OUT / "mcq50_upper.jsonl", "w") as f:
        for it in items:
            f.write(json.dumps(uppercase_expected(it), sort_keys=True) + "\n")
    print(f"wrote {len(items)} MCQ records")


if __name__ == "__main__":
    main()
