#!/usr/bin/env python3
"""Generates the synthetic survey fixture plus independent oracles.

Emits under tests/fixtures/persona/:
  survey5000.csv        5,000 synthetic respondents, comma-separated
  survey20.tsv          first 20 of the same records, tab-separated
  expected_counts.json  respondent_id -> number of templated statements
  expected_texts.json   first 3 records: exact long_description + per-group
                        statement lists, reconstructed here without touching
                        the C++ implementation
  refine_transcript.jsonl  10 {long, refined} pairs standing in for recorded
                        teacher summarizations of real long descriptions

Textualization contract this oracle implements independently:
  * groups in fixed order demographics, socioeconomic, moral_values
  * within a group, questions in registry file order
  * a statement is emitted for every answer code >= 0 that has a template
  * negative codes are survey non-answers and are skipped
  * statements are joined with single spaces into one paragraph
"""

import csv
import json
import random
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
OUT = ROOT / "tests" / "fixtures" / "persona"
GROUP_ORDER = ["demographics", "socioeconomic", "moral_values"]
ALWAYS_ANSWERED = {"Q260", "Q279", "Q1"}  # keeps every group nonempty


def load_registry():
    with open(ROOT / "configs" / "wvs_questions.json") as f:
        reg = json.load(f)
    questions = reg["questions"]
    for q in questions:
        q["domain"] = sorted(int(c) for c in q["statements"])
    return questions


def gen_records(questions, n, rng):
    records = []
    for i in range(1, n + 1):
        rec = {
            "respondent_id": f"R{i:05d}",
            "country": "Egypt" if rng.random() < 0.5 else "Morocco",
            "weight": f"{rng.uniform(0.5, 2.0):.4f}",
            "answers": {},
        }
        for q in questions:
            r = rng.random()
            if q["id"] in ALWAYS_ANSWERED:
                rec["answers"][q["id"]] = rng.choice(q["domain"])
            elif r < 0.06:
                rec["answers"][q["id"]] = rng.choice([-1, -2])
            elif r < 0.10:
                pass  # question not asked; blank cell
            else:
                rec["answers"][q["id"]] = rng.choice(q["domain"])
        records.append(rec)
    return records


def write_table(path, records, questions, delimiter):
    with open(path, "w", newline="") as f:
        w = csv.writer(f, delimiter=delimiter, lineterminator="\n")
        w.writerow(["respondent_id", "country", "weight"] + [q["id"] for q in questions])
        for rec in records:
            row = [rec["respondent_id"], rec["country"], rec["weight"]]
            for q in questions:
                code = rec["answers"].get(q["id"])
                row.append("" if code is None else str(code))
            w.writerow(row)


def statements_for(rec, questions):
    """The oracle textualization: per-group statement lists."""
    groups = {g: [] for g in GROUP_ORDER}
    for g in GROUP_ORDER:
        for q in questions:
            if q["group"] != g:
                continue
            code = rec["answers"].get(q["id"])
            if code is None or code < 0:
                continue
            groups[g].append(q["statements"][str(code)])
    return groups


def long_description(rec, questions):
    groups = statements_for(rec, questions)
    return " ".join(s for g in GROUP_ORDER for s in groups[g])


AGE_PHRASE = {
    1: "in their late teens or early twenties",
    2: "in their late twenties or early thirties",
    3: "in their late thirties or early forties",
    4: "around fifty",
    5: "around sixty",
    6: "past sixty-five",
}
EMPLOY_PHRASE = {
    1: "working full time",
    2: "working part time",
    3: "self-employed",
    4: "retired",
    5: "keeping the household",
    6: "studying",
    7: "out of work",
    8: "in an unusual work situation",
}


def recorded_refinement(rec):
    """Hand-shaped concise summaries standing in for recorded teacher output."""
    sex = "man" if rec["answers"].get("Q260") == 1 else "woman"
    age = AGE_PHRASE.get(rec["answers"].get("X003R"), "of unstated age")
    employ = EMPLOY_PHRASE.get(rec["answers"].get("Q279"), "with unclear work")
    fam = rec["answers"].get("Q1", 4)
    fam_phrase = "family comes first" if fam <= 2 else "family matters little"
    trust = rec["answers"].get("Q57")
    trust_phrase = (
        "they trust people easily" if trust == 1 else "they stay wary of strangers"
    )
    god = rec["answers"].get("Q164")
    god_phrase = ""
    if god is not None and god >= 0:
        god_phrase = (
            " Faith anchors their days." if god >= 7 else " Religion stays in the background."
        )
    return (
        f"A {sex} from {rec['country']}, {age}, {employ}; "
        f"{fam_phrase} and {trust_phrase}.{god_phrase}"
    )


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    questions = load_registry()
    rng = random.Random(273551)
    records = gen_records(questions, 5000, rng)

    write_table(OUT / "survey5000.csv", records, questions, ",")
    write_table(OUT / "survey20.tsv", records[:20], questions, "\t")

    counts = {
        r["respondent_id"]: sum(
            1 for c in r["answers"].values() if c >= 0
        )
        for r in records
    }
    with open(OUT / "expected_counts.json", "w") as f:
        json.dump(counts, f, indent=1)

    texts = []
    for rec in records[:3]:
        texts.append(
            {
                "respondent_id": rec["respondent_id"],
                "attributes": statements_for(rec, questions),
                "long_description": long_description(rec, questions),
            }
        )
    with open(OUT / "expected_texts.json", "w") as f:
        json.dump(texts, f, indent=1, ensure_ascii=False)

    with open(OUT / "refine_transcript.jsonl", "w") as f:
        for rec in records[:10]:
            long = long_description(rec, questions)
            refined = recorded_refinement(rec)
            assert refined and len(refined.split()) < len(long.split()), rec[
                "respondent_id"
            ]
            f.write(json.dumps({"long": long, "refined": refined}, ensure_ascii=False) + "\n")

    # Sanity: every record keeps all three groups nonempty.
    for rec in records:
        groups = statements_for(rec, questions)
        assert all(groups[g] for g in GROUP_ORDER), rec["respondent_id"]

    egy = sum(1 for r in records if r["country"] == "Egypt")
    print(f"records: {len(records)} (Egypt {egy}, Morocco {len(records) - egy})")
    print(f"statement counts: min {min(counts.values())}, max {max(counts.values())}")


if __name__ == "__main__":
    main()
