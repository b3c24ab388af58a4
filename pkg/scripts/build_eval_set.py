#!/usr/bin/env python3
"""Regenerate the labeled review set used by `oracleloom eval-sentiment`.

Two hundred delivery-platform reviews, half positive and half negative,
composed from curated clause banks. Labels record the writer's intent,
never the scorer's output; a handful of slang and sarcasm lines are kept
in deliberately so a perfect score is impossible. Run from the
repository root:

    python3 scripts/build_eval_set.py

Output is deterministic; the generated file is committed so installs
never need this script.
"""

from __future__ import annotations

import json
import random
from pathlib import Path

OUT_PATH = (
    Path(__file__).resolve().parent.parent
    / "src"
    / "oracleloom"
    / "data"
    / "eval_reviews.jsonl"
)

SEED = 20240514

DISHES = [
    "the ramen",
    "the pizza",
    "the pad thai",
    "the burrito",
    "the sushi platter",
    "the noodles",
    "the curry",
    "the dumplings",
    "the fried rice",
    "the sandwich",
    "the wings",
    "the pho",
    "the tacos",
    "the salad bowl",
]

COURIERS = [
    "the driver",
    "the courier",
    "the rider",
    "the delivery person",
]

# Every clause leans clearly one way under the bundled lexicon's
# vocabulary; mixed-signal phrasing ("quick refund") stays mild enough
# that the strong half still decides the sentence.

POS_CLAUSES = [
    "{dish} was delicious",
    "{dish} arrived warm and fresh",
    "{dish} was tasty and the portions were generous",
    "{dish} came out perfect again",
    "{dish} smelled fragrant the moment I opened the bag",
    "{courier} was friendly and right on time",
    "{courier} was polite and prompt",
    "{courier} was kind enough to wait while I found the entrance",
    "delivery was fast and the packaging was clean",
    "really impressed with the quick turnaround",
    "excellent service from start to finish",
    "great value for the price",
    "the app is smooth and convenient",
    "wonderful flavors, will order again",
    "amazing food and careful packaging",
    "fantastic experience, highly recommend",
    "superb broth, perfect spice level",
    "love this place, the menu is incredible",
    "support was helpful and sorted everything quickly",
    "quick refund and courteous support when a side was missed",
    "not bad at all for the price",
    "never late and never cold",
    "fresh ingredients and honest portions",
    "reliable couriers every single time",
    "seamless checkout and speedy drop off",
    "delightful dumplings and swift delivery",
    "the salad was crisp and the bread came warm",
    "happy with every order so far",
    "cheerful driver and spotless presentation",
    "the tracking works and the food shows up satisfying and warm",
    "genuinely impressive consistency week after week",
    "smooth reorder flow, zero friction",
    "the kitchen clearly cares, everything tasted homemade",
    "flawless pickup and a generous portion",
    "prompt, professional, and the soup stayed warm",
]

NEG_CLAUSES = [
    "{dish} arrived cold and soggy",
    "{dish} was bland and overpriced",
    "{dish} was stale and the sides were inedible",
    "{dish} smelled sour so I threw it out",
    "{dish} was a greasy mess by the time it arrived",
    "{courier} was rude and the order was late",
    "{courier} left the bag in the rain and the food was ruined",
    "{courier} was careless with the boxes",
    "terrible experience, the bag was leaking",
    "awful packaging, sauce everywhere",
    "the app keeps crashing during checkout",
    "support ignored my complaint for a week",
    "worst delivery service in town",
    "disgusting smell and filthy packaging",
    "customer service was useless",
    "the burger was lukewarm and the fries were soggy",
    "ninety minute wait, totally unacceptable",
    "late cancellation and a slow refund",
    "mediocre at best, the sauce was tasteless",
    "broken seals and a squashed box",
    "frustrating app, the tracking always freezes",
    "horrible wait times and sloppy packing",
    "got food poisoning from the chicken",
    "they overcharged me and refused a refund",
    "slow delivery and a chaotic refund process",
    "bland, greasy, and nothing like the photos",
    "not fresh, not warm, not worth reordering",
    "the premium subscription is a scam",
    "cold noodles, rude replies, zero apology from support",
    "disappointing portions and a dirty container",
    "the driver was unprofessional and the food was wrecked",
    "pathetic portion for the price",
    "every order lately has been wrong or delayed",
    "the soup spilled and support was unhelpful",
    "gross packaging and a nasty smell",
]

# Kept failures: slang and sarcasm the lexicon cannot read. Five per
# label caps the reachable accuracy at 0.95.

HARD_POS = [
    "these dumplings slapped, ten out of ten",
    "chef vibes only, absolutely elite",
    "i would crawl through traffic for their ramen",
    "the portions could feed a small army, zero complaints",
    "ordered three nights in a row, that should tell you everything",
]

HARD_NEG = [
    "oh great, another hour in the rain",
    "the bao was mid and the fries were giving cardboard",
    "my order never arrived",
    "sure, 'fast' delivery, if two hours counts",
    "this app is something else, truly an experience",
]

JOINS = [", and ", ". ", " and "]

PER_LABEL = 100


def _fill(clause: str, rng: random.Random) -> str:
    return clause.format(dish=rng.choice(DISHES), courier=rng.choice(COURIERS))


def _compose(clauses: list[str], rng: random.Random) -> str:
    if rng.random() < 0.6:
        text = _fill(rng.choice(clauses), rng)
    else:
        first, second = rng.sample(clauses, 2)
        join = rng.choice(JOINS)
        second_txt = _fill(second, rng)
        if join == ". ":
            second_txt = second_txt[0].upper() + second_txt[1:]
        text = _fill(first, rng) + join + second_txt
    return text[0].upper() + text[1:] + "."


def build() -> list[dict[str, str]]:
    rng = random.Random(SEED)
    rows: list[dict[str, str]] = []
    for label, clauses, hard in (
        ("positive", POS_CLAUSES, HARD_POS),
        ("negative", NEG_CLAUSES, HARD_NEG),
    ):
        texts = [h[0].upper() + h[1:] + "." for h in hard]
        seen = set(texts)
        while len(texts) < PER_LABEL:
            text = _compose(clauses, rng)
            if text in seen:
                continue
            seen.add(text)
            texts.append(text)
        rows.extend({"text": t, "label": label} for t in texts)
    # interleave the two labels so truncated reads stay balanced
    rng.shuffle(rows)
    return rows


def measure(rows: list[dict[str, str]]) -> float:
    """Accuracy under the bundled lexicon with polarity-only weights.
    A regeneration guard, not the label source."""
    from oracleloom.model import ScoreWeights
    from oracleloom.sentiment import classify, default_lexicon, score_document

    lexicon = default_lexicon()
    weights = ScoreWeights()
    hits = 0
    for row in rows:
        scored = score_document(row["text"], lexicon).with_weights(weights)
        if classify(scored.score).value == row["label"]:
            hits += 1
    return hits / len(rows)


def main() -> None:
    rows = build()
    assert len(rows) == 2 * PER_LABEL
    accuracy = measure(rows)
    print(f"accuracy under default lexicon: {accuracy:.3f} on {len(rows)} rows")
    assert accuracy >= 0.75, "clause banks drifted; fix wording before freezing"
    with OUT_PATH.open("w", encoding="ascii") as fh:
        for row in rows:
            fh.write(json.dumps(row, ensure_ascii=True, sort_keys=True) + "\n")
    print(f"wrote {OUT_PATH}")


if __name__ == "__main__":
    main()
