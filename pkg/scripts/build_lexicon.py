#!/usr/bin/env python3
"""Regenerate the default English lexicon and stopword list.

The lexicon is a plain four-column TSV (token, polarity, subjectivity,
intensity) expanded from curated stem tables by regular morphology. Run
from the repository root:

    python3 scripts/build_lexicon.py

Output is deterministic; the generated files are committed so installs
never need this script.
"""

from __future__ import annotations

from pathlib import Path

OUT_DIR = Path(__file__).resolve().parent.parent / "src" / "oracleloom" / "data"

# Form codes: l=+ly  n=+ness  s=+s  d=+ed  g=+ing  r=+er/+est
# Stems are chosen so the regular rules below produce real words; anything
# irregular simply is not flagged.

STRONG_POS_ADJ = [
    ("amazing", 0.95, 0.90, "l"),
    ("excellent", 0.90, 0.85, "l"),
    ("outstanding", 0.90, 0.85, "l"),
    ("wonderful", 0.85, 0.90, "l"),
    ("fantastic", 0.90, 0.90, ""),
    ("incredible", 0.90, 0.90, ""),
    ("superb", 0.90, 0.85, "l"),
    ("brilliant", 0.90, 0.85, "l"),
    ("exceptional", 0.85, 0.80, "l"),
    ("magnificent", 0.90, 0.85, "l"),
    ("perfect", 0.95, 0.90, "l"),
    ("flawless", 0.90, 0.85, "l"),
    ("stellar", 0.85, 0.80, ""),
    ("phenomenal", 0.90, 0.90, "l"),
    ("marvelous", 0.85, 0.90, "l"),
    ("spectacular", 0.88, 0.85, "l"),
    ("delightful", 0.80, 0.85, "l"),
    ("terrific", 0.85, 0.85, ""),
    ("splendid", 0.82, 0.85, "l"),
    ("glorious", 0.82, 0.85, "l"),
    ("masterful", 0.80, 0.80, "l"),
    ("extraordinary", 0.85, 0.85, ""),
    ("beautiful", 0.80, 0.85, "l"),
    ("gorgeous", 0.82, 0.85, ""),
    ("stunning", 0.85, 0.85, "l"),
    ("breathtaking", 0.85, 0.85, ""),
    ("dazzling", 0.80, 0.85, ""),
    ("exquisite", 0.82, 0.85, "l"),
    ("immaculate", 0.80, 0.80, "l"),
    ("impeccable", 0.82, 0.80, "l"),
    ("sensational", 0.85, 0.88, "l"),
    ("thrilling", 0.80, 0.85, "l"),
    ("triumphant", 0.80, 0.80, "l"),
    ("unbeatable", 0.85, 0.82, ""),
    ("unmatched", 0.80, 0.75, ""),
    ("wondrous", 0.80, 0.88, "l"),
    ("heavenly", 0.78, 0.88, ""),
    ("ideal", 0.80, 0.75, "l"),
    ("awesome", 0.85, 0.90, "l"),
    ("epic", 0.75, 0.85, ""),
]

MOD_POS_ADJ = [
    ("good", 0.65, 0.60, "n"),
    ("great", 0.80, 0.75, "n"),
    ("nice", 0.60, 0.70, "lnr"),
    ("fine", 0.50, 0.55, "l"),
    ("pleasant", 0.60, 0.70, "ln"),
    ("enjoyable", 0.65, 0.75, ""),
    ("satisfying", 0.60, 0.65, "l"),
    ("solid", 0.55, 0.50, "l"),
    ("reliable", 0.60, 0.50, ""),
    ("dependable", 0.58, 0.50, ""),
    ("friendly", 0.60, 0.65, "n"),
    ("helpful", 0.62, 0.60, "ln"),
    ("cheerful", 0.62, 0.75, "ln"),
    ("happy", 0.70, 0.80, "ln"),
    ("glad", 0.60, 0.75, "l"),
    ("pleased", 0.60, 0.70, ""),
    ("delighted", 0.72, 0.80, "l"),
    ("grateful", 0.62, 0.75, "ln"),
    ("thankful", 0.60, 0.75, "ln"),
    ("impressive", 0.68, 0.70, "l"),
    ("impressed", 0.62, 0.70, ""),
    ("remarkable", 0.70, 0.75, ""),
    ("notable", 0.55, 0.55, "l"),
    ("capable", 0.55, 0.45, "l"),
    ("competent", 0.55, 0.50, "l"),
    ("skilled", 0.58, 0.50, ""),
    ("skillful", 0.58, 0.55, "l"),
    ("talented", 0.62, 0.60, ""),
    ("efficient", 0.60, 0.50, "l"),
    ("effective", 0.60, 0.50, "l"),
    ("productive", 0.58, 0.50, "l"),
    ("valuable", 0.60, 0.55, ""),
    ("worthwhile", 0.58, 0.60, ""),
    ("worthy", 0.55, 0.60, ""),
    ("beneficial", 0.60, 0.55, "l"),
    ("favorable", 0.62, 0.60, "l"),
    ("positive", 0.65, 0.60, "l"),
    ("upbeat", 0.60, 0.70, ""),
    ("optimistic", 0.62, 0.70, "l"),
    ("hopeful", 0.58, 0.70, "ln"),
    ("promising", 0.60, 0.60, "l"),
    ("encouraging", 0.60, 0.60, "l"),
    ("supportive", 0.58, 0.55, "l"),
    ("generous", 0.60, 0.65, "l"),
    ("kind", 0.60, 0.70, "ln"),
    ("gentle", 0.55, 0.65, "ln"),
    ("warm", 0.55, 0.65, "lnr"),
    ("welcoming", 0.58, 0.60, ""),
    ("comfortable", 0.58, 0.60, ""),
    ("cozy", 0.55, 0.70, "r"),
    ("clean", 0.50, 0.40, "lnr"),
    ("fresh", 0.55, 0.50, "lnr"),
    ("tasty", 0.62, 0.75, "r"),
    ("delicious", 0.70, 0.80, "l"),
    ("flavorful", 0.62, 0.70, ""),
    ("savory", 0.55, 0.65, ""),
    ("crisp", 0.50, 0.55, "lr"),
    ("tender", 0.50, 0.55, "ln"),
    ("juicy", 0.52, 0.65, "r"),
    ("affordable", 0.55, 0.50, ""),
    ("cheap", 0.35, 0.55, "lr"),
    ("fair", 0.50, 0.50, "ln"),
    ("honest", 0.60, 0.55, "l"),
    ("genuine", 0.58, 0.55, "l"),
    ("authentic", 0.58, 0.55, "l"),
    ("trustworthy", 0.62, 0.50, ""),
    ("credible", 0.55, 0.45, "l"),
    ("innovative", 0.60, 0.55, "l"),
    ("creative", 0.58, 0.60, "l"),
    ("elegant", 0.60, 0.65, "l"),
    ("graceful", 0.58, 0.65, "l"),
    ("charming", 0.60, 0.70, "l"),
    ("attractive", 0.58, 0.65, "l"),
    ("appealing", 0.58, 0.60, "l"),
    ("inviting", 0.55, 0.60, "l"),
    ("vibrant", 0.58, 0.60, "l"),
    ("lively", 0.55, 0.60, ""),
    ("energetic", 0.55, 0.60, "l"),
    ("robust", 0.55, 0.45, "l"),
    ("sturdy", 0.50, 0.45, "r"),
    ("durable", 0.52, 0.45, ""),
    ("smooth", 0.52, 0.50, "lnr"),
    ("fast", 0.50, 0.40, "r"),
    ("quick", 0.50, 0.40, "lr"),
    ("prompt", 0.52, 0.45, "l"),
    ("timely", 0.50, 0.40, ""),
    ("convenient", 0.55, 0.50, "l"),
    ("handy", 0.50, 0.55, "r"),
    ("useful", 0.55, 0.50, "ln"),
    ("practical", 0.52, 0.45, "l"),
    ("smart", 0.55, 0.55, "lr"),
    ("clever", 0.55, 0.60, "lr"),
    ("wise", 0.55, 0.55, "lr"),
    ("thoughtful", 0.55, 0.60, "ln"),
    ("polite", 0.55, 0.55, "ln"),
    ("courteous", 0.55, 0.55, "l"),
    ("professional", 0.55, 0.45, "l"),
    ("memorable", 0.58, 0.65, ""),
]

MILD_POS_ADJ = [
    ("okay", 0.20, 0.50, ""),
    ("decent", 0.35, 0.50, "l"),
    ("acceptable", 0.30, 0.45, "l"),
    ("adequate", 0.28, 0.45, "l"),
    ("reasonable", 0.35, 0.50, "l"),
    ("passable", 0.25, 0.50, "l"),
    ("tolerable", 0.22, 0.50, "l"),
    ("workable", 0.28, 0.45, ""),
    ("stable", 0.30, 0.35, ""),
    ("steady", 0.30, 0.35, "l"),
    ("consistent", 0.32, 0.35, "l"),
    ("standard", 0.20, 0.30, ""),
    ("normal", 0.18, 0.30, "l"),
    ("typical", 0.15, 0.35, "l"),
    ("average", 0.15, 0.40, ""),
    ("moderate", 0.20, 0.40, "l"),
    ("modest", 0.22, 0.45, "l"),
    ("mild", 0.20, 0.40, "lr"),
    ("calm", 0.30, 0.45, "lnr"),
    ("quiet", 0.25, 0.45, "lr"),
    ("peaceful", 0.35, 0.55, "l"),
    ("safe", 0.35, 0.40, "lr"),
    ("secure", 0.35, 0.40, "l"),
    ("simple", 0.25, 0.40, "r"),
    ("straightforward", 0.30, 0.40, "l"),
    ("clear", 0.30, 0.40, "lr"),
    ("tidy", 0.28, 0.45, "r"),
    ("neat", 0.30, 0.50, "lr"),
    ("orderly", 0.28, 0.40, ""),
    ("organized", 0.30, 0.40, ""),
    ("punctual", 0.30, 0.40, "l"),
    ("responsive", 0.35, 0.40, "l"),
    ("attentive", 0.35, 0.45, "l"),
    ("careful", 0.30, 0.45, "l"),
    ("thorough", 0.32, 0.40, "l"),
    ("detailed", 0.28, 0.35, ""),
    ("rich", 0.35, 0.50, "lr"),
    ("ample", 0.30, 0.40, ""),
    ("plentiful", 0.32, 0.45, ""),
    ("abundant", 0.32, 0.45, "l"),
    ("generally", 0.15, 0.40, ""),
    ("improved", 0.40, 0.45, ""),
    ("improving", 0.38, 0.45, ""),
    ("recovering", 0.30, 0.40, ""),
    ("growing", 0.30, 0.35, ""),
    ("rising", 0.25, 0.35, ""),
    ("popular", 0.40, 0.50, "l"),
    ("trendy", 0.35, 0.55, ""),
    ("familiar", 0.25, 0.45, "l"),
    ("accessible", 0.30, 0.40, ""),
    ("open", 0.25, 0.35, "l"),
    ("flexible", 0.32, 0.40, ""),
    ("balanced", 0.30, 0.40, ""),
    ("healthy", 0.40, 0.45, ""),
    ("nutritious", 0.40, 0.45, ""),
    ("wholesome", 0.38, 0.50, ""),
    ("bright", 0.35, 0.50, "lnr"),
    ("sunny", 0.35, 0.50, "r"),
    ("sweet", 0.40, 0.60, "lnr"),
    ("cool", 0.30, 0.50, "lr"),
]

POS_VERBS = [
    ("enjoy", 0.60, 0.65, "sdg"),
    ("love", 0.80, 0.85, "sdg"),
    ("like", 0.50, 0.60, "sdg"),
    ("adore", 0.75, 0.85, "sdg"),
    ("admire", 0.62, 0.70, "sdg"),
    ("appreciate", 0.60, 0.65, "sdg"),
    ("praise", 0.62, 0.65, "sdg"),
    ("applaud", 0.62, 0.65, "sdg"),
    ("celebrate", 0.60, 0.60, "sdg"),
    ("recommend", 0.62, 0.55, "sdg"),
    ("endorse", 0.58, 0.55, "sdg"),
    ("approve", 0.55, 0.50, "sdg"),
    ("welcome", 0.52, 0.50, "sdg"),
    ("succeed", 0.60, 0.45, "sdg"),
    ("thrive", 0.62, 0.50, "sdg"),
    ("flourish", 0.62, 0.55, "sdg"),
    ("prosper", 0.60, 0.50, "sdg"),
    ("excel", 0.65, 0.55, "s"),
    ("shine", 0.55, 0.55, "sg"),
    ("impress", 0.60, 0.60, "sdg"),
    ("delight", 0.65, 0.70, "sdg"),
    ("please", 0.55, 0.60, "sdg"),
    ("satisfy", 0.55, 0.55, "sg"),
    ("amaze", 0.70, 0.75, "sdg"),
    ("astonish", 0.65, 0.75, "sdg"),
    ("inspire", 0.62, 0.65, "sdg"),
    ("encourage", 0.55, 0.55, "sdg"),
    ("motivate", 0.55, 0.55, "sdg"),
    ("uplift", 0.58, 0.60, "sdg"),
    ("reassure", 0.52, 0.55, "sdg"),
    ("comfort", 0.52, 0.55, "sdg"),
    ("support", 0.50, 0.45, "sdg"),
    ("assist", 0.48, 0.40, "sdg"),
    ("help", 0.50, 0.40, "sdg"),
    ("benefit", 0.52, 0.45, "sdg"),
    ("improve", 0.52, 0.45, "sdg"),
    ("enhance", 0.52, 0.45, "sdg"),
    ("upgrade", 0.50, 0.45, "sdg"),
    ("boost", 0.52, 0.45, "sdg"),
    ("strengthen", 0.50, 0.45, "sdg"),
    ("streamline", 0.45, 0.40, "sdg"),
    ("simplify", 0.45, 0.40, "sg"),
    ("fix", 0.42, 0.35, "dg"),
    ("fixes", 0.42, 0.35, ""),
    ("resolve", 0.45, 0.35, "sdg"),
    ("solve", 0.48, 0.35, "sdg"),
    ("repair", 0.40, 0.35, "sdg"),
    ("restore", 0.42, 0.35, "sdg"),
    ("recover", 0.40, 0.35, "sdg"),
    ("win", 0.60, 0.50, "sg"),
    ("gain", 0.45, 0.40, "sdg"),
    ("grow", 0.42, 0.35, "sg"),
    ("expand", 0.40, 0.35, "sdg"),
    ("surge", 0.40, 0.40, "sdg"),
    ("rally", 0.40, 0.40, "g"),
    ("recommendation", 0.55, 0.50, "s"),
    ("reward", 0.52, 0.50, "sdg"),
    ("treasure", 0.58, 0.65, "sdg"),
    ("value", 0.48, 0.45, "sdg"),
    ("trust", 0.52, 0.50, "sdg"),
    ("respect", 0.52, 0.50, "sdg"),
    ("honor", 0.52, 0.50, "sdg"),
    ("favor", 0.48, 0.50, "sdg"),
    ("attract", 0.42, 0.40, "sdg"),
    ("captivate", 0.58, 0.65, "sdg"),
    ("charm", 0.55, 0.60, "sdg"),
    ("dazzle", 0.60, 0.70, "sdg"),
    ("exceed", 0.50, 0.45, "sdg"),
    ("surpass", 0.52, 0.45, "dg"),
    ("outperform", 0.52, 0.45, "sdg"),
]

POS_NOUNS = [
    ("success", 0.60, 0.45, ""),
    ("successes", 0.60, 0.45, ""),
    ("achievement", 0.58, 0.45, "s"),
    ("accomplishment", 0.58, 0.45, "s"),
    ("victory", 0.62, 0.50, ""),
    ("victories", 0.62, 0.50, ""),
    ("triumph", 0.62, 0.55, "s"),
    ("breakthrough", 0.60, 0.50, "s"),
    ("milestone", 0.50, 0.40, "s"),
    ("progress", 0.50, 0.40, ""),
    ("growth", 0.45, 0.35, ""),
    ("improvement", 0.48, 0.40, "s"),
    ("advantage", 0.48, 0.45, "s"),
    ("strength", 0.45, 0.40, "s"),
    ("quality", 0.45, 0.45, ""),
    ("excellence", 0.65, 0.55, ""),
    ("merit", 0.45, 0.45, "s"),
    ("virtue", 0.48, 0.50, "s"),
    ("praise", 0.55, 0.55, ""),
    ("acclaim", 0.58, 0.55, ""),
    ("applause", 0.55, 0.55, ""),
    ("delight", 0.60, 0.70, ""),
    ("joy", 0.65, 0.75, "s"),
    ("happiness", 0.65, 0.75, ""),
    ("pleasure", 0.58, 0.70, "s"),
    ("satisfaction", 0.55, 0.60, ""),
    ("comfort", 0.48, 0.55, ""),
    ("relief", 0.48, 0.55, ""),
    ("hope", 0.50, 0.60, "s"),
    ("optimism", 0.55, 0.60, ""),
    ("confidence", 0.50, 0.50, ""),
    ("enthusiasm", 0.55, 0.65, ""),
    ("excitement", 0.55, 0.65, ""),
    ("passion", 0.52, 0.65, ""),
    ("charm", 0.50, 0.60, ""),
    ("beauty", 0.55, 0.65, ""),
    ("elegance", 0.52, 0.60, ""),
    ("freshness", 0.48, 0.50, ""),
    ("bargain", 0.45, 0.50, "s"),
    ("discount", 0.38, 0.40, "s"),
    ("bonus", 0.45, 0.45, ""),
    ("bonuses", 0.45, 0.45, ""),
    ("perk", 0.42, 0.45, "s"),
    ("gem", 0.55, 0.60, "s"),
    ("favorite", 0.55, 0.60, "s"),
    ("winner", 0.55, 0.50, "s"),
    ("champion", 0.55, 0.50, "s"),
    ("hero", 0.52, 0.55, ""),
    ("heroes", 0.52, 0.55, ""),
    ("star", 0.48, 0.50, "s"),
    ("highlight", 0.45, 0.45, "s"),
    ("upside", 0.42, 0.45, ""),
    ("boom", 0.45, 0.45, ""),
    ("recovery", 0.42, 0.40, ""),
    ("rebound", 0.40, 0.40, ""),
    ("innovation", 0.48, 0.45, "s"),
    ("opportunity", 0.45, 0.45, ""),
    ("opportunities", 0.45, 0.45, ""),
    ("support", 0.40, 0.40, ""),
    ("goodwill", 0.48, 0.50, ""),
]

STRONG_NEG_ADJ = [
    ("terrible", -0.90, 0.90, "l"),
    ("horrible", -0.90, 0.90, "l"),
    ("awful", -0.88, 0.90, "l"),
    ("dreadful", -0.85, 0.88, "l"),
    ("atrocious", -0.88, 0.88, "l"),
    ("abysmal", -0.88, 0.85, "l"),
    ("appalling", -0.85, 0.88, "l"),
    ("horrendous", -0.88, 0.88, "l"),
    ("disastrous", -0.85, 0.80, "l"),
    ("catastrophic", -0.88, 0.80, "l"),
    ("dire", -0.75, 0.70, "l"),
    ("grim", -0.70, 0.70, "l"),
    ("ghastly", -0.80, 0.85, ""),
    ("hideous", -0.80, 0.85, "l"),
    ("repulsive", -0.82, 0.85, "l"),
    ("revolting", -0.82, 0.85, ""),
    ("disgusting", -0.85, 0.88, "l"),
    ("vile", -0.82, 0.85, "l"),
    ("foul", -0.75, 0.80, "l"),
    ("rotten", -0.75, 0.80, ""),
    ("wretched", -0.78, 0.85, "l"),
    ("miserable", -0.78, 0.85, "l"),
    ("unbearable", -0.80, 0.85, "l"),
    ("intolerable", -0.78, 0.82, "l"),
    ("unacceptable", -0.75, 0.75, "l"),
    ("inexcusable", -0.75, 0.78, "l"),
    ("outrageous", -0.75, 0.82, "l"),
    ("scandalous", -0.75, 0.80, "l"),
    ("shameful", -0.72, 0.80, "l"),
    ("disgraceful", -0.75, 0.80, "l"),
    ("deplorable", -0.78, 0.82, "l"),
    ("pathetic", -0.75, 0.85, "l"),
    ("useless", -0.72, 0.78, "l"),
    ("worthless", -0.75, 0.78, "l"),
    ("hopeless", -0.70, 0.78, "l"),
    ("ruined", -0.72, 0.70, ""),
    ("broken", -0.60, 0.55, ""),
    ("toxic", -0.70, 0.70, ""),
    ("brutal", -0.70, 0.75, "l"),
    ("cruel", -0.72, 0.78, "l"),
    ("vicious", -0.72, 0.78, "l"),
    ("savage", -0.68, 0.75, "l"),
    ("nightmarish", -0.80, 0.85, ""),
    ("devastating", -0.82, 0.80, "l"),
    ("crushing", -0.70, 0.72, "l"),
    ("fatal", -0.75, 0.65, "l"),
    ("deadly", -0.75, 0.65, ""),
    ("dangerous", -0.65, 0.60, "l"),
    ("hazardous", -0.65, 0.60, "l"),
    ("threatening", -0.62, 0.60, "l"),
    ("alarming", -0.62, 0.65, "l"),
    ("shocking", -0.65, 0.72, "l"),
    ("horrifying", -0.80, 0.85, "l"),
    ("terrifying", -0.78, 0.85, "l"),
    ("frightening", -0.70, 0.78, "l"),
    ("panicked", -0.60, 0.70, ""),
    ("furious", -0.72, 0.82, "l"),
    ("enraged", -0.72, 0.80, ""),
    ("hostile", -0.65, 0.70, "l"),
]

MOD_NEG_ADJ = [
    ("bad", -0.65, 0.65, "l"),
    ("poor", -0.60, 0.60, "l"),
    ("disappointing", -0.62, 0.70, "l"),
    ("disappointed", -0.60, 0.70, "l"),
    ("unsatisfying", -0.55, 0.65, ""),
    ("unsatisfactory", -0.58, 0.62, ""),
    ("subpar", -0.55, 0.60, ""),
    ("inferior", -0.55, 0.58, ""),
    ("mediocre", -0.45, 0.60, ""),
    ("lacking", -0.45, 0.55, ""),
    ("deficient", -0.50, 0.55, "l"),
    ("inadequate", -0.52, 0.58, "l"),
    ("insufficient", -0.48, 0.52, "l"),
    ("faulty", -0.55, 0.55, ""),
    ("defective", -0.58, 0.55, ""),
    ("flawed", -0.52, 0.55, ""),
    ("buggy", -0.52, 0.58, ""),
    ("unreliable", -0.55, 0.55, ""),
    ("unstable", -0.50, 0.52, ""),
    ("inconsistent", -0.45, 0.50, "l"),
    ("sloppy", -0.52, 0.62, "l"),
    ("careless", -0.52, 0.60, "ln"),
    ("negligent", -0.55, 0.58, "l"),
    ("reckless", -0.58, 0.62, "ln"),
    ("irresponsible", -0.55, 0.60, "l"),
    ("unprofessional", -0.55, 0.58, "l"),
    ("rude", -0.60, 0.70, "lnr"),
    ("impolite", -0.52, 0.62, "l"),
    ("disrespectful", -0.58, 0.65, "l"),
    ("arrogant", -0.55, 0.68, "l"),
    ("greedy", -0.55, 0.68, ""),
    ("selfish", -0.55, 0.68, "ln"),
    ("dishonest", -0.60, 0.62, "l"),
    ("deceptive", -0.58, 0.60, "l"),
    ("misleading", -0.55, 0.58, "l"),
    ("fraudulent", -0.65, 0.60, "l"),
    ("corrupt", -0.65, 0.62, "l"),
    ("unfair", -0.55, 0.60, "l"),
    ("unjust", -0.55, 0.60, "l"),
    ("biased", -0.48, 0.58, ""),
    ("unethical", -0.58, 0.60, "l"),
    ("shady", -0.52, 0.65, ""),
    ("suspicious", -0.45, 0.60, "l"),
    ("questionable", -0.42, 0.58, "l"),
    ("dubious", -0.45, 0.60, "l"),
    ("risky", -0.45, 0.52, ""),
    ("unsafe", -0.55, 0.55, "l"),
    ("dirty", -0.52, 0.60, "r"),
    ("filthy", -0.65, 0.70, "r"),
    ("messy", -0.48, 0.60, "r"),
    ("cluttered", -0.42, 0.55, ""),
    ("stale", -0.48, 0.58, "r"),
    ("bland", -0.42, 0.60, "lr"),
    ("tasteless", -0.48, 0.62, "l"),
    ("greasy", -0.45, 0.58, "r"),
    ("soggy", -0.45, 0.58, "r"),
    ("cold", -0.35, 0.45, "lnr"),
    ("lukewarm", -0.35, 0.50, ""),
    ("overpriced", -0.55, 0.58, ""),
    ("expensive", -0.40, 0.50, "l"),
    ("costly", -0.40, 0.48, ""),
    ("slow", -0.45, 0.48, "lnr"),
    ("sluggish", -0.48, 0.52, "l"),
    ("delayed", -0.42, 0.42, ""),
    ("late", -0.40, 0.42, "r"),
    ("crowded", -0.35, 0.45, ""),
    ("noisy", -0.40, 0.50, "r"),
    ("chaotic", -0.50, 0.58, "l"),
    ("confusing", -0.45, 0.55, "l"),
    ("complicated", -0.38, 0.50, ""),
    ("difficult", -0.40, 0.50, ""),
    ("tedious", -0.45, 0.58, "l"),
    ("boring", -0.48, 0.65, "l"),
    ("dull", -0.45, 0.60, "lnr"),
    ("tiresome", -0.45, 0.58, ""),
    ("annoying", -0.52, 0.65, "l"),
    ("irritating", -0.52, 0.65, "l"),
    ("frustrating", -0.55, 0.65, "l"),
    ("unpleasant", -0.52, 0.62, "l"),
    ("uncomfortable", -0.48, 0.60, ""),
    ("awkward", -0.42, 0.58, "l"),
    ("embarrassing", -0.48, 0.62, "l"),
    ("troubling", -0.50, 0.58, "l"),
    ("worrying", -0.48, 0.58, "l"),
    ("concerning", -0.42, 0.55, ""),
    ("upset", -0.50, 0.62, ""),
    ("angry", -0.58, 0.70, "l"),
    ("sad", -0.52, 0.68, "lnr"),
    ("unhappy", -0.55, 0.68, "l"),
    ("gloomy", -0.48, 0.62, "r"),
    ("bleak", -0.52, 0.60, "lr"),
    ("weak", -0.45, 0.50, "lnr"),
    ("fragile", -0.40, 0.48, ""),
    ("vulnerable", -0.40, 0.48, ""),
]

MILD_NEG_ADJ = [
    ("imperfect", -0.30, 0.50, "l"),
    ("limited", -0.28, 0.42, ""),
    ("restricted", -0.28, 0.40, ""),
    ("uneven", -0.30, 0.45, "l"),
    ("unclear", -0.30, 0.48, "l"),
    ("vague", -0.30, 0.50, "lr"),
    ("uncertain", -0.30, 0.50, "l"),
    ("unproven", -0.28, 0.48, ""),
    ("untested", -0.25, 0.45, ""),
    ("unfinished", -0.30, 0.45, ""),
    ("incomplete", -0.30, 0.45, ""),
    ("partial", -0.20, 0.40, "l"),
    ("minor", -0.18, 0.35, ""),
    ("marginal", -0.22, 0.40, "l"),
    ("negligible", -0.22, 0.42, ""),
    ("declining", -0.35, 0.42, ""),
    ("falling", -0.30, 0.38, ""),
    ("dropping", -0.28, 0.38, ""),
    ("shrinking", -0.30, 0.40, ""),
    ("stagnant", -0.35, 0.45, ""),
    ("flat", -0.20, 0.35, "r"),
    ("slowing", -0.28, 0.38, ""),
    ("weakening", -0.32, 0.42, ""),
    ("fading", -0.28, 0.42, ""),
    ("aging", -0.20, 0.38, ""),
    ("outdated", -0.35, 0.48, ""),
    ("obsolete", -0.40, 0.48, ""),
    ("ordinary", -0.15, 0.40, ""),
    ("plain", -0.15, 0.42, "r"),
    ("basic", -0.12, 0.35, ""),
    ("generic", -0.20, 0.42, ""),
    ("forgettable", -0.32, 0.55, ""),
    ("underwhelming", -0.40, 0.58, ""),
    ("overrated", -0.42, 0.60, ""),
    ("overhyped", -0.42, 0.60, ""),
    ("pricey", -0.32, 0.52, ""),
    ("busy", -0.15, 0.38, "r"),
    ("loud", -0.25, 0.45, "lr"),
    ("small", -0.15, 0.35, "r"),
    ("cramped", -0.35, 0.48, ""),
    ("distant", -0.20, 0.40, "l"),
    ("remote", -0.18, 0.38, "l"),
    ("inconvenient", -0.38, 0.50, "l"),
    ("clumsy", -0.35, 0.52, "l"),
    ("fussy", -0.30, 0.52, "r"),
    ("picky", -0.25, 0.52, "r"),
    ("skeptical", -0.28, 0.55, "l"),
    ("doubtful", -0.32, 0.55, "l"),
    ("hesitant", -0.25, 0.50, "l"),
    ("wary", -0.28, 0.50, "l"),
    ("cautious", -0.18, 0.45, "l"),
    ("mixed", -0.10, 0.42, ""),
    ("middling", -0.20, 0.48, ""),
    ("unremarkable", -0.25, 0.50, ""),
    ("tough", -0.30, 0.45, "r"),
]

NEG_VERBS = [
    ("hate", -0.78, 0.85, "sdg"),
    ("despise", -0.75, 0.82, "sdg"),
    ("loathe", -0.75, 0.82, "sdg"),
    ("detest", -0.72, 0.80, "sdg"),
    ("dislike", -0.52, 0.62, "sdg"),
    ("resent", -0.58, 0.68, "sdg"),
    ("regret", -0.50, 0.62, "sdg"),
    ("complain", -0.48, 0.58, "sdg"),
    ("criticize", -0.50, 0.58, "sdg"),
    ("condemn", -0.62, 0.62, "sdg"),
    ("denounce", -0.60, 0.60, "sdg"),
    ("blame", -0.52, 0.58, "sdg"),
    ("accuse", -0.52, 0.58, "sdg"),
    ("attack", -0.55, 0.55, "sdg"),
    ("insult", -0.58, 0.62, "sdg"),
    ("offend", -0.55, 0.60, "sdg"),
    ("mock", -0.52, 0.62, "sdg"),
    ("ridicule", -0.55, 0.62, "sdg"),
    ("dismiss", -0.42, 0.50, "sdg"),
    ("reject", -0.48, 0.50, "sdg"),
    ("refuse", -0.45, 0.50, "sdg"),
    ("deny", -0.42, 0.48, "sg"),
    ("ignore", -0.45, 0.52, "sdg"),
    ("neglect", -0.52, 0.55, "sdg"),
    ("abandon", -0.55, 0.55, "sdg"),
    ("betray", -0.65, 0.65, "sdg"),
    ("deceive", -0.60, 0.60, "sdg"),
    ("cheat", -0.62, 0.62, "sdg"),
    ("scam", -0.68, 0.65, "sdg"),
    ("swindle", -0.65, 0.65, "sdg"),
    ("exploit", -0.55, 0.55, "sdg"),
    ("overcharge", -0.52, 0.55, "sdg"),
    ("fail", -0.58, 0.52, "sdg"),
    ("falter", -0.45, 0.50, "sdg"),
    ("struggle", -0.45, 0.50, "sdg"),
    ("suffer", -0.55, 0.58, "sdg"),
    ("decline", -0.40, 0.42, "sdg"),
    ("deteriorate", -0.52, 0.48, "sdg"),
    ("worsen", -0.52, 0.48, "sdg"),
    ("collapse", -0.62, 0.52, "sdg"),
    ("crash", -0.60, 0.52, "dg"),
    ("plunge", -0.52, 0.48, "sdg"),
    ("plummet", -0.55, 0.48, "sdg"),
    ("sink", -0.45, 0.45, "sg"),
    ("slump", -0.45, 0.45, "sdg"),
    ("tumble", -0.42, 0.45, "sdg"),
    ("lose", -0.50, 0.48, "sg"),
    ("waste", -0.52, 0.55, "sdg"),
    ("damage", -0.55, 0.50, "sdg"),
    ("harm", -0.55, 0.52, "sdg"),
    ("hurt", -0.52, 0.55, "sg"),
    ("injure", -0.55, 0.50, "sdg"),
    ("destroy", -0.68, 0.58, "sdg"),
    ("wreck", -0.62, 0.58, "sdg"),
    ("ruin", -0.65, 0.60, "sdg"),
    ("break", -0.45, 0.45, "sg"),
    ("crack", -0.35, 0.42, "sdg"),
    ("leak", -0.38, 0.42, "sdg"),
    ("malfunction", -0.52, 0.48, "sdg"),
    ("disappoint", -0.55, 0.62, "sg"),
    ("frustrate", -0.52, 0.62, "sdg"),
    ("annoy", -0.48, 0.62, "sdg"),
    ("irritate", -0.48, 0.62, "sdg"),
    ("anger", -0.52, 0.62, "sdg"),
    ("upset", -0.48, 0.60, "g"),
    ("worry", -0.45, 0.58, "g"),
    ("worries", -0.45, 0.58, ""),
    ("worried", -0.45, 0.58, ""),
    ("alarm", -0.48, 0.55, "sdg"),
    ("frighten", -0.55, 0.62, "sdg"),
    ("scare", -0.55, 0.62, "sdg"),
    ("terrify", -0.68, 0.72, "g"),
    ("threaten", -0.55, 0.55, "sdg"),
    ("warn", -0.35, 0.45, "sdg"),
    ("protest", -0.40, 0.48, "sdg"),
    ("boycott", -0.50, 0.52, "sdg"),
]

NEG_NOUNS = [
    ("failure", -0.58, 0.52, "s"),
    ("problem", -0.45, 0.45, "s"),
    ("issue", -0.35, 0.42, "s"),
    ("defect", -0.50, 0.48, "s"),
    ("flaw", -0.45, 0.48, "s"),
    ("fault", -0.45, 0.48, "s"),
    ("error", -0.42, 0.40, "s"),
    ("mistake", -0.42, 0.45, "s"),
    ("blunder", -0.50, 0.52, "s"),
    ("mess", -0.48, 0.55, ""),
    ("disaster", -0.72, 0.62, "s"),
    ("catastrophe", -0.75, 0.62, "s"),
    ("crisis", -0.62, 0.52, ""),
    ("crises", -0.62, 0.52, ""),
    ("emergency", -0.52, 0.45, ""),
    ("accident", -0.48, 0.42, "s"),
    ("incident", -0.32, 0.38, "s"),
    ("outage", -0.48, 0.42, "s"),
    ("breakdown", -0.50, 0.45, "s"),
    ("shortage", -0.45, 0.42, "s"),
    ("deficit", -0.42, 0.40, "s"),
    ("loss", -0.48, 0.42, ""),
    ("losses", -0.48, 0.42, ""),
    ("damage", -0.50, 0.45, ""),
    ("harm", -0.50, 0.48, ""),
    ("injury", -0.50, 0.42, ""),
    ("injuries", -0.50, 0.42, ""),
    ("threat", -0.52, 0.48, "s"),
    ("danger", -0.55, 0.48, "s"),
    ("risk", -0.38, 0.40, "s"),
    ("hazard", -0.48, 0.45, "s"),
    ("warning", -0.35, 0.40, "s"),
    ("concern", -0.32, 0.45, "s"),
    ("complaint", -0.45, 0.52, "s"),
    ("criticism", -0.42, 0.52, "s"),
    ("backlash", -0.52, 0.55, ""),
    ("controversy", -0.45, 0.52, ""),
    ("controversies", -0.45, 0.52, ""),
    ("scandal", -0.62, 0.58, "s"),
    ("fraud", -0.65, 0.55, ""),
    ("corruption", -0.62, 0.55, ""),
    ("abuse", -0.60, 0.58, "s"),
    ("violation", -0.52, 0.48, "s"),
    ("breach", -0.52, 0.45, ""),
    ("breaches", -0.52, 0.45, ""),
    ("lawsuit", -0.42, 0.40, "s"),
    ("penalty", -0.42, 0.40, ""),
    ("penalties", -0.42, 0.40, ""),
    ("fine", -0.35, 0.38, ""),
    ("recall", -0.45, 0.40, "s"),
    ("delay", -0.38, 0.40, "s"),
    ("setback", -0.45, 0.45, "s"),
    ("obstacle", -0.38, 0.42, "s"),
    ("burden", -0.42, 0.48, "s"),
    ("pain", -0.52, 0.58, "s"),
    ("trouble", -0.45, 0.50, "s"),
    ("hardship", -0.48, 0.50, "s"),
    ("misery", -0.62, 0.68, ""),
    ("grief", -0.55, 0.65, ""),
    ("anger", -0.50, 0.60, ""),
    ("fear", -0.50, 0.58, "s"),
    ("panic", -0.55, 0.60, ""),
    ("doubt", -0.38, 0.52, "s"),
    ("confusion", -0.40, 0.50, ""),
    ("chaos", -0.55, 0.55, ""),
    ("decline", -0.38, 0.40, ""),
    ("downturn", -0.45, 0.42, ""),
    ("slowdown", -0.40, 0.40, ""),
    ("recession", -0.55, 0.45, ""),
    ("inflation", -0.42, 0.40, ""),
    ("layoff", -0.52, 0.45, "s"),
    ("closure", -0.42, 0.40, "s"),
    ("shutdown", -0.48, 0.42, "s"),
    ("strike", -0.40, 0.42, "s"),
    ("dispute", -0.40, 0.45, "s"),
    ("conflict", -0.45, 0.45, "s"),
]

DOMAIN_TERMS = [
    ("applauded", 0.58, 0.60, ""),
    ("endorses", 0.55, 0.52, ""),
    ("raved", 0.62, 0.70, ""),
    ("rave", 0.60, 0.68, "sg"),
    ("cheer", 0.55, 0.60, "sdg"),
    ("smile", 0.50, 0.60, "sdg"),
    ("laugh", 0.48, 0.60, "sdg"),
    ("hug", 0.45, 0.58, "s"),
    ("embrace", 0.42, 0.50, "sdg"),
    ("unite", 0.40, 0.45, "sdg"),
    ("cooperate", 0.40, 0.42, "sdg"),
    ("collaborate", 0.40, 0.42, "sdg"),
    ("partner", 0.32, 0.38, "sdg"),
    ("donate", 0.42, 0.42, "sdg"),
    ("volunteer", 0.42, 0.42, "sdg"),
    ("rescue", 0.45, 0.45, "sdg"),
    ("save", 0.42, 0.42, "sdg"),
    ("protect", 0.40, 0.40, "sdg"),
    ("secure", 0.35, 0.38, "sdg"),
    ("guarantee", 0.38, 0.42, "sdg"),
    ("promise", 0.32, 0.42, "sdg"),
    ("deliver", 0.30, 0.35, "sdg"),
    ("fulfill", 0.40, 0.40, "sdg"),
    ("achieve", 0.45, 0.40, "sdg"),
    ("attain", 0.42, 0.40, "sdg"),
    ("accomplish", 0.45, 0.42, "sdg"),
    ("complete", 0.32, 0.35, "sdg"),
    ("finish", 0.28, 0.35, "dg"),
    ("finishes", 0.28, 0.35, ""),
    ("advance", 0.35, 0.38, "sdg"),
    ("accelerate", 0.35, 0.38, "sdg"),
    ("optimize", 0.38, 0.40, "sdg"),
    ("refine", 0.38, 0.40, "sdg"),
    ("polish", 0.35, 0.42, "dg"),
    ("modernize", 0.38, 0.40, "sdg"),
    ("revitalize", 0.45, 0.45, "sdg"),
    ("rejuvenate", 0.45, 0.48, "sdg"),
    ("energize", 0.42, 0.48, "sdg"),
    ("empower", 0.45, 0.48, "sdg"),
    ("enrich", 0.45, 0.45, "sdg"),
    ("elevate", 0.42, 0.45, "sdg"),
    ("promote", 0.32, 0.38, "sdg"),
    ("recommendable", 0.50, 0.52, ""),
    ("subscribe", 0.25, 0.32, "sdg"),
    ("renew", 0.30, 0.35, "sdg"),
    ("return", -0.15, 0.30, "sdg"),
    ("refund", -0.30, 0.38, "sdg"),
    ("chargeback", -0.45, 0.45, "s"),
    ("dispute", -0.38, 0.45, "dg"),
    ("escalate", -0.35, 0.42, "sdg"),
    ("complained", -0.48, 0.58, ""),
    ("grumble", -0.42, 0.55, "sdg"),
    ("whine", -0.42, 0.58, "sdg"),
    ("rant", -0.45, 0.60, "sdg"),
    ("bash", -0.50, 0.58, "dg"),
    ("bashes", -0.50, 0.58, ""),
    ("slam", -0.52, 0.58, "sdg"),
    ("trash", -0.52, 0.58, "dg"),
    ("pan", -0.45, 0.55, "sg"),
    ("panned", -0.48, 0.55, ""),
    ("downvote", -0.42, 0.50, "sdg"),
    ("unfollow", -0.35, 0.45, "sdg"),
    ("uninstall", -0.38, 0.45, "sdg"),
    ("churn", -0.32, 0.40, "sdg"),
    ("overbook", -0.42, 0.48, "sdg"),
    ("oversell", -0.42, 0.48, "sdg"),
    ("underpay", -0.45, 0.48, "sdg"),
    ("overwork", -0.42, 0.48, "sdg"),
    ("misplace", -0.38, 0.45, "sdg"),
    ("mishandle", -0.48, 0.50, "sdg"),
    ("misjudge", -0.42, 0.50, "sdg"),
    ("miscalculate", -0.40, 0.48, "sdg"),
    ("overlook", -0.32, 0.45, "sdg"),
    ("omit", -0.28, 0.40, "sg"),
    ("omitted", -0.28, 0.40, ""),
    ("stall", -0.35, 0.42, "sdg"),
    ("lag", -0.38, 0.42, "sg"),
    ("lagged", -0.38, 0.42, ""),
    ("freeze", -0.35, 0.42, "sg"),
    ("froze", -0.38, 0.42, ""),
    ("frozen", -0.32, 0.42, ""),
    ("glitch", -0.42, 0.48, "s"),
    ("crashes", -0.58, 0.52, ""),
    ("hang", -0.30, 0.40, "sg"),
    ("timeout", -0.35, 0.40, "s"),
    ("spam", -0.48, 0.52, ""),
    ("scammer", -0.62, 0.60, "s"),
    ("hacker", -0.42, 0.48, "s"),
    ("hacked", -0.52, 0.50, ""),
    ("phishing", -0.55, 0.52, ""),
    ("malware", -0.55, 0.50, ""),
    ("virus", -0.48, 0.45, ""),
    ("viruses", -0.48, 0.45, ""),
    ("outbreak", -0.52, 0.48, "s"),
    ("epidemic", -0.55, 0.48, "s"),
    ("pandemic", -0.55, 0.48, "s"),
    ("contagious", -0.42, 0.48, ""),
    ("infected", -0.48, 0.48, ""),
    ("infection", -0.48, 0.45, "s"),
    ("illness", -0.48, 0.45, ""),
    ("illnesses", -0.48, 0.45, ""),
    ("disease", -0.50, 0.45, "s"),
    ("symptom", -0.35, 0.40, "s"),
    ("allergy", -0.35, 0.42, ""),
    ("allergies", -0.35, 0.42, ""),
    ("poisoning", -0.62, 0.52, ""),
    ("spoilage", -0.48, 0.48, ""),
    ("stench", -0.55, 0.62, ""),
    ("odor", -0.38, 0.50, "s"),
    ("smelly", -0.48, 0.58, "r"),
    ("sour", -0.38, 0.52, "lr"),
    ("salty", -0.22, 0.48, "r"),
    ("spicy", -0.05, 0.45, "r"),
    ("crunchy", 0.30, 0.50, "r"),
    ("creamy", 0.32, 0.50, "r"),
    ("aromatic", 0.38, 0.50, ""),
    ("fragrant", 0.40, 0.52, ""),
    ("appetizing", 0.48, 0.55, ""),
    ("mouthwatering", 0.55, 0.62, ""),
    ("heavenward", 0.30, 0.48, ""),
    ("generosity", 0.48, 0.52, ""),
    ("kindness", 0.52, 0.58, ""),
    ("courtesy", 0.42, 0.48, ""),
    ("hospitality", 0.45, 0.48, ""),
    ("ambiance", 0.30, 0.48, ""),
    ("ambience", 0.30, 0.48, ""),
    ("aesthetic", 0.30, 0.48, "s"),
    ("novelty", 0.25, 0.45, ""),
    ("variety", 0.28, 0.40, ""),
    ("selection", 0.18, 0.32, "s"),
    ("freshly", 0.40, 0.45, ""),
    ("homemade", 0.35, 0.45, ""),
    ("handcrafted", 0.38, 0.48, ""),
    ("artisanal", 0.35, 0.48, ""),
    ("organic", 0.28, 0.40, ""),
    ("sustainable", 0.35, 0.42, ""),
    ("ethical", 0.38, 0.45, "l"),
    ("transparent", 0.38, 0.42, "l"),
    ("accountable", 0.32, 0.40, ""),
]

OBJECTIVE_TERMS = [
    ("announced", 0.0, 0.10, ""),
    ("announces", 0.0, 0.10, ""),
    ("reported", 0.0, 0.10, ""),
    ("reports", 0.0, 0.12, ""),
    ("stated", 0.0, 0.10, ""),
    ("states", 0.0, 0.12, ""),
    ("published", 0.0, 0.10, ""),
    ("confirmed", 0.05, 0.15, ""),
    ("confirms", 0.05, 0.15, ""),
    ("measured", 0.0, 0.10, ""),
    ("recorded", 0.0, 0.10, ""),
    ("estimated", 0.0, 0.20, ""),
    ("estimates", 0.0, 0.20, ""),
    ("forecast", 0.0, 0.22, ""),
    ("surveyed", 0.0, 0.12, ""),
    ("survey", 0.0, 0.15, "s"),
    ("statistics", 0.0, 0.10, ""),
    ("percentage", 0.0, 0.08, "s"),
    ("percent", 0.0, 0.08, ""),
    ("quarter", 0.0, 0.08, "s"),
    ("revenue", 0.0, 0.10, "s"),
    ("earnings", 0.0, 0.10, ""),
    ("figures", 0.0, 0.10, ""),
    ("data", 0.0, 0.08, ""),
    ("dataset", 0.0, 0.08, "s"),
    ("average", 0.0, 0.12, ""),
    ("median", 0.0, 0.08, ""),
    ("total", 0.0, 0.08, "s"),
    ("official", 0.0, 0.15, "l"),
    ("scheduled", 0.0, 0.10, ""),
    ("launched", 0.05, 0.12, ""),
    ("launches", 0.05, 0.12, ""),
    ("released", 0.0, 0.10, ""),
    ("releases", 0.0, 0.12, ""),
    ("opened", 0.05, 0.12, ""),
    ("closed", -0.05, 0.12, ""),
    ("increased", 0.08, 0.15, ""),
    ("decreased", -0.08, 0.15, ""),
    ("unchanged", 0.0, 0.10, ""),
    ("neutral", 0.0, 0.15, "l"),
]

EXTRA_POS = [
    ("recommendable", 0.55, 0.55, ""),
    ("commendable", 0.58, 0.55, "l"),
    ("admirable", 0.60, 0.60, "l"),
    ("respectable", 0.52, 0.52, "l"),
    ("reputable", 0.55, 0.48, ""),
    ("renowned", 0.55, 0.48, ""),
    ("famous", 0.45, 0.48, "l"),
    ("celebrated", 0.55, 0.52, ""),
    ("beloved", 0.62, 0.65, ""),
    ("cherished", 0.60, 0.65, ""),
    ("adored", 0.65, 0.70, ""),
    ("loyal", 0.52, 0.52, "l"),
    ("faithful", 0.52, 0.55, "l"),
    ("devoted", 0.52, 0.55, "l"),
    ("sincere", 0.52, 0.55, "l"),
    ("humble", 0.45, 0.52, ""),
    ("gracious", 0.52, 0.58, "l"),
    ("hospitable", 0.55, 0.55, ""),
    ("accommodating", 0.52, 0.50, ""),
    ("caring", 0.55, 0.58, "l"),
    ("compassionate", 0.58, 0.60, "l"),
    ("empathetic", 0.52, 0.58, ""),
    ("patient", 0.45, 0.48, "l"),
    ("diligent", 0.50, 0.48, "l"),
    ("dedicated", 0.52, 0.50, ""),
    ("committed", 0.48, 0.45, ""),
    ("passionate", 0.55, 0.62, "l"),
    ("enthusiastic", 0.55, 0.62, "l"),
    ("eager", 0.48, 0.55, "l"),
    ("confident", 0.48, 0.52, "l"),
    ("proud", 0.48, 0.58, "l"),
    ("joyful", 0.62, 0.72, "l"),
    ("jolly", 0.55, 0.68, ""),
    ("merry", 0.55, 0.68, "l"),
    ("festive", 0.52, 0.60, "l"),
    ("playful", 0.48, 0.60, "l"),
    ("fun", 0.55, 0.65, ""),
    ("funny", 0.50, 0.65, "r"),
    ("hilarious", 0.62, 0.75, "l"),
    ("amusing", 0.48, 0.60, "l"),
    ("entertaining", 0.52, 0.60, ""),
    ("engaging", 0.50, 0.55, ""),
    ("fascinating", 0.58, 0.62, "l"),
    ("intriguing", 0.48, 0.58, "l"),
    ("interesting", 0.45, 0.55, "l"),
    ("compelling", 0.50, 0.55, "l"),
    ("captivating", 0.55, 0.62, ""),
    ("refreshing", 0.52, 0.58, "l"),
    ("relaxing", 0.50, 0.58, ""),
    ("soothing", 0.48, 0.58, "l"),
    ("restful", 0.45, 0.55, ""),
    ("serene", 0.48, 0.58, "l"),
    ("tranquil", 0.48, 0.58, "l"),
    ("scenic", 0.48, 0.55, ""),
    ("picturesque", 0.52, 0.58, ""),
    ("spacious", 0.45, 0.50, "l"),
    ("roomy", 0.40, 0.50, "r"),
    ("luxurious", 0.58, 0.62, "l"),
    ("lavish", 0.50, 0.60, "l"),
    ("premium", 0.48, 0.50, ""),
    ("upscale", 0.45, 0.50, ""),
    ("classy", 0.48, 0.58, "r"),
    ("stylish", 0.48, 0.58, "l"),
    ("sleek", 0.45, 0.52, "lr"),
    ("polished", 0.45, 0.50, ""),
    ("refined", 0.45, 0.50, ""),
    ("pristine", 0.52, 0.52, ""),
    ("spotless", 0.50, 0.52, "l"),
    ("hygienic", 0.42, 0.42, ""),
    ("sanitary", 0.38, 0.40, ""),
    ("seamless", 0.48, 0.50, "l"),
    ("effortless", 0.48, 0.52, "l"),
    ("intuitive", 0.45, 0.50, "l"),
    ("responsive", 0.42, 0.45, ""),
    ("snappy", 0.42, 0.52, "r"),
    ("speedy", 0.45, 0.48, "r"),
    ("swift", 0.45, 0.48, "lr"),
    ("rapid", 0.40, 0.42, "l"),
    ("brisk", 0.38, 0.45, "lr"),
    ("thriving", 0.52, 0.50, ""),
    ("booming", 0.50, 0.48, ""),
    ("bullish", 0.45, 0.52, ""),
    ("profitable", 0.50, 0.45, "l"),
    ("lucrative", 0.48, 0.48, ""),
    ("rewarding", 0.52, 0.55, ""),
    ("fruitful", 0.48, 0.52, "l"),
    ("prosperous", 0.52, 0.50, "l"),
    ("wealthy", 0.42, 0.45, "r"),
    ("affluent", 0.40, 0.45, ""),
    ("generously", 0.52, 0.58, ""),
    ("warmly", 0.50, 0.60, ""),
    ("gladly", 0.48, 0.60, ""),
    ("happily", 0.58, 0.70, ""),
    ("proudly", 0.45, 0.55, ""),
    ("smoothly", 0.45, 0.48, ""),
    ("safely", 0.38, 0.40, ""),
    ("successfully", 0.52, 0.45, ""),
    ("peerless", 0.62, 0.58, ""),
    ("matchless", 0.60, 0.58, ""),
    ("legendary", 0.58, 0.60, ""),
    ("iconic", 0.48, 0.52, ""),
    ("masterpiece", 0.68, 0.62, "s"),
    ("standout", 0.52, 0.52, "s"),
    ("bestseller", 0.48, 0.45, "s"),
    ("compliment", 0.48, 0.52, "sdg"),
    ("congratulate", 0.52, 0.55, "sdg"),
    ("congratulations", 0.55, 0.58, ""),
    ("thank", 0.48, 0.52, "sdg"),
    ("thanks", 0.48, 0.55, ""),
]

EXTRA_NEG = [
    ("regrettable", -0.48, 0.58, "l"),
    ("lamentable", -0.52, 0.60, "l"),
    ("dismal", -0.58, 0.60, "l"),
    ("dreary", -0.45, 0.58, ""),
    ("depressing", -0.55, 0.65, "l"),
    ("depressed", -0.52, 0.65, ""),
    ("discouraging", -0.48, 0.58, "l"),
    ("disheartening", -0.50, 0.60, "l"),
    ("demoralizing", -0.52, 0.60, ""),
    ("distressing", -0.52, 0.60, "l"),
    ("agonizing", -0.60, 0.68, "l"),
    ("painful", -0.55, 0.60, "l"),
    ("excruciating", -0.65, 0.70, "l"),
    ("grueling", -0.50, 0.58, ""),
    ("exhausting", -0.48, 0.58, ""),
    ("draining", -0.45, 0.55, ""),
    ("stressful", -0.50, 0.58, "l"),
    ("anxious", -0.45, 0.60, "l"),
    ("nervous", -0.40, 0.58, "l"),
    ("fearful", -0.48, 0.60, "l"),
    ("afraid", -0.48, 0.60, ""),
    ("scared", -0.50, 0.62, ""),
    ("ashamed", -0.48, 0.62, ""),
    ("guilty", -0.45, 0.58, ""),
    ("jealous", -0.45, 0.62, "l"),
    ("envious", -0.42, 0.60, "l"),
    ("bitter", -0.50, 0.62, "lnr"),
    ("resentful", -0.50, 0.60, "l"),
    ("spiteful", -0.52, 0.62, "l"),
    ("hateful", -0.62, 0.68, "l"),
    ("nasty", -0.58, 0.68, "r"),
    ("mean", -0.48, 0.58, "r"),
    ("harsh", -0.48, 0.55, "lnr"),
    ("severe", -0.45, 0.48, "lr"),
    ("extreme", -0.35, 0.48, "l"),
    ("drastic", -0.40, 0.48, "l"),
    ("abrupt", -0.32, 0.45, "l"),
    ("sudden", -0.22, 0.40, "l"),
    ("unexpected", -0.20, 0.42, "l"),
    ("unforeseen", -0.25, 0.45, ""),
    ("unfortunate", -0.45, 0.55, "l"),
    ("unlucky", -0.42, 0.55, ""),
    ("doomed", -0.60, 0.60, ""),
    ("cursed", -0.52, 0.60, ""),
    ("troubled", -0.48, 0.55, ""),
    ("plagued", -0.52, 0.55, ""),
    ("burdened", -0.45, 0.52, ""),
    ("overwhelmed", -0.45, 0.55, ""),
    ("understaffed", -0.45, 0.48, ""),
    ("underfunded", -0.45, 0.48, ""),
    ("mismanaged", -0.52, 0.52, ""),
    ("disorganized", -0.48, 0.52, ""),
    ("dysfunctional", -0.55, 0.55, ""),
    ("inefficient", -0.48, 0.50, "l"),
    ("ineffective", -0.48, 0.50, "l"),
    ("incompetent", -0.58, 0.58, "l"),
    ("unqualified", -0.48, 0.52, ""),
    ("inexperienced", -0.35, 0.48, ""),
    ("amateurish", -0.45, 0.55, ""),
    ("unresponsive", -0.48, 0.50, ""),
    ("unhelpful", -0.48, 0.52, ""),
    ("unfriendly", -0.48, 0.55, ""),
    ("impersonal", -0.32, 0.48, ""),
    ("indifferent", -0.38, 0.50, "l"),
    ("apathetic", -0.40, 0.52, ""),
    ("dismissive", -0.45, 0.52, "l"),
    ("condescending", -0.50, 0.58, "l"),
    ("patronizing", -0.48, 0.58, ""),
    ("aggressive", -0.45, 0.52, "l"),
    ("abrasive", -0.45, 0.55, "l"),
    ("obnoxious", -0.55, 0.65, "l"),
    ("insufferable", -0.58, 0.68, "l"),
    ("unwelcoming", -0.45, 0.52, ""),
    ("uninviting", -0.42, 0.52, ""),
    ("rundown", -0.45, 0.52, ""),
    ("shabby", -0.45, 0.55, "r"),
    ("dilapidated", -0.52, 0.55, ""),
    ("decrepit", -0.52, 0.55, ""),
    ("crumbling", -0.45, 0.50, ""),
    ("worn", -0.30, 0.42, ""),
    ("damaged", -0.48, 0.45, ""),
    ("contaminated", -0.58, 0.52, ""),
    ("polluted", -0.55, 0.50, ""),
    ("spoiled", -0.52, 0.55, ""),
    ("rancid", -0.60, 0.62, ""),
    ("inedible", -0.58, 0.60, ""),
    ("undercooked", -0.48, 0.52, ""),
    ("overcooked", -0.45, 0.52, ""),
    ("burnt", -0.42, 0.50, ""),
    ("bearish", -0.40, 0.50, ""),
    ("volatile", -0.38, 0.45, ""),
    ("turbulent", -0.42, 0.48, ""),
    ("shaky", -0.38, 0.48, "r"),
    ("precarious", -0.45, 0.52, "l"),
    ("insolvent", -0.55, 0.48, ""),
    ("bankrupt", -0.62, 0.52, ""),
    ("indebted", -0.38, 0.45, ""),
    ("overdue", -0.35, 0.42, ""),
    ("unpaid", -0.35, 0.42, ""),
    ("badly", -0.52, 0.58, ""),
    ("poorly", -0.50, 0.55, ""),
    ("wrongly", -0.42, 0.50, ""),
    ("unfairly", -0.48, 0.55, ""),
    ("sadly", -0.42, 0.58, ""),
    ("regrettably", -0.42, 0.55, ""),
    ("worst", -0.78, 0.70, ""),
    ("worse", -0.58, 0.60, ""),
    ("horribly", -0.70, 0.72, ""),
    ("terribly", -0.62, 0.68, ""),
    ("awfully", -0.55, 0.65, ""),
    ("substandard", -0.50, 0.52, ""),
    ("shoddy", -0.52, 0.58, ""),
    ("cheapen", -0.42, 0.50, "sdg"),
    ("degrade", -0.48, 0.50, "sdg"),
    ("downgrade", -0.42, 0.45, "sdg"),
    ("disrupt", -0.42, 0.45, "sdg"),
    ("disruption", -0.42, 0.45, "s"),
    ("cancel", -0.38, 0.42, "sg"),
    ("cancellation", -0.42, 0.45, "s"),
    ("misinform", -0.52, 0.52, "sdg"),
    ("misinformation", -0.55, 0.52, ""),
    ("overreact", -0.38, 0.52, "sdg"),
    ("underdeliver", -0.45, 0.50, "sdg"),
]

# intensity != 1.0 marks a modifier; polarity/subjectivity of these rows
# never become spans of their own.
INTENSIFIERS = [
    ("very", 1.30),
    ("extremely", 1.60),
    ("incredibly", 1.50),
    ("really", 1.25),
    ("truly", 1.25),
    ("quite", 1.15),
    ("so", 1.20),
    ("too", 1.20),
    ("super", 1.40),
    ("absolutely", 1.50),
    ("totally", 1.40),
    ("completely", 1.40),
    ("utterly", 1.55),
    ("highly", 1.35),
    ("deeply", 1.30),
    ("hugely", 1.45),
    ("immensely", 1.45),
    ("exceptionally", 1.60),
    ("remarkably", 1.40),
    ("particularly", 1.25),
    ("especially", 1.25),
    ("insanely", 1.55),
    ("ridiculously", 1.50),
    ("rather", 1.10),
    ("pretty", 1.10),
    ("fairly", 0.90),
    ("somewhat", 0.70),
    ("slightly", 0.50),
    ("marginally", 0.45),
    ("barely", 0.40),
    ("hardly", 0.40),
    ("mildly", 0.60),
    ("moderately", 0.80),
    ("reasonably", 0.85),
]

STOPWORDS = """
a about above after again against all am an and any are as at be because
been before being below between both but by can could did do does doing
down during each few for from further had has have having he her here hers
herself him himself his how i if in into is it its itself just me more
most my myself nor of off on once only or other our ours ourselves out
over own same she should so some such than that the their theirs them
themselves then there these they this those through to under until up was
we were what when where which while who whom why will with you your yours
yourself yourselves
also said says say one two three new get got would may might must shall
via per amid among upon onto yet
""".split()


def _ly(word: str) -> str:
    if word.endswith("le") and len(word) > 3:
        return word[:-1] + "y"
    if word.endswith("ue"):
        return word[:-1] + "ly"
    if word.endswith("y") and len(word) > 2 and word[-2] not in "aeiou":
        return word[:-1] + "ily"
    return word + "ly"


def _ness(word: str) -> str:
    if word.endswith("y") and word[-2] not in "aeiou":
        return word[:-1] + "iness"
    return word + "ness"


def _plural(word: str) -> str:
    if word.endswith(("s", "x", "z", "ch", "sh")):
        return word + "es"
    if word.endswith("y") and word[-2] not in "aeiou":
        return word[:-1] + "ies"
    return word + "s"


def _past(word: str) -> str:
    if word.endswith("e"):
        return word + "d"
    if word.endswith("y") and word[-2] not in "aeiou":
        return word[:-1] + "ied"
    return word + "ed"


def _gerund(word: str) -> str:
    if word.endswith("e") and not word.endswith(("ee", "ye", "oe")):
        return word[:-1] + "ing"
    return word + "ing"


def _compare(word: str) -> list[str]:
    if word.endswith("e"):
        return [word + "r", word + "st"]
    if word.endswith("y") and word[-2] not in "aeiou":
        return [word[:-1] + "ier", word[:-1] + "iest"]
    return [word + "er", word + "est"]


def expand(word: str, pol: float, subj: float, forms: str):
    yield word, pol, subj
    if "l" in forms:
        yield _ly(word), pol, subj
    if "n" in forms:
        yield _ness(word), pol, subj
    if "s" in forms:
        yield _plural(word), pol, subj
    if "d" in forms:
        yield _past(word), pol, subj
    if "g" in forms:
        yield _gerund(word), pol, subj
    if "r" in forms:
        for form in _compare(word):
            yield form, pol, subj


def build() -> list[tuple[str, float, float, float]]:
    rows: dict[str, tuple[str, float, float, float]] = {}

    def put(token: str, pol: float, subj: float, intensity: float) -> None:
        # first definition wins so hand-tuned rows beat expansions
        rows.setdefault(token, (token, pol, subj, intensity))

    for table in (
        STRONG_POS_ADJ,
        MOD_POS_ADJ,
        MILD_POS_ADJ,
        POS_VERBS,
        POS_NOUNS,
        STRONG_NEG_ADJ,
        MOD_NEG_ADJ,
        MILD_NEG_ADJ,
        NEG_VERBS,
        NEG_NOUNS,
        EXTRA_POS,
        EXTRA_NEG,
        DOMAIN_TERMS,
        OBJECTIVE_TERMS,
    ):
        for word, pol, subj, forms in table:
            for token, p, s in expand(word, pol, subj, forms):
                put(token, p, s, 1.0)
    for word, intensity in INTENSIFIERS:
        rows[word] = (word, 0.0, 0.30, intensity)
    return sorted(rows.values())


def main() -> None:
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    entries = build()
    lexicon_path = OUT_DIR / "lexicon.tsv"
    with open(lexicon_path, "w", encoding="utf-8") as fh:
        fh.write("# token<TAB>polarity<TAB>subjectivity<TAB>intensity\n")
        for token, pol, subj, intensity in entries:
            fh.write(f"{token}\t{pol:.2f}\t{subj:.2f}\t{intensity:.2f}\n")
    stopword_path = OUT_DIR / "stopwords.txt"
    with open(stopword_path, "w", encoding="utf-8") as fh:
        for word in sorted(set(STOPWORDS)):
            fh.write(word + "\n")
    print(f"{lexicon_path}: {len(entries)} entries")
    print(f"{stopword_path}: {len(set(STOPWORDS))} words")


if __name__ == "__main__":
    main()
