#!/usr/bin/env python3
"""Regenerates data/toy-dictionary.tsv and data/toy-vectors.txt.

The dictionary is a small synonymy pair list with deliberately ambiguous
hub words (each a member of two unrelated groups), duplicated pairs (so
the count weighting differs from ones), and a few loose cross-group
bridges (so edge weighting changes clustering decisions). The vectors
place each group around its own base direction, which makes the sim
weighting informative. Output is deterministic.
"""

import random
from pathlib import Path

GROUPS = [
    ["car", "auto", "automobile", "motorcar"],
    ["road", "street", "avenue", "boulevard", "lane"],
    ["house", "home", "dwelling", "residence", "abode"],
    ["begin", "start", "commence", "initiate"],
    ["end", "finish", "conclude", "terminate"],
    ["big", "large", "huge", "enormous", "vast"],
    ["small", "little", "tiny", "petite"],
    ["quick", "fast", "rapid", "swift", "speedy"],
    ["slow", "sluggish", "leisurely", "unhurried"],
    ["happy", "glad", "joyful", "cheerful", "merry"],
    ["sad", "unhappy", "sorrowful", "mournful", "gloomy"],
    ["smart", "clever", "intelligent", "bright", "brainy"],
    ["bright", "luminous", "radiant", "shining", "brilliant"],
    ["dark", "dim", "murky", "shadowy"],
    ["bank", "riverbank", "streambank", "embankment"],
    ["bank", "lender", "banking company", "credit union"],
    ["spring", "springtime", "maytime"],
    ["spring", "coil", "spiral"],
    ["fall", "autumn", "harvest time"],
    ["fall", "tumble", "plunge", "stumble"],
    ["doctor", "physician", "medic", "doc"],
    ["illness", "sickness", "disease", "malady", "ailment"],
    ["remedy", "cure", "treatment", "medication"],
    ["job", "work", "employment", "occupation", "profession"],
    ["pay", "salary", "wage", "earnings", "remuneration"],
    ["money", "cash", "currency", "funds"],
    ["rich", "wealthy", "affluent", "prosperous", "wealth"],
    ["poor", "needy", "destitute", "impoverished"],
    ["beautiful", "pretty", "lovely", "gorgeous", "attractive"],
    ["ugly", "hideous", "unsightly", "unattractive"],
    ["strong", "powerful", "mighty", "sturdy"],
    ["weak", "feeble", "frail", "fragile"],
    ["angry", "mad", "furious", "irate", "enraged"],
    ["crazy", "insane", "mad", "lunatic", "deranged"],
    ["cold", "chilly", "frosty", "icy", "freezing"],
    ["hot", "scorching", "sweltering", "torrid"],
    ["wet", "damp", "moist", "soggy"],
    ["dry", "arid", "parched", "dehydrated"],
    ["old", "ancient", "aged", "antique", "elderly"],
    ["new", "novel", "fresh", "recent", "modern"],
    ["loud", "noisy", "deafening", "thunderous"],
    ["quiet", "silent", "hushed", "noiseless"],
    ["brave", "courageous", "fearless", "valiant", "bold"],
    ["afraid", "scared", "frightened", "fearful", "terrified"],
    ["eat", "consume", "devour", "ingest"],
    ["drink", "sip", "gulp", "imbibe"],
    ["walk", "stroll", "amble", "saunter", "wander"],
    ["run", "sprint", "dash", "jog"],
    ["talk", "speak", "chat", "converse"],
    ["shout", "yell", "scream", "holler"],
    ["throw", "toss", "hurl", "fling", "pitch"],
    ["pitch", "tar", "asphalt", "bitumen"],
    ["gift", "present", "donation", "offering"],
    ["error", "mistake", "blunder", "fault"],
    ["answer", "reply", "response", "retort"],
    ["question", "query", "inquiry", "interrogation"],
]

# loose near-synonym pairs linking related groups; weight-sensitive
BRIDGES = [
    ("vast", "mighty"),
    ("cash", "earnings"),
    ("radiant", "cheerful"),
    ("gloomy", "murky"),
    ("fast", "sprint"),
    ("aged", "frail"),
    ("employment", "occupation"),
    ("money", "wealth"),
    ("swift", "dash"),
    ("scream", "screech"),
    ("wander", "stray"),
    ("brilliant", "clever"),
]

# words kept out of the vector file to exercise the epsilon fallback
NO_VECTOR = {"bitumen", "holler"}

DIM = 10


def main() -> None:
    rng = random.Random(20170401)
    data_dir = Path(__file__).resolve().parent.parent / "data"
    data_dir.mkdir(exist_ok=True)

    pairs = []
    for group in GROUPS:
        for i in range(len(group)):
            for j in range(i + 1, len(group)):
                pairs.append((group[i], group[j]))
                # duplicate a deterministic subset so count deviates from ones
                if (i + j) % 3 == 0:
                    pairs.append((group[i], group[j]))
    pairs.extend(BRIDGES)

    words = sorted({w for pair in pairs for w in pair})
    with open(data_dir / "toy-dictionary.tsv", "w", encoding="utf-8") as out:
        out.write("# toy synonymy dictionary (generated by scripts/make_toy_data.py)\n")
        for a, b in pairs:
            out.write(f"{a}\t{b}\n")

    bases = {}
    for index in range(len(GROUPS)):
        bases[index] = [rng.gauss(0.0, 1.0) for _ in range(DIM)]

    memberships = {}
    for index, group in enumerate(GROUPS):
        for word in group:
            memberships.setdefault(word, []).append(index)
    for a, b in BRIDGES:
        # bridge-only words sit near their partner's group
        if a not in memberships:
            memberships[a] = list(memberships[b])
        if b not in memberships:
            memberships[b] = list(memberships[a])

    vector_words = [w for w in words if w not in NO_VECTOR]
    with open(data_dir / "toy-vectors.txt", "w", encoding="utf-8") as out:
        out.write(f"{len(vector_words)} {DIM}\n")
        for word in vector_words:
            groups = memberships[word]
            vector = []
            for d in range(DIM):
                base = sum(bases[g][d] for g in groups) / len(groups)
                vector.append(base + rng.gauss(0.0, 0.3))
            rendered = " ".join(f"{v:.4f}" for v in vector)
            out.write(f"{word} {rendered}\n")

    print(f"{len(words)} words, {len(pairs)} pair lines, "
          f"{len(vector_words)} vectors")


if __name__ == "__main__":
    main()
