#!/usr/bin/env python3
"""Regenerate the bundled IPA data files under src/phonekit/data/.

Feature rows are derived from articulatory descriptions (place, manner,
voicing for consonants; height, backness, rounding, tenseness for vowels)
so the shipped table stays internally consistent. Run after editing the
symbol inventories below:

    python tools/gen_feature_table.py
"""

from pathlib import Path

DATA_DIR = Path(__file__).resolve().parent.parent / "src" / "phonekit" / "data"

FEATURES = [
    "syl", "son", "cons", "cont", "delrel", "lat", "nas", "strid",
    "voi", "sg", "cg", "ant", "cor", "distr", "lab", "hi", "lo",
    "back", "round", "velaric", "tense", "long", "hitone", "hireg",
]

# place -> (ant, cor, distr, lab, hi, lo, back)
PLACES = {
    "bilabial":       (+1, -1, 0, +1, -1, -1, -1),
    "labiodental":    (+1, -1, 0, +1, -1, -1, -1),
    "dental":         (+1, +1, +1, -1, -1, -1, -1),
    "alveolar":       (+1, +1, -1, -1, -1, -1, -1),
    "postalveolar":   (-1, +1, +1, -1, -1, -1, -1),
    "alveolopalatal": (-1, +1, +1, -1, +1, -1, -1),
    "retroflex":      (-1, +1, -1, -1, -1, -1, -1),
    "palatal":        (-1, -1, 0, -1, +1, -1, -1),
    "velar":          (-1, -1, 0, -1, +1, -1, +1),
    "uvular":         (-1, -1, 0, -1, -1, -1, +1),
    "pharyngeal":     (-1, -1, 0, -1, -1, +1, +1),
    "glottal":        (-1, -1, 0, -1, -1, -1, -1),
    "labialvelar":    (-1, -1, 0, +1, +1, -1, +1),
    "labialpalatal":  (-1, -1, 0, +1, +1, -1, -1),
}

# manner -> (son, cont, delrel)
MANNERS = {
    "plosive":     (-1, -1, -1),
    "nasal":       (+1, -1, -1),
    "trill":       (+1, +1, -1),
    "tap":         (+1, -1, -1),
    "fricative":   (-1, +1, -1),
    "affricate":   (-1, -1, +1),
    "approximant": (+1, +1, -1),
    "implosive":   (-1, -1, -1),
    "click":       (-1, -1, -1),
}

SIBILANT_STRIDENT = True  # sibilants and labiodental fricatives are [+strid]

# symbol, voiced, place, manner, flags
# flags: lat(eral), glide (non-consonantal), strid(ent), round(ed),
#        sg / cg (glottal state), hi / back overrides for secondary articulation
CONSONANTS = [
    # bilabial
    ("p",  False, "bilabial", "plosive", ()),
    ("b",  True,  "bilabial", "plosive", ()),
    ("m",  True,  "bilabial", "nasal", ()),
    ("ʙ", True, "bilabial", "trill", ()),             # ʙ
    ("ɸ", False, "bilabial", "fricative", ()),        # ɸ
    ("β", True,  "bilabial", "fricative", ()),        # β
    ("ɓ", True,  "bilabial", "implosive", ()),        # ɓ
    ("ʘ", False, "bilabial", "click", ()),            # ʘ
    # labiodental
    ("ɱ", True,  "labiodental", "nasal", ()),         # ɱ
    ("ⱱ", True,  "labiodental", "tap", ()),           # ⱱ
    ("f",  False, "labiodental", "fricative", ("strid",)),
    ("v",  True,  "labiodental", "fricative", ("strid",)),
    ("ʋ", True, "labiodental", "approximant", ()),    # ʋ
    # dental
    ("θ", False, "dental", "fricative", ()),          # θ
    ("ð", True,  "dental", "fricative", ()),          # ð
    ("ǀ", False, "dental", "click", ()),              # ǀ
    # alveolar
    ("t",  False, "alveolar", "plosive", ()),
    ("d",  True,  "alveolar", "plosive", ()),
    ("n",  True,  "alveolar", "nasal", ()),
    ("r",  True,  "alveolar", "trill", ()),
    ("ɾ", True, "alveolar", "tap", ()),               # ɾ
    ("s",  False, "alveolar", "fricative", ("strid",)),
    ("z",  True,  "alveolar", "fricative", ("strid",)),
    ("ɬ", False, "alveolar", "fricative", ("lat",)),  # ɬ
    ("ɮ", True,  "alveolar", "fricative", ("lat",)),  # ɮ
    ("ɹ", True,  "alveolar", "approximant", ()),      # ɹ
    ("l",  True,  "alveolar", "approximant", ("lat",)),
    ("ɫ", True,  "alveolar", "approximant", ("lat", "hi", "back")),  # ɫ
    ("ɺ", True,  "alveolar", "tap", ("lat",)),        # ɺ
    ("ɗ", True,  "alveolar", "implosive", ()),        # ɗ
    ("ǃ", False, "alveolar", "click", ()),            # ǃ
    ("ǁ", False, "alveolar", "click", ("lat",)),      # ǁ
    # postalveolar
    ("ʃ", False, "postalveolar", "fricative", ("strid",)),  # ʃ
    ("ʒ", True,  "postalveolar", "fricative", ("strid",)),  # ʒ
    # retroflex
    ("ʈ", False, "retroflex", "plosive", ()),         # ʈ
    ("ɖ", True,  "retroflex", "plosive", ()),         # ɖ
    ("ɳ", True,  "retroflex", "nasal", ()),           # ɳ
    ("ɽ", True,  "retroflex", "tap", ()),             # ɽ
    ("ʂ", False, "retroflex", "fricative", ("strid",)),  # ʂ
    ("ʐ", True,  "retroflex", "fricative", ("strid",)),  # ʐ
    ("ɻ", True,  "retroflex", "approximant", ()),     # ɻ
    ("ɭ", True,  "retroflex", "approximant", ("lat",)),  # ɭ
    # alveolo-palatal
    ("ɕ", False, "alveolopalatal", "fricative", ("strid",)),  # ɕ
    ("ʑ", True,  "alveolopalatal", "fricative", ("strid",)),  # ʑ
    # palatal
    ("c",  False, "palatal", "plosive", ()),
    ("ɟ", True,  "palatal", "plosive", ()),           # ɟ
    ("ɲ", True,  "palatal", "nasal", ()),             # ɲ
    ("ç", False, "palatal", "fricative", ()),         # ç
    ("ʝ", True,  "palatal", "fricative", ()),         # ʝ
    ("j",  True,  "palatal", "approximant", ("glide",)),
    ("ʎ", True,  "palatal", "approximant", ("lat",)),  # ʎ
    ("ʄ", True,  "palatal", "implosive", ()),         # ʄ
    ("ǂ", False, "palatal", "click", ()),             # ǂ
    # velar
    ("k",  False, "velar", "plosive", ()),
    ("ɡ", True,  "velar", "plosive", ()),             # ɡ
    ("ŋ", True,  "velar", "nasal", ()),               # ŋ
    ("x",  False, "velar", "fricative", ()),
    ("ɣ", True,  "velar", "fricative", ()),           # ɣ
    ("ɰ", True,  "velar", "approximant", ("glide",)),  # ɰ
    ("ʟ", True,  "velar", "approximant", ("lat",)),   # ʟ
    ("ɠ", True,  "velar", "implosive", ()),           # ɠ
    ("ɧ", False, "velar", "fricative", ()),           # ɧ
    # uvular
    ("q",  False, "uvular", "plosive", ()),
    ("ɢ", True,  "uvular", "plosive", ()),            # ɢ
    ("ɴ", True,  "uvular", "nasal", ()),              # ɴ
    ("ʀ", True,  "uvular", "trill", ()),              # ʀ
    ("χ", False, "uvular", "fricative", ()),          # χ
    ("ʁ", True,  "uvular", "fricative", ()),          # ʁ
    ("ʛ", True,  "uvular", "implosive", ()),          # ʛ
    # pharyngeal / epiglottal
    ("ħ", False, "pharyngeal", "fricative", ()),      # ħ
    ("ʕ", True,  "pharyngeal", "fricative", ()),      # ʕ
    ("ʜ", False, "pharyngeal", "fricative", ()),      # ʜ
    ("ʢ", True,  "pharyngeal", "fricative", ()),      # ʢ
    ("ʡ", False, "pharyngeal", "plosive", ("cg",)),   # ʡ
    # glottal
    ("ʔ", False, "glottal", "plosive", ("glide", "cg")),  # ʔ
    ("h",  False, "glottal", "fricative", ("glide", "sg")),
    ("ɦ", True,  "glottal", "fricative", ("glide", "sg")),  # ɦ
    # double articulations
    ("w",  True,  "labialvelar", "approximant", ("glide", "round")),
    ("ʍ", False, "labialvelar", "fricative", ("glide", "round")),  # ʍ
    ("ɥ", True,  "labialpalatal", "approximant", ("glide", "round")),  # ɥ
]

TIE = "͡"

# affricates and doubly articulated stops written with a tie bar
CLUSTERS = [
    (f"t{TIE}s",          False, "alveolar", "affricate", ("strid",)),
    (f"d{TIE}z",          True,  "alveolar", "affricate", ("strid",)),
    (f"t{TIE}ʃ",     False, "postalveolar", "affricate", ("strid",)),   # t͡ʃ
    (f"d{TIE}ʒ",     True,  "postalveolar", "affricate", ("strid",)),   # d͡ʒ
    (f"t{TIE}ɕ",     False, "alveolopalatal", "affricate", ("strid",)),  # t͡ɕ
    (f"d{TIE}ʑ",     True,  "alveolopalatal", "affricate", ("strid",)),  # d͡ʑ
    (f"ʈ{TIE}ʂ", False, "retroflex", "affricate", ("strid",)),      # ʈ͡ʂ
    (f"ɖ{TIE}ʐ", True,  "retroflex", "affricate", ("strid",)),      # ɖ͡ʐ
    (f"t{TIE}ɬ",     False, "alveolar", "affricate", ("lat",)),          # t͡ɬ
    (f"d{TIE}ɮ",     True,  "alveolar", "affricate", ("lat",)),          # d͡ɮ
    (f"p{TIE}f",          False, "labiodental", "affricate", ("strid",)),
    (f"b{TIE}v",          True,  "labiodental", "affricate", ("strid",)),
    (f"k{TIE}x",          False, "velar", "affricate", ()),
    (f"q{TIE}χ",     False, "uvular", "affricate", ()),
    (f"k{TIE}p",          False, "labialvelar", "plosive", ()),
    (f"ɡ{TIE}b",     True,  "labialvelar", "plosive", ()),
    (f"ŋ{TIE}m",     True,  "labialvelar", "nasal", ()),
]

# symbol, height, backness, rounded, tense(+1/-1/0)
# heights: close, nearclose, closemid, mid, openmid, nearopen, open
VOWELS = [
    ("i",  "close", "front", False, +1),
    ("y",  "close", "front", True,  +1),
    ("ɨ", "close", "central", False, +1),   # ɨ
    ("ʉ", "close", "central", True,  +1),   # ʉ
    ("ɯ", "close", "back", False, +1),      # ɯ
    ("u",  "close", "back", True,  +1),
    ("ɪ", "nearclose", "front", False, -1),  # ɪ
    ("ʏ", "nearclose", "front", True,  -1),  # ʏ
    ("ʊ", "nearclose", "back", True,  -1),   # ʊ
    ("e",  "closemid", "front", False, +1),
    ("ø", "closemid", "front", True,  +1),  # ø
    ("ɘ", "closemid", "central", False, -1),  # ɘ
    ("ɵ", "closemid", "central", True,  -1),  # ɵ
    ("ɤ", "closemid", "back", False, +1),   # ɤ
    ("o",  "closemid", "back", True,  +1),
    ("ə", "mid", "central", False, -1),     # ə
    ("ɛ", "openmid", "front", False, -1),   # ɛ
    ("œ", "openmid", "front", True,  -1),   # œ
    ("ɜ", "openmid", "central", False, -1),  # ɜ
    ("ɞ", "openmid", "central", True,  -1),  # ɞ
    ("ʌ", "openmid", "back", False, -1),    # ʌ
    ("ɔ", "openmid", "back", True,  -1),    # ɔ
    ("æ", "nearopen", "front", False, 0),   # æ
    ("ɐ", "nearopen", "central", False, 0),  # ɐ
    ("a",  "open", "front", False, 0),
    ("ɶ", "open", "front", True,  0),       # ɶ
    ("ɑ", "open", "back", False, 0),        # ɑ
    ("ɒ", "open", "back", True,  0),        # ɒ
]

# r-colored vowels keep their plain-vowel row plus [+cor]
RHOTIC_VOWELS = [("ɚ", "ə"), ("ɝ", "ɜ")]  # ɚ←ə, ɝ←ɜ

# Chao tone letters: only the two tone features are specified
TONE_LETTERS = {
    "˥": {"hitone": +1, "hireg": +1},  # ˥ extra high
    "˦": {"hitone": +1, "hireg": -1},  # ˦ high
    "˧": {},                            # ˧ mid
    "˨": {"hitone": -1, "hireg": +1},  # ˨ low
    "˩": {"hitone": -1, "hireg": -1},  # ˩ extra low
}

# diacritics in default priority order (rank 1 = retained on simplification),
# each with its partial feature assignment
DIACRITICS = [
    ("ː", {"long": +1}),                  # ː length
    ("̃", {"nas": +1}),                   # ̃ nasalized
    ("ʰ", {"sg": +1}),                    # ʰ aspirated
    ("ʲ", {"hi": +1, "back": -1}),        # ʲ palatalized
    ("ʷ", {"lab": +1, "round": +1}),      # ʷ labialized
    ("̥", {"voi": -1}),                   # ̥ voiceless
    ("ʼ", {"cg": +1}),                    # ʼ ejective
    ("̪", {"ant": +1, "distr": +1}),      # ̪ dental
    ("̩", {"syl": +1}),                   # ̩ syllabic
    ("ˤ", {"lo": +1, "back": +1}),        # ˤ pharyngealized
    ("̬", {"voi": +1}),                   # ̬ voiced
    ("̰", {"voi": +1, "cg": +1}),         # ̰ creaky
    ("̤", {"voi": +1, "sg": +1}),         # ̤ breathy
    ("ˠ", {"hi": +1, "back": +1}),        # ˠ velarized
    ("̯", {"syl": -1}),                   # ̯ non-syllabic
    ("ˑ", {"long": +1}),                  # ˑ half-long
    ("ⁿ", {"nas": +1}),                   # ⁿ nasal release
    ("ˡ", {"lat": +1}),                   # ˡ lateral release
    ("̚", {"cont": -1}),                  # ̚ unreleased
    ("̘", {"tense": +1}),                 # ̘ advanced tongue root
    ("̙", {"tense": -1}),                 # ̙ retracted tongue root
    ("̈", {"back": 0}),                   # ̈ centralized
    ("˞", {"cor": +1}),                   # ˞ rhotacized
    ("̟", {"back": -1}),                  # ̟ advanced
    ("̠", {"back": +1}),                  # ̠ retracted
]

# deprecated spelling -> canonical spelling (values never appear as keys)
UNIFICATIONS = [
    ("g", "ɡ"),            # ASCII g → ɡ
    (":", "ː"),            # ASCII colon → ː
    ("'", "ʼ"),            # ASCII apostrophe → ʼ
    ("’", "ʼ"),       # right quote → ʼ
    ("!", "ǃ"),            # bang → ǃ alveolar click
    ("|", "ǀ"),            # pipe → ǀ dental click
    ("φ", "ɸ"),       # Greek φ → ɸ
    ("ε", "ɛ"),       # Greek ε → ɛ
    ("α", "ɑ"),       # Greek α → ɑ
    ("γ", "ɣ"),       # Greek γ → ɣ
    ("δ", "ð"),       # Greek δ → ð
    ("υ", "ʊ"),       # Greek υ → ʊ
    ("ɩ", "ɪ"),       # ɩ (withdrawn iota) → ɪ
    ("ɷ", "ʊ"),       # ɷ (withdrawn closed omega) → ʊ
    ("ʚ", "ɞ"),       # ʚ → ɞ
    ("ˁ", "ˤ"),       # ˁ → ˤ
    ("̊", "̥"),       # ring above → ring below (voiceless)
    ("͜", "͡"),       # tie bar below → tie bar above
    ("ʧ", "t͡ʃ"),        # ʧ → t͡ʃ
    ("ʤ", "d͡ʒ"),        # ʤ → d͡ʒ
    ("ʦ", "t͡s"),             # ʦ → t͡s
    ("ʣ", "d͡z"),             # ʣ → d͡z
    ("ʨ", "t͡ɕ"),        # ʨ → t͡ɕ
    ("ʥ", "d͡ʑ"),        # ʥ → d͡ʑ
]


def _segment_row(voiced, place, manner, flags):
    row = {name: -1 for name in FEATURES}
    row["distr"] = 0
    row["tense"] = 0
    row["hitone"] = 0
    row["hireg"] = 0
    son, cont, delrel = MANNERS[manner]
    row["son"], row["cont"], row["delrel"] = son, cont, delrel
    ant, cor, distr, lab, hi, lo, back = PLACES[place]
    row.update(ant=ant, cor=cor, distr=distr, lab=lab, hi=hi, lo=lo, back=back)
    row["cons"] = -1 if "glide" in flags else +1
    row["nas"] = +1 if manner == "nasal" else -1
    row["lat"] = +1 if "lat" in flags else -1
    row["voi"] = +1 if voiced else -1
    row["strid"] = +1 if "strid" in flags else -1
    row["sg"] = +1 if "sg" in flags else -1
    row["cg"] = +1 if ("cg" in flags or manner == "implosive") else -1
    row["round"] = +1 if "round" in flags else -1
    row["velaric"] = +1 if manner == "click" else -1
    if "hi" in flags:
        row["hi"] = +1
    if "back" in flags:
        row["back"] = +1
    return row


def _vowel_row(height, backness, rounded, tense):
    row = {name: -1 for name in FEATURES}
    row.update(syl=+1, son=+1, cons=-1, cont=+1, voi=+1)
    row["ant"] = 0
    row["cor"] = 0
    row["distr"] = 0
    row["hitone"] = 0
    row["hireg"] = 0
    row["hi"] = +1 if height in ("close", "nearclose") else -1
    row["lo"] = +1 if height in ("nearopen", "open") else -1
    row["back"] = {"front": -1, "central": 0, "back": +1}[backness]
    row["round"] = +1 if rounded else -1
    row["lab"] = row["round"]
    row["tense"] = tense
    return row


def _tone_row(spec):
    row = {name: 0 for name in FEATURES}
    row.update(spec)
    return row


def _fmt(value) -> str:
    return {1: "+", -1: "-", 0: "0"}[value]


def main() -> None:
    DATA_DIR.mkdir(parents=True, exist_ok=True)

    rows: list[tuple[str, dict]] = []
    for symbol, voiced, place, manner, flags in CONSONANTS + CLUSTERS:
        rows.append((symbol, _segment_row(voiced, place, manner, flags)))
    vowel_rows = {}
    for symbol, height, backness, rounded, tense in VOWELS:
        row = _vowel_row(height, backness, rounded, tense)
        vowel_rows[symbol] = row
        rows.append((symbol, row))
    for rhotic, plain in RHOTIC_VOWELS:
        row = dict(vowel_rows[plain])
        row["cor"] = +1
        rows.append((rhotic, row))
    for symbol, spec in TONE_LETTERS.items():
        rows.append((symbol, _tone_row(spec)))

    seen = set()
    for symbol, _ in rows:
        if symbol in seen:
            raise SystemExit(f"duplicate symbol in generator: {symbol!r}")
        seen.add(symbol)

    header = "phone\t" + "\t".join(FEATURES)
    lines = [header]
    for symbol, row in rows:
        lines.append(symbol + "\t" + "\t".join(_fmt(row[f]) for f in FEATURES))
    (DATA_DIR / "feature_table.tsv").write_text("\n".join(lines) + "\n", encoding="utf-8")

    mod_lines = ["kind\tphone\t" + "\t".join(FEATURES)]
    for symbol, assignment in DIACRITICS:
        cells = [_fmt(assignment[f]) if f in assignment else "." for f in FEATURES]
        mod_lines.append("diacritic\t" + symbol + "\t" + "\t".join(cells))
    (DATA_DIR / "feature_modifiers.tsv").write_text(
        "\n".join(mod_lines) + "\n", encoding="utf-8"
    )

    (DATA_DIR / "ipa_bases.txt").write_text(
        "\n".join(symbol for symbol, _ in rows) + "\n", encoding="utf-8"
    )
    (DATA_DIR / "diacritics.txt").write_text(
        "\n".join(symbol for symbol, _ in DIACRITICS) + "\n", encoding="utf-8"
    )
    (DATA_DIR / "unicode_unifications.tsv").write_text(
        "\n".join(f"{old}\t{new}" for old, new in UNIFICATIONS) + "\n", encoding="utf-8"
    )

    print(f"wrote {len(rows)} feature rows, {len(DIACRITICS)} modifiers, "
          f"{len(UNIFICATIONS)} unifications to {DATA_DIR}")


if __name__ == "__main__":
    main()
