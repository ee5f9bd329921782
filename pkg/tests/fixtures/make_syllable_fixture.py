"""Freeze the hand-syllabified German word list.

Counts follow the documented rule (vowel groups; the digraphs ei, ie, au,
eu, äu, aa, ee, oo absorb their second vowel). Hand values are checked
against the independent regex oracle before freezing; any disagreement
aborts so it can be resolved by hand first.
"""

import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1]))
from oracles import oracle_count_syllables  # noqa: E402

HAND_COUNTS = {
    "Haus": 1, "Sonne": 2, "Baum": 1, "Bäume": 2, "Ei": 1, "Eier": 2,
    "Wiese": 2, "See": 1, "Boot": 1, "Saal": 1, "Leute": 2, "Häuser": 2,
    "Mann": 1, "Frau": 1, "Kind": 1, "Kinder": 2, "Schule": 2, "Lehrer": 2,
    "Regierung": 3, "Universität": 5, "Auto": 2, "Apfel": 2, "Birne": 2,
    "Banane": 3, "Zitrone": 3, "Tomate": 3, "Kartoffel": 3, "Brot": 1,
    "Milch": 1, "Wasser": 2, "Zucker": 2, "Butter": 2, "Katze": 2,
    "Hund": 1, "Vogel": 2, "Pferd": 1, "Maus": 1, "Fisch": 1, "Blume": 2,
    "Garten": 2, "Himmel": 2, "Wolke": 2, "Regen": 2, "Schnee": 1,
    "Wind": 1, "Sturm": 1, "Sommer": 2, "Winter": 2, "Herbst": 1,
    "Frühling": 2, "Montag": 2, "Dienstag": 2, "Mittwoch": 2,
    "Donnerstag": 3, "Freitag": 2, "Samstag": 2, "Sonntag": 2,
    "Morgen": 2, "Abend": 2, "Nacht": 1, "heute": 2, "morgen": 2,
    "gestern": 2, "schnell": 1, "langsam": 2, "gut": 1, "schlecht": 1,
    "schön": 1, "hässlich": 2, "klein": 1, "groß": 1, "neu": 1, "alt": 1,
    "jung": 1, "Bundesland": 3, "Bundes-Land": 3, "Krankenhaus": 3,
    "Feuerwehr": 3, "Polizei": 3, "Bibliothek": 4, "Familie": 3,
    "Garage": 3, "Maschine": 3, "Computer": 3, "Fenster": 2, "Türe": 2,
    "Stuhl": 1, "Tisch": 1, "Lampe": 2, "Spiegel": 2, "Treppe": 2,
    "Keller": 2, "Dach": 1, "Mauer": 2, "Straße": 2, "Insel": 2,
    "Meer": 1, "Ozean": 3, "Fluss": 1, "Gebirge": 3, "Typ": 1,
    "System": 2,
}


def main() -> None:
    mismatches = {
        w: (hand, oracle_count_syllables(w))
        for w, hand in HAND_COUNTS.items()
        if oracle_count_syllables(w) != hand
    }
    if mismatches:
        raise SystemExit(f"hand counts disagree with oracle: {mismatches}")
    out = pathlib.Path(__file__).with_name("syllable_cases.json")
    out.write_text(
        json.dumps(HAND_COUNTS, ensure_ascii=False, indent=1) + "\n", "utf-8"
    )
    print(f"wrote {len(HAND_COUNTS)} words to {out}")


if __name__ == "__main__":
    main()
