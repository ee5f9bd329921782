"""Deterministic construction of two contrasting desk-scale corpora.

Real Easy Language corpora cannot ship with the library, so experiments
and the acceptance suite use synthetic German text drawn from two small
template grammars with a seeded Mersenne Twister:

* the easy style writes one short main clause per line (3-8 common,
  mostly mono- or disyllabic words, occasional hyphenated compounds);
* the normal style writes long administrative sentences (18 words and
  up, polysyllabic nouns, subordinate clauses set off by commas) and
  groups several sentences into one paragraph per line.

The two styles share function words but differ in vocabulary weighting,
sentence length, and line structure, which is exactly the contrast the
style diagnostics are meant to pick up. Identical seeds reproduce
identical corpora everywhere.
"""

from __future__ import annotations

import random

from .complexity import LabeledSentence

__all__ = [
    "easy_sentences",
    "normal_sentences",
    "easy_document",
    "normal_document",
    "labeled_complexity_dataset",
]

_EASY_SUBJECTS = [
    "Der Hund", "Die Katze", "Das Kind", "Der Mann", "Die Frau", "Der Ball",
    "Die Sonne", "Der Baum", "Das Auto", "Die Schule", "Der Lehrer",
    "Die Mutter", "Der Vater", "Das Brot", "Der Garten", "Die Blume",
    "Der Vogel", "Das Wasser", "Der Freund", "Die Stadt", "Das Wohn-Haus",
    "Der Sport-Platz", "Die Stadt-Mitte", "Der Bus-Fahrer",
]
_EASY_VERBS = [
    "schläft", "lacht", "spielt", "singt", "wartet", "kommt", "bleibt",
    "tanzt", "ruht", "winkt", "hilft", "läuft",
]
_EASY_TRANSITIVE = [
    "isst", "mag", "sieht", "holt", "sucht", "findet", "hat", "braucht",
    "kauft", "malt",
]
_EASY_OBJECTS = [
    "das Brot", "einen Apfel", "die Suppe", "ein Buch", "den Ball",
    "eine Blume", "das Bild", "einen Hut", "die Tasse", "ein Spiel",
]
_EASY_ADJECTIVES = [
    "klein", "groß", "gut", "alt", "neu", "rot", "schön", "froh", "laut",
    "leise", "warm", "kalt", "müde", "satt",
]
_EASY_PLACES = [
    "im Haus", "im Garten", "in der Schule", "am See", "im Park",
    "zu Hause", "am Markt",
]

_NORMAL_SUBJECTS = [
    "Die Bundesregierung", "Die Stadtverwaltung", "Die Landesregierung",
    "Der Gemeinderat", "Die Universität", "Das Unternehmen",
    "Die Organisation", "Der Planungsausschuss", "Die Kommission",
    "Das Ministerium", "Die Handelskammer", "Der Landkreis",
]
_NORMAL_TOPICS = [
    "die Entscheidung über die zukünftige Finanzierung",
    "die Entwicklung der regionalen Infrastruktur",
    "die Untersuchung der wirtschaftlichen Rahmenbedingungen",
    "die Verordnung zur Modernisierung der Verwaltung",
    "die Genehmigung der geplanten Baumaßnahmen",
    "die Digitalisierung der öffentlichen Einrichtungen",
    "die Neuordnung der bestehenden Zuständigkeiten",
    "die Bewertung der vorliegenden Untersuchungsergebnisse",
]
_NORMAL_VERBS = [
    "beschlossen", "angekündigt", "veröffentlicht", "diskutiert",
    "untersucht", "verabschiedet", "vorgestellt", "geprüft",
]
_NORMAL_TIMES = [
    "am Dienstag", "im vergangenen Jahr", "nach langer Beratung",
    "in der vergangenen Woche", "bereits im Frühjahr",
    "nach intensiven Verhandlungen",
]
_NORMAL_CLAUSES = [
    "dass die geplanten Maßnahmen erst nach einer gründlichen Prüfung umgesetzt werden können",
    "obwohl die finanziellen Mittel der beteiligten Gemeinden weiterhin begrenzt bleiben",
    "welche die langfristige Entwicklung der gesamten Region erheblich beeinflussen dürfte",
    "da die Verantwortlichen eine umfassende Beteiligung der Bevölkerung zugesagt haben",
    "während die betroffenen Einrichtungen zusätzliche Unterstützung angefordert haben",
    "sofern die zuständigen Behörden den überarbeiteten Vorschlägen zustimmen sollten",
]
_NORMAL_TAILS = [
    "und kündigte weitere Gespräche mit den beteiligten Institutionen an",
    "und verwies auf die Bedeutung einer verlässlichen langfristigen Planung",
    "und betonte die Notwendigkeit zusätzlicher organisatorischer Veränderungen",
]


def easy_sentences(n: int, seed: int) -> list[str]:
    """``n`` short Easy-Language-style sentences, deterministically."""
    rng = random.Random(seed)
    sentences = []
    for _ in range(n):
        subject = rng.choice(_EASY_SUBJECTS)
        pattern = rng.randrange(5)
        if pattern == 0:
            sentence = f"{subject} {rng.choice(_EASY_VERBS)}."
        elif pattern == 1:
            sentence = f"{subject} ist {rng.choice(_EASY_ADJECTIVES)}."
        elif pattern == 2:
            sentence = f"{subject} {rng.choice(_EASY_TRANSITIVE)} {rng.choice(_EASY_OBJECTS)}."
        elif pattern == 3:
            sentence = f"{subject} {rng.choice(_EASY_VERBS)} {rng.choice(_EASY_PLACES)}."
        else:
            sentence = (
                f"{subject} {rng.choice(_EASY_TRANSITIVE)} "
                f"{rng.choice(_EASY_OBJECTS)} {rng.choice(_EASY_PLACES)}."
            )
        sentences.append(sentence)
    return sentences


def normal_sentences(n: int, seed: int) -> list[str]:
    """``n`` long standard-register sentences, deterministically."""
    rng = random.Random(seed)
    sentences = []
    for _ in range(n):
        subject = rng.choice(_NORMAL_SUBJECTS)
        topic = rng.choice(_NORMAL_TOPICS)
        verb = rng.choice(_NORMAL_VERBS)
        time = rng.choice(_NORMAL_TIMES)
        clause = rng.choice(_NORMAL_CLAUSES)
        if rng.randrange(2):
            sentence = f"{subject} hat {topic} {time} {verb}, {clause}."
        else:
            sentence = (
                f"{subject} hat {time} {topic} {verb}, {clause}, "
                f"{rng.choice(_NORMAL_TAILS)}."
            )
        sentences.append(sentence)
    return sentences


def easy_document(sentences: list[str]) -> str:
    """Easy Language layout: one sentence per line."""
    return "\n".join(sentences) + "\n"


def normal_document(sentences: list[str], per_paragraph: int = 4) -> str:
    """Standard layout: several sentences joined into one line per paragraph."""
    paragraphs = [
        " ".join(sentences[i : i + per_paragraph])
        for i in range(0, len(sentences), per_paragraph)
    ]
    return "\n".join(paragraphs) + "\n"


def labeled_complexity_dataset(n: int, seed: int) -> list[LabeledSentence]:
    """Sentences with complexity labels correlated with their style.

    Easy-style sentences receive labels in the low band, normal-style
    sentences in the high band, with seeded uniform jitter. Shuffled so
    downstream splits see both styles everywhere.
    """
    rng = random.Random(seed)
    half = n // 2
    rows = [
        LabeledSentence(text, round(rng.uniform(1.3, 3.2), 3))
        for text in easy_sentences(half, seed + 1)
    ] + [
        LabeledSentence(text, round(rng.uniform(4.2, 6.7), 3))
        for text in normal_sentences(n - half, seed + 2)
    ]
    rng.shuffle(rows)
    return rows
