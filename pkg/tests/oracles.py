"""Independent reference computations used to pin expected test values.

Everything in this module is intentionally written as a second, separate
derivation of the documented contracts: single-pass mega-regexes instead of
staged pipelines, Fraction arithmetic instead of floats, exhaustive
enumeration instead of dynamic programming. Fixture files under
tests/fixtures/ were generated from these oracles and frozen; the tests
assert that library code, frozen values, and oracles all agree.
"""

from __future__ import annotations

import html
import math
import re
from collections import Counter
from fractions import Fraction
from itertools import combinations

# ---------------------------------------------------------------------------
# markup stripping
# ---------------------------------------------------------------------------

_CONTROL = re.compile(r"[\x00-\x08\x0b\x0c\x0e-\x1f\x7f-\x9f]")
_TAG = re.compile(r"<[^>]*>")
_ENTITY_LEFTOVER = re.compile(r"&#[0-9]+;|&#[xX][0-9a-fA-F]+;|&[a-zA-Z][a-zA-Z0-9]*;")
_SCHEME_URL = re.compile(r"https?://\S+")
_WWW_TOKEN = re.compile(r"(?:(?<=\s)|^)www\.\S+")
_WS_RUN = re.compile(r"\s+")


def oracle_strip_markup(raw: str) -> str:
    s = _CONTROL.sub("", raw)
    for _ in range(10):
        decoded = html.unescape(s)
        if decoded == s:
            break
        s = decoded
    for _ in range(10):
        stripped = _TAG.sub(" ", s)
        if stripped == s:
            break
        s = stripped
    s = _ENTITY_LEFTOVER.sub(" ", s)
    s = _SCHEME_URL.sub(" ", s)
    s = _WWW_TOKEN.sub(" ", s)
    s = _WS_RUN.sub(lambda m: "\n" if "\n" in m.group() else " ", s)
    return s.strip()


# ---------------------------------------------------------------------------
# bullet conversion
# ---------------------------------------------------------------------------

_BULLET = re.compile(r"^\s*[•\-*–] ")


def _debullet(line: str) -> str:
    item = line
    while _BULLET.match(item):
        item = _BULLET.sub("", item, count=1)
    return item.strip()


def oracle_convert_bullets(text: str) -> str:
    out: list[str] = []
    run: list[str] = []

    def flush() -> None:
        if not run:
            return
        joined = ", ".join(run)
        if out and out[-1].endswith(":"):
            joined = out.pop() + " " + joined
        if joined and joined[-1] not in ".!?":
            joined += "."
        out.append(joined)
        run.clear()

    for line in text.split("\n"):
        if _BULLET.match(line):
            run.append(_debullet(line))
        else:
            flush()
            out.append(line)
    flush()
    return "\n".join(out)


# ---------------------------------------------------------------------------
# syllables (vowel groups with digraph absorption, via one alternation regex)
# ---------------------------------------------------------------------------

_SYLLABLE_GROUP = re.compile(r"ei|ie|au|eu|äu|aa|ee|oo|[aeiouäöüy]")


def oracle_count_syllables(word: str) -> int:
    if not any(ch.isalpha() for ch in word):
        return 0
    return len(_SYLLABLE_GROUP.findall(word.lower()))


# ---------------------------------------------------------------------------
# LCS by exhaustive subsequence enumeration (sequences of length <= 12)
# ---------------------------------------------------------------------------


def oracle_lcs_length(a: list[str], b: list[str]) -> int:
    if len(a) > len(b):
        a, b = b, a
    assert len(a) <= 12, "exhaustive oracle only for short sequences"

    def is_subseq(sub: tuple[str, ...], seq: list[str]) -> bool:
        it = iter(seq)
        return all(tok in it for tok in sub)

    for k in range(len(a), 0, -1):
        for idx in combinations(range(len(a)), k):
            if is_subseq(tuple(a[i] for i in idx), b):
                return k
    return 0


def oracle_rouge_l_instance(hyp: list[str], refs: list[list[str]]):
    """Max-F1 reference; P/R/F as exact fractions, returned as floats."""
    best = (Fraction(0), Fraction(0), Fraction(0))
    for ref in refs:
        if not hyp and not ref:
            cand = (Fraction(0), Fraction(0), Fraction(0))
        elif not hyp or not ref:
            cand = (Fraction(0), Fraction(0), Fraction(0))
        else:
            lcs = oracle_lcs_length(hyp, ref)
            p = Fraction(lcs, len(hyp))
            r = Fraction(lcs, len(ref))
            f = Fraction(0) if p + r == 0 else 2 * p * r / (p + r)
            cand = (p, r, f)
        if cand[2] > best[2]:
            best = cand
    return tuple(float(x) for x in best)


# ---------------------------------------------------------------------------
# BLEU (corpus level, Fraction precisions)
# ---------------------------------------------------------------------------


def _grams(tokens: list[str], n: int) -> Counter:
    return Counter(tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1))


def oracle_bleu(instances) -> dict:
    """instances: iterable of (hypothesis, references) token-list pairs."""
    eps = Fraction(1, 10**9)
    numer = [Fraction(0)] * 4
    denom = [Fraction(0)] * 4
    c = 0
    r = 0
    for hyp, refs in instances:
        c += len(hyp)
        r += min((len(ref) for ref in refs), key=lambda L: (abs(L - len(hyp)), L))
        for n in range(1, 5):
            hgrams = _grams(hyp, n)
            clipped = 0
            for g, cnt in hgrams.items():
                clipped += min(cnt, max(_grams(ref, n)[g] for ref in refs))
            numer[n - 1] += clipped
            denom[n - 1] += sum(hgrams.values())
    if c == 0:
        return {"bleu": 0.0, "precisions": [0.0] * 4, "brevity_penalty": 0.0}
    precisions = []
    log_sum = 0.0
    used = 0
    for n in range(4):
        if denom[n] == 0:
            precisions.append(0.0)
            continue
        p = numer[n] / denom[n]
        if p == 0:
            p = eps / denom[n]
        precisions.append(float(p))
        log_sum += math.log(p)
        used += 1
    bp = 1.0 if c >= r else math.exp(1 - Fraction(r, c))
    score = 0.0 if used == 0 else 100.0 * bp * math.exp(log_sum / used)
    return {"bleu": score, "precisions": precisions, "brevity_penalty": bp}


# ---------------------------------------------------------------------------
# SARI (per-instance, Fraction arithmetic)
# ---------------------------------------------------------------------------


def _sari_ngram_level(src: Counter, hyp: Counter, refs: list[Counter], identical: bool):
    numref = len(refs)
    rall = Counter()
    for rc in refs:
        rall.update(rc)
    s_rep = Counter({g: c * numref for g, c in src.items()})
    h_rep = Counter({g: c * numref for g, c in hyp.items()})

    keep_cand = s_rep & h_rep
    keep_good = keep_cand & rall
    keep_all = s_rep & rall
    kp = Fraction(0)
    kr = Fraction(0)
    for g in keep_good:
        kp += Fraction(keep_good[g], keep_cand[g])
        kr += Fraction(keep_good[g], keep_all[g])
    keep_p = Fraction(0) if not keep_cand else kp / len(keep_cand)
    keep_r = Fraction(0) if not keep_all else kr / len(keep_all)
    if keep_p + keep_r > 0:
        keep = 2 * keep_p * keep_r / (keep_p + keep_r)
    elif identical:
        keep = Fraction(1)
    else:
        keep = Fraction(0)

    del_cand = s_rep - h_rep
    del_good = del_cand - rall
    dp = Fraction(0)
    for g in del_good:
        dp += Fraction(del_good[g], del_cand[g])
    delete = Fraction(0) if not del_cand else dp / len(del_cand)

    add_cand = set(hyp) - set(src)
    add_good = add_cand & set(rall)
    add_all = set(rall) - set(src)
    add_p = Fraction(0) if not add_cand else Fraction(len(add_good), len(add_cand))
    add_r = Fraction(0) if not add_all else Fraction(len(add_good), len(add_all))
    add = Fraction(0) if add_p + add_r == 0 else 2 * add_p * add_r / (add_p + add_r)

    return keep, add, delete


def oracle_sari_instance(src: list[str], hyp: list[str], refs: list[list[str]]):
    identical = all(ref == src for ref in refs) and hyp == src
    keeps, adds, dels = [], [], []
    for n in range(1, 5):
        k, a, d = _sari_ngram_level(
            _grams(src, n), _grams(hyp, n), [_grams(r, n) for r in refs], identical
        )
        keeps.append(k)
        adds.append(a)
        dels.append(d)
    f_keep = sum(keeps) / 4
    f_add = sum(adds) / 4
    p_del = sum(dels) / 4
    score = (f_keep + f_add + p_del) / 3 * 100
    return {
        "sari": float(score),
        "f_keep": float(f_keep * 100),
        "f_add": float(f_add * 100),
        "p_del": float(p_del * 100),
    }


def oracle_sari(instances) -> dict:
    """instances: iterable of (source, hypothesis, references)."""
    rows = [oracle_sari_instance(s, h, r) for s, h, r in instances]
    n = len(rows)
    return {key: math.fsum(row[key] for row in rows) / n for key in rows[0]}
