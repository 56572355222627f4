"""Deterministic corpus of valid line arrangements for the acceptance run.

Curated seeds cover generic position, the braid arrangement, near-pencils
with a single high-multiplicity point, and the degree-9 pair whose zero
sets differ by one root.  Seeded random arrangements of degree at most 7
top the corpus up to the required size; validation rejects non-reduced,
non-essential, or decomposable draws, so every retained entry is valid.
"""

import random
from functools import lru_cache

from bs3.arrangement import validate
from bs3.polyring import Bs3Error

import oracles

MINIMUM_SIZE = 40

CURATED = [
    ("generic4", oracles.GENERIC4),
    ("generic5", oracles.GENERIC5),
    ("generic6", oracles.GENERIC6),
    ("braid", oracles.BRAID),
    ("nearpencil3", "x,y,x+y,z,x+3y+z"),
    ("nearpencil4", "x,y,x+y,x+2y,z,x+3y+z"),
    ("nearpencil5", "x,y,x+y,x+2y,x+3y,z,x+4y+z"),
    ("twotriples5", "x,y,x+y,z,x+y+z"),
    ("mixed9", "x,y,z,x+y+z,x-y,x-z,y-z,x+y-z,2x+y+z"),
    ("ziegler_f", oracles.ZIEGLER_F),
    ("ziegler_g", oracles.ZIEGLER_G),
]


def _random_form(rng):
    while True:
        coeffs = tuple(rng.randint(-3, 3) for _ in range(3))
        if any(coeffs):
            return coeffs


def _coeff_csv(coeffs):
    names = ("x", "y", "z")
    parts = []
    for c, name in zip(coeffs, names):
        if c == 0:
            continue
        if c == 1:
            parts.append("+%s" % name)
        elif c == -1:
            parts.append("-%s" % name)
        else:
            parts.append("%+d%s" % (c, name))
    return "".join(parts).lstrip("+")


def _random_arrangement(rng):
    degree = rng.choice((4, 5, 6, 7))
    forms = [_coeff_csv(_random_form(rng)) for _ in range(degree)]
    return ",".join(forms)


@lru_cache(maxsize=1)
def build_corpus(minimum=MINIMUM_SIZE):
    """Return a list of (name, Arrangement), deterministic across runs."""
    entries = []
    seen = set()
    for name, csv in CURATED:
        arr = validate(csv.split(","))
        entries.append((name, arr))
        seen.add(arr.forms)
    rng = random.Random(20260814)
    attempt = 0
    while len(entries) < minimum:
        attempt += 1
        csv = _random_arrangement(rng)
        try:
            arr = validate(csv.split(","))
        except Bs3Error:
            continue
        if arr.forms in seen:
            continue
        seen.add(arr.forms)
        entries.append(("random%02d" % attempt, arr))
    return entries
