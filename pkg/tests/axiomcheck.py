"""Randomized endpoint-model checks for every shipped axiom.

Composition axioms are checked on constructed triples (the antecedent is
made true by placement, never vacuous). The temporal axioms are checked
against calendar models: per-granularity span lines laid out in code order
(adjacent spans may meet), coded intervals inside their spans, and witness
conditions for the izen/ikou schemata under the closed-boundary convention
(a manufactured witness may sit at a span edge).
"""

from __future__ import annotations

import itertools
import random

from tempnli.temporal import RELATIONS, rel_holds


def random_interval(rng: random.Random, lo=0, hi=60, min_len=2):
    a1 = rng.randint(lo, hi)
    return (a1, a1 + rng.randint(min_len, min_len + 6))


def sample_related(rel: str, a, rng: random.Random):
    """A random interval b with rel_holds(rel, a, b); a has length >= 2."""
    a1, a2 = a
    if rel == "before":
        b1 = a2 + rng.choice([0, 0, 1, 3])
        return (b1, b1 + rng.randint(2, 6))
    if rel == "after":
        b2 = a1 - rng.choice([0, 0, 1, 3])
        return (b2 - rng.randint(2, 6), b2)
    if rel == "overlaps":
        b1 = rng.randint(a1 + 1, a2 - 1)
        return (b1, a2 + rng.randint(1, 4))
    if rel == "overlapped_by":
        b2 = rng.randint(a1 + 1, a2 - 1)
        return (a1 - rng.randint(1, 4), b2)
    if rel == "during":
        return (a1 - rng.choice([0, 0, 1, 3]), a2 + rng.choice([0, 0, 1, 3]))
    if rel == "contains":
        b1 = rng.randint(a1, a2 - 1)
        return (b1, rng.randint(b1 + 1, a2))
    if rel == "equal":
        return a
    raise ValueError(rel)


def check_composition(r1: str, r2: str, consequent, rng: random.Random) -> bool:
    a = random_interval(rng)
    b = sample_related(r1, a, rng)
    if b[0] >= b[1]:
        return True  # degenerate draw; skip
    while b[1] - b[0] < 2:
        b = (b[0], b[1] + 2)
        if not rel_holds(r1, a, b):
            return True
    c = sample_related(r2, b, rng)
    if not (rel_holds(r1, a, b) and rel_holds(r2, b, c)):
        return True
    return any(rel_holds(r3, a, c) for r3 in consequent)


def sample_span_line(rng: random.Random, k: int, code_lo=1, code_hi=40):
    """k calendar spans in code order; adjacent spans meet or leave a gap."""
    codes = sorted(rng.sample(range(code_lo, code_hi), k))
    pos = rng.randint(0, 4)
    spans = {}
    for code in codes:
        pos += rng.choice([0, 0, 1, 3])
        end = pos + rng.randint(2, 6)
        spans[code] = (pos, end)
        pos = end
    return spans


def interval_in(span, rng: random.Random):
    s1, s2 = span
    x1 = rng.randint(s1, s2 - 1)
    return (x1, rng.randint(x1 + 1, s2))


def _check_izen_ikou(name: str, rng: random.Random) -> bool:
    insert = "insert" in name
    izen = "izen" in name
    if name.endswith("_dow"):
        spans = sample_span_line(rng, 7, 1, 8)
        codes = sorted(spans)
    else:
        spans = sample_span_line(rng, rng.randint(2, 5))
        codes = sorted(spans)
    code_i = rng.choice(codes)
    x = interval_in(spans[code_i], rng)
    if insert:
        r = x
    elif izen:
        r2 = x[0] - rng.choice([0, 1, 3])
        r = (r2 - rng.randint(1, 5), r2)
        assert rel_holds("before", r, x)
    else:
        r1 = x[1] + rng.choice([0, 1, 3])
        r = (r1, r1 + rng.randint(1, 5))
        assert rel_holds("after", r, x)
    witness_codes = [j for j in codes if (j >= code_i if izen else j <= code_i)]
    for j in witness_codes:
        span_j = spans[j]
        if izen:
            # a witness Z within span_j with before(R, Z) exists (Z may be a
            # sliver at the right edge) iff R ends by the span's end
            if not r[1] <= span_j[1]:
                return False
        else:
            if not span_j[0] <= r[0]:
                return False
    return True


def check_temporal_axiom(name: str, rng: random.Random) -> bool:
    if name.startswith(("ax_izen", "ax_ikou")):
        return _check_izen_ikou(name, rng)
    if name == "ax_speech_identity":
        s = random_interval(rng)
        return rel_holds("equal", s, s)  # one speech interval per model
    if name == "ax_code_order":
        spans = sample_span_line(rng, rng.randint(2, 5))
        codes = sorted(spans)
        c1, c2 = sorted(rng.sample(codes, 2))
        x = interval_in(spans[c1], rng)
        y = interval_in(spans[c2], rng)
        return rel_holds("before", x, y)
    if name == "ax_dow_order":
        spans = sample_span_line(rng, 7, 1, 8)
        d1, d2 = sorted(rng.sample(sorted(spans), 2))
        return rel_holds("before", interval_in(spans[d1], rng),
                         interval_in(spans[d2], rng))
    if name in ("ax_member_month", "ax_member_year"):
        outer = random_interval(rng, min_len=6)
        mid = interval_in((outer[0], outer[1] - 1), rng)
        while mid[1] - mid[0] < 2:
            mid = interval_in((outer[0], outer[1] - 1), rng)
        x = interval_in(mid, rng)
        container = mid if name == "ax_member_month" else outer
        return rel_holds("during", x, container) if rel_holds("during", mid, outer) else True
    a = random_interval(rng)
    b = random_interval(rng)
    if name == "ax_during_refl":
        return rel_holds("during", a, a)
    if name == "ax_contains_refl":
        return rel_holds("contains", a, a)
    if name == "ax_equal_refl":
        return rel_holds("equal", a, a)
    if name == "ax_equal_during":
        return rel_holds("during", a, a)
    if name == "ax_equal_contains":
        return rel_holds("contains", a, a)
    if name == "ax_convex_during":
        r = random_interval(rng, min_len=10)
        x = (r[0], r[0] + rng.randint(1, 2))
        z = (r[1] - rng.randint(1, 2), r[1])
        y1 = rng.randint(x[1], z[0] - 1) if x[1] < z[0] else x[1]
        y = (y1, max(y1 + 1, min(z[0], y1 + rng.randint(1, 2))))
        if not (rel_holds("during", x, r) and rel_holds("during", z, r)
                and rel_holds("before", x, y) and rel_holds("before", y, z)):
            return True
        return rel_holds("during", y, r)
    if name == "ax_before_irrefl":
        return not rel_holds("before", a, a)
    if name == "ax_after_irrefl":
        return not rel_holds("after", a, a)
    if name == "ax_overlaps_irrefl":
        return not rel_holds("overlaps", a, a)
    if name == "ax_overlapped_by_irrefl":
        return not rel_holds("overlapped_by", a, a)
    if name == "ax_before_after_excl":
        return not (rel_holds("before", a, b) and rel_holds("after", a, b))
    if name == "ax_before_asym":
        b = sample_related("before", a, rng)
        return not rel_holds("before", b, a)
    if name == "ax_after_asym":
        b = sample_related("after", a, rng)
        return not rel_holds("after", b, a)
    if name.startswith("ax_conv_"):
        rel = {"ax_conv_after": "after", "ax_conv_overlapped_by": "overlapped_by",
               "ax_conv_contains": "contains", "ax_conv_equal": "equal"}[name]
        conv = {"after": "before", "overlapped_by": "overlaps",
                "contains": "during", "equal": "equal"}[rel]
        return rel_holds(rel, a, b) == rel_holds(conv, b, a)
    raise ValueError(f"no checker for {name}")


def run_soundness_suite(samples_per_axiom: int, seed: int = 0) -> dict[str, int]:
    """Violations per axiom name over randomized models; all should be 0."""
    from tempnli.axioms import composition_table, temporal_axioms

    rng = random.Random(seed)
    violations: dict[str, int] = {}
    table = composition_table()
    for r1, r2 in itertools.product(RELATIONS, RELATIONS):
        name = f"ax_comp_{r1}_{r2}"
        bad = 0
        for _ in range(samples_per_axiom):
            if not check_composition(r1, r2, table[(r1, r2)], rng):
                bad += 1
        violations[name] = bad
    for axiom in temporal_axioms():
        bad = 0
        for _ in range(samples_per_axiom):
            if not check_temporal_axiom(axiom.name, rng):
                bad += 1
        violations[axiom.name] = bad
    return violations
