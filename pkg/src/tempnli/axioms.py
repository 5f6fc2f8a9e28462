"""The axiom inventory: 49 derived composition axioms + 30 temporal axioms.

Composition consequents are not hand-written: for every ordered relation
pair the admissible third relations are computed by exhaustive search over
all order types of three intervals, which makes the table sound against the
endpoint semantics by construction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .temporal import (
    CONVERSE, MONTH_FINE_TAGS, RELATIONS, YEAR_FINE_TAGS, holding_relations,
    rel_holds,
)
from .terms import (
    And, Eq, Exists, Forall, Imp, IntLit, Le, Lt, Not, Or, Term, Var, atom, conj,
)


@dataclass(frozen=True)
class Axiom:
    name: str
    term: Term


def _forall(names: str, body: Term) -> Term:
    out = body
    for n in reversed(names.split()):
        out = Forall(n, out)
    return out


def _disj(terms: list[Term]) -> Term:
    out = terms[0]
    for t in terms[1:]:
        out = Or(out, t)
    return out


# tie-break ranking for minimal consequents; equal first so that the
# identity compositions come out as (equal, R) -> R exactly
_COVER_RANK = ("equal", "before", "after", "overlaps", "overlapped_by",
               "during", "contains")


@lru_cache(maxsize=None)
def composition_table() -> dict[tuple[str, str], tuple[str, ...]]:
    """For each (R1, R2): the minimal consequent disjunction.

    Enumerating endpoint values over a 6-point grid covers every order type
    of the six endpoints, so the model collection per pair is exhaustive;
    the consequent is a minimum set of relations hitting every model
    (relations are not mutually exclusive, e.g. equal implies during, so the
    raw witness set would be needlessly weak).
    """
    models: dict[tuple[str, str], set[frozenset]] = {
        pair: set() for pair in itertools.product(RELATIONS, RELATIONS)
    }
    grid = range(6)
    for a1, a2 in itertools.combinations(grid, 2):
        for b1, b2 in itertools.combinations(grid, 2):
            for c1, c2 in itertools.combinations(grid, 2):
                a, b, c = (a1, a2), (b1, b2), (c1, c2)
                rels_ab = holding_relations(a, b)
                if not rels_ab:
                    continue
                rels_bc = holding_relations(b, c)
                if not rels_bc:
                    continue
                rels_ac = frozenset(holding_relations(a, c))
                for r1 in rels_ab:
                    for r2 in rels_bc:
                        models[(r1, r2)].add(rels_ac)
    table = {}
    for pair, sets in models.items():
        table[pair] = _min_cover(sets)
    return table


def _min_cover(sets: set[frozenset]) -> tuple[str, ...]:
    """Smallest relation set intersecting every model's holding set."""
    candidates = sorted(range(len(_COVER_RANK)))
    for size in range(1, len(_COVER_RANK) + 1):
        for combo in itertools.combinations(candidates, size):
            chosen = {_COVER_RANK[i] for i in combo}
            if all(chosen & s for s in sets):
                return tuple(r for r in RELATIONS if r in chosen)
    raise AssertionError("no cover found")


def derive_composition_axioms() -> list[Axiom]:
    """49 axioms: forall A,B,C. R1(A,B) & R2(B,C) -> R3a(A,C) | R3b(A,C) | ..."""
    table = composition_table()
    axioms = []
    a, b, c = Var("A"), Var("B"), Var("C")
    for r1 in RELATIONS:
        for r2 in RELATIONS:
            options = table[(r1, r2)]
            body = Imp(And(atom(r1, a, b), atom(r2, b, c)),
                       _disj([atom(r3, a, c) for r3 in options]))
            axioms.append(Axiom(f"ax_comp_{r1}_{r2}", _forall("A B C", body)))
    return axioms


def _izen_ikou(fn: str, rel: str, insert: bool, dow: bool) -> Term:
    """Insertion/replacement schema for 以前 (before) / 以降 (after).

    Insertion starts from an on-reading (X = R); replacement widens an
    existing bound. The manufactured witness keeps the granularity of X
    (weekday codes stay within 1..7).
    """
    i, j = Var("I"), Var("J")
    x, r = Var("X"), Var("R")
    code = lambda v: atom(fn, v)
    antecedent_rel = Eq(x, r) if insert else atom(rel, r, x)
    antecedent = And(Eq(code(x), i), antecedent_rel)
    j_guard = Le(i, j) if rel == "before" else Le(j, i)
    if dow:
        bound = And(Le(IntLit(1), j), Le(j, IntLit(7)))
        j_guard = And(j_guard, bound)
    if insert:
        y, z = Var("Y"), Var("Z")
        witness_core = And(atom(rel, z, y), Eq(z, r))
        parts = [Eq(code(y), j)]
        if not dow:
            parts.append(Eq(atom("gran", y), atom("gran", x)))
        witness = Exists("Y", conj(*parts, Exists("Z", witness_core)))
    else:
        z = Var("Z")
        parts = [Eq(code(z), j)]
        if not dow:
            parts.append(Eq(atom("gran", z), atom("gran", x)))
        parts.append(atom(rel, r, z))
        witness = Exists("Z", conj(*parts))
    return _forall("I X R", Imp(antecedent, Forall("J", Imp(j_guard, witness))))


def temporal_axioms() -> list[Axiom]:
    """The 30 axioms for temporal expressions and speech-time identity."""
    a, b = Var("A"), Var("B")
    x, y, z, r = Var("X"), Var("Y"), Var("Z"), Var("R")
    s1, s2 = Var("S1"), Var("S2")
    nort = lambda v: atom("normalized_time", v)
    gran = lambda v: atom("gran", v)
    dow = lambda v: atom("day_of_week", v)

    def iff(left: Term, right: Term) -> Term:
        return And(Imp(left, right), Imp(right, left))

    def gran_in(v: Term, tags) -> Term:
        return _disj([Eq(gran(v), IntLit(t)) for t in tags])

    axioms = [
        Axiom("ax_izen_insert", _izen_ikou("normalized_time", "before", True, False)),
        Axiom("ax_izen_replace", _izen_ikou("normalized_time", "before", False, False)),
        Axiom("ax_ikou_insert", _izen_ikou("normalized_time", "after", True, False)),
        Axiom("ax_ikou_replace", _izen_ikou("normalized_time", "after", False, False)),
        Axiom("ax_izen_insert_dow", _izen_ikou("day_of_week", "before", True, True)),
        Axiom("ax_izen_replace_dow", _izen_ikou("day_of_week", "before", False, True)),
        Axiom("ax_ikou_insert_dow", _izen_ikou("day_of_week", "after", True, True)),
        Axiom("ax_ikou_replace_dow", _izen_ikou("day_of_week", "after", False, True)),
        Axiom("ax_speech_identity",
              _forall("S1 S2", Imp(And(atom("speech_time", s1), atom("speech_time", s2)),
                                   Eq(s1, s2)))),
        Axiom("ax_code_order",
              _forall("X Y", Imp(And(Eq(gran(x), gran(y)), Lt(nort(x), nort(y))),
                                 atom("before", x, y)))),
        Axiom("ax_dow_order",
              _forall("X Y", Imp(Lt(dow(x), dow(y)), atom("before", x, y)))),
        Axiom("ax_conv_after",
              _forall("A B", iff(atom("after", a, b), atom("before", b, a)))),
        Axiom("ax_conv_overlapped_by",
              _forall("A B", iff(atom("overlapped_by", a, b), atom("overlaps", b, a)))),
        Axiom("ax_conv_contains",
              _forall("A B", iff(atom("contains", a, b), atom("during", b, a)))),
        Axiom("ax_conv_equal",
              _forall("A B", iff(atom("equal", a, b), atom("equal", b, a)))),
        Axiom("ax_member_month",
              _forall("X", Imp(gran_in(x, MONTH_FINE_TAGS),
                               atom("during", x, atom("month_span", x))))),
        Axiom("ax_member_year",
              _forall("X", Imp(gran_in(x, YEAR_FINE_TAGS),
                               atom("during", x, atom("year_span", x))))),
        Axiom("ax_during_refl", _forall("A", atom("during", a, a))),
        Axiom("ax_contains_refl", _forall("A", atom("contains", a, a))),
        Axiom("ax_equal_refl", _forall("A", atom("equal", a, a))),
        Axiom("ax_equal_during",
              _forall("A B", Imp(atom("equal", a, b), atom("during", a, b)))),
        Axiom("ax_equal_contains",
              _forall("A B", Imp(atom("equal", a, b), atom("contains", a, b)))),
        Axiom("ax_convex_during",
              _forall("X Y Z R",
                      Imp(conj(atom("during", x, r), atom("during", z, r),
                               atom("before", x, y), atom("before", y, z)),
                          atom("during", y, r)))),
        Axiom("ax_before_irrefl", _forall("A", Not(atom("before", a, a)))),
        Axiom("ax_after_irrefl", _forall("A", Not(atom("after", a, a)))),
        Axiom("ax_overlaps_irrefl", _forall("A", Not(atom("overlaps", a, a)))),
        Axiom("ax_overlapped_by_irrefl",
              _forall("A", Not(atom("overlapped_by", a, a)))),
        Axiom("ax_before_after_excl",
              _forall("A B", Not(And(atom("before", a, b), atom("after", a, b))))),
        Axiom("ax_before_asym",
              _forall("A B", Imp(atom("before", a, b), Not(atom("before", b, a))))),
        Axiom("ax_after_asym",
              _forall("A B", Imp(atom("after", a, b), Not(atom("after", b, a))))),
    ]
    return axioms


def all_axioms() -> list[Axiom]:
    return derive_composition_axioms() + temporal_axioms()
