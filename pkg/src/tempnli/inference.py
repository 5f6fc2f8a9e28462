"""Automatic type completion for the untyped logical forms.

Composition produces untyped terms; before emission every constant needs a
type over the base sorts E (entity), Ev (event), Prop, I (interval) and Int
(normalized-time codes). The interval theory's own symbols are pinned
(THEORY_SIGNATURE) and everything else is solved by unification.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .terms import (
    Abs, And, App, Arrow, Base, Const, E, EV, Eq, Exists, Forall, I, INT,
    IntLit, Le, Lt, Not, Or, Imp, PROP, SemType, Term, Top, Var, arrow,
)


class TypeConflict(Exception):
    def __init__(self, name: str, t1, t2):
        super().__init__(f"conflicting types for {name}: {t1!r} vs {t2!r}")
        self.name = name
        self.t1 = t1
        self.t2 = t2


@dataclass(frozen=True)
class _TVar(SemType):
    id: int

    def __repr__(self):
        return f"?{self.id}"


INTERVAL_RELATIONS = (
    "before", "after", "overlaps", "overlapped_by", "during", "contains", "equal",
)

THEORY_SIGNATURE: dict[str, SemType] = {
    **{rel: arrow(I, I, PROP) for rel in INTERVAL_RELATIONS},
    "time": Arrow(EV, I),
    "speech_time": Arrow(I, PROP),
    "normalized_time": Arrow(I, INT),
    "gran": Arrow(I, INT),
    "day_of_week": Arrow(I, INT),
    "month_span": Arrow(I, I),
    "year_span": Arrow(I, I),
    "Nom": Arrow(EV, E),
    "Acc": Arrow(EV, E),
    "Dat": Arrow(EV, E),
    "Loc": Arrow(EV, E),
}


class Signature(dict):
    """Constant-name -> SemType map; merging rejects disagreements."""

    def merged(self, other: "Signature") -> "Signature":
        out = Signature(self)
        for name, t in other.items():
            if name in out and out[name] != t:
                raise TypeConflict(name, out[name], t)
            out[name] = t
        return out


class _Unifier:
    def __init__(self):
        self.next_id = 0
        self.subst: dict[int, SemType] = {}

    def fresh(self) -> _TVar:
        self.next_id += 1
        return _TVar(self.next_id)

    def resolve(self, t: SemType) -> SemType:
        while isinstance(t, _TVar) and t.id in self.subst:
            t = self.subst[t.id]
        if isinstance(t, Arrow):
            return Arrow(self.resolve(t.left), self.resolve(t.right))
        return t

    def unify(self, a: SemType, b: SemType, context: str):
        a = self.resolve(a)
        b = self.resolve(b)
        if a == b:
            return
        if isinstance(a, _TVar):
            self.subst[a.id] = b
            return
        if isinstance(b, _TVar):
            self.subst[b.id] = a
            return
        if isinstance(a, Arrow) and isinstance(b, Arrow):
            self.unify(a.left, b.left, context)
            self.unify(a.right, b.right, context)
            return
        raise TypeConflict(context, a, b)


def infer_types(term: Term, expected: SemType,
                base: dict[str, SemType] | None = None) -> Signature:
    """Most general constant typing making term have type expected.

    Interval-theory symbols are pinned from THEORY_SIGNATURE (plus `base`
    overrides); quantified variables that end up unconstrained default to I
    (only the temporal closure produces such binders, e.g. a vacuous ∃t.⊤);
    a constant left unconstrained is a TypeConflict.
    """
    sig, _ = infer_with_binders(term, expected, base)
    return sig


def infer_with_binders(term: Term, expected: SemType,
                       base: dict[str, SemType] | None = None,
                       ) -> tuple[Signature, dict[str, SemType]]:
    """Like infer_types but also returns binder-name -> type.

    Callers that need binder types (the TFF emitter) must pass an
    alpha-canonical term so binder names are unique.
    """
    uni = _Unifier()
    pinned: dict[str, SemType] = dict(THEORY_SIGNATURE)
    if base:
        pinned.update(base)
    consts: dict[str, SemType] = {}
    used_pinned: set[str] = set()
    binders: dict[str, SemType] = {}

    def type_of_const(name: str) -> SemType:
        if name in pinned:
            used_pinned.add(name)
            return pinned[name]
        if name not in consts:
            consts[name] = uni.fresh()
        return consts[name]

    def go(t: Term, env: dict[str, SemType]) -> SemType:
        if isinstance(t, Var):
            if t.name not in env:
                # free variable: treat like a constant hole
                return type_of_const(t.name)
            return env[t.name]
        if isinstance(t, Const):
            return type_of_const(t.name)
        if isinstance(t, IntLit):
            return INT
        if isinstance(t, Top):
            return PROP
        if isinstance(t, Abs):
            tv = uni.fresh()
            binders.setdefault(t.param, tv)
            inner = dict(env)
            inner[t.param] = tv
            return Arrow(tv, go(t.body, inner))
        if isinstance(t, App):
            tf = go(t.fun, env)
            ta = go(t.arg, env)
            res = uni.fresh()
            uni.unify(tf, Arrow(ta, res), _head_name(t))
            return res
        if isinstance(t, (Exists, Forall)):
            tv = uni.fresh()
            binders.setdefault(t.param, tv)
            inner = dict(env)
            inner[t.param] = tv
            uni.unify(go(t.body, inner), PROP, t.param)
            return PROP
        if isinstance(t, Not):
            uni.unify(go(t.body, env), PROP, "¬")
            return PROP
        if isinstance(t, (And, Or, Imp)):
            uni.unify(go(t.left, env), PROP, "connective")
            uni.unify(go(t.right, env), PROP, "connective")
            return PROP
        if isinstance(t, Eq):
            uni.unify(go(t.left, env), go(t.right, env), "=")
            return PROP
        if isinstance(t, (Le, Lt)):
            uni.unify(go(t.left, env), INT, "order")
            uni.unify(go(t.right, env), INT, "order")
            return PROP
        raise TypeError(f"unknown term {t!r}")

    uni.unify(go(term, {}), expected, "<root>")

    def finalize(t: SemType, name: str, default: SemType | None) -> SemType:
        t = uni.resolve(t)
        if isinstance(t, _TVar):
            if default is None:
                raise TypeConflict(name, t, "unconstrained")
            return default
        if isinstance(t, Arrow):
            return Arrow(finalize(t.left, name, default), finalize(t.right, name, default))
        return t

    sig = Signature()
    for name, t in sorted(consts.items()):
        sig[name] = finalize(t, name, None)
    for name in sorted(used_pinned):
        sig.setdefault(name, pinned[name])
    binder_types = {name: finalize(t, name, I) for name, t in binders.items()}
    return sig, binder_types


def _head_name(t: Term) -> str:
    while isinstance(t, App):
        t = t.fun
    if isinstance(t, (Const, Var)):
        return t.name
    return "<term>"
