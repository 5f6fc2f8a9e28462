"""Semantic templates and composition along CCG derivations.

Leaves are annotated from the template store (word-keyed entries take
precedence over category-keyed ones), combined per combinator, and a closed
sentence is finished by discharging the role/event continuations and
binding speech and reference time.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .categories import Atom, Category, Functor, WILDCARD
from .grammar import (
    BACKWARD_APP, BACKWARD_COMP, Binary, Derivation, FORWARD_APP, FORWARD_COMP,
    Leaf, TEMPORAL, Unary,
)
from .inference import infer_types
from .terms import (
    Abs, And, App, Const, Exists, Forall, IllTyped, IntLit, Not, PROP, Term, Top,
    Var, all_names, app, atom, beta_reduce, parse_term,
)
from .temporal import NormalizedTime, normalize


class MissingTemplate(Exception):
    def __init__(self, surface: str, category):
        super().__init__(f"no template for {surface!r} with category {category!r}")
        self.surface = surface
        self.category = category


WORD = "word"
CATEGORY = "category"


class TemplateStore:
    def __init__(self, word: dict[str, Term], category: dict[str, Term]):
        self.word = word
        self.category = category

    @classmethod
    def from_text(cls, text: str) -> "TemplateStore":
        word: dict[str, Term] = {}
        category: dict[str, Term] = {}
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].rstrip()
            if not line.strip():
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                raise ValueError(f"template line {lineno}: expected 3 fields")
            kind, key, body = parts
            term = parse_term(body.strip())
            if kind == WORD:
                word[key] = term
            elif kind == CATEGORY:
                category[key] = term
            else:
                raise ValueError(f"template line {lineno}: bad kind {kind!r}")
        return cls(word, category)

    @classmethod
    def from_file(cls, path) -> "TemplateStore":
        with open(path, encoding="utf-8") as f:
            return cls.from_text(f.read())

    @classmethod
    def default(cls) -> "TemplateStore":
        text = resources.files("tempnli.data").joinpath("templates.tsv").read_text("utf-8")
        return cls.from_text(text)

    def counts(self) -> tuple[int, int]:
        return len(self.word), len(self.category)


def _wildcarded(cat: Category) -> Category:
    if isinstance(cat, Atom):
        return Atom(cat.name, (WILDCARD,) * len(cat.features))
    return Functor(_wildcarded(cat.result), cat.slash, _wildcarded(cat.argument))


def _asciify(surface: str) -> str:
    out = []
    for ch in surface:
        if ch.isascii() and (ch.isalnum() or ch == "_"):
            out.append(ch.lower())
        else:
            out.append(f"u{ord(ch):x}")
    return "".join(out)


_HOLES = ("_word_", "_code_", "_gran_", "_dow_")


def _instantiate(body: Term, values: dict[str, Term]) -> Term:
    if isinstance(body, Const):
        return values.get(body.name, body)
    if isinstance(body, (Var, IntLit, Top)):
        return body
    if isinstance(body, (Abs, Exists, Forall)):
        return type(body)(body.param, _instantiate(body.body, values))
    if isinstance(body, App):
        return App(_instantiate(body.fun, values), _instantiate(body.arg, values))
    if isinstance(body, Not):
        return Not(_instantiate(body.body, values))
    return type(body)(_instantiate(body.left, values), _instantiate(body.right, values))


# ---------------------------------------------------------------------------
# assignment

@dataclass(frozen=True)
class AnnLeaf:
    leaf: Leaf
    term: Term


@dataclass(frozen=True)
class AnnUnary:
    child: "AnnNode"
    rule: str
    category: Category


@dataclass(frozen=True)
class AnnBinary:
    left: "AnnNode"
    right: "AnnNode"
    rule: str
    category: Category


AnnNode = AnnLeaf | AnnUnary | AnnBinary


def template_for_leaf(leaf: Leaf, store: TemplateStore) -> Term:
    cat = repr(leaf.category)
    wild = repr(_wildcarded(leaf.category))
    if leaf.semkey in store.word:
        return store.word[leaf.semkey]
    if leaf.token.kind == TEMPORAL or leaf.norm is not None:
        norm: NormalizedTime = leaf.norm or normalize([leaf.token.surface])
        kind = "weekday" if norm.weekday is not None else "time"
        for key in (f"{cat}:{kind}", f"{wild}:{kind}"):
            if key in store.category:
                if kind == "weekday":
                    values = {"_dow_": IntLit(norm.weekday)}
                else:
                    values = {"_code_": IntLit(norm.code),
                              "_gran_": IntLit(norm.gran_tag)}
                return _instantiate(store.category[key], values)
        raise MissingTemplate(leaf.token.surface, leaf.category)
    if leaf.semkey.startswith("entity:"):
        name = leaf.semkey.split(":", 1)[1]
        for key in (cat, wild):
            if key in store.category:
                return _instantiate(store.category[key], {"_word_": Const(name)})
        raise MissingTemplate(leaf.token.surface, leaf.category)
    for key in (leaf.semkey, cat, wild):
        if key in store.category:
            return _instantiate(store.category[key],
                                {"_word_": Const(_asciify(leaf.token.surface))})
    raise MissingTemplate(leaf.token.surface, leaf.category)


def assign(derivation: Derivation, store: TemplateStore) -> AnnNode:
    if isinstance(derivation, Leaf):
        return AnnLeaf(derivation, template_for_leaf(derivation, store))
    if isinstance(derivation, Unary):
        return AnnUnary(assign(derivation.child, store), derivation.rule,
                        derivation.category)
    return AnnBinary(assign(derivation.left, store), assign(derivation.right, store),
                     derivation.rule, derivation.category)


# ---------------------------------------------------------------------------
# composition

def _fresh_name(*terms: Term) -> str:
    used = set()
    for t in terms:
        used |= all_names(t)
    i = 0
    while f"z{i}" in used:
        i += 1
    return f"z{i}"


def compose(ann: AnnNode) -> Term:
    """Combine leaf meanings along the tree, beta-reducing at each node."""
    if isinstance(ann, AnnLeaf):
        return ann.term
    if isinstance(ann, AnnUnary):
        return compose(ann.child)
    left = compose(ann.left)
    right = compose(ann.right)
    if ann.rule == FORWARD_APP:
        return beta_reduce(App(left, right))
    if ann.rule == BACKWARD_APP:
        return beta_reduce(App(right, left))
    if ann.rule == FORWARD_COMP:
        z = _fresh_name(left, right)
        return beta_reduce(Abs(z, App(left, App(right, Var(z)))))
    if ann.rule == BACKWARD_COMP:
        z = _fresh_name(left, right)
        return beta_reduce(Abs(z, App(right, App(left, Var(z)))))
    raise ValueError(f"unknown rule {ann.rule}")


# continuations discharged at the sentence boundary: roles become
# role(e) = x atoms and the event/interval continuation is the identity
ROLE_CONTINUATION = parse_term("λx e r.(r(e) = x)")
EVENT_CONTINUATION = parse_term("λJ e i j.J(e,i,j)")

SPEECH_VAR = "s"
REF_VAR = "r"


def close(term: Term) -> Term:
    """Discharge C1 C2 C3 K and bind speech/reference time existentially.

    The tense constraint is already inside the verb template, so this adds
    only the speech_time conjunct and the two binders.
    """
    reduced = beta_reduce(term)
    arity = 0
    probe = reduced
    while isinstance(probe, Abs):
        arity += 1
        probe = probe.body
    if arity < 6:
        raise IllTyped(f"sentence semantics must take C1 C2 C3 K i j; "
                       f"got arity {arity}")
    applied = app(reduced, ROLE_CONTINUATION, ROLE_CONTINUATION, ROLE_CONTINUATION,
                  EVENT_CONTINUATION, Var(SPEECH_VAR), Var(REF_VAR))
    body = beta_reduce(applied)
    closed = Exists(SPEECH_VAR, Exists(REF_VAR,
                    And(atom("speech_time", Var(SPEECH_VAR)), body)))
    try:
        infer_types(closed, PROP)
    except Exception as exc:
        raise IllTyped(f"closed sentence is not a proposition: {exc}") from exc
    return closed


def embed_clause(subordinate: Term, connective: str, matrix: Term,
                 store: TemplateStore) -> Term:
    """Relative-tense embedding: mae/ato applied to a clause and its matrix.

    The subordinate clause's speech slot is bound to the matrix reference
    time, so its own tense atom relates the fresh embedded reference time to
    the matrix one (after for a non-past clause under mae, before for a past
    clause under ato).
    """
    surface = {"mae": "前", "ato": "後"}[connective]
    template = store.word[surface]
    return beta_reduce(app(template, subordinate, matrix))
