"""CCG syntactic categories with feature bundles and unification.

Atoms carry exactly three features: S[form, stage, finality] and
NP[case, form, finality], e.g. S[nm,base,f] or NP[ga,nm,f]. The wildcard
value ``*`` unifies with anything.
"""

from __future__ import annotations

from dataclasses import dataclass

WILDCARD = "*"

FORWARD = "/"
BACKWARD = "\\"

ATOM_ARITY = {"S": 3, "NP": 3}


class CategorySyntaxError(ValueError):
    pass


@dataclass(frozen=True)
class Category:
    pass


@dataclass(frozen=True)
class Atom(Category):
    name: str                # S or NP
    features: tuple[str, ...]

    def __repr__(self):
        if all(f == WILDCARD for f in self.features):
            return self.name
        return f"{self.name}[{','.join(self.features)}]"


@dataclass(frozen=True)
class Functor(Category):
    result: Category
    slash: str               # FORWARD or BACKWARD
    argument: Category

    def __repr__(self):
        res = repr(self.result)
        if isinstance(self.result, Functor):
            res = f"({res})"
        arg = repr(self.argument)
        if isinstance(self.argument, Functor):
            arg = f"({arg})"
        return f"{res}{self.slash}{arg}"


def atom_cat(name: str, *features: str) -> Atom:
    arity = ATOM_ARITY[name]
    feats = list(features) + [WILDCARD] * (arity - len(features))
    if len(feats) != arity:
        raise CategorySyntaxError(f"{name} takes {arity} features, got {features}")
    return Atom(name, tuple(feats))


def forward(result: Category, argument: Category) -> Functor:
    return Functor(result, FORWARD, argument)


def backward(result: Category, argument: Category) -> Functor:
    return Functor(result, BACKWARD, argument)


def unify(a: Category, b: Category) -> Category | None:
    """Structural unification with wildcard features; None on failure."""
    if isinstance(a, Atom) and isinstance(b, Atom):
        if a.name != b.name or len(a.features) != len(b.features):
            return None
        feats = []
        for fa, fb in zip(a.features, b.features):
            if fa == WILDCARD:
                feats.append(fb)
            elif fb == WILDCARD or fa == fb:
                feats.append(fa)
            else:
                return None
        return Atom(a.name, tuple(feats))
    if isinstance(a, Functor) and isinstance(b, Functor):
        if a.slash != b.slash:
            return None
        res = unify(a.result, b.result)
        arg = unify(a.argument, b.argument)
        if res is None or arg is None:
            return None
        return Functor(res, a.slash, arg)
    return None


def parse_category(text: str) -> Category:
    """Parse `S[nm,base,f]`, `(S/S)\\NP`, ... Slashes are left-associative."""
    cat, pos = _parse_seq(text, 0)
    if pos != len(text):
        raise CategorySyntaxError(f"trailing input in category {text!r} at {pos}")
    return cat


def _parse_seq(text: str, pos: int) -> tuple[Category, int]:
    left, pos = _parse_unit(text, pos)
    while pos < len(text) and text[pos] in (FORWARD, BACKWARD):
        slash = text[pos]
        right, pos = _parse_unit(text, pos + 1)
        left = Functor(left, slash, right)
    return left, pos


def _parse_unit(text: str, pos: int) -> tuple[Category, int]:
    if pos >= len(text):
        raise CategorySyntaxError(f"unexpected end of category {text!r}")
    if text[pos] == "(":
        cat, pos = _parse_seq(text, pos + 1)
        if pos >= len(text) or text[pos] != ")":
            raise CategorySyntaxError(f"unbalanced parens in {text!r}")
        return cat, pos + 1
    start = pos
    while pos < len(text) and text[pos].isalpha():
        pos += 1
    name = text[start:pos]
    if name not in ATOM_ARITY:
        raise CategorySyntaxError(f"unknown atom {name!r} in {text!r}")
    feats: tuple[str, ...]
    if pos < len(text) and text[pos] == "[":
        end = text.index("]", pos)
        feats = tuple(f.strip() for f in text[pos + 1:end].split(","))
        pos = end + 1
        if len(feats) != ATOM_ARITY[name]:
            raise CategorySyntaxError(
                f"{name} takes {ATOM_ARITY[name]} features in {text!r}")
    else:
        feats = (WILDCARD,) * ATOM_ARITY[name]
    return Atom(name, feats), pos


# frequently used categories
NP_NC = parse_category("NP[nc,nm,f]")
NP_GA = parse_category("NP[ga,nm,f]")
NP_O = parse_category("NP[o,nm,f]")
NP_NI = parse_category("NP[ni,nm,f]")
S_F = parse_category("S[nm,base,f]")
S_T = parse_category("S[nm,base,t]")
NP_ANY = parse_category("NP")
S_ANY = parse_category("S")


def is_final_sentence(cat: Category) -> bool:
    return isinstance(cat, Atom) and cat.name == "S" and cat.features[2] == "t"


def sentence_shift(cat: Category) -> Category | None:
    """The unique unary rule: S[...,f] -> S[...,t]."""
    if isinstance(cat, Atom) and cat.name == "S" and cat.features[2] == "f":
        return Atom("S", cat.features[:2] + ("t",))
    return None
