"""Typed lambda-calculus terms: substitution, beta reduction, alpha handling.

Composition is carried out untyped (types are completed afterwards, see
inference.py), so reduction here is plain normal-order beta reduction over
simply-typable terms; it terminates on everything the grammar can build.
"""

from __future__ import annotations

from dataclasses import dataclass


class IllTyped(Exception):
    """A term is applied in a way no simple typing can support."""


# ---------------------------------------------------------------------------
# semantic types

@dataclass(frozen=True)
class SemType:
    pass


@dataclass(frozen=True)
class Base(SemType):
    name: str  # E, Ev, Prop, I, Int

    def __repr__(self):
        return self.name


@dataclass(frozen=True)
class Arrow(SemType):
    left: SemType
    right: SemType

    def __repr__(self):
        l = f"({self.left!r})" if isinstance(self.left, Arrow) else repr(self.left)
        return f"{l}=>{self.right!r}"


E = Base("E")
EV = Base("Ev")
PROP = Base("Prop")
I = Base("I")
INT = Base("Int")


def arrow(*types: SemType) -> SemType:
    """Right-associated function type: arrow(a, b, c) == a => (b => c)."""
    out = types[-1]
    for t in reversed(types[:-1]):
        out = Arrow(t, out)
    return out


# ---------------------------------------------------------------------------
# terms

@dataclass(frozen=True)
class Term:
    pass


@dataclass(frozen=True)
class Var(Term):
    name: str


@dataclass(frozen=True)
class Const(Term):
    name: str


@dataclass(frozen=True)
class IntLit(Term):
    value: int


@dataclass(frozen=True)
class Top(Term):
    pass


@dataclass(frozen=True)
class Abs(Term):
    param: str
    body: Term


@dataclass(frozen=True)
class App(Term):
    fun: Term
    arg: Term


@dataclass(frozen=True)
class And(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Or(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Imp(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Not(Term):
    body: Term


@dataclass(frozen=True)
class Exists(Term):
    param: str
    body: Term


@dataclass(frozen=True)
class Forall(Term):
    param: str
    body: Term


@dataclass(frozen=True)
class Eq(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Le(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Lt(Term):
    left: Term
    right: Term


TOP = Top()

_BINDERS = (Abs, Exists, Forall)
_BINOPS = {And: "∧", Or: "∨", Imp: "→", Eq: "=", Le: "≤", Lt: "<"}


def app(fun: Term, *args: Term) -> Term:
    """Left-nested application: app(f, a, b) == App(App(f, a), b)."""
    out = fun
    for a in args:
        out = App(out, a)
    return out


def conj(*terms: Term) -> Term:
    """Left-nested conjunction of one or more terms."""
    out = terms[0]
    for t in terms[1:]:
        out = And(out, t)
    return out


def atom(pred: str, *args: Term) -> Term:
    return app(Const(pred), *args)


def spine(term: Term) -> tuple[Term, list[Term]]:
    """Decompose nested applications into (head, [args])."""
    args: list[Term] = []
    while isinstance(term, App):
        args.append(term.arg)
        term = term.fun
    args.reverse()
    return term, args


def free_vars(term: Term) -> set[str]:
    if isinstance(term, Var):
        return {term.name}
    if isinstance(term, (Const, IntLit, Top)):
        return set()
    if isinstance(term, _BINDERS):
        return free_vars(term.body) - {term.param}
    if isinstance(term, App):
        return free_vars(term.fun) | free_vars(term.arg)
    if isinstance(term, Not):
        return free_vars(term.body)
    return free_vars(term.left) | free_vars(term.right)


def all_names(term: Term) -> set[str]:
    """Every variable name occurring in the term, bound or free."""
    if isinstance(term, Var):
        return {term.name}
    if isinstance(term, (Const, IntLit, Top)):
        return set()
    if isinstance(term, _BINDERS):
        return all_names(term.body) | {term.param}
    if isinstance(term, App):
        return all_names(term.fun) | all_names(term.arg)
    if isinstance(term, Not):
        return all_names(term.body)
    return all_names(term.left) | all_names(term.right)


def _fresh(base: str, used: set[str]) -> str:
    stem = base.rstrip("'")
    candidate = stem + "'"
    n = 1
    while candidate in used:
        n += 1
        candidate = stem + "'" * n
    return candidate


def substitute(term: Term, var: str, replacement: Term) -> Term:
    """Capture-avoiding substitution of replacement for free occurrences of var."""
    repl_free = free_vars(replacement)

    def go(t: Term) -> Term:
        if isinstance(t, Var):
            return replacement if t.name == var else t
        if isinstance(t, (Const, IntLit, Top)):
            return t
        if isinstance(t, _BINDERS):
            if t.param == var:
                return t
            if t.param in repl_free and var in free_vars(t.body):
                used = repl_free | all_names(t.body) | {var}
                new = _fresh(t.param, used)
                body = substitute(t.body, t.param, Var(new))
                return type(t)(new, go(body))
            return type(t)(t.param, go(t.body))
        if isinstance(t, App):
            return App(go(t.fun), go(t.arg))
        if isinstance(t, Not):
            return Not(go(t.body))
        return type(t)(go(t.left), go(t.right))

    return go(term)


_REDUCE_FUEL = 200_000


def beta_reduce(term: Term) -> Term:
    """Normal-order reduction to beta normal form.

    Raises IllTyped when a normal-form non-function (a literal, connective,
    quantifier or ⊤) ends up in function position: no simple typing admits
    such an application.
    """
    fuel = [_REDUCE_FUEL]

    def go(t: Term) -> Term:
        if fuel[0] <= 0:
            raise IllTyped("reduction fuel exhausted; term is not simply typable")
        fuel[0] -= 1
        if isinstance(t, (Var, Const, IntLit, Top)):
            return t
        if isinstance(t, Abs):
            return Abs(t.param, go(t.body))
        if isinstance(t, App):
            fun = go(t.fun)
            if isinstance(fun, Abs):
                return go(substitute(fun.body, fun.param, t.arg))
            if not isinstance(fun, (Var, Const, App)):
                raise IllTyped(f"cannot apply non-function term {pretty(fun)}")
            return App(fun, go(t.arg))
        if isinstance(t, (Exists, Forall)):
            return type(t)(t.param, go(t.body))
        if isinstance(t, Not):
            return Not(go(t.body))
        return type(t)(go(t.left), go(t.right))

    return go(term)


def alpha_canonical(term: Term) -> Term:
    """Rename binders to x1, x2, ... in left-to-right binder order."""
    counter = [0]

    def go(t: Term, env: dict[str, str]) -> Term:
        if isinstance(t, Var):
            return Var(env.get(t.name, t.name))
        if isinstance(t, (Const, IntLit, Top)):
            return t
        if isinstance(t, _BINDERS):
            counter[0] += 1
            new = f"x{counter[0]}"
            inner = dict(env)
            inner[t.param] = new
            return type(t)(new, go(t.body, inner))
        if isinstance(t, App):
            return App(go(t.fun, env), go(t.arg, env))
        if isinstance(t, Not):
            return Not(go(t.body, env))
        return type(t)(go(t.left, env), go(t.right, env))

    return go(term, {})


def alpha_equal(a: Term, b: Term) -> bool:
    return alpha_canonical(a) == alpha_canonical(b)


def conjuncts(term: Term) -> list[Term]:
    """Flatten a left/right-nested conjunction into its conjunct list."""
    if isinstance(term, And):
        return conjuncts(term.left) + conjuncts(term.right)
    return [term]


# ---------------------------------------------------------------------------
# pretty printer (the surface syntax also used by the template files)

def pretty(term: Term) -> str:
    return _pp(term, 0)


# precedence levels: 0 lambda/quantifier body, 1 →, 2 ∨, 3 ∧, 4 ¬/atom
def _pp(t: Term, prec: int) -> str:
    if isinstance(t, Var) or isinstance(t, Const):
        return t.name
    if isinstance(t, IntLit):
        return str(t.value)
    if isinstance(t, Top):
        return "⊤"
    if isinstance(t, Abs):
        params = []
        while isinstance(t, Abs):
            params.append(t.param)
            t = t.body
        s = f"λ{' '.join(params)}.{_pp(t, 0)}"
        return f"({s})" if prec > 0 else s
    if isinstance(t, (Exists, Forall)):
        q = "∃" if isinstance(t, Exists) else "∀"
        params = [t.param]
        kind = type(t)
        body = t.body
        while isinstance(body, kind):
            params.append(body.param)
            body = body.body
        s = f"{q}{' '.join(params)}.{_pp(body, 4)}"
        return f"({s})" if prec > 0 else s
    if isinstance(t, Not):
        return f"¬{_pp(t.body, 4)}"
    if isinstance(t, App):
        head, args = spine(t)
        if isinstance(head, (Const, Var)):
            return f"{head.name}({','.join(_pp(a, 0) for a in args)})"
        return f"({_pp(head, 0)})({','.join(_pp(a, 0) for a in args)})"
    if isinstance(t, (Eq, Le, Lt)):
        op = _BINOPS[type(t)]
        return f"({_pp(t.left, 0)} {op} {_pp(t.right, 0)})"
    if isinstance(t, And):
        s = f"{_pp(t.left, 3)} ∧ {_pp(t.right, 4)}"
        return f"({s})" if prec > 3 else s
    if isinstance(t, Or):
        s = f"{_pp(t.left, 2)} ∨ {_pp(t.right, 3)}"
        return f"({s})" if prec > 2 else s
    if isinstance(t, Imp):
        s = f"{_pp(t.left, 2)} → {_pp(t.right, 1)}"
        return f"({s})" if prec > 1 else s
    raise TypeError(f"unknown term {t!r}")


# ---------------------------------------------------------------------------
# term parser for the template/axiom surface syntax

class TermSyntaxError(ValueError):
    pass


_WORD_CHARS = None  # identifiers: letters, digits, _ (unicode letters allowed)


def _is_ident_char(c: str) -> bool:
    return c.isalnum() or c == "_"


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str):
        raise TermSyntaxError(f"{msg} at position {self.pos} in {self.text!r}")

    def ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def eat(self, s: str) -> bool:
        self.ws()
        if self.text.startswith(s, self.pos):
            self.pos += len(s)
            return True
        return False

    def expect(self, s: str):
        if not self.eat(s):
            self.error(f"expected {s!r}")

    def ident(self) -> str:
        self.ws()
        start = self.pos
        while self.pos < len(self.text) and _is_ident_char(self.text[self.pos]):
            self.pos += 1
        if self.pos == start:
            self.error("expected identifier")
        return self.text[start:self.pos]

    # grammar:  term := lambda | quant | imp
    def term(self) -> Term:
        self.ws()
        c = self.peek()
        if c == "λ" or self.text.startswith("\\", self.pos):
            self.pos += 1
            params = [self.ident()]
            self.ws()
            while self.peek() not in (".", ""):
                params.append(self.ident())
                self.ws()
            self.expect(".")
            body = self.term()
            for p in reversed(params):
                body = Abs(p, body)
            return body
        if c in ("∃", "∀"):
            kind = Exists if c == "∃" else Forall
            self.pos += 1
            params = [self.ident()]
            self.ws()
            while self.peek() not in (".", ""):
                params.append(self.ident())
                self.ws()
            self.expect(".")
            body = self.imp()
            for p in reversed(params):
                body = kind(p, body)
            return body
        return self.imp()

    def imp(self) -> Term:
        left = self.disj()
        if self.eat("→") or self.eat("->"):
            return Imp(left, self.imp())
        return left

    def disj(self) -> Term:
        left = self.conj()
        while self.eat("∨") or self.eat("|"):
            left = Or(left, self.conj())
        return left

    def conj(self) -> Term:
        left = self.cmp()
        while self.eat("∧") or self.eat("&"):
            left = And(left, self.cmp())
        return left

    def cmp(self) -> Term:
        left = self.unary()
        self.ws()
        if self.eat("="):
            return Eq(left, self.unary())
        if self.eat("≤") or self.eat("<="):
            return Le(left, self.unary())
        if self.eat("<"):
            return Lt(left, self.unary())
        return left

    def unary(self) -> Term:
        self.ws()
        if self.eat("¬") or self.eat("~"):
            return Not(self.unary())
        return self.application()

    def application(self) -> Term:
        head = self.primary()
        while True:
            self.ws()
            if self.peek() == "(":
                self.pos += 1
                args = [self.term()]
                while self.eat(","):
                    args.append(self.term())
                self.expect(")")
                for a in args:
                    head = App(head, a)
            else:
                return head

    def primary(self) -> Term:
        self.ws()
        c = self.peek()
        if c == "(":
            self.pos += 1
            inner = self.term()
            self.expect(")")
            return inner
        if c in ("λ", "∃", "∀") or self.text.startswith("\\", self.pos):
            return self.term()
        if c == "⊤":
            self.pos += 1
            return TOP
        if c.isdigit():
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            return IntLit(int(self.text[start:self.pos]))
        name = self.ident()
        return Var(name)


def parse_term(text: str, constants: set[str] | None = None) -> Term:
    """Parse the pretty-printer surface syntax back into a Term.

    Identifiers are parsed as Var; names listed in `constants`, plus any
    identifier that is never lambda/quantifier-bound in the term, are turned
    into Const afterwards.
    """
    parser = _Parser(text)
    term = parser.term()
    parser.ws()
    if parser.pos != len(text):
        parser.error("trailing input")
    return _fix_constants(term, constants or set(), set())


def _fix_constants(t: Term, constants: set[str], bound: set[str]) -> Term:
    if isinstance(t, Var):
        if t.name in bound and t.name not in constants:
            return t
        return Const(t.name)
    if isinstance(t, (Const, IntLit, Top)):
        return t
    if isinstance(t, _BINDERS):
        return type(t)(t.param, _fix_constants(t.body, constants, bound | {t.param}))
    if isinstance(t, App):
        return App(_fix_constants(t.fun, constants, bound),
                   _fix_constants(t.arg, constants, bound))
    if isinstance(t, Not):
        return Not(_fix_constants(t.body, constants, bound))
    return type(t)(_fix_constants(t.left, constants, bound),
                   _fix_constants(t.right, constants, bound))
