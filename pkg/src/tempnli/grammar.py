"""Tokenizer, lexicon and CKY chart parser for the controlled fragment."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources

from .categories import (
    BACKWARD, FORWARD, Atom, Category, Functor, NP_NC, is_final_sentence,
    parse_category, sentence_shift, unify,
)

FORWARD_APP = "forward-application"
BACKWARD_APP = "backward-application"
FORWARD_COMP = "forward-composition"
BACKWARD_COMP = "backward-composition"
TYPE_SHIFT = "type-shift"

ORDINARY = "ordinary"
TEMPORAL = "temporal-literal"

SENTENCE_END = "。"


class EmptyInput(ValueError):
    pass


class UnknownSegment(ValueError):
    def __init__(self, text: str, position: int):
        super().__init__(f"no lexicon entry or temporal pattern matches at "
                         f"position {position} in {text!r}")
        self.position = position


@dataclass(frozen=True)
class Token:
    surface: str
    start: int
    end: int
    kind: str = ORDINARY


@dataclass(frozen=True)
class LexEntry:
    surface: str
    category: Category
    semkey: str


# one temporal unit per token: 4月 / 3日 / 1992年 / (午前|午後)?19時 / 月曜日
_FW_DIGITS = str.maketrans("０１２３４５６７８９", "0123456789")
TEMPORAL_TOKEN = re.compile(
    r"(?:午前|午後)?[0-9０-９]+時|[0-9０-９]+年|[0-9０-９]+月|[0-9０-９]+日"
    r"|[月火水木金土日]曜日"
)

# categories a temporal-literal token can take before tree conversion
TEMPORAL_CATEGORIES = (
    parse_category("NP[nc,nm,f]"),
    parse_category("NP[nc,nm,f]/NP[nc,nm,f]"),
    parse_category("NP[nc,nm,f]\\NP[nc,nm,f]"),
)
TEMPORAL_SEMKEY = "time"


class Lexicon:
    def __init__(self, entries: list[LexEntry]):
        self.entries = entries
        self.by_surface: dict[str, list[LexEntry]] = {}
        for e in entries:
            self.by_surface.setdefault(e.surface, []).append(e)
        self.max_len = max((len(s) for s in self.by_surface), default=0)

    @classmethod
    def from_text(cls, text: str) -> "Lexicon":
        entries = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                raise ValueError(f"lexicon line {lineno}: expected 3 tab-separated "
                                 f"fields, got {raw!r}")
            surface, cat, semkey = (p.strip() for p in parts)
            entries.append(LexEntry(surface, parse_category(cat), semkey))
        return cls(entries)

    @classmethod
    def from_file(cls, path) -> "Lexicon":
        with open(path, encoding="utf-8") as f:
            return cls.from_text(f.read())

    @classmethod
    def default(cls) -> "Lexicon":
        text = resources.files("tempnli.data").joinpath("lexicon.tsv").read_text("utf-8")
        return cls.from_text(text)

    def lookup(self, surface: str) -> list[LexEntry]:
        return self.by_surface.get(surface, [])


def tokenize(text: str, lexicon: Lexicon) -> list[Token]:
    """Longest-match segmentation; temporal literals are scanned first."""
    if not text:
        raise EmptyInput("empty input")
    stripped = text
    if stripped.endswith(SENTENCE_END):
        stripped = stripped[:-1]
    tokens: list[Token] = []
    pos = 0
    while pos < len(stripped):
        if stripped[pos].isspace():
            pos += 1
            continue
        m = TEMPORAL_TOKEN.match(stripped, pos)
        if m:
            tokens.append(Token(m.group(0), pos, m.end(), TEMPORAL))
            pos = m.end()
            continue
        best = None
        limit = min(lexicon.max_len, len(stripped) - pos)
        for length in range(limit, 0, -1):
            candidate = stripped[pos:pos + length]
            if lexicon.lookup(candidate):
                best = candidate
                break
        if best is None:
            raise UnknownSegment(text, pos)
        tokens.append(Token(best, pos, pos + len(best), ORDINARY))
        pos += len(best)
    if not tokens:
        raise EmptyInput("input contains no tokens")
    return tokens


# ---------------------------------------------------------------------------
# derivations

@dataclass(frozen=True)
class Leaf:
    token: Token
    category: Category
    semkey: str
    norm: object = None  # NormalizedTime on merged temporal leaves


@dataclass(frozen=True)
class Unary:
    child: "Derivation"
    rule: str
    category: Category


@dataclass(frozen=True)
class Binary:
    left: "Derivation"
    right: "Derivation"
    rule: str
    category: Category


Derivation = Leaf | Unary | Binary


def leaves(d: Derivation) -> list[Leaf]:
    if isinstance(d, Leaf):
        return [d]
    if isinstance(d, Unary):
        return leaves(d.child)
    return leaves(d.left) + leaves(d.right)


def combine(left: Category, right: Category) -> list[tuple[str, Category]]:
    """All rule applications of two adjacent categories."""
    out: list[tuple[str, Category]] = []
    if isinstance(left, Functor) and left.slash == FORWARD:
        if unify(left.argument, right) is not None:
            out.append((FORWARD_APP, left.result))
        if isinstance(right, Functor) and unify(left.argument, right.result) is not None:
            # harmonic X/Y Y/Z -> X/Z and crossed X/Y Y\Z -> X\Z
            out.append((FORWARD_COMP, Functor(left.result, right.slash, right.argument)))
    if isinstance(right, Functor) and right.slash == BACKWARD:
        if unify(right.argument, left) is not None:
            out.append((BACKWARD_APP, right.result))
        if (isinstance(left, Functor) and left.slash == BACKWARD
                and unify(right.argument, left.result) is not None):
            out.append((BACKWARD_COMP, Functor(right.result, BACKWARD, left.argument)))
    return out


def composition_count(d: Derivation) -> int:
    if isinstance(d, Leaf):
        return 0
    if isinstance(d, Unary):
        return composition_count(d.child)
    me = 1 if d.rule in (FORWARD_COMP, BACKWARD_COMP) else 0
    return me + composition_count(d.left) + composition_count(d.right)


def _right_weight(d: Derivation) -> int:
    if isinstance(d, Leaf):
        return 0
    if isinstance(d, Unary):
        return _right_weight(d.child)
    return len(leaves(d.right)) + _right_weight(d.left) + _right_weight(d.right)


def signature(d: Derivation) -> str:
    if isinstance(d, Leaf):
        return f"{d.token.surface}:{d.category!r}"
    if isinstance(d, Unary):
        return f"U[{d.rule}:{d.category!r}]({signature(d.child)})"
    return f"B[{d.rule}:{d.category!r}]({signature(d.left)},{signature(d.right)})"


def sort_key(d: Derivation) -> tuple:
    return (composition_count(d), _right_weight(d), signature(d))


def build_chart(tokens: list[Token], lexicon: Lexicon,
                ) -> dict[tuple[int, int], list[Derivation]]:
    chart: dict[tuple[int, int], list[Derivation]] = {}
    for i, tok in enumerate(tokens):
        cell: list[Derivation] = []
        if tok.kind == TEMPORAL:
            for cat in TEMPORAL_CATEGORIES:
                cell.append(Leaf(tok, cat, TEMPORAL_SEMKEY))
        for entry in lexicon.lookup(tok.surface):
            cell.append(Leaf(tok, entry.category, entry.semkey))
        chart[(i, i)] = cell
    n = len(tokens)
    for width in range(2, n + 1):
        for i in range(0, n - width + 1):
            j = i + width - 1
            cell = []
            seen = set()
            for split in range(i, j):
                for dl in chart[(i, split)]:
                    for dr in chart[(split + 1, j)]:
                        for rule, cat in combine(dl.category, dr.category):
                            node = Binary(dl, dr, rule, cat)
                            sig = signature(node)
                            if sig not in seen:
                                seen.add(sig)
                                cell.append(node)
            chart[(i, j)] = cell
    return chart


def parse(tokens: list[Token], lexicon: Lexicon) -> list[Derivation]:
    """All derivations with root S[...,t], deterministically ordered."""
    if not tokens:
        return []
    chart = build_chart(tokens, lexicon)
    results = []
    for d in chart[(0, len(tokens) - 1)]:
        if is_final_sentence(d.category):
            results.append(d)
        else:
            shifted = sentence_shift(d.category)
            if shifted is not None:
                results.append(Unary(d, TYPE_SHIFT, shifted))
    results.sort(key=sort_key)
    return results


def parse_to_category(tokens: list[Token], lexicon: Lexicon,
                      goal: Category) -> list[Derivation]:
    """All full-span derivations whose root unifies with goal (no shift)."""
    if not tokens:
        return []
    chart = build_chart(tokens, lexicon)
    out = [d for d in chart[(0, len(tokens) - 1)]
           if unify(d.category, goal) is not None]
    out.sort(key=sort_key)
    return out


def validate(d: Derivation) -> bool:
    """Re-derive every internal node's category from its children."""
    if isinstance(d, Leaf):
        return True
    if isinstance(d, Unary):
        if d.rule != TYPE_SHIFT:
            return False
        return (sentence_shift(d.child.category) == d.category
                and validate(d.child))
    options = combine(d.left.category, d.right.category)
    if (d.rule, d.category) not in options:
        return False
    return validate(d.left) and validate(d.right)


def render_tree(d: Derivation, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(d, Leaf):
        return f"{pad}{d.token.surface}  {d.category!r}"
    if isinstance(d, Unary):
        return (f"{pad}{d.category!r}  [{d.rule}]\n"
                + render_tree(d.child, indent + 1))
    return (f"{pad}{d.category!r}  [{d.rule}]\n"
            + render_tree(d.left, indent + 1) + "\n"
            + render_tree(d.right, indent + 1))
