"""Temporal multi-word expressions: detect runs and rewrite the subtree.

A run of adjacent temporal-literal tokens (4 月 3 日 tokenized as 4月/3日)
denotes one interval, so the covering subtree is collapsed into a single
leaf. The merged leaf is an NP when a temporal connective follows, and an
S/S sentence modifier otherwise; a に right after the merged phrase becomes
the vacuous modifier-of-modifier particle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .categories import parse_category, sentence_shift
from .grammar import (
    Binary, Derivation, Leaf, TEMPORAL, TEMPORAL_SEMKEY, TYPE_SHIFT, Token, Unary,
    combine, leaves,
)
from .temporal import NormalizedTime, normalize

CONNECTIVES = ("以前", "以降", "以来")

NP_MERGED = parse_category("NP[nc,nm,f]")
SS_MERGED = parse_category("S[nm,base,f]/S[nm,base,f]")
NI_RECAT = parse_category(
    "(S[nm,base,f]/S[nm,base,f])\\(S[nm,base,f]/S[nm,base,f])")


class RewriteFailed(Exception):
    def __init__(self, span, reason: str = ""):
        msg = f"cannot rewrite temporal span {span!r}"
        if reason:
            msg += f": {reason}"
        super().__init__(msg)
        self.span = span


@dataclass(frozen=True)
class MweSpan:
    start: int                 # token indices, inclusive
    end: int
    normalized: NormalizedTime
    surface: str


def detect(derivation: Derivation) -> list[MweSpan]:
    """Maximal runs of adjacent temporal-literal leaves, left to right."""
    toks = [leaf.token for leaf in leaves(derivation)]
    spans: list[MweSpan] = []
    i = 0
    while i < len(toks):
        if toks[i].kind != TEMPORAL:
            i += 1
            continue
        j = i
        while j + 1 < len(toks) and toks[j + 1].kind == TEMPORAL:
            j += 1
        surfaces = [t.surface for t in toks[i:j + 1]]
        spans.append(MweSpan(i, j, normalize(surfaces), "".join(surfaces)))
        i = j + 1
    return spans


def rewrite(derivation: Derivation) -> Derivation:
    """Collapse every detected span into one leaf and re-derive the tree."""
    spans = detect(derivation)
    if not spans:
        return derivation
    tree = derivation
    offset = 0
    for span in spans:
        lo, hi = span.start - offset, span.end - offset
        tree = _rewrite_one(tree, MweSpan(lo, hi, span.normalized, span.surface))
        offset += span.end - span.start
    return tree


def _rewrite_one(tree: Derivation, span: MweSpan) -> Derivation:
    toks = [leaf.token for leaf in leaves(tree)]
    if span.end + 1 >= len(toks):
        raise RewriteFailed(span, "sentence-final temporal expression is "
                                  "outside the fragment")
    next_surface = toks[span.end + 1].surface
    # one-token lookahead picks the category; when S/S does not re-derive
    # (copula complements like 1996年である) the NP reading is tried instead
    order = [NP_MERGED] if next_surface in CONNECTIVES else [SS_MERGED, NP_MERGED]
    last_error = None
    for category in order:
        merged = Leaf(
            Token(span.surface, toks[span.start].start, toks[span.end].end, TEMPORAL),
            category, TEMPORAL_SEMKEY, span.normalized)
        recat = span.end + 1 if (category is SS_MERGED and next_surface == "に") else None
        try:
            return _replace(tree, span.start, span.end, merged, recat, 0)
        except RewriteFailed as exc:
            last_error = exc
    raise last_error


def _replace(node: Derivation, lo: int, hi: int, merged: Leaf,
             recat_index: int | None, base: int) -> Derivation:
    """Rebuild node with leaf range lo..hi collapsed into the merged leaf."""
    width = len(leaves(node))
    if base == lo and base + width - 1 == hi:
        return merged
    if isinstance(node, Leaf):
        if lo <= base <= hi:
            raise RewriteFailed(None, "span does not form a constituent")
        if recat_index == base and node.token.surface == "に":
            return Leaf(node.token, NI_RECAT, node.semkey, node.norm)
        return node
    if isinstance(node, Unary):
        child = _replace(node.child, lo, hi, merged, recat_index, base)
        shifted = sentence_shift(child.category)
        if node.rule != TYPE_SHIFT or shifted != node.category:
            raise RewriteFailed(None, "unary node does not re-derive")
        return Unary(child, node.rule, node.category)
    split = base + len(leaves(node.left))
    if lo < split <= hi:
        raise RewriteFailed(None, "span does not form a constituent")
    left = _replace(node.left, lo, hi, merged, recat_index, base)
    right = _replace(node.right, lo, hi, merged, recat_index, split)
    if left is node.left and right is node.right:
        return node
    if (node.rule, node.category) in combine(left.category, right.category):
        return Binary(left, right, node.rule, node.category)
    raise RewriteFailed(None, f"node {node.category!r} does not re-derive")
