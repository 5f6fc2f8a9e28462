"""Sentence-to-formula pipeline: tokenize, parse, rewrite, assign, compose, close."""

from __future__ import annotations

from dataclasses import dataclass

from .grammar import Derivation, Lexicon, Token, parse, tokenize
from .semantics import TemplateStore, assign, close, compose
from .terms import Term
from .treefix import RewriteFailed, rewrite

STAGES = ("tokenize", "parse", "rewrite", "assign", "compose", "close")


class PipelineError(Exception):
    def __init__(self, stage: str, sentence: str, detail: str):
        super().__init__(f"[{stage}] {sentence!r}: {detail}")
        self.stage = stage
        self.sentence = sentence
        self.detail = detail


@dataclass
class Analysis:
    sentence: str
    tokens: list[Token]
    parsed: Derivation          # chosen derivation before tree conversion
    rewritten: Derivation
    formula: Term


class Pipeline:
    """Shared lexicon/template state; all methods are pure per call."""

    def __init__(self, lexicon: Lexicon | None = None,
                 templates: TemplateStore | None = None):
        self.lexicon = lexicon or Lexicon.default()
        self.templates = templates or TemplateStore.default()
        self._cache: dict[str, Analysis] = {}

    def derivations(self, sentence: str) -> list[Derivation]:
        tokens = tokenize(sentence, self.lexicon)
        return parse(tokens, self.lexicon)

    def analyze(self, sentence: str) -> Analysis:
        """First derivation that rewrites and composes successfully."""
        if sentence in self._cache:
            return self._cache[sentence]
        try:
            tokens = tokenize(sentence, self.lexicon)
        except Exception as exc:
            raise PipelineError("tokenize", sentence, str(exc)) from exc
        derivations = parse(tokens, self.lexicon)
        if not derivations:
            raise PipelineError("parse", sentence, "no derivation with root S[t]")
        failures: list[str] = []
        for derivation in derivations:
            try:
                fixed = rewrite(derivation)
            except RewriteFailed as exc:
                failures.append(f"rewrite: {exc}")
                continue
            try:
                annotated = assign(fixed, self.templates)
            except Exception as exc:
                failures.append(f"assign: {exc}")
                continue
            try:
                term = compose(annotated)
                formula = close(term)
            except Exception as exc:
                failures.append(f"compose: {exc}")
                continue
            analysis = Analysis(sentence, tokens, derivation, fixed, formula)
            self._cache[sentence] = analysis
            return analysis
        stage = failures[0].split(":", 1)[0] if failures else "compose"
        raise PipelineError(stage, sentence,
                            failures[0] if failures else "no derivation composed")
