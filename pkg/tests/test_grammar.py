import pytest

from tempnli.categories import (
    CategorySyntaxError, parse_category, unify,
)
from tempnli.grammar import (
    BACKWARD_APP, EmptyInput, Leaf, Lexicon, TEMPORAL, Token, Unary,
    UnknownSegment, leaves, parse, render_tree, tokenize, validate,
)


@pytest.fixture(scope="module")
def lexicon():
    return Lexicon.default()


def surfaces(tokens):
    return [t.surface for t in tokens]


def test_category_parsing_round_trip():
    for text in ("S[nm,base,f]", "NP[ga,nm,f]", "(S[nm,base,f]/S[nm,base,f])\\NP[nc,nm,f]",
                 "NP", "(S/S)\\(S/S)", "S[nm,base,f]\\NP[ga,nm,f]"):
        assert repr(parse_category(text)) == text
    # slashes are left-associative: S/S\NP == (S/S)\NP
    assert parse_category("S/S\\NP") == parse_category("(S/S)\\NP")
    with pytest.raises(CategorySyntaxError):
        parse_category("Q[x]")


def test_unify_wildcard_absorption():
    a = parse_category("NP[ga,nm,f]")
    b = parse_category("NP[ga,*,f]")
    assert unify(a, b) == a


def test_unify_distinct_cases_fail():
    assert unify(parse_category("NP[ga,nm,f]"), parse_category("NP[nc,nm,f]")) is None


def test_unify_functor_identity():
    c = parse_category("(S/S)\\NP")
    assert unify(c, c) == c


def test_tokenize_simple(lexicon):
    assert surfaces(tokenize("太郎が来る", lexicon)) == ["太郎", "が", "来る"]
    assert surfaces(tokenize("太郎が来る。", lexicon)) == ["太郎", "が", "来る"]


def test_tokenize_empty(lexicon):
    with pytest.raises(EmptyInput):
        tokenize("", lexicon)


def test_tokenize_temporal_prefix(lexicon):
    toks = tokenize("4月3日以前に太郎が来た", lexicon)
    assert surfaces(toks) == ["4月", "3日", "以前", "に", "太郎", "が", "来た"]
    assert [t.kind for t in toks[:2]] == [TEMPORAL, TEMPORAL]


def test_tokenize_unknown_segment(lexicon):
    with pytest.raises(UnknownSegment) as err:
        tokenize("太郎がヘリコプター", lexicon)
    assert err.value.position == 3


def test_tokenize_round_trip(lexicon):
    for text in ("太郎が来る。", "4月3日以前に太郎が来た。", "午後7時以降ロビンは両親を訪ねた。",
                 "月曜日以前、食料品店が閉店した。", "1992年以来、ITELはバーミンガムにある。"):
        toks = tokenize(text, lexicon)
        assert "".join(surfaces(toks)) == text.rstrip("。")


def test_tokenize_longest_match_niwa(lexicon):
    toks = tokenize("ITELは1993年にはバーミンガムにあった", lexicon)
    assert "には" in surfaces(toks)


def test_parse_fig1_shape(lexicon):
    toks = tokenize("太郎が来る", lexicon)
    results = parse(toks, lexicon)
    assert len(results) >= 1
    best = results[0]
    # root is the shifted S[nm,base,t]
    assert isinstance(best, Unary)
    assert repr(best.category) == "S[nm,base,t]"
    inner = best.child
    # backward application of (太郎 が) into 来る
    assert inner.rule == BACKWARD_APP
    assert repr(inner.category) == "S[nm,base,f]"
    np = inner.left
    assert np.rule == BACKWARD_APP
    assert repr(np.category) == "NP[ga,nm,f]"
    assert [l.token.surface for l in leaves(best)] == ["太郎", "が", "来る"]
    assert validate(best)


def test_parse_single_leaf(lexicon):
    toks = tokenize("泳いだ", lexicon)
    results = parse(toks, lexicon)
    assert any(isinstance(d, Unary) and isinstance(d.child, Leaf) for d in results)


def test_parse_deterministic(lexicon):
    toks = tokenize("4月3日に太郎が来た", lexicon)
    a = parse(toks, lexicon)
    b = parse(toks, lexicon)
    assert [render_tree(d) for d in a] == [render_tree(d) for d in b]
    assert len(a) >= 1


def test_parse_temporal_prefix_matches_pre_conversion_shape(lexicon):
    # the temporal prefix 4月 3日 に groups as [[4月 3日] に] with に taking NP
    toks = tokenize("4月3日に太郎が来た", lexicon)
    results = parse(toks, lexicon)

    def has_fig5_prefix(node):
        found = []

        def walk(n):
            if hasattr(n, "left"):
                lhs_leaves = [l.token.surface for l in leaves(n)]
                if lhs_leaves == ["4月", "3日", "に"] and repr(n.category).startswith("S"):
                    sub = n.left
                    if [l.token.surface for l in leaves(sub)] == ["4月", "3日"] \
                            and repr(sub.category).startswith("NP"):
                        found.append(n)
                walk(n.left)
                walk(n.right)
            elif hasattr(n, "child"):
                walk(n.child)

        walk(node)
        return bool(found)

    assert any(has_fig5_prefix(d) for d in results)


def test_all_parses_validate(lexicon):
    for text in ("太郎が来る", "4月3日に太郎が来た", "月曜日以前、食料品店が閉店した",
                 "午後7時以降ロビンは両親を訪ねた"):
        for d in parse(tokenize(text, lexicon), lexicon):
            assert validate(d), text


def test_no_parse_is_empty_not_error(lexicon):
    toks = tokenize("がが", lexicon)
    assert parse(toks, lexicon) == []
