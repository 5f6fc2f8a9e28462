import pytest

from tempnli.terms import (
    Abs, And, App, Const, Eq, Exists, IllTyped, IntLit, Not, TOP, Term, Var,
    alpha_canonical, alpha_equal, app, atom, beta_reduce, conj, conjuncts,
    free_vars, parse_term, pretty, spine, substitute,
)


def test_substitute_not_free():
    t = Abs("x", App(Const("f"), Var("x")))
    assert substitute(t, "y", Const("c")) == t


def test_substitute_simple():
    t = App(Const("f"), Var("y"))
    assert substitute(t, "y", Const("c")) == App(Const("f"), Const("c"))


def test_substitute_capture_avoiding():
    # substitute y := x in λx.y x must rename the binder
    t = Abs("x", App(Var("y"), Var("x")))
    got = substitute(t, "y", Var("x"))
    expected = Abs("z", App(Var("x"), Var("z")))
    assert alpha_equal(got, expected)
    # the free x stayed free
    assert free_vars(got) == {"x"}


def test_substitute_shadowed_binder_untouched():
    t = Abs("y", App(Var("y"), Var("z")))
    assert substitute(t, "y", Const("c")) == t


def test_beta_identity_redex():
    assert beta_reduce(App(Abs("x", Var("x")), Const("c"))) == Const("c")


def test_beta_no_redex_is_identity():
    t = Exists("x", And(atom("p", Var("x")), TOP))
    assert beta_reduce(t) == t


def test_beta_nested():
    # (λf x. f (f x)) g a  ->  g (g a)
    twice = Abs("f", Abs("x", App(Var("f"), App(Var("f"), Var("x")))))
    got = beta_reduce(app(twice, Const("g"), Const("a")))
    assert got == App(Const("g"), App(Const("g"), Const("a")))


def test_beta_capture():
    # (λx y. x) y  ->  λy'. y  (the free y must not be captured)
    k = Abs("x", Abs("y", Var("x")))
    got = beta_reduce(App(k, Var("y")))
    assert isinstance(got, Abs)
    assert got.param != "y"
    assert got.body == Var("y")


def test_apply_non_function_raises():
    with pytest.raises(IllTyped):
        beta_reduce(App(TOP, Const("c")))
    with pytest.raises(IllTyped):
        beta_reduce(App(IntLit(3), Const("c")))
    with pytest.raises(IllTyped):
        beta_reduce(App(Exists("x", TOP), Const("c")))


def test_alpha_canonical_orders_binders():
    t = Abs("a", Exists("b", App(Var("a"), Var("b"))))
    got = alpha_canonical(t)
    assert got == Abs("x1", Exists("x2", App(Var("x1"), Var("x2"))))


def test_alpha_equal_ignores_names():
    a = Exists("s", Exists("r", atom("before", Var("r"), Var("s"))))
    b = Exists("u", Exists("v", atom("before", Var("v"), Var("u"))))
    assert alpha_equal(a, b)
    assert not alpha_equal(a, Exists("u", Exists("v", atom("before", Var("u"), Var("v")))))


def test_spine_and_conjuncts():
    t = atom("f", Var("a"), Var("b"), Var("c"))
    head, args = spine(t)
    assert head == Const("f")
    assert args == [Var("a"), Var("b"), Var("c")]
    c = conj(TOP, atom("p"), atom("q"))
    assert conjuncts(c) == [TOP, Const("p"), Const("q")]


def test_pretty_round_trip():
    samples = [
        "λN F.(N(λx.⊤,taro) ∧ F(taro))",
        "∃s r.(⊤ ∧ ∃e1.(come(e1) ∧ during(time(e1),r) ∧ after(r,s) ∧ (Nom(e1) = taro)))",
        "λQ.Q",
        "∀I X R.((nort(X) = I) ∧ before(R,X) → ∀J.((I ≤ J) → ∃Z.((nort(Z) = J) ∧ before(R,Z))))",
        "¬before(r,s)",
        "∃x.((normalized_time(x) = 40300) ∧ (x = j3))",
    ]
    for s in samples:
        t = parse_term(s)
        t2 = parse_term(pretty(t))
        assert alpha_equal(t, t2), s


def test_parse_term_constants_vs_vars():
    t = parse_term("λx.f(x,y)")
    # x is bound -> Var; f and y are free -> Const
    assert t == Abs("x", app(Const("f"), Var("x"), Const("y")))


def test_pretty_paper_formula_shape():
    t = parse_term("∃s r.(⊤ ∧ ∃e1.(come(e1) ∧ during(time(e1),r) ∧ after(r,s) ∧ (Nom(e1) = taro)))")
    s = pretty(t)
    assert "∃" in s and "∧" in s and "come(" in s and "during(time(" in s
