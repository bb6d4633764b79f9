import pytest
from hypothesis import given, strategies as st

from lpreadings.errors import GroundingBudgetError, ParseError, SafetyError
from lpreadings.syntax import (
    Atom,
    GroundProgram,
    Literal,
    Rule,
    ground,
    parse_atom,
    parse_program,
    split_atom_list,
)

from conftest import corpus_text


def test_parse_single_naf_rule():
    prog = parse_program("p :- not q.")
    assert prog.rules == (Rule(Atom("p"), (Literal(Atom("q"), naf=True),)),)


def test_parse_transitive_closure():
    prog = parse_program(corpus_text("trans"))
    facts = [r for r in prog.rules if not r.body]
    assert len(prog.rules) == 4 and len(facts) == 2
    assert prog.constants == {"a", "b", "c"}
    assert str(prog.rules[3]) == "tr(X,Y) :- p(X,Z), tr(Z,Y)."


def test_safety_error_names_variable():
    with pytest.raises(SafetyError) as exc:
        parse_program("p(X) :- not q(X).")
    assert exc.value.variable == "X"


def test_unsafe_head_variable():
    with pytest.raises(SafetyError, match="Y"):
        parse_program("p(X,Y) :- q(X).")


@pytest.mark.parametrize(
    "text, fragment, line, col",
    [
        ("p | q.", "disjunctive", 1, 3),
        ("p ; q :- r.", "disjunctive", 1, 3),
        ("p, q.", "disjunctive", 1, 2),
        ("p :- -q.", "strong negation", 1, 6),
        ("p.\nq :- r", "expected '.'", 2, 7),
        (":- p.", "head", 1, 1),
        ("p(f(a)).", "function symbols", 1, 3),
        ("X :- p.", "predicate", 1, 1),
    ],
)
def test_parse_errors_carry_position(text, fragment, line, col):
    with pytest.raises(ParseError) as exc:
        parse_program(text)
    assert fragment in str(exc.value)
    assert (exc.value.line, exc.value.column) == (line, col)


def test_comments_and_primed_identifiers():
    prog = parse_program("% header\nalive* :- not alive. % trailing\n")
    assert str(prog.rules[0].head) == "alive*"


def test_ground_propositional_is_identity():
    gp = ground(parse_program("p :- not q."))
    assert [str(r) for r in gp.rules] == ["p :- not q."]
    assert [str(a) for a in gp.herbrand_base] == ["p", "q"]


def test_ground_transitive_closure_counts():
    prog = parse_program(corpus_text("trans"))
    gp = ground(prog)
    assert len(gp.herbrand_base) == 18
    assert sum(a.predicate == "p" for a in gp.herbrand_base) == 9
    # 3^2 substitutions for (X,Y) and 3^3 for (X,Z,Y); none coincide.
    rule3 = [r for r in gp.rules if r.head.predicate == "tr" and len(r.body) == 1]
    rule4 = [r for r in gp.rules if len(r.body) == 2]
    assert (len(gp.rules), len(rule3), len(rule4)) == (2 + 9 + 27, 9, 27)


def test_ground_empty_program():
    gp = ground(parse_program(""))
    assert gp.rules == () and gp.herbrand_base == ()


def test_ground_deduplicates_instances():
    gp = ground(parse_program("q(a).\np :- q(X).\np :- q(Y)."))
    assert [str(r) for r in gp.rules] == ["q(a).", "p :- q(a)."]


def test_herbrand_base_includes_undefined_atoms():
    gp = ground(parse_program("p(a) :- not q(b)."))
    assert [str(a) for a in gp.herbrand_base] == ["p(a)", "p(b)", "q(a)", "q(b)"]


def test_grounding_budget():
    with pytest.raises(GroundingBudgetError):
        ground(parse_program("p(a,b,c,d,e). q(X,Y,Z,W,V) :- p(X,Y,Z,W,V)."), max_base=100)


def test_grounding_idempotent():
    gp = ground(parse_program(corpus_text("trans")))
    assert ground(gp) == gp


def test_base_is_sorted_by_printed_name():
    gp = ground(parse_program(corpus_text("deadalive")))
    assert [str(a) for a in gp.herbrand_base] == ["alive", "alive*", "dead"]


def test_instance_count_formula():
    prog = parse_program("c(a). c(b). c(d). r(X,Y,Z) :- c(X), c(Y), c(Z).")
    gp = ground(prog)
    assert sum(r.head.predicate == "r" for r in gp.rules) == 3 ** 3


def test_split_atom_list():
    assert split_atom_list("p(a,b), q ,tr(a,c)") == ["p(a,b)", "q", "tr(a,c)"]
    assert parse_atom("tr(a,b)") == Atom("tr", ("a", "b"))


# Round trip: parse -> print -> parse is the identity.

names = st.sampled_from(["p", "q", "r", "alive*", "wife_faithful"])
consts = st.sampled_from(["a", "b", "c1", "0"])
variables = st.sampled_from(["X", "Y", "_Z"])


@st.composite
def rules(draw):
    def atom(terms):
        args = draw(st.lists(terms, max_size=2))
        return Atom(draw(names), tuple(args))

    pos = [atom(st.one_of(consts, variables)) for _ in range(draw(st.integers(0, 3)))]
    bound = sorted({v for a in pos for v in a.variables()}) or ["a"]
    safe_terms = st.one_of(consts, st.sampled_from(bound)) if bound != ["a"] else consts
    neg = [atom(safe_terms) for _ in range(draw(st.integers(0, 2)))]
    head = atom(safe_terms)
    body = [Literal(a) for a in pos] + [Literal(a, True) for a in neg]
    return Rule(head, tuple(draw(st.permutations(body))))


@given(st.lists(rules(), max_size=6))
def test_parse_print_roundtrip(rs):
    text = "".join(f"{r}\n" for r in rs)
    prog = parse_program(text)
    assert prog.rules == tuple(rs)
    assert parse_program(str(prog)) == prog
