import pytest

from lpreadings.errors import CapExceededError
from lpreadings.fixpoint import stable_models
from lpreadings.logic import enumerate_models
from lpreadings.modal import (
    ael_expansions,
    dl_extensions,
    gelfond_embedding,
    mt_embedding,
)
from lpreadings.syntax import ground_text

from oracles import atoms, random_programs, subsets


def formulas(gp):
    return [str(f) for f in gelfond_embedding(gp).formulas]


def defaults(gp):
    return [str(d) for d in mt_embedding(gp).defaults]


def test_gelfond_distrustful_man():
    assert formulas(ground_text("unhappy :- not wife_faithful.")) == ["¬K wife_faithful → unhappy"]


def test_gelfond_p1(p1):
    assert formulas(p1) == ["¬K q → p"]


def test_gelfond_definite_is_classical(trans):
    fs = gelfond_embedding(trans).formulas
    assert all(not f.not_known for f in fs)
    assert formulas(trans)[:3] == ["p(a,a)", "p(b,c)", "p(a,a) → tr(a,a)"]


def test_expansion_p1(p1):
    (e,) = ael_expansions(gelfond_embedding(p1))
    assert e.believed_atoms == atoms("p")
    assert e.worlds == (atoms("p"), atoms("p", "q"))


def test_expansion_transitive_closure(trans):
    (e,) = ael_expansions(gelfond_embedding(trans))
    assert e.believed_atoms == atoms("p(a,a)", "p(b,c)", "tr(a,a)", "tr(b,c)")
    pab = trans.atom("p(a,b)")
    assert any(pab in w for w in e.worlds) and not all(pab in w for w in e.worlds)
    assert e.belief(pab) == "unknown"


def test_expansion_mixed(p4):
    (e,) = ael_expansions(gelfond_embedding(p4))
    assert e.believed_atoms == atoms("unhappy")
    for name in ("happy", "wife_faithful"):
        a = p4.atom(name)
        assert {a in w for w in e.worlds} == {True, False}


def test_expansion_invariants(p3):
    for e in ael_expansions(gelfond_embedding(p3)):
        assert e.believed_atoms == frozenset.intersection(*e.worlds)
        assert list(e.worlds) == enumerate_models(e.objective_kernel, p3.herbrand_base)
        statuses = {e.belief(a) for a in p3.herbrand_base}
        assert statuses <= {"believed", "disbelieved", "unknown"}


def test_no_atom_is_disbelieved():
    # Kernels are definite clauses, so the all-true world is always present.
    for gp in random_programs(100, seed=3):
        for e in ael_expansions(gelfond_embedding(gp)):
            assert frozenset(gp.herbrand_base) in e.worlds
            assert all(e.belief(a) != "disbelieved" for a in gp.herbrand_base)


def test_ael_guess_cap():
    text = "".join(f"p{i} :- not q{i}.\n" for i in range(4))
    with pytest.raises(CapExceededError):
        ael_expansions(gelfond_embedding(ground_text(text)), max_guess=3)


def test_definite_worlds_are_classical_models():
    gp = ground_text("p. q :- p, r.")
    (e,) = ael_expansions(gelfond_embedding(gp))
    expected = [m for m in subsets(gp.herbrand_base)
                if atoms("p") <= m and (not atoms("p", "r") <= m or gp.atom("q") in m)]
    assert set(e.worlds) == set(expected)


def test_mt_embedding_shapes():
    assert defaults(ground_text("unhappy :- not wife_faithful.")) == ["( : ¬wife_faithful / unhappy)"]
    assert defaults(ground_text("p.")) == ["( : / p)"]
    assert defaults(ground_text("p :- q, not r.")) == ["(q : ¬r / p)"]
    assert mt_embedding(ground_text("p.")).facts == frozenset()


def test_extensions(p1, p3):
    assert [x.atoms for x in dl_extensions(mt_embedding(p1))] == [atoms("p")]
    assert [x.atoms for x in dl_extensions(mt_embedding(p3))] == stable_models(p3)
    assert [x.atoms for x in dl_extensions(mt_embedding(p3))] == [atoms("alive"), atoms("alive*", "dead")]
    assert dl_extensions(mt_embedding(ground_text("p :- not p."))) == []


def test_dl_guess_cap():
    text = "".join(f"p{i} :- not q{i}.\n" for i in range(4))
    with pytest.raises(CapExceededError):
        dl_extensions(mt_embedding(ground_text(text)), max_guess=3)
