import pytest

from lpreadings.readings import (
    AtomStatus,
    Belief,
    PossibleState,
    atom_statuses,
    diagnose,
    possible_states,
)
from lpreadings.syntax import ground_text

from oracles import random_programs

T, F, V = PossibleState.TRUE_IN_ALL, PossibleState.FALSE_IN_ALL, PossibleState.VARIES
B, D, U = Belief.BELIEVED, Belief.DISBELIEVED, Belief.UNKNOWN


def by_name(statuses):
    return {str(a): s for a, s in statuses.items()}


def test_statuses_p1(p1):
    st = by_name(atom_statuses(p1))
    assert st == {"p": AtomStatus(T, B), "q": AtomStatus(F, U)}


def test_statuses_transitive_closure(trans):
    st = by_name(atom_statuses(trans))
    assert st["p(a,b)"] == AtomStatus(F, U)
    assert st["tr(a,b)"] == AtomStatus(F, U)
    assert st["tr(b,c)"] == AtomStatus(T, B)


def test_statuses_mixed(p4):
    st = by_name(atom_statuses(p4))
    assert st == {
        "happy": AtomStatus(F, U),
        "wife_faithful": AtomStatus(F, U),
        "unhappy": AtomStatus(T, B),
    }


def test_completion_basis_differs_on_closure(trans):
    # Over completion models tr(a,b) is not settled; over the well-founded
    # model it is false.
    comp = possible_states(trans, basis="completion")
    wf = possible_states(trans, basis="wf")
    a = trans.atom("tr(a,b)")
    assert (comp[a], wf[a]) == (V, F)


def test_no_expansion_marker():
    st = atom_statuses(ground_text("p :- not p."))
    assert {s.belief for s in st.values()} == {Belief.NO_EXPANSION}


def test_no_model_marker():
    gp = ground_text("p :- not p.")
    assert set(possible_states(gp, basis="completion").values()) == {PossibleState.NO_MODEL}


def test_diagnose_p1(p1):
    rep = diagnose(p1)
    r2 = rep.relation("worlds-vs-completion")
    assert r2.holds and r2.detail.startswith("proper-superset")
    assert "{{p}, {p, q}}" in r2.detail
    assert [str(a) for a in rep.flagged_atoms()] == ["q"]


def test_diagnose_mixed(p4):
    rep = diagnose(p4)
    assert rep.completion_models == rep.stable_models == [frozenset({p4.atom("unhappy")})]
    assert [str(a) for a in rep.flagged_atoms()] == ["happy", "wife_faithful"]
    assert rep.notes == ["unhappy is believed only through ¬K on unknown atom(s) wife_faithful"]


def test_diagnose_transitive_closure(trans):
    rep = diagnose(trans)
    flagged = {str(a) for a in rep.flagged_atoms()}
    assert "tr(a,b)" in flagged and "p(a,b)" in flagged
    assert not any(str(a) in flagged for a in rep.expansions[0].believed_atoms)
    assert rep.partial_stable is None
    assert rep.relation("wf-least-partial-stable").holds is None


def test_diagnose_dead_alive_unions_expansions(p3):
    rep = diagnose(p3)
    assert len(rep.expansions) == 2 and len(rep.statuses) == 2
    assert rep.relation("worlds-vs-completion").holds is None
    assert rep.flags == []


@pytest.mark.parametrize("k", range(60))
def test_flag_rule(k):
    gp = random_programs(60, seed=99)[k]
    rep = diagnose(gp)
    derived = sorted(
        {(a, s) for st in rep.statuses for a, s in st.items() if s.flagged},
        key=lambda x: (str(x[0]), x[1].belief.value),
    )
    assert rep.flags == derived
    if all(s.collapsed for st in rep.statuses for s in st.values()):
        assert rep.flags == []


def test_definite_beliefs_are_true_in_all_atoms():
    for gp in random_programs(200, seed=5):
        if not gp.is_definite:
            continue
        rep = diagnose(gp)
        (e,) = rep.expansions
        true_all = {a for a, s in rep.statuses[0].items() if s.possible_state is T}
        assert e.believed_atoms == true_all
