from lpreadings.completion import clark_completion, supported_models
from lpreadings.fixpoint import least_model, stable_models
from lpreadings.logic import eval_formula
from lpreadings.syntax import ground_text

from oracles import atoms, brute_supported, random_programs


def completion_strings(gp):
    return [str(f) for f in clark_completion(gp).formulas()]


def test_completion_of_p1(p1):
    assert completion_strings(p1) == ["p ↔ ¬q", "q ↔ false"]


def test_completion_of_dead_alive():
    gp = ground_text("dead :- not alive.")
    assert completion_strings(gp) == ["alive ↔ false", "dead ↔ ¬alive"]


def test_completion_fact_and_rule():
    gp = ground_text("p.\np :- q.")
    assert completion_strings(gp) == ["p ↔ (true ∨ q)", "q ↔ false"]


def test_every_atom_has_one_equivalence(trans):
    comp = clark_completion(trans)
    assert set(comp.equivalences) == set(trans.herbrand_base)


def test_supported_p1(p1):
    assert supported_models(p1) == [atoms("p")]


def test_supported_mixed(p4):
    assert supported_models(p4) == [atoms("unhappy")]


def test_supported_self_loop():
    assert supported_models(ground_text("p :- p.")) == [frozenset(), atoms("p")]


def test_supported_transitive_closure(trans):
    # tr(a,b) and tr(a,c) are each self-supported through p(a,a); the
    # completion cannot rule them out.
    least = atoms("p(a,a)", "p(b,c)", "tr(a,a)", "tr(b,c)")
    expected = [least | extra for extra in
                (atoms("tr(a,b)", "tr(a,c)"), atoms("tr(a,b)"), atoms("tr(a,c)"), frozenset())]
    assert supported_models(trans) == expected


def test_supported_equals_tp_fixpoints():
    for gp in random_programs(150, seed=11):
        assert supported_models(gp) == brute_supported(gp)


def test_least_model_is_supported_for_definite():
    for gp in random_programs(150, seed=12):
        if gp.is_definite:
            assert least_model(gp) in supported_models(gp)


def test_stable_models_satisfy_completion():
    for gp in random_programs(150, seed=13):
        comp = clark_completion(gp).formulas()
        for m in stable_models(gp):
            assert all(eval_formula(f, m) for f in comp)
