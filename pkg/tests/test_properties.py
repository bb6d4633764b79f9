"""Cross-semantics invariants on hypothesis-generated programs."""

from hypothesis import given, settings, strategies as st

from lpreadings.completion import supported_models
from lpreadings.errors import NotStratifiedError
from lpreadings.fixpoint import (
    fitting_model,
    least_model,
    partial_stable_models,
    perfect_model,
    stable_models,
    stratify,
    well_founded_model,
)
from lpreadings.modal import ael_expansions, dl_extensions, gelfond_embedding, mt_embedding
from lpreadings.syntax import ground_text

from oracles import brute_partial_stable, brute_stable, brute_stratified


@st.composite
def programs(draw, max_atoms=5, max_rules=8):
    pool = "abcdef"[: draw(st.integers(1, max_atoms))]
    lits = st.tuples(st.sampled_from(pool), st.booleans())
    rules = draw(st.lists(st.tuples(st.sampled_from(pool), st.lists(lits, max_size=3)), max_size=max_rules))
    text = "".join(
        f"{h} :- {', '.join(('not ' if n else '') + a for a, n in body)}.\n" if body else f"{h}.\n"
        for h, body in rules
    )
    return ground_text(text)


SETTINGS = settings(max_examples=150, deadline=None)


@SETTINGS
@given(programs())
def test_stable_matches_brute_force(gp):
    assert stable_models(gp) == brute_stable(gp)


@SETTINGS
@given(programs())
def test_stable_subset_of_supported(gp):
    assert set(stable_models(gp)) <= set(supported_models(gp))


@SETTINGS
@given(programs(max_atoms=4))
def test_partial_stable_matches_definition(gp):
    got = {(m.true_atoms, m.false_atoms) for m in partial_stable_models(gp)}
    assert got == set(brute_partial_stable(gp))


@SETTINGS
@given(programs(max_atoms=4))
def test_wf_is_knowledge_least_partial_stable(gp):
    wf = well_founded_model(gp)
    ps = partial_stable_models(gp)
    assert wf in ps and all(wf.k_leq(m) for m in ps)
    total = [m.true_atoms for m in ps if m.is_total(gp.herbrand_base)]
    assert total == stable_models(gp)


@SETTINGS
@given(programs())
def test_fitting_below_wf(gp):
    assert fitting_model(gp).k_leq(well_founded_model(gp))


@SETTINGS
@given(programs())
def test_embedding_theorems(gp):
    stable = stable_models(gp)
    assert [e.believed_atoms for e in ael_expansions(gelfond_embedding(gp))] == stable
    assert [x.atoms for x in dl_extensions(mt_embedding(gp))] == stable


@SETTINGS
@given(programs())
def test_stratified_agreement(gp):
    try:
        stratify(gp)
    except NotStratifiedError:
        assert not brute_stratified(gp)
        return
    assert brute_stratified(gp)
    wf = well_founded_model(gp)
    assert wf.is_total(gp.herbrand_base)
    assert stable_models(gp) == [perfect_model(gp)] == [wf.true_atoms]
    if gp.is_definite:
        assert least_model(gp) == perfect_model(gp)


@SETTINGS
@given(programs())
def test_stratification_levels_respect_edges(gp):
    try:
        level = stratify(gp).level
    except NotStratifiedError:
        return
    for r in gp.rules:
        for lit in r.body:
            h, b = level[r.head.predicate], level[lit.atom.predicate]
            assert h > b if lit.naf else h >= b
