"""Side-by-side comparison of the definition reading and the belief reading.

For every atom the possible-state status (is it true in all possible states,
false in all, or does it vary) is set against its belief status in an
autoepistemic expansion (believed, disbelieved, unknown). Atoms whose state
is fixed but whose belief is unknown are flagged.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable

from .completion import clark_completion, supported_models
from .errors import LPError
from .fixpoint import (
    DEFAULT_MAX_ATOMS_3V,
    PartialInterpretation,
    partial_stable_models,
    stable_models,
    well_founded_model,
)
from .logic import DEFAULT_MAX_ATOMS, eval_formula
from .modal import (
    DEFAULT_MAX_GUESS,
    Expansion,
    Extension,
    ael_expansions,
    dl_extensions,
    gelfond_embedding,
    mt_embedding,
)
from .syntax import Atom, GroundProgram, model_key, sort_atoms


class PossibleState(str, enum.Enum):
    TRUE_IN_ALL = "true-in-all"
    FALSE_IN_ALL = "false-in-all"
    VARIES = "varies"
    NO_MODEL = "no-model"


class Belief(str, enum.Enum):
    BELIEVED = "believed"
    DISBELIEVED = "disbelieved"
    UNKNOWN = "unknown"
    NO_EXPANSION = "no-expansion"


@dataclass(frozen=True)
class AtomStatus:
    possible_state: PossibleState
    belief: Belief

    @property
    def flagged(self) -> bool:
        return self.belief is Belief.UNKNOWN and self.possible_state in (
            PossibleState.TRUE_IN_ALL,
            PossibleState.FALSE_IN_ALL,
        )

    @property
    def collapsed(self) -> bool:
        """Belief is the two-valued image of the possible-state status."""
        return (self.possible_state, self.belief) in (
            (PossibleState.TRUE_IN_ALL, Belief.BELIEVED),
            (PossibleState.FALSE_IN_ALL, Belief.DISBELIEVED),
        )

    def __str__(self):
        return f"({self.possible_state.value}, {self.belief.value})"


@dataclass(frozen=True)
class RelationResult:
    name: str
    holds: bool | None  # None when the check does not apply
    detail: str


class InvariantViolation(LPError):
    """A relation that is a theorem failed; the computation is wrong."""


@dataclass
class ReadingsReport:
    herbrand_base: tuple[Atom, ...]
    possible_state_basis: str
    completion_models: list[frozenset[Atom]]
    stable_models: list[frozenset[Atom]]
    wf_model: PartialInterpretation
    partial_stable: list[PartialInterpretation] | None
    expansions: list[Expansion]
    extensions: list[Extension]
    statuses: list[dict[Atom, AtomStatus]]
    relations: list[RelationResult]
    flags: list[tuple[Atom, AtomStatus]]
    notes: list[str] = field(default_factory=list)

    def flagged_atoms(self) -> list[Atom]:
        return sort_atoms({a for a, _ in self.flags})

    def relation(self, name: str) -> RelationResult:
        for r in self.relations:
            if r.name == name:
                return r
        raise KeyError(name)


# --------------------------------------------------------------------------
# Statuses


def _state_from_models(models: list[frozenset[Atom]], atom: Atom) -> PossibleState:
    if not models:
        return PossibleState.NO_MODEL
    hits = sum(atom in m for m in models)
    if hits == len(models):
        return PossibleState.TRUE_IN_ALL
    if hits == 0:
        return PossibleState.FALSE_IN_ALL
    return PossibleState.VARIES


def _state_from_wf(wf: PartialInterpretation, atom: Atom) -> PossibleState:
    if atom in wf.true_atoms:
        return PossibleState.TRUE_IN_ALL
    if atom in wf.false_atoms:
        return PossibleState.FALSE_IN_ALL
    return PossibleState.VARIES


def possible_states(
    p: GroundProgram,
    basis: str = "wf",
    max_atoms: int = DEFAULT_MAX_ATOMS,
    *,
    wf: PartialInterpretation | None = None,
    completion_models: list[frozenset[Atom]] | None = None,
) -> dict[Atom, PossibleState]:
    """Possible-state status of every atom.

    ``basis="wf"`` reads the well-founded model as the possible-state
    semantics of the definition reading (undefined atoms vary);
    ``basis="completion"`` ranges over the models of the Clark completion.
    """
    if basis == "wf":
        wf = wf if wf is not None else well_founded_model(p)
        return {a: _state_from_wf(wf, a) for a in p.herbrand_base}
    if basis == "completion":
        models = completion_models if completion_models is not None else supported_models(p, max_atoms)
        return {a: _state_from_models(models, a) for a in p.herbrand_base}
    raise ValueError(f"unknown possible-state basis {basis!r}")


def _statuses(p, states, expansion: Expansion | None) -> dict[Atom, AtomStatus]:
    out = {}
    for a in p.herbrand_base:
        belief = Belief.NO_EXPANSION if expansion is None else Belief(expansion.belief(a))
        out[a] = AtomStatus(states[a], belief)
    return out


def atom_statuses(
    p: GroundProgram,
    basis: str = "wf",
    max_atoms: int = DEFAULT_MAX_ATOMS,
    max_guess: int = DEFAULT_MAX_GUESS,
) -> dict[Atom, AtomStatus]:
    """Statuses against the first expansion (lexicographic by believed atoms)."""
    states = possible_states(p, basis, max_atoms)
    exps = ael_expansions(gelfond_embedding(p), max_guess=max_guess, max_atoms=max_atoms)
    return _statuses(p, states, exps[0] if exps else None)


# --------------------------------------------------------------------------
# Relations


def _fmt(models: Iterable[Iterable[Atom]], limit: int | None = None) -> str:
    models = list(models)
    if limit is not None and len(models) > limit:
        return f"<{len(models)} models>"
    return "{" + ", ".join("{" + ", ".join(model_key(m)) + "}" for m in models) + "}"


def _check_stable_in_completion(p, stable, completion) -> RelationResult:
    comp = clark_completion(p).formulas()
    members = set(completion)
    for m in stable:
        if m not in members or not all(eval_formula(f, m) for f in comp):
            raise InvariantViolation(
                f"stable model {_fmt([m])} does not satisfy the completion"
            )
    return RelationResult(
        "stable-satisfies-completion",
        True,
        f"{len(stable)} stable model(s) among {len(completion)} completion model(s)",
    )


def _check_worlds_vs_completion(expansions, completion) -> RelationResult:
    name = "worlds-vs-completion"
    if len(expansions) != 1:
        return RelationResult(name, None, f"not applicable: {len(expansions)} expansions")
    worlds = set(expansions[0].worlds)
    comp = set(completion)
    if worlds == comp:
        rel = "equal"
    elif comp < worlds:
        rel = "proper-superset"
    else:
        rel = "not-superset"
    return RelationResult(
        name,
        comp <= worlds,
        f"{rel}: worlds {_fmt(sorted(worlds, key=model_key), 8)} vs completion models "
        f"{_fmt(sorted(comp, key=model_key), 8)}",
    )


def _check_wf_bounds(wf, stable) -> RelationResult:
    bad = [m for m in stable if not (wf.true_atoms <= m and not (m & wf.false_atoms))]
    if bad:
        raise InvariantViolation(f"well-founded model does not bound {_fmt(bad)}")
    return RelationResult(
        "wf-bounds-stable", True, f"well-founded true/false sets bound {len(stable)} stable model(s)"
    )


def _check_beliefs_vs_stable(expansions, stable) -> RelationResult:
    beliefs = sorted((e.believed_atoms for e in expansions), key=model_key)
    ok = beliefs == stable
    return RelationResult(
        "belief-sets-equal-stable", ok, f"believed atoms {_fmt(beliefs)} vs stable {_fmt(stable)}"
    )


def _check_extensions_vs_stable(extensions, stable) -> RelationResult:
    ext = [x.atoms for x in extensions]
    return RelationResult(
        "extensions-equal-stable", ext == stable, f"extensions {_fmt(ext)} vs stable {_fmt(stable)}"
    )


def _check_wf_least_partial(wf, pstable) -> RelationResult:
    name = "wf-least-partial-stable"
    if pstable is None:
        return RelationResult(name, None, "not applicable: base exceeds the 3-valued cap")
    ok = wf in pstable and all(wf.k_leq(m) for m in pstable)
    return RelationResult(name, ok, f"{len(pstable)} partial stable model(s)")


def _belief_notes(p: GroundProgram, statuses: dict[Atom, AtomStatus]) -> list[str]:
    """Believed atoms whose every supporting rule rests on a ``¬K`` of an unknown atom."""
    notes = []
    for a in p.herbrand_base:
        if statuses[a].belief is not Belief.BELIEVED:
            continue
        rules = [r for r in p.rules if r.head == a]
        if not rules:
            continue
        causes = []
        for r in rules:
            unknown = [c for c in r.negative if statuses[c].belief is Belief.UNKNOWN]
            if not unknown:
                causes = []
                break
            causes.extend(unknown)
        if causes:
            names = ", ".join(str(c) for c in sort_atoms(set(causes)))
            notes.append(f"{a} is believed only through ¬K on unknown atom(s) {names}")
    return notes


def diagnose(
    p: GroundProgram,
    basis: str = "wf",
    max_atoms: int = DEFAULT_MAX_ATOMS,
    max_atoms_3v: int = DEFAULT_MAX_ATOMS_3V,
    max_guess: int = DEFAULT_MAX_GUESS,
) -> ReadingsReport:
    completion = supported_models(p, max_atoms)
    stable = stable_models(p, max_atoms)
    wf = well_founded_model(p)
    pstable = (
        partial_stable_models(p, max_atoms_3v) if len(p.herbrand_base) <= max_atoms_3v else None
    )
    expansions = ael_expansions(gelfond_embedding(p), max_guess=max_guess, max_atoms=max_atoms)
    extensions = dl_extensions(mt_embedding(p), max_guess=max_guess)

    states = possible_states(p, basis, max_atoms, wf=wf, completion_models=completion)
    statuses = [_statuses(p, states, e) for e in expansions] or [_statuses(p, states, None)]
    flags = sorted(
        {(a, s) for st in statuses for a, s in st.items() if s.flagged},
        key=lambda x: (str(x[0]), x[1].belief.value),
    )
    relations = [
        _check_stable_in_completion(p, stable, completion),
        _check_worlds_vs_completion(expansions, completion),
        _check_wf_bounds(wf, stable),
        _check_beliefs_vs_stable(expansions, stable),
        _check_extensions_vs_stable(extensions, stable),
        _check_wf_least_partial(wf, pstable),
    ]
    notes = _belief_notes(p, statuses[0]) if expansions else []
    return ReadingsReport(
        herbrand_base=p.herbrand_base,
        possible_state_basis=basis,
        completion_models=completion,
        stable_models=stable,
        wf_model=wf,
        partial_stable=pstable,
        expansions=expansions,
        extensions=extensions,
        statuses=statuses,
        relations=relations,
        flags=flags,
        notes=notes,
    )
