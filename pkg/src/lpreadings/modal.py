"""Belief-set readings: Gelfond's autoepistemic embedding and the
Marek-Truszczyński default-logic embedding.

A naf literal ``not c`` becomes the modal literal ``¬K c`` (AEL) or the
justification ``¬c`` (DL). Positive body atoms stay objective in both
embeddings.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import CapExceededError
from .logic import DEFAULT_MAX_ATOMS, Formula, Implies, Var, conj, enumerate_models
from .syntax import Atom, GroundProgram, model_key, sort_atoms

DEFAULT_MAX_GUESS = 20


@dataclass(frozen=True)
class AELFormula:
    """``b1 ∧ … ∧ bm ∧ ¬K c1 ∧ … ∧ ¬K cn → a``; a bare atom when both lists are empty."""

    positive: tuple[Atom, ...]
    not_known: tuple[Atom, ...]
    head: Atom

    def __str__(self):
        parts = [str(b) for b in self.positive] + [f"¬K {c}" for c in self.not_known]
        if not parts:
            return str(self.head)
        return f"{' ∧ '.join(parts)} → {self.head}"

    def kernel(self, believed: frozenset[Atom]) -> Formula | None:
        """Objective formula under a belief guess, or None if some ``¬K c`` is false."""
        if any(c in believed for c in self.not_known):
            return None
        if not self.positive:
            return Var(self.head)
        return Implies(conj([Var(b) for b in self.positive]), Var(self.head))


@dataclass(frozen=True)
class AELTheory:
    formulas: tuple[AELFormula, ...]
    vocabulary: tuple[Atom, ...]

    def modal_atoms(self) -> list[Atom]:
        return sort_atoms({c for f in self.formulas for c in f.not_known})

    def __str__(self):
        return "".join(f"{f}\n" for f in self.formulas)


@dataclass(frozen=True)
class Expansion:
    believed_atoms: frozenset[Atom]
    worlds: tuple[frozenset[Atom], ...]
    objective_kernel: tuple[Formula, ...] = field(compare=False)

    def belief(self, atom: Atom) -> str:
        if atom in self.believed_atoms:
            return "believed"
        if not any(atom in w for w in self.worlds):
            return "disbelieved"
        return "unknown"


@dataclass(frozen=True)
class DefaultRule:
    prerequisite: tuple[Atom, ...]
    justifications: tuple[Atom, ...]
    consequent: Atom

    def __str__(self):
        pre = " ∧ ".join(map(str, self.prerequisite))
        just = ", ".join(f"¬{c}" for c in self.justifications)
        return " ".join(x for x in (f"({pre}", ":", just, "/", f"{self.consequent})") if x)


@dataclass(frozen=True)
class DefaultTheory:
    defaults: tuple[DefaultRule, ...]
    vocabulary: tuple[Atom, ...]
    facts: frozenset[Atom] = frozenset()

    def justification_atoms(self) -> list[Atom]:
        return sort_atoms({c for d in self.defaults for c in d.justifications})

    def __str__(self):
        return "".join(f"{d}\n" for d in self.defaults)


@dataclass(frozen=True)
class Extension:
    atoms: frozenset[Atom]


def gelfond_embedding(p: GroundProgram) -> AELTheory:
    return AELTheory(
        tuple(AELFormula(r.positive, r.negative, r.head) for r in p.rules),
        p.herbrand_base,
    )


def _guesses(atoms: list[Atom]):
    for bits in itertools.product((False, True), repeat=len(atoms)):
        yield frozenset(a for a, b in zip(atoms, bits) if b)


def ael_expansions(
    t: AELTheory,
    max_guess: int = DEFAULT_MAX_GUESS,
    max_atoms: int = DEFAULT_MAX_ATOMS,
) -> list[Expansion]:
    """Moore-style stable expansions by guessing the atoms under ``K``.

    For a guess, formulas with a ``¬K c`` on a believed ``c`` drop out and
    the remaining ``¬K`` literals are true, leaving an objective kernel. The
    guess survives iff the kernel is consistent and entails exactly the
    guessed atoms among the modal ones.
    """
    modal = t.modal_atoms()
    if len(modal) > max_guess:
        raise CapExceededError("autoepistemic guess", len(modal), max_guess)
    out = []
    for guess in _guesses(modal):
        kernel = tuple(k for f in t.formulas if (k := f.kernel(guess)) is not None)
        worlds = enumerate_models(kernel, t.vocabulary, max_atoms=max_atoms)
        # Kernels here are sets of definite clauses, which always have models.
        assert worlds, "inconsistent kernel in the Gelfond fragment"
        believed = frozenset.intersection(*worlds)
        if all((c in believed) == (c in guess) for c in modal):
            out.append(Expansion(believed, tuple(worlds), kernel))
    return sorted(out, key=lambda e: model_key(e.believed_atoms))


def mt_embedding(p: GroundProgram) -> DefaultTheory:
    return DefaultTheory(
        tuple(DefaultRule(r.positive, r.negative, r.head) for r in p.rules),
        p.herbrand_base,
    )


def _reiter_closure(t: DefaultTheory, candidate: frozenset[Atom]) -> frozenset[Atom]:
    """Close the facts under the defaults whose justifications are consistent
    with ``candidate``; prerequisites are checked against the growing set."""
    usable = [d for d in t.defaults if not any(c in candidate for c in d.justifications)]
    e = set(t.facts)
    while True:
        fired = [d.consequent for d in usable
                 if d.consequent not in e and all(a in e for a in d.prerequisite)]
        if not fired:
            return frozenset(e)
        e.update(fired)


def dl_extensions(t: DefaultTheory, max_guess: int = DEFAULT_MAX_GUESS) -> list[Extension]:
    """Reiter extensions (atomic parts), guessing which justification atoms they contain.

    Consistency of a justification ``¬c`` with an extension only depends on
    whether ``c`` is in it, so a guess over the justification atoms fixes the
    applicable defaults; the closure is then an extension iff it agrees with
    the guess.
    """
    jatoms = t.justification_atoms()
    if len(jatoms) > max_guess:
        raise CapExceededError("default-logic guess", len(jatoms), max_guess)
    out = []
    for guess in _guesses(jatoms):
        e = _reiter_closure(t, guess)
        if all((c in e) == (c in guess) for c in jatoms) and _reiter_closure(t, e) == e:
            out.append(Extension(e))
    return sorted(out, key=lambda x: model_key(x.atoms))
