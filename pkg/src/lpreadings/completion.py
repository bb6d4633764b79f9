"""Clark completion of ground programs and its models (the supported models)."""

from __future__ import annotations

from dataclasses import dataclass

from .logic import DEFAULT_MAX_ATOMS, Formula, Iff, Not, Var, conj, disj, enumerate_models
from .syntax import Atom, GroundProgram, Rule


@dataclass(frozen=True)
class CompletionTheory:
    """One completed definition ``a ↔ body`` per atom of the vocabulary."""

    equivalences: dict[Atom, Formula]
    vocabulary: tuple[Atom, ...]

    def formulas(self) -> list[Formula]:
        return [Iff(Var(a), self.equivalences[a]) for a in self.vocabulary]

    def __str__(self):
        return "".join(f"{f}\n" for f in self.formulas())


def rule_body_formula(rule: Rule) -> Formula:
    return conj([Not(Var(l.atom)) if l.naf else Var(l.atom) for l in rule.body])


def clark_completion(p: GroundProgram) -> CompletionTheory:
    bodies: dict[Atom, list[Formula]] = {a: [] for a in p.herbrand_base}
    for r in p.rules:
        bodies[r.head].append(rule_body_formula(r))
    return CompletionTheory(
        {a: disj(bodies[a]) for a in p.herbrand_base}, p.herbrand_base
    )


def supported_models(p: GroundProgram, max_atoms: int = DEFAULT_MAX_ATOMS) -> list[frozenset[Atom]]:
    comp = clark_completion(p)
    return enumerate_models(comp.formulas(), comp.vocabulary, max_atoms=max_atoms)
