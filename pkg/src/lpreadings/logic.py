"""Propositional formulas, two-valued evaluation, model enumeration, entailment."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import kernels
from ._pykernels import OP_AND, OP_FALSE, OP_IFF, OP_IMP, OP_NOT, OP_OR, OP_TRUE, OP_VAR
from .errors import CapExceededError, UnknownAtomError
from .syntax import Atom, model_key

DEFAULT_MAX_ATOMS = 22

Interpretation = frozenset  # frozenset[Atom]; atoms outside the set are false


class Formula:
    """Base class of propositional formulas."""

    def atoms(self) -> set[Atom]:
        out: set[Atom] = set()
        _collect_atoms(self, out)
        return out


@dataclass(frozen=True)
class Var(Formula):
    atom: Atom

    def __str__(self):
        return str(self.atom)


@dataclass(frozen=True)
class Const(Formula):
    value: bool

    def __str__(self):
        return "true" if self.value else "false"


TRUE = Const(True)
FALSE = Const(False)


@dataclass(frozen=True)
class Not(Formula):
    arg: Formula

    def __str__(self):
        return f"¬{_wrap(self.arg)}"


@dataclass(frozen=True)
class And(Formula):
    args: tuple[Formula, ...]

    def __str__(self):
        if not self.args:
            return "true"
        return " ∧ ".join(_wrap(a) for a in self.args)


@dataclass(frozen=True)
class Or(Formula):
    args: tuple[Formula, ...]

    def __str__(self):
        if not self.args:
            return "false"
        return " ∨ ".join(_wrap(a) for a in self.args)


@dataclass(frozen=True)
class Implies(Formula):
    lhs: Formula
    rhs: Formula

    def __str__(self):
        return f"{_wrap(self.lhs)} → {_wrap(self.rhs)}"


@dataclass(frozen=True)
class Iff(Formula):
    lhs: Formula
    rhs: Formula

    def __str__(self):
        return f"{_wrap(self.lhs)} ↔ {_wrap(self.rhs)}"


def _wrap(f: Formula) -> str:
    if isinstance(f, (Var, Const, Not)) or (isinstance(f, (And, Or)) and len(f.args) < 2):
        return str(f)
    return f"({f})"


def _collect_atoms(f: Formula, out: set) -> None:
    if isinstance(f, Var):
        out.add(f.atom)
    elif isinstance(f, Not):
        _collect_atoms(f.arg, out)
    elif isinstance(f, (And, Or)):
        for a in f.args:
            _collect_atoms(a, out)
    elif isinstance(f, (Implies, Iff)):
        _collect_atoms(f.lhs, out)
        _collect_atoms(f.rhs, out)


def conj(parts: Sequence[Formula]) -> Formula:
    """Conjunction that leaves a single conjunct unwrapped and maps () to true."""
    if not parts:
        return TRUE
    return parts[0] if len(parts) == 1 else And(tuple(parts))


def disj(parts: Sequence[Formula]) -> Formula:
    if not parts:
        return FALSE
    return parts[0] if len(parts) == 1 else Or(tuple(parts))


def eval_formula(f: Formula, i: Iterable[Atom], vocab: Iterable[Atom] | None = None) -> bool:
    """Two-valued truth of ``f`` under the interpretation ``i``.

    When ``vocab`` is given every atom of ``f`` must belong to it; otherwise
    atoms outside ``i`` simply count as false.
    """
    true_atoms = i if isinstance(i, (set, frozenset)) else frozenset(i)
    if vocab is not None:
        vocab = set(vocab)
        missing = f.atoms() - vocab
        if missing:
            raise UnknownAtomError(f"atoms not in vocabulary: {', '.join(sorted(map(str, missing)))}")
    return _eval(f, true_atoms)


def _eval(f: Formula, t) -> bool:
    if isinstance(f, Var):
        return f.atom in t
    if isinstance(f, Const):
        return f.value
    if isinstance(f, Not):
        return not _eval(f.arg, t)
    if isinstance(f, And):
        return all(_eval(a, t) for a in f.args)
    if isinstance(f, Or):
        return any(_eval(a, t) for a in f.args)
    if isinstance(f, Implies):
        return not _eval(f.lhs, t) or _eval(f.rhs, t)
    if isinstance(f, Iff):
        return _eval(f.lhs, t) == _eval(f.rhs, t)
    raise TypeError(f"not a formula: {f!r}")


def compile_formula(f: Formula, index: dict[Atom, int], code: list[int]) -> list[int]:
    """Append the postfix bytecode of ``f`` to ``code``."""
    if isinstance(f, Var):
        try:
            code += (OP_VAR, index[f.atom])
        except KeyError:
            raise UnknownAtomError(f"atom {f.atom} not in vocabulary") from None
    elif isinstance(f, Const):
        code.append(OP_TRUE if f.value else OP_FALSE)
    elif isinstance(f, Not):
        compile_formula(f.arg, index, code)
        code.append(OP_NOT)
    elif isinstance(f, (And, Or)):
        for a in f.args:
            compile_formula(a, index, code)
        code += (OP_AND if isinstance(f, And) else OP_OR, len(f.args))
    elif isinstance(f, (Implies, Iff)):
        compile_formula(f.lhs, index, code)
        compile_formula(f.rhs, index, code)
        code.append(OP_IMP if isinstance(f, Implies) else OP_IFF)
    else:
        raise TypeError(f"not a formula: {f!r}")
    return code


def compile_theory(theory: Iterable[Formula], index: dict[Atom, int]) -> list[int]:
    code: list[int] = []
    k = 0
    for f in theory:
        compile_formula(f, index, code)
        k += 1
    if k == 0:
        code.append(OP_TRUE)
    elif k > 1:
        code += (OP_AND, k)
    return code


def sort_models(models: Iterable[Iterable[Atom]]) -> list[frozenset[Atom]]:
    return sorted((frozenset(m) for m in models), key=model_key)


def _vocab_index(vocab: Iterable[Atom], max_atoms: int) -> tuple[list[Atom], dict[Atom, int]]:
    ordered = sorted(set(vocab), key=str)
    if len(ordered) > max_atoms:
        raise CapExceededError("model enumeration vocabulary", len(ordered), max_atoms)
    return ordered, {a: i for i, a in enumerate(ordered)}


def enumerate_models(
    theory: Iterable[Formula],
    vocab: Iterable[Atom],
    max_atoms: int = DEFAULT_MAX_ATOMS,
) -> list[frozenset[Atom]]:
    """Every interpretation over ``vocab`` satisfying all of ``theory``.

    Models come back in lexicographic order of their sorted atom names.
    """
    ordered, index = _vocab_index(vocab, max_atoms)
    code = compile_theory(theory, index)
    masks = kernels.enumerate_models(code, len(ordered))
    return sort_models(
        frozenset(ordered[i] for i in range(len(ordered)) if m >> i & 1) for m in masks
    )


def entails(
    theory: Iterable[Formula],
    f: Formula,
    vocab: Iterable[Atom] | None = None,
    max_atoms: int = DEFAULT_MAX_ATOMS,
) -> bool:
    """True iff ``f`` holds in every model of ``theory`` (vacuously if none)."""
    theory = list(theory)
    if vocab is None:
        vocab = set(f.atoms()).union(*(g.atoms() for g in theory))
    ordered, index = _vocab_index(vocab, max_atoms)
    code = compile_theory([*theory, Not(f)], index)
    return not kernels.enumerate_models(code, len(ordered), 1)
