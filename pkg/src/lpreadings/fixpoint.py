"""Fixpoint semantics of ground normal programs.

Least model, Fitting (Kripke-Kleene) model, Gelfond-Lifschitz reduct and
stable models, partial stable models, the well-founded model via the
alternating fixpoint, predicate-level stratification and the perfect model.

Every fixpoint loop carries an explicit iteration bound derived from the
size of the Herbrand base and raises ``FixpointDivergence`` if it is
exceeded; hitting one means a bug here, not a property of the input.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import kernels
from .errors import CapExceededError, FixpointDivergence, NotDefiniteError, NotStratifiedError
from .logic import DEFAULT_MAX_ATOMS
from .syntax import Atom, GroundProgram, Literal, Rule, model_key, sort_atoms

DEFAULT_MAX_ATOMS_3V = 12


@dataclass(frozen=True)
class PartialInterpretation:
    true_atoms: frozenset[Atom]
    false_atoms: frozenset[Atom]

    def __post_init__(self):
        if self.true_atoms & self.false_atoms:
            raise ValueError("true and false atom sets overlap")

    def undefined(self, base: Iterable[Atom]) -> frozenset[Atom]:
        return frozenset(base) - self.true_atoms - self.false_atoms

    def is_total(self, base: Iterable[Atom]) -> bool:
        return not self.undefined(base)

    def value(self, atom: Atom) -> str:
        if atom in self.true_atoms:
            return "true"
        if atom in self.false_atoms:
            return "false"
        return "undefined"

    def k_leq(self, other: "PartialInterpretation") -> bool:
        """Knowledge order: every decided atom keeps its value in ``other``."""
        return self.true_atoms <= other.true_atoms and self.false_atoms <= other.false_atoms

    def sort_key(self):
        return (model_key(self.true_atoms), model_key(self.false_atoms))

    def format(self, base: Iterable[Atom]) -> str:
        return (
            f"true: {format_set(self.true_atoms)} false: {format_set(self.false_atoms)} "
            f"undefined: {format_set(self.undefined(base))}"
        )


def format_set(atoms: Iterable[Atom]) -> str:
    return "{" + ", ".join(str(a) for a in sort_atoms(atoms)) + "}"


@dataclass(frozen=True)
class Stratification:
    level: dict[str, int]

    def strata(self) -> list[list[str]]:
        top = max(self.level.values(), default=-1)
        return [sorted(p for p, l in self.level.items() if l == k) for k in range(top + 1)]


def _check_cap(p: GroundProgram, cap: int, what: str) -> None:
    if len(p.herbrand_base) > cap:
        raise CapExceededError(what, len(p.herbrand_base), cap)


def _masks(p: GroundProgram):
    heads, pos, neg = p.masks
    return heads, pos, neg, len(p.herbrand_base)


# --------------------------------------------------------------------------
# Two-valued operators


def tp_step(p: GroundProgram, i: Iterable[Atom]) -> frozenset[Atom]:
    """Immediate consequences of ``p`` under the two-valued interpretation ``i``."""
    heads, pos, neg, n = _masks(p)
    return p.from_mask(kernels.tp(heads, pos, neg, p.to_mask(i), n))


def _first_naf(p: GroundProgram) -> tuple[Literal, Rule] | None:
    for r in p.rules:
        for lit in r.body:
            if lit.naf:
                return lit, r
    return None


def least_model(p: GroundProgram) -> frozenset[Atom]:
    found = _first_naf(p)
    if found is not None:
        raise NotDefiniteError(str(found[0]), str(found[1]))
    heads, pos, neg, n = _masks(p)
    m = 0
    for _ in range(n + 1):
        nxt = kernels.tp(heads, pos, neg, m, n)
        if nxt == m:
            return p.from_mask(m)
        m = nxt
    raise FixpointDivergence(f"least model not reached within {n + 1} steps")


def gl_reduct(p: GroundProgram, m: Iterable[Atom]) -> GroundProgram:
    """Drop rules refuted by ``m`` through a naf literal, then erase all naf literals."""
    m = frozenset(m)
    rules = tuple(
        Rule(r.head, tuple(l for l in r.body if not l.naf))
        for r in p.rules
        if not any(l.naf and l.atom in m for l in r.body)
    )
    return GroundProgram(tuple(dict.fromkeys(rules)), p.herbrand_base, p.constants)


def _reduct_least(p: GroundProgram, mask: int) -> int:
    heads, pos, neg, n = _masks(p)
    return kernels.least_model(heads, pos, neg, mask, n)


def naf_atoms(p: GroundProgram) -> frozenset[Atom]:
    return frozenset(l.atom for r in p.rules for l in r.body if l.naf)


def stable_models(p: GroundProgram, max_atoms: int = DEFAULT_MAX_ATOMS) -> list[frozenset[Atom]]:
    """All ``m`` with ``m == least_model(gl_reduct(p, m))``, in lexicographic order."""
    _check_cap(p, max_atoms, "stable model search")
    heads, pos, neg, n = _masks(p)
    naf = p.to_mask(naf_atoms(p))
    found = kernels.stable_candidates(heads, pos, neg, naf, n)
    return sorted((p.from_mask(m) for m in found), key=model_key)


# --------------------------------------------------------------------------
# Three-valued semantics


def _body_value(rule: Rule, t: frozenset, f: frozenset) -> int:
    """Kleene value of a rule body: 1 true, 0 false, 2 undefined."""
    value = 1
    for lit in rule.body:
        a = lit.atom
        if a in t:
            v = 0 if lit.naf else 1
        elif a in f:
            v = 1 if lit.naf else 0
        else:
            v = 2
        if v == 0:
            return 0
        if v == 2:
            value = 2
    return value


def fitting_step(p: GroundProgram, i: PartialInterpretation) -> PartialInterpretation:
    t, f = i.true_atoms, i.false_atoms
    has_rule: set[Atom] = set()
    not_false: set[Atom] = set()
    new_true: set[Atom] = set()
    for r in p.rules:
        has_rule.add(r.head)
        v = _body_value(r, t, f)
        if v == 1:
            new_true.add(r.head)
        if v != 0:
            not_false.add(r.head)
    new_false = {a for a in p.herbrand_base if a not in not_false}
    return PartialInterpretation(frozenset(new_true), frozenset(new_false))


def fitting_model(p: GroundProgram) -> PartialInterpretation:
    """Knowledge-least fixpoint of the three-valued one-step operator."""
    i = PartialInterpretation(frozenset(), frozenset())
    for _ in range(len(p.herbrand_base) + 2):
        nxt = fitting_step(p, i)
        if nxt == i:
            return i
        i = nxt
    raise FixpointDivergence("Fitting iteration did not converge")


def well_founded_model(p: GroundProgram) -> PartialInterpretation:
    """Alternating fixpoint of ``S(X) = least_model(gl_reduct(p, X))``.

    ``S`` is antimonotone, so ``S∘S`` climbs from the empty set to the
    well-founded true atoms; the atoms outside ``S`` of that set are false.
    """
    n = len(p.herbrand_base)
    t = 0
    for _ in range(2 * n + 1):
        upper = _reduct_least(p, t)
        nxt = _reduct_least(p, upper)
        if nxt == t:
            return PartialInterpretation(p.from_mask(t), p.from_mask(p.full_mask & ~upper))
        t = nxt
    raise FixpointDivergence(f"alternating fixpoint not reached within {2 * n + 1} steps")


def partial_stable_models(
    p: GroundProgram, max_atoms: int = DEFAULT_MAX_ATOMS_3V
) -> list[PartialInterpretation]:
    """Exhaustive search over all 3^n partial interpretations."""
    _check_cap(p, max_atoms, "partial stable model search")
    heads, pos, neg, n = _masks(p)
    found = kernels.partial_stable(heads, pos, neg, n)
    models = [PartialInterpretation(p.from_mask(t), p.from_mask(f)) for t, f in found]
    return sorted(models, key=PartialInterpretation.sort_key)


# --------------------------------------------------------------------------
# Stratification


def dependency_graph(p: GroundProgram) -> dict[str, dict[str, bool]]:
    """Predicate edges head -> body predicate; the flag marks a negative edge."""
    graph: dict[str, dict[str, bool]] = {a.predicate: {} for a in p.herbrand_base}
    for r in p.rules:
        edges = graph.setdefault(r.head.predicate, {})
        for lit in r.body:
            q = lit.atom.predicate
            graph.setdefault(q, {})
            edges[q] = edges.get(q, False) or lit.naf
    return graph


def _sccs(graph: dict[str, dict[str, bool]]) -> list[list[str]]:
    """Tarjan's algorithm; components come out dependencies first."""
    index: dict[str, int] = {}
    low: dict[str, int] = {}
    on_stack: set[str] = set()
    stack: list[str] = []
    out: list[list[str]] = []
    counter = 0
    for root in sorted(graph):
        if root in index:
            continue
        work = [(root, iter(sorted(graph[root])))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(sorted(graph[w]))))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                low[work[-1][0]] = min(low[work[-1][0]], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                out.append(sorted(comp))
    return out


def _path(graph, start: str, goal: str, within: set[str]) -> list[str]:
    prev = {start: None}
    queue = [start]
    for v in queue:
        if v == goal:
            break
        for w in sorted(graph[v]):
            if w in within and w not in prev:
                prev[w] = v
                queue.append(w)
    path = [goal]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    return path[::-1]


def stratify(p: GroundProgram) -> Stratification:
    """Minimal predicate levels with negative edges strictly increasing the level."""
    graph = dependency_graph(p)
    level: dict[str, int] = {}
    for comp in _sccs(graph):
        members = set(comp)
        for u in comp:
            for w, negative in sorted(graph[u].items()):
                if negative and w in members:
                    raise NotStratifiedError([u, *_path(graph, w, u, members)])
        lvl = 0
        for u in comp:
            for w, negative in graph[u].items():
                if w not in members:
                    lvl = max(lvl, level[w] + negative)
        for u in comp:
            level[u] = lvl
    return Stratification(dict(sorted(level.items())))


def perfect_model(p: GroundProgram) -> frozenset[Atom]:
    """Least models stratum by stratum, lower strata fixing the naf literals."""
    strat = stratify(p)
    m: set[Atom] = set()
    for stratum in strat.strata():
        preds = set(stratum)
        rules = [
            r for r in p.rules
            if r.head.predicate in preds and not any(a in m for a in r.negative)
        ]
        for _ in range(len(p.herbrand_base) + 1):
            new = {r.head for r in rules if r.head not in m and all(a in m for a in r.positive)}
            if not new:
                break
            m |= new
        else:
            raise FixpointDivergence("stratum iteration did not converge")
    return frozenset(m)
