"""Command-line front end.

Exit status: 0 success (an empty model list included), 1 parse or safety
error, 2 size cap exceeded, 3 semantics precondition violated.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable

from .completion import supported_models
from .errors import CapExceededError, LPError, PreconditionError
from .fixpoint import (
    DEFAULT_MAX_ATOMS_3V,
    PartialInterpretation,
    fitting_model,
    format_set,
    least_model,
    partial_stable_models,
    perfect_model,
    stable_models,
    well_founded_model,
)
from .logic import DEFAULT_MAX_ATOMS
from .modal import ael_expansions, dl_extensions, gelfond_embedding, mt_embedding
from .readings import ReadingsReport, diagnose
from .syntax import Atom, GroundProgram, ground, parse_atom, parse_program, sort_atoms, split_atom_list

SEMANTICS = ("least", "supported", "fitting", "perfect", "stable", "pstable", "wf")
PARTIAL = {"fitting", "wf"}

EXIT_OK, EXIT_PARSE, EXIT_CAP, EXIT_PRECONDITION = 0, 1, 2, 3


def _names(atoms: Iterable[Atom]) -> list[str]:
    return [str(a) for a in sort_atoms(atoms)]


class Renderer:
    def __init__(self, fmt: str, base: tuple[Atom, ...], projection: list[Atom] | None):
        self.fmt = fmt
        self.base = base if projection is None else tuple(sort_atoms(projection))
        self.keep = None if projection is None else frozenset(projection)

    def proj(self, atoms: Iterable[Atom]) -> frozenset[Atom]:
        atoms = frozenset(atoms)
        return atoms if self.keep is None else atoms & self.keep

    def models(self, models: Iterable[Iterable[Atom]]) -> list[frozenset[Atom]]:
        # Projection can merge models; keep first occurrences in order.
        return list(dict.fromkeys(self.proj(m) for m in models))

    def partial(self, m: PartialInterpretation) -> PartialInterpretation:
        return PartialInterpretation(self.proj(m.true_atoms), self.proj(m.false_atoms))

    def partial_json(self, m: PartialInterpretation) -> dict:
        return {
            "true": _names(m.true_atoms),
            "false": _names(m.false_atoms),
            "undefined": _names(m.undefined(self.base)),
        }

    def dump(self, obj) -> str:
        return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _solve(gp: GroundProgram, args, r: Renderer) -> str:
    sem = args.semantics
    if sem in PARTIAL:
        m = r.partial(fitting_model(gp) if sem == "fitting" else well_founded_model(gp))
        if r.fmt == "json":
            return r.dump({"semantics": sem, **r.partial_json(m)})
        return m.format(r.base) + "\n"
    if sem == "pstable":
        ms = list(dict.fromkeys(r.partial(m) for m in partial_stable_models(gp, args.max_atoms_3v)))
        if r.fmt == "json":
            return r.dump({"semantics": sem, "models": [r.partial_json(m) for m in ms]})
        return "".join(m.format(r.base) + "\n" for m in ms)
    if sem == "least":
        models = [least_model(gp)]
    elif sem == "perfect":
        models = [perfect_model(gp)]
    elif sem == "supported":
        models = supported_models(gp, args.max_atoms)
    else:
        models = stable_models(gp, args.max_atoms)
    models = r.models(models)
    if r.fmt == "json":
        return r.dump({"semantics": sem, "models": [_names(m) for m in models]})
    return "".join(format_set(m) + "\n" for m in models)


def _embed(gp: GroundProgram, args, r: Renderer) -> str:
    if args.target == "ael":
        theory = gelfond_embedding(gp)
        items = [
            {"positive": _names(f.positive), "not_known": _names(f.not_known),
             "head": str(f.head), "text": str(f)}
            for f in theory.formulas
        ]
    else:
        theory = mt_embedding(gp)
        items = [
            {"prerequisite": _names(d.prerequisite), "justifications": _names(d.justifications),
             "consequent": str(d.consequent), "text": str(d)}
            for d in theory.defaults
        ]
    if r.fmt == "json":
        return r.dump({"target": args.target, "formulas": items})
    return str(theory)


def _expansions_json(exps, r: Renderer) -> list[dict]:
    return [
        {
            "believed": _names(r.proj(e.believed_atoms)),
            "worlds": [_names(w) for w in r.models(e.worlds)],
            "kernel": [str(f) for f in e.objective_kernel],
        }
        for e in exps
    ]


def _expansions_text(exps, r: Renderer) -> str:
    lines = []
    for k, e in enumerate(exps, 1):
        lines.append(f"expansion {k}")
        lines.append(f"  believed: {format_set(r.proj(e.believed_atoms))}")
        worlds = r.models(e.worlds)
        lines.append(f"  worlds ({len(worlds)}):")
        lines.extend(f"    {format_set(w)}" for w in worlds)
    return "".join(l + "\n" for l in lines)


def _expansions(gp: GroundProgram, args, r: Renderer) -> str:
    exps = ael_expansions(gelfond_embedding(gp), max_guess=args.max_guess, max_atoms=args.max_atoms)
    if r.fmt == "json":
        return r.dump({"expansions": _expansions_json(exps, r)})
    return _expansions_text(exps, r)


def _extensions(gp: GroundProgram, args, r: Renderer) -> str:
    exts = r.models(x.atoms for x in dl_extensions(mt_embedding(gp), max_guess=args.max_guess))
    if r.fmt == "json":
        return r.dump({"extensions": [_names(x) for x in exts]})
    return "".join(format_set(x) + "\n" for x in exts)


def _relations_json(report: ReadingsReport) -> list[dict]:
    return [{"name": x.name, "holds": x.holds, "detail": x.detail} for x in report.relations]


def _relations_text(report: ReadingsReport) -> list[str]:
    tag = {True: "PASS", False: "FAIL", None: "N/A "}
    return [f"{tag[x.holds]} {x.name}: {x.detail}" for x in report.relations]


def _report(gp: GroundProgram, args) -> ReadingsReport:
    return diagnose(
        gp,
        max_atoms=args.max_atoms,
        max_atoms_3v=args.max_atoms_3v,
        max_guess=args.max_guess,
    )


def _compare(gp: GroundProgram, args, r: Renderer) -> str:
    report = _report(gp, args)
    if r.fmt == "json":
        return r.dump({"relations": _relations_json(report)})
    return "".join(l + "\n" for l in _relations_text(report))


def _diagnose(gp: GroundProgram, args, r: Renderer) -> str:
    rep = _report(gp, args)
    atoms = [a for a in rep.herbrand_base if r.keep is None or a in r.keep]
    flags = [(a, s) for a, s in rep.flags if r.keep is None or a in r.keep]
    if r.fmt == "json":
        return r.dump({
            "possible_state_basis": rep.possible_state_basis,
            "completion_models": [_names(m) for m in r.models(rep.completion_models)],
            "stable_models": [_names(m) for m in r.models(rep.stable_models)],
            "wf_model": r.partial_json(r.partial(rep.wf_model)),
            "partial_stable": None if rep.partial_stable is None else [
                r.partial_json(m) for m in dict.fromkeys(r.partial(m) for m in rep.partial_stable)
            ],
            "expansions": _expansions_json(rep.expansions, r),
            "extensions": [_names(m) for m in r.models(x.atoms for x in rep.extensions)],
            "statuses": [
                {str(a): {"possible_state": st[a].possible_state.value, "belief": st[a].belief.value}
                 for a in atoms}
                for st in rep.statuses
            ],
            "relations": _relations_json(rep),
            "flags": [
                {"atom": str(a), "possible_state": s.possible_state.value, "belief": s.belief.value}
                for a, s in flags
            ],
            "notes": rep.notes,
        })
    out = [
        "completion models:",
        *(f"  {format_set(m)}" for m in r.models(rep.completion_models)),
        "stable models:",
        *(f"  {format_set(m)}" for m in r.models(rep.stable_models)),
        f"well-founded model: {r.partial(rep.wf_model).format(r.base)}",
    ]
    if rep.partial_stable is not None:
        out.append("partial stable models:")
        out.extend(f"  {m.format(r.base)}" for m in dict.fromkeys(r.partial(m) for m in rep.partial_stable))
    out.append("expansions:")
    for e in rep.expansions:
        out.append(f"  believed {format_set(r.proj(e.believed_atoms))}, {len(r.models(e.worlds))} world(s)")
    out.append("extensions:")
    out.extend(f"  {format_set(m)}" for m in r.models(x.atoms for x in rep.extensions))
    out.append(f"statuses (possible state from {rep.possible_state_basis}, belief per expansion):")
    width = max((len(str(a)) for a in atoms), default=0)
    for a in atoms:
        cells = "  ".join(str(st[a]) for st in rep.statuses)
        out.append(f"  {str(a):<{width}}  {cells}")
    out.append("relations:")
    out.extend(f"  {l}" for l in _relations_text(rep))
    out.append("flags:")
    out.extend(f"  {a} {s}" for a, s in flags)
    if rep.notes:
        out.append("notes:")
        out.extend(f"  {n}" for n in rep.notes)
    return "".join(l + "\n" for l in out)


def _ground(gp: GroundProgram, args, r: Renderer) -> str:
    if r.fmt == "json":
        return r.dump({"herbrand_base": _names(gp.herbrand_base), "rules": [str(x) for x in gp.rules]})
    return str(gp)


COMMANDS = {
    "ground": _ground,
    "solve": _solve,
    "embed": _embed,
    "expansions": _expansions,
    "extensions": _extensions,
    "compare": _compare,
    "diagnose": _diagnose,
}


def _positive(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", nargs="?", default="-", help="program file ('-' or omitted: stdin)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--project", help="comma-separated atoms to project models onto")
    common.add_argument("--max-atoms", type=_positive, default=DEFAULT_MAX_ATOMS,
                        help="cap for two-valued enumeration (default %(default)s)")
    common.add_argument("--max-atoms-3v", type=_positive, default=DEFAULT_MAX_ATOMS_3V,
                        help="cap for three-valued enumeration (default %(default)s)")
    common.add_argument("--max-guess", type=_positive, default=20,
                        help="cap on guessed modal/justification atoms (default %(default)s)")

    parser = argparse.ArgumentParser(prog="lpreadings", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("ground", parents=[common], help="print the ground program")
    solve = sub.add_parser("solve", parents=[common], help="models under one semantics")
    solve.add_argument("--semantics", choices=SEMANTICS, default="stable")
    embed = sub.add_parser("embed", parents=[common], help="print an embedded theory")
    embed.add_argument("--target", choices=("ael", "dl"), default="ael")
    sub.add_parser("expansions", parents=[common], help="autoepistemic stable expansions")
    sub.add_parser("extensions", parents=[common], help="default-logic extensions")
    sub.add_parser("compare", parents=[common], help="check relations between semantics")
    sub.add_parser("diagnose", parents=[common], help="full readings report")
    return parser


def run(argv: list[str], stdin=None) -> tuple[int, str, str]:
    """Run one command; returns (exit status, stdout text, stderr text)."""
    args = build_parser().parse_args(argv)
    try:
        if args.input == "-":
            text = (stdin or sys.stdin).read()
        else:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        gp = ground(parse_program(text))
        projection = None
        if args.project:
            projection = [parse_atom(s) for s in split_atom_list(args.project)]
            unknown = [str(a) for a in projection if a not in gp.index]
            if unknown:
                raise LPError(f"projection atoms not in the Herbrand base: {', '.join(unknown)}")
        out = COMMANDS[args.command](gp, args, Renderer(args.format, gp.herbrand_base, projection))
    except CapExceededError as e:
        return EXIT_CAP, "", f"error: {e}\n"
    except PreconditionError as e:
        return EXIT_PRECONDITION, "", f"error: {e}\n"
    except (LPError, OSError) as e:
        return EXIT_PARSE, "", f"error: {e}\n"
    return EXIT_OK, out, ""


def main(argv: list[str] | None = None) -> int:
    code, out, err = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
