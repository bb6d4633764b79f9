"""Semantics workbench for normal logic programs.

Computes the completion, least, Fitting, perfect, stable, partial stable
and well-founded semantics of a program together with its autoepistemic
expansions and default-logic extensions, and compares the possible-state
reading of its models with the belief-set reading.
"""

from .completion import CompletionTheory, clark_completion, supported_models
from .errors import (
    CapExceededError,
    GroundingBudgetError,
    LPError,
    NotDefiniteError,
    NotStratifiedError,
    ParseError,
    PreconditionError,
    SafetyError,
)
from .fixpoint import (
    PartialInterpretation,
    Stratification,
    fitting_model,
    gl_reduct,
    least_model,
    partial_stable_models,
    perfect_model,
    stable_models,
    stratify,
    tp_step,
    well_founded_model,
)
from .kernels import BACKEND
from .logic import entails, enumerate_models, eval_formula
from .modal import (
    AELFormula,
    AELTheory,
    DefaultRule,
    DefaultTheory,
    Expansion,
    Extension,
    ael_expansions,
    dl_extensions,
    gelfond_embedding,
    mt_embedding,
)
from .readings import AtomStatus, Belief, PossibleState, ReadingsReport, atom_statuses, diagnose
from .syntax import Atom, GroundProgram, Literal, Program, Rule, ground, ground_text, parse_program

__version__ = "0.1.0"
