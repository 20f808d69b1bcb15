"""Quandle counting invariants of links and their bead-coloring
enhancements by families of bilinear forms over prime fields."""

from .errors import AxiomError, InputError, QBeadsError
from .field import PrimeField
from .quandle import (
    Quandle,
    alexander_quandle,
    conjugation_quandle,
    core_quandle,
    parse_quandle,
    quandle_violations,
    symplectic_quandle,
    trivial_quandle,
)
from .diagram import Crossing, LinkDiagram, import_pd, parse_diagram, validate_diagram
from .forms import BilinearForm, constant_form, form_violations, parse_form, validate_form, zero_form
from .coloring import bead_solutions, count_beads, counting_invariant, enumerate_xcolorings
from .invariant import InvariantPolynomial, compare, compute_invariant
from .search import run_search, search_forms

__version__ = "0.1.0"

__all__ = [
    "AxiomError",
    "BilinearForm",
    "Crossing",
    "InputError",
    "InvariantPolynomial",
    "LinkDiagram",
    "PrimeField",
    "QBeadsError",
    "Quandle",
    "alexander_quandle",
    "bead_solutions",
    "compare",
    "compute_invariant",
    "conjugation_quandle",
    "constant_form",
    "core_quandle",
    "count_beads",
    "counting_invariant",
    "enumerate_xcolorings",
    "form_violations",
    "import_pd",
    "parse_diagram",
    "parse_form",
    "parse_quandle",
    "quandle_violations",
    "run_search",
    "search_forms",
    "symplectic_quandle",
    "trivial_quandle",
    "validate_diagram",
    "validate_form",
    "zero_form",
]
