"""The bead-enhanced invariant: a polynomial in u whose terms collect
the bead-coloring count of every X-coloring of a diagram.

For each X-coloring f the diagram has some number k_f of bead
colorings; the invariant is sum_f u^(k_f), stored as a multiset of
exponents.  Evaluating at u = 1 recovers the X-coloring counting
invariant.  Rendering is canonical: terms in descending exponent,
multiplicity 1 left implicit, so for example ``u^16 + 4u^10``.
"""

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dataclass_field

from .coloring import ENGINES, BeadCounter, enumerate_xcolorings
from .errors import InputError


class InvariantPolynomial:
    """A multiset of exponents: {exponent: multiplicity}."""

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for exponent, multiplicity in dict(terms).items():
                self._add(exponent, multiplicity)

    def _add(self, exponent, multiplicity=1):
        if not isinstance(exponent, int) or exponent < 0:
            raise InputError(f"exponent must be a nonnegative int, got {exponent!r}")
        if not isinstance(multiplicity, int) or multiplicity < 0:
            raise InputError(f"multiplicity must be a nonnegative int, got {multiplicity!r}")
        if multiplicity:
            self.terms[exponent] = self.terms.get(exponent, 0) + multiplicity

    def add_exponent(self, exponent):
        self._add(exponent, 1)

    @classmethod
    def from_term_list(cls, pairs):
        """Build from [[exponent, multiplicity], ...]."""
        poly = cls()
        for exponent, multiplicity in pairs:
            poly._add(exponent, multiplicity)
        return poly

    def term_list(self):
        """[[exponent, multiplicity], ...] in descending exponent order."""
        return [[e, self.terms[e]] for e in sorted(self.terms, reverse=True)]

    def evaluate_at_one(self):
        return sum(self.terms.values())

    def render(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            mult = self.terms[e]
            coeff = "" if mult == 1 and e > 0 else str(mult)
            if e == 0:
                parts.append(str(mult))
            elif e == 1:
                parts.append(f"{coeff}u")
            else:
                parts.append(f"{coeff}u^{e}")
        return " + ".join(parts)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"InvariantPolynomial({self.render()!r})"

    def __eq__(self, other):
        if isinstance(other, InvariantPolynomial):
            return other.terms == self.terms
        return NotImplemented

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))


def compare(p1, p2):
    """Multiset comparison of two invariant values."""
    return "equal" if p1.terms == p2.terms else "distinguished"


@dataclass
class InvariantResult:
    link: str
    quandle: str
    form: str
    engine: str
    polynomial: InvariantPolynomial
    colorings: list = dataclass_field(repr=False, default_factory=list)
    counts: list = dataclass_field(repr=False, default_factory=list)
    elapsed: float = 0.0

    def record(self):
        """JSON-ready summary (per-coloring detail intentionally omitted)."""
        return {
            "link": self.link,
            "quandle": self.quandle,
            "form": self.form,
            "engine": self.engine,
            "terms": self.polynomial.term_list(),
            "counting": self.polynomial.evaluate_at_one(),
            "elapsed": self.elapsed,
        }


def _count_chunk(args):
    diagram, quandle, form, colorings, engine = args
    counter = BeadCounter(diagram, quandle, form)
    return [counter.count(c, engine=engine) for c in colorings]


def compute_invariant(diagram, quandle, form, engine="propagate", jobs=1):
    """Count bead colorings over every X-coloring of the diagram.

    jobs > 1 splits the X-colorings across processes; the result is
    identical for any jobs value because counts are merged by coloring
    index.
    """
    if engine not in ENGINES:
        raise InputError(f"unknown engine {engine!r}, expected one of {ENGINES}")
    if jobs < 1:
        raise InputError(f"jobs must be >= 1, got {jobs}")
    start = time.monotonic()
    colorings = enumerate_xcolorings(diagram, quandle)
    if jobs == 1 or len(colorings) < 2:
        counter = BeadCounter(diagram, quandle, form)
        counts = [counter.count(c, engine=engine) for c in colorings]
    else:
        jobs = min(jobs, len(colorings))
        chunks = [colorings[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(
                pool.map(
                    _count_chunk,
                    [(diagram, quandle, form, chunk, engine) for chunk in chunks],
                )
            )
        counts = [0] * len(colorings)
        for i, chunk_counts in enumerate(results):
            for j, value in enumerate(chunk_counts):
                counts[i + j * jobs] = value
    poly = InvariantPolynomial()
    for k in counts:
        poly.add_exponent(k)
    elapsed = time.monotonic() - start
    return InvariantResult(
        link=diagram.name,
        quandle=quandle.name,
        form=form.name,
        engine=engine,
        polynomial=poly,
        colorings=colorings,
        counts=counts,
        elapsed=elapsed,
    )
