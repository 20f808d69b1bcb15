"""Finite quandles: validation, standard constructions, and file I/O.

A quandle is a finite set X with a binary operation x ▷ y such that
every x is idempotent (x ▷ x = x), every right translation x -> x ▷ y
is a bijection, and the operation is right self-distributive:
(x ▷ y) ▷ z = (x ▷ z) ▷ (y ▷ z).

Elements are 0-based ints everywhere in the API.  The text file format
is 1-based (see parse_quandle / format_quandle).
"""

import itertools

from .errors import AxiomError, InputError
from .field import PrimeField


def check_table_shape(table):
    """Raise InputError unless table is a square array of in-range ints."""
    m = len(table)
    if m == 0:
        raise InputError("quandle table is empty")
    for i, row in enumerate(table):
        if len(row) != m:
            raise InputError(f"row {i} has {len(row)} entries, expected {m}")
        for j, v in enumerate(row):
            if not isinstance(v, int) or not 0 <= v < m:
                raise InputError(f"entry at ({i},{j}) is {v!r}, expected 0..{m - 1}")
    return m


def quandle_violations(table):
    """Exhaustively check the three quandle axioms on an operation table.

    Returns a list of human-readable violation strings (0-based element
    ids), empty when the table is a quandle.  Shape problems raise
    InputError instead, since a non-square table is malformed input
    rather than a failed axiom.
    """
    m = check_table_shape(table)
    violations = []
    for x in range(m):
        if table[x][x] != x:
            violations.append(f"idempotence fails: {x}>{x} = {table[x][x]}, expected {x}")
    for y in range(m):
        column = [table[x][y] for x in range(m)]
        if len(set(column)) != m:
            seen = {}
            for x, v in enumerate(column):
                if v in seen:
                    violations.append(
                        f"right translation by {y} is not injective: "
                        f"{seen[v]}>{y} = {x}>{y} = {v}"
                    )
                    break
                seen[v] = x
    for x in range(m):
        for y in range(m):
            for z in range(m):
                left = table[table[x][y]][z]
                right = table[table[x][z]][table[y][z]]
                if left != right:
                    violations.append(
                        f"self-distributivity fails at ({x},{y},{z}): "
                        f"({x}>{y})>{z} = {left} but ({x}>{z})>({y}>{z}) = {right}"
                    )
    return violations


class Quandle:
    """A finite quandle given by its operation table.

    Construct through from_table (validating) or the named constructors
    below.  op(x, y) is x ▷ y; inv_op(x, y) is the unique w with
    w ▷ y = x.
    """

    def __init__(self, table, name=""):
        m = check_table_shape(table)
        self.table = tuple(tuple(row) for row in table)
        self.order = m
        self.name = name
        # inverse translation table: inv_table[x][y] = x ◁ y
        inv = [[None] * m for _ in range(m)]
        for w in range(m):
            for y in range(m):
                inv[self.table[w][y]][y] = w
        if any(v is None for row in inv for v in row):
            raise InputError("operation table has non-bijective translations; validate first")
        self.inv_table = tuple(tuple(row) for row in inv)

    @classmethod
    def from_table(cls, table, name=""):
        violations = quandle_violations(table)
        if violations:
            raise AxiomError(f"not a quandle ({len(violations)} violations)", violations)
        return cls(table, name=name)

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<Quandle{label} of order {self.order}>"

    def __eq__(self, other):
        return isinstance(other, Quandle) and other.table == self.table

    def __hash__(self):
        return hash(self.table)

    @property
    def elements(self):
        return range(self.order)

    def op(self, x, y):
        return self.table[x][y]

    def inv_op(self, x, y):
        return self.inv_table[x][y]

    def op_signed(self, x, y, sign):
        """x ▷ y for sign +1, x ◁ y (the inverse translation) for sign -1."""
        if sign == 1:
            return self.table[x][y]
        if sign == -1:
            return self.inv_table[x][y]
        raise InputError(f"crossing sign must be +1 or -1, got {sign!r}")

    def is_involutory(self):
        """True when every right translation is its own inverse (a kei)."""
        return self.table == self.inv_table


# -- standard constructions -------------------------------------------


def trivial_quandle(m, name=None):
    """x ▷ y = x on m elements."""
    if m < 1:
        raise InputError(f"order must be positive, got {m}")
    table = [[x] * m for x in range(m)]
    return Quandle.from_table(table, name=name or f"trivial{m}")


def group_table_violations(table):
    """Check associativity, identity, and inverses of a 0-based Cayley table."""
    m = check_table_shape(table)
    problems = []
    identity = None
    for e in range(m):
        if all(table[e][x] == x and table[x][e] == x for x in range(m)):
            identity = e
            break
    if identity is None:
        problems.append("no two-sided identity element")
    for x in range(m):
        for y in range(m):
            for z in range(m):
                if table[table[x][y]][z] != table[x][table[y][z]]:
                    problems.append(f"associativity fails at ({x},{y},{z})")
                    return problems
    if identity is not None:
        for x in range(m):
            if not any(
                table[x][y] == identity and table[y][x] == identity for y in range(m)
            ):
                problems.append(f"element {x} has no inverse")
    return problems


def _group_inverses(table):
    m = len(table)
    identity = next(
        e for e in range(m) if all(table[e][x] == x and table[x][e] == x for x in range(m))
    )
    inv = [None] * m
    for x in range(m):
        inv[x] = next(y for y in range(m) if table[x][y] == identity)
    return inv


def conjugation_quandle(group_table, name=None):
    """x ▷ y = y^-1 x y on the elements of a finite group."""
    problems = group_table_violations(group_table)
    if problems:
        raise InputError("not a group table: " + "; ".join(problems))
    m = len(group_table)
    inv = _group_inverses(group_table)
    table = [
        [group_table[group_table[inv[y]][x]][y] for y in range(m)] for x in range(m)
    ]
    return Quandle.from_table(table, name=name or f"conj{m}")


def core_quandle(group_table, name=None):
    """x ▷ y = y x^-1 y on the elements of a finite group."""
    problems = group_table_violations(group_table)
    if problems:
        raise InputError("not a group table: " + "; ".join(problems))
    m = len(group_table)
    inv = _group_inverses(group_table)
    table = [
        [group_table[group_table[y][inv[x]]][y] for y in range(m)] for x in range(m)
    ]
    return Quandle.from_table(table, name=name or f"core{m}")


def alexander_quandle(n, t, name=None):
    """x ▷ y = t*x + (1-t)*y on Z_n, for t a unit mod n.

    alexander_quandle(n, n-1) is the dihedral quandle on n elements.
    """
    if n < 1:
        raise InputError(f"modulus must be positive, got {n}")
    t = t % n
    import math

    if math.gcd(t, n) != 1:
        raise InputError(f"t = {t} is not a unit mod {n}")
    table = [[(t * x + (1 - t) * y) % n for y in range(n)] for x in range(n)]
    return Quandle.from_table(table, name=name or f"alexander({n},{t})")


def symplectic_quandle(p, n, S, name=None):
    """x ▷ y = x + (x^T S y) y on the vectors of F_p^n.

    S must be alternating (zero diagonal, S^T = -S) and nondegenerate.
    Elements are indexed by position in PrimeField(p).all_vectors(n).
    """
    field = PrimeField(p)
    if n < 2 or n % 2 != 0:
        raise InputError(f"symplectic dimension must be even and >= 2, got {n}")
    S = field.check_matrix(S, n)
    if not field.is_alternating(S):
        raise InputError("S is not alternating (need zero diagonal and S^T = -S)")
    if not field.is_nondegenerate(S):
        raise InputError("S is degenerate")
    vectors = field.all_vectors(n)
    index = {v: i for i, v in enumerate(vectors)}
    table = []
    for x in vectors:
        row = []
        for y in vectors:
            s = field.bilinear_eval(S, x, y)
            row.append(index[field.vec_add(x, field.scalar_mul(s, y))])
        table.append(row)
    return Quandle.from_table(table, name=name or f"symplectic({p},{n})")


# -- file format ------------------------------------------------------


def parse_quandle(text, name=""):
    """Parse the quandle file format.

    Line 1: ``quandle m``.  Then m lines of m whitespace-separated
    1-based entries.  Blank lines and lines starting with ``#`` are
    ignored.  Raises InputError (with line numbers) on malformed input
    and AxiomError if the table is not a quandle.
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        lines.append((lineno, stripped))
    if not lines:
        raise InputError("empty quandle file")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "quandle":
        raise InputError(f"line {lineno}: expected header 'quandle m', got {header!r}")
    try:
        m = int(parts[1])
    except ValueError:
        raise InputError(f"line {lineno}: order {parts[1]!r} is not an integer")
    if m < 1:
        raise InputError(f"line {lineno}: order must be positive, got {m}")
    body = lines[1:]
    if len(body) != m:
        raise InputError(f"expected {m} table rows, found {len(body)}")
    table = []
    for lineno, row_text in body:
        entries = row_text.split()
        if len(entries) != m:
            raise InputError(
                f"line {lineno}: expected {m} entries, found {len(entries)}"
            )
        row = []
        for e in entries:
            try:
                v = int(e)
            except ValueError:
                raise InputError(f"line {lineno}: entry {e!r} is not an integer")
            if not 1 <= v <= m:
                raise InputError(f"line {lineno}: entry {v} out of range 1..{m}")
            row.append(v - 1)
        table.append(row)
    return Quandle.from_table(table, name=name)


def format_quandle(quandle):
    """Render a Quandle in the 1-based text file format."""
    lines = [f"quandle {quandle.order}"]
    for row in quandle.table:
        lines.append(" ".join(str(v + 1) for v in row))
    return "\n".join(lines) + "\n"


def load_quandle(path, name=None):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    import os

    inferred = name if name is not None else os.path.splitext(os.path.basename(path))[0]
    return parse_quandle(text, name=inferred)


def save_quandle(quandle, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_quandle(quandle))
