"""Families of bilinear forms indexed by pairs of quandle elements.

A form assigns to every pair (x, y) of quandle elements an n-by-n
matrix B[x][y] over F_p, evaluated as [u, v]_{x,y} = u^T B[x][y] v.
The family is compatible with the quandle when three axioms hold:

  (i)   [a, a]_{x,x} = 0
  (ii)  [a, b]_{x,y} = [a + [a,c]_{x,z} c,  b + [b,c]_{y,z} c]_{x>z, y>z}
  (iii) [a, c]_{x>y,z} + [a,b]_{x,y} [b,c]_{x>y,z}
            = [a, c]_{x,z} + [a,b]_{x,y} [b,c]_{y,z}

for all x, y, z in X and a, b, c in F_p^n.  Axiom (i) is equivalent to
every diagonal block being alternating (zero diagonal, B^T = -B); the
validator checks that first and then brute-forces (ii) and (iii) over
every element and vector triple.
"""

from .errors import AxiomError, InputError
from .field import PrimeField


class BilinearForm:
    """A validated family of n-by-n matrices over F_p indexed by X x X.

    Instances should be produced by validate_form, the named helpers
    (zero_form, constant_form), or parse_form, all of which run the
    axiom checks.
    """

    def __init__(self, quandle, field, n, blocks, name=""):
        self.quandle = quandle
        self.field = field
        self.n = n
        m = quandle.order
        if len(blocks) != m or any(len(row) != m for row in blocks):
            raise InputError(f"expected {m}x{m} blocks, one per pair of quandle elements")
        self.blocks = tuple(
            tuple(field.check_matrix(B, n) for B in row) for row in blocks
        )
        self.name = name

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return (
            f"<BilinearForm{label}: |X|={self.quandle.order}, "
            f"n={self.n}, p={self.field.p}>"
        )

    def __eq__(self, other):
        return (
            isinstance(other, BilinearForm)
            and other.blocks == self.blocks
            and other.field == self.field
            and other.quandle == self.quandle
        )

    def eval(self, x, y, u, v):
        """[u, v]_{x,y} in F_p."""
        return self.field.bilinear_eval(self.blocks[x][y], u, v)

    def eval_table(self):
        """Nested lookup table t[x][y][i][j] over vector indices.

        Vector indices follow field.all_vectors(n) order; the table
        turns every later bilinear evaluation into one list lookup.
        """
        vectors = self.field.all_vectors(self.n)
        table = []
        for x in range(self.quandle.order):
            row = []
            for y in range(self.quandle.order):
                B = self.blocks[x][y]
                row.append(
                    [
                        [self.field.bilinear_eval(B, u, v) for v in vectors]
                        for u in vectors
                    ]
                )
            table.append(row)
        return table


def form_violations(quandle, blocks, field, n, cap=20):
    """Exhaustively check axioms (i) to (iii); return violation strings.

    Stops collecting detail after cap entries (default 20) and appends a
    single summary line with the total count instead.  Element ids are
    0-based, vectors are written out explicitly.
    """
    m = quandle.order
    if len(blocks) != m or any(len(row) != m for row in blocks):
        raise InputError(f"expected {m}x{m} blocks, one per pair of quandle elements")
    blocks = tuple(tuple(field.check_matrix(B, n) for B in row) for row in blocks)
    vectors = field.all_vectors(n)
    ev = field.bilinear_eval

    violations = []
    total = 0

    def record(msg):
        nonlocal total
        total += 1
        if len(violations) < cap:
            violations.append(msg)

    for x in range(m):
        B = blocks[x][x]
        if not field.is_alternating(B):
            for a in vectors:
                if ev(B, a, a) != 0:
                    record(
                        f"axiom (i) fails at x={x}, a={a}: [a,a] = {ev(B, a, a)}"
                    )

    op = quandle.op
    for x in range(m):
        for y in range(m):
            for z in range(m):
                Bxy = blocks[x][y]
                Bxz = blocks[x][z]
                Byz = blocks[y][z]
                Bxz_yz = blocks[op(x, z)][op(y, z)]
                for a in vectors:
                    for b in vectors:
                        for c in vectors:
                            left = ev(Bxy, a, b)
                            a2 = field.vec_add(a, field.scalar_mul(ev(Bxz, a, c), c))
                            b2 = field.vec_add(b, field.scalar_mul(ev(Byz, b, c), c))
                            right = ev(Bxz_yz, a2, b2)
                            if left != right:
                                record(
                                    f"axiom (ii) fails at (x,y,z)=({x},{y},{z}), "
                                    f"a={a}, b={b}, c={c}: {left} != {right}"
                                )

    for x in range(m):
        for y in range(m):
            xy = op(x, y)
            for z in range(m):
                Bxy = blocks[x][y]
                Bxyz = blocks[xy][z]
                Bxz = blocks[x][z]
                Byz = blocks[y][z]
                for a in vectors:
                    for b in vectors:
                        ab = ev(Bxy, a, b)
                        for c in vectors:
                            left = (ev(Bxyz, a, c) + ab * ev(Bxyz, b, c)) % field.p
                            right = (ev(Bxz, a, c) + ab * ev(Byz, b, c)) % field.p
                            if left != right:
                                record(
                                    f"axiom (iii) fails at (x,y,z)=({x},{y},{z}), "
                                    f"a={a}, b={b}, c={c}: {left} != {right}"
                                )

    if total > len(violations):
        violations.append(f"... and {total - len(violations)} more violations")
    return violations


def validate_form(quandle, blocks, p, n, name="", cap=20):
    """Validate blocks against the quandle; return a BilinearForm.

    Raises AxiomError carrying the violation report when any axiom
    instance fails, InputError on shape or range problems.
    """
    field = PrimeField(p)
    violations = form_violations(quandle, blocks, field, n, cap=cap)
    if violations:
        raise AxiomError(f"form axioms fail ({len(violations)} reported)", violations)
    return BilinearForm(quandle, field, n, blocks, name=name)


def zero_form(quandle, p, n, name="zero"):
    """The everywhere-zero family, compatible with any quandle."""
    field = PrimeField(p)
    Z = field.zero_matrix(n)
    blocks = [[Z] * quandle.order for _ in range(quandle.order)]
    return validate_form(quandle, blocks, p, n, name=name)


def constant_form(quandle, p, n, B, name="constant"):
    """The family with the same matrix B at every pair (x, y)."""
    blocks = [[B] * quandle.order for _ in range(quandle.order)]
    return validate_form(quandle, blocks, p, n, name=name)


# -- file format ------------------------------------------------------


def parse_form(text, quandle, name=""):
    """Parse the form file format against a given quandle.

    Line 1: ``form m n p``.  Then one block per pair: a ``B x y`` line
    (1-based labels) followed by n rows of n entries in 0..p-1.  Every
    pair must appear exactly once.  Validates the axioms before
    returning.
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        lines.append((lineno, stripped))
    if not lines:
        raise InputError("empty form file")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 4 or parts[0] != "form":
        raise InputError(f"line {lineno}: expected header 'form m n p', got {header!r}")
    try:
        m, n, p = (int(t) for t in parts[1:])
    except ValueError:
        raise InputError(f"line {lineno}: m, n, p must be integers")
    if m != quandle.order:
        raise InputError(
            f"form is indexed by {m} elements but the quandle has {quandle.order}"
        )
    field = PrimeField(p)

    blocks = {}
    i = 1
    while i < len(lines):
        lineno, line = lines[i]
        parts = line.split()
        if parts[0] != "B" or len(parts) != 3:
            raise InputError(f"line {lineno}: expected a 'B x y' block header")
        try:
            x, y = int(parts[1]), int(parts[2])
        except ValueError:
            raise InputError(f"line {lineno}: block labels must be integers")
        if not (1 <= x <= m and 1 <= y <= m):
            raise InputError(f"line {lineno}: block label ({x},{y}) out of range 1..{m}")
        if (x - 1, y - 1) in blocks:
            raise InputError(f"line {lineno}: duplicate block ({x},{y})")
        rows = []
        for r in range(n):
            if i + 1 + r >= len(lines):
                raise InputError(f"line {lineno}: block ({x},{y}) is missing matrix rows")
            rlineno, rline = lines[i + 1 + r]
            entries = rline.split()
            if len(entries) != n:
                raise InputError(
                    f"line {rlineno}: expected {n} entries, found {len(entries)}"
                )
            try:
                row = tuple(int(e) for e in entries)
            except ValueError:
                raise InputError(f"line {rlineno}: matrix entries must be integers")
            if any(not 0 <= e < p for e in row):
                raise InputError(f"line {rlineno}: entries must lie in 0..{p - 1}")
            rows.append(row)
        blocks[(x - 1, y - 1)] = tuple(rows)
        i += 1 + n
    missing = [(x + 1, y + 1) for x in range(m) for y in range(m) if (x, y) not in blocks]
    if missing:
        raise InputError(f"missing blocks for pairs: {missing}")
    grid = [[blocks[(x, y)] for y in range(m)] for x in range(m)]
    return validate_form(quandle, grid, p, n, name=name)


def format_form(form):
    """Render a BilinearForm in the 1-based text file format."""
    m = form.quandle.order
    out = [f"form {m} {form.n} {form.field.p}"]
    for x in range(m):
        for y in range(m):
            out.append(f"B {x + 1} {y + 1}")
            for row in form.blocks[x][y]:
                out.append(" ".join(str(e) for e in row))
    return "\n".join(out) + "\n"


def load_form(path, quandle, name=None):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    import os

    inferred = name if name is not None else os.path.splitext(os.path.basename(path))[0]
    return parse_form(text, quandle, name=inferred)


def save_form(form, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_form(form))
