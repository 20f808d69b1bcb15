"""Arithmetic over the prime field F_p: scalars, vectors, and matrices.

Vectors are tuples of ints already reduced mod p, matrices are tuples of
row tuples.  Everything here is plain integer arithmetic; the sizes in
play (p and n both small) never justify anything heavier.
"""

import itertools

from .errors import InputError


def is_prime(p):
    if not isinstance(p, int) or p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    """The field F_p together with vector/matrix helpers of any dimension."""

    def __init__(self, p):
        if not is_prime(p):
            raise InputError(f"field order must be prime, got {p!r}")
        self.p = p

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def reduce(self, a):
        return a % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    # -- vectors ------------------------------------------------------

    def zero_vector(self, n):
        return (0,) * n

    def vec_add(self, u, v):
        if len(u) != len(v):
            raise InputError(f"vector length mismatch: {len(u)} vs {len(v)}")
        return tuple((a + b) % self.p for a, b in zip(u, v))

    def vec_sub(self, u, v):
        if len(u) != len(v):
            raise InputError(f"vector length mismatch: {len(u)} vs {len(v)}")
        return tuple((a - b) % self.p for a, b in zip(u, v))

    def scalar_mul(self, s, v):
        return tuple((s * a) % self.p for a in v)

    def all_vectors(self, n):
        """All p^n vectors in lexicographic order, (0,...,0) first.

        This order is a contract: anything that indexes vectors (the
        symplectic quandle construction, the bead-count engines) uses
        positions in this list as element ids.
        """
        return [tuple(v) for v in itertools.product(range(self.p), repeat=n)]

    # -- matrices -----------------------------------------------------

    def zero_matrix(self, n):
        return tuple((0,) * n for _ in range(n))

    def check_matrix(self, B, n):
        """Validate shape and entry range of an n-by-n matrix, return it."""
        if len(B) != n or any(len(row) != n for row in B):
            raise InputError(f"expected a {n}x{n} matrix")
        for row in B:
            for a in row:
                if not isinstance(a, int) or not 0 <= a < self.p:
                    raise InputError(
                        f"matrix entry {a!r} is not a reduced element of F_{self.p}"
                    )
        return tuple(tuple(row) for row in B)

    def all_matrices(self, n):
        """Iterate over all p^(n*n) matrices, rows filled lexicographically."""
        for flat in itertools.product(range(self.p), repeat=n * n):
            yield tuple(flat[i * n : (i + 1) * n] for i in range(n))

    def bilinear_eval(self, B, u, v):
        """u^T B v mod p for row vectors u, v."""
        total = 0
        for i, ui in enumerate(u):
            if ui:
                row = B[i]
                total += ui * sum(row[j] * vj for j, vj in enumerate(v))
        return total % self.p

    def is_alternating(self, B):
        """Zero diagonal and B^T = -B.

        Equivalent to v^T B v = 0 for every vector v: plugging in unit
        vectors forces the diagonal to vanish, and e_i + e_j then forces
        B[i][j] + B[j][i] = 0; the converse expansion is immediate.
        """
        n = len(B)
        for i in range(n):
            if B[i][i] % self.p != 0:
                return False
            for j in range(i + 1, n):
                if (B[i][j] + B[j][i]) % self.p != 0:
                    return False
        return True

    def matrix_rank(self, B):
        """Rank over F_p by Gaussian elimination."""
        rows = [list(r) for r in B]
        if not rows:
            return 0
        ncols = len(rows[0])
        rank = 0
        col = 0
        for col in range(ncols):
            pivot = None
            for r in range(rank, len(rows)):
                if rows[r][col] % self.p != 0:
                    pivot = r
                    break
            if pivot is None:
                continue
            rows[rank], rows[pivot] = rows[pivot], rows[rank]
            inv = pow(rows[rank][col], self.p - 2, self.p)
            rows[rank] = [(a * inv) % self.p for a in rows[rank]]
            for r in range(len(rows)):
                if r != rank and rows[r][col] % self.p != 0:
                    f = rows[r][col]
                    rows[r] = [(a - f * b) % self.p for a, b in zip(rows[r], rows[rank])]
            rank += 1
        return rank

    def is_nondegenerate(self, B):
        return self.matrix_rank(B) == len(B)
