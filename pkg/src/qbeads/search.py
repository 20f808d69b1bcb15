"""Depth-first search for all bilinear form families on a quandle.

The m*m index pairs are assigned in a fixed order: diagonal pairs
(0,0), (1,1), ... first, then off-diagonal pairs row-major.  Diagonal
candidates are restricted to alternating matrices (exactly axiom (i));
after each assignment every instance of axioms (ii)/(iii) whose
referenced pairs are all assigned is brute-forced over vector triples,
pruning the branch on the first failure.  Because every instance has
been checked once the last pair is assigned, completed leaves are valid
forms; emission order is deterministic (lexicographic matrices within
each slot).

The naive space (#candidate matrices)^(#pairs) is refused above a
configurable bound unless allow_large is set, since even small
parameters explode: m=3, p=2, n=2 gives 16^9, about 7e10, yet prunes
down to a sub-minute search.
"""

import time
from dataclasses import dataclass, field as dataclass_field

from .errors import InputError
from .field import PrimeField
from .forms import BilinearForm, form_violations

MODES = ("all", "alternating-only", "constant-diagonal")
DEFAULT_SPACE_BOUND = 10**9


@dataclass
class SearchResult:
    forms: list = dataclass_field(default_factory=list)
    complete: bool = True
    nodes: int = 0
    emitted: int = 0
    elapsed: float = 0.0
    space_estimate: int = 0
    mode: str = "all"


def _pair_order(m):
    pairs = [(x, x) for x in range(m)]
    pairs += [(x, y) for x in range(m) for y in range(m) if x != y]
    return pairs


def _instance_schedule(quandle, pair_slot):
    """Map slot index -> list of axiom instances first checkable there.

    An instance is ("ii", x, y, z) or ("iii", x, y, z); it is scheduled
    at the largest slot among its referenced pairs, so every instance
    runs exactly once and as early as possible.
    """
    m = quandle.order
    op = quandle.op
    schedule = {k: [] for k in range(len(pair_slot))}
    for x in range(m):
        for y in range(m):
            for z in range(m):
                refs_ii = [
                    (x, y),
                    (x, z),
                    (y, z),
                    (op(x, z), op(y, z)),
                ]
                schedule[max(pair_slot[r] for r in refs_ii)].append(("ii", x, y, z))
                refs_iii = [(x, y), (x, z), (y, z), (op(x, y), z)]
                schedule[max(pair_slot[r] for r in refs_iii)].append(("iii", x, y, z))
    return schedule


class _Searcher:
    def __init__(self, quandle, p, n, mode):
        if mode not in MODES:
            raise InputError(f"unknown search mode {mode!r}, expected one of {MODES}")
        self.quandle = quandle
        self.field = PrimeField(p)
        self.n = n
        self.mode = mode
        self.p = p

        field = self.field
        self.vectors = field.all_vectors(n)
        nv = len(self.vectors)
        self.nv = nv
        index = {v: i for i, v in enumerate(self.vectors)}
        self.vadd = [[index[field.vec_add(u, v)] for v in self.vectors] for u in self.vectors]
        self.smul = [[index[field.scalar_mul(s, v)] for v in self.vectors] for s in range(p)]

        self.all_mats = list(field.all_matrices(n))
        self.alt_ids = [i for i, M in enumerate(self.all_mats) if field.is_alternating(M)]
        # one bilinear table per candidate matrix, shared across slots
        self.tables = [
            [[field.bilinear_eval(M, u, v) for v in self.vectors] for u in self.vectors]
            for M in self.all_mats
        ]

        self.pairs = _pair_order(quandle.order)
        self.pair_slot = {pair: k for k, pair in enumerate(self.pairs)}
        self.schedule = _instance_schedule(quandle, self.pair_slot)

    def slot_candidates(self, k):
        x, y = self.pairs[k]
        if x == y:
            if self.mode == "constant-diagonal" and k > 0:
                return None  # copy of slot 0, handled in the DFS
            return self.alt_ids
        if self.mode == "alternating-only":
            return self.alt_ids
        return list(range(len(self.all_mats)))

    def space_estimate(self):
        per_slot = []
        for k in range(len(self.pairs)):
            cands = self.slot_candidates(k)
            if cands is not None:
                per_slot.append(len(cands))
        # the guard intentionally uses the naive uniform bound
        width = max(per_slot)
        return width ** len(self.pairs)

    def check_instance(self, instance, assigned):
        kind, x, y, z = instance
        op = self.quandle.op
        T = lambda a, b: self.tables[assigned[self.pair_slot[(a, b)]]]
        vadd, smul, p, nv = self.vadd, self.smul, self.p, self.nv
        if kind == "ii":
            Txy = T(x, y)
            Txz = T(x, z)
            Tyz = T(y, z)
            Tout = T(op(x, z), op(y, z))
            for a in range(nv):
                row_xz = Txz[a]
                row_xy = Txy[a]
                for b in range(nv):
                    row_yz = Tyz[b]
                    left = row_xy[b]
                    for c in range(nv):
                        a2 = vadd[a][smul[row_xz[c]][c]]
                        b2 = vadd[b][smul[row_yz[c]][c]]
                        if left != Tout[a2][b2]:
                            return False
            return True
        Txy = T(x, y)
        Txyz = T(op(x, y), z)
        Txz = T(x, z)
        Tyz = T(y, z)
        for a in range(nv):
            for b in range(nv):
                ab = Txy[a][b]
                for c in range(nv):
                    if (Txyz[a][c] + ab * Txyz[b][c]) % p != (
                        Txz[a][c] + ab * Tyz[b][c]
                    ) % p:
                        return False
        return True

    def dfs(self, limit, deadline, status):
        n_slots = len(self.pairs)
        assigned = [None] * n_slots

        def emit():
            m = self.quandle.order
            grid = [[None] * m for _ in range(m)]
            for k, (x, y) in enumerate(self.pairs):
                grid[x][y] = self.all_mats[assigned[k]]
            return BilinearForm(self.quandle, self.field, self.n, grid)

        def walk(k):
            if deadline is not None and time.monotonic() > deadline:
                status.complete = False
                return
            if k == n_slots:
                status.emitted += 1
                yield emit()
                return
            cands = self.slot_candidates(k)
            if cands is None:
                cands = [assigned[0]]
            for mat_id in cands:
                if limit is not None and status.emitted >= limit:
                    status.complete = False
                    return
                assigned[k] = mat_id
                status.nodes += 1
                ok = all(
                    self.check_instance(inst, assigned) for inst in self.schedule[k]
                )
                if ok:
                    yield from walk(k + 1)
                assigned[k] = None
                if not status.complete:
                    return

        yield from walk(0)


def search_forms(
    quandle,
    p,
    n,
    mode="all",
    limit=None,
    time_budget=None,
    space_bound=DEFAULT_SPACE_BOUND,
    allow_large=False,
    status=None,
):
    """Stream every valid BilinearForm on the quandle, depth first.

    Refuses oversized searches unless allow_large is set.  When
    time_budget (seconds) runs out the stream simply ends; pass a
    SearchResult as status to observe the incomplete flag.  run_search
    wraps all of this and returns the collected SearchResult.
    """
    searcher = _Searcher(quandle, p, n, mode)
    estimate = searcher.space_estimate()
    if status is None:
        status = SearchResult()
    status.mode = mode
    status.space_estimate = estimate
    status.emitted = 0
    if estimate > space_bound and not allow_large:
        raise InputError(
            f"search space estimate {estimate:.2e} exceeds the bound "
            f"{space_bound:.2e}; pass allow_large to proceed"
        )
    deadline = None if time_budget is None else time.monotonic() + time_budget
    start = time.monotonic()
    for form in searcher.dfs(limit, deadline, status):
        yield form
    status.elapsed = time.monotonic() - start


def run_search(quandle, p, n, mode="all", **kwargs):
    """Collect the search stream into a SearchResult."""
    result = SearchResult(mode=mode)
    result.forms = list(
        search_forms(quandle, p, n, mode=mode, status=result, **kwargs)
    )
    return result


def verify_search_output(result):
    """Re-validate every emitted form with the brute-force oracle."""
    failures = []
    for i, form in enumerate(result.forms):
        violations = form_violations(form.quandle, form.blocks, form.field, form.n)
        if violations:
            failures.append((i, violations))
    return failures
