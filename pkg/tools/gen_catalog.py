"""Generate the shipped catalog diagrams from standard constructions.

Builds unoriented 4-valent diagrams (braid closures, rational tangles,
pretzel/Montesinos assemblies), orients them by traversal, emits PD
codes with their natural signs, and feeds those through the package's
own importer.  Candidate links are then identified by matching their
two computed invariant polynomials against the frozen expected tables,
together with crossing count, component count, and alternation.

Run from the repository root:  python3 tools/gen_catalog.py
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from qbeads import Quandle, compute_invariant, validate_form
from qbeads.diagram import format_diagram, import_pd


class Builder:
    """Unoriented diagram under construction.

    A crossing is four ports in counterclockwise order; the under-strand
    passes through ports 0 and 2, the over-strand through 1 and 3.
    Ports are (crossing_index, slot).  joins[] pairs up ports (the edges
    of the 4-valent graph).
    """

    def __init__(self):
        self.ports = []  # list of port lists, one per crossing
        self.joins = {}

    def crossing(self):
        ci = len(self.ports)
        self.ports.append([(ci, s) for s in range(4)])
        return ci

    def join(self, p, q):
        if p in self.joins or q in self.joins:
            raise ValueError(f"port reused: {p} or {q}")
        self.joins[p] = q
        self.joins[q] = p

    # -- primitive crossings, with explicit CCW port geometry ---------

    def braid_crossing(self, positive):
        """Ports (NW, NE, SW, SE) for a braid letter, strands downward.

        Positive: under runs NW->SE, over NE->SW.  CCW slot order is
        [NW, SW, SE, NE] with under at slots 0/2.  Negative mirrors it.
        """
        ci = self.crossing()
        s = self.ports[ci]
        if positive:
            nw, sw, se, ne = s
        else:
            ne, nw, sw, se = s
        return nw, ne, sw, se

    def vertical_twist_crossing(self, positive):
        """Ports (TL, TR, BL, BR) for one crossing of a vertical twist."""
        ci = self.crossing()
        s = self.ports[ci]
        if positive:
            tl, bl, br, tr = s
        else:
            tr, tl, bl, br = s
        return tl, tr, bl, br

    def horizontal_twist_crossing(self, positive):
        """Ports (LT, LB, RT, RB) for one crossing of a horizontal twist."""
        ci = self.crossing()
        s = self.ports[ci]
        if positive:
            lt, lb, rb, rt = s
        else:
            lb, rb, rt, lt = s
        return lt, lb, rt, rb

    # -- orientation, PD emission -------------------------------------

    def trace(self):
        """Orient every strand and return (pd_quads, signs).

        Walks each closed strand once, numbering traversed edges
        consecutively; entry ports determine under_in / over_in and so
        the crossing sign (over entering the slot 3 places CCW from the
        under entry is positive).  Also records the passage walks, one
        list of entered ports per strand, for the structural checks.
        """
        n = len(self.ports)
        all_ports = [p for plist in self.ports for p in plist]
        for p in all_ports:
            if p not in self.joins:
                raise ValueError(f"dangling port {p}")

        entry = {}  # port -> edge number entering it
        exit_ = {}  # port -> edge number leaving it
        edge_no = 0
        visited = set()
        self.walks = []
        for start in all_ports:
            if start in visited:
                continue
            # walk: leave through `start`, follow the join, pass through
            # the crossing internally, repeat until back at start
            p = start
            walk = []
            while True:
                visited.add(p)
                edge_no += 1
                q = self.joins[p]
                visited.add(q)
                exit_[p] = edge_no
                entry[q] = edge_no
                walk.append(q)
                ci, slot = q
                out_slot = (slot + 2) % 4
                p = (ci, out_slot)
                if p == start:
                    break
            self.walks.append(walk)

        quads = []
        signs = []
        for ci in range(n):
            slots = self.ports[ci]
            # exactly one of slots 0/2 is the under entry
            under_in = next(s for s in (0, 2) if slots[s] in entry)
            over_in = next(s for s in (1, 3) if slots[s] in entry)
            rel = (over_in - under_in) % 4
            signs.append(1 if rel == 3 else -1)
            quad = []
            for k in range(4):
                s = (under_in + k) % 4
                port = slots[s]
                quad.append(entry[port] if port in entry else exit_[port])
            quads.append(tuple(quad))
        return quads, signs

    def pd_string(self):
        quads, signs = self.trace()
        pd = " ".join("X[%d,%d,%d,%d]" % q for q in quads)
        sign_str = "".join("+" if s == 1 else "-" for s in signs)
        return pd, sign_str

    # -- structural certification -------------------------------------

    def is_alternating(self):
        """True when every strand's passages alternate over/under."""
        if not hasattr(self, "walks"):
            self.trace()
        for walk in self.walks:
            kinds = ["U" if slot in (0, 2) else "O" for _, slot in walk]
            if any(a == b for a, b in zip(kinds, kinds[1:] + kinds[:1])):
                return False
        return True

    def min_edge_cut(self):
        """Minimum edge cut of the underlying 4-valent multigraph.

        A value >= 3 certifies the diagram is connected, has no
        nugatory crossing, and is a prime diagram.  Brute force over
        vertex subsets; the catalogs here have at most 7 crossings.
        """
        n = len(self.ports)
        edges = []
        seen = set()
        for p, q in self.joins.items():
            if (q, p) in seen:
                continue
            seen.add((p, q))
            edges.append((p[0], q[0]))
        if any(a == b for a, b in edges):
            return 1  # a self-loop is a nugatory kink
        best = len(edges)
        for mask in range(1, 1 << (n - 1)):  # fix vertex n-1 outside S
            cut = sum(
                1 for a, b in edges if ((mask >> a) & 1) != ((mask >> b) & 1)
            )
            best = min(best, cut)
        return best


# -- assemblies --------------------------------------------------------


def braid_closure(strands, word):
    b = Builder()
    dangle = [None] * (strands + 1)  # 1-based positions
    first = [None] * (strands + 1)

    def attach(pos, port):
        if dangle[pos] is None:
            first[pos] = port
        else:
            b.join(dangle[pos], port)

    for letter in word:
        k = abs(letter)
        nw, ne, sw, se = b.braid_crossing(letter > 0)
        attach(k, nw)
        attach(k + 1, ne)
        dangle[k] = sw
        dangle[k + 1] = se
    for pos in range(1, strands + 1):
        if first[pos] is None:
            raise ValueError(f"strand {pos} unused")
        b.join(dangle[pos], first[pos])
    return b


class Tangle:
    """Four open boundary ports: nw, ne, sw, se."""

    def __init__(self, b, nw, ne, sw, se):
        self.b = b
        self.nw, self.ne, self.sw, self.se = nw, ne, sw, se


def twist_bottom(b, tangle, t):
    """Stack |t| vertical-twist crossings below a tangle."""
    nw, ne, sw, se = tangle.nw, tangle.ne, tangle.sw, tangle.se
    for _ in range(abs(t)):
        tl, tr, bl, br = b.vertical_twist_crossing(t > 0)
        b.join(sw, tl)
        b.join(se, tr)
        sw, se = bl, br
    return Tangle(b, nw, ne, sw, se)


def twist_right(b, tangle, t):
    """Append |t| horizontal-twist crossings to the right of a tangle."""
    nw, ne, sw, se = tangle.nw, tangle.ne, tangle.sw, tangle.se
    for _ in range(abs(t)):
        lt, lb, rt, rb = b.horizontal_twist_crossing(t > 0)
        b.join(ne, lt)
        b.join(se, lb)
        ne, se = rt, rb
    return Tangle(b, nw, ne, sw, se)


def rational_tangle(b, cf):
    """Build the rational tangle for the twist sequence cf.

    cf[0] horizontal twists, then alternating vertical (bottom) and
    horizontal (right) twist batches.  Started from a single horizontal
    crossing batch, so cf[0] must be nonzero.
    """
    if not cf or cf[0] == 0:
        raise ValueError("twist sequence must start with nonzero horizontal twists")
    # first batch built explicitly: a row of |cf[0]| horizontal crossings
    t = cf[0]
    lt, lb, rt, rb = b.horizontal_twist_crossing(t > 0)
    tangle = Tangle(b, lt, rt, lb, rb)
    for _ in range(abs(t) - 1):
        tangle = twist_right(b, tangle, 1 if t > 0 else -1)
    for i, t in enumerate(cf[1:]):
        if i % 2 == 0:
            tangle = twist_bottom(b, tangle, t)
        else:
            tangle = twist_right(b, tangle, t)
    return tangle


def numerator_closure(b, tangle):
    b.join(tangle.nw, tangle.ne)
    b.join(tangle.sw, tangle.se)
    return b


def rational_link(cf):
    b = Builder()
    tangle = rational_tangle(b, cf)
    return numerator_closure(b, tangle)


def vertical_tangle(b, t):
    """A stack of |t| vertical-twist crossings as a tangle."""
    tl, tr, bl, br = b.vertical_twist_crossing(t > 0)
    tangle = Tangle(b, tl, tr, bl, br)
    for _ in range(abs(t) - 1):
        tangle = twist_bottom(b, tangle, 1 if t > 0 else -1)
    return tangle


def pretzel_link(specs):
    """Pretzel/Montesinos closure of vertical slots.

    Each spec is an int (vertical twist stack) or a list (rational
    tangle by twist sequence).  Slots are joined left to right, tops
    and bottoms chained, outer arcs closing the row.
    """
    b = Builder()
    tangles = []
    for spec in specs:
        if isinstance(spec, int):
            tangles.append(vertical_tangle(b, spec))
        else:
            tangles.append(rational_tangle(b, list(spec)))
    for left, right in zip(tangles, tangles[1:]):
        b.join(left.ne, right.nw)
        b.join(left.se, right.sw)
    b.join(tangles[-1].ne, tangles[0].nw)
    b.join(tangles[-1].se, tangles[0].sw)
    return b


# -- identification ----------------------------------------------------

SWAP3 = [[0, 0, 1], [1, 1, 0], [2, 2, 2]]
S = [[0, 1], [1, 0]]
Z = [[0, 0], [0, 0]]


# Candidate constructions covering, per crossing number and component
# count, the complete classical lists of prime links through 7
# crossings.  Twist sequences are in this builder's composition order
# (first entry horizontal, then alternating bottom/right batches);
# reversing a sequence gives the same two-bridge link, so these match
# the usual tables up to that reversal.
CANDIDATES = [
    ("r2", "two-bridge 4/1 (torus T(2,2))", lambda: rational_link([2])),
    ("r4", "two-bridge 8/1 (torus T(2,4))", lambda: rational_link([4])),
    ("r212", "two-bridge 8/3 (Whitehead)", lambda: rational_link([2, 1, 2])),
    ("r6", "two-bridge 12/1 (torus T(2,6))", lambda: rational_link([6])),
    ("r123", "two-bridge 10/3", lambda: rational_link([1, 2, 3])),
    ("r222", "two-bridge 12/5", lambda: rational_link([2, 2, 2])),
    ("borromean", "closure of (s1 s2^-1)^3", lambda: braid_closure(3, [1, -2, 1, -2, 1, -2])),
    ("t33", "torus T(3,3), closure of (s1 s2)^3", lambda: braid_closure(3, [1, 2, 1, 2, 1, 2])),
    ("p222", "pretzel (2,2,2)", lambda: pretzel_link([2, 2, 2])),
    ("r412", "two-bridge 14/5", lambda: rational_link([4, 1, 2])),
    ("r232", "two-bridge 16/7", lambda: rational_link([2, 3, 2])),
    ("r11113", "two-bridge 18/5", lambda: rational_link([1, 1, 1, 1, 3])),
    ("p322", "pretzel (3,2,2)", lambda: pretzel_link([3, 2, 2])),
    ("m2122", "montesinos (21,2,2)", lambda: pretzel_link([[2, 1], 2, 2])),
    ("dot2", "closure of s1^2 s2^-1 (s1 s2^-1)^2", lambda: braid_closure(3, [1, 1, -2, 1, -2, 1, -2])),
    ("p2221", "pretzel (2,2,2,1)", lambda: pretzel_link([2, 2, 2, 1])),
    ("p32m2", "pretzel (3,2,-2)", lambda: pretzel_link([3, 2, -2])),
    ("m2122m", "montesinos (21,2,-2)", lambda: pretzel_link([[2, 1], 2, -2])),
]

# Frozen targets: name -> (crossings, components, alternating,
# swap3-partial polynomial, swap3-full polynomial).
EXPECTED = {
    "L2a1": (2, 2, True, "u^16 + 4u^10", "5u^10"),
    "L4a1": (4, 2, True, "5u^16 + 4u^10", "4u^16 + 5u^10"),
    "L5a1": (5, 2, True, "5u^16 + 4u^10", "4u^16 + 5u^10"),
    "L6a1": (6, 2, True, "9u^16", "9u^16"),
    "L6a2": (6, 2, True, "u^16 + 4u^10", "5u^10"),
    "L6a3": (6, 2, True, "5u^16", "5u^16"),
    "L6a4": (6, 3, True, "19u^64 + 8u^40", "18u^64 + 9u^40"),
    "L6a5": (6, 3, True, "7u^64 + 8u^28", "6u^40 + 9u^28"),
    "L6n1": (6, 3, False, "7u^64 + 8u^22", "6u^40 + 9u^22"),
    "L7a1": (7, 2, True, "9u^16", "9u^16"),
    "L7a2": (7, 2, True, "2u^40 + 7u^16", "4u^40 + 5u^16"),
    "L7a3": (7, 2, True, "2u^40 + 7u^16", "4u^40 + 5u^16"),
    "L7a4": (7, 2, True, "5u^16 + 4u^10", "4u^16 + 5u^10"),
    "L7a5": (7, 2, True, "5u^16", "5u^16"),
    "L7a6": (7, 2, True, "u^16 + 4u^10", "5u^10"),
    "L7a7": (7, 3, True, "7u^64 + 8u^22", "6u^40 + 9u^22"),
    "L7n1": (7, 2, False, "2u^40 + 7u^16", "4u^40 + 5u^16"),
    "L7n2": (7, 2, False, "2u^40 + 7u^16", "4u^40 + 5u^16"),
}

# Where several names share one signature row the split is fixed here,
# by the classical correspondence of the constructions.
TIE_BREAKS = {
    "m2122": "L7a2",
    "p322": "L7a3",
    "p32m2": "L7n1",
    "m2122m": "L7n2",
}


def write_fixtures(root, quandle, forms):
    """Write the quandle, form, and expected-value files."""
    import json

    from qbeads.forms import format_form
    from qbeads.quandle import format_quandle

    (root / "quandles").mkdir(parents=True, exist_ok=True)
    (root / "forms").mkdir(parents=True, exist_ok=True)
    (root / "expected").mkdir(parents=True, exist_ok=True)

    (root / "quandles" / "swap3.quandle").write_text(
        "# order-3 quandle whose first two right translations are the\n"
        "# identity and whose third swaps elements 1 and 2; involutory\n"
        + format_quandle(quandle)
    )
    descriptions = {
        "swap3-partial": "symplectic blocks on the pair {1,2}, zero elsewhere",
        "swap3-full": "symplectic blocks on {1,2} and at (3,3), zero elsewhere",
        "swap3-zero": "the zero family",
    }
    for form in forms:
        (root / "forms" / f"{form.name}.form").write_text(
            f"# quandle: {quandle.name}\n# {descriptions[form.name]}\n"
            + format_form(form)
        )


def main():
    from qbeads.diagram import LinkDiagram

    quandle = Quandle.from_table(SWAP3, name="swap3")
    partial = validate_form(quandle, [[S, S, Z], [S, S, Z], [Z, Z, Z]], 2, 2, name="swap3-partial")
    full = validate_form(quandle, [[S, S, Z], [S, S, Z], [Z, Z, S]], 2, 2, name="swap3-full")
    zero = validate_form(quandle, [[Z, Z, Z], [Z, Z, Z], [Z, Z, Z]], 2, 2, name="swap3-zero")

    root = Path(__file__).resolve().parent.parent / "src" / "qbeads" / "catalog"
    write_fixtures(root, quandle, [partial, full, zero])
    out_dir = root / "links"
    out_dir.mkdir(parents=True, exist_ok=True)

    tables = {"swap3-partial": {}, "swap3-full": {}}
    assigned = {}
    for key, desc, build in [(k, d, b) for k, d, b in CANDIDATES]:
        builder = build()
        pd, signs = builder.pd_string()
        d = import_pd(pd, signs=signs, name=key)
        r1 = compute_invariant(d, quandle, partial, engine="both")
        r2 = compute_invariant(d, quandle, full, engine="both")
        sig = (
            len(d.crossings),
            len(d.components),
            builder.is_alternating(),
            r1.polynomial.render(),
            r2.polynomial.render(),
        )
        cut = builder.min_edge_cut()
        if cut < 3:
            raise SystemExit(f"{key}: diagram not prime/reduced (min edge cut {cut})")
        matches = sorted(n for n, want in EXPECTED.items() if want == sig)
        if key in TIE_BREAKS:
            name = TIE_BREAKS[key]
            if name not in matches:
                raise SystemExit(f"{key}: tie-break {name} not among matches {matches}")
        elif len(matches) == 1:
            name = matches[0]
        else:
            raise SystemExit(f"{key}: expected a unique match, got {matches} for {sig}")
        if name in assigned:
            raise SystemExit(f"{name} matched twice: {assigned[name]} and {key}")
        assigned[name] = key
        tables["swap3-partial"][name] = r1.polynomial.term_list()
        tables["swap3-full"][name] = r2.polynomial.term_list()

        meta = dict(d.meta)
        meta["construction"] = desc
        meta["orientation"] = (
            "strand traversal of the construction; all shipped invariants "
            "are unchanged under reversing any component"
        )
        final = LinkDiagram(name, d.arc_count, d.crossings, d.components, meta)
        final.validate()
        path = out_dir / f"{name}.diagram"
        path.write_text(format_diagram(final))
        print(
            f"{name:5s} <- {key:8s} x={sig[0]} comps={sig[1]} alt={sig[2]} "
            f"cut={cut} P1={sig[3]:16s} P2={sig[4]:16s} {desc}"
        )

    missing = sorted(set(EXPECTED) - set(assigned))
    if missing:
        raise SystemExit(f"unassigned catalog names: {missing}")

    import json

    for form_name, table in tables.items():
        payload = {"expected": {k: table[k] for k in sorted(table)}}
        (root / "expected" / f"{form_name}.json").write_text(
            json.dumps(payload, indent=2) + "\n"
        )
    print(f"\nwrote {len(assigned)} diagrams and fixtures under {root}")


if __name__ == "__main__":
    main()
