"""Finite bounded lattices with normal operations, and complex algebras.

The complex algebra of a compatible frame has the concept lattice as
carrier.  A family-F connective sends concepts to the concept whose
intent is the 0-section of its relation at the arguments' extents
(intents at antitone coordinates); family-G connectives dually produce
the extent from the arguments' intents (extents at antitone coordinates).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product

from .bitset import bits
from .errors import (
    FormatError,
    IncompatibleFrameError,
    NotALatticeError,
)
from .polarity import DEFAULT_CONCEPT_CAP, enumerate_concepts
from .syntax import signature_from_dict


class FiniteAlgebra:
    """A bounded lattice given by its order, plus one operation per connective."""

    def __init__(self, names, leq, signature, ops):
        self.names = tuple(names)
        self.size = len(self.names)
        self.signature = signature
        if len(leq) != self.size or any(len(row) != self.size for row in leq):
            raise FormatError("leq matrix has wrong shape")
        self.leq = tuple(tuple(bool(v) for v in row) for row in leq)
        self._check_order()
        below = []
        above = []
        for i in range(self.size):
            below.append(sum(1 << j for j in range(self.size) if self.leq[j][i]))
            above.append(sum(1 << j for j in range(self.size) if self.leq[i][j]))
        self.below = tuple(below)
        self.above = tuple(above)
        self.meet = self._build_table(self.below, "meet")
        self.join = self._build_table(self.above, "join")
        self.top = self._extreme(self.below)
        self.bot = self._extreme(self.above)
        table_ops = {}
        for conn in signature.connectives:
            if conn.name not in ops:
                raise FormatError(f"missing operation table for {conn.name!r}")
            table = dict(ops[conn.name])
            expected = self.size**conn.arity
            if len(table) != expected:
                raise FormatError(
                    f"operation {conn.name!r}: table has {len(table)} entries, "
                    f"expected {expected}"
                )
            for args, val in table.items():
                if len(args) != conn.arity or not all(
                    0 <= a < self.size for a in args
                ) or not 0 <= val < self.size:
                    raise FormatError(f"operation {conn.name!r}: bad entry {args} -> {val}")
            table_ops[conn.name] = table
        self.ops = table_ops

    def _check_order(self):
        n = self.size
        for i in range(n):
            if not self.leq[i][i]:
                raise NotALatticeError("leq is not reflexive")
            for j in range(n):
                if self.leq[i][j] and self.leq[j][i] and i != j:
                    raise NotALatticeError("leq is not antisymmetric")
                if self.leq[i][j]:
                    for k in range(n):
                        if self.leq[j][k] and not self.leq[i][k]:
                            raise NotALatticeError("leq is not transitive")

    def _extreme(self, cone):
        full = (1 << self.size) - 1
        for i in range(self.size):
            if cone[i] == full:
                return i
        raise NotALatticeError("order is not bounded")

    def _build_table(self, cone, what):
        table = []
        full = (1 << self.size) - 1
        for i in range(self.size):
            row = []
            for j in range(self.size):
                cands = cone[i] & cone[j]
                best = None
                for k in bits(cands):
                    if cands & ~cone[k] == 0:
                        best = k
                        break
                if best is None:
                    raise NotALatticeError(
                        f"{what} of {self.names[i]!r} and {self.names[j]!r} does not exist"
                    )
                row.append(best)
            table.append(tuple(row))
        return tuple(table)

    def le(self, i, j):
        return self.leq[i][j]

    def apply(self, name, args):
        return self.ops[name][tuple(args)]

    def to_dict(self):
        pairs = [
            [self.names[i], self.names[j]]
            for i in range(self.size)
            for j in range(self.size)
            if self.leq[i][j]
        ]
        ops = {}
        for conn in self.signature.connectives:
            rows = []
            for args, val in sorted(self.ops[conn.name].items()):
                rows.append([self.names[a] for a in args] + [self.names[val]])
            ops[conn.name] = rows
        return {
            "signature": self.signature.to_dict(),
            "elements": list(self.names),
            "leq": pairs,
            "ops": ops,
        }


def algebra_from_dict(data):
    if not isinstance(data, dict):
        raise FormatError("algebra file must be a JSON object")
    for key in ("signature", "elements", "leq"):
        if key not in data:
            raise FormatError(f"algebra file missing key {key!r}")
    signature = signature_from_dict(data["signature"])
    names = list(data["elements"])
    idx = {n: i for i, n in enumerate(names)}
    if len(idx) != len(names):
        raise FormatError("duplicate element names")
    n = len(names)
    leq = [[i == j for j in range(n)] for i in range(n)]
    for a, b in data["leq"]:
        if a not in idx or b not in idx:
            raise FormatError(f"leq pair [{a!r}, {b!r}] uses unknown elements")
        leq[idx[a]][idx[b]] = True
    # reflexive-transitive closure of the given pairs
    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in range(n):
                if leq[i][j]:
                    for k in range(n):
                        if leq[j][k] and not leq[i][k]:
                            leq[i][k] = True
                            changed = True
    ops = {}
    for conn in signature.connectives:
        rows = data.get("ops", {}).get(conn.name)
        if rows is None:
            raise FormatError(f"missing operation table for {conn.name!r}")
        table = {}
        for row in rows:
            if len(row) != conn.arity + 1:
                raise FormatError(f"operation {conn.name!r}: bad row {row}")
            for name in row:
                if name not in idx:
                    raise FormatError(f"operation {conn.name!r}: unknown element {name!r}")
            table[tuple(idx[a] for a in row[:-1])] = idx[row[-1]]
        ops[conn.name] = table
    return FiniteAlgebra(names, leq, signature, ops)


def load_algebra(path):
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: invalid JSON: {exc.msg} (line {exc.lineno})") from exc
    return algebra_from_dict(data)


class ComplexAlgebra(FiniteAlgebra):
    """The concept lattice of a frame with operations from its relations."""

    def __init__(self, frame, concepts, leq, ops):
        self.frame = frame
        self.concepts = list(concepts)
        pol = frame.polarity
        names = [c.show(pol) for c in self.concepts]
        super().__init__(names, leq, frame.signature, ops)

    def index_of_extent(self, extent):
        return self._ext_index[extent]


def build_complex_algebra(frame, cap=DEFAULT_CONCEPT_CAP, check=True):
    from .frame import check_compatibility, section_zero

    if check:
        report = check_compatibility(frame)
        if not report.passed:
            raise IncompatibleFrameError(report.message)
    pol = frame.polarity
    concepts = enumerate_concepts(pol, cap)
    n = len(concepts)
    ext_index = {c.extent: i for i, c in enumerate(concepts)}
    int_index = {c.intent: i for i, c in enumerate(concepts)}
    leq = [[concepts[i].extent & ~concepts[j].extent == 0 for j in range(n)] for i in range(n)]
    ops = {}
    for conn in frame.signature.connectives:
        rel = frame.relations[conn.name]
        table = {}
        for tup in product(range(n), repeat=conn.arity):
            if conn.family == "G":
                args = tuple(
                    concepts[t].intent if e == "1" else concepts[t].extent
                    for t, e in zip(tup, conn.order_type)
                )
                ext = section_zero(rel, args)
                idx = ext_index.get(ext)
            else:
                args = tuple(
                    concepts[t].extent if e == "1" else concepts[t].intent
                    for t, e in zip(tup, conn.order_type)
                )
                itn = section_zero(rel, args)
                idx = int_index.get(itn)
            if idx is None:
                raise IncompatibleFrameError(
                    f"operation {conn.name!r} leaves the concept lattice; "
                    "the frame is not compatible"
                )
            table[tup] = idx
        ops[conn.name] = table
    alg = ComplexAlgebra(frame, concepts, leq, ops)
    alg._ext_index = ext_index
    return alg


@dataclass
class NormalityReport:
    passed: bool
    connective: str = None
    coordinate: int = None
    law: str = None
    witness: str = None

    @property
    def message(self):
        if self.passed:
            return "PASS: all operations are normal"
        return (
            f"FAIL: {self.connective!r} is not normal at coordinate "
            f"{self.coordinate}: {self.law} fails for {self.witness}"
        )

    def to_dict(self):
        out = {"passed": self.passed}
        if not self.passed:
            out.update(
                connective=self.connective,
                coordinate=self.coordinate,
                law=self.law,
                witness=self.witness,
            )
        return out


def verify_normality(alg):
    """Check the distribution and unit laws coordinatewise.

    Family F turns joins into joins at monotone coordinates and meets into
    joins at antitone ones, sending the corresponding unit to bottom.
    Family G is dual.
    """
    n = alg.size
    for conn in alg.signature.connectives:
        table = alg.ops[conn.name]
        for i in range(conn.arity):
            e = conn.order_type[i]
            if conn.family == "F":
                inner = alg.join if e == "1" else alg.meet
                outer = alg.join
                unit = alg.bot if e == "1" else alg.top
                target = alg.bot
                law = ("join" if e == "1" else "meet") + "-to-join"
            else:
                inner = alg.meet if e == "1" else alg.join
                outer = alg.meet
                unit = alg.top if e == "1" else alg.bot
                target = alg.top
                law = ("meet" if e == "1" else "join") + "-to-meet"
            rest_positions = [k for k in range(conn.arity) if k != i]
            for rest in product(range(n), repeat=conn.arity - 1):
                def at(v):
                    args = [None] * conn.arity
                    for k, r in zip(rest_positions, rest):
                        args[k] = r
                    args[i] = v
                    return table[tuple(args)]

                if at(unit) != target:
                    return NormalityReport(
                        False, conn.name, i, law + " unit",
                        f"rest={tuple(alg.names[r] for r in rest)}",
                    )
                for a in range(n):
                    for b in range(a + 1, n):
                        if at(inner[a][b]) != outer[at(a)][at(b)]:
                            return NormalityReport(
                                False, conn.name, i, law,
                                f"a={alg.names[a]!r}, b={alg.names[b]!r}, "
                                f"rest={tuple(alg.names[r] for r in rest)}",
                            )
    return NormalityReport(True)


@dataclass
class HomReport:
    passed: bool
    reason: str = ""

    @property
    def message(self):
        return "PASS: complete homomorphism" if self.passed else f"FAIL: {self.reason}"

    def to_dict(self):
        out = {"passed": self.passed}
        if not self.passed:
            out["reason"] = self.reason
        return out


def check_complete_homomorphism(mapping, dom, cod):
    """Check that mapping preserves bounds, meets, joins and all operations.

    On finite lattices preserving binary meets, joins and both bounds is
    the same as complete preservation.
    """
    mapping = tuple(mapping)
    if len(mapping) != dom.size or not all(0 <= v < cod.size for v in mapping):
        return HomReport(False, "mapping is not a function into the codomain")
    if dom.signature != cod.signature:
        return HomReport(False, "signature mismatch")
    if mapping[dom.bot] != cod.bot:
        return HomReport(False, "bottom is not preserved")
    if mapping[dom.top] != cod.top:
        return HomReport(False, "top is not preserved")
    for a in range(dom.size):
        for b in range(a + 1, dom.size):
            if mapping[dom.meet[a][b]] != cod.meet[mapping[a]][mapping[b]]:
                return HomReport(
                    False, f"meet of {dom.names[a]!r} and {dom.names[b]!r} not preserved"
                )
            if mapping[dom.join[a][b]] != cod.join[mapping[a]][mapping[b]]:
                return HomReport(
                    False, f"join of {dom.names[a]!r} and {dom.names[b]!r} not preserved"
                )
    for conn in dom.signature.connectives:
        for args, val in dom.ops[conn.name].items():
            image = cod.ops[conn.name][tuple(mapping[a] for a in args)]
            if mapping[val] != image:
                return HomReport(
                    False,
                    f"{conn.name!r} at {tuple(dom.names[a] for a in args)} not preserved",
                )
    return HomReport(True)


def find_isomorphism(a, b, rng=None):
    """A signature-preserving lattice isomorphism a -> b, or None.

    Backtracking over order-compatible assignments; rng, when given,
    shuffles the candidate order so repeated calls can find different
    automorphisms.
    """
    if a.size != b.size or a.signature != b.signature:
        return None

    def invariant(alg, x):
        ops_sig = []
        for conn in alg.signature.connectives:
            if conn.arity == 1:
                ops_sig.append(alg.ops[conn.name][(x,)] == x)
        return (
            bin(alg.below[x]).count("1"),
            bin(alg.above[x]).count("1"),
            tuple(ops_sig),
        )

    inv_a = [invariant(a, x) for x in range(a.size)]
    inv_b = [invariant(b, x) for x in range(b.size)]
    if sorted(inv_a) != sorted(inv_b):
        return None
    candidates = []
    for x in range(a.size):
        cs = [y for y in range(b.size) if inv_b[y] == inv_a[x]]
        if rng is not None:
            rng.shuffle(cs)
        candidates.append(cs)
    order = sorted(range(a.size), key=lambda x: len(candidates[x]))
    mapping = [None] * a.size
    used = [False] * b.size

    def ops_ok(m):
        for conn in a.signature.connectives:
            for args, val in a.ops[conn.name].items():
                if m[val] != b.ops[conn.name][tuple(m[x] for x in args)]:
                    return False
        return True

    def extend(k):
        if k == len(order):
            return ops_ok(mapping)
        x = order[k]
        for y in candidates[x]:
            if used[y]:
                continue
            ok = True
            for x2 in order[:k]:
                y2 = mapping[x2]
                if a.leq[x][x2] != b.leq[y][y2] or a.leq[x2][x] != b.leq[y2][y]:
                    ok = False
                    break
            if ok:
                mapping[x] = y
                used[y] = True
                if extend(k + 1):
                    return True
                mapping[x] = None
                used[y] = False
        return False

    if extend(0):
        return list(mapping)
    return None
