"""Frames: a polarity plus one sorted relation per connective.

For a family-F connective of order type e the relation lives on
U x W^e, where coordinate i has sort W when e[i] == "1" and sort U when
e[i] == "d".  Family-G relations live on W x U^e with the sorts swapped.

Sections generalise the Galois maps: the 0-section collects the heads
related to everything in a tuple of argument sets, and the i-section is
the 0-section of the relation with coordinates 0 and i exchanged.
Compatibility asks all point-tuple sections to be stable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product

from .bitset import bits, names_of
from .errors import CapExceededError, FormatError, SortError
from .polarity import Polarity
from .syntax import Signature, signature_from_dict

ALT_COMBO_CAP = 1 << 22


def connective_sorts(conn):
    """The coordinate sorts (head first) of the relation for a connective."""
    if conn.family == "F":
        return ("U",) + tuple("W" if e == "1" else "U" for e in conn.order_type)
    return ("W",) + tuple("U" if e == "1" else "W" for e in conn.order_type)


class Relation:
    """An (n+1)-ary sorted relation with the head at coordinate 0."""

    def __init__(self, sorts, sizes, tuples):
        self.sorts = tuple(sorts)
        self.sizes = tuple(sizes)
        self.arity = len(self.sorts) - 1
        tuples = frozenset(tuple(t) for t in tuples)
        for t in tuples:
            if len(t) != self.arity + 1:
                raise FormatError(f"relation tuple {t} has wrong length")
            for v, size in zip(t, self.sizes):
                if not 0 <= v < size:
                    raise FormatError(f"relation tuple {t} out of range")
        self.tuples = tuples
        by_args = {}
        for t in tuples:
            by_args.setdefault(t[1:], 0)
            by_args[t[1:]] |= 1 << t[0]
        self.by_args = by_args
        self._swapped = {}

    def swap(self, i):
        """The relation with coordinates 0 and i exchanged."""
        if i in self._swapped:
            return self._swapped[i]
        if not 1 <= i <= self.arity:
            raise SortError(f"no coordinate {i} in a relation of arity {self.arity}")
        order = list(range(self.arity + 1))
        order[0], order[i] = order[i], order[0]
        rel = Relation(
            tuple(self.sorts[j] for j in order),
            tuple(self.sizes[j] for j in order),
            {tuple(t[j] for j in order) for t in self.tuples},
        )
        self._swapped[i] = rel
        return rel

    def __eq__(self, other):
        return (
            isinstance(other, Relation)
            and self.sorts == other.sorts
            and self.sizes == other.sizes
            and self.tuples == other.tuples
        )


def section_zero(rel, args):
    """Heads related to every tuple in the product of the argument masks.

    With an empty product this is the full head sort.
    """
    if len(args) != rel.arity:
        raise SortError(f"expected {rel.arity} argument sets, got {len(args)}")
    acc = (1 << rel.sizes[0]) - 1
    for combo in product(*(tuple(bits(a)) for a in args)):
        acc &= rel.by_args.get(combo, 0)
        if not acc:
            break
    return acc


def section_i(rel, i, head, rest):
    """The i-section: heads become the i-th coordinate and vice versa.

    rest gives the argument masks for the remaining coordinates 1..n in
    order, skipping coordinate i; head is the mask for coordinate 0.
    """
    swapped = rel.swap(i)
    args = rest[: i - 1] + (head,) + rest[i - 1 :]
    return section_zero(swapped, args)


class Frame:
    def __init__(self, polarity, signature, relations):
        self.polarity = polarity
        self.signature = signature
        rels = {}
        for conn in signature.connectives:
            if conn.name not in relations:
                raise FormatError(f"missing relation for connective {conn.name!r}")
            rel = relations[conn.name]
            expected = connective_sorts(conn)
            sizes = tuple(polarity.size(s) for s in expected)
            if rel.sorts != expected or rel.sizes != sizes:
                raise SortError(f"relation for {conn.name!r} has wrong sorts or sizes")
            rels[conn.name] = rel
        extra = set(relations) - set(rels)
        if extra:
            raise FormatError(f"relations with no matching connective: {sorted(extra)}")
        self.relations = rels

    def __eq__(self, other):
        return (
            isinstance(other, Frame)
            and self.polarity == other.polarity
            and self.signature == other.signature
            and self.relations == other.relations
        )

    def to_dict(self):
        pol = self.polarity
        out = {
            "signature": self.signature.to_dict(),
            "W": list(pol.w_names),
            "U": list(pol.u_names),
            "N": sorted(
                [pol.w_names[w], pol.u_names[u]] for w, u in pol.pairs
            ),
            "relations": {},
        }
        for conn in self.signature.connectives:
            rel = self.relations[conn.name]
            named = []
            for t in rel.tuples:
                named.append([pol.names(s)[v] for v, s in zip(t, rel.sorts)])
            out["relations"][conn.name] = sorted(named)
        return out


def make_relation(frame_polarity, conn, named_tuples):
    sorts = connective_sorts(conn)
    sizes = tuple(frame_polarity.size(s) for s in sorts)
    idx = {
        "W": {n: i for i, n in enumerate(frame_polarity.w_names)},
        "U": {n: i for i, n in enumerate(frame_polarity.u_names)},
    }
    tuples = set()
    for t in named_tuples:
        if len(t) != len(sorts):
            raise FormatError(
                f"relation tuple {t} for {conn.name!r} has length {len(t)}, "
                f"expected {len(sorts)}"
            )
        row = []
        for name, s in zip(t, sorts):
            if name not in idx[s]:
                raise FormatError(
                    f"relation tuple {t} for {conn.name!r}: {name!r} is not a {s} point"
                )
            row.append(idx[s][name])
        tuples.add(tuple(row))
    return Relation(sorts, sizes, tuples)


def frame_from_dict(data):
    if not isinstance(data, dict):
        raise FormatError("frame file must be a JSON object")
    for key in ("signature", "W", "U", "N"):
        if key not in data:
            raise FormatError(f"frame file missing key {key!r}")
    signature = signature_from_dict(data["signature"])
    polarity = Polarity.from_names(data["W"], data["U"], data["N"])
    raw_rels = data.get("relations", {})
    relations = {}
    for conn in signature.connectives:
        named = raw_rels.get(conn.name, [])
        relations[conn.name] = make_relation(polarity, conn, named)
    extra = set(raw_rels) - {c.name for c in signature.connectives}
    if extra:
        raise FormatError(f"relations with no matching connective: {sorted(extra)}")
    return Frame(polarity, signature, relations)


def load_frame(path, check=True):
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: invalid JSON: {exc.msg} (line {exc.lineno})") from exc
    frame = frame_from_dict(data)
    if check:
        report = check_compatibility(frame)
        if not report.passed:
            from .errors import IncompatibleFrameError

            raise IncompatibleFrameError(f"{path}: {report.message}")
    return frame


def save_frame(frame, path):
    with open(path, "w") as fh:
        json.dump(frame.to_dict(), fh, indent=2, sort_keys=True)
        fh.write("\n")


@dataclass
class CompatibilityReport:
    passed: bool
    connective: str = None
    section: str = None
    points: tuple = ()
    found: tuple = ()
    expected: tuple = ()

    @property
    def message(self):
        if self.passed:
            return "PASS: all sections stable"
        return (
            f"FAIL: connective {self.connective!r}, {self.section} at "
            f"({', '.join(self.points)}) gives {{{', '.join(self.found)}}} "
            f"but closure is {{{', '.join(self.expected)}}}"
        )

    def to_dict(self):
        out = {"passed": self.passed}
        if not self.passed:
            out.update(
                connective=self.connective,
                section=self.section,
                points=list(self.points),
                found=list(self.found),
                closure=list(self.expected),
            )
        return out


def _point_names(polarity, sorts, tup):
    return tuple(polarity.names(s)[v] for v, s in zip(tup, sorts))


def check_compatibility(frame):
    """Check stability of all point-tuple sections of every relation."""
    pol = frame.polarity
    for conn in frame.signature.connectives:
        rel = frame.relations[conn.name]
        arg_ranges = [range(pol.size(s)) for s in rel.sorts[1:]]
        for tup in product(*arg_ranges):
            mask = section_zero(rel, tuple(1 << v for v in tup))
            if not pol.stable(mask, rel.sorts[0]):
                return CompatibilityReport(
                    False,
                    conn.name,
                    "0-section",
                    _point_names(pol, rel.sorts[1:], tup),
                    names_of(mask, pol.names(rel.sorts[0])),
                    names_of(pol.closure(mask, rel.sorts[0]), pol.names(rel.sorts[0])),
                )
        for i in range(1, rel.arity + 1):
            rest_sorts = rel.sorts[1:i] + rel.sorts[i + 1 :]
            rest_ranges = [range(pol.size(s)) for s in rest_sorts]
            for head in range(pol.size(rel.sorts[0])):
                for tup in product(*rest_ranges):
                    mask = section_i(rel, i, 1 << head, tuple(1 << v for v in tup))
                    if not pol.stable(mask, rel.sorts[i]):
                        pts = (pol.names(rel.sorts[0])[head],) + _point_names(
                            pol, rest_sorts, tup
                        )
                        return CompatibilityReport(
                            False,
                            conn.name,
                            f"{i}-section",
                            pts,
                            names_of(mask, pol.names(rel.sorts[i])),
                            names_of(
                                pol.closure(mask, rel.sorts[i]), pol.names(rel.sorts[i])
                            ),
                        )
    return CompatibilityReport(True)


def _section_at(rel, j, args):
    """The j-section of rel at the full argument tuple args (length n+1)."""
    if j == 0:
        return section_zero(rel, args[1:])
    rest = args[1:j] + args[j + 1 :]
    return section_i(rel, j, args[0], rest)


def check_compatibility_alt(frame, combo_cap=ALT_COMBO_CAP):
    """Equivalent compatibility test via closure invariance of sections.

    For every tuple of argument sets, every coordinate i and every other
    coordinate j, closing the i-th set must not change the j-section.
    Quantifies over all subsets of each coordinate sort, so only suitable
    for small frames.
    """
    pol = frame.polarity
    for conn in frame.signature.connectives:
        rel = frame.relations[conn.name]
        n = rel.arity + 1
        sizes = [pol.size(s) for s in rel.sorts]
        total = 1
        for s in sizes:
            total <<= s
        if total * n * n > combo_cap:
            raise CapExceededError(
                f"alternative compatibility check needs {total * n * n} section "
                f"comparisons, cap is {combo_cap}"
            )
        for masks in product(*(range(1 << s) for s in sizes)):
            for i in range(n):
                closed = pol.closure(masks[i], rel.sorts[i])
                if closed == masks[i]:
                    continue
                varied = masks[:i] + (closed,) + masks[i + 1 :]
                for j in range(n):
                    if j == i:
                        continue
                    lhs = _section_at(rel, j, masks)
                    rhs = _section_at(rel, j, varied)
                    if lhs != rhs:
                        names = tuple(
                            "{" + ", ".join(names_of(m, pol.names(s))) + "}"
                            for m, s in zip(masks, rel.sorts)
                        )
                        return CompatibilityReport(
                            False,
                            conn.name,
                            f"{j}-section changes when closing coordinate {i}",
                            names,
                            names_of(lhs, pol.names(rel.sorts[j])),
                            names_of(rhs, pol.names(rel.sorts[j])),
                        )
    return CompatibilityReport(True)
