"""Polarities (two-sorted incidence structures) and their concept lattices.

A polarity is (W, U, N) with N a relation from W to U.  Subsets of W and U
are represented as bit masks over the point index lists.  The maps up/down
form a Galois connection; a set is stable when closing it changes nothing.
Concepts are stable pairs (extent, intent).
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitset import bits, names_of
from .errors import CapExceededError, FormatError

DEFAULT_CONCEPT_CAP = 1 << 16


class Polarity:
    def __init__(self, w_names, u_names, pairs):
        w_names = tuple(w_names)
        u_names = tuple(u_names)
        if len(set(w_names)) != len(w_names):
            raise FormatError("duplicate names in W")
        if len(set(u_names)) != len(u_names):
            raise FormatError("duplicate names in U")
        self.w_names = w_names
        self.u_names = u_names
        self.nw = len(w_names)
        self.nu = len(u_names)
        self.full_w = (1 << self.nw) - 1
        self.full_u = (1 << self.nu) - 1
        rows = [0] * self.nw
        cols = [0] * self.nu
        seen = set()
        for w, u in pairs:
            if not (0 <= w < self.nw and 0 <= u < self.nu):
                raise FormatError(f"N pair ({w}, {u}) out of range")
            rows[w] |= 1 << u
            cols[u] |= 1 << w
            seen.add((w, u))
        self.rows = tuple(rows)
        self.cols = tuple(cols)
        self.pairs = frozenset(seen)

    @classmethod
    def from_names(cls, w_names, u_names, named_pairs):
        w_names = tuple(w_names)
        u_names = tuple(u_names)
        widx = {n: i for i, n in enumerate(w_names)}
        uidx = {n: i for i, n in enumerate(u_names)}
        pairs = []
        for w, u in named_pairs:
            if w not in widx:
                raise FormatError(f"unknown W point {w!r} in N")
            if u not in uidx:
                raise FormatError(f"unknown U point {u!r} in N")
            pairs.append((widx[w], uidx[u]))
        return cls(w_names, u_names, pairs)

    def n(self, w, u):
        return bool(self.rows[w] >> u & 1)

    def up(self, xmask):
        """All u related to every w in xmask."""
        out = self.full_u
        for w in bits(xmask):
            out &= self.rows[w]
        return out

    def down(self, ymask):
        """All w related to every u in ymask."""
        out = self.full_w
        for u in bits(ymask):
            out &= self.cols[u]
        return out

    def closure_w(self, xmask):
        return self.down(self.up(xmask))

    def closure_u(self, ymask):
        return self.up(self.down(ymask))

    def stable_w(self, xmask):
        return self.closure_w(xmask) == xmask

    def stable_u(self, ymask):
        return self.closure_u(ymask) == ymask

    def closure(self, mask, sort):
        return self.closure_w(mask) if sort == "W" else self.closure_u(mask)

    def stable(self, mask, sort):
        return self.closure(mask, sort) == mask

    def size(self, sort):
        return self.nw if sort == "W" else self.nu

    def full(self, sort):
        return self.full_w if sort == "W" else self.full_u

    def names(self, sort):
        return self.w_names if sort == "W" else self.u_names

    def w_index(self, name):
        try:
            return self.w_names.index(name)
        except ValueError:
            raise FormatError(f"unknown W point {name!r}") from None

    def u_index(self, name):
        try:
            return self.u_names.index(name)
        except ValueError:
            raise FormatError(f"unknown U point {name!r}") from None

    def __eq__(self, other):
        return (
            isinstance(other, Polarity)
            and self.w_names == other.w_names
            and self.u_names == other.u_names
            and self.rows == other.rows
        )

    def __repr__(self):
        return f"Polarity(|W|={self.nw}, |U|={self.nu}, |N|={len(self.pairs)})"


@dataclass(frozen=True, order=True)
class Concept:
    extent: int
    intent: int

    def show(self, polarity):
        ext = "{" + ", ".join(names_of(self.extent, polarity.w_names)) + "}"
        itn = "{" + ", ".join(names_of(self.intent, polarity.u_names)) + "}"
        return f"({ext}, {itn})"


def concept_of_w(polarity, w):
    """The concept generated by a single W point."""
    ext = polarity.closure_w(1 << w)
    return Concept(ext, polarity.up(ext))


def concept_of_u(polarity, u):
    """The concept generated by a single U point."""
    ext = polarity.down(1 << u)
    return Concept(ext, polarity.up(ext))


def enumerate_concepts(polarity, cap=DEFAULT_CONCEPT_CAP):
    """All concepts of the polarity, sorted by extent bit pattern.

    Closes every subset of the smaller sort, so the work and the number of
    results are bounded by 2**min(|W|, |U|); raises CapExceededError when
    that bound is above the cap.
    """
    if cap is None:
        cap = DEFAULT_CONCEPT_CAP
    n = min(polarity.nw, polarity.nu)
    if (1 << n) > cap:
        raise CapExceededError(
            f"up to 2^{n} concepts possible, cap is {cap}; raise the cap to proceed"
        )
    found = {}
    if polarity.nw <= polarity.nu:
        for x in range(1 << polarity.nw):
            ext = polarity.closure_w(x)
            if ext not in found:
                found[ext] = polarity.up(ext)
    else:
        for y in range(1 << polarity.nu):
            itn = polarity.closure_u(y)
            found[polarity.down(itn)] = itn
    return [Concept(e, found[e]) for e in sorted(found)]
