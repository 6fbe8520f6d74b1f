"""Canonical factors: the braids A with e <= A <= D.

A canonical factor is exactly a product of parallel (non-crossing)
descending cycles, and is determined by its image in the symmetric group.
We therefore store a factor as a permutation table.  Under the left-to-right
action convention (see bandbraid.words) the table of the descending cycle
(t_j, ..., t_1) maps each orbit element to the next *larger* one, wrapping
the largest around to the smallest.

Raw tables are 0-based tuples ``p`` with ``p[i]`` the image of strand i+1
minus one; the module-level helpers on raw tables are the hot path shared
with the normal-form sweep.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import BraidError, NotCanonicalFactorError, ParseError
from .words import BandLetter, BraidWord

Cycle = tuple[int, ...]
GeneratorSet = frozenset[tuple[int, int]]


# ---------------------------------------------------------------------------
# raw permutation-table helpers (0-based tuples)

def identity_table(n: int) -> tuple[int, ...]:
    return tuple(range(n))

def delta_table(n: int) -> tuple[int, ...]:
    """The table of D: i -> i+1 mod n."""
    return tuple((i + 1) % n for i in range(n))

def mul_tables(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """Table of the product (apply p first, then q)."""
    return tuple(q[v] for v in p)

def inv_table(p: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)

def tau_table(p: tuple[int, ...], k: int) -> tuple[int, ...]:
    """Table of tau^k(p) = D^-k p D^k."""
    n = len(p)
    k %= n
    if k == 0:
        return tuple(p)
    return tuple((p[(i - k) % n] + k) % n for i in range(n))

def table_cycles(p: tuple[int, ...]) -> list[Cycle]:
    """Nontrivial orbits as descending index tuples (1-based), largest first.

    Raises if some orbit, read in increasing order, is not traversed by p
    (each element mapping to the next larger, the largest wrapping to the
    smallest), i.e. if p is not a canonical-factor table.
    """
    n = len(p)
    seen = [False] * n
    cycles: list[Cycle] = []
    for i in range(n - 1, -1, -1):
        if seen[i] or p[i] == i:
            continue
        orbit = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            seen[j] = True
            orbit.append(j)
            j = p[j]
        asc = sorted(orbit)
        for a, b in zip(asc, asc[1:] + [asc[0]]):
            if p[a] != b:
                raise NotCanonicalFactorError(
                    f"orbit {tuple(v + 1 for v in asc)} is not a descending "
                    f"cycle: strand {a + 1} maps to {p[a] + 1}, not {b + 1}"
                )
        cycles.append(tuple(v + 1 for v in reversed(asc)))
    return cycles


def check_noncrossing(cycles: list[Cycle], n: int) -> None:
    """Raise unless the cycles (as index sets) are pairwise non-crossing."""
    block = [0] * (n + 1)
    remaining = [0] * (len(cycles) + 1)
    for b, cyc in enumerate(cycles, start=1):
        remaining[b] = len(cyc)
        for v in cyc:
            if block[v]:
                raise NotCanonicalFactorError(f"strand {v} appears in two cycles")
            block[v] = b
    stack: list[int] = []
    for v in range(1, n + 1):
        b = block[v]
        if not b:
            continue
        if not stack or stack[-1] != b:
            if b in stack:
                other = cycles[stack[-1] - 1]
                raise NotCanonicalFactorError(
                    f"cycles {cycles[b - 1]} and {other} cross"
                )
            stack.append(b)
        remaining[b] -= 1
        if remaining[b] == 0:
            stack.pop()


def cycles_to_table(cycles: list[Cycle], n: int) -> tuple[int, ...]:
    """Table mapping each orbit element to the next larger one (wrapping)."""
    p = list(range(n))
    for cyc in cycles:
        asc = sorted(v - 1 for v in cyc)
        for a, b in zip(asc, asc[1:]):
            p[a] = b
        p[asc[-1]] = asc[0]
    return tuple(p)


def meet_tables(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """Table of the lattice meet of two canonical-factor tables.

    Linear in n: label the strands by the cycle of each input containing
    them, bucket-sort the (label-pair, strand) triples on the two small
    integer keys, and read each surviving group off as a descending cycle.
    """
    n = len(p)
    ca = table_cycles(p)
    cb = table_cycles(q)
    la = [0] * (n + 1)
    lb = [0] * (n + 1)
    for i, cyc in enumerate(ca, start=1):
        for v in cyc:
            la[v] = i
    for j, cyc in enumerate(cb, start=1):
        for v in cyc:
            lb[v] = j
    # Triples (i, j, m), m descending so each group's strands come out
    # in descending-cycle order; two stable bucket passes sort on (i, j).
    triples = [(la[m], lb[m], m) for m in range(n, 0, -1) if la[m] and lb[m]]
    buckets_j: list[list[tuple[int, int, int]]] = [[] for _ in range(len(cb) + 1)]
    for tr in triples:
        buckets_j[tr[1]].append(tr)
    buckets_i: list[list[tuple[int, int, int]]] = [[] for _ in range(len(ca) + 1)]
    for bj in buckets_j:
        for tr in bj:
            buckets_i[tr[0]].append(tr)
    out = list(range(n))
    for bi in buckets_i:
        start = 0
        for k in range(1, len(bi) + 1):
            if k == len(bi) or bi[k][1] != bi[start][1]:
                if k - start >= 2:
                    asc = sorted(tr[2] - 1 for tr in bi[start:k])
                    for a, b in zip(asc, asc[1:]):
                        out[a] = b
                    out[asc[-1]] = asc[0]
                start = k
    return tuple(out)


def right_complement_table(p: tuple[int, ...]) -> tuple[int, ...]:
    """Table of the factor R with p . R = D."""
    return mul_tables(inv_table(p), delta_table(len(p)))


def left_complement_table(p: tuple[int, ...]) -> tuple[int, ...]:
    """Table of the factor L with L . p = D."""
    return mul_tables(delta_table(len(p)), inv_table(p))


def starting_pairs(p: tuple[int, ...]) -> GeneratorSet:
    """All (t, s) with a(t,s) starting (equivalently finishing) the factor."""
    pairs = set()
    for cyc in table_cycles(p):
        for i, t in enumerate(cyc):
            for s in cyc[i + 1:]:
                pairs.add((t, s))
    return frozenset(pairs)


# ---------------------------------------------------------------------------
# the CanonicalFactor value type

@dataclass(frozen=True)
class CanonicalFactor:
    """An element of [0,1] = {A : e <= A <= D}, stored as its permutation.

    ``table`` is the 0-based internal form; use ``one_line()`` or
    ``cycles()`` for the 1-based views.
    """

    n: int
    table: tuple[int, ...]

    def one_line(self) -> tuple[int, ...]:
        """(pi(1), ..., pi(n)) with 1-based images."""
        return tuple(v + 1 for v in self.table)

    def cycles(self) -> list[Cycle]:
        return table_cycles(self.table)

    def is_identity(self) -> bool:
        return self.table == identity_table(self.n)

    def is_delta(self) -> bool:
        return self.table == delta_table(self.n)

    def word_length(self) -> int:
        return sum(len(c) - 1 for c in self.cycles())

    def __repr__(self):
        return f"CanonicalFactor({self.n}, {render_factor(self)!r})"


def _factor(n: int, table: tuple[int, ...]) -> CanonicalFactor:
    # internal constructor for tables already known to be canonical
    return CanonicalFactor(n, table)


def identity_factor(n: int) -> CanonicalFactor:
    return _factor(n, identity_table(n))


def delta_factor(n: int) -> CanonicalFactor:
    return _factor(n, delta_table(n))


def from_cycles(n: int, cycles: list[Cycle] | tuple[Cycle, ...]) -> CanonicalFactor:
    """Factor whose permutation is the product of the given descending cycles.

    Rejects cycle families that overlap, repeat indices, or cross.
    """
    cycs: list[Cycle] = []
    for cyc in cycles:
        cyc = tuple(cyc)
        if len(cyc) < 2:
            raise NotCanonicalFactorError(f"cycle {cyc} has fewer than 2 strands")
        if any(not 1 <= v <= n for v in cyc):
            raise NotCanonicalFactorError(f"cycle {cyc} out of range for n = {n}")
        if any(a <= b for a, b in zip(cyc, cyc[1:])):
            raise NotCanonicalFactorError(f"cycle {cyc} is not strictly decreasing")
        cycs.append(cyc)
    check_noncrossing(cycs, n)
    return _factor(n, cycles_to_table(cycs, n))


def from_permutation(n: int, table) -> CanonicalFactor:
    """Accept a permutation given as 1-based images (pi(1), ..., pi(n)).

    Accepts iff every orbit is a descending cycle and the orbits are
    pairwise non-crossing; otherwise raises NotCanonicalFactorError naming
    the violated orbit or crossing pair.
    """
    images = tuple(table)
    if sorted(images) != list(range(1, n + 1)):
        raise NotCanonicalFactorError(f"{images} is not a permutation of 1..{n}")
    p = tuple(v - 1 for v in images)
    check_noncrossing(table_cycles(p), n)
    return _factor(n, p)


def to_band_word(a: CanonicalFactor) -> BraidWord:
    """The positive word a(t_j,t_{j-1}) ... a(t_2,t_1) over the cycles.

    Cycles are emitted sorted by largest index, descending, so the output
    is deterministic.
    """
    letters = []
    for cyc in a.cycles():
        letters.extend(BandLetter(t, s) for t, s in zip(cyc, cyc[1:]))
    return BraidWord(a.n, tuple(letters))


_OBSTRUCTION_CASES = (
    "a(t,r) before a(s,q)",
    "a(s,q) before a(t,r)",
    "a(s,r) before a(t,s)",
    "a(t,s) before a(t,r)",
    "a(t,r) before a(s,r)",
    "a(t,s) twice",
)


def obstructing_pair(w: BraidWord) -> tuple[int, int, int] | None:
    """First obstructing pair in a positive word, or None.

    Returns (i, j, case) with 0-based letter positions i < j and the case
    number 1..6; scan order is i ascending then j ascending.  A positive
    word represents a canonical factor iff it has no obstructing pair.
    """
    if not w.is_positive():
        raise BraidError("obstructing pairs are defined for positive words only")
    ls = w.letters
    for i in range(len(ls)):
        t1, s1 = ls[i].t, ls[i].s
        for j in range(i + 1, len(ls)):
            t2, s2 = ls[j].t, ls[j].s
            case = 0
            if t1 == t2 and s1 == s2:
                case = 6
            elif t1 > t2 > s1 > s2:
                case = 1
            elif t2 > t1 > s2 > s1:
                case = 2
            elif s2 == t1 and t2 > t1 > s1:
                case = 3
            elif t1 == t2 and s1 > s2:
                case = 4
            elif s1 == s2 and t1 > t2:
                case = 5
            if case:
                return (i, j, case)
    return None


def meet(a: CanonicalFactor, b: CanonicalFactor) -> CanonicalFactor:
    """The maximal canonical factor below both a and b."""
    if a.n != b.n:
        raise BraidError(f"strand counts differ: {a.n} != {b.n}")
    return _factor(a.n, meet_tables(a.table, b.table))


def right_complement(a: CanonicalFactor) -> CanonicalFactor:
    """The factor R with a . R = D; iterating twice gives tau(a)."""
    return _factor(a.n, right_complement_table(a.table))


def left_complement(a: CanonicalFactor) -> CanonicalFactor:
    """The factor L with L . a = D."""
    return _factor(a.n, left_complement_table(a.table))


def starting_set(a: CanonicalFactor) -> GeneratorSet:
    """Generators that can begin (equivalently end) some word for a."""
    return starting_pairs(a.table)


finishing_set = starting_set


def complement_set(a: CanonicalFactor) -> GeneratorSet:
    """R(a) = S(right complement): generators x with a.x still in [0,1]."""
    return starting_pairs(right_complement_table(a.table))


def left_complement_set(a: CanonicalFactor) -> GeneratorSet:
    """L(a): generators x with x.a still in [0,1]."""
    return starting_pairs(left_complement_table(a.table))


def tau_factor(a: CanonicalFactor, k: int) -> CanonicalFactor:
    """Conjugate of a by D^k (indices shifted by k, mod n)."""
    return _factor(a.n, tau_table(a.table, k))


DEFAULT_ENUMERATION_CAP = 10


def enumerate_factors(n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> list[CanonicalFactor]:
    """All canonical factors of B_n, one per non-crossing partition of 1..n.

    The count is the n-th Catalan number (2n)!/(n!(n+1)!), so n is capped.
    """
    if n > cap:
        raise BraidError(f"enumeration cap exceeded: n = {n} > {cap}")

    def partitions(elems: tuple[int, ...]):
        # Non-crossing partitions of a sorted tuple: choose the block of the
        # first element; the rest splits into independent gap segments.
        if not elems:
            yield []
            return
        first, rest = elems[0], elems[1:]
        m = len(rest)
        for mask in range(1 << m):
            block = [first] + [rest[i] for i in range(m) if mask >> i & 1]
            gaps = []
            prev = []
            bi = 1
            for v in rest:
                if bi < len(block) and v == block[bi]:
                    gaps.append(tuple(prev))
                    prev = []
                    bi += 1
                else:
                    prev.append(v)
            gaps.append(tuple(prev))
            subparts = [list(partitions(g)) for g in gaps]
            def combine(i, acc):
                if i == len(subparts):
                    yield [block] + acc
                    return
                for sp in subparts[i]:
                    yield from combine(i + 1, acc + sp)
            yield from combine(0, [])

    out = []
    for part in partitions(tuple(range(1, n + 1))):
        cycles = [tuple(sorted(b, reverse=True)) for b in part if len(b) >= 2]
        out.append(_factor(n, cycles_to_table(cycles, n)))
    return out


# ---------------------------------------------------------------------------
# cycle-notation text form: "(5,4,1)(3,2)", identity "()"

_CYCLE_RE = re.compile(r"\(([\d,\s]*)\)")


def render_factor(a: CanonicalFactor) -> str:
    cycles = a.cycles()
    if not cycles:
        return "()"
    return "".join("(" + ",".join(str(v) for v in c) + ")" for c in cycles)


def parse_factor(text: str, n: int) -> CanonicalFactor:
    """Parse cycle notation; accepts "()" for the identity."""
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty factor", 0)
    if _CYCLE_RE.sub("", stripped).strip():
        raise ParseError(f"bad factor syntax {text!r}", 0)
    cycles = []
    for grp in _CYCLE_RE.findall(stripped):
        if not grp.strip():
            continue
        try:
            cyc = tuple(int(v) for v in grp.split(","))
        except ValueError:
            raise ParseError(f"bad cycle ({grp})", 0) from None
        cycles.append(cyc)
    return from_cycles(n, cycles)
