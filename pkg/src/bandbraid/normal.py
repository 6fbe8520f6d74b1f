"""Left-canonical form D^u A_1 ... A_k and the word-problem decision.

Every braid has a unique representative D^u A_1 ... A_k where each A_i is a
canonical factor other than e and D and every adjacent pair is left-weighted
(R(A_i) and S(A_{i+1}) disjoint).  inf = u, sup = u + k, and two words are
equal in the group iff their normal forms agree componentwise.

The normalization sweep works on raw permutation tables (see
bandbraid.factors) and follows the standard four steps: pull all inverse
letters out as powers of D^-1, split the positive remainder into factors,
left-weight adjacent pairs with backward re-propagation, then absorb
leading D's and trailing identities into the exponent.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BraidError
from .factors import (
    CanonicalFactor,
    _factor,
    delta_table,
    identity_table,
    inv_table,
    meet_tables,
    mul_tables,
    render_factor,
    right_complement_table,
    starting_pairs,
    table_cycles,
    tau_table,
    to_band_word,
)
from .words import BandLetter, BraidWord


@dataclass(frozen=True)
class NormalForm:
    """The unique left-canonical representative of a braid."""

    n: int
    u: int
    factors: tuple[CanonicalFactor, ...]

    @property
    def inf(self) -> int:
        return self.u

    @property
    def sup(self) -> int:
        return self.u + len(self.factors)

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def key(self) -> tuple:
        """Hashable canonical key (componentwise equality)."""
        return (self.n, self.u) + tuple(a.table for a in self.factors)

    def __repr__(self):
        return f"NormalForm({self.n}, {render_normal_form(self)!r})"


def inf_sup(nf: NormalForm) -> tuple[int, int]:
    return (nf.inf, nf.sup)


def render_normal_form(nf: NormalForm) -> str:
    """Text form ``D^u . (...) . (...)``; a bare ``D^u .`` for D powers."""
    parts = [f"D^{nf.u} ."]
    parts.extend(render_factor(a) for a in nf.factors)
    return " ".join(parts)


# ---------------------------------------------------------------------------
# raw-table pipeline

def _negative_letter_table(t: int, s: int, n: int) -> tuple[int, ...]:
    # a(t,s)^-1 = D^-1 . [cycles (n,...,t+1,t,s-1,...,1)(t-1,...,s)]
    p = list(range(n))
    big = list(range(n - 1, t - 2, -1)) + list(range(s - 2, -1, -1))
    for a, b in zip(sorted(big), sorted(big)[1:]):
        p[a] = b
    if len(big) >= 2:
        p[max(big)] = min(big)
    small = list(range(t - 2, s - 2, -1))
    if len(small) >= 2:
        asc = sorted(small)
        for a, b in zip(asc, asc[1:]):
            p[a] = b
        p[asc[-1]] = asc[0]
    return tuple(p)


def _word_to_delta_factors(w: BraidWord) -> tuple[int, list[tuple[int, ...]]]:
    """(p, factor tables) with the word equal to D^p times the factors.

    Each positive letter becomes a transposition factor and each negative
    letter a D^-1 plus its complementary factor; the D^-1's are commuted to
    the far left, which applies tau^-m to a factor with m negative letters
    to its right.
    """
    n = w.n
    negs_after = 0
    shifts = []
    for x in reversed(w.letters):
        shifts.append(negs_after)
        if x.sign < 0:
            negs_after += 1
    shifts.reverse()
    tables = []
    for x, m in zip(w.letters, shifts):
        if x.sign > 0:
            p = list(range(n))
            p[x.t - 1], p[x.s - 1] = x.s - 1, x.t - 1
            base = tuple(p)
        else:
            base = _negative_letter_table(x.t, x.s, n)
        tables.append(tau_table(base, -m))
    return -negs_after, tables


def _weight_tables(a, b, identity):
    """Left-weight one adjacent pair of tables; returns (a', b', changed)."""
    c = meet_tables(right_complement_table(a), b)
    if c == identity:
        return a, b, False
    return mul_tables(a, c), mul_tables(inv_table(c), b), True


def _sweep(n: int, u: int, tables: list[tuple[int, ...]]) -> tuple[int, list[tuple[int, ...]]]:
    """Left-weight the whole factor sequence, then absorb D's and e's."""
    ident = identity_table(n)
    delta = delta_table(n)
    k = len(tables)
    for i in range(k - 1):
        a, b, changed = _weight_tables(tables[i], tables[i + 1], ident)
        tables[i], tables[i + 1] = a, b
        j = i - 1
        while changed and j >= 0:
            a, b, changed = _weight_tables(tables[j], tables[j + 1], ident)
            tables[j], tables[j + 1] = a, b
            j -= 1
    lo, hi = 0, k
    while lo < hi and tables[lo] == delta:
        lo += 1
    while lo < hi and tables[hi - 1] == ident:
        hi -= 1
    return u + lo, tables[lo:hi]


def _normalize(n: int, u: int, tables: list[tuple[int, ...]]) -> NormalForm:
    u, tabs = _sweep(n, u, tables)
    return NormalForm(n, u, tuple(_factor(n, t) for t in tabs))


# ---------------------------------------------------------------------------
# public operations

def to_delta_positive(w: BraidWord) -> tuple[int, BraidWord]:
    """Rewrite w as D^p Q with Q positive; returns (p, Q) without weighting."""
    p, tables = _word_to_delta_factors(w)
    letters: list[BandLetter] = []
    for t in tables:
        letters.extend(to_band_word(_factor(w.n, t)).letters)
    return p, BraidWord(w.n, tuple(letters))


def left_weight_pair(a: CanonicalFactor, b: CanonicalFactor) -> tuple[CanonicalFactor, CanonicalFactor]:
    """Convert the product a.b into its left-weighted form (a', b')."""
    if a.n != b.n:
        raise BraidError(f"strand counts differ: {a.n} != {b.n}")
    at, bt, _ = _weight_tables(a.table, b.table, identity_table(a.n))
    return _factor(a.n, at), _factor(a.n, bt)


def is_left_weighted(a: CanonicalFactor, b: CanonicalFactor) -> bool:
    """R(a) and S(b) disjoint, i.e. nothing of b can be pulled into a."""
    return not (
        starting_pairs(right_complement_table(a.table)) & starting_pairs(b.table)
    )


def left_canonical_form(w: BraidWord) -> NormalForm:
    """The unique left-canonical form of the braid represented by w."""
    p, tables = _word_to_delta_factors(w)
    return _normalize(w.n, p, tables)


def equal(v: BraidWord, w: BraidWord) -> bool:
    """Word-problem decision: equal iff left-canonical forms coincide."""
    if v.n != w.n:
        raise BraidError(f"strand counts differ: {v.n} != {w.n}")
    return left_canonical_form(v).key() == left_canonical_form(w).key()


def invert_normal_form(nf: NormalForm) -> NormalForm:
    """Normal form of the inverse.

    D^u A_1...A_k inverts to D^-(u+k) tau^-(u+k)(R(A_k)) ... tau^-(u+1)(R(A_1)),
    which is already left-weighted.
    """
    k = len(nf.factors)
    tables = [
        tau_table(right_complement_table(nf.factors[i].table), -(nf.u + i + 1))
        for i in range(k - 1, -1, -1)
    ]
    return NormalForm(nf.n, -(nf.u + k), tuple(_factor(nf.n, t) for t in tables))


def multiply(a: NormalForm, b: NormalForm) -> NormalForm:
    """Normal form of the product a.b."""
    if a.n != b.n:
        raise BraidError(f"strand counts differ: {a.n} != {b.n}")
    tables = [tau_table(f.table, b.u) for f in a.factors]
    tables.extend(f.table for f in b.factors)
    return _normalize(a.n, a.u + b.u, tables)


def normal_form_word(nf: NormalForm) -> BraidWord:
    """A word representing nf: |u| copies of D (inverted if u < 0), then factors."""
    from .words import delta_word, invert_word

    d = delta_word(nf.n)
    if nf.u < 0:
        d = invert_word(d)
    letters: list[BandLetter] = []
    for _ in range(abs(nf.u)):
        letters.extend(d.letters)
    for f in nf.factors:
        letters.extend(to_band_word(f).letters)
    return BraidWord(nf.n, tuple(letters))


def normal_form_of_factor(a: CanonicalFactor) -> NormalForm:
    """Normal form of a single canonical factor."""
    if a.is_delta():
        return NormalForm(a.n, 1, ())
    if a.is_identity():
        return NormalForm(a.n, 0, ())
    return NormalForm(a.n, 0, (a,))
