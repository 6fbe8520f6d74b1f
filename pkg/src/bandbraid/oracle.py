"""Brute-force ground truth for the word problem, independent of the
normal-form machinery.

Positive words are explored under single applications of the defining
relations: commutation a(t,s)a(r,q) = a(r,q)a(t,s) when the index pairs do
not separate each other, and the triple a(t,s)a(s,r) = a(t,r)a(t,s) =
a(s,r)a(t,r) for t > s > r.  Both preserve word length, so every
positive-equivalence class is finite and breadth-first closure decides
positive equivalence exactly.  Signed words are compared by pulling the
inverse letters out as powers of the fundamental word and testing positive
equivalence of the remainders (the positive monoid embeds in the group).

Everything here is deliberately exponential and letter-level; it shares no
code with the canonical-factor or normal-form modules beyond the word types,
so agreement between the two routes is evidence, not tautology.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .errors import BraidError, CapExceededError
from .words import BandLetter, BraidWord, all_generators, delta_word, tau_letter

DEFAULT_BFS_CAP = 10**6

# a letter is a (t, s) pair in the positive-word encodings below
Letters = tuple[tuple[int, int], ...]


def _encode(w: BraidWord) -> Letters:
    if not w.is_positive():
        raise BraidError("positive word required")
    return tuple((x.t, x.s) for x in w.letters)


def _decode(n: int, ls: Letters) -> BraidWord:
    return BraidWord(n, tuple(BandLetter(t, s) for t, s in ls))


def _pair_rewrites(x: tuple[int, int], y: tuple[int, int]) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """All adjacent pairs one defining relation away from x y."""
    (t1, s1), (t2, s2) = x, y
    out = []
    if (t1 - t2) * (t1 - s2) * (s1 - t2) * (s1 - s2) > 0:
        out.append((y, x))
    # triple relation a(t,s)a(s,r) = a(t,r)a(t,s) = a(s,r)a(t,r), t > s > r
    if s1 == t2:                       # x y = a(t,s) a(s,r)
        t, s, r = t1, s1, s2
        out.append(((t, r), (t, s)))
        out.append(((s, r), (t, r)))
    if t1 == t2 and s1 < s2:           # x y = a(t,r) a(t,s)
        t, s, r = t1, s2, s1
        out.append(((t, s), (s, r)))
        out.append(((s, r), (t, r)))
    if s1 == s2 and t1 < t2:           # x y = a(s,r) a(t,r)
        t, s, r = t2, t1, s1
        out.append(((t, s), (s, r)))
        out.append(((t, r), (t, s)))
    return out


def _neighbors(ls: Letters) -> list[Letters]:
    out = []
    for i in range(len(ls) - 1):
        for a, b in _pair_rewrites(ls[i], ls[i + 1]):
            out.append(ls[:i] + (a, b) + ls[i + 2:])
    return out


def relation_neighbors(w: BraidWord) -> set[BraidWord]:
    """All positive words one defining-relation application away from w."""
    return {_decode(w.n, ls) for ls in _neighbors(_encode(w))}


@dataclass(frozen=True)
class EquivalenceClass:
    """The full positive-equivalence closure of a representative."""

    representative: BraidWord
    members: frozenset[Letters]
    radius: int  # maximum chain length explored (closure depth)


def closure(w: BraidWord, cap: int = DEFAULT_BFS_CAP) -> EquivalenceClass:
    """Breadth-first closure of w under the defining relations."""
    start = _encode(w)
    seen = {start}
    frontier = [start]
    radius = 0
    while frontier:
        nxt = []
        for ls in frontier:
            for m in _neighbors(ls):
                if m not in seen:
                    seen.add(m)
                    if len(seen) > cap:
                        raise CapExceededError(f"closure cap {cap} exceeded")
                    nxt.append(m)
        if nxt:
            radius += 1
        frontier = nxt
    return EquivalenceClass(w, frozenset(seen), radius)


def positively_equivalent(p: BraidWord, q: BraidWord, cap: int = DEFAULT_BFS_CAP) -> bool:
    """Decide p = q in the positive monoid by bidirectional closure search."""
    if p.n != q.n:
        raise BraidError(f"strand counts differ: {p.n} != {q.n}")
    a, b = _encode(p), _encode(q)
    if len(a) != len(b):
        return False
    if a == b:
        return True
    seen_a, seen_b = {a}, {b}
    front_a, front_b = [a], [b]
    visited = 2
    while front_a and front_b:
        if len(front_a) > len(front_b):
            front_a, front_b = front_b, front_a
            seen_a, seen_b = seen_b, seen_a
        nxt = []
        for ls in front_a:
            for m in _neighbors(ls):
                if m in seen_b:
                    return True
                if m not in seen_a:
                    seen_a.add(m)
                    visited += 1
                    if visited > cap:
                        raise CapExceededError(f"search cap {cap} exceeded")
                    nxt.append(m)
        front_a = nxt
    return False


@lru_cache(maxsize=None)
def _delta_tail(n: int, t: int, s: int, cap: int = DEFAULT_BFS_CAP) -> Letters:
    """The positive word M with a(t,s) M positively equivalent to D.

    Found by brute-force search through D's equivalence class for a member
    beginning with a(t,s); existence is part of what the D-word rewritability
    tests verify.
    """
    start = _encode(delta_word(n))
    seen = {start}
    queue = deque([start])
    while queue:
        ls = queue.popleft()
        if ls[0] == (t, s):
            return ls[1:]
        for m in _neighbors(ls):
            if m not in seen:
                seen.add(m)
                if len(seen) > cap:
                    raise CapExceededError(f"closure cap {cap} exceeded")
                queue.append(m)
    raise BraidError(f"no D-word starts with a({t},{s})")  # unreachable


def delta_positive(w: BraidWord) -> tuple[int, BraidWord]:
    """Letter-level rewrite of w as D^p Q with Q positive.

    Each a(t,s)^-1 becomes D^-1 tau^-1(M) with M the brute-force tail from
    _delta_tail; the D^-1's commute leftward, tau^-1-shifting every letter
    they pass.
    """
    n = w.n
    negs_after = 0
    shifts = []
    for x in reversed(w.letters):
        shifts.append(negs_after)
        if x.sign < 0:
            negs_after += 1
    shifts.reverse()
    out: list[BandLetter] = []
    for x, m in zip(w.letters, shifts):
        if x.sign > 0:
            out.append(tau_letter(x, -m, n))
        else:
            tail = _delta_tail(n, x.t, x.s)
            out.extend(
                tau_letter(BandLetter(t, s), -(m + 1), n) for t, s in tail
            )
    return -negs_after, BraidWord(n, tuple(out))


def equal_via_oracle(v: BraidWord, w: BraidWord, cap: int = DEFAULT_BFS_CAP) -> bool:
    """Group equality by brute force; intended for desk scale only."""
    if v.n != w.n:
        raise BraidError(f"strand counts differ: {v.n} != {w.n}")
    p, pw = delta_positive(v)
    q, qw = delta_positive(w)
    if p > q:
        p, q, pw, qw = q, p, qw, pw
    d = delta_word(v.n)
    padded = BraidWord(v.n, d.letters * (q - p) + qw.letters)
    return positively_equivalent(pw, padded, cap)


def _partition(words: list[Letters]) -> dict[Letters, int]:
    """Class id for each word, by union over single relation applications."""
    idx = {wd: i for i, wd in enumerate(words)}
    parent = list(range(len(words)))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for wd, i in idx.items():
        for m in _neighbors(wd):
            j = idx.get(m)
            if j is not None:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    return {wd: find(i) for wd, i in idx.items()}


def positive_words(n: int, length: int) -> list[Letters]:
    """All positive words of the exact length over the generators of B_n."""
    gens = [(g.t, g.s) for g in all_generators(n)]
    return [tuple(c) for c in product(gens, repeat=length)]


def cancellation_check(n: int, bound: int) -> dict:
    """Exhaustively verify left and right cancellation at desk scale.

    For every generator a and all positive X, Y with |X| = |Y| <= bound:
    aX = aY implies X = Y, and Xa = Ya implies X = Y.  Returns a report
    with the number of checks and any counterexamples (expected none).
    """
    gens = [(g.t, g.s) for g in all_generators(n)]
    report = {"n": n, "bound": bound, "checked": 0, "counterexamples": []}
    for length in range(1, bound + 1):
        words = positive_words(n, length)
        small = _partition(words)
        big = _partition(positive_words(n, length + 1))
        by_class: dict[int, list[Letters]] = {}
        for wd, cid in big.items():
            by_class.setdefault(cid, []).append(wd)
        for members in by_class.values():
            for g in gens:
                left = [wd[1:] for wd in members if wd[0] == g]
                right = [wd[:-1] for wd in members if wd[-1] == g]
                for group in (left, right):
                    if len(group) < 2:
                        continue
                    report["checked"] += len(group)
                    base = small[group[0]]
                    for other in group[1:]:
                        if small[other] != base:
                            report["counterexamples"].append(
                                (g, group[0], other)
                            )
    return report
