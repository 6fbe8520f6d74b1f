"""Cycling, decycling, super summit sets, and the conjugacy decision.

Cycling moves the first canonical factor (tau-shifted) to the back,
decycling the last to the front; neither decreases inf nor increases sup.
Iterating them reaches a conjugate with maximal inf and minimal sup; the
set of all such conjugates (the super summit set) is a finite conjugacy
invariant, closed under conjugation by canonical factors.  Two braids are
conjugate iff their super summit sets intersect, and a breadth-first
closure over factor conjugations decides this while assembling an explicit
conjugating word.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import BraidError, CapExceededError
from .factors import CanonicalFactor, enumerate_factors, tau_factor, to_band_word
from .normal import (
    NormalForm,
    _normalize,
    invert_normal_form,
    left_canonical_form,
    multiply,
    normal_form_of_factor,
)
from .words import BandLetter, BraidWord, invert_word

DEFAULT_CYCLING_CAP = 10**6
DEFAULT_SSS_CAP = 10**6


@dataclass(frozen=True)
class SuperSummitSet:
    """All conjugates achieving maximal inf and minimal sup at once."""

    n: int
    inf: int
    sup: int
    elements: dict  # key -> NormalForm

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, nf: NormalForm) -> bool:
        return nf.key() in self.elements

    def __iter__(self):
        return iter(self.elements.values())


def cycle_once(nf: NormalForm) -> NormalForm:
    """c(W) = D^u A_2 ... A_k tau^-u(A_1), re-normalized."""
    if not nf.factors:
        return nf
    tables = [f.table for f in nf.factors[1:]]
    tables.append(tau_factor(nf.factors[0], -nf.u).table)
    return _normalize(nf.n, nf.u, tables)


def decycle_once(nf: NormalForm) -> NormalForm:
    """d(W) = D^u tau^u(A_k) A_1 ... A_{k-1}, re-normalized."""
    if not nf.factors:
        return nf
    tables = [tau_factor(nf.factors[-1], nf.u).table]
    tables.extend(f.table for f in nf.factors[:-1])
    return _normalize(nf.n, nf.u, tables)


def _cycling_conjugator(nf: NormalForm) -> BraidWord:
    # c(W) = x^-1 W x with x = tau^-u(A_1)
    return to_band_word(tau_factor(nf.factors[0], -nf.u))


def _decycling_conjugator(nf: NormalForm) -> BraidWord:
    # d(W) = x^-1 W x with x = A_k^-1
    return invert_word(to_band_word(nf.factors[-1]))


def summit_representative(
    nf: NormalForm, cap: int = DEFAULT_CYCLING_CAP
) -> tuple[NormalForm, BraidWord]:
    """A super-summit element conjugate to nf, plus the conjugating word z.

    z satisfies z^-1 . nf . z = result.  Cycling is iterated with a seen-set
    that restarts whenever inf increases (a repeat at fixed inf certifies
    that inf is maximal); decycling then does the symmetric job for sup.
    """
    conj: list[BandLetter] = []
    steps = 0
    cur = nf
    seen = {cur.key()}
    while cur.factors:
        nxt = cycle_once(cur)
        conj.extend(_cycling_conjugator(cur).letters)
        steps += 1
        if steps > cap:
            raise CapExceededError(f"cycling cap {cap} exceeded")
        if nxt.inf > cur.inf:
            seen = {nxt.key()}
        elif nxt.key() in seen:
            cur = nxt
            break
        else:
            seen.add(nxt.key())
        cur = nxt
    seen = {cur.key()}
    while cur.factors:
        nxt = decycle_once(cur)
        conj.extend(_decycling_conjugator(cur).letters)
        steps += 1
        if steps > cap:
            raise CapExceededError(f"decycling cap {cap} exceeded")
        if nxt.sup < cur.sup:
            seen = {nxt.key()}
        elif nxt.key() in seen:
            cur = nxt
            break
        else:
            seen.add(nxt.key())
        cur = nxt
    return cur, BraidWord(nf.n, tuple(conj))


def _conjugate_by_factor(nf: NormalForm, fac_nf: NormalForm, fac_inv: NormalForm) -> NormalForm:
    return multiply(fac_inv, multiply(nf, fac_nf))


def super_summit_set(
    nf: NormalForm,
    cap: int = DEFAULT_SSS_CAP,
    cycling_cap: int = DEFAULT_CYCLING_CAP,
    stop_key=None,
) -> tuple[SuperSummitSet, dict]:
    """Breadth-first closure of the super summit set of nf.

    Returns the set and a dict mapping each element key to the conjugating
    word z (from the *original* nf: z^-1 . nf . z = element).  If stop_key
    is given, the closure stops early as soon as that key is found.
    """
    rep, z0 = summit_representative(nf, cycling_cap)
    target = (rep.inf, rep.sup)
    fac_pairs = []
    for a in enumerate_factors(nf.n):
        if a.is_identity():
            continue
        fnf = normal_form_of_factor(a)
        fac_pairs.append((a, fnf, invert_normal_form(fnf)))
    elements = {rep.key(): rep}
    conj = {rep.key(): z0}
    queue = deque([rep])
    while queue:
        if stop_key is not None and stop_key in elements:
            break
        x = queue.popleft()
        zx = conj[x.key()]
        for a, fnf, finv in fac_pairs:
            y = _conjugate_by_factor(x, fnf, finv)
            if (y.inf, y.sup) != target:
                continue
            ky = y.key()
            if ky in elements:
                continue
            if len(elements) >= cap:
                raise CapExceededError(
                    f"super summit set cap {cap} exceeded (partial size {len(elements)})"
                )
            elements[ky] = y
            conj[ky] = zx * to_band_word(a)
            queue.append(y)
    return SuperSummitSet(nf.n, target[0], target[1], elements), conj


def are_conjugate(
    v: BraidWord,
    w: BraidWord,
    sss_cap: int = DEFAULT_SSS_CAP,
    cycling_cap: int = DEFAULT_CYCLING_CAP,
) -> tuple[bool, BraidWord | None]:
    """Decide conjugacy; on success also return z with z^-1 . v . z = w.

    Raises CapExceededError (undecided) if a budget runs out.
    """
    if v.n != w.n:
        raise BraidError(f"strand counts differ: {v.n} != {w.n}")
    nf_v = left_canonical_form(v)
    nf_w = left_canonical_form(w)
    rep_v, z_v = summit_representative(nf_v, cycling_cap)
    rep_w, z_w = summit_representative(nf_w, cycling_cap)
    if (rep_v.inf, rep_v.sup) != (rep_w.inf, rep_w.sup):
        return False, None
    sss, conj = super_summit_set(
        nf_v, cap=sss_cap, cycling_cap=cycling_cap, stop_key=rep_w.key()
    )
    if rep_w.key() not in sss.elements:
        return False, None
    # z_v^-1 v z_v = rep_v;  c^-1 rep_v c = rep_w;  z_w^-1 w z_w = rep_w
    c = conj[rep_w.key()]
    z = c * invert_word(z_w)
    return True, z


def orbit_statistics(sss: SuperSummitSet) -> dict:
    """Orbit structure of the set under cycling and decycling.

    Each map sends the set into itself; orbits are the weakly-connected
    components of its functional graph.  Returns sorted component size
    lists for cycling, decycling, and the two combined.
    """

    def components(step) -> list[int]:
        parent = {k: k for k in sss.elements}

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for k, x in sss.elements.items():
            ky = step(x).key()
            if ky in parent:
                ra, rb = find(k), find(ky)
                if ra != rb:
                    parent[ra] = rb
        sizes: dict = {}
        for k in parent:
            r = find(k)
            sizes[r] = sizes.get(r, 0) + 1
        return sorted(sizes.values())

    both = {}
    parent = {k: k for k in sss.elements}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for k, x in sss.elements.items():
        for step in (cycle_once, decycle_once):
            ky = step(x).key()
            if ky in parent:
                ra, rb = find(k), find(ky)
                if ra != rb:
                    parent[ra] = rb
    for k in parent:
        r = find(k)
        both[r] = both.get(r, 0) + 1
    return {
        "cycling_orbits": components(cycle_once),
        "decycling_orbits": components(decycle_once),
        "combined_orbits": sorted(both.values()),
    }
