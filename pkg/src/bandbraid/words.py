"""Words in the band generators of the braid group B_n.

A band generator a(t,s) with n >= t > s >= 1 interchanges strands t and s
in front of all intervening strands.  The Artin generator sigma_i is the
special case a(i+1,i).  The fundamental word D = a(n,n-1) a(n-1,n-2) ... a(2,1)
plays the role Garside's half-twist plays in the Artin presentation; its
n-th power generates the center of B_n.

Convention (fixed globally): words act on strand positions left to right,
i.e. the first letter of a word is applied first.  Under this convention the
permutation of D sends i to i+1 (mod n), and conjugation by D shifts
generator indices up by one: D^-1 a(t,s) D = a(t+1,s+1) with indices mod n.

All indices in the public interface are 1-based.  Values are immutable and
all operations are pure functions.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BraidError, ParseError


@dataclass(frozen=True)
class BandLetter:
    """One signed band generator a(t,s)^sign with t > s."""

    t: int
    s: int
    sign: int = 1

    def __post_init__(self):
        if self.t <= self.s:
            raise BraidError(f"band letter requires t > s, got a({self.t},{self.s})")
        if self.s < 1:
            raise BraidError(f"strand index out of range: s = {self.s}")
        if self.sign not in (1, -1):
            raise BraidError(f"sign must be +1 or -1, got {self.sign}")

    def inverse(self) -> "BandLetter":
        return BandLetter(self.t, self.s, -self.sign)


@dataclass(frozen=True)
class BraidWord:
    """A sequence of band letters together with a fixed strand count n.

    The empty sequence is the identity word e.  Mixing words with
    different n is a hard error, never an implicit embedding.
    """

    n: int
    letters: tuple[BandLetter, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise BraidError(f"strand count must be >= 1, got {self.n}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for x in self.letters:
            if x.t > self.n:
                raise BraidError(
                    f"letter a({x.t},{x.s}) out of range for n = {self.n}"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def is_positive(self) -> bool:
        return all(x.sign == 1 for x in self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.n != other.n:
            raise BraidError(f"strand counts differ: {self.n} != {other.n}")
        return BraidWord(self.n, self.letters + other.letters)


def delta_word(n: int) -> BraidWord:
    """The fundamental word D = a(n,n-1) ... a(2,1); empty for n = 1."""
    return BraidWord(n, tuple(BandLetter(t, t - 1) for t in range(n, 1, -1)))


_TOKEN = re.compile(
    r"""(?: a\((?P<t>\d+),(?P<s>\d+)\)   # band generator
      | s(?P<i>\d+)                      # Artin generator
      | (?P<d>D)                         # fundamental word
      ) (?:\^(?P<p>-?\d+))? $""",
    re.VERBOSE,
)


def parse_word(text: str, n: int) -> BraidWord:
    """Parse whitespace-separated tokens into a BraidWord.

    Grammar: ``a(t,s)`` band generator, ``s<i>`` Artin generator, ``D``
    fundamental word; any token may carry ``^<integer>``, meaning that many
    copies (negative exponents give inverse letters).  No reduction is
    performed; Artin and D tokens are translated into band letters.
    """
    if n < 1:
        raise BraidError(f"strand count must be >= 1, got {n}")
    letters: list[BandLetter] = []
    pos = 0
    for chunk in re.finditer(r"\S+", text):
        tok = chunk.group()
        pos = chunk.start()
        m = _TOKEN.fullmatch(tok)
        if m is None:
            raise ParseError(f"bad token {tok!r}", pos)
        power = int(m.group("p")) if m.group("p") is not None else 1
        if m.group("d"):
            base = list(delta_word(n).letters)
        elif m.group("i") is not None:
            i = int(m.group("i"))
            if not 1 <= i <= n - 1:
                raise ParseError(f"Artin index s{i} out of range for n = {n}", pos)
            base = [BandLetter(i + 1, i)]
        else:
            t, s = int(m.group("t")), int(m.group("s"))
            if t == s:
                raise ParseError(f"degenerate generator a({t},{s})", pos)
            if t < s:
                raise ParseError(f"a({t},{s}) has t < s; write a({s},{t})", pos)
            if t > n or s < 1:
                raise ParseError(f"a({t},{s}) out of range for n = {n}", pos)
            base = [BandLetter(t, s)]
        if power < 0:
            base = [x.inverse() for x in reversed(base)]
            power = -power
        letters.extend(base * power)
    return BraidWord(n, tuple(letters))


def render_word(w: BraidWord) -> str:
    """Render one ``a(t,s)`` token per letter, caret only for ^-1."""
    return " ".join(
        f"a({x.t},{x.s})" + ("^-1" if x.sign < 0 else "") for x in w.letters
    )


def free_reduce(w: BraidWord) -> BraidWord:
    """Delete adjacent inverse pairs until none remain."""
    stack: list[BandLetter] = []
    for x in w.letters:
        if stack and stack[-1].t == x.t and stack[-1].s == x.s and stack[-1].sign == -x.sign:
            stack.pop()
        else:
            stack.append(x)
    return BraidWord(w.n, tuple(stack))


def invert_word(w: BraidWord) -> BraidWord:
    """Reversed sequence with all signs flipped."""
    return BraidWord(w.n, tuple(x.inverse() for x in reversed(w.letters)))


def band_to_artin(w: BraidWord) -> BraidWord:
    """Rewrite each a(t,s)^e as (s_{t-1}..s_{s+1}) s_s^e (s_{s+1}^-1..s_{t-1}^-1).

    The output uses only letters a(i+1,i) and has length
    sum of 2(t-s)-1 over the input letters.
    """
    out: list[BandLetter] = []
    for x in w.letters:
        out.extend(BandLetter(i + 1, i) for i in range(x.t - 1, x.s, -1))
        out.append(BandLetter(x.s + 1, x.s, x.sign))
        out.extend(BandLetter(i + 1, i, -1) for i in range(x.s + 1, x.t))
    return BraidWord(w.n, tuple(out))


def shift_index(i: int, k: int, n: int) -> int:
    """Index i shifted by k, wrapped into 1..n."""
    return (i + k - 1) % n + 1


def tau_letter(x: BandLetter, k: int, n: int) -> BandLetter:
    """tau^k of one letter: a(t,s) -> a(t+k,s+k) mod n, re-normalized."""
    t = shift_index(x.t, k, n)
    s = shift_index(x.s, k, n)
    if t < s:
        t, s = s, t
    return BandLetter(t, s, x.sign)


def tau_shift(w: BraidWord, k: int) -> BraidWord:
    """Conjugate of w by D^k, computed letterwise; tau^n is the identity."""
    return BraidWord(w.n, tuple(tau_letter(x, k, w.n) for x in w.letters))


def permutation_of(w: BraidWord) -> tuple[int, ...]:
    """Image of w in the symmetric group, as the tuple (pi(1), ..., pi(n)).

    Letters act left to right: the first letter is applied first.
    """
    img = list(range(1, w.n + 1))          # img[i-1] = pi(i)
    at = list(range(w.n))                  # at[v-1]  = position of value v
    for x in w.letters:
        i, j = at[x.t - 1], at[x.s - 1]
        img[i], img[j] = x.s, x.t
        at[x.t - 1], at[x.s - 1] = j, i
    return tuple(img)


def all_generators(n: int) -> list[BandLetter]:
    """All n(n-1)/2 positive band generators of B_n."""
    return [BandLetter(t, s) for t in range(2, n + 1) for s in range(1, t)]


def random_word(n: int, length: int, rng: random.Random) -> BraidWord:
    """Seeded uniform choice over signed band generators."""
    gens = all_generators(n)
    if not gens and length > 0:
        raise BraidError(f"B_{n} has no generators; only the empty word exists")
    letters = tuple(
        BandLetter(g.t, g.s, rng.choice((1, -1)))
        for g in (rng.choice(gens) for _ in range(length))
    )
    return BraidWord(n, letters)


def concat(n: int, parts: Iterable[Sequence[BandLetter]]) -> BraidWord:
    """Concatenate letter sequences into one word over B_n."""
    letters: list[BandLetter] = []
    for p in parts:
        letters.extend(p)
    return BraidWord(n, tuple(letters))
