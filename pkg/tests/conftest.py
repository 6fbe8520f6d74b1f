"""Shared helpers for the test suite."""

import random

import pytest
from hypothesis import settings

settings.register_profile("suite", deadline=None, derandomize=True)
settings.load_profile("suite")

from bandbraid import BandLetter, BraidWord, random_word
from bandbraid.oracle import _pair_rewrites


def mutate_word(w: BraidWord, rng: random.Random, steps: int) -> BraidWord:
    """Rewrite w into another word for the same group element.

    Each step is a free insertion, a free cancellation, or a single
    application of a defining relation to an adjacent pair (applied to the
    inverted pair when both letters are negative).
    """
    letters = list(w.letters)
    gens = [
        BandLetter(t, s) for t in range(2, w.n + 1) for s in range(1, t)
    ]
    for _ in range(steps):
        moves = []
        if gens:
            moves.append("insert")
        for i in range(len(letters) - 1):
            x, y = letters[i], letters[i + 1]
            if x.t == y.t and x.s == y.s and x.sign == -y.sign:
                moves.append(("cancel", i))
            if x.sign == 1 and y.sign == 1:
                for a, b in _pair_rewrites((x.t, x.s), (y.t, y.s)):
                    moves.append(("rewrite", i, a, b, 1))
            if x.sign == -1 and y.sign == -1:
                # (y x)^-1 rewrites give x^-1 y^-1 = b^-1 a^-1
                for a, b in _pair_rewrites((y.t, y.s), (x.t, x.s)):
                    moves.append(("rewrite", i, b, a, -1))
        move = rng.choice(moves)
        if move == "insert":
            g = rng.choice(gens)
            sign = rng.choice((1, -1))
            pos = rng.randint(0, len(letters))
            letters[pos:pos] = [
                BandLetter(g.t, g.s, sign),
                BandLetter(g.t, g.s, -sign),
            ]
        elif move[0] == "cancel":
            del letters[move[1]:move[1] + 2]
        else:
            _, i, a, b, sign = move
            letters[i] = BandLetter(a[0], a[1], sign)
            letters[i + 1] = BandLetter(b[0], b[1], sign)
    return BraidWord(w.n, tuple(letters))


@pytest.fixture
def rng():
    return random.Random(20240817)


def seeded_words(n: int, count: int, max_len: int, seed: int):
    r = random.Random(seed)
    return [random_word(n, r.randint(0, max_len), r) for _ in range(count)]
