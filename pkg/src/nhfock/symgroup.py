"""Symmetric-group combinatorics on one-line tuples.

A permutation ``w`` of {1..n} is the tuple ``(w(1), ..., w(n))``. Products
compose right-to-left: ``mul(u, v)(j) == u(v(j))``. The simple reflection
``s_i`` swaps i and i+1, so ``mul(w, s(n, i))`` swaps positions i, i+1 of
``w`` while ``mul(s(n, i), w)`` swaps the values i, i+1.

>>> word_to_perm(3, [1, 2])
(2, 3, 1)
>>> length((3, 2, 1))
3
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Sequence

Perm = tuple[int, ...]
Permutation = Perm
Word = tuple[int, ...]  # indices i of simple reflections s_i, read left to right


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def is_permutation(images: Sequence[int]) -> bool:
    return sorted(images) == list(range(1, len(images) + 1))


def s(n: int, i: int) -> Perm:
    """The simple transposition s_i in S_n."""
    if not 1 <= i < n:
        raise ValueError(f"s_{i} does not exist in S_{n}")
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def mul(u: Perm, v: Perm) -> Perm:
    if len(u) != len(v):
        raise ValueError("permutations of different sizes")
    return tuple(u[j - 1] for j in v)


def inverse(w: Perm) -> Perm:
    inv = [0] * len(w)
    for pos, val in enumerate(w, start=1):
        inv[val - 1] = pos
    return tuple(inv)


def length(w: Perm) -> int:
    """Coxeter length, i.e. the number of inversions."""
    n = len(w)
    return sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])


def word_to_perm(n: int, word: Iterable[int]) -> Perm:
    w = identity(n)
    for i in word:
        w = mul(w, s(n, i))
    return w


@lru_cache(maxsize=None)
def reduced_word(w: Perm) -> tuple[int, ...]:
    """A reduced word for ``w`` found by repeatedly stripping left descents.

    >>> reduced_word((3, 2, 1))
    (1, 2, 1)
    """
    word = []
    n = len(w)
    pos = {val: p for p, val in enumerate(w)}
    cur = list(w)
    while True:
        for i in range(1, n):
            # s_i w is shorter iff the value i+1 sits left of the value i
            if pos[i + 1] < pos[i]:
                word.append(i)
                a, b = pos[i], pos[i + 1]
                cur[a], cur[b] = i + 1, i
                pos[i], pos[i + 1] = b, a
                break
        else:
            return tuple(word)


def is_reduced(word: Sequence[int], n: int | None = None) -> bool:
    """True iff ``word`` has length equal to the Coxeter length of its product."""
    if not word:
        return True
    n = n if n is not None else max(word) + 1
    return len(word) == length(word_to_perm(n, word))


def longest_element(n: int) -> Perm:
    if n < 1:
        raise ValueError("longest_element needs n >= 1")
    return tuple(range(n, 0, -1))


def mul_length_additive(u: Perm, v: Perm) -> Perm | None:
    """``u*v`` if lengths add, else None (the product of divided differences vanishes)."""
    w = mul(u, v)
    return w if length(w) == length(u) + length(v) else None


def embed(w: Perm, n_total: int, offset: int) -> Perm:
    """Place ``w`` in S_{n_total} acting on {offset+1, ..., offset+len(w)}."""
    k = len(w)
    if offset < 0 or offset + k > n_total:
        raise ValueError(f"cannot place S_{k} at offset {offset} inside S_{n_total}")
    return (tuple(range(1, offset + 1)) + tuple(x + offset for x in w)
            + tuple(range(offset + k + 1, n_total + 1)))


def all_perms(n: int) -> list[Perm]:
    return sorted(itertools.permutations(range(1, n + 1)), key=lambda w: (length(w), w))


def young_subgroup(parts: Sequence[int]) -> list[Perm]:
    """All elements of S_{parts[0]} x S_{parts[1]} x ... inside S_{sum(parts)}."""
    n = sum(parts)
    blocks = []
    start = 0
    for p in parts:
        blocks.append([tuple(x + start for x in w) for w in itertools.permutations(range(1, p + 1))])
        start += p
    out = [tuple(itertools.chain.from_iterable(choice)) for choice in itertools.product(*blocks)]
    return sorted((w if w else identity(n)) for w in out)


def in_young_subgroup(w: Perm, n: int, m: int) -> bool:
    return all(x <= n for x in w[:n])


def coset_reps_last(n: int) -> list[Perm]:
    """Representatives e, s_n, s_{n-1}s_n, ..., s_1...s_n of S_{n+1}/S_n.

    Each ``r`` is minimal in ``r*S_n``; the r-th one has length r.
    """
    if n < 0:
        raise ValueError("coset_reps_last needs n >= 0")
    return [word_to_perm(n + 1, range(n + 1 - r, n + 1)) for r in range(n + 1)]


@lru_cache(maxsize=None)
def left_coset_reps(n: int, m: int) -> tuple[Perm, ...]:
    """Minimal representatives ``v`` of ``v*(S_n x S_m)`` in S_{n+m}.

    For every such ``v`` and ``u`` in the Young subgroup, ``len(v*u) = len(v) + len(u)``.
    A representative is a permutation increasing on positions 1..n and on n+1..n+m.
    """
    if n < 0 or m < 0:
        raise ValueError("need n, m >= 0")
    N = n + m
    reps = []
    for first in itertools.combinations(range(1, N + 1), n):
        rest = tuple(x for x in range(1, N + 1) if x not in first)
        reps.append(first + rest)
    return tuple(sorted(reps, key=lambda w: (length(w), w)))


@lru_cache(maxsize=None)
def coset_reps_parabolic(n: int, m: int) -> tuple[Perm, ...]:
    """Minimal representatives ``r`` of ``(S_n x S_m)*r`` in S_{n+m}."""
    return tuple(sorted((inverse(v) for v in left_coset_reps(n, m)),
                        key=lambda w: (length(w), w)))


def factor_left(w: Perm, n: int) -> tuple[Perm, Perm]:
    """Split ``w = v*u`` with ``v`` a left coset representative and ``u`` in S_n x S_m."""
    v = tuple(sorted(w[:n])) + tuple(sorted(w[n:]))
    u = mul(inverse(v), w)
    return v, u


def render(w: Perm) -> str:
    return "[" + ",".join(map(str, w)) + "]"
