"""
Exact braid words, the Artin action on a free group, and half-twists.

Conventions used everywhere in the package:

* A braid word on ``n`` strands is a tuple of signed integers; ``+i`` is the
  generator sigma_i (positive, counterclockwise exchange of the punctures in
  positions i and i+1) and ``-i`` its inverse.
* Composition is left to right: in ``u * v`` the braid ``u`` happens first.
* Braids act on the right on the free group F_n = <x_1, ..., x_n>.  The
  generator sigma_i sends

      x_i     -> x_i x_{i+1} x_i^-1
      x_{i+1} -> x_i

  and fixes the other generators.  With these choices the full twist acts on
  every generator as conjugation by the boundary word d = x_1 x_2 ... x_n,
  ``x_j . Delta^2 = d x_j d^-1``.
* Two braids are equal iff they induce the same automorphism of F_n (the
  action is faithful), which gives the word problem used by ``are_equal``.

Half-twists along paths
-----------------------

A :class:`PuncturePath` joins punctures ``s < t`` and carries one flag per
intermediate puncture ``r`` (``s < r < t``), ``"b"`` or ``"a"``.  The
half-twist is the band word

    H = w . sigma_s . w^-1,   w = sigma_{t-1}^e_{t-1} ... sigma_{s+1}^e_{s+1}

with ``e_r = +1`` for ``"b"`` and ``e_r = -1`` for ``"a"``.  The all-``"b"``
path is the *below* path used for the Z_ij symbols, so for instance the
below path from 1 to 3 gives ``sigma_2 sigma_1 sigma_2^-1``.  A global mirror
(swapping every sign) is the only other consistent reading.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence


def _reduce(letters: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def _invert(letters: Sequence[int]) -> tuple[int, ...]:
    return tuple(-x for x in reversed(letters))


@dataclass(frozen=True)
class FreeWord:
    """A freely reduced word in x_1..x_rank (``+j`` is x_j, ``-j`` its inverse)."""

    rank: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be positive")
        for x in self.letters:
            if x == 0 or abs(x) > self.rank:
                raise ValueError(f"letter {x} out of range for rank {self.rank}")
        object.__setattr__(self, "letters", _reduce(self.letters))

    @classmethod
    def generator(cls, rank: int, j: int) -> FreeWord:
        return cls(rank, (j,))

    @classmethod
    def boundary(cls, rank: int) -> FreeWord:
        """The loop d = x_1 x_2 ... x_rank around all punctures."""
        return cls(rank, tuple(range(1, rank + 1)))

    def __mul__(self, other: FreeWord) -> FreeWord:
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        return FreeWord(self.rank, self.letters + other.letters)

    def inverse(self) -> FreeWord:
        return FreeWord(self.rank, _invert(self.letters))

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(f"x{abs(x)}" + ("^-1" if x < 0 else "") for x in self.letters)


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n}; ``images[i-1]`` is the image of ``i``.

    Products are left to right, matching braid composition:
    ``(p * q)(i) = q(p(i))``.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> Permutation:
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return Permutation(tuple(other(self(i)) for i in range(1, self.degree + 1)))

    def is_identity(self) -> bool:
        return all(self(i) == i for i in range(1, self.degree + 1))

    def moved(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.degree + 1) if self(i) != i)

    def is_transposition(self) -> bool:
        m = self.moved()
        return len(m) == 2 and self(m[0]) == m[1]

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for i in range(1, self.degree + 1):
            if i in seen or self(i) == i:
                continue
            cyc = [i]
            seen.add(i)
            j = self(i)
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def __str__(self):
        cyc = self.cycles()
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"


@dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators of B_n (signed integers, left to right)."""

    strand_count: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strand_count < 1:
            raise ValueError("strand_count must be positive")
        letters = tuple(int(x) for x in self.letters)
        for x in letters:
            if x == 0 or abs(x) >= self.strand_count:
                raise ValueError(
                    f"generator {x} out of range for B_{self.strand_count}"
                )
        object.__setattr__(self, "letters", letters)

    @classmethod
    def identity(cls, n: int) -> BraidWord:
        return cls(n, ())

    @classmethod
    def generator(cls, n: int, i: int, sign: int = 1) -> BraidWord:
        return cls(n, (i if sign > 0 else -i,))

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return compose(self, other)

    def __pow__(self, k: int) -> BraidWord:
        if k < 0:
            return self.inverse() ** (-k)
        return BraidWord(self.strand_count, self.letters * k)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strand_count, _invert(self.letters))

    def pairs(self) -> list[tuple[int, int]]:
        """Letters as (generator index, sign) pairs."""
        return [(abs(x), 1 if x > 0 else -1) for x in self.letters]

    def embed(self, n: int, shift: int = 0) -> BraidWord:
        """Same word in B_n with every generator index shifted by ``shift``."""
        return BraidWord(n, tuple(x + shift if x > 0 else x - shift for x in self.letters))

    def to_json(self) -> dict:
        return {"strand_count": self.strand_count, "letters": list(self.letters)}

    @classmethod
    def from_json(cls, data: dict) -> BraidWord:
        return cls(int(data["strand_count"]), tuple(int(x) for x in data["letters"]))

    def __str__(self):
        if not self.letters:
            return "e"
        return " ".join(f"s{abs(x)}" + ("^-1" if x < 0 else "") for x in self.letters)


@dataclass(frozen=True)
class PuncturePath:
    """Path from puncture ``s`` to ``t`` (s < t) passing each puncture strictly
    between them either below (``"b"``) or above (``"a"``)."""

    s: int
    t: int
    detours: tuple[str, ...] | None = None

    def __post_init__(self):
        s, t = self.s, self.t
        if s > t:
            s, t = t, s
            if self.detours is not None:
                object.__setattr__(self, "detours", tuple(reversed(self.detours)))
            object.__setattr__(self, "s", s)
            object.__setattr__(self, "t", t)
        if s == t or s < 1:
            raise ValueError("path endpoints must be distinct positive punctures")
        if self.detours is None:
            object.__setattr__(self, "detours", ("b",) * (t - s - 1))
        detours = tuple(self.detours)
        if len(detours) != t - s - 1:
            raise ValueError("need one detour flag per intermediate puncture")
        if any(d not in ("a", "b") for d in detours):
            raise ValueError("detour flags must be 'a' or 'b'")
        object.__setattr__(self, "detours", detours)

    @classmethod
    def below(cls, s: int, t: int) -> PuncturePath:
        return cls(min(s, t), max(s, t))

    @classmethod
    def above(cls, s: int, t: int) -> PuncturePath:
        s, t = min(s, t), max(s, t)
        return cls(s, t, ("a",) * (t - s - 1))

    def flag(self, r: int) -> str:
        """Detour flag at intermediate puncture ``r``."""
        return self.detours[r - self.s - 1]

    def to_json(self) -> dict:
        return {"s": self.s, "t": self.t, "detours": list(self.detours)}

    @classmethod
    def from_json(cls, data: dict) -> PuncturePath:
        return cls(int(data["s"]), int(data["t"]), tuple(data["detours"]))


def compose(u: BraidWord, v: BraidWord) -> BraidWord:
    """``u`` followed by ``v``."""
    if u.strand_count != v.strand_count:
        raise ValueError(
            f"strand-count mismatch: {u.strand_count} vs {v.strand_count}"
        )
    return BraidWord(u.strand_count, u.letters + v.letters)


def product(words: Iterable[BraidWord], n: int) -> BraidWord:
    letters: list[int] = []
    for w in words:
        if w.strand_count != n:
            raise ValueError("strand-count mismatch")
        letters.extend(w.letters)
    return BraidWord(n, tuple(letters))


def conjugate(a: BraidWord, b: BraidWord) -> BraidWord:
    """The conjugation symbol (a)_b = b^-1 a b."""
    return compose(compose(b.inverse(), a), b)


def generator_images(beta: BraidWord) -> tuple[tuple[int, ...], ...]:
    """Images of x_1..x_n under the automorphism induced by ``beta``.

    Letters are folded in from the right end (phi_beta = phi_rest o phi_last),
    so each step only rewrites two images instead of every letter of every
    image.
    """
    n = beta.strand_count
    img: list[tuple[int, ...]] = [(j,) for j in range(1, n + 1)]
    for x in reversed(beta.letters):
        i = abs(x) - 1
        a, b = img[i], img[i + 1]
        if x > 0:
            img[i], img[i + 1] = _reduce(a + b + _invert(a)), a
        else:
            img[i], img[i + 1] = b, _reduce(_invert(b) + a + b)
    return tuple(img)


def artin_action(beta: BraidWord, w: FreeWord) -> FreeWord:
    """Right action ``w . beta`` of a braid on a free word."""
    if beta.strand_count != w.rank:
        raise ValueError(f"rank mismatch: B_{beta.strand_count} on F_{w.rank}")
    img = generator_images(beta)
    out: list[int] = []
    for x in w.letters:
        out.extend(img[x - 1] if x > 0 else _invert(img[-x - 1]))
    return FreeWord(w.rank, tuple(out))


def _perm_mul(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(q[i] for i in p)


def _perm_inv(p: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def hurwitz_action(beta: BraidWord, tup: Sequence[tuple[int, ...]]) -> tuple[tuple[int, ...], ...]:
    """Push a tuple of permutations (a homomorphism F_n -> S_m) through ``beta``.

    Same recurrence as :func:`generator_images`, evaluated in S_m, so braids
    with different images here induce different automorphisms of F_n.
    """
    img = list(tup)
    for x in reversed(beta.letters):
        i = abs(x) - 1
        a, b = img[i], img[i + 1]
        if x > 0:
            img[i], img[i + 1] = _perm_mul(_perm_mul(a, b), _perm_inv(a)), a
        else:
            img[i], img[i + 1] = b, _perm_mul(_perm_mul(_perm_inv(b), a), b)
    return tuple(img)


def _screen_tuples(n: int, m: int = 7, count: int = 4) -> list[tuple[tuple[int, ...], ...]]:
    rng = random.Random(n)
    out = []
    for _ in range(count):
        tup = []
        for _ in range(n):
            p = list(range(m))
            rng.shuffle(p)
            tup.append(tuple(p))
        out.append(tuple(tup))
    return out


def are_equal(u: BraidWord, v: BraidWord) -> bool:
    """Decide u == v in B_n through the faithful action on F_n.

    Exponent sum, permutation and a few finite Hurwitz images only ever prove
    inequality; a positive answer always comes from comparing the images of
    the free generators.
    """
    if u.strand_count != v.strand_count:
        raise ValueError(
            f"strand-count mismatch: {u.strand_count} vs {v.strand_count}"
        )
    if u.letters == v.letters:
        return True
    if exponent_sum(u) != exponent_sum(v) or permutation(u) != permutation(v):
        return False
    for tup in _screen_tuples(u.strand_count):
        if hurwitz_action(u, tup) != hurwitz_action(v, tup):
            return False
    return generator_images(u) == generator_images(v)


def is_identity(u: BraidWord) -> bool:
    return are_equal(u, BraidWord.identity(u.strand_count))


def exponent_sum(u: BraidWord) -> int:
    return sum(1 if x > 0 else -1 for x in u.letters)


def permutation(u: BraidWord) -> Permutation:
    """Image in S_n; sigma_i maps to the transposition (i, i+1).

    The result sends the puncture a strand starts at to the one it ends at.
    """
    n = u.strand_count
    at = list(range(1, n + 1))  # at[position-1]: strand currently there
    for x in u.letters:
        i = abs(x) - 1
        at[i], at[i + 1] = at[i + 1], at[i]
    images = [0] * n
    for pos, strand in enumerate(at, start=1):
        images[strand - 1] = pos
    return Permutation(tuple(images))


def half_twist(path: PuncturePath, n: int) -> BraidWord:
    """Positive half-twist H(path) in B_n; see the module docstring for the encoding."""
    if path.t > n:
        raise ValueError(f"path endpoint {path.t} outside 1..{n}")
    s, t = path.s, path.t
    conj = tuple(
        (r if path.flag(r) == "b" else -r) for r in range(t - 1, s, -1)
    )
    return BraidWord(n, conj + (s,) + _invert(conj))


def full_twist(n: int) -> BraidWord:
    """Delta^2_n = (sigma_1 sigma_2 ... sigma_{n-1})^n."""
    if n < 1:
        raise ValueError("n must be positive")
    return BraidWord(n, tuple(range(1, n)) * n)


def half_turn(n: int, first: int = 1, size: int | None = None) -> BraidWord:
    """Positive half turn Delta (Garside element) on the consecutive block
    ``first .. first+size-1`` of B_n; its square is the full twist of the block."""
    if size is None:
        size = n - first + 1
    letters: list[int] = []
    for top in range(first + size - 2, first - 1, -1):
        letters.extend(range(first, top + 1))
    return BraidWord(n, tuple(letters))


def block_full_twist(n: int, first: int, size: int) -> BraidWord:
    """Full twist of the consecutive strands ``first .. first+size-1`` in B_n."""
    return BraidWord(n, tuple(range(first, first + size - 1)) * size)

