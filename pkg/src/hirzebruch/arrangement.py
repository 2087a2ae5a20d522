"""
Braid monodromy of real line arrangements, computed exactly.

Lines are ``y = m x + c`` with rational ``m, c``; the projection is
``(x, y) -> x``.  The base point ``u`` sits to the right of every critical
value and the fiber over it is ordered by increasing ``y``, which numbers the
strands 1..p.

Loop ``i`` of the geometric base travels from ``u`` to the left just below the
real axis, circles the ``i``-th critical value (counted from the right)
counterclockwise and comes back.  Along the corridor the fiber points move
on the real line except at critical values; passing a point where ``k``
lines meet reverses their block of positions, and because the corridor has
negative imaginary part, the line of larger slope goes underneath.  That
passage is the negative half turn of the block.  The circuit itself turns the
block once counterclockwise, which is the positive full twist.  Hence

    loop braid = T . Delta^2_block . T^-1

with ``T`` the product of the negative half turns met on the way.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .braids import BraidWord, block_full_twist, half_turn, product
from .factorization import Factor, Factorization


class NonGenericArrangement(ValueError):
    pass


def _q(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class LineArrangement:
    """Real lines y = slope * x + intercept, in a fixed order."""

    lines: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        lines = tuple((_q(m), _q(c)) for m, c in self.lines)
        if not lines:
            raise ValueError("empty arrangement")
        slopes = [m for m, _ in lines]
        if len(set(lines)) != len(lines):
            raise NonGenericArrangement("repeated line")
        if len(set(slopes)) != len(slopes):
            raise NonGenericArrangement("two lines share a slope")
        object.__setattr__(self, "lines", lines)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple]) -> LineArrangement:
        return cls(tuple((Fraction(m), Fraction(c)) for m, c in pairs))

    def __len__(self):
        return len(self.lines)

    def y(self, j: int, x: Fraction) -> Fraction:
        m, c = self.lines[j]
        return m * x + c

    def to_json(self) -> list[list[int]]:
        return [
            [m.numerator, m.denominator, c.numerator, c.denominator]
            for m, c in self.lines
        ]

    @classmethod
    def from_json(cls, rows: Sequence[Sequence[int]]) -> LineArrangement:
        return cls(tuple(
            (Fraction(int(sn), int(sd)), Fraction(int(cn), int(cd)))
            for sn, sd, cn, cd in rows
        ))


@dataclass(frozen=True)
class CriticalPoint:
    x: Fraction
    y: Fraction
    lines: tuple[int, ...]  # 0-based indices into the arrangement

    @property
    def multiplicity(self) -> int:
        return len(self.lines)


@dataclass(frozen=True)
class CriticalData:
    critical_xs: tuple[Fraction, ...]       # ascending
    points: tuple[CriticalPoint, ...]       # same order as critical_xs
    basepoint: Fraction
    fiber_order: tuple[Fraction, ...]       # ascending y-values over u
    fiber_lines: tuple[int, ...]            # line index at each fiber position


def critical_data(arr: LineArrangement) -> CriticalData:
    meets: dict[tuple[Fraction, Fraction], set[int]] = {}
    for i, j in combinations(range(len(arr)), 2):
        (mi, ci), (mj, cj) = arr.lines[i], arr.lines[j]
        x = (cj - ci) / (mi - mj)
        meets.setdefault((x, mi * x + ci), set()).update((i, j))
    by_x: dict[Fraction, CriticalPoint] = {}
    for (x, y), lines in meets.items():
        if x in by_x:
            raise NonGenericArrangement(f"two intersection points over x = {x}")
        by_x[x] = CriticalPoint(x, y, tuple(sorted(lines)))
    xs = tuple(sorted(by_x))
    u = (xs[-1] + 1) if xs else Fraction(1)
    fiber = sorted(range(len(arr)), key=lambda j: arr.y(j, u))
    return CriticalData(
        critical_xs=xs,
        points=tuple(by_x[x] for x in xs),
        basepoint=u,
        fiber_order=tuple(arr.y(j, u) for j in fiber),
        fiber_lines=tuple(fiber),
    )


@dataclass(frozen=True)
class Loop:
    """One element of the geometric base: the loop around ``point``."""

    index: int  # 1-based position in the base
    point: CriticalPoint


def g_base(data: CriticalData) -> tuple[Loop, ...]:
    """Loops ordered from the critical value nearest ``u`` to the farthest."""
    return tuple(Loop(i, pt) for i, pt in enumerate(reversed(data.points), start=1))


def _block(order: list[int], lines: Sequence[int]) -> tuple[int, int]:
    pos = sorted(order.index(j) for j in lines)
    if pos != list(range(pos[0], pos[0] + len(pos))):
        raise AssertionError("lines through a critical point are not adjacent")
    return pos[0] + 1, len(pos)


def _corridor(arr: LineArrangement, data: CriticalData, stop: Fraction):
    """Walk left from u to just right of ``stop``; return (T, current order)."""
    p = len(arr)
    order = list(data.fiber_lines)
    passed = []
    for pt in reversed(data.points):
        if pt.x <= stop:
            break
        first, size = _block(order, pt.lines)
        passed.append(half_turn(p, first, size).inverse())
        order[first - 1:first - 1 + size] = reversed(order[first - 1:first - 1 + size])
    return product(passed, p), order


def loop_monodromy(arr: LineArrangement, center: Fraction, data: CriticalData | None = None) -> BraidWord:
    """Braid of the standard loop around the real value ``center``.

    A loop around a regular value gives the trivial braid.
    """
    data = critical_data(arr) if data is None else data
    center = _q(center)
    p = len(arr)
    target = next((pt for pt in data.points if pt.x == center), None)
    if target is None:
        return BraidWord.identity(p)
    T, order = _corridor(arr, data, center)
    first, size = _block(order, target.lines)
    return T * block_full_twist(p, first, size) * T.inverse()


def monodromy_oracle(arr: LineArrangement, loop_index: int, data: CriticalData | None = None) -> BraidWord:
    """Braid monodromy of loop ``loop_index`` (1-based, g-base order)."""
    data = critical_data(arr) if data is None else data
    loops = g_base(data)
    if not 1 <= loop_index <= len(loops):
        raise IndexError(f"loop index {loop_index} outside 1..{len(loops)}")
    return loop_monodromy(arr, loops[loop_index - 1].point.x, data)


def arrangement_monodromy_factorization(arr: LineArrangement, label: str = "") -> Factorization:
    """Factors of Delta^2_p over the g-base, nearest critical value first."""
    data = critical_data(arr)
    factors = []
    for loop in g_base(data):
        k = loop.point.multiplicity
        factors.append(Factor(
            word=loop_monodromy(arr, loop.point.x, data),
            source=f"point:{loop.index}",
            nu=2 if k == 2 else "twist",
            claimed_degree=k * (k - 1),
            support=tuple(j + 1 for j in loop.point.lines),
        ))
    return Factorization(len(arr), tuple(factors), complete=True, label=label)


def local_model(nu: int) -> BraidWord:
    """Monodromy H^nu of y^2 = x^nu around the origin, H = sigma_1 in B_2."""
    if nu not in (1, 2, 3):
        raise ValueError("nu must be 1, 2 or 3")
    return BraidWord(2, (1,) * nu)


def pencil(p: int, center=(0, 0)) -> LineArrangement:
    """``p`` lines through one point with slopes 0..p-1."""
    x0, y0 = map(Fraction, center)
    return LineArrangement(tuple((Fraction(j), y0 - j * x0) for j in range(p)))
