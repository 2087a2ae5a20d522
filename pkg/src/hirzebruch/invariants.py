"""
Exact invariants of the Galois covers Y_{k(a,b)} of embedded Hirzebruch surfaces.

Chern numbers carry a factor ``n!`` with ``n = 2ab + kb^2`` that quickly runs
into hundreds of digits, so every value is stored as ``n`` together with an
exact rational coefficient.  Polynomial brackets are written out term by term
as they are usually displayed; their agreement is checked by the tests rather
than assumed here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd
from typing import Any, Callable, Iterable

EXPANSION_CAP = 40


def _fraction_json(q: Fraction) -> list[int]:
    return [q.numerator, q.denominator]


@dataclass(frozen=True)
class SurfaceParams:
    k: int
    a: int
    b: int

    def __post_init__(self):
        k, a, b = self.k, self.a, self.b
        if not all(isinstance(v, int) for v in (k, a, b)):
            raise TypeError("k, a, b must be integers")
        if k < 0 or a < 0 or b < 1:
            raise ValueError(f"need k >= 0, a >= 0, b >= 1; got ({k}, {a}, {b})")
        if a == 0 and k != 1:
            raise ValueError("a = 0 is covered only for k = 1 (Veronese surfaces)")

    @property
    def n(self) -> int:
        return 2 * self.a * self.b + self.k * self.b ** 2

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.k, self.a, self.b)


def _params(p) -> SurfaceParams:
    return p if isinstance(p, SurfaceParams) else SurfaceParams(*p)


@dataclass(frozen=True)
class FactorialMultiple:
    """The exact number ``coeff * n!``."""

    n: int
    coeff: Fraction

    @property
    def sign(self) -> int:
        return (self.coeff > 0) - (self.coeff < 0)

    def expanded(self, cap: int = EXPANSION_CAP) -> int | None:
        if self.n > cap:
            return None
        v = self.coeff * factorial(self.n)
        if v.denominator != 1:
            raise ArithmeticError(f"{self.coeff} * {self.n}! is not an integer")
        return v.numerator

    def to_json(self, cap: int = EXPANSION_CAP) -> dict[str, Any]:
        e = self.expanded(cap)
        return {
            "factorial_index": self.n,
            "coeff": _fraction_json(self.coeff),
            "expanded": None if e is None else str(e),
        }


@dataclass(frozen=True)
class ChernPair:
    factorial_index: int
    c1sq_coeff: Fraction
    c2_coeff: Fraction

    @property
    def c1sq(self) -> FactorialMultiple:
        return FactorialMultiple(self.factorial_index, self.c1sq_coeff)

    @property
    def c2(self) -> FactorialMultiple:
        return FactorialMultiple(self.factorial_index, self.c2_coeff)

    @property
    def tau(self) -> FactorialMultiple:
        return FactorialMultiple(self.factorial_index, (self.c1sq_coeff - 2 * self.c2_coeff) / 3)

    @property
    def ratio(self) -> Fraction | None:
        """c1^2 / c2, exact."""
        return None if self.c2_coeff == 0 else self.c1sq_coeff / self.c2_coeff

    def expanded(self, cap: int = EXPANSION_CAP) -> tuple[int, int] | None:
        if self.factorial_index > cap:
            return None
        return self.c1sq.expanded(cap), self.c2.expanded(cap)

    def to_json(self, cap: int = EXPANSION_CAP) -> dict[str, Any]:
        e = self.expanded(cap)
        return {
            "factorial_index": self.factorial_index,
            "c1sq_coeff": _fraction_json(self.c1sq_coeff),
            "c2_coeff": _fraction_json(self.c2_coeff),
            "expanded": None if e is None else {"c1sq": str(e[0]), "c2": str(e[1])},
        }


@dataclass(frozen=True)
class GroupDescriptor:
    """The group (Z_c)^rank."""

    torsion_order: int
    rank: int

    @property
    def trivial(self) -> bool:
        return self.torsion_order == 1 or self.rank == 0

    def __str__(self):
        return "1" if self.trivial else f"(Z_{self.torsion_order})^{self.rank}"

    def to_json(self) -> dict[str, Any]:
        return {"torsion_order": self.torsion_order, "rank": self.rank,
                "trivial": self.trivial, "text": str(self)}


@dataclass(frozen=True)
class BranchInvariants:
    n: int
    m: int
    mu: int
    phi: int
    d: int | None = None

    def to_json(self) -> dict[str, Any]:
        return {"n": self.n, "m": self.m, "mu": self.mu, "phi": self.phi, "d": self.d}


# Hirzebruch surface data and the general Galois-cover formula.

def hirzebruch_data(p) -> tuple[int, int, int, int]:
    """(E.K, n, c1^2(X), c2(X)) for X = F_{k(a,b)}."""
    p = _params(p)
    k, a, b = p.as_tuple()
    EK = -2 * a - 2 * b - b * k
    n = 2 * a * b + b ** 2 * k
    return EK, n, 8, 4


def galois_chern(EK: int, n: int, c1sq_X: int, c2_X: int) -> ChernPair:
    if n < 1:
        raise ValueError("n must be positive")
    c1 = EK ** 2 + 6 * n * EK + 9 * n ** 2 - 12 * EK - 36 * n + 36
    c2 = (72 - 10 * c1sq_X - 54 * EK - 114 * n + 27 * n ** 2 + 14 * c2_X
          + 3 * EK ** 2 + 18 * n * EK)
    return ChernPair(n, Fraction(c1, 4), Fraction(c2, 24))


# Closed forms for Y_{k(a,b)}.

def c1sq_expanded_bracket(k: int, a: int, b: int) -> int:
    return (4 * a ** 2 + 4 * b ** 2 - 64 * a * b + 24 * a + 24 * b - 24 * a ** 2 * b - 24 * a * b ** 2
            + 36 + 36 * a ** 2 * b ** 2
            + k * (12 * b + 4 * a * b - 12 * b ** 3 + 36 * a * b ** 3 - 24 * a * b ** 2
                   - 32 * b ** 2) + k ** 2 * (b ** 2 - 6 * b ** 3 + 9 * b ** 4))


def c1sq_factored_bracket(k: int, a: int, b: int) -> int:
    return (k ** 2 * b ** 2 * (3 * b - 1) ** 2 + 4 * k * b * (3 * b - 1) * (3 * a * b - a - b - 3)
            + 4 * (3 * a * b - a - b - 3) ** 2)


def c2_expanded_bracket(k: int, a: int, b: int) -> int:
    return (4 * (4 + 9 * a + 9 * b - 17 * a * b + a ** 2 + b ** 2 + 9 * a ** 2 * b ** 2
                 - 6 * a ** 2 * b - 6 * a * b ** 2)
            + 2 * k * (9 * b - 17 * b ** 2 + 18 * a * b ** 3 + 2 * a * b - 12 * a * b ** 2 - 6 * b ** 3)
            + k ** 2 * (9 * b ** 4 + b ** 2 - 6 * b ** 3))


def c2_factored_bracket(k: int, a: int, b: int) -> int:
    return ((3 * b - 1) ** 2 * (2 * a + k * b) ** 2 + (9 - 17 * b - 6 * b ** 2) * (4 * a + 2 * k * b)
            + 4 * (b ** 2 + 9 * b + 4))


def chern_Y(p) -> ChernPair:
    """Chern numbers of Y_{k(a,b)}; both closed forms and the general formula must agree."""
    p = _params(p)
    k, a, b = p.as_tuple()
    e1, f1 = c1sq_expanded_bracket(k, a, b), c1sq_factored_bracket(k, a, b)
    e2, f2 = c2_expanded_bracket(k, a, b), c2_factored_bracket(k, a, b)
    if e1 != f1 or e2 != f2:
        raise AssertionError(f"closed forms disagree at {p.as_tuple()}")
    out = ChernPair(p.n, Fraction(f1, 4), Fraction(f2, 8))
    if out != galois_chern(*hirzebruch_data(p)):
        raise AssertionError(f"closed form differs from the general formula at {p.as_tuple()}")
    return out


def chern_k1(a: int, b: int) -> ChernPair:
    """The k = 1 specialization, in its own displayed form."""
    n = 2 * a * b + b ** 2
    c1 = Fraction((3 * b ** 2 + 6 * a * b - 3 * b - 2 * a - 6) ** 2, 4)
    c2 = Fraction(16 + 54 * b + 36 * a - 64 * a * b + 4 * a ** 2 - 29 * b ** 2 + 36 * a ** 2 * b ** 2
                  - 24 * a ** 2 * b - 48 * a * b ** 2 - 18 * b ** 3 + 9 * b ** 4 + 36 * a * b ** 3, 8)
    return ChernPair(n, c1, c2)


def chern_k0(a: int, b: int) -> ChernPair:
    """The k = 0 specialization, in its own displayed form."""
    n = 2 * a * b
    c1 = Fraction((3 * a * b - a - b - 3) ** 2)
    c2 = Fraction(4 + 9 * a + 9 * b - 17 * a * b + a ** 2 + b ** 2 + 9 * a ** 2 * b ** 2
                  - 6 * a ** 2 * b - 6 * a * b ** 2, 2)
    return ChernPair(n, c1, c2)


def veronese_chern(b: int) -> ChernPair:
    if b < 1:
        raise ValueError("b must be positive")
    c1 = Fraction(9, 4) * (b ** 4 - 2 * b ** 3 - 3 * b ** 2 + 4 * b + 4)
    c2 = Fraction(16 + 54 * b - 29 * b ** 2 - 18 * b ** 3 + 9 * b ** 4, 8)
    return ChernPair(b * b, c1, c2)


def signature(p) -> FactorialMultiple:
    p = _params(p)
    k, a, b = p.as_tuple()
    bracket = 4 * (a * b - 3 * a - 3 * b + 5) + 2 * k * (b - 3) * b
    return FactorialMultiple(p.n, Fraction(bracket, 12))


def pi1(p) -> GroupDescriptor:
    p = _params(p)
    if p.a < 1:
        raise ValueError("the fundamental group formula needs a >= 1")
    return GroupDescriptor(gcd(p.a, p.b), p.n - 2)


def branch_invariants(p) -> BranchInvariants:
    p = _params(p)
    k, a, b = p.as_tuple()
    if a >= 1:
        return BranchInvariants(
            n=2 * a * b + k * b ** 2,
            m=6 * a * b - 2 * a - 2 * b + k * (3 * b ** 2 - b),
            mu=6 * a * b - 4 * a - 4 * b + 4 + k * (3 * b ** 2 - 2 * b),
            phi=24 * a * b - 18 * a - 18 * b + 12 + k * (12 * b ** 2 - 9 * b),
        )
    # a = 0, k = 1; SurfaceParams rejects every other a = 0 case
    d2 = 3 * (b - 1) * (3 * b ** 3 - 3 * b ** 2 - 14 * b + 16)
    return BranchInvariants(
        n=b ** 2,
        m=3 * b * (b - 1),
        mu=3 * (b - 1) ** 2,
        phi=3 * (b - 1) * (4 * b - 5),
        d=d2 // 2,
    )


# Classification.

def general_type_table(k: int, a: int, b: int) -> bool:
    if k == 0:
        return a * b >= 3
    if k in (1, 2):
        return a * b >= 2
    return True


def spin_table(k: int, a: int, b: int) -> bool:
    r = b % 4
    return ((r == 0 and a % 2 == 1) or (r == 1 and k % 2 == 0)
            or (r == 2 and (a + k) % 2 == 1) or r == 3)


# Rows (k_min, k_max, a_min, a_max, b_min, b_max); None means unbounded.
POSITIVE_SIGNATURE_ROWS: tuple[tuple[int, int | None, int, int | None, int, int | None], ...] = (
    (0, 0, 8, None, 4, 4),
    (0, 0, 6, None, 5, None),
    (1, 1, 6, None, 4, 4),
    (1, 1, 3, None, 5, 5),
    (1, 1, 2, None, 6, 6),
    (1, 1, 1, None, 7, None),
    (2, 2, 4, None, 4, 4),
    (2, 2, 1, None, 5, None),
    (3, 3, 2, None, 4, 4),
    (3, 3, 1, None, 5, None),
    (4, None, 1, 1, 4, None),
)


def _in_row(row, k: int, a: int, b: int) -> bool:
    k0, k1, a0, a1, b0, b1 = row
    return (k0 <= k and (k1 is None or k <= k1) and a0 <= a and (a1 is None or a <= a1)
            and b0 <= b and (b1 is None or b <= b1))


def positive_signature_table(k: int, a: int, b: int, literal: bool = False) -> bool:
    """Membership in the positive-signature condition table.

    The default reading uses the a <-> b symmetry of the k = 0 surfaces and
    lets the k >= 4 row run over every a >= 1; ``literal=True`` reads the
    rows exactly as listed.
    """
    if a < 1:
        raise ValueError("the table assumes a >= 1")
    rows = POSITIVE_SIGNATURE_ROWS
    if not literal:
        rows = rows[:-1] + ((4, None, 1, None, 4, None),)
    if any(_in_row(r, k, a, b) for r in rows):
        return True
    return not literal and k == 0 and any(_in_row(r, 0, b, a) for r in rows)


@dataclass(frozen=True)
class Classification:
    params: SurfaceParams
    general_type: bool
    general_type_by_m: bool
    spin: bool
    spin_by_m: bool
    simply_connected: bool
    signature_sign: int
    positive_by_table: bool
    m: int

    @property
    def consistent(self) -> bool:
        return (self.general_type == self.general_type_by_m and self.spin == self.spin_by_m
                and (self.signature_sign > 0) == self.positive_by_table)

    def to_json(self) -> dict[str, Any]:
        return {
            "k": self.params.k, "a": self.params.a, "b": self.params.b,
            "general_type": self.general_type,
            "general_type_by_m": self.general_type_by_m,
            "spin": self.spin,
            "spin_by_m": self.spin_by_m,
            "simply_connected": self.simply_connected,
            "signature_sign": self.signature_sign,
            "positive_by_table": self.positive_by_table,
            "m": self.m,
            "consistent": self.consistent,
        }


def classify(p, literal_table: bool = False) -> Classification:
    p = _params(p)
    if p.a < 1:
        raise ValueError("classification needs a >= 1")
    k, a, b = p.as_tuple()
    m = branch_invariants(p).m
    return Classification(
        params=p,
        general_type=general_type_table(k, a, b),
        general_type_by_m=m > 6,
        spin=spin_table(k, a, b),
        spin_by_m=m % 4 != 0,
        simply_connected=pi1(p).trivial,
        signature_sign=signature(p).sign,
        positive_by_table=positive_signature_table(k, a, b, literal_table),
        m=m,
    )


PREDICATES: dict[str, Callable[[Classification], bool]] = {
    "sc": lambda c: c.simply_connected,
    "!sc": lambda c: not c.simply_connected,
    "gt": lambda c: c.general_type,
    "!gt": lambda c: not c.general_type,
    "spin": lambda c: c.spin,
    "!spin": lambda c: not c.spin,
    "tau>0": lambda c: c.signature_sign > 0,
    "tau=0": lambda c: c.signature_sign == 0,
    "tau<0": lambda c: c.signature_sign < 0,
    "tau>=0": lambda c: c.signature_sign >= 0,
    "tau<=0": lambda c: c.signature_sign <= 0,
}


def parse_predicates(text: str) -> tuple[str, ...]:
    names = tuple(s.strip() for s in text.split(",") if s.strip())
    unknown = [s for s in names if s not in PREDICATES]
    if unknown:
        raise ValueError(f"unknown predicates {unknown}; choose from {sorted(PREDICATES)}")
    return names


def scan(ks: Iterable[int], as_: Iterable[int], bs: Iterable[int],
         predicates: Iterable[str] = ()) -> list[SurfaceParams]:
    """Triples (k, a, b) in the given ranges whose classification meets every predicate."""
    ks, as_, bs = list(ks), list(as_), list(bs)
    if not ks or not as_ or not bs:
        raise ValueError("empty parameter range")
    if min(as_) < 1:
        raise ValueError("scan needs a >= 1")
    preds = [PREDICATES[name] for name in predicates]
    out = []
    for k in ks:
        for a in as_:
            for b in bs:
                c = classify(SurfaceParams(k, a, b))
                if all(f(c) for f in preds):
                    out.append(c.params)
    return out


# Equal Chern numbers, different fundamental groups.

def displayed_pair_brackets(s: int, t: int) -> tuple[int, int]:
    """The two brackets multiplying (4st+4t^2)! and (4st+4t^2)!/2, as usually displayed."""
    c1 = (9 + 6 * s + 18 * t + s ** 2 - 30 * s * t - 27 * t ** 2 - 12 * t * s ** 2 - 48 * t ** 2 * s
          - 30 * t ** 3 + 36 * t ** 2 * s ** 2 + 72 * s * t ** 3 + 36 * t ** 4)
    c2 = (4 + 27 * t + 9 * s - 32 * s * t + s ** 2 - 29 * t ** 2 + 36 * s ** 2 * t ** 2 - 12 * s ** 2 * t
          - 48 * s * t ** 2 - 36 * t ** 3 + 36 * t ** 4 + 72 * s * t ** 3)
    return c1, c2


@dataclass(frozen=True)
class EqualChernReport:
    s: int
    t: int
    first: SurfaceParams
    second: SurfaceParams
    chern_first: ChernPair
    chern_second: ChernPair
    pi1_first: GroupDescriptor
    pi1_second: GroupDescriptor
    displayed_c1sq_offset: Fraction
    displayed_c2_offset: Fraction

    @property
    def chern_equal(self) -> bool:
        return self.chern_first == self.chern_second

    @property
    def groups_differ(self) -> bool:
        return self.pi1_first != self.pi1_second

    def to_json(self) -> dict[str, Any]:
        return {
            "s": self.s, "t": self.t,
            "first": list(self.first.as_tuple()),
            "second": list(self.second.as_tuple()),
            "chern": self.chern_first.to_json(),
            "chern_equal": self.chern_equal,
            "pi1_first": self.pi1_first.to_json(),
            "pi1_second": self.pi1_second.to_json(),
            "groups_differ": self.groups_differ,
            "displayed_c1sq_offset": _fraction_json(self.displayed_c1sq_offset),
            "displayed_c2_offset": _fraction_json(self.displayed_c2_offset),
        }


def equal_chern_pair(s: int, t: int) -> EqualChernReport:
    """Compare Y_{1(s,2t)} with Y_{0(s+t,2t)} for odd coprime s, t.

    The offsets are (displayed bracket) - (true coefficient); a nonzero value
    flags a misprint in the displayed closed form.
    """
    if s < 1 or t < 1 or s % 2 == 0 or t % 2 == 0 or gcd(s, t) != 1:
        raise ValueError("s and t must be odd, positive and coprime")
    P, Q = SurfaceParams(1, s, 2 * t), SurfaceParams(0, s + t, 2 * t)
    cp, cq = chern_Y(P), chern_Y(Q)
    d1, d2 = displayed_pair_brackets(s, t)
    return EqualChernReport(
        s, t, P, Q, cp, cq, pi1(P), pi1(Q),
        displayed_c1sq_offset=d1 - cp.c1sq_coeff,
        displayed_c2_offset=Fraction(d2, 2) - cp.c2_coeff,
    )
