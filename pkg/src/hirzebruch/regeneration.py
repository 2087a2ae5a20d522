"""
Regenerated braid monodromy of the branch curve of F_{1(a,b)}.

Regeneration doubles every line: the fiber point q_j of line ``L_j`` becomes
the adjacent pair ``q_j, q_j'`` at positions ``2j-1, 2j`` of a fiber with
``p = 2 p0`` points.  The factorization is assembled vertex by vertex as
``C~_1 P~_1 C~_2 P~_2 ...`` where

* ``C~_v`` holds, for every pair of disjoint lines ``L_i, L_j`` (``i < j``)
  charged to vertex ``v``, the four full twists ``Z~^2_{ij} Z~^2_{ij'}
  Z~^2_{i'j} Z~^2_{i'j'}``.  A pair is charged to the higher endpoint of
  ``L_j``.
* ``P~_v`` is the local factorization at ``v``: three half-twist symbols
  and a conjugated ``Z~_{kk'}`` at a 3-point, a degree-132 placeholder at a
  6-point, ``Z_{jj'}`` at a vertex lying on one line, nothing off the curve.

``Z_{xy}`` is the half-twist along the path below the real line.  The path of
``Z~_{xy}`` passes above the points of lines ``j0 .. j-1`` (other than the
endpoints' own lines), where ``j0`` is the smallest index of a line meeting
``L_j`` at its higher endpoint.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Iterable

from .braids import (
    BraidWord,
    PuncturePath,
    _reduce,
    are_equal,
    conjugate,
    half_twist,
    product,
)
from .degeneration import (
    MULTIPLE,
    OFF_S,
    ON_S,
    SIX_POINT,
    THREE_POINT,
    DegenerationComplex,
    classify_vertices,
    induced_arrangement,
)
from .arrangement import arrangement_monodromy_factorization
from .factorization import Factor, Factorization, degree_audit

THREE_POINT_MODES = ("literal", "cubed")
DEFAULT_THREE_POINT_MODE = "cubed"
SIX_POINT_DEGREE = 132


@dataclass(frozen=True)
class RegeneratedIndexing:
    """Doubling map q_j -> (q_j, q_j') on fiber positions."""

    p0: int

    @property
    def strand_count(self) -> int:
        return 2 * self.p0

    def position(self, line: int, primed: bool = False) -> int:
        if not 1 <= line <= self.p0:
            raise ValueError(f"line {line} outside 1..{self.p0}")
        return 2 * line if primed else 2 * line - 1

    def line_of(self, pos: int) -> tuple[int, bool]:
        return (pos + 1) // 2, pos % 2 == 0

    def label(self, pos: int) -> str:
        j, primed = self.line_of(pos)
        return f"{j}'" if primed else str(j)


def _Z(idx: RegeneratedIndexing, x: int, y: int) -> BraidWord:
    return half_twist(PuncturePath.below(x, y), idx.strand_count)


def j0(c: DegenerationComplex, j: int) -> int | None:
    """Smallest index of a line other than L_j through the higher endpoint of L_j."""
    top = c.line(j).hi
    meets = [i for i in c.lines_at(top) if i != j]
    return min(meets) if meets else None


def pair_path(c: DegenerationComplex, idx: RegeneratedIndexing, x: int, y: int) -> PuncturePath:
    """Path of Z~ between fiber positions ``x < y`` of lines i < j."""
    i, _ = idx.line_of(x)
    j, _ = idx.line_of(y)
    start = j0(c, j)
    flags = []
    for r in range(x + 1, y):
        line, _ = idx.line_of(r)
        above = start is not None and start <= line < j and line != i
        flags.append("a" if above else "b")
    return PuncturePath(x, y, tuple(flags))


def regenerate_pair_block(c: DegenerationComplex, i: int, j: int) -> list[Factor]:
    """The four full twists replacing Z~^2_{ij} for disjoint lines i < j."""
    if not i < j:
        raise ValueError("need i < j")
    if c.lines_meet(i, j):
        raise ValueError(f"lines {i} and {j} meet")
    idx = RegeneratedIndexing(c.p0)
    n = idx.strand_count
    out = []
    for pi in (False, True):
        for pj in (False, True):
            x, y = idx.position(i, pi), idx.position(j, pj)
            H = half_twist(pair_path(c, idx, x, y), n)
            out.append(Factor(
                word=H * H,
                source=f"pair:{i},{j}",
                nu=2,
                claimed_degree=2,
                support=(x, y),
            ))
    return out


def pair_charges(c: DegenerationComplex) -> dict[int, list[tuple[int, int]]]:
    """Disjoint pairs grouped by the vertex whose C~ block carries them."""
    out: dict[int, list[tuple[int, int]]] = {}
    for i, j in c.disjoint_pairs():
        out.setdefault(c.line(j).hi, []).append((i, j))
    return out


def three_point_lines(c: DegenerationComplex, v: int) -> tuple[int, int]:
    """(j, k) at a 3-point, with L_k the diagonal line (else the vertical one)."""
    lines = c.lines_at(v)
    if len(lines) != 2:
        raise ValueError(f"vertex {v} is not a 3-point")
    for wanted in ("diagonal", "vertical"):
        ks = [i for i in lines if c.line(i).direction == wanted]
        if ks:
            k = ks[0]
            (j,) = [i for i in lines if i != k]
            return j, k
    raise ValueError(f"vertex {v}: no diagonal or vertical line")


def three_point_local(c: DegenerationComplex, v: int, mode: str = DEFAULT_THREE_POINT_MODE) -> list[Factor]:
    if mode not in THREE_POINT_MODES:
        raise ValueError(f"unknown three-point mode {mode!r}")
    if classify_vertices(c)[v].kind != THREE_POINT:
        raise ValueError(f"vertex {v} is not a 3-point")
    j, k = three_point_lines(c, v)
    idx = RegeneratedIndexing(c.p0)
    q = lambda line, primed=False: idx.position(line, primed)  # noqa: E731
    Z = lambda x, y: _Z(idx, x, y)  # noqa: E731
    nu = 1 if mode == "literal" else 3
    src = f"vertex:{v}"
    kj, kj2, jj2 = Z(q(k), q(j)), Z(q(k), q(j, True)), Z(q(j), q(j, True))
    z3 = [kj ** nu, kj2 ** nu, conjugate(kj2 ** nu, jj2)]
    if k < j:
        B = Z(q(k, True), q(j)) * jj2.inverse() * Z(q(j, True), q(k))
    else:
        B = Z(q(k), q(j)) * jj2.inverse() * Z(q(j), q(k, True))
    zt = conjugate(Z(q(k), q(k, True)), B)
    support = tuple(sorted((q(j), q(j, True), q(k), q(k, True))))
    out = [Factor(w, src, nu, nu, support, note="Z3") for w in z3]
    out.append(Factor(zt, src, 1, 1, support, note="Z~kk'"))
    return out


def six_point_support(c: DegenerationComplex, v: int) -> tuple[int, ...]:
    idx = RegeneratedIndexing(c.p0)
    return tuple(idx.position(i, p) for i in c.lines_at(v) for p in (False, True))


def load_six_point_table(path: str | Path) -> dict[str, list[dict[str, Any]]]:
    """Read local 6-point words.

    The file maps a type key (``"1"``, ``"2"``, ``"3"``) to a list of factors
    ``{"word": [signed ints on 12 local strands], "nu": 1|2|3}``.
    """
    data = json.loads(Path(path).read_text())
    table = {}
    for key, rows in data.items():
        for row in rows:
            letters = row["word"]
            if any(not 1 <= abs(x) <= 11 for x in letters):
                raise ValueError(f"type {key}: local letters must lie in 1..11")
        table[str(key)] = rows
    return table


def embed_local(word: Iterable[int], support: tuple[int, ...], n: int) -> BraidWord:
    """Send local sigma_i to the below half-twist between support strands i, i+1."""
    out = BraidWord.identity(n)
    for x in word:
        H = half_twist(PuncturePath.below(support[abs(x) - 1], support[abs(x)]), n)
        out = out * (H if x > 0 else H.inverse())
    return out


def six_point_local(c: DegenerationComplex, v: int, table: dict | None = None) -> list[Factor]:
    cls = classify_vertices(c)[v]
    if cls.kind != SIX_POINT:
        raise ValueError(f"vertex {v} is not a 6-point")
    support = six_point_support(c, v)
    t = cls.six_type
    src = f"vertex:{v}"
    rows = None if table is None else table.get(str(t))
    if rows:
        n = 2 * c.p0
        out = []
        for row in rows:
            w = embed_local(row["word"], support, n)
            out.append(Factor(w, src, row.get("nu"), sum(1 if x > 0 else -1 for x in row["word"]),
                              support, note=f"six_point type {t}"))
        return out
    note = f"six_point type {t}; local word unavailable"
    if t == 1:
        note += "; local numbering is the standard one turned 90 degrees clockwise"
    return [Factor(None, src, None, SIX_POINT_DEGREE, support, note=note)]


def special_vertex_local(c: DegenerationComplex, v: int) -> list[Factor]:
    cls = classify_vertices(c)[v]
    if cls.kind == OFF_S:
        return []
    if cls.kind != ON_S:
        raise ValueError(f"vertex {v} is singular")
    (j,) = cls.incident_lines
    idx = RegeneratedIndexing(c.p0)
    w = _Z(idx, idx.position(j), idx.position(j, True))
    return [Factor(w, f"vertex:{v}", 1, 1, (idx.position(j), idx.position(j, True)))]


def regenerated_factorization(
    c: DegenerationComplex,
    mode: str = DEFAULT_THREE_POINT_MODE,
    six_point_table: dict | None = None,
) -> Factorization:
    classes = classify_vertices(c)
    bad = [v for v, x in classes.items() if x.kind == MULTIPLE]
    if bad:
        raise ValueError(f"no regeneration rule for vertices {bad} (more than two Veronese blocks)")
    charges = pair_charges(c)
    factors: list[Factor] = []
    for v in range(1, c.nu0 + 1):
        for i, j in charges.get(v, ()):
            factors.extend(regenerate_pair_block(c, i, j))
        kind = classes[v].kind
        if kind == THREE_POINT:
            factors.extend(three_point_local(c, v, mode))
        elif kind == SIX_POINT:
            factors.extend(six_point_local(c, v, six_point_table))
        else:
            factors.extend(special_vertex_local(c, v))
    complete = not any(f.is_placeholder for f in factors)
    k, a, b = c.params
    return Factorization(2 * c.p0, tuple(factors), complete, label=f"regenerated {k},{a},{b} {mode}")


def degenerate_factorization(c: DegenerationComplex, seed: int = 0) -> Factorization:
    """Oracle factorization of the induced arrangement, with vertex/pair sources."""
    ia = induced_arrangement(c, seed)
    f = arrangement_monodromy_factorization(ia.arrangement)
    by_lines = {tuple(c.lines_at(v)): v for v in ia.vertex_images}
    factors = []
    for x in f.factors:
        v = by_lines.get(x.support)
        src = f"vertex:{v}" if v is not None else "pair:" + ",".join(map(str, x.support))
        factors.append(Factor(x.word, src, x.nu, x.claimed_degree, x.support))
    k, a, b = c.params
    return Factorization(f.strand_count, tuple(factors), True, label=f"degenerate {k},{a},{b}")


@dataclass
class ModeReport:
    mode: str
    residual: int
    passed: bool


def audit_modes(c: DegenerationComplex) -> list[ModeReport]:
    out = []
    for mode in THREE_POINT_MODES:
        a = degree_audit(regenerated_factorization(c, mode))
        out.append(ModeReport(mode, a.residual, a.passed))
    return out


def select_three_point_mode(complexes: Iterable[DegenerationComplex]) -> str | None:
    """The unique mode whose audit passes on every complex, if there is one."""
    complexes = list(complexes)
    good = [m for m in THREE_POINT_MODES
            if all(degree_audit(regenerated_factorization(c, m)).passed for c in complexes)]
    return good[0] if len(good) == 1 else None


def residual_formula(c: DegenerationComplex, mode: str) -> int:
    """Closed form of the audit residual: each 3-point owes 6 in literal
    mode and each 6-point is 6 over its share in either mode."""
    classes = classify_vertices(c).values()
    n3 = sum(x.kind == THREE_POINT for x in classes)
    n6 = sum(x.kind == SIX_POINT for x in classes)
    return (6 * n3 if mode == "literal" else 0) - 6 * n6


def pair_partition_ok(c: DegenerationComplex) -> bool:
    charged = [p for ps in pair_charges(c).values() for p in ps]
    return sorted(charged) == sorted(c.disjoint_pairs()) and len(set(charged)) == len(charged)


def _power_core(letters: tuple[int, ...]) -> tuple[tuple[int, ...], int, int]:
    w = _reduce(letters)
    n = len(w)
    lo, hi = 0, n - 1
    while hi > lo and len(set(w[lo:hi + 1])) != 1 and w[lo] == -w[hi]:
        lo += 1
        hi -= 1
    core = w[lo:hi + 1]
    if not core or len(set(core)) != 1 or core[0] < 0:
        raise ValueError("factor is not a positive power of a half-twist")
    return w[:lo], core[0], len(core)


def cuspidal_normal_form(f: Factorization) -> list[tuple[BraidWord, int]]:
    """Write each factor as Q^-1 sigma_1^nu Q, checked with the word problem."""
    n = f.strand_count
    out = []
    for x in f.factors:
        if x.is_placeholder:
            raise ValueError(f"{x.source}: placeholder has no word")
        prefix, s, nu = _power_core(x.word.letters)
        if nu not in (1, 2, 3):
            raise ValueError(f"{x.source}: exponent {nu} outside 1..3")
        P = BraidWord(n, prefix)
        R = product((BraidWord(n, (-(i + 1), -i)) for i in range(1, s)), n)
        Q = R * P.inverse()
        if not are_equal(conjugate(BraidWord(n, (1,) * nu), Q), x.word):
            raise ValueError(f"{x.source}: normal form check failed")
        out.append((Q, nu))
    return out
