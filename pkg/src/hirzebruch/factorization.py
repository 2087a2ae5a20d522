"""Ordered braid factorizations, their verification, and degree audits."""

from __future__ import annotations

from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Any

from .braids import BraidWord, are_equal, exponent_sum, full_twist, product

NU_CLASSES = (1, 2, 3, "twist")


@dataclass(frozen=True)
class Factor:
    """One factor of a factorization.

    ``word`` is ``None`` for degree-only placeholders (6-points without a
    transcribed local table).  ``source`` groups factors in audits, e.g.
    ``"vertex:7"`` or ``"pair:2,5"``.
    """

    word: BraidWord | None
    source: str
    nu: int | str | None
    claimed_degree: int
    support: tuple[int, ...] = ()
    note: str = ""

    def __post_init__(self):
        if self.nu is not None and self.nu not in NU_CLASSES:
            raise ValueError(f"bad exponent class {self.nu!r}")
        if self.word is not None and exponent_sum(self.word) != self.claimed_degree:
            raise ValueError(
                f"{self.source}: exponent sum {exponent_sum(self.word)} "
                f"!= claimed degree {self.claimed_degree}"
            )

    @property
    def is_placeholder(self) -> bool:
        return self.word is None

    def to_json(self) -> dict[str, Any]:
        return {
            "word": None if self.word is None else list(self.word.letters),
            "source": self.source,
            "nu": self.nu,
            "claimed_degree": self.claimed_degree,
            "support": list(self.support),
            "note": self.note,
        }

    @classmethod
    def from_json(cls, data: dict[str, Any], strand_count: int) -> Factor:
        word = data.get("word")
        return cls(
            word=None if word is None else BraidWord(strand_count, tuple(word)),
            source=data["source"],
            nu=data.get("nu"),
            claimed_degree=int(data["claimed_degree"]),
            support=tuple(data.get("support", ())),
            note=data.get("note", ""),
        )


@dataclass(frozen=True)
class Factorization:
    strand_count: int
    factors: tuple[Factor, ...]
    complete: bool = True
    label: str = ""

    def __post_init__(self):
        for f in self.factors:
            if f.word is not None and f.word.strand_count != self.strand_count:
                raise ValueError(f"{f.source}: factor lives in B_{f.word.strand_count}")
        if self.complete and any(f.is_placeholder for f in self.factors):
            raise ValueError("a factorization with placeholders cannot be complete")

    def __len__(self):
        return len(self.factors)

    def total_degree(self) -> int:
        return sum(f.claimed_degree for f in self.factors)

    def product(self) -> BraidWord:
        if any(f.is_placeholder for f in self.factors):
            raise ValueError("cannot multiply placeholder factors")
        return product((f.word for f in self.factors), self.strand_count)

    def without(self, index: int) -> Factorization:
        factors = self.factors[:index] + self.factors[index + 1:]
        return Factorization(self.strand_count, factors, self.complete, self.label)

    def swapped(self, i: int, j: int) -> Factorization:
        factors = list(self.factors)
        factors[i], factors[j] = factors[j], factors[i]
        return Factorization(self.strand_count, tuple(factors), self.complete, self.label)

    def to_json(self) -> dict[str, Any]:
        return {
            "strand_count": self.strand_count,
            "complete": self.complete,
            "label": self.label,
            "factors": [f.to_json() for f in self.factors],
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> Factorization:
        n = int(data["strand_count"])
        return cls(
            strand_count=n,
            factors=tuple(Factor.from_json(f, n) for f in data["factors"]),
            complete=bool(data.get("complete", True)),
            label=data.get("label", ""),
        )


def verify_product_is_full_twist(f: Factorization) -> bool:
    """True iff the ordered product of the factors equals Delta^2_p."""
    if any(x.is_placeholder for x in f.factors):
        return False
    return are_equal(f.product(), full_twist(f.strand_count))


@dataclass
class DegreeAudit:
    strand_count: int
    expected: int
    total: int
    subtotals: "OrderedDict[str, int]" = field(default_factory=OrderedDict)
    placeholders: int = 0
    mismatched: list[str] = field(default_factory=list)

    @property
    def residual(self) -> int:
        return self.expected - self.total

    @property
    def passed(self) -> bool:
        return self.residual == 0 and not self.mismatched

    def to_json(self) -> dict[str, Any]:
        return {
            "strand_count": self.strand_count,
            "expected": self.expected,
            "total": self.total,
            "residual": self.residual,
            "passed": self.passed,
            "placeholders": self.placeholders,
            "mismatched": list(self.mismatched),
            "subtotals": dict(self.subtotals),
        }


def degree_audit(f: Factorization, p: int | None = None) -> DegreeAudit:
    """Sum claimed degrees per source and compare the total with p(p-1)."""
    p = f.strand_count if p is None else p
    subtotals: OrderedDict[str, int] = OrderedDict()
    mismatched = []
    placeholders = 0
    for x in f.factors:
        subtotals[x.source] = subtotals.get(x.source, 0) + x.claimed_degree
        if x.is_placeholder:
            placeholders += 1
        elif exponent_sum(x.word) != x.claimed_degree:
            mismatched.append(x.source)
    return DegreeAudit(
        strand_count=p,
        expected=p * (p - 1),
        total=f.total_degree(),
        subtotals=subtotals,
        placeholders=placeholders,
        mismatched=mismatched,
    )
