"""
Statistics and decoding on top of a finished coset-leader run.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import List, Optional

from clbc_engine import CLBCResult
from gf2_core import BinaryWord, ContractViolation


class MatphiUnavailable(ContractViolation):
    pass


@dataclass(frozen=True)
class CodeStats:
    n: int
    r: int
    k: int
    num_cosets: int
    wdcl: List[int]
    leader_counts: List[int]
    total_leaders: int
    covering_radius: int
    newton_radius: int
    unique_leader_cosets: int
    d: Optional[int] = None
    t: Optional[int] = None
    ball_cosets: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "k": self.k,
            "num_cosets": self.num_cosets,
            "wdcl": list(self.wdcl),
            "leader_counts": list(self.leader_counts),
            "total_leaders": self.total_leaders,
            "covering_radius": self.covering_radius,
            "newton_radius": self.newton_radius,
            "unique_leader_cosets": self.unique_leader_cosets,
            "d": self.d,
            "t": self.t,
            "ball_cosets": self.ball_cosets,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CodeStats":
        return cls(**{name: data.get(name) for name in cls.__dataclass_fields__})


@dataclass(frozen=True)
class DecodedWord:
    error: BinaryWord
    codeword: BinaryWord

    @property
    def distance(self) -> int:
        return self.error.weight


def compute_stats(result: CLBCResult, d: Optional[int] = None) -> CodeStats:
    n = result.n
    weights = [tau.weight for tau in result.transversal]
    counts = result.leader_table.counts()

    wdcl = [0] * (n + 1)
    for w in weights:
        wdcl[w] += 1

    t = ball_cosets = None
    if d is not None:
        t = (d - 1) // 2
        ball_cosets = sum(wdcl[: t + 1])

    return CodeStats(
        n=n,
        r=result.matrix.rows,
        k=n - result.rank,
        num_cosets=result.num_cosets,
        wdcl=wdcl,
        leader_counts=counts,
        total_leaders=sum(counts),
        covering_radius=max(weights),
        newton_radius=max(w for w, c in zip(weights, counts) if c == 1),
        unique_leader_cosets=sum(1 for c in counts if c == 1),
        d=d,
        t=t,
        ball_cosets=ball_cosets,
    )


def leader_count_multiset(result: CLBCResult) -> Counter:
    """{leader count: number of cosets with that many leaders}"""
    return Counter(result.leader_table.counts())


def error_capability(result: CLBCResult) -> int:
    """Largest w such that every word of weight <= w is the unique leader of its coset.

    Needs no minimum distance; agrees with (d - 1) // 2 whenever d exists.
    """
    n = result.n
    leaders_by_weight = Counter(w.weight for w in result.leader_table.all_leaders())
    cosets_by_weight = Counter(tau.weight for tau in result.transversal)
    t = -1
    for w in range(n + 1):
        if not leaders_by_weight[w] == cosets_by_weight[w] == comb(n, w):
            break
        t = w
    return t


def canonical_form(y: BinaryWord, result: CLBCResult, descending: bool = False) -> int:
    """Transversal index of the coset of y, found by walking Matphi from the zero word."""
    if result.matphi is None:
        raise MatphiUnavailable("canonical_form needs a result computed with compute_matphi=True")
    if y.length != result.n:
        raise ContractViolation(f"Word of length {y.length} does not match code length {result.n}")
    coordinates = y.support()
    if descending:
        coordinates.reverse()
    j = result.transversal.index_of(BinaryWord.zero(result.n))
    for i in coordinates:
        j = result.matphi.image(j, i)
    return j


def decode(y: BinaryWord, result: CLBCResult) -> List[DecodedWord]:
    """Every nearest codeword of y, one per leader of its coset."""
    j = canonical_form(y, result)
    return [DecodedWord(error=e, codeword=y + e) for e in result.leader_table.leaders(j)]
