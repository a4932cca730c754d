"""
Reading parity-check matrices and writing result documents.

Matrix files hold one row per line. Bits may be separated by whitespace or
not, '#' starts a comment and blank lines are ignored.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import List, Optional

from clbc_config import TOOL_VERSION
from clbc_engine import CLBCResult
from code_analysis import CodeStats
from gf2_core import ContractViolation, GF2Matrix


class MatrixParseError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None) -> None:
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


def parse_matrix(text: str) -> GF2Matrix:
    rows = []
    first_line = None
    for number, raw in enumerate(text.splitlines(), 1):
        content = raw.split("#", 1)[0]
        bits = "".join(content.split())
        if not bits:
            continue
        bad = [c for c in bits if c not in "01"]
        if bad:
            raise MatrixParseError(f"illegal character {bad[0]!r}", line=number)
        if rows and len(bits) != len(rows[0]):
            raise MatrixParseError(
                f"row has {len(bits)} entries, expected {len(rows[0])} (from line {first_line})", line=number,
            )
        if not rows:
            first_line = number
        rows.append([int(c) for c in bits])

    if not rows:
        raise MatrixParseError("no matrix rows found", line=max(1, len(text.splitlines())))
    try:
        return GF2Matrix.from_rows(rows)
    except ContractViolation as e:
        raise MatrixParseError(str(e), line=first_line)


def load_matrix(path: str) -> GF2Matrix:
    with open(path, "r", encoding="utf-8") as f:
        return parse_matrix(f.read())


def _check_word(bits: str, n: int) -> str:
    if len(bits) != n or any(c not in "01" for c in bits):
        raise ContractViolation(f"Word string {bits!r} is not {n} characters of 0/1")
    return bits


@dataclass
class CosetRecord:
    syndrome: str
    canonical: str
    leaders: List[str]


@dataclass
class OutputDocument:
    n: int
    r: int
    k: int
    num_cosets: int
    cosets: List[CosetRecord]
    stats: dict
    order: str
    iteration_count: int
    matphi: Optional[List[List[int]]] = None
    tool_version: str = TOOL_VERSION
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "code": {"n": self.n, "r": self.r, "k": self.k, "num_cosets": self.num_cosets},
            "cosets": [
                {"index": j, "syndrome": c.syndrome, "canonical": c.canonical, "leaders": list(c.leaders)}
                for j, c in enumerate(self.cosets, 1)
            ],
            "matphi": self.matphi,
            "stats": self.stats,
            "provenance": {
                "order": self.order,
                "tool_version": self.tool_version,
                "iteration_count": self.iteration_count,
                **self.extra,
            },
        }

    @classmethod
    def from_dict(cls, data: dict) -> "OutputDocument":
        code = data["code"]
        n = code["n"]
        cosets = [
            CosetRecord(
                syndrome=c["syndrome"],
                canonical=_check_word(c["canonical"], n),
                leaders=[_check_word(w, n) for w in c["leaders"]],
            )
            for c in data["cosets"]
        ]
        provenance = dict(data["provenance"])
        return cls(
            n=n,
            r=code["r"],
            k=code["k"],
            num_cosets=code["num_cosets"],
            cosets=cosets,
            stats=data["stats"],
            order=provenance.pop("order"),
            iteration_count=provenance.pop("iteration_count"),
            matphi=data.get("matphi"),
            tool_version=provenance.pop("tool_version"),
            extra=provenance,
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "OutputDocument":
        return cls.from_dict(json.loads(text))

    def save(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as f:
            f.write(self.to_json())
            f.write("\n")


def build_document(result: CLBCResult, stats: CodeStats, include_matphi: bool = True) -> OutputDocument:
    cosets = [
        CosetRecord(
            syndrome=str(result.transversal.syndrome_of(j)),
            canonical=str(tau),
            leaders=[str(w) for w in result.leader_table.leaders(j)],
        )
        for j, tau in enumerate(result.transversal)
    ]
    matphi = None
    if include_matphi and result.matphi is not None:
        # 1-based transversal indices on the wire
        matphi = [[target + 1 for target in row] for row in result.matphi.rows()]
    return OutputDocument(
        n=result.n,
        r=result.matrix.rows,
        k=result.n - result.rank,
        num_cosets=result.num_cosets,
        cosets=cosets,
        stats=stats.to_dict(),
        order=result.order.identifier,
        iteration_count=result.iteration_count,
        matphi=matphi,
    )
