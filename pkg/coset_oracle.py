"""
Brute-force ground truth for small codes
Scans every word of F_2^n, groups by syndrome and keeps the minimum-weight
words of each group. Shares no code path with the engine beyond syndrome
arithmetic, so it can be used to check it.
"""

from __future__ import annotations

import logging
import sys
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np
from tqdm import tqdm

from clbc_config import check_oracle_cap, get_oracle_cap
from clbc_engine import CLBCResult
from gf2_core import BinaryWord, GF2Matrix, OrderSpec, Syndrome, nullspace_basis, rank, syndrome

logger = logging.getLogger(__name__)

CHUNK_BITS = 16


class OracleCapExceeded(RuntimeError):
    def __init__(self, message: str, n: Optional[int] = None, k: Optional[int] = None, cap: Optional[int] = None):
        super().__init__(message)
        self.n = n
        self.k = k
        self.cap = cap


@dataclass(frozen=True)
class OracleCoset:
    syndrome: Syndrome
    min_weight: int
    leaders: Tuple[BinaryWord, ...]
    coset_size: int


@dataclass(frozen=True)
class OracleCosetTable:
    n: int
    rank: int
    cosets: Dict[int, OracleCoset]

    @property
    def num_cosets(self) -> int:
        return len(self.cosets)

    @property
    def total_leaders(self) -> int:
        return sum(len(c.leaders) for c in self.cosets.values())

    def get(self, s: Syndrome) -> Optional[OracleCoset]:
        return self.cosets.get(s.value)

    def __getitem__(self, s: Syndrome) -> OracleCoset:
        return self.cosets[s.value]

    def __iter__(self) -> Iterator[OracleCoset]:
        return iter(self.cosets.values())

    def __len__(self) -> int:
        return len(self.cosets)


@dataclass
class VerificationReport:
    cosets_checked: int = 0
    discrepancies: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.discrepancies

    def add(self, message: str) -> None:
        self.discrepancies.append(message)


def _resolve_cap(cap: Optional[int]) -> int:
    return get_oracle_cap() if cap is None else check_oracle_cap(cap)


def _word_dtype(bits: int) -> type:
    # syndromes and values wider than 63 bits fall back to Python ints
    return np.uint64 if bits <= 63 else object


def _scan_chunks(H: GF2Matrix, progress: bool = False) -> Iterator[Tuple[np.ndarray, np.ndarray, np.ndarray]]:
    """Yield (values, syndromes, weights) arrays covering all 2^n words."""
    n = H.cols
    dtype = _word_dtype(max(n, H.rows))
    columns = [H.syndrome_value(1 << bit) for bit in range(n)]
    chunk = 1 << min(CHUNK_BITS, n)
    num_chunks = (1 << n) // chunk
    disable = not progress or sys.stderr is None

    for c in tqdm(range(num_chunks), desc="oracle scan", disable=disable):
        start = c * chunk
        if dtype is object:
            values = np.array(range(start, start + chunk), dtype=object)
        else:
            values = np.arange(start, start + chunk, dtype=np.uint64)
        syndromes = np.zeros(chunk, dtype=dtype)
        weights = np.zeros(chunk, dtype=np.int64)
        for bit in range(n):
            if dtype is object:
                hit = np.array([(v >> bit) & 1 for v in values], dtype=bool)
            else:
                hit = ((values >> np.uint64(bit)) & np.uint64(1)).astype(bool)
            syndromes[hit] ^= dtype(columns[bit]) if dtype is not object else columns[bit]
            weights += hit
        logger.debug("oracle chunk %d/%d", c + 1, num_chunks)
        yield values, syndromes, weights


def _check_cap(H: GF2Matrix, cap: Optional[int]) -> None:
    cap = _resolve_cap(cap)
    if H.cols > cap:
        raise OracleCapExceeded(
            f"Refusing to scan 2^{H.cols} words: n={H.cols} exceeds the oracle cap {cap}",
            n=H.cols, cap=cap,
        )


def enumerate_cosets(H: GF2Matrix, cap: Optional[int] = None, progress: bool = False) -> OracleCosetTable:
    _check_cap(H, cap)
    n = H.cols
    order = OrderSpec(n)
    best_weight: Dict[int, int] = {}
    best_words: Dict[int, List[int]] = {}
    sizes: Dict[int, int] = {}

    for values, syndromes, weights in _scan_chunks(H, progress):
        keys, inverse = np.unique(syndromes, return_inverse=True)
        inverse = inverse.reshape(-1)
        local_min = np.full(len(keys), n + 1, dtype=np.int64)
        np.minimum.at(local_min, inverse, weights)
        counts = np.bincount(inverse, minlength=len(keys))
        for key, count in zip(keys.tolist(), counts.tolist()):
            sizes[int(key)] = sizes.get(int(key), 0) + int(count)

        is_min = weights == local_min[inverse]
        for key, value, w in zip(syndromes[is_min].tolist(), values[is_min].tolist(), weights[is_min].tolist()):
            key = int(key)
            current = best_weight.get(key)
            if current is None or w < current:
                best_weight[key] = w
                best_words[key] = [int(value)]
            elif w == current:
                best_words[key].append(int(value))

    cosets = {}
    for key in sorted(best_weight):
        leaders = sorted((BinaryWord(n, v) for v in best_words[key]), key=order.key)
        cosets[key] = OracleCoset(
            syndrome=Syndrome(H.rows, key),
            min_weight=best_weight[key],
            leaders=tuple(leaders),
            coset_size=sizes[key],
        )
    table = OracleCosetTable(n=n, rank=rank(H), cosets=cosets)
    logger.info("oracle: %d cosets, %d leaders", table.num_cosets, table.total_leaders)
    return table


def _popcount(values: np.ndarray) -> np.ndarray:
    if values.dtype == object:
        return np.array([int(v).bit_count() for v in values], dtype=np.int64)
    as_bytes = values.astype(np.uint64).view(np.uint8).reshape(-1, 8)
    return np.unpackbits(as_bytes, axis=1).sum(axis=1).astype(np.int64)


def min_distance_by_span(H: GF2Matrix, cap: Optional[int] = None) -> Optional[int]:
    """Minimum weight over the 2^k - 1 nonzero codewords."""
    basis = [w.value for w in nullspace_basis(H)]
    k = len(basis)
    cap = _resolve_cap(cap)
    if k > cap:
        raise OracleCapExceeded(f"Refusing to enumerate 2^{k} codewords: k={k} exceeds the oracle cap {cap}", k=k, cap=cap)
    if k == 0:
        return None
    dtype = _word_dtype(H.cols)
    best = None
    chunk = 1 << min(CHUNK_BITS, k)
    for start in range(0, 1 << k, chunk):
        masks = np.arange(start, start + chunk, dtype=np.uint64)
        words = np.zeros(chunk, dtype=dtype)
        for b, vec in enumerate(basis):
            hit = ((masks >> np.uint64(b)) & np.uint64(1)).astype(bool)
            words[hit] ^= dtype(vec) if dtype is not object else vec
        weights = _popcount(words)
        positive = weights[weights > 0]
        if positive.size:
            low = int(positive.min())
            best = low if best is None else min(best, low)
    return best


def min_distance_by_scan(H: GF2Matrix, cap: Optional[int] = None) -> Optional[int]:
    """Minimum positive weight inside the zero-syndrome coset."""
    _check_cap(H, cap)
    best = None
    for _, syndromes, weights in _scan_chunks(H):
        candidates = weights[(syndromes == 0) & (weights > 0)]
        if candidates.size:
            low = int(candidates.min())
            best = low if best is None else min(best, low)
    return best


def min_distance(H: GF2Matrix, cap: Optional[int] = None) -> Optional[int]:
    """Minimum distance d, or None for the zero code (k = 0)."""
    cap = _resolve_cap(cap)
    k = H.cols - rank(H)
    if k <= cap:
        return min_distance_by_span(H, cap)
    if H.cols <= cap:
        return min_distance_by_scan(H, cap)
    raise OracleCapExceeded(
        f"Neither path fits the oracle cap {cap}: n={H.cols}, k={k}", n=H.cols, k=k, cap=cap,
    )


def nearest_distance(truth: OracleCosetTable, H: GF2Matrix, y: BinaryWord) -> int:
    """min over codewords c of d(y, c), read off the oracle table."""
    return truth[syndrome(H, y)].min_weight


def verify(result: CLBCResult, truth: OracleCosetTable) -> VerificationReport:
    """Compare an engine result against the oracle, coset by coset."""
    report = VerificationReport()
    H = result.matrix
    order = result.order

    if result.num_cosets != truth.num_cosets:
        report.add(f"coset count: engine {result.num_cosets}, oracle {truth.num_cosets}")
    if result.total_leaders != truth.total_leaders:
        report.add(f"leader count: engine {result.total_leaders}, oracle {truth.total_leaders}")

    seen = set()
    for j, tau in enumerate(result.transversal):
        report.cosets_checked += 1
        s = syndrome(H, tau)
        if s.value in seen:
            report.add(f"coset {j}: syndrome {s} repeated in the transversal")
            continue
        seen.add(s.value)
        expected = truth.get(s)
        if expected is None:
            report.add(f"coset {j}: syndrome {s} unknown to the oracle")
            continue
        leaders = result.leader_table.leaders(j)
        if set(leaders) != set(expected.leaders):
            missing = sorted(map(str, set(expected.leaders) - set(leaders)))
            extra = sorted(map(str, set(leaders) - set(expected.leaders)))
            report.add(f"coset {j} ({tau}): missing leaders {missing}, unexpected {extra}")
        canonical = min(expected.leaders, key=order.key)
        if tau != canonical:
            report.add(f"coset {j}: representative {tau} is not the least leader {canonical}")

    for coset in truth:
        if coset.syndrome.value not in seen:
            report.add(f"syndrome {coset.syndrome} has no coset in the engine result")
    return report
