"""
Coset leader enumeration for binary codes
Walks the weight-compatible order from the zero word, extending every coset
leader it meets by one coordinate, and records on the way the transversal
of least coset representatives, the full leader set of every coset and the
Matphi table of the Groebner representation.
"""

from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Set, Tuple

import numpy as np

from gf2_core import BinaryWord, ContractViolation, GF2Matrix, OrderSpec, Syndrome, rank, syndrome

logger = logging.getLogger(__name__)

NOT_FOUND = None


class EngineInvariantError(RuntimeError):
    pass


class WorkList:
    """Ordered set of pending words, bucketed by weight.

    Each bucket is a heap keyed by the negated word value, which is the
    tie-break order within one weight. A word is held at most once.
    """

    def __init__(self, order: OrderSpec) -> None:
        self.order = order
        self._buckets: Dict[int, List[int]] = {}
        self._members: Set[int] = set()
        self._min_weight = order.n + 1

    def push(self, word: BinaryWord) -> bool:
        """Insert a word; returns False if it was already pending."""
        if word.length != self.order.n:
            raise ContractViolation(f"Word of length {word.length} pushed on a worklist for n={self.order.n}")
        if word.value in self._members:
            return False
        self._members.add(word.value)
        w = word.weight
        heapq.heappush(self._buckets.setdefault(w, []), -word.value)
        if w < self._min_weight:
            self._min_weight = w
        return True

    def pop(self) -> BinaryWord:
        if not self._members:
            raise ContractViolation("next_term called on an empty worklist")
        while not self._buckets.get(self._min_weight):
            self._min_weight += 1
        value = -heapq.heappop(self._buckets[self._min_weight])
        self._members.discard(value)
        return BinaryWord(self.order.n, value)

    def peek(self) -> BinaryWord:
        if not self._members:
            raise ContractViolation("peek on an empty worklist")
        w = self._min_weight
        while not self._buckets.get(w):
            w += 1
        return BinaryWord(self.order.n, -self._buckets[w][0])

    def __contains__(self, word: BinaryWord) -> bool:
        return word.length == self.order.n and word.value in self._members

    def __len__(self) -> int:
        return len(self._members)

    def __bool__(self) -> bool:
        return bool(self._members)


class Transversal:
    """Least coset representatives tau_0, tau_1, ... in discovery order.

    Indices are 0-based; index 0 is always the zero word. Lookups by
    syndrome and by exact word both go through dictionaries.
    """

    def __init__(self, syndrome_length: int) -> None:
        self.syndrome_length = syndrome_length
        self._words: List[BinaryWord] = []
        self._syndromes: List[int] = []
        self._by_syndrome: Dict[int, int] = {}
        self._by_word: Dict[int, int] = {}

    def append(self, word: BinaryWord, s: Syndrome) -> int:
        if s.value in self._by_syndrome:
            raise EngineInvariantError(f"Syndrome {s} already represented by {self._words[self._by_syndrome[s.value]]}")
        index = len(self._words)
        self._words.append(word)
        self._syndromes.append(s.value)
        self._by_syndrome[s.value] = index
        self._by_word[word.value] = index
        return index

    def member(self, s: Syndrome) -> Optional[int]:
        return self._by_syndrome.get(s.value, NOT_FOUND)

    def index_of(self, word: BinaryWord) -> Optional[int]:
        """Position of this exact word in N, not of its coset."""
        return self._by_word.get(word.value, NOT_FOUND)

    def syndrome_of(self, index: int) -> Syndrome:
        return Syndrome(self.syndrome_length, self._syndromes[index])

    def __getitem__(self, index: int) -> BinaryWord:
        return self._words[index]

    def __iter__(self) -> Iterator[BinaryWord]:
        return iter(self._words)

    def __len__(self) -> int:
        return len(self._words)


@dataclass(frozen=True, eq=False)
class MatphiTable:
    """phi(j, e_i) for transversal index j and coordinate i (1-based).

    Unassigned entries hold -1; a finished run leaves none.
    """

    table: np.ndarray

    @classmethod
    def from_assignments(cls, assignments: Dict[Tuple[int, int], int], m: int, n: int) -> "MatphiTable":
        table = np.full((m, n), -1, dtype=np.int64)
        for (j, i), target in assignments.items():
            table[j, i - 1] = target
        table.setflags(write=False)
        return cls(table)

    def image(self, index: int, coordinate: int) -> int:
        return int(self.table[index, coordinate - 1])

    def is_total(self) -> bool:
        return bool(np.all(self.table >= 0))

    def rows(self) -> List[List[int]]:
        return self.table.tolist()


class CosetLeaderTable:
    """All leaders of every coset, keyed by transversal index.

    Pops are monotone in the order, so each entry is already sorted and its
    first word is the transversal element.
    """

    def __init__(self, entries: Optional[List[List[BinaryWord]]] = None) -> None:
        self._entries: List[List[BinaryWord]] = entries if entries is not None else []

    def open(self, word: BinaryWord) -> int:
        self._entries.append([word])
        return len(self._entries) - 1

    def extend(self, index: int, word: BinaryWord) -> None:
        self._entries[index].append(word)

    def leaders(self, index: int) -> Tuple[BinaryWord, ...]:
        return tuple(self._entries[index])

    def counts(self) -> List[int]:
        return [len(entry) for entry in self._entries]

    @property
    def total(self) -> int:
        return sum(len(entry) for entry in self._entries)

    def all_leaders(self) -> Iterator[BinaryWord]:
        for entry in self._entries:
            yield from entry

    def __iter__(self) -> Iterator[Tuple[BinaryWord, ...]]:
        return (tuple(entry) for entry in self._entries)

    def __len__(self) -> int:
        return len(self._entries)


@dataclass(frozen=True, eq=False)
class CLBCResult:
    matrix: GF2Matrix
    order: OrderSpec
    transversal: Transversal
    matphi: Optional[MatphiTable]
    leader_table: CosetLeaderTable
    iteration_count: int
    insertions: int = 0
    rank: int = 0
    stopped_early: bool = False

    @property
    def n(self) -> int:
        return self.matrix.cols

    @property
    def num_cosets(self) -> int:
        return len(self.transversal)

    @property
    def total_leaders(self) -> int:
        return self.leader_table.total

    def coset_of(self, word: BinaryWord) -> int:
        """Transversal index of the coset holding this word."""
        j = self.transversal.member(syndrome(self.matrix, word))
        if j is None:
            raise EngineInvariantError(f"No coset found for {word}; the run is incomplete")
        return j


def insert_next(wl: WorkList, tau: BinaryWord, order: OrderSpec) -> int:
    """Push tau + e_k for every k outside supp(tau); returns how many were new."""
    if tau.length != order.n:
        raise ContractViolation(f"Word of length {tau.length} does not match order for n={order.n}")
    n = order.n
    added = 0
    for bit in range(n):
        mask = 1 << bit
        if not tau.value & mask:
            added += wl.push(BinaryWord(n, tau.value | mask))
    return added


def next_term(wl: WorkList) -> BinaryWord:
    return wl.pop()


def member(s: Syndrome, idx: Transversal) -> Optional[int]:
    return idx.member(s)


@dataclass(frozen=True)
class Radii:
    covering_radius: int
    newton_radius: int
    iteration_count: int


class CLBCEngine:
    """One enumeration over the words of length n.

    With radii_only the walk stops once the last coset has been found and
    every word of that weight has been popped; the leader table is complete
    at that point, Matphi is not.
    """

    def __init__(
        self,
        matrix: GF2Matrix,
        order: Optional[OrderSpec] = None,
        compute_matphi: bool = True,
        radii_only: bool = False,
    ) -> None:
        self.matrix = matrix
        self.order = order or OrderSpec(matrix.cols)
        self.radii_only = radii_only
        self.compute_matphi = compute_matphi and not radii_only
        if self.order.n != matrix.cols:
            raise ContractViolation(f"Order is for n={self.order.n} but the matrix has {matrix.cols} columns")

    def run(self) -> CLBCResult:
        H, order = self.matrix, self.order
        n = H.cols
        logger.info("CLBC run: n=%d r=%d matphi=%s radii_only=%s", n, H.rows, self.compute_matphi, self.radii_only)

        h_rank = rank(H)
        total_cosets = 1 << h_rank
        wl = WorkList(order)
        wl.push(BinaryWord.zero(n))
        transversal = Transversal(H.rows)
        leaders = CosetLeaderTable()
        phi: Dict[Tuple[int, int], int] = {}
        iterations = 0
        insertions = 1
        previous_key = None
        stopped_early = False

        while wl:
            if self.radii_only and len(transversal) == total_cosets:
                # covering radius is the weight of the last coset found
                if wl.peek().weight > transversal[-1].weight:
                    stopped_early = True
                    break
            tau = next_term(wl)
            iterations += 1
            key = order.key(tau)
            if previous_key is not None and key < previous_key:
                raise EngineInvariantError(f"Non-monotone pop: {tau} after a larger word")
            previous_key = key

            s = syndrome(H, tau)
            j = member(s, transversal)
            if j is not NOT_FOUND:
                if self.compute_matphi:
                    for k, parent in self._parents_in_n(tau, transversal):
                        phi[(parent, k)] = j
                if tau.weight == transversal[j].weight:
                    leaders.extend(j, tau)
                    insert_next(wl, tau, order)
                    insertions += n - tau.weight
            else:
                m = transversal.append(tau, s)
                leaders.open(tau)
                logger.debug("coset %d: %s (syndrome %s)", m, tau, s)
                insert_next(wl, tau, order)
                insertions += n - tau.weight
                if self.compute_matphi:
                    for k, parent in self._parents_in_n(tau, transversal):
                        phi[(parent, k)] = m
                        phi[(m, k)] = parent

        matphi = MatphiTable.from_assignments(phi, len(transversal), n) if self.compute_matphi else None
        result = CLBCResult(
            matrix=H,
            order=order,
            transversal=transversal,
            matphi=matphi,
            leader_table=leaders,
            iteration_count=iterations,
            insertions=insertions,
            rank=h_rank,
            stopped_early=stopped_early,
        )
        logger.info(
            "CLBC done: %d cosets, %d leaders, %d iterations%s",
            result.num_cosets, result.total_leaders, iterations, " (stopped early)" if stopped_early else "",
        )
        return result

    @staticmethod
    def _parents_in_n(tau: BinaryWord, transversal: Transversal) -> Iterator[Tuple[int, int]]:
        """(k, index) for every k in supp(tau) with tau + e_k an element of N."""
        for k in tau.support():
            parent = transversal.index_of(tau.flip(k))
            if parent is not NOT_FOUND:
                yield k, parent


def clbc_run(
    H: GF2Matrix,
    order: Optional[OrderSpec] = None,
    compute_matphi: bool = True,
    radii_only: bool = False,
) -> CLBCResult:
    return CLBCEngine(H, order, compute_matphi, radii_only).run()


def clbc_radii(H: GF2Matrix, order: Optional[OrderSpec] = None) -> Radii:
    """Covering and Newton radius from a run that stops as soon as both are final."""
    result = clbc_run(H, order, compute_matphi=False, radii_only=True)
    weights = [tau.weight for tau in result.transversal]
    counts = result.leader_table.counts()
    return Radii(
        covering_radius=max(weights),
        newton_radius=max(w for w, c in zip(weights, counts) if c == 1),
        iteration_count=result.iteration_count,
    )
