"""
Report-only searches around Z = P on vertex sums.

Nothing here asserts a result: pairs (G, H) with Z = P on both sides are
summed at every identification and the measured Z and P of each sum are
reported, together with a check of whether minimum path covers of Z = P
graphs can always be read as forcing chains.
"""

import time
from itertools import product
from typing import Iterator, List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field

from libs.core.errors import SearchBudgetExceeded
from libs.core.logging import get_logger
from libs.families import chains_force
from libs.forcing import CoverKind, Rule
from libs.generators import XorShift64Star, canonical, random_block_cycle, random_tree
from libs.graphs import Graph, from_edge_list, to_graph6, vertex_sum
from libs.solvers import covers_of_size, path_cover_number, zero_forcing_number

from .reports import ReportWriter

logger = get_logger(__name__)

SOURCES = ("trees", "block_cycle", "k4e")


class SumObservation(BaseModel):
    v_g: int
    v_h: int
    z: int
    p: int

    @property
    def counterexample(self) -> bool:
        return self.z != self.p


class PairReport(BaseModel):
    """Every identification of one pair"""
    source: str
    g: str
    h: str
    sums: List[SumObservation] = Field(default_factory=list)
    budget_exceeded: bool = False

    @property
    def counterexamples(self) -> List[SumObservation]:
        return [s for s in self.sums if s.counterexample]


class ChainCheck(BaseModel):
    """Whether every minimum path cover of a Z = P graph is a set of forcing chains"""
    graph6: str
    covers: int = 0
    # minimum path covers with no orientation whose starts force along them
    non_chain_covers: List[List[List[int]]] = Field(default_factory=list)

    @property
    def coincides(self) -> bool:
        return not self.non_chain_covers


class ConjectureReport(BaseModel):
    seed: int
    max_n: int
    budget: int
    pairs: int = 0
    sums: int = 0
    skipped_pairs: int = 0
    budget_exceeded: int = 0
    counterexamples: List[Tuple[str, str, int, int, int, int]] = Field(default_factory=list)
    chain_checks: int = 0
    chain_witnesses: List[ChainCheck] = Field(default_factory=list)
    elapsed: float = 0.0


def k4_minus_edge() -> Graph:
    return from_edge_list(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


def candidate_pairs(
    sources: List[str], trials: int, max_n: int, rng: XorShift64Star
) -> Iterator[Tuple[str, Graph, Graph]]:
    """Seeded (source, G, H) pairs with at most ``max_n`` vertices per side"""
    if "k4e" in sources:
        yield "k4e", k4_minus_edge(), k4_minus_edge()
    for _ in range(trials):
        if "trees" in sources:
            yield (
                "trees",
                random_tree(rng.between(1, max(1, max_n)), rng.next_u64()),
                random_tree(rng.between(1, max(1, max_n)), rng.next_u64()),
            )
        if "block_cycle" in sources:
            yield "block_cycle", _block_cycle(max_n, rng), _block_cycle(max_n, rng)


def _block_cycle(max_n: int, rng: XorShift64Star) -> Graph:
    if max_n < 2:
        return canonical("path", 1)
    while True:
        g = random_block_cycle(
            rng.between(1, max(1, max_n // 2)), max(2, min(5, max_n)), rng.next_u64()
        )
        if g.n <= max_n:
            return g


def _forces_some_way(graph: Graph, parts: Sequence[Sequence[int]]) -> bool:
    for flips in product((False, True), repeat=len(parts)):
        oriented = [list(reversed(p)) if f else list(p) for p, f in zip(parts, flips)]
        if chains_force(graph, Rule.STANDARD, oriented):
            return True
    return False


def check_chain_covers(graph: Graph, node_limit: int) -> ChainCheck:
    """Check every minimum path cover for an orientation whose starts force along it"""
    size = path_cover_number(graph, node_limit).value
    check = ChainCheck(graph6=to_graph6(graph))
    for cover in covers_of_size(graph, CoverKind.PATH_COVER, size, node_limit):
        check.covers += 1
        if not _forces_some_way(graph, cover.parts):
            check.non_chain_covers.append([list(p) for p in cover.parts])
    return check


def _z_equals_p(graph: Graph, node_limit: int) -> bool:
    return (
        zero_forcing_number(graph, node_limit).value
        == path_cover_number(graph, node_limit).value
    )


def search_conjecture(
    seed: int,
    max_n: int,
    budget: int,
    trials: int = 10,
    sources: Optional[List[str]] = None,
    writer: Optional[ReportWriter] = None,
) -> ConjectureReport:
    """Measure Z and P on vertex sums of Z = P graphs; exhaustion is reported"""
    sources = list(sources or SOURCES)
    rng = XorShift64Star(seed)
    report = ConjectureReport(seed=seed, max_n=max_n, budget=budget)
    start = time.perf_counter()
    checked = set()
    for source, g, h in candidate_pairs(sources, trials, max_n, rng):
        pair = PairReport(source=source, g=to_graph6(g), h=to_graph6(h))
        try:
            if not (_z_equals_p(g, budget) and _z_equals_p(h, budget)):
                report.skipped_pairs += 1
                continue
            for side in (g, h):
                key = to_graph6(side)
                if key not in checked:
                    checked.add(key)
                    check = check_chain_covers(side, budget)
                    report.chain_checks += 1
                    if not check.coincides:
                        report.chain_witnesses.append(check)
                        logger.info("chain_cover_witness", graph6=key)
            for v_g in g.vertices():
                for v_h in h.vertices():
                    total, _, _ = vertex_sum(g, h, v_g, v_h)
                    pair.sums.append(
                        SumObservation(
                            v_g=v_g,
                            v_h=v_h,
                            z=zero_forcing_number(total, budget).value,
                            p=path_cover_number(total, budget).value,
                        )
                    )
        except SearchBudgetExceeded as e:
            pair.budget_exceeded = True
            report.budget_exceeded += 1
            logger.info("search_budget_exhausted", source=source, error=str(e))
        report.pairs += 1
        report.sums += len(pair.sums)
        for s in pair.counterexamples:
            report.counterexamples.append((pair.g, pair.h, s.v_g, s.v_h, s.z, s.p))
            logger.warning("vertex_sum_counterexample", g=pair.g, h=pair.h, v_g=s.v_g, v_h=s.v_h)
        if writer is not None:
            record = pair.model_dump(mode="json")
            record["counterexamples"] = len(pair.counterexamples)
            writer.write(
                record,
                f"{source} {pair.g} + {pair.h}: {len(pair.sums)} sums, "
                f"{len(pair.counterexamples)} with Z != P",
            )
    report.elapsed = round(time.perf_counter() - start, 3)
    return report
