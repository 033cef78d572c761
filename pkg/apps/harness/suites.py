"""
Property suites run by ``forcing-lab verify``.

Each suite generates seeded instances and checks one family of equalities
against the exact solvers.
"""

import time
from abc import ABC, abstractmethod
from typing import Any, Dict, Iterator, List, Optional

from pydantic import BaseModel, Field

from libs.core.errors import ForcingLabError, SearchBudgetExceeded, UnknownSuiteError
from libs.core.logging import get_logger
from libs.families import (
    FamilySolution,
    block_cycle_solution,
    chordal_psd_identity,
    compose_vertex_sum,
    double_path_solution,
    fallback_counts,
    k_cluster_parameters,
    k_tree_tree_cover_odd,
    outerplanar_solution,
    reset_fallbacks,
    series_paths_solution,
    tree_solution,
)
from libs.forcing import (
    Rule,
    closure,
    derived_mask,
    extract_cover,
    is_forcing_set,
    is_induced_tree,
    validate_cover,
)
from libs.generators import GenFamily, GenSpec, XorShift64Star, build
from libs.graphs import Graph, members, to_graph6
from libs.solvers import (
    Parameter,
    compute_parameters,
    path_cover_number,
    psd_forcing_number,
    tree_cover_number,
    zero_forcing_number,
)
from libs.structure import (
    CertificateKind,
    PathSeriesEvidence,
    chordal_peo,
    classify_block_cycle,
    double_path_certificate,
    k_cluster_certificate,
    k_tree_certificate,
    verify_certificate,
)

from .reports import CheckOutcome, InstanceReport, ReportWriter, VerifyReport, instance_text

logger = get_logger(__name__)


class Instance(BaseModel):
    """Generated graphs plus the requests that rebuild them"""
    specs: List[GenSpec] = Field(default_factory=list)
    graphs: List[Graph]
    params: Dict[str, Any] = Field(default_factory=dict)

    @property
    def graph(self) -> Graph:
        return self.graphs[0]

    def describe(self) -> Dict[str, Any]:
        return {
            "specs": [s.model_dump(mode="json") for s in self.specs],
            "graph6": [to_graph6(g) for g in self.graphs],
            "params": self.params,
        }


def instance_of(*specs: GenSpec, **params: Any) -> Instance:
    return Instance(specs=list(specs), graphs=[build(s) for s in specs], params=params)


class Checks:
    """Collects check outcomes for one instance"""

    def __init__(self) -> None:
        self.outcomes: List[CheckOutcome] = []

    def equal(self, name: str, expected: Any, observed: Any) -> bool:
        passed = expected == observed
        self.outcomes.append(
            CheckOutcome(name=name, expected=expected, observed=observed, passed=passed)
        )
        return passed

    def holds(self, name: str, condition: bool, observed: Any = None) -> bool:
        self.outcomes.append(
            CheckOutcome(name=name, expected=True, observed=observed, passed=bool(condition))
        )
        return bool(condition)


class Suite(ABC):
    """Base class for verification suites"""

    name: str = ""
    default_trials: int = 50
    default_max_n: int = 12

    def __init__(self, node_limit: Optional[int] = None):
        self.node_limit = node_limit

    @abstractmethod
    def instances(self, trials: int, max_n: int, rng: XorShift64Star) -> Iterator[Instance]:
        """Seeded instances; the same rng state gives the same instances"""
        pass

    @abstractmethod
    def check(self, instance: Instance, checks: Checks) -> None:
        pass

    def z(self, graph: Graph) -> int:
        return zero_forcing_number(graph, self.node_limit).value

    def z_plus(self, graph: Graph) -> int:
        return psd_forcing_number(graph, self.node_limit).value

    def p(self, graph: Graph) -> int:
        return path_cover_number(graph, self.node_limit).value

    def t(self, graph: Graph) -> int:
        return tree_cover_number(graph, self.node_limit).value


class NamedGraphsSuite(Suite):
    name = "named_graphs"
    default_trials = 1
    default_max_n = 8

    def instances(self, trials: int, max_n: int, rng: XorShift64Star) -> Iterator[Instance]:
        for n in range(2, max_n + 1):
            yield instance_of(GenSpec(family=GenFamily.PATH, n=n), named="path")
            yield instance_of(GenSpec(family=GenFamily.COMPLETE, n=n), named="complete")
            yield instance_of(
                GenSpec(family=GenFamily.TREE, n=n, seed=rng.next_u64()), named="tree"
            )

    def check(self, instance: Instance, checks: Checks) -> None:
        g = instance.graph
        named = instance.params["named"]
        if named == "path":
            checks.equal("Z", 1, self.z(g))
            checks.equal("P", 1, self.p(g))
            checks.equal("Z+", 1, self.z_plus(g))
            checks.equal("T", 1, self.t(g))
        elif named == "complete":
            checks.equal("Z", g.n - 1, self.z(g))
            checks.equal("P", -(-g.n // 2), self.p(g))
            checks.equal("Z+", g.n - 1, self.z_plus(g))
        else:
            checks.equal("Z+", 1, self.z_plus(g))
            checks.equal("T", 1, self.t(g))


class BlockCycleSuite(Suite):
    name = "block_cycle_ZP"
    default_trials = 100
    default_max_n = 14

    def instances(self, trials: int, max_n: int, rng: XorShift64Star) -> Iterator[Instance]:
        for _ in range(trials):
            while True:
                spec = GenSpec(
                    family=GenFamily.BLOCK_CYCLE,
                    blocks=rng.between(1, max(1, max_n // 3)),
                    max_cycle=max(2, min(5, max_n)),
                    seed=rng.next_u64(),
                )
                instance = instance_of(spec)
                if instance.graph.n <= max_n:
                    yield instance
                    break

    def check(self, instance: Instance, checks: Checks) -> None:
        g = instance.graph
        cert = classify_block_cycle(g)
        if not checks.holds("recognised", cert is not None):
            return
        assert cert is not None
        verify_certificate(g, cert)
        solution = block_cycle_solution(g, cert)
        validate_cover(g, solution.cover)
        z, p = self.z(g), self.p(g)
        checks.equal("Z=P", z, p)
        checks.equal("solution size", z, solution.value)


class UnicyclicSuite(BlockCycleSuite):
    name = "unicyclic_ZP"
    default_trials = 50
    default_max_n = 14

    def instances(self, trials: int, max_n: int, rng: XorShift64Star) -> Iterator[Instance]:
        for _ in range(trials):
            n = rng.between(3, max(3, max_n))
            yield instance_of(
                GenSpec(
                    family=GenFamily.UNICYCLIC,
                    n=n,
                    cycle_length=rng.between(3, n),
                    seed=rng.next_u64(),
                )
            )

    def check(self, instance: Instance, checks: Checks) -> None:
        cert = classify_block_cycle(instance.graph)
        checks.equal("kind", CertificateKind.UNICYCLIC.value, cert.kind.value if cert else None)
        super().check(instance, checks)


class DoublePathSuite(Suite):
    name = "double_path"
    default_trials = 50
    default_max_n = 16

    def instances(self, trials: int, max_n: int, rng: XorShift64Star) -> Iterator[Instance]:
        for m in range(1, 5):
            for n in range(1, 5):
                if m * n <= max_n:
                    yield instance_of(GenSpec(family=GenFamily.GRID, m=m, n=n), grid=[m, n])
        if max_n < 4:
            return
        for _ in range(trials):
            k = rng.between(2, 3) if max_n >= 9 else 2
            lengths = [rng.between(1, max_n // k) for _ in range(k)]
            for i in range(1, k):
                if lengths[i - 1] == 1 and lengths[i] == 1:
                    lengths[i] = 2
            yield instance_of(
                GenSpec(
                    family=GenFamily.SERIES_PATHS,
                    lengths=lengths,
                    aligned=rng.chance(0.2),
                    seed=rng.next_u64(),
                ),
                paths=k,
            )

    def check(self, instance: Instance, checks: Checks) -> None:
        g = instance.graph
        if "grid" in instance.params:
            checks.equal("Z", min(instance.params["grid"]), self.z(g))
            return
        cert = double_path_certificate(g)
        if not checks.holds("recognised", cert is not None):
            return
        assert cert is not None
        if instance.params["paths"] == 2:
            checks.equal("kind", CertificateKind.DOUBLE_PATH.value, cert.kind.value)
        evidence = cert.evidence
        assert isinstance(evidence, PathSeriesEvidence)
        k = len(evidence.paths)
        if cert.kind is CertificateKind.DOUBLE_PATH:
            solution = double_path_solution(g, cert)
            checks.equal("Z", 2, self.z(g))
            checks.equal("P", 2, self.p(g))
        else:
            solution = series_paths_solution(g, cert)
            z = self.z(g)
            checks.holds("Z<=k", z <= k, observed=[z, k])
        checks.equal("solution size", k, solution.value)
        checks.holds(
            "chains are the covering paths",
            solution.cover.as_sets() == frozenset(frozenset(p) for p in evidence.paths),
        )


class P2IntervalSuite(Suite):
    name = "p2_interval"
    default_trials = 1
    default_max_n = 10

    def instances(self, trials: int, max_n: int, rng: XorShift64Star) -> Iterator[Instance]:
        side = min(5, max_n // 2)
        if side < 2:
            return
        for k in range(1, side + 1):
            yield instance_of(
                GenSpec(family=GenFamily.P2_INTERVAL, m=side, n=side, k=k), k=k
            )

    def check(self, instance: Instance, checks: Checks) -> None:
        g = instance.graph
        checks.equal("P", 2, self.p(g))
        checks.equal("Z", instance.params["k"] + 1, self.z(g))


class OuterplanarSuite(Suite):
    name = "outerplanar_ZT"
    default_trials = 100
    default_max_n = 12

    def instances(self, trials: int, max_n: int, rng: XorShift64Star) -> Iterator[Instance]:
        for _ in range(trials):
            yield instance_of(
                GenSpec(
                    family=GenFamily.OUTERPLANAR,
                    n=rng.between(3, max(3, max_n)),
                    inner_keep=round(rng.random(), 3),
                    outer_drop=round(0.3 * rng.random(), 3),
                    seed=rng.next_u64(),
                )
            )

    def check(self, instance: Instance, checks: Checks) -> None:
        g = instance.graph
        cover = tree_cover_number(g, self.node_limit).cover
        solution = outerplanar_solution(g, cover=cover)
        checks.equal("Z+=T", cover.size, self.z_plus(g))
        checks.equal("solution size", cover.size, solution.value)
        checks.holds("trees are the cover's parts", solution.cover.same_parts(cover))


class VertexSumSuite(Suite):
    name = "vertex_sum"
    default_trials = 50
    default_max_n = 16

    def _side(self, n_max: int, rng: XorShift64Star) -> GenSpec:
        n = rng.between(3, max(3, n_max))
        family = rng.choice([GenFamily.TREE, GenFamily.CYCLE, GenFamily.OUTERPLANAR])
        if family is GenFamily.CYCLE:
            return GenSpec(family=family, n=n)
        return GenSpec(family=family, n=n, inner_keep=round(rng.random(), 3), seed=rng.next_u64())

    def instances(self, trials: int, max_n: int, rng: XorShift64Star) -> Iterator[Instance]:
        side = min(8, max_n // 2)
        for _ in range(trials):
            yield instance_of(self._side(side, rng), self._side(side, rng))

    def _solve(self, graph: Graph) -> FamilySolution:
        if is_induced_tree(graph.adjacency, graph.full_mask):
            return tree_solution(graph)
        return outerplanar_solution(graph)

    def check(self, instance: Instance, checks: Checks) -> None:
        g, h = instance.graphs
        sol_g, sol_h = self._solve(g), self._solve(h)
        expected = sol_g.value + sol_h.value - 1
        for v_g in g.vertices():
            for v_h in h.vertices():
                composed = compose_vertex_sum(sol_g, sol_h, v_g, v_h)
                total = composed.graph
                checks.equal(
                    f"sum at ({v_g},{v_h})",
                    [expected] * 3,
                    [composed.value, self.z_plus(total), self.t(total)],
                )


class KClusterSuite(Suite):
    name = "kcluster_formulas"
    default_trials = 30
    default_max_n = 12

    def instances(self, trials: int, max_n: int, rng: XorShift64Star) -> Iterator[Instance]:
        combos = [(k, s) for k in (2, 3, 4) for s in sorted({1, 2, 3, k + 1})]
        for i in range(trials):
            k, s = combos[i % len(combos)]
            if k + 1 + s > max_n:
                continue
            yield instance_of(
                GenSpec(
                    family=GenFamily.K_CLUSTER,
                    k=k,
                    attachments=s,
                    extra=rng.between(s, max_n - k - 1),
                    seed=rng.next_u64(),
                ),
                k=k,
                s=s,
            )

    def check(self, instance: Instance, checks: Checks) -> None:
        g = instance.graph
        cert = k_cluster_certificate(g, instance.params["k"])
        if not checks.holds("recognised", cert is not None):
            return
        assert cert is not None
        formulas = k_cluster_parameters(cert)
        checks.equal("|S(G)|", instance.params["s"], formulas.s_size)
        checks.equal("Z+", formulas.z_plus, self.z_plus(g))
        checks.equal("T", formulas.t, self.t(g))


class OddKTreeSuite(Suite):
    name = "odd_ktree_cover"
    default_trials = 30
    default_max_n = 12

    def instances(self, trials: int, max_n: int, rng: XorShift64Star) -> Iterator[Instance]:
        for _ in range(trials):
            yield instance_of(
                GenSpec(
                    family=GenFamily.K_TREE,
                    n=rng.between(4, max(4, max_n)),
                    k=3,
                    cluster_only=rng.chance(0.3),
                    seed=rng.next_u64(),
                )
            )

    def check(self, instance: Instance, checks: Checks) -> None:
        g = instance.graph
        cert = k_tree_certificate(g, 3)
        if not checks.holds("recognised", cert is not None):
            return
        assert cert is not None
        cover = k_tree_tree_cover_odd(g, cert, 3)
        validate_cover(g, cover)
        checks.equal("cover size", 2, cover.size)
        checks.equal("T", cover.size, self.t(g))


class ChordalSuite(Suite):
    name = "chordal_identity"
    default_trials = 50
    default_max_n = 10

    def instances(self, trials: int, max_n: int, rng: XorShift64Star) -> Iterator[Instance]:
        for _ in range(trials):
            n = rng.between(2, max(2, max_n))
            yield instance_of(
                GenSpec(
                    family=GenFamily.CHORDAL,
                    n=n,
                    k=rng.between(1, min(3, n - 1)),
                    deletions=rng.between(0, n),
                    seed=rng.next_u64(),
                )
            )

    def check(self, instance: Instance, checks: Checks) -> None:
        g = instance.graph
        cert = chordal_peo(g)
        if not checks.holds("chordal", cert is not None):
            return
        assert cert is not None
        checks.equal("n-cc", chordal_psd_identity(g, cert), self.z_plus(g))


class InequalityChainSuite(Suite):
    name = "inequality_chain"
    default_trials = 300
    default_max_n = 9

    def instances(self, trials: int, max_n: int, rng: XorShift64Star) -> Iterator[Instance]:
        for _ in range(trials):
            yield instance_of(
                GenSpec(
                    family=GenFamily.GNP,
                    n=rng.between(1, max(1, max_n)),
                    p=round(0.15 + 0.7 * rng.random(), 3),
                    seed=rng.next_u64(),
                )
            )

    def check(self, instance: Instance, checks: Checks) -> None:
        g = instance.graph
        results = compute_parameters(
            g, [Parameter.Z, Parameter.Z_PLUS, Parameter.P, Parameter.T], self.node_limit
        )
        z, zp = results[Parameter.Z], results[Parameter.Z_PLUS]
        p, t = results[Parameter.P], results[Parameter.T]
        values = [t.value, zp.value, p.value, z.value]
        checks.holds("T<=Z+<=Z", t.value <= zp.value <= z.value, observed=values)
        checks.holds("T<=P<=Z", t.value <= p.value <= z.value, observed=values)

        validate_cover(g, p.cover)
        validate_cover(g, t.cover)
        checks.holds("Z set forces", is_forcing_set(g, z.forcing_set, Rule.STANDARD))
        checks.holds("Z+ set forces", is_forcing_set(g, zp.forcing_set, Rule.POSITIVE))
        for result, rule in ((z, Rule.STANDARD), (zp, Rule.POSITIVE)):
            extracted = extract_cover(closure(g, result.forcing_set, rule))
            validate_cover(g, extracted)
            checks.equal(f"{rule.value} extracted parts", result.value, extracted.size)

        rng = XorShift64Star(instance.specs[0].seed + 1)
        smaller = sum(1 << v for v in g.vertices() if rng.chance(0.3))
        larger = smaller | sum(1 << v for v in g.vertices() if rng.chance(0.3))
        standard = [derived_mask(g.adjacency, b, Rule.STANDARD) for b in (smaller, larger)]
        positive = [derived_mask(g.adjacency, b, Rule.POSITIVE) for b in (smaller, larger)]
        checks.holds("standard closure monotone", standard[0] & ~standard[1] == 0)
        checks.holds("positive closure monotone", positive[0] & ~positive[1] == 0)
        checks.holds(
            "standard inside positive",
            standard[1] & ~positive[1] == 0,
            observed=[list(members(standard[1])), list(members(positive[1]))],
        )


class SuiteRunner:
    """Registered suites and the loop that runs them instance by instance"""

    def __init__(self, node_limit: Optional[int] = None):
        self.suites: Dict[str, Suite] = {}
        for suite_class in (
            NamedGraphsSuite,
            BlockCycleSuite,
            UnicyclicSuite,
            DoublePathSuite,
            P2IntervalSuite,
            OuterplanarSuite,
            VertexSumSuite,
            KClusterSuite,
            OddKTreeSuite,
            ChordalSuite,
            InequalityChainSuite,
        ):
            self.add_suite(suite_class(node_limit))

    def add_suite(self, suite: Suite) -> None:
        self.suites[suite.name] = suite

    def names(self) -> List[str]:
        return list(self.suites)

    def get(self, name: str) -> Suite:
        try:
            return self.suites[name]
        except KeyError:
            raise UnknownSuiteError(
                f"unknown suite {name!r}; known suites: {', '.join(self.suites)}"
            ) from None

    def run_instance(self, suite: Suite, index: int, instance: Instance) -> InstanceReport:
        checks = Checks()
        report = InstanceReport(suite=suite.name, index=index, instance=instance.describe())
        start = time.perf_counter()
        try:
            suite.check(instance, checks)
        except SearchBudgetExceeded as e:
            report.budget_exceeded = True
            report.error = str(e)
        except ForcingLabError as e:
            report.error = f"{type(e).__name__}: {e}"
            logger.warning("instance_error", suite=suite.name, index=index, error=report.error)
        report.checks = checks.outcomes
        report.elapsed = round(time.perf_counter() - start, 4)
        return report

    def run(
        self,
        name: str,
        seed: int,
        trials: Optional[int] = None,
        max_n: Optional[int] = None,
        writer: Optional[ReportWriter] = None,
    ) -> VerifyReport:
        suite = self.get(name)
        trials = trials if trials is not None else suite.default_trials
        max_n = max_n if max_n is not None else suite.default_max_n
        summary = VerifyReport(suite=name, seed=seed, trials=trials, max_n=max_n)
        rng = XorShift64Star(seed)
        reset_fallbacks()
        start = time.perf_counter()
        for index, instance in enumerate(suite.instances(trials, max_n, rng)):
            report = self.run_instance(suite, index, instance)
            summary.instances += 1
            if report.budget_exceeded:
                summary.budget_exceeded += 1
            elif not report.passed:
                summary.failed += 1
                summary.failures.append(report)
            if writer is not None:
                writer.write(report.model_dump(mode="json"), instance_text(report))
        summary.elapsed = round(time.perf_counter() - start, 3)
        summary.fallbacks = fallback_counts()
        logger.info(
            "suite_finished",
            suite=name,
            instances=summary.instances,
            failed=summary.failed,
            budget_exceeded=summary.budget_exceeded,
            elapsed=summary.elapsed,
            fallbacks=sum(summary.fallbacks.values()),
        )
        return summary
