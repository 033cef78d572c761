"""
Subcommand handlers; each returns the process exit code
"""

import json
import sys
from pathlib import Path
from typing import IO, Iterable, List, Optional

from pydantic import ValidationError

from libs.core.errors import (
    CertificateError,
    GraphFormatError,
    SearchBudgetExceeded,
    UnknownSuiteError,
)
from libs.core.logging import get_logger
from libs.forcing import Rule, is_forcing_set, validate_cover
from libs.generators import GenSpec, build
from libs.graphs import Graph, read_graph, to_dot, to_graph6
from libs.solvers import Parameter, ParameterResult, compute_parameters

from .conjecture import search_conjecture
from .reports import ReportWriter, summary_text
from .suites import SuiteRunner

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _recheck(graph: Graph, result: ParameterResult) -> None:
    """Certificates are re-verified before they are printed"""
    if result.parameter is Parameter.Z:
        ok = is_forcing_set(graph, result.forcing_set, Rule.STANDARD)
    elif result.parameter is Parameter.Z_PLUS:
        ok = is_forcing_set(graph, result.forcing_set, Rule.POSITIVE)
    else:
        validate_cover(graph, result.cover)
        ok = result.cover.size == result.value
    if not ok:
        raise CertificateError(f"{result.parameter.value} certificate failed re-verification")


def _write_dot(path: str, graph: Graph, results: Iterable[ParameterResult]) -> None:
    black = None
    parts = None
    for result in results:
        if result.parameter in (Parameter.Z, Parameter.Z_PLUS) and black is None:
            black = result.forcing_set
        elif result.parameter in (Parameter.P, Parameter.T) and parts is None:
            parts = result.cover.parts
    Path(path).write_text(to_dot(graph, black=black, parts=parts), encoding="utf-8")


def cmd_compute(
    text: str,
    names: List[str],
    budget: Optional[int] = None,
    dot: Optional[str] = None,
    fmt: str = "json",
    out: Optional[IO[str]] = None,
) -> int:
    out = out or sys.stdout
    try:
        graph = read_graph(text)
        parameters = [Parameter(name) for name in names]
    except (GraphFormatError, ValueError) as e:
        logger.error("bad_input", error=str(e))
        return EXIT_USAGE
    try:
        results = compute_parameters(graph, parameters, budget)
    except SearchBudgetExceeded as e:
        logger.error("budget_exceeded", error=str(e))
        return EXIT_BUDGET
    try:
        for result in results.values():
            _recheck(graph, result)
    except CertificateError as e:
        logger.error("certificate_rejected", error=str(e))
        return EXIT_FAILURE

    record = {
        "graph6": to_graph6(graph) if graph.n <= 62 else None,
        "n": graph.n,
        "parameters": {p.value: r.to_record() for p, r in results.items()},
    }
    if fmt == "text":
        out.write(", ".join(f"{p.value}={r.value}" for p, r in results.items()) + "\n")
    else:
        out.write(json.dumps(record, sort_keys=True) + "\n")
    if dot:
        _write_dot(dot, graph, results.values())
    return EXIT_OK


def cmd_verify(
    suite: str,
    seed: int,
    trials: Optional[int] = None,
    max_n: Optional[int] = None,
    budget: Optional[int] = None,
    fmt: str = "json",
    out: Optional[IO[str]] = None,
) -> int:
    runner = SuiteRunner(node_limit=budget)
    try:
        runner.get(suite)
    except UnknownSuiteError as e:
        logger.error("unknown_suite", error=str(e))
        return EXIT_USAGE
    writer = ReportWriter(f"{suite}-{seed}", fmt=fmt, stream=out)
    try:
        summary = runner.run(suite, seed, trials=trials, max_n=max_n, writer=writer)
        writer.write({"summary": summary.model_dump(mode="json")}, summary_text(summary))
    finally:
        writer.close()
    if summary.failed:
        return EXIT_FAILURE
    if summary.budget_exceeded:
        return EXIT_BUDGET
    return EXIT_OK


def cmd_search(
    seed: int,
    max_n: int,
    budget: int,
    trials: int = 10,
    sources: Optional[List[str]] = None,
    fmt: str = "json",
    out: Optional[IO[str]] = None,
) -> int:
    writer = ReportWriter(f"search-{seed}", fmt=fmt, stream=out)
    try:
        report = search_conjecture(seed, max_n, budget, trials, sources, writer)
        writer.write(
            {"summary": report.model_dump(mode="json")},
            f"search: {report.pairs} pairs, {report.sums} sums, "
            f"{len(report.counterexamples)} with Z != P, "
            f"{len(report.chain_witnesses)} covers not readable as chains, "
            f"{report.budget_exceeded} over budget",
        )
    finally:
        writer.close()
    return EXIT_OK


def cmd_gen(
    spec_json: str, dot: Optional[str] = None, out: Optional[IO[str]] = None
) -> int:
    out = out or sys.stdout
    try:
        spec = GenSpec.model_validate_json(spec_json)
        graph = build(spec)
    except (ValidationError, ValueError) as e:
        logger.error("bad_spec", error=str(e))
        return EXIT_USAGE
    out.write(to_graph6(graph) + "\n")
    if dot:
        Path(dot).write_text(to_dot(graph), encoding="utf-8")
    return EXIT_OK
