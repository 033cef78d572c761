"""
Round-synchronous colour-change processes.

Within a round every legal force is identified against the round-start black
set and all of them are applied together. A white vertex that several black
vertices could force records the smallest forcer. Under the positive rule the
white components are recomputed each round and a forcer records one force per
component it can force into.
"""

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..core.errors import CertificateError, IncompleteRunError
from ..graphs.bits import component_masks, mask_of, members
from ..graphs.graph import Graph
from .covers import tree_parents
from .models import Cover, CoverKind, Force, ForcingRun, Rule

# (forcer, forced, witness component mask or 0)
_Candidate = Tuple[int, int, int]


def _single(mask: int) -> bool:
    return mask != 0 and mask & (mask - 1) == 0


def legal_forces(
    adjacency: Sequence[int], black: int, rule: Rule, active: int
) -> List[_Candidate]:
    """Every legal force from ``black`` inside ``active``, ascending by forcer"""
    white = active & ~black
    found: List[_Candidate] = []
    if not white:
        return found
    if rule is Rule.STANDARD:
        for v in members(black & active):
            nb = adjacency[v] & white
            if _single(nb):
                found.append((v, nb.bit_length() - 1, 0))
        return found
    comps = component_masks(adjacency, white)
    for v in members(black & active):
        nb = adjacency[v] & white
        if not nb:
            continue
        for comp in comps:
            hit = nb & comp
            if _single(hit):
                found.append((v, hit.bit_length() - 1, comp))
    return found


def derived_mask(
    adjacency: Sequence[int], black: int, rule: Rule, active: Optional[int] = None
) -> int:
    """Final black set of the closure, without recording forces"""
    if active is None:
        active = (1 << len(adjacency)) - 1
    black &= active
    while True:
        white = active & ~black
        if not white:
            return black
        new = 0
        if rule is Rule.STANDARD:
            for v in members(black):
                nb = adjacency[v] & white
                if _single(nb):
                    new |= nb
        else:
            comps = component_masks(adjacency, white)
            for v in members(black):
                nb = adjacency[v] & white
                if not nb:
                    continue
                for comp in comps:
                    hit = nb & comp
                    if _single(hit):
                        new |= hit
        if not new:
            return black
        black |= new


def _run(
    graph: Graph,
    black_set: Iterable[int],
    rule: Rule,
    allowed: Optional[Dict[int, int]] = None,
) -> ForcingRun:
    initial = tuple(sorted(set(black_set)))
    graph.check_vertices(initial)
    adjacency = graph.adjacency
    active = graph.full_mask
    black = mask_of(initial)
    forces: List[Force] = []
    round_index = 0
    while True:
        chosen: Dict[int, _Candidate] = {}
        for forcer, forced, comp in legal_forces(adjacency, black, rule, active):
            if allowed is not None and allowed.get(forced) != forcer:
                continue
            if forced not in chosen:
                chosen[forced] = (forcer, forced, comp)
        if not chosen:
            break
        for forcer, forced, comp in sorted(chosen.values()):
            witness = tuple(members(comp)) if rule is Rule.POSITIVE else None
            forces.append(
                Force(forcer=forcer, forced=forced, round=round_index, component_witness=witness)
            )
            black |= 1 << forced
        round_index += 1
    return ForcingRun(
        graph=graph,
        initial_black=initial,
        rule=rule,
        forces=forces,
        derived=tuple(members(black)),
    )


def closure(graph: Graph, black: Iterable[int], rule: Rule) -> ForcingRun:
    """Apply the rule until nothing changes; canonical deterministic run"""
    return _run(graph, black, rule)


def guided_closure(
    graph: Graph, black: Iterable[int], rule: Rule, parts: Sequence[Sequence[int]]
) -> ForcingRun:
    """Closure that only forces along the prescribed rooted parts.

    ``parts[i][0]`` is the root of part i; a vertex may only be forced by its
    parent in the rooted induced tree (or chain) of its part. Every recorded
    force is legal under ``rule``.
    """
    initial = sorted(set(black))
    roots = sorted(part[0] for part in parts if part)
    if roots != initial:
        raise CertificateError(f"roots {roots} differ from the black set {initial}")
    allowed: Dict[int, int] = {}
    for part in parts:
        graph.check_vertices(part)
        parents = tree_parents(graph.adjacency, tuple(part))
        if len(parents) != len(part) - 1:
            raise CertificateError(f"part {list(part)} is not connected")
        allowed.update(parents)
    return _run(graph, initial, rule, allowed)


def is_forcing_set(graph: Graph, black: Iterable[int], rule: Rule) -> bool:
    members_ = list(black)
    graph.check_vertices(members_)
    return derived_mask(graph.adjacency, mask_of(members_), rule) == graph.full_mask


def extract_cover(run: ForcingRun) -> Cover:
    """Forcing chains (standard) or forcing trees (positive) of a complete run"""
    if not run.complete:
        raise IncompleteRunError(
            f"derived set has {len(run.derived)} of {run.graph.n} vertices"
        )
    root_of = {r: r for r in run.initial_black}
    parts: Dict[int, List[int]] = {r: [r] for r in run.initial_black}
    for force in run.forces:
        root = root_of[force.forcer]
        root_of[force.forced] = root
        parts[root].append(force.forced)
    kind = CoverKind.PATH_COVER if run.rule is Rule.STANDARD else CoverKind.TREE_COVER
    return Cover(
        graph=run.graph,
        kind=kind,
        parts=[tuple(parts[r]) for r in run.initial_black],
    )


def terminal_set(run: ForcingRun) -> Tuple[int, ...]:
    """Last vertex of every forcing chain of a complete standard run"""
    if run.rule is not Rule.STANDARD:
        raise CertificateError("terminal sets are defined for standard runs")
    return tuple(sorted(part[-1] for part in extract_cover(run).parts))


def replay(run: ForcingRun) -> bool:
    """Re-check every force against its round-start state"""
    graph = run.graph
    adjacency = graph.adjacency
    black = mask_of(run.initial_black)
    forced_once = 0
    index = 0
    expected_round = 0
    while index < len(run.forces):
        if run.forces[index].round != expected_round:
            return False
        legal = {
            (forcer, forced): comp
            for forcer, forced, comp in legal_forces(adjacency, black, run.rule, graph.full_mask)
        }
        gained = 0
        while index < len(run.forces) and run.forces[index].round == expected_round:
            force = run.forces[index]
            key = (force.forcer, force.forced)
            if key not in legal or forced_once >> force.forced & 1:
                return False
            if run.rule is Rule.POSITIVE:
                if force.component_witness is None:
                    return False
                if mask_of(force.component_witness) != legal[key]:
                    return False
            forced_once |= 1 << force.forced
            gained |= 1 << force.forced
            index += 1
        black |= gained
        expected_round += 1
    return tuple(members(black)) == tuple(run.derived)
