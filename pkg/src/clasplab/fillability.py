"""Decomposable fillings as move scripts, and the parity obstruction.

A filling certificate is a script of moves that builds a diagram from the
empty front.  Threading the switch set through each move's transport
yields the script's associated normal ruling, whose clasp total is always
even; an odd total would mean the calculus itself is broken, so it is
raised as a hard internal error.

The contrapositive is the obstruction: a link whose normal rulings are
all odd admits no such script at all.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Optional

from .clasps import ClaspReport, clasp_report
from .diagram import LEFT_CUSP, RIGHT_CUSP, FrontDiagram, require_valid, \
    serialize
from .errors import (BudgetExceeded, EvennessViolation, NotApplicable,
                     ScriptError, TransportFailure)
from .moves import (Move, _match_r1inv, _match_r2inv, apply_move,
                    enumerate_applicable_moves)
from .rulings import EMPTY_RULING, enumerate_rulings

#: A move script is a plain sequence of moves, starting from the empty
#: diagram.
MoveScript = list


@dataclass(frozen=True)
class FillingCertificate:
    script: tuple
    diagram: FrontDiagram
    ruling: frozenset
    report: ClaspReport

    def to_json(self) -> dict:
        return {
            "script": [str(m) for m in self.script],
            "diagram": serialize(self.diagram),
            "ruling": sorted(self.ruling),
            "clasps": self.report.to_json(),
        }


def run_script(script: Iterable) -> FillingCertificate:
    """Fold the script from the empty diagram, tracking its ruling.

    Raises ScriptError at the first inapplicable move, TransportFailure
    when a saddle is incompatible with the ruling so far, and
    EvennessViolation if the final clasp total is odd (an internal bug,
    never a property of the script).
    """
    diagram = FrontDiagram()
    ruling = EMPTY_RULING
    script = tuple(script)
    for i, move in enumerate(script, start=1):
        try:
            diagram, transport = apply_move(diagram, move)
        except NotApplicable as exc:
            raise ScriptError(str(exc), index=i) from exc
        ruling = transport(ruling)
    report = clasp_report(diagram, ruling)
    if report.parity != "even":
        raise EvennessViolation(
            f"filling certificate has {report.total} clasps; "
            "the move calculus must keep this even")
    return FillingCertificate(script, diagram, ruling, report)


@dataclass(frozen=True)
class RulingEvidence:
    switches: tuple
    clasps: int
    parity: str

    def to_json(self) -> dict:
        return {"switches": list(self.switches), "clasps": self.clasps,
                "parity": self.parity}


@dataclass(frozen=True)
class ObstructionVerdict:
    """Outcome of the all-rulings-odd test.

    ``obstructed`` means the diagram has at least one normal ruling and
    every one of them is odd, which rules out any filling built from the
    move calculus.  A diagram with no rulings at all is reported
    unobstructed *by this criterion*, with a note; the absence of rulings
    is a different obstruction, outside this library's claims.
    """

    obstructed: bool
    evidence: tuple
    witness: Optional[tuple] = None
    note: Optional[str] = None

    @property
    def verdict(self) -> str:
        return "obstructed" if self.obstructed else "not_obstructed"

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "rulings": [e.to_json() for e in self.evidence],
            "witness": list(self.witness) if self.witness is not None else None,
            "note": self.note,
        }


def obstruction_verdict(diagram: FrontDiagram,
                        budget: Optional[int] = None) -> ObstructionVerdict:
    """Enumerate rulings and decide whether all of them are odd."""
    rulings = enumerate_rulings(diagram, budget=budget)
    evidence = []
    witness = None
    for r in rulings:
        report = clasp_report(diagram, r)
        evidence.append(RulingEvidence(tuple(sorted(r)), report.total,
                                       report.parity))
        if witness is None and report.parity == "even":
            witness = tuple(sorted(r))
    if not rulings:
        return ObstructionVerdict(False, (), None,
                                  "no normal rulings at all")
    if witness is None:
        return ObstructionVerdict(True, tuple(evidence))
    return ObstructionVerdict(False, tuple(evidence), witness)


@dataclass(frozen=True)
class CobordismParity:
    status: str  # "compatible" | "incompatible" | "not_applicable"
    lower: Optional[RulingEvidence] = None
    upper: Optional[RulingEvidence] = None
    reason: Optional[str] = None

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "lower": self.lower.to_json() if self.lower else None,
            "upper": self.upper.to_json() if self.upper else None,
            "reason": self.reason,
        }


def cobordism_parity_check(lower: FrontDiagram, upper: FrontDiagram,
                           budget: Optional[int] = None) -> CobordismParity:
    """Parity test for a cobordism between two unique-ruling links.

    Applies only when each diagram has exactly one normal ruling; a
    cobordism built from the move calculus forces equal parities, so
    unequal parities are incompatible with one.
    """
    sides = []
    for diagram in (lower, upper):
        rulings = enumerate_rulings(diagram, budget=budget)
        if len(rulings) != 1:
            return CobordismParity(
                "not_applicable",
                reason=f"a diagram has {len(rulings)} normal rulings; "
                       "the test needs exactly 1 on each side")
        report = clasp_report(diagram, rulings[0])
        sides.append(RulingEvidence(tuple(sorted(rulings[0])),
                                    report.total, report.parity))
    status = ("compatible" if sides[0].parity == sides[1].parity
              else "incompatible")
    return CobordismParity(status, sides[0], sides[1])


def random_script(length: int, seed: int) -> MoveScript:
    """Seeded-deterministic script of applicable moves from the empty front.

    Samples a move kind, then a move of that kind, skipping saddles that
    are incompatible with the ruling carried so far.
    """
    if length < 1:
        raise ValueError("scripts have length >= 1")
    rng = random.Random(seed)
    diagram = FrontDiagram()
    ruling = EMPTY_RULING
    script: MoveScript = []
    while len(script) < length:
        moves = enumerate_applicable_moves(diagram)
        by_kind: dict = {}
        for m in moves:
            by_kind.setdefault(m.kind, []).append(m)
        kinds = sorted(by_kind)
        accepted = False
        while kinds and not accepted:
            kind = rng.choice(kinds)
            candidates = by_kind[kind]
            rng.shuffle(candidates)
            for m in candidates:
                new_diagram, transport = apply_move(diagram, m)
                try:
                    ruling = transport(ruling)
                except TransportFailure:
                    continue
                diagram = new_diagram
                script.append(m)
                accepted = True
                break
            else:
                kinds.remove(kind)
        if not accepted:
            break  # cannot happen: h0 is always applicable and compatible
    return script


@dataclass(frozen=True)
class SearchResult:
    status: str  # "found" | "exhausted" | "pruned"
    script: Optional[tuple] = None
    stats: Optional[dict] = None

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "script": [str(m) for m in self.script]
            if self.script is not None else None,
            "stats": self.stats,
        }


def _backward_steps(diagram: FrontDiagram):
    """Yield (parent, forward_move) pairs, in deterministic order.

    Each forward move recreates the diagram from the parent; every pair
    is verified by reapplying before being yielded.  Only simplifying and
    lateral rewrites are explored, so the search is best effort.
    """
    events = diagram.events
    candidates = []
    for i in range(len(events) - 1):
        a, b = events[i], events[i + 1]
        if a.kind == LEFT_CUSP and b.kind == RIGHT_CUSP and a.pos == b.pos:
            parent = FrontDiagram(events[:i] + events[i + 2:])
            candidates.append((parent, Move("h0", i + 1, a.pos)))
        if a.kind == RIGHT_CUSP and b.kind == LEFT_CUSP and a.pos == b.pos:
            parent = FrontDiagram(events[:i] + events[i + 2:])
            candidates.append((parent, Move("h1", i + 1, a.pos)))
    for kind, fwd in (("r1inv", "r1"), ("r2inv", "r2"), ("r3", "r3"),
                      ("tr", "tr")):
        for i in range(len(events)):
            try:
                parent, _ = apply_move(diagram, Move(kind, i + 1))
            except NotApplicable:
                continue
            if fwd == "r1":
                q, variant = _match_r1inv(events, i)
                move = Move("r1", i + 1, q, variant)
            elif fwd == "r2":
                _, variant = _match_r2inv(events, i)
                move = Move("r2", i + 1, variant=variant)
            else:
                move = Move(fwd, i + 1)
            candidates.append((parent, move))
    for parent, move in candidates:
        try:
            redone, _ = apply_move(parent, move)
        except NotApplicable:
            continue
        if redone.events == diagram.events:
            yield parent, move


def search_filling(diagram: FrontDiagram, depth_bound: int = 8,
                   node_budget: int = 20000) -> SearchResult:
    """Bounded backward search for a filling script of the diagram.

    Returns "pruned" without searching when the obstruction verdict says
    no script can exist, "found" with a verified script on success, and
    "exhausted" otherwise.  Exhaustion is not evidence of
    non-fillability; only pruning carries a claim.
    """
    require_valid(diagram)
    try:
        verdict = obstruction_verdict(diagram)
    except BudgetExceeded:
        verdict = None
    if verdict is not None and verdict.obstructed:
        return SearchResult("pruned", None,
                            {"nodes": 0, "depth": 0, "reason": "all rulings odd"})
    if not diagram.events:
        return SearchResult("found", (), {"nodes": 0, "depth": 0})

    start = serialize(diagram)
    seen = {start: None}  # key -> (parent_key, forward move)
    frontier = [diagram]
    nodes = 0
    for depth in range(1, depth_bound + 1):
        next_frontier = []
        for d in frontier:
            d_key = serialize(d)
            for parent, move in _backward_steps(d):
                key = serialize(parent)
                if key in seen:
                    continue
                nodes += 1
                seen[key] = (d_key, move)
                if not parent.events:
                    script = []
                    cursor = key
                    while seen[cursor] is not None:
                        prev, mv = seen[cursor]
                        script.append(mv)
                        cursor = prev
                    certificate = run_script(script)
                    if certificate.diagram.events != diagram.events:
                        raise ScriptError(
                            "reconstructed script does not reproduce the "
                            "input diagram")
                    return SearchResult("found", tuple(script),
                                        {"nodes": nodes, "depth": depth})
                if nodes >= node_budget:
                    return SearchResult("exhausted", None,
                                        {"nodes": nodes, "depth": depth,
                                         "reason": "node budget"})
                next_frontier.append(parent)
        if not next_frontier:
            return SearchResult("exhausted", None,
                                {"nodes": nodes, "depth": depth,
                                 "reason": "no backward moves left"})
        frontier = next_frontier
    return SearchResult("exhausted", None,
                        {"nodes": nodes, "depth": depth_bound,
                         "reason": "depth bound"})
