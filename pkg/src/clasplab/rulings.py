"""Normal rulings of a front diagram.

A ruling designates a subset of the crossings as switches and smooths each
switch into two horizontal arcs.  The smoothed diagram must decompose into
*eyes*: closed curves with one left cusp, one right cusp and no
self-intersection, pairwise compatible at every switch.

The decision procedure is a left-to-right scan.  Its state pairs the live
slots into eyes; each event updates the pairing:

* left cusp at p: a new eye occupies slots p, p+1;
* non-switch crossing at p: slots p, p+1 trade eyes -- pruned if both
  belong to one eye (that eye would self-intersect);
* switch crossing at p: slots keep their eyes, but the two eyes must sit
  in one of the three admissible configurations (see switch_allowed);
* right cusp at p: slots p, p+1 must be the two slots of a single eye.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, NamedTuple, Optional

from .diagram import CROSSING, LEFT_CUSP, Event, FrontDiagram, require_valid
from .errors import BudgetExceeded, InvalidRuling, SameEye

#: A normal ruling is just its switch set, as crossing ordinals (1-based).
NormalRuling = frozenset

EMPTY_RULING: NormalRuling = frozenset()


class PairingState:
    """Mutable pairing of live slots into eyes during a scan.

    ``mate(p)`` is the slot currently occupied by the other strand of the
    eye through slot p.  The pairing alone decides every ruling condition;
    eye identities are not needed here.
    """

    __slots__ = ("_m",)

    def __init__(self, mates: Optional[list] = None):
        self._m = [0] if mates is None else mates

    def copy(self) -> "PairingState":
        return PairingState(list(self._m))

    @property
    def n_strands(self) -> int:
        return len(self._m) - 1

    def mate(self, p: int) -> int:
        return self._m[p]

    def partition(self) -> tuple:
        """Canonical snapshot of the pairing, for state comparison."""
        m = self._m
        return tuple((p, m[p]) for p in range(1, len(m)) if p < m[p])

    def birth(self, p: int) -> None:
        m = self._m
        for i in range(1, len(m)):
            if m[i] >= p:
                m[i] += 2
        m[p:p] = [p + 1, p]

    def death(self, p: int) -> None:
        m = self._m
        del m[p:p + 2]
        for i in range(1, len(m)):
            if m[i] >= p + 2:
                m[i] -= 2

    def same_eye(self, p: int) -> bool:
        return self._m[p] == p + 1

    def switch_ok(self, p: int) -> bool:
        """Normality at a switch between the eyes through slots p, p+1.

        With a = mate(p) and b = mate(p+1), exactly three of the six mate
        configurations are admissible: the two eyes vertically disjoint, or
        nested with both mates above, or nested with both mates below.
        Interleaved eyes never switch.
        """
        m = self._m
        a, b = m[p], m[p + 1]
        return (a < p and b > p + 1) or (p + 1 < b < a) or (b < a < p)

    def cross(self, p: int) -> None:
        m = self._m
        a, b = m[p], m[p + 1]
        m[a], m[b] = p + 1, p
        m[p], m[p + 1] = b, a

    def step(self, event: Event, is_switch: bool = False) -> Optional[str]:
        """Advance over one event; return a failure reason or None.

        The event word is assumed valid, so slot ranges are not rechecked.
        """
        p = event.pos
        if event.kind == LEFT_CUSP:
            self.birth(p)
        elif event.kind == CROSSING:
            if self.same_eye(p):
                if is_switch:
                    return "switch between two strands of one eye"
                return "eye self-intersects at an unswitched crossing"
            if is_switch:
                if not self.switch_ok(p):
                    return "normality violated: eyes interleave at switch"
            else:
                self.cross(p)
        else:
            if not self.same_eye(p):
                return "right cusp joins strands of two different eyes"
            self.death(p)
        return None


def switch_allowed(state: PairingState, p: int) -> bool:
    """Whether a switch at slots (p, p+1) is admissible in this state.

    Raises SameEye when both slots belong to one eye, where a switch is
    never legal.
    """
    if state.same_eye(p):
        raise SameEye(f"slots {p},{p + 1} belong to one eye")
    return state.switch_ok(p)


class RulingCheck(NamedTuple):
    ok: bool
    reason: Optional[str] = None
    event_index: Optional[int] = None  # 1-based, where the scan failed


def _check_switches(diagram: FrontDiagram, switches: Iterable) -> frozenset:
    switches = frozenset(switches)
    c = diagram.n_crossings
    for o in switches:
        if not 1 <= o <= c:
            raise InvalidRuling(f"switch ordinal {o} outside 1..{c}")
    return switches


def is_normal_ruling(diagram: FrontDiagram, switches: Iterable) -> RulingCheck:
    """Run the scan with the given switch set and report the outcome."""
    require_valid(diagram)
    switches = _check_switches(diagram, switches)
    state = PairingState()
    ordinal = 0
    for i, e in enumerate(diagram.events, start=1):
        if e.kind == CROSSING:
            ordinal += 1
            fail = state.step(e, ordinal in switches)
        else:
            fail = state.step(e)
        if fail is not None:
            return RulingCheck(False, fail, i)
    return RulingCheck(True)


def ruling_sort_key(ruling: Iterable) -> tuple:
    """Deterministic order used everywhere: by size, then lexicographic."""
    t = tuple(sorted(ruling))
    return (len(t), t)


def enumerate_rulings(diagram: FrontDiagram, budget: Optional[int] = None) -> list:
    """All normal rulings, found by backtracking over the switch choices.

    Each crossing branches on switch / non-switch; dead states prune the
    subtree.  The optional ``budget`` bounds the number of event steps
    taken before BudgetExceeded is raised.
    """
    require_valid(diagram)
    events = diagram.events
    ordinal_at = {}
    c = 0
    for i, e in enumerate(events):
        if e.kind == CROSSING:
            c += 1
            ordinal_at[i] = c
    found: list = []
    nodes = 0

    def walk(i: int, state: PairingState, switched: list) -> None:
        nonlocal nodes
        while i < len(events):
            nodes += 1
            if budget is not None and nodes > budget:
                raise BudgetExceeded(
                    f"enumeration exceeded {budget} steps", nodes=nodes)
            e = events[i]
            if e.kind != CROSSING:
                if state.step(e) is not None:
                    return
                i += 1
                continue
            branch = state.copy()
            if branch.step(e, is_switch=True) is None:
                switched.append(ordinal_at[i])
                walk(i + 1, branch, switched)
                switched.pop()
            if state.step(e, is_switch=False) is not None:
                return
            i += 1
        found.append(frozenset(switched))

    walk(0, PairingState(), [])
    return sorted(found, key=ruling_sort_key)


def brute_force_rulings(diagram: FrontDiagram) -> list:
    """Filter all 2^c switch subsets through is_normal_ruling.

    Independent check for enumerate_rulings; only sensible for small c.
    """
    require_valid(diagram)
    c = diagram.n_crossings
    out = []
    for r in range(c + 1):
        for combo in combinations(range(1, c + 1), r):
            if is_normal_ruling(diagram, combo).ok:
                out.append(frozenset(combo))
    return sorted(out, key=ruling_sort_key)


def pairing_state_at(diagram: FrontDiagram, switches: Iterable,
                     event_index: int) -> PairingState:
    """Scan the first ``event_index`` events and return the state.

    Raises InvalidRuling if the scan dies before reaching the slice.
    """
    switches = _check_switches(diagram, switches)
    state = PairingState()
    ordinal = 0
    for i, e in enumerate(diagram.events[:event_index], start=1):
        if e.kind == CROSSING:
            ordinal += 1
            fail = state.step(e, ordinal in switches)
        else:
            fail = state.step(e)
        if fail is not None:
            raise InvalidRuling(f"event {i}: {fail}")
    return state
