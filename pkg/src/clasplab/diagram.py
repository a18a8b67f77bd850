"""Event-word encoding of front diagrams of Legendrian links.

A generic front is read left to right as a word of events, each carrying a
1-based vertical slot (1 = bottom strand):

* ``lc p`` -- left cusp: inserts two new strands at slots p, p+1,
  shifting former slots >= p up by 2;
* ``rc p`` -- right cusp: removes the strands at slots p, p+1,
  shifting former slots >= p+2 down by 2;
* ``x p``  -- crossing: exchanges the strands at slots p and p+1.

A diagram is closed: the strand count starts at 0 and returns to 0 after
the last event.  Crossings are numbered 1..c left to right.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import InvalidBraidLetter, InvalidDiagram, ParseError

LEFT_CUSP = "lc"
RIGHT_CUSP = "rc"
CROSSING = "x"

_KINDS = (LEFT_CUSP, RIGHT_CUSP, CROSSING)


@dataclass(frozen=True)
class Event:
    """One cusp or crossing of a front, at one x-coordinate."""

    kind: str
    pos: int

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown event kind {self.kind!r}")
        if self.pos < 1:
            raise ValueError("event positions are 1-based")

    def __str__(self):
        return f"{self.kind} {self.pos}"


def lc(p: int) -> Event:
    return Event(LEFT_CUSP, p)


def rc(p: int) -> Event:
    return Event(RIGHT_CUSP, p)


def x(p: int) -> Event:
    return Event(CROSSING, p)


@dataclass(frozen=True)
class FrontDiagram:
    """An immutable closed front diagram, stored as its event word."""

    events: tuple[Event, ...]

    def __init__(self, events: Iterable[Event] = ()):
        object.__setattr__(self, "events", tuple(events))

    def __len__(self):
        return len(self.events)

    def __iter__(self) -> Iterator[Event]:
        return iter(self.events)

    def __str__(self):
        return "[" + ", ".join(str(e) for e in self.events) + "]"

    def strand_counts(self) -> list[int]:
        """Strand count before each event, plus the final count.

        The returned list has len(events)+1 entries; entry i is the number
        of live strands on the slice just left of event i.
        """
        counts = [0]
        s = 0
        for e in self.events:
            if e.kind == LEFT_CUSP:
                s += 2
            elif e.kind == RIGHT_CUSP:
                s -= 2
            counts.append(s)
        return counts

    def crossings(self) -> list[int]:
        """Event indices (0-based) of the crossings, in diagram order."""
        return [i for i, e in enumerate(self.events) if e.kind == CROSSING]

    @property
    def n_crossings(self) -> int:
        return sum(1 for e in self.events if e.kind == CROSSING)


@dataclass(frozen=True)
class Violation:
    """A broken invariant, located at a 1-based event index."""

    event_index: int
    rule: str

    def __str__(self):
        return f"event {self.event_index}: {self.rule}"


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...] = ()


def validate(diagram: FrontDiagram) -> ValidationReport:
    """Check the event word against the front-diagram invariants.

    Returns a report rather than raising; the scan stops at the first
    offending event since slot arithmetic is meaningless past it.
    """
    s = 0
    for i, e in enumerate(diagram.events, start=1):
        if e.kind == LEFT_CUSP:
            if e.pos > s + 1:
                return ValidationReport(False, (Violation(
                    i, f"left cusp at {e.pos} needs position <= {s + 1} "
                       f"(only {s} strands alive)"),))
            s += 2
        elif e.kind == RIGHT_CUSP:
            if e.pos + 1 > s:
                return ValidationReport(False, (Violation(
                    i, f"right cusp at {e.pos} needs two strands at "
                       f"{e.pos},{e.pos + 1} (only {s} strands alive)"),))
            s -= 2
        else:
            if e.pos + 1 > s:
                return ValidationReport(False, (Violation(
                    i, f"crossing at {e.pos} needs two strands at "
                       f"{e.pos},{e.pos + 1} (only {s} strands alive)"),))
    if s != 0:
        return ValidationReport(False, (Violation(
            len(diagram), f"diagram is not closed: {s} strands left open"),))
    return ValidationReport(True)


def require_valid(diagram: FrontDiagram) -> None:
    report = validate(diagram)
    if not report.ok:
        raise InvalidDiagram(str(report.violations[0]))


@dataclass(frozen=True)
class StrandTrace:
    """Connectivity data of a diagram.

    Strand segments are numbered by birth (each left cusp creates ids
    2k-1, 2k); ``slices[i]`` lists the ids on the slice left of event i,
    bottom to top.  Components are numbered 0,1,.. by first appearance.
    """

    slices: tuple[tuple[int, ...], ...]
    component_of_strand: dict[int, int]
    n_components: int
    left_cusps: tuple[int, ...]   # per component
    right_cusps: tuple[int, ...]  # per component

    def cusp_tally(self, component: int) -> tuple[int, int]:
        return self.left_cusps[component], self.right_cusps[component]


def trace_components(diagram: FrontDiagram) -> StrandTrace:
    """Trace strand identities through the word and join them at cusps."""
    require_valid(diagram)
    parent: dict[int, int] = {}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    slices: list[tuple[int, ...]] = [()]
    stack: list[int] = []
    next_id = 1
    lc_of: list[tuple[int, int]] = []  # (strand, strand) per cusp kind
    rc_of: list[tuple[int, int]] = []
    for e in diagram.events:
        if e.kind == LEFT_CUSP:
            a, b = next_id, next_id + 1
            next_id += 2
            parent[a] = a
            parent[b] = b
            union(a, b)
            stack[e.pos - 1:e.pos - 1] = [a, b]
            lc_of.append((a, b))
        elif e.kind == RIGHT_CUSP:
            a, b = stack[e.pos - 1], stack[e.pos]
            union(a, b)
            del stack[e.pos - 1:e.pos + 1]
            rc_of.append((a, b))
        else:
            stack[e.pos - 1], stack[e.pos] = stack[e.pos], stack[e.pos - 1]
        slices.append(tuple(stack))

    component_of: dict[int, int] = {}
    order: dict[int, int] = {}
    for sid in range(1, next_id):
        root = find(sid)
        if root not in order:
            order[root] = len(order)
        component_of[sid] = order[root]
    n = len(order)
    lcs = [0] * n
    rcs = [0] * n
    for a, _ in lc_of:
        lcs[component_of[a]] += 1
    for a, _ in rc_of:
        rcs[component_of[a]] += 1
    return StrandTrace(tuple(slices), component_of, n, tuple(lcs), tuple(rcs))


def n_components(diagram: FrontDiagram) -> int:
    return trace_components(diagram).n_components


# ---------------------------------------------------------------------------
# generators

def generate_unknot() -> FrontDiagram:
    """The one-eye unknot front [lc 1, rc 1]."""
    return FrontDiagram([lc(1), rc(1)])


def generate_trefoil() -> FrontDiagram:
    """The right-handed trefoil: two stacked eyes with three crossings.

    Crossings are numbered 1, 2, 3 left to right.
    """
    return FrontDiagram([lc(1), lc(3), x(2), x(2), x(2), rc(3), rc(1)])


def generate_negative_braid_closure(strands: int, word: list[int]) -> FrontDiagram:
    """Nested plat closure of a braid word on the given number of strands.

    The closure opens with ``strands`` nested left cusps pairing strand i
    with strand 2*strands+1-i, emits each braid letter j as a crossing at
    position j, and closes with the mirrored nested right cusps.
    """
    if strands < 2:
        raise InvalidBraidLetter("need at least 2 strands")
    if not word:
        raise InvalidBraidLetter("braid word must be non-empty")
    for letter in word:
        if not 1 <= letter <= strands - 1:
            raise InvalidBraidLetter(
                f"letter {letter} outside 1..{strands - 1}")
    events = [lc(i) for i in range(1, strands + 1)]
    events += [x(j) for j in word]
    events += [rc(i) for i in range(strands, 0, -1)]
    return FrontDiagram(events)


def generate_torus4(n: int) -> FrontDiagram:
    """Front of the negative 4-strand torus knot with 2n+5 sign-reversed
    full twists, i.e. the mirror of the (4, 2n+5) torus knot.

    Negative crossings force the staircase layout below: q = 2n+5 stacked
    eyes, three descending runs of crossings weaving each eye under the
    next three, and a tail that closes the four strands of the last eyes.
    The word has q left cusps and exactly 3q crossings, and one component.
    The positive counterpart would be generate_negative_braid_closure(4,
    [1, 2, 3] * q), whose front is the mirror image.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    q = 2 * n + 5
    events = [lc(2 * i - 1) for i in range(1, q + 1)]
    for start in (2, 3, 4):
        events += [x(j) for j in range(start, 2 * q - start + 1, 2)]
    events += [rc(5)] * (q - 4)
    events += [x(4), x(3), x(5), x(2), x(4), x(6)]
    events += [rc(1)] * 4
    return FrontDiagram(events)


def disjoint_union(first: FrontDiagram, second: FrontDiagram) -> FrontDiagram:
    """Place two closed diagrams side by side (disjoint x-ranges)."""
    require_valid(first)
    require_valid(second)
    return FrontDiagram(first.events + second.events)


def stacked_union(lower: FrontDiagram, upper: FrontDiagram,
                  gap: int | None = None) -> FrontDiagram:
    """Insert ``upper`` above the strands of ``lower`` at one word gap.

    The upper diagram's events run at a single x-interval of the lower
    word, with positions offset by the strand count there, so the two
    never interleave vertically.  ``gap`` is a 1-based insertion index
    into the lower word (default: its middle).
    """
    require_valid(lower)
    require_valid(upper)
    if gap is None:
        gap = len(lower) // 2 + 1
    if not 1 <= gap <= len(lower) + 1:
        raise ValueError(f"gap {gap} outside 1..{len(lower) + 1}")
    offset = lower.strand_counts()[gap - 1]
    inserted = [Event(e.kind, e.pos + offset) for e in upper.events]
    events = list(lower.events)
    events[gap - 1:gap - 1] = inserted
    return FrontDiagram(events)


# ---------------------------------------------------------------------------
# text format: one event per line, '#' comments, blank lines ignored

def parse_with_lines(text: str) -> tuple[FrontDiagram, tuple[int, ...]]:
    """Parse the text format, keeping each event's source line number."""
    events = []
    lines = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected '<kind> <pos>', got {raw!r}", line=ln)
        kind, pos_text = parts
        if kind not in _KINDS:
            raise ParseError(f"unknown event kind {kind!r}", line=ln)
        try:
            pos = int(pos_text)
        except ValueError:
            raise ParseError(f"bad position {pos_text!r}", line=ln) from None
        if pos < 1:
            raise ParseError("positions are 1-based", line=ln)
        events.append(Event(kind, pos))
        lines.append(ln)
    return FrontDiagram(events), tuple(lines)


def parse(text: str, strict: bool = False) -> FrontDiagram:
    """Parse the line-oriented diagram format.

    With ``strict`` the parsed word must also validate as a closed front.
    """
    diagram, _ = parse_with_lines(text)
    if strict:
        require_valid(diagram)
    return diagram


def serialize(diagram: FrontDiagram) -> str:
    """Inverse of :func:`parse` up to comments and whitespace."""
    return "".join(f"{e.kind} {e.pos}\n" for e in diagram.events)
