"""Front moves as local event-word rewrites, with ruling transport.

The calculus consists of

* ``h0`` -- birth of a small eye: insert [lc p, rc p];
* ``h1`` -- saddle between two vertically adjacent strands: insert
  [rc p, lc p];
* ``r1``/``r1inv`` -- a strand grows/loses a tongue (two cusps and one
  crossing between tongue and strand);
* ``r2``/``r2inv`` -- a cusp slides past the strand just above or below
  it, gaining/losing two crossings;
* ``r3`` -- the triple-point rewrite [x q, x r, x q] -> [x r, x q, x r]
  for |q - r| = 1;
* ``tr`` -- transposition of two adjacent events with disjoint vertical
  support (renumbering slots as needed).

Every isotopy rewrite carries a transport of normal rulings: switch
choices outside the rewritten window are kept, and the window is assigned
the unique local switch choice that scans validly and reproduces the same
exit pairing as the original.  That boundary-matching rule is asserted
unambiguous at run time; the resulting transport is a bijection on ruling
sets, which the test suite checks move by move.  Handles keep the switch
set; a saddle is only compatible with rulings whose resolution pairs the
two reconnected strands into one eye, and fails loudly otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .diagram import (CROSSING, LEFT_CUSP, RIGHT_CUSP, Event, FrontDiagram,
                      lc, rc, require_valid, validate, x)
from .errors import InvalidRuling, NotApplicable, OutOfDomain, ParseError, \
    TransportFailure
from .rulings import PairingState, pairing_state_at

MOVE_KINDS = ("h0", "h1", "r1", "r1inv", "r2", "r2inv", "r3", "tr")
_INSERTION_KINDS = ("h0", "h1", "r1")


@dataclass(frozen=True)
class Move:
    """One anchored rewrite.

    For insertion kinds (h0, h1, r1) the anchor is a 1-based word gap
    (insert before event #anchor; None appends at the end).  For the rest
    it is the 1-based index of the first window event.  ``pos`` is the
    vertical slot argument where the kind needs one; ``variant`` selects
    the up/down orientation of r1 and r2.
    """

    kind: str
    anchor: Optional[int] = None
    pos: int = 0
    variant: str = ""

    def __post_init__(self):
        if self.kind not in MOVE_KINDS:
            raise ValueError(f"unknown move kind {self.kind!r}")
        if self.variant not in ("", "up", "down"):
            raise ValueError(f"unknown variant {self.variant!r}")

    def __str__(self):
        parts = [self.kind]
        if self.kind in ("h0", "h1", "r1"):
            parts.append(str(self.pos))
        if self.anchor is not None:
            parts.append(f"@{self.anchor}")
        if self.kind in ("r1", "r2") and self.variant:
            parts.append(self.variant)
        return " ".join(parts)


# ---------------------------------------------------------------------------
# transposition support

_DELTA = {LEFT_CUSP: 2, RIGHT_CUSP: -2, CROSSING: 0}


def _footprint_after(e: Event) -> tuple:
    """Vertical extent an already-performed event occupies on the slice
    to its right: newborn slots for lc, the closed gap for rc."""
    if e.kind == RIGHT_CUSP:
        return (e.pos - 0.5, e.pos - 0.5)
    return (e.pos, e.pos + 1)


def _footprint_before(e: Event) -> tuple:
    """Vertical extent an upcoming event needs on the slice to its left."""
    if e.kind == LEFT_CUSP:
        return (e.pos - 0.5, e.pos - 0.5)
    return (e.pos, e.pos + 1)


def transpose_events(first: Event, second: Event) -> Optional[tuple]:
    """Swap two adjacent events when their supports are disjoint.

    Returns the renumbered (second, first) pair, or None when the events
    interact (shared slots, or a birth/death aimed at the same gap).
    """
    fa = _footprint_after(first)
    fb = _footprint_before(second)
    if not (fa[1] < fb[0] or fb[1] < fa[0]):
        return None
    b_above = fb[0] > fa[1]
    a_above = fa[0] > fb[1]
    new_second = Event(second.kind,
                       second.pos - (_DELTA[first.kind] if b_above else 0))
    new_first = Event(first.kind,
                      first.pos + (_DELTA[second.kind] if a_above else 0))
    return new_second, new_first


# ---------------------------------------------------------------------------
# window patterns

def _r1_window(q: int, variant: str) -> list:
    if variant == "up":
        return [lc(q + 1), x(q), rc(q + 1)]
    return [lc(q), x(q + 1), rc(q)]


def _match_r1inv(events, i0: int) -> Optional[tuple]:
    """Return (q, variant) when events[i0:i0+3] is a tongue window."""
    w = events[i0:i0 + 3]
    if len(w) < 3 or w[0].kind != LEFT_CUSP or w[1].kind != CROSSING \
            or w[2].kind != RIGHT_CUSP or w[0].pos != w[2].pos:
        return None
    a = w[0].pos
    if w[1].pos == a - 1:
        return a - 1, "up"
    if w[1].pos == a + 1:
        return a, "down"
    return None


def _r2_target(cusp: Event, variant: str) -> list:
    p = cusp.pos
    if cusp.kind == LEFT_CUSP:
        if variant == "up":
            return [lc(p + 1), x(p), x(p + 1)]
        return [lc(p - 1), x(p), x(p - 1)]
    if variant == "up":
        return [x(p + 1), x(p), rc(p + 1)]
    return [x(p - 1), x(p), rc(p - 1)]


def _match_r2inv(events, i0: int) -> Optional[tuple]:
    """Return (cusp_event, variant) when the window undoes an r2."""
    w = events[i0:i0 + 3]
    if len(w) < 3:
        return None
    if w[0].kind == LEFT_CUSP and w[1].kind == CROSSING \
            and w[2].kind == CROSSING and w[2].pos == w[0].pos:
        a = w[0].pos
        if w[1].pos == a - 1:
            return lc(a - 1), "up"
        if w[1].pos == a + 1:
            return lc(a + 1), "down"
    if w[0].kind == CROSSING and w[1].kind == CROSSING \
            and w[2].kind == RIGHT_CUSP and w[0].pos == w[2].pos:
        a = w[2].pos
        if w[1].pos == a - 1:
            return rc(a - 1), "up"
        if w[1].pos == a + 1:
            return rc(a + 1), "down"
    return None


def _match_r3(events, i0: int) -> Optional[list]:
    w = events[i0:i0 + 3]
    if len(w) < 3 or any(e.kind != CROSSING for e in w):
        return None
    q, r = w[0].pos, w[1].pos
    if w[2].pos == q and abs(q - r) == 1:
        return [x(r), x(q), x(r)]
    return None


# ---------------------------------------------------------------------------
# rewrites

@dataclass(frozen=True)
class _Rewrite:
    """Replace events[i0:i0+n_old] with new_events (0-based i0)."""

    i0: int
    n_old: int
    new_events: tuple


def _resolve(diagram: FrontDiagram, move: Move) -> _Rewrite:
    events = diagram.events
    counts = diagram.strand_counts()
    kind = move.kind
    if kind in _INSERTION_KINDS:
        gap = move.anchor if move.anchor is not None else len(events) + 1
        if not 1 <= gap <= len(events) + 1:
            raise NotApplicable(f"gap {gap} outside 1..{len(events) + 1}")
        s = counts[gap - 1]
        p = move.pos
        if kind == "h0":
            if not 1 <= p <= s + 1:
                raise NotApplicable(f"h0 at {p} needs 1..{s + 1}")
            return _Rewrite(gap - 1, 0, (lc(p), rc(p)))
        if kind == "h1":
            if not 1 <= p <= s - 1:
                raise NotApplicable(
                    f"h1 at {p} needs two strands at {p},{p + 1}")
            return _Rewrite(gap - 1, 0, (rc(p), lc(p)))
        variant = move.variant or "up"
        if not 1 <= p <= s:
            raise NotApplicable(f"r1 needs a strand at {p}")
        return _Rewrite(gap - 1, 0, tuple(_r1_window(p, variant)))

    if move.anchor is None:
        raise NotApplicable(f"{kind} needs an event anchor")
    i0 = move.anchor - 1
    if not 0 <= i0 < len(events):
        raise NotApplicable(f"anchor {move.anchor} outside the word")

    if kind == "r1inv":
        m = _match_r1inv(events, i0)
        if m is None:
            raise NotApplicable("window is not a tongue")
        return _Rewrite(i0, 3, ())
    if kind == "r2":
        e = events[i0]
        variant = move.variant or "up"
        s = counts[i0]
        if e.kind == LEFT_CUSP:
            if variant == "up" and s >= e.pos:
                return _Rewrite(i0, 1, tuple(_r2_target(e, "up")))
            if variant == "down" and e.pos >= 2:
                return _Rewrite(i0, 1, tuple(_r2_target(e, "down")))
        elif e.kind == RIGHT_CUSP:
            if variant == "up" and s >= e.pos + 2:
                return _Rewrite(i0, 1, tuple(_r2_target(e, "up")))
            if variant == "down" and e.pos >= 2:
                return _Rewrite(i0, 1, tuple(_r2_target(e, "down")))
        raise NotApplicable("r2 needs a cusp with a neighbouring strand")
    if kind == "r2inv":
        m = _match_r2inv(events, i0)
        if m is None:
            raise NotApplicable("window does not undo an r2")
        cusp, _ = m
        return _Rewrite(i0, 3, (cusp,))
    if kind == "r3":
        target = _match_r3(events, i0)
        if target is None:
            raise NotApplicable("window is not a triple point")
        return _Rewrite(i0, 3, tuple(target))
    # tr
    if i0 + 1 >= len(events):
        raise NotApplicable("transposition needs two events")
    swapped = transpose_events(events[i0], events[i0 + 1])
    if swapped is None:
        raise NotApplicable("events share vertical support")
    return _Rewrite(i0, 2, tuple(swapped))


# ---------------------------------------------------------------------------
# ruling transport

def _scan_window(entry: PairingState, window, switch_locals) -> Optional[tuple]:
    st = entry.copy()
    local = 0
    for e in window:
        if e.kind == CROSSING:
            local += 1
            fail = st.step(e, local in switch_locals)
        else:
            fail = st.step(e)
        if fail is not None:
            return None
    return st.partition()


@dataclass(frozen=True)
class RulingTransport:
    """Per-ruling switch-set map induced by one move.

    Isotopy moves give a bijection between the full ruling sets of source
    and target.  Handles keep the switch set; a saddle raises
    TransportFailure on rulings it is incompatible with.
    """

    move: Move
    source: FrontDiagram
    target: FrontDiagram
    _rewrite: _Rewrite = field(repr=False)

    @property
    def is_isotopy(self) -> bool:
        return self.move.kind not in ("h0", "h1")

    def __call__(self, ruling: Iterable) -> frozenset:
        ruling = frozenset(ruling)
        rw = self._rewrite
        entry = pairing_state_at(self.source, ruling, rw.i0)
        if self.move.kind == "h0":
            return ruling
        if self.move.kind == "h1":
            p = self.move.pos
            if entry.mate(p) != p + 1:
                raise TransportFailure(
                    f"saddle at {p},{p + 1} joins two different eyes "
                    "of this ruling's resolution")
            return ruling

        old = self.source.events[rw.i0:rw.i0 + rw.n_old]
        pre = sum(1 for e in self.source.events[:rw.i0]
                  if e.kind == CROSSING)
        cs = sum(1 for e in old if e.kind == CROSSING)
        ct = sum(1 for e in rw.new_events if e.kind == CROSSING)
        src_locals = {o - pre for o in ruling if pre < o <= pre + cs}
        exit_partition = _scan_window(entry, old, src_locals)
        if exit_partition is None:
            raise InvalidRuling(
                "switch set is not a normal ruling of the source diagram")
        matches = []
        for mask in range(1 << ct):
            locals_ = {k + 1 for k in range(ct) if mask >> k & 1}
            if cs == ct and len(locals_) != len(src_locals):
                # Same-size windows exchange switch sets of equal size;
                # boundary matching alone cannot split e.g. the
                # one-switch and all-switch assignments of a triple
                # point, whose exit pairings coincide.
                continue
            if _scan_window(entry, rw.new_events, locals_) == exit_partition:
                matches.append(locals_)
        if len(matches) != 1:
            raise TransportFailure(
                f"{'no' if not matches else 'ambiguous'} boundary-matching "
                f"switch choice for {self.move}")
        kept = {o for o in ruling if o <= pre}
        kept |= {o + ct - cs for o in ruling if o > pre + cs}
        kept |= {pre + k for k in matches[0]}
        return frozenset(kept)


def transport_ruling(transport: RulingTransport, ruling: Iterable) -> frozenset:
    """Image of one ruling under a move's transport."""
    try:
        return transport(ruling)
    except TransportFailure as exc:
        raise OutOfDomain(str(exc)) from exc


def apply_move(diagram: FrontDiagram, move: Move) -> tuple:
    """Rewrite the diagram and return (new diagram, ruling transport)."""
    require_valid(diagram)
    rw = _resolve(diagram, move)
    events = list(diagram.events)
    events[rw.i0:rw.i0 + rw.n_old] = rw.new_events
    target = FrontDiagram(events)
    report = validate(target)
    if not report.ok:
        raise NotApplicable(
            f"rewrite produced an invalid word: {report.violations[0]}")
    return target, RulingTransport(move, diagram, target, rw)


def enumerate_applicable_moves(diagram: FrontDiagram) -> list:
    """Every applicable move at every anchor, in a fixed deterministic order."""
    require_valid(diagram)
    events = diagram.events
    counts = diagram.strand_counts()
    out = []
    for gap in range(1, len(events) + 2):
        s = counts[gap - 1]
        for p in range(1, s + 2):
            out.append(Move("h0", gap, p))
        for p in range(1, s):
            out.append(Move("h1", gap, p))
        for p in range(1, s + 1):
            out.append(Move("r1", gap, p, "up"))
            out.append(Move("r1", gap, p, "down"))
    for i, e in enumerate(events):
        anchor = i + 1
        s = counts[i]
        if e.kind == LEFT_CUSP:
            if s >= e.pos:
                out.append(Move("r2", anchor, variant="up"))
            if e.pos >= 2:
                out.append(Move("r2", anchor, variant="down"))
        elif e.kind == RIGHT_CUSP:
            if s >= e.pos + 2:
                out.append(Move("r2", anchor, variant="up"))
            if e.pos >= 2:
                out.append(Move("r2", anchor, variant="down"))
        if _match_r1inv(events, i) is not None:
            out.append(Move("r1inv", anchor))
        if _match_r2inv(events, i) is not None:
            out.append(Move("r2inv", anchor))
        if _match_r3(events, i) is not None:
            out.append(Move("r3", anchor))
        if i + 1 < len(events) \
                and transpose_events(events[i], events[i + 1]) is not None:
            out.append(Move("tr", anchor))
    order = {k: n for n, k in enumerate(MOVE_KINDS)}
    out.sort(key=lambda m: (order[m.kind], m.anchor or 0, m.pos, m.variant))
    return out


def normalize(diagram: FrontDiagram) -> tuple:
    """Commute independent events apart into a canonical word order.

    Bubble events leftward whenever a transposition strictly lowers the
    (position, kind) key at that index; the result is a normal form under
    far commutation.  Returns (diagram, moves applied), so rulings can be
    transported along.
    """
    rank = {LEFT_CUSP: 0, RIGHT_CUSP: 1, CROSSING: 2}

    def key(e):
        return (e.pos, rank[e.kind])

    current = diagram
    applied = []
    changed = True
    while changed:
        changed = False
        events = current.events
        for i in range(len(events) - 1):
            swapped = transpose_events(events[i], events[i + 1])
            if swapped is not None and key(swapped[0]) < key(events[i]):
                move = Move("tr", i + 1)
                current, _ = apply_move(current, move)
                applied.append(move)
                changed = True
                break
    return current, applied


# ---------------------------------------------------------------------------
# move script text format

def serialize_script(moves: Iterable) -> str:
    return "".join(str(m) + "\n" for m in moves)


def parse_move(line: str, line_no: Optional[int] = None) -> Move:
    tokens = line.split()
    kind = tokens[0]
    if kind not in MOVE_KINDS:
        raise ParseError(f"unknown move kind {kind!r}", line=line_no)
    anchor = None
    pos = None
    variant = ""
    for tok in tokens[1:]:
        if tok.startswith("@"):
            try:
                anchor = int(tok[1:])
            except ValueError:
                raise ParseError(f"bad anchor {tok!r}", line=line_no) from None
        elif tok in ("up", "down"):
            variant = tok
        else:
            try:
                pos = int(tok)
            except ValueError:
                raise ParseError(f"bad token {tok!r}", line=line_no) from None
    if kind in _INSERTION_KINDS:
        if pos is None:
            pos = 1
    elif anchor is None:
        raise ParseError(f"{kind} needs an @anchor", line=line_no)
    return Move(kind, anchor, pos or 0, variant)


def parse_script(text: str) -> list:
    moves = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        moves.append(parse_move(line, line_no=ln))
    return moves
