"""Closed-braid diagram builders.

Braid words are sequences of nonzero integers: +i is the positive generator
crossing strands i, i+1 (left strand over), -i its inverse. Closures connect
the top of each strand back around to its bottom; in the annulus each
closure arc crosses the reference ray once, so every strand contributes one
winding mark.
"""

from __future__ import annotations

from .diagrams import ANNULUS, DISK, FramedDiagram
from .errors import DiagramError


def braid_closure(word, strands: int, surface: str = DISK) -> FramedDiagram:
    if strands < 1:
        raise DiagramError("braid needs at least one strand")
    for g in word:
        if g == 0 or abs(g) >= strands:
            raise DiagramError(f"braid letter {g} out of range for {strands} strands")
    next_arc = strands
    current = list(range(strands))  # arc at each position, bottom to top
    start = list(range(strands))
    crossings = []
    for g in word:
        i = abs(g) - 1
        below_l, below_r = current[i], current[i + 1]
        above_l, above_r = next_arc, next_arc + 1
        next_arc += 2
        if g > 0:
            # left strand over: under-strand comes in at the lower right
            crossings.append((below_r, above_r, above_l, below_l))
        else:
            crossings.append((below_l, below_r, above_r, above_l))
        current[i], current[i + 1] = above_l, above_r
    # close up: identify top arcs with the corresponding start arcs
    rename = {}
    for pos in range(strands):
        top, bottom = current[pos], start[pos]
        if top != bottom:
            rename[top] = bottom
    pd = [tuple(rename.get(a, a) for a in c) for c in crossings]
    used = {a for c in pd for a in c}
    # strands never crossed close into free circles
    free = sum(1 for pos in range(strands) if current[pos] == start[pos] and start[pos] not in used)
    if surface == DISK:
        return FramedDiagram(DISK, pd, free_loops=free)
    closed = {rename.get(current[pos], current[pos]) for pos in range(strands)}
    marks = {a: 1 for a in closed if a in used}
    return FramedDiagram(ANNULUS, pd, free_loops=0, free_cores=free, winding_marks=marks)
