"""Formal analogies between strings.

Two routes decide ``a:b::c:d``:

* :func:`is_analogy` compares edit signatures.  The signature of a pair
  is its least-cost edit script, read off a single deterministic path
  through the Levenshtein lattice, with runs of matches merged and the
  matched text hidden behind ``@``.
* :func:`is_analogy_oracle` searches for four factorizations of equal
  length such that each factor of ``b`` and ``c`` equals the
  corresponding factor of ``a`` and ``d``, in either order.  It is
  exponential in principle and only meant for short strings.

Both work on Unicode code points; an accented letter is one unit.
"""

from __future__ import annotations

import heapq
from collections import Counter
from functools import lru_cache
from typing import NamedTuple

from lexigraph.errors import SizeError

EPSILON = ""
WILDCARD = "@"

INSERT = "I"
DELETE = "D"
MATCH = "M"
SUBSTITUTE = "S"


class EditOp(NamedTuple):
    kind: str
    source: str
    target: str

    def __str__(self):
        return f"({self.kind},{self.source or 'ε'},{self.target or 'ε'})"


def format_script(ops) -> str:
    return "(" + ",".join(str(op) for op in ops) + ")"


def edit_matrix(a: str, b: str) -> list[list[int]]:
    """Levenshtein lattice with unit costs.

    Cell ``[i][j]`` is the distance between ``a[:i]`` and ``b[:j]``.
    """
    rows = len(a) + 1
    cols = len(b) + 1
    lattice = [[0] * cols for _ in range(rows)]
    for j in range(cols):
        lattice[0][j] = j
    for i in range(1, rows):
        prev = lattice[i - 1]
        cur = lattice[i]
        cur[0] = i
        ca = a[i - 1]
        for j in range(1, cols):
            cur[j] = min(
                cur[j - 1] + 1,
                prev[j] + 1,
                prev[j - 1] + (ca != b[j - 1]),
            )
    return lattice


def backtrack_path(lattice, a: str, b: str) -> list[EditOp]:
    """Walk from the last cell back to the origin.

    Only predecessors reachable by a step consistent with the cell's cost
    are eligible; among them the left cell (insertion) wins, then the
    upper cell (deletion), then the diagonal (match or substitution).
    """
    i, j = len(a), len(b)
    ops = []
    while i > 0 or j > 0:
        here = lattice[i][j]
        if j > 0 and lattice[i][j - 1] + 1 == here:
            ops.append(EditOp(INSERT, EPSILON, b[j - 1]))
            j -= 1
        elif i > 0 and lattice[i - 1][j] + 1 == here:
            ops.append(EditOp(DELETE, a[i - 1], EPSILON))
            i -= 1
        else:
            same = a[i - 1] == b[j - 1]
            ops.append(EditOp(MATCH if same else SUBSTITUTE, a[i - 1], b[j - 1]))
            i -= 1
            j -= 1
    ops.reverse()
    return ops


def simplify(script) -> list[EditOp]:
    """Merge maximal runs of consecutive matches into one match."""
    out = []
    for op in script:
        if op.kind == MATCH and out and out[-1].kind == MATCH:
            last = out[-1]
            out[-1] = EditOp(MATCH, last.source + op.source, last.target + op.target)
        else:
            out.append(op)
    return out


@lru_cache(maxsize=1 << 16)
def signature(a: str, b: str) -> tuple[EditOp, ...]:
    """Edit signature of the pair ``(a, b)``.

    >>> format_script(signature("fructueux", "infructueusement"))
    '((I,ε,i),(I,ε,n),(M,@,@),(S,x,s),(I,ε,e),(I,ε,m),(I,ε,e),(I,ε,n),(I,ε,t))'
    """
    script = simplify(backtrack_path(edit_matrix(a, b), a, b))
    return tuple(
        EditOp(MATCH, WILDCARD, WILDCARD) if op.kind == MATCH else op
        for op in script
    )


IDENTITY_SIGNATURE = (EditOp(MATCH, WILDCARD, WILDCARD),)


def is_degenerate(sig) -> bool:
    """True for the signature of a pair of identical strings."""
    return tuple(sig) in (IDENTITY_SIGNATURE, ())


def is_analogy(a: str, b: str, c: str, d: str) -> bool:
    return signature(a, b) == signature(c, d)


def _check_sizes(strings, max_len):
    for s in strings:
        if len(s) > max_len:
            raise SizeError(f"string {s!r} has length {len(s)} > max_len={max_len}")


# Single-character moves of the factorization search, as (kind, (x, y)):
# advance strings x and y together over an equal character.  A factor with
# b_i = a_i and c_i = d_i is consumed by (a, b) and (c, d) moves (kind 0);
# the crossed factor b_i = d_i, c_i = a_i by (b, d) and (a, c) moves (kind 1).
MOVES = (
    (0, (0, 1)),
    (0, (2, 3)),
    (1, (1, 3)),
    (1, (0, 2)),
)


def _quick_reject(a, b, c, d) -> bool:
    # every factor of a and d reappears in b or c, so lengths and
    # character multisets must balance
    if len(a) + len(d) != len(b) + len(c):
        return True
    return Counter(a) + Counter(d) != Counter(b) + Counter(c)


def is_analogy_oracle(a: str, b: str, c: str, d: str, max_len: int = 12) -> bool:
    """Exhaustive factorization test for ``a:b::c:d``.

    True iff for some ``n`` there are factorizations ``f(a), f(b), f(c),
    f(d)`` of length ``n`` (empty factors allowed) with
    ``(f_i(b), f_i(c))`` equal to ``(f_i(a), f_i(d))`` or to
    ``(f_i(d), f_i(a))`` for every ``i``.
    """
    _check_sizes((a, b, c, d), max_len)
    if _quick_reject(a, b, c, d):
        return False
    strings = (a, b, c, d)
    goal = tuple(len(s) for s in strings)
    seen = set()
    stack = [(0, 0, 0, 0)]
    while stack:
        pos = stack.pop()
        if pos == goal:
            return True
        if pos in seen:
            continue
        seen.add(pos)
        for _, (x, y) in MOVES:
            px, py = pos[x], pos[y]
            if px < goal[x] and py < goal[y] and strings[x][px] == strings[y][py]:
                nxt = list(pos)
                nxt[x] += 1
                nxt[y] += 1
                stack.append(tuple(nxt))
    return False


def min_factorization_length(a: str, b: str, c: str, d: str, max_len: int = 12) -> int | None:
    """Smallest ``n`` admitting factorizations as in :func:`is_analogy_oracle`.

    Returns None when no factorization exists.  Consecutive moves of the
    same kind extend the current factor; a change of kind opens a new one.
    """
    _check_sizes((a, b, c, d), max_len)
    if _quick_reject(a, b, c, d):
        return None
    strings = (a, b, c, d)
    goal = tuple(len(s) for s in strings)
    if goal == (0, 0, 0, 0):
        return 0
    # state: (positions, kind of the open factor or -1)
    start = ((0, 0, 0, 0), -1)
    best = {start: 0}
    heap = [(0, start)]
    while heap:
        cost, state = heapq.heappop(heap)
        if best.get(state, cost + 1) < cost:
            continue
        pos, open_kind = state
        if pos == goal:
            return cost
        for kind, (x, y) in MOVES:
            px, py = pos[x], pos[y]
            if px < goal[x] and py < goal[y] and strings[x][px] == strings[y][py]:
                nxt = list(pos)
                nxt[x] += 1
                nxt[y] += 1
                new_state = (tuple(nxt), kind)
                new_cost = cost + (kind != open_kind)
                if new_cost < best.get(new_state, new_cost + 1):
                    best[new_state] = new_cost
                    heapq.heappush(heap, (new_cost, new_state))
    return None


def satisfies_factorization(fa, fb, fc, fd) -> bool:
    """Check explicit factorizations against the factor condition."""
    if not len(fa) == len(fb) == len(fc) == len(fd):
        return False
    return all(
        (xb, xc) in ((xa, xd), (xd, xa))
        for xa, xb, xc, xd in zip(fa, fb, fc, fd)
    )
