"""Planarity decision via the left-right criterion (Brandes' formulation).

Both DFS passes run on explicit stacks, so graph depth never touches the
interpreter recursion limit.  Only the yes/no answer is produced; the
``side`` bookkeeping needed for an embedding is skipped.
"""

from __future__ import annotations

from .graph import Graph

OEdge = tuple[int, int]


def euler_prefilter(n: int, e: int) -> bool:
    """False when ``e > 3n - 6`` rules planarity out; True is inconclusive."""
    if n < 3:
        return True
    return e <= 3 * n - 6


class _Interval:
    __slots__ = ("low", "high")

    def __init__(self, low: OEdge | None = None, high: OEdge | None = None) -> None:
        self.low = low
        self.high = high

    def empty(self) -> bool:
        return self.low is None and self.high is None

    def copy(self) -> _Interval:
        return _Interval(self.low, self.high)

    def conflicting(self, b: OEdge, lowpt: dict[OEdge, int]) -> bool:
        return not self.empty() and lowpt[self.high] > lowpt[b]


class _ConflictPair:
    __slots__ = ("left", "right")

    def __init__(self, left: _Interval | None = None, right: _Interval | None = None) -> None:
        self.left = left or _Interval()
        self.right = right or _Interval()

    def swap(self) -> None:
        self.left, self.right = self.right, self.left

    def lowest(self, lowpt: dict[OEdge, int]) -> int:
        if self.left.empty():
            return lowpt[self.right.low]
        if self.right.empty():
            return lowpt[self.left.low]
        return min(lowpt[self.left.low], lowpt[self.right.low])


class _LRTester:
    def __init__(self, g: Graph) -> None:
        self.n = g.n
        self.adj = [sorted(a) for a in g.adjacency]
        self.height = [-1] * g.n
        self.parent_edge: list[OEdge | None] = [None] * g.n
        self.lowpt: dict[OEdge, int] = {}
        self.lowpt2: dict[OEdge, int] = {}
        self.nesting: dict[OEdge, int] = {}
        self.out: list[list[int]] = [[] for _ in range(g.n)]
        self.roots: list[int] = []
        # testing phase
        self.S: list[_ConflictPair] = []
        self.stack_bottom: dict[OEdge, _ConflictPair | None] = {}
        self.lowpt_edge: dict[OEdge, OEdge] = {}
        self.ref: dict[OEdge, OEdge | None] = {}

    def run(self) -> bool:
        for v in range(self.n):
            if self.height[v] == -1:
                self.height[v] = 0
                self.roots.append(v)
                self._orient(v)
        self.ordered = [
            sorted(self.out[v], key=lambda w, v=v: self.nesting[(v, w)]) for v in range(self.n)
        ]
        return all(self._test(root) for root in self.roots)

    # phase 1: DFS orientation, lowpoints, nesting depths

    def _orient(self, root: int) -> None:
        height, parent_edge = self.height, self.parent_edge
        lowpt, lowpt2 = self.lowpt, self.lowpt2
        seen: set[tuple[int, int]] = set()
        ind = {root: 0}
        resumed: set[OEdge] = set()
        stack = [root]
        while stack:
            v = stack.pop()
            e = parent_edge[v]
            nbrs = self.adj[v]
            i = ind.setdefault(v, 0)
            while i < len(nbrs):
                w = nbrs[i]
                vw = (v, w)
                if vw not in resumed:
                    key = (v, w) if v < w else (w, v)
                    if key in seen:
                        i += 1
                        continue
                    seen.add(key)
                    self.out[v].append(w)
                    lowpt[vw] = lowpt2[vw] = height[v]
                    if height[w] == -1:
                        parent_edge[w] = vw
                        height[w] = height[v] + 1
                        resumed.add(vw)
                        ind[v] = i
                        stack.append(v)
                        stack.append(w)
                        break
                    lowpt[vw] = height[w]
                self.nesting[vw] = 2 * lowpt[vw] + (1 if lowpt2[vw] < height[v] else 0)
                if e is not None:
                    if lowpt[vw] < lowpt[e]:
                        lowpt2[e] = min(lowpt[e], lowpt2[vw])
                        lowpt[e] = lowpt[vw]
                    elif lowpt[vw] > lowpt[e]:
                        lowpt2[e] = min(lowpt2[e], lowpt[vw])
                    else:
                        lowpt2[e] = min(lowpt2[e], lowpt2[vw])
                i += 1
            else:
                ind[v] = i

    # phase 2: constraint stack

    def _top(self) -> _ConflictPair | None:
        return self.S[-1] if self.S else None

    def _test(self, root: int) -> bool:
        height, lowpt, parent_edge = self.height, self.lowpt, self.parent_edge
        ind: dict[int, int] = {}
        resumed: set[OEdge] = set()
        stack = [root]
        while stack:
            v = stack.pop()
            e = parent_edge[v]
            adjs = self.ordered[v]
            i = ind.get(v, 0)
            descended = False
            while i < len(adjs):
                w = adjs[i]
                ei = (v, w)
                if ei not in resumed:
                    self.stack_bottom[ei] = self._top()
                    if ei == parent_edge[w]:
                        resumed.add(ei)
                        ind[v] = i
                        stack.append(v)
                        stack.append(w)
                        descended = True
                        break
                    self.lowpt_edge[ei] = ei
                    self.S.append(_ConflictPair(right=_Interval(ei, ei)))
                if lowpt[ei] < height[v]:
                    if i == 0:
                        self.lowpt_edge[e] = self.lowpt_edge[ei]
                    elif not self._add_constraints(ei, e):
                        return False
                i += 1
            if descended:
                continue
            ind[v] = i
            if e is not None:
                self._remove_back_edges(e)
        return True

    def _add_constraints(self, ei: OEdge, e: OEdge) -> bool:
        lowpt, ref, S = self.lowpt, self.ref, self.S
        P = _ConflictPair()
        while True:
            Q = S.pop()
            if not Q.left.empty():
                Q.swap()
            if not Q.left.empty():
                return False
            if lowpt[Q.right.low] > lowpt[e]:
                if P.right.empty():
                    P.right = Q.right.copy()
                else:
                    ref[P.right.low] = Q.right.high
                P.right.low = Q.right.low
            else:
                ref[Q.right.low] = self.lowpt_edge[e]
            if self._top() is self.stack_bottom[ei]:
                break
        while S and (S[-1].left.conflicting(ei, lowpt) or S[-1].right.conflicting(ei, lowpt)):
            Q = S.pop()
            if Q.right.conflicting(ei, lowpt):
                Q.swap()
            if Q.right.conflicting(ei, lowpt):
                return False
            ref[P.right.low] = Q.right.high
            if Q.right.low is not None:
                P.right.low = Q.right.low
            if P.left.empty():
                P.left = Q.left.copy()
            else:
                ref[P.left.low] = Q.left.high
            P.left.low = Q.left.low
        if not (P.left.empty() and P.right.empty()):
            S.append(P)
        return True

    def _remove_back_edges(self, e: OEdge) -> None:
        lowpt, ref, S = self.lowpt, self.ref, self.S
        u = e[0]
        while S and S[-1].lowest(lowpt) == self.height[u]:
            S.pop()
        if S:
            P = S.pop()
            while P.left.high is not None and P.left.high[1] == u:
                P.left.high = ref.get(P.left.high)
            if P.left.high is None and P.left.low is not None:
                ref[P.left.low] = P.right.low
                P.left.low = None
            while P.right.high is not None and P.right.high[1] == u:
                P.right.high = ref.get(P.right.high)
            if P.right.high is None and P.right.low is not None:
                ref[P.right.low] = P.left.low
                P.right.low = None
            S.append(P)
        if lowpt[e] < self.height[u] and S:
            hl, hr = S[-1].left.high, S[-1].right.high
            if hl is not None and (hr is None or lowpt[hl] > lowpt[hr]):
                ref[e] = hl
            else:
                ref[e] = hr


def is_planar(g: Graph) -> bool:
    if not euler_prefilter(g.n, g.m):
        return False
    if g.n < 5 or g.m < 9:
        return True
    return _LRTester(g).run()
