"""Mutable local view of a directed graph.

The local search kernels never touch the shared CSR arrays: each run
works on a private overlay that supports sequential arc queries and O(1)
amortized reversal of a discovered path.  ``LocalView`` is the reference
implementation of that overlay, kept in pure Python with explicit
accounting so tests can pin down the query semantics independently of
the optimized kernels.

Accounting rules:
  * the first fetch of each live arc slot charges one query and marks
    the arc; repeated fetches of the same slot are free,
  * probing past the end of a list is free,
  * reversing a path only rewires arcs that were already marked.
"""

from .graph import DirectedGraph


class _Arc:
    __slots__ = ("tail", "head", "marked", "prev", "next")

    def __init__(self, tail, head):
        self.tail = tail
        self.head = head
        self.marked = False
        self.prev = None
        self.next = None


class LocalView:
    """Doubly-linked adjacency lists with counted queries and path
    reversal, built lazily from a graph without ever writing to it."""

    def __init__(self, graph: DirectedGraph):
        self.graph = graph
        self.n = graph.n
        self.queries = 0
        self.marked = 0
        self._first = [None] * graph.n
        self._last = [None] * graph.n
        self._loaded = [False] * graph.n

    def _load(self, v):
        if self._loaded[v]:
            return
        self._loaded[v] = True
        prev = None
        for arc_id in range(self.graph.indptr[v], self.graph.indptr[v + 1]):
            arc = _Arc(v, int(self.graph.heads[arc_id]))
            arc.prev = prev
            if prev is None:
                self._first[v] = arc
            else:
                prev.next = arc
            prev = arc
        self._last[v] = prev

    def first_arc(self, v):
        self._load(v)
        return self._charge(self._first[v])

    def next_arc(self, arc):
        return self._charge(arc.next)

    def _charge(self, arc):
        if arc is not None and not arc.marked:
            arc.marked = True
            self.queries += 1
            self.marked += 1
        return arc

    def out_arcs(self, v):
        """All current arcs out of v (marks and charges each)."""
        out = []
        arc = self.first_arc(v)
        while arc is not None:
            out.append(arc)
            arc = self.next_arc(arc)
        return out

    def _unlink(self, arc):
        v = arc.tail
        if arc.prev is None:
            self._first[v] = arc.next
        else:
            arc.prev.next = arc.next
        if arc.next is None:
            self._last[v] = arc.prev
        else:
            arc.next.prev = arc.prev

    def _append(self, arc, v):
        self._load(v)
        arc.tail = v
        arc.prev = self._last[v]
        arc.next = None
        if self._last[v] is None:
            self._first[v] = arc
        else:
            self._last[v].next = arc
        self._last[v] = arc

    def reverse_arc(self, arc):
        if not arc.marked:
            raise ValueError("only marked arcs may be reversed")
        self._unlink(arc)
        tail, head = arc.tail, arc.head
        arc.head = tail
        self._append(arc, head)

    def reverse_tree_path(self, arcs):
        """Reverse a directed path given as a list of marked arcs with
        arcs[i].head == arcs[i+1].tail."""
        for a, b in zip(arcs, arcs[1:]):
            if a.head != b.tail:
                raise ValueError("arcs do not form a path")
        for arc in arcs:
            self.reverse_arc(arc)

    def arc_multiset(self):
        """Current arcs as a sorted list of (tail, head) pairs."""
        pairs = []
        for v in range(self.n):
            self._load(v)
            arc = self._first[v]
            while arc is not None:
                pairs.append((arc.tail, arc.head))
                arc = arc.next
        return sorted(pairs)
