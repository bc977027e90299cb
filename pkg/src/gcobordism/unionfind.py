"""Disjoint sets over 0..n-1 with path compression and union by rank."""

import numpy as np


class UnionFind:
    def __init__(self, n):
        self.parent = np.arange(n, dtype=np.int64)
        self.rank = np.zeros(n, dtype=np.int8)
        self.count = n

    def __len__(self):
        return len(self.parent)

    def find(self, x):
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return int(root)

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        rank = self.rank
        if rank[x] < rank[y]:
            x, y = y, x
        elif rank[x] == rank[y]:
            rank[x] += 1
        self.parent[y] = x
        self.count -= 1
        return True

    def _flatten(self):
        parent = self.parent
        while True:
            grand = parent[parent]
            if np.array_equal(grand, parent):
                return parent
            parent[:] = grand

    def union_many(self, xs, ys):
        """
        Merge every pair (xs[i], ys[i]) at once.

        Roots are hooked onto the smaller root label and the forest is
        flattened by pointer jumping until no edge crosses two classes.
        The forest is left flat (every node points at its root).
        """
        xs = np.asarray(xs, dtype=np.int64)
        ys = np.asarray(ys, dtype=np.int64)
        parent = self._flatten()
        while len(xs):
            rx, ry = parent[xs], parent[ys]
            cross = rx != ry
            if not cross.any():
                break
            rx, ry = rx[cross], ry[cross]
            xs, ys = xs[cross], ys[cross]
            lo, hi = np.minimum(rx, ry), np.maximum(rx, ry)
            np.minimum.at(parent, hi, lo)
            parent = self._flatten()
        roots = parent == np.arange(len(parent))
        self.count = int(roots.sum())
        # height of a flat forest: 1 for roots with children, 0 otherwise
        self.rank[:] = 0
        self.rank[np.unique(parent[~roots])] = 1

    def roots(self):
        self._flatten()
        return np.nonzero(self.parent == np.arange(len(self.parent)))[0]

    def labels(self):
        """Root of every element."""
        return self._flatten().copy()
