"""Union-find over dense integer indices, with path compression."""


class UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))
        self.count = size

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while x != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        # smaller root wins so component ids are stable and order-free
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.count -= 1

    def groups(self) -> list[list[int]]:
        """Members grouped by root, ordered by least member."""
        by_root: dict[int, list[int]] = {}
        for x in range(len(self.parent)):
            by_root.setdefault(self.find(x), []).append(x)
        return [by_root[r] for r in sorted(by_root)]
