"""Finite commutative BCK-algebras built from single-atom rooted trees.

Nodes are dense integers ``0..n-1`` and node ``0`` is always the constant
``0`` of the algebra (the root of the tree).  The operation is materialised
as a full ``n x n`` table when the algebra is built.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterable, Optional, Sequence

from .errors import CycleError, MultiAtomError, MultiRootError, ParseError

ROOT_MARKERS = (None, -1, "-", "_")


@dataclass(frozen=True)
class RootedTree:
    """A finite rooted tree stored as a parent array; ``parent[0] == -1``."""

    parent: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.parent)

    @cached_property
    def children(self) -> tuple[tuple[int, ...], ...]:
        kids: list[list[int]] = [[] for _ in self.parent]
        for v, p in enumerate(self.parent):
            if v:
                kids[p].append(v)
        return tuple(tuple(k) for k in kids)

    @cached_property
    def depth(self) -> tuple[int, ...]:
        d = [0] * len(self.parent)
        for v in self.preorder:
            if v:
                d[v] = d[self.parent[v]] + 1
        return tuple(d)

    @cached_property
    def preorder(self) -> tuple[int, ...]:
        out, stack = [], [0]
        while stack:
            v = stack.pop()
            out.append(v)
            stack.extend(reversed(self.children[v]))
        return tuple(out)

    def ancestors(self, v: int) -> list[int]:
        """Path from ``v`` down to the root, ``v`` first."""
        path = [v]
        while v:
            v = self.parent[v]
            path.append(v)
        return path

    def to_text(self) -> str:
        return ",".join("-" if v == 0 else str(p) for v, p in enumerate(self.parent))

    def with_leaf(self, anchor: int) -> "RootedTree":
        return RootedTree(self.parent + (anchor,))


def from_parent_list(parents: Sequence) -> RootedTree:
    """Validate a parent list whose first entry is a root marker."""
    if len(parents) < 1:
        raise ParseError("a tree needs at least one node")
    n = len(parents)
    out = [-1]
    for v, p in enumerate(parents):
        if v == 0:
            if p not in ROOT_MARKERS:
                raise MultiRootError(f"node 0 must be the root, got parent {p!r}")
            continue
        if p in ROOT_MARKERS:
            raise MultiRootError(f"node {v} has no parent; only node 0 may be the root")
        if not isinstance(p, int) or not 0 <= p < n:
            raise ParseError(f"node {v}: parent {p!r} out of range 0..{n - 1}")
        out.append(p)
    for v in range(1, n):
        seen = {v}
        u = out[v]
        while u != 0:
            if u in seen:
                raise CycleError(f"parent chain of node {v} never reaches the root")
            seen.add(u)
            u = out[u]
    return RootedTree(tuple(out))


def parse_tree(text: str) -> RootedTree:
    """Parse the one-line format ``-,0,1,1``."""
    items: list = []
    for tok in text.strip().split(","):
        tok = tok.strip()
        if tok in ("-", "_", ""):
            items.append(None)
            continue
        try:
            items.append(int(tok))
        except ValueError:
            raise ParseError(f"bad parent index {tok!r}") from None
    return from_parent_list(items)


@dataclass(frozen=True)
class AxiomReport:
    ok: bool
    identity: Optional[str] = None
    witness: Optional[tuple[int, ...]] = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True, eq=False)
class CbckAlgebra:
    tree: RootedTree
    depth: tuple[int, ...]
    table: tuple[tuple[int, ...], ...] = field(repr=False)
    atom: Optional[int]

    def __len__(self) -> int:
        return len(self.depth)

    @property
    def size(self) -> int:
        return len(self.depth)

    @property
    def nodes(self) -> range:
        return range(len(self.depth))

    @cached_property
    def key(self) -> str:
        from .iso import canonical_form

        return canonical_form(self.tree)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CbckAlgebra):
            return NotImplemented
        return self.tree == other.tree and self.table == other.table

    def __hash__(self) -> int:
        return hash(self.tree)

    def __repr__(self) -> str:
        return f"CbckAlgebra({self.tree.to_text()!r})"


def _tree_meet(tree: RootedTree, x: int, y: int) -> int:
    d = tree.depth
    while d[x] > d[y]:
        x = tree.parent[x]
    while d[y] > d[x]:
        y = tree.parent[y]
    while x != y:
        x, y = tree.parent[x], tree.parent[y]
    return x


def build_algebra(tree: RootedTree) -> CbckAlgebra:
    """Turn a single-atom rooted tree into its cBCK-algebra.

    ``x - y`` is the element below ``x`` whose height is
    ``h(x) - h(x ^ y)`` (truncated at zero), ``x ^ y`` being the deepest
    common ancestor.
    """
    n = len(tree)
    if n > 1 and len(tree.children[0]) != 1:
        raise MultiAtomError(
            f"root has {len(tree.children[0])} children; the algebra must have a single atom"
        )
    depth = tree.depth
    # ancestor_at[x][k] = ancestor of x at height k
    ancestor_at = []
    for x in range(n):
        path = tree.ancestors(x)
        path.reverse()
        ancestor_at.append(path)
    rows = []
    for x in range(n):
        row = []
        for y in range(n):
            m = _tree_meet(tree, x, y)
            row.append(ancestor_at[x][max(0, depth[x] - depth[m])])
        rows.append(tuple(row))
    atom = tree.children[0][0] if n > 1 else None
    return CbckAlgebra(tree=tree, depth=depth, table=tuple(rows), atom=atom)


def algebra_from_parents(parents: Sequence) -> CbckAlgebra:
    return build_algebra(from_parent_list(parents))


def monus(A: CbckAlgebra, x: int, y: int) -> int:
    return A.table[x][y]


def meet(A: CbckAlgebra, x: int, y: int) -> int:
    t = A.table
    return t[x][t[x][y]]


def iterated_monus(A: CbckAlgebra, x: int, n: int, y: int) -> int:
    """``x - n*y``: subtract ``y`` from ``x`` ``n`` times."""
    if n < 0:
        raise ValueError("n must be non-negative")
    row = A.table
    for _ in range(n):
        nxt = row[x][y]
        if nxt == x:
            break
        x = nxt
    return x


def verify_axioms(A: CbckAlgebra, table: Optional[Sequence[Sequence[int]]] = None) -> AxiomReport:
    """Check the BCK laws, commutativity and exchange over all triples.

    ``table`` overrides the algebra's own table so corrupted operations can
    be checked against the same carrier.
    """
    t = A.table if table is None else table
    n = len(t)
    for x in range(n):
        if t[x][0] != x:
            return AxiomReport(False, "x-0=x", (x,))
        if t[0][x] != 0:
            return AxiomReport(False, "0-x=0", (x,))
    for x, y in product(range(n), repeat=2):
        if t[x][y] == 0 and t[y][x] == 0 and x != y:
            return AxiomReport(False, "antisymmetry", (x, y))
        if t[x][t[x][y]] != t[y][t[y][x]]:
            return AxiomReport(False, "commutativity", (x, y))
    for x, y, z in product(range(n), repeat=3):
        if t[t[t[x][y]][t[x][z]]][t[z][y]] != 0:
            return AxiomReport(False, "bck1", (x, y, z))
        if t[t[x][y]][z] != t[t[x][z]][y]:
            return AxiomReport(False, "exchange", (x, y, z))
    return AxiomReport(True)


def leq(A: CbckAlgebra, x: int, y: int) -> bool:
    return A.table[x][y] == 0


def branching_elements(A: CbckAlgebra) -> frozenset[int]:
    return frozenset(v for v in A.nodes if len(A.tree.children[v]) >= 2)


def maximal_elements(A: CbckAlgebra) -> frozenset[int]:
    return frozenset(v for v in A.nodes if not A.tree.children[v])


def height_of(A: CbckAlgebra) -> int:
    return max(A.depth)


def width_of(A: CbckAlgebra) -> int:
    return len(maximal_elements(A))


def is_chain(A: CbckAlgebra) -> bool:
    return width_of(A) == 1


def check_height_identity(A: CbckAlgebra, n: int) -> bool:
    """Exhaustively test ``x - (n+1)y = x - ny``; holds iff height <= n."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return all(
        iterated_monus(A, x, n + 1, y) == iterated_monus(A, x, n, y)
        for x, y in product(A.nodes, repeat=2)
    )


def check_width_identity(A: CbckAlgebra, n: int) -> bool:
    """Exhaustively test the meet of all ``x_i - x_j`` (``i != j``) over
    ``n + 1`` variables equals 0; holds iff ``|m(A)| <= n``.

    The search walks tuples depth first and abandons a prefix as soon as the
    running meet reaches 0, which is absorbing, so no non-zero witness is
    skipped.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    arity = n + 1
    t = A.table

    def extend(chosen: list[int], acc: Optional[int]) -> bool:
        # True when some completion of ``chosen`` has a non-zero meet
        if len(chosen) == arity:
            return acc != 0
        for x in A.nodes:
            cur = acc
            for y in chosen:
                for d in (t[x][y], t[y][x]):
                    cur = d if cur is None else t[cur][t[cur][d]]
                if cur == 0:
                    break
            if cur == 0:
                continue
            chosen.append(x)
            found = extend(chosen, cur)
            chosen.pop()
            if found:
                return True
        return False

    return not extend([], None)


def interval(A: CbckAlgebra, top: int) -> list[int]:
    """Elements of ``[0, top]`` ordered by height."""
    return list(reversed(A.tree.ancestors(top)))


def induced_tree(A: CbckAlgebra, carrier: Iterable[int]) -> tuple[RootedTree, tuple[int, ...]]:
    """Tree of a subuniverse under the restricted order.

    Returns the tree and ``embed`` with ``embed[i]`` the node of ``A`` that
    new node ``i`` stands for.  The new parent of ``v`` is its nearest
    proper ancestor inside the carrier.
    """
    members = set(carrier)
    members.add(0)
    order = [v for v in A.tree.preorder if v in members]
    index = {v: i for i, v in enumerate(order)}
    parents: list[int] = [-1]
    for v in order[1:]:
        u = A.tree.parent[v]
        while u not in members:
            u = A.tree.parent[u]
        parents.append(index[u])
    return RootedTree(tuple(parents)), tuple(order)


def induced_algebra(A: CbckAlgebra, carrier: Iterable[int]) -> tuple[CbckAlgebra, tuple[int, ...]]:
    """Re-index a subuniverse as a standalone algebra (see ``induced_tree``)."""
    tree, embed = induced_tree(A, carrier)
    return build_algebra(tree), embed
