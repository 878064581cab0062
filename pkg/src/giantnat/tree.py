"""Run-length compressed trees of natural numbers.

A value is a leaf (zero) or a node carrying a head counter and a list of
further counters, every counter itself a tree.  Reading the bijective
base-2 digit string of the value from the outermost digit inward, a V node
describes runs alternating o,i,o,... and a W node runs alternating
i,o,i,...; run j has length counter_j + 1.  The encoding is applied
recursively to the counters, so numbers whose digit strings consist of a
few huge runs -- for instance 2^p - 1 -- stay tiny.

Digit primitives touch only the outermost node plus one succ/pred on a
counter.  Several derived operations have much faster equivalents here
(exp2, leftshift, bitsize, dual, repsize, cons/decons); they are exposed
both as module functions and as overrides on :class:`TreeNatRep`.
Comparison, addition and multiplication are deliberately not overridden.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random

from .core import DomainError, ParseError, NatRep


class Tree:
    """Base class of tree values; see :data:`LEAF`, :class:`VNode`, :class:`WNode`."""

    __slots__ = ()

    def __repr__(self) -> str:
        return print_tree(self)


class _Leaf(Tree):
    __slots__ = ()


LEAF = _Leaf()


class VNode(Tree):
    """Odd values: outermost run is made of o digits."""

    __slots__ = ("head", "tail", "_hash")

    def __init__(self, head: Tree, tail: tuple[Tree, ...]):
        self.head = head
        self.tail = tail
        self._hash = None

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if type(other) is not VNode:
            return NotImplemented if not isinstance(other, Tree) else False
        return self.head == other.head and self.tail == other.tail

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((False, self.head, self.tail))
            self._hash = h
        return h


class WNode(Tree):
    """Even positive values: outermost run is made of i digits."""

    __slots__ = ("head", "tail", "_hash")

    def __init__(self, head: Tree, tail: tuple[Tree, ...]):
        self.head = head
        self.tail = tail
        self._hash = None

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if type(other) is not WNode:
            return NotImplemented if not isinstance(other, Tree) else False
        return self.head == other.head and self.tail == other.tail

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((True, self.head, self.tail))
            self._hash = h
        return h


class TreeNatRep(NatRep[Tree]):
    """Digit primitives on trees, with the fast derived-operation overrides."""

    e = LEAF

    @staticmethod
    def o(x: Tree) -> Tree:
        t = type(x)
        if t is VNode:
            return VNode(_SUCC(x.head), x.tail)
        if t is WNode:
            return VNode(LEAF, (x.head, *x.tail))
        return VNode(LEAF, ())

    @staticmethod
    def i(x: Tree) -> Tree:
        t = type(x)
        if t is WNode:
            return WNode(_SUCC(x.head), x.tail)
        if t is VNode:
            return WNode(LEAF, (x.head, *x.tail))
        return WNode(LEAF, ())

    @staticmethod
    def o_inv(x: Tree) -> Tree:
        if type(x) is not VNode:
            raise DomainError("o_inv needs an odd value")
        head = x.head
        if head is LEAF:
            if x.tail:
                return WNode(x.tail[0], x.tail[1:])
            return LEAF
        return VNode(_PRED(head), x.tail)

    @staticmethod
    def i_inv(x: Tree) -> Tree:
        if type(x) is not WNode:
            raise DomainError("i_inv needs an even positive value")
        head = x.head
        if head is LEAF:
            if x.tail:
                return VNode(x.tail[0], x.tail[1:])
            return LEAF
        return WNode(_PRED(head), x.tail)

    @staticmethod
    def is_o(x: Tree) -> bool:
        return type(x) is VNode

    @staticmethod
    def is_e(x: Tree) -> bool:
        return x is LEAF

    @staticmethod
    def is_i(x: Tree) -> bool:
        return type(x) is WNode

    # fast overrides; semantics identical to the generic definitions

    def exp2(self, x: Tree) -> Tree:
        return exp2_fast(x)

    def leftshift(self, x: Tree, y: Tree) -> Tree:
        return leftshift_fast(x, y)

    def bitsize(self, x: Tree) -> Tree:
        return bitsize_fast(x)

    def dual(self, x: Tree) -> Tree:
        return dual_fast(x)

    def repsize(self, x: Tree) -> Tree:
        return repsize_fast(x)

    def decons(self, z: Tree) -> tuple[Tree, Tree]:
        return decons_fast(z)

    def cons(self, x: Tree, y: Tree) -> Tree:
        return cons_fast(x, y)


# ----------------------------------------------------------------------
# Fast derived operations
# ----------------------------------------------------------------------


def vmul(k: Tree, y: Tree) -> Tree:
    """Apply the o digit k times to y by editing only the outermost node."""
    if k is LEAF:
        return y
    if y is LEAF:
        return VNode(_PRED(k), ())
    if type(y) is VNode:
        # y already opens with an o run; k joins its counter
        return VNode(_ADD(k, y.head), y.tail)
    return VNode(_PRED(k), (y.head, *y.tail))


def exp2_fast(x: Tree) -> Tree:
    """2 raised to x, in time proportional to succ/pred rather than to 2^x."""
    if x is LEAF:
        return VNode(LEAF, ())
    return _SUCC(VNode(_PRED(x), ()))


def leftshift_fast(k: Tree, y: Tree) -> Tree:
    """y times 2 raised to k: 2^k*y is one more than k o digits on y-1,
    whatever the parity of y."""
    if y is LEAF:
        return LEAF
    return _SUCC(vmul(k, _PRED(y)))


def bitsize_fast(x: Tree) -> Tree:
    """Digit count, summing run lengths from the outermost node's counters."""
    if x is LEAF:
        return LEAF
    acc = x.head
    for counter in reversed(x.tail):
        acc = _SUCC(_ADD(counter, acc))
    return _SUCC(acc)


def dual_fast(x: Tree) -> Tree:
    """Swap all o and i digits by flipping only the top constructor."""
    t = type(x)
    if t is VNode:
        return WNode(x.head, x.tail)
    if t is WNode:
        return VNode(x.head, x.tail)
    return LEAF


def repsize_fast(x: Tree) -> Tree:
    """Count of non-leaf nodes, as a tree value."""
    if x is LEAF:
        return LEAF
    acc: Tree = LEAF
    for child in reversed((x.head, *x.tail)):
        acc = _ADD(repsize_fast(child), acc)
    return _SUCC(acc)


def node_count(x: Tree) -> int:
    """Total node count, leaves included, as a plain int."""
    if x is LEAF:
        return 1
    return 1 + node_count(x.head) + sum(node_count(c) for c in x.tail)


def decons_fast(z: Tree) -> tuple[Tree, Tree]:
    """Pair-splitting bijection, reading the run split off the top node."""
    t = type(z)
    if t is VNode:
        if z.tail:
            return z.head, WNode(z.tail[0], z.tail[1:])
        return _PRED(TREE.o(z.head)), LEAF
    if t is WNode:
        if z.tail:
            return z.head, VNode(z.tail[0], z.tail[1:])
        return _PRED(TREE.i(z.head)), LEAF
    raise DomainError("decons of zero")


def cons_fast(x: Tree, y: Tree) -> Tree:
    """Inverse of :func:`decons_fast`; one node edit plus succ/pred work."""
    ty = type(y)
    if ty is VNode:
        return WNode(x, (y.head, *y.tail))
    if ty is WNode:
        return VNode(x, (y.head, *y.tail))
    # y is zero: the pair is encoded in a single run
    if x is LEAF:
        return VNode(LEAF, ())
    if type(x) is VNode:
        return WNode(TREE.i_inv(_SUCC(x)), ())
    return VNode(TREE.o_inv(_SUCC(x)), ())


# ----------------------------------------------------------------------
# DAG folding
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class Dag:
    """Tree with identical subtrees shared.

    ``nodes`` holds (id, tag) pairs with tag "T", "V" or "W"; ``edges`` is
    indexed by id and lists child ids, head counter first.  Ids follow
    first-visit (preorder) order from the root, which is id 0.
    """

    nodes: tuple[tuple[int, str], ...]
    edges: tuple[tuple[int, ...], ...]
    root: int


def fold_to_dag(t: Tree) -> Dag:
    """Fold structurally identical subtrees into a single shared node."""
    ids: dict[Tree, int] = {}
    nodes: list[tuple[int, str]] = []
    edges: list[tuple[int, ...]] = []

    def visit(u: Tree) -> int:
        nid = ids.get(u)
        if nid is not None:
            return nid
        nid = len(nodes)
        ids[u] = nid
        if u is LEAF:
            nodes.append((nid, "T"))
            edges.append(())
            return nid
        nodes.append((nid, "V" if type(u) is VNode else "W"))
        edges.append(())
        edges[nid] = tuple(visit(c) for c in (u.head, *u.tail))
        return nid

    root = visit(t)
    return Dag(tuple(nodes), tuple(edges), root)


def unfold_dag(dag: Dag) -> Tree:
    """Rebuild the tree a DAG was folded from."""
    tags = dict(dag.nodes)
    memo: dict[int, Tree] = {}
    building: set[int] = set()

    def build(nid: int) -> Tree:
        got = memo.get(nid)
        if got is not None:
            return got
        if nid in building:
            raise ValueError("cycle in DAG")
        building.add(nid)
        tag = tags[nid]
        children = dag.edges[nid]
        if tag == "T":
            if children:
                raise ValueError("leaf node with children")
            t: Tree = LEAF
        else:
            if not children:
                raise ValueError("inner node without a head counter")
            head = build(children[0])
            tail = tuple(build(c) for c in children[1:])
            t = VNode(head, tail) if tag == "V" else WNode(head, tail)
        building.discard(nid)
        memo[nid] = t
        return t

    return build(dag.root)


def dag_to_dot(dag: Dag) -> str:
    """DOT text: one line per node and per edge, edges labelled by child index."""
    lines = ["digraph tree {"]
    for nid, tag in dag.nodes:
        lines.append(f'n{nid} [label="{tag}"]')
    for nid, children in enumerate(dag.edges):
        for idx, child in enumerate(children):
            lines.append(f'n{nid} -> n{child} [label="{idx}"]')
    lines.append("}")
    return "\n".join(lines) + "\n"


# ----------------------------------------------------------------------
# Text format
# ----------------------------------------------------------------------


def print_tree(x: Tree) -> str:
    """Canonical text form, e.g. ``W (V T []) [T,T,T]`` for 42."""
    if x is LEAF:
        return "T"
    tag = "V" if type(x) is VNode else "W"
    head = "T" if x.head is LEAF else f"({print_tree(x.head)})"
    items = ",".join(print_tree(c) for c in x.tail)
    return f"{tag} {head} [{items}]"


def parse_tree(text: str) -> Tree:
    """Inverse of :func:`print_tree`; raises :class:`ParseError` with position."""
    t, pos = _parse_node(text, 0)
    if pos != len(text):
        raise ParseError("trailing characters after tree", pos)
    return t


def _expect(s: str, pos: int, ch: str) -> int:
    if pos >= len(s) or s[pos] != ch:
        raise ParseError(f"expected {ch!r}", pos)
    return pos + 1


def _parse_node(s: str, pos: int) -> tuple[Tree, int]:
    if pos >= len(s):
        raise ParseError("unexpected end of input", pos)
    ch = s[pos]
    if ch == "T":
        return LEAF, pos + 1
    if ch not in ("V", "W"):
        raise ParseError(f"expected 'T', 'V' or 'W', found {ch!r}", pos)
    ctor = VNode if ch == "V" else WNode
    pos = _expect(s, pos + 1, " ")
    if pos < len(s) and s[pos] == "T":
        head: Tree = LEAF
        pos += 1
    elif pos < len(s) and s[pos] == "(":
        head, pos = _parse_node(s, pos + 1)
        pos = _expect(s, pos, ")")
    else:
        raise ParseError("expected head counter ('T' or a parenthesized tree)", pos)
    pos = _expect(s, pos, " ")
    pos = _expect(s, pos, "[")
    items: list[Tree] = []
    if pos < len(s) and s[pos] != "]":
        while True:
            item, pos = _parse_node(s, pos)
            items.append(item)
            if pos < len(s) and s[pos] == ",":
                pos += 1
            else:
                break
    pos = _expect(s, pos, "]")
    return ctor(head, tuple(items)), pos


# ----------------------------------------------------------------------
# Structural random generator (used by the test suite)
# ----------------------------------------------------------------------


def random_tree(rng: Random, max_depth: int = 4) -> Tree:
    """Random tree: leaf with probability 1/2, else V or W evenly, with a
    recursively drawn head and 0..3 tail counters.  Depth-capped, so the
    trees stay small while their values may be astronomically large."""
    if max_depth == 0 or rng.random() < 0.5:
        return LEAF
    head = random_tree(rng, max_depth - 1)
    tail = tuple(random_tree(rng, max_depth - 1) for _ in range(rng.randrange(4)))
    ctor = VNode if rng.random() < 0.5 else WNode
    return ctor(head, tail)


TREE = TreeNatRep()

# The digit primitives above rebind these rather than going through the
# singleton, keeping the succ/pred mutual recursion on counters cheap.
_SUCC = TREE.succ
_PRED = TREE.pred
_ADD = TREE.add
