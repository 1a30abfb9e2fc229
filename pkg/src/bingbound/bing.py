"""Binary trees for partially iterated Bing doubles and the covering-link
rewrites that reduce ``B_n(K)`` to its companion knot.

A tree shape is a nested tuple: ``()`` is a leaf and ``(left, right)`` an
internal node.  Nodes are addressed by root-relative paths over ``{L, R}``
(the root is ``""``).  Two rewrites are available:

* rule B prunes a cherry (two sibling leaves), leaving their parent as a
  marked leaf;
* rule A deletes a marked depth-1 leaf, promotes its sibling subtree to the
  root and replaces the knot ``K`` with ``K # rev(K)``.
"""

from __future__ import annotations

import hashlib
import json
from collections import Counter
from dataclasses import dataclass, field, replace
from typing import Iterator, Optional

from .errors import NotACherryError, NotDepthOneLeafError, ParseError, TreeError, WouldTrivializeError
from .expression import KnotExpression, Multiple, Reverse, Sum, block_counts, to_text

LEAF: tuple = ()


def _check_locator(loc: str) -> str:
    if any(c not in "LR" for c in loc):
        raise TreeError(f"bad locator {loc!r}: use a string over L and R")
    return loc


def _subtree(shape: tuple, loc: str) -> tuple:
    node = shape
    for c in loc:
        if node == LEAF:
            raise TreeError(f"locator {loc!r} runs past a leaf")
        node = node[0] if c == "L" else node[1]
    return node


def _replace_at(shape: tuple, loc: str, new: tuple) -> tuple:
    if not loc:
        return new
    if shape == LEAF:
        raise TreeError(f"locator {loc!r} runs past a leaf")
    left, right = shape
    if loc[0] == "L":
        return (_replace_at(left, loc[1:], new), right)
    return (left, _replace_at(right, loc[1:], new))


@dataclass(frozen=True)
class BingTree:
    """Immutable rooted binary tree with an optional marked node."""

    shape: tuple = LEAF
    mark: Optional[str] = None

    def __post_init__(self):
        _validate_shape(self.shape)
        if self.mark is not None:
            _subtree(self.shape, _check_locator(self.mark))

    # -- structure ---------------------------------------------------------------

    def node(self, loc: str) -> tuple:
        return _subtree(self.shape, _check_locator(loc))

    def is_leaf(self, loc: str) -> bool:
        return self.node(loc) == LEAF

    def nodes(self) -> Iterator[str]:
        """All locators in pre-order (node, then left, then right)."""
        stack = [("", self.shape)]
        while stack:
            loc, node = stack.pop()
            yield loc
            if node != LEAF:
                stack.append((loc + "R", node[1]))
                stack.append((loc + "L", node[0]))

    def leaves(self) -> list[str]:
        return [loc for loc in self.nodes() if self.is_leaf(loc)]

    def cherries(self) -> list[str]:
        """Locators of internal nodes whose two children are leaves, in pre-order."""
        return [loc for loc in self.nodes() if self.node(loc) == (LEAF, LEAF)]

    @property
    def leaf_count(self) -> int:
        return _leaf_count(self.shape)

    @property
    def depth(self) -> int:
        return _depth(self.shape)

    @property
    def is_trivial(self) -> bool:
        return self.shape == LEAF

    def with_mark(self, loc: Optional[str]) -> "BingTree":
        return replace(self, mark=loc)

    # -- text --------------------------------------------------------------------

    def to_text(self) -> str:
        def walk(node, loc):
            s = "*" if node == LEAF else f"({walk(node[0], loc + 'L')} {walk(node[1], loc + 'R')})"
            return s + "!" if loc == self.mark else s

        return walk(self.shape, "")

    def __str__(self) -> str:
        return self.to_text()

    def digest(self) -> str:
        return hashlib.sha256(self.to_text().encode()).hexdigest()[:16]


def _validate_shape(node) -> None:
    stack = [node]
    while stack:
        n = stack.pop()
        if not isinstance(n, tuple) or len(n) not in (0, 2):
            raise TreeError(f"every node needs zero or two children, got {n!r}")
        stack.extend(n)


def _leaf_count(node) -> int:
    return 1 if node == LEAF else _leaf_count(node[0]) + _leaf_count(node[1])


def _depth(node) -> int:
    return 0 if node == LEAF else 1 + max(_depth(node[0]), _depth(node[1]))


def full_tree(n: int) -> BingTree:
    """Complete binary tree of depth ``n``: the pattern of ``B_n(K)``."""
    if n < 0:
        raise ValueError("depth must be non-negative")
    shape: tuple = LEAF
    for _ in range(n):
        shape = (shape, shape)
    return BingTree(shape)


def parse_tree(text: str) -> BingTree:
    """Inverse of :meth:`BingTree.to_text`; whitespace between tokens is free."""
    pos = 0
    mark: list[str] = []

    def skip():
        nonlocal pos
        while pos < len(text) and text[pos].isspace():
            pos += 1

    def node(loc):
        nonlocal pos
        skip()
        if pos >= len(text):
            raise ParseError("unexpected end of tree", text, pos)
        if text[pos] == "*":
            pos += 1
            out: tuple = LEAF
        elif text[pos] == "(":
            pos += 1
            left = node(loc + "L")
            right = node(loc + "R")
            skip()
            if pos >= len(text) or text[pos] != ")":
                raise ParseError("expected ')'", text, pos)
            pos += 1
            out = (left, right)
        else:
            raise ParseError(f"unexpected {text[pos]!r}", text, pos)
        skip()
        if pos < len(text) and text[pos] == "!":
            if mark:
                raise ParseError("more than one marked node", text, pos)
            mark.append(loc)
            pos += 1
        return out

    shape = node("")
    skip()
    if pos != len(text):
        raise ParseError("trailing input", text, pos)
    return BingTree(shape, mark[0] if mark else None)


# -- rewrites ------------------------------------------------------------------------


def apply_covering_B(t: BingTree, marked: str) -> BingTree:
    """Prune the cherry below ``marked``; the parent becomes a marked leaf."""
    loc = _check_locator(marked)
    if t.node(loc) != (LEAF, LEAF):
        raise NotACherryError(f"node {loc!r} of {t} does not have two leaf children")
    if loc == "":
        raise WouldTrivializeError("pruning the only cherry of a depth-1 tree leaves the trivial tree")
    return BingTree(_replace_at(t.shape, loc, LEAF), mark=loc)


def apply_covering_A(t: BingTree, marked: str, k: KnotExpression) -> tuple[BingTree, KnotExpression]:
    """Drop the depth-1 leaf ``marked``, promote its sibling, double the knot."""
    loc = _check_locator(marked)
    if len(loc) != 1 or t.is_trivial or t.node(loc) != LEAF:
        raise NotDepthOneLeafError(f"node {loc!r} of {t} is not a leaf at depth 1")
    other = t.shape[1] if loc == "L" else t.shape[0]
    return BingTree(other), Sum(k, Reverse(k))


# -- traces --------------------------------------------------------------------------


@dataclass(frozen=True)
class RewriteStep:
    rule: str
    locator: str
    before: str
    after: str
    knot_after: str

    def to_dict(self) -> dict:
        return {
            "rule": self.rule,
            "locator": self.locator,
            "before": self.before,
            "after": self.after,
            "knot_after": self.knot_after,
        }


@dataclass(frozen=True)
class RewriteTrace:
    initial_tree: BingTree
    initial_knot: KnotExpression
    steps: tuple[RewriteStep, ...] = field(default_factory=tuple)

    def counts(self) -> Counter:
        return Counter(s.rule for s in self.steps)

    def __len__(self) -> int:
        return len(self.steps)

    def to_jsonl(self) -> str:
        return "".join(json.dumps(s.to_dict(), sort_keys=True) + "\n" for s in self.steps)

    def digest(self) -> str:
        return hashlib.sha256(self.to_jsonl().encode()).hexdigest()[:16]


def _step(tree: BingTree, knot: KnotExpression, rule: str, loc: str):
    before = tree.with_mark(loc)
    if rule == "A":
        after, knot = apply_covering_A(before, loc, knot)
    elif rule == "B":
        after = apply_covering_B(before, loc)
    else:
        raise TreeError(f"unknown rule {rule!r}")
    return after, knot, RewriteStep(rule, loc, before.digest(), after.digest(), to_text(knot))


def next_move(tree: BingTree) -> Optional[tuple[str, str]]:
    """The reduction strategy: A on the leftmost depth-1 leaf when there is
    one, otherwise B on the first cherry in pre-order."""
    if tree.is_trivial:
        return None
    for loc in ("L", "R"):
        if tree.is_leaf(loc):
            return "A", loc
    return "B", tree.cherries()[0]


def reduce_tree(tree: BingTree, k: KnotExpression) -> tuple[BingTree, KnotExpression, RewriteTrace]:
    """Run the strategy of :func:`next_move` until the tree is a single node."""
    start_tree, start_knot = tree.with_mark(None), k
    tree = start_tree
    steps = []
    while (move := next_move(tree)) is not None:
        tree, k, st = _step(tree, k, *move)
        steps.append(st)
    return tree, k, RewriteTrace(start_tree, start_knot, tuple(steps))


def reduce_to_companion(n: int, k: KnotExpression) -> tuple[KnotExpression, RewriteTrace]:
    """Reduce ``B_n(k)`` to a single knot with ``2^n - n - 1`` B-steps and
    ``n`` A-steps; the result evaluates to the blocks of ``2^(n-1) (k # rev k)``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    _, companion, trace = reduce_tree(full_tree(n), k)
    return companion, trace


def closed_form_companion(n: int, k: KnotExpression) -> KnotExpression:
    return Multiple(2 ** (n - 1), Sum(k, Reverse(k)))


def replay(trace: RewriteTrace) -> tuple[BingTree, KnotExpression]:
    """Re-apply every recorded step, checking digests and knots on the way."""
    tree, knot = trace.initial_tree, trace.initial_knot
    for i, st in enumerate(trace.steps):
        before = tree.with_mark(st.locator)
        if before.digest() != st.before:
            raise TreeError(f"step {i}: tree before does not match the recorded digest")
        tree, knot, redo = _step(tree, knot, st.rule, st.locator)
        if redo != st:
            raise TreeError(f"step {i}: replay diverges from the recorded step")
    return tree, knot


def block_identical(a: KnotExpression, b: KnotExpression, catalog=None) -> bool:
    """Same multiset of diagonal Seifert blocks, i.e. the block sums agree up
    to reordering the blocks (a simultaneous row/column permutation)."""
    return block_counts(a, catalog) == block_counts(b, catalog)
