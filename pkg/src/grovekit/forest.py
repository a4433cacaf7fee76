"""
Indexed forests, i.e. elements of the Thompson monoid.

A tree shape is ``None`` (a leaf) or a pair ``(left, right)`` of shapes.  An
:class:`IndexedForest` stores its nontrivial trees together with the index of
their leftmost leaf; every other leaf is a trivial tree.  Leaves are numbered
1, 2, 3, ... left to right across the whole forest.

Words in the generators act by ``from_word([i1, ..., ik]) = i1 * ... * ik``,
where multiplying by ``i`` on the right replaces leaf ``i`` with a terminal
node.  The canonical word of a forest is its weakly increasing normal form,
which is what trimming the largest element of ``qdes`` at every step produces.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterator, NamedTuple, Sequence

__all__ = [
    "IndexedForest", "Node", "NotTrimmable", "TooManyParts", "EMPTY",
    "generator", "product", "from_word", "to_word", "qdes", "trim",
    "extractor_word", "trimming_words", "zigzag_forest", "zigzag_composition",
    "is_zigzag", "enumerate_forests", "forests_up_to", "parse_forest", "format_forest",
    "parse_composition", "format_composition",
]

L, R = "L", "R"


class NotTrimmable(ValueError):
    pass


class TooManyParts(ValueError):
    pass


def _nleaves(shape) -> int:
    if shape is None:
        return 1
    return _nleaves(shape[0]) + _nleaves(shape[1])


def _size(shape) -> int:
    if shape is None:
        return 0
    return 1 + _size(shape[0]) + _size(shape[1])


class Node(NamedTuple):
    """An internal node.  Children are ``("node", id)`` or ``("leaf", index)``."""
    id: int
    left: tuple[str, int]
    right: tuple[str, int]
    rho: int
    parent: int | None
    is_right_child: bool


@dataclass(frozen=True)
class IndexedForest:
    trees: tuple[tuple[int, object], ...] = ()

    def __post_init__(self):
        prev_end = 0
        for start, shape in self.trees:
            if shape is None:
                raise ValueError("trivial trees are not stored")
            if start <= prev_end:
                raise ValueError("tree leaf intervals must be disjoint and increasing")
            prev_end = start + _nleaves(shape) - 1

    def __len__(self):
        return sum(_size(s) for _, s in self.trees)

    @property
    def size(self) -> int:
        return len(self)

    def last_leaf(self) -> int:
        """Largest leaf index belonging to a nontrivial tree (0 if empty)."""
        if not self.trees:
            return 0
        start, shape = self.trees[-1]
        return start + _nleaves(shape) - 1

    def roots(self, nleaves: int = 0) -> list:
        """Root shapes covering at least leaves ``1..nleaves``."""
        out = []
        leaf = 1
        for start, shape in self.trees:
            while leaf < start:
                out.append(None)
                leaf += 1
            out.append(shape)
            leaf += _nleaves(shape)
        while leaf <= nleaves:
            out.append(None)
            leaf += 1
        return out

    @classmethod
    def from_roots(cls, roots: Sequence) -> "IndexedForest":
        trees = []
        leaf = 1
        for shape in roots:
            if shape is not None:
                trees.append((leaf, shape))
            leaf += _nleaves(shape)
        return cls(tuple(trees))

    def nodes(self) -> list[Node]:
        """Internal nodes in preorder, tree by tree."""
        out: list[Node] = []

        def visit(shape, first_leaf, parent, is_right):
            nid = len(out)
            out.append(None)  # placeholder, filled after children
            left, right = shape
            if left is None:
                lchild = ("leaf", first_leaf)
                mid = first_leaf + 1
            else:
                lchild = ("node", visit(left, first_leaf, nid, False))
                mid = first_leaf + _nleaves(left)
            if right is None:
                rchild = ("leaf", mid)
            else:
                rchild = ("node", visit(right, mid, nid, True))
            out[nid] = Node(nid, lchild, rchild, first_leaf, parent, is_right)
            return nid

        for start, shape in self.trees:
            visit(shape, start, None, False)
        return out

    def root_ids(self) -> list[int]:
        return [n.id for n in self.nodes() if n.parent is None]

    def __str__(self):
        return format_forest(self)

    def __repr__(self):
        return f"IndexedForest({format_forest(self)})"


EMPTY = IndexedForest()


def generator(i: int) -> IndexedForest:
    """The forest whose only internal node has leaf children ``i, i+1``."""
    if i < 1:
        raise ValueError(f"generator index must be >= 1, got {i}")
    return IndexedForest(((i, (None, None)),))


def _graft(shape, leaf: int, images: list):
    """Replace each leaf ``j`` of ``shape`` (numbered from ``leaf``) by ``images[j-1]``."""
    if shape is None:
        img = images[leaf - 1] if leaf - 1 < len(images) else None
        return img, leaf + 1
    left, nxt = _graft(shape[0], leaf, images)
    right, nxt = _graft(shape[1], nxt, images)
    return (left, right), nxt


def product(F: IndexedForest, G: IndexedForest) -> IndexedForest:
    """Attach the i-th leaf of ``F`` to the i-th root of ``G``."""
    g_roots = G.roots()
    f_roots = F.roots(len(g_roots))
    out = []
    leaf = 1
    for shape in f_roots:
        new, leaf = _graft(shape, leaf, g_roots)
        out.append(new)
    return IndexedForest.from_roots(out)


def from_word(word: Sequence[int]) -> IndexedForest:
    F = EMPTY
    for i in word:
        F = product(F, generator(i))
    return F


def qdes(F: IndexedForest) -> set[int]:
    """Left leaves of terminal nodes."""
    return {n.rho for n in F.nodes() if n.left[0] == "leaf" and n.right[0] == "leaf"}


def _delete_terminal(shape, leaf: int, target: int):
    # returns (new_shape, next_leaf)
    if shape is None:
        return None, leaf + 1
    if shape == (None, None) and leaf == target:
        return None, leaf + 2
    left, nxt = _delete_terminal(shape[0], leaf, target)
    right, nxt = _delete_terminal(shape[1], nxt, target)
    return (left, right), nxt


def trim(F: IndexedForest, i: int) -> tuple[IndexedForest, str]:
    """Return ``(F/i, kind)``; kind is ``"R"`` iff the trimmed node is a right child."""
    terminal = None
    for n in F.nodes():
        if n.left == ("leaf", i) and n.right[0] == "leaf":
            terminal = n
            break
    if terminal is None:
        raise NotTrimmable(f"{i} is not in qdes({format_forest(F)})")
    roots = []
    leaf = 1
    for shape in F.roots():
        new, leaf = _delete_terminal(shape, leaf, i)
        roots.append(new)
    return IndexedForest.from_roots(roots), (R if terminal.is_right_child else L)


def to_word(F: IndexedForest) -> list[int]:
    """Canonical (weakly increasing) trimming word."""
    word = []
    while F.trees:
        i = max(qdes(F))
        F, _ = trim(F, i)
        word.append(i)
    word.reverse()
    return word


def extractor_word(F: IndexedForest, word: Sequence[int] | None = None) -> list[tuple[int, str]]:
    """Letters ``(i, "L"|"R")`` of the grove extractor of ``F``.

    The rightmost letter acts first and corresponds to the first trim.  By
    default the canonical trimming word is used; any other trimming word of
    ``F`` may be passed instead.
    """
    if word is None:
        word = to_word(F)
    letters = []
    for i in reversed(word):
        F, kind = trim(F, i)
        letters.append((i, kind))
    if F.trees:
        raise ValueError("word is not a trimming word of the forest")
    letters.reverse()
    return letters


def trimming_words(F: IndexedForest) -> Iterator[list[int]]:
    """All trimming words of ``F`` (exponentially many; desk scale only)."""
    if not F.trees:
        yield []
        return
    for i in sorted(qdes(F)):
        G, _ = trim(F, i)
        for w in trimming_words(G):
            yield w + [i]


def zigzag_forest(alpha: Sequence[int], n: int) -> IndexedForest:
    """The zigzag forest with ``qdes`` inside ``{n}`` whose left branches have lengths ``alpha``."""
    alpha = tuple(alpha)
    if any(a < 1 for a in alpha):
        raise ValueError(f"composition parts must be positive: {alpha}")
    t = len(alpha)
    if t > n:
        raise TooManyParts(f"{t} parts do not fit in {n} variables")
    if t == 0:
        return EMPTY
    # direction from each node to the next one along the path
    steps = []
    for a in alpha:
        steps.extend([L] * (a - 1) + [R])
    steps[-1] = None
    shape = None
    for step in reversed(steps):
        if step is None:
            shape = (None, None)
        elif step == L:
            shape = (shape, None)
        else:
            shape = (None, shape)
    return IndexedForest(((n - t + 1, shape),))


def zigzag_composition(Z: IndexedForest) -> tuple[int, ...]:
    """Left-branch lengths of a zigzag forest (inverse of :func:`zigzag_forest`)."""
    if not Z.trees:
        return ()
    if len(Z.trees) != 1:
        raise ValueError(f"{format_forest(Z)} is not a zigzag forest")
    shape = Z.trees[0][1]
    parts, run = [], 0
    while True:
        left, right = shape
        if left is not None and right is not None:
            raise ValueError(f"{format_forest(Z)} is not a zigzag forest")
        run += 1
        if left is not None:
            shape = left
        else:
            parts.append(run)
            run = 0
            if right is None:
                break
            shape = right
    return tuple(parts)


def is_zigzag(F: IndexedForest, n: int) -> bool:
    return qdes(F) <= {n}


def enumerate_forests(size: int, max_rho: int) -> list[IndexedForest]:
    """All forests with ``size`` internal nodes and every ``rho(v) <= max_rho``.

    These are exactly the forests whose weakly increasing word uses letters in
    ``1..max_rho``; the list is ordered by that word.
    """
    if size < 0 or max_rho < 1:
        raise ValueError("need size >= 0 and max_rho >= 1")
    return [from_word(w) for w in combinations_with_replacement(range(1, max_rho + 1), size)]


def forests_up_to(max_size: int, max_rho: int) -> list[IndexedForest]:
    return [F for d in range(max_size + 1) for F in enumerate_forests(d, max_rho)]


# -- text formats ---------------------------------------------------------

def parse_forest(text: str) -> IndexedForest:
    text = text.strip()
    if text.startswith("{"):
        return from_word(json.loads(text)["word"])
    if text in ("e", ""):
        return EMPTY
    try:
        word = [int(tok) for tok in text.replace(" ", "").split(",")]
    except ValueError as exc:
        raise ValueError(f"bad forest word {text!r}") from exc
    if any(i < 1 for i in word):
        raise ValueError(f"forest word letters must be positive: {text!r}")
    return from_word(word)


def format_forest(F: IndexedForest) -> str:
    word = to_word(F)
    return ",".join(map(str, word)) if word else "e"


def parse_composition(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "e", "()"):
        return ()
    parts = tuple(int(tok) for tok in text.replace(" ", "").strip("()").split(","))
    if any(p < 1 for p in parts):
        raise ValueError(f"composition parts must be positive: {text!r}")
    return parts


def format_composition(alpha: Sequence[int]) -> str:
    return ",".join(map(str, alpha)) if alpha else "e"
