"""Christoffel words and the Christoffel and Cohn trees built from them.

Words are plain strings over the letters ``a`` (a horizontal step) and ``b``
(a vertical step). Lexicographic order is Python's string order, so ``a``
precedes ``b`` and a proper prefix precedes its extensions.
"""

import logging
from collections import deque
from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import Deque, Iterator, List, Sequence, Set, Tuple

from ..arith.rational import Ratio, reduce
from ..arith.treewalk import (
    Step,
    address_to_flipword,
    addresses_at_depth,
    addresses_to_depth,
    format_address,
    validate_flipword,
)
from ..errors import EqualWordsError, InvalidWordError, OutOfDomainError, TieBreakError
from ..models.report import ReportBuilder, VerificationReport
from .classic import cw_node, sb_node
from .cluster import tree_d

logger = logging.getLogger(__name__)

BWord = str

_LETTERS = frozenset("ab")


def _require_word(w: BWord) -> None:
    if not w or not set(w) <= _LETTERS:
        raise InvalidWordError(f"Words are non-empty strings over 'a' and 'b': {w!r}")


def christoffel_word(slope: Ratio) -> BWord:
    """Return the lower Christoffel word of slope y/x.

    Letter k (counting from 1, with n = x + y) is ``a`` exactly when
    k*y mod n exceeds (k-1)*y mod n. Slopes 0/1 and 1/0 give ``a`` and ``b``.

    Args:
        slope: Reduced y/x with x, y >= 0

    Returns:
        Word with x letters ``a`` and y letters ``b``
    """
    if slope.num < 0:
        raise OutOfDomainError(f"Christoffel words have non-negative slope, got {slope}")
    if slope.num == 0:
        return "a"
    if slope.is_infinite:
        return "b"
    y, x = slope.num, slope.den
    n = x + y
    return "".join("a" if (k * y) % n > ((k - 1) * y) % n else "b" for k in range(1, n + 1))


def path_oracle(slope: Ratio) -> BWord:
    """Build the Christoffel path of slope y/x step by step and read its letters.

    From each lattice point the path goes up when the point above still lies on
    or below the segment from (0, 0) to (x, y), and right otherwise.
    """
    if slope.num < 0:
        raise OutOfDomainError(f"Christoffel words have non-negative slope, got {slope}")
    y, x = slope.num, slope.den
    i = j = 0
    letters: List[str] = []
    while (i, j) != (x, y):
        if (j + 1) * x <= y * i:
            letters.append("b")
            j += 1
        else:
            letters.append("a")
            i += 1
    return "".join(letters)


def counts(w: BWord) -> Tuple[int, int, int]:
    """Return (number of a, number of b, length) of ``w``."""
    na, nb = w.count("a"), w.count("b")
    return na, nb, na + nb


def is_christoffel(w: BWord) -> bool:
    """Whether ``w`` is the Christoffel word of slope |w|_b / |w|_a."""
    if not w or not set(w) <= _LETTERS:
        return False
    na, nb, _ = counts(w)
    if gcd(na, nb) != 1:
        return False
    return w == christoffel_word(reduce(nb, na))


def star(u: BWord, v: BWord) -> BWord:
    """Concatenate two distinct words, lexicographically smaller one first."""
    if u == v:
        raise EqualWordsError(f"star needs two different words, got {u!r} twice")
    return u + v if u < v else v + u


def substitute_a(w: BWord) -> BWord:
    """Apply the morphism a -> ab."""
    return w.replace("a", "ab")


def substitute_b(w: BWord) -> BWord:
    """Apply the morphism b -> ab."""
    return w.replace("b", "ab")


def det_pair(u: BWord, v: BWord) -> int:
    """Determinant |u|_a * |v|_b - |v|_a * |u|_b."""
    ua, ub, _ = counts(u)
    va, vb, _ = counts(v)
    return ua * vb - va * ub


@dataclass(frozen=True)
class WordPair:
    """A vertex (u, v) of the Christoffel tree."""

    u: BWord
    v: BWord

    def __post_init__(self) -> None:
        _require_word(self.u)
        _require_word(self.v)

    def __str__(self) -> str:
        return f"({self.u}, {self.v})"

    @property
    def product(self) -> BWord:
        """The concatenation u v."""
        return self.u + self.v


class TripleKind(str, Enum):
    """Which tree a word triple belongs to."""

    CHRISTOFFEL = "christoffel"
    COHN = "cohn"


@dataclass(frozen=True)
class WordTriple:
    """A vertex (u, v, w) of the Christoffel triple tree or the Cohn tree.

    Cohn triples satisfy w = u v. In a Christoffel triple one entry is the
    star of the other two.
    """

    u: BWord
    v: BWord
    w: BWord
    kind: TripleKind

    def __post_init__(self) -> None:
        for word in self.entries:
            _require_word(word)
        if self.kind is TripleKind.COHN:
            if self.w != self.u + self.v:
                raise InvalidWordError(f"Cohn triple {self} does not have w = uv")
            return
        if len(set(self.entries)) != 3:
            raise TieBreakError(f"Christoffel triple {self} has two equal entries")
        if not any(self.entry(k) == star(*self.others(k)) for k in range(1, 4)):
            raise InvalidWordError(f"No entry of {self} is the star of the other two")

    def __str__(self) -> str:
        return f"({self.u}, {self.v}, {self.w})"

    @property
    def entries(self) -> Tuple[BWord, BWord, BWord]:
        return (self.u, self.v, self.w)

    def entry(self, k: int) -> BWord:
        return self.entries[k - 1]

    def others(self, k: int) -> Tuple[BWord, BWord]:
        rest = [w for index, w in enumerate(self.entries, start=1) if index != k]
        return rest[0], rest[1]

    def middle_index(self) -> int:
        """Position of the second-largest entry in lexicographic order."""
        if len(set(self.entries)) != 3:
            raise TieBreakError(f"Cannot order {self}: two entries are equal")
        return sorted(range(1, 4), key=self.entry)[1]

    def replace(self, k: int, word: BWord) -> "WordTriple":
        values = list(self.entries)
        values[k - 1] = word
        return WordTriple(values[0], values[1], values[2], self.kind)

    def as_pair(self) -> WordPair:
        """Project to the Christoffel tree: (smallest entry, largest entry)."""
        ordered = sorted(self.entries)
        return WordPair(ordered[0], ordered[2])


CHRISTOFFEL_ROOT = WordPair("a", "b")
CHRISTOFFEL_TRIPLE_ROOT = WordTriple("a", "b", "ab", TripleKind.CHRISTOFFEL)
COHN_ROOT = WordTriple("a", "b", "ab", TripleKind.COHN)


def christoffel_children(pair: WordPair) -> Tuple[WordPair, WordPair]:
    """Children (u, uv) on the left and (uv, v) on the right."""
    uv = pair.product
    return WordPair(pair.u, uv), WordPair(uv, pair.v)


def christoffel_node(addr: Sequence[Step]) -> WordPair:
    """Christoffel tree vertex at ``addr``."""
    pair = CHRISTOFFEL_ROOT
    for step in addr:
        left, right = christoffel_children(pair)
        pair = left if step is Step.LEFT else right
    return pair


def christoffel_triple_child(triple: WordTriple, k: int) -> WordTriple:
    """Child through edge ``k``: entry k becomes the star of the other two.

    The middle entry is the one the triple was entered through, so flipping it
    is refused.
    """
    if triple.kind is not TripleKind.CHRISTOFFEL:
        raise InvalidWordError(f"{triple} is not a Christoffel triple")
    if k == triple.middle_index():
        raise InvalidWordError(f"Edge {k} of {triple} leads back toward the root")
    return triple.replace(k, star(*triple.others(k)))


def christoffel_triple_children(triple: WordTriple) -> List[Tuple[int, WordTriple]]:
    """The two children of a Christoffel triple with their edge labels, in label order."""
    middle = triple.middle_index()
    return [(k, christoffel_triple_child(triple, k)) for k in range(1, 4) if k != middle]


def christoffel_triple_node(word: Sequence[int]) -> WordTriple:
    """Christoffel triple at the vertex named by a flip word."""
    triple = CHRISTOFFEL_TRIPLE_ROOT
    for k in validate_flipword(word):
        triple = christoffel_triple_child(triple, k)
    return triple


def cohn_children(triple: WordTriple) -> Tuple[WordTriple, WordTriple]:
    """Left child applies b -> ab to every entry, right child applies a -> ab."""
    if triple.kind is not TripleKind.COHN:
        raise InvalidWordError(f"{triple} is not a Cohn triple")
    u, v, w = triple.entries
    left = WordTriple(substitute_b(u), substitute_b(v), substitute_b(w), TripleKind.COHN)
    right = WordTriple(substitute_a(u), substitute_a(v), substitute_a(w), TripleKind.COHN)
    return left, right


def cohn_node(addr: Sequence[Step]) -> WordTriple:
    """Cohn triple at ``addr``."""
    triple = COHN_ROOT
    for step in addr:
        left, right = cohn_children(triple)
        triple = left if step is Step.LEFT else right
    return triple


def combined_cohn_node(addr: Sequence[Step]) -> BWord:
    """Combined Cohn tree vertex at ``addr``: the third entry of the Cohn triple."""
    return cohn_node(addr).w


def _length_ratio(u: BWord, v: BWord) -> Ratio:
    return reduce(len(u), len(v))


def _slope_ratio(w: BWord) -> Ratio:
    na, nb, _ = counts(w)
    return reduce(nb, na)


def verify_christoffel_main(depth: int) -> VerificationReport:
    """Check the Christoffel tree against the Calkin-Wilf and Stern-Brocot trees.

    At every vertex (u, v): |u|/|v| is the Calkin-Wilf value, the slope of uv
    is the Stern-Brocot value, u, v and uv are Christoffel words, the
    determinant is 1, and the Christoffel triple at the same vertex projects to
    (u, v).
    """
    run = ReportBuilder("christoffel", depth=depth)
    for addr in addresses_to_depth(depth):
        pair = christoffel_node(addr)
        u, v, uv = pair.u, pair.v, pair.product
        where = format_address(addr)
        run.tick()
        if _length_ratio(u, v) != cw_node(addr):
            return run.fail(where, f"|u|/|v| of {pair} is not {cw_node(addr)}")
        if _slope_ratio(uv) != sb_node(addr):
            return run.fail(where, f"slope of {uv} is not {sb_node(addr)}")
        for word in (u, v, uv):
            if not is_christoffel(word):
                return run.fail(where, f"{word} is not a Christoffel word")
        if det_pair(u, v) != 1:
            return run.fail(where, f"det of {pair} is {det_pair(u, v)}")
        projected = christoffel_triple_node(address_to_flipword(addr)).as_pair()
        if projected != pair:
            return run.fail(where, f"Christoffel triple projects to {projected}, not {pair}")
    return run.done()


def verify_dual_christoffel(depth: int, pair_depth: int = 8) -> VerificationReport:
    """Check the Cohn tree against the Stern-Brocot and Calkin-Wilf trees.

    At every vertex (u, v, uv): |u|/|v| is the Stern-Brocot value, the slope of
    uv inverted is the Calkin-Wilf value, all entries are Christoffel words,
    the determinant is 1, the letter counts follow the substitution step from
    the parent, and [|u|-1, |v|-1, |uv|-1] is the Tree(D) vector of the
    same vertex. Up to ``pair_depth`` the Cohn and Christoffel trees must hold
    the same pairs level by level.

    Args:
        depth: Deepest level visited
        pair_depth: Deepest level compared as sets of pairs
    """
    run = ReportBuilder("cohn", depth=depth)
    for addr in addresses_to_depth(depth):
        triple = cohn_node(addr)
        u, v, w = triple.entries
        where = format_address(addr)
        run.tick()
        if _length_ratio(u, v) != sb_node(addr):
            return run.fail(where, f"|u|/|v| of {triple} is not {sb_node(addr)}")
        na, nb, _ = counts(w)
        if reduce(nb, na) != cw_node(addr):
            return run.fail(where, f"|w|_b/|w|_a of {w} is not {cw_node(addr)}")
        for word in triple.entries:
            if not is_christoffel(word):
                return run.fail(where, f"{word} is not a Christoffel word")
        if det_pair(u, v) != 1:
            return run.fail(where, f"det of ({u}, {v}) is {det_pair(u, v)}")
        vector = [len(u) - 1, len(v) - 1, len(w) - 1]
        expected = tree_d(address_to_flipword(addr)).to_list()
        if vector != expected:
            return run.fail(where, f"word lengths give {vector}, Tree(D) has {expected}")
        if addr:
            pa, pb, _ = counts(cohn_node(addr[:-1]).w)
            if addr[-1] is Step.LEFT:
                expected_counts = (pb, pa + pb)
            else:
                expected_counts = (pa + pb, pa)
            if (nb, na) != expected_counts:
                return run.fail(
                    where, f"counts (b, a) = {(nb, na)} do not follow the parent: {expected_counts}"
                )

    for level in range(min(depth, pair_depth) + 1):
        cohn_pairs = {(t.u, t.v) for t in map(cohn_node, addresses_at_depth(level))}
        christoffel_pairs = {(p.u, p.v) for p in map(christoffel_node, addresses_at_depth(level))}
        run.tick()
        if cohn_pairs != christoffel_pairs:
            return run.fail(f"depth {level}", "Cohn and Christoffel trees hold different pairs")
    return run.done()


def christoffel_words_up_to(max_len: int) -> Iterator[BWord]:
    """Yield every Christoffel word of length at most ``max_len``, including a and b."""
    for n in range(1, max_len + 1):
        for y in range(n + 1):
            if gcd(y, n - y) == 1:
                yield christoffel_word(reduce(y, n - y))


def verify_morphism_closure(max_len: int) -> VerificationReport:
    """Check that a -> ab and b -> ab generate exactly the Christoffel words from ab.

    Both substitutions must keep Christoffel words Christoffel, and a
    breadth-first search from ``ab`` bounded by length must reach every
    Christoffel word with both letters and length at most ``max_len``.
    """
    if max_len < 2:
        raise OutOfDomainError(f"max_len must be at least 2, got {max_len}")
    run = ReportBuilder("closure", bound=max_len)
    words = list(christoffel_words_up_to(max_len))
    for word in words:
        for image in (substitute_a(word), substitute_b(word)):
            run.tick()
            if not is_christoffel(image):
                return run.fail(word, f"substitution gives {image}, not a Christoffel word")

    reached: Set[BWord] = {"ab"}
    queue: Deque[BWord] = deque(["ab"])
    while queue:
        word = queue.popleft()
        for image in (substitute_a(word), substitute_b(word)):
            if len(image) <= max_len and image not in reached:
                reached.add(image)
                queue.append(image)
    logger.debug(f"Substitutions reached {len(reached)} words of length at most {max_len}")

    for word in words:
        if len(word) < 2:
            continue
        run.tick()
        if word not in reached:
            return run.fail(word, "not reached from ab by substitutions")
    extra = sorted(reached - set(words))
    if extra:
        return run.fail(extra[0], "reached from ab but not a Christoffel word")
    return run.done()
