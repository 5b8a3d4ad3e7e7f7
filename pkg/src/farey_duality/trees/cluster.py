"""Gradient flips, intersection vectors and matrices, and the trees built from them.

A vertex of the 3-regular tree is named by a flip word. Walking the word flips
the gradient triple of the moving triangulation; intersection numbers against
the initial triangulation (gradients 0/1, 1/0, -1/1) then give the matrix
D(L, L_t), whose rows feed Tree(D) and whose third column feeds Tree(D†).
"""

import logging
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterator, List, Sequence, Tuple

from ..arith.rational import (
    INFINITY,
    MINUS_ONE,
    ZERO,
    Ratio,
    cross_det,
    farey_difference,
    mediant,
    reduce,
)
from ..arith.treewalk import LABELS, third_label, validate_flipword
from ..errors import (
    InvalidWordError,
    MiddleFlipError,
    OutOfDomainError,
    OutOfRegionError,
    UnclassifiableError,
)
from .classic import GradientTriple

logger = logging.getLogger(__name__)

Row = Tuple[int, int, int]


@dataclass(frozen=True)
class IntersectionVector:
    """Intersection numbers of one arc with the three initial arcs."""

    d1: int
    d2: int
    d3: int

    def __post_init__(self) -> None:
        if min(self.entries) < -1:
            raise OutOfDomainError(f"Intersection numbers are at least -1: {self}")
        if self.entries.count(-1) > 1:
            raise OutOfDomainError(f"At most one entry may be -1: {self}")

    def __str__(self) -> str:
        return f"[{self.d1} {self.d2} {self.d3}]"

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    @property
    def entries(self) -> Row:
        return (self.d1, self.d2, self.d3)

    def entry(self, i: int) -> int:
        """Return the entry at 1-based position ``i``."""
        return self.entries[i - 1]

    def is_nonnegative(self) -> bool:
        return self.d1 >= 0 and self.d2 >= 0 and self.d3 >= 0

    def is_balanced(self) -> bool:
        """Whether the largest entry is one more than the sum of the other two."""
        x, y, z = sorted(self.entries)
        return x + y + 1 == z

    def to_list(self) -> List[int]:
        return list(self.entries)


@dataclass(frozen=True)
class IntersectionMatrix:
    """A 3x3 matrix of intersection numbers, stored row-major."""

    rows: Tuple[Row, Row, Row]

    def __post_init__(self) -> None:
        if len(self.rows) != 3 or any(len(row) != 3 for row in self.rows):
            raise OutOfDomainError(f"Intersection matrices are 3x3: {self.rows}")
        if any(value < -1 for row in self.rows for value in row):
            raise OutOfDomainError(f"Intersection numbers are at least -1: {self.rows}")

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]]) -> "IntersectionMatrix":
        """Build a matrix from any nested sequence of integers."""
        if len(rows) != 3 or any(len(row) != 3 for row in rows):
            raise OutOfDomainError(f"Intersection matrices are 3x3: {rows}")
        r1, r2, r3 = ((row[0], row[1], row[2]) for row in rows)
        return cls((r1, r2, r3))

    def __str__(self) -> str:
        return "[" + "; ".join(" ".join(str(v) for v in row) for row in self.rows) + "]"

    def row(self, i: int) -> Row:
        """Return row ``i`` (1-based)."""
        return self.rows[i - 1]

    def column(self, j: int) -> Row:
        """Return column ``j`` (1-based)."""
        r1, r2, r3 = self.rows
        return (r1[j - 1], r2[j - 1], r3[j - 1])

    def transpose(self) -> "IntersectionMatrix":
        return IntersectionMatrix((self.column(1), self.column(2), self.column(3)))

    def replace_row(self, i: int, row: Row) -> "IntersectionMatrix":
        rows = list(self.rows)
        rows[i - 1] = row
        return IntersectionMatrix((rows[0], rows[1], rows[2]))

    def to_lists(self) -> List[List[int]]:
        return [list(row) for row in self.rows]


class MatrixForm(str, Enum):
    """The three shapes an intersection matrix can take along a walk.

    Named by which row is one more than the sum of the other two:
    row 3 for FORM_I, row 1 for FORM_II, row 2 for FORM_III.
    """

    FORM_I = "i"
    FORM_II = "ii"
    FORM_III = "iii"


_SUM_ROW: Dict[MatrixForm, int] = {
    MatrixForm.FORM_I: 3,
    MatrixForm.FORM_II: 1,
    MatrixForm.FORM_III: 2,
}

# (form before the flip, flip direction) -> form after the flip
FORM_TRANSITIONS: Dict[Tuple[MatrixForm, int], MatrixForm] = {
    (MatrixForm.FORM_I, 1): MatrixForm.FORM_II,
    (MatrixForm.FORM_I, 2): MatrixForm.FORM_III,
    (MatrixForm.FORM_II, 2): MatrixForm.FORM_III,
    (MatrixForm.FORM_II, 3): MatrixForm.FORM_I,
    (MatrixForm.FORM_III, 1): MatrixForm.FORM_II,
    (MatrixForm.FORM_III, 3): MatrixForm.FORM_I,
}


@dataclass(frozen=True)
class IndexPair:
    """Which entries of a Tree(D†) vector give the numerator and denominator."""

    num_idx: int
    den_idx: int

    def __post_init__(self) -> None:
        if self.num_idx not in LABELS or self.den_idx not in LABELS:
            raise OutOfDomainError(f"Indices must lie in {{1, 2, 3}}: {self}")
        if self.num_idx == self.den_idx:
            raise OutOfDomainError(f"Indices must differ: {self}")

    @property
    def unused(self) -> int:
        return third_label(self.num_idx, self.den_idx)

    def advance(self, k: int) -> "IndexPair":
        """Move across an edge labeled ``k``; the index equal to k becomes the unused one."""
        if k == self.num_idx:
            return IndexPair(self.unused, self.den_idx)
        if k == self.den_idx:
            return IndexPair(self.num_idx, self.unused)
        raise InvalidWordError(f"Edge {k} cannot leave a vertex entered through edge {k}")

    def value(self, v: IntersectionVector) -> Ratio:
        return reduce(v.entry(self.num_idx) + 1, v.entry(self.den_idx) + 1)


ROOT_PAIR = IndexPair(1, 2)


def initial_gradients() -> GradientTriple:
    """Gradients of the initial triangulation: 0/1, 1/0 and -1/1."""
    return GradientTriple(ZERO, INFINITY, MINUS_ONE)


def flip_triple(triple: GradientTriple, k: int) -> GradientTriple:
    """Flip the arc at position ``k`` of a triangulation given by its gradients.

    The new gradient is the mediant of the other two, unless the flipped one
    is the middle value, in which case it is their Farey difference. Flipping
    twice in the same direction is the identity.
    """
    x, y = triple.others(k)
    if triple.middle_index() == k:
        return triple.replace(k, farey_difference(x, y))
    return triple.replace(k, mediant(x, y))


def root_gradients() -> GradientTriple:
    """Gradients at the root vertex, reached from the initial triangulation via edge 3."""
    return flip_triple(initial_gradients(), 3)


def iter_gradient_triples(word: Sequence[int]) -> Iterator[GradientTriple]:
    """Yield the gradient triple at every vertex along ``word``, root first."""
    triple = root_gradients()
    yield triple
    for k in validate_flipword(word):
        triple = flip_triple(triple, k)
        yield triple


def gradient_triple_of(word: Sequence[int]) -> GradientTriple:
    """Return the gradient triple at the vertex named by ``word``."""
    triple = root_gradients()
    for k in validate_flipword(word):
        triple = flip_triple(triple, k)
    return triple


def intersection_number(g: Ratio, e: Ratio) -> int:
    """Minimal crossing count of the arcs with gradients ``g`` and ``e``; -1 when g = e."""
    return abs(cross_det(g, e)) - 1


def grad_to_ivec(g: Ratio) -> IntersectionVector:
    """Intersection vector of the arc with gradient p/q against the initial arcs.

    Args:
        g: Gradient with non-negative numerator

    Returns:
        The vector [p-1, q-1, p+q-1]
    """
    if g.num < 0:
        raise OutOfRegionError(f"Gradient {g} lies outside the region of the tree")
    return IntersectionVector(g.num - 1, g.den - 1, g.num + g.den - 1)


def _matrix_from_triple(triple: GradientTriple) -> IntersectionMatrix:
    initial = initial_gradients()
    return IntersectionMatrix.from_lists(
        [[intersection_number(g, e) for e in initial] for g in triple]
    )


def matrix_of(word: Sequence[int]) -> IntersectionMatrix:
    """Intersection matrix D(L, L_t): rows are arcs of L_t, columns the initial arcs."""
    return _matrix_from_triple(gradient_triple_of(word))


def dual_matrix_of(word: Sequence[int]) -> IntersectionMatrix:
    """Intersection matrix D(L_t, L): rows are the initial arcs, columns the arcs of L_t."""
    triple = gradient_triple_of(word)
    return IntersectionMatrix.from_lists(
        [[intersection_number(e, g) for g in triple] for e in initial_gradients()]
    )


def _row_sum(a: Row, b: Row) -> Row:
    return (a[0] + b[0] + 1, a[1] + b[1] + 1, a[2] + b[2] + 1)


def phi_flip(matrix: IntersectionMatrix, k: int) -> IntersectionMatrix:
    """Flip the moving triangulation in direction ``k``: row k becomes row i + row j + 1.

    Args:
        matrix: Matrix at the current vertex
        k: Flip direction, away from the root

    Returns:
        Matrix at the neighboring vertex through edge k
    """
    i, j = (index for index in LABELS if index != k)
    new_row = _row_sum(matrix.row(i), matrix.row(j))
    if matrix.row(k) == new_row:
        raise MiddleFlipError(f"Flip {k} on {matrix} moves back toward the root")
    return matrix.replace_row(k, new_row)


def psi_flip(matrix: IntersectionMatrix, k: int) -> IntersectionMatrix:
    """Flip the initial-triangulation side: column k becomes column i + column j + 1."""
    return phi_flip(matrix.transpose(), k).transpose()


def classify_form(matrix: IntersectionMatrix) -> MatrixForm:
    """Identify which form an intersection matrix D(L, L_t) is in.

    Column 3 must equal column 1 + column 2 + 1, and exactly one row must be
    one more than the sum of the other two.
    """
    c1, c2, c3 = matrix.column(1), matrix.column(2), matrix.column(3)
    if _row_sum(c1, c2) != c3:
        raise UnclassifiableError(f"Column 3 of {matrix} is not column 1 + column 2 + 1")

    matches = []
    for form, k in _SUM_ROW.items():
        i, j = (index for index in LABELS if index != k)
        if _row_sum(matrix.row(i), matrix.row(j)) == matrix.row(k):
            matches.append(form)
    if len(matches) != 1:
        raise UnclassifiableError(f"{matrix} matches {len(matches)} forms")
    return matches[0]


def classify_dual_form(matrix: IntersectionMatrix) -> MatrixForm:
    """Identify the form of a matrix D(L_t, L) produced on the psi side."""
    return classify_form(matrix.transpose())


def map_g(v: IntersectionVector) -> Ratio:
    """Send a Tree(D) vector [d1, d2, d3] to (d1+1)/(d2+1)."""
    if not v.is_nonnegative():
        raise OutOfDomainError(f"map_g is defined on non-negative vectors, got {v}")
    return reduce(v.d1 + 1, v.d2 + 1)


def _column3(triple: GradientTriple) -> IntersectionVector:
    return IntersectionVector(*(intersection_number(g, MINUS_ONE) for g in triple))


def tree_d(word: Sequence[int]) -> IntersectionVector:
    """Tree(D) vector at ``word``: the row of the arc created by the last flip.

    At the root this is row 3, the arc created entering the root through edge 3.
    """
    word = validate_flipword(word)
    k = word[-1] if word else 3
    return IntersectionVector(*matrix_of(word).row(k))


def tree_ddag(word: Sequence[int]) -> IntersectionVector:
    """Tree(D†) vector at ``word``: the third column of its intersection matrix."""
    return _column3(gradient_triple_of(word))


def h_walk_states(word: Sequence[int]) -> Iterator[Tuple[IndexPair, IntersectionVector]]:
    """Yield the index pair and Tree(D†) vector at every vertex along ``word``, root first."""
    triples = iter_gradient_triples(word)
    pair = ROOT_PAIR
    yield pair, _column3(next(triples))
    for k, triple in zip(word, triples):
        pair = pair.advance(k)
        yield pair, _column3(triple)


def h_walk(word: Sequence[int]) -> Ratio:
    """Follow ``word`` through Tree(D†) and read the Calkin-Wilf value at its end."""
    pair, vector = deque(h_walk_states(word), maxlen=1)[0]
    logger.debug(f"h-walk {list(word)} ends with pair {pair} on {vector}")
    return pair.value(vector)
