"""Coxeter matrices, Dynkin diagrams, and the geometric group context.

The Coxeter matrix stores entry ``None`` for an infinite order (the
JSON file format uses 0 for the same thing; see ``presets``).  Vertices
and generators are numbered 1..n in every public interface; tuple
indices are 0-based.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from . import linalg
from .algebraic import FieldContext, make_field_context, two_cos_pi_over
from .errors import CoxeterInputError

FINITE = "finite"
AFFINE = "affine"
INDEFINITE = "indefinite"


@dataclass(frozen=True)
class CoxeterMatrix:
    """Symmetric order matrix; orders[i][j] is m_ij, None meaning infinity."""

    orders: tuple

    def __post_init__(self):
        n = len(self.orders)
        for i, row in enumerate(self.orders):
            if len(row) != n:
                raise CoxeterInputError(f"row {i + 1} has length {len(row)}, expected {n}")
            if row[i] != 1:
                raise CoxeterInputError(f"diagonal entry m[{i + 1}][{i + 1}] must be 1, got {row[i]!r}")
            for j, m in enumerate(row):
                if j == i:
                    continue
                if m != self.orders[j][i]:
                    raise CoxeterInputError(
                        f"asymmetric entries at ({i + 1},{j + 1}): {m!r} vs {self.orders[j][i]!r}"
                    )
                if m is not None and (not isinstance(m, int) or m < 2):
                    raise CoxeterInputError(
                        f"off-diagonal entry m[{i + 1}][{j + 1}] must be an integer >= 2 or None, got {m!r}"
                    )

    @property
    def n(self) -> int:
        return len(self.orders)

    def order(self, i: int, j: int):
        """Order of s_i s_j, 1-based indices; None means infinity."""
        return self.orders[i - 1][j - 1]

    @classmethod
    def from_rows(cls, rows) -> "CoxeterMatrix":
        return cls(tuple(tuple(row) for row in rows))

    @classmethod
    def decode(cls, rows) -> "CoxeterMatrix":
        """Build from integer rows in the file convention (0 encodes infinity)."""
        return cls(tuple(tuple(None if m == 0 else m for m in row) for row in rows))

    def encode(self) -> list[list[int]]:
        """Integer rows in the file convention (0 encodes infinity)."""
        return [[0 if m is None else m for m in row] for row in self.orders]


@dataclass(frozen=True)
class DynkinDiagram:
    """Undirected graph on vertices 1..n with edges where m_ij != 2."""

    n: int
    edges: tuple  # tuples (u, v) with u < v, sorted

    @classmethod
    def from_matrix(cls, matrix: CoxeterMatrix) -> "DynkinDiagram":
        edges = tuple(
            (i + 1, j + 1)
            for i in range(matrix.n)
            for j in range(i + 1, matrix.n)
            if matrix.orders[i][j] != 2
        )
        return cls(matrix.n, edges)

    def neighbors(self, v: int) -> tuple:
        return tuple(sorted(
            b if a == v else a for a, b in self.edges if v in (a, b)
        ))

    def adjacent(self, u: int, v: int) -> bool:
        a, b = min(u, v), max(u, v)
        return (a, b) in self.edges

    def components(self) -> tuple:
        seen: set[int] = set()
        comps = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            comp = []
            queue = deque([start])
            seen.add(start)
            while queue:
                v = queue.popleft()
                comp.append(v)
                for w in self.neighbors(v):
                    if w not in seen:
                        seen.add(w)
                        queue.append(w)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def diameter(self):
        """Graph diameter via all-pairs BFS; None when disconnected."""
        if self.n == 0:
            return 0
        best = 0
        for start in range(1, self.n + 1):
            dist = {start: 0}
            queue = deque([start])
            while queue:
                v = queue.popleft()
                for w in self.neighbors(v):
                    if w not in dist:
                        dist[w] = dist[v] + 1
                        queue.append(w)
            if len(dist) < self.n:
                return None
            best = max(best, max(dist.values()))
        return best


class GroupContext:
    """Everything derived from a Coxeter matrix; immutable after build.

    Holds the exact bilinear form (diagonal entries 2, off-diagonal
    -2cos(pi/m_ij)), the field context generated by the finite edge
    labels, the classification decided by exact minor signs, and the
    radical (kernel) of the form.
    """

    __slots__ = (
        "matrix",
        "diagram",
        "field",
        "bilinear",
        "classification",
        "irreducible",
        "components",
        "component_classifications",
        "kernel",
        "_caches",
    )

    def __init__(self, matrix, diagram, field, bilinear, classification,
                 irreducible, components, component_classifications, kernel):
        self.matrix = matrix
        self.diagram = diagram
        self.field = field
        self.bilinear = bilinear
        self.classification = classification
        self.irreducible = irreducible
        self.components = components
        self.component_classifications = component_classifications
        self.kernel = kernel
        self._caches = {}

    @property
    def n(self) -> int:
        return self.matrix.n

    def __repr__(self):
        return (
            f"GroupContext(n={self.n}, classification={self.classification!r}, "
            f"irreducible={self.irreducible}, M={self.field.M})"
        )


def _field_parameter(matrix: CoxeterMatrix) -> int:
    labels = [
        m
        for i, row in enumerate(matrix.orders)
        for j, m in enumerate(row)
        if i < j and m is not None and m >= 3
    ]
    return math.lcm(*labels) if labels else 1


def _classify_irreducible(field: FieldContext, block) -> str:
    """Classification of one connected component from leading minor signs.

    For a connected diagram every proper parabolic of an affine group is
    finite, so the first non-positive leading minor can only occur at
    the full size: all positive means positive definite (finite); zero
    exactly at the last step means positive semidefinite with radical
    (affine); anything else is indefinite.
    """
    minors = linalg.leading_principal_minors(field, block)
    signs = [m.sign() for m in minors]
    if all(s > 0 for s in signs):
        return FINITE
    if all(s > 0 for s in signs[:-1]) and signs[-1] == 0:
        return AFFINE
    return INDEFINITE


def build_context(matrix: CoxeterMatrix) -> GroupContext:
    """Construct the full group context for a valid Coxeter matrix."""
    diagram = DynkinDiagram.from_matrix(matrix)
    field = make_field_context(_field_parameter(matrix))
    n = matrix.n
    bilinear = tuple(
        tuple(
            field.two if i == j else -two_cos_pi_over(field, matrix.orders[i][j])
            for j in range(n)
        )
        for i in range(n)
    )
    components = diagram.components()
    comp_classes = []
    for comp in components:
        idx = [v - 1 for v in comp]
        block = tuple(tuple(bilinear[i][j] for j in idx) for i in idx)
        comp_classes.append(_classify_irreducible(field, block))
    if INDEFINITE in comp_classes:
        classification = INDEFINITE
    elif AFFINE in comp_classes:
        classification = AFFINE
    else:
        classification = FINITE
    kernel = linalg.kernel_basis(field, bilinear) if n else ()
    return GroupContext(
        matrix=matrix,
        diagram=diagram,
        field=field,
        bilinear=bilinear,
        classification=classification,
        irreducible=diagram.is_connected(),
        components=components,
        component_classifications=tuple(comp_classes),
        kernel=kernel,
    )


def classify(ctx: GroupContext) -> str:
    """Classification of the whole group: finite, affine, or indefinite."""
    return ctx.classification


def is_irreducible(ctx: GroupContext) -> bool:
    return ctx.irreducible


def diameter(ctx: GroupContext):
    """Diameter of the Dynkin diagram; None for a disconnected diagram."""
    return ctx.diagram.diameter()
