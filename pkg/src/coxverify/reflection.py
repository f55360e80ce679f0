"""The reflection representation: roots, words, lengths, Demazure products.

Generators act on the root space by s_i(v) = v - B(v, alpha_i) alpha_i.
Group elements are stored as exact matrices in the simple-root basis;
equality is entry-wise, descent and inversion tests are sign tests on
matrix columns, and length is computed by greedy descent elimination.

Words are tuples of 1-based generator indices.  Matrix row/column
indices are 0-based.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from . import linalg
from .context import GroupContext
from .errors import CoxeterInputError

Word = tuple
Vector = tuple

POSITIVE = "positive"
NEGATIVE = "negative"
ZERO = "zero"
MIXED = "mixed"


def _check_letter(ctx: GroupContext, i: int) -> None:
    if not isinstance(i, int) or not 1 <= i <= ctx.n:
        raise CoxeterInputError(f"generator index {i!r} out of range 1..{ctx.n}")


def simple_root(ctx: GroupContext, i: int) -> Vector:
    _check_letter(ctx, i)
    one, zero = ctx.field.one, ctx.field.zero
    return tuple(one if k == i - 1 else zero for k in range(ctx.n))


def simple_reflection_matrix(ctx: GroupContext, i: int):
    """Matrix of s_i acting on column vectors; differs from I only in row i-1."""
    _check_letter(ctx, i)
    cache = ctx._caches.setdefault("simple_mats", {})
    if i not in cache:
        n = ctx.n
        B = ctx.bilinear
        rows = list(linalg.identity(ctx.field, n))
        r = i - 1
        rows[r] = tuple(
            -ctx.field.one if c == r else -B[c][r] for c in range(n)
        )
        cache[i] = tuple(rows)
    return cache[i]


def reflect_simple(ctx: GroupContext, i: int, v: Vector) -> Vector:
    """Image of v under s_i: subtract B(v, alpha_i) from coordinate i-1."""
    _check_letter(ctx, i)
    B = ctx.bilinear
    r = i - 1
    coeff = ctx.field.zero
    for k, vk in enumerate(v):
        if vk:
            coeff = coeff + vk * B[k][r]
    if not coeff:
        return v
    out = list(v)
    out[r] = out[r] - coeff
    return tuple(out)


def _right_mul_simple(ctx: GroupContext, mat, i: int):
    """mat @ S_i via the column update; O(n^2)."""
    B = ctx.bilinear
    x = i - 1
    out = []
    for row in mat:
        rx = row[x]
        if rx:
            new = tuple(
                -rx if c == x else (row[c] - rx * B[c][x] if B[c][x] else row[c])
                for c in range(len(row))
            )
        else:
            new = row
        out.append(new)
    return tuple(out)


def _left_mul_simple(ctx: GroupContext, i: int, mat):
    """S_i @ mat via the row update; O(n^2)."""
    B = ctx.bilinear
    x = i - 1
    n = len(mat)
    new_row = []
    for c in range(len(mat[0])):
        acc = mat[x][c]
        for k in range(n):
            if B[k][x] and mat[k][c]:
                acc = acc - B[k][x] * mat[k][c]
        new_row.append(acc)
    rows = list(mat)
    rows[x] = tuple(new_row)
    return tuple(rows)


class Element:
    """A group element as an exact matrix, with cached inverse and length."""

    __slots__ = ("ctx", "mat", "_inv", "_length", "_word")

    def __init__(self, ctx: GroupContext, mat, inv=None):
        self.ctx = ctx
        self.mat = mat
        self._inv = inv
        self._length = None
        self._word = None

    @property
    def inv(self):
        if self._inv is None:
            self._inv = linalg.inverse(self.ctx.field, self.mat)
        return self._inv

    def is_identity(self) -> bool:
        return self.mat == linalg.identity(self.ctx.field, self.ctx.n)

    def __eq__(self, other):
        return isinstance(other, Element) and self.mat == other.mat

    def __hash__(self):
        return hash(self.mat)

    def __repr__(self):
        return f"Element({self.mat!r})"


def identity_element(ctx: GroupContext) -> Element:
    ident = linalg.identity(ctx.field, ctx.n)
    return Element(ctx, ident, ident)


def left_multiply(ctx: GroupContext, i: int, e: Element) -> Element:
    _check_letter(ctx, i)
    return Element(
        ctx,
        _left_mul_simple(ctx, i, e.mat),
        _right_mul_simple(ctx, e.inv, i) if e._inv is not None else None,
    )


def right_multiply(ctx: GroupContext, e: Element, i: int) -> Element:
    _check_letter(ctx, i)
    return Element(
        ctx,
        _right_mul_simple(ctx, e.mat, i),
        _left_mul_simple(ctx, i, e.inv) if e._inv is not None else None,
    )


def word_matrix(ctx: GroupContext, word: Iterable[int]):
    """Matrix of the product of simple reflections, word order, no inverse."""
    mat = linalg.identity(ctx.field, ctx.n)
    for x in word:
        _check_letter(ctx, x)
        mat = _right_mul_simple(ctx, mat, x)
    return mat


def word_to_element(ctx: GroupContext, word: Iterable[int]) -> Element:
    """Element of the word s_{x_1} ... s_{x_N}; the empty word is the identity."""
    mat = linalg.identity(ctx.field, ctx.n)
    inv = mat
    for x in word:
        _check_letter(ctx, x)
        mat = _right_mul_simple(ctx, mat, x)
        inv = _left_mul_simple(ctx, x, inv)
    return Element(ctx, mat, inv)


def vector_sign_class(v: Vector) -> str:
    """Classify coordinate signs: positive, negative, zero, or mixed."""
    has_pos = has_neg = False
    for c in v:
        s = c.sign()
        if s > 0:
            has_pos = True
        elif s < 0:
            has_neg = True
        if has_pos and has_neg:
            return MIXED
    if has_pos:
        return POSITIVE
    if has_neg:
        return NEGATIVE
    return ZERO


def is_positive_root_vector(ctx: GroupContext, v: Vector) -> bool:
    """True for a positive root, False for a negative one.

    Roots never have strictly mixed coordinate signs, so mixed input
    (or the zero vector) is rejected as not being a root at all.
    """
    cls = vector_sign_class(v)
    if cls == POSITIVE:
        return True
    if cls == NEGATIVE:
        return False
    raise CoxeterInputError(f"not a root vector (sign class {cls})")


class ReflectionStep(NamedTuple):
    root: Vector      # positive representative
    flipped: bool     # True when normalization negated the raw image


def reflection_sequence(ctx: GroupContext, word) -> list[ReflectionStep]:
    """Roots attached to the prefixes of a word.

    Step i carries the positive form of s_{x_1}...s_{x_{i-1}} alpha_{x_i},
    the root of the i-th prefix reflection.  A raised flip flag is a
    witness that the word is not reduced.
    """
    mat = linalg.identity(ctx.field, ctx.n)
    steps: list[ReflectionStep] = []
    for x in word:
        _check_letter(ctx, x)
        raw = tuple(row[x - 1] for row in mat)
        if is_positive_root_vector(ctx, raw):
            steps.append(ReflectionStep(raw, False))
        else:
            steps.append(ReflectionStep(linalg.vec_neg(raw), True))
        mat = _right_mul_simple(ctx, mat, x)
    return steps


def is_reduced(ctx: GroupContext, word) -> bool:
    """Reducedness by the right-to-left inversion criterion.

    Maintains P = (s_{x_{i+1}} ... s_{x_N})^{-1} and requires P alpha_{x_i}
    to stay positive at every step.
    """
    letters = tuple(word)
    for x in letters:
        _check_letter(ctx, x)
    p = linalg.identity(ctx.field, ctx.n)
    for x in reversed(letters):
        col = tuple(row[x - 1] for row in p)
        if not is_positive_root_vector(ctx, col):
            return False
        p = _right_mul_simple(ctx, p, x)
    return True


def is_reduced_by_reflection_sequence(ctx: GroupContext, word) -> bool:
    """Independent reducedness test: distinct reflection roots, no sign flips."""
    seen = set()
    for step in reflection_sequence(ctx, word):
        if step.flipped or step.root in seen:
            return False
        seen.add(step.root)
    return True


_LENGTH_STEP_LIMIT = 1_000_000


def _descent_columns(ctx: GroupContext, inv) -> int | None:
    """Lowest 1-based i whose column of inv is a negative root image."""
    n = ctx.n
    for i in range(n):
        col = tuple(inv[r][i] for r in range(n))
        if not is_positive_root_vector(ctx, col):
            return i + 1
    return None


def length(ctx: GroupContext, e: Element) -> int:
    """Length by greedy left-descent elimination (lowest index first)."""
    if e._length is not None:
        return e._length
    inv = e.inv
    ident = linalg.identity(ctx.field, ctx.n)
    letters = []
    while inv != ident:
        i = _descent_columns(ctx, inv)
        if i is None:
            raise CoxeterInputError("matrix has no descent but is not the identity")
        inv = _right_mul_simple(ctx, inv, i)
        letters.append(i)
        if len(letters) > _LENGTH_STEP_LIMIT:  # pragma: no cover
            raise RuntimeError("descent elimination did not terminate")
    e._length = len(letters)
    e._word = tuple(letters)
    return e._length


def reduced_word_of(ctx: GroupContext, e: Element) -> Word:
    """A reduced word for e, the by-product of greedy descent elimination."""
    length(ctx, e)
    return e._word


def is_inversion(ctx: GroupContext, e: Element, t_root: Vector) -> bool:
    """Whether the reflection with the given positive root inverts e.

    True iff e^{-1} applied to the root is negative.
    """
    if not is_positive_root_vector(ctx, t_root):
        raise CoxeterInputError("inversion test requires a positive root")
    image = linalg.mat_vec(e.inv, t_root)
    return not is_positive_root_vector(ctx, image)


def left_descents(ctx: GroupContext, e: Element) -> tuple:
    """Generators i with length(s_i e) < length(e)."""
    inv = e.inv
    n = ctx.n
    out = []
    for i in range(n):
        col = tuple(inv[r][i] for r in range(n))
        if not is_positive_root_vector(ctx, col):
            out.append(i + 1)
    return tuple(out)


def demazure_product(ctx: GroupContext, word) -> Element:
    """Demazure (0-Hecke) product of a word.

    Iterates from the right: starting at the identity, each letter is
    applied by left multiplication only when it is not already a left
    descent, so a reduced word reproduces its plain product and extra
    letters are absorbed.
    """
    letters = tuple(word)
    for x in letters:
        _check_letter(ctx, x)
    ident = linalg.identity(ctx.field, ctx.n)
    mat, inv = ident, ident
    for x in reversed(letters):
        col = tuple(inv[r][x - 1] for r in range(ctx.n))
        if is_positive_root_vector(ctx, col):
            mat = _left_mul_simple(ctx, x, mat)
            inv = _right_mul_simple(ctx, inv, x)
    return Element(ctx, mat, inv)


def demazure_extend_right(ctx: GroupContext, e: Element, i: int) -> Element:
    """One right 0-Hecke step: e * s_i when that increases length, else e.

    Agrees with recomputing the product of the extended word; the
    associativity of the 0-Hecke product is exercised by the test suite.
    """
    _check_letter(ctx, i)
    col = tuple(e.mat[r][i - 1] for r in range(ctx.n))
    if is_positive_root_vector(ctx, col):
        return right_multiply(ctx, e, i)
    return e


def positive_roots_up_to_depth(ctx: GroupContext, depth: int) -> list[Vector]:
    """Positive roots reachable from the simple roots by at most `depth`
    simple reflections, in deterministic BFS order."""
    frontier = [simple_root(ctx, i) for i in range(1, ctx.n + 1)]
    seen = set(frontier)
    order = list(frontier)
    for _ in range(depth):
        new = []
        for root in frontier:
            for i in range(1, ctx.n + 1):
                img = reflect_simple(ctx, i, root)
                if img in seen:
                    continue
                if vector_sign_class(img) == POSITIVE:
                    seen.add(img)
                    new.append(img)
                    order.append(img)
        if not new:
            break
        frontier = new
    return order


def root_reflection_matrix(ctx: GroupContext, root: Vector):
    """Matrix of the reflection fixing the hyperplane of the given root."""
    cache = ctx._caches.setdefault("root_mats", {})
    if root not in cache:
        n = ctx.n
        B = ctx.bilinear
        u = [linalg.dot(tuple(B[c]), root) for c in range(n)]
        one, zero = ctx.field.one, ctx.field.zero
        cache[root] = tuple(
            tuple(
                (one if r == c else zero) - u[c] * root[r]
                for c in range(n)
            )
            for r in range(n)
        )
    return cache[root]


def longest_element(ctx: GroupContext, step_limit: int = 100_000) -> Element:
    """The maximal element of a finite group, by greedy ascent.

    Starting from the identity, repeatedly left-multiplies by the lowest
    generator that is not yet a left descent; in a finite group this
    stops exactly at the unique element with every generator a descent.
    """
    e = identity_element(ctx)
    steps = 0
    while True:
        inv = e.inv
        pick = None
        for i in range(ctx.n):
            col = tuple(inv[r][i] for r in range(ctx.n))
            if is_positive_root_vector(ctx, col):
                pick = i + 1
                break
        if pick is None:
            return e
        e = left_multiply(ctx, pick, e)
        steps += 1
        if steps > step_limit:
            raise CoxeterInputError("greedy ascent exceeded the step limit; group is not finite?")
