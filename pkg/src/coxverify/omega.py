"""The skew-symmetric companion form of a Coxeter element.

For a Coxeter word c, the form agrees with the symmetric form B on
basis pairs (alpha_i, alpha_j) with i before j in c and with -B on the
reversed pairs, vanishing on the diagonal.  It only depends on the
commutation class of the word.  The checks in this module exercise its
three defining behaviours: invariance under rotating the word while
reflecting the arguments, the sign dichotomy against the first/last
letters on positive roots, and sign monotonicity along the reflection
sequence of a playable reduced word.

Check functions never raise on a falsified property; they collect
witnesses into a report.  Violated preconditions raise
PreconditionError instead, so callers can tell the two apart.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field

from . import linalg, reflection, sinkflip
from .context import GroupContext
from .errors import CoxeterInputError, PreconditionError


@dataclass(frozen=True)
class OmegaForm:
    c_word: tuple
    matrix: tuple  # n x n AlgReal, skew-symmetric


@dataclass
class CheckReport:
    """Outcome of one exhaustive check: assertion count plus witnesses.

    ``violations`` falsify the asserted property; ``notes`` carry
    informational counterexamples to stronger folklore phrasings that
    the check deliberately does not assert.
    """

    checked: int
    violations: list
    notes: list = dataclass_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def build_omega(ctx: GroupContext, c_word) -> OmegaForm:
    """Skew form of a Coxeter word; input must be a permutation of 1..n."""
    letters = tuple(c_word)
    if sorted(letters) != list(range(1, ctx.n + 1)):
        raise CoxeterInputError(f"{letters!r} is not a permutation of 1..{ctx.n}")
    pos = {v - 1: k for k, v in enumerate(letters)}
    B = ctx.bilinear
    zero = ctx.field.zero
    matrix = tuple(
        tuple(
            zero if i == j else (B[i][j] if pos[i] < pos[j] else -B[i][j])
            for j in range(ctx.n)
        )
        for i in range(ctx.n)
    )
    return OmegaForm(letters, matrix)


def eval_omega(form: OmegaForm, v, w):
    """Exact value v^T Omega w."""
    n = len(form.matrix)
    if len(v) != n or len(w) != n:
        raise CoxeterInputError("vector dimension does not match the form")
    zero = form.matrix[0][0].ctx.zero
    acc = zero
    for i in range(n):
        vi = v[i]
        if not vi:
            continue
        row = form.matrix[i]
        inner = zero
        for j in range(n):
            if row[j] and w[j]:
                inner = inner + row[j] * w[j]
        acc = acc + vi * inner
    return acc


def rotated_word(c_word) -> tuple:
    """The word for s c s where s is the first letter: move it to the end."""
    letters = tuple(c_word)
    return letters[1:] + letters[:1]


def check_equivariance(ctx: GroupContext, c_word, samples=None) -> CheckReport:
    """Rotating the word and reflecting both arguments preserves the form.

    With s the first letter of c, compares the form of (c_2..c_n, s)
    evaluated on (s v, s w) against the form of c on (v, w), exactly.
    Defaults to all simple-root basis pairs, which span the claim.
    """
    letters = tuple(c_word)
    form_c = build_omega(ctx, letters)
    form_rot = build_omega(ctx, rotated_word(letters))
    s = letters[0]
    if samples is None:
        basis = [reflection.simple_root(ctx, i) for i in range(1, ctx.n + 1)]
        samples = [(v, w) for v in basis for w in basis]
    checked = 0
    violations = []
    for v, w in samples:
        lhs = eval_omega(form_rot, reflection.reflect_simple(ctx, s, v),
                         reflection.reflect_simple(ctx, s, w))
        rhs = eval_omega(form_c, v, w)
        checked += 1
        if lhs != rhs:
            violations.append({"v": v, "w": w, "rotated": lhs, "original": rhs})
    return CheckReport(checked, violations)


def reflections_commute(ctx: GroupContext, root_a, root_b) -> bool:
    """Exact commutation test on the two reflection matrices."""
    cache = ctx._caches.setdefault("commute", {})
    key = frozenset((root_a, root_b))
    if key not in cache:
        ra = reflection.root_reflection_matrix(ctx, root_a)
        rb = reflection.root_reflection_matrix(ctx, root_b)
        cache[key] = linalg.mat_mul(ra, rb) == linalg.mat_mul(rb, ra)
    return cache[key]


def check_initial_final_signs(ctx: GroupContext, c_word, depth: int = 8) -> CheckReport:
    """Sign dichotomy of the form against the first and last letters.

    Over every positive root to the given reflection depth: pairing the
    first letter's simple root with any positive root is never
    positive, pairing the last letter's is never negative, and a
    VANISHING pairing forces the two reflections to commute.

    The converse is deliberately not asserted: a commuting pair can
    pair strictly.  Witness: rank 2 with edge label 4, c = (1, 2); the
    reflection with root alpha_1 + sqrt(2) alpha_2 commutes with s_1
    (the composite is the central -I) while the pairing is -2.  Such
    pairs are collected as informational notes.
    """
    letters = tuple(c_word)
    form = build_omega(ctx, letters)
    roots = reflection.positive_roots_up_to_depth(ctx, depth)
    first_root = reflection.simple_root(ctx, letters[0])
    last_root = reflection.simple_root(ctx, letters[-1])
    checked = 0
    violations = []
    notes = []
    for t_root in roots:
        for end_root, letter, want in ((first_root, letters[0], -1), (last_root, letters[-1], 1)):
            value_sign = eval_omega(form, end_root, t_root).sign()
            commute = reflections_commute(ctx, end_root, t_root)
            checked += 1
            entry = {"letter": letter, "root": t_root, "sign": value_sign,
                     "commute": commute}
            if value_sign == -want or (value_sign == 0 and not commute):
                violations.append(entry)
            elif commute and value_sign != 0:
                notes.append(entry)
    return CheckReport(checked, violations, notes)


def check_order_signs(ctx: GroupContext, c_word, word, *, precheck: bool = True,
                      form: OmegaForm | None = None) -> CheckReport:
    """Pairwise sign monotonicity along the reflection sequence.

    Preconditions (enforced when precheck is set): the word must be
    playable from the orientation of c and reduced.  Then for every
    i < j the form takes a non-positive value on the pair of reflection
    roots, vanishing only when the two reflections commute.
    """
    letters = tuple(word)
    if precheck:
        base = sinkflip.orientation_of_coxeter_word(ctx, c_word)
        if not sinkflip.is_admissible(ctx, base, letters):
            raise PreconditionError(f"{letters!r} is not admissible for c={tuple(c_word)!r}")
        if not reflection.is_reduced(ctx, letters):
            raise PreconditionError(f"{letters!r} is not a reduced word")
    if form is None:
        form = build_omega(ctx, c_word)
    roots = [step.root for step in reflection.reflection_sequence(ctx, letters)]
    pair_cache = ctx._caches.setdefault(("omega_pairs", form.c_word, form.matrix), {})
    checked = 0
    violations = []
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            key = (roots[i], roots[j])
            result = pair_cache.get(key)
            if result is None:
                value_sign = eval_omega(form, roots[i], roots[j]).sign()
                commute = reflections_commute(ctx, roots[i], roots[j]) if value_sign == 0 else None
                result = (value_sign, commute)
                pair_cache[key] = result
            value_sign, commute = result
            checked += 1
            if value_sign > 0 or (value_sign == 0 and not commute):
                violations.append({
                    "i": i + 1,
                    "j": j + 1,
                    "root_i": roots[i],
                    "root_j": roots[j],
                    "sign": value_sign,
                })
    return CheckReport(checked, violations)
