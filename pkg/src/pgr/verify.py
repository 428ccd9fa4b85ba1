"""Axiom-certification engine.

Each check enumerates cases exhaustively over a finite carrier (within a
case budget) or samples them from a seeded generator, and returns a
machine-readable report.  A failing report always carries the offending
word together with the two unequal evaluations, so it can be re-checked
independently.
"""

from __future__ import annotations

import json
import random
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field
from itertools import permutations, product

from .arity import iterate_op
from .errors import BudgetExceeded, DomainError
from .groupring import GroupRing

EXHAUSTIVE_BUDGET = 10**6  # evaluated words per check
DEFAULT_SAMPLES = 1000


@dataclass(frozen=True)
class Counterexample:
    word: tuple
    lhs: object
    rhs: object
    detail: str


@dataclass(frozen=True)
class AxiomReport:
    structure: str
    axiom: str
    mode: str  # "exhaustive" | "sampled"
    cases: int
    status: str  # "holds" | "fails"
    seed: int | None = None
    note: str | None = None
    counterexample: Counterexample | None = field(default=None)

    @property
    def holds(self) -> bool:
        return self.status == "holds"

    def to_text(self) -> str:
        parts = [
            f"structure={self.structure}",
            f"axiom={self.axiom}",
            f"mode={self.mode}",
        ]
        if self.seed is not None:
            parts.append(f"seed={self.seed}")
        parts.append(f"cases={self.cases}")
        parts.append(f"status={self.status}")
        if self.note:
            parts.append(f"note={self.note!r}")
        if self.counterexample is not None:
            ce = self.counterexample
            parts.append(
                f"counterexample(word={ce.word!r}, lhs={ce.lhs!r}, "
                f"rhs={ce.rhs!r}, detail={ce.detail!r})"
            )
        return " ".join(parts)

    def to_dict(self) -> dict:
        return {
            "structure": self.structure,
            "axiom": self.axiom,
            "mode": self.mode,
            "seed": self.seed,
            "cases": self.cases,
            "status": self.status,
            "note": self.note,
            "counterexample": None
            if self.counterexample is None
            else {
                "word": [repr(w) for w in self.counterexample.word],
                "lhs": repr(self.counterexample.lhs),
                "rhs": repr(self.counterexample.rhs),
                "detail": self.counterexample.detail,
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _case_stream(
    width: int,
    universe: Sequence | None,
    sampler: Callable[[random.Random], object] | None,
    mode: str,
    samples: int,
    seed: int,
    budget: int,
):
    """Produce (mode, case iterator, case count, seed, note) for a check over
    `width`-tuples.  mode="auto" prefers exhaustion when the universe fits
    the budget and otherwise degrades to sampling with an explicit note;
    mode="exhaustive" refuses oversized universes instead."""
    if universe is not None:
        universe = list(universe)
        total = len(universe) ** width
        if mode == "exhaustive" or (mode == "auto" and total <= budget):
            if total > budget:
                raise BudgetExceeded(
                    f"{total} cases exceed the exhaustive budget {budget}"
                )
            return "exhaustive", product(universe, repeat=width), total, None, None
        rng = random.Random(seed)
        note = None
        if mode == "auto":
            note = f"universe of {total} cases over budget; sampled"
        cases = (
            tuple(rng.choice(universe) for _ in range(width))
            for _ in range(samples)
        )
        return "sampled", cases, samples, seed, note
    if sampler is None:
        raise DomainError("need a universe or a sampler")
    if mode == "exhaustive":
        raise DomainError("exhaustive mode needs a finite universe")
    rng = random.Random(seed)
    cases = (
        tuple(sampler(rng) for _ in range(width)) for _ in range(samples)
    )
    return "sampled", cases, samples, seed, None


def check_total_associativity(
    op: Callable[[Sequence], object],
    n: int,
    *,
    universe: Sequence | None = None,
    sampler: Callable | None = None,
    mode: str = "auto",
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
    budget: int = EXHAUSTIVE_BUDGET,
    structure: str = "",
) -> AxiomReport:
    """All n placements of an inner product inside a word of length 2n-1
    must agree."""
    width = 2 * n - 1
    mode_str, cases, count, seed_used, note = _case_stream(
        width, universe, sampler, mode, samples, seed, budget
    )
    for word in cases:
        first = None
        for p in range(n):
            inner = op(word[p : p + n])
            value = op((*word[:p], inner, *word[p + n :]))
            if p == 0:
                first = value
            elif value != first:
                return AxiomReport(
                    structure,
                    "total-associativity",
                    mode_str,
                    count,
                    "fails",
                    seed_used,
                    note,
                    Counterexample(
                        tuple(word),
                        first,
                        value,
                        f"inner product at position 0 vs position {p}",
                    ),
                )
    return AxiomReport(
        structure, "total-associativity", mode_str, count, "holds", seed_used, note
    )


def check_commutativity(
    op: Callable[[Sequence], object],
    n: int,
    *,
    universe: Sequence | None = None,
    sampler: Callable | None = None,
    mode: str = "auto",
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
    budget: int = EXHAUSTIVE_BUDGET,
    structure: str = "",
    axiom: str = "commutativity",
) -> AxiomReport:
    """The operation is invariant under every permutation of its operands."""
    mode_str, cases, count, seed_used, note = _case_stream(
        n, universe, sampler, mode, samples, seed, budget
    )
    for word in cases:
        base = op(word)
        for perm in permutations(word):
            if op(perm) != base:
                return AxiomReport(
                    structure,
                    axiom,
                    mode_str,
                    count,
                    "fails",
                    seed_used,
                    note,
                    Counterexample(
                        tuple(word), base, op(perm), f"permutation {perm!r}"
                    ),
                )
    return AxiomReport(structure, axiom, mode_str, count, "holds", seed_used, note)


def check_distributivity(
    add: Callable[[Sequence], object],
    mul: Callable[[Sequence], object],
    m: int,
    n: int,
    *,
    universe: Sequence | None = None,
    sampler: Callable | None = None,
    mode: str = "auto",
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
    budget: int = EXHAUSTIVE_BUDGET,
    structure: str = "",
) -> AxiomReport:
    """An m-ary sum placed in any of the n multiplication slots expands to
    the sum of the slot-wise products."""
    width = m + n - 1
    mode_str, cases, count, seed_used, note = _case_stream(
        width, universe, sampler, mode, samples, seed, budget
    )
    for word in cases:
        xs, ys = word[:m], word[m:]
        total = add(xs)
        for p in range(n):
            lhs = mul((*ys[:p], total, *ys[p:]))
            rhs = add(tuple(mul((*ys[:p], x, *ys[p:])) for x in xs))
            if lhs != rhs:
                return AxiomReport(
                    structure,
                    "distributivity",
                    mode_str,
                    count,
                    "fails",
                    seed_used,
                    note,
                    Counterexample(
                        tuple(word), lhs, rhs, f"sum in multiplication slot {p}"
                    ),
                )
    return AxiomReport(
        structure, "distributivity", mode_str, count, "holds", seed_used, note
    )


def check_zero_law(
    add: Callable[[Sequence], object],
    mul: Callable[[Sequence], object],
    zero,
    m: int,
    n: int,
    *,
    universe: Sequence | None = None,
    sampler: Callable | None = None,
    mode: str = "auto",
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
    budget: int = EXHAUSTIVE_BUDGET,
    structure: str = "",
) -> AxiomReport:
    """Additive neutrality and multiplicative absorption of the zero, with
    the probe and the zero in every admissible position."""
    width = max(n - 1, 1)
    mode_str, cases, count, seed_used, note = _case_stream(
        width, universe, sampler, mode, samples, seed, budget
    )
    for word in cases:
        r = word[0]
        for p in range(m):
            got = add((*(zero,) * p, r, *(zero,) * (m - 1 - p)))
            if got != r:
                return AxiomReport(
                    structure, "zero-law", mode_str, count, "fails", seed_used,
                    note,
                    Counterexample(
                        (r,), got, r, f"additive neutrality, probe slot {p}"
                    ),
                )
        fill = word[: n - 1]
        for p in range(n):
            got = mul((*fill[:p], zero, *fill[p:]))
            if got != zero:
                return AxiomReport(
                    structure, "zero-law", mode_str, count, "fails", seed_used,
                    note,
                    Counterexample(
                        tuple(fill), got, zero, f"absorption, zero slot {p}"
                    ),
                )
    return AxiomReport(
        structure, "zero-law", mode_str, count, "holds", seed_used, note
    )


def check_identity_law(
    op: Callable[[Sequence], object],
    n: int,
    e,
    *,
    universe: Sequence | None = None,
    sampler: Callable | None = None,
    mode: str = "auto",
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
    budget: int = EXHAUSTIVE_BUDGET,
    structure: str = "",
) -> AxiomReport:
    """Neutrality of the constant polyad of e, probed from both ends."""
    mode_str, cases, count, seed_used, note = _case_stream(
        1, universe, sampler, mode, samples, seed, budget
    )
    pad = (e,) * (n - 1)
    for (x,) in cases:
        lead = op((x, *pad))
        trail = op((*pad, x))
        if lead != x or trail != x:
            bad = lead if lead != x else trail
            side = "leading" if lead != x else "trailing"
            return AxiomReport(
                structure, "identity-law", mode_str, count, "fails", seed_used,
                note,
                Counterexample((x,), bad, x, f"{side} probe"),
            )
    return AxiomReport(
        structure, "identity-law", mode_str, count, "holds", seed_used, note
    )


def check_quer_law(
    op: Callable[[Sequence], object],
    n: int,
    pairs: Iterable[tuple],
    *,
    structure: str = "",
) -> AxiomReport:
    """Each (x, x̄) pair satisfies op(x̄, x, ..., x) = x with x̄ in every
    position."""
    pairs = list(pairs)
    for x, q in pairs:
        rest = (x,) * (n - 1)
        for p in range(n):
            got = op((*rest[:p], q, *rest[p:]))
            if got != x:
                return AxiomReport(
                    structure, "quer-law", "exhaustive", len(pairs), "fails",
                    None, None,
                    Counterexample(
                        (x, q), got, x, f"querelement in slot {p}"
                    ),
                )
    return AxiomReport(
        structure, "quer-law", "exhaustive", len(pairs), "holds"
    )


def check_closure_nonderived(
    binary_op: Callable[[object, object], object],
    universe: Sequence,
    contains: Callable[[object], bool],
    *,
    structure: str = "",
) -> AxiomReport:
    """Evidence that the n-ary product is not an iterated binary one: the
    would-be binary products must leave the carrier.  Fails (with the
    witness pair) when every binary product stays inside, i.e. the
    operation is derived."""
    universe = list(universe)
    if not universe:
        raise DomainError("nonderivedness needs a nonempty carrier")
    total = len(universe) ** 2
    stayed: tuple | None = None
    left = 0
    for x, y in product(universe, repeat=2):
        p = binary_op(x, y)
        if contains(p):
            if stayed is None:
                stayed = (x, y, p)
        else:
            left += 1
    note = f"{left} of {total} binary products leave the carrier"
    if left == 0:
        x, y, p = stayed
        return AxiomReport(
            structure, "nonderived-closure", "exhaustive", total, "fails",
            None, note,
            Counterexample((x, y), p, None, "binary product stays inside"),
        )
    return AxiomReport(
        structure, "nonderived-closure", "exhaustive", total, "holds", None, note
    )


def check_axiom(
    structure,
    axiom: str,
    subjects=None,
    *,
    mode: str = "auto",
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
    budget: int = EXHAUSTIVE_BUDGET,
) -> AxiomReport:
    """Dispatch a named law against a ring or a group.

    zero-law and additive-commutativity address rings; identity-law and
    quer-law take the candidate element (or pairs) in `subjects`, with the
    group's own querelements as the quer-law default.
    """
    is_group = hasattr(structure, "arity")
    universe = None
    sampler = None
    if is_group:
        universe = structure.elements()
    elif structure.is_finite:
        universe = structure.elements()
    else:
        sampler = structure.sample
    kwargs = dict(
        universe=universe, sampler=sampler, mode=mode, samples=samples,
        seed=seed, budget=budget, structure=structure.name,
    )
    if axiom == "zero-law":
        if is_group:
            raise DomainError("zero-law applies to rings")
        zero = structure.zero() if subjects is None else subjects
        return check_zero_law(
            structure.add, structure.mul, zero, structure.m_r, structure.n_r,
            **kwargs,
        )
    if axiom == "additive-commutativity":
        if is_group:
            raise DomainError("additive-commutativity applies to rings")
        return check_commutativity(
            structure.add, structure.m_r, axiom="additive-commutativity",
            **kwargs,
        )
    if axiom == "identity-law":
        if subjects is None:
            raise DomainError("identity-law needs a candidate element")
        op = structure.mul
        n = structure.arity if is_group else structure.n_r
        return check_identity_law(op, n, subjects, **kwargs)
    if axiom == "quer-law":
        op = structure.mul
        n = structure.arity if is_group else structure.n_r
        if subjects is None:
            if not is_group:
                raise DomainError("quer-law over a ring needs explicit pairs")
            subjects = [(g, structure.quer(g)) for g in structure.elements()]
        return check_quer_law(op, n, subjects, structure=structure.name)
    raise DomainError(f"unknown axiom {axiom!r}")


# group-ring level checks ----------------------------------------------------


def element_sampler(ctx: GroupRing, max_support: int = 3):
    """Random canonical elements with bounded support, coefficients drawn by
    the ring's own sampler.  Deterministic for a fixed Random instance.

    Supports are mostly nonempty: an all-uniform size would make almost
    every multi-operand word contain the zero element and collapse the
    sampled law checks into the absorption case.  The zero still appears
    in about one draw out of ten."""
    keys = ctx.group.elements()

    def sample(rng: random.Random):
        if rng.random() < 0.1:
            return ctx.element({})
        support = rng.sample(keys, rng.randint(1, max_support))
        return ctx.element({g: ctx.ring.sample(rng) for g in support})

    return sample


def check_augmentation_homomorphism(
    ctx: GroupRing,
    *,
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
    max_support: int = 3,
) -> AxiomReport:
    """The coefficient-total map preserves both operations at unchanged
    arities: aug(add(xs)) equals the iterated ring sum of the totals, and
    aug(mul(xs)) the iterated ring product of the totals."""
    p = ctx.profile
    rng = random.Random(seed)
    draw = element_sampler(ctx, max_support)
    for _ in range(samples):
        xs = [draw(rng) for _ in range(p.gr_add_arity)]
        lhs = ctx.augmentation(ctx.add(xs))
        rhs = iterate_op(
            ctx.ring.add, p.m_r, p.ell_m, [ctx.augmentation(x) for x in xs]
        )
        if lhs != rhs:
            return AxiomReport(
                ctx.name, "augmentation-homomorphism", "sampled", samples,
                "fails", seed, None,
                Counterexample(tuple(xs), lhs, rhs, "additive side"),
            )
        ys = [draw(rng) for _ in range(p.gr_mul_arity)]
        lhs = ctx.augmentation(ctx.mul(ys))
        rhs = iterate_op(
            ctx.ring.mul, p.n_r, p.ell_n, [ctx.augmentation(y) for y in ys]
        )
        if lhs != rhs:
            return AxiomReport(
                ctx.name, "augmentation-homomorphism", "sampled", samples,
                "fails", seed, None,
                Counterexample(tuple(ys), lhs, rhs, "multiplicative side"),
            )
    return AxiomReport(
        ctx.name, "augmentation-homomorphism", "sampled", samples, "holds", seed
    )
