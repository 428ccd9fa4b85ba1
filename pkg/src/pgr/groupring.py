"""The polyadic group ring: finite formal sums of group elements with ring
coefficients.

Addition acts coefficient-wise with the iterated ring addition; the
product runs over the Cartesian product of the operand supports, feeding
the iterated ring multiplication on the coefficient side and the iterated
group product on the basis side, then gathers contributions that land on
the same group element.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from itertools import product

from .arity import ArityProfile, iterate_op, validate_profile
from .errors import (
    ArityMismatch,
    BudgetExceeded,
    DomainError,
    NoZero,
)
from .groups import NaryGroup
from .rings import PolyadicRing

MUL_BUDGET = 10**7  # default cap on support-product combinations
ENUMERATE_BUDGET = 10**6
QUER_SEARCH_BUDGET = 200_000
NEUTRALITY_PROBE_BOUND = 50  # coefficient probes for infinite rings


class GroupRingElement:
    """A formal sum in canonical form: group-key-sorted terms, no zero
    coefficients.  Construct through GroupRing.element / monomial / zero."""

    __slots__ = ("terms",)

    def __init__(self, terms: tuple):
        self.terms = terms

    def support(self) -> tuple:
        return tuple(g for g, _ in self.terms)

    def coefficients(self) -> tuple:
        return tuple(c for _, c in self.terms)

    def as_dict(self) -> dict:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupRingElement) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __repr__(self) -> str:
        return f"GroupRingElement({self.terms!r})"


class GroupRing:
    """Context tying together a ring, a group and a validated arity profile."""

    def __init__(
        self,
        ring: PolyadicRing,
        group: NaryGroup,
        profile: ArityProfile,
        mul_budget: int = MUL_BUDGET,
    ):
        rebuilt = validate_profile(
            profile.m_r, profile.n_r, profile.n_g,
            profile.ell_m, profile.ell_n, profile.ell_g,
        )
        if rebuilt != profile:
            raise DomainError(
                f"profile carries derived arities ({profile.gr_add_arity},"
                f"{profile.gr_mul_arity}), expected ({rebuilt.gr_add_arity},"
                f"{rebuilt.gr_mul_arity})"
            )
        if profile.m_r != ring.m_r or profile.n_r != ring.n_r:
            raise DomainError(
                f"profile carries ring arities ({profile.m_r},{profile.n_r}) "
                f"but {ring.name} has ({ring.m_r},{ring.n_r})"
            )
        if profile.n_g != group.arity:
            raise DomainError(
                f"profile carries group arity {profile.n_g} but {group.name} "
                f"has {group.arity}"
            )
        self.ring = ring
        self.group = group
        self.profile = profile
        self.mul_budget = mul_budget
        self.name = f"{ring.name}[{group.name}]"

    # construction ----------------------------------------------------------

    def element(self, data: Mapping | Iterable[tuple]) -> GroupRingElement:
        """Normalize raw (group key -> coefficient) data: validate entries,
        gather duplicate keys by ring addition, drop zero coefficients and
        sort by group key."""
        items = data.items() if isinstance(data, Mapping) else data
        buckets: dict = {}
        for g, c in items:
            if not self.group.contains(g):
                raise DomainError(
                    f"{g!r} is not an element of {self.group.name}"
                )
            buckets.setdefault(g, []).append(self.ring.normalize(c))
        pairs = [(g, self._accumulate(cs)) for g, cs in buckets.items()]
        return self._canonical(pairs)

    def monomial(self, coeff, g) -> GroupRingElement:
        return self.element({g: coeff})

    def zero(self) -> GroupRingElement:
        """The unique zero: the empty support (every coefficient is the ring
        zero, and zero coefficients are never stored)."""
        if not self.ring.has_zero:
            raise NoZero(f"{self.ring.name} has no zero element")
        return GroupRingElement(())

    def _canonical(self, pairs: Iterable[tuple]) -> GroupRingElement:
        zero = self.ring.zero() if self.ring.has_zero else None
        kept = [(g, c) for g, c in pairs if not (self.ring.has_zero and c == zero)]
        kept.sort(key=lambda t: self.group.sort_key(t[0]))
        return GroupRingElement(tuple(kept))

    def _accumulate(self, coeffs: Sequence):
        """Fold a bag of coefficient contributions with the m_r-ary ring
        addition, padding with the ring zero up to the next admissible
        word length when the count itself is not composable."""
        t = len(coeffs)
        if t == 1:
            return coeffs[0]
        m = self.ring.m_r
        if t == 0:
            target = 1  # an empty gather is the zero itself
        else:
            over = (t - 1) % (m - 1)
            target = t if over == 0 else t + (m - 1 - over)
        if target != t or t == 0:
            if not self.ring.has_zero:
                raise NoZero(
                    f"gathering {t} contribution(s) needs zero padding, and "
                    f"{self.ring.name} has no zero"
                )
            if t == 0:
                return self.ring.zero()
            coeffs = list(coeffs) + [self.ring.zero()] * (target - t)
        ell = (target - 1) // (m - 1)
        return iterate_op(self.ring.add, m, ell, coeffs)

    # ring-like operations ----------------------------------------------------

    def _check_operands(self, operands: Sequence, count: int, what: str) -> None:
        if len(operands) != count:
            raise ArityMismatch(
                f"{self.name} {what} takes {count} elements, got {len(operands)}"
            )
        for x in operands:
            if not isinstance(x, GroupRingElement):
                raise DomainError(f"operand {x!r} is not a group-ring element")

    def add(self, operands: Sequence[GroupRingElement]) -> GroupRingElement:
        """Coefficient-wise iterated ring addition of gr_add_arity operands."""
        p = self.profile
        self._check_operands(operands, p.gr_add_arity, "addition")
        keys: set = set()
        for x in operands:
            keys.update(x.support())
        supports = [x.as_dict() for x in operands]
        pairs = []
        for g in keys:
            coeffs = []
            for support in supports:
                c = support.get(g)
                if c is None:
                    if not self.ring.has_zero:
                        raise NoZero(
                            f"operand misses {self.group.label(g)} and "
                            f"{self.ring.name} has no zero to fill in"
                        )
                    c = self.ring.zero()
                coeffs.append(c)
            pairs.append((g, iterate_op(self.ring.add, p.m_r, p.ell_m, coeffs)))
        return self._canonical(pairs)

    def mul_terms(self, operands: Sequence[GroupRingElement]) -> list[tuple]:
        """The raw product expansion: one (coefficient, group key) contribution
        per combination of operand terms, in operand-term order, before any
        gathering of equal keys."""
        p = self.profile
        self._check_operands(operands, p.gr_mul_arity, "multiplication")
        combos = 1
        for x in operands:
            combos *= len(x.terms)
        if combos > self.mul_budget:
            raise BudgetExceeded(
                f"product expansion needs {combos} combinations, over the "
                f"budget of {self.mul_budget}"
            )
        out = []
        for combo in product(*(x.terms for x in operands)):
            keys = tuple(g for g, _ in combo)
            coeffs = tuple(c for _, c in combo)
            c = iterate_op(self.ring.mul, p.n_r, p.ell_n, coeffs)
            g = iterate_op(self.group.mul, p.n_g, p.ell_g, keys)
            out.append((c, g))
        return out

    def mul(self, operands: Sequence[GroupRingElement]) -> GroupRingElement:
        """Convolution product of gr_mul_arity operands: expand over the
        support combinations, then gather coefficients at equal keys."""
        buckets: dict = {}
        for c, g in self.mul_terms(operands):
            buckets.setdefault(g, []).append(c)
        return self._canonical(
            [(g, self._accumulate(cs)) for g, cs in buckets.items()]
        )

    def scalar_action(
        self, scalars: Sequence, x: GroupRingElement
    ) -> GroupRingElement:
        """Act with n_r - 1 ring scalars on every coefficient through one
        ring multiplication; the basis keys are untouched."""
        n = self.ring.n_r
        if len(scalars) != n - 1:
            raise ArityMismatch(
                f"action takes {n - 1} scalar(s), got {len(scalars)}"
            )
        lams = tuple(self.ring.normalize(s) for s in scalars)
        return self._canonical(
            [(g, self.ring.mul((*lams, c))) for g, c in x.terms]
        )

    # distinguished elements ---------------------------------------------------

    def trivial_identities(self) -> list[GroupRingElement]:
        """Monomial identity candidates e_R * e_G built from a ring identity
        and a group identity, kept when genuinely neutral.

        Neutrality is verified on monomial probes with the candidate block
        leading or trailing; the convolution is coefficient-linear, so
        monomial neutrality extends to every finite sum.  Probes cover the
        whole ring when finite, otherwise a fixed coefficient window.
        """
        ring_ids = self.ring.identity_search()
        if not ring_ids:
            return []
        out = []
        for er in sorted(ring_ids):
            for eg in sorted(self.group.identities(), key=self.group.sort_key):
                cand = self.element({eg: er})
                if self._is_neutral(cand):
                    out.append(cand)
        return out

    def _probe_coefficients(self) -> list:
        if self.ring.is_finite:
            return self.ring.elements()
        return list(range(-NEUTRALITY_PROBE_BOUND, NEUTRALITY_PROBE_BOUND + 1))

    def _is_neutral(self, e: GroupRingElement) -> bool:
        pad = [e] * (self.profile.gr_mul_arity - 1)
        for g in self.group.elements():
            for r in self._probe_coefficients():
                x = self.element({g: r})
                if self.mul([x, *pad]) != x or self.mul([*pad, x]) != x:
                    return False
        return True

    def quer(
        self, x: GroupRingElement, search_budget: int = QUER_SEARCH_BUDGET
    ) -> GroupRingElement | None:
        """Multiplicative querelement of x, or None.

        Monomial fast path: for x = r*g with r in the unit set, the
        candidate is r̄*ḡ, verified in all positions.  Otherwise a bounded
        search runs over elements supported inside the group closure of
        x's support with coefficients drawn from the unit set plus the
        fast-path querelements of x's own coefficients.  None reports that
        nothing was found within the bound, not a proof of absence.
        """
        if x.is_zero():
            return None  # absorption makes the defining relation vacuous
        candidates_tried = 0
        if len(x.terms) == 1:
            ((g, c),) = x.terms
            cq = self.ring.quer(c)
            if cq is not None:
                cand = self.element({self.group.quer(g): cq})
                if self._is_quer(cand, x):
                    return cand
        coeff_pool = set(self.ring.units())
        for c in x.coefficients():
            cq = self.ring.quer(c)
            if cq is not None:
                coeff_pool.add(cq)
        closure = self._support_closure(x.support())
        options: list[list] = [
            [None, *sorted(coeff_pool)] for _ in closure
        ]
        for assignment in product(*options):
            if all(c is None for c in assignment):
                continue
            candidates_tried += 1
            if candidates_tried > search_budget:
                return None
            cand = self._canonical(
                [(g, c) for g, c in zip(closure, assignment) if c is not None]
            )
            if self._is_quer(cand, x):
                return cand
        return None

    def _is_quer(self, cand: GroupRingElement, x: GroupRingElement) -> bool:
        n = self.profile.gr_mul_arity
        rest = [x] * (n - 1)
        return all(
            self.mul([*rest[:p], cand, *rest[p:]]) == x for p in range(n)
        )

    def _support_closure(self, keys: Sequence) -> list:
        """Smallest superset of the keys closed under the group product."""
        current = set(keys)
        bound = self.group.size()
        while len(current) < bound:
            ordered = sorted(current, key=self.group.sort_key)
            grown = set(current)
            for word in product(ordered, repeat=self.group.arity):
                grown.add(self.group.mul(word))
            if grown == current:
                break
            current = grown
        return sorted(current, key=self.group.sort_key)

    # augmentation -------------------------------------------------------------

    def augmentation(self, x: GroupRingElement):
        """Collapse a formal sum onto its coefficient total: the iterated
        ring addition of all coefficients, zero-padded up to the next
        admissible word length (no padding ever occurs for binary addition
        of two or more terms)."""
        return self._accumulate(x.coefficients())

    def in_augmentation_ideal(self, x: GroupRingElement) -> bool:
        if not self.ring.has_zero:
            raise NoZero(f"{self.ring.name} has no zero, no kernel to test")
        return self.augmentation(x) == self.ring.zero()

    # enumeration ----------------------------------------------------------------

    def elements(self, budget: int = ENUMERATE_BUDGET) -> list[GroupRingElement]:
        """All canonical elements of a finite context: |R| ** |G| of them."""
        coeffs = self.ring.elements()  # raises InfiniteUniverse over Z
        keys = self.group.elements()
        total = len(coeffs) ** len(keys)
        if total > budget:
            raise BudgetExceeded(
                f"enumeration of {total} elements is over the budget {budget}"
            )
        out = []
        for combo in product(coeffs, repeat=len(keys)):
            out.append(self._canonical(list(zip(keys, combo))))
        return out

    # rendering ------------------------------------------------------------------

    def render(self, x: GroupRingElement) -> str:
        """Canonical text form: key-sorted terms joined by ' + ', each as
        <coefficient><ring symbol>*<group label>; the zero prints as 0."""
        if x.is_zero():
            return "0"
        return " + ".join(
            f"{self.ring.format_scalar(c)}*{self.group.label(g)}"
            for g, c in x.terms
        )


def make_group_ring(
    ring: PolyadicRing,
    group: NaryGroup,
    ell_m: int = 1,
    ell_n: int = 1,
    ell_g: int = 1,
    mul_budget: int = MUL_BUDGET,
) -> GroupRing:
    """Assemble a context from a ring and a group, validating the arity
    profile (raises QuantizationMismatch for incompatible combinations)."""
    profile = validate_profile(
        ring.m_r, ring.n_r, group.arity, ell_m, ell_n, ell_g
    )
    return GroupRing(ring, group, profile, mul_budget=mul_budget)
