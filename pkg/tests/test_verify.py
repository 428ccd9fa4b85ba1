from __future__ import annotations

import json

import pytest

import controls
from pgr import AdiagGroup, BudgetExceeded, DerivedCyclicGroup, DomainError, JRootRing
from pgr.verify import (
    check_augmentation_homomorphism,
    check_axiom,
    check_closure_nonderived,
    check_commutativity,
    check_distributivity,
    check_total_associativity,
    check_zero_law,
    element_sampler,
)


def int_sampler(rng):
    return rng.randint(-50, 50)


class TestTotalAssociativity:
    def test_adiag2_exhaustive(self):
        group = AdiagGroup(2)
        report = check_total_associativity(
            group.mul, 3, universe=group.elements(), structure=group.name
        )
        assert report.holds
        assert report.mode == "exhaustive"
        assert report.cases == 4**5

    def test_jz_multiplication_sampled(self, jz):
        report = check_total_associativity(
            jz.mul, 3, sampler=jz.sample, samples=1000, seed=3, structure=jz.name
        )
        assert report.holds
        assert report.mode == "sampled"
        assert report.cases == 1000
        assert report.seed == 3

    def test_skew_op_fails_with_reusable_counterexample(self):
        report = check_total_associativity(
            controls.skew_ternary, 3, sampler=int_sampler, samples=100, seed=0,
            structure="skew",
        )
        assert not report.holds
        ce = report.counterexample
        assert ce is not None
        # re-evaluate the two bracketings independently
        word = ce.word
        placements = [
            controls.skew_ternary(
                (*word[:p], controls.skew_ternary(word[p : p + 3]), *word[p + 3 :])
            )
            for p in range(3)
        ]
        assert len(set(placements)) > 1

    def test_reproducible_given_seed(self, jz):
        runs = [
            check_total_associativity(
                jz.mul, 3, sampler=jz.sample, samples=50, seed=42, structure="x"
            ).to_text()
            for _ in range(2)
        ]
        assert runs[0] == runs[1]

    def test_exhaustive_budget(self):
        group = AdiagGroup(3)
        with pytest.raises(BudgetExceeded):
            check_total_associativity(
                group.mul, 3, universe=group.elements(), mode="exhaustive",
                budget=100,
            )

    def test_auto_degrades_to_sampling_with_note(self):
        group = AdiagGroup(3)
        report = check_total_associativity(
            group.mul, 3, universe=group.elements(), budget=100, samples=20,
            structure=group.name,
        )
        assert report.holds
        assert report.mode == "sampled"
        assert "over budget" in report.note


class TestDistributivity:
    def test_mod3_exhaustive(self):
        ring = JRootRing(2, 3)
        report = check_distributivity(
            ring.add, ring.mul, 2, 3, universe=ring.elements(),
            structure=ring.name,
        )
        assert report.holds
        assert report.mode == "exhaustive"
        assert report.cases == 3**4

    def test_jz_sampled(self, jz):
        report = check_distributivity(
            jz.add, jz.mul, 2, 3, sampler=jz.sample, samples=1000, seed=1,
            structure=jz.name,
        )
        assert report.holds

    def test_sign_dropping_mul_fails(self, jz):
        def bad_mul(word):
            return abs(jz.mul(word))

        report = check_distributivity(
            jz.add, bad_mul, 2, 3, sampler=jz.sample, samples=200, seed=1,
            structure="corrupted",
        )
        assert not report.holds
        ce = report.counterexample
        xs, ys = ce.word[:2], ce.word[2:]
        slot = int(ce.detail.rsplit(" ", 1)[1])
        lhs = bad_mul((*ys[:slot], jz.add(xs), *ys[slot:]))
        rhs = jz.add(tuple(bad_mul((*ys[:slot], x, *ys[slot:])) for x in xs))
        assert lhs == ce.lhs and rhs == ce.rhs and lhs != rhs


class TestNamedAxioms:
    def test_zero_law_mod3(self):
        report = check_axiom(JRootRing(2, 3), "zero-law")
        assert report.holds and report.mode == "exhaustive"

    def test_zero_law_rejects_fake_zero(self, jz):
        report = check_axiom(jz, "zero-law", 1, samples=50)
        assert not report.holds

    def test_identity_law_adiag(self, adiag3):
        report = check_axiom(adiag3, "identity-law", (1, 2))
        assert report.holds
        assert report.cases == 9

    def test_identity_law_rejects_non_identity(self, adiag3):
        report = check_axiom(adiag3, "identity-law", (1, 0))
        assert not report.holds
        assert report.counterexample is not None

    def test_quer_law_all_pairs(self, adiag3):
        report = check_axiom(adiag3, "quer-law")
        assert report.holds
        assert report.cases == 9

    def test_additive_commutativity(self, jz):
        report = check_axiom(jz, "additive-commutativity", samples=200)
        assert report.holds

    def test_unknown_axiom(self, jz):
        with pytest.raises(DomainError):
            check_axiom(jz, "no-such-law")


class TestClosureNonderived:
    def test_adiag3_all_products_leave(self, adiag3):
        report = check_closure_nonderived(
            adiag3.binary_product, adiag3.elements(),
            adiag3.binary_product_in_carrier, structure=adiag3.name,
        )
        assert report.holds
        assert report.cases == 81
        assert report.note == "81 of 81 binary products leave the carrier"

    def test_derived_group_fails(self):
        group = DerivedCyclicGroup(3, 3)
        report = check_closure_nonderived(
            group.binary_product, group.elements(),
            group.binary_product_in_carrier, structure=group.name,
        )
        assert not report.holds
        x, y = report.counterexample.word
        assert group.binary_product_in_carrier(group.binary_product(x, y))

    def test_jroot_scalars(self, jz):
        probe = [k for k in range(-5, 6) if k != 0]
        report = check_closure_nonderived(
            jz.binary_product, probe, jz.binary_product_in_carrier,
            structure=jz.name,
        )
        assert report.holds


class TestGroupRingChecks:
    def test_lifted_laws_hold(self, ctx1):
        sampler = element_sampler(ctx1, max_support=2)
        p = ctx1.profile
        assert check_total_associativity(
            ctx1.mul, p.gr_mul_arity, sampler=sampler, samples=100, seed=0,
            structure=ctx1.name,
        ).holds
        assert check_distributivity(
            ctx1.add, ctx1.mul, p.gr_add_arity, p.gr_mul_arity,
            sampler=sampler, samples=100, seed=0, structure=ctx1.name,
        ).holds
        assert check_zero_law(
            ctx1.add, ctx1.mul, ctx1.zero(), p.gr_add_arity, p.gr_mul_arity,
            sampler=sampler, samples=100, seed=0, structure=ctx1.name,
        ).holds
        assert check_commutativity(
            ctx1.add, p.gr_add_arity, sampler=sampler, samples=100, seed=0,
            structure=ctx1.name,
        ).holds

    def test_multiplicative_associativity_over_finite_ring(self):
        # equal arities everywhere: the product of formal sums is totally
        # associative; 500 words of 5 operands with supports <= 2
        from pgr import AdiagGroup, make_group_ring

        ctx = make_group_ring(JRootRing(2, 3), AdiagGroup(3))
        report = check_total_associativity(
            ctx.mul, 3, sampler=element_sampler(ctx, max_support=2),
            samples=500, seed=12, structure=ctx.name,
        )
        assert report.holds
        assert report.cases == 500

    def test_augmentation_homomorphism(self, ctx1):
        report = check_augmentation_homomorphism(ctx1, samples=100, seed=0)
        assert report.holds

    def test_corrupted_augmentation_fails(self, ctx1):
        wrapped = controls.CorruptedAugmentation(ctx1)
        report = check_augmentation_homomorphism(wrapped, samples=100, seed=0)
        assert not report.holds

    def test_sampler_is_deterministic(self, ctx1):
        import random

        draws1 = [element_sampler(ctx1)(random.Random(9)) for _ in range(3)]
        draws2 = [element_sampler(ctx1)(random.Random(9)) for _ in range(3)]
        assert draws1 == draws2


class TestReportSerialization:
    def test_text_and_json(self, adiag3):
        report = check_axiom(adiag3, "quer-law")
        text = report.to_text()
        assert "axiom=quer-law" in text and "status=holds" in text
        payload = json.loads(report.to_json())
        assert payload["cases"] == 9
        assert payload["counterexample"] is None

    def test_failure_payload_carries_counterexample(self):
        report = check_total_associativity(
            controls.skew_ternary, 3, sampler=int_sampler, samples=50, seed=2,
            structure="skew",
        )
        payload = json.loads(report.to_json())
        assert payload["status"] == "fails"
        assert payload["counterexample"]["word"]
        assert payload["seed"] == 2
