"""Unit tests for the reduction-tree model: numeric laws, the propagation
solver, structural lints, vanishing cycles, and tail-config enumeration."""
from fractions import Fraction

import pytest

from srt import (
    DeformationProfile,
    Edge,
    InvalidProfile,
    InvalidTree,
    MissingLabel,
    ReductionTree,
    Vertex,
    check_monotonic,
    check_vanishing_cycles,
    effective_different,
    effective_invariant,
    effective_invariant_from_tails,
    enumerate_tail_configs,
    invariant_weights,
    propagate_differents,
    validate_tree,
)
from srt.graph import Unsupported


class TestProfiles:
    def test_validation(self):
        with pytest.raises(InvalidProfile):
            DeformationProfile([])
        with pytest.raises(InvalidProfile):
            DeformationProfile([Fraction(3, 2)])
        with pytest.raises(InvalidProfile):
            DeformationProfile([0])

    def test_multiplicative_flags(self):
        p = DeformationProfile([Fraction(1, 2), 1, Fraction(3, 4)])
        assert p.multiplicative == [False, True, False]

    def test_effective_different(self):
        # last level weighted by p/(p-1)
        assert effective_different([Fraction(1, 2), 1], 5) == Fraction(1, 2) + Fraction(5, 4)
        assert effective_different(None, 5) == 0
        assert effective_different([], 5) == 0
        # fully multiplicative profile of depth nu: nu - 1 + p/(p-1) = nu + 1/(p-1)
        for p, nu in ((5, 3), (7, 2)):
            assert effective_different([1] * nu, p) == nu + Fraction(1, p - 1)

    def test_effective_invariant_weighted_average(self):
        sigmas = [Fraction(3, 2), Fraction(2), Fraction(5, 2)]
        w = invariant_weights(3, 5)
        assert effective_invariant(sigmas, 5) == sum(
            a * b for a, b in zip(w, sigmas)
        )


class TestTreeStructure:
    def test_duplicate_ids(self):
        with pytest.raises(InvalidTree):
            ReductionTree([Vertex("a"), Vertex("a")], [])

    def test_two_parents(self):
        with pytest.raises(InvalidTree):
            ReductionTree(
                [Vertex("a"), Vertex("b"), Vertex("c")],
                [Edge("a", "c"), Edge("b", "c"), Edge("a", "b")],
            )

    def test_must_be_connected_single_root(self):
        with pytest.raises(InvalidTree):
            ReductionTree([Vertex("a"), Vertex("b")], [])

    def test_json_roundtrip(self):
        tree = ReductionTree(
            [
                Vertex("root", inertia=2, branch_points=[("x0", 25)]),
                Vertex("t", inertia=0, tail="new-etale", sigma=Fraction(3, 2)),
            ],
            [Edge("root", "t", epaisseur=Fraction(5, 4), sigma_eff=Fraction(3, 2))],
        )
        again = ReductionTree.from_json(tree.to_json())
        assert again.to_json() == tree.to_json()
        assert again.root == "root"
        assert again.vertices["t"].sigma == Fraction(3, 2)

    def test_paths(self):
        tree = ReductionTree(
            [Vertex("a", inertia=2), Vertex("b", inertia=1), Vertex("c", inertia=0, tail="new-etale")],
            [Edge("a", "b"), Edge("b", "c")],
        )
        assert tree.path_from_root("c") == ["a", "b", "c"]
        assert set(tree.subtree("b")) == {"b", "c"}


class TestValidateTree:
    def test_clean_tree(self):
        tree = ReductionTree(
            [
                Vertex("root", inertia=1, branch_points=[("wild", 5)]),
                Vertex("t", inertia=0, tail="primitive", branch_points=[("tame", 2)]),
            ],
            [Edge("root", "t")],
        )
        assert validate_tree(tree, 5) == []

    def test_lints(self):
        tree = ReductionTree(
            [
                Vertex("root", inertia=1),
                Vertex("bad-etale", inertia=0),
                Vertex("bad-index", inertia=0, tail="new-etale",
                       branch_points=[("pt", 5)]),
            ],
            [Edge("root", "bad-etale"), Edge("root", "bad-index")],
        )
        problems = validate_tree(tree, 5)
        assert any("not marked as a tail" in m for m in problems)
        assert any("expected 1" in m for m in problems)


class TestPropagation:
    def test_solves_missing_epaisseur(self):
        tree = ReductionTree(
            [
                Vertex("root", inertia=2),
                Vertex("t", inertia=0, tail="new-etale", sigma=Fraction(3, 2)),
            ],
            [Edge("root", "t", sigma_eff=Fraction(3, 2))],
        )
        out = propagate_differents(tree, 5)
        assert out.status == "Solved"
        x = Fraction(2) + Fraction(1, 4)
        assert out.tree.edge("root", "t").epaisseur == x / Fraction(3, 2)

    def test_detects_contradiction(self):
        tree = ReductionTree(
            [
                Vertex("root", inertia=2),
                Vertex("t", inertia=0, tail="new-etale", sigma=Fraction(3, 2)),
            ],
            [Edge("root", "t", sigma_eff=Fraction(3, 2), epaisseur=Fraction(1))],
        )
        out = propagate_differents(tree, 5)
        assert out.status == "Contradiction"
        assert any("delta drop" in c for c in out.contradictions)

    def test_rejects_increasing_different(self):
        tree = ReductionTree(
            [
                Vertex("root", inertia=1, delta_eff=Fraction(1, 2)),
                Vertex("w", inertia=1, delta_eff=Fraction(3, 2)),
                Vertex("t", inertia=0, tail="new-etale", sigma=Fraction(3, 2)),
            ],
            [
                Edge("root", "w", sigma_eff=Fraction(-1)),
                Edge("w", "t", sigma_eff=Fraction(1)),
            ],
        )
        out = propagate_differents(tree, 5, root_delta=Fraction(1, 2))
        assert out.status == "Contradiction"
        assert any("increases outward" in c for c in out.contradictions)

    def test_open_chain_reports_relation(self):
        tree = ReductionTree(
            [
                Vertex("root", inertia=2),
                Vertex("w", inertia=1),
                Vertex("t", inertia=0, tail="new-etale", sigma=Fraction(3, 2)),
            ],
            [
                Edge("root", "w", sigma_eff=Fraction(1)),
                Edge("w", "t", sigma_eff=Fraction(1)),
            ],
        )
        out = propagate_differents(tree, 5)
        assert out.status == "Unsolved"
        assert len(out.relations) == 1
        edges, total = out.relations[0]
        assert set(edges) == {("root", "w"), ("w", "t")}
        assert total == Fraction(2) + Fraction(1, 4)


class TestInvariantFromTails:
    def test_sigma_eff_from_outward_data(self):
        tree = ReductionTree(
            [
                Vertex("root", inertia=2),
                Vertex("w", inertia=1, branch_points=[("wild", 5)]),
                Vertex("t", inertia=0, tail="new-etale", sigma=Fraction(3, 2)),
            ],
            [Edge("root", "w"), Edge("w", "t")],
        )
        # sigma_eff - 1 = (3/2 - 1) - 1 wild point
        assert effective_invariant_from_tails(tree, ("root", "w"), 5) == Fraction(1, 2)
        assert effective_invariant_from_tails(tree, ("w", "t"), 5) == Fraction(3, 2)

    def test_missing_sigma_label(self):
        tree = ReductionTree(
            [Vertex("root", inertia=1), Vertex("t", inertia=0, tail="new-etale")],
            [Edge("root", "t")],
        )
        with pytest.raises(MissingLabel):
            effective_invariant_from_tails(tree, ("root", "t"), 5)


class TestVanishingCycles:
    def test_global_form(self):
        ok = check_vanishing_cycles({"new": [Fraction(3, 2)], "prim": [Fraction(1, 2)]})
        assert ok.kind == "Holds"
        bad = check_vanishing_cycles({"new": [Fraction(3, 2)], "prim": [Fraction(1)]})
        assert bad.kind == "Violated"

    def test_tree_input(self):
        tree = ReductionTree(
            [
                Vertex("root", inertia=1),
                Vertex("t1", inertia=0, tail="primitive", sigma=Fraction(1, 2)),
                Vertex("t2", inertia=0, tail="primitive", sigma=Fraction(1, 2)),
            ],
            [Edge("root", "t1"), Edge("root", "t2")],
        )
        assert check_vanishing_cycles(tree).kind == "Holds"

    def test_level_form(self):
        out = check_vanishing_cycles(
            {"pi_count": 4, "sigmas": [Fraction(2), Fraction(2)]}, level=1
        )
        assert out.kind == "Holds"
        assert out.lhs == out.rhs == 2

    def test_monotonicity(self):
        good = ReductionTree(
            [Vertex("a", inertia=2), Vertex("b", inertia=1)], [Edge("a", "b")]
        )
        assert check_monotonic(good).kind == "Monotonic"
        bad = ReductionTree(
            [Vertex("a", inertia=1), Vertex("b", inertia=2)], [Edge("a", "b")]
        )
        out = check_monotonic(bad)
        assert out.kind == "Violation"
        assert out.path == ["a", "b"]


class TestTailConfigs:
    def test_only_m2_supported(self):
        with pytest.raises(Unsupported):
            enumerate_tail_configs(1, 3, 5)
        with pytest.raises(ValueError):
            enumerate_tail_configs(4, 2, 5)

    def test_zero_primitive(self):
        out = enumerate_tail_configs(0, 2, 7)
        keys = {(c.prim, c.new) for c in out}
        assert ((), (Fraction(2),)) in keys
        assert ((), (Fraction(3, 2), Fraction(3, 2))) in keys

    def test_flagging_large_sigma(self):
        out = enumerate_tail_configs(0, 2, 3)
        by_key = {(c.prim, c.new): c.flagged for c in out}
        assert by_key[((), (Fraction(2),))] is True  # 2 >= 3/2... p/2 = 3/2
        out5 = enumerate_tail_configs(0, 2, 5)
        by_key5 = {(c.prim, c.new): c.flagged for c in out5}
        assert by_key5[((), (Fraction(2),))] is False

    def test_every_config_satisfies_the_identity(self):
        for tau in range(4):
            for c in enumerate_tail_configs(tau, 2, 7):
                lhs = sum((s - 1 for s in c.new), Fraction(0)) + sum(
                    c.prim, Fraction(0)
                )
                assert lhs == 1
                assert len(c.prim) == tau
                assert len(c.prim) + len(c.new) <= 2 or tau == 3
