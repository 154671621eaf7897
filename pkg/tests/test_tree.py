# tests/test_tree.py
"""
Tests for src/homfly/tree.py

The explicit resolution tree must reproduce the engine's polynomial leaf by
leaf, and its exports must be loadable.
"""
import json

import pytest

from src.homfly import LaurentPoly2, contributions, homfly, leaf_observations, skein_tree
from src.homfly.tree import Monomial
from src.seifert import analyze, build_seifert_graph
from src.errors import CrossingCapExceeded


class TestSkeinTree:
    def test_trefoil_tree(self, trefoil):
        tree = skein_tree(trefoil)
        leaves = tree.leaves()
        assert len(leaves) == 3
        assert tree.total() == homfly(trefoil)
        assert tree.rightmost_leaf().pi == Monomial(2, 2, 1)

    def test_leaf_contributions(self, trefoil):
        pairs = contributions(skein_tree(trefoil))
        total = LaurentPoly2.zero()
        for pi, components in pairs:
            assert components >= 1
            total = total + pi.to_poly() * (LaurentPoly2.from_text("v^-1*z^-1 - v*z^-1") ** (components - 1))
        assert total == homfly(trefoil)

    def test_totals_match_engine(self, figure_eight, six_one, hopf_negative, kink):
        for d in (figure_eight, six_one, hopf_negative, kink):
            assert skein_tree(d).total() == homfly(d), d.name

    def test_leaf_without_crossing_to_resolve(self, unknot):
        tree = skein_tree(unknot)
        assert tree.root.is_leaf
        assert tree.total() == 1

    def test_children_are_switch_then_smooth(self, trefoil):
        root = skein_tree(trefoil).root
        assert [c.kind for c in root.children] == ["switch", "smooth"]
        assert root.children[0].diagram.crossing_count == 3
        assert root.children[1].diagram.crossing_count == 2

    def test_cap(self, six_one):
        with pytest.raises(CrossingCapExceeded):
            skein_tree(six_one, cap=4)


class TestLeafObservations:
    def test_trefoil_top_leaves(self, trefoil):
        tree = skein_tree(trefoil)
        obs = leaf_observations(tree, analyze(build_seifert_graph(trefoil)))
        assert obs["top_z_degree"] == 2
        assert obs["top_leaves_are_knots"] is True
        assert obs["uniform_sign"] is True
        assert obs["sign"] == obs["expected_sign"] == 1
        assert obs["rightmost_matches"] is True

    def test_figure_eight_expected_sign(self, figure_eight):
        analysis = analyze(build_seifert_graph(figure_eight))
        obs = leaf_observations(skein_tree(figure_eight), analysis)
        assert obs["expected_sign"] == -1
        assert obs["top_leaves"] >= 1


class TestExports:
    def test_json(self, trefoil):
        data = json.loads(skein_tree(trefoil).to_json())
        assert data["kind"] == "root"
        assert data["crossings"] == 3
        assert len(data["children"]) == 2

    def test_dot(self, trefoil, tmp_path):
        tree = skein_tree(trefoil)
        source = tree.to_dot().source
        assert "digraph" in source
        assert "v^2" in source
        path = tree.save_dot(tmp_path / "trefoil.dot")
        assert path.read_text().startswith("digraph")
