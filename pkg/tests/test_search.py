import pytest

from dnagraph import (BUDGET_EXCEEDED, InvalidParameterError, Labeling,
                      ResourceLimitError, SAT, SearchConfig, UNSAT,
                      check_middle_vertex_lemma, explore_conjecture, find_labeling,
                      label_chorded_cycle, make_chorded_cycle, make_dicycle,
                      make_ladder, verify_full, verify_quasi)


class TestConfig:
    @pytest.mark.parametrize("kwargs", [
        dict(alpha=1, k=3), dict(alpha=2, k=1),
        dict(alpha=2, k=2, mode="weird"), dict(alpha=2, k=2, node_budget=0),
        dict(alpha=2, k=2, order="random"),
    ])
    def test_rejects_bad_config(self, kwargs):
        with pytest.raises(InvalidParameterError):
            SearchConfig(**kwargs)


class TestFindLabeling:
    def test_triangle_sat_with_canonical_certificate(self):
        out = find_labeling(make_dicycle(3), SearchConfig(2, 2, "quasi"))
        assert out.verdict == SAT
        labels = [out.certificate.label_of(v) for v in ("v1", "v2", "v3")]
        assert labels == [(1, 1), (1, 2), (2, 1)]

    def test_certificate_always_verifies(self):
        for mode, check in (("quasi", verify_quasi), ("full", verify_full)):
            out = find_labeling(make_ladder(3), SearchConfig(3, 4, mode))
            assert out.verdict == SAT
            assert check(make_ladder(3), out.certificate)

    def test_ladder_full_sat(self):
        out = find_labeling(make_ladder(4), SearchConfig(3, 4, "full"))
        assert out.verdict == SAT

    def test_small_full_unsat_both_orders(self):
        # a full (2,2)-labeling of C4 would need all four words incl. the
        # constant ones, whose self-overlap demands a loop
        for order in ("dfs", "given"):
            out = find_labeling(make_dicycle(4), SearchConfig(2, 2, "full", order=order))
            assert out.verdict == UNSAT

    def test_chorded_15_unsat_exhaustively(self):
        out = find_labeling(make_chorded_cycle(15), SearchConfig(4, 3, "quasi"))
        assert out.verdict == UNSAT
        assert out.nodes_explored < 10 ** 5

    def test_budget_never_reported_unsat(self):
        out = find_labeling(make_chorded_cycle(15), SearchConfig(4, 3, "quasi", node_budget=5))
        assert out.verdict == BUDGET_EXCEEDED
        assert out.certificate is None
        assert out.nodes_explored == 5

    def test_deterministic(self):
        cfg = SearchConfig(4, 3, "quasi")
        a = find_labeling(make_chorded_cycle(9), cfg)
        b = find_labeling(make_chorded_cycle(9), cfg)
        assert a == b

    def test_size_cap(self):
        with pytest.raises(ResourceLimitError):
            find_labeling(make_dicycle(9), SearchConfig(2, 2), size_cap=8)

    def test_oracle_agrees_with_catalogue(self):
        for n in (6, 11, 14):
            out = find_labeling(make_chorded_cycle(n), SearchConfig(4, 3, "quasi"))
            assert out.verdict == SAT


class TestMiddleVertexLemma:
    def test_catalogue_row_9(self):
        res = label_chorded_cycle(9)
        assert res.labeling.label_of("v2") == (1, 1, 1)
        assert res.labeling.label_of("v5") == (2, 2, 2)
        assert res.labeling.label_of("v8") == (3, 3, 3)
        assert check_middle_vertex_lemma(res.digraph, res.labeling)

    def test_non_constant_middle_fails(self):
        d = make_chorded_cycle(6)
        # force v2 (inside the v1 -> v3 chord span) onto a mixed label
        fake = Labeling(4, 3, {
            "v1": (2, 1, 1), "v2": (1, 2, 1), "v3": (1, 1, 2),
            "v4": (1, 2, 2), "v5": (2, 2, 2), "v6": (2, 2, 1),
        })
        assert not check_middle_vertex_lemma(d, fake)
        assert not verify_quasi(d, fake)

    def test_all_oracle_certificates_satisfy_it(self):
        for n in range(6, 10):
            d = make_chorded_cycle(n)
            out = find_labeling(d, SearchConfig(4, 3, "quasi"))
            assert out.verdict == SAT
            assert check_middle_vertex_lemma(d, out.certificate)


class TestConjectureExplorer:
    def test_small_ladders_sat(self):
        rows = explore_conjecture(range(2, 5))
        by_key = {(r.n, r.alpha, r.k): r.verdict for r in rows}
        for n in (2, 3, 4):
            assert by_key[(n, 3, 4)] == SAT
            assert by_key[(n, 4, 4)] == SAT

    def test_fallback_row_appears_on_budget(self):
        rows = explore_conjecture([4], node_budget=2)
        ks = [(r.alpha, r.k, r.verdict) for r in rows]
        assert (3, 4, BUDGET_EXCEEDED) in ks
        assert (3, 5, BUDGET_EXCEEDED) in ks
