import pytest

from circulant_iso.census import (enumerate_jump_sets, iter_pairs, load,
                                  minimal_census, persist, run_census,
                                  spot_check)
from circulant_iso.type1 import type1_orbit
from circulant_iso.type2 import ThetaParams, theta_set


class TestEnumerate:
    def test_order_5(self):
        assert list(enumerate_jump_sets(5)) == [(1,), (1, 2), (2,)]

    def test_order_8_connected(self):
        got = list(enumerate_jump_sets(8))
        # every nonempty subset of [1,4] except the all-even ones
        assert len(got) == 12
        assert (2,) not in got and (4,) not in got and (2, 4) not in got

    def test_order_16_unrestricted_min3(self):
        got = list(enumerate_jump_sets(16, connected_only=False, min_size=3))
        assert len(got) == 219

    def test_lexicographic_order(self):
        got = list(enumerate_jump_sets(10, connected_only=False))
        assert got == sorted(got)

    def test_max_size(self):
        got = list(enumerate_jump_sets(16, min_size=3, max_size=3))
        assert all(len(r) == 3 for r in got)


class TestRunCensus:
    def test_no_cube_divisor_means_no_pairs(self):
        rep = run_census(12)
        assert rep.pair_count == 0 and rep.tuple_counts == ()

    def test_order_16(self):
        rep = run_census(16)
        assert rep.pair_count == 8
        assert rep.pair_count_minimal == 8
        assert rep.tuple_counts == ((2, 2, 8),)

    def test_order_16_class_detail(self):
        rep = run_census(16)
        entry = next(e for e in rep.classes if e.rep == (1, 2, 7))
        assert entry.orbit == (((1, 2, 7), 1), ((3, 5, 6), 3))
        assert ((2, 2, (1, 2, 7), (2, 3, 5))) in entry.hits

    def test_pairs_reverify(self):
        rep = run_census(16)
        for entry in rep.classes:
            for m, t, base, partner in entry.hits:
                assert theta_set(ThetaParams(16, m, t), base) == partner
                assert partner not in type1_orbit(16, base)

    @pytest.mark.parametrize("n", [16, 24])
    def test_partnership_mutual(self, n):
        rep = run_census(n)
        directed = {(base, partner) for e in rep.classes
                    for _, _, base, partner in e.hits}
        assert directed == {(b, a) for a, b in directed}

    def test_cap_refusal(self):
        with pytest.raises(ValueError, match="cap"):
            run_census(66)
        with pytest.raises(ValueError, match="cap"):
            run_census(40, cap=32)

    def test_parallel_matches_serial(self, tmp_path):
        serial = run_census(16)
        parallel = run_census(16, workers=2)
        assert serial == parallel
        p1 = persist(serial, tmp_path / "serial")
        p2 = persist(parallel, tmp_path / "parallel")
        assert p1[0].read_bytes() == p2[0].read_bytes()
        assert p1[1].read_bytes() == p2[1].read_bytes()

    def test_spot_check_confirms(self):
        rep = run_census(16)
        results = spot_check(rep, sample=8)
        assert results and all(ok for _, _, ok in results)


class TestPersistence:
    def test_round_trip(self, tmp_path):
        rep = run_census(16)
        main, summary = persist(rep, tmp_path)
        assert load(main) == rep

    def test_summary_contents(self, tmp_path):
        rep = run_census(16)
        _, summary = persist(rep, tmp_path)
        text = summary.read_text()
        assert "pairs,8" in text
        assert "order,16" in text

    def test_zero_pair_summary(self, tmp_path):
        rep = run_census(12)
        main, summary = persist(rep, tmp_path)
        assert "pairs,0" in summary.read_text()
        assert load(main) == rep

    def test_unwritable_destination(self, tmp_path):
        target = tmp_path / "file"
        target.write_text("x")
        rep = run_census(12)
        with pytest.raises(OSError):
            persist(rep, target / "sub")


class TestPublishedCounts:
    """Series totals follow the minimal-moving convention; the raw counts
    are larger at 24 and 27 and are reported alongside."""

    def test_order_24(self):
        rep = run_census(24)
        assert rep.pair_count == 64
        assert rep.pair_count_minimal == 32

    def test_order_27_triples(self):
        rep = run_census(27)
        assert rep.tuple_counts == ((3, 3, 24),)
        assert rep.tuple_counts_minimal == ((3, 3, 12),)

    def test_minimal_census_matches_full(self):
        for n, m in ((16, 2), (24, 2), (27, 3)):
            full = run_census(n)
            restricted = minimal_census(n, m)
            assert restricted.pair_count == full.pair_count_minimal

    def test_order_48_three_jump_pairs(self):
        # includes the two disconnected pairs scaled up from order 16
        rep = run_census(48, min_size=3, max_size=3, connected_only=False)
        assert rep.pair_count == 18
        connected = run_census(48, min_size=3, max_size=3)
        assert connected.pair_count == 16

    def test_order_54_triples(self):
        mc = minimal_census(54, 3)
        assert mc.tuple_counts == ((3, 960),)

    def test_minimal_census_validation(self):
        with pytest.raises(ValueError):
            minimal_census(12, 2)
