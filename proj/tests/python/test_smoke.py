import math
import os

import pytest

import _bohrcolor as bc

ROOT = os.path.join(os.path.dirname(__file__), "..", "..")


def test_validate_params():
    r = bc.validate_params(0.1, 1e-4)
    assert r.ok
    assert r.failed_clauses == []
    assert r.lower_margin == pytest.approx(0.3795, abs=1e-3)
    assert not bc.validate_params(0.1, 0.05).ok


def test_circle_helpers():
    assert bc.frac(1.75) == pytest.approx(0.75)
    assert bc.rz_norm(0.9) == pytest.approx(0.1)


def test_member_round_trip():
    p = bc.Params(delta1=0.1, delta2=1e-4, m=2000)
    v = bc.sample_member(p, 7)
    cert = bc.is_member(v, p)
    assert cert.is_member
    assert cert.min_margin() > 0
    canon = bc.canonical_member(p)
    assert bc.is_member(canon, p).is_member
    assert abs(bc.second_difference(bc.SparsePoint.from_pairs([]), canon)) == pytest.approx(
        4 * math.sin(math.pi * 0.1) ** 2, abs=4e-4
    )


def test_coloring_blocks_progressions():
    p = bc.Params(delta1=0.1, delta2=1e-4, m=2000)
    s = bc.sample_member(p, 11)
    x = bc.SparsePoint.from_pairs([(1, 0.3), (5, 0.8)])
    colors = {bc.color_of(y, p)[0] for y in (x, x.add(s), x.add(s).add(s))}
    assert len(colors) > 1


def test_enumerate_and_color_integers():
    cfg = bc.load_config(os.path.join(ROOT, "configs", "default.json"))
    cfg.validate()
    sched = bc.make_schedule(cfg)
    members = bc.enumerate_members(100000, cfg.params, sched, workers=2)
    assert members
    assert members[0][0] == 47922
    assert all(margin > 0 for _, margin in members)
    cell, fragile = bc.color_integer(members[0][0], cfg.params, sched)
    assert cell >= 0 and not fragile


def test_witness():
    p = bc.Params(delta1=0.1, delta2=1e-4, m=2000)
    witness, sup, cluster = bc.build_witness([[1] * 20], 0.5, p)
    assert sup == pytest.approx(0.0, abs=1e-12)
    assert len(cluster) == 1001
    assert bc.is_member(witness, p).is_member


def test_eval_genpoly():
    a = math.sqrt(2) - 1
    assert bc.eval_genpoly([(1, a)], 1) == pytest.approx(a)
    assert bc.eval_genpoly([(1, 0.3), (1, 0.7)], 2) == pytest.approx(0.6)
    with pytest.raises(OverflowError):
        bc.eval_genpoly([(3, 1.0)], 2**21)
