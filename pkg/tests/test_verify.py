"""Verification suites: green on a correct build, red under fault injection."""

import math

from conevol import cone_cylinder, verify
from conevol.common import Method, VolumeResult
from conevol.elliptic import complete_E, complete_K


def test_fast_suite_all_pass():
    rows = verify.run_all(fast=True)
    assert rows, "suite must produce rows"
    failed = [row.name for row in rows if not row.passed]
    assert failed == []


def test_rows_have_finite_deviations():
    for row in verify.run_all(fast=True):
        assert math.isfinite(row.max_deviation)
        assert row.tolerance > 0.0
        assert row.passed == (row.max_deviation <= row.tolerance)


def test_flipped_identity_breaks_ladder(monkeypatch):
    # volume_closed consumes the e2 identity; flipping the K-weight sign in
    # that identity must blow the cross-method ladder wide open
    def e2_flipped(m, cfg=None):
        m = float(getattr(m, "value", m))
        if m < 1e-3:
            return math.pi / 4
        k_val = complete_K(m) if m < 1.0 else 0.0
        e_val = complete_E(m)
        return ((2 * m * m - 1) * e_val - (1 - m * m) * k_val) / (3 * m * m)

    monkeypatch.setattr(cone_cylinder, "e2", e2_flipped)
    rows = verify.run_all(fast=True)
    ladder = {row.name: row for row in rows
              if row.name.startswith("cone-cylinder: closed vs")}
    assert len(ladder) == 2
    for row in ladder.values():
        assert not row.passed
        assert row.max_deviation > 1e-3


def test_broken_volume_detected(monkeypatch):
    # a grossly wrong closed form must fail the ladder and the limit rows
    def bogus(params):
        return VolumeResult(1.0, Method.CLOSED_FORM, 0.0, 0)

    monkeypatch.setattr(cone_cylinder, "volume_closed", bogus)
    rows = verify.run_all(fast=True)
    names_failed = {row.name for row in rows if not row.passed}
    assert "cone-cylinder: closed vs quad-r3 ladder" in names_failed
    assert "cone-cylinder: k=0 circular-cone limit" in names_failed
