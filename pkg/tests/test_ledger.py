from __future__ import annotations

import pytest

from nhfock.ledger import ShiftLedger


def _structural(c=lambda n, m: -2 * n * m, d=lambda n: n * (n - 1), top=4):
    led = ShiftLedger()
    for n in range(top + 1):
        led.record("pairing", (n,), d(n))
        for m in range(top + 1 - n):
            led.record("induce", (n, m), c(n, m))
    return led


def test_consistent_tables():
    led = _structural()
    led.record("ses", ("L1", 1), 0)
    led.record("ses", ("L2", 1), 0)
    assert led.problems() == []
    assert led.constant("ses") == 0


def test_cocycle_violation_detected():
    led = _structural(c=lambda n, m: -2 * n * m + (1 if (n, m) == (1, 1) else 0))
    assert any("cocycle" in p for p in led.problems())


def test_pairing_relation_violation_detected():
    led = _structural(d=lambda n: n * (n - 1) + (2 if n == 2 else 0))
    assert any("pairing/induce" in p for p in led.problems())


def test_asymmetry_detected():
    led = _structural(c=lambda n, m: -2 * n * m - n)
    assert any("c(" in p for p in led.problems())


def test_non_constant_family_detected():
    led = ShiftLedger()
    led.record("compose_TR", ("L2", 1, 1), 0)
    led.record("compose_TR", ("L3", 1, 1), 2)
    led.record("decat_I", ("L1", 0), None)
    probs = led.problems()
    assert any("not constant" in p for p in probs)
    assert any("no shift reconciles" in p for p in probs)


def test_conflicting_record_rejected():
    led = ShiftLedger()
    led.record("ses", ("L1", 1), 0)
    led.record("ses", ("L1", 1), 0)
    with pytest.raises(ValueError):
        led.record("ses", ("L1", 1), 2)


def test_snapshot_is_canonical():
    a, b = ShiftLedger(), ShiftLedger()
    a.record("x", (2,), 1)
    a.record("x", (1,), 1)
    b.record("x", (1,), 1)
    b.record("x", (2,), 1)
    assert a.to_json() == b.to_json()
    a.merge(b)
    assert a.snapshot() == {"x": {"1": 1, "2": 1}}
