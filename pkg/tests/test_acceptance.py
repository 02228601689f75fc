"""Acceptance criteria, one test each.

Every test runs the corresponding check from :mod:`strands_decat.suite` on
the built-in corpus and, where a budget applies, times it.
"""

from __future__ import annotations

import argparse
import time

from strands_decat.cli import cmd_suite, dumps
from strands_decat.suite import CHECKS


def timed(n):
    t0 = time.perf_counter()
    result = CHECKS[n][1]()
    return result, time.perf_counter() - t0


def assert_pass(result):
    assert result["status"] == "pass", result["details"]


def test_1_algebra_axioms():
    result, elapsed = timed(1)
    assert_pass(result)
    assert set(result["details"]) == {"D1", "D2", "D3", "D4", "D5"}
    assert elapsed < 60


def test_2_nilcoxeter():
    result, elapsed = timed(2)
    assert_pass(result)
    assert elapsed < 10


def test_3_k0_dimensions():
    result, _ = timed(3)
    assert_pass(result)


def test_4_main_theorem():
    result, elapsed = timed(4)
    assert_pass(result)
    assert elapsed < 30


def test_5_e_structure():
    result, _ = timed(5)
    assert_pass(result)
    assert {"D1/0", "D4/0", "D4/1"} <= set(result["details"]["tensor_iso"])


def test_6_square_zero():
    result, _ = timed(6)
    assert_pass(result)


def test_7_pants_table():
    result, _ = timed(7)
    assert_pass(result)


def test_8_gluing():
    result, elapsed = timed(8)
    assert_pass(result)
    assert elapsed < 60


def test_9_hopf_tensor_product():
    result, _ = timed(9)
    assert_pass(result)


def test_10_determinism():
    args = argparse.Namespace()
    first = dumps(cmd_suite(args)).encode()
    second = dumps(cmd_suite(args)).encode()
    assert first == second

