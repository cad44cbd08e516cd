"""Acceptance suite: one pass/fail line per criterion, exact tolerance.

Each criterion delegates to the mechanical checks in alttamari.verify so
the claim is encoded in exactly one place; this file adds the runtime
budgets and the per-criterion reporting.
"""

import time

import pytest

from alttamari import verify


def _criterion(label, names, budget=None, **kwargs):
    start = time.monotonic()
    failures = []
    details = []
    for name in names:
        fn = verify.ALL_CHECKS[name]
        ok, detail = fn(**kwargs.get(name, {}))
        details.append(f"{name}: {detail}")
        if not ok:
            failures.append(f"{name}: {detail}")
    elapsed = time.monotonic() - start
    if budget is not None and elapsed > budget:
        failures.append(f"runtime {elapsed:.1f}s exceeds {budget}s budget")
    status = "PASS" if not failures else "FAIL"
    print(f"{status} {label} ({elapsed:.1f}s) -- " + "; ".join(details))
    assert not failures, "; ".join(failures)


def test_criterion_01_appendix_tables():
    _criterion(
        "criterion 1: appendix-table reproduction (n <= 7, exact)",
        ["census"],
        budget=60,
    )


def test_criterion_02_closed_forms():
    _criterion(
        "criterion 2: closed forms and delta-independence (n <= 7, exact)",
        ["census", "delta-independence"],
    )


def test_criterion_03_bijection_roundtrips():
    _criterion(
        "criterion 3: bijection round-trips and transport (exact)",
        ["roundtrips", "injectivity", "transport"],
        budget=120,
    )


def test_criterion_04_covering_is_rotation():
    _criterion(
        "criterion 4: covering = delta-rotation (n <= 6, exact)",
        ["covering-rotation"],
    )


def test_criterion_05_refinement():
    _criterion(
        "criterion 5: refinement for comparable deltas (n = 5, exact)",
        ["refinement"],
        budget=60,
    )


def test_criterion_06_extremes():
    _criterion(
        "criterion 6: Dyck/Tamari extremes recovered (exact)",
        ["extremes"],
    )


def test_criterion_07_delta_lemmas():
    _criterion(
        "criterion 7: delta-machinery lemmas and worked example (exact)",
        ["delta-lemmas", "worked-example"],
    )


def test_criterion_08_series_identities():
    _criterion(
        "criterion 8: series identities (exact)",
        ["series"],
        budget=5,
    )


def test_criterion_09_product_law():
    _criterion(
        "criterion 9: linear-polynomial product law (exact)",
        ["product-law"],
    )


def test_criterion_10_tree_structures():
    _criterion(
        "criterion 10: extremal tree intervals and mirrors (exact)",
        ["tree-structures"],
    )
