import pytest

from uqtorus import suites


@pytest.mark.parametrize("name", list(suites.SUITES))
def test_suite_passes(name):
    results = suites.run_suite(name)
    assert results
    failed = [(r["check"], r["residual"]) for r in results if r["status"] != "pass"]
    assert not failed


def test_results_keep_check_order():
    names = [c for c, _ in suites.SUITES["xi-homomorphism"]()]
    assert [r["check"] for r in suites.run_suite("xi-homomorphism", workers=8)] == names
