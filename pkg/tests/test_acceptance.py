"""Exit criteria for the build, mirroring the CLI verification suite
(`permsym suite`) one test per criterion, each printing its pass/fail line.

Known red: the `affine-shear` criterion pins the radical power dimensions of
the 9-point shear algebra to the stated value [5, 4, 2, 0].  Two independent
computations (the verified divided-trace chain and a brute-force enumeration
of all 243 algebra elements; see test_endo.py::test_shear_radical_series_
verified_value) both give [5, 4, 1, 0], so that sub-check fails and is left
failing on purpose; every other sub-check of the criterion passes.
"""

import pytest

from permsym import suite


@pytest.fixture(scope="session")
def suite_results():
    results = suite.run_all(seed=0)
    return {r.key: r for r in results}


@pytest.mark.parametrize("key", [key for key, _ in suite.CRITERIA])
def test_criterion(key, suite_results):
    result = suite_results[key]
    print(result.line())
    failed = [d for d in result.details if d.startswith("FAIL")]
    assert result.passed, "\n".join(failed)
