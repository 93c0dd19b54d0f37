import time

import pytest

from rauxlab.zerolab import ZeroStore, scan_lower, scan_zeros

# acceptance lines collected during the run and printed in the terminal summary
ACCEPTANCE: dict = {}


def record(number: int, ok: bool, detail: str) -> None:
    ACCEPTANCE[number] = (ok, detail)


@pytest.fixture(scope="session")
def census():
    """Upper-half scan of (0, 400] x [-1, 3] (sigma widened where needed), timed."""
    t0 = time.perf_counter()
    results = scan_zeros(0.0, 400.0, -1.0, 3.0)
    return results, time.perf_counter() - t0


@pytest.fixture(scope="session")
def store(census, tmp_path_factory):
    """Zeros with 0 < gamma <= 700 and -400 <= gamma <= 0, saved and reloaded."""
    results, _ = census
    st = ZeroStore()
    st.add_scan(results)
    st.add_scan(scan_zeros(400.0, 700.0, -1.0, 3.0))
    st.add_scan(scan_lower(-400.0, 0.0))
    path = tmp_path_factory.mktemp("store") / "zeros.jsonl"
    st.save(path)
    return ZeroStore.load(path)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
