import time

import pytest

from s3recog import _checks
from s3recog.dimension import cross_check
from s3recog.groebner import normal_form, s_polynomial

# every Groebner basis built anywhere in the session is re-verified here
_checks.enabled = True

BASIS_LOG: list[dict] = []
BASIS_FAILURES: list[str] = []
ACCEPTANCE: dict[int, tuple[str, str]] = {}


def _verify(basis, ideal) -> dict:
    entry = {"nvars": basis.nvars, "size": len(basis)}
    report = cross_check(basis)
    entry["dimension"] = report.dimension
    entry["hilbert_degree"] = report.hilbert_degree
    entry["macaulay"] = report.agreement
    entry["inputs_reduce"] = all(normal_form(g, basis).is_zero() for g in ideal.generators)
    elems = basis.elements
    entry["s_pairs_reduce"] = all(
        normal_form(s_polynomial(elems[i], elems[j], basis.order), basis).is_zero()
        for i in range(len(elems))
        for j in range(i + 1, len(elems))
    )
    return entry


def verify_basis(basis, ideal):
    t0 = time.perf_counter()
    try:
        entry = _verify(basis, ideal)
    except Exception as exc:
        BASIS_FAILURES.append(f"{type(exc).__name__}: {exc}")
        raise
    entry["check_seconds"] = time.perf_counter() - t0
    BASIS_LOG.append(entry)
    assert entry["macaulay"] and entry["inputs_reduce"] and entry["s_pairs_reduce"], entry


_checks.basis_observers.append(verify_basis)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_collection_modifyitems(session, config, items):
    # acceptance runs last so the basis log covers the whole suite
    items.sort(key=lambda item: item.nodeid.split("::")[0].endswith("test_acceptance.py"))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        # a parametrized criterion passes only if every case does
        previous = ACCEPTANCE.get(number, (title, "PASS"))[1]
        status = "PASS" if rep.passed and previous == "PASS" else "FAIL"
        ACCEPTANCE[number] = (title, status)


def pytest_terminal_summary(terminalreporter):
    if BASIS_LOG or BASIS_FAILURES:
        terminalreporter.write_line(
            f"verified {len(BASIS_LOG)} Groebner bases, {len(BASIS_FAILURES)} failed verification"
        )
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE):
            title, status = ACCEPTANCE[number]
            terminalreporter.write_line(f"{status}  criterion {number:>2}: {title}")
