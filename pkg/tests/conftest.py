import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, label = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:2d} {'PASS' if ok else 'FAIL'}  {label}")


from functools import lru_cache  # noqa: E402

from artinzeta.groups import CATALOG, make_catalog  # noqa: E402


@lru_cache(maxsize=None)
def catalog_group(tag):
    return make_catalog(tag)


SMALL_CATALOG = [t for t in CATALOG if catalog_group(t).order <= 2000]
