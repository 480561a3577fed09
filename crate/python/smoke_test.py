"""Smoke test for the spider_la_py extension.

Run after `maturin develop -m crates/py/Cargo.toml`, or after
`cargo build -p spider-la-py --features extension-module`, in which case the
library is loaded straight from target/.
"""

import importlib.machinery
import importlib.util
import json
import sys
from pathlib import Path


def load():
    try:
        import spider_la_py

        return spider_la_py
    except ImportError:
        pass
    target = Path(__file__).resolve().parent.parent / "target"
    names = ("libspider_la_py.so", "libspider_la_py.dylib", "spider_la_py.dll")
    built = [target / p / n for p in ("release", "debug") for n in names if (target / p / n).exists()]
    if not built:
        sys.exit("spider_la_py not found; build it first")
    path = max(built, key=lambda p: p.stat().st_mtime)
    loader = importlib.machinery.ExtensionFileLoader("spider_la_py", str(path))
    spec = importlib.util.spec_from_loader("spider_la_py", loader)
    module = importlib.util.module_from_spec(spec)
    loader.exec_module(module)
    return module


def main():
    sl = load()

    cert = sl.construct([2, 3, 2])
    report = cert.verify()
    assert report.passed and report.color_count == 4, report
    assert cert.signature == [2, 3, 2]
    assert sum(map(len, cert.labels)) == 7

    again = sl.load_certificate(cert.to_json())
    assert again.labels == cert.labels
    assert json.loads(cert.to_json())["verification"]["passed"] is True
    assert cert.to_dot().count(" -- ") == 7

    bad = sl.verify_labeling([2, 2, 2], [[1, 2], [3, 4], [5, 5]])
    assert not bad.passed and not bad.is_bijection and bad.violation

    app = sl.appendix_labeling(0, 3)
    assert app.verify().colors == {14, 9, 8, 6}

    try:
        sl.construct([9, 15, 19])
    except sl.NoConstructionError:
        pass
    else:
        raise AssertionError("Sp(9,15,19) has no known construction")

    b = sl.chi_la_bounds([2, 2, 2, 2])
    assert (b.lower, b.upper, b.exact) == (6, 6, 6), b
    assert sl.sp23_classify(0, 10) == ("OnlyInA", 12)

    value, witness = sl.chi_la_exact([2, 2, 2, 2])
    assert value == 6
    assert sl.verify_labeling([2, 2, 2, 2], witness).color_count == 6
    assert sl.chi_la_exact([2, 2, 2, 2, 2], budget=10) == (None, None)

    scan = sl.conjecture_scan(9)
    assert not any(unexpected for *_, unexpected in scan)

    instances, failures = sl.sweep("odd_3k", 6)
    assert instances > 0 and failures == []

    print("smoke test ok")


if __name__ == "__main__":
    main()
