#!/usr/bin/env python3
"""Smoke test for the banso_py extension module.

Builds nothing itself: run `cargo build -p banso-py` first, then
`python3 python/smoke_test.py`. The script copies the built cdylib into a
temporary directory under the importable name and exercises the surface.
"""

import math
import shutil
import sys
import tempfile
from pathlib import Path

REPO_ROOT = Path(__file__).resolve().parent.parent


def locate_extension() -> Path:
    candidates = [
        REPO_ROOT / "target" / profile / "libbanso_py.so"
        for profile in ("debug", "release")
    ]
    for c in candidates:
        if c.exists():
            return c
    sys.exit(
        "libbanso_py.so not found; run `cargo build -p banso-py` first "
        f"(searched {', '.join(str(c) for c in candidates)})"
    )


def main() -> None:
    ext = locate_extension()
    with tempfile.TemporaryDirectory(prefix="banso-py-") as tmp:
        shutil.copy2(ext, Path(tmp) / "banso_py.so")
        sys.path.insert(0, tmp)
        import banso_py

        # Graph construction and round trip.
        c5 = banso_py.Graph.from_graph6("Dhc")
        assert (c5.n(), c5.m()) == (5, 5), (c5.n(), c5.m())
        assert banso_py.Graph.from_edges(5, c5.edges()).to_graph6() == "Dhc"

        # Index values.
        assert math.isclose(banso_py.bso(c5), 5 / math.sqrt(2), rel_tol=1e-12)
        assert math.isclose(banso_py.sombor(c5), 10 * math.sqrt(2), rel_tol=1e-12)
        table = banso_py.all_indices(c5)
        assert set(table) == {"BSO", "SO", "R", "M2STAR", "H", "ID", "SDD", "ISI", "GA", "F"}
        assert math.isclose(table["R"], 2.5, rel_tol=1e-12)
        assert math.isclose(banso_py.index_value(c5, "H"), 2.5, rel_tol=1e-12)

        # Degree summary.
        summary = c5.degree_summary()
        assert summary["is_connected"] and summary["is_regular"]
        assert not summary["is_semiregular_bipartite"]

        # Bound reports: K_{2,3} is semiregular bipartite, so T3.4 is tight.
        k23 = banso_py.Graph.from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
        report = banso_py.evaluate_bound(k23, "T3.4")
        assert report["holds"] and report["equality_detected"] and report["consistent"], report
        reports = banso_py.check_bounds(c5)
        assert len(reports) == 27
        assert all(r["holds"] for r in reports if not r["skipped"])

        # Complement: the complement of C5 is again 2-regular.
        assert banso_py.bso(c5.complement()) == banso_py.bso(c5)

        # Tree enumeration and extremal search.
        assert banso_py.tree_count(7) == 11
        assert banso_py.tree_count(7, chemical=True) == 9
        trees = banso_py.enumerate_trees(6)
        assert len(trees) == 6 and all(t.m() == 5 for t in trees)
        ext5 = banso_py.extremal(5)
        assert math.isclose(ext5["min_value"], banso_py.path_bso_closed_form(5), rel_tol=1e-12)
        assert math.isclose(ext5["max_value"], banso_py.star_bso_closed_form(5), rel_tol=1e-12)
        assert ext5["tree_count"] == 3 and len(ext5["min_trees"]) == 1

        # Chemical upper bound for n = 8 equals the extremal maximum.
        ub = banso_py.chemical_bso_upper_bound(8)
        ext8 = banso_py.extremal(8, chemical=True)
        assert math.isclose(ext8["max_value"], ub, rel_tol=1e-12)

        # Errors surface as ValueError.
        for bad_call in (
            lambda: banso_py.Graph.from_graph6("***"),
            lambda: banso_py.bso(banso_py.Graph.from_edges(3, [(0, 1)])),
            lambda: banso_py.index_value(c5, "NOPE"),
            lambda: banso_py.chemical_bso_upper_bound(7),
        ):
            try:
                bad_call()
            except ValueError:
                pass
            else:
                raise AssertionError(f"{bad_call} did not raise ValueError")

        print("banso_py smoke test: all checks passed")


if __name__ == "__main__":
    main()
