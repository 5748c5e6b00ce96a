"""Quick end-to-end checks over the bundled fixtures, run by ``zcolor selftest``.

This is a smoke-sized version of the acceptance suite: small sample sizes,
the same invariants.
"""

from __future__ import annotations

import itertools
import random
from typing import Callable

from .coloring import (
    Coloring,
    bounded_small_image_search,
    classify_five,
    coloring_matrix,
    determinant,
    find_nontrivial_coloring,
    primitive_normalize,
    sample_colorings,
    verify_coloring,
)
from .diagram import compute_arcs, diagram_components, link_components, parse_pd, pretzel
from .errors import ColorMismatch, IllegalMove, ZColorError
from .fixtures import TABLE_LINKS, fixture_dir, fixture_path
from .intlinalg import matmul, smith_normal_form
from .moves import apply_move, legal_moves
from .reduction import reduce_five, reduce_simple, verify_trace

KNOWN_DETERMINANTS = {"trefoil": 3, "figure_eight": 5, "hopf": 2}
KINK_UNKNOT = "X[1,2,2,1]"


def fox_count(d, n: int) -> int:
    """Brute-force count of Fox n-colorings (all arc assignments mod n)."""
    arcs = compute_arcs(d)
    rows = coloring_matrix(d, arcs)
    count = 0
    for vec in itertools.product(range(n), repeat=arcs.arc_count):
        if all(sum(r * v for r, v in zip(row, vec)) % n == 0 for row in rows):
            count += 1
    return count


def snf_count(d, n: int) -> int:
    """Fox n-colorings counted from the Smith form of the coloring matrix."""
    arcs = compute_arcs(d)
    res = smith_normal_form(coloring_matrix(d, arcs), arcs.arc_count)
    out = n ** (arcs.arc_count - res.rank)
    for s in res.diagonal[: res.rank]:
        out *= _gcd(s, n)
    return out


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


class CheckFailed(Exception):
    pass


def _require(cond, msg):
    if not cond:
        raise CheckFailed(msg)


def _load(name):
    path = fixture_path(name)
    if not path.exists():
        raise FileNotFoundError(f"fixture {path} is missing")
    try:
        return parse_pd(path.read_text())
    except ZColorError as exc:
        raise ValueError(f"fixture {path} does not parse: {exc}") from None


def check_fixture_files():
    root = fixture_dir()
    if not root.is_dir():
        raise FileNotFoundError(f"fixture directory {root} does not exist")
    files = sorted(root.glob("*.pd"))
    if not files:
        raise FileNotFoundError(f"no .pd files in {root}")
    for p in files:
        _load(p.stem)
    return f"{len(files)} files parse"


def check_determinants():
    for name, want in KNOWN_DETERMINANTS.items():
        d = _load(name)
        got = determinant(d)
        _require(got == want, f"{name}: determinant {got}, expected {want}")
        for n in (2, 3, 5):
            _require(fox_count(d, n) == snf_count(d, n), f"{name}: Fox count mod {n} disagrees")
    _require(determinant(parse_pd(KINK_UNKNOT)) == 1, "kinked unknot")
    return "trefoil, figure-eight, Hopf, kinked unknot"


def check_table_links():
    for name in TABLE_LINKS:
        d = _load(name)
        _require(determinant(d) == 0, f"{name}: determinant {determinant(d)}")
        g = find_nontrivial_coloring(d)
        _require(g is not None and verify_coloring(d, g), f"{name}: no coloring")
        if diagram_components(d) == 1:
            _require(bounded_small_image_search(d, 3, coeff_bound=2) is None, f"{name}: 3 colors")
    return f"{len(TABLE_LINKS)} links"


def check_simple_reduction():
    for tw in ([2, -2], [3, -3], [2, -2, 2, -2]):
        d = pretzel(tw)
        g = primitive_normalize(find_nontrivial_coloring(d))
        rep = reduce_simple(d, g)
        _require(rep.achieved == 4, f"pretzel{tw}: {rep.final_image}")
        _require(verify_trace(rep.trace), f"pretzel{tw}: trace fails")
    return "pretzel links reach four colors"


def check_five_reduction():
    n = 0
    for name in ("L8n6", "L11n379"):
        d = _load(name)
        for g in sample_colorings(d, 5, coeff_bound=2, limit=4):
            _require(classify_five(g).in_catalog, f"{name}: {g.image} not in catalog")
            rep = reduce_five(d, g)
            _require(rep.achieved == 4 and verify_trace(rep.trace), f"{name}: {g.image}")
            n += 1
    _require(n, "no five-color samples")
    return f"{n} five-color colorings reach four colors"


def check_snf(trials: int = 200, seed: int = 1):
    rng = random.Random(seed)
    for _ in range(trials):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        m = [[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)]
        res = smith_normal_form(m, c)
        _require(matmul(matmul(res.u, m), res.v) == res.s, f"u m v != s for {m}")
        diag = res.diagonal[: res.rank]
        _require(all(b % a == 0 for a, b in zip(diag, diag[1:])), f"divisibility fails for {m}")
    return f"{trials} random matrices"


def check_moves(steps: int = 150, seed: int = 2):
    rng = random.Random(seed)
    tref, clasp = _load("trefoil"), pretzel([2, -2])
    blank = Coloring((0,) * compute_arcs(tref).arc_count)
    for d, g in ((tref, blank), (clasp, find_nontrivial_coloring(clasp))):
        det, comps = determinant(d), link_components(d)
        for _ in range(steps):
            moves = legal_moves(d)
            rng.shuffle(moves)
            for m in moves:
                # keep the diagrams small
                if len(d.crossings) > 12 and m.kind in ("R1_add", "R2_push"):
                    continue
                try:
                    d, g = apply_move(d, g, m)
                    break
                except (IllegalMove, ColorMismatch):
                    continue
            _require(verify_coloring(d, g), "coloring broke")
            _require(determinant(d) == det and link_components(d) == comps, "invariant changed")
    return f"{steps} moves per diagram"


CHECKS: list[tuple[str, Callable[[], str]]] = [
    ("fixture files", check_fixture_files),
    ("determinants", check_determinants),
    ("table links", check_table_links),
    ("simple reduction", check_simple_reduction),
    ("five-color reduction", check_five_reduction),
    ("smith normal form", check_snf),
    ("move soundness", check_moves),
]


def run_selftest(log=print) -> list[tuple[str, bool, str]]:
    results = []
    for name, fn in CHECKS:
        try:
            detail = fn()
            ok = True
        except Exception as exc:  # report every failure, keep going
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append((name, ok, detail))
        log(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
    return results
