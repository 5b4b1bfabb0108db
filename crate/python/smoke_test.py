"""Smoke test for the metawhit Python extension.

Build first with ``pip install -e crates/metawhit-py --no-build-isolation``.
If the CLI binary has been built, its JSON output is also checked against
``schema/output.schema.json``.
"""

import cmath
import itertools
import json
import pathlib
import subprocess
import sys

import metawhit

ROOT = pathlib.Path(__file__).resolve().parent.parent


def schur_ratio_rank_one(lam, q, x):
    # (1 - x/q) * (1 + x + ... + x^lam)
    return (1 - x / q) * sum(x**k for k in range(lam + 1))


def check_rank_one():
    q = 7
    for lam in range(4):
        poly = metawhit.whittaker_sum([lam], 1)
        for x in (0.3 + 0.2j, -0.5j, 0.8):
            got = poly.evaluate(q, [x])
            assert abs(got - schur_ratio_rank_one(lam, q, x)) < 1e-12, (lam, x, got)
    terms = metawhit.whittaker_sum([0], 1).terms()
    assert terms == [([0], [("1", 0, [])]), ([1], [("-1", -1, [])])], terms


def check_comparisons():
    for lam in itertools.product(range(2), repeat=2):
        ok, k, diff = metawhit.compare(list(lam), 3, p=7)
        assert ok and k == -1 and diff < 1e-9, (lam, ok, k, diff)
    ok, k, _ = metawhit.compare([0], 1, normalization="printed")
    assert not ok and k is None
    crystal = metawhit.whittaker_sum([1, 0], 2)
    pattern = metawhit.gt_ppart([1, 0], 2)
    assert crystal == pattern.rescale_q(-1)
    lhs, rhs = metawhit.gk(2, 2, 5)
    assert lhs == rhs
    total, product = metawhit.gkw([1, 2], 2, 2, 4)
    assert total == product


def check_crystal_counts():
    for lam in itertools.product(range(3), repeat=2):
        tuples = metawhit.crystal_tuples(list(lam))
        a, b = lam[0] + 1, lam[1] + 1
        assert len(tuples) == (a + 1) * (b + 1) * (a + b + 2) // 2, (lam, len(tuples))
    assert metawhit.kostant_partition([1, 1]) == 2
    assert metawhit.root_order(2, [1, 2, 1]) == [(2, 3), (1, 3), (1, 2)]


def check_transitions():
    m = [1, 0, 2]
    moved = metawhit.transition(2, [1, 2, 1], m, [2, 1, 2])
    assert metawhit.transition(2, [2, 1, 2], moved, [1, 2, 1]) == m
    assert metawhit.weight(2, [1, 2, 1], m) == metawhit.weight(2, [2, 1, 2], moved)
    for case, length in (("a2", 3), ("b2", 4), ("g2", 6)):
        for seg in itertools.product(range(2), repeat=length):
            out = metawhit.local_transition(case, list(seg))
            back = metawhit.local_transition(case, out, inverse=True)
            assert back == list(seg), (case, seg, out, back)
            assert min(out) >= 0
    big = 10**30
    assert metawhit.local_transition("a2", [big, 0, big]) == [0, big, 0]


def check_gauss():
    ctx = metawhit.GaussContext(13, 3)
    for a in (1, 2):
        assert abs(abs(ctx.gauss_sum(a, -1)) - 13**0.5) < 1e-9
        assert abs(ctx.gauss_sum(a, 0)) < 1e-9
    assert abs(ctx.gauss_sum(0, 0) - 12) < 1e-9
    assert abs(ctx.chi(ctx.generator) - cmath.exp(2j * cmath.pi / 3)) < 1e-12
    try:
        metawhit.GaussContext(9, 2)
    except ValueError:
        pass
    else:
        raise AssertionError("composite modulus accepted")


def check_padic():
    assert metawhit.iwasawa_cell(1, 5, -2, [[1, 0, 0, 0]]) == [2]
    assert metawhit.iwasawa_cell(1, 5, -2, [[0, 0, 3, 0]]) == [0]
    x = [0.4 + 0.1j]
    got, want, reps = metawhit.integrate_cell([1], [1], 5, 2, x)
    assert reps == 4 and abs(got - want) < 1e-9, (got, want, reps)
    try:
        metawhit.integrate_cell([2], [3], 5, 2, x, max_depth=1)
    except metawhit.ResourceLimitError:
        pass
    else:
        raise AssertionError("depth limit not reported")


def check_cli_schema():
    binary = ROOT / "target" / "debug" / "metawhit"
    if not binary.exists():
        print("skip cli schema: binary not built")
        return
    import jsonschema

    schema = json.loads((ROOT / "schema" / "output.schema.json").read_text())
    for args in (
        ["whittaker", "-r", "2", "-n", "2", "--lambda", "1,0"],
        ["gk", "-r", "2", "-n", "2", "-D", "3"],
        ["transition", "--case", "b2", "--m", "1,2,3,4"],
        ["integrate", "-r", "1", "-n", "2", "--lambda", "1"],
    ):
        out = subprocess.run([str(binary), *args], check=True, capture_output=True)
        jsonschema.validate(json.loads(out.stdout), schema)


def main():
    checks = [check_rank_one, check_comparisons, check_crystal_counts, check_transitions, check_gauss, check_padic, check_cli_schema]
    for check in checks:
        check()
        print("ok", check.__name__)
    return 0


if __name__ == "__main__":
    sys.exit(main())
