"""The ten numbered acceptance criteria, each at its stated size and time
limit. Every criterion records one PASS/FAIL line, printed at the end of the
pytest run (or directly when this file is run as a script)."""

import io
import json
import random
import sys
import time
from pathlib import Path

import pytest

from conefan.arith import matvec
from conefan.bmap import bmap_eval, compose, image_fan, linearizing_fan, make_bmap, zeroset_fan
from conefan.cli import run
from conefan.combinat import (
    BUDGET_EXHAUSTED,
    abstract_complex,
    check_free_basis,
    complex_isomorphic,
    decide_free,
    search_certificate,
    support_dimension_obstruction,
    synthesize_bhomeo,
    verify_bhomeo,
)
from conefan.fan import (
    cone_new,
    desingularize,
    fan_from_max_cones,
    fan_validate,
    orthant_fan,
    support_covers_space,
)
from conefan.sampling import random_cone, random_fan, random_point, random_term, random_unimodular
from conefan.terms import eval_term, linear_term, parse_term

from oracles import box_parallelepiped, grid, in_positive_hull, random_in_cone
from test_combinat import check_certificate, constructed_pair, mapped

pytestmark = pytest.mark.acceptance

REPORT: dict[int, str] = {}
GOLDEN = Path(__file__).parent / "golden"


def record(n, ok, detail, t0):
    line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}  ({time.perf_counter() - t0:.1f}s)"
    REPORT[n] = line
    print(line)
    assert ok, line


# 1 ------------------------------------------------------------------------


def test_c01_regularity_oracle():
    t0 = time.perf_counter()
    rng = random.Random(1001)
    agree = 0
    for _ in range(500):
        c = random_cone(rng, rng.randint(1, 3), bound=6)
        box = box_parallelepiped(c.generators)
        agree += (c.multiplicity == 1) == (not box)
    dt = time.perf_counter() - t0
    record(1, agree == 500 and dt < 60, f"{agree}/500 cones agree with the box scan", t0)


# 2 ------------------------------------------------------------------------


def test_c02_desingularization():
    t0 = time.perf_counter()
    rng = random.Random(1002)
    bad = []
    for k in range(100):
        f = random_fan(rng, bound=3)
        g = desingularize(f)
        if fan_validate(g) is not None or not g.is_regular():
            bad.append(k)
            continue
        for _ in range(1000):
            x = random_point(rng, f.ambient_dim, bound=3, den=5)
            if rng.random() < 0.5:
                c = rng.choice(f.cones)
                if c.generators:
                    x = random_in_cone(rng, c.generators)
            if f.contains(x) != g.contains(x):
                bad.append(k)
                break
    dt = time.perf_counter() - t0
    record(2, not bad and dt < 300, f"100 fans, bad={bad[:5]}", t0)


# 3 ------------------------------------------------------------------------


def test_c03_zeroset():
    t0 = time.perf_counter()
    rng = random.Random(1003)
    bad = 0
    checked = 0
    for _ in range(20):
        m = rng.randint(1, 3)
        t = random_term(rng, m, 5)
        z = zeroset_fan(t, m)
        for x in grid(m, 21, -2, 2):
            checked += 1
            bad += (eval_term(t, x) == 0) != z.contains(x)
    record(3, bad == 0, f"{checked} grid points, {bad} disagreements", t0)


# 4 ------------------------------------------------------------------------


def preimage(b, images, y, first=0):
    """(index, x) with x in domain cone C_index and M_C x = y, or None.
    Cones are tried starting at ``first``."""
    pieces = list(b.pieces())
    k = len(pieces)
    for i in [(first + j) % k for j in range(k)]:
        c, mat = pieces[i]
        if not c.generators:
            continue
        w = in_positive_hull(images[i], y)
        if w is not None:
            x = tuple(sum(a * g[r] for a, g in zip(w, c.generators)) for r in range(b.source_dim))
            if c.contains(x) and matvec(mat, x) == tuple(y):
                return i, x
    return None


def test_c04_image_fan():
    t0 = time.perf_counter()
    rng = random.Random(1004)
    fwd = back = 0
    for _ in range(20):
        m, n = rng.randint(1, 3), rng.randint(1, 3)
        ts = [random_term(rng, m, 4) for _ in range(n)]
        b = linearizing_fan(ts, m)
        f = image_fan(b)
        for _ in range(5000):
            fwd += not f.contains(bmap_eval(b, random_point(rng, m)))
        images = [[matvec(mat, g) for g in c.generators] for c, mat in b.pieces()]
        cones = [c for c in f.cones if c.generators]
        hint = {}  # image cone -> domain cone that last worked for it
        for _ in range(5000):
            if not cones:
                break
            j = rng.randrange(len(cones))
            y = random_in_cone(rng, cones[j].generators)
            got = preimage(b, images, y, hint.get(j, 0))
            if got is None or bmap_eval(b, got[1]) != y:
                back += 1
            else:
                hint[j] = got[0]
    record(4, fwd == 0 and back == 0, f"forward misses {fwd}, backward misses {back}", t0)


# 5 ------------------------------------------------------------------------


def evidence_ok(v):
    if v.reason == "witness":
        return not v.fan.contains(v.witness) and all(
            in_positive_hull(c.generators, v.witness) is None for c in v.fan.cones if c.generators
        )
    if v.reason == "covers":
        return support_covers_space(v.fan)
    return v.reason == "dimension" and v.n > v.m


def test_c05_decide_free_suite():
    t0 = time.perf_counter()
    fails = []
    for n in range(1, 5):
        v = decide_free([parse_term(f"x{i}", n) for i in range(1, n + 1)], n)
        if not (v.answer and evidence_ok(v)):
            fails.append(f"identity {n}")
    v = decide_free([parse_term("x1 v -x1", 1)], 1)
    if v.answer or v.reason != "witness" or not evidence_ok(v):
        fails.append("abs")
    v = decide_free([parse_term("x1 v x2", 2), parse_term("x1 ^ x2", 2)], 2)
    if v.answer or v.reason != "witness" or not evidence_ok(v):
        fails.append("sort")
    for text, m in [("x1, x2, x1 + x2", 2), ("x1, x1 v -x1", 1), ("x1, x2, x3, x1 ^ x2", 3)]:
        v = decide_free([parse_term(t, m) for t in text.split(",")], m)
        if v.answer or v.reason != "dimension":
            fails.append(text)
    rng = random.Random(1005)
    for k in range(20):
        n = rng.randint(1, 4)
        u = random_unimodular(rng, n, bound=3)
        v = decide_free([linear_term(row) for row in u], n)
        if not (v.answer and evidence_ok(v)):
            fails.append(f"unimodular {u}")
    dt = time.perf_counter() - t0
    record(5, not fails and dt < 120, f"27 verdicts, failures={fails}", t0)


# 6 ------------------------------------------------------------------------


def test_c06_check_free_basis():
    t0 = time.perf_counter()
    got = {}
    same = True
    for text in ["x1 + x2, x2", "x1, x1 v x2"]:
        ts = [parse_term(t, 2) for t in text.split(",")]
        v = check_free_basis(ts)
        got[text] = v.answer
        same &= v == decide_free(ts, 2)
    ok = got == {"x1 + x2, x2": True, "x1, x1 v x2": False} and same
    record(6, ok, f"answers {got}, identical to decide_free: {same}", t0)


# 7, 8 --------------------------------------------------------------------


def unimodular_pairs():
    rng = random.Random(1007)
    out = []
    while len(out) < 20:
        n = rng.randint(2, 3)
        delta = desingularize(random_fan(rng, n, bound=2))
        out.append((delta, mapped(random_unimodular(rng, n, bound=3), delta)))
    return out


def test_c07_round_trip():
    t0 = time.perf_counter()
    rng = random.Random(10071)
    fails = []
    for k, (delta, nabla) in enumerate(unimodular_pairs()):
        iso = complex_isomorphic(abstract_complex(delta), abstract_complex(nabla))
        if iso is None:
            fails.append((k, "iso"))
            continue
        h = synthesize_bhomeo(delta, nabla, iso)
        g = synthesize_bhomeo(nabla, delta, iso.inverse())
        if not verify_bhomeo(h, delta, nabla):
            fails.append((k, "verify"))
            continue
        both = compose(g, h)
        cones = [c for c in delta.cones if c.generators]
        for _ in range(200):
            x = random_in_cone(rng, rng.choice(cones).generators)
            if bmap_eval(both, x) != x:
                fails.append((k, "identity"))
                break
    record(7, not fails, f"20 pairs, failures={fails}", t0)


def test_c08_verify_bhomeo():
    t0 = time.perf_counter()
    line = fan_from_max_cones(1, [cone_new(1, [(1,)]), cone_new(1, [(-1,)])])
    check = verify_bhomeo(make_bmap(line, [((2,),)] * 2, 1), line, line)
    rejects = not check and check.clause == "b"
    accepted = 0
    for delta, nabla in unimodular_pairs():
        iso = complex_isomorphic(abstract_complex(delta), abstract_complex(nabla))
        accepted += bool(iso) and bool(verify_bhomeo(synthesize_bhomeo(delta, nabla, iso), delta, nabla))
    record(8, rejects and accepted == 20, f"2x rejected by clause {check.clause}; {accepted}/20 accepted", t0)


# 9 ------------------------------------------------------------------------


def non_homeomorphic_pairs():
    def fan(n, *cones):
        return fan_from_max_cones(n, [cone_new(n, g) for g in cones])

    quadrant = fan(2, [(1, 0), (0, 1)])
    octant = fan(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    upper = [c for c in orthant_fan(3).cones if c.dim == 3 and (0, 0, 1) in c.generators]
    return [
        ("R^2 vs half-plane", orthant_fan(2), fan(2, [(1, 0), (0, 1)], [(-1, 0), (0, 1)])),
        ("R^2 vs quadrant", orthant_fan(2), quadrant),
        ("quadrant vs two opposite quadrants", quadrant, fan(2, [(1, 0), (0, 1)], [(-1, 0), (0, -1)])),
        ("R^3 vs half-space", orthant_fan(3), fan_from_max_cones(3, upper)),
        ("octant vs R^3", octant, orthant_fan(3)),
    ]


def test_c09_certificate_search():
    t0 = time.perf_counter()
    rng = random.Random(1009)
    found = 0
    for _ in range(10):
        phi, psi = constructed_pair(rng)
        cert = search_certificate(phi, psi, 500)
        if cert is not BUDGET_EXHAUSTED:
            check_certificate(cert, phi, psi)
            found += 1
    exhausted = 0
    for _, a, b in non_homeomorphic_pairs():
        assert not support_dimension_obstruction(a, b)  # "none" would be false here
        exhausted += search_certificate(a, b, 500) is BUDGET_EXHAUSTED
    record(9, found == 10 and exhausted == 5, f"{found}/10 certificates, {exhausted}/5 exhausted", t0)


# 10 -----------------------------------------------------------------------


def test_c10_cli_golden(monkeypatch):
    t0 = time.perf_counter()
    monkeypatch.chdir(GOLDEN)
    cases = json.loads((GOLDEN / "cases.json").read_text())
    same = 0
    for case in cases:
        for fmt in ("text", "json"):
            out = io.StringIO()
            code = run(case["argv"] + ["--format", fmt], stdout=out, stderr=io.StringIO())
            same += f"exit {code}\n{out.getvalue()}" == (GOLDEN / f"{case['name']}.{fmt}").read_text()
    record(10, len(cases) == 15 and same == 30, f"{same}/30 outputs byte-identical", t0)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
