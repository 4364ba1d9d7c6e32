import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conefan.arith import matvec
from conefan.bmap import (
    BMapError,
    OutsideDomainError,
    RangeContainmentError,
    bmap_eval,
    compose,
    format_bmap,
    identity_bmap,
    image_cones,
    image_fan,
    linearizing_fan,
    make_bmap,
    parse_bmap,
    zeroset_fan,
)
from conefan.fan import cone_new, fan_from_max_cones, fan_validate, orthant_fan
from conefan.sampling import random_point, random_term
from conefan.terms import eval_term, parse_term

from oracles import grid, in_positive_hull, random_in_cone


def terms_of(text, m):
    return [parse_term(t, m) for t in text.split(",")]


def assert_linear_per_cone(b, terms, rng, k=100):
    for c, mat in b.pieces():
        for _ in range(k):
            x = random_in_cone(rng, c.generators) if c.generators else (0,) * b.source_dim
            assert tuple(eval_term(t, x) for t in terms) == matvec(mat, x)


def test_linearizing_fan_of_x1():
    b = linearizing_fan(terms_of("x1", 1), 1)
    assert [c.generators for c in b.domain_fan.cones] == [((-1,),), ((1,),)]
    assert b.matrices == (((1,),), ((1,),))


def test_linearizing_fan_of_join():
    ts = terms_of("x1 v x2", 2)
    b = linearizing_fan(ts, 2)
    assert fan_validate(b.domain_fan) is None and b.domain_fan.is_regular()
    assert {m[0] for m in b.matrices} == {(1, 0), (0, 1)}
    assert_linear_per_cone(b, ts, random.Random(0))


def test_linearizing_fan_of_identity():
    b = linearizing_fan(terms_of("x1,x2", 2), 2)
    assert all(m == ((1, 0), (0, 1)) for m in b.matrices)


def test_linearizing_rejects_bad_arity():
    with pytest.raises(BMapError):
        linearizing_fan([parse_term("x3", 3)], 2)
    with pytest.raises(BMapError):
        linearizing_fan([], 2)


def test_bmap_eval_examples():
    assert bmap_eval(identity_bmap(2), (2, Fraction(-3, 2))) == (2, Fraction(-3, 2))
    b = linearizing_fan(terms_of("x1 v x2, x1 ^ x2", 2), 2)
    assert bmap_eval(b, (3, 5)) == (5, 3)
    half = fan_from_max_cones(2, [cone_new(2, [(1, 0), (0, 1)]), cone_new(2, [(-1, 0), (0, 1)])])
    h = make_bmap(half, [((1, 0), (0, 1))] * 2, 2)
    assert h((1, 1)) == (1, 1)
    with pytest.raises(OutsideDomainError):
        bmap_eval(h, (0, -1))


def test_make_bmap_checks_compatibility():
    q = orthant_fan(2)
    mats = [((1, 0), (0, 1))] * 3 + [((2, 0), (0, 1))]
    with pytest.raises(BMapError, match="disagree"):
        make_bmap(q, mats, 2)


def grid_check_zeroset(t, m, steps):
    z = zeroset_fan(t, m)
    assert fan_validate(z) is None and z.is_regular()
    for x in grid(m, steps):
        assert (eval_term(t, x) == 0) == z.contains(x), x
    return z


def test_zeroset_examples():
    z = grid_check_zeroset(parse_term("x1 - x1", 2), 2, 41)
    assert [c.dim for c in z.cones] == [2] * len(z.cones)
    z = grid_check_zeroset(parse_term("x1 v -x1", 2), 2, 41)
    assert z.rays == [(0, -1), (0, 1)] and all(c.dim == 1 for c in z.cones)
    z = grid_check_zeroset(parse_term("(x1 v -x1) ^ (x2 v -x2)", 2), 2, 41)
    assert z.rays == [(-1, 0), (0, -1), (0, 1), (1, 0)] and all(c.dim == 1 for c in z.cones)


def test_zeroset_of_nonvanishing_term_is_origin():
    z = zeroset_fan(parse_term("(x1 v -x1) + (x2 v -x2)", 2), 2)
    assert [c.generators for c in z.cones] == [()]


def forward_backward(b, f, rng, k):
    for _ in range(k):
        x = random_point(rng, b.source_dim)
        assert f.contains(bmap_eval(b, x))
    imgs = image_cones(b)
    for _ in range(k):
        c = rng.choice(f.cones)
        if not c.generators:
            continue
        y = random_in_cone(rng, c.generators)
        assert any(in_positive_hull(g, y) is not None for g in imgs if g) or not any(y)


def test_image_fan_examples():
    rng = random.Random(1)
    b = linearizing_fan(terms_of("x1,x2", 2), 2)
    assert image_fan(b) == orthant_fan(2)
    f = image_fan(linearizing_fan(terms_of("x1 v -x1", 1), 1))
    assert [c.generators for c in f.cones] == [((1,),)]
    b = linearizing_fan(terms_of("x1 v x2, x1 ^ x2", 2), 2)
    f = image_fan(b)
    assert f.is_regular() and fan_validate(f) is None
    assert f.contains((1, 0)) and f.contains((1, 1)) and not f.contains((0, 1))
    forward_backward(b, f, rng, 300)


def test_compose_examples():
    rng = random.Random(2)
    ab = linearizing_fan(terms_of("x1 v -x1", 1), 1)
    twice = compose(ab, ab)
    for _ in range(50):
        x = random_point(rng, 1)
        assert twice(x) == (abs(x[0]),)
    b = linearizing_fan(terms_of("x1 v x2, x1 - x2", 2), 2)
    c = compose(identity_bmap(2), b)
    for _ in range(100):
        x = random_point(rng, 2)
        assert c(x) == b(x)
    half = fan_from_max_cones(1, [cone_new(1, [(1,)])])
    pos_only = make_bmap(half, [((1,),)], 1)
    with pytest.raises(RangeContainmentError) as err:
        compose(pos_only, linearizing_fan(terms_of("x1", 1), 1))
    assert err.value.point[0] < 0


def test_compose_dimension_mismatch():
    with pytest.raises(BMapError):
        compose(identity_bmap(3), identity_bmap(2))


def test_bmap_text_round_trip():
    b = linearizing_fan(terms_of("x1 v x2, x2", 2), 2)
    text = format_bmap(b)
    assert "matrix" in text
    back = parse_bmap(text)
    assert back == b


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_linearization_soundness(seed):
    rng = random.Random(seed)
    m = rng.randint(1, 3)
    ts = [random_term(rng, m, 5) for _ in range(rng.randint(1, 2))]
    b = linearizing_fan(ts, m)
    assert fan_validate(b.domain_fan) is None and b.domain_fan.is_regular()
    assert_linear_per_cone(b, ts, rng, k=20)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6))
def test_zeroset_soundness(seed):
    rng = random.Random(seed)
    m = rng.randint(1, 3)
    t = random_term(rng, m, 5)
    z = zeroset_fan(t, m)
    assert fan_validate(z) is None and z.is_regular()
    for x in grid(m, 9):
        assert (eval_term(t, x) == 0) == z.contains(x)
    for _ in range(200):
        x = random_point(rng, m, 3, 3)
        assert (eval_term(t, x) == 0) == z.contains(x)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6))
def test_image_soundness(seed):
    rng = random.Random(seed)
    m, n = rng.randint(1, 3), rng.randint(1, 3)
    ts = [random_term(rng, m, 4) for _ in range(n)]
    b = linearizing_fan(ts, m)
    f = image_fan(b)
    assert fan_validate(f) is None and f.is_regular()
    forward_backward(b, f, rng, 100)
