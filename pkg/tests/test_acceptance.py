"""Exit criteria. Each test is one criterion; the terminal summary lists them."""

import io
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from intfrustum.cli import main
from intfrustum.diophantine import (
    enumerate_three_squares,
    enumerate_two_square,
    find_params_for,
    three_squares_from_params,
    two_square_from_params,
    TwoSquareParams,
)
from intfrustum.exactmath import gcd
from intfrustum.families import Prop2Seed, Prop3Seed, build_prop2, build_prop3, prop2_admissible
from intfrustum.frustum import validate, volume, volume_via_apex, volume_via_offsets
from intfrustum.search import SearchBounds, brute_force_oracle, cross_check, enumerate_integral

from oracles import three_squares_double_loop, two_square_triple_loop

criterion = pytest.mark.criterion


@criterion("worked instance 1: verify 15 5 3 1 3 7 -> integral, volume 93, < 1 ms")
def test_worked_instance_verify():
    out = io.StringIO()
    assert main(["verify", "15", "5", "3", "1", "3", "7"], out=out, err=io.StringIO()) == 0
    assert "volume = 93\n" in out.getvalue()

    report = validate((15, 5, 3, 1, 3, 7))
    assert report.overall_valid and report.overall_integral
    assert report.derived.volume == Fraction(93)

    best = min(_timed(validate, (15, 5, 3, 1, 3, 7)) for _ in range(50))
    assert best < 1e-3

    oracle = {r.frustum.dims: r.derived.volume for r in brute_force_oracle(SearchBounds(7, 1))}
    assert oracle[(15, 5, 3, 1, 3, 7)] == 93


@criterion("worked instance 2: prop2 (l,m,D)=(3,1,1) -> (18,6,6,2,9,11), volume 468")
def test_worked_instance_prop2():
    rec = build_prop2(Prop2Seed(3, 1, 1))
    assert rec.frustum.dims == (18, 6, 6, 2, 9, 11)
    assert rec.derived.volume == Fraction(468)
    assert rec.derived.is_integral and not rec.derived.is_square


@criterion("worked instance 3: prop3 (1,1,1,1) -> 31/3 not integral; (1,3,1,1) -> 183 integral")
def test_worked_instance_prop3():
    bad = build_prop3(Prop3Seed(c=1, D=1, m=1, n=1))
    assert bad.derived.volume == Fraction(31, 3) and not bad.derived.is_integral
    good = build_prop3(Prop3Seed(c=1, D=3, m=1, n=1))
    assert good.derived.volume == Fraction(183) and good.derived.is_integral


@criterion("formula equivalence over enumerate_integral(30, 30), < 10 s")
def test_formula_equivalence():
    start = time.perf_counter()
    recs = enumerate_integral(SearchBounds(30, 30))
    assert recs
    for rec in recs:
        f = rec.frustum
        v8 = volume(f.a, f.c, f.d, f.H)
        assert v8 == volume_via_apex(f.a, f.b, f.c, f.d, f.H)
        assert v8 == volume_via_offsets(f.x, f.y, f.d, f.H)
    assert time.perf_counter() - start < 10


@criterion("integrality iff 3 | H*y*x over all geometric tuples with t <= 30, d <= 30")
def test_integrality_iff():
    recs = enumerate_integral(SearchBounds(30, 30), integral_only=False)
    exceptions = [
        r.frustum.dims
        for r in recs
        if (r.derived.volume.denominator == 1) != ((r.frustum.H * r.derived.y * r.derived.x) % 3 == 0)
    ]
    assert exceptions == []
    assert any(r.derived.is_integral for r in recs) and any(not r.derived.is_integral for r in recs)


@criterion("oracle equivalence: cross_check(15,15) and cross_check(25,25) clean, < 60 s")
def test_oracle_equivalence():
    start = time.perf_counter()
    for t_max in (15, 25):
        report = cross_check(SearchBounds(t_max, t_max))
        assert report.mismatches == []
        assert report.count_conditional == report.count_oracle > 0
    assert time.perf_counter() - start < 60


@criterion("three-squares completeness to t = 60, count matches double-loop oracle, < 5 s")
def test_three_squares_completeness():
    start = time.perf_counter()
    sols = enumerate_three_squares(60)
    assert len(sols) == len(three_squares_double_loop(60))
    for s in sols:
        w = find_params_for(s)
        out = three_squares_from_params(w.params)
        assert out.t == s.t and [s.legs()[i] for i in w.perm] == list(out.legs())
    assert time.perf_counter() - start < 5


@criterion("two-square completeness to Z = 200 via (delta, m, n), < 5 s")
def test_two_square_completeness():
    start = time.perf_counter()
    sols = [s.as_tuple() for s in enumerate_two_square(200)]
    assert sols == sorted(two_square_triple_loop(200), key=lambda s: (s[2], s[1], s[0]))
    reachable = set()
    for m in range(1, 15):
        for n in range(1, 11):
            base = m * m + 2 * n * n
            if gcd(m, n) != 1 or base > 200:
                continue
            for delta in range(1, 200 // base + 1):
                reachable.add(two_square_from_params(TwoSquareParams(delta, m, n)).as_tuple())
    assert set(sols) <= reachable
    assert time.perf_counter() - start < 5


@criterion("structural: gcd(a,b) >= 2, no x = y = z, mod-3 case split for l <= 50")
def test_structural_properties():
    for rec in enumerate_integral(SearchBounds(30, 30)):
        assert gcd(rec.frustum.a, rec.frustum.b) >= 2
    for s in enumerate_three_squares(60):
        assert not (s.x == s.y == s.z)
    admissible = 0
    for l in range(2, 51):
        for m in range(1, l):
            r = prop2_admissible(l, m)
            if not r.admissible:
                continue
            admissible += 1
            if l % 3 == 0:
                assert (m + r.v) % 3 == 0 and m % 3 != 0 and r.v % 3 != 0
            else:
                assert m % 3 == 0 and r.v % 3 == 0
    assert admissible > 0


@criterion("determinism: enumerate --t-max 20 --d-max 20 byte-identical across thread counts")
def test_determinism():
    outputs = []
    for threads in ("1", "4"):
        proc = subprocess.run(
            [sys.executable, "-m", "intfrustum", "enumerate", "--t-max", "20", "--d-max", "20", "--threads", threads],
            capture_output=True,
            check=True,
        )
        outputs.append(proc.stdout)
    assert outputs[0] == outputs[1] and outputs[0]


def _timed(fn, *args):
    start = time.perf_counter()
    fn(*args)
    return time.perf_counter() - start
