"""Cyclic code construction, BCH bound, distance engine, weights."""

import numpy as np
import pytest

from dickson_codes.cyclic import (DistanceConfig, bch_lower_bound,
                                  code_from_generator, code_from_sequence,
                                  even_like_subcode, minimum_distance,
                                  parity_matrix_from_roots, row_space_rref,
                                  weight_distribution)
from dickson_codes.dickson import DicksonSpec
from dickson_codes.galois import ZERO
from dickson_codes.lfsr import PeriodicSequence, defining_sequence
from dickson_codes.polyring import Poly, minimal_polynomial
from dickson_codes.registry import default_registry

REG = default_registry()


def build(q, m, kind, h, a_expr, offset=None):
    F = REG.field(q, m)
    a = F.parse_element(a_expr)
    off = F.parse_element(offset) if offset else ZERO
    return code_from_sequence(
        defining_sequence(F, DicksonSpec(kind=kind, h=h, a=a, offset=off)))


def test_code_from_sequence_examples():
    c = build(2, 3, "D", 2, "1")
    assert (c.n, c.k) == (7, 3)
    c2 = build(3, 2, "D", 2, "0")
    assert (c2.n, c2.k) == (8, 3)
    f = REG.field(2, 3)
    z = code_from_sequence(PeriodicSequence(field=f, values=(ZERO,) * 7))
    assert (z.n, z.k) == (7, 7) and z.g == Poly.one(f)


def test_generator_times_parity_is_xn_minus_1():
    for c in [build(2, 4, "D", 3, "1"), build(3, 3, "D", 4, "a"),
              build(9, 2, "D", 5, "1")]:
        assert (c.g * c.h) == Poly.xn_minus_1(c.field, c.n)


def test_code_from_generator():
    f = REG.field(2, 3)
    full = code_from_generator(f, Poly.one(f))
    assert full.k == 7
    even = code_from_generator(f, Poly.from_ints(f, [-1, 1]))
    assert even.k == 6
    assert minimum_distance(even).value == 2
    zero_code = code_from_generator(f, Poly.xn_minus_1(f, 7))
    assert zero_code.k == 0
    with pytest.raises(ValueError):
        code_from_generator(f, Poly.from_ints(f, [1, 0, 1]))  # not a divisor
    with pytest.raises(ValueError):
        code_from_generator(f, Poly.from_ints(f, [1, 1]).scale(ZERO))


def test_bch_bound_examples():
    # D_3, q=2, m=5, a != 0 with delta(1+a) = 0: reciprocal roots 1..4 -> 5
    f32 = REG.field(2, 5)
    c = build(2, 5, "D", 3, "a^3")  # row [31,21,5]: delta = 0 case
    assert c.k == 21
    assert bch_lower_bound(c) == 5
    # D_5, q=2, m=5, full case with delta(1)=1: g has (x-1) too -> 8
    g = Poly.from_ints(f32, [-1, 1])
    for j in (1, 3, 5):
        g = g * minimal_polynomial(f32, f32.inv(j))
    c2 = code_from_generator(f32, g.monic())
    assert bch_lower_bound(c2) == 8
    # g = x - 1 -> bound 2
    c3 = code_from_generator(f32, Poly.from_ints(f32, [-1, 1]))
    assert bch_lower_bound(c3) == 2
    # g = 1 -> full space, bound 1
    assert bch_lower_bound(code_from_generator(f32, Poly.one(f32))) == 1


def test_minimum_distance_examples():
    d1 = minimum_distance(build(2, 3, "D", 2, "1"))
    assert (d1.value, d1.exact) == (4, True)
    d2 = minimum_distance(build(2, 4, "D", 3, "1"))
    assert (d2.value, d2.exact) == (5, True)
    # D_4(x,1), q=3, m=3: weight-2 codeword 2 + x^{(3^3-1)/2}
    c = build(3, 3, "D", 4, "1")
    d3 = minimum_distance(c)
    assert (c.n, c.k, d3.value) == (26, 20, 2)
    witness = np.zeros(26, dtype=np.int16)
    st = c.field.subfield_tables()
    witness[0] = st.scalar_code(2)
    witness[13] = st.scalar_code(1)
    assert c.contains(witness)


def test_minimum_distance_rejects_zero_code():
    f = REG.field(2, 3)
    zero_code = code_from_generator(f, Poly.xn_minus_1(f, 7))
    with pytest.raises(ValueError):
        minimum_distance(zero_code)


def test_weight_distribution_examples():
    c = build(2, 3, "D", 2, "1")
    assert weight_distribution(c) == {0: 1, 4: 7}
    f = REG.field(2, 2)
    full = code_from_generator(f, Poly.one(f))
    assert weight_distribution(full) == {0: 1, 1: 3, 2: 3, 3: 1}


def test_reciprocal_code_same_weight_distribution():
    # C and its reciprocal share the weight distribution (D_3, q=2, m=4, a=1)
    from dickson_codes.polyring import reciprocal

    c = build(2, 4, "D", 3, "1")
    rec = code_from_generator(c.field, reciprocal(c.g))
    assert weight_distribution(c) == weight_distribution(rec)


def test_even_like_subcode():
    f = REG.field(2, 3)
    ham = code_from_generator(f, Poly.from_ints(f, [1, 1, 0, 1]))
    assert minimum_distance(ham).value == 3
    sub = even_like_subcode(ham)
    assert (sub.n, sub.k) == (7, 3)
    assert minimum_distance(sub).value == 4
    assert even_like_subcode(sub) is sub  # idempotent
    # full space -> sum-zero code with d = 2
    full = code_from_generator(f, Poly.one(f))
    sums = even_like_subcode(full)
    assert sums.k == 6 and minimum_distance(sums).value == 2


def test_even_like_coordinate_sums_vanish():
    for c in [build(3, 2, "D", 2, "alpha"), build(4, 2, "D", 3, "a")]:
        sub = even_like_subcode(c)
        st = sub.field.subfield_tables()
        if sub.q**sub.k <= 1 << 12:
            from dickson_codes.cyclic import _exhaustive_batches

            for _, cw, digit_to_code, pack in _exhaustive_batches(sub):
                codes = digit_to_code[cw @ pack]
                acc = np.zeros(len(codes), dtype=np.uint8)
                for j in range(sub.n):
                    acc = st.add[acc, codes[:, j]]
                assert not acc.any()


def test_even_like_random_codewords_big_code():
    # non-enumerable code: 1000 random codewords must all sum to zero
    import random

    c = build(2, 6, "D", 3, "a^3")
    sub = even_like_subcode(c)
    assert sub.q**sub.k > 1 << 22
    st = sub.field.subfield_tables()
    G = sub.generator_matrix()
    rng = random.Random(42)
    for _ in range(1000):
        cw = np.zeros(sub.n, dtype=np.uint8)
        for i in range(sub.k):
            m = rng.randrange(sub.q)
            if m:
                cw = st.add[cw, st.mul[m, G[i]]]
        acc = 0
        for j in range(sub.n):
            acc = st.add[acc, cw[j]]
        assert acc == 0


def test_odd_even_distance_consistency():
    # where (x-1) does not divide g: d = min(even-like d, min odd-like weight)
    for c in [build(2, 4, "D", 3, "1"), build(3, 2, "D", 2, "-1")]:
        assert c.g(c.field.one) != ZERO
        st = c.field.subfield_tables()
        from dickson_codes.cyclic import _exhaustive_batches

        d_even = None
        d_odd = None
        for weights, cw, digit_to_code, pack in _exhaustive_batches(c):
            codes = digit_to_code[cw @ pack]
            acc = np.zeros(len(codes), dtype=np.uint8)
            for j in range(c.n):
                acc = st.add[acc, codes[:, j]]
            for w, s in zip(weights, acc):
                if w == 0:
                    continue
                if s == 0:
                    d_even = w if d_even is None else min(d_even, w)
                else:
                    d_odd = w if d_odd is None else min(d_odd, w)
        d = minimum_distance(c).value
        assert d == min(x for x in (d_even, d_odd) if x is not None)
        assert d_even == minimum_distance(even_like_subcode(c)).value


def test_mitm_equals_exhaustive_small_codes():
    cases = [(2, 4, "D", 3, "a^3"), (2, 4, "D", 3, "1"), (2, 4, "E", 5, "a"),
             (3, 2, "D", 4, "a"), (3, 2, "D", 5, "1"), (2, 5, "D", 11, "a"),
             (4, 2, "D", 7, "a"), (4, 2, "D", 11, "1")]
    for q, m, kind, h, a in cases:
        c1 = build(q, m, kind, h, a)
        if c1.k == 0 or c1.q**c1.k > 1 << 16:
            continue
        c2 = build(q, m, kind, h, a)
        d_ex = minimum_distance(c1, DistanceConfig())
        d_mitm = minimum_distance(
            c2, DistanceConfig(isd_iterations=0, full_enum_limit=1))
        assert d_mitm.exact and d_ex.value == d_mitm.value, (q, m, kind, h, a)
        assert bch_lower_bound(c1) <= d_ex.value


def test_mitm_witness_is_verified_codeword():
    c = build(2, 7, "D", 5, "0")  # [127,119,4], BCH bound 2
    d = minimum_distance(c, DistanceConfig())
    assert d.exact and d.value == 4
    assert d.witness is not None
    vec = np.array(d.witness, dtype=np.int16)
    assert int(np.count_nonzero(vec)) == 4
    assert c.contains(vec)


def test_parity_check_constructions_agree():
    for c in [build(2, 4, "D", 3, "1"), build(3, 2, "D", 2, "alpha"),
              build(4, 2, "D", 3, "a"), build(9, 1, "D", 2, "1")]:
        st = c.field.subfield_tables()
        h1 = row_space_rref(c.parity_check_matrix(), st)
        h2 = row_space_rref(parity_matrix_from_roots(c), st)
        assert np.array_equal(h1, h2)


def test_hard_rows_resolve_exactly():
    # BCH-tight rows certified by witness search alone
    c = build(5, 3, "D", 11, "1")
    d = minimum_distance(c, DistanceConfig())
    assert (c.n, c.k, d.value, d.exact) == (124, 96, 13, True)
    assert d.method == "bch+witness"
    assert bch_lower_bound(c) == 13


def test_distance_unresolved_reports_bound():
    # with all search stages disabled the engine must not overclaim
    c = build(2, 7, "D", 5, "0")
    d = minimum_distance(c, DistanceConfig(isd_iterations=0, w_max=3,
                                           full_enum_limit=1))
    assert not d.exact
    assert d.method == "bch-only"
    assert d.value == 4  # weights 2..3 ruled out by completed sweeps


def test_worker_count_does_not_change_results():
    from dickson_codes.verify import run_table

    r1 = run_table("E", workers=1)
    r2 = run_table("E", workers=3)
    assert [(r.status, r.computed_d) for r in r1.rows] \
        == [(r.status, r.computed_d) for r in r2.rows]
