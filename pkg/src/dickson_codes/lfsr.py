"""Trace-defined periodic sequences and their minimal polynomials.

A sequence is generated as s_i = Tr(f(alpha^i + 1)) for i = 0..n-1, with f
a Dickson polynomial (plus optional offset).  The minimal polynomial and
linear span are computed by two independent routes:

* the gcd formula M = (x^n - 1) / gcd(x^n - 1, S(x)), and
* the spectral expansion s_t = sum_j c_j alpha^{jt}, whose nonzero support
  I gives M = prod_{i in I} (x - alpha^{-i}).

Both are normalized monic so they can be compared verbatim; the pipeline
asserts their agreement on every sequence it processes.

The inverse transform uses c_j = -sum_t s_t alpha^{-jt}: the global factor
is -1 because n = q^m - 1 is -1 mod p.  Rather than trusting the sign, the
spectrum routine re-synthesizes the sequence from its coefficients and
refuses to return on any mismatch.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from . import _codes
from .dickson import DicksonSpec, dickson_poly
from .galois import Field, ZERO
from .polyring import Poly


@dataclass(frozen=True)
class PeriodicSequence:
    """One period s_0..s_{n-1} of GF(q) values (embedded logs)."""

    field: Field
    values: tuple[int, ...]
    provenance: DicksonSpec | None = dc_field(default=None, compare=False)

    def __post_init__(self):
        if len(self.values) != self.field.n:
            raise ValueError(
                f"sequence length {len(self.values)} != n = {self.field.n}")
        for v in self.values:
            if not self.field.in_subfield(v):
                raise ValueError("sequence value outside the GF(q) subfield")

    @property
    def n(self) -> int:
        return len(self.values)

    def is_zero(self) -> bool:
        return all(v == ZERO for v in self.values)

    def symbol_string(self) -> str:
        return " ".join(self.field.format_element(v) for v in self.values)


@dataclass(frozen=True)
class Spectrum:
    """DFT coefficients c_0..c_{n-1} with support set I = {i : c_i != 0}."""

    field: Field
    coeffs: tuple[int, ...]
    support: tuple[int, ...]


@dataclass(frozen=True)
class MinimalPolyResult:
    poly: Poly
    linear_span: int
    method: str


def defining_sequence(field: Field, spec: DicksonSpec) -> PeriodicSequence:
    """s_i = Tr(f(alpha^i + 1)) for the Dickson polynomial of `spec`."""
    f = dickson_poly(spec, field)
    values = []
    for i in range(field.n):
        point = field.add(i % (field.r - 1), field.one)
        values.append(field.trace(f(point)))
    return PeriodicSequence(field=field, values=tuple(values), provenance=spec)


def sequence_poly(s: PeriodicSequence) -> Poly:
    """S(x) = s_0 + s_1 x + ... + s_{n-1} x^{n-1}."""
    return Poly(s.field, s.values)


def minimal_poly_gcd(s: PeriodicSequence) -> MinimalPolyResult:
    """Minimal polynomial via M = (x^n - 1)/gcd(x^n - 1, S(x))."""
    F = s.field
    n = F.n
    st = F.subfield_tables()
    s_codes = st.codes_of_logs(s.values).astype(np.int16)
    xn1 = np.zeros(n + 1, dtype=np.int16)
    xn1[0] = st.neg[st.scalar_code(1)]
    xn1[n] = st.scalar_code(1)
    g = _codes.codes_gcd(xn1, s_codes, st)
    quot, rem = _codes.codes_divmod(xn1, g, st)
    if len(rem):
        raise AssertionError("gcd does not divide x^n - 1")
    if len(quot):
        quot = quot.copy()
        quot[:] = st.mul[st.inv[quot[-1]], quot]
    m_poly = _codes.codes_to_poly(quot, st)
    span = n - (len(g) - 1)
    _check_recurrence(s_codes, quot, st)
    return MinimalPolyResult(poly=m_poly, linear_span=span, method="gcd")


def _check_recurrence(s_codes: np.ndarray, m_codes: np.ndarray,
                      st) -> None:
    """The recurrence from M must annihilate s over a full period.

    With M the monic quotient (x^n-1)/gcd(x^n-1, S), the annihilation
    identity is the cyclic convolution S(x)M(x) = 0 mod x^n - 1, i.e. the
    backward form sum_j m_j s_{i-j} = 0 for every i (wrap-around
    included).
    """
    span = len(m_codes) - 1
    if span == 0:
        if np.any(s_codes):
            raise AssertionError("M = 1 but the sequence is nonzero")
        return
    acc = np.zeros(len(s_codes), dtype=np.int16)
    for j, cj in enumerate(m_codes):
        if cj == 0:
            continue
        acc = st.add[acc, st.mul[cj, np.roll(s_codes, j)]].astype(np.int16)
    if np.any(acc):
        raise AssertionError("minimal polynomial recurrence fails on the sequence")


def spectrum(s: PeriodicSequence) -> Spectrum:
    """Spectral coefficients with the reconstruction identity verified."""
    F = s.field
    n = F.n
    vt = F.vec_tables()
    p, deg = F.p, F.ext_deg
    s_logs = np.array(s.values, dtype=np.int64)
    t_idx = np.nonzero(s_logs != ZERO)[0]
    if len(t_idx) == 0:
        return Spectrum(field=F, coeffs=(ZERO,) * n, support=())
    j = np.arange(n, dtype=np.int64)
    # exponent of alpha in s_t * alpha^{-jt}
    prod_logs = (s_logs[t_idx][None, :] - j[:, None] * t_idx[None, :]) % n
    digit_sum = np.zeros((n, deg), dtype=np.int64)
    # sum digit vectors over t in chunks to bound memory
    chunk = max(1, (1 << 22) // (n * deg + 1))
    for lo in range(0, len(t_idx), chunk):
        block = vt.exp_vec[prod_logs[:, lo : lo + chunk]]
        digit_sum += block.sum(axis=1, dtype=np.int64)
    c_vecs = (-digit_sum) % p
    c_logs = vt.logs_of_vecs(c_vecs)
    support = tuple(int(i) for i in np.nonzero(c_logs != ZERO)[0])

    # reconstruction: s_t = sum_j c_j alpha^{jt}
    sup = np.array(support, dtype=np.int64)
    if len(sup) == 0:
        recon_ok = not np.any(s_logs != ZERO)
    else:
        t = np.arange(n, dtype=np.int64)
        rec_logs = (c_logs[sup][None, :] + t[:, None] * sup[None, :]) % n
        rec_sum = np.zeros((n, deg), dtype=np.int64)
        chunk = max(1, (1 << 22) // (n * deg + 1))
        for lo in range(0, len(sup), chunk):
            block = vt.exp_vec[rec_logs[:, lo : lo + chunk]]
            rec_sum += block.sum(axis=1, dtype=np.int64)
        rec = vt.logs_of_vecs(rec_sum % p)
        recon_ok = np.array_equal(rec, s_logs)
    if not recon_ok:
        raise AssertionError("spectrum reconstruction identity failed")
    return Spectrum(field=F, coeffs=tuple(int(c) for c in c_logs), support=support)


def minimal_poly_dft(s: PeriodicSequence) -> MinimalPolyResult:
    """Minimal polynomial as prod_{i in I}(x - alpha^{-i}), monic."""
    F = s.field
    spec = spectrum(s)
    roots = [(-i) % F.n for i in spec.support]
    m_poly = _poly_from_roots(F, roots)
    if not m_poly.in_subfield():
        raise AssertionError("spectral minimal polynomial leaves GF(q)")
    return MinimalPolyResult(poly=m_poly, linear_span=len(spec.support),
                             method="dft")


def _poly_from_roots(F: Field, roots) -> Poly:
    """prod (x - alpha^j) via vectorized coefficient updates."""
    vt = F.vec_tables()
    p, n = F.p, F.n
    coeffs = np.array([0], dtype=np.int64)  # the unit polynomial
    for root in roots:
        shifted = np.concatenate(([np.int64(ZERO)], coeffs))
        scaled = np.where(coeffs != ZERO, (coeffs + root) % n, ZERO)
        scaled = np.concatenate((scaled, [np.int64(ZERO)]))
        diff = (vt.vecs_of_logs(shifted).astype(np.int64)
                - vt.vecs_of_logs(scaled)) % p
        coeffs = vt.logs_of_vecs(diff)
    return Poly(F, [int(c) for c in coeffs])
