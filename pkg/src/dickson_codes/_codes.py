"""Internal fast path: polynomials over GF(q) as numpy arrays of compact
subfield codes (0..q-1), constant term first.

Used by the sequence minimal-polynomial gcd and the distance engine; the
public polynomial type stays :class:`dickson_codes.polyring.Poly`.
"""

from __future__ import annotations

import numpy as np

from .galois import SubfieldTables
from .polyring import Poly


def sub_table(st: SubfieldTables) -> np.ndarray:
    """sub[x, y] = x - y on codes (cached on the tables object)."""
    cached = getattr(st, "_sub_table", None)
    if cached is None:
        cached = st.add[:, st.neg]
        st._sub_table = cached
    return cached


def poly_to_codes(poly: Poly, st: SubfieldTables) -> np.ndarray:
    return np.array([st.code_of_log(c) for c in poly.coeffs], dtype=np.int16)


def codes_to_poly(codes: np.ndarray, st: SubfieldTables) -> Poly:
    logs = [int(st.code_to_log[int(c)]) for c in codes]
    return Poly(st.field, logs)


def trim(a: np.ndarray) -> np.ndarray:
    nz = np.nonzero(a)[0]
    if len(nz) == 0:
        return a[:0]
    return a[: nz[-1] + 1]


def codes_mod(a: np.ndarray, b: np.ndarray, st: SubfieldTables) -> np.ndarray:
    """Remainder of a modulo b (b nonzero), in place on a copy."""
    b = trim(b)
    if len(b) == 0:
        raise ZeroDivisionError("polynomial division by zero")
    a = trim(a).copy()
    sub = sub_table(st)
    db = len(b) - 1
    lead_inv = st.inv[b[-1]]
    while len(a) - 1 >= db and len(a) > 0:
        f = st.mul[lead_inv, a[-1]]
        k = len(a) - 1 - db
        if f:
            a[k : k + db + 1] = sub[a[k : k + db + 1], st.mul[f, b]]
        a = trim(a[:-1])
    return a


def codes_divmod(a: np.ndarray, b: np.ndarray, st: SubfieldTables):
    b = trim(b)
    if len(b) == 0:
        raise ZeroDivisionError("polynomial division by zero")
    a = trim(a).copy()
    sub = sub_table(st)
    db = len(b) - 1
    if len(a) - 1 < db:
        return a[:0], a
    lead_inv = st.inv[b[-1]]
    quot = np.zeros(len(a) - db, dtype=np.int16)
    for k in range(len(a) - 1 - db, -1, -1):
        f = st.mul[lead_inv, a[k + db]]
        if f:
            quot[k] = f
            a[k : k + db + 1] = sub[a[k : k + db + 1], st.mul[f, b]]
    return quot, trim(a)


def codes_gcd(a: np.ndarray, b: np.ndarray, st: SubfieldTables) -> np.ndarray:
    """Monic gcd on code arrays; gcd(0, g) = monic(g)."""
    a, b = trim(a), trim(b)
    while len(b):
        a, b = b, codes_mod(a, b, st)
    a = a.copy()
    if len(a):
        a[:] = st.mul[st.inv[a[-1]], a]
    return a
