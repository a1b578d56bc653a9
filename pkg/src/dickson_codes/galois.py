"""Finite fields GF(p^(t*m)) with a designated subfield GF(q), q = p^t.

A field is built from a primitive polynomial of degree t*m over the prime
field GF(p).  Elements are represented by their discrete logarithm with
respect to the fixed generator alpha (the residue class of x): the integer
k stands for alpha^k, and the zero element is the sentinel ``ZERO`` (-1).
Multiplication and inversion are integer arithmetic on exponents mod r-1;
addition goes through a precomputed Zech-logarithm table
``zech[k] = log(1 + alpha^k)``.

The designated subfield GF(q) sits inside GF(r) as {0} together with the
powers of alpha^((r-1)/(q-1)).  Codeword symbols and polynomial
coefficients over GF(q) use this embedded representation throughout; the
compact 0..q-1 encoding used by the search kernels lives in
:class:`SubfieldTables`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

#: Discrete-log sentinel for the zero element.
ZERO = -1


class FieldError(ValueError):
    """Raised when a field cannot be constructed as specified."""


@dataclass(frozen=True)
class FieldSpec:
    """Construction data for GF(p^(t*m)) with subfield GF(p^t).

    ``prim_poly`` lists the coefficients of a monic primitive polynomial
    of degree t*m over GF(p), constant term first.
    """

    p: int
    t: int
    m: int
    prim_poly: tuple[int, ...]

    def __post_init__(self):
        if self.p < 2 or not _is_prime(self.p):
            raise FieldError(f"characteristic {self.p} is not prime")
        if self.t < 1 or self.m < 1:
            raise FieldError("extension degrees must be >= 1")
        if self.p ** (self.t * self.m) > 1 << 16:
            raise FieldError("field order exceeds 2^16")
        deg = len(self.prim_poly) - 1
        if deg != self.t * self.m:
            raise FieldError(
                f"prim_poly degree {deg} != t*m = {self.t * self.m}: "
                f"{poly_str(self.prim_poly)}")
        if self.prim_poly[-1] % self.p != 1:
            raise FieldError(f"prim_poly must be monic: {poly_str(self.prim_poly)}")

    @property
    def q(self) -> int:
        return self.p ** self.t

    @property
    def r(self) -> int:
        return self.p ** (self.t * self.m)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, int(math.isqrt(n)) + 1):
        if n % d == 0:
            return False
    return True


def poly_str(coeffs) -> str:
    """Human-readable form of a GF(p) coefficient sequence, constant first."""
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        elif i == 1:
            terms.append("x" if c == 1 else f"{c}x")
        else:
            terms.append(f"x^{i}" if c == 1 else f"{c}x^{i}")
    return " + ".join(terms) if terms else "0"


class Field:
    """GF(r) with r = q^m = p^(t*m), fixed generator alpha, subfield GF(q).

    Elements are ints: ``ZERO`` or a discrete log in [0, r-2].  The tables
    are immutable after construction; all operations are pure reads, so a
    Field may be shared freely across workers.
    """

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.p = spec.p
        self.t = spec.t
        self.m = spec.m
        self.q = spec.q
        self.r = spec.r
        self.n = self.r - 1
        self.prim_poly = spec.prim_poly
        self.ext_deg = spec.t * spec.m
        # Step between consecutive subfield logs; alpha^step generates GF(q)*.
        self.subfield_step = (self.r - 1) // (self.q - 1)
        self._build_tables()
        self._subfield_tables = None
        self._vec = None

    # -- construction ---------------------------------------------------

    def _build_tables(self):
        p, deg, r = self.p, self.ext_deg, self.r
        # Polynomial residues are packed base p, constant digit least
        # significant.  Walking alpha^k for k = 0..r-2 must enumerate every
        # nonzero residue exactly once; any repeat or early return to 1
        # means the modulus is reducible or non-primitive.
        # -leading^{-1} * (lower part of modulus), used to reduce x^deg.
        lead_inv = pow(self.prim_poly[-1] % p, p - 2, p) if p > 2 else 1
        reduce_digits = [(-lead_inv * c) % p for c in self.prim_poly[:-1]]

        exp = [0] * (r - 1)
        log = [ZERO] * r
        val = [0] * deg
        val[0] = 1  # alpha^0 = 1
        for k in range(r - 1):
            code = 0
            for i in range(deg - 1, -1, -1):
                code = code * p + val[i]
            if code == 0 or log[code] != ZERO:
                raise FieldError(
                    f"polynomial {poly_str(self.prim_poly)} over GF({p}) is "
                    "reducible or not primitive")
            exp[k] = code
            log[code] = k
            # multiply val by x and reduce
            lead = val[deg - 1]
            for i in range(deg - 1, 0, -1):
                val[i] = (val[i - 1] + lead * reduce_digits[i]) % p
            val[0] = (lead * reduce_digits[0]) % p
        # alpha^(r-1) must close the cycle back to 1
        if val[0] != 1 or any(val[1:]):
            raise FieldError(
                f"alpha does not have order r-1 for {poly_str(self.prim_poly)}")
        self._exp = exp
        self._log = log

        # Zech table: zech[k] = log(1 + alpha^k), ZERO when 1 + alpha^k = 0.
        one_plus = [ZERO] * (r - 1)
        for k in range(r - 1):
            code = exp[k]
            low = code % p
            summed = code - low + (low + 1) % p
            one_plus[k] = log[summed]
        self._zech = one_plus

    # -- arithmetic ------------------------------------------------------

    def check(self, x: int) -> int:
        if not (x == ZERO or 0 <= x < self.r - 1):
            raise ValueError(f"{x} is not an element log of GF({self.r})")
        return x

    @property
    def one(self) -> int:
        return 0

    @property
    def alpha(self) -> int:
        return 1 % (self.r - 1)

    def add(self, x: int, y: int) -> int:
        if x == ZERO:
            return y
        if y == ZERO:
            return x
        z = self._zech[(y - x) % (self.r - 1)]
        if z == ZERO:
            return ZERO
        return (x + z) % (self.r - 1)

    def neg(self, x: int) -> int:
        if x == ZERO or self.p == 2:
            return x
        return (x + (self.r - 1) // 2) % (self.r - 1)

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if x == ZERO or y == ZERO:
            return ZERO
        return (x + y) % (self.r - 1)

    def inv(self, x: int) -> int:
        if x == ZERO:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return (-x) % (self.r - 1)

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def pow(self, x: int, e: int) -> int:
        if x == ZERO:
            if e == 0:
                return 0
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return ZERO
        return (x * e) % (self.r - 1)

    def scalar(self, c: int) -> int:
        """The prime-subfield element c * 1 (c an integer, reduced mod p)."""
        c %= self.p
        acc = ZERO
        for _ in range(c):
            acc = self.add(acc, 0)
        return acc

    def element_order(self, x: int) -> int:
        if x == ZERO:
            raise ZeroDivisionError("zero has no multiplicative order")
        return (self.r - 1) // math.gcd(self.r - 1, x)

    def elements(self):
        """All r elements, zero first then alpha^0 .. alpha^(r-2)."""
        yield ZERO
        yield from range(self.r - 1)

    # -- trace and subfield ----------------------------------------------

    def trace(self, x: int) -> int:
        """Trace onto GF(q): sum of x^(q^i) for i = 0..m-1."""
        if x == ZERO:
            return ZERO
        acc = ZERO
        e = x
        for _ in range(self.m):
            acc = self.add(acc, e)
            e = (e * self.q) % (self.r - 1)
        return acc

    def delta(self, x: int) -> int:
        """0 if trace(x) = 0, else 1."""
        return 0 if self.trace(x) == ZERO else 1

    def in_subfield(self, x: int) -> bool:
        return x == ZERO or x % self.subfield_step == 0

    def subfield_logs(self) -> list[int]:
        """The q embedded subfield elements, zero first."""
        return [ZERO] + [i * self.subfield_step for i in range(self.q - 1)]

    def subfield_tables(self) -> "SubfieldTables":
        if self._subfield_tables is None:
            self._subfield_tables = SubfieldTables(self)
        return self._subfield_tables

    # -- vectorized kernel tables ------------------------------------------

    def vec_tables(self) -> "VecTables":
        if self._vec is None:
            self._vec = VecTables(self)
        return self._vec

    # -- formatting --------------------------------------------------------

    def format_element(self, x: int) -> str:
        if x == ZERO:
            return "0"
        if x == 0:
            return "1"
        return f"a^{x}"

    def parse_element(self, text: str) -> int:
        """Parse '0', 'a^k', 'alpha^k', 'a'/'alpha', 'c', '-c' or 'c/d'."""
        s = text.strip()
        if s in ("a", "alpha"):
            return self.alpha
        for prefix in ("alpha^", "a^"):
            if s.startswith(prefix):
                return int(s[len(prefix):]) % (self.r - 1)
        if "/" in s:
            num, _, den = s.partition("/")
            d = self.scalar(int(den))
            if d == ZERO:
                raise ValueError(f"denominator vanishes in GF({self.r}): {text!r}")
            return self.div(self.scalar(int(num)), d)
        try:
            return self.scalar(int(s))
        except ValueError:
            raise ValueError(f"cannot parse field element {text!r}") from None

    def __repr__(self):
        return (f"Field(GF({self.r})/GF({self.q}), "
                f"prim={poly_str(self.prim_poly)})")


class SubfieldTables:
    """Compact GF(q) arithmetic on codes 0..q-1 for the search kernels.

    Code 0 is the zero element; code i >= 1 is alpha^((i-1)*step).  The
    ``digits`` table gives GF(p)-coordinates of each code with respect to
    the basis {beta^0, .., beta^(t-1)}, beta = alpha^step, so that
    addition of symbol vectors is digitwise addition mod p.
    """

    def __init__(self, field: Field):
        self.field = field
        q, p, t = field.q, field.p, field.t
        self.q, self.p, self.t = q, p, t
        step = field.subfield_step
        logs = field.subfield_logs()
        self.code_to_log = np.array(logs, dtype=np.int32)
        log_to_code = {ZERO: 0}
        for i, lg in enumerate(logs[1:], start=1):
            log_to_code[lg] = i
        self._log_to_code = log_to_code

        self.add = np.zeros((q, q), dtype=np.uint8)
        self.mul = np.zeros((q, q), dtype=np.uint8)
        self.neg = np.zeros(q, dtype=np.uint8)
        self.inv = np.zeros(q, dtype=np.uint8)
        for i in range(q):
            x = logs[i]
            self.neg[i] = log_to_code[field.neg(x)]
            if i:
                self.inv[i] = log_to_code[field.inv(x)]
            for j in range(q):
                y = logs[j]
                self.add[i, j] = log_to_code[field.add(x, y)]
                self.mul[i, j] = log_to_code[field.mul(x, y)]

        # GF(p)-coordinates of each code w.r.t. the beta-power basis.
        beta = step % (field.r - 1)
        basis = [field.pow(beta, s) for s in range(t)]
        vt = field.vec_tables()
        bmat = np.stack([vt.vec_of_log(b) for b in basis])  # (t, ext_deg)
        self.digits = np.zeros((q, t), dtype=np.uint8)
        for i in range(1, q):
            vec = vt.vec_of_log(logs[i])
            self.digits[i] = _coords_in_span(bmat, vec, p)

    def code_of_log(self, x: int) -> int:
        try:
            return self._log_to_code[x]
        except KeyError:
            raise ValueError(
                f"log {x} is not in the GF({self.q}) subfield") from None

    def codes_of_logs(self, logs) -> np.ndarray:
        return np.array([self.code_of_log(x) for x in logs], dtype=np.uint8)

    def scalar_code(self, c: int) -> int:
        return self.code_of_log(self.field.scalar(c))


class VecTables:
    """GF(p)-coordinate tables for vectorized GF(r) addition.

    ``exp_vec[k]`` holds the base-p digit vector of alpha^k; summing digit
    vectors mod p realizes field addition in bulk, and ``rep_to_log`` maps
    a packed digit vector back to a discrete log.
    """

    def __init__(self, field: Field):
        self.field = field
        p, deg, r = field.p, field.ext_deg, field.r
        self.p, self.deg = p, deg
        codes = np.array(field._exp, dtype=np.int64)
        weights = p ** np.arange(deg, dtype=np.int64)
        self.pack_weights = weights
        digs = (codes[:, None] // weights[None, :]) % p
        self.exp_vec = digs.astype(np.uint8)  # (r-1, deg)
        rep_to_log = np.full(r, ZERO, dtype=np.int64)
        rep_to_log[codes] = np.arange(r - 1)
        self.rep_to_log = rep_to_log

    def vec_of_log(self, x: int) -> np.ndarray:
        if x == ZERO:
            return np.zeros(self.deg, dtype=np.uint8)
        return self.exp_vec[x]

    def vecs_of_logs(self, logs: np.ndarray) -> np.ndarray:
        """Digit vectors for an array of logs (ZERO rows become zero)."""
        logs = np.asarray(logs, dtype=np.int64)
        out = np.zeros(logs.shape + (self.deg,), dtype=np.uint8)
        mask = logs != ZERO
        if np.any(mask):
            out[mask] = self.exp_vec[logs[mask]]
        return out

    def logs_of_vecs(self, vecs: np.ndarray) -> np.ndarray:
        packed = (vecs.astype(np.int64) @ self.pack_weights)
        return self.rep_to_log[packed]


def _coords_in_span(bmat: np.ndarray, vec: np.ndarray, p: int) -> np.ndarray:
    """Coordinates of vec in the row span of bmat over GF(p)."""
    t = bmat.shape[0]
    rows = bmat.astype(np.int64) % p
    trans = np.eye(t, dtype=np.int64)
    piv_cols: list[int] = []
    rank = 0
    for col in range(bmat.shape[1]):
        piv = next((i for i in range(rank, t) if rows[i, col] % p), None)
        if piv is None:
            continue
        rows[[rank, piv]] = rows[[piv, rank]]
        trans[[rank, piv]] = trans[[piv, rank]]
        inv = pow(int(rows[rank, col]), p - 2, p)
        rows[rank] = rows[rank] * inv % p
        trans[rank] = trans[rank] * inv % p
        for i in range(t):
            if i != rank and rows[i, col]:
                f = rows[i, col]
                rows[i] = (rows[i] - f * rows[rank]) % p
                trans[i] = (trans[i] - f * trans[rank]) % p
        piv_cols.append(col)
        rank += 1
        if rank == t:
            break
    v = vec.astype(np.int64) % p
    coords = np.zeros(t, dtype=np.int64)
    for i, col in enumerate(piv_cols):
        c = v[col] % p
        if c:
            v = (v - c * rows[i]) % p
            coords = (coords + c * trans[i]) % p
    if v.any():
        raise ValueError("vector does not lie in the subfield span")
    return coords.astype(np.uint8)


def field_create(spec: FieldSpec) -> Field:
    """Construct a field, validating that prim_poly is primitive."""
    return Field(spec)


def find_primitive_poly(p: int, degree: int) -> tuple[int, ...]:
    """Smallest primitive polynomial of the given degree over GF(p).

    Candidates are ordered by their base-p integer code (constant digit
    least significant), so the result is deterministic.
    """
    if degree == 1:
        # x - g for the smallest primitive root g (x + 1 over GF(2)).
        for g in range(1, p):
            if p == 2 or _order_mod(g, p) == p - 1:
                return ((-g) % p, 1)
        raise FieldError(f"no primitive root mod {p}")
    for low in range(p**degree):
        coeffs = tuple((low // p**i) % p for i in range(degree)) + (1,)
        if coeffs[0] == 0:
            continue
        try:
            Field(FieldSpec(p=p, t=1, m=degree, prim_poly=coeffs))
        except FieldError:
            continue
        return coeffs
    raise FieldError(f"no primitive polynomial of degree {degree} over GF({p})")


def _order_mod(g: int, p: int) -> int:
    e, acc = 1, g % p
    while acc != 1:
        acc = acc * g % p
        e += 1
    return e


@lru_cache(maxsize=None)
def _gf2m_field(m: int) -> Field:
    return Field(FieldSpec(p=2, t=1, m=m, prim_poly=find_primitive_poly(2, m)))


def artin_cubic_has_nonzero_root(m: int) -> bool:
    """Whether x + x^2 + x^4 = 0 has a nonzero root in GF(2^m).

    Decided by exhaustive evaluation over GF(2^m)*.
    """
    if m == 1:
        return False
    f = _gf2m_field(m)
    for x in range(f.r - 1):
        acc = f.add(f.add(x, f.pow(x, 2)), f.pow(x, 4))
        if acc == ZERO:
            return True
    return False
