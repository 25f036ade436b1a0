"""Small finite fields GF(t**a) for t in {2, 3, 5} with t**a <= 2**16.

Elements are plain ints in range(t**a): the base-t digits of the int are the
coefficients of the residue polynomial, least significant digit first.  With
that packing 0 and 1 are the additive and multiplicative identities of every
field, and int order gives a canonical element order.

The defining polynomial is the least monic irreducible of degree a, where
polynomials are ordered by the packed int value of their non-leading
coefficients.  Construction also finds (and keeps) the least multiplicative
generator, which doubles as the required cyclicity witness.
"""

from __future__ import annotations

from functools import lru_cache

from .numtheory import factorize, prime_set

SUPPORTED_CHARACTERISTICS = (2, 3, 5)
MAX_ORDER = 1 << 16


# ---------------------------------------------------------------------------
# polynomial helpers over GF(2), polynomials as bitmask ints (bit i = coeff of x^i)

def _p2_deg(f: int) -> int:
    return f.bit_length() - 1


def _p2_mod(f: int, g: int) -> int:
    dg = _p2_deg(g)
    while f.bit_length() - 1 >= dg:
        f ^= g << (f.bit_length() - 1 - dg)
    return f


def _p2_mulmod(x: int, y: int, g: int) -> int:
    out = 0
    while y:
        if y & 1:
            out ^= x
        y >>= 1
        x <<= 1
        if _p2_deg(x) >= _p2_deg(g):
            x ^= g << (_p2_deg(x) - _p2_deg(g))
    return out


def _p2_gcd(x: int, y: int) -> int:
    while y:
        x, y = y, _p2_mod(x, y)
    return x


def _p2_irreducible(g: int) -> bool:
    """Rabin irreducibility test for a monic GF(2) polynomial in bitmask form."""
    a = _p2_deg(g)
    if a == 1:
        return True
    # powers[k] = x^(2^k) mod g, by repeated squaring starting from x itself
    r = 2
    powers = {0: r}
    for k in range(1, a + 1):
        sq = 0
        rr = r
        i = 0
        while rr:
            if rr & 1:
                sq ^= 1 << (2 * i)
            rr >>= 1
            i += 1
        r = _p2_mod(sq, g)
        powers[k] = r
    if powers[a] != 2:
        return False
    return all(_p2_gcd(powers[a // p] ^ 2, g) == 1 for p in prime_set(a))


# ---------------------------------------------------------------------------
# polynomial helpers over GF(t), t odd, coefficient tuples (ascending)

def _pt_trim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _pt_divmod(f, g, t):
    f = list(f)
    dg = len(g) - 1
    inv_lead = pow(g[-1], t - 2, t)
    while len(f) - 1 >= dg and f:
        if f[-1] == 0:
            f.pop()
            continue
        shift = len(f) - 1 - dg
        c = f[-1] * inv_lead % t
        for i, gc in enumerate(g):
            f[shift + i] = (f[shift + i] - c * gc) % t
        f.pop()
    return _pt_trim(f)


def _pt_irreducible(g: tuple[int, ...], t: int) -> bool:
    """Trial division by every monic polynomial of degree 1 .. deg(g)//2."""
    a = len(g) - 1
    for d in range(1, a // 2 + 1):
        for packed in range(t**d):
            div = []
            v = packed
            for _ in range(d):
                div.append(v % t)
                v //= t
            div.append(1)
            if not _pt_divmod(g, tuple(div), t):
                return False
    return True


class Field:
    """Arithmetic in GF(t**a); see the module docstring for the encoding."""

    def __init__(self, t: int, a: int):
        if t not in SUPPORTED_CHARACTERISTICS:
            raise ValueError(f"characteristic {t} not supported")
        if a < 1 or t**a > MAX_ORDER:
            raise ValueError(f"field order {t}**{a} out of range")
        self.t = t
        self.a = a
        self.order = t**a
        self.poly = self._find_poly()
        self.generator = self._find_generator()
        self._build_tables()

    # -- construction ------------------------------------------------------

    def _find_poly(self) -> tuple[int, ...]:
        t, a = self.t, self.a
        if a == 1:
            return (0, 1)
        for packed in range(t**a):
            coeffs = []
            v = packed
            for _ in range(a):
                coeffs.append(v % t)
                v //= t
            coeffs.append(1)
            g = tuple(coeffs)
            if t == 2:
                mask = sum(c << i for i, c in enumerate(g))
                if _p2_irreducible(mask):
                    return g
            elif g[0] != 0 and _pt_irreducible(g, t):
                return g
        raise AssertionError("no irreducible polynomial found")

    def _raw_mul(self, x: int, y: int) -> int:
        """Product without tables; used during construction only."""
        t, a = self.t, self.a
        if a == 1:
            return x * y % t
        if t == 2:
            mask = sum(c << i for i, c in enumerate(self.poly))
            return _p2_mulmod(x, y, mask)
        xd = [(x // t**i) % t for i in range(a)]
        yd = [(y // t**i) % t for i in range(a)]
        prod = [0] * (2 * a - 1)
        for i, xi in enumerate(xd):
            if xi:
                for j, yj in enumerate(yd):
                    prod[i + j] = (prod[i + j] + xi * yj) % t
        for i in range(2 * a - 2, a - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(a):
                    prod[i - a + j] = (prod[i - a + j] - c * self.poly[j]) % t
        return sum(c * t**i for i, c in enumerate(prod[:a]))

    def _raw_pow(self, x: int, k: int) -> int:
        out = 1
        while k:
            if k & 1:
                out = self._raw_mul(out, x)
            x = self._raw_mul(x, x)
            k >>= 1
        return out

    def _find_generator(self) -> int:
        n = self.order - 1
        if n == 1:
            return 1
        checks = [n // p for p in prime_set(n)]
        for g in range(2, self.order):
            if all(self._raw_pow(g, c) != 1 for c in checks):
                return g
        raise AssertionError("multiplicative group has no generator")

    def _build_tables(self):
        n = self.order - 1
        exp = [1] * max(n, 1)
        for i in range(1, n):
            exp[i] = self._raw_mul(exp[i - 1], self.generator)
        log = [0] * self.order
        for i, v in enumerate(exp):
            log[v] = i
        self._exp, self._log = exp, log
        # dense multiplication table for the small fields hit in hot loops
        if self.order <= 256:
            self._mul_table = [
                [0 if (x == 0 or y == 0) else exp[(log[x] + log[y]) % n] for y in range(self.order)]
                for x in range(self.order)
            ]
        else:
            self._mul_table = None

    # -- arithmetic ---------------------------------------------------------

    def add(self, x: int, y: int) -> int:
        t = self.t
        if t == 2:
            return x ^ y
        if self.a == 1:
            return (x + y) % t
        out, mult = 0, 1
        for _ in range(self.a):
            out += (x % t + y % t) % t * mult
            x //= t
            y //= t
            mult *= t
        return out

    def neg(self, x: int) -> int:
        t = self.t
        if t == 2:
            return x
        if self.a == 1:
            return (t - x) % t
        out, mult = 0, 1
        for _ in range(self.a):
            out += (t - x % t) % t * mult
            x //= t
            mult *= t
        return out

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if self._mul_table is not None:
            return self._mul_table[x][y]
        if x == 0 or y == 0:
            return 0
        n = self.order - 1
        return self._exp[(self._log[x] + self._log[y]) % n]

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("0 has no inverse")
        n = self.order - 1
        return self._exp[(n - self._log[x]) % n]

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def pow(self, x: int, k: int) -> int:
        n = self.order - 1
        if x == 0:
            if k <= 0:
                raise ZeroDivisionError("0**k undefined for k <= 0")
            return 0
        return self._exp[self._log[x] * k % n]

    def frobenius(self, x: int, k: int = 1) -> int:
        """x ** (t**k), the k-fold characteristic-power automorphism."""
        if x == 0:
            return 0
        return self.pow(x, self.t**k)

    def element_order(self, x: int) -> int:
        if x == 0:
            raise ValueError("0 has no multiplicative order")
        e = self.order - 1
        for p, _ in factorize(self.order - 1):
            while e % p == 0 and self.pow(x, e // p) == 1:
                e //= p
        return e

    # -- encoding helpers ----------------------------------------------------

    def coeffs(self, x: int) -> tuple[int, ...]:
        t = self.t
        out = []
        for _ in range(self.a):
            out.append(x % t)
            x //= t
        return tuple(out)

    def from_coeffs(self, cs) -> int:
        if len(cs) > self.a or any(not 0 <= c < self.t for c in cs):
            raise ValueError(f"bad coefficient vector {cs}")
        return sum(c * self.t**i for i, c in enumerate(cs))

    def __repr__(self):
        return f"Field(GF({self.t}**{self.a}))"


@lru_cache(maxsize=None)
def field_make(t: int, a: int) -> Field:
    """Shared Field instance for GF(t**a)."""
    return Field(t, a)


# ---------------------------------------------------------------------------
# dense linear algebra over a Field (tiny systems only)

def mat_mul(A, B, F: Field):
    n, m, k = len(A), len(B[0]), len(B)
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        for j in range(m):
            s = 0
            for l in range(k):
                s = F.add(s, F.mul(A[i][l], B[l][j]))
            out[i][j] = s
    return out


def mat_vec(A, x, F: Field):
    out = []
    for row in A:
        s = 0
        for a, b in zip(row, x):
            s = F.add(s, F.mul(a, b))
        out.append(s)
    return out


def mat_inv(A, F: Field):
    n = len(A)
    m = [list(row) + [1 if j == i else 0 for j in range(n)] for i, row in enumerate(A)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        m[col], m[piv] = m[piv], m[col]
        s = F.inv(m[col][col])
        m[col] = [F.mul(s, v) for v in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [F.sub(v, F.mul(f, w)) for v, w in zip(m[r], m[col])]
    return [row[n:] for row in m]


def rref(rows, F: Field, width: int):
    """Row-reduce; returns (nonzero reduced rows, pivot column list)."""
    mat = [list(r) for r in rows]
    pivots = []
    rank = 0
    for col in range(width):
        piv = next((r for r in range(rank, len(mat)) if mat[r][col] != 0), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        s = F.inv(mat[rank][col])
        mat[rank] = [F.mul(s, v) for v in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col] != 0:
                f = mat[r][col]
                mat[r] = [F.sub(v, F.mul(f, w)) for v, w in zip(mat[r], mat[rank])]
        pivots.append(col)
        rank += 1
    return mat[:rank], pivots


def nullspace(rows, F: Field, width: int):
    """Basis of {x : M x = 0} for M given by `rows` of length `width`."""
    red, pivots = rref(rows, F, width)
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for f in free:
        x = [0] * width
        x[f] = 1
        for r, pc in enumerate(pivots):
            x[pc] = F.neg(red[r][f])
        basis.append(x)
    return basis


def element_order(field: Field, x: int) -> int:
    """Multiplicative order of x in the given field."""
    return field.element_order(x)
