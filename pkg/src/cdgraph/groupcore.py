"""Concrete finite groups as fully enumerated sets of packed-int elements.

Three element representations:

* matrices over a small field (``MatrixRep``), packed row-major with the
  most significant digit first, so the int order of codes is the
  lexicographic order of entry tuples;
* affine pairs (module vector, acting element) for split extensions
  (``AffineRep``), where every code in ``range(space)`` is a group element;
* index pairs for direct products (``ProductRep``).

Groups are enumerated completely (BFS over generators, default ceiling
1.1e6 elements).  The BFS discovery record (parent index, generator index
per element) is kept so that module actions can be extended from generator
maps by word composition without re-deriving matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import lcm

from .gf import Field, field_make, mat_inv, mat_mul, mat_vec, nullspace
from .numtheory import is_prime_power, prime_set

DEFAULT_CEILING = 1_100_000


class CeilingExceeded(RuntimeError):
    """A construction would enumerate more elements than the ceiling allows."""


# ---------------------------------------------------------------------------
# element representations

class MatrixRep:
    def __init__(self, field: Field, n: int):
        self.field = field
        self.n = n
        self.space = field.order ** (n * n)
        self._unpack_cache: dict[int, tuple[int, ...]] = {}
        self.identity = self.pack([1 if i == j else 0 for i in range(n) for j in range(n)])

    def pack(self, entries) -> int:
        code = 0
        q = self.field.order
        for e in entries:
            code = code * q + e
        return code

    def unpack(self, code: int) -> tuple[int, ...]:
        out = self._unpack_cache.get(code)
        if out is None:
            q = self.field.order
            c = code
            rev = []
            for _ in range(self.n * self.n):
                rev.append(c % q)
                c //= q
            out = tuple(reversed(rev))
            self._unpack_cache[code] = out
        return out

    def mul(self, c1: int, c2: int) -> int:
        F = self.field
        if self.n == 2:
            a, b, c, d = self.unpack(c1)
            e, f, g, h = self.unpack(c2)
            m, ad = F.mul, F.add
            q = F.order
            return ((ad(m(a, e), m(b, g)) * q + ad(m(a, f), m(b, h))) * q
                    + ad(m(c, e), m(d, g))) * q + ad(m(c, f), m(d, h))
        x, y = self.unpack(c1), self.unpack(c2)
        n = self.n
        out = []
        for i in range(n):
            for j in range(n):
                s = 0
                for k in range(n):
                    s = F.add(s, F.mul(x[i * n + k], y[k * n + j]))
                out.append(s)
        return self.pack(out)

    def inv(self, code: int) -> int:
        F = self.field
        if self.n == 2:
            a, b, c, d = self.unpack(code)
            di = F.inv(F.sub(F.mul(a, d), F.mul(b, c)))
            q = F.order
            return ((F.mul(d, di) * q + F.mul(F.neg(b), di)) * q
                    + F.mul(F.neg(c), di)) * q + F.mul(a, di)
        n = self.n
        rows = [list(self.unpack(code)[i * n:(i + 1) * n]) for i in range(n)]
        inv_rows = mat_inv(rows, F)
        return self.pack([v for row in inv_rows for v in row])


class AffineRep:
    """Pairs (v, h) with v a vector code and h an index into the sorted
    element list of the acting group; code = v * |H| + h."""

    def __init__(self, hgroup: "FiniteGroup", vspace: int, field_t: int, maps):
        self.hgroup = hgroup
        self.hrep = hgroup.rep
        self.hcodes = hgroup.elements
        self.hindex = {c: i for i, c in enumerate(hgroup.elements)}
        self.horder = hgroup.order
        self.vspace = vspace
        self.t = field_t
        self.maps = maps
        self.space = vspace * self.horder
        self.identity = self.hindex[hgroup.identity]
        if field_t != 2:
            dim = 0
            v = vspace
            while v > 1:
                v //= field_t
                dim += 1
            self._neg = [_digit_neg(v, field_t, dim) for v in range(vspace)]
            self._addtab = [[_digit_add(a, b, field_t, dim) for b in range(vspace)]
                            for a in range(vspace)]

    def vadd(self, a: int, b: int) -> int:
        return a ^ b if self.t == 2 else self._addtab[a][b]

    def mul(self, c1: int, c2: int) -> int:
        h = self.horder
        v1, h1 = divmod(c1, h)
        v2, h2 = divmod(c2, h)
        w = self.maps[h1][v2]
        v = (v1 ^ w) if self.t == 2 else self._addtab[v1][w]
        return v * h + self.hindex[self.hrep.mul(self.hcodes[h1], self.hcodes[h2])]

    def inv(self, code: int) -> int:
        v, h = divmod(code, self.horder)
        hi = self.hindex[self.hrep.inv(self.hcodes[h])]
        u = self.maps[hi][v]
        if self.t != 2:
            u = self._neg[u]
        return u * self.horder + hi


def _digit_add(a: int, b: int, t: int, dim: int) -> int:
    out, mult = 0, 1
    for _ in range(dim):
        out += (a % t + b % t) % t * mult
        a //= t
        b //= t
        mult *= t
    return out


def _digit_neg(a: int, t: int, dim: int) -> int:
    out, mult = 0, 1
    for _ in range(dim):
        out += (t - a % t) % t * mult
        a //= t
        mult *= t
    return out


class ProductRep:
    def __init__(self, g1: "FiniteGroup", g2: "FiniteGroup"):
        self.g1, self.g2 = g1, g2
        self.n2 = g2.order
        self.space = g1.order * g2.order
        self.identity = g1.idx(g1.identity) * self.n2 + g2.idx(g2.identity)

    def mul(self, c1: int, c2: int) -> int:
        a1, b1 = divmod(c1, self.n2)
        a2, b2 = divmod(c2, self.n2)
        g1, g2 = self.g1, self.g2
        return (g1.idx(g1.rep.mul(g1.elements[a1], g1.elements[a2])) * self.n2
                + g2.idx(g2.rep.mul(g2.elements[b1], g2.elements[b2])))

    def inv(self, code: int) -> int:
        a, b = divmod(code, self.n2)
        g1, g2 = self.g1, self.g2
        return (g1.idx(g1.rep.inv(g1.elements[a])) * self.n2
                + g2.idx(g2.rep.inv(g2.elements[b])))


# ---------------------------------------------------------------------------
# groups

@dataclass(frozen=True)
class ConjClass:
    rep: int
    size: int
    members: tuple


class FiniteGroup:
    def __init__(self, rep, elements, generators, label: str, kind: str,
                 meta=None, solvable: bool = False, quotient_primes=frozenset(),
                 bfs=None):
        self.rep = rep
        self.elements = elements
        self.generators = tuple(generators)
        self.label = label
        self.kind = kind
        self.meta = dict(meta or {})
        self.solvable = solvable
        self.quotient_primes = frozenset(quotient_primes)
        self.order = len(elements)
        self.identity = rep.identity
        self._dense = isinstance(elements, range)
        self._index = None if self._dense else {c: i for i, c in enumerate(elements)}
        self._bfs = bfs
        self._classes = None
        self._class_of = None
        self.cache: dict = {}

    def __repr__(self):
        return f"FiniteGroup({self.label}, order={self.order})"

    def idx(self, code: int) -> int:
        return code if self._dense else self._index[code]

    def __contains__(self, code) -> bool:
        if self._dense:
            return 0 <= code < self.rep.space
        return code in self._index

    def mul(self, a: int, b: int) -> int:
        return self.rep.mul(a, b)

    def inv(self, a: int) -> int:
        return self.rep.inv(a)

    def element_order(self, code: int) -> int:
        n, x = 1, code
        while x != self.identity:
            x = self.rep.mul(x, code)
            n += 1
        return n

    def conjugacy_classes(self):
        if self._classes is None:
            self._compute_classes()
        return self._classes

    def class_of(self):
        if self._class_of is None:
            self._compute_classes()
        return self._class_of

    def _compute_classes(self):
        # Orbits under conjugation by the generators.  Scanning elements in
        # ascending code order makes each orbit's seed its least member.
        mul, inv = self.rep.mul, self.rep.inv
        gens = [g for g in self.generators if g != self.identity]
        pairs = [(g, inv(g)) for g in gens]
        seen = bytearray(self.rep.space)
        classes = []
        for c in self.elements:
            if seen[c]:
                continue
            seen[c] = 1
            orbit = [c]
            frontier = [c]
            while frontier:
                nxt = []
                for x in frontier:
                    for g, gi in pairs:
                        y = mul(g, mul(x, gi))
                        if not seen[y]:
                            seen[y] = 1
                            orbit.append(y)
                            nxt.append(y)
                frontier = nxt
            orbit.sort()
            classes.append(ConjClass(rep=orbit[0], size=len(orbit), members=tuple(orbit)))
        classes.sort(key=lambda cl: (cl.size, cl.rep))
        class_of = {}
        for i, cl in enumerate(classes):
            for m in cl.members:
                class_of[m] = i
        self._classes = classes
        self._class_of = class_of

    def exponent(self) -> int:
        return lcm(*(self.element_order(cl.rep) for cl in self.conjugacy_classes()))


def conjugacy_classes(G: FiniteGroup):
    return G.conjugacy_classes()


def centralizer_order(G: FiniteGroup, code: int) -> int:
    if code not in G:
        raise ValueError("element not in group")
    return G.order // G.conjugacy_classes()[G.class_of()[code]].size


def closure(rep, gens, ceiling: int = DEFAULT_CEILING):
    """Enumerate the subgroup generated by `gens`.

    Returns (sorted element tuple, bfs record); the record holds the codes in
    discovery order plus, for each, the index of its BFS parent and of the
    generator whose right multiplication produced it.
    """
    mul = rep.mul
    e = rep.identity
    codes = [e]
    parent = [0]
    genix = [-1]
    seen = {e}
    glist = list(gens)
    i = 0
    while i < len(codes):
        x = codes[i]
        for gi, g in enumerate(glist):
            y = mul(x, g)
            if y not in seen:
                if len(codes) >= ceiling:
                    raise CeilingExceeded(f"enumeration exceeded ceiling {ceiling}")
                seen.add(y)
                codes.append(y)
                parent.append(i)
                genix.append(gi)
        i += 1
    return tuple(sorted(codes)), (codes, parent, genix)


def derived_subgroup(G: FiniteGroup, ceiling: int = DEFAULT_CEILING) -> frozenset:
    """Element set of [G, G]: normal closure of the generator commutators."""
    mul, inv = G.rep.mul, G.rep.inv
    gens_inv = [(g, inv(g)) for g in G.generators]
    seeds = sorted({mul(inv(a), mul(inv(b), mul(a, b)))
                    for a in G.generators for b in G.generators} - {G.identity})
    while True:
        elements, _ = closure(G.rep, tuple(seeds), ceiling)
        eset = set(elements)
        new = set()
        for x in elements:
            for g, gi in gens_inv:
                y = mul(g, mul(x, gi))
                if y not in eset:
                    new.add(y)
        if not new:
            return frozenset(eset)
        seeds = sorted(set(seeds) | new)


# ---------------------------------------------------------------------------
# constructors

@lru_cache(maxsize=None)
def sl2_group(q: int) -> FiniteGroup:
    """SL2(q) as 2x2 determinant-1 matrices over GF(q).

    Generators: both standard transvections plus a torus generator
    diag(g, 1/g) for the least field generator g.
    """
    pa = is_prime_power(q)
    if pa is None or q < 4:
        raise ValueError(f"unsupported field size q={q}")
    t, a = pa
    F = field_make(t, a)
    rep = MatrixRep(F, 2)
    g = F.generator
    gens = (
        rep.pack((1, 1, 0, 1)),
        rep.pack((1, 0, 1, 1)),
        rep.pack((g, 0, 0, F.inv(g))),
    )
    expected = q * (q - 1) * (q + 1)
    elements, bfs = closure(rep, gens, max(DEFAULT_CEILING, expected))
    assert len(elements) == expected, f"SL2({q}) enumeration gave {len(elements)}"
    return FiniteGroup(rep, elements, gens, label=f"SL2({q})", kind="SL2",
                       meta={"q": q, "t": t, "a": a}, solvable=False,
                       quotient_primes=prime_set(expected), bfs=bfs)


@lru_cache(maxsize=None)
def extraspecial_group(t: int, order: int, exponent: int) -> FiniteGroup:
    """The quaternion group (t=2) or the Heisenberg group of order t^3 (t odd)."""
    if (t, order, exponent) == (2, 8, 4):
        F = field_make(3, 1)
        rep = MatrixRep(F, 2)
        gens = (rep.pack((0, 2, 1, 0)), rep.pack((1, 1, 1, 2)))
        label = "Q8"
    elif t in (3, 5) and order == t ** 3 and exponent == t:
        F = field_make(t, 1)
        rep = MatrixRep(F, 3)
        gens = (rep.pack((1, 1, 0, 0, 1, 0, 0, 0, 1)),
                rep.pack((1, 0, 0, 0, 1, 1, 0, 0, 1)))
        label = f"{t}^(1+2)"
    else:
        raise ValueError(f"unsupported extraspecial parameters ({t}, {order}, {exponent})")
    elements, bfs = closure(rep, gens)
    G = FiniteGroup(rep, elements, gens, label=label, kind="extraspecial",
                    meta={"t": t, "exponent": exponent}, solvable=True,
                    quotient_primes=frozenset(), bfs=bfs)
    assert G.order == order and G.exponent() == exponent
    return G


def quaternion_group() -> FiniteGroup:
    return extraspecial_group(2, 8, 4)


@lru_cache(maxsize=None)
def cyclic_group(n: int) -> FiniteGroup:
    """C_n as 1x1 matrices over the first supported field with n | q-1."""
    if n < 1:
        raise ValueError("n must be positive")
    for t in (2, 3, 5):
        a = 1
        while t ** a <= 65536:
            if (t ** a - 1) % n == 0:
                F = field_make(t, a)
                rep = MatrixRep(F, 1)
                mu = F.pow(F.generator, (F.order - 1) // n) if n > 1 else 1
                gens = (rep.pack((mu,)),)
                elements, bfs = closure(rep, gens)
                G = FiniteGroup(rep, elements, gens, label=f"C{n}", kind="cyclic",
                                meta={"n": n}, solvable=True,
                                quotient_primes=frozenset(), bfs=bfs)
                assert G.order == n
                return G
            a += 1
    raise ValueError(f"no supported field realizes C{n}")


_PRODUCT_CACHE: dict = {}


def direct_product(g1: FiniteGroup, g2: FiniteGroup,
                   ceiling: int = DEFAULT_CEILING) -> FiniteGroup:
    if g1.order * g2.order > ceiling:
        raise CeilingExceeded(f"|G|={g1.order * g2.order} exceeds ceiling {ceiling}")
    key = (id(g1), id(g2))
    G = _PRODUCT_CACHE.get(key)
    if G is not None:
        return G
    rep = ProductRep(g1, g2)
    n2 = g2.order
    e1, e2 = g1.idx(g1.identity), g2.idx(g2.identity)
    gens = tuple(g1.idx(c) * n2 + e2 for c in g1.generators) + \
        tuple(e1 * n2 + g2.idx(c) for c in g2.generators)
    G = FiniteGroup(rep, range(rep.space), gens,
                    label=f"{g1.label} x {g2.label}", kind="product",
                    meta={"factors": (g1.label, g2.label)},
                    solvable=g1.solvable and g2.solvable,
                    quotient_primes=g1.quotient_primes | g2.quotient_primes)
    _PRODUCT_CACHE[key] = G
    return G


# ---------------------------------------------------------------------------
# module actions

class ModuleAction:
    """Linear action of a group on GF(t)^dim; vectors are ints whose base-t
    digits (least significant first) are the coordinates."""

    def __init__(self, group: FiniteGroup, field_t: int, dim: int, label: str,
                 gen_maps, act_fn=None):
        self.group = group
        self.field_t = field_t
        self.dim = dim
        self.vspace = field_t ** dim
        self.label = label
        self.gen_maps = gen_maps
        self._act_fn = act_fn
        self._maps = None
        self._kernel_order = None

    def __repr__(self):
        return f"ModuleAction({self.label}: {self.group.label} on GF({self.field_t})^{self.dim})"

    def act(self, h_idx: int, v: int) -> int:
        if self._maps is not None:
            return self._maps[h_idx][v]
        if self._act_fn is not None:
            return self._act_fn(h_idx, v)
        return self.materialize()[h_idx][v]

    def materialize(self):
        """Per-element vector maps, composed along the group's BFS words."""
        if self._maps is None:
            codes, parent, genix = self.group._bfs
            maps_by_code = {codes[0]: list(range(self.vspace))}
            for i in range(1, len(codes)):
                pm = maps_by_code[codes[parent[i]]]
                gm = self.gen_maps[genix[i]]
                maps_by_code[codes[i]] = [pm[w] for w in gm]
            self._maps = [maps_by_code[c] for c in self.group.elements]
        return self._maps

    def kernel_order(self) -> int:
        if self._kernel_order is None:
            basis = [self.field_t ** i for i in range(self.dim)]
            self._kernel_order = sum(
                1 for h in range(self.group.order)
                if all(self.act(h, b) == b for b in basis))
        return self._kernel_order


def _matrix_module(group: FiniteGroup, field_t: int, dim: int, label: str) -> ModuleAction:
    """Natural-style module: the group's own 2x2 matrices acting on column
    vectors of GF(q)^2, re-read as GF(t)^dim by restriction of scalars."""
    rep = group.rep
    F = rep.field
    q = F.order
    elements = group.elements

    def act_fn(h_idx: int, v: int) -> int:
        x, y = divmod(v, q)
        a, b, c, d = rep.unpack(elements[h_idx])
        return F.add(F.mul(a, x), F.mul(b, y)) * q + F.add(F.mul(c, x), F.mul(d, y))

    gen_maps = [[act_fn(group.idx(g), v) for v in range(q * q)] for g in group.generators]
    return ModuleAction(group, field_t, dim, label, gen_maps, act_fn=act_fn)


@lru_cache(maxsize=None)
def _sl2_five_subgroup() -> FiniteGroup:
    """The subgroup of SL2(9) isomorphic to SL2(5).

    Deterministic search: first (x, y) in code order with |x|=3, |y|=5,
    |xy|=4 generating a subgroup of order 120.  Any order-120 subgroup of
    SL2(9) contains -I and maps onto A5, so the order check certifies the
    isomorphism type.
    """
    G9 = sl2_group(9)
    rep = G9.rep
    order3 = [c for c in G9.elements if G9.element_order(c) == 3]
    order5 = [c for c in G9.elements if G9.element_order(c) == 5]
    for x in order3:
        for y in order5:
            if G9.element_order(rep.mul(x, y)) != 4:
                continue
            try:
                elements, bfs = closure(rep, (x, y), ceiling=121)
            except CeilingExceeded:
                continue
            if len(elements) == 120:
                return FiniteGroup(rep, elements, (x, y), label="SL2(5)", kind="SL2",
                                   meta={"q": 5, "t": 5, "a": 1}, solvable=False,
                                   quotient_primes=prime_set(120), bfs=bfs)
    raise AssertionError("no SL2(5) subgroup found in SL2(9)")


def _twisted_tensor_descent(a: int):
    """GF(2)-form of V (x) V^(sigma^k) for SL2(2^a), with k = a/2.

    The twisted tensor square is a 4-dimensional module over F = GF(2^a)
    that is fixed (up to isomorphism) by sigma^k, so it can be written over
    the subfield F0 = GF(2^k).  Concretely: solve the linear system
    T.rho(g)^(sigma^k) = rho(g).T for a semilinear intertwiner T (Schur
    gives a 1-dimensional solution space), rescale so that the semilinear
    map phi(m) = T.sigma^k(m) is an involution, and take its fixed points.
    The fixed space is an F0-form of dimension 4; restricting scalars to
    GF(2) yields the (2a)-dimensional module returned here as generator
    vector maps.
    """
    assert a % 2 == 0
    q = 2 ** a
    k = a // 2
    G = sl2_group(q)
    rep = G.rep
    F = rep.field

    def kron(code):
        m = rep.unpack(code)
        s = [F.frobenius(e, k) for e in m]
        K = [[0] * 4 for _ in range(4)]
        for i in range(2):
            for j in range(2):
                for u in range(2):
                    for v in range(2):
                        K[2 * i + u][2 * j + v] = F.mul(m[2 * i + j], s[2 * u + v])
        return K

    Ks = [kron(g) for g in G.generators]

    rows = []
    for K in Ks:
        A = [[F.frobenius(K[i][j], k) for j in range(4)] for i in range(4)]
        for i in range(4):
            for j in range(4):
                coef = [0] * 16
                for v in range(4):
                    coef[4 * i + v] = F.add(coef[4 * i + v], A[v][j])
                for u in range(4):
                    coef[4 * u + j] = F.sub(coef[4 * u + j], K[i][u])
                rows.append(coef)
    sol = nullspace(rows, F, 16)
    assert len(sol) == 1, "intertwiner space must be 1-dimensional"
    T = [sol[0][4 * i:4 * i + 4] for i in range(4)]

    Ts = [[F.frobenius(T[i][j], k) for j in range(4)] for i in range(4)]
    S = mat_mul(T, Ts, F)
    c0 = S[0][0]
    assert all(S[i][j] == (c0 if i == j else 0) for i in range(4) for j in range(4))
    assert c0 != 0 and F.frobenius(c0, k) == c0
    target = F.inv(c0)
    mu = next(x for x in range(1, F.order) if F.mul(x, F.frobenius(x, k)) == target)
    T = [[F.mul(mu, e) for e in row] for row in T]
    Ts = [[F.frobenius(T[i][j], k) for j in range(4)] for i in range(4)]
    assert mat_mul(T, Ts, F) == [[1 if i == j else 0 for j in range(4)] for i in range(4)]

    # fixed space of phi(m) = T.sigma^k(m), an F0-linear involution on F^4
    sub = [x for x in range(F.order) if F.frobenius(x, k) == x]
    subset = set(sub)
    beta = next(x for x in range(F.order) if x not in subset)
    dec = {}
    for t2 in sub:
        bt = F.mul(beta, t2)
        for s2 in sub:
            dec[F.add(s2, bt)] = (s2, t2)
    assert len(dec) == F.order

    mat = [[0] * 8 for _ in range(8)]
    for bi in range(8):
        u, which = divmod(bi, 2)
        vec = [0] * 4
        vec[u] = 1 if which == 0 else beta
        img = mat_vec(T, [F.frobenius(e, k) for e in vec], F)
        img[u] = F.sub(img[u], vec[u])
        for w_i, w in enumerate(img):
            s2, t2 = dec[w]
            mat[2 * w_i][bi] = s2
            mat[2 * w_i + 1][bi] = t2
    fixed = nullspace(mat, F, 8)
    assert len(fixed) == 4, "fixed space of the descent involution must have dimension 4"
    assert all(e in subset for x in fixed for e in x)

    Ycols = [[F.add(x[2 * u], F.mul(beta, x[2 * u + 1])) for u in range(4)] for x in fixed]
    Ymat = [[Ycols[j][i] for j in range(4)] for i in range(4)]
    Yinv = mat_inv(Ymat, F)

    # GF(2)-basis of the subfield, greedy over ascending elements
    span = {0, 1}
    basis2 = [1]
    for x in sub:
        if len(basis2) == k:
            break
        if x not in span:
            basis2.append(x)
            span |= {F.add(s, x) for s in span}
    assert len(basis2) == k

    def decode(v: int):
        coords = []
        for u in range(4):
            x = 0
            for m in range(k):
                if (v >> (u * k + m)) & 1:
                    x = F.add(x, basis2[m])
            coords.append(x)
        return coords

    enc2 = {}
    for bits in range(2 ** k):
        x = 0
        for m in range(k):
            if (bits >> m) & 1:
                x = F.add(x, basis2[m])
        enc2[x] = bits

    def encode(coords) -> int:
        v = 0
        for u, x in enumerate(coords):
            v |= enc2[x] << (u * k)
        return v

    vspace = 2 ** (2 * a)
    gen_maps = []
    for K in Ks:
        C = mat_mul(mat_mul(Yinv, K, F), Ymat, F)
        assert all(e in subset for row in C for e in row), \
            "action in the descended basis must have subfield entries"
        gen_maps.append([encode(mat_vec(C, decode(v), F)) for v in range(vspace)])
    return G, 2 * a, gen_maps


@lru_cache(maxsize=None)
def module_catalog(label: str, q: int | None = None) -> ModuleAction:
    """The module catalogue: V0, V1, W, U, natural(q), twist8."""
    if label == "natural":
        if q not in (4, 8, 16, 32):
            raise ValueError(f"natural module needs q in {{4,8,16,32}}, got {q}")
        t, a = 2, q.bit_length() - 1
        return _matrix_module(sl2_group(q), 2, 2 * a, f"natural({q})")
    if q is not None and (label, q) not in (("V0", 4), ("V1", 4), ("twist8", 16)):
        raise ValueError(f"module {label!r} takes no q parameter (got {q})")
    if label == "V0":
        return _matrix_module(sl2_group(4), 2, 4, "V0")
    if label == "V1":
        group, dim, gen_maps = _twisted_tensor_descent(2)
        return ModuleAction(group, 2, dim, "V1", gen_maps)
    if label == "twist8":
        group, dim, gen_maps = _twisted_tensor_descent(4)
        return ModuleAction(group, 2, dim, "twist8", gen_maps)
    if label == "W":
        return _matrix_module(_sl2_five_subgroup(), 3, 4, "W")
    if label == "U":
        return _matrix_module(sl2_group(5), 5, 2, "U")
    raise ValueError(f"unknown module label {label!r}")


_SEMIDIRECT_CACHE: dict = {}


def semidirect(action: ModuleAction, ceiling: int = DEFAULT_CEILING) -> FiniteGroup:
    """Split extension V x| H for a module action, with V normal."""
    H = action.group
    total = action.vspace * H.order
    if total > ceiling:
        raise CeilingExceeded(f"|G|={total} exceeds ceiling {ceiling}")
    G = _SEMIDIRECT_CACHE.get(id(action))
    if G is not None:
        return G
    rep = AffineRep(H, action.vspace, action.field_t, action.materialize())
    horder = H.order
    gens = tuple(rep.hindex[c] for c in H.generators) + \
        tuple(action.field_t ** i * horder + rep.identity for i in range(action.dim))
    G = FiniteGroup(rep, range(rep.space), gens,
                    label=f"semidirect({action.label})", kind="semidirect",
                    meta={"module": action.label, "vorder": action.vspace,
                          "acting": H.label},
                    solvable=H.solvable, quotient_primes=H.quotient_primes)
    _SEMIDIRECT_CACHE[id(action)] = G
    return G


# ---------------------------------------------------------------------------
# Sylow subgroups of SL2(2^a)

@lru_cache(maxsize=None)
def sylow2_subgroups_sl2(q: int):
    """All q+1 Sylow 2-subgroups of SL2(q), q = 2^a, as frozensets of codes.

    Conjugates of the upper-unitriangular subgroup, found by orbit BFS under
    conjugation by the group generators.
    """
    if q % 2 != 0:
        raise ValueError("q must be even")
    G = sl2_group(q)
    rep = G.rep
    F = rep.field
    base = frozenset(rep.pack((1, lam, 0, 1)) for lam in range(q))
    pairs = [(g, rep.inv(g)) for g in G.generators]
    seen = {base}
    frontier = [base]
    while frontier:
        nxt = []
        for T in frontier:
            for g, gi in pairs:
                Tg = frozenset(rep.mul(g, rep.mul(x, gi)) for x in T)
                if Tg not in seen:
                    seen.add(Tg)
                    nxt.append(Tg)
        frontier = nxt
    subs = sorted(seen, key=min)
    assert len(subs) == q + 1
    return subs


def sylow_normalizer_count(q: int, u: int) -> int:
    """How many Sylow 2-subgroups of SL2(q) the cyclic subgroup generated by
    the least element of order u normalizes."""
    G = sl2_group(q)
    rep = G.rep
    x = next(c for c in G.elements if G.element_order(c) == u)
    xi = rep.inv(x)
    count = 0
    for T in sylow2_subgroups_sl2(q):
        if all(rep.mul(x, rep.mul(t, xi)) in T for t in T):
            count += 1
    return count


# ---------------------------------------------------------------------------
# spec documents

def group_from_spec(spec: dict, ceiling: int = DEFAULT_CEILING) -> FiniteGroup:
    """Build a group from its JSON specification document."""
    if not isinstance(spec, dict) or "construct" not in spec:
        raise ValueError("group spec must be an object with a 'construct' key")
    construct = spec["construct"]
    if construct == "SL2":
        G = sl2_group(int(spec["q"]))
        if G.order > ceiling:
            raise CeilingExceeded(f"|G|={G.order} exceeds ceiling {ceiling}")
        return G
    if construct == "semidirect":
        qv = spec.get("q")
        action = module_catalog(spec["module"], int(qv) if qv is not None else None)
        return semidirect(action, ceiling)
    if construct == "direct_product":
        factors = spec.get("factors", [])
        if len(factors) < 2:
            raise ValueError("direct_product needs at least two factors")
        groups = [group_from_spec(s, ceiling) for s in factors]
        G = groups[0]
        for H in groups[1:]:
            G = direct_product(G, H, ceiling)
        return G
    if construct == "extraspecial":
        G = extraspecial_group(int(spec["t"]), int(spec["order"]), int(spec["exponent"]))
        if G.order > ceiling:
            raise CeilingExceeded(f"|G|={G.order} exceeds ceiling {ceiling}")
        return G
    if construct == "cyclic":
        G = cyclic_group(int(spec["n"]))
        if G.order > ceiling:
            raise CeilingExceeded(f"|G|={G.order} exceeds ceiling {ceiling}")
        return G
    raise ValueError(f"unknown construct {construct!r}")
