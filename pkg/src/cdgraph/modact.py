"""Orbit and stabilizer analysis of module actions.

All per-vector predicates used here (stabilizer order, Sylow containment,
counts of elements of prime power order in the stabilizer) are invariant
under the group action, so they are evaluated once per orbit representative
and propagated to the whole orbit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf import field_make
from .groupcore import ModuleAction
from .numtheory import factorize, is_prime
from .prime_graph import Graph, graph_from_degrees


@dataclass(frozen=True)
class Orbit:
    rep: int
    size: int
    stabilizer_order: int
    stabilizer_tag: str


@dataclass(frozen=True)
class OrbitReport:
    module: str
    group: str
    group_order: int
    kernel_order: int
    orbits: tuple[Orbit, ...]


def orbits(action: ModuleAction) -> tuple[tuple[int, ...], ...]:
    """Orbits on the nonzero vectors, each sorted, ordered by least member."""
    key = ("orbits",)
    cached = action.group.cache.get((id(action),) + key)
    if cached is not None:
        return cached
    seen = bytearray(action.vspace)
    out = []
    for v in range(1, action.vspace):
        if seen[v]:
            continue
        seen[v] = 1
        orb = [v]
        frontier = [v]
        while frontier:
            nxt = []
            for w in frontier:
                for gm in action.gen_maps:
                    u = gm[w]
                    if not seen[u]:
                        seen[u] = 1
                        orb.append(u)
                        nxt.append(u)
            frontier = nxt
        orb.sort()
        out.append(tuple(orb))
    result = tuple(out)
    action.group.cache[(id(action),) + key] = result
    return result


def stabilizer(action: ModuleAction, v: int) -> tuple[int, ...]:
    """Indices (into the group's element list) of the elements fixing v."""
    return tuple(h for h in range(action.group.order) if action.act(h, v) == v)


def _abelian(group, idxs) -> bool:
    els = [group.elements[i] for i in idxs]
    mul = group.rep.mul
    return all(mul(a, b) == mul(b, a) for a in els for b in els)


def _stabilizer_tag(action: ModuleAction, idxs) -> str:
    """Structure tag for a small subgroup from its element orders."""
    G = action.group
    n = len(idxs)
    if n == 1:
        return "C1"
    orders = sorted(G.element_order(G.elements[i]) for i in idxs)
    hist = {o: orders.count(o) for o in set(orders)}
    if orders[-1] == n:
        return f"C{n}"
    if _abelian(G, idxs):
        t = orders[1]
        fac = factorize(n)
        if all(o in (1, t) for o in orders) and len(fac) == 1 and fac[0][0] == t:
            return f"C{t}^{fac[0][1]}"
        return f"abelian{n}"
    if n == 6:
        return "S3"
    if n == 8 and hist.get(4) == 6:
        return "Q8"
    if n == 8 and hist.get(2) == 5:
        return "D8"
    if n == 12 and hist.get(3) == 8 and hist.get(2) == 3:
        return "A4"
    return f"order{n}"


def orbit_data(action: ModuleAction) -> OrbitReport:
    """Orbit sizes, stabilizer orders and structure tags for the action."""
    G = action.group
    out = []
    for orb in orbits(action):
        stab = stabilizer(action, orb[0])
        assert len(orb) * len(stab) == G.order, "orbit-stabilizer mismatch"
        out.append(Orbit(rep=orb[0], size=len(orb),
                         stabilizer_order=len(stab),
                         stabilizer_tag=_stabilizer_tag(action, stab)))
    return OrbitReport(module=action.label, group=G.label, group_order=G.order,
                       kernel_order=action.kernel_order(), orbits=tuple(out))


def delta_orb(action: ModuleAction) -> Graph:
    """Prime graph on the multiset of orbit sizes."""
    return graph_from_degrees(len(o) for o in orbits(action))


def _p_part(n: int, p: int) -> int:
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


def _has_normal_full_sylow(action: ModuleAction, idxs, q: int) -> bool:
    """Whether the subgroup on `idxs` holds a full Sylow q-subgroup of the
    acting group as a normal subgroup.

    Containment: the q-part of the subgroup order equals the q-part of the
    group order.  Normality: a finite group has a normal Sylow q-subgroup
    exactly when its elements of q-power order number its order's q-part.
    """
    G = action.group
    c = len(idxs)
    if _p_part(c, q) != _p_part(G.order, q):
        return False
    qcount = sum(1 for i in idxs
                 if _p_part(G.element_order(G.elements[i]), q)
                 == G.element_order(G.elements[i]))
    return qcount == _p_part(c, q)


def check_nq(action: ModuleAction, q: int):
    """Test the normal-Sylow-q condition over all nonzero vectors.

    Satisfied when q divides the index of the action kernel in the acting
    group and every nonzero vector's stabilizer holds a full Sylow
    q-subgroup of the acting group normally.  Returns (satisfied, failing
    vectors sorted ascending).
    """
    if not is_prime(q):
        raise ValueError(f"q must be prime, got {q}")
    G = action.group
    failing = []
    for orb in orbits(action):
        if not _has_normal_full_sylow(action, stabilizer(action, orb[0]), q):
            failing.extend(orb)
    failing.sort()
    index = G.order // action.kernel_order()
    satisfied = index % q == 0 and not failing
    return satisfied, tuple(failing)


def v_set_decomposition(action: ModuleAction, r: int | None = None,
                        s: int | None = None) -> dict:
    """Partition witnesses by which full Sylow subgroup the stabilizer holds.

    For an action of SL2(q0): a nonzero vector lands in V_I_minus when its
    stabilizer order carries the full r-part of the group order (r an odd
    prime dividing q0 - 1), in V_I_plus likewise for s dividing q0 + 1, and
    in V_II for the defining characteristic.  Defaults pick the least valid
    odd prime; when none exists the class is empty.
    """
    G = action.group
    if G.kind != "SL2":
        raise ValueError("decomposition requires an SL2 acting group")
    q0, t = G.meta["q"], G.meta["t"]

    def _check(prime, modulus, name):
        if prime is None:
            return None
        if not is_prime(prime) or prime == 2 or modulus % prime:
            raise ValueError(f"{name} must be an odd prime dividing {modulus}")
        return prime

    if r is None:
        r = next((f for f, _ in factorize(q0 - 1) if f != 2), None)
    else:
        r = _check(r, q0 - 1, "r")
    if s is None:
        s = next((f for f, _ in factorize(q0 + 1) if f != 2), None)
    else:
        s = _check(s, q0 + 1, "s")

    # priority order: a stabilizer holding the full Sylow subgroup for the
    # defining characteristic is type II even if it also holds a torus part
    sets: dict[str, list[int]] = {"V_I_minus": [], "V_I_plus": [], "V_II": []}
    priority = (("V_II", t), ("V_I_minus", r), ("V_I_plus", s))
    for orb in orbits(action):
        c = len(stabilizer(action, orb[0]))
        for name, prime in priority:
            if prime is not None and _p_part(c, prime) == _p_part(G.order, prime):
                sets[name].extend(orb)
                break
    for name in sets:
        sets[name].sort()

    nonzero = action.vspace - 1
    v_i = len(sets["V_I_minus"]) + len(sets["V_I_plus"])
    v_ii = len(sets["V_II"])
    dichotomy = v_i > 0 and v_ii > 0 and v_i + v_ii == nonzero
    return {
        "module": action.label,
        "r": r,
        "s": s,
        "t": t,
        "V_I_minus": sets["V_I_minus"],
        "V_I_plus": sets["V_I_plus"],
        "V_II": sets["V_II"],
        "covers_nonzero": v_i + v_ii == nonzero,
        "dichotomy": dichotomy,
    }


def triple_twist_fixed_dimension(c: int) -> int:
    """Dimension of the fixed diagonal in the threefold twisted Kronecker
    cube over GF(2^(6c)).

    The torus element mu of order m = 2^(2c) - 2^c + 1 acts on the cube's
    diagonal with the eight weights e1 + e2*2^c + e3*2^(2c), e_i = +-1; the
    fixed dimension counts the weights that vanish on mu.
    """
    if c < 1:
        raise ValueError("c must be a positive integer")
    F = field_make(2, 6 * c)
    m = (1 << (2 * c)) - (1 << c) + 1
    assert (F.order - 1) % m == 0
    mu = F.pow(F.generator, (F.order - 1) // m)
    dim = 0
    for e1 in (1, -1):
        for e2 in (1, -1):
            for e3 in (1, -1):
                if F.pow(mu, e1 + e2 * (1 << c) + e3 * (1 << (2 * c))) == 1:
                    dim += 1
    return dim
