import random

import pytest

from cdgraph import gf, groupcore
from cdgraph.groupcore import (
    CeilingExceeded,
    closure,
    centralizer_order,
    cyclic_group,
    derived_subgroup,
    direct_product,
    extraspecial_group,
    group_from_spec,
    module_catalog,
    quaternion_group,
    semidirect,
    sl2_group,
    sylow2_subgroups_sl2,
    sylow_normalizer_count,
)


@pytest.mark.parametrize("q", [4, 5, 8, 9, 16])
def test_sl2_order(q):
    assert sl2_group(q).order == q * (q - 1) * (q + 1)


def test_sl2_class_data():
    # SL2(4) is A5: the classic class equation 60 = 1+12+12+15+20
    assert [c.size for c in sl2_group(4).conjugacy_classes()] == [1, 12, 12, 15, 20]
    # q even: q+1 classes; SL2(5) and SL2(9) have 9 and 13
    for q, wanted in [(4, 5), (8, 9), (16, 17), (5, 9), (9, 13)]:
        assert len(sl2_group(q).conjugacy_classes()) == wanted


@pytest.mark.parametrize("q,e", [(4, 30), (5, 60), (8, 126), (9, 120), (16, 510)])
def test_sl2_exponent(q, e):
    assert sl2_group(q).exponent() == e


def test_class_partition_and_invariance():
    G = sl2_group(8)
    classes = G.conjugacy_classes()
    assert sum(c.size for c in classes) == G.order
    assert all(G.order % c.size == 0 for c in classes)
    seen = set()
    for c in classes:
        assert c.rep == min(c.members) and len(c.members) == c.size
        seen.update(c.members)
    assert len(seen) == G.order
    # conjugation by any generator permutes each class into itself
    cls = G.class_of()
    for c in classes:
        for g in G.generators:
            gi = G.inv(g)
            assert all(cls[G.mul(g, G.mul(x, gi))] == cls[x] for x in c.members)


def test_centralizer_against_commuting_count():
    for G in (quaternion_group(), sl2_group(4)):
        rng = random.Random(7)
        sample = rng.sample(list(G.elements), 6)
        for x in sample:
            brute = sum(1 for y in G.elements if G.mul(x, y) == G.mul(y, x))
            assert centralizer_order(G, x) == brute
    with pytest.raises(ValueError):
        centralizer_order(quaternion_group(), 10**9)


def test_matrix_rep_matches_field_algebra():
    G = sl2_group(8)
    rep = G.rep
    F = rep.field
    rng = random.Random(3)
    sample = rng.sample(list(G.elements), 12)
    for a in sample[:6]:
        for b in sample[6:]:
            A = [list(rep.unpack(a)[:2]), list(rep.unpack(a)[2:])]
            B = [list(rep.unpack(b)[:2]), list(rep.unpack(b)[2:])]
            C = gf.mat_mul(A, B, F)
            assert rep.mul(a, b) == rep.pack(C[0] + C[1])
        Ainv = gf.mat_inv([list(rep.unpack(a)[:2]), list(rep.unpack(a)[2:])], F)
        assert rep.inv(a) == rep.pack(Ainv[0] + Ainv[1])
        assert rep.pack(rep.unpack(a)) == a


def test_closure_bfs_record():
    G = sl2_group(4)
    elements, (codes, parent, genix) = closure(G.rep, G.generators)
    assert set(elements) == set(codes)
    assert codes[0] == G.identity and parent[0] == 0 and genix[0] == -1
    for i in range(1, len(codes)):
        assert codes[i] == G.rep.mul(codes[parent[i]], G.generators[genix[i]])
        assert parent[i] < i


def test_closure_ceiling():
    G = sl2_group(4)
    with pytest.raises(CeilingExceeded):
        closure(G.rep, G.generators, ceiling=10)


def test_derived_subgroups():
    A5 = sl2_group(4)
    assert derived_subgroup(A5) == frozenset(A5.elements)  # perfect
    Q8 = quaternion_group()
    d = derived_subgroup(Q8)
    assert len(d) == 2  # the centre {1, -1}
    H27 = extraspecial_group(3, 27, 3)
    assert len(derived_subgroup(H27)) == 3
    assert derived_subgroup(cyclic_group(12)) == frozenset({cyclic_group(12).identity})


def test_quaternion_structure():
    Q8 = quaternion_group()
    assert Q8.order == 8 and Q8.exponent() == 4
    orders = sorted(Q8.element_order(x) for x in Q8.elements)
    assert orders == [1, 2, 4, 4, 4, 4, 4, 4]
    assert [c.size for c in Q8.conjugacy_classes()] == [1, 1, 2, 2, 2]


@pytest.mark.parametrize("t", [3, 5])
def test_heisenberg_structure(t):
    G = extraspecial_group(t, t**3, t)
    assert G.order == t**3 and G.exponent() == t
    # extraspecial of order t^3: t^2 + t - 1 conjugacy classes
    assert len(G.conjugacy_classes()) == t**2 + t - 1
    assert len(derived_subgroup(G)) == t


def test_extraspecial_rejects_unknown_parameters():
    with pytest.raises(ValueError):
        extraspecial_group(2, 8, 8)
    with pytest.raises(ValueError):
        extraspecial_group(3, 81, 3)


@pytest.mark.parametrize("n", [1, 2, 6, 11, 12, 31])
def test_cyclic_group(n):
    G = cyclic_group(n)
    assert G.order == n
    assert all(c.size == 1 for c in G.conjugacy_classes())
    if n > 1:
        assert G.element_order(G.generators[0]) == n


def test_direct_product_structure():
    A5 = sl2_group(4)
    C7 = cyclic_group(7)
    G = direct_product(A5, C7)
    assert G.order == 420
    assert len(G.conjugacy_classes()) == 5 * 7
    # component-wise element orders: lcm along the two factors
    idx = A5.idx(A5.generators[0]) * C7.order + C7.idx(C7.generators[0])
    assert G.element_order(idx) == 2 * 7
    with pytest.raises(CeilingExceeded):
        direct_product(A5, C7, ceiling=100)
    assert direct_product(A5, C7) is G  # cached


def test_semidirect_normal_subgroup_and_projection():
    act = module_catalog("V0")
    G = semidirect(act)
    H = act.group
    assert G.order == act.vspace * H.order == 960
    horder = H.order
    # V = codes with trivial H part; closed under conjugation by everything
    vcodes = [v * horder + G.identity for v in range(act.vspace)]
    vset = set(vcodes)
    rng = random.Random(11)
    for g in rng.sample(range(G.order), 25):
        gi = G.inv(g)
        assert all(G.mul(g, G.mul(v, gi)) in vset for v in vcodes)
    # code -> code % |H| is a homomorphism onto the acting group's index set
    for _ in range(50):
        a, b = rng.randrange(G.order), rng.randrange(G.order)
        ha = H.elements[a % horder]
        hb = H.elements[b % horder]
        assert G.mul(a, b) % horder == H.idx(H.mul(ha, hb))


def test_semidirect_ceiling():
    with pytest.raises(CeilingExceeded):
        semidirect(module_catalog("natural", 32), ceiling=1_100_000)


def test_module_maps_are_homomorphic():
    act = module_catalog("V0")
    maps = act.materialize()
    H = act.group
    rng = random.Random(5)
    for _ in range(40):
        a, b = rng.choice(H.elements), rng.choice(H.elements)
        ab = H.idx(H.mul(a, b))
        ia, ib = H.idx(a), H.idx(b)
        v = rng.randrange(act.vspace)
        assert maps[ab][v] == maps[ia][maps[ib][v]]


def test_sylow2_subgroups_sl2():
    for q in (4, 8):
        subs = sylow2_subgroups_sl2(q)
        G = sl2_group(q)
        assert len(subs) == q + 1
        for T in subs:
            assert len(T) == q
            assert all(G.mul(x, y) in T for x in T for y in T)
        ident = G.identity
        for i, T1 in enumerate(subs):
            for T2 in subs[i + 1:]:
                assert T1 & T2 == {ident}
    with pytest.raises(ValueError):
        sylow2_subgroups_sl2(5)


@pytest.mark.parametrize("q,u", [(4, 3), (8, 7), (16, 3), (16, 5)])
def test_sylow_normalizer_count(q, u):
    # a torus element of order u > 1 dividing q-1 normalizes exactly two
    # Sylow 2-subgroups (the two opposite unipotent radicals)
    assert sylow_normalizer_count(q, u) == 2


def test_v1_carries_minus_type_quadratic_form():
    """The 4-dimensional GF(2) module with the 5/10 orbit split is the
    minus-type orthogonal module: it carries an invariant quadratic form,
    unique up to scalar, whose 5 nonzero singular vectors form the small
    orbit.  Solved from scratch here as a cross-check on the construction.
    """
    act = module_catalog("V1")
    assert (act.field_t, act.dim) == (2, 4)
    F2 = gf.field_make(2, 1)
    # the generator maps must be GF(2)-linear to begin with
    for gm in act.gen_maps:
        assert gm[0] == 0
        for a in range(16):
            for b in range(16):
                assert gm[a ^ b] == gm[a] ^ gm[b]
    # unknowns: coefficients c_ij (i <= j) of Q(v) = sum c_ij v_i v_j
    pairs = [(i, j) for i in range(4) for j in range(i, 4)]

    def monomials(v):
        bits = [(v >> k) & 1 for k in range(4)]
        return [bits[i] & bits[j] for i, j in pairs]

    rows = []
    for gm in act.gen_maps:
        for v in range(16):
            m1, m2 = monomials(gm[v]), monomials(v)
            rows.append([a ^ b for a, b in zip(m1, m2)])
    basis = gf.nullspace(rows, F2, len(pairs))
    assert len(basis) == 1  # invariant form is unique up to scalar
    coeffs = basis[0]
    singular = [v for v in range(1, 16)
                if sum(c & m for c, m in zip(coeffs, monomials(v))) % 2 == 0]
    # minus type over GF(2) in dimension 4: exactly 5 nonzero singular
    # vectors (plus type would give 9)
    assert len(singular) == 5
    # and they form a single orbit
    orbit = set(singular)
    for gm in act.gen_maps:
        assert {gm[v] for v in orbit} == orbit


def test_group_from_spec_dispatch():
    assert group_from_spec({"construct": "SL2", "q": 4}) is sl2_group(4)
    G = group_from_spec({"construct": "semidirect", "module": "V0"})
    assert G.order == 960
    P = group_from_spec({"construct": "direct_product", "factors": [
        {"construct": "SL2", "q": 4},
        {"construct": "cyclic", "n": 7},
    ]})
    assert P.order == 420
    E = group_from_spec({"construct": "extraspecial", "t": 3, "order": 27, "exponent": 3})
    assert E.order == 27


def test_group_from_spec_errors():
    with pytest.raises(ValueError):
        group_from_spec({"construct": "wreath"})
    with pytest.raises(ValueError):
        group_from_spec(["SL2", 4])
    with pytest.raises(ValueError):
        group_from_spec({"q": 4})
    with pytest.raises(ValueError):
        group_from_spec({"construct": "direct_product", "factors": [{"construct": "SL2", "q": 4}]})
    with pytest.raises(CeilingExceeded):
        group_from_spec({"construct": "SL2", "q": 16}, ceiling=100)
