"""Self-contained acceptance battery.

Each criterion function checks one verifiable claim end to end and returns a
CheckResult; run_all executes the battery in order.  Details are plain
deterministic strings (no timings) so suite output is byte-stable.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import chardeg, classify, groupcore, modact, prime_graph
from .numtheory import primitive_prime_divisors, prime_set


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str


PRODUCT_WITNESSES = (
    ("sl2_4_x_q8", 2,
     {"construct": "direct_product", "factors": [
         {"construct": "SL2", "q": 4},
         {"construct": "extraspecial", "t": 2, "order": 8, "exponent": 4}]}),
    ("sl2_4_x_3_1_2", 3,
     {"construct": "direct_product", "factors": [
         {"construct": "SL2", "q": 4},
         {"construct": "extraspecial", "t": 3, "order": 27, "exponent": 3}]}),
    ("sl2_4_x_5_1_2", 5,
     {"construct": "direct_product", "factors": [
         {"construct": "SL2", "q": 4},
         {"construct": "extraspecial", "t": 5, "order": 125, "exponent": 5}]}),
)

EXTENSION_EXPECTATIONS = {
    "V0": (((1, 1), (3, 2), (4, 1), (5, 1), (15, 4)),
           (2, 3, 5), ((3, 5),)),
    "V1": (((1, 1), (3, 2), (4, 1), (5, 4), (10, 2), (15, 1), (20, 1)),
           (2, 3, 5), ((2, 5), (3, 5))),
    "W": (((1, 1), (2, 2), (3, 2), (4, 2), (5, 1), (6, 1), (40, 6)),
          (2, 3, 5), ((2, 3), (2, 5))),
    "U": (((1, 1), (2, 2), (3, 2), (4, 2), (5, 1), (6, 1), (24, 5)),
          (2, 3, 5), ((2, 3),)),
}

STRETCH_DEGREE_SET = frozenset({1, 15, 16, 17, 51, 68, 204, 255, 272, 340})


def criterion_01_sl2_component_structure() -> CheckResult:
    ok = True
    notes = []
    for a in (2, 3, 4, 5):
        q = 2 ** a
        closed = chardeg.sl2_degrees_closed_form(q)
        if a <= 4:
            computed = chardeg.character_degrees(groupcore.sl2_group(q))
            if computed != closed:
                ok = False
                notes.append(f"q={q} class-algebra degrees disagree")
                continue
        g = prime_graph.graph_from_degrees(closed)
        comps = tuple(sorted(prime_graph.components(g)))
        expected = tuple(sorted(((2,), prime_set(q - 1), prime_set(q + 1))))
        cliques = all(prime_graph.is_clique(g, c) for c in comps)
        if comps != expected or not cliques:
            ok = False
            notes.append(f"q={q} wrong component structure {comps}")
        else:
            notes.append(f"q={q} ok")
    return CheckResult("c01 sl2 graphs: three clique components", ok, "; ".join(notes))


def criterion_02_catalogue_orbits() -> CheckResult:
    expected = {
        "V0": ((15, 4, "C2^2"),),
        "V1": ((5, 12, "A4"), (10, 6, "S3")),
        "W": ((40, 3, "C3"), (40, 3, "C3")),
        "U": ((24, 5, "C5"),),
    }
    ok = True
    notes = []
    for label, want in expected.items():
        rep = modact.orbit_data(groupcore.module_catalog(label))
        got = tuple((o.size, o.stabilizer_order, o.stabilizer_tag) for o in rep.orbits)
        if got != want or rep.kernel_order != 1:
            ok = False
            notes.append(f"{label} got {got} kernel {rep.kernel_order}")
        else:
            notes.append(f"{label} ok")
    return CheckResult("c02 catalogue orbit data", ok, "; ".join(notes))


def criterion_03_sylow_normalizers() -> CheckResult:
    pairs = ((4, 3), (8, 7), (16, 3), (16, 5), (32, 31))
    ok = True
    notes = []
    for q, u in pairs:
        n = groupcore.sylow_normalizer_count(q, u)
        if n != 2:
            ok = False
        notes.append(f"q={q} u={u}: {n}")
    return CheckResult("c03 order-u subgroups normalize exactly 2 Sylow 2-subgroups",
                       ok, "; ".join(notes))


def criterion_04_normal_sylow_condition() -> CheckResult:
    ok = True
    notes = []
    for label, q, want in (("natural", 2, True), ("W", 3, True), ("U", 5, True)):
        act = groupcore.module_catalog(label, 4 if label == "natural" else None)
        sat, failing = modact.check_nq(act, q)
        if sat is not want or failing:
            ok = False
        notes.append(f"{act.label} N_{q}={sat}")
    v1 = groupcore.module_catalog("V1")
    orb = {len(o): o for o in modact.orbits(v1)}
    sat2, fail2 = modact.check_nq(v1, 2)
    sat3, fail3 = modact.check_nq(v1, 3)
    if sat2 or fail2 != orb[10] or sat3 or fail3 != orb[5]:
        ok = False
    notes.append(f"V1 N_2={sat2} failing={len(fail2)} N_3={sat3} failing={len(fail3)}")
    return CheckResult("c04 normal Sylow condition over the catalogue", ok,
                       "; ".join(notes))


def criterion_05_type_dichotomy() -> CheckResult:
    ok = True
    v1 = modact.v_set_decomposition(groupcore.module_catalog("V1"), 3, 5)
    orb = {len(o): list(o) for o in modact.orbits(groupcore.module_catalog("V1"))}
    if not (v1["dichotomy"] and v1["V_I_minus"] == orb[10]
            and v1["V_II"] == orb[5] and not v1["V_I_plus"]):
        ok = False
    notes = [f"V1 dichotomy={v1['dichotomy']}"]
    for q in (4, 8):
        d = modact.v_set_decomposition(groupcore.module_catalog("natural", q))
        if d["dichotomy"]:
            ok = False
        notes.append(f"natural({q}) dichotomy={d['dichotomy']}")
    return CheckResult("c05 type I/II dichotomy", ok, "; ".join(notes))


def criterion_06_extension_graphs() -> CheckResult:
    ok = True
    notes = []
    for label, (mult, verts, edges) in EXTENSION_EXPECTATIONS.items():
        G = groupcore.semidirect(groupcore.module_catalog(label))
        got = chardeg.degree_multiset(G)
        g = prime_graph.graph_from_degrees(chardeg.character_degrees(G))
        if got != mult or g.vertices != verts or g.edges != edges:
            ok = False
            notes.append(f"{label} got degrees {got} graph {g.edges}")
        else:
            notes.append(f"{label} ok")
    return CheckResult("c06 extension degree multisets and graphs", ok, "; ".join(notes))


def criterion_07_product_witnesses() -> CheckResult:
    ok = True
    notes = []
    for tag, p, spec in PRODUCT_WITNESSES:
        case = classify.ClassificationCase("T2a", p, v_gk=frozenset({p}),
                                           k_type="SL2(4)")
        report = classify.verify_witness(spec, case, witness_id=tag)
        if not report.ok:
            ok = False
            notes.append(f"{tag} diffs {report.diffs}")
        else:
            notes.append(f"{tag} ok")
    return CheckResult("c07 direct product witnesses match T2a", ok, "; ".join(notes))


def criterion_08_prediction_sweep() -> CheckResult:
    cases = classify.predict_sweep_cases(range(3, 9))
    bad = []
    for case in cases:
        g = classify.predict_graph(case)
        if (prime_graph.cut_vertices(g) != (case.p,)
                or case.p not in prime_graph.complete_vertices(g)):
            bad.append(case)
    return CheckResult("c08 predicted graphs: unique complete cut vertex p",
                       not bad, f"{len(cases)} cases, {len(bad)} failures")


def criterion_09_primitive_divisor_table() -> CheckResult:
    exceptions = []
    for m in range(2, 51):
        for n in range(2, 13):
            if not primitive_prime_divisors(m, n):
                exceptions.append((m, n))
    expected = sorted([(2, 6)] + [(m, 2) for m in (3, 7, 15, 31)])
    ok = sorted(exceptions) == expected
    return CheckResult("c09 primitive prime divisor exceptions", ok,
                       f"exceptions {sorted(exceptions)}")


def criterion_10_twisted_cube_dimension() -> CheckResult:
    ok = True
    notes = []
    for c in (1, 2):
        m = (1 << (2 * c)) - (1 << c) + 1
        oracle = sum(1 for e1 in (1, -1) for e2 in (1, -1) for e3 in (1, -1)
                     if (e1 + e2 * (1 << c) + e3 * (1 << (2 * c))) % m == 0)
        dim = modact.triple_twist_fixed_dimension(c)
        if dim != oracle or dim < 1:
            ok = False
        notes.append(f"c={c}: dim={dim} oracle={oracle}")
    if modact.triple_twist_fixed_dimension(1) != 2:
        ok = False
    return CheckResult("c10 twisted cube fixed dimension", ok, "; ".join(notes))


def _determinism_corpus():
    yield groupcore.sl2_group(4)
    yield groupcore.sl2_group(8)
    yield groupcore.sl2_group(16)
    yield groupcore.group_from_spec({"construct": "SL2", "q": 5})
    for label in ("V0", "V1", "W", "U"):
        yield groupcore.semidirect(groupcore.module_catalog(label))
    for _, _, spec in PRODUCT_WITNESSES:
        yield groupcore.group_from_spec(spec)


def criterion_11_two_prime_determinism() -> CheckResult:
    ok = True
    notes = []
    for G in _determinism_corpus():
        p1 = chardeg.working_prime(G)
        d1 = chardeg.character_degrees(G, prime=p1)
        p2 = chardeg.working_prime(G, above=p1)
        d2 = chardeg.character_degrees(G, prime=p2)
        r = len(G.conjugacy_classes())
        good = (d1 == d2 and len(d1) == r
                and sum(d * d for d in d1) == G.order
                and all(G.order % d == 0 for d in d1))
        if not good:
            ok = False
            notes.append(f"{G.label} mismatch p={p1},{p2}")
        else:
            notes.append(f"{G.label} ok")
    return CheckResult("c11 degree invariants stable across two primes", ok,
                       "; ".join(notes))


def criterion_12_stretch_degree_set() -> CheckResult:
    act = groupcore.module_catalog("twist8")
    G = groupcore.semidirect(act)
    ok = G.order == 1_044_480
    degs = set(chardeg.character_degrees(G))
    ok = ok and degs == set(STRETCH_DEGREE_SET)
    return CheckResult("c12 degree set of the 8-dimensional descent extension",
                       ok, f"|G|={G.order} degrees {sorted(degs)}")


SHORT_CRITERIA = (
    criterion_01_sl2_component_structure,
    criterion_02_catalogue_orbits,
    criterion_03_sylow_normalizers,
    criterion_04_normal_sylow_condition,
    criterion_05_type_dichotomy,
    criterion_06_extension_graphs,
    criterion_07_product_witnesses,
    criterion_08_prediction_sweep,
    criterion_09_primitive_divisor_table,
    criterion_10_twisted_cube_dimension,
    criterion_11_two_prime_determinism,
)

LONG_CRITERIA = (criterion_12_stretch_degree_set,)


def run_all(long: bool = False) -> list[CheckResult]:
    fns = SHORT_CRITERIA + (LONG_CRITERIA if long else ())
    return [fn() for fn in fns]


def gallery():
    """Named graphs for the suite's figure output."""
    items = []
    for q in (4, 8, 16, 32):
        items.append((f"sl2_{q}",
                      prime_graph.graph_from_degrees(chardeg.sl2_degrees_closed_form(q))))
    for label in EXTENSION_EXPECTATIONS:
        G = groupcore.semidirect(groupcore.module_catalog(label))
        items.append((f"ext_{label}",
                      prime_graph.graph_from_degrees(chardeg.character_degrees(G))))
    for tag, _, spec in PRODUCT_WITNESSES:
        G = groupcore.group_from_spec(spec)
        items.append((tag,
                      prime_graph.graph_from_degrees(chardeg.character_degrees(G))))
    return items
