"""Predicted character degree graphs for the classified extension shapes.

A classification case names one of the seven structural outcomes for groups
whose degree graph has a cut vertex arising from an SL2-module extension,
together with the numeric data that fixes the graph: the special prime p,
the field exponent a (SL2(2^a) cases), the odd outer primes, and the degree
primes of the acting quotient.  `predict_graph` turns a case into its exact
graph; `verify_witness` compares that prediction against the graph computed
from a concrete group.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .chardeg import character_degrees
from .groupcore import DEFAULT_CEILING, FiniteGroup, group_from_spec
from .numtheory import is_prime, prime_set
from .prime_graph import Graph, graph_from_degrees, make_graph

THEOREMS = ("T1a", "T1b", "T2a", "T2b_i", "T2b_ii", "T2c_i", "T2c_ii")
K_TYPES = ("SL2(4)", "SL2(5)")


@dataclass(frozen=True)
class ClassificationCase:
    theorem: str
    p: int
    a: int | None = None
    pi_outer: frozenset = frozenset()
    v_gk: frozenset = field(default_factory=frozenset)
    k_type: str | None = None


def _require(cond: bool, msg: str):
    if not cond:
        raise ValueError(msg)


def validate_case(case: ClassificationCase):
    _require(case.theorem in THEOREMS, f"unknown theorem label {case.theorem!r}")
    _require(is_prime(case.p), f"p must be prime, got {case.p}")
    _require(all(is_prime(x) for x in case.pi_outer), "pi_outer must hold primes")
    _require(all(is_prime(x) for x in case.v_gk), "v_gk must hold primes")
    t = case.theorem
    if t in ("T1a", "T1b"):
        _require(case.a is not None and case.a >= 3, "T1 requires a >= 3")
        _require(case.v_gk == frozenset({case.p}), "T1 requires v_gk == {p}")
        if case.p == 2:
            _require(t == "T1a", "T1b requires p odd")
            _require(case.pi_outer <= {2}, "for p = 2 outer primes reduce to {2}")
        else:
            _require(all(x % 2 for x in case.pi_outer),
                     "odd p requires an odd-order outer quotient")
    else:
        _require(case.pi_outer <= {2}, "T2 outer primes lie in {2}")
        if t == "T2a":
            _require(case.k_type in K_TYPES, "T2a needs k_type SL2(4) or SL2(5)")
            _require(case.v_gk == frozenset({case.p}), "T2a requires v_gk == {p}")
            if case.p == 5:
                _require(case.k_type == "SL2(4)" and not case.pi_outer,
                         "p = 5 forces k_type SL2(4) and a direct product")
        elif t == "T2b_i":
            _require(case.p != 2, "T2b_i requires p odd")
            _require(case.v_gk == frozenset({case.p}), "T2b_i requires v_gk == {p}")
        elif t == "T2b_ii":
            _require(case.p == 5, "T2b_ii fixes p = 5")
            _require(case.v_gk <= {5}, "T2b_ii requires v_gk within {5}")
        elif t == "T2c_i":
            _require(case.p != 5, "T2c_i requires p != 5")
            _require(case.v_gk == frozenset({case.p}), "T2c_i requires v_gk == {p}")
        elif t == "T2c_ii":
            _require(case.p == 2, "T2c_ii fixes p = 2")
            _require(case.v_gk <= {2}, "T2c_ii requires v_gk within {2}")


def _clique(vs) -> set:
    return {(min(a, b), max(a, b)) for a, b in combinations(sorted(vs), 2)}


def predict_graph(case: ClassificationCase) -> Graph:
    """The exact degree graph the case's shape determines."""
    validate_case(case)
    t, p, po = case.theorem, case.p, set(case.pi_outer)
    if t in ("T1a", "T1b"):
        q = 2 ** case.a
        left, right = set(prime_set(q - 1)), set(prime_set(q + 1))
        if p == 2:
            vs = {2} | left | right
            edges = _clique(left | {2}) | _clique(right | {2})
        elif t == "T1a":
            vs = {2, p} | left | right | po
            edges = (_clique(left | po | {p}) | _clique(right | po | {p})
                     | {(2, p)})
        else:
            vs = {2, p} | left | right | po
            edges = _clique(vs - {2}) | {(2, p)}
        return make_graph(vs, edges)
    vs = {2, 3, 5, p}
    edges = {(min(p, v), max(p, v)) for v in {2, 3, 5} - {p}}
    if t == "T2a":
        if case.k_type == "SL2(5)" or po == {2}:
            edges.add((2, 3))
    elif t == "T2b_i":
        edges.add((3, 5))
    elif t == "T2b_ii":
        edges = {(2, 5), (3, 5)}
    elif t == "T2c_i":
        edges.add((2, 3))
    elif t == "T2c_ii":
        edges = {(2, 3), (2, 5)}
    return make_graph(vs, edges)


@dataclass(frozen=True)
class VerificationReport:
    witness_id: str | None
    group_label: str
    group_order: int
    theorem: str
    predicted: Graph
    computed: Graph
    ok: bool
    diffs: tuple[str, ...]

    def to_json(self) -> dict:
        return {
            "witness_id": self.witness_id,
            "group": self.group_label,
            "order": self.group_order,
            "theorem": self.theorem,
            "predicted": {"vertices": list(self.predicted.vertices),
                          "edges": [list(e) for e in self.predicted.edges]},
            "computed": {"vertices": list(self.computed.vertices),
                         "edges": [list(e) for e in self.computed.edges]},
            "ok": self.ok,
            "diffs": list(self.diffs),
        }


def verify_witness(group, case: ClassificationCase,
                   ceiling: int = DEFAULT_CEILING,
                   witness_id: str | None = None) -> VerificationReport:
    """Compare the case's predicted graph with the graph computed from a
    concrete group (given directly or as a spec document)."""
    G = group if isinstance(group, FiniteGroup) else group_from_spec(group, ceiling)
    predicted = predict_graph(case)
    computed = graph_from_degrees(character_degrees(G))
    diffs = []
    for v in sorted(set(predicted.vertices) - set(computed.vertices)):
        diffs.append(f"missing vertex {v}")
    for v in sorted(set(computed.vertices) - set(predicted.vertices)):
        diffs.append(f"extra vertex {v}")
    for e in sorted(set(predicted.edges) - set(computed.edges)):
        diffs.append(f"missing edge {e[0]}-{e[1]}")
    for e in sorted(set(computed.edges) - set(predicted.edges)):
        diffs.append(f"extra edge {e[0]}-{e[1]}")
    if G.order % case.p:
        diffs.append(f"p = {case.p} does not divide |G| = {G.order}")
    return VerificationReport(
        witness_id=witness_id, group_label=G.label, group_order=G.order,
        theorem=case.theorem, predicted=predicted, computed=computed,
        ok=not diffs, diffs=tuple(diffs))


def case_from_json(d: dict) -> ClassificationCase:
    if not isinstance(d, dict) or "theorem" not in d or "p" not in d:
        raise ValueError("case object needs 'theorem' and 'p'")
    extra = set(d) - {"theorem", "p", "a", "pi_outer", "v_gk", "k_type"}
    if extra:
        raise ValueError(f"unknown case fields {sorted(extra)}")
    case = ClassificationCase(
        theorem=d["theorem"], p=int(d["p"]),
        a=int(d["a"]) if d.get("a") is not None else None,
        pi_outer=frozenset(int(x) for x in d.get("pi_outer", [])),
        v_gk=frozenset(int(x) for x in d.get("v_gk", [])),
        k_type=d.get("k_type"))
    validate_case(case)
    return case


def witness_from_json(d: dict):
    """Parse {'id', 'group', 'case'} into its parts."""
    if not isinstance(d, dict) or "group" not in d or "case" not in d:
        raise ValueError("witness object needs 'group' and 'case'")
    return d.get("id"), d["group"], case_from_json(d["case"])


def _least_odd_prime_avoiding(n: int) -> int:
    p = 3
    while n % p == 0:
        p += 2
        while not is_prime(p):
            p += 2
    return p


def predict_sweep_cases(a_values=range(3, 9)) -> list[ClassificationCase]:
    """Representative valid T1 cases across field exponents.

    For each a: the p = 2 shape, both T1a and T1b for a clean odd p away
    from q^2 - 1, each without and with one odd outer prime.
    """
    cases = []
    for a in a_values:
        q = 2 ** a
        p = _least_odd_prime_avoiding(q * (q * q - 1))
        w = _least_odd_prime_avoiding(p * q * (q * q - 1))
        cases.append(ClassificationCase("T1a", 2, a=a, v_gk=frozenset({2})))
        for theorem in ("T1a", "T1b"):
            for po in (frozenset(), frozenset({w})):
                cases.append(ClassificationCase(theorem, p, a=a, pi_outer=po,
                                                v_gk=frozenset({p})))
    return cases
