"""Prime graphs on multisets of positive integers.

The graph of a multiset D has a vertex for every prime dividing some member
of D and an edge {p, q} whenever a single member is divisible by pq.
Applied to character degrees this is the character degree graph; applied to
orbit sizes it is the orbit size graph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .numtheory import prime_set


@dataclass(frozen=True)
class Graph:
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def adjacency(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {v: [] for v in self.vertices}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        for v in adj:
            adj[v].sort()
        return adj


def make_graph(vertices, edges) -> Graph:
    vs = tuple(sorted(set(vertices)))
    vset = set(vs)
    es = set()
    for a, b in edges:
        if a == b or a not in vset or b not in vset:
            raise ValueError(f"bad edge ({a}, {b})")
        es.add((min(a, b), max(a, b)))
    return Graph(vs, tuple(sorted(es)))


def graph_from_degrees(degrees) -> Graph:
    vertices = set()
    edges = set()
    for d in degrees:
        ps = sorted(prime_set(d))
        vertices.update(ps)
        for i in range(len(ps)):
            for j in range(i + 1, len(ps)):
                edges.add((ps[i], ps[j]))
    return Graph(tuple(sorted(vertices)), tuple(sorted(edges)))


def components(g: Graph) -> tuple[tuple[int, ...], ...]:
    adj = g.adjacency()
    seen: set[int] = set()
    out = []
    for v in g.vertices:
        if v in seen:
            continue
        comp = [v]
        seen.add(v)
        stack = [v]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        out.append(tuple(sorted(comp)))
    return tuple(out)


def cut_vertices(g: Graph) -> tuple[int, ...]:
    """Articulation points, by depth-first search lowpoints."""
    adj = g.adjacency()
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    cuts: set[int] = set()
    counter = [0]

    def dfs(u, parent):
        disc[u] = low[u] = counter[0]
        counter[0] += 1
        children = 0
        for w in adj[u]:
            if w == parent:
                continue
            if w in disc:
                low[u] = min(low[u], disc[w])
            else:
                children += 1
                dfs(w, u)
                low[u] = min(low[u], low[w])
                if parent is not None and low[w] >= disc[u]:
                    cuts.add(u)
        if parent is None and children > 1:
            cuts.add(u)

    for v in g.vertices:
        if v not in disc:
            dfs(v, None)
    return tuple(sorted(cuts))


def complete_vertices(g: Graph) -> tuple[int, ...]:
    """Vertices adjacent to every other vertex."""
    n = len(g.vertices)
    adj = g.adjacency()
    return tuple(v for v in g.vertices if len(adj[v]) == n - 1)


def is_clique(g: Graph, vs) -> bool:
    vs = sorted(set(vs))
    eset = set(g.edges)
    return all((vs[i], vs[j]) in eset
               for i in range(len(vs)) for j in range(i + 1, len(vs)))


def graph_to_json(g: Graph) -> dict:
    return {"vertices": list(g.vertices), "edges": [list(e) for e in g.edges]}


def graph_from_json(d: dict) -> Graph:
    if not isinstance(d, dict) or "vertices" not in d or "edges" not in d:
        raise ValueError("graph object needs 'vertices' and 'edges'")
    return make_graph(d["vertices"], [tuple(e) for e in d["edges"]])


def graph_to_dot(g: Graph, name: str = "delta") -> str:
    lines = [f"graph {name} {{"]
    for v in g.vertices:
        lines.append(f'  "{v}";')
    for a, b in g.edges:
        lines.append(f'  "{a}" -- "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
