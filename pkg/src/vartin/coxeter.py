"""Coxeter graphs, the Tits representation, and exact Coxeter-group arithmetic.

A Coxeter graph is a finite vertex list with a symmetric label m(s,t) in
{2, 3, ...} or INFINITY for each unordered pair (absent pairs mean 2, the
diagonal is implicitly 1).  The group W acts on the span of the simple roots
through the Tits representation rho(s)(v) = v - <v, alpha_s> alpha_s, where
<alpha_s, alpha_t> = -2cos(pi/m(s,t)) for finite labels and -2 for infinite
ones.  Because rho is faithful, a group element is canonically its exact
matrix in the simple-root basis; words are carried only as provenance.

Convention used throughout: prod_r(x, y, m) is the length-m word "...yxy"
and the rightmost letter acts first on vectors, so the matrix of a word is
the left-to-right product of the letter matrices.
"""

from __future__ import annotations

import json

from .errors import CapExceededError, InputError, NonReducedWordError
from .scalar import INFINITY, Scalar, ScalarRing, make_ring


def prod_r(x, y, m: int) -> list:
    """The alternating word ...yxy of length m (rightmost letter y)."""
    out = [y if i % 2 == 0 else x for i in range(m)]
    out.reverse()
    return out


class CoxeterGraph:
    """A validated Coxeter graph with its scalar ring and bilinear form."""

    __slots__ = ("vertices", "spherical_hint", "ring", "form",
                 "_index", "_labels", "_reflections")

    def __init__(self, vertices, labels, spherical_hint=None):
        vertices = tuple(vertices)
        if not vertices:
            raise InputError("a Coxeter graph needs at least one vertex")
        self.vertices = vertices
        self._index = {name: i for i, name in enumerate(vertices)}
        if len(self._index) != len(vertices):
            raise InputError("duplicate vertex names")
        self.spherical_hint = spherical_hint
        store = {}
        for (u, v), m in labels.items():
            i, j = self.vertex_index(u), self.vertex_index(v)
            if i == j:
                raise InputError(f"self-label on vertex {u!r}")
            if m != INFINITY and (not isinstance(m, int) or m < 2):
                raise InputError(f"label m={m!r} on ({u!r},{v!r}) violates m >= 2")
            key = (min(i, j), max(i, j))
            if key in store and store[key] != m:
                raise InputError(f"conflicting labels for edge ({u!r},{v!r})")
            if m != 2:
                store[key] = m
        self._labels = store
        self.ring = make_ring({2, *store.values()})
        self.form = BilinearForm(self)
        self._reflections = None

    @property
    def rank(self) -> int:
        return len(self.vertices)

    def vertex_index(self, v) -> int:
        if isinstance(v, int):
            if 0 <= v < len(self.vertices):
                return v
            raise InputError(f"vertex index {v} out of range")
        try:
            return self._index[v]
        except KeyError:
            raise InputError(f"unknown vertex {v!r}") from None

    def label(self, u, v):
        """m(u,v): 1 on the diagonal, 2 for absent pairs."""
        i, j = self.vertex_index(u), self.vertex_index(v)
        if i == j:
            return 1
        return self._labels.get((min(i, j), max(i, j)), 2)

    def finite_pairs(self):
        """All index pairs (i, j), i < j, with m(i,j) < INFINITY."""
        n = len(self.vertices)
        return [(i, j) for i in range(n) for j in range(i + 1, n)
                if self.label(i, j) != INFINITY]

    def simple_root(self, v) -> tuple:
        i = self.vertex_index(v)
        return tuple(self.ring.one if k == i else self.ring.zero
                     for k in range(len(self.vertices)))

    def reflections(self) -> tuple:
        """Tits matrices of all simple reflections, cached."""
        if self._reflections is None:
            self._reflections = tuple(simple_reflection(self, i)
                                      for i in range(len(self.vertices)))
        return self._reflections

    def __eq__(self, other):
        return (isinstance(other, CoxeterGraph)
                and other.vertices == self.vertices
                and other._labels == self._labels)

    def __hash__(self):
        return hash((self.vertices, tuple(sorted(self._labels.items()))))

    def __repr__(self):
        edges = ", ".join(f"{self.vertices[i]}-{self.vertices[j]}:{m}"
                          for (i, j), m in sorted(self._labels.items()))
        return f"CoxeterGraph({list(self.vertices)}; {edges or 'no edges'})"


class BilinearForm:
    """The symmetric matrix <alpha_s, alpha_t> over the graph's scalar ring."""

    __slots__ = ("graph", "ring", "matrix")

    def __init__(self, graph: CoxeterGraph):
        self.graph = graph
        ring = graph.ring
        self.ring = ring
        n = len(graph.vertices)
        two = ring.from_int(2)
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                if i == j:
                    row.append(two)
                    continue
                m = graph.label(i, j)
                row.append(-two if m == INFINITY else -ring.two_cos_pi_over(m))
            rows.append(tuple(row))
        self.matrix = tuple(rows)

    def pairing(self, u, v) -> Scalar:
        """<u, v> for coordinate vectors over the simple roots."""
        acc = self.ring.zero
        for i, ui in enumerate(u):
            if ui.is_zero():
                continue
            row = self.matrix[i]
            inner = self.ring.zero
            for j, vj in enumerate(v):
                if not vj.is_zero():
                    inner = inner + row[j] * vj
            acc = acc + ui * inner
        return acc


def graph_from_dict(doc) -> CoxeterGraph:
    """Build a graph from the JSON document shape used by the CLI."""
    if not isinstance(doc, dict):
        raise InputError("graph document must be a JSON object")
    vertices = doc.get("vertices")
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise InputError('"vertices" must be a list of strings')
    labels = {}
    seen = set()
    for k, edge in enumerate(doc.get("edges", [])):
        where = f"edges[{k}]"
        if not isinstance(edge, dict) or "u" not in edge or "v" not in edge:
            raise InputError(f'{where}: expected an object with "u" and "v"')
        u, v, m = edge["u"], edge["v"], edge.get("m")
        if m == "inf":
            m = INFINITY
        elif not isinstance(m, int):
            raise InputError(f'{where}: "m" must be an integer >= 2 or "inf"')
        elif m < 2:
            raise InputError(f'{where}: m={m} violates m >= 2')
        key = frozenset((u, v))
        if len(key) == 1:
            raise InputError(f"{where}: loop on vertex {u!r}")
        if key in seen:
            raise InputError(f"{where}: duplicate edge {u!r}-{v!r}")
        seen.add(key)
        labels[(u, v)] = m
    return CoxeterGraph(vertices, labels)


def parse_graph(text: str) -> CoxeterGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"graph file is not valid JSON: {exc}") from None
    return graph_from_dict(doc)


def load_graph(path) -> CoxeterGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


class WElement:
    """A Coxeter group element as its exact Tits matrix.

    Equality and hashing use the matrix only (valid since rho is faithful);
    the optional word is non-canonical provenance, a tuple of vertex indices.
    """

    __slots__ = ("graph", "matrix", "word", "_hash")

    def __init__(self, graph: CoxeterGraph, matrix, word=None):
        self.graph = graph
        self.matrix = matrix
        self.word = word
        self._hash = None

    @classmethod
    def identity(cls, graph: CoxeterGraph) -> WElement:
        ring = graph.ring
        n = len(graph.vertices)
        rows = tuple(tuple(ring.one if i == j else ring.zero for j in range(n))
                     for i in range(n))
        return cls(graph, rows, word=())

    def __mul__(self, other: WElement) -> WElement:
        if other.graph != self.graph:
            raise InputError("elements of different Coxeter groups")
        word = None
        if self.word is not None and other.word is not None:
            word = self.word + other.word
        return WElement(self.graph, _mat_mul(self.matrix, other.matrix), word)

    def apply(self, vector):
        """Matrix-vector action on a coordinate vector (rightmost-first words)."""
        return _mat_vec(self.matrix, vector)

    def is_identity(self) -> bool:
        ring = self.graph.ring
        one, zero = ring.one, ring.zero
        return all(entry == (one if i == j else zero)
                   for i, row in enumerate(self.matrix)
                   for j, entry in enumerate(row))

    def inverse(self) -> WElement:
        if self.word is not None:
            refl = self.graph.reflections()
            out = WElement.identity(self.graph)
            for s in reversed(self.word):
                out = out * refl[s]
            return out
        return WElement(self.graph, _mat_inverse(self.graph.ring, self.matrix))

    def order(self, cap: int = 10000):
        """Least t <= cap with self^t = 1, else INFINITY."""
        acc = self
        for t in range(1, cap + 1):
            if acc.is_identity():
                return t
            acc = acc * self
        return INFINITY

    def __eq__(self, other):
        return (isinstance(other, WElement)
                and other.graph == self.graph
                and other.matrix == self.matrix)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.matrix)
        return self._hash

    def __repr__(self):
        if self.word is not None:
            names = ".".join(self.graph.vertices[s] for s in self.word)
            return f"WElement({names or '1'})"
        return "WElement(<matrix>)"


def _mat_mul(a, b):
    n = len(a)
    rows = []
    for i in range(n):
        ai = a[i]
        row = []
        for j in range(n):
            acc = None
            for k in range(n):
                x = ai[k]
                if x.is_zero():
                    continue
                y = b[k][j]
                if y.is_zero():
                    continue
                term = x * y
                acc = term if acc is None else acc + term
            row.append(acc if acc is not None else x.ring.zero)
        rows.append(tuple(row))
    return tuple(rows)


def _mat_vec(a, v):
    n = len(a)
    out = []
    for i in range(n):
        acc = None
        for k in range(n):
            x = a[i][k]
            if x.is_zero() or v[k].is_zero():
                continue
            term = x * v[k]
            acc = term if acc is None else acc + term
        out.append(acc if acc is not None else v[0].ring.zero)
    return tuple(out)


def _mat_inverse(ring: ScalarRing, matrix):
    """Gauss-Jordan over the fraction field Q(c); exact."""
    n = len(matrix)
    work = [list(row) for row in matrix]
    inv = [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if not work[r][col].is_zero()), None)
        if pivot is None:
            raise InputError("matrix is singular")
        work[col], work[pivot] = work[pivot], work[col]
        inv[col], inv[pivot] = inv[pivot], inv[col]
        scale = work[col][col].inverse()
        work[col] = [x * scale for x in work[col]]
        inv[col] = [x * scale for x in inv[col]]
        for r in range(n):
            if r == col or work[r][col].is_zero():
                continue
            factor = work[r][col]
            work[r] = [a - factor * b for a, b in zip(work[r], work[col])]
            inv[r] = [a - factor * b for a, b in zip(inv[r], inv[col])]
    return tuple(tuple(row) for row in inv)


def simple_reflection(graph: CoxeterGraph, s) -> WElement:
    """The Tits matrix of rho(s); an involution."""
    si = graph.vertex_index(s)
    ring = graph.ring
    n = len(graph.vertices)
    B = graph.form.matrix
    rows = []
    for i in range(n):
        if i != si:
            rows.append(tuple(ring.one if j == i else ring.zero for j in range(n)))
        else:
            row = []
            for j in range(n):
                delta = ring.one if j == si else ring.zero
                row.append(delta - B[j][si])
            rows.append(tuple(row))
    return WElement(graph, tuple(rows), word=(si,))


def word_element(graph: CoxeterGraph, word) -> WElement:
    """The element of a vertex word (names or indices), rightmost applied first."""
    refl = graph.reflections()
    out = WElement.identity(graph)
    for v in word:
        out = out * refl[graph.vertex_index(v)]
    return out


class WGroupTable:
    """Full enumeration of a finite Coxeter group, in BFS discovery order."""

    __slots__ = ("graph", "elements", "_index")

    def __init__(self, graph: CoxeterGraph, elements):
        self.graph = graph
        self.elements = tuple(elements)
        self._index = {w.matrix: i for i, w in enumerate(self.elements)}

    @property
    def order(self) -> int:
        return len(self.elements)

    def index_of(self, w: WElement) -> int:
        try:
            return self._index[w.matrix]
        except KeyError:
            raise InputError("element does not belong to this table") from None

    def __contains__(self, w):
        return isinstance(w, WElement) and w.matrix in self._index

    def longest_length(self) -> int:
        """Length of the longest element (= word length of the last BFS level)."""
        return max(len(w.word) for w in self.elements)


def enumerate_w(graph: CoxeterGraph, cap: int = 20000) -> WGroupTable:
    """Breadth-first closure of the simple reflections under products.

    Elements are discovered by depth and, within a depth, in lexicographic
    word order, which makes the table deterministic.  Raises
    CapExceededError when more than `cap` elements appear (the graph is then
    treated as non-spherical).
    """
    if cap < 1:
        raise InputError("cap must be >= 1")
    refl = graph.reflections()
    identity = WElement.identity(graph)
    elements = [identity]
    seen = {identity.matrix}
    frontier = [identity]
    while frontier:
        new_frontier = []
        for w in frontier:
            for s in range(len(graph.vertices)):
                nxt = w * refl[s]
                if nxt.matrix in seen:
                    continue
                seen.add(nxt.matrix)
                elements.append(nxt)
                new_frontier.append(nxt)
                if len(elements) > cap:
                    raise CapExceededError(
                        f"group not spherical within cap={cap}")
        frontier = new_frontier
    return WGroupTable(graph, elements)


def inversion_set(roots, word) -> list:
    """Positive-root indices sent negative by the element of a reduced word.

    For word s_1 ... s_r the i-th entry is the root of s_r ... s_{i+1}
    applied to alpha_{s_i} (the last entry is alpha_{s_r}).  A non-reduced
    word is detected by a repeated or negative entry and rejected.
    """
    graph = roots.graph
    refl = graph.reflections()
    idxs = [graph.vertex_index(v) for v in word]
    suffix = WElement.identity(graph)
    out = []
    for i in range(len(idxs) - 1, -1, -1):
        beta = suffix.apply(graph.simple_root(idxs[i]))
        signed = roots.signed_index(beta)
        if signed is None or signed < 0 or signed in out:
            raise NonReducedWordError(f"word {list(word)!r} is not reduced")
        out.append(signed)
        suffix = suffix * refl[idxs[i]]
    out.reverse()
    return out


def centralizer(table: WGroupTable, theta: WElement) -> list:
    """All u in W with u*theta = theta*u, by exhaustive scan."""
    return [u for u in table.elements if u * theta == theta * u]


# ---------------------------------------------------------------------------
# Right-angled constructions on plain simple graphs.

class SimpleGraph:
    """An unlabeled simple graph (for the right-angled constructions)."""

    __slots__ = ("vertices", "edges")

    def __init__(self, vertices, edges):
        self.vertices = tuple(vertices)
        index = {v: i for i, v in enumerate(self.vertices)}
        if len(index) != len(self.vertices):
            raise InputError("duplicate vertex names")
        norm = set()
        for u, v in edges:
            if u not in index or v not in index:
                raise InputError(f"edge ({u!r},{v!r}) uses unknown vertices")
            if u == v:
                raise InputError(f"loop on vertex {u!r}")
            norm.add((u, v) if index[u] < index[v] else (v, u))
        self.edges = frozenset(norm)

    def has_edge(self, u, v) -> bool:
        return (u, v) in self.edges or (v, u) in self.edges

    def sorted_edges(self):
        order = {v: i for i, v in enumerate(self.vertices)}
        return sorted(self.edges, key=lambda e: (order[e[0]], order[e[1]]))


def simple_graph_from_dict(doc) -> SimpleGraph:
    if not isinstance(doc, dict):
        raise InputError("graph document must be a JSON object")
    vertices = doc.get("vertices")
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise InputError('"vertices" must be a list of strings')
    edges = []
    for k, edge in enumerate(doc.get("edges", [])):
        if not isinstance(edge, dict) or "u" not in edge or "v" not in edge:
            raise InputError(f'edges[{k}]: expected an object with "u" and "v"')
        if "m" in edge:
            raise InputError(f'edges[{k}]: a simple graph carries no labels')
        edges.append((edge["u"], edge["v"]))
    return SimpleGraph(vertices, edges)


class DoubledGraph:
    """The doubling of a simple graph, with vertex groups Z and Z/2.

    Vertices are (name, 0) labeled "Z" and (name, 1) labeled "Z2"; two
    doubled vertices are adjacent exactly when their underlying vertices are
    adjacent in the base graph (in particular (s,0) and (s,1) are never
    adjacent).  The graph product over this graph is the right-angled
    virtual Artin group of the base graph.
    """

    __slots__ = ("vertices", "labels", "edges")

    def __init__(self, base: SimpleGraph):
        self.vertices = tuple((v, 0) for v in base.vertices) + \
            tuple((v, 1) for v in base.vertices)
        self.labels = {v: ("Z" if v[1] == 0 else "Z2") for v in self.vertices}
        order = {v: i for i, v in enumerate(self.vertices)}
        edges = set()
        for u, v in base.edges:
            pairs = [((u, 0), (v, 0)), ((u, 1), (v, 1)),
                     ((u, 0), (v, 1)), ((v, 0), (u, 1))]
            for a, b in pairs:
                edges.add((a, b) if order[a] < order[b] else (b, a))
        self.edges = frozenset(edges)

    def sorted_edges(self):
        order = {v: i for i, v in enumerate(self.vertices)}
        return sorted(self.edges, key=lambda e: (order[e[0]], order[e[1]]))


class Presentation:
    """Generators plus relations given as pairs of equal words."""

    __slots__ = ("generators", "relations")

    def __init__(self, generators, relations):
        self.generators = tuple(generators)
        self.relations = tuple((tuple(lhs), tuple(rhs)) for lhs, rhs in relations)

    def __eq__(self, other):
        return (isinstance(other, Presentation)
                and other.generators == self.generators
                and other.relations == self.relations)

    def __repr__(self):
        return (f"Presentation({len(self.generators)} generators, "
                f"{len(self.relations)} relations)")


def doubled_graph(base: SimpleGraph) -> DoubledGraph:
    return DoubledGraph(base)


def right_angled_presentation(base: SimpleGraph) -> Presentation:
    """Presentation of the right-angled virtual Artin group of a simple graph.

    Generators sigma_s, tau_s per vertex; relations tau_s^2 = 1 and, for
    each edge (s,t), the commutations of sigma_s with sigma_t, tau_s with
    tau_t, and each tau with the opposite sigma.
    """
    gens = [f"S:{v}" for v in base.vertices] + [f"T:{v}" for v in base.vertices]
    relations = []
    for v in base.vertices:
        relations.append(((f"T:{v}", f"T:{v}"), ()))
    for u, v in base.sorted_edges():
        relations.append(((f"T:{u}", f"T:{v}"), (f"T:{v}", f"T:{u}")))
        relations.append(((f"S:{u}", f"S:{v}"), (f"S:{v}", f"S:{u}")))
        relations.append(((f"T:{u}", f"S:{v}"), (f"S:{v}", f"T:{u}")))
        relations.append(((f"T:{v}", f"S:{u}"), (f"S:{u}", f"T:{v}")))
    return Presentation(gens, relations)
