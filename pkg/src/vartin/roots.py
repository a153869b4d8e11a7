"""Root systems: enumeration, sign classification, reflections, orbits.

The root system of a Coxeter graph is the orbit of the simple roots under
the Tits representation.  Only positive roots are stored; the k-th positive
root (1-based) is addressed by the signed index +k and its negative by -k.
Signed indices are the universal root identifier across the package and in
file formats.

Positive roots are kept in a canonical order: by BFS discovery depth, then
by lexicographic comparison of the exact coordinate vectors.  A RootSystem
is immutable; extending a truncated system (materializing a root found by
an orbit computation) returns a new value.
"""

from __future__ import annotations

from .coxeter import BilinearForm, CoxeterGraph, WElement
from .errors import InputError, InternalError, TruncationError
from .scalar import INFINITY


class Root:
    """One positive root: exact coordinates plus its discovery pair.

    The discovery pair (word, source) satisfies rho(word)(alpha_source) =
    vector, with the word over vertex indices acting rightmost-first.
    """

    __slots__ = ("vector", "depth", "word", "source")

    def __init__(self, vector, depth, word, source):
        self.vector = vector
        self.depth = depth
        self.word = word
        self.source = source

    def __repr__(self):
        return f"Root({self.vector}, depth={self.depth})"


def classify_sign(vector) -> int:
    """+1 for a positive root vector, -1 for a negative one.

    Genuine roots never have mixed coordinate signs; seeing one means the
    arithmetic went wrong, so it aborts.
    """
    signs = [c.sign() for c in vector]
    if all(s >= 0 for s in signs) and any(s > 0 for s in signs):
        return 1
    if all(s <= 0 for s in signs) and any(s < 0 for s in signs):
        return -1
    raise InternalError(f"mixed-sign root vector {vector!r}")


def reflect(form: BilinearForm, beta, v):
    """r_beta(v) = v - <v, beta> beta, for coordinate vectors."""
    coeff = form.pairing(v, beta)
    return tuple(x - coeff * b for x, b in zip(v, beta))


class RootSystem:
    """Indexed positive roots of a graph, complete or truncated."""

    __slots__ = ("graph", "positive", "complete", "_index")

    def __init__(self, graph: CoxeterGraph, positive, complete: bool, _index=None):
        self.graph = graph
        self.positive = tuple(positive)
        self.complete = complete
        if _index is None:
            _index = {root.vector: k + 1 for k, root in enumerate(self.positive)}
        self._index = _index

    def __len__(self):
        return len(self.positive)

    @property
    def full_size(self) -> int:
        """|Phi| = twice the number of positive roots (when complete)."""
        return 2 * len(self.positive)

    def signed_index(self, vector):
        """+k / -k for the k-th positive root or its negative, else None."""
        k = self._index.get(vector)
        if k is not None:
            return k
        k = self._index.get(tuple(-c for c in vector))
        if k is not None:
            return -k
        return None

    def record(self, signed: int) -> Root:
        k = abs(signed)
        if not 1 <= k <= len(self.positive):
            raise InputError(f"root index {signed} out of range")
        return self.positive[k - 1]

    def vector(self, signed: int):
        vec = self.record(signed).vector
        if signed < 0:
            vec = tuple(-c for c in vec)
        return vec

    def signed_indices(self):
        """All signed indices, positives first: +1..+n, -1..-n."""
        n = len(self.positive)
        return [k for k in range(1, n + 1)] + [-k for k in range(1, n + 1)]

    def index_of_simple(self, v) -> int:
        signed = self.signed_index(self.graph.simple_root(v))
        if signed is None:
            raise InternalError("simple root missing from the system")
        return signed

    def extended(self, vector, word, source) -> tuple[RootSystem, int]:
        """A new system with one more positive root; depth = path length."""
        if classify_sign(vector) != 1:
            raise InternalError("only positive roots are materialized")
        existing = self.signed_index(vector)
        if existing is not None:
            return self, existing
        root = Root(vector, len(word), tuple(word), source)
        index = dict(self._index)
        index[vector] = len(self.positive) + 1
        system = RootSystem(self.graph, self.positive + (root,), self.complete,
                            _index=index)
        return system, len(self.positive) + 1

    def require_complete(self, what: str):
        if not self.complete:
            raise TruncationError(f"{what} needs a complete root system")

    def __repr__(self):
        state = "complete" if self.complete else "truncated"
        return f"RootSystem({len(self.positive)} positive, {state})"


def _vector_sort_key(vector):
    return tuple(c.coeffs for c in vector)


def enumerate_roots(graph: CoxeterGraph, max_depth=None, cap: int = 50000) -> RootSystem:
    """BFS closure of the simple roots under the simple reflections.

    Records positive roots only (negatives are implied).  The result is
    complete when a whole frontier produces nothing new; hitting `cap` or
    `max_depth` first yields a truncated system, flagged but not an error.
    """
    if cap < len(graph.vertices):
        raise InputError("cap must be at least the number of vertices")
    refl = graph.reflections()
    n = len(graph.vertices)
    level = [(graph.simple_root(i), (), i) for i in range(n)]
    level.sort(key=lambda item: _vector_sort_key(item[0]))
    seen = {item[0] for item in level}
    positive = [Root(vec, 0, word, src) for vec, word, src in level]
    complete = True
    depth = 0
    frontier = positive[:]
    while frontier:
        if max_depth is not None and depth >= max_depth:
            complete = False
            break
        depth += 1
        discovered = []
        for root in frontier:
            for s in range(n):
                image = refl[s].apply(root.vector)
                if image in seen:
                    continue
                if classify_sign(image) < 0:
                    # Only rho(s)(alpha_s) goes negative, and -alpha_s is known.
                    continue
                seen.add(image)
                discovered.append(Root(image, depth, (s,) + root.word, root.source))
        if len(positive) + len(discovered) > cap:
            complete = False
            room = cap - len(positive)
            discovered.sort(key=lambda r: _vector_sort_key(r.vector))
            positive.extend(discovered[:room])
            break
        discovered.sort(key=lambda r: _vector_sort_key(r.vector))
        positive.extend(discovered)
        frontier = discovered
    return RootSystem(graph, positive, complete)


def reflection_closure(roots: RootSystem, gens, signed: int):
    """Signed indices of the closure of one root under chosen reflections.

    Returns (frozen set of signed indices, root system); the system comes
    back extended when the closure leaves the enumerated part.
    """
    graph = roots.graph
    gens = tuple(graph.vertex_index(g) for g in gens)
    base = roots.record(signed)
    # Every orbit vector is rho(path + start_expr)(alpha_source); appending
    # the source letter flips the starting simple root's sign.
    start_expr = base.word if signed > 0 else base.word + (base.source,)
    start_vec = roots.vector(signed)
    refl = graph.reflections()
    queue = [(start_vec, ())]
    seen_vectors = {start_vec}
    members = set()
    while queue:
        vec, path = queue.pop()
        idx = roots.signed_index(vec)
        if idx is None:
            expr = path + start_expr
            if classify_sign(vec) < 0:
                vec_pos = tuple(-c for c in vec)
                roots, k = roots.extended(vec_pos, expr + (base.source,), base.source)
                idx = -k
            else:
                roots, idx = roots.extended(vec, expr, base.source)
        members.add(idx)
        for g in gens:
            image = refl[g].apply(vec)
            if image not in seen_vectors:
                seen_vectors.add(image)
                queue.append((image, (g,) + path))
    return frozenset(members), roots


def dihedral_orbit(roots: RootSystem, s, t, signed: int):
    """Closure of one root under rho(s), rho(t); finite since m(s,t) < INFINITY.

    Returns (sorted signed indices, root system), the system extended with
    any orbit member that was missing from a truncated enumeration.
    """
    graph = roots.graph
    si, ti = graph.vertex_index(s), graph.vertex_index(t)
    m = graph.label(si, ti)
    if m == INFINITY:
        raise InputError(f"pair ({s!r},{t!r}) generates an infinite dihedral group")
    members, roots = reflection_closure(roots, (si, ti), signed)
    if len(members) > 2 * m:
        raise InternalError("dihedral orbit exceeded 2m elements")
    return tuple(sorted(members)), roots


def mhat(roots: RootSystem, table, beta: int, gamma: int):
    """The root-indexed Coxeter matrix entry for a pair of signed indices.

    Equals m(s,t) when some w in W carries (alpha_s, alpha_t) onto the pair
    (with m(s,t) finite), 1 on the diagonal, INFINITY otherwise.  The search
    is exhaustive over W x S x S and needs a complete (spherical) system.
    """
    if beta == gamma:
        return 1
    roots.require_complete("the root-indexed Coxeter matrix")
    graph = roots.graph
    n = len(graph.vertices)
    finite = {}
    for i in range(n):
        for j in range(n):
            if i != j and graph.label(i, j) != INFINITY:
                finite[(i, j)] = graph.label(i, j)
    for w in table.elements:
        cols = [roots.signed_index(tuple(w.matrix[r][k] for r in range(n)))
                for k in range(n)]
        for (i, j), m in finite.items():
            if cols[i] == beta and cols[j] == gamma:
                return m
    return INFINITY
