"""McKay graphs, affine ADE identification, and root-lattice combinatorics.

Vertex set I = irreducible characters (vertex 0 = trivial); edges from
tensoring with the defining 2-dimensional representation.  The finite root
system lives on I minus vertex 0; delta is the dimension vector, phi the
highest root, and the real affine roots are n*delta + beta.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .characters import ClassFunction, character_table, defining_character, inner_product, kernel_contains
from .cyclotomic import Cyc
from .groups import FiniteGroup, GroupSpec, Subgroup, build_group

Vector = tuple[int, ...]


@dataclass(frozen=True)
class McKayGraph:
    spec: GroupSpec
    adjacency: tuple[tuple[int, ...], ...]  # m_ij multiplicities
    dims: Vector                            # n_i, also delta
    affine_type: str                        # e.g. "A3(1)", "D4(1)", "E8(1)"
    linear_vertices: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.dims)

    def delta(self) -> Vector:
        return self.dims

    def affine_cartan(self) -> tuple[tuple[int, ...], ...]:
        n = self.size
        return tuple(
            tuple((2 if i == j else 0) - self.adjacency[i][j] for j in range(n))
            for i in range(n)
        )

    def distance_from_zero(self) -> list[int]:
        n = self.size
        dist = [-1] * n
        dist[0] = 0
        frontier = [0]
        while frontier:
            nxt = []
            for v in frontier:
                for w in range(n):
                    if self.adjacency[v][w] and dist[w] < 0:
                        dist[w] = dist[v] + 1
                        nxt.append(w)
            frontier = nxt
        return dist


def _identify_affine_type(adj, dims) -> str:
    """Classify the graph and check vertex 0 sits at an extending vertex
    (delta coefficient 1), as the root-system construction requires."""
    n = len(dims)
    if dims[0] != 1:
        raise AssertionError("trivial character must have delta coefficient 1")
    degrees = [sum(row) for row in adj]
    if n == 1:
        return "A0(1)"
    if all(d == 1 for d in dims):
        # cycle (A_{n-1}); n = 2 is the double edge
        if n == 2:
            if adj[0][1] != 2:
                raise AssertionError("two-vertex McKay graph must have a double edge")
            return "A1(1)"
        if any(d != 2 for d in degrees) or any(m > 1 for row in adj for m in row):
            raise AssertionError("dims all 1 but not a simple cycle")
        return f"A{n - 1}(1)"
    if sorted(dims) == sorted([1, 1, 1, 2, 2, 2, 3]) and n == 7:
        return "E6(1)"
    if sorted(dims) == sorted([1, 1, 2, 2, 2, 3, 3, 4]) and n == 8:
        return "E7(1)"
    if sorted(dims) == sorted([1, 2, 2, 3, 3, 4, 4, 5, 6]) and n == 9:
        return "E8(1)"
    # affine D: four dim-1 corners, the rest dim 2
    ones = [i for i, d in enumerate(dims) if d == 1]
    twos = [i for i, d in enumerate(dims) if d == 2]
    if len(ones) == 4 and len(ones) + len(twos) == n:
        return f"D{n - 1}(1)"
    raise AssertionError("graph is not an affine ADE diagram")


@lru_cache(maxsize=None)
def mckay_graph(spec: GroupSpec) -> McKayGraph:
    group = build_group(spec)
    chars = character_table(spec)
    chi_v = defining_character(group)
    n = len(chars)
    adj = []
    for i in range(n):
        prod = chars[i] * chi_v
        row = []
        for j in range(n):
            m = inner_product(group, prod, chars[j])
            if m.denominator != 1 or m < 0:
                raise AssertionError("non-integer McKay multiplicity")
            row.append(int(m))
        adj.append(tuple(row))
    adj = tuple(adj)
    for i in range(n):
        for j in range(n):
            if adj[i][j] != adj[j][i]:
                raise AssertionError("McKay multiplicities are not symmetric")
    dims = tuple(int(c.degree.as_rational()) for c in chars)
    if sum(d * d for d in dims) != group.order:
        raise AssertionError("sum of squared dims != |G|")
    # delta spans the kernel of the affine Cartan matrix
    for i in range(n):
        s = 2 * dims[i] - sum(adj[i][j] * dims[j] for j in range(n))
        if s != 0:
            raise AssertionError("dims vector is not in the affine Cartan kernel")
    if n > 1:
        # connectivity
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for v in frontier:
                for w in range(n):
                    if adj[v][w] and w not in seen:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
        if len(seen) != n:
            raise AssertionError("McKay graph is not connected")
    affine_type = _identify_affine_type(adj, dims)
    linear = tuple(i for i, d in enumerate(dims) if d == 1)
    return McKayGraph(spec, adj, dims, affine_type, linear)


@dataclass(frozen=True)
class RootContext:
    graph: McKayGraph
    finite_vertices: tuple[int, ...]            # I minus vertex 0, in vertex order
    positive_roots: tuple[Vector, ...]          # over the full index set I (0 at vertex 0)
    phi: Vector                                 # highest root = delta - alpha_0

    @property
    def delta(self) -> Vector:
        return self.graph.dims

    def pairing(self, alpha: Vector, beta: Vector) -> int:
        """Symmetrized Cartan pairing (alpha, beta) in the simply-laced lattice."""
        cartan = self.graph.affine_cartan()
        n = self.graph.size
        return sum(alpha[i] * cartan[i][j] * beta[j] for i in range(n) for j in range(n))


def _simple_root(n: int, i: int) -> Vector:
    v = [0] * n
    v[i] = 1
    return tuple(v)


@lru_cache(maxsize=None)
def root_context(spec: GroupSpec) -> RootContext:
    graph = mckay_graph(spec)
    if graph.affine_type == "A0(1)":
        raise ValueError("cyclic(1) gives the degenerate A0 diagram; no finite root system")
    n = graph.size
    finite = tuple(range(1, n))
    cartan = graph.affine_cartan()

    def pair_simple(alpha: Vector, i: int) -> int:
        return sum(cartan[i][j] * alpha[j] for j in range(n))

    roots: set[Vector] = {_simple_root(n, i) for i in finite}
    frontier = set(roots)
    while frontier:
        nxt: set[Vector] = set()
        for alpha in frontier:
            for i in finite:
                # p = length of the alpha-string below alpha in direction i
                p = 0
                lower = list(alpha)
                while True:
                    lower[i] -= 1
                    if tuple(lower) in roots:
                        p += 1
                    else:
                        break
                if p - pair_simple(alpha, i) >= 1:
                    up = list(alpha)
                    up[i] += 1
                    t = tuple(up)
                    if t not in roots:
                        roots.add(t)
                        nxt.add(t)
        frontier = nxt
    positive = tuple(sorted(roots))
    phi = tuple(d - (1 if i == 0 else 0) for i, d in enumerate(graph.dims))
    maximal = max(positive, key=lambda r: (sum(r), r))
    if phi != maximal:
        raise AssertionError("phi = delta - alpha_0 is not the highest enumerated root")
    ctx = RootContext(graph, finite, positive, phi)
    for alpha in positive:
        if ctx.pairing(alpha, alpha) != 2:
            raise AssertionError("finite positive root with (alpha, alpha) != 2")
    return ctx


def vector_dim(graph: McKayGraph, v: Vector) -> int:
    return sum(a * d for a, d in zip(v, graph.dims))


def dot(c: tuple[Fraction, ...], v: Vector) -> Fraction:
    return sum((ci * vi for ci, vi in zip(c, v)), Fraction(0))


def all_roots_with_pairing_zero(ctx: RootContext, c: tuple[Fraction, ...]) -> list[Vector]:
    """All positive real roots n*delta + beta with (n delta + beta) . c = 0.

    Requires c . delta != 0 so the search is finite."""
    delta = ctx.delta
    cd = dot(c, delta)
    if cd == 0:
        raise ValueError("c . delta = 0 gives an infinite root search")
    finite_roots = list(ctx.positive_roots) + [tuple(-x for x in r) for r in ctx.positive_roots]
    bound = max((abs(dot(c, beta)) for beta in finite_roots), default=Fraction(0))
    nmax = int(bound / abs(cd)) + 1
    out = []
    for nn in range(nmax + 1):
        for beta in finite_roots:
            if nn == 0 and min(beta) < 0:
                continue
            root = tuple(nn * d + b for d, b in zip(delta, beta))
            if dot(c, root) == 0:
                out.append(root)
    return sorted(set(out))


def sigma_c(ctx: RootContext, c: tuple[Fraction, ...]) -> tuple[Vector, ...]:
    """Minimal positive elements of R_c under the coefficientwise order."""
    rc = all_roots_with_pairing_zero(ctx, c)
    minimal = []
    for a in rc:
        if not any(b != a and all(x <= y for x, y in zip(b, a)) for b in rc):
            minimal.append(a)
    return tuple(sorted(minimal))


def generic_on_hyperplane(ctx: RootContext, alpha: Vector) -> tuple[Fraction, ...]:
    """A rational c with c.alpha = 0, c.delta = 1 and c.beta not an integer
    for every finite root beta != +-alpha; then Sigma_c = {alpha}."""
    if alpha not in ctx.positive_roots:
        raise ValueError("alpha must be a finite positive root")
    n = ctx.graph.size
    delta = ctx.delta
    finite_roots = [r for r in ctx.positive_roots]
    primes = [10007, 10009, 10037, 10039, 10061, 10067, 10069, 10079, 10091, 10093]
    for attempt, p in enumerate(primes):
        # c_i = (base_i + offset_i/p) scaled to satisfy the two constraints
        cand = [Fraction(k * k + 1, p) for k in range(n)]
        # adjust two coordinates to hit c.alpha = 0 and c.delta = 1 exactly;
        # pick one coordinate in alpha's support and one outside (vertex 0).
        support = [i for i in range(n) if alpha[i]]
        i1 = support[attempt % len(support)]
        i0 = 0  # vertex 0 never lies in a finite root's support
        # solve for cand[i1], cand[i0]
        rest_alpha = sum(cand[i] * alpha[i] for i in range(n) if i != i1)
        cand[i1] = -rest_alpha / alpha[i1]
        rest_delta = sum(cand[i] * delta[i] for i in range(n) if i != i0)
        cand[i0] = (1 - rest_delta) / delta[i0]
        c = tuple(cand)
        if dot(c, alpha) != 0 or dot(c, delta) != 1:
            continue
        ok = True
        for beta in finite_roots:
            if beta == alpha:
                continue
            val = dot(c, beta)
            if val.denominator == 1:
                ok = False
                break
        if ok:
            result = sigma_c(ctx, c)
            if result != (alpha,):
                raise AssertionError("certified c does not give Sigma_c = {alpha}")
            return c
    raise RuntimeError("generic parameter search failed after bounded retries")


def _linear_trivial_on(spec: GroupSpec, sub: Subgroup) -> tuple[int, ...]:
    """Vertices whose character is linear with sub in its kernel (the
    characters of Gamma/Delta)."""
    group = build_group(spec)
    chars = character_table(spec)
    out = []
    for i, chi in enumerate(chars):
        if chi.degree == 1 and kernel_contains(group, chi, sub):
            out.append(i)
    return tuple(out)


def admissible_alpha(spec: GroupSpec, sub: Subgroup) -> Vector:
    """The finite positive root used for ch(L); phi when Delta = Gamma.

    For proper Delta: maximal finite positive roots alpha with k_i = 1 for
    exactly one vertex i carrying a linear character of Gamma/Delta (and
    k_j = 0 at the other such vertices), tie-broken by graph distance from
    vertex 0 and then lex; the identity sum_{i != 0} k_i n_i = 2|Delta| - 1
    is verified, never assumed.
    """
    group = build_group(spec)
    ctx = root_context(spec)
    if sub.order == group.order:
        return ctx.phi
    j_vertices = [v for v in _linear_trivial_on(spec, sub) if v != 0]
    if not j_vertices:
        raise ValueError("no nontrivial linear character of Gamma/Delta")
    candidates = []
    for alpha in ctx.positive_roots:
        ones = [v for v in j_vertices if alpha[v] == 1]
        others = [v for v in j_vertices if alpha[v] not in (0, 1)]
        if len(ones) == 1 and not others:
            candidates.append(alpha)
    if not candidates:
        raise ValueError(f"no admissible root for {spec} with Delta of index {sub.index}")
    maximal = [
        a for a in candidates
        if not any(b != a and all(x <= y for x, y in zip(a, b)) for b in candidates)
    ]
    dist = ctx.graph.distance_from_zero()

    def special_vertex(a: Vector) -> int:
        return next(v for v in j_vertices if a[v] == 1)

    best_d = max(dist[special_vertex(a)] for a in maximal)
    far = [a for a in maximal if dist[special_vertex(a)] == best_d]
    alpha = max(far)
    total = sum(alpha[i] * ctx.graph.dims[i] for i in range(1, ctx.graph.size))
    if total != 2 * sub.order - 1:
        raise AssertionError(
            f"maximal admissible root violates sum k_i n_i = 2|Delta|-1: "
            f"{alpha} gives {total}, expected {2 * sub.order - 1}")
    return alpha


def character_of_L(spec: GroupSpec, sub: Subgroup, n: int) -> tuple[Vector, int]:
    """ch(L) = n delta + phi (Delta = Gamma) or (n-1) delta + alpha, and its
    dimension; dim = g + 1 is verified against the closed form for g."""
    if n < 1:
        raise ValueError("n must be >= 1")
    group = build_group(spec)
    ctx = root_context(spec)
    if sub.order == group.order:
        ch = tuple(n * d + p for d, p in zip(ctx.delta, ctx.phi))
    else:
        alpha = admissible_alpha(spec, sub)
        ch = tuple((n - 1) * d + a for d, a in zip(ctx.delta, alpha))
    dim = vector_dim(ctx.graph, ch)
    g = (n - 1) * group.order + 2 * (sub.order - 1)
    if dim != g + 1:
        raise AssertionError(f"dim(L) = {dim} but g + 1 = {g + 1}")
    return ch, dim


def dimension_bound_check(spec: GroupSpec, sub: Subgroup, n: int) -> tuple[bool, int]:
    """dim L^chi <= n for all chi in (Gamma/Delta)^vee with equality exactly
    once; returns (ok, vertex achieving equality)."""
    ch, _ = character_of_L(spec, sub, n)
    verts = _linear_trivial_on(spec, sub)
    eq = [v for v in verts if ch[v] == n]
    le = all(ch[v] <= n for v in verts)
    return (le and len(eq) == 1, eq[0] if len(eq) == 1 else -1)


def dot_export(spec: GroupSpec, sub: Subgroup | None = None) -> str:
    """Graphviz DOT text for the McKay graph, with delta (and alpha) labels."""
    graph = mckay_graph(spec)
    group = build_group(spec)
    alpha = None
    if sub is not None and sub.order != group.order:
        alpha = admissible_alpha(spec, sub)
    lines = ["graph mckay {"]
    lines.append(f'  label="{spec} : {graph.affine_type}";')
    trivial_on = set()
    if sub is not None:
        trivial_on = set(_linear_trivial_on(spec, sub))
    for v in range(graph.size):
        tags = [f"dim={graph.dims[v]}"]
        if v in graph.linear_vertices:
            tags.append("linear")
        if v in trivial_on:
            tags.append("trivial-on-delta")
        label = f"{v} ({', '.join(tags)})\\ndelta={graph.dims[v]}"
        if alpha is not None:
            label += f" alpha={alpha[v]}"
        lines.append(f'  v{v} [label="{label}"];')
    for i in range(graph.size):
        for j in range(i, graph.size):
            for _ in range(graph.adjacency[i][j] if i != j else graph.adjacency[i][j] // 2):
                lines.append(f"  v{i} -- v{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
