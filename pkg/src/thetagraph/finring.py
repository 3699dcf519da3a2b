"""Finite unital rings with enumerable elements and their graphs Θ(R).

Elements are indices ``0..size-1``.  Every ring carries vectorised
multiplication rules (``left_products``/``right_products``) so that the
principal ideals aR and Ra can be formed with numpy; small rings also get
full tables and an exhaustive axiom check at construction.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .digraph import CapacityError, Digraph, mask_of
from .gf import FieldSpec, field_of_order, prime_power
from .subspace import Matrix

TABLE_LIMIT = 256
DEFAULT_CAP = 6561


class RingAxiomError(ValueError):
    pass


class NotAHomomorphism(ValueError):
    pass


@dataclass(eq=False)
class RingSpec:
    """A finite unital ring given by vectorised operation rules.

    ``add_rule(a, b)`` and ``mul_rule(a, b)`` accept broadcastable integer
    arrays of element indices and return arrays of indices.
    """

    size: int
    add_rule: Callable[[np.ndarray, np.ndarray], np.ndarray]
    mul_rule: Callable[[np.ndarray, np.ndarray], np.ndarray]
    zero: int
    one: int
    descriptor: str
    formatter: Callable[[int], object] = field(default=str, repr=False)
    verify: bool = True

    def __post_init__(self):
        if self.size <= TABLE_LIMIT:
            idx = np.arange(self.size)
            self.add_table = self.add_rule(idx[:, None], idx[None, :]).astype(np.int64)
            self.mul_table = self.mul_rule(idx[:, None], idx[None, :]).astype(np.int64)
            if self.verify:
                check_ring_axioms(self)
        else:
            self.add_table = None
            self.mul_table = None

    @property
    def elements(self) -> range:
        return range(self.size)

    def add(self, a: int, b: int) -> int:
        if self.add_table is not None:
            return int(self.add_table[a, b])
        return int(self.add_rule(np.asarray(a), np.asarray(b)))

    def mul(self, a: int, b: int) -> int:
        if self.mul_table is not None:
            return int(self.mul_table[a, b])
        return int(self.mul_rule(np.asarray(a), np.asarray(b)))

    def left_products(self, a: int) -> np.ndarray:
        """Array of a*r over all r (the right ideal aR with repetition)."""
        if self.mul_table is not None:
            return self.mul_table[a]
        return self._row(a)

    def right_products(self, a: int) -> np.ndarray:
        """Array of r*a over all r."""
        if self.mul_table is not None:
            return self.mul_table[:, a]
        return self._col(a)

    def _row(self, a):
        return self.mul_rule(np.full(self.size, a), np.arange(self.size))

    def _col(self, a):
        return self.mul_rule(np.arange(self.size), np.full(self.size, a))

    def format(self, a: int):
        return self.formatter(a)

    def __repr__(self):
        return f"RingSpec({self.descriptor!r}, size={self.size})"


def check_ring_axioms(R: RingSpec) -> None:
    """Exhaustive check of the unital ring axioms (tables required)."""
    A, M = R.add_table, R.mul_table
    n = R.size
    idx = np.arange(n)
    if A is None:
        raise RingAxiomError("axiom check needs materialised tables")
    if not (np.array_equal(A, A.T) and np.array_equal(A[R.zero], idx)):
        raise RingAxiomError("addition is not commutative with identity zero")
    if not all(R.zero in A[a] for a in idx):
        raise RingAxiomError("missing additive inverse")
    if not (np.array_equal(M[R.one], idx) and np.array_equal(M[:, R.one], idx)):
        raise RingAxiomError("one is not a two-sided identity")
    for a in range(n):
        # (a+b)+c == a+(b+c) and (ab)c == a(bc), vectorised over b, c
        if not np.array_equal(A[A[a]], A[a][A]):
            raise RingAxiomError("addition is not associative")
        if not np.array_equal(M[M[a]], M[a][M]):
            raise RingAxiomError("multiplication is not associative")
        # a(b+c) == ab+ac and (b+c)a == ba+ca
        if not np.array_equal(M[a][A], A[M[a][:, None], M[a][None, :]]):
            raise RingAxiomError("left distributivity fails")
        if not np.array_equal(M[:, a][A], A[M[:, a][:, None], M[:, a][None, :]]):
            raise RingAxiomError("right distributivity fails")


def ring_zmod(n: int) -> RingSpec:
    if n < 1:
        raise ValueError("Z/n needs n >= 1")
    return RingSpec(
        size=n,
        add_rule=lambda a, b: (a + b) % n,
        mul_rule=lambda a, b: (a * b) % n,
        zero=0,
        one=1 % n,
        descriptor=f"zmod:{n}",
        formatter=int,
    )


def _matrix_codec(n: int, q: int):
    """Index <-> entry array; entry (i, j) is digit i*n+j, most significant first."""
    size = q ** (n * n)
    weights = q ** np.arange(n * n - 1, -1, -1)
    digits = (np.arange(size)[:, None] // weights[None, :]) % q
    return digits, weights


def ring_matrix(n: int, F: FieldSpec | int, cap: int = DEFAULT_CAP) -> RingSpec:
    """M_n(F); element index = base-q code of the row-major entries."""
    if isinstance(F, int):
        F = field_of_order(F)
    if n < 1:
        raise ValueError("matrix size must be >= 1")
    q = F.q
    size = q ** (n * n)
    if size > cap:
        raise CapacityError(f"M_{n}(F_{q}) has {size} elements, cap is {cap}")
    digits, weights = _matrix_codec(n, q)
    add_t, mul_t = F.add_table, F.mul_table

    def add_rule(a, b):
        a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
        s = add_t[digits[a], digits[b]]
        return s @ weights

    def mul_rule(a, b):
        a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
        da = digits[a].reshape(a.shape + (n, n))
        db = digits[b].reshape(b.shape + (n, n))
        out = np.zeros(a.shape + (n, n), dtype=np.int64)
        for i in range(n):
            for j in range(n):
                acc = np.zeros(a.shape, dtype=np.int64)
                for k in range(n):
                    acc = add_t[acc, mul_t[da[..., i, k], db[..., k, j]]]
                out[..., i, j] = acc
        return out.reshape(a.shape + (n * n,)) @ weights

    one = int(np.eye(n, dtype=np.int64).reshape(-1) @ weights)

    def fmt(a):
        d = digits[a].reshape(n, n)
        return [list(map(int, r)) for r in d]

    R = RingSpec(size, add_rule, mul_rule, 0, one, f"matrix:{n}:{q}", fmt)
    R.matrix_n = n
    R.matrix_field = F
    return R


def matrix_to_index(R: RingSpec, A: Matrix) -> int:
    q = R.matrix_field.q
    code = 0
    for r in A.rows:
        for x in r:
            code = code * q + x
    return code


def index_to_matrix(R: RingSpec, a: int) -> Matrix:
    return Matrix.from_rows(R.matrix_field, R.format(a))


def ring_product(rings: Sequence[RingSpec], cap: int = DEFAULT_CAP) -> RingSpec:
    """Direct product; index = mixed-radix code with the first factor most significant."""
    rings = list(rings)
    if not rings:
        return ring_zmod(1)
    sizes = [R.size for R in rings]
    size = int(np.prod(sizes))
    if size > cap:
        raise CapacityError(f"product ring has {size} elements, cap is {cap}")
    radix = [int(np.prod(sizes[i + 1:])) for i in range(len(rings))]

    def split(a):
        return [(a // r) % s for r, s in zip(radix, sizes)]

    def combine(parts):
        return sum(p * r for p, r in zip(parts, radix))

    def lift(op):
        def rule(a, b):
            a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
            pa, pb = split(a), split(b)
            return combine([getattr(R, op)(x, y) for R, x, y in zip(rings, pa, pb)])
        return rule

    zero = combine([R.zero for R in rings])
    one = combine([R.one for R in rings])
    desc = "product:" + ",".join(R.descriptor for R in rings)

    def fmt(a):
        return tuple(R.format(int(x)) for R, x in zip(rings, split(a)))

    P = RingSpec(size, lift("add_rule"), lift("mul_rule"), zero, one, desc, fmt)
    P.factors = rings
    P.split = lambda a: tuple(int(x) for x in split(a))
    P.combine = combine
    return P


def parse_ring(text: str, cap: int = DEFAULT_CAP) -> RingSpec:
    """Build a ring from ``zmod:N``, ``matrix:N:Q`` or ``product:D1,D2,...``."""
    text = text.strip()
    kind, _, rest = text.partition(":")
    try:
        if kind == "zmod":
            n = int(rest)
            if n > cap:
                raise CapacityError(f"Z/{n} exceeds cap {cap}")
            return ring_zmod(n)
        if kind == "matrix":
            n_s, q_s = rest.split(":")
            q = int(q_s)
            prime_power(q)
            return ring_matrix(int(n_s), field_of_order(q), cap=cap)
        if kind == "product":
            return ring_product([parse_ring(t, cap) for t in rest.split(",")], cap=cap)
    except (TypeError, ValueError) as exc:
        if isinstance(exc, CapacityError):
            raise
        raise ValueError(f"bad ring descriptor {text!r}: {exc}") from None
    raise ValueError(f"unknown ring descriptor {text!r}")


# -- units, classes and the graph --

def units(R: RingSpec) -> frozenset[int]:
    """Elements with a two-sided inverse."""
    out = set()
    for a in range(R.size):
        right = np.flatnonzero(R.left_products(a) == R.one)
        if right.size and R.mul(int(right[0]), a) == R.one:
            out.add(a)
    return frozenset(out)


@dataclass(frozen=True)
class ThetaClass:
    representative: int
    members: tuple[int, ...]
    right_ideal: tuple[int, ...]
    left_ideal: tuple[int, ...]


def _ideal_key(arr: np.ndarray, size: int) -> bytes:
    mark = np.zeros(size, dtype=bool)
    mark[arr] = True
    return np.packbits(mark).tobytes()


def theta_classes(R: RingSpec) -> list[ThetaClass]:
    """Partition R by the pair (aR, Ra); classes sorted by least member."""
    groups: dict[tuple[bytes, bytes], list[int]] = {}
    for a in range(R.size):
        key = (_ideal_key(R.left_products(a), R.size), _ideal_key(R.right_products(a), R.size))
        groups.setdefault(key, []).append(a)
    classes = []
    for mem in sorted(groups.values(), key=lambda m: m[0]):
        rep = mem[0]
        classes.append(ThetaClass(
            rep,
            tuple(mem),
            tuple(sorted(set(R.left_products(rep).tolist()))),
            tuple(sorted(set(R.right_products(rep).tolist()))),
        ))
    return classes


def class_index(R: RingSpec, classes: Sequence[ThetaClass]) -> np.ndarray:
    """Array sending each element to the index of its class."""
    idx = np.empty(R.size, dtype=np.int64)
    for i, c in enumerate(classes):
        idx[list(c.members)] = i
    return idx


def theta_graph(R: RingSpec, classes: Sequence[ThetaClass] | None = None,
                sample: int = 2000, seed: int = 0) -> Digraph:
    """Θ(R): one vertex per class, arc [x] -> [y] iff xy = 0 on representatives."""
    classes = theta_classes(R) if classes is None else classes
    reps = np.array([c.representative for c in classes])
    which = class_index(R, classes)
    out = []
    for x in reps:
        prods = R.left_products(int(x))[reps]
        out.append(mask_of(np.flatnonzero(prods == R.zero).tolist()))
    G = Digraph(len(classes), out, [R.format(int(r)) for r in reps])
    # spot-check that arcs do not depend on the chosen representatives
    rng = np.random.default_rng(seed)
    xs = rng.integers(0, R.size, size=sample)
    ys = rng.integers(0, R.size, size=sample)
    for x, y in zip(xs.tolist(), ys.tolist()):
        if (R.mul(x, y) == R.zero) != G.has_arc(int(which[x]), int(which[y])):
            raise AssertionError(f"arc between classes of {x} and {y} is ill-defined")
    return G


def edges_well_defined(R: RingSpec, classes: Sequence[ThetaClass] | None = None) -> bool:
    """Exhaustive check: xy = 0 depends only on the classes of x and y."""
    classes = theta_classes(R) if classes is None else classes
    which = class_index(R, classes)
    k = len(classes)
    seen = np.full((k, k), -1, dtype=np.int64)
    for x in range(R.size):
        zero = (R.left_products(x) == R.zero).astype(np.int64)
        cx = which[x]
        for y in range(R.size):
            cy = which[y]
            if seen[cx, cy] == -1:
                seen[cx, cy] = zero[y]
            elif seen[cx, cy] != zero[y]:
                return False
    return True


def right_ideal_iff_unit_multiple(R: RingSpec) -> tuple[bool, tuple[int, int] | None]:
    """Check aR = bR  <=>  a = bu for a unit u, over all pairs (a, b)."""
    U = np.array(sorted(units(R)))
    ideals = [_ideal_key(R.left_products(a), R.size) for a in range(R.size)]
    for b in range(R.size):
        orbit = set(R.left_products(b)[U].tolist())
        for a in range(R.size):
            if (ideals[a] == ideals[b]) != (a in orbit):
                return False, (a, b)
    return True, None


# -- homomorphisms --

def check_homomorphism(f: Sequence[int], R: RingSpec, S: RingSpec) -> None:
    f = np.asarray(f, dtype=np.int64)
    if f.shape != (R.size,) or f.min(initial=0) < 0 or f.max(initial=0) >= S.size:
        raise NotAHomomorphism("map must send every element of R into S")
    if int(f[R.one]) != S.one:
        raise NotAHomomorphism("map is not unital")
    idx = np.arange(R.size)
    for a in range(R.size):
        lhs_add = f[R.add_rule(np.full(R.size, a), idx)]
        if not np.array_equal(lhs_add, S.add_rule(np.full(R.size, f[a]), f)):
            raise NotAHomomorphism("map is not additive")
        lhs_mul = f[R.left_products(a)]
        if not np.array_equal(lhs_mul, S.mul_rule(np.full(R.size, f[a]), f)):
            raise NotAHomomorphism("map is not multiplicative")


@dataclass(frozen=True)
class GraphHom:
    source: Digraph
    target: Digraph
    vertex_map: tuple[int, ...]

    def __call__(self, v: int) -> int:
        return self.vertex_map[v]

    def compose(self, first: "GraphHom") -> "GraphHom":
        """self ∘ first."""
        return GraphHom(first.source, self.target, tuple(self.vertex_map[w] for w in first.vertex_map))


def theta_hom(f: Sequence[int], R: RingSpec, S: RingSpec,
              GR: Digraph | None = None, GS: Digraph | None = None) -> GraphHom:
    """Θ(f): [x] -> [f(x)], after checking f is a unital ring homomorphism."""
    check_homomorphism(f, R, S)
    cr, cs = theta_classes(R), theta_classes(S)
    GR = theta_graph(R, cr) if GR is None else GR
    GS = theta_graph(S, cs) if GS is None else GS
    which_s = class_index(S, cs)
    vmap = tuple(int(which_s[f[c.representative]]) for c in cr)
    for u, v in GR.arcs():
        if not GS.has_arc(vmap[u], vmap[v]):
            raise AssertionError("induced map does not preserve arcs")
    return GraphHom(GR, GS, vmap)


def ring_homomorphisms(R: RingSpec, S: RingSpec) -> list[tuple[int, ...]]:
    """All unital homomorphisms R -> S by exhaustive search (tiny rings only)."""
    if S.size ** R.size > 10**6:
        raise CapacityError("exhaustive homomorphism search too large")
    found = []
    for cand in itertools.product(range(S.size), repeat=R.size):
        try:
            check_homomorphism(cand, R, S)
        except NotAHomomorphism:
            continue
        found.append(cand)
    return found


def product_class_map(P: RingSpec) -> tuple[Digraph, Digraph, list[int]]:
    """For P = R x S: Θ(P), Θ(R)×Θ(S) and the map [(x,y)] -> ([x],[y])."""
    from .digraph import tensor_product

    R, S = P.factors
    GP = theta_graph(P)
    cr, cs = theta_classes(R), theta_classes(S)
    GT = tensor_product(theta_graph(R, cr), theta_graph(S, cs))
    wr, ws = class_index(R, cr), class_index(S, cs)
    mapping = []
    for c in theta_classes(P):
        x, y = P.split(c.representative)
        mapping.append(int(wr[x]) * len(cs) + int(ws[y]))
    return GP, GT, mapping
