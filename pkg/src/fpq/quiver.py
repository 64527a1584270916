"""Finite acyclic quivers and their rational representations.

Conventions
-----------
* Vertices are 1..n.  Arrows are (id, source, target) with unique string
  ids; parallel arrows are allowed, loops and directed cycles are not.
* A representation assigns dims[v] to each vertex and to each arrow
  a: s -> t a matrix of shape (dims[t], dims[s]) acting on column vectors,
  stored in the quiver's arrow order.
* All entries are Fractions; everything here is exact.

The hom-space computation sets up the commuting-square system
f_t . M_a = N_a . f_s over the per-vertex unknowns f_v and solves it by
exact elimination.  Hom dimensions are memoized on the immutable
representation data, which the higher layers lean on heavily.
"""

import graphlib
import random
from fractions import Fraction
from typing import NamedTuple

from . import exact
from .errors import (
    BadArrowError,
    CyclicQuiverError,
    DuplicateLabelError,
    InputError,
    ShapeError,
    WrongQuiverError,
)


class Arrow(NamedTuple):
    id: str
    source: int
    target: int


class Quiver:
    """Finite quiver on vertices 1..n with labeled arrows, acyclic."""

    def __init__(self, n, arrows):
        self.n = int(n)
        self.arrows = tuple(Arrow(str(a[0]), int(a[1]), int(a[2])) for a in arrows)
        self._index = {a.id: k for k, a in enumerate(self.arrows)}
        validate_quiver(self)

    def arrow_index(self, arrow_id):
        return self._index[arrow_id]

    def key(self):
        return (self.n, self.arrows)

    def __eq__(self, other):
        return isinstance(other, Quiver) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        arr = ", ".join(f"{a.id}:{a.source}->{a.target}" for a in self.arrows)
        return f"Quiver({self.n}; {arr})"

    def to_dict(self):
        return {
            "vertices": self.n,
            "arrows": [
                {"id": a.id, "from": a.source, "to": a.target} for a in self.arrows
            ],
        }

    @classmethod
    def from_dict(cls, data):
        try:
            n = data["vertices"]
            arrows = [(a["id"], a["from"], a["to"]) for a in data.get("arrows", [])]
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed quiver object: {exc}") from exc
        return cls(n, arrows)


def validate_quiver(q):
    """Raise CyclicQuiver/BadArrow/DuplicateLabel when q is not a finite
    acyclic multidigraph on 1..n with unique arrow ids."""
    if q.n < 0:
        raise BadArrowError(f"vertex count must be nonnegative, got {q.n}")
    seen = set()
    for a in q.arrows:
        if not (1 <= a.source <= q.n) or not (1 <= a.target <= q.n):
            raise BadArrowError(
                f"arrow {a.id}: endpoints ({a.source}, {a.target}) outside 1..{q.n}"
            )
        if a.source == a.target:
            raise CyclicQuiverError(f"arrow {a.id} is a loop at vertex {a.source}")
        if a.id in seen:
            raise DuplicateLabelError(f"duplicate arrow id {a.id!r}")
        seen.add(a.id)
    ts = graphlib.TopologicalSorter({v: set() for v in range(1, q.n + 1)})
    for a in q.arrows:
        ts.add(a.target, a.source)
    try:
        list(ts.static_order())
    except graphlib.CycleError as exc:
        raise CyclicQuiverError(f"quiver has a directed cycle: {exc.args[1]}") from exc
    return True


class Representation:
    """A representation of a quiver; immutable once constructed."""

    def __init__(self, quiver, dims, maps):
        """maps: dict arrow_id -> matrix, or sequence in arrow order.
        Matrices for arrows with a zero-dimensional end may be omitted
        (from a dict) or given as empty lists."""
        self.quiver = quiver
        self.dims = tuple(int(d) for d in dims)
        if len(self.dims) != quiver.n:
            raise ShapeError(
                f"dimension vector has {len(self.dims)} entries for {quiver.n} vertices"
            )
        if any(d < 0 for d in self.dims):
            raise ShapeError("negative dimension")
        if isinstance(maps, dict):
            seq = [maps.get(a.id) for a in quiver.arrows]
        else:
            seq = list(maps)
            if len(seq) != len(quiver.arrows):
                raise ShapeError("one matrix per arrow required")
        frozen = []
        for a, m in zip(quiver.arrows, seq):
            rows, cols = self.dims[a.target - 1], self.dims[a.source - 1]
            if m is None:
                m = exact.zeros(rows, cols)
            m = exact.mat_from(m)
            if len(m) != rows or (rows and any(len(r) != cols for r in m)):
                raise ShapeError(
                    f"map for arrow {a.id} must be {rows}x{cols} "
                    f"(target dim x source dim)"
                )
            frozen.append(exact.freeze(m))
        self.maps = tuple(frozen)
        self._key = (self.quiver.key(), self.dims, self.maps)

    def map_for(self, arrow_id):
        return self.maps[self.quiver.arrow_index(arrow_id)]

    def dim_at(self, v):
        return self.dims[v - 1]

    def total_dim(self):
        return sum(self.dims)

    def is_zero(self):
        return self.total_dim() == 0

    def key(self):
        return self._key

    def __eq__(self, other):
        return isinstance(other, Representation) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"Representation(dims={list(self.dims)})"

    def to_dict(self, include_quiver=True):
        out = {}
        if include_quiver:
            out["quiver"] = self.quiver.to_dict()
        out["dims"] = list(self.dims)
        out["maps"] = {
            a.id: [[str(x) for x in row] for row in m]
            for a, m in zip(self.quiver.arrows, self.maps)
        }
        return out

    @classmethod
    def from_dict(cls, data, quiver=None):
        if quiver is None:
            if "quiver" not in data:
                raise InputError("representation object needs an embedded quiver")
            quiver = Quiver.from_dict(data["quiver"])
        try:
            dims = data["dims"]
            maps = {
                aid: [[exact.frac(x) for x in row] for row in m]
                for aid, m in data.get("maps", {}).items()
            }
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed representation object: {exc}") from exc
        unknown = set(maps) - {a.id for a in quiver.arrows}
        if unknown:
            raise InputError(f"maps refer to unknown arrows: {sorted(unknown)}")
        return cls(quiver, dims, maps)


def zero_rep(q):
    return Representation(q, [0] * q.n, {})


def simple(q, v):
    """The simple representation S(v): k at vertex v, zero elsewhere."""
    if not (1 <= v <= q.n):
        raise InputError(f"vertex {v} outside 1..{q.n}")
    dims = [1 if i == v else 0 for i in range(1, q.n + 1)]
    return Representation(q, dims, {})


def identity_rep(q):
    """k at every vertex with every arrow acting as the identity (the unit
    for the vertex-wise tensor product)."""
    one = [[Fraction(1)]]
    return Representation(q, [1] * q.n, {a.id: one for a in q.arrows})


def dimension_vector(rep):
    return tuple(rep.dims)


def euler_form(q, x, y):
    """<x, y> = sum_v x_v y_v - sum_{a: s->t} x_s y_t (hereditary Euler form)."""
    if len(x) != q.n or len(y) != q.n:
        raise ShapeError("dimension vectors must have one entry per vertex")
    val = sum(a * b for a, b in zip(x, y))
    for a in q.arrows:
        val -= x[a.source - 1] * y[a.target - 1]
    return val


def _hom_system(m, n):
    """Rows of the linear system in the unknowns vec(f_v), row-major.

    Unknown layout: f_1 then f_2 ... ; f_v has shape (n.dims[v], m.dims[v])
    flattened row-major.  One equation per arrow a: s->t and per entry of
    f_t . M_a - N_a . f_s (shape n.dims[t] x m.dims[s])."""
    offsets = []
    total = 0
    for v in range(m.quiver.n):
        offsets.append(total)
        total += n.dims[v] * m.dims[v]
    rows = []
    for idx, a in enumerate(m.quiver.arrows):
        s, t = a.source - 1, a.target - 1
        ma = m.maps[idx]  # m.dims[t] x m.dims[s]
        na = n.maps[idx]  # n.dims[t] x n.dims[s]
        dt_n, ds_m = n.dims[t], m.dims[s]
        dt_m, ds_n = m.dims[t], n.dims[s]
        for p in range(dt_n):
            for qq in range(ds_m):
                row = [exact.ZERO] * total
                # (f_t . M_a)[p][q] = sum_r f_t[p][r] * M_a[r][q]
                for r in range(dt_m):
                    c = ma[r][qq]
                    if c != 0:
                        row[offsets[t] + p * dt_m + r] += c
                # (N_a . f_s)[p][q] = sum_r N_a[p][r] * f_s[r][q]
                for r in range(ds_n):
                    c = na[p][r]
                    if c != 0:
                        row[offsets[s] + r * ds_m + qq] -= c
                if any(x != 0 for x in row):
                    rows.append(row)
    return rows, offsets, total


_HOM_DIM_CACHE = {}


def hom_dim(m, n):
    """dim Hom(m, n), exactly."""
    if m.quiver != n.quiver:
        raise WrongQuiverError("representations live over different quivers")
    key = (m.key(), n.key())
    got = _HOM_DIM_CACHE.get(key)
    if got is not None:
        return got
    rows, _offsets, total = _hom_system(m, n)
    d = total - exact.rank(rows, total)
    _HOM_DIM_CACHE[key] = d
    return d


def hom_space(m, n):
    """(dim, basis) of Hom(m, n); each basis element is a tuple of
    per-vertex matrices (n.dims[v] x m.dims[v])."""
    if m.quiver != n.quiver:
        raise WrongQuiverError("representations live over different quivers")
    rows, offsets, total = _hom_system(m, n)
    kernel = exact.nullspace(rows, total)
    basis = []
    for vec in kernel:
        mats = []
        for v in range(m.quiver.n):
            r, c = n.dims[v], m.dims[v]
            off = offsets[v]
            mats.append(
                tuple(tuple(vec[off + i * c + j] for j in range(c)) for i in range(r))
            )
        basis.append(tuple(mats))
    _HOM_DIM_CACHE[(m.key(), n.key())] = len(basis)
    return len(basis), basis


def dim_ext1(m, n):
    """dim Ext^1(m, n) = dim Hom(m, n) - <dim m, dim n> (hereditary)."""
    val = hom_dim(m, n) - euler_form(m.quiver, m.dims, n.dims)
    if val < 0:
        raise ShapeError(
            f"negative ext dimension {val}; hom/euler bookkeeping is broken"
        )
    return val


def tensor_vertexwise(m, n):
    """Vertex-wise tensor product: dims multiply per vertex and each arrow
    acts by the Kronecker product (left factor slowest)."""
    if m.quiver != n.quiver:
        raise WrongQuiverError("representations live over different quivers")
    q = m.quiver
    dims = [dm * dn for dm, dn in zip(m.dims, n.dims)]
    maps = []
    for idx, a in enumerate(q.arrows):
        s, t = a.source - 1, a.target - 1
        maps.append(
            exact.kron(
                m.maps[idx],
                n.maps[idx],
                sa=(m.dims[t], m.dims[s]),
                sb=(n.dims[t], n.dims[s]),
            )
        )
    return Representation(q, dims, maps)


def opposite(q):
    """Quiver with every arrow reversed (same ids, same order)."""
    return Quiver(q.n, [(a.id, a.target, a.source) for a in q.arrows])


def dual(m):
    """The dual representation over the opposite quiver: vertex spaces are
    dualized and each reversed arrow acts by the transpose."""
    q = m.quiver
    maps = {}
    for idx, a in enumerate(q.arrows):
        s, t = a.source - 1, a.target - 1
        maps[a.id] = exact.transpose(m.maps[idx], rows=m.dims[t], cols=m.dims[s])
    return Representation(opposite(q), m.dims, maps)


def direct_sum(m, n):
    if m.quiver != n.quiver:
        raise WrongQuiverError("representations live over different quivers")
    q = m.quiver
    dims = [dm + dn for dm, dn in zip(m.dims, n.dims)]
    maps = []
    for idx, a in enumerate(q.arrows):
        s, t = a.source - 1, a.target - 1
        maps.append(
            exact.block_diag(
                m.maps[idx],
                n.maps[idx],
                sa=(m.dims[t], m.dims[s]),
                sb=(n.dims[t], n.dims[s]),
            )
        )
    return Representation(q, dims, maps)


def random_representation(q, max_dim, seed):
    """Seeded random representation: dims uniform in 0..max_dim, entries
    uniform small integers in -2..2."""
    rng = random.Random(seed)
    dims = [rng.randint(0, max_dim) for _ in range(q.n)]
    maps = []
    for a in q.arrows:
        rows, cols = dims[a.target - 1], dims[a.source - 1]
        maps.append(
            [[Fraction(rng.randint(-2, 2)) for _ in range(cols)] for _ in range(rows)]
        )
    return Representation(q, dims, maps)


def random_acyclic_quiver(n_max, seed):
    """Seeded random acyclic quiver: 2..n_max vertices, 1..2n arrows drawn
    forward along the vertex order (parallel arrows allowed)."""
    rng = random.Random(seed)
    n = rng.randint(2, max(2, n_max))
    count = rng.randint(1, 2 * n)
    arrows = []
    for k in range(1, count + 1):
        s = rng.randint(1, n - 1)
        t = rng.randint(s + 1, n)
        arrows.append((f"a{k}", s, t))
    return Quiver(n, arrows)


def _all_invertible(mats, dims):
    for mat, d in zip(mats, dims):
        if d == 0:
            continue
        if exact.invert(mat) is None:
            return False
    return True


def is_isomorphic(m, n, seed=0, attempts=32):
    """True / False / None (undecided).

    Equal dimension vectors are necessary; then an invertible element of
    Hom(m, n) is an isomorphism.  Basis elements are tried first, then
    seeded random combinations; None is returned when nothing invertible
    was found (overwhelmingly unlikely when an isomorphism exists)."""
    if m.quiver != n.quiver:
        raise WrongQuiverError("representations live over different quivers")
    if m.dims != n.dims:
        return False
    if m.total_dim() == 0:
        return True
    d, basis = hom_space(m, n)
    if d == 0:
        return False
    for elem in basis:
        if _all_invertible(elem, m.dims):
            return True
    rng = random.Random(seed)
    nverts = m.quiver.n
    for _ in range(attempts):
        coeffs = [Fraction(rng.randint(-3, 3)) for _ in range(d)]
        combo = []
        for v in range(nverts):
            rows, cols = n.dims[v], m.dims[v]
            mat = exact.zeros(rows, cols)
            for c, elem in zip(coeffs, basis):
                if c == 0:
                    continue
                ev = elem[v]
                for i in range(rows):
                    for j in range(cols):
                        if ev[i][j] != 0:
                            mat[i][j] += c * ev[i][j]
            combo.append(mat)
        if _all_invertible(combo, m.dims):
            return True
    return None
