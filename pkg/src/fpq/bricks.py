"""Bricks, brick sets, and their enumeration.

Objects live in the bounded derived category of a hereditary path algebra,
so every object is a shifted representation; a DerivedObject is a pair
(representation, integer shift).  Between shifted representations

    Hom(M[a], N[b]) = Hom(M, N)   if b = a,
                      Ext^1(M, N) if b = a + 1,
                      0            otherwise,

which is what derived_hom_dim computes.  A brick has a one-dimensional
endomorphism space; a brick set is a finite set of bricks with vanishing
hom spaces in both directions between distinct members.

maximal_brick_sets runs a Bron-Kerbosch search with pivoting over the
compatibility graph (edge = hom vanishes both ways).  Enumeration order is
deterministic: members of each set ascend by candidate index and the sets
are reported sorted lexicographically.  The search counts expansions and
raises CapExceeded (carrying the partial result) instead of truncating.
"""

from fractions import Fraction

from .errors import BadPathsError, CapExceededError, InputError, WrongQuiverError
from .quiver import Representation, dim_ext1, hom_dim


class DerivedObject:
    """A representation placed at an integer shift, optionally labeled."""

    def __init__(self, rep, shift=0, label=None):
        self.rep = rep
        self.shift = int(shift)
        self.label = label

    def key(self):
        return (self.rep.key(), self.shift)

    def __eq__(self, other):
        return isinstance(other, DerivedObject) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        tag = self.label or f"dims={list(self.rep.dims)}"
        return f"DerivedObject({tag}, shift={self.shift})"

    def describe(self):
        out = {"dims": list(self.rep.dims), "shift": self.shift}
        if self.label:
            out["label"] = self.label
        return out


def derived_hom_dim(x, y):
    """Hom dimension between shifted representations (see module docstring)."""
    d = y.shift - x.shift
    if d == 0:
        return hom_dim(x.rep, y.rep)
    if d == 1:
        return dim_ext1(x.rep, y.rep)
    return 0


def is_brick(x):
    """End(x) = k.  (The zero object is not a brick.)"""
    return hom_dim(x.rep, x.rep) == 1


class BrickSet:
    """A verified brick set with its hom-dimension certificate matrix
    (entry [i][j] = derived hom dimension from member i to member j;
    the identity matrix for a genuine brick set)."""

    def __init__(self, members, certificate):
        self.members = list(members)
        self.certificate = [list(row) for row in certificate]

    def __len__(self):
        return len(self.members)

    def describe(self):
        return {
            "members": [m.describe() for m in self.members],
            "certificate": self.certificate,
        }


def certify_brick_set(objs):
    """(ok, certificate) where certificate[i][j] = derived hom dim."""
    cert = [[derived_hom_dim(x, y) for y in objs] for x in objs]
    ok = all(
        cert[i][j] == (1 if i == j else 0)
        for i in range(len(objs))
        for j in range(len(objs))
    )
    return ok, cert


def is_brick_set(objs):
    if len(set(o.key() for o in objs)) != len(objs):
        return False
    return certify_brick_set(objs)[0]


def brick_set(objs):
    """Build a BrickSet, raising on anything that is not one."""
    if len(set(o.key() for o in objs)) != len(objs):
        raise InputError("brick set members must be pairwise distinct")
    ok, cert = certify_brick_set(objs)
    if not ok:
        raise InputError(f"not a brick set; hom certificate {cert}")
    return BrickSet(objs, cert)


def compatibility_graph(candidates):
    """Adjacency sets: i ~ j iff hom vanishes both ways between distinct
    candidates (candidates must each be bricks; checked by callers)."""
    n = len(candidates)
    adj = [set() for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if (
                derived_hom_dim(candidates[i], candidates[j]) == 0
                and derived_hom_dim(candidates[j], candidates[i]) == 0
            ):
                adj[i].add(j)
                adj[j].add(i)
    return adj


def maximal_brick_sets(candidates, cap=10 ** 6):
    """All maximal brick sets drawn from the candidate list, as sorted
    index tuples, sorted lexicographically.

    candidates must be pairwise distinct bricks (InputError otherwise).
    The Bron-Kerbosch recursion counts its expansions against cap and
    raises CapExceeded carrying the sets found so far."""
    for k, c in enumerate(candidates):
        if not is_brick(c):
            raise InputError(f"candidate {k} is not a brick (hom certificate fails)")
    keys = set()
    for k, c in enumerate(candidates):
        if c.key() in keys:
            raise InputError(f"candidate {k} duplicates an earlier candidate")
        keys.add(c.key())
    n = len(candidates)
    if n == 0:
        return []
    adj = compatibility_graph(candidates)
    out = []
    budget = [cap]

    def expand(r, p, x):
        budget[0] -= 1
        if budget[0] < 0:
            raise CapExceededError(
                f"clique enumeration exceeded {cap} expansions",
                partial=[tuple(sorted(c)) for c in out],
                cap=cap,
            )
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        pivot = max(p | x, key=lambda u: len(adj[u] & p))
        for v in sorted(p - adj[pivot]):
            expand(r | {v}, p & adj[v], x & adj[v])
            p = p - {v}
            x = x | {v}

    expand(set(), set(range(n)), set())
    return sorted(out)


def band_kronecker(quiver, c):
    """The band module with dims (1, 1) on the two-arrow Kronecker quiver:
    the first arrow acts by 1, the second by the scalar c.  Distinct
    scalars give pairwise hom-orthogonal bricks, so {band(c) : c in T}
    is a brick set of any finite size."""
    if quiver.n != 2 or len(quiver.arrows) != 2:
        raise WrongQuiverError("band_kronecker needs 2 vertices and 2 arrows")
    if any((a.source, a.target) != (1, 2) for a in quiver.arrows):
        raise WrongQuiverError("band_kronecker needs both arrows 1 -> 2")
    a1, a2 = quiver.arrows
    c = Fraction(c)
    return Representation(quiver, [1, 1], {a1.id: [[1]], a2.id: [[c]]})


def _walk_path(quiver, arrow_ids):
    """Check arrow_ids is a nonempty directed path; return its vertices."""
    if not arrow_ids:
        raise BadPathsError("paths must contain at least one arrow")
    try:
        arrows = [quiver.arrows[quiver.arrow_index(aid)] for aid in arrow_ids]
    except KeyError as exc:
        raise BadPathsError(f"unknown arrow id {exc.args[0]!r}") from exc
    verts = [arrows[0].source]
    for a in arrows:
        if a.source != verts[-1]:
            raise BadPathsError(
                f"arrow {a.id} starts at {a.source}, expected {verts[-1]}"
            )
        verts.append(a.target)
    return verts


def band_two_paths(quiver, path1, path2, c):
    """Band module over two directed paths that share exactly their
    endpoints: k at every vertex along either path, each arrow acting by 1
    except the first arrow of path2, which acts by the scalar c."""
    v1 = _walk_path(quiver, path1)
    v2 = _walk_path(quiver, path2)
    if (v1[0], v1[-1]) != (v2[0], v2[-1]):
        raise BadPathsError("paths must share their start and end vertices")
    if v1[0] == v1[-1]:
        raise BadPathsError("paths must join two distinct vertices")
    if set(v1[1:-1]) & set(v2[1:-1]):
        raise BadPathsError("paths must be vertex-disjoint away from endpoints")
    if len(v1) != len(set(v1)) or len(v2) != len(set(v2)):
        raise BadPathsError("each path must visit distinct vertices")
    if set(path1) & set(path2):
        raise BadPathsError("paths must not share arrows")
    support = set(v1) | set(v2)
    dims = [1 if v in support else 0 for v in range(1, quiver.n + 1)]
    c = Fraction(c)
    maps = {}
    for aid in path1:
        maps[aid] = [[Fraction(1)]]
    for k, aid in enumerate(path2):
        maps[aid] = [[c if k == 0 else Fraction(1)]]
    return Representation(quiver, dims, maps)


def band_family(quiver, path1=None, path2=None):
    """A generator of arbitrarily large brick-set families of band modules:
    call with no paths on the two-arrow Kronecker quiver, or with two
    endpoint-sharing paths on any quiver.  Returns size -> [DerivedObject]."""
    if path1 is None and path2 is None:
        def gen(count):
            return [
                DerivedObject(band_kronecker(quiver, c), 0, label=f"band({c})")
                for c in range(1, count + 1)
            ]
        return gen
    if path1 is None or path2 is None:
        raise BadPathsError("either give both paths or neither")

    def gen(count):
        return [
            DerivedObject(
                band_two_paths(quiver, path1, path2, c), 0, label=f"band({c})"
            )
            for c in range(1, count + 1)
        ]

    return gen
