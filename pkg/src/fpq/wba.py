"""Coproducts on path algebras and the module tensor products they induce.

The path algebra of a finite acyclic quiver has the (finite) set of paths
as a basis, trivial paths e_i included; the product of two paths is their
concatenation when the endpoints match and 0 otherwise (p*q meaning "q then
p", matching left modules).  A CoproductSpec equips the algebra with a
comultiplication and counit given on generators (trivial paths + arrows):
the comultiplication extends multiplicatively to longer paths, while the
counit — which need not be multiplicative when the structure is weak — is
extended by solving the counit law as an exact linear system.

check_axioms verifies, by exhaustive exact evaluation on the path basis:
multiplicativity of the comultiplication (including on pairs whose product
is zero, which is where the quiver relations bite), coassociativity, both
counit laws, the weak-unit comultiplication law

    (D(1) (x) 1)(1 (x) D(1)) = (D (x) id)D(1) = (1 (x) D(1))(D(1) (x) 1),

and the weak-counit product law

    eps(xyz) = sum eps(x y') eps(y'' z) = sum eps(x y'') eps(y' z)

over all basis triples, where D(y) = sum y' (x) y''.  A structure with
D(1) = 1 (x) 1 is flagged as a genuine bialgebra.

A coproduct makes the tensor product M (x) N of two representations into a
module again: the unit's coproduct acts on the componentwise tensor product
as an idempotent, its image carries the diagonal action through D, and
tensor_wba converts that module back into a representation (vertex spaces
are the images of the idempotent actions e_i).  For the canonical grouplike
coproduct (every path p gets D(p) = p (x) p, eps(p) = 1) this reproduces the
componentwise tensor product matrix-for-matrix.

catalog_k2 and catalog_kronecker return the five standard coproduct
patterns on the two-vertex quiver without and with arrows.  All five are
weak bialgebras in the arrowless case.  With arrows, patterns (b) and (d)
fail coassociativity at every arrow — the failure is forced: the quiver
relations and the counit law pin the arrow coproduct to a form that is not
coassociative — and check_axioms reports the witness.  The catalog
transcribes the patterns as defined; it does not repair them.
"""

import itertools
import random
import re
from fractions import Fraction

from . import exact
from .errors import (
    DuplicateLabelError,
    InputError,
    NotAQuiverActionError,
    StructureMismatchError,
    UnitNotFoundError,
    WrongQuiverError,
)
from .exact import frac
from .quiver import (
    Arrow,
    Quiver,
    Representation,
    identity_rep,
    is_isomorphic,
    simple,
    zero_rep,
)

_TRIVIAL_KEY = re.compile(r"^e([0-9]+)$")

ONE = Fraction(1)


class PathAlgebra:
    """Path basis of the path algebra of an acyclic quiver.

    Paths are stored as (source, target, arrow ids in traversal order);
    the basis is ordered with trivial paths first (by vertex), then by
    length, then lexicographically by the id tuple."""

    def __init__(self, quiver):
        self.quiver = quiver
        found = [(v, v, ()) for v in range(1, quiver.n + 1)]
        layer = [(a.source, a.target, (a.id,)) for a in quiver.arrows]
        while layer:
            found.extend(layer)
            layer = [
                (s, a.target, ids + (a.id,))
                for (s, t, ids) in layer
                for a in quiver.arrows
                if a.source == t
            ]
        found.sort(key=lambda p: (1, len(p[2]), p[2]) if p[2] else (0, p[0]))
        self.paths = found
        self.index = {p: k for k, p in enumerate(found)}
        self.trivial = {p[0]: k for k, p in enumerate(found) if not p[2]}
        self.arrow_path = {p[2][0]: k for k, p in enumerate(found) if len(p[2]) == 1}

    def __len__(self):
        return len(self.paths)

    def compose(self, i, j):
        """Index of path_i * path_j (j acts first), or None if zero."""
        si, ti, ai = self.paths[i]
        sj, tj, aj = self.paths[j]
        if si != tj:
            return None
        return self.index[(sj, ti, aj + ai)]

    def generator_keys(self):
        return [f"e{v}" for v in range(1, self.quiver.n + 1)] + [
            a.id for a in self.quiver.arrows
        ]

    def generator_index(self, key):
        m = _TRIVIAL_KEY.match(key)
        if m and int(m.group(1)) in self.trivial:
            return self.trivial[int(m.group(1))]
        if key in self.arrow_path:
            return self.arrow_path[key]
        raise InputError(f"unknown generator key {key!r}")

    def parse_path_key(self, key):
        """Basis index of a path key: 'e3', an arrow id, or 'a1.a2'
        (dot-joined arrow ids in traversal order)."""
        m = _TRIVIAL_KEY.match(key)
        if m and int(m.group(1)) in self.trivial and key not in self.arrow_path:
            return self.trivial[int(m.group(1))]
        ids = tuple(key.split("."))
        for aid in ids:
            if aid not in self.arrow_path:
                raise InputError(f"unknown path key {key!r}")
        src = self.paths[self.arrow_path[ids[0]]][0]
        cur = src
        for aid in ids:
            s, t, _ = self.paths[self.arrow_path[aid]]
            if s != cur:
                raise InputError(f"path key {key!r} is not a composable walk")
            cur = t
        return self.index[(src, cur, ids)]

    def path_key(self, k):
        s, _, ids = self.paths[k]
        return ".".join(ids) if ids else f"e{s}"


def _add_term(d, key, c):
    c = d.get(key, 0) + c
    if c:
        d[key] = c
    elif key in d:
        del d[key]


def _t2_mul(alg, x, y):
    out = {}
    for (u1, v1), c1 in x.items():
        for (u2, v2), c2 in y.items():
            u = alg.compose(u1, u2)
            if u is None:
                continue
            v = alg.compose(v1, v2)
            if v is None:
                continue
            _add_term(out, (u, v), c1 * c2)
    return out


def _t3_mul(alg, x, y):
    out = {}
    for (u1, v1, w1), c1 in x.items():
        for (u2, v2, w2), c2 in y.items():
            u = alg.compose(u1, u2)
            if u is None:
                continue
            v = alg.compose(v1, v2)
            if v is None:
                continue
            w = alg.compose(w1, w2)
            if w is None:
                continue
            _add_term(out, (u, v, w), c1 * c2)
    return out


class CoproductSpec:
    """Comultiplication and counit on a path algebra, given on generators.

    delta maps each generator key ('e1'..'en' and arrow ids) to a list of
    (left path key, right path key, coefficient) triples; counit maps each
    generator key to a scalar.  The comultiplication is extended to longer
    paths multiplicatively at construction time, and the counit by an exact
    solve of the counit law (free values 0; counit_consistent records
    whether the law could be satisfied at all).  unit optionally names the
    representation expected to be the tensor unit."""

    def __init__(self, quiver, delta, counit, name="custom", unit=None):
        self.quiver = quiver
        self.name = name
        self.unit = unit
        self.algebra = PathAlgebra(quiver)
        alg = self.algebra
        for a in quiver.arrows:
            m = _TRIVIAL_KEY.match(a.id)
            if m and int(m.group(1)) <= quiver.n:
                raise DuplicateLabelError(
                    f"arrow id {a.id!r} collides with a trivial-path key"
                )
        keys = alg.generator_keys()
        for key in keys:
            if key not in delta:
                raise InputError(f"coproduct not given on generator {key!r}")
            if key not in counit:
                raise InputError(f"counit not given on generator {key!r}")
        self.delta_gen = {}
        for key in keys:
            terms = {}
            for left, right, c in delta[key]:
                pair = (alg.parse_path_key(left), alg.parse_path_key(right))
                _add_term(terms, pair, frac(c))
            self.delta_gen[key] = terms
        self.eps_gen = {key: frac(counit[key]) for key in keys}
        self._delta = self._extend_delta()
        self.delta_unit = {}
        for v in range(1, quiver.n + 1):
            for pair, c in self.delta_gen[f"e{v}"].items():
                _add_term(self.delta_unit, pair, c)
        self._eps = self._extend_counit()
        self.counit_consistent = self._counit_laws_hold()

    def _extend_delta(self):
        alg = self.algebra
        full = [None] * len(alg)
        for k, (s, t, ids) in enumerate(alg.paths):
            if not ids:
                full[k] = dict(self.delta_gen[f"e{s}"])
            elif len(ids) == 1:
                full[k] = dict(self.delta_gen[ids[0]])
        for k, (s, t, ids) in enumerate(alg.paths):
            if len(ids) < 2:
                continue
            d = dict(self.delta_gen[ids[-1]])
            for aid in reversed(ids[:-1]):
                d = _t2_mul(alg, d, self.delta_gen[aid])
            full[k] = d
        return full

    def delta(self, k):
        return self._delta[k]

    def eps(self, k):
        return self._eps[k]

    def _generator_eps(self, k):
        s, t, ids = self.algebra.paths[k]
        if not ids:
            return self.eps_gen[f"e{s}"]
        if len(ids) == 1:
            return self.eps_gen[ids[0]]
        return None

    def _extend_counit(self):
        alg = self.algebra
        long = [k for k, p in enumerate(alg.paths) if len(p[2]) >= 2]
        col = {k: c for c, k in enumerate(long)}
        eps = [self._generator_eps(k) for k in range(len(alg))]
        if not long:
            return eps
        rows, rhs = [], []
        for p in range(len(alg)):
            for side in (0, 1):
                agg = {}
                for (u, v), c in self._delta[p].items():
                    kept, evaluated = (u, v) if side == 0 else (v, u)
                    agg.setdefault(kept, []).append((evaluated, c))
                seen = set(agg)
                seen.add(p)
                for kept in seen:
                    row = [Fraction(0)] * len(long)
                    rhs_val = ONE if kept == p else Fraction(0)
                    for evaluated, c in agg.get(kept, []):
                        if evaluated in col:
                            row[col[evaluated]] += c
                        else:
                            rhs_val -= c * eps[evaluated]
                    rows.append(row)
                    rhs.append([rhs_val])
        sol = exact.solve(rows, rhs, len(long), 1)
        if sol is None:
            sol = [[Fraction(0)] for _ in long]
        for k, c in zip(long, range(len(long))):
            eps[k] = sol[c][0]
        return eps

    def _counit_witness(self, side):
        """First path where (eps (x) id)D (side 0) or (id (x) eps)D (side 1)
        fails to be the identity, or None."""
        for p in range(len(self.algebra)):
            out = {}
            for (u, v), c in self._delta[p].items():
                kept = v if side == 0 else u
                evaluated = u if side == 0 else v
                _add_term(out, kept, c * self._eps[evaluated])
            if out != {p: ONE}:
                return p
        return None

    def _counit_laws_hold(self):
        return self._counit_witness(0) is None and self._counit_witness(1) is None

    def is_bialgebra(self):
        n = self.quiver.n
        expected = {}
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                expected[(self.algebra.trivial[i], self.algebra.trivial[j])] = ONE
        return self.delta_unit == expected

    def to_dict(self):
        alg = self.algebra
        delta = {}
        for key in alg.generator_keys():
            terms = [
                [alg.path_key(u), alg.path_key(v), str(c)]
                for (u, v), c in self.delta_gen[key].items()
            ]
            delta[key] = sorted(terms)
        out = {
            "name": self.name,
            "quiver": self.quiver.to_dict(),
            "delta": delta,
            "counit": {k: str(c) for k, c in self.eps_gen.items()},
        }
        if self.unit is not None:
            out["unit"] = self.unit.to_dict()
        return out

    @classmethod
    def from_dict(cls, data, quiver=None):
        q = quiver if quiver is not None else Quiver.from_dict(data["quiver"])
        unit = None
        if data.get("unit") is not None:
            unit = Representation.from_dict(data["unit"], quiver=q)
        return cls(
            q,
            data["delta"],
            data["counit"],
            name=data.get("name", "custom"),
            unit=unit,
        )


class AxiomReport:
    """Outcome of check_axioms: per-axiom first witnesses, in check order."""

    def __init__(self, structure, failures, bialgebra, counit_consistent):
        self.structure = structure
        self.failures = failures
        self.ok = not failures
        self.bialgebra = bialgebra
        self.counit_consistent = counit_consistent

    def describe(self):
        return {
            "structure": self.structure,
            "ok": self.ok,
            "bialgebra": self.bialgebra,
            "counit_extension_consistent": self.counit_consistent,
            "failures": self.failures,
        }

    def __repr__(self):
        state = "ok" if self.ok else f"{len(self.failures)} failures"
        return f"AxiomReport({self.structure}, {state})"


def _multiplicativity_witness(spec):
    alg = spec.algebra
    for i in range(len(alg)):
        for j in range(len(alg)):
            k = alg.compose(i, j)
            target = spec.delta(k) if k is not None else {}
            if _t2_mul(alg, spec.delta(i), spec.delta(j)) != target:
                return (alg.path_key(i), alg.path_key(j))
    return None


def _coassociativity_witness(spec):
    alg = spec.algebra
    for p in range(len(alg)):
        left, right = {}, {}
        for (u, v), c in spec.delta(p).items():
            for (x, y), d in spec.delta(u).items():
                _add_term(left, (x, y, v), c * d)
            for (x, y), d in spec.delta(v).items():
                _add_term(right, (u, x, y), c * d)
        if left != right:
            return alg.path_key(p)
    return None


def _unit_comultiplication_witness(spec):
    alg = spec.algebra
    du = spec.delta_unit
    middle = {}
    for (u, v), c in du.items():
        for (x, y), d in spec.delta(u).items():
            _add_term(middle, (x, y, v), c * d)
    trivials = list(alg.trivial.values())
    du_1 = {(u, v, t): c for (u, v), c in du.items() for t in trivials}
    one_du = {(t, u, v): c for (u, v), c in du.items() for t in trivials}
    if _t3_mul(alg, du_1, one_du) != middle:
        return "(D(1)(x)1)(1(x)D(1)) != (D(x)id)D(1)"
    if _t3_mul(alg, one_du, du_1) != middle:
        return "(1(x)D(1))(D(1)(x)1) != (D(x)id)D(1)"
    return None


def _counit_product_witness(spec):
    alg = spec.algebra
    n = len(alg)

    def eps_of(k):
        return spec.eps(k) if k is not None else Fraction(0)

    for x in range(n):
        for y in range(n):
            dy = spec.delta(y)
            for z in range(n):
                yz = alg.compose(y, z)
                lhs = eps_of(alg.compose(x, yz) if yz is not None else None)
                first = sum(
                    (
                        c * eps_of(alg.compose(x, u)) * eps_of(alg.compose(v, z))
                        for (u, v), c in dy.items()
                    ),
                    Fraction(0),
                )
                if first != lhs:
                    return (alg.path_key(x), alg.path_key(y), alg.path_key(z))
                second = sum(
                    (
                        c * eps_of(alg.compose(x, v)) * eps_of(alg.compose(u, z))
                        for (u, v), c in dy.items()
                    ),
                    Fraction(0),
                )
                if second != lhs:
                    return (alg.path_key(x), alg.path_key(y), alg.path_key(z))
    return None


def check_axioms(spec):
    """Exhaustively verify the weak bialgebra axioms on the path basis."""
    alg = spec.algebra
    failures = []
    w = _multiplicativity_witness(spec)
    if w is not None:
        failures.append(
            {"axiom": "multiplicativity", "witness": f"D(p*q) != D(p)D(q) at p={w[0]}, q={w[1]}"}
        )
    w = _coassociativity_witness(spec)
    if w is not None:
        failures.append(
            {"axiom": "coassociativity", "witness": f"(D(x)id)D != (id(x)D)D at {w}"}
        )
    w = spec._counit_witness(0)
    if w is not None:
        failures.append(
            {"axiom": "counit_left", "witness": f"(eps(x)id)D != id at {alg.path_key(w)}"}
        )
    w = spec._counit_witness(1)
    if w is not None:
        failures.append(
            {"axiom": "counit_right", "witness": f"(id(x)eps)D != id at {alg.path_key(w)}"}
        )
    w = _unit_comultiplication_witness(spec)
    if w is not None:
        failures.append({"axiom": "unit_comultiplication", "witness": w})
    w = _counit_product_witness(spec)
    if w is not None:
        failures.append(
            {
                "axiom": "counit_product_law",
                "witness": f"eps(xyz) law fails at x={w[0]}, y={w[1]}, z={w[2]}",
            }
        )
    return AxiomReport(spec.name, failures, spec.is_bialgebra(), spec.counit_consistent)


def canonical_wba(quiver):
    """The grouplike coproduct: D(p) = p (x) p and eps(p) = 1 on every path.
    Its module tensor product is the componentwise one; the unit is the
    all-k representation with identity arrow maps."""
    delta, counit = _grouplike_table(quiver)
    return CoproductSpec(
        quiver, delta, counit, name="canonical", unit=identity_rep(quiver)
    )


def _two_vertex_tables(variant):
    """Vertex-idempotent coproduct/counit tables for the five standard
    patterns; arrows are handled by the callers."""
    if variant == "a":
        delta = {
            "e1": [("e1", "e1", 1)],
            "e2": [("e2", "e2", 1), ("e1", "e2", 1), ("e2", "e1", 1)],
        }
        counit = {"e1": 1, "e2": 0}
    elif variant == "b":
        delta = {
            "e1": [("e1", "e1", 1), ("e2", "e2", 1)],
            "e2": [("e2", "e1", 1), ("e1", "e2", 1)],
        }
        counit = {"e1": 1, "e2": 0}
    elif variant == "c":
        delta = {
            "e2": [("e2", "e2", 1)],
            "e1": [("e1", "e1", 1), ("e1", "e2", 1), ("e2", "e1", 1)],
        }
        counit = {"e1": 0, "e2": 1}
    elif variant == "d":
        delta = {
            "e2": [("e2", "e2", 1), ("e1", "e1", 1)],
            "e1": [("e1", "e2", 1), ("e2", "e1", 1)],
        }
        counit = {"e1": 0, "e2": 1}
    elif variant == "e":
        delta = {"e1": [("e1", "e1", 1)], "e2": [("e2", "e2", 1)]}
        counit = {"e1": 1, "e2": 1}
    else:
        raise InputError(f"unknown catalog variant {variant!r}")
    return delta, counit


def catalog_k2():
    """The five coproduct structures on two isolated vertices (all pass
    check_axioms; (e) is weak but not a bialgebra)."""
    q = Quiver(2, [])
    out = []
    for variant in "abcde":
        delta, counit = _two_vertex_tables(variant)
        if variant in ("a", "b"):
            unit = simple(q, 1)
        elif variant in ("c", "d"):
            unit = simple(q, 2)
        else:
            unit = identity_rep(q)
        out.append(
            CoproductSpec(q, delta, counit, name=f"k2-{variant}", unit=unit)
        )
    return out


def kronecker_quiver(w):
    """Two vertices, w parallel arrows 1 -> 2 (ids r1..rw)."""
    if w < 1:
        raise InputError("the arrow count w must be at least 1")
    return Quiver(2, [Arrow(f"r{k}", 1, 2) for k in range(1, w + 1)])


def catalog_kronecker(w):
    """The five coproduct patterns on the w-arrow two-vertex quiver.

    (a)/(c): arrows primitive over the counit-1 vertex — weak bialgebras
    (in fact bialgebras).  (b)/(d): the same arrow formula forced by the
    counit law, which fails coassociativity at every arrow; included
    as defined, as known-bad entries check_axioms must flag.  (e): the
    canonical grouplike
    structure (a weak bialgebra that is not a bialgebra)."""
    q = kronecker_quiver(w)
    arrow_rules = {
        "a": lambda aid: [("e1", aid, 1), (aid, "e1", 1)],
        "b": lambda aid: [(aid, "e1", 1), ("e1", aid, 1)],
        "c": lambda aid: [("e2", aid, 1), (aid, "e2", 1)],
        "d": lambda aid: [(aid, "e2", 1), ("e2", aid, 1)],
    }
    out = []
    for variant in "abcd":
        delta, counit = _two_vertex_tables(variant)
        for a in q.arrows:
            delta[a.id] = arrow_rules[variant](a.id)
            counit[a.id] = 0
        unit = simple(q, 1) if variant in ("a", "b") else simple(q, 2)
        out.append(
            CoproductSpec(
                q, delta, counit, name=f"kronecker{w}-{variant}", unit=unit
            )
        )
    delta, counit = _grouplike_table(q)
    out.append(
        CoproductSpec(
            q, delta, counit, name=f"kronecker{w}-e", unit=identity_rep(q)
        )
    )
    return out


def _grouplike_table(quiver):
    delta = {}
    counit = {}
    for v in range(1, quiver.n + 1):
        delta[f"e{v}"] = [(f"e{v}", f"e{v}", 1)]
        counit[f"e{v}"] = 1
    for a in quiver.arrows:
        delta[a.id] = [(a.id, a.id, 1)]
        counit[a.id] = 1
    return delta, counit


class LeftModule:
    """A module over the path algebra presented by generator action
    matrices on one total space.  The invariants are exactly those that
    make the module a quiver representation in disguise: the e_i actions
    are orthogonal idempotents summing to the identity, and each arrow
    action is supported on the (target, source) block."""

    def __init__(self, algebra, dim, actions, check=True):
        self.algebra = algebra
        self.dim = dim
        self.actions = actions
        self._path_cache = {}
        if check:
            self._validate()

    def _validate(self):
        q = self.algebra.quiver
        ident = exact.identity(self.dim)
        total = exact.zeros(self.dim, self.dim)
        es = []
        for v in range(1, q.n + 1):
            e = self.actions[f"e{v}"]
            if exact.mat_mul(e, e) != e:
                raise NotAQuiverActionError(
                    f"action of e{v} is not idempotent"
                )
            es.append(e)
            total = exact.mat_add(total, e)
        if total != ident:
            raise NotAQuiverActionError("idempotent actions do not sum to 1")
        for i in range(len(es)):
            for j in range(len(es)):
                if i != j and not exact.is_zero_matrix(exact.mat_mul(es[i], es[j])):
                    raise NotAQuiverActionError(
                        f"actions of e{i + 1} and e{j + 1} are not orthogonal"
                    )
        for a in q.arrows:
            mat = self.actions[a.id]
            framed = exact.mat_mul(
                es[a.target - 1], exact.mat_mul(mat, es[a.source - 1])
            )
            if framed != mat:
                raise NotAQuiverActionError(
                    f"action of arrow {a.id} is not supported on the"
                    f" ({a.target}, {a.source}) block"
                )

    @classmethod
    def from_representation(cls, algebra, rep):
        q = algebra.quiver
        dims = list(rep.dims)
        total = sum(dims)
        offs = [0]
        for d in dims:
            offs.append(offs[-1] + d)
        actions = {}
        for v in range(1, q.n + 1):
            e = exact.zeros(total, total)
            for k in range(offs[v - 1], offs[v]):
                e[k][k] = ONE
            actions[f"e{v}"] = e
        for a in q.arrows:
            mat = exact.zeros(total, total)
            block = rep.map_for(a.id)
            for r in range(dims[a.target - 1]):
                for c in range(dims[a.source - 1]):
                    mat[offs[a.target - 1] + r][offs[a.source - 1] + c] = block[r][c]
            actions[a.id] = mat
        return cls(algebra, total, actions, check=False)

    def act_path(self, k):
        if k in self._path_cache:
            return self._path_cache[k]
        s, t, ids = self.algebra.paths[k]
        if not ids:
            out = self.actions[f"e{s}"]
        else:
            out = self.actions[ids[0]]
            for aid in ids[1:]:
                out = exact.mat_mul(self.actions[aid], out)
        self._path_cache[k] = out
        return out

    def to_representation(self):
        q = self.algebra.quiver
        dims = []
        cols = []
        for v in range(1, q.n + 1):
            e = self.actions[f"e{v}"]
            _, pivots = exact.rref(e)
            dims.append(len(pivots))
            for p in pivots:
                cols.append([e[r][p] for r in range(self.dim)])
        if sum(dims) != self.dim:
            raise NotAQuiverActionError(
                "vertex images do not decompose the module"
            )
        basis = [[cols[c][r] for c in range(len(cols))] for r in range(self.dim)]
        inverse = exact.invert(basis)
        if inverse is None:
            raise NotAQuiverActionError("vertex images are not independent")
        offs = [0]
        for d in dims:
            offs.append(offs[-1] + d)
        maps = {}
        for a in q.arrows:
            full = exact.mat_mul(inverse, exact.mat_mul(self.actions[a.id], basis))
            maps[a.id] = [
                row[offs[a.source - 1]:offs[a.source]]
                for row in full[offs[a.target - 1]:offs[a.target]]
            ]
        return Representation(q, dims, maps)


def tensor_wba(spec, m, n):
    """Tensor product of representations twisted through the coproduct.

    Builds the componentwise tensor product as a module over the algebra's
    two-fold tensor square, cuts it down to the image of the idempotent
    D(1)-action, restricts the D(generator) actions to that image, and
    converts the result back to a representation.  Raises
    NotAQuiverAction when the restricted actions fail the module
    invariants (which happens for structures that are not weak
    bialgebras), and StructureMismatch when D(1) does not even act
    idempotently."""
    if m.quiver.key() != spec.quiver.key() or n.quiver.key() != spec.quiver.key():
        raise WrongQuiverError("representations are not over the coproduct's quiver")
    dm, dn = m.total_dim(), n.total_dim()
    if dm == 0 or dn == 0:
        return zero_rep(spec.quiver)
    alg = spec.algebra
    mod_m = LeftModule.from_representation(alg, m)
    mod_n = LeftModule.from_representation(alg, n)
    size = dm * dn

    def act(element):
        out = exact.zeros(size, size)
        for (i, j), c in element.items():
            k = exact.kron(mod_m.act_path(i), mod_n.act_path(j))
            out = exact.mat_add(out, exact.mat_scale(c, k))
        return out

    projector = act(spec.delta_unit)
    if exact.mat_mul(projector, projector) != projector:
        raise StructureMismatchError(
            "the coproduct of 1 does not act idempotently on the tensor square"
        )
    _, pivots = exact.rref(projector)
    rank = len(pivots)
    if rank == 0:
        return zero_rep(spec.quiver)
    basis = [[projector[r][p] for p in pivots] for r in range(size)]
    actions = {}
    for key in alg.generator_keys():
        image = exact.mat_mul(act(spec.delta_gen[key]), basis)
        coords = exact.solve(basis, image, rank, rank)
        if coords is None:
            raise NotAQuiverActionError(
                f"D({key}) does not preserve the image of the D(1) action"
            )
        actions[key] = coords
    return LeftModule(alg, rank, actions).to_representation()


def is_discrete(spec):
    """Whether S(i) (x) S(j) is S(i) for i = j and 0 otherwise, evaluated
    through tensor_wba on every pair of vertex simples."""
    q = spec.quiver
    for i in range(1, q.n + 1):
        for j in range(1, q.n + 1):
            t = tensor_wba(spec, simple(q, i), simple(q, j))
            expected = [
                (1 if (v == i and i == j) else 0) for v in range(1, q.n + 1)
            ]
            if list(t.dims) != expected:
                return {
                    "discrete": False,
                    "structure": spec.name,
                    "witness": {"i": i, "j": j, "dims": list(t.dims)},
                }
    return {"discrete": True, "structure": spec.name, "witness": None}


def _vertex_permutations(quiver):
    """Vertex permutations that preserve the arrow-count matrix."""
    n = quiver.n
    counts = {}
    for a in quiver.arrows:
        counts[(a.source, a.target)] = counts.get((a.source, a.target), 0) + 1
    out = []
    for perm in itertools.permutations(range(1, n + 1)):
        mapped = {}
        for (s, t), c in counts.items():
            mapped[(perm[s - 1], perm[t - 1])] = c
        if mapped == counts:
            out.append(perm)
    return out


def _invertible_candidates(size, budget, rng):
    """Permutation matrices first, then seeded random invertible matrices
    with small integer entries."""
    for perm in itertools.permutations(range(size)):
        mat = [[ONE if perm[r] == c else Fraction(0) for c in range(size)]
               for r in range(size)]
        yield mat
    for _ in range(budget):
        mat = [
            [Fraction(rng.randint(-2, 2)) for _ in range(size)]
            for _ in range(size)
        ]
        if exact.invert(mat) is not None:
            yield mat


def equivalent_structures(s1, s2, budget=200, seed=0):
    """Search for an algebra automorphism sigma with
    D1 . sigma = (sigma (x) sigma) . D2 and eps1 . sigma = eps2.

    The search runs over vertex permutations preserving the quiver combined
    with invertible substitutions on each parallel-arrow span (permutation
    matrices, then seeded random small-integer matrices up to the budget).
    A hit is a proof of equivalence; NotFound is inconclusive."""
    if s1.quiver.key() != s2.quiver.key():
        raise WrongQuiverError("equivalence needs structures on the same quiver")
    q = s1.quiver
    alg = s1.algebra
    rng = random.Random(seed)
    spans = {}
    for k, a in enumerate(q.arrows):
        spans.setdefault((a.source, a.target), []).append(a.id)
    for perm in _vertex_permutations(q):
        span_keys = sorted(spans)
        pools = []
        for s, t in span_keys:
            target_span = (perm[s - 1], perm[t - 1])
            if len(spans.get(target_span, [])) != len(spans[(s, t)]):
                break
            pools.append(
                list(
                    itertools.islice(
                        _invertible_candidates(len(spans[(s, t)]), budget, rng),
                        max(budget, 1),
                    )
                )
            )
        else:
            for choice in itertools.product(*pools):
                sigma = {}
                for v in range(1, q.n + 1):
                    sigma[alg.trivial[v]] = {alg.trivial[perm[v - 1]]: ONE}
                for (s, t), mat in zip(span_keys, choice):
                    ids = spans[(s, t)]
                    target_ids = spans[(perm[s - 1], perm[t - 1])]
                    for c_idx, aid in enumerate(ids):
                        image = {}
                        for r_idx, tid in enumerate(target_ids):
                            if mat[r_idx][c_idx]:
                                image[alg.arrow_path[tid]] = mat[r_idx][c_idx]
                        sigma[alg.arrow_path[aid]] = image
                if _is_equivalence(s1, s2, sigma):
                    return {
                        "equivalent": True,
                        "sigma": _describe_sigma(alg, sigma),
                    }
    return {"equivalent": False, "sigma": None}


def _sigma_on_path(alg, sigma, k):
    """Image of basis path k under the substitution, as an element."""
    s, t, ids = alg.paths[k]
    if not ids:
        return dict(sigma[k])
    out = dict(sigma[alg.arrow_path[ids[0]]])
    for aid in ids[1:]:
        nxt = {}
        for p1, c1 in sigma[alg.arrow_path[aid]].items():
            for p0, c0 in out.items():
                comp = alg.compose(p1, p0)
                if comp is not None:
                    _add_term(nxt, comp, c1 * c0)
        out = nxt
    return out


def _is_equivalence(s1, s2, sigma):
    alg = s1.algebra
    gens = [alg.generator_index(k) for k in alg.generator_keys()]
    for g in gens:
        lhs = {}
        for p, c in _sigma_on_path(alg, sigma, g).items():
            for pair, d in s1.delta(p).items():
                _add_term(lhs, pair, c * d)
        rhs = {}
        for (u, v), c in s2.delta(g).items():
            for u2, cu in _sigma_on_path(alg, sigma, u).items():
                for v2, cv in _sigma_on_path(alg, sigma, v).items():
                    _add_term(rhs, (u2, v2), c * cu * cv)
        if lhs != rhs:
            return False
    for p in range(len(alg)):
        image = _sigma_on_path(alg, sigma, p)
        val = sum((c * s1.eps(k) for k, c in image.items()), Fraction(0))
        if val != s2.eps(p):
            return False
    return True


def _describe_sigma(alg, sigma):
    out = {}
    for k, image in sigma.items():
        out[alg.path_key(k)] = {
            alg.path_key(p): str(c) for p, c in image.items()
        }
    return out


def check_unit(spec, candidate=None, seed=0, extra_samples=3, max_dim=2):
    """Verify that the stored (or supplied) unit representation U satisfies
    U (x) M iso M iso M (x) U against the simples, the all-k identity
    representation, and seeded random samples.  Raises UnitNotFound when no
    candidate is available."""
    from .quiver import random_representation

    unit = candidate if candidate is not None else spec.unit
    if unit is None:
        raise UnitNotFoundError(
            f"structure {spec.name!r} stores no unit representation"
        )
    q = spec.quiver
    samples = [simple(q, v) for v in range(1, q.n + 1)]
    samples.append(identity_rep(q))
    for k in range(extra_samples):
        samples.append(random_representation(q, max_dim, seed=seed + 7 * k + 1))
    failures = []
    for idx, m in enumerate(samples):
        for side, t in (
            ("left", tensor_wba(spec, unit, m)),
            ("right", tensor_wba(spec, m, unit)),
        ):
            verdict = is_isomorphic(t, m, seed=seed)
            if verdict is not True:
                failures.append(
                    {
                        "sample": idx,
                        "side": side,
                        "dims": list(t.dims),
                        "expected_dims": list(m.dims),
                        "verdict": "undecided" if verdict is None else "no",
                    }
                )
    return {"ok": not failures, "structure": spec.name, "failures": failures}


def find_unit(spec, budget=64, seed=0):
    """The stored unit if it verifies, else a bounded search over
    representations with vertex dimensions in {0,1} and arrow entries in
    {0,1}.  Raises UnitNotFound when the budget is exhausted."""
    candidates = []
    if spec.unit is not None:
        candidates.append(spec.unit)
    q = spec.quiver
    for dims in itertools.product((1, 0), repeat=q.n):
        arrow_spaces = []
        for a in q.arrows:
            if dims[a.source - 1] and dims[a.target - 1]:
                arrow_spaces.append([[[Fraction(1)]], [[Fraction(0)]]])
            else:
                arrow_spaces.append([None])
        for combo in itertools.product(*arrow_spaces):
            maps = {
                a.id: mat
                for a, mat in zip(q.arrows, combo)
                if mat is not None
            }
            candidates.append(Representation(q, list(dims), maps))
    for candidate in candidates[: max(budget, 1)]:
        if check_unit(spec, candidate=candidate, seed=seed)["ok"]:
            return candidate
    raise UnitNotFoundError(
        f"no unit found for {spec.name!r} within the search budget"
    )


def perturb_spec(spec, seed):
    """A copy of the structure with exactly one coefficient changed
    (comultiplication term or counit value on a generator), used to
    exercise the axiom checker."""
    rng = random.Random(seed)
    alg = spec.algebra
    keys = alg.generator_keys()
    delta = {
        key: [
            [alg.path_key(u), alg.path_key(v), str(c)]
            for (u, v), c in sorted(spec.delta_gen[key].items())
        ]
        for key in keys
    }
    counit = {key: str(c) for key, c in spec.eps_gen.items()}
    shift = rng.choice([1, -1, 2, Fraction(1, 2)])
    if rng.random() < 0.75:
        key = rng.choice(keys)
        u = rng.randrange(len(alg))
        v = rng.randrange(len(alg))
        terms = {
            (alg.parse_path_key(lk), alg.parse_path_key(rk)): frac(c)
            for lk, rk, c in delta[key]
        }
        _add_term(terms, (u, v), shift)
        delta[key] = [
            [alg.path_key(a), alg.path_key(b), str(c)]
            for (a, b), c in sorted(terms.items())
        ]
        info = {
            "kind": "delta",
            "generator": key,
            "pair": (alg.path_key(u), alg.path_key(v)),
            "shift": str(shift),
        }
    else:
        key = rng.choice(keys)
        counit[key] = str(frac(counit[key]) + shift)
        info = {"kind": "counit", "generator": key, "pair": None,
                "shift": str(shift)}
    out = CoproductSpec(
        spec.quiver, delta, counit, name=f"{spec.name}+corrupt", unit=spec.unit
    )
    out.perturbation_info = info
    if info["pair"] is not None:
        out.perturbation = (
            f"{info['kind']}[{key}] += {shift}"
            f" * {info['pair'][0]}(x){info['pair'][1]}"
        )
    else:
        out.perturbation = f"{info['kind']}[{key}] += {shift}"
    return out


def deformation_preserves_axioms(spec, info):
    """Whether the one-coefficient change described by ``info`` (the
    ``perturbation_info`` of :func:`perturb_spec` applied to ``spec``)
    provably leaves every axiom intact.

    Single-coefficient changes almost always break an axiom, but not
    quite always.  Suppose every arrow coproduct of ``spec`` reads
    D(r) = e(x)r + r(x)e for one shared vertex idempotent e with
    D(e) = e(x)e, and the counit kills every arrow.  Adding c * rj(x)rk
    to D(ri) then changes the coassociativity defect by cubic terms
    only: c^2 * ri(x)rk(x)rk on one side (present only when j = i) and
    c^2 * rj(x)rj(x)ri on the other (present only when k = i).  These
    cancel exactly when j = k = i or when neither j nor k equals i, and
    no other axiom sees the new term (both legs die under the counit and
    annihilate every product that must vanish).  The deformed structure
    is then a genuine weak bialgebra, so a checker that accepted it
    would be right to.  Returns True exactly for that family."""
    if info["kind"] != "delta":
        return False
    arrow_ids = [a.id for a in spec.quiver.arrows]
    g = info["generator"]
    if g not in arrow_ids:
        return False
    u, v = info["pair"]
    if u not in arrow_ids or v not in arrow_ids:
        return False
    alg = spec.algebra
    base = None
    for aid in arrow_ids:
        k = alg.arrow_path[aid]
        expected = None
        for e, idx in alg.trivial.items():
            if spec.delta_gen[aid] == {(idx, k): ONE, (k, idx): ONE}:
                expected = idx
                break
        if expected is None or (base is not None and expected != base):
            return False
        base = expected
        if spec.eps_gen[aid] != 0:
            return False
    e_key = alg.path_key(base)
    if spec.delta_gen[e_key] != {(base, base): ONE}:
        return False
    return (u == g and v == g) or (u != g and v != g)
