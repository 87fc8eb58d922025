"""Finite-dimensional Hopf *-algebras over exact rationals.

An FDHopf stores all six structure tensors (unit, multiplication,
comultiplication, counit, antipode, star) with int/Fraction scalars.
Axiom verification clears denominators and runs integer einsums, so an
exhaustive check at dimension 24 stays fast while remaining exact; an
overflow bound guard falls back to arbitrary-precision arithmetic.

Character enumeration quotients by the commutator ideal and splits the
commutative quotient into local blocks by generalized eigenspaces of
multiplication operators, refusing loudly (NonSplitQuotient) whenever a
minimal polynomial fails to split over the rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Optional

import numpy as np

from .errors import (ClosureFailure, EvaluationNotPermutation, KleintwistError,
                     NonSplitQuotient, NotASubgroup)
from .perm import PermGroup, Permutation, generate, klein_group
from .ratlinalg import (RowSpace, column_space_basis, kernel_basis, invert,
                        mat_sub_scalar, matmul, matpow, matvec,
                        minimal_polynomial, rational_roots, solve_columns)

Scalar = "int | Fraction"
Vec = dict


def _n(q):
    if isinstance(q, Fraction) and q.denominator == 1:
        return int(q)
    return q


def vec_normalize(v: Vec) -> Vec:
    return {k: _n(q) for k, q in v.items() if q != 0}


def vec_add(a: Vec, b: Vec) -> Vec:
    out = dict(a)
    for k, q in b.items():
        out[k] = out.get(k, 0) + q
    return vec_normalize(out)


def vec_sub(a: Vec, b: Vec) -> Vec:
    out = dict(a)
    for k, q in b.items():
        out[k] = out.get(k, 0) - q
    return vec_normalize(out)


def vec_scale(v: Vec, c) -> Vec:
    if c == 0:
        return {}
    return {k: _n(q * c) for k, q in v.items()}


class FDHopf:
    """Hopf *-algebra given by structure tensors on a fixed basis.

    mult maps a basis pair (i, j) to the vector of e_i * e_j (missing
    pairs mean zero).  comult maps i to the list of (j, k, c) terms of
    delta(e_i).  antipode and star map each basis index to a vector.
    Instances are immutable by convention once built.
    """

    def __init__(self, dim: int, basis_labels: Iterable[str], unit: Vec,
                 mult: dict, comult: dict, counit: Iterable,
                 antipode: dict, star: dict):
        labels = tuple(basis_labels)
        if len(labels) != dim:
            raise ValueError("label count disagrees with dim")
        rng = range(dim)
        self.dim = dim
        self.basis_labels = labels
        self.unit = vec_normalize(unit)
        self.mult = {}
        for (i, j), v in mult.items():
            if i not in rng or j not in rng:
                raise ValueError("mult index out of range")
            nv = vec_normalize(v)
            if nv:
                self.mult[(i, j)] = nv
        self.comult = {}
        for i in rng:
            terms: dict = {}
            for (j, k, c) in comult[i]:
                if j not in rng or k not in rng:
                    raise ValueError("comult index out of range")
                terms[(j, k)] = terms.get((j, k), 0) + c
            self.comult[i] = [(j, k, _n(c)) for (j, k), c in sorted(terms.items()) if c != 0]
        self.counit = tuple(_n(c) for c in counit)
        if len(self.counit) != dim:
            raise ValueError("counit length disagrees with dim")
        self.antipode = {i: vec_normalize(antipode[i]) for i in rng}
        self.star = {i: vec_normalize(star[i]) for i in rng}
        self._delta2: dict = {}

    # -- basic linear operations ------------------------------------

    def basis_vec(self, i: int) -> Vec:
        return {i: 1}

    def mult_vec(self, x: Vec, y: Vec) -> Vec:
        out: Vec = {}
        for i, a in x.items():
            for j, b in y.items():
                m = self.mult.get((i, j))
                if not m:
                    continue
                ab = a * b
                for p, c in m.items():
                    out[p] = out.get(p, 0) + ab * c
        return vec_normalize(out)

    def antipode_vec(self, x: Vec) -> Vec:
        out: Vec = {}
        for i, a in x.items():
            for p, c in self.antipode[i].items():
                out[p] = out.get(p, 0) + a * c
        return vec_normalize(out)

    def star_vec(self, x: Vec) -> Vec:
        out: Vec = {}
        for i, a in x.items():
            for p, c in self.star[i].items():
                out[p] = out.get(p, 0) + a * c
        return vec_normalize(out)

    def counit_vec(self, x: Vec):
        return _n(sum((a * self.counit[i] for i, a in x.items()), Fraction(0)))

    def comult_vec(self, x: Vec) -> dict:
        out: dict = {}
        for i, a in x.items():
            for (j, k, c) in self.comult[i]:
                out[(j, k)] = out.get((j, k), 0) + a * c
        return {key: _n(q) for key, q in out.items() if q != 0}

    def delta2(self, i: int) -> list:
        """Terms (a, b, c, coeff) of the double coproduct of e_i."""
        cached = self._delta2.get(i)
        if cached is None:
            out = []
            for (j, k, c) in self.comult[i]:
                for (x, y, d) in self.comult[j]:
                    out.append((x, y, k, _n(c * d)))
            cached = self._delta2[i] = out
        return cached

    # -- structure predicates -----------------------------------------

    def noncommutative_witness(self) -> Optional[tuple]:
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if self.mult.get((i, j), {}) != self.mult.get((j, i), {}):
                    return (i, j)
        return None

    def is_commutative(self) -> bool:
        return self.noncommutative_witness() is None

    def is_cocommutative(self) -> bool:
        for i in range(self.dim):
            fwd = {(j, k): c for (j, k, c) in self.comult[i]}
            rev = {(k, j): c for (j, k, c) in self.comult[i]}
            if fwd != rev:
                return False
        return True

    def structure_equal(self, other: "FDHopf") -> bool:
        if self.dim != other.dim:
            return False
        return (self.unit == other.unit
                and self.mult == other.mult
                and self.comult == other.comult
                and self.counit == other.counit
                and self.antipode == other.antipode
                and self.star == other.star)

    def dump(self) -> str:
        def q(v) -> str:
            f = Fraction(v)
            return f"{f.numerator}/{f.denominator}"

        lines = [f"dim {self.dim}"]
        for i, lab in enumerate(self.basis_labels):
            lines.append(f"basis[{i}] = {lab}")
        for i, c in sorted(self.unit.items()):
            lines.append(f"u -> {i} : {q(c)}")
        for (i, j) in sorted(self.mult):
            for k, c in sorted(self.mult[(i, j)].items()):
                lines.append(f"m[{i}][{j}] -> {k} : {q(c)}")
        for i in range(self.dim):
            for (j, k, c) in self.comult[i]:
                lines.append(f"d[{i}] -> {j},{k} : {q(c)}")
        for i, c in enumerate(self.counit):
            if c:
                lines.append(f"e[{i}] : {q(c)}")
        for i in range(self.dim):
            for j, c in sorted(self.antipode[i].items()):
                lines.append(f"s[{i}] -> {j} : {q(c)}")
        for i in range(self.dim):
            for j, c in sorted(self.star[i].items()):
                lines.append(f"t[{i}] -> {j} : {q(c)}")
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"FDHopf(dim={self.dim})"


# -- concrete constructions ------------------------------------------


def group_algebra(G: PermGroup) -> FDHopf:
    """Q[G]: basis the group elements (sorted), group-like coproduct."""
    elems = G.sorted_elements()
    idx = {g: i for i, g in enumerate(elems)}
    n = len(elems)
    ident = Permutation.identity(G.degree)
    mult = {(i, j): {idx[elems[i] * elems[j]]: 1} for i in range(n) for j in range(n)}
    return FDHopf(
        dim=n,
        basis_labels=[g.cycle_string() for g in elems],
        unit={idx[ident]: 1},
        mult=mult,
        comult={i: [(i, i, 1)] for i in range(n)},
        counit=[1] * n,
        antipode={i: {idx[elems[i].inverse()]: 1} for i in range(n)},
        star={i: {idx[elems[i].inverse()]: 1} for i in range(n)},
    )


def function_algebra(G: PermGroup) -> FDHopf:
    """C(G): delta-function basis (sorted group order), pointwise product,
    coproduct dual to group multiplication."""
    elems = G.sorted_elements()
    idx = {g: i for i, g in enumerate(elems)}
    n = len(elems)
    ident = Permutation.identity(G.degree)
    comult = {}
    for i, g in enumerate(elems):
        comult[i] = [(idx[a], idx[a.inverse() * g], 1) for a in elems]
    return FDHopf(
        dim=n,
        basis_labels=["d_" + g.cycle_string() for g in elems],
        unit={i: 1 for i in range(n)},
        mult={(i, i): {i: 1} for i in range(n)},
        comult=comult,
        counit=[1 if g == ident else 0 for g in elems],
        antipode={i: {idx[elems[i].inverse()]: 1} for i in range(n)},
        star={i: {i: 1} for i in range(n)},
    )


# -- exhaustive axiom verification ------------------------------------


@dataclass
class ScaledTensors:
    """Integer-scaled structure tensors: each numpy array equals the
    exact tensor times its scale."""

    U: np.ndarray
    M: np.ndarray
    C: np.ndarray
    E: np.ndarray
    S: np.ndarray
    T: np.ndarray
    dU: int
    dM: int
    dC: int
    dE: int
    dS: int
    dT: int


def _denom(values) -> int:
    d = 1
    for v in values:
        d = lcm(d, Fraction(v).denominator)
    return d


def scaled_integer_tensors(H: FDHopf) -> ScaledTensors:
    n = H.dim
    dU = _denom(H.unit.values())
    dM = _denom(c for v in H.mult.values() for c in v.values())
    dC = _denom(c for i in range(n) for (_, _, c) in H.comult[i])
    dE = _denom(H.counit)
    dS = _denom(c for i in range(n) for c in H.antipode[i].values())
    dT = _denom(c for i in range(n) for c in H.star[i].values())

    U = np.zeros(n, dtype=np.int64)
    for i, c in H.unit.items():
        U[i] = int(Fraction(c) * dU)
    M = np.zeros((n, n, n), dtype=np.int64)
    for (i, j), v in H.mult.items():
        for p, c in v.items():
            M[i, j, p] = int(Fraction(c) * dM)
    C = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        for (a, b, c) in H.comult[i]:
            C[i, a, b] = int(Fraction(c) * dC)
    E = np.array([int(Fraction(c) * dE) for c in H.counit], dtype=np.int64)
    S = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j, c in H.antipode[i].items():
            S[i, j] = int(Fraction(c) * dS)
    T = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j, c in H.star[i].items():
            T[i, j] = int(Fraction(c) * dT)
    return ScaledTensors(U, M, C, E, S, T, dU, dM, dC, dE, dS, dT)


def _safe_einsum(subscripts: str, *arrays: np.ndarray) -> np.ndarray:
    """Integer einsum with an overflow guard: if the worst-case entry
    bound does not fit int64 comfortably, redo in exact object ints."""
    lhs, rhs = subscripts.split("->")
    terms = lhs.split(",")
    sizes: dict = {}
    for term, arr in zip(terms, arrays):
        for ch, s in zip(term, arr.shape):
            sizes[ch] = s
    contracted = set("".join(terms)) - set(rhs)
    bound = 1
    for arr in arrays:
        m = int(np.abs(arr).max()) if arr.size else 0
        bound *= max(1, m)
    for ch in contracted:
        bound *= sizes[ch]
    if bound >= 2 ** 62:
        return np.einsum(subscripts, *[a.astype(object) for a in arrays])
    return np.einsum(subscripts, *arrays, optimize=True)


def verify_hopf_axioms(H: FDHopf) -> dict:
    """Exhaustive check of all six axiom suites; returns booleans keyed
    associativity/coassociativity/counit/bialgebra/antipode/star.
    Failures are reported, never thrown."""
    t = scaled_integer_tensors(H)
    n = H.dim
    U, M, C, E, S, T = t.U, t.M, t.C, t.E, t.S, t.T
    eye = np.eye(n, dtype=np.int64)

    assoc = np.array_equal(_safe_einsum("ijw,wkp->ijkp", M, M),
                           _safe_einsum("jkw,iwp->ijkp", M, M))
    assoc = assoc and np.array_equal(_safe_einsum("i,ijp->jp", U, M), t.dU * t.dM * eye)
    assoc = assoc and np.array_equal(_safe_einsum("j,ijp->ip", U, M), t.dU * t.dM * eye)

    coassoc = np.array_equal(_safe_einsum("iab,axy->ixyb", C, C),
                             _safe_einsum("iab,bxy->iaxy", C, C))

    counit = (np.array_equal(_safe_einsum("iab,a->ib", C, E), t.dC * t.dE * eye)
              and np.array_equal(_safe_einsum("iab,b->ia", C, E), t.dC * t.dE * eye))

    lhs = _safe_einsum("ijw,wpq->ijpq", M, C)
    X = _safe_einsum("iab,acp->ibcp", C, M)
    W = _safe_einsum("jcd,bdq->jcbq", C, M)
    rhs = _safe_einsum("ibcp,jcbq->ijpq", X, W)
    bialg = np.array_equal(lhs * (t.dC * t.dM), rhs)
    bialg = bialg and np.array_equal(_safe_einsum("ijw,w->ij", M, E) * t.dE,
                                     np.outer(E, E) * t.dM)
    bialg = bialg and np.array_equal(_safe_einsum("i,ipq->pq", U, C) * t.dU,
                                     np.outer(U, U) * t.dC)
    bialg = bialg and int(U @ E) == t.dU * t.dE

    target = np.outer(E, U) * (t.dC * t.dS * t.dM)
    anti = (np.array_equal(_safe_einsum("iab,aw,wbp->ip", C, S, M) * (t.dE * t.dU), target)
            and np.array_equal(_safe_einsum("iab,bw,awp->ip", C, S, M) * (t.dE * t.dU), target))

    star = np.array_equal(_safe_einsum("ij,jk->ik", T, T), t.dT * t.dT * eye)
    star = star and np.array_equal(_safe_einsum("ijw,wp->ijp", M, T) * t.dT,
                                   _safe_einsum("jb,ia,bap->ijp", T, T, M))
    star = star and np.array_equal(_safe_einsum("iw,wab->iab", T, C) * t.dT,
                                   _safe_einsum("iab,ax,by->ixy", C, T, T))
    star = star and np.array_equal(_safe_einsum("i,ij->j", U, T), U * t.dT)
    star = star and np.array_equal(_safe_einsum("ij,j->i", T, E), E * t.dT)

    return {
        "associativity": bool(assoc),
        "coassociativity": bool(coassoc),
        "counit": bool(counit),
        "bialgebra": bool(bialg),
        "antipode": bool(anti),
        "star": bool(star),
    }


def all_axioms_pass(report: dict) -> bool:
    return all(report.values())


# -- structure-preserving maps ----------------------------------------


class HopfMap:
    """Linear map between FDHopf instances given by basis images; verify()
    checks exhaustively that it intertwines all six structure tensors."""

    def __init__(self, source: FDHopf, target: FDHopf, images: list):
        if len(images) != source.dim:
            raise ValueError("image count disagrees with source dim")
        self.source = source
        self.target = target
        self.images = [vec_normalize(v) for v in images]
        self.failure: Optional[str] = None

    def apply(self, x: Vec) -> Vec:
        out: Vec = {}
        for i, a in x.items():
            for p, c in self.images[i].items():
                out[p] = out.get(p, 0) + a * c
        return vec_normalize(out)

    def verify(self) -> bool:
        src, tgt = self.source, self.target
        self.failure = None
        if self.apply(src.unit) != tgt.unit:
            self.failure = "unit"
            return False
        for i in range(src.dim):
            for j in range(src.dim):
                left = self.apply(src.mult.get((i, j), {}))
                right = tgt.mult_vec(self.images[i], self.images[j])
                if left != right:
                    self.failure = f"mult at ({i},{j})"
                    return False
        for i in range(src.dim):
            pushed: dict = {}
            for (a, b, c) in src.comult[i]:
                for x, ca in self.images[a].items():
                    for y, cb in self.images[b].items():
                        key = (x, y)
                        pushed[key] = pushed.get(key, 0) + c * ca * cb
            pushed = {k: _n(q) for k, q in pushed.items() if q != 0}
            if pushed != tgt.comult_vec(self.images[i]):
                self.failure = f"comult at {i}"
                return False
            if tgt.counit_vec(self.images[i]) != src.counit[i]:
                self.failure = f"counit at {i}"
                return False
            if self.apply(src.antipode[i]) != tgt.antipode_vec(self.images[i]):
                self.failure = f"antipode at {i}"
                return False
            if self.apply(src.star[i]) != tgt.star_vec(self.images[i]):
                self.failure = f"star at {i}"
                return False
        return True

    def then(self, other: "HopfMap") -> "HopfMap":
        if other.source is not self.target and other.source.dim != self.target.dim:
            raise ValueError("composition dimension mismatch")
        return HopfMap(self.source, other.target,
                       [other.apply(v) for v in self.images])

    def inverse(self) -> "HopfMap":
        if self.source.dim != self.target.dim:
            raise ValueError("only square maps can be inverted")
        n = self.source.dim
        cols = [[Fraction(self.images[j].get(i, 0)) for j in range(n)] for i in range(n)]
        inv = invert(cols)
        images = [{i: _n(inv[i][j]) for i in range(n) if inv[i][j]} for j in range(n)]
        return HopfMap(self.target, self.source, images)


def restriction_surjection(G: PermGroup, V: PermGroup) -> HopfMap:
    """C(G) -> C(V), delta_g kept when g lies in V and killed otherwise."""
    if not V.is_subgroup_of(G):
        raise NotASubgroup("V is not a subgroup of G")
    src = function_algebra(G)
    tgt = function_algebra(V)
    velems = V.sorted_elements()
    vidx = {g: i for i, g in enumerate(velems)}
    images = []
    for g in G.sorted_elements():
        images.append({vidx[g]: 1} if g in V.elements else {})
    out = HopfMap(src, tgt, images)
    if not out.verify():
        raise KleintwistError(f"restriction failed to intertwine: {out.failure}")
    return out


def fourier_iso(V: PermGroup, dual_generators: Optional[tuple] = None) -> HopfMap:
    """C(V) -> Q[K] for an elementary abelian 2-group V of order 1, 2 or
    4, sending delta_v to the averaged character sum (1/|V|) sum chi(v) t_chi.

    K is a fixed concrete carrier of the dual group (the Klein group for
    |V| = 4).  dual_generators = (g1, g2) pins the labeling: basis slot 1
    of K is the character with value -1 on g1 and +1 on g2, slot 2 the
    reverse, slot 3 their product.
    """
    if not V.is_abelian() or any(p.order() > 2 for p in V.elements):
        raise ValueError("need an elementary abelian 2-group of exponent 2")
    elems = V.sorted_elements()
    order = len(elems)
    ident = Permutation.identity(V.degree)
    if order == 1:
        if dual_generators:
            raise ValueError("trivial group takes no dual generators")
        K = PermGroup(1, {Permutation.identity(1)})
        chars = [{ident: 1}]
    elif order == 2:
        g = next(p for p in elems if not p.is_identity())
        if dual_generators is None:
            dual_generators = (g,)
        if tuple(dual_generators) != (g,):
            raise ValueError("dual generator must be the unique involution")
        K = generate(2, [Permutation.from_cycles(2, [(1, 2)])])
        chars = [{ident: 1, g: 1}, {ident: 1, g: -1}]
    elif order == 4:
        nonid = [p for p in elems if not p.is_identity()]
        if dual_generators is None:
            dual_generators = (nonid[0], nonid[1])
        g1, g2 = dual_generators
        if g1 not in V.elements or g2 not in V.elements:
            raise ValueError("dual generators must lie in V")
        if g1 == g2 or g1.is_identity() or g2.is_identity():
            raise ValueError("dual generators must be distinct involutions")
        K = klein_group()
        g3 = g1 * g2
        chars = [
            {ident: 1, g1: 1, g2: 1, g3: 1},
            {ident: 1, g1: -1, g2: 1, g3: -1},
            {ident: 1, g1: 1, g2: -1, g3: -1},
            {ident: 1, g1: -1, g2: -1, g3: 1},
        ]
    else:
        raise ValueError(f"order {order} is not 1, 2 or 4")
    src = function_algebra(V)
    tgt = group_algebra(K)
    images = []
    for v in elems:
        images.append({k: Fraction(chars[k][v], order) for k in range(order)})
    out = HopfMap(src, tgt, images)
    if not out.verify():
        raise KleintwistError(f"fourier map failed to intertwine: {out.failure}")
    return out


# -- characters --------------------------------------------------------


@dataclass(frozen=True)
class Character:
    """A multiplicative unital *-functional, stored by its basis values."""

    parent: FDHopf
    values: tuple

    def __call__(self, x: Vec):
        return _n(sum((a * self.values[i] for i, a in x.items()), Fraction(0)))


def characters(H: FDHopf) -> list:
    """All characters of H, exactly.

    Quotients by the two-sided commutator ideal, then splits the
    commutative quotient into local blocks through generalized
    eigenspaces of multiplication operators.  Each block yields one
    character; a minimal polynomial without enough rational roots
    raises NonSplitQuotient.
    """
    n = H.dim
    if n > 64:
        raise ValueError(f"character enumeration restricted to dim <= 64, got {n}")

    def dense(v: Vec):
        row = [Fraction(0)] * n
        for k, c in v.items():
            row[k] = Fraction(c)
        return row

    ideal = RowSpace(n)
    work = []
    for i in range(n):
        for j in range(i + 1, n):
            comm = vec_sub(H.mult.get((i, j), {}), H.mult.get((j, i), {}))
            if comm and ideal.add(dense(comm)):
                work.append(comm)
    while work:
        v = work.pop()
        for k in range(n):
            basis = {k: 1}
            for prod in (H.mult_vec(basis, v), H.mult_vec(v, basis)):
                if prod and ideal.add(dense(prod)):
                    work.append(prod)

    pivset = set(ideal.pivots)
    free = [c for c in range(n) if c not in pivset]
    m = len(free)
    if m == 0:
        raise KleintwistError("commutator ideal is the whole algebra")

    def to_quotient(v: Vec):
        r = ideal.reduce(dense(v))
        return [r[f] for f in free]

    # Multiplication operators of the quotient basis, as m x m matrices.
    ops = []
    for j in range(m):
        cols = [to_quotient(H.mult_vec({free[j]: 1}, {free[k]: 1})) for k in range(m)]
        ops.append([[cols[k][r] for k in range(m)] for r in range(m)])

    def restrict(L, block):
        cols = []
        for vec in block:
            img = matvec(L, vec)
            coeffs = solve_columns(block, img)
            if coeffs is None:
                raise KleintwistError("block not invariant under multiplication")
            cols.append(coeffs)
        b = len(block)
        return [[cols[c][r] for c in range(b)] for r in range(b)]

    def lincomb(block, coords):
        out = [Fraction(0)] * m
        for c, vec in zip(coords, block):
            if c:
                for t in range(m):
                    out[t] += c * vec[t]
        return out

    initial = [[Fraction(int(r == j)) for r in range(m)] for j in range(m)]
    queue = [[initial[j] for j in range(m)]]
    blocks = []
    while queue:
        block = queue.pop()
        b = len(block)
        for L in ops:
            R = restrict(L, block)
            mp = minimal_polynomial(R)
            roots, rem = rational_roots(mp)
            if not roots:
                raise NonSplitQuotient(
                    f"minimal polynomial without rational roots: {rem}")
            if len(roots) == 1 and len(rem) == 1:
                continue
            pieces = []
            covered = 0
            for lam, _mult in roots:
                N = matpow(mat_sub_scalar(R, lam), b)
                ker = kernel_basis(N)
                if ker:
                    pieces.append([lincomb(block, v) for v in ker])
                    covered += len(ker)
            if covered < b:
                P = None
                for lam, _mult in roots:
                    F = matpow(mat_sub_scalar(R, lam), b)
                    P = F if P is None else matmul(P, F)
                img = column_space_basis(P)
                pieces.append([lincomb(block, v) for v in img])
            queue.extend(pieces)
            break
        else:
            blocks.append(block)

    unit_q = to_quotient(H.unit)
    basis_q = [to_quotient({i: 1}) for i in range(n)]
    out = []
    for block in blocks:
        b = len(block)
        # chi on the quotient basis: unique eigenvalue of each operator,
        # read off as trace/b since the minimal polynomial is (x-lam)^q.
        chi_q = []
        for j in range(m):
            R = restrict(ops[j], block)
            tr = sum(R[r][r] for r in range(b))
            chi_q.append(tr / b)
        values = []
        for i in range(n):
            values.append(_n(sum((basis_q[i][j] * chi_q[j] for j in range(m)
                                  if basis_q[i][j]), Fraction(0))))
        chi = Character(H, tuple(values))
        if chi(H.unit) != 1:
            raise KleintwistError("character fails chi(1) = 1")
        for i in range(n):
            for j in range(n):
                if chi(H.mult.get((i, j), {})) != _n(Fraction(values[i]) * Fraction(values[j])):
                    raise KleintwistError(f"character not multiplicative at ({i},{j})")
        for i in range(n):
            if chi(H.star[i]) != values[i]:
                raise KleintwistError(f"character not star-compatible at {i}")
        out.append(chi)

    out.sort(key=lambda ch: tuple(Fraction(v) for v in ch.values))
    if len({ch.values for ch in out}) != len(out):
        raise KleintwistError("duplicate characters from distinct blocks")
    return out


def convolution(H: FDHopf, f: Character, g: Character) -> Character:
    values = []
    for i in range(H.dim):
        acc = Fraction(0)
        for (a, b, c) in H.comult[i]:
            acc += c * Fraction(f.values[a]) * Fraction(g.values[b])
        values.append(_n(acc))
    return Character(H, tuple(values))


def convolution_identity(H: FDHopf) -> Character:
    return Character(H, tuple(H.counit))


def convolution_inverse(H: FDHopf, f: Character) -> Character:
    values = []
    for i in range(H.dim):
        acc = Fraction(0)
        for w, c in H.antipode[i].items():
            acc += c * Fraction(f.values[w])
        values.append(_n(acc))
    return Character(H, tuple(values))


def character_group(H: FDHopf, chars: Optional[list] = None) -> PermGroup:
    """The characters under convolution, returned through their left
    regular action on the sorted character list (position j holds the
    j-th smallest value tuple; the permutation of chi sends the slot of
    eta to the slot of chi * eta)."""
    if chars is None:
        chars = characters(H)
    chars = sorted(chars, key=lambda ch: tuple(Fraction(v) for v in ch.values))
    index = {ch.values: i for i, ch in enumerate(chars)}
    if len(index) != len(chars):
        raise ClosureFailure("character list contains duplicates")
    if convolution_identity(H).values not in index:
        raise ClosureFailure("counit is not in the character list")
    perms = set()
    for f in chars:
        images = []
        for g in chars:
            prod = convolution(H, f, g)
            pos = index.get(prod.values)
            if pos is None:
                raise ClosureFailure(
                    "convolution product escapes the character set")
            images.append(pos + 1)
        perms.add(Permutation(images))
        if convolution_inverse(H, f).values not in index:
            raise ClosureFailure("convolution inverse escapes the character set")
    return PermGroup(len(chars), perms)


def character_to_permutation(G: PermGroup, chi: Character) -> Permutation:
    """Evaluate a character of an algebra built on C(G)'s basis at the
    row-sum generators u_ij = sum over {g : g(j) = i} of the basis delta
    functions; the value matrix must be a permutation matrix."""
    elems = G.sorted_elements()
    if chi.parent.dim != len(elems):
        raise ValueError("character dimension disagrees with group order")
    deg = G.degree
    mat = [[0] * deg for _ in range(deg)]
    for i in range(1, deg + 1):
        for j in range(1, deg + 1):
            val = _n(sum((Fraction(chi.values[k]) for k, g in enumerate(elems)
                          if g(j) == i), Fraction(0)))
            if val not in (0, 1):
                raise EvaluationNotPermutation(
                    f"u[{i}][{j}] evaluates to {val}")
            mat[i - 1][j - 1] = int(val)
    images = [0] * deg
    for j in range(deg):
        col = [mat[i][j] for i in range(deg)]
        if sum(col) != 1:
            raise EvaluationNotPermutation(f"column {j + 1} sum != 1")
        images[j] = col.index(1) + 1
    if sorted(images) != list(range(1, deg + 1)):
        raise EvaluationNotPermutation("value matrix is not a permutation matrix")
    return Permutation(images)
