"""Two-cocycles on finite-dimensional Hopf *-algebras and the twist.

A Cocycle2 is a convolution-invertible bilinear functional sigma given
by its value table on a basis.  twist() deforms the product

    x *_sigma y  =  sum  sigma(x1, y1) sigma^{-1}(x3, y3) x2 y2

keeping the coalgebra fixed, builds the deformed antipode, and replaces
the involution by its cocycle-corrected form.  The correction data is a
functional L with L(x1) L(x2) = sigma(x1, x2) sigma(x2, x1) on the
relevant support; without it the naive entrywise star would force the
deformed product to be commutative, so twisting anything interesting
would fail the star axioms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import numpy as np

from .errors import KleintwistError, TwistNotHopf
from .hopf import (FDHopf, HopfMap, _n, _safe_einsum, fourier_iso,
                   group_algebra, restriction_surjection,
                   scaled_integer_tensors, vec_normalize,
                   verify_hopf_axioms)
from .perm import PermGroup, Permutation, easy_klein, klein_group, symmetric_group


@dataclass(frozen=True)
class Cocycle2:
    """A 2-cocycle on `carrier`: table[i][j] = sigma(e_i, e_j), its
    convolution inverse, and the star-correction functional."""

    carrier: FDHopf
    table: tuple
    inverse_table: tuple
    star_corrector: tuple

    @staticmethod
    def build(carrier: FDHopf, table, inverse_table, star_corrector) -> "Cocycle2":
        tab = tuple(tuple(_n(c) for c in row) for row in table)
        inv = tuple(tuple(_n(c) for c in row) for row in inverse_table)
        cor = tuple(_n(c) for c in star_corrector)
        if len(tab) != carrier.dim or any(len(r) != carrier.dim for r in tab):
            raise ValueError("table shape disagrees with carrier dim")
        if len(inv) != carrier.dim or any(len(r) != carrier.dim for r in inv):
            raise ValueError("inverse table shape disagrees with carrier dim")
        if len(cor) != carrier.dim:
            raise ValueError("star corrector length disagrees with carrier dim")
        return Cocycle2(carrier, tab, inv, cor)

    def value(self, x: dict, y: dict):
        acc = Fraction(0)
        for i, a in x.items():
            for j, b in y.items():
                acc += a * b * self.table[i][j]
        return _n(acc)


def _grouplike_corrector(carrier: FDHopf, table) -> tuple:
    """The canonical corrector L(g) = sigma(g, g^-1) on a group-like
    basis.  This is the evaluation of sigma(x1, S x2), the functional
    that conjugates the old star into the twisted one; taking it (rather
    than an arbitrary solution of the sign identity) keeps the twisted
    star independent of how the basis happens to be labeled."""
    n = carrier.dim
    for i in range(n):
        if carrier.comult[i] != [(i, i, 1)]:
            raise KleintwistError("corrector search needs a group-like basis")
    prod = {}
    for i in range(n):
        for j in range(n):
            v = carrier.mult.get((i, j), {})
            if len(v) != 1 or set(v.values()) != {1}:
                raise KleintwistError("corrector search needs a group basis")
            prod[(i, j)] = next(iter(v))
    inverse = {}
    (unit_idx,) = carrier.unit.keys()
    for i in range(n):
        inverse[i] = next(j for j in range(n) if prod[(i, j)] == unit_idx)
    lam = [table[i][inverse[i]] for i in range(n)]
    # L must trivialize the antisymmetrization, else no star can work
    ok = all(lam[prod[(i, j)]] * lam[i] * lam[j] == table[i][j] * table[j][i]
             for i in range(n) for j in range(n))
    if not ok:
        raise KleintwistError("sigma(g, g^-1) does not correct this cocycle's star")
    return tuple(lam)


def trivial_cocycle(H: FDHopf) -> Cocycle2:
    """sigma = counit x counit; twisting by it changes nothing."""
    e = H.counit
    table = [[_n(Fraction(e[i]) * e[j]) for j in range(H.dim)] for i in range(H.dim)]
    return Cocycle2.build(H, table, table, e)


def klein_bicharacter() -> Cocycle2:
    """The nontrivial bicharacter cocycle on the group algebra of the
    Klein four-group; with basis t0..t3 (identity first) the value is -1
    exactly at the pairs (1,1) (1,3) (2,1) (2,2) (3,2) (3,3)."""
    carrier = group_algebra(klein_group())
    table = [
        [1, 1, 1, 1],
        [1, -1, 1, -1],
        [1, -1, -1, 1],
        [1, 1, -1, -1],
    ]
    corrector = _grouplike_corrector(carrier, table)
    return Cocycle2.build(carrier, table, table, corrector)


def _scaled_table(table) -> tuple:
    d = 1
    for row in table:
        for c in row:
            d = lcm(d, Fraction(c).denominator)
    arr = np.array([[int(Fraction(c) * d) for c in row] for row in table],
                   dtype=np.int64)
    return arr, d


def verify_cocycle(sigma: Cocycle2) -> bool:
    """Exhaustive check: unitality, two-sided convolution inverse, and
    the associativity-compatible cocycle identity

        sigma(x1,y1) sigma(x2 y2, z)  =  sigma(y1,z1) sigma(x, y2 z2).
    """
    H = sigma.carrier
    t = scaled_integer_tensors(H)
    U, M, C, E = t.U, t.M, t.C, t.E
    Sg, dSg = _scaled_table(sigma.table)
    Sv, dSv = _scaled_table(sigma.inverse_table)

    ok = np.array_equal(_safe_einsum("i,ij->j", U, Sg) * t.dE, E * (t.dU * dSg))
    ok = ok and np.array_equal(_safe_einsum("j,ij->i", U, Sg) * t.dE, E * (t.dU * dSg))
    ok = ok and np.array_equal(_safe_einsum("i,ij->j", U, Sv) * t.dE, E * (t.dU * dSv))
    ok = ok and np.array_equal(_safe_einsum("j,ij->i", U, Sv) * t.dE, E * (t.dU * dSv))
    if not ok:
        return False

    ee = np.outer(E, E)
    conv = _safe_einsum("iab,jde,ad,be->ij", C, C, Sg, Sv)
    if not np.array_equal(conv * (t.dE * t.dE), ee * (t.dC * t.dC * dSg * dSv)):
        return False
    conv = _safe_einsum("iab,jde,ad,be->ij", C, C, Sv, Sg)
    if not np.array_equal(conv * (t.dE * t.dE), ee * (t.dC * t.dC * dSg * dSv)):
        return False

    SM1 = _safe_einsum("bew,wk->bek", M, Sg)
    lhs = _safe_einsum("iab,jde,ad,bek->ijk", C, C, Sg, SM1)
    SM2 = _safe_einsum("ehw,iw->ieh", M, Sg)
    rhs = _safe_einsum("jde,kgh,dg,ieh->ijk", C, C, Sg, SM2)
    return np.array_equal(lhs, rhs)


def pullback(sigma: Cocycle2, pi: HopfMap) -> Cocycle2:
    """Pull a cocycle on pi's target back along pi to pi's source."""
    if pi.target.dim != sigma.carrier.dim or not pi.target.structure_equal(sigma.carrier):
        raise ValueError("pi's target is not the cocycle's carrier")
    if not pi.verify():
        raise KleintwistError(f"pullback needs a Hopf map, failed at: {pi.failure}")
    n = pi.source.dim
    k = sigma.carrier.dim

    def pulled(tbl):
        out = []
        for i in range(n):
            row = []
            vi = pi.images[i]
            for j in range(n):
                vj = pi.images[j]
                acc = Fraction(0)
                for a, ca in vi.items():
                    for b, cb in vj.items():
                        acc += ca * cb * tbl[a][b]
                row.append(acc)
            out.append(row)
        return out

    corrector = []
    for i in range(n):
        acc = Fraction(0)
        for a, ca in pi.images[i].items():
            acc += ca * sigma.star_corrector[a]
        corrector.append(acc)
    out = Cocycle2.build(pi.source, pulled(sigma.table),
                         pulled(sigma.inverse_table), corrector)
    if not verify_cocycle(out):
        raise KleintwistError("pulled-back table fails the cocycle identities")
    return out


def rebind(sigma: Cocycle2, H: FDHopf) -> Cocycle2:
    """The same value table read as a cocycle on another algebra with the
    same underlying coalgebra (e.g. a twist of the original carrier);
    re-verified because the cocycle identity involves the product."""
    if H.dim != sigma.carrier.dim:
        raise ValueError("dimension mismatch")
    out = Cocycle2.build(H, sigma.table, sigma.inverse_table, sigma.star_corrector)
    if not verify_cocycle(out):
        raise KleintwistError("table is not a cocycle over the new product")
    return out


def twist(H: FDHopf, sigma: Cocycle2, verify: bool = True,
          correct_star: bool = True) -> FDHopf:
    """The 2-cocycle twist of H.  Coalgebra unchanged; product dressed by
    sigma on the left and sigma^{-1} on the right of the coproduct legs;
    antipode deformed accordingly; star replaced by its corrected form
    unless correct_star is switched off (kept only to demonstrate the
    failure mode)."""
    if sigma.carrier is not H:
        raise ValueError("cocycle is bound to a different algebra; rebind first")
    n = H.dim
    rng = range(n)

    # Everything below works on integer-rescaled data; rationals are only
    # reconstituted once per output entry.
    tblI, dT1 = _scaled_table(sigma.table)
    invI, dT2 = _scaled_table(sigma.inverse_table)
    tblI, invI = tblI.tolist(), invI.tolist()
    dC = 1
    for i in rng:
        for (_, _, c) in H.comult[i]:
            dC = lcm(dC, Fraction(c).denominator)
    dC2 = dC * dC
    d2I = {i: [(a, b, c, int(Fraction(u) * dC2)) for (a, b, c, u) in H.delta2(i)]
           for i in rng}
    dM = 1
    for v in H.mult.values():
        for c in v.values():
            dM = lcm(dM, Fraction(c).denominator)
    multI = {key: {s: int(Fraction(cf) * dM) for s, cf in v.items()}
             for key, v in H.mult.items()}
    dS = 1
    for i in rng:
        for c in H.antipode[i].values():
            dS = lcm(dS, Fraction(c).denominator)
    antI = {i: {j: int(Fraction(cf) * dS) for j, cf in H.antipode[i].items()}
            for i in rng}

    suppL = {a for a in rng if any(tblI[a])}
    suppR = {p for p in rng if any(row[p] for row in tblI)}
    suppLi = {a for a in rng if any(invI[a])}
    suppRi = {p for p in rng if any(row[p] for row in invI)}
    left_terms = {i: [(a, b, c, u) for (a, b, c, u) in d2I[i]
                      if a in suppL and c in suppLi] for i in rng}
    right_terms = {j: [(p, q, r, v) for (p, q, r, v) in d2I[j]
                       if p in suppR and r in suppRi] for j in rng}

    mult = {}
    mscale = dC2 * dC2 * dT1 * dT2 * dM
    for i in rng:
        for j in rng:
            acc: dict = {}
            for (a, b, c, u) in left_terms[i]:
                ta, ic = tblI[a], invI[c]
                for (p, q, r, v) in right_terms[j]:
                    w = ta[p] * ic[r]
                    if not w:
                        continue
                    m = multI.get((b, q))
                    if not m:
                        continue
                    coeff = u * v * w
                    for s, cf in m.items():
                        acc[s] = acc.get(s, 0) + coeff * cf
            acc = {s: Fraction(num, mscale) for s, num in acc.items() if num}
            if acc:
                mult[(i, j)] = acc

    # S_sigma = f * S * g with f(x) = sigma(x1, S x2), g(x) = sigma^{-1}(S x1, x2).
    W = {}
    for c in rng:
        acc = {}
        for (p, q, r, v) in d2I[c]:
            s = sum(cf * invI[w][r] for w, cf in antI[q].items())
            if not s:
                continue
            coeff = v * s
            for t_, cf in antI[p].items():
                acc[t_] = acc.get(t_, 0) + coeff * cf
        W[c] = acc
    antipode = {}
    ascale = dC2 * dC2 * dS * dS * dS * dT1 * dT2
    for i in rng:
        acc = {}
        for (a, b, c, u) in d2I[i]:
            s = sum(cf * tblI[a][w] for w, cf in antI[b].items())
            if not s:
                continue
            coeff = u * s
            for t_, num in W[c].items():
                acc[t_] = acc.get(t_, 0) + coeff * num
        antipode[i] = {t_: Fraction(num, ascale) for t_, num in acc.items() if num}

    if correct_star:
        L = sigma.star_corrector
        star = {}
        for i in rng:
            acc: dict = {}
            for (a, b, c, u) in H.delta2(i):
                w = L[a] * L[c]
                if not w:
                    continue
                coeff = u * w
                for t_, cf in H.star[b].items():
                    acc[t_] = acc.get(t_, 0) + coeff * cf
            star[i] = vec_normalize(acc)
    else:
        star = {i: dict(H.star[i]) for i in rng}

    out = FDHopf(n, H.basis_labels, H.unit, mult,
                 {i: list(H.comult[i]) for i in rng}, H.counit, antipode, star)
    if verify:
        rep = verify_hopf_axioms(out)
        failed = [k for k, v in rep.items() if not v]
        if failed:
            raise TwistNotHopf(
                f"twisted structure fails {failed}: an invalid cocycle slipped "
                f"through, or a wrong star convention")
    return out


@dataclass(frozen=True)
class TwistedS4:
    """C(S4) twisted by the Klein bicharacter pulled back through
    restriction to a Klein subgroup followed by Fourier transform."""

    base: FDHopf
    algebra: FDHopf
    cocycle: Cocycle2
    restriction: HopfMap
    fourier: HopfMap
    group: PermGroup
    subgroup: PermGroup


def build_s4tau(V: PermGroup = None, dual_generators=None,
                verify: bool = True) -> TwistedS4:
    """The standing example: twist C(S4) along the Klein subgroup
    generated by (12) and (34), with the dual labeling pinned to those
    two generators."""
    G = symmetric_group(4)
    if V is None:
        V = easy_klein()
        if dual_generators is None:
            dual_generators = (Permutation.from_cycles(4, [(1, 2)]),
                               Permutation.from_cycles(4, [(3, 4)]))
    res = restriction_surjection(G, V)
    four = fourier_iso(V, dual_generators)
    pi = res.then(four)
    sigma = pullback(klein_bicharacter(), pi)
    twisted = twist(sigma.carrier, sigma, verify=verify)
    return TwistedS4(base=sigma.carrier, algebra=twisted, cocycle=sigma,
                     restriction=res, fourier=four, group=G, subgroup=V)


def double_twist(t: TwistedS4) -> FDHopf:
    """Twist the twisted algebra by the same cocycle again."""
    sigma2 = rebind(t.cocycle, t.algebra)
    return twist(t.algebra, sigma2)
