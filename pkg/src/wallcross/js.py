"""The combinatorial wall-crossing sum: S/U symbols, ordered decompositions
into strong-coupling multiples, and labelled-tree weights.

Slopes: s(gamma) is the phase of Z_gamma on the strong side (u+), w(gamma)
on the weak side (u-).  All comparisons are exact.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import factorial

from .lattice import (MINUS, PLUS, Charge, Theory, cadd, cross, cscale,
                      czero, same_ray)
from .spectrum import SpectrumTable
from .symbolic import Value
from .trees import canon_oriented, canon_unoriented, enumerate_labelled_trees


def _slope_cmp(theory: Theory, region: str, a: Charge, b: Charge) -> int:
    """-1/0/+1 as phase(Z_a) is below/equal/above phase(Z_b)."""
    za, zb = theory.z(region, a), theory.z(region, b)
    c = cross(za, zb)
    return -1 if c > 0 else (1 if c < 0 else 0)


def s_symbol(theory: Theory, alphas: list[Charge]) -> int:
    """S in {0, +-1}: sign of the ordered decomposition.

    For each adjacent pair, either s does not decrease and the head slope
    w strictly dominates the tail (counted with a sign), or s strictly
    decreases and the head slope does not dominate; otherwise S = 0.
    """
    n = len(alphas)
    if n == 0:
        raise ValueError("empty decomposition")
    sign = 1
    head = alphas[0]
    tail = czero(len(head))
    for a in alphas[1:]:
        tail = cadd(tail, a)
    for i in range(n - 1):
        cs = _slope_cmp(theory, PLUS, alphas[i], alphas[i + 1])
        cw = _slope_cmp(theory, MINUS, head, tail)
        if cs <= 0 and cw > 0:
            sign = -sign
        elif cs > 0 and cw <= 0:
            pass
        else:
            return 0
        if i + 1 < n - 1:
            head = cadd(head, alphas[i + 1])
            tail = tuple(x - y for x, y in zip(tail, alphas[i + 1]))
    return sign


def _compositions(n: int):
    """Ordered partitions of {1..n} into consecutive blocks (as sizes)."""
    if n == 0:
        yield []
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield [first] + rest


def u_symbol(theory: Theory, alphas: list[Charge]) -> Fraction:
    """U: nested sum over slope-compatible coarsenings weighting S symbols."""
    n = len(alphas)
    total = alphas[0]
    for a in alphas[1:]:
        total = cadd(total, a)
    w_total = theory.z(MINUS, total)
    result = Fraction(0)
    for blocks in _compositions(n):
        # consecutive blocks of equal strong-side slope
        idx = 0
        betas: list[Charge] = []
        beta_seqs: list[list[Charge]] = []
        ok = True
        fac = Fraction(1)
        for size in blocks:
            seq = alphas[idx:idx + size]
            idx += size
            if any(not same_ray(theory.z(PLUS, seq[0]), theory.z(PLUS, b))
                   for b in seq[1:]):
                ok = False
                break
            s = seq[0]
            for b in seq[1:]:
                s = cadd(s, b)
            betas.append(s)
            beta_seqs.append(seq)
            fac /= factorial(size)
        if not ok:
            continue
        m = len(betas)
        for chunks in _compositions(m):
            # every chunk must share the weak-side slope of the total
            idx2 = 0
            good = True
            sprod = Fraction(1)
            for size in chunks:
                part = betas[idx2:idx2 + size]
                psum = part[0]
                for b in part[1:]:
                    psum = cadd(psum, b)
                if not same_ray(theory.z(MINUS, psum), w_total):
                    good = False
                    break
                sprod *= s_symbol(theory, betas[idx2:idx2 + size])
                idx2 += size
            if not good or sprod == 0:
                continue
            length = len(chunks)
            result += Fraction((-1) ** (length - 1), length) * sprod * fac
    return result


# ---------------------------------------------------------------------------
# decompositions into strong-coupling constituents

def strong_parts(theory: Theory, table: SpectrumTable, target: Charge) -> list[Charge]:
    """Possible parts: positive multiples of effective strong directions
    fitting inside the target."""
    signs = theory.effective_signs
    parts = set()
    for g in table.charges():
        d = g if theory.is_effective(g) else tuple(-x for x in g)
        if not theory.is_effective(d):
            continue
        k = 1
        while True:
            cand = cscale(k, d)
            if any(s * (t - c) < 0 for s, t, c in zip(signs, target, cand)):
                break
            parts.add(cand)
            k += 1
    return sorted(parts)


def _multisets(parts: list[Charge], target: Charge, signs) -> list[tuple[Charge, ...]]:
    out: list[tuple[Charge, ...]] = []

    def rec(i: int, remaining: Charge, chosen: list[Charge]):
        if all(x == 0 for x in remaining):
            if chosen:
                out.append(tuple(chosen))
            return
        if i == len(parts):
            return
        rec(i + 1, remaining, chosen)
        p = parts[i]
        rem = remaining
        k = 0
        while True:
            rem = tuple(r - q for r, q in zip(rem, p))
            if any(s * x < 0 for s, x in zip(signs, rem)):
                break
            k += 1
            rec(i + 1, rem, chosen + [p] * k)

    rec(0, target, [])
    return out


def decompositions(theory: Theory, table: SpectrumTable,
                   target: Charge) -> list[tuple[Charge, ...]]:
    """Ordered decompositions of the target into strong-multiple parts."""
    parts = strong_parts(theory, table, target)
    orderings: list[tuple[Charge, ...]] = []
    for ms in _multisets(parts, target, theory.effective_signs):
        orderings.extend(set(permutations(ms)))
    return sorted(orderings)


def _edge_weight(theory: Theory, a: Charge, b: Charge, signed: bool) -> int:
    p = theory.pair(a, b)
    return (-p if p % 2 else p) if signed else p


def twist_value(theory: Theory, alphas: tuple[Charge, ...]) -> Value:
    """Refinement twist (prod_edges (-1)^<,>)^-1 prod_k sigma(alpha_k).

    The edge-sign part is folded into the edge weights by the caller
    (dropping their (-1)^<,> factors); this returns prod sigma(alpha_k)
    reduced to a multiple of the sign unit sigma(total).
    """
    sign, _total = theory.sigma_reduce(list(alphas))
    if theory.sigma_trivial:
        return Value.rational(sign)
    return Value.sign_unit(sign)


@dataclass
class TreeValue:
    charges: list[Charge]
    edges: list[tuple[int, int]]
    total: Value = field(default_factory=Value.zero)
    orientations: dict[str, Value] = field(default_factory=dict)


def js_tree_values(theory: Theory, table: SpectrumTable, target: Charge,
                   twisted: bool = True,
                   max_vertices: int | None = None) -> dict[str, TreeValue]:
    """Wall-crossing sum grouped by underlying unoriented decorated tree,
    with per-orientation subtotals.

    When twisted, each term carries the refinement twist, so values are
    directly comparable with decay-calculus contributions.
    """
    if not theory.is_effective(target):
        raise ValueError(f"target {target} is not effective")
    groups: dict[str, TreeValue] = {}
    for alphas in decompositions(theory, table, target):
        n = len(alphas)
        if max_vertices is not None and n > max_vertices:
            continue
        u = u_symbol(theory, list(alphas))
        if u == 0:
            continue
        dts = Fraction(1)
        for a in alphas:
            dts *= table.dt(a)
        if dts == 0:
            continue
        base = u * dts * Fraction((-1) ** (n - 1), 2 ** (n - 1))
        tw = twist_value(theory, alphas) if twisted else Value.rational(1)
        for edges in enumerate_labelled_trees(n):
            w = 1
            for (i, j) in edges:
                w *= _edge_weight(theory, alphas[i], alphas[j], signed=not twisted)
                if w == 0:
                    break
            if w == 0:
                continue
            term = tw * Value.rational(base * w)
            charges = list(alphas)
            key = canon_unoriented(n, edges, charges)
            okey = canon_oriented(n, edges, charges)
            tv = groups.get(key)
            if tv is None:
                tv = groups[key] = TreeValue(charges, edges)
            tv.total = tv.total + term
            tv.orientations[okey] = tv.orientations.get(okey, Value.zero()) + term
    return {k: v for k, v in groups.items()
            if v.total or any(x for x in v.orientations.values())}


def js_wallcross(theory: Theory, table: SpectrumTable, target: Charge,
                 max_vertices: int | None = None) -> Fraction:
    """Untwisted weak-side DT invariant of the target charge."""
    if not theory.is_effective(target):
        raise ValueError(f"target {target} is not effective")
    total = Fraction(0)
    for alphas in decompositions(theory, table, target):
        n = len(alphas)
        if max_vertices is not None and n > max_vertices:
            continue
        u = u_symbol(theory, list(alphas))
        if u == 0:
            continue
        dts = Fraction(1)
        for a in alphas:
            dts *= table.dt(a)
        if dts == 0:
            continue
        tree_w = 0
        for edges in enumerate_labelled_trees(n):
            w = 1
            for (i, j) in edges:
                w *= _edge_weight(theory, alphas[i], alphas[j], signed=True)
                if w == 0:
                    break
            tree_w += w
        total += u * dts * tree_w * Fraction((-1) ** (n - 1), 2 ** (n - 1))
    return total
