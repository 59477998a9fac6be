"""Rooted decorated diagrams at strong coupling and their weights.

A diagram is a tree whose vertices carry effective charges (positive
multiples of strong-coupling BPS directions), rooted at a vertex lying
on the framing direction.  Its weight is built from the f-coefficients
of the vertices, the pairings along the edges, and the automorphism
count of the rooted decorated tree.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .lattice import Charge, Theory, cadd, czero, primitive
from .spectrum import SpectrumTable, f_coeff
from .js import strong_parts, _multisets
from .symbolic import Value
from .trees import enumerate_labelled_trees


@dataclass(frozen=True)
class RootedDiagram:
    charges: tuple[Charge, ...]
    parent: tuple[int | None, ...]   # parent[i]; exactly one None (the root)

    @property
    def root(self) -> int:
        return self.parent.index(None)

    @property
    def n(self) -> int:
        return len(self.charges)

    def total(self) -> Charge:
        t = czero(len(self.charges[0]))
        for c in self.charges:
            t = cadd(t, c)
        return t

    def children(self, i: int) -> list[int]:
        return [j for j, p in enumerate(self.parent) if p == i]

    def edges(self) -> list[tuple[int, int]]:
        return [(p, i) for i, p in enumerate(self.parent) if p is not None]

    def depth(self, i: int) -> int:
        d = 0
        while self.parent[i] is not None:
            i = self.parent[i]
            d += 1
        return d

    def canonical(self) -> str:
        return _encode(self, self.root)

    def describe(self) -> str:
        def walk(i):
            kids = ",".join(walk(j) for j in sorted(self.children(i)))
            label = "+".join(str(x) for x in self.charges[i])
            return f"({label})[{kids}]" if kids else f"({label})"
        return walk(self.root)


def _encode(diag: RootedDiagram, i: int) -> str:
    parts = sorted(_encode(diag, j) for j in diag.children(i))
    label = ",".join(str(x) for x in diag.charges[i])
    return f"({label}|{';'.join(parts)})"


def aut_order(diag: RootedDiagram) -> int:
    """Order of the automorphism group of the rooted decorated tree."""
    def walk(i: int) -> tuple[str, int]:
        encs = []
        order = 1
        for j in diag.children(i):
            e, o = walk(j)
            encs.append(e)
            order *= o
        encs.sort()
        run = 1
        for k in range(1, len(encs) + 1):
            if k < len(encs) and encs[k] == encs[k - 1]:
                run += 1
            else:
                order *= factorial(run)
                run = 1
        label = ",".join(str(x) for x in diag.charges[i])
        return f"({label}|{';'.join(encs)})", order
    return walk(diag.root)[1]


def root_direction(theory: Theory) -> Charge:
    return theory.unit(theory.root_index)


def enumerate_diagrams(theory: Theory, table: SpectrumTable, target: Charge,
                       max_vertices: int | None = None) -> list[RootedDiagram]:
    """All framed diagrams with the given total charge.

    Vertices are strong multiples, edges require nonzero pairing, and the
    root lies on the framing direction.  Deduplicated up to rooted
    decorated isomorphism.
    """
    if not theory.is_effective(target):
        raise ValueError(f"target {target} is not effective")
    parts = strong_parts(theory, table, target)
    rdir = root_direction(theory)
    seen: dict[str, RootedDiagram] = {}
    for ms in _multisets(parts, target, theory.effective_signs):
        n = len(ms)
        if max_vertices is not None and n > max_vertices:
            continue
        charges = list(ms)
        roots = [i for i, c in enumerate(charges) if primitive(c) == rdir]
        if not roots:
            continue
        for edges in enumerate_labelled_trees(n):
            if any(theory.pair(charges[a], charges[b]) == 0 for a, b in edges):
                continue
            adj: list[list[int]] = [[] for _ in range(n)]
            for a, b in edges:
                adj[a].append(b)
                adj[b].append(a)
            for r in roots:
                parent: list[int | None] = [None] * n
                stack = [r]
                visited = {r}
                while stack:
                    v = stack.pop()
                    for u in adj[v]:
                        if u not in visited:
                            visited.add(u)
                            parent[u] = v
                            stack.append(u)
                diag = RootedDiagram(tuple(charges), tuple(parent))
                seen.setdefault(diag.canonical(), diag)
    return sorted(seen.values(), key=lambda d: (d.n, d.canonical()))


def weight_W(theory: Theory, table: SpectrumTable,
             diag: RootedDiagram) -> tuple[Value, Charge]:
    """Diagram weight: (-1)^n / |Aut| * f^root * prod <gamma_parent, f^child>.

    Returns (coefficient, direction); the sign unit stands for the
    refinement sign of the diagram's total charge.
    """
    total = diag.total()
    rational = Fraction((-1) ** diag.n, aut_order(diag))
    sigma_charges: list[Charge] = []
    for i, c in enumerate(diag.charges):
        fc = f_coeff(theory, table, c)
        if fc.plain and fc.sigma_coeff:
            raise NotImplementedError(f"mixed f-coefficient at {c}")
        if fc.sigma_coeff:
            rational *= fc.sigma_coeff
            sigma_charges.append(c)
        else:
            rational *= fc.plain
        p = diag.parent[i]
        if p is not None:
            rational *= theory.pair(diag.charges[p], fc.direction)
    if rational == 0:
        return Value.zero(), primitive(diag.charges[diag.root])
    if theory.sigma_trivial or not sigma_charges:
        return Value.rational(rational), primitive(diag.charges[diag.root])
    sign, subtotal = theory.sigma_reduce(sigma_charges)
    # express sigma(subtotal) in units of sigma(total)
    sign *= theory.sigma_to(subtotal, total)
    return Value.sign_unit(sign * rational), primitive(diag.charges[diag.root])
