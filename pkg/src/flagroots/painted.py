"""Painted Dynkin diagrams and isotropy-group naming.

A painting is a 0/1 label per node in Bourbaki order (leftmost bit is
node 1); painted nodes span the center directions, the unpainted induced
subdiagram gives the semisimple isotropy factors.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .rootsys import CartanType, cartan_matrix, simple_root_norms

_LENGTH_ORDER = {"long": 0, "n/a": 1, "short": 2}


class PaintingError(ValueError):
    pass


class UnrecognizableComponent(RuntimeError):
    """A connected unpainted subdiagram is not a Dynkin diagram; this
    indicates a corrupted ambient Cartan matrix, not bad user input."""


@dataclass(frozen=True, order=True)
class PaintedDiagram:
    group: CartanType
    paint: tuple[int, ...]

    def __post_init__(self):
        if len(self.paint) != self.group.rank:
            raise PaintingError(
                f"painting length {len(self.paint)} != rank {self.group.rank}")
        if any(b not in (0, 1) for b in self.paint):
            raise PaintingError("painting bits must be 0 or 1")
        if not any(self.paint):
            raise PaintingError("at least one node must be painted")

    @property
    def b2(self) -> int:
        return sum(self.paint)

    @property
    def painted_nodes(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, b in enumerate(self.paint) if b)

    @property
    def label(self) -> str:
        return f"{self.group.label}:{''.join(map(str, self.paint))}"

    def __str__(self) -> str:
        return self.label


def parse_painting(text: str) -> PaintedDiagram:
    m = re.fullmatch(r"([A-G]\d+):([01]+)", text.strip())
    if not m:
        raise PaintingError(f"expected '<TYPE>:<bitstring>', got {text!r}")
    group = CartanType.from_label(m.group(1))
    return PaintedDiagram(group, tuple(int(ch) for ch in m.group(2)))


def enumerate_paintings(group: CartanType, min_b2: int = 1) -> list[PaintedDiagram]:
    """All paintings with at least min_b2 painted nodes, bitstring order."""
    if min_b2 < 1:
        raise PaintingError("min_b2 must be at least 1")
    n = group.rank
    out = []
    for m in range(1, 1 << n):
        bits = tuple((m >> (n - 1 - i)) & 1 for i in range(n))
        if sum(bits) >= min_b2:
            out.append(PaintedDiagram(group, bits))
    return out


@dataclass(frozen=True)
class IsotropyDescriptor:
    torus_rank: int
    factors: tuple[tuple[CartanType, str], ...]  # (type, length class), sorted
    prime_tag: str = ""
    node_sets: tuple[tuple[int, ...], ...] = field(default=(), compare=False)

    def with_tag(self, tag: str) -> "IsotropyDescriptor":
        return IsotropyDescriptor(self.torus_rank, self.factors, tag, self.node_sets)

    @property
    def factor_key(self) -> tuple[tuple[str, int, str], ...]:
        return tuple((t.family, t.rank, lc) for t, lc in self.factors)


def _components(nodes: list[int], cartan) -> list[list[int]]:
    comps = []
    seen: set[int] = set()
    nodeset = set(nodes)
    for start in nodes:
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        queue = [start]
        while queue:
            u = queue.pop()
            for v in nodeset:
                if v not in seen and cartan[u][v] != 0:
                    seen.add(v)
                    comp.append(v)
                    queue.append(v)
        comps.append(sorted(comp))
    return comps


def _recognize(comp: list[int], cartan, norms) -> CartanType:
    """Cartan type of a connected induced Dynkin subdiagram."""
    n = len(comp)
    if n == 1:
        return CartanType("A", 1)
    adj = {u: [v for v in comp if v != u and cartan[u][v] != 0] for u in comp}
    bonds = {frozenset((u, v)): cartan[u][v] * cartan[v][u]
             for u in comp for v in adj[u]}
    max_bond = max(bonds.values())
    degrees = sorted(len(adj[u]) for u in comp)
    if max_bond == 1:
        if degrees[-1] <= 2:
            return CartanType("A", n)
        forks = [u for u in comp if len(adj[u]) == 3]
        if len(forks) != 1 or degrees[-2] > 2:
            raise UnrecognizableComponent(f"bad simply-laced shape on {comp}")
        branches = sorted(_branch_length(forks[0], v, adj) for v in adj[forks[0]])
        if branches[0] == 1 and branches[1] == 1:
            return CartanType("D", n)
        if branches == [1, 2, 2]:
            return CartanType("E", 6)
        if branches == [1, 2, 3]:
            return CartanType("E", 7)
        if branches == [1, 2, 4]:
            return CartanType("E", 8)
        raise UnrecognizableComponent(f"bad fork shape {branches} on {comp}")
    if max_bond == 3:
        if n != 2:
            raise UnrecognizableComponent(f"triple bond in rank-{n} component")
        return CartanType("G", 2)
    if max_bond != 2 or degrees[-1] > 2:
        raise UnrecognizableComponent(f"bad bond structure on {comp}")
    longs = sum(1 for u in comp if norms[u] == max(norms[v] for v in comp))
    shorts = n - longs
    if n == 2:
        return CartanType("B", 2)
    if longs == 2 and shorts == 2:
        return CartanType("F", 4)
    if shorts == 1:
        return CartanType("B", n)
    if longs == 1:
        return CartanType("C", n)
    raise UnrecognizableComponent(f"bad length split on {comp}")


def _branch_length(fork: int, first: int, adj) -> int:
    length = 1
    prev, cur = fork, first
    while True:
        nxt = [v for v in adj[cur] if v != prev]
        if not nxt:
            return length
        if len(nxt) > 1:
            raise UnrecognizableComponent("nested fork")
        prev, cur = cur, nxt[0]
        length += 1


def isotropy_descriptor(diagram: PaintedDiagram) -> IsotropyDescriptor:
    """Decompose the unpainted subdiagram into recognized simple factors."""
    group = diagram.group
    cartan = cartan_matrix(group)
    norms = simple_root_norms(group)
    ambient_simply_laced = len(set(norms)) == 1
    unpainted = [i for i, b in enumerate(diagram.paint) if not b]
    entries = []
    for comp in _components(unpainted, cartan):
        ct = _recognize(comp, cartan, norms)
        if ambient_simply_laced:
            lc = "n/a"
        else:
            comp_norms = {norms[u] for u in comp}
            if len(comp_norms) > 1:
                lc = "n/a"
            elif comp_norms == {max(norms)}:
                lc = "long"
            else:
                lc = "short"
        entries.append(((ct, lc), tuple(u + 1 for u in comp)))
    entries.sort(key=lambda e: (e[0][0].rank, e[0][0].family,
                                _LENGTH_ORDER[e[0][1]], e[1]))
    factors = tuple(e[0] for e in entries)
    node_sets = tuple(e[1] for e in entries)
    return IsotropyDescriptor(diagram.b2, factors, "", node_sets)


def _factor_label(ct: CartanType, length_class: str) -> str:
    if length_class == "short":
        return f"Ã{ct.rank}" if ct.family == "A" else f"{ct.label}~"
    return ct.label


def format_isotropy(desc: IsotropyDescriptor) -> str:
    """Canonical name like "T^3·A1·A2·A2" or "T^3·[A1·A3]''"."""
    torus = f"T^{desc.torus_rank}"
    if not desc.factors:
        return torus
    body = "·".join(_factor_label(ct, lc) for ct, lc in desc.factors)
    if desc.prime_tag:
        return f"{torus}·[{body}]{desc.prime_tag}"
    return f"{torus}·{body}"
