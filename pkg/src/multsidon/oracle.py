"""Independent verification of the component computations.

Everything here avoids the parity shortcut: maximum independent sets are
recomputed from scratch, either by Koenig duality (|V| minus a maximum
bipartite matching, valid because every component 2-colours by coordinate
parity) or by branch-and-bound over vertex subsets for graphs small enough
to enumerate.  The finite graph on [n] is rebuilt explicitly so that the
component decomposition, the step-function lookups and the closed forms
can all be cross-checked against each other.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .components import (
    ComponentId,
    Coord,
    TripleParams,
    classify_component,
    is_admissible,
    q_copy_alpha,
)

DEFAULT_VERIFY_LIMIT = 5000
EXHAUSTIVE_LIMIT = 24


class VerificationError(Exception):
    """An internal cross-check failed; indicates a construction bug."""


@dataclass(frozen=True, eq=False)
class ComponentInstance:
    """A component truncated to [n]: active cells with their integer values."""

    height: int
    multiplier: int
    cells: tuple[Coord, ...]  # sorted by value
    values: tuple[int, ...]


@dataclass(frozen=True)
class ComponentSummary:
    ident: ComponentId
    vertex_count: int
    alpha: int


@dataclass(frozen=True)
class FiniteGraphReport:
    """Decomposition of [n] with per-component independence numbers."""

    n: int
    components: tuple[ComponentSummary, ...]
    total_alpha: int
    ratio: Fraction


def component_ids(params: TripleParams, n: int) -> Iterator[tuple[int, int]]:
    """All (height, multiplier) pairs whose component intersects [n]."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    power = 1  # a**height
    height = 0
    while power <= n:
        for q in range(1, n // power + 1):
            if is_admissible(params, q):
                yield height, q
        power *= params.a
        height += 1


def component_instance(params: TripleParams, height: int, q: int, n: int) -> ComponentInstance:
    """Materialise the cells of component (height, q) with values <= n."""
    a, b, c = params.a, params.b, params.c
    cap = n // q
    cells = []
    for x in range(height + 1):
        for y in range(height + 1 - x):
            v = a ** (height - x - y) * b**x * c**y
            if v <= cap:
                cells.append((v, (x, y)))
    if not cells:
        raise ValueError("component does not intersect [n]")
    cells.sort()
    return ComponentInstance(
        height=height,
        multiplier=q,
        cells=tuple(xy for _, xy in cells),
        values=tuple(v * q for v, _ in cells),
    )


def build_gn(params: TripleParams, n: int) -> list[ComponentInstance]:
    """Explicit decomposition of [n] into truncated components."""
    return [component_instance(params, p, q, n) for p, q in component_ids(params, n)]


def grid_cell_edges(cells: Sequence[Coord]) -> list[tuple[int, int]]:
    """Index pairs of cells one grid step apart (the component adjacency)."""
    index = {xy: i for i, xy in enumerate(cells)}
    edges = []
    for (x, y), i in index.items():
        for nb in ((x + 1, y), (x, y + 1)):
            j = index.get(nb)
            if j is not None:
                edges.append((i, j))
    return edges


def exact_alpha_matching(num_vertices: int, edges: Iterable[tuple[int, int]]) -> int:
    """Independence number of a bipartite graph via Koenig duality.

    2-colours the graph (raising on an odd cycle), computes a maximum
    matching by augmenting paths, and returns |V| - |matching|.
    """
    adjacency: list[list[int]] = [[] for _ in range(num_vertices)]
    for u, v in edges:
        adjacency[u].append(v)
        adjacency[v].append(u)

    colour = [-1] * num_vertices
    for start in range(num_vertices):
        if colour[start] != -1:
            continue
        colour[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            for v in adjacency[u]:
                if colour[v] == -1:
                    colour[v] = colour[u] ^ 1
                    stack.append(v)
                elif colour[v] == colour[u]:
                    raise VerificationError("graph is not bipartite")

    match_of = [-1] * num_vertices

    def augment(u: int, seen: set[int]) -> bool:
        for v in adjacency[u]:
            if v in seen:
                continue
            seen.add(v)
            if match_of[v] == -1 or augment(match_of[v], seen):
                match_of[v] = u
                match_of[u] = v
                return True
        return False

    matching = 0
    for u in range(num_vertices):
        if colour[u] == 0 and match_of[u] == -1 and augment(u, set()):
            matching += 1
    return num_vertices - matching


def exact_alpha_exhaustive(num_vertices: int, edges: Iterable[tuple[int, int]]) -> int:
    """Independence number by pruned subset search, for <= 24 vertices."""
    if num_vertices > EXHAUSTIVE_LIMIT:
        raise ValueError(f"exhaustive search limited to {EXHAUSTIVE_LIMIT} vertices")
    masks = [0] * num_vertices
    for u, v in edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u

    def search(active: int) -> int:
        if active == 0:
            return 0
        best_v, best_deg, count, edge_count = -1, -1, 0, 0
        m = active
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            deg = (masks[v] & active).bit_count()
            edge_count += deg
            count += 1
            if deg > best_deg:
                best_deg, best_v = deg, v
        if best_deg <= 1:
            # disjoint edges and isolated vertices: take one endpoint each
            return count - edge_count // 2
        without = search(active & ~(1 << best_v))
        with_v = 1 + search(active & ~((1 << best_v) | masks[best_v]))
        return max(without, with_v)

    return search((1 << num_vertices) - 1)


def finite_graph_report(
    params: TripleParams,
    n: int,
    cutoff: int = 0,
    verify: bool = False,
) -> FiniteGraphReport:
    """Per-component independence numbers for [n], classified by the cutoff.

    Alphas come from the parity step function; with verify=True each one is
    recomputed by matching (and exhaustively on tiny components), raising
    VerificationError on any disagreement.
    """
    summaries = []
    total = 0
    for p, q in component_ids(params, n):
        alpha = q_copy_alpha(params, p, q, n)
        inst = component_instance(params, p, q, n)
        if verify:
            edges = grid_cell_edges(inst.cells)
            by_matching = exact_alpha_matching(len(inst.cells), edges)
            if by_matching != alpha:
                raise VerificationError(
                    f"component (p={p}, q={q}): parity alpha {alpha} "
                    f"!= matching alpha {by_matching}"
                )
            if len(inst.cells) <= EXHAUSTIVE_LIMIT:
                by_search = exact_alpha_exhaustive(len(inst.cells), edges)
                if by_search != alpha:
                    raise VerificationError(
                        f"component (p={p}, q={q}): parity alpha {alpha} "
                        f"!= exhaustive alpha {by_search}"
                    )
        ident = classify_component(params, p, q, n, cutoff)
        summaries.append(
            ComponentSummary(ident=ident, vertex_count=len(inst.cells), alpha=alpha)
        )
        total += alpha
    return FiniteGraphReport(
        n=n, components=tuple(summaries), total_alpha=total, ratio=Fraction(total, n)
    )


def empirical_density(
    params: TripleParams, n: int, verify_upto: int = DEFAULT_VERIFY_LIMIT
) -> Fraction:
    """alpha(G_n) / n via the step-function fast path.

    When n <= verify_upto, every component is re-solved by bipartite
    matching and any mismatch raises VerificationError.
    """
    verify = n <= verify_upto
    total = 0
    for p, q in component_ids(params, n):
        alpha = q_copy_alpha(params, p, q, n)
        if verify:
            inst = component_instance(params, p, q, n)
            by_matching = exact_alpha_matching(len(inst.cells), grid_cell_edges(inst.cells))
            if by_matching != alpha:
                raise VerificationError(
                    f"component (p={p}, q={q}): parity alpha {alpha} "
                    f"!= matching alpha {by_matching}"
                )
        total += alpha
    return Fraction(total, n)


def parity_independent_set(params: TripleParams, n: int) -> tuple[int, ...]:
    """A maximum independent set in G_n: best parity class per component."""
    chosen = []
    for p, q in component_ids(params, n):
        inst = component_instance(params, p, q, n)
        even = [v for v, (x, y) in zip(inst.values, inst.cells) if (x + y) % 2 == 0]
        odd = [v for v, (x, y) in zip(inst.values, inst.cells) if (x + y) % 2 == 1]
        chosen.extend(even if len(even) >= len(odd) else odd)
    return tuple(sorted(chosen))


def general_multiplicative_witness(
    members: Iterable[int], left: Iterable[int], right: Iterable[int]
) -> tuple[int, int, int, int] | None:
    """First violation (a, b, x, y) of the {A,B}-multiplicative condition.

    The condition demands that a*x = b*y with a in A, b in B and x, y in
    the set forces a = b and x = y.  Returns None when it holds.
    """
    values = set(members)
    ordered = sorted(values)
    a_set = sorted(set(left))
    b_set = sorted(set(right))
    if not a_set or not b_set:
        raise ValueError("A and B must be nonempty")
    if (ordered and ordered[0] < 1) or a_set[0] < 1 or b_set[0] < 1:
        raise ValueError("all inputs must be positive")
    for a in a_set:
        for b in b_set:
            if a == b:
                continue  # a*x = a*y forces x = y; never violated
            for x in ordered:
                if (a * x) % b == 0 and (a * x) // b in values:
                    return a, b, x, (a * x) // b
    return None


def is_general_multiplicative(
    members: Iterable[int], left: Iterable[int], right: Iterable[int]
) -> bool:
    """True iff a*x = b*y (a in A, b in B, x, y in S) forces a = b, x = y."""
    return general_multiplicative_witness(members, left, right) is None


def staircase_lemma_check(cells: Sequence[Coord]) -> bool:
    """Does the best parity class match the exhaustive optimum on a staircase?

    The cells must form a downward-closed subset of the quarter grid with
    at most 24 entries; the graph is the grid adjacency on those cells.
    """
    cell_set = set(cells)
    if len(cell_set) > EXHAUSTIVE_LIMIT:
        raise ValueError(f"staircase check limited to {EXHAUSTIVE_LIMIT} cells")
    for x, y in cell_set:
        if x > 0 and (x - 1, y) not in cell_set:
            raise ValueError("cells are not downward closed")
        if y > 0 and (x, y - 1) not in cell_set:
            raise ValueError("cells are not downward closed")
    ordered = sorted(cell_set)
    even = sum(1 for x, y in ordered if (x + y) % 2 == 0)
    best_parity = max(even, len(ordered) - even)
    exhaustive = exact_alpha_exhaustive(len(ordered), grid_cell_edges(ordered))
    return best_parity == exhaustive


def random_staircase(rng: random.Random, max_cells: int) -> list[Coord]:
    """Random downward-closed cell set via non-increasing column heights."""
    if max_cells < 1:
        raise ValueError("max_cells must be positive")
    cells: list[Coord] = []
    height = rng.randint(1, max_cells)
    x = 0
    while height > 0 and len(cells) < max_cells:
        height = min(height, max_cells - len(cells))
        cells.extend((x, y) for y in range(height))
        x += 1
        height = rng.randint(0, height)
    return cells
