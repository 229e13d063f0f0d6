"""
Largest s for which an action is s-arc-transitive on one of its orbital digraphs.

The criterion walks a fixed s-arc v_0 -> v_1 -> ... and checks at each step that
G_{v_1..v_i} = G_{v_0..v_i} G_{v_1..v_{i+1}}, by orders: the intersection of the two
factors is G_{v_0..v_{i+1}}, so the product has order |G_{v_0..v_i}||G_{v_1..v_{i+1}}|
/ |G_{v_0..v_{i+1}}|. The brute-force oracle enumerates the s-arcs and counts orbits.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components
from typing_extensions import Literal

from .caps import ENUMERATION_CAP, S_CAP
from .errors import CapacityError, ParameterError
from .factorizations import FactorizationResult, is_factorization
from .orbital_operations import OrbitalDigraph, _induced
from .permutations import Permutation, conjugate

logger = logging.getLogger(__name__)


@dataclass
class SArcResult:
    """
    s_max is the largest s <= cap found s-arc-transitive; when `unbounded` is set the
    action is s-arc-transitive for every s up to the cap and s_max equals the cap.
    """
    s_max: int
    unbounded: bool
    cap: int
    method: Literal['criterion', 'brute_force']
    witness_arc_path: List[int] = field(default_factory=list)
    divisibility_cap: Optional[int] = None
    orbit_counts: List[int] = field(default_factory=list)

    @property
    def label(self) -> str:
        return f'unbounded({self.cap})' if self.unbounded else str(self.s_max)

    def to_dict(self) -> dict:
        return {'s_max': self.s_max, 'unbounded': self.unbounded, 'label': self.label,
                'cap': self.cap, 'method': self.method,
                'witness_arc_path': [int(x) for x in self.witness_arc_path],
                'divisibility_cap': self.divisibility_cap,
                'orbit_counts': [int(c) for c in self.orbit_counts]}


def lemma28_cap(valency: int, stabilizer_order: int) -> int:
    """
    Largest s with valency^s dividing stabilizer_order.

    Raises
    ------
        ParameterError : valency <= 1, where no bound follows.
    """
    if valency <= 1:
        raise ParameterError(f'divisibility bound needs valency >= 2, got {valency}')
    if stabilizer_order < 1:
        raise ParameterError(f'stabilizer order must be positive, got {stabilizer_order}')
    s = 0
    power = valency
    while stabilizer_order % power == 0:
        s += 1
        power *= valency
    return s


def arc_path(digraph: OrbitalDigraph, length: int, rng: Optional[np.random.Generator] = None) -> List[int]:
    """
    A walk of `length` arcs. Starts at the representative arc and follows the least
    out-neighbour; with rng both the first arc and every step are random.
    """
    if rng is None:
        path = list(digraph.representative_arc)
        while len(path) < length + 1:
            path.append(int(digraph.out_neighbors[path[-1], 0]))
    else:
        u = int(rng.integers(digraph.vertex_count))
        path = [u]
        while len(path) < length + 1:
            path.append(int(rng.choice(digraph.out_neighbors[path[-1]])))
    return path[:length + 1]


def _divisibility_cap(group, digraph):
    if digraph.valency < 2:
        return None
    return lemma28_cap(digraph.valency, group.stabilizer_orders([0])[0])


def s_max_criterion(action, digraph: OrbitalDigraph, cap: int = S_CAP,
                    rng: Optional[np.random.Generator] = None,
                    path: Optional[Sequence[int]] = None) -> SArcResult:
    """
    Largest s <= cap with the action s-arc-transitive on the digraph, by the stabilizer
    factorisation along one s-arc.

    Parameters
    ----------
        action : GroupAction (or PermGroup) whose orbital is `digraph`
        digraph : OrbitalDigraph
        cap : int, default S_CAP
        rng : numpy Generator, picks a random s-arc instead of the least one
        path : explicit walk of cap arcs, overrides the choice

    Returns
    -------
        SArcResult with method 'criterion'
    """
    if cap < 1:
        raise ParameterError(f'cap must be at least 1, got {cap}')
    G = _induced(action)
    path = list(path) if path is not None else arc_path(digraph, cap, rng)
    if len(path) != cap + 1:
        raise ParameterError(f'expected a walk of {cap} arcs, got {len(path) - 1}')
    from_v0 = G.stabilizer_orders(path)
    from_v1 = G.stabilizer_orders(path[1:])
    s = 1
    for i in range(1, cap):
        whole = from_v1[i - 1]
        first, second, both = from_v0[i], from_v1[i], from_v0[i + 1]
        if first * second != whole * both:
            break
        s = i + 1
    result = SArcResult(s_max=s, unbounded=(s == cap), cap=cap, method='criterion',
                        witness_arc_path=path[:s + 1], divisibility_cap=_divisibility_cap(G, digraph))
    logger.debug(f'criterion on orbital {digraph.orbital_id}: s = {result.label}')
    return result


def _count_orbits(arcs: np.ndarray, gens: np.ndarray, rank: np.ndarray, valency: int) -> int:
    total = len(arcs)
    rows, cols = [], []
    for g in gens:
        img = g[arcs]
        idx = img[:, 0].astype(np.int64)
        for j in range(1, arcs.shape[1]):
            c = rank[img[:, j - 1], img[:, j]]
            assert (c >= 0).all()
            idx = idx * valency + c
        rows.append(np.arange(total))
        cols.append(idx)
    if not rows:
        return total
    rows, cols = np.concatenate(rows), np.concatenate(cols)
    graph = coo_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(total, total))
    n_components, _ = connected_components(graph, directed=False)
    return int(n_components)


def s_max_bruteforce(action, digraph: OrbitalDigraph, cap: int = S_CAP,
                     budget: Optional[int] = None) -> SArcResult:
    """
    Largest s <= cap whose s-arcs form a single orbit, by enumeration.

    The s-arc (v_0, ..., v_s) is numbered ((v_0 val + c_1) val + c_2) ... where c_j is
    the position of v_j among the sorted out-neighbours of v_{j-1}. Orbits are the
    connected components of the graph joining each s-arc to its generator images.

    Raises
    ------
        CapacityError : more than `budget` s-arcs at some level s <= cap.
    """
    if cap < 1:
        raise ParameterError(f'cap must be at least 1, got {cap}')
    budget = ENUMERATION_CAP if budget is None else budget
    G = _induced(action)
    N, val = digraph.vertex_count, digraph.valency
    out = digraph.out_neighbors
    rank = np.full((N, N), -1, dtype=np.int64)
    rank[np.repeat(np.arange(N), val), out.ravel()] = np.tile(np.arange(val), N)
    gens = np.stack([g.images for g in G.generators]) if G.generators else np.empty((0, N), dtype=np.intp)

    arcs = np.arange(N)[:, None]
    counts = []
    s_max = 0
    for s in range(1, cap + 1):
        total = N * val ** s
        if total > budget:
            raise CapacityError('ENUMERATION_CAP', budget, total, f'{s}-arcs of orbital {digraph.orbital_id}')
        arcs = np.concatenate([np.repeat(arcs, val, axis=0), out[arcs[:, -1]].reshape(-1, 1)], axis=1)
        n_orbits = _count_orbits(arcs, gens, rank, val)
        counts.append(n_orbits)
        if n_orbits != 1:
            break
        s_max = s
    return SArcResult(s_max=s_max, unbounded=(s_max == cap), cap=cap, method='brute_force',
                      witness_arc_path=arc_path(digraph, s_max), orbit_counts=counts,
                      divisibility_cap=_divisibility_cap(G, digraph))


def oracle_cap(digraph: OrbitalDigraph, cap: int, budget: int) -> int:
    """Largest s <= cap whose s-arc count fits the budget (0 if none does)."""
    s = 0
    while s < cap and digraph.vertex_count * digraph.valency ** (s + 1) <= budget:
        s += 1
    return s


@dataclass
class ArcFactorization:
    factorization: FactorizationResult
    conjugating_element: Permutation
    conjugate_verified: bool
    two_arc: tuple

    @property
    def two_arc_transitive(self) -> bool:
        return self.factorization.holds


def arc_factorization(action, digraph: OrbitalDigraph) -> ArcFactorization:
    """
    For the 2-arc u -> v -> w starting at the representative arc and w the least
    out-neighbour of v: whether G_v = G_uv G_vw, and an element g with
    (u, v)^g = (v, w), checking G_uv^g = G_vw.
    """
    G = _induced(action)
    u, v, w = arc_path(digraph, 2)
    Gv = G.point_stabilizer(v)
    Guv = G.tuple_stabilizer([u, v])
    Gvw = G.tuple_stabilizer([v, w])
    result = is_factorization(Gv, Guv, Gvw)

    levels = G.chain_with_base([u, v])
    g1 = levels[0].transversal[v]
    # h in G_u must carry v to the preimage of w under g1
    beta = int(np.flatnonzero(g1.images == w)[0])
    h = levels[1].transversal.get(beta)
    assert h is not None, 'orbital is not arc-transitive'
    g = h * g1
    assert int(g.images[u]) == v and int(g.images[v]) == w
    verified = all(Gvw.contains(conjugate(x, g)) for x in Guv.generators)
    return ArcFactorization(result, g, verified, (u, v, w))
