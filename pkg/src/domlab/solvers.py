"""Exact solvers for the domination chain with certificates, the predicate
checkers they certify against, and the constructive witnesses used by the
claim harness.

Parameters use their standard tags: gamma (domination), gamma_t (total),
gamma_pr (paired), upper_gamma (largest minimal dominating set), rho_k
(distance-k packing), alpha (independence, the k=1 packing).

Minimum-side solvers run iterative deepening on the target size with
branch-and-bound; maximum-side solvers run include/exclude branch-and-bound.
All tie-breaks pick the lowest vertex or edge index, so witnesses are
deterministic. Every solver takes an explicit budget; exceeding it yields an
interval certificate whose witness stays valid for its own bound, never a
wrong exact flag. No solver uses another parameter as an internal bound, so
cross-parameter inequality checks compare independent computations.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .families import lollipop
from .graphs import (
    DomainError,
    Graph,
    ResourceError,
    VertexSet,
    ball_bits,
    bit_indices,
    bits_of,
    closed_cover_bits,
    connected_components,
    distance_power_conflict_graph,
    has_isolated_vertex,
    homed_bits,
    induced_subgraph,
    open_cover_bits,
)
from .matching import has_perfect_matching
from .products import (
    implicit_direct_domination_check,
    multiway_direct_complete,
    product_pairing_is_valid,
)

DEFAULT_NODE_BUDGET = 2_000_000


@dataclass(frozen=True)
class Budget:
    """Search budget: node count always, wall clock optionally."""

    max_nodes: int = DEFAULT_NODE_BUDGET
    max_ms: int | None = None

    def __post_init__(self):
        if self.max_nodes < 1:
            raise DomainError("budget needs a positive node count")
        if self.max_ms is not None and self.max_ms < 1:
            raise DomainError("wall clock budget must be positive")


class _BudgetExceeded(Exception):
    pass


class _Tracker:
    __slots__ = ("left", "deadline", "nodes")

    def __init__(self, budget: Budget):
        self.left = budget.max_nodes
        self.nodes = 0
        self.deadline = (
            time.monotonic() + budget.max_ms / 1000.0 if budget.max_ms else None
        )

    def tick(self):
        self.nodes += 1
        self.left -= 1
        if self.left < 0:
            raise _BudgetExceeded
        if (
            self.deadline is not None
            and (self.nodes & 1023) == 0
            and time.monotonic() > self.deadline
        ):
            raise _BudgetExceeded


@dataclass(frozen=True)
class Certificate:
    """Parameter result: [lo, hi] with lo == hi when exact, plus a witness that
    always passes the matching checker (minimum-side witnesses certify hi,
    maximum-side witnesses certify lo)."""

    parameter: str
    lo: int
    hi: int
    exact: bool
    witness: VertexSet | None
    pairing: tuple = ()
    k: int | None = None
    nodes: int = 0

    @property
    def value(self):
        return self.lo if self.exact else None


# ---------------------------------------------------------------------------
# predicates


def is_dominating(g: Graph, s: VertexSet) -> bool:
    return closed_cover_bits(g, homed_bits(g, s)) == g.full_bits()


def is_total_dominating(g: Graph, s: VertexSet) -> bool:
    return open_cover_bits(g, homed_bits(g, s)) == g.full_bits()


def is_paired_dominating(g: Graph, s: VertexSet) -> bool:
    """Dominating with a perfect matching in the induced subgraph; |S| must be even."""
    bits = homed_bits(g, s)
    if bits.bit_count() % 2:
        return False
    if closed_cover_bits(g, bits) != g.full_bits():
        return False
    sub, _ = induced_subgraph(g, s)
    ok, _ = has_perfect_matching(sub)
    return ok


def pairing_is_valid(g: Graph, s: VertexSet, pairing) -> bool:
    """The pairs partition S and each pair is an edge; with is_dominating this
    certifies paired domination without the matching oracle (big witnesses)."""
    bits = homed_bits(g, s)
    seen = 0
    for u, v in pairing:
        if u == v or not 0 <= u < g.n or not 0 <= v < g.n:
            return False
        if not g.adj[u] >> v & 1:
            return False
        pb = (1 << u) | (1 << v)
        if seen & pb:
            return False
        seen |= pb
    return seen == bits


def private_neighbors(g: Graph, s: VertexSet, v: int) -> VertexSet:
    """Vertices of N[v] dominated by no other member; may include v itself."""
    bits = homed_bits(g, s)
    if not bits >> v & 1:
        raise DomainError(f"vertex {v} is not in the set")
    others = closed_cover_bits(g, bits & ~(1 << v))
    return VertexSet(g, g.closed(v) & ~others)


def is_minimal_dominating(g: Graph, s: VertexSet) -> bool:
    bits = homed_bits(g, s)
    if closed_cover_bits(g, bits) != g.full_bits():
        return False
    for v in bit_indices(bits):
        others = closed_cover_bits(g, bits & ~(1 << v))
        if not g.closed(v) & ~others:
            return False
    return True


def is_k_packing(g: Graph, s: VertexSet, k: int) -> bool:
    """Pairwise distance strictly greater than k."""
    if k < 1:
        raise DomainError("k must be at least 1")
    bits = homed_bits(g, s)
    for v in bit_indices(bits):
        if ball_bits(g, v, k) & bits & ~(1 << v):
            return False
    return True


# ---------------------------------------------------------------------------
# shared solver plumbing


@dataclass
class _Part:
    lo: int
    hi: int
    bits: int
    exact: bool
    pairs: tuple = ()


def _translate_bits(bits: int, back: dict) -> int:
    out = 0
    for v in bit_indices(bits):
        out |= 1 << back[v]
    return out


def _translate_pairs(pairs, back):
    out = [tuple(sorted((back[a], back[b]))) for a, b in pairs]
    return tuple(sorted(out))


def _component_graphs(g: Graph):
    for comp in connected_components(g):
        sub, remap = induced_subgraph(g, VertexSet(g, comp))
        yield sub, {new: old for old, new in remap.items()}


def _merge_parts(g, parameter, parts_with_back, tracker, k=None):
    lo = hi = 0
    bits = 0
    pairing = []
    exact = True
    for part, back in parts_with_back:
        lo += part.lo
        hi += part.hi
        exact &= part.exact
        bits |= _translate_bits(part.bits, back)
        pairing.extend(_translate_pairs(part.pairs, back))
    return Certificate(
        parameter,
        lo,
        hi,
        exact,
        VertexSet(g, bits),
        tuple(sorted(pairing)),
        k,
        tracker.nodes,
    )


# ---------------------------------------------------------------------------
# minimum-side: gamma and gamma_t


def _greedy_cover_bits(cover, full: int) -> int:
    covered = 0
    chosen = 0
    while covered != full:
        best_v = -1
        best_gain = 0
        for v in range(len(cover)):
            gain = (cover[v] & ~covered).bit_count()
            if gain > best_gain:
                best_gain = gain
                best_v = v
        covered |= cover[best_v]
        chosen |= 1 << best_v
    return chosen


def _cover_search(cover, ccount, full, size, maxcov, tracker):
    """Witness bits for an exact-size cover, or None; branches on the uncovered
    vertex with the fewest dominators."""
    min_c = min(ccount)

    def rec(covered, chosen, depth):
        tracker.tick()
        if covered == full:
            return chosen
        if depth == size:
            return None
        unc = full & ~covered
        if (size - depth) * maxcov < unc.bit_count():
            return None
        best_v = -1
        best_c = 1 << 30
        scan = unc
        while scan:
            low = scan & -scan
            v = low.bit_length() - 1
            scan ^= low
            if ccount[v] < best_c:
                best_c = ccount[v]
                best_v = v
                if best_c <= min_c:
                    break
        for cand in bit_indices(cover[best_v]):
            res = rec(covered | cover[cand], chosen | 1 << cand, depth + 1)
            if res is not None:
                return res
        return None

    return rec(0, 0, 0)


def _min_cover_component(gc: Graph, open_nbh: bool, tracker) -> _Part:
    n = gc.n
    full = gc.full_bits()
    if open_nbh:
        cover = list(gc.adj)
    else:
        cover = [gc.closed(v) for v in range(n)]
    ccount = [c.bit_count() for c in cover]
    maxcov = max(ccount)
    greedy_bits = _greedy_cover_bits(cover, full)
    greedy = greedy_bits.bit_count()
    lb = max(1, -(-n // maxcov))
    if lb >= greedy:
        return _Part(greedy, greedy, greedy_bits, True)
    for k in range(lb, greedy):
        try:
            found = _cover_search(cover, ccount, full, k, maxcov, tracker)
        except _BudgetExceeded:
            return _Part(k, greedy, greedy_bits, False)
        if found is not None:
            return _Part(k, k, found, True)
    return _Part(greedy, greedy, greedy_bits, True)


def _min_side(g: Graph, parameter: str, open_nbh: bool, budget) -> Certificate:
    tracker = _Tracker(budget or Budget())
    parts = [
        (_min_cover_component(sub, open_nbh, tracker), back)
        for sub, back in _component_graphs(g)
    ]
    return _merge_parts(g, parameter, parts, tracker)


def domination_number(g: Graph, budget: Budget | None = None) -> Certificate:
    """gamma: smallest dominating set."""
    cert = _min_side(g, "gamma", False, budget)
    assert is_dominating(g, cert.witness) or g.n == 0
    return cert


def total_domination_number(g: Graph, budget: Budget | None = None) -> Certificate:
    """gamma_t: smallest set whose open neighborhoods cover everything."""
    if has_isolated_vertex(g):
        raise DomainError("total domination undefined with isolated vertices")
    cert = _min_side(g, "gamma_t", True, budget)
    assert is_total_dominating(g, cert.witness) or g.n == 0
    return cert


# ---------------------------------------------------------------------------
# minimum-side: gamma_pr (search over disjoint dominating edges)


def _greedy_pairs(gc: Graph, edges, ecov):
    full = gc.full_bits()
    covered = used = 0
    picks = []
    while covered != full:
        best_i = -1
        best_gain = 0
        for ei, (u, v) in enumerate(edges):
            if used >> u & 1 or used >> v & 1:
                continue
            gain = (ecov[ei] & ~covered).bit_count()
            if gain > best_gain:
                best_gain = gain
                best_i = ei
        if best_i < 0:
            # disjointness blocked the greedy; fall back to doubling a dominating set
            base = _greedy_cover_bits([gc.closed(v) for v in range(gc.n)], full)
            vs, pairing = pair_up_dominating(gc, VertexSet(gc, base))
            return vs.bits, pairing
        u, v = edges[best_i]
        used |= (1 << u) | (1 << v)
        covered |= ecov[best_i]
        picks.append((u, v))
    return used, tuple(picks)


def _paired_component(gc: Graph, tracker) -> _Part:
    n = gc.n
    full = gc.full_bits()
    edges = list(gc.edges())
    ecov = [gc.closed(u) | gc.closed(v) for u, v in edges]
    maxcov = max(c.bit_count() for c in ecov)
    gbits, gpairs = _greedy_pairs(gc, edges, ecov)
    gp = len(gpairs)
    lbp = max(1, -(-n // maxcov))
    if lbp >= gp:
        return _Part(2 * gp, 2 * gp, gbits, True, gpairs)
    etouch = [[] for _ in range(n)]
    for ei, cov in enumerate(ecov):
        for w in bit_indices(cov):
            etouch[w].append(ei)
    scount = [len(t) for t in etouch]

    def search(p):
        chosen = []

        def rec(covered, used, depth):
            tracker.tick()
            if covered == full:
                return True
            if depth == p:
                return False
            unc = full & ~covered
            if (p - depth) * maxcov < unc.bit_count():
                return False
            best_v = -1
            best_c = 1 << 30
            scan = unc
            while scan:
                low = scan & -scan
                v = low.bit_length() - 1
                scan ^= low
                if scount[v] < best_c:
                    best_c = scount[v]
                    best_v = v
            for ei in etouch[best_v]:
                u, v = edges[ei]
                if used >> u & 1 or used >> v & 1:
                    continue
                chosen.append(ei)
                if rec(covered | ecov[ei], used | (1 << u) | (1 << v), depth + 1):
                    return True
                chosen.pop()
            return False

        if rec(0, 0, 0):
            return tuple(edges[ei] for ei in chosen)
        return None

    for p in range(lbp, gp):
        try:
            found = search(p)
        except _BudgetExceeded:
            return _Part(2 * p, 2 * gp, gbits, False, gpairs)
        if found is not None:
            sbits = 0
            for u, v in found:
                sbits |= (1 << u) | (1 << v)
            return _Part(2 * p, 2 * p, sbits, True, found)
    return _Part(2 * gp, 2 * gp, gbits, True, gpairs)


def paired_domination_number(g: Graph, budget: Budget | None = None) -> Certificate:
    """gamma_pr: smallest dominating set induced by vertex-disjoint edges.

    Deepening is over the pair count, so only even sizes are visited and the
    witness pairing is the search's own edge choice; the matching definition is
    re-checked on the result."""
    if has_isolated_vertex(g):
        raise DomainError("paired domination undefined with isolated vertices")
    tracker = _Tracker(budget or Budget())
    parts = [
        (_paired_component(sub, tracker), back) for sub, back in _component_graphs(g)
    ]
    cert = _merge_parts(g, "gamma_pr", parts, tracker)
    assert pairing_is_valid(g, cert.witness, cert.pairing)
    assert is_dominating(g, cert.witness) or g.n == 0
    return cert


# ---------------------------------------------------------------------------
# maximum-side: upper_gamma


def _minimalize_bits(gc: Graph, bits: int) -> int:
    full = gc.full_bits()
    while True:
        for v in bit_indices(bits):
            rest = bits & ~(1 << v)
            if closed_cover_bits(gc, rest) == full:
                bits = rest
                break
        else:
            return bits


def _upper_exhaustive_graph(gc: Graph):
    """Largest minimal dominating set by scanning all subsets; order <= 20."""
    if gc.n > 20:
        raise ResourceError("exhaustive minimal-dominating scan capped at order 20")
    n = gc.n
    full = gc.full_bits()
    closed = [gc.closed(v) for v in range(n)]
    best_size = -1
    best_bits = 0
    for mask in range(1 << n):
        if mask.bit_count() <= best_size:
            continue
        cover = 0
        for v in bit_indices(mask):
            cover |= closed[v]
        if cover != full:
            continue
        minimal = True
        for v in bit_indices(mask):
            rest = mask & ~(1 << v)
            rcov = 0
            for u in bit_indices(rest):
                rcov |= closed[u]
            if rcov == full:
                minimal = False
                break
        if minimal:
            best_size = mask.bit_count()
            best_bits = mask
    return best_size, best_bits


def _upper_component(gc: Graph, tracker) -> _Part:
    n = gc.n
    full = gc.full_bits()
    closed = [gc.closed(v) for v in range(n)]
    inc_bits = _minimalize_bits(gc, _greedy_cover_bits(closed, full))
    best = [inc_bits.bit_count(), inc_bits]
    domcnt = [0] * n

    def can_add(v, d_bits):
        nv = closed[v]
        for u in bit_indices(nv):
            if domcnt[u] == 0:
                break
        else:
            return False
        for d in bit_indices(d_bits):
            for u in bit_indices(closed[d]):
                if domcnt[u] + (1 if nv >> u & 1 else 0) == 1:
                    break
            else:
                return False
        return True

    def rec(d_bits, banned, size):
        tracker.tick()
        avail = full & ~d_bits & ~banned
        addable = [v for v in bit_indices(avail) if can_add(v, d_bits)]
        if size + len(addable) <= best[0]:
            return
        if not addable:
            if all(c > 0 for c in domcnt):
                best[0] = size
                best[1] = d_bits
            return
        v = addable[0]
        for u in bit_indices(closed[v]):
            domcnt[u] += 1
        rec(d_bits | 1 << v, banned, size + 1)
        for u in bit_indices(closed[v]):
            domcnt[u] -= 1
        uncovered = 0
        for u in range(n):
            if domcnt[u] == 0:
                uncovered |= 1 << u
        potential = closed_cover_bits(gc, avail & ~(1 << v)) if uncovered else 0
        if not uncovered & ~potential:
            rec(d_bits, banned | 1 << v, size)

    try:
        rec(0, 0, 0)
        return _Part(best[0], best[0], best[1], True)
    except _BudgetExceeded:
        if n <= 20:
            size, bits = _upper_exhaustive_graph(gc)
            return _Part(size, size, bits, True)
        return _Part(best[0], n, best[1], False)


def upper_domination_number(g: Graph, budget: Budget | None = None) -> Certificate:
    """upper_gamma: largest minimal dominating set (branch and bound on
    include/exclude decisions, private-neighbor obligations pruned eagerly)."""
    tracker = _Tracker(budget or Budget())
    parts = [(_upper_component(sub, tracker), back) for sub, back in _component_graphs(g)]
    cert = _merge_parts(g, "upper_gamma", parts, tracker)
    assert is_minimal_dominating(g, cert.witness) or g.n == 0
    return cert


def upper_domination_exhaustive(g: Graph):
    """Independent all-subsets oracle for upper_gamma, order <= 20 overall;
    returns (value, witness)."""
    total = 0
    bits = 0
    if g.n > 20:
        raise ResourceError("exhaustive minimal-dominating scan capped at order 20")
    for sub, back in _component_graphs(g):
        size, sub_bits = _upper_exhaustive_graph(sub)
        total += size
        bits |= _translate_bits(sub_bits, back)
    witness = VertexSet(g, bits)
    assert is_minimal_dominating(g, witness) or g.n == 0
    return total, witness


# ---------------------------------------------------------------------------
# maximum-side: packings via maximum independent set


def _mis_component(gc: Graph, tracker) -> _Part:
    n = gc.n
    full = gc.full_bits()
    closed = [gc.closed(v) for v in range(n)]
    avail = full
    greedy_bits = 0
    while avail:
        best_v = -1
        best_d = 1 << 30
        for v in bit_indices(avail):
            d = (gc.adj[v] & avail).bit_count()
            if d < best_d:
                best_d = d
                best_v = v
        greedy_bits |= 1 << best_v
        avail &= ~closed[best_v]
    best = [greedy_bits.bit_count(), greedy_bits]

    def rec(avail, size, cur):
        tracker.tick()
        while True:
            iso = 0
            for v in bit_indices(avail):
                if not gc.adj[v] & avail:
                    iso |= 1 << v
            if not iso:
                break
            cur |= iso
            size += iso.bit_count()
            avail &= ~iso
        if size + avail.bit_count() <= best[0]:
            return
        if not avail:
            best[0] = size
            best[1] = cur
            return
        best_v = -1
        best_d = -1
        for v in bit_indices(avail):
            d = (gc.adj[v] & avail).bit_count()
            if d > best_d:
                best_d = d
                best_v = v
        rec(avail & ~closed[best_v], size + 1, cur | 1 << best_v)
        rec(avail & ~(1 << best_v), size, cur)

    try:
        rec(full, 0, 0)
        return _Part(best[0], best[0], best[1], True)
    except _BudgetExceeded:
        return _Part(best[0], n, best[1], False)


def _mis(g: Graph, conflict: Graph, parameter: str, budget, k) -> Certificate:
    tracker = _Tracker(budget or Budget())
    parts = [
        (_mis_component(sub, tracker), back) for sub, back in _component_graphs(conflict)
    ]
    lo = hi = 0
    bits = 0
    exact = True
    for part, back in parts:
        lo += part.lo
        hi += part.hi
        exact &= part.exact
        bits |= _translate_bits(part.bits, back)
    return Certificate(parameter, lo, hi, exact, VertexSet(g, bits), (), k, tracker.nodes)


def packing_number(g: Graph, k: int, budget: Budget | None = None) -> Certificate:
    """rho_k: largest set with pairwise distance greater than k (maximum
    independent set of the distance-power conflict graph)."""
    conflict = distance_power_conflict_graph(g, k)
    cert = _mis(g, conflict, "rho_k", budget, k)
    assert is_k_packing(g, cert.witness, k) or g.n == 0
    return cert


def independence_number(g: Graph, budget: Budget | None = None) -> Certificate:
    """alpha = rho_1."""
    cert = _mis(g, g, "alpha", budget, None)
    assert is_k_packing(g, cert.witness, 1) or g.n == 0
    return cert


# ---------------------------------------------------------------------------
# dominating-set surgery


def minimalize_dominating(g: Graph, s: VertexSet) -> VertexSet:
    """Drop redundant members (lowest index first) until the set is minimal."""
    bits = homed_bits(g, s)
    if closed_cover_bits(g, bits) != g.full_bits():
        raise DomainError("set is not dominating")
    return VertexSet(g, _minimalize_bits(g, bits))


def pair_up_dominating(g: Graph, s: VertexSet):
    """Paired dominating set of size at most 2|S| built from a dominating S.

    The set is first minimalized; then unmatched members grab the lowest
    unmatched neighbor (preferring one already in the set). A member whose
    neighbors are all matched is dropped, which is safe: its whole open
    neighborhood is then inside the set, so no coverage is lost.
    """
    if has_isolated_vertex(g):
        raise DomainError("paired sets need an isolated-free graph")
    start = len(s)
    sbits = homed_bits(g, minimalize_dominating(g, s))
    matched = 0
    pairs = []
    while True:
        unmatched = sbits & ~matched
        if not unmatched:
            break
        u = (unmatched & -unmatched).bit_length() - 1
        nbrs = g.adj[u]
        cand = nbrs & sbits & ~matched & ~(1 << u)
        if not cand:
            cand = nbrs & ~sbits
        if cand:
            w = (cand & -cand).bit_length() - 1
            sbits |= 1 << w
            pairs.append((min(u, w), max(u, w)))
            matched |= (1 << u) | (1 << w)
        else:
            sbits &= ~(1 << u)
    result = VertexSet(g, sbits)
    pairing = tuple(sorted(pairs))
    assert len(result) <= 2 * start
    assert is_dominating(g, result)
    assert pairing_is_valid(g, result, pairing)
    return result, pairing


# ---------------------------------------------------------------------------
# constructive witnesses on complete-graph products


def _mixed_radix_weights(orders):
    w = [1] * len(orders)
    for i in range(len(orders) - 2, -1, -1):
        w[i] = w[i + 1] * orders[i + 1]
    return w


def diagonal_paired_dominating(orders):
    """The constant-tuple witness on a product of complete graphs: tuples
    (i,...,i) for i = 0..t, plus (1,0,...,0) when t is even. Returns
    (graph, witness, pairing); size t+1 for odd t, t+2 for even t."""
    orders = list(orders)
    t = len(orders)
    if t < 3:
        raise DomainError("need at least 3 factors")
    if min(orders) < t + 1:
        raise DomainError("factor orders must be at least t+1")
    g = multiway_direct_complete(orders)
    w = _mixed_radix_weights(orders)
    step = sum(w)
    diag = [i * step for i in range(t + 1)]
    members = list(diag)
    pairing = [(diag[2 * i], diag[2 * i + 1]) for i in range((t + 1) // 2)]
    if t % 2 == 0:
        extra = w[0]
        members.append(extra)
        pairing.append((min(diag[t], extra), max(diag[t], extra)))
    vs = VertexSet(g, bits_of(members))
    pairing = tuple(sorted(pairing))
    assert is_dominating(g, vs)
    assert pairing_is_valid(g, vs, pairing)
    return g, vs, pairing


def appended_path_paired_witness(orders, ell: int):
    """Paired dominating witness on a complete-graph product with a length-ell
    path appended at the all-zero tuple. Returns (graph, witness, pairing);
    sizes follow the diagonal witness plus one vertex per path step (plus the
    (1,0,...,0) filler when parity demands it)."""
    orders = list(orders)
    t = len(orders)
    if t < 3:
        raise DomainError("need at least 3 factors")
    if min(orders) < t + 1:
        raise DomainError("factor orders must be at least t+1")
    base = multiway_direct_complete(orders)
    g = lollipop(base, ell, 0)
    w = _mixed_radix_weights(orders)
    step = sum(w)
    diag = [i * step for i in range(t + 1)]
    extra = w[0]
    tail = [base.n + i for i in range(ell)]
    if t % 2 == 1 and ell % 2 == 0:
        members = diag + tail
        pairing = [(diag[2 * i], diag[2 * i + 1]) for i in range((t + 1) // 2)]
        pairing += [(tail[2 * i], tail[2 * i + 1]) for i in range(ell // 2)]
    elif t % 2 == 1:
        members = diag + [extra] + tail
        pairing = [(diag[0], tail[0])]
        pairing += [(tail[2 * i + 1], tail[2 * i + 2]) for i in range((ell - 1) // 2)]
        pairing += [(diag[2 * i + 1], diag[2 * i + 2]) for i in range((t - 1) // 2)]
        pairing += [(min(diag[t], extra), max(diag[t], extra))]
    elif ell % 2 == 0:
        members = diag + [extra] + tail
        pairing = [(diag[2 * i], diag[2 * i + 1]) for i in range(t // 2)]
        pairing += [(min(diag[t], extra), max(diag[t], extra))]
        pairing += [(tail[2 * i], tail[2 * i + 1]) for i in range(ell // 2)]
    else:
        # even t with an odd tail has no clean closed form; double a dominating set
        seed = VertexSet(g, bits_of(diag + [extra] + tail))
        return (g,) + pair_up_dominating(g, seed)
    vs = VertexSet(g, bits_of(members))
    pairing = tuple(sorted(pairing))
    assert is_dominating(g, vs)
    assert pairing_is_valid(g, vs, pairing)
    return g, vs, pairing


def pendant_product_dominating(g, h, v, base_members, base_pairing, side, side_pairing):
    """Dominating set of (g plus a pendant at v) x h: the base paired witness on
    g x h plus the column {v} x D_h. Returns (extended graph, member pairs).

    Both input witnesses are validated (paired domination implies open-side
    coverage, which is what the new pendant column needs); invalid or empty
    witnesses raise DomainError."""
    if not 0 <= v < g.n:
        raise IndexError(f"attachment vertex {v} out of range")
    members = sorted(set(map(tuple, base_members)))
    if not members:
        raise DomainError("empty base witness")
    side_bits = homed_bits(h, side)
    if not side_bits:
        raise DomainError("empty pendant-side witness")
    if not implicit_direct_domination_check(g, h, members):
        raise DomainError("base witness does not dominate the product")
    if not product_pairing_is_valid(g, h, members, base_pairing):
        raise DomainError("base witness pairing is not a perfect matching of edges")
    if not (is_dominating(h, side) and pairing_is_valid(h, side, side_pairing)):
        raise DomainError("pendant-side witness is not paired dominating")
    g_prime = lollipop(g, 1, v)
    out = sorted(set(members) | {(v, b) for b in bit_indices(side_bits)})
    assert implicit_direct_domination_check(g_prime, h, out)
    return g_prime, tuple(out)


# ---------------------------------------------------------------------------
# exhaustive structure scans


def minimal_total_dominating_sizes(g: Graph) -> set:
    """Sizes of the inclusion-minimal members of the total dominating family
    (minimal among total dominating sets); exhaustive, order <= 16."""
    if g.n > 16:
        raise ResourceError("exhaustive total-dominating scan capped at order 16")
    if has_isolated_vertex(g):
        raise DomainError("total domination undefined with isolated vertices")
    n = g.n
    full = g.full_bits()
    adj = g.adj

    def open_cover(mask):
        cov = 0
        while mask:
            low = mask & -mask
            cov |= adj[low.bit_length() - 1]
            mask ^= low
        return cov

    sizes = set()
    for mask in range(1 << n):
        if open_cover(mask) != full:
            continue
        minimal = True
        scan = mask
        while scan:
            low = scan & -scan
            scan ^= low
            if open_cover(mask ^ low) == full:
                minimal = False
                break
        if minimal:
            sizes.add(mask.bit_count())
    return sizes
