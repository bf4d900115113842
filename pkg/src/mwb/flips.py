"""Bistellar moves and a simulated-annealing search for small triangulations.

An i-move removes a (d-i)-face A whose link is the boundary of an i-simplex
B not yet present in the complex and replaces A*dB by dA*B.  0-moves stack a
facet over a fresh vertex; d-moves delete a vertex whose link is a boundary
simplex.  The reducer greedily prefers moves that lower the lexicographic
f-vector, escapes local minima with bounded random "heating" phases, and
returns to the best complex (by explicit inverse moves, so traces stay
replayable) whenever an excursion fails to improve it.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import core
from .core import Complex
from .errors import BudgetZero, IllegalMove

_MASK = (1 << 64) - 1


class SplitMix64:
    """Tiny deterministic 64-bit generator; stable across releases."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def randrange(self, n: int) -> int:
        return (self.next_u64() * n) >> 64

    def choice(self, seq):
        return seq[self.randrange(len(seq))]


@dataclass(frozen=True)
class FlipMove:
    kind: int
    remove: tuple
    insert: tuple

    def inverse(self, d: int) -> "FlipMove":
        return FlipMove(d - self.kind, self.insert, self.remove)

    def as_line(self) -> str:
        a = " ".join(map(str, self.remove))
        b = " ".join(map(str, self.insert))
        return f"{self.kind}: {a} -> {b}"

    @classmethod
    def from_line(cls, line: str) -> "FlipMove":
        head, _, rest = line.partition(":")
        a, _, b = rest.partition("->")
        return cls(int(head), tuple(int(t) for t in a.split()),
                   tuple(int(t) for t in b.split()))


@dataclass
class Schedule:
    """Annealing parameters; the defaults are the documented ones."""

    heat_init: float = 10.0
    heat_growth: float = 1.5
    heat_cap: float = 200.0
    target_f0: int | None = None
    target_f: tuple | None = None

    def reached(self, fvec: tuple) -> bool:
        if self.target_f is not None and tuple(fvec) == tuple(self.target_f):
            return True
        if self.target_f0 is not None and fvec[0] <= self.target_f0:
            return True
        return False


class _State:
    """Mutable facet set with a star index (face -> facets containing it).

    Labels need not stay contiguous while moves are applied (d-moves leave
    gaps); complexes are compacted only on export.  That keeps every move
    exactly invertible in place.
    """

    def __init__(self, C: Complex):
        self.d = C.dim
        self.max_label = C.n
        self.facets: set = set()
        self.star: dict = {}
        self.faces_by_dim = [set() for _ in range(self.d + 1)]
        self.counts = [0] * (self.d + 1)
        for F in C.facets:
            self._add_facet(F)

    def _add_facet(self, F: tuple):
        self.facets.add(F)
        for size in range(1, len(F) + 1):
            for s in itertools.combinations(F, size):
                st = self.star.get(s)
                if st is None:
                    self.star[s] = {F}
                    self.faces_by_dim[size - 1].add(s)
                    self.counts[size - 1] += 1
                else:
                    st.add(F)

    def _remove_facet(self, F: tuple):
        self.facets.remove(F)
        for size in range(1, len(F) + 1):
            for s in itertools.combinations(F, size):
                st = self.star[s]
                st.discard(F)
                if not st:
                    del self.star[s]
                    self.faces_by_dim[size - 1].discard(s)
                    self.counts[size - 1] -= 1

    def f(self) -> tuple:
        return tuple(self.counts)

    def fresh_label(self) -> int:
        return self.max_label + 1

    def candidate(self, kind: int, A: tuple):
        """Return the insert-face B if (A, B) is a legal kind-move, else None."""
        if kind == 0:
            return (self.fresh_label(),) if A in self.facets else None
        st = self.star.get(A)
        if st is None or len(st) != kind + 1:
            return None
        As = set(A)
        U: set = set()
        for F in st:
            U.update(F)
        U -= As
        if len(U) != kind + 1:
            return None
        B = tuple(sorted(U))
        if B in self.star:
            return None  # B already a face
        return B

    def legal_moves(self, kind: int):
        out = []
        for A in sorted(self.faces_by_dim[self.d - kind]):
            B = self.candidate(kind, A)
            if B is not None:
                out.append(FlipMove(kind, A, B))
        return out

    def apply(self, m: FlipMove):
        A, B = m.remove, m.insert
        Bs = set(B)
        As = set(A)
        for b in B:
            self._remove_facet(tuple(sorted(As | (Bs - {b}))))
        for a in A:
            self._add_facet(tuple(sorted((As - {a}) | Bs)))
        if m.kind == 0:
            self.max_label = max(self.max_label, B[0])

    def snapshot(self) -> tuple:
        return tuple(sorted(self.facets))


def legal_moves(C: Complex, i: int) -> list:
    """All legal i-moves, lexicographically ordered by remove-face."""
    if not 0 <= i <= C.dim:
        raise ValueError("move kind out of range")
    return _State(C).legal_moves(i)


def _check_legal(state: _State, m: FlipMove):
    if not 0 <= m.kind <= state.d:
        raise IllegalMove(f"kind {m.kind} out of range for dimension {state.d}")
    A = tuple(sorted(m.remove))
    if len(A) != state.d - m.kind + 1:
        raise IllegalMove(f"remove-face {A} has wrong size for a {m.kind}-move")
    if m.kind == 0:
        if A not in state.facets:
            raise IllegalMove(f"{A} is not a facet")
        if len(m.insert) != 1 or (m.insert[0],) in state.star:
            raise IllegalMove(f"0-move must insert a fresh vertex, got {m.insert}")
        return
    B = state.candidate(m.kind, A)
    if B is None:
        if state.star.get(A) is None:
            raise IllegalMove(f"{A} is not a face")
        if tuple(sorted(m.insert)) in state.star:
            raise IllegalMove(
                f"insert-face {tuple(sorted(m.insert))} is already a face")
        raise IllegalMove(f"link of {A} is not the boundary of a simplex")
    if B != tuple(sorted(m.insert)):
        raise IllegalMove(f"link of {A} is the boundary of {B}, not of {m.insert}")


def apply_move(C: Complex, m: FlipMove) -> Complex:
    """Apply a legal move; raises IllegalMove with the violated clause.

    The result is canonicalized, so after a d-move the labels above the
    removed vertex shift down by one.
    """
    state = _State(C)
    _check_legal(state, m)
    state.apply(m)
    return core.from_facets(state.snapshot())


def replay(C: Complex, trace, checkpoint_every: int | None = None):
    """Re-apply a recorded move sequence, validating every step.

    Labels are kept exactly as recorded while replaying (no intermediate
    compaction), matching what the reducer does; the final complex is
    canonicalized.  With ``checkpoint_every`` the return value is
    (final, [complexes sampled every that many moves]).
    """
    state = _State(C)
    checkpoints = []
    for i, m in enumerate(trace, start=1):
        _check_legal(state, m)
        state.apply(m)
        if checkpoint_every and i % checkpoint_every == 0:
            checkpoints.append(core.from_facets(state.snapshot()))
    final = core.from_facets(state.snapshot())
    if checkpoint_every:
        return final, checkpoints
    return final


def random_walk(C: Complex, seed: int, steps: int, kinds=None):
    """Apply random legal moves; returns (complex, trace).

    Each step picks a kind uniformly among those with legal moves, then a
    uniform move of that kind, which keeps vertex-adding and vertex-removing
    moves balanced.  ``kinds`` restricts the sampled kinds (default 0..d).
    Useful as an independent exerciser: every step preserves the PL type, so
    homology and the pseudomanifold property must survive any walk.
    """
    state = _State(C)
    rng = SplitMix64(seed)
    kinds = tuple(kinds) if kinds is not None else tuple(range(state.d + 1))
    trace = []
    for _ in range(steps):
        pools = [p for p in (state.legal_moves(k) for k in kinds) if p]
        if not pools:
            break
        m = rng.choice(rng.choice(pools))
        state.apply(m)
        trace.append(m)
    return core.from_facets(state.snapshot()), trace


def _pick_improving(state: _State, rng: SplitMix64):
    for kind in range(state.d, state.d // 2, -1):
        cands = state.legal_moves(kind)
        if cands:
            return rng.choice(cands)
    return None


def _pick_heating(state: _State, rng: SplitMix64):
    # middle-dimension moves with a light admixture of the next-lower kind;
    # a saturated state ends the phase early
    mid = state.d // 2
    kinds = [mid] if mid <= 1 else [mid, mid - 1]
    weights = [16, 1][: len(kinds)]
    while kinds:
        total = sum(weights)
        r = rng.randrange(total)
        acc = 0
        for idx, w in enumerate(weights):
            acc += w
            if r < acc:
                break
        cands = state.legal_moves(kinds[idx])
        if cands:
            return rng.choice(cands)
        del kinds[idx], weights[idx]
    return None


def reduce(C: Complex, seed: int, budget: int,
           schedule: Schedule | None = None):
    """Search for a lexicographically f-vector-minimal triangulation.

    Deterministic in (input, seed, budget, schedule).  Returns the best
    complex found, the applied move trace (replayable; it includes the
    inverse moves used to back out of failed excursions), and a statistics
    dict whose "final" entry is the complex the walk ended on.
    """
    if budget <= 0:
        raise BudgetZero("move budget must be positive")
    schedule = schedule or Schedule()
    state = _State(C)
    rng = SplitMix64(seed)
    best = state.snapshot()
    best_f = state.f()
    trace: list = []
    since_best: list = []
    stats = {"moves": 0, "heating_phases": 0, "reverts": 0, "best_step": 0,
             "start_f": state.f()}

    def do(move):
        state.apply(move)
        trace.append(move)
        stats["moves"] += 1

    heat = 0
    heat_len = schedule.heat_init
    fails = 0
    while stats["moves"] < budget and not schedule.reached(best_f):
        move = None
        if heat == 0:
            move = _pick_improving(state, rng)
            if move is None:
                # stuck: every few failed excursions back out to the best
                fails += 1
                if since_best and fails % 3 == 0:
                    stats["reverts"] += 1
                    while since_best and stats["moves"] < budget:
                        do(since_best.pop().inverse(state.d))
                    if since_best:
                        break  # budget ran out mid-revert
                heat = int(heat_len)
                heat_len = min(schedule.heat_cap, heat_len * schedule.heat_growth)
                stats["heating_phases"] += 1
        if move is None:
            if heat > 0:
                move = _pick_heating(state, rng)
                heat -= 1
                if move is None:
                    heat = 0  # saturated: cut the phase short and descend
                    if not since_best:
                        break  # stuck at best with no heating moves at all
                    continue
            else:
                break
        do(move)
        since_best.append(move)
        f = state.f()
        if f < best_f:
            best_f = f
            best = state.snapshot()
            since_best.clear()
            stats["best_step"] = stats["moves"]
            heat = 0
            heat_len = schedule.heat_init
            fails = 0
    stats["best_f"] = best_f
    stats["final_f"] = state.f()
    stats["final"] = core.from_facets(state.snapshot())
    return core.from_facets(best), trace, stats


def _reduce_job(args):
    facets, seed, budget, schedule = args
    best, trace, stats = reduce(core.from_facets(facets), seed, budget, schedule)
    stats = dict(stats)
    stats["final"] = stats["final"].facets
    return core.f_vector(best).counts, seed, best.facets, trace, stats


def reduce_multi(C: Complex, seeds, budget: int,
                 schedule: Schedule | None = None, stop_at_target: bool = True,
                 threads: int = 1):
    """Run reduce over several seeds; returns (best, seed, trace, stats).

    Sequentially (threads=1) seeds are tried in order and the scan ends at
    the first one whose best complex reaches the schedule target; with a
    worker pool all seeds run.  Either way the winner is the
    (objective, seed)-minimal run, so the result is deterministic.
    """
    seeds = list(seeds)
    results = []
    if threads > 1:
        from concurrent.futures import ProcessPoolExecutor

        jobs = [(C.facets, seed, budget, schedule) for seed in seeds]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_reduce_job, jobs))
    else:
        for seed in seeds:
            results.append(_reduce_job((C.facets, seed, budget, schedule)))
            if stop_at_target and schedule is not None and schedule.reached(
                    results[-1][0]):
                break
    results.sort(key=lambda t: (t[0], t[1]))
    f, seed, best_facets, trace, stats = results[0]
    stats = dict(stats)
    stats["final"] = core.from_facets(stats["final"])
    return core.from_facets(best_facets), seed, trace, stats
