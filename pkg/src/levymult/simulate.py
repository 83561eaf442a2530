"""Levy path simulation on T^1, T^2, SU(2), and subordinator ensembles.

Paths follow exponential Euler between jumps: the state is multiplied by
exp(sqrt(2c) dB . X + b dt), which stays on the group exactly.  Jumps
occur at exact Poisson event times (never snapped to the grid); the
diffusion is integrated to the event and the jump is applied after the
diffusion substep.  Randomness is drawn from counter-based streams keyed
by (seed, purpose, path index), so path i is the same no matter how many
other paths are simulated.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
import numpy as np

from . import rng as rngmod
from .groups import (
    SU2,
    T1,
    T2,
    GroupLevyMeasure,
    group_dim,
    su2_exp,
    su2_exp_batch,
    su2_renormalise,
)
from .levy import BernsteinSpec


@dataclass(frozen=True)
class GroupProcessSpec:
    """Characteristics and discretisation of a group-valued Levy process.

    The diffusion matrix is c times the identity in the fixed orthonormal
    basis; drift is supported on the tori only.
    """

    group: str
    c: float
    jumps: GroupLevyMeasure
    horizon: float
    dt: float
    seed: int
    drift: tuple = ()

    def __post_init__(self):
        if self.c < 0.0:
            raise ValueError("diffusion coefficient must be nonnegative")
        if self.dt <= 0.0 or self.horizon < self.dt:
            raise ValueError("need dt > 0 and horizon >= dt")
        if self.jumps.group != self.group:
            raise ValueError("jump measure group mismatch")
        k = self.horizon / self.dt
        if abs(k - round(k)) > 1e-9:
            raise ValueError("horizon must be an integer number of steps")
        d = group_dim(self.group)
        drift = tuple(float(x) for x in (self.drift or (0.0,) * d))
        if self.group == SU2:
            if any(x != 0.0 for x in drift):
                raise ValueError("drift is not supported on SU(2)")
            drift = (0.0, 0.0, 0.0)
        if len(drift) != d:
            raise ValueError(f"drift must have {d} components")
        object.__setattr__(self, "drift", drift)

    @property
    def n_steps(self) -> int:
        return int(round(self.horizon / self.dt))

    @cached_property
    def grid_times(self) -> np.ndarray:
        return np.arange(self.n_steps + 1) * self.dt


@dataclass
class PathRecord:
    """One simulated path, segmented at grid times and exact event times.

    Nodes are ordered points in time; every grid time is a node, every
    jump is its own node (after the grid node when times coincide).
    ``states[i]`` is the state at node i after any event there;
    ``prestates[i]`` the state just before it.  ``db[i]`` is the standard
    Brownian increment over segment (times[i], times[i+1]).
    """

    spec: GroupProcessSpec
    index: int
    times: np.ndarray
    kinds: np.ndarray  # 0 grid node, 1 event node
    marks: np.ndarray  # atom index at event nodes, -1 elsewhere
    states: np.ndarray
    prestates: np.ndarray
    db: np.ndarray
    unitarity_residual: float = 0.0

    @property
    def grid_rows(self) -> np.ndarray:
        return np.flatnonzero(self.kinds == 0)

    @property
    def n_events(self) -> int:
        return int(np.sum(self.kinds == 1))


def _draw_events(spec: GroupProcessSpec, index: int):
    gen = rngmod.stream(spec.seed, rngmod.JUMPS, index)
    masses = np.array([m for _, m in spec.jumps.atoms])
    if masses.size == 0:
        return np.zeros(0), np.zeros(0, dtype=int)
    lam = float(masses.sum())
    count = int(gen.poisson(lam * spec.horizon))
    times = np.sort(gen.uniform(0.0, spec.horizon, size=count))
    marks = gen.choice(len(masses), size=count, p=masses / lam)
    return times, marks


def _merge_nodes(grid: np.ndarray, ev_times: np.ndarray, ev_marks: np.ndarray):
    times = np.concatenate([grid, ev_times])
    kinds = np.concatenate([np.zeros(len(grid), dtype=np.int8), np.ones(len(ev_times), dtype=np.int8)])
    marks = np.concatenate([np.full(len(grid), -1), ev_marks]).astype(int)
    order = np.lexsort((kinds, times))  # grid node first on a time tie
    return times[order], kinds[order], marks[order]


def simulate_path(spec: GroupProcessSpec, index: int) -> PathRecord:
    """Simulate path ``index``; reproducible from (spec.seed, index) alone."""
    ev_times, ev_marks = _draw_events(spec, index)
    times, kinds, marks = _merge_nodes(spec.grid_times, ev_times, ev_marks)
    n_seg = len(times) - 1
    d = group_dim(spec.group)
    gen = rngmod.stream(spec.seed, rngmod.BROWNIAN, index)
    z = gen.standard_normal((n_seg, d))
    ds = np.diff(times)
    db = z * np.sqrt(ds)[:, None]
    scale = np.sqrt(2.0 * spec.c)

    if spec.group in (T1, T2):
        incr = np.asarray(spec.drift) * ds[:, None] + scale * db
        base = np.vstack([np.zeros(d), np.cumsum(incr, axis=0)])
        jump_at = np.zeros((len(times), d))
        ev_rows = np.flatnonzero(kinds == 1)
        if len(ev_rows):
            taus = np.stack([spec.jumps.atoms[m][0] for m in marks[ev_rows]])
            jump_at[ev_rows] = taus
        states = base + np.cumsum(jump_at, axis=0)
        prestates = states - jump_at
        return PathRecord(spec, index, times, kinds, marks, states, prestates, db)

    # SU(2): sequential on the group
    states = np.empty((len(times), 2, 2), dtype=complex)
    prestates = np.empty_like(states)
    atom_mats = [np.asarray(tau, dtype=complex) for tau, _ in spec.jumps.atoms]
    g = np.eye(2, dtype=complex)
    states[0] = prestates[0] = g
    residual = 0.0
    for i in range(n_seg):
        if spec.c > 0.0:
            g = g @ su2_exp(scale * db[i])
        pre = g
        if kinds[i + 1] == 1:
            g = g @ atom_mats[marks[i + 1]]
        if (i + 1) % 64 == 0:
            g, res = su2_renormalise(g)
            residual = max(residual, res)
        states[i + 1] = g
        prestates[i + 1] = pre
    return PathRecord(spec, index, times, kinds, marks, states, prestates, db, residual)


def ensemble_final_states(spec: GroupProcessSpec, paths: int) -> np.ndarray:
    """phi(horizon) for all path indices, started at the identity.

    Tori paths delegate to ``simulate_path`` (cheap there); SU(2) paths
    are evolved over the grid in a batch, with event-carrying steps split
    at their exact event times.  Either way path p agrees with
    ``simulate_path(spec, p)`` state by state.
    """
    if spec.group in (T1, T2):
        d = group_dim(spec.group)
        out = np.empty((paths, d))
        for p in range(paths):
            out[p] = simulate_path(spec, p).states[-1]
        return out

    k_steps = spec.n_steps
    dt = spec.dt
    scale = np.sqrt(2.0 * spec.c)
    atom_mats = [np.asarray(tau, dtype=complex) for tau, _ in spec.jumps.atoms]
    events = []
    seg_counts = np.full(paths, k_steps, dtype=int)
    for p in range(paths):
        t_ev, m_ev = _draw_events(spec, p)
        events.append((t_ev, m_ev))
        seg_counts[p] += len(t_ev)
    max_seg = int(seg_counts.max()) if paths else 0
    z = np.zeros((paths, max_seg, 3))
    for p in range(paths):
        z[p, : seg_counts[p]] = rngmod.stream(spec.seed, rngmod.BROWNIAN, p).standard_normal(
            (seg_counts[p], 3)
        )
    state = np.tile(np.eye(2, dtype=complex), (paths, 1, 1))
    ptr = np.zeros(paths, dtype=int)
    eptr = np.zeros(paths, dtype=int)
    next_ev = np.array([e[0][0] if len(e[0]) else np.inf for e in events])
    idx_all = np.arange(paths)
    for k in range(k_steps):
        t0, t1 = k * dt, (k + 1) * dt
        special = next_ev <= t1 + 1e-15
        clean = idx_all[~special]
        if len(clean) and spec.c > 0.0:
            rot = su2_exp_batch(scale * np.sqrt(dt) * z[clean, ptr[clean]])
            state[clean] = state[clean] @ rot
        ptr[~special] += 1
        for p in idx_all[special]:
            t_ev, m_ev = events[p]
            tcur = t0
            while eptr[p] < len(t_ev) and t_ev[eptr[p]] <= t1 + 1e-15:
                s = t_ev[eptr[p]]
                if spec.c > 0.0:
                    state[p] = state[p] @ su2_exp(scale * np.sqrt(max(s - tcur, 0.0)) * z[p, ptr[p]])
                ptr[p] += 1
                state[p] = state[p] @ atom_mats[m_ev[eptr[p]]]
                eptr[p] += 1
                tcur = s
            if spec.c > 0.0:
                state[p] = state[p] @ su2_exp(scale * np.sqrt(max(t1 - tcur, 0.0)) * z[p, ptr[p]])
            ptr[p] += 1
            next_ev[p] = t_ev[eptr[p]] if eptr[p] < len(t_ev) else np.inf
        if (k + 1) % 32 == 0:
            state, _ = su2_renormalise(state)
    state, _ = su2_renormalise(state)
    return state


@dataclass
class SubordinatorEnsemble:
    times: np.ndarray
    values: np.ndarray  # (paths, len(times)), nondecreasing along axis 1
    spec: BernsteinSpec


def simulate_subordinator(
    spec: BernsteinSpec, horizon: float, dt: float, seed: int, paths: int
) -> SubordinatorEnsemble:
    """Ensemble of subordinator paths T(t) = c t + compound Poisson jumps.

    Requires an atom-only Bernstein spec (discretise densities with
    ``bernstein_atoms`` first); its Laplace exponent is then exactly the
    one being simulated.
    """
    if spec.density is not None:
        raise ValueError("discretise the density part first (bernstein_atoms)")
    k = int(round(horizon / dt))
    if abs(k * dt - horizon) > 1e-9 * max(1.0, horizon):
        raise ValueError("horizon must be an integer number of steps")
    grid = np.arange(k + 1) * dt
    lam = float(np.sum(spec.atom_masses)) if spec.atoms else 0.0
    sizes = spec.atom_y
    probs = spec.atom_masses / lam if lam > 0.0 else None
    values = np.empty((paths, k + 1))
    for p in range(paths):
        gen = rngmod.stream(seed, rngmod.SUBORDINATOR, p)
        base = spec.c * grid
        if lam > 0.0:
            count = int(gen.poisson(lam * horizon))
            t_ev = np.sort(gen.uniform(0.0, horizon, size=count))
            y_ev = sizes[gen.choice(len(sizes), size=count, p=probs)]
            cum = np.concatenate([[0.0], np.cumsum(y_ev)])
            base = base + cum[np.searchsorted(t_ev, grid, side="right")]
        values[p] = base
    return SubordinatorEnsemble(grid, values, spec)
