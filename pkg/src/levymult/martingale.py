"""Martingale transcripts of simulated paths and their Monte Carlo checks.

For a band-limited f the projected value process M(t) = P_{T-t} f at the
moving point is evaluated exactly (the semigroup acts in closed form on
coefficients).  The transform by a pair (A, psi) is accumulated from the
stochastic-integral form: left-point Brownian sums, exact jump terms at
exact event times, and the jump compensator integrated in closed form in
time on the tori (left-point in the state).  The transcript also carries
the stochastic-integral representation of M itself (the transform by
(I, 1) plus the initial value); its gap to the exact M is the
discretisation bias and is reported, not assumed zero.

Quadratic variations are accumulated termwise from the same increments,
so domination by the transform bounds holds path by path in floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import rng as rngmod
from .groups import (
    SU2,
    T1,
    T2,
    PeterWeylCoeffs,
    get_irrep,
    group_dim,
    haar_sample,
    identity_element,
    su2_irrep_batch,
)
from .linalg import expm
from .simulate import GroupProcessSpec, PathRecord, ensemble_final_states, simulate_path
from .symbols import central_alpha, generator_matrix


def _expm1c(z: np.ndarray) -> np.ndarray:
    """expm1 for complex arrays, accurate near zero."""
    z = np.asarray(z, dtype=complex)
    small = np.abs(z) < 1e-4
    out = np.exp(z) - 1.0
    zs = z[small]
    out[small] = zs * (1.0 + zs * (0.5 + zs * (1.0 / 6.0 + zs / 24.0)))
    return out


def _psi_values(psi, n_atoms: int) -> np.ndarray:
    arr = np.asarray(0.0 if psi is None else psi)
    if arr.ndim == 0:
        return np.full(n_atoms, complex(arr))
    if arr.shape != (n_atoms,):
        raise ValueError("per-atom psi table must match the atom count")
    return arr.astype(complex)


@dataclass
class MartingaleTranscript:
    """Sampled value process, its transform, and their quadratic variations."""

    times: np.ndarray
    m: np.ndarray  # exact P_{T-t} f along the path
    m_repr: np.ndarray  # stochastic-integral representation of m
    m_transform: np.ndarray
    qv: np.ndarray
    qv_transform: np.ndarray
    qv_cross: np.ndarray
    d_qv: np.ndarray
    d_qv_transform: np.ndarray
    d_qv_cross: np.ndarray
    sigma: object
    repr_gap: float


def check_differential_subordination(tr: MartingaleTranscript, bounds=None) -> float:
    """Largest increment violation; <= 0 means domination holds pathwise.

    Default: max_k (d[Y]_k - d[X]_k), nonpositive when the transform pair
    is bounded by one.  With bounds=(b, B): the non-symmetric form, the
    increments of [((B-b)/2) X] - [Y - ((b+B)/2) X].
    """
    if bounds is None:
        return float(np.max(tr.d_qv_transform - tr.d_qv, initial=-np.inf))
    b, bb = bounds
    half_w = (bb - b) / 2.0
    mid = (bb + b) / 2.0
    dom = half_w**2 * tr.d_qv - (tr.d_qv_transform - 2.0 * mid * tr.d_qv_cross + mid**2 * tr.d_qv)
    return float(np.max(-dom, initial=-np.inf))


# ---------------------------------------------------------------------------
# transform contexts (precomputed spectral data shared across an ensemble)


class _TorusContext:
    def __init__(self, spec: GroupProcessSpec, f: PeterWeylCoeffs):
        self.spec = spec
        self.dim = group_dim(spec.group)
        labels = f.labels()
        self.k = np.array([np.atleast_1d(lb) for lb in labels], dtype=float).reshape(
            len(labels), self.dim
        )
        self.fhat = np.array([complex(f.blocks[lb][0, 0]) for lb in labels])
        drift = np.asarray(spec.drift)
        alpha = 1j * (self.k @ drift) - spec.c * np.sum(self.k**2, axis=1)
        atoms = spec.jumps.atoms
        self.masses = np.array([m for _, m in atoms]) if atoms else np.zeros(0)
        if atoms:
            taus = np.stack([t for t, _ in atoms])
            phase = self.k @ taus.T  # (L, n_atoms)
            alpha = alpha + (np.exp(1j * phase) - 1.0) @ self.masses
            self.jumpfac = (np.exp(1j * phase) - 1.0).T.copy()  # (n_atoms, L)
        else:
            self.jumpfac = np.zeros((0, len(labels)), dtype=complex)
        self.alpha = alpha

    def final_value(self, path: PathRecord, sigma) -> complex:
        pos = np.asarray(sigma) + path.states[-1]
        return complex(np.exp(1j * (self.k @ pos)) @ self.fhat)

    def transcript(self, path: PathRecord, amatrix, psi, sigma) -> MartingaleTranscript:
        spec = self.spec
        horizon = spec.horizon
        grid = spec.grid_times
        n_steps = spec.n_steps
        times = path.times
        ds = np.diff(times)
        pos = np.asarray(sigma)[None, :] + path.states
        decay = np.exp(np.outer(horizon - times, self.alpha))
        e_mat = np.exp(1j * (pos @ self.k.T))
        ew = e_mat * (decay * self.fhat[None, :])
        m_node = ew.sum(axis=1)
        grads = ew @ (1j * self.k)  # (S+1, d)
        v = np.sqrt(2.0 * spec.c) * grads

        n_atoms = len(spec.jumps.atoms)
        has_jumps = n_atoms > 0
        if has_jumps:
            # closed-form time integral of the decay over each segment
            ratio = np.where(
                np.abs(self.alpha) > 0.0,
                _expm1c(ds[:, None] * self.alpha[None, :]) / np.where(self.alpha == 0, 1.0, self.alpha)[None, :],
                ds[:, None].astype(complex),
            )
            wint = decay[1:] * ratio * self.fhat[None, :]
            comp_base = np.einsum("sl,al->sa", e_mat[:-1] * wint, self.jumpfac)
            ev_rows = np.flatnonzero(path.kinds == 1)
            pre_pos = np.asarray(sigma)[None, :] + path.prestates[ev_rows]
            e_pre = np.exp(1j * (pre_pos @ self.k.T))
            w_ev = decay[ev_rows] * self.fhat[None, :]
            dp_ev = np.einsum("el,el->e", e_pre * w_ev, self.jumpfac[path.marks[ev_rows]])
            # a jump exactly at a grid time is processed after the diffusion
            # substep, i.e. it opens the following step
            ev_steps = np.clip(
                np.searchsorted(grid, times[ev_rows], side="right") - 1, 0, n_steps - 1
            )
        seg_steps = np.clip(np.searchsorted(grid, times[:-1], side="right") - 1, 0, n_steps - 1)

        def accumulate(a_use, psi_use):
            va = v @ np.asarray(a_use, dtype=complex).T
            dm_c = np.einsum("sd,sd->s", va[:-1], path.db)
            dqv = np.sum(np.abs(v[:-1]) ** 2, axis=1) * ds
            dqv_t = np.sum(np.abs(va[:-1]) ** 2, axis=1) * ds
            dqv_x = np.real(np.einsum("sd,sd->s", va[:-1], np.conj(v[:-1]))) * ds
            inc = np.zeros(n_steps, dtype=complex)
            d_qv = np.zeros(n_steps)
            d_qv_t = np.zeros(n_steps)
            d_qv_c = np.zeros(n_steps)
            np.add.at(inc, seg_steps, dm_c)
            np.add.at(d_qv, seg_steps, dqv)
            np.add.at(d_qv_t, seg_steps, dqv_t)
            np.add.at(d_qv_c, seg_steps, dqv_x)
            if has_jumps:
                psi_vals = _psi_values(psi_use, n_atoms)
                comp = comp_base @ (self.masses * psi_vals)
                np.add.at(inc, seg_steps, -comp)
                jump_t = psi_vals[path.marks[ev_rows]] * dp_ev
                np.add.at(inc, ev_steps, jump_t)
                np.add.at(d_qv, ev_steps, np.abs(dp_ev) ** 2)
                np.add.at(d_qv_t, ev_steps, np.abs(jump_t) ** 2)
                np.add.at(d_qv_c, ev_steps, np.real(np.conj(dp_ev) * jump_t))
            return inc, d_qv, d_qv_t, d_qv_c

        eye = np.eye(self.dim)
        repr_inc, d_qv, _, _ = accumulate(eye, 1.0)
        a_use = np.zeros((self.dim, self.dim)) if amatrix is None else np.atleast_2d(amatrix)
        tr_inc, _, d_qv_t, d_qv_c = accumulate(a_use, psi)

        grid_rows = path.grid_rows
        m_exact = m_node[grid_rows]
        m_repr = m_exact[0] + np.concatenate([[0.0], np.cumsum(repr_inc)])
        m_tr = np.concatenate([[0.0], np.cumsum(tr_inc)])
        return MartingaleTranscript(
            times=grid,
            m=m_exact,
            m_repr=m_repr,
            m_transform=m_tr,
            qv=np.concatenate([[0.0], np.cumsum(d_qv)]),
            qv_transform=np.concatenate([[0.0], np.cumsum(d_qv_t)]),
            qv_cross=np.concatenate([[0.0], np.cumsum(d_qv_c)]),
            d_qv=d_qv,
            d_qv_transform=d_qv_t,
            d_qv_cross=d_qv_c,
            sigma=np.asarray(sigma),
            repr_gap=float(np.max(np.abs(m_exact - m_repr))),
        )


class _Su2Context:
    def __init__(self, spec: GroupProcessSpec, f: PeterWeylCoeffs):
        self.spec = spec
        self.irreps = [get_irrep(SU2, lb) for lb in f.labels()]
        self.fblocks = [np.asarray(f.blocks[pi.label], dtype=complex) for pi in self.irreps]
        self.lmats = [generator_matrix(spec.c, spec.jumps, pi) for pi in self.irreps]
        self.tau_reps = [
            [su2_irrep_batch(pi, np.asarray(tau, dtype=complex)) for tau, _ in spec.jumps.atoms]
            for pi in self.irreps
        ]
        self.masses = np.array([m for _, m in spec.jumps.atoms]) if spec.jumps.atoms else np.zeros(0)
        # eigendecompose each generator block for fast decay evaluation
        self._eig = []
        for lmat in self.lmats:
            w, p = np.linalg.eig(lmat)
            cond = np.linalg.cond(p)
            self._eig.append((w, p, np.linalg.inv(p)) if cond < 1e8 else None)

    def _decay(self, idx: int, s: np.ndarray) -> np.ndarray:
        """e^{s L} for an array of times s, shape (len(s), d, d)."""
        eig = self._eig[idx]
        if eig is not None:
            w, p, pinv = eig
            return np.einsum("ab,sb,bc->sac", p, np.exp(np.outer(s, w)), pinv)
        return np.stack([expm(t * self.lmats[idx]) for t in s])

    def final_value(self, path: PathRecord, sigma) -> complex:
        g = np.asarray(sigma) @ path.states[-1]
        total = 0.0 + 0.0j
        for pi, fb in zip(self.irreps, self.fblocks):
            rep = su2_irrep_batch(pi, g)
            total += pi.dim * np.trace(fb @ rep)
        return complex(total)

    def transcript(self, path: PathRecord, amatrix, psi, sigma) -> MartingaleTranscript:
        spec = self.spec
        grid = spec.grid_times
        n_steps = spec.n_steps
        times = path.times
        ds = np.diff(times)
        n_nodes = len(times)
        post = np.asarray(sigma)[None, :, :] @ path.states
        ev_rows = np.flatnonzero(path.kinds == 1)
        pre = np.asarray(sigma)[None, :, :] @ path.prestates[ev_rows]
        n_atoms = len(spec.jumps.atoms)

        m_node = np.zeros(n_nodes, dtype=complex)
        grads = np.zeros((n_nodes, 3), dtype=complex)
        comp_atom = np.zeros((n_nodes - 1, n_atoms), dtype=complex)
        dp_atom = np.zeros(len(ev_rows), dtype=complex)
        for idx, (pi, fb) in enumerate(zip(self.irreps, self.fblocks)):
            wmat = self._decay(idx, spec.horizon - times)  # (S+1, d, d)
            coef = wmat @ fb
            rep_post = su2_irrep_batch(pi, post)
            m_node += pi.dim * np.einsum("sab,sba->s", coef, rep_post)
            for i, gen in enumerate(pi.generators):
                grads[:, i] += pi.dim * np.einsum("ab,sbc,sca->s", gen, coef, rep_post)
            if n_atoms:
                for a, rep_tau in enumerate(self.tau_reps[idx]):
                    r_a = rep_tau - np.eye(pi.dim)
                    comp_atom[:, a] += pi.dim * np.einsum(
                        "sab,sbc,ca->s", coef[:-1], rep_post[:-1], r_a
                    )
                if len(ev_rows):
                    rep_pre = su2_irrep_batch(pi, pre)
                    for a, rep_tau in enumerate(self.tau_reps[idx]):
                        rows = path.marks[ev_rows] == a
                        if np.any(rows):
                            r_a = rep_tau - np.eye(pi.dim)
                            dp_atom[rows] += pi.dim * np.einsum(
                                "sab,sbc,ca->s", coef[ev_rows][rows], rep_pre[rows], r_a
                            )
        v = np.sqrt(2.0 * spec.c) * grads
        seg_steps = np.clip(np.searchsorted(grid, times[:-1], side="right") - 1, 0, n_steps - 1)
        ev_steps = np.clip(
            np.searchsorted(grid, times[ev_rows], side="right") - 1, 0, n_steps - 1
        )

        def accumulate(a_use, psi_use):
            va = v @ np.asarray(a_use, dtype=complex).T
            dm_c = np.einsum("sd,sd->s", va[:-1], path.db)
            dqv = np.sum(np.abs(v[:-1]) ** 2, axis=1) * ds
            dqv_t = np.sum(np.abs(va[:-1]) ** 2, axis=1) * ds
            dqv_x = np.real(np.einsum("sd,sd->s", va[:-1], np.conj(v[:-1]))) * ds
            inc = np.zeros(n_steps, dtype=complex)
            d_qv = np.zeros(n_steps)
            d_qv_t = np.zeros(n_steps)
            d_qv_c = np.zeros(n_steps)
            np.add.at(inc, seg_steps, dm_c)
            np.add.at(d_qv, seg_steps, dqv)
            np.add.at(d_qv_t, seg_steps, dqv_t)
            np.add.at(d_qv_c, seg_steps, dqv_x)
            if n_atoms:
                psi_vals = _psi_values(psi_use, n_atoms)
                comp = (comp_atom * ds[:, None]) @ (self.masses * psi_vals)
                np.add.at(inc, seg_steps, -comp)
                if len(ev_rows):
                    jump_t = psi_vals[path.marks[ev_rows]] * dp_atom
                    np.add.at(inc, ev_steps, jump_t)
                    np.add.at(d_qv, ev_steps, np.abs(dp_atom) ** 2)
                    np.add.at(d_qv_t, ev_steps, np.abs(jump_t) ** 2)
                    np.add.at(d_qv_c, ev_steps, np.real(np.conj(dp_atom) * jump_t))
            return inc, d_qv, d_qv_t, d_qv_c

        repr_inc, d_qv, _, _ = accumulate(np.eye(3), 1.0)
        a_use = np.zeros((3, 3)) if amatrix is None else np.atleast_2d(amatrix)
        tr_inc, _, d_qv_t, d_qv_c = accumulate(a_use, psi)

        grid_rows = path.grid_rows
        m_exact = m_node[grid_rows]
        m_repr = m_exact[0] + np.concatenate([[0.0], np.cumsum(repr_inc)])
        m_tr = np.concatenate([[0.0], np.cumsum(tr_inc)])
        return MartingaleTranscript(
            times=grid,
            m=m_exact,
            m_repr=m_repr,
            m_transform=m_tr,
            qv=np.concatenate([[0.0], np.cumsum(d_qv)]),
            qv_transform=np.concatenate([[0.0], np.cumsum(d_qv_t)]),
            qv_cross=np.concatenate([[0.0], np.cumsum(d_qv_c)]),
            d_qv=d_qv,
            d_qv_transform=d_qv_t,
            d_qv_cross=d_qv_c,
            sigma=np.asarray(sigma),
            repr_gap=float(np.max(np.abs(m_exact - m_repr))),
        )


def transform_context(spec: GroupProcessSpec, f: PeterWeylCoeffs):
    """Precompute the spectral data shared by every transcript of (spec, f)."""
    if f.group != spec.group:
        raise ValueError("coefficient table group mismatch")
    if spec.group in (T1, T2):
        return _TorusContext(spec, f)
    return _Su2Context(spec, f)


def martingale_transcript(
    path: PathRecord,
    f: PeterWeylCoeffs,
    amatrix,
    psi,
    sigma=None,
    ctx=None,
) -> MartingaleTranscript:
    """Transcript of one path: exact M, its representation, transform, QVs."""
    if ctx is None:
        ctx = transform_context(path.spec, f)
    if sigma is None:
        sigma = identity_element(path.spec.group)
    return ctx.transcript(path, amatrix, psi, sigma)


# ---------------------------------------------------------------------------
# ensembles and estimators


@dataclass
class TransformEnsemble:
    """Final values over an ensemble: x = M_T (exact), y = transform at T."""

    x_final: np.ndarray
    y_final: np.ndarray
    m_initial: np.ndarray
    transcripts: Optional[list] = None


def simulate_transform_ensemble(
    spec: GroupProcessSpec,
    f: PeterWeylCoeffs,
    amatrix,
    psi,
    paths: int,
    seed: Optional[int] = None,
    haar_start: bool = True,
    keep_transcripts: bool = False,
) -> TransformEnsemble:
    """Simulate paths, transcribe them, and collect the final values.

    Starting points are Haar samples (their own stream per path) unless
    haar_start is False, in which case all paths start at the identity.
    """
    seed = spec.seed if seed is None else seed
    ctx = transform_context(spec, f)
    x = np.zeros(paths, dtype=complex)
    y = np.zeros(paths, dtype=complex)
    m0 = np.zeros(paths, dtype=complex)
    kept = [] if keep_transcripts else None
    for i in range(paths):
        path = simulate_path(spec, i)
        if haar_start:
            sigma = haar_sample(spec.group, rngmod.stream(seed, rngmod.HAAR, i), 1)[0]
        else:
            sigma = identity_element(spec.group)
        tr = ctx.transcript(path, amatrix, psi, sigma)
        x[i] = tr.m[-1]
        y[i] = tr.m_transform[-1]
        m0[i] = tr.m[0]
        if kept is not None:
            kept.append(tr)
    return TransformEnsemble(x, y, m0, kept)


def empirical_burkholder(ensemble: TransformEnsemble, p: float):
    """(ratio, jackknife stderr) for |transform|_p / |M_T|_p over the ensemble."""
    num = np.abs(ensemble.y_final) ** p
    den = np.abs(ensemble.x_final) ** p
    n = len(num)
    if n < 2 or np.sum(den) == 0.0:
        raise ValueError("ensemble too small or zero denominator")
    ratio = float(np.mean(num) ** (1.0 / p) / np.mean(den) ** (1.0 / p))
    loo_num = (np.sum(num) - num) / (n - 1)
    loo_den = (np.sum(den) - den) / (n - 1)
    if np.any(loo_den == 0.0):
        raise ValueError("zero denominator in jackknife")
    loo = loo_num ** (1.0 / p) / loo_den ** (1.0 / p)
    stderr = float(np.sqrt((n - 1) / n * np.sum((loo - np.mean(loo)) ** 2)))
    return ratio, stderr


@dataclass
class ProjectionEstimate:
    mc_value: float
    stderr: float
    deterministic: float
    paths: int


def projection_deterministic(
    f: PeterWeylCoeffs, g: PeterWeylCoeffs, amatrix, psi, spec: GroupProcessSpec
) -> complex:
    """Spectral value of the pairing functional at finite horizon (tori).

    sum_k [2c k.Ak + 2 sum_a mass_a psi_a (1 - cos k.tau_a)]
          * int_0^T e^{2 s Re alpha_k} ds * fhat(k) ghat(-k)
    """
    if spec.group not in (T1, T2):
        raise ValueError("deterministic projection values are computed on the tori")
    ctx = _TorusContext(spec, f)
    d = ctx.dim
    a_use = np.zeros((d, d)) if amatrix is None else np.atleast_2d(amatrix)
    psi_vals = _psi_values(psi, len(spec.jumps.atoms))
    total = 0.0 + 0.0j
    for lb, kvec, fk, al in zip(
        [tuple(np.atleast_1d(lb)) for lb in f.labels()], ctx.k, ctx.fhat, ctx.alpha
    ):
        neg = tuple(-int(x) for x in lb)
        glabel = neg[0] if spec.group == T1 else neg
        gb = g.blocks.get(glabel)
        if gb is None or fk == 0.0:
            continue
        quad = 2.0 * spec.c * complex(kvec @ (a_use @ kvec))
        jump = 0.0 + 0.0j
        for (tau, mass), pv in zip(spec.jumps.atoms, psi_vals):
            jump += 2.0 * mass * pv * (1.0 - np.cos(float(kvec @ tau)))
        re2 = 2.0 * float(np.real(al))
        if re2 == 0.0:
            weight = spec.horizon
        else:
            weight = float(np.expm1(re2 * spec.horizon) / re2)
        total += (quad + jump) * weight * fk * complex(gb[0, 0])
    return complex(total)


def projection_mc_estimate(
    f: PeterWeylCoeffs,
    g: PeterWeylCoeffs,
    amatrix,
    psi,
    spec: GroupProcessSpec,
    paths: int,
    seed: Optional[int] = None,
) -> ProjectionEstimate:
    """Haar-and-path average of transform_f(T) * M_g(T) against its spectral value."""
    seed = spec.seed if seed is None else seed
    ctx_f = transform_context(spec, f)
    ctx_g = transform_context(spec, g)
    vals = np.zeros(paths, dtype=complex)
    for i in range(paths):
        path = simulate_path(spec, i)
        sigma = haar_sample(spec.group, rngmod.stream(seed, rngmod.HAAR, i), 1)[0]
        tr = ctx_f.transcript(path, amatrix, psi, sigma)
        vals[i] = tr.m_transform[-1] * ctx_g.final_value(path, sigma)
    det = projection_deterministic(f, g, amatrix, psi, spec)
    mc = complex(np.mean(vals))
    stderr = float(np.std(vals.real, ddof=1) / np.sqrt(paths))
    stderr_im = float(np.std(vals.imag, ddof=1) / np.sqrt(paths))
    return ProjectionEstimate(
        mc_value=float(mc.real),
        stderr=float(np.hypot(stderr, stderr_im)),
        deterministic=float(det.real),
        paths=paths,
    )


# ---------------------------------------------------------------------------
# empirical characteristic function of the path law


def empirical_char(states: np.ndarray, pi) -> tuple:
    """(mean, stderr) of pi(phi(t)) over an ensemble of final states.

    stderr is entrywise: std of the complex entries over paths divided by
    sqrt(paths).
    """
    if pi.group in (T1, T2):
        k = np.array([gen[0, 0].imag for gen in pi.generators])
        reps = np.exp(1j * (np.atleast_2d(states) @ k))[:, None, None]
    else:
        reps = su2_irrep_batch(pi, states)
    mean = reps.mean(axis=0)
    n = reps.shape[0]
    var = np.var(reps.real, axis=0) + np.var(reps.imag, axis=0)
    return mean, np.sqrt(var / n)


@dataclass
class CharReport:
    """Empirical transform of the law at the horizon against both oracles."""

    label: object
    mean: np.ndarray
    stderr: np.ndarray
    alpha: complex
    scalar_oracle: np.ndarray  # e^{t alpha} I, exact only for central data
    matrix_oracle: np.ndarray  # e^{t L(pi)}, exact for any finite-activity data
    is_central: bool

    def max_sigmas(self, oracle: str = "matrix") -> float:
        """Largest entrywise |mean - oracle| in stderr units."""
        target = self.matrix_oracle if oracle == "matrix" else self.scalar_oracle
        err = np.abs(self.mean - target)
        floor = 1e-12 + np.max(self.stderr) * 1e-6
        return float(np.max(err / np.maximum(self.stderr, floor)))


def central_char_report(spec: GroupProcessSpec, pis, paths: int) -> list:
    """Empirical characteristic matrices with their two deterministic oracles.

    The scalar oracle e^{t alpha} I applies when the jump measure is
    central (flagged, not enforced); the matrix exponential of the
    generator block is exact for any finite-activity measure.
    """
    states = ensemble_final_states(spec, paths)
    t = spec.horizon
    central = spec.jumps.is_central()
    out = []
    for pi in pis:
        mean, stderr = empirical_char(states, pi)
        alpha = central_alpha(spec.c, spec.jumps, pi)
        scalar = np.exp(t * alpha) * np.eye(pi.dim)
        matrix = expm(t * generator_matrix(spec.c, spec.jumps, pi))
        out.append(CharReport(pi.label, mean, stderr, alpha, scalar, matrix, central))
    return out
