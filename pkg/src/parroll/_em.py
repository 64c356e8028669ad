"""Euler-Maruyama inner loops, JIT-compiled.

Noise is precomputed in chunks outside the kernels so that each
realization's random stream is fixed by its seed, independent of chunking
and of how many realizations are integrated together.
"""

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def em_filter_chunk(state, alpha, k, dt, noise, keep_every, out, step0):
    """Advance 6-state filter paths one noise chunk.

    state : (nr, 6) in/out.  noise : (nr, n) standard normals.
    out : (nkeep_total, nr, 6); rows are written at global steps that are
    multiples of keep_every.  Returns the number of rows written.
    """
    nr, n = noise.shape
    amp = np.sqrt(np.pi) * k * np.sqrt(dt)
    wrote = 0
    for it in range(n):
        for r in range(nr):
            z = state[r, 0]
            for i in range(5):
                state[r, i] += dt * (state[r, i + 1] - alpha[i] * z)
            state[r, 5] += dt * (-alpha[5] * z)
            state[r, 2] += amp * noise[r, it]
        gstep = step0 + it + 1
        if gstep % keep_every == 0:
            row = gstep // keep_every - 1
            for r in range(nr):
                for i in range(6):
                    out[row, r, i] = state[r, i]
            wrote += 1
    return wrote


@njit(cache=True, nogil=True)
def em_roll_chunk(state, alpha, k, dt, noise, keep_every, out, step0,
                  beta1, beta3, w0sq, gm, gamma, rho, guard):
    """Advance 8-state roll/filter paths one noise chunk.

    State layout: x1 roll angle, x2 roll rate, x3..x8 filter states with
    noise injected into x5.  Returns (rows written, blow-up step); the
    blow-up step is -1 unless any |state| exceeded `guard`, in which case
    integration stops at that global step.
    """
    nr, n = noise.shape
    amp = np.sqrt(np.pi) * k * np.sqrt(dt)
    wrote = 0
    for it in range(n):
        for r in range(nr):
            x1 = state[r, 0]
            x2 = state[r, 1]
            x3 = state[r, 2]
            x1sq = x1 * x1
            acc = 0.0
            for j in range(4, -1, -1):
                acc = acc * x1sq + gamma[j]
            G = beta1 * x2 + beta3 * (x2 * x2 * x2) + w0sq * acc * x1
            F = 0.0
            for j in range(11, -1, -1):
                F = (F + rho[j]) * x3
            F *= w0sq / gm
            state[r, 0] += dt * x2
            state[r, 1] += dt * (-G - F * x1)
            for i in range(2, 7):
                state[r, i] += dt * (state[r, i + 1] - alpha[i - 2] * x3)
            state[r, 7] += dt * (-alpha[5] * x3)
            state[r, 4] += amp * noise[r, it]
        for r in range(nr):
            for i in range(8):
                if not np.isfinite(state[r, i]) or np.abs(state[r, i]) > guard:
                    return wrote, step0 + it + 1
        gstep = step0 + it + 1
        if gstep % keep_every == 0:
            row = gstep // keep_every - 1
            for r in range(nr):
                for i in range(8):
                    out[row, r, i] = state[r, i]
            wrote += 1
    return wrote, -1
