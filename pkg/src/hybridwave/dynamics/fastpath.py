"""Compiled hot path for whole-site response evaluation.

Optimization runs call the statistical-linearization pipeline hundreds of
thousands of times, so the per-state loop from `response.linearize` is
restated here as a numba kernel over (sea state, frequency) with the three
absorber DOFs eliminated through a Schur complement (their rows are diagonal:
no absorber/absorber hydrodynamic coupling) and the remaining 3x3 platform
system solved by cofactors. The absorber pair at x = -L/2 is computed once
and counted twice; that symmetry is exact in the model.

The iteration order, update damping, and convergence checks replicate
`response.linearize` decision for decision, so results agree with the
reference path to solver round-off. `test_response.py` enforces this.

If numba is unavailable the package falls back to the reference path.
"""
from __future__ import annotations

import numpy as np

try:  # pragma: no cover - exercised implicitly
    from numba import njit

    FAST_AVAILABLE = True
except Exception:  # pragma: no cover
    FAST_AVAILABLE = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        if args and callable(args[0]):
            return args[0]
        return wrap

GAUSS_DRAG = float(np.sqrt(8.0 / np.pi))


@njit(cache=True, fastmath=True)
def _abs2(z):
    return z.real * z.real + z.imag * z.imag


@njit(cache=True, fastmath=True)
def _linearize_kernel(
    omega,
    wts,
    s_wave,
    s_wind,
    p00,
    p02,
    p11,
    p22,
    zwb,
    kap,
    qp0,
    qp1,
    qp2,
    qw1,
    qw2,
    r0,
    r2,
    x1,
    x2,
    lever,
    b_pto,
    cds,
    tol,
    max_iter,
    relax,
    sigma_q,
    sigma_vel,
    sigma_rel,
    sigma_nac,
    power,
    conv,
    iters,
):
    ns = s_wave.shape[0]
    nw = omega.shape[0]
    for s in range(ns):
        bv0 = bv1 = bv2 = bv3 = bv4 = 0.0
        prev = np.zeros(8)
        have_prev = False
        converged = False
        it_count = 0
        a0 = a1 = a2 = a3 = a4 = ar1 = ar2 = an = 0.0
        for it in range(1, max_iter + 1):
            it_count = it
            a0 = a1 = a2 = a3 = a4 = ar1 = ar2 = an = 0.0
            for w in range(nw):
                bw = wts[w] * s_wave[s, w]
                bu = wts[w] * s_wind[s, w]
                if bw == 0.0 and bu == 0.0:
                    continue
                om = omega[w]
                om2 = om * om
                k = kap[s, w]
                zw1 = zwb[s, w] + 1j * (om * bv3)
                zw2 = zwb[s, w] + 1j * (om * bv4)
                w1 = 1.0 / zw1
                w2 = 1.0 / zw2
                k2 = k * k
                t1 = k2 * w1
                t2 = k2 * w2
                s00 = p00[s, w] + 1j * (om * bv0)
                s02 = p02[s, w]
                s11 = p11[s, w] + 1j * (om * bv1) - (t1 + 2.0 * t2)
                s12 = t1 * x1 + 2.0 * t2 * x2
                s22 = p22[s, w] + 1j * (om * bv2) - (t1 * x1 * x1 + 2.0 * t2 * x2 * x2)
                c00 = s11 * s22 - s12 * s12
                c01 = s02 * s12
                c02 = -s02 * s11
                c11 = s00 * s22 - s02 * s02
                c12 = -s00 * s12
                c22 = s00 * s11
                det = s00 * c00 + s02 * c02
                idet = 1.0 / det
                kw1 = k * w1
                kw2 = k * w2
                v1 = kw1 * qw1[w]
                v2 = kw2 * qw2[w]
                qe0 = qp0[w]
                qe1 = qp1[w] + (v1 + 2.0 * v2)
                qe2 = qp2[w] - (v1 * x1 + 2.0 * v2 * x2)
                g0 = r0[s]
                g2 = r2[s]
                b0 = (c00 * qe0 + c01 * qe1 + c02 * qe2) * idet
                b1 = (c01 * qe0 + c11 * qe1 + c12 * qe2) * idet
                b2 = (c02 * qe0 + c12 * qe1 + c22 * qe2) * idet
                u0 = (c00 * g0 + c02 * g2) * idet
                u1 = (c01 * g0 + c12 * g2) * idet
                u2 = (c02 * g0 + c22 * g2) * idet
                h1 = w1 * (qw1[w] - k * (x1 * b2 - b1))
                h2 = w2 * (qw2[w] - k * (x2 * b2 - b1))
                y1 = -kw1 * (x1 * u2 - u1)
                y2 = -kw2 * (x2 * u2 - u1)
                wv = om2 * bw
                uv = om2 * bu
                a0 += _abs2(b0) * wv + _abs2(u0) * uv
                a1 += _abs2(b1) * wv + _abs2(u1) * uv
                a2 += _abs2(b2) * wv + _abs2(u2) * uv
                a3 += _abs2(h1) * wv + _abs2(y1) * uv
                a4 += _abs2(h2) * wv + _abs2(y2) * uv
                rw1 = h1 - b1 + x1 * b2
                ru1 = y1 - u1 + x1 * u2
                rw2 = h2 - b1 + x2 * b2
                ru2 = y2 - u1 + x2 * u2
                ar1 += _abs2(rw1) * wv + _abs2(ru1) * uv
                ar2 += _abs2(rw2) * wv + _abs2(ru2) * uv
                ncw = b0 + lever * b2
                ncu = u0 + lever * u2
                an += _abs2(ncw) * om2 * wv + _abs2(ncu) * om2 * uv
            sv0 = np.sqrt(a0)
            sv1 = np.sqrt(a1)
            sv2 = np.sqrt(a2)
            sv3 = np.sqrt(a3)
            sv4 = np.sqrt(a4)
            sr1 = np.sqrt(ar1)
            sr2 = np.sqrt(ar2)
            sn = np.sqrt(an)
            t0 = GAUSS_DRAG * sv0 * cds[0]
            tg1 = GAUSS_DRAG * sv1 * cds[1]
            tg2 = GAUSS_DRAG * sv2 * cds[2]
            tg3 = GAUSS_DRAG * sv3 * cds[3]
            tg4 = GAUSS_DRAG * sv4 * cds[4]
            if t0 == bv0 and tg1 == bv1 and tg2 == bv2 and tg3 == bv3 and tg4 == bv4:
                converged = True
                break
            if have_prev:
                dmax = 0.0
                cur0 = sv0
                vals = (sv0, sv1, sv2, sv3, sv4, sr1, sr2, sn)
                for j in range(8):
                    den = prev[j]
                    if den < 1e-300:
                        den = 1e-300
                    d = abs(vals[j] - prev[j]) / den
                    if d > dmax:
                        dmax = d
                if dmax < tol:
                    converged = True
                    break
            bv0 += relax * (t0 - bv0)
            bv1 += relax * (tg1 - bv1)
            bv2 += relax * (tg2 - bv2)
            bv3 += relax * (tg3 - bv3)
            bv4 += relax * (tg4 - bv4)
            prev[0] = sv0
            prev[1] = sv1
            prev[2] = sv2
            prev[3] = sv3
            prev[4] = sv4
            prev[5] = sr1
            prev[6] = sr2
            prev[7] = sn
            have_prev = True
        # displacement sigmas from the converged coefficients
        d0 = d1 = d2 = d3 = d4 = 0.0
        for w in range(nw):
            bw = wts[w] * s_wave[s, w]
            bu = wts[w] * s_wind[s, w]
            if bw == 0.0 and bu == 0.0:
                continue
            om = omega[w]
            k = kap[s, w]
            zw1 = zwb[s, w] + 1j * (om * bv3)
            zw2 = zwb[s, w] + 1j * (om * bv4)
            w1 = 1.0 / zw1
            w2 = 1.0 / zw2
            k2 = k * k
            t1 = k2 * w1
            t2 = k2 * w2
            s00 = p00[s, w] + 1j * (om * bv0)
            s02 = p02[s, w]
            s11 = p11[s, w] + 1j * (om * bv1) - (t1 + 2.0 * t2)
            s12 = t1 * x1 + 2.0 * t2 * x2
            s22 = p22[s, w] + 1j * (om * bv2) - (t1 * x1 * x1 + 2.0 * t2 * x2 * x2)
            c00 = s11 * s22 - s12 * s12
            c01 = s02 * s12
            c02 = -s02 * s11
            c11 = s00 * s22 - s02 * s02
            c12 = -s00 * s12
            c22 = s00 * s11
            det = s00 * c00 + s02 * c02
            idet = 1.0 / det
            kw1 = k * w1
            kw2 = k * w2
            v1 = kw1 * qw1[w]
            v2 = kw2 * qw2[w]
            qe0 = qp0[w]
            qe1 = qp1[w] + (v1 + 2.0 * v2)
            qe2 = qp2[w] - (v1 * x1 + 2.0 * v2 * x2)
            g0 = r0[s]
            g2 = r2[s]
            b0 = (c00 * qe0 + c01 * qe1 + c02 * qe2) * idet
            b1 = (c01 * qe0 + c11 * qe1 + c12 * qe2) * idet
            b2 = (c02 * qe0 + c12 * qe1 + c22 * qe2) * idet
            u0 = (c00 * g0 + c02 * g2) * idet
            u1 = (c01 * g0 + c12 * g2) * idet
            u2 = (c02 * g0 + c22 * g2) * idet
            h1 = w1 * (qw1[w] - k * (x1 * b2 - b1))
            h2 = w2 * (qw2[w] - k * (x2 * b2 - b1))
            y1 = -kw1 * (x1 * u2 - u1)
            y2 = -kw2 * (x2 * u2 - u1)
            d0 += _abs2(b0) * bw + _abs2(u0) * bu
            d1 += _abs2(b1) * bw + _abs2(u1) * bu
            d2 += _abs2(b2) * bw + _abs2(u2) * bu
            d3 += _abs2(h1) * bw + _abs2(y1) * bu
            d4 += _abs2(h2) * bw + _abs2(y2) * bu
        sigma_q[s, 0] = np.sqrt(d0)
        sigma_q[s, 1] = np.sqrt(d1)
        sigma_q[s, 2] = np.sqrt(d2)
        sigma_q[s, 3] = np.sqrt(d3)
        sigma_q[s, 4] = np.sqrt(d4)
        sigma_vel[s, 0] = np.sqrt(a0)
        sigma_vel[s, 1] = np.sqrt(a1)
        sigma_vel[s, 2] = np.sqrt(a2)
        sigma_vel[s, 3] = np.sqrt(a3)
        sigma_vel[s, 4] = np.sqrt(a4)
        sigma_rel[s, 0] = np.sqrt(ar1)
        sigma_rel[s, 1] = np.sqrt(ar2)
        sigma_nac[s] = np.sqrt(an)
        power[s] = b_pto[s] * (ar1 + 2.0 * ar2)
        conv[s] = 1 if converged else 0
        iters[s] = it_count


@njit(cache=True, fastmath=True)
def _isolated_wec_kernel(
    omega,
    wts,
    s_wave,
    zw0,
    exc,
    k_pto,
    b_pto,
    cd,
    tol,
    max_iter,
    relax,
    power,
    sigma_vel,
    conv,
    iters,
):
    ns = s_wave.shape[0]
    nw = omega.shape[0]
    for s in range(ns):
        bv = 0.0
        prev = 0.0
        have_prev = False
        converged = False
        it_count = 0
        acc = 0.0
        for it in range(1, max_iter + 1):
            it_count = it
            acc = 0.0
            for w in range(nw):
                bw = wts[w] * s_wave[s, w]
                if bw == 0.0:
                    continue
                om = omega[w]
                z = zw0[w] + (k_pto[s] + 1j * (om * (b_pto[s] + bv)))
                h = exc[w] / z
                acc += _abs2(h) * om * om * bw
            sig = np.sqrt(acc)
            tgt = GAUSS_DRAG * sig * cd
            if tgt == bv:
                converged = True
                break
            if have_prev:
                den = prev
                if den < 1e-300:
                    den = 1e-300
                if abs(sig - prev) / den < tol:
                    converged = True
                    break
            bv += relax * (tgt - bv)
            prev = sig
            have_prev = True
        power[s] = b_pto[s] * acc
        sigma_vel[s] = np.sqrt(acc)
        conv[s] = 1 if converged else 0
        iters[s] = it_count


def linearize_site_fast(arrays: dict) -> dict:
    """Run the site kernel; see objectives.evaluate for array preparation."""
    ns = arrays["s_wave"].shape[0]
    sigma_q = np.empty((ns, 5))
    sigma_vel = np.empty((ns, 5))
    sigma_rel = np.empty((ns, 2))
    sigma_nac = np.empty(ns)
    power = np.empty(ns)
    conv = np.empty(ns, dtype=np.uint8)
    iters = np.empty(ns, dtype=np.int32)
    _linearize_kernel(
        arrays["omega"],
        arrays["wts"],
        arrays["s_wave"],
        arrays["s_wind"],
        arrays["p00"],
        arrays["p02"],
        arrays["p11"],
        arrays["p22"],
        arrays["zwb"],
        arrays["kap"],
        arrays["qp0"],
        arrays["qp1"],
        arrays["qp2"],
        arrays["qw1"],
        arrays["qw2"],
        arrays["r0"],
        arrays["r2"],
        arrays["x1"],
        arrays["x2"],
        arrays["lever"],
        arrays["b_pto"],
        arrays["cds"],
        arrays["tol"],
        arrays["max_iter"],
        arrays["relax"],
        sigma_q,
        sigma_vel,
        sigma_rel,
        sigma_nac,
        power,
        conv,
        iters,
    )
    return dict(
        sigma_q=sigma_q,
        sigma_vel=sigma_vel,
        sigma_rel=sigma_rel,
        sigma_nac=sigma_nac,
        power=power,
        converged=conv.astype(bool),
        iterations=iters,
    )


def isolated_wec_fast(
    omega, wts, s_wave, zw0, exc, k_pto, b_pto, cd, tol, max_iter, relax
) -> dict:
    ns = s_wave.shape[0]
    power = np.empty(ns)
    sigma_vel = np.empty(ns)
    conv = np.empty(ns, dtype=np.uint8)
    iters = np.empty(ns, dtype=np.int32)
    _isolated_wec_kernel(
        omega,
        wts,
        s_wave,
        zw0,
        exc,
        k_pto,
        b_pto,
        cd,
        tol,
        max_iter,
        relax,
        power,
        sigma_vel,
        conv,
        iters,
    )
    return dict(
        power=power,
        sigma_vel=sigma_vel,
        converged=conv.astype(bool),
        iterations=iters,
    )
