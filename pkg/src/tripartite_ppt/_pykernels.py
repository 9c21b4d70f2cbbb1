"""Pure-Python kernels. Used when the compiled extension is unavailable.

Every function here has a twin with the same signature in ``_ckernels.pyx``.
Subsystem codes: 0 = A, 1 = B, 2 = C. Basis index 4i+2j+k for |i_A j_B k_C>.
"""
import math

import numpy as np

OFF_TOL = 1e-14
MAX_SWEEPS = 100


def eigvalsh(m):
    """Cyclic complex Jacobi. Returns (ascending eigenvalues, sweeps used).

    ``m`` must already be Hermitian; only its upper triangle and the real part
    of its diagonal are trusted. ``sweeps == -1`` signals non-convergence.
    """
    n = m.shape[0]
    a = m.tolist()
    fro2 = 0.0
    for p in range(n):
        a[p][p] = complex(a[p][p].real, 0.0)
        for q in range(n):
            z = a[p][q]
            fro2 += z.real * z.real + z.imag * z.imag
    thresh = OFF_TOL * max(1.0, math.sqrt(fro2))

    for sweep in range(MAX_SWEEPS + 1):
        off2 = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                z = a[p][q]
                off2 += 2.0 * (z.real * z.real + z.imag * z.imag)
        if math.sqrt(off2) <= thresh:
            w = sorted(a[p][p].real for p in range(n))
            return np.array(w), sweep
        if sweep == MAX_SWEEPS:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                g = abs(apq)
                if g == 0.0:
                    continue
                app = a[p][p].real
                aqq = a[q][q].real
                tau = (aqq - app) / (2.0 * g)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                ph = apq / g
                # G = [[c, s*ph], [-s*conj(ph), c]] on the (p, q) plane; A <- G^H A G
                spq = s * ph
                sqp = -s * ph.conjugate()
                for k in range(n):
                    akp = a[k][p]
                    akq = a[k][q]
                    a[k][p] = akp * c + akq * sqp
                    a[k][q] = akp * spq + akq * c
                for k in range(n):
                    apk = a[p][k]
                    aqk = a[q][k]
                    a[p][k] = c * apk + sqp.conjugate() * aqk
                    a[q][k] = spq.conjugate() * apk + c * aqk
                a[p][p] = complex(app - t * g, 0.0)
                a[q][q] = complex(aqq + t * g, 0.0)
                a[p][q] = 0j
                a[q][p] = 0j
    return np.array(sorted(a[p][p].real for p in range(n))), -1


def partial_transpose_second(m):
    return np.ascontiguousarray(
        m.reshape(2, 2, 2, 2).transpose(0, 3, 2, 1).reshape(4, 4)
    )


_TRACE_SUBSCRIPTS = {
    0: "ijkist->jkst",
    1: "ijkrjt->ikrt",
    2: "ijkrsk->ijrs",
}


def partial_trace(rho, traced):
    t = rho.reshape((2,) * 6)
    return np.ascontiguousarray(np.einsum(_TRACE_SUBSCRIPTS[traced], t).reshape(4, 4))


def _idx(i, j, k):
    return 4 * i + 2 * j + k


def special_reduction(rho, kind):
    out = np.empty((4, 4), dtype=np.complex128)
    for i in range(2):
        for j in range(2):
            for r in range(2):
                for s in range(2):
                    if kind == 0:
                        v = rho[_idx(i, j, j), _idx(r, s, s)] + rho[
                            _idx(i, j, 1 - j), _idx(r, s, 1 - s)
                        ]
                    elif kind == 1:
                        v = rho[_idx(j, i, j), _idx(s, r, s)] + rho[
                            _idx(1 - j, i, j), _idx(1 - s, r, s)
                        ]
                    else:
                        v = rho[_idx(j, j, i), _idx(s, s, r)] + rho[
                            _idx(j, 1 - j, i), _idx(s, 1 - s, r)
                        ]
                    out[2 * i + j, 2 * r + s] = v
    return out
