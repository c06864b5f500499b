"""The ten bivariate test functions of Franke and Renka-Brown on ``[0, 1]^2``.

Sources:

- R. Franke, "A critical comparison of some methods for interpolation of
  scattered data", Naval Postgraduate School, Tech. Rep. NPS-53-79-003, 1979.
- R. J. Renka and R. Brown, "Algorithm 792: accuracy tests of ACM
  algorithms for interpolation of scattered data in the plane",
  ACM Trans. Math. Softw. 25(1):78-94, 1999.

Transcribed as in the Renka-Brown test package (``F1`` is Franke's
function, ``F2`` cliff, ``F3`` saddle, ``F4`` gentle, ``F5`` steep,
``F6`` sphere, ``F7`` trig, ``F8`` Gaussian ridge pair, ``F9`` cloverleaf
asymmetric peak/valley, ``F10`` cosine peak):

    F1  = 3/4 exp(-((9x-2)^2 + (9y-2)^2)/4) + 3/4 exp(-(9x+1)^2/49 - (9y+1)/10)
          + 1/2 exp(-((9x-7)^2 + (9y-3)^2)/4) - 1/5 exp(-(9x-4)^2 - (9y-7)^2)
    F2  = (tanh(9y - 9x) + 1) / 9
    F3  = (1.25 + cos(5.4y)) / (6 (1 + (3x-1)^2))
    F4  = exp(-81/16 ((x-1/2)^2 + (y-1/2)^2)) / 3
    F5  = exp(-81/4 ((x-1/2)^2 + (y-1/2)^2)) / 3
    F6  = sqrt(64 - 81 ((x-1/2)^2 + (y-1/2)^2)) / 9 - 1/2
    F7  = 2 cos(10x) sin(10y) + sin(10xy)
    F8  = exp(-(5-10x)^2/2) + 3/4 exp(-(5-10y)^2/2)
          + 3/4 exp(-(5-10x)^2/2) exp(-(5-10y)^2/2)
    F9  = ((20/3)^3 e_x e_y)^2 (r_x r_y)^5 (e_x - 2 r_x)(e_y - 2 r_y),
          e_x = exp((10-20x)/3), r_x = 1/(1 + e_x), likewise in y
    F10 = exp(-0.04 d) cos(0.15 d),  d = sqrt((80x-40)^2 + (90y-45)^2)
"""

from __future__ import annotations

import numpy as np

__all__ = ["FRANKE_IDS", "UnknownFunctionError", "franke_function"]

FRANKE_IDS = tuple(range(1, 11))


class UnknownFunctionError(KeyError):
    pass


def _f1(x, y):
    return (
        0.75 * np.exp(-((9 * x - 2) ** 2 + (9 * y - 2) ** 2) / 4)
        + 0.75 * np.exp(-((9 * x + 1) ** 2) / 49 - (9 * y + 1) / 10)
        + 0.5 * np.exp(-((9 * x - 7) ** 2 + (9 * y - 3) ** 2) / 4)
        - 0.2 * np.exp(-((9 * x - 4) ** 2) - (9 * y - 7) ** 2)
    )


def _f2(x, y):
    return (np.tanh(9 * y - 9 * x) + 1) / 9


def _f3(x, y):
    return (1.25 + np.cos(5.4 * y)) / (6 * (1 + (3 * x - 1) ** 2))


def _f4(x, y):
    return np.exp(-81 / 16 * ((x - 0.5) ** 2 + (y - 0.5) ** 2)) / 3


def _f5(x, y):
    return np.exp(-81 / 4 * ((x - 0.5) ** 2 + (y - 0.5) ** 2)) / 3


def _f6(x, y):
    return np.sqrt(64 - 81 * ((x - 0.5) ** 2 + (y - 0.5) ** 2)) / 9 - 0.5


def _f7(x, y):
    return 2 * np.cos(10 * x) * np.sin(10 * y) + np.sin(10 * x * y)


def _f8(x, y):
    gx = np.exp(-((5 - 10 * x) ** 2) / 2)
    gy = np.exp(-((5 - 10 * y) ** 2) / 2)
    return gx + 0.75 * gy + 0.75 * gx * gy


def _f9(x, y):
    ex = np.exp((10 - 20 * x) / 3)
    ey = np.exp((10 - 20 * y) / 3)
    rx = 1 / (1 + ex)
    ry = 1 / (1 + ey)
    return ((20 / 3) ** 3 * ex * ey) ** 2 * (rx * ry) ** 5 * (ex - 2 * rx) * (ey - 2 * ry)


def _f10(x, y):
    d = np.sqrt((80 * x - 40) ** 2 + (90 * y - 45) ** 2)
    return np.exp(-0.04 * d) * np.cos(0.15 * d)


_FUNCTIONS = {1: _f1, 2: _f2, 3: _f3, 4: _f4, 5: _f5, 6: _f6, 7: _f7, 8: _f8, 9: _f9, 10: _f10}


def franke_function(fid: int, x, y):
    """Evaluate test function ``F_fid`` at ``(x, y)`` in ``[0, 1]^2``."""
    try:
        f = _FUNCTIONS[int(fid)]
    except (KeyError, ValueError, TypeError):
        raise UnknownFunctionError(f"unknown test function id {fid!r}; expected 1..10") from None
    out = f(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    return float(out) if np.ndim(out) == 0 else out
