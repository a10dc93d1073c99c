"""Antenna array geometry and the OFDM carrier grid.

Arrays are centered on the origin. A uniform linear array places its N
elements on one axis at offsets ``delta_n * d`` with
``delta_n = (2n - N - 1) / 2`` for n = 1..N; a uniform planar array uses the
analogous offsets ``delta_{n1}``, ``delta_{n2}`` on two orthogonal axes and is
flattened row-major with the second panel index fastest.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .validation import check_int, check_positive

SPEED_OF_LIGHT = 299_792_458.0

ULA = "ula"
UPA = "upa"


@dataclass(frozen=True)
class ArrayGeometry:
    """Array layout plus the OFDM carrier grid it operates on.

    Parameters
    ----------
    kind : {"ula", "upa"}
    n : total antenna count (for UPA, ``n == n1 * n2``).
    d : element spacing in meters.
    f_c : center frequency in Hz.
    bandwidth : total bandwidth in Hz.
    n_subcarriers : subcarrier count M.
    n1, n2 : panel dimensions, UPA only.
    """

    kind: str
    n: int
    d: float
    f_c: float
    bandwidth: float
    n_subcarriers: int
    n1: int = 0
    n2: int = 0

    def __post_init__(self):
        if self.kind not in (ULA, UPA):
            raise ValueError(f"kind must be '{ULA}' or '{UPA}', got {self.kind!r}")
        check_int("n", self.n, minimum=1)
        check_positive("d", self.d)
        check_positive("f_c", self.f_c)
        check_positive("bandwidth", self.bandwidth, strict=False)
        check_int("n_subcarriers", self.n_subcarriers, minimum=1)
        if self.kind == UPA:
            check_int("n1", self.n1, minimum=1)
            check_int("n2", self.n2, minimum=1)
            if self.n1 * self.n2 != self.n:
                raise ValueError(f"UPA requires n1*n2 == n, got {self.n1}*{self.n2} != {self.n}")

    @classmethod
    def ula(cls, n, f_c, bandwidth, n_subcarriers, d=None):
        """ULA with half-wavelength spacing at f_c unless ``d`` is given."""
        if d is None:
            d = SPEED_OF_LIGHT / (2.0 * f_c)
        return cls(ULA, n, d, f_c, bandwidth, n_subcarriers)

    @classmethod
    def upa(cls, n1, n2, f_c, bandwidth, n_subcarriers, d=None):
        """UPA with half-wavelength spacing at f_c unless ``d`` is given."""
        if d is None:
            d = SPEED_OF_LIGHT / (2.0 * f_c)
        return cls(UPA, n1 * n2, d, f_c, bandwidth, n_subcarriers, n1=n1, n2=n2)

    @property
    def wavelength(self):
        """Carrier wavelength at the center frequency."""
        return SPEED_OF_LIGHT / self.f_c

    @property
    def aperture(self):
        """Physical aperture: end-to-end extent of the element grid."""
        if self.kind == ULA:
            return (self.n - 1) * self.d
        return float(np.hypot((self.n1 - 1) * self.d, (self.n2 - 1) * self.d))

    @property
    def rayleigh_distance(self):
        """Near-field boundary 2 D^2 / lambda."""
        ap = self.aperture
        return 2.0 * ap * ap / self.wavelength

    def element_offsets(self):
        """Signed element offsets in units of ``d``.

        ULA: one array of delta_n.  UPA: (delta_n1, delta_n2) for the
        row-major flattened order (n2 fastest).
        """
        if self.kind == ULA:
            return (2.0 * np.arange(1, self.n + 1) - self.n - 1) / 2.0
        d1 = (2.0 * np.arange(1, self.n1 + 1) - self.n1 - 1) / 2.0
        d2 = (2.0 * np.arange(1, self.n2 + 1) - self.n2 - 1) / 2.0
        return np.repeat(d1, self.n2), np.tile(d2, self.n1)

    def max_element_radius(self):
        """Largest element distance from the array center, in meters."""
        if self.kind == ULA:
            return (self.n - 1) / 2.0 * self.d
        return float(np.hypot((self.n1 - 1) / 2.0, (self.n2 - 1) / 2.0) * self.d)


def subcarrier_frequencies(geom: ArrayGeometry) -> np.ndarray:
    """Frequencies of the M subcarriers, symmetric about f_c with spacing B/M."""
    m = np.arange(1, geom.n_subcarriers + 1, dtype=np.float64)
    return geom.f_c + (2.0 * m - geom.n_subcarriers - 1) * geom.bandwidth / (2.0 * geom.n_subcarriers)
