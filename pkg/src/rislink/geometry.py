"""RIS lattice geometry and transceiver placement.

The surface lies in the x-y plane with its center at the origin. Unit cell
(n, m) is centered at ((m - 1/2) d_x, (n - 1/2) d_y, 0) with the index
ranges n in [1 - N/2, N/2], m in [1 - M/2, M/2]; those ranges are only
integer-symmetric for even N and M, so odd counts are rejected. Elevation
angles are measured from the surface normal (+z), azimuths from the x axis
in [0, 2*pi).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class RisGrid:
    """N x M unit-cell lattice with pitches d_x, d_y (meters)."""

    rows: int
    cols: int
    pitch_x: float
    pitch_y: float

    def __post_init__(self):
        for name, count in (("rows", self.rows), ("cols", self.cols)):
            if not isinstance(count, (int, np.integer)):
                raise ValueError(f"{name} must be an integer, got {count!r}")
            if count < 2 or count % 2 != 0:
                raise ValueError(
                    f"{name} must be an even integer >= 2, got {count} "
                    "(the index ranges [1-N/2, N/2] are only integer-symmetric for even counts)"
                )
        for name, pitch in (("pitch_x", self.pitch_x), ("pitch_y", self.pitch_y)):
            if not pitch > 0.0:
                raise ValueError(f"{name} must be > 0 m, got {pitch}")

    @property
    def num_cells(self) -> int:
        return self.rows * self.cols

    @property
    def n_values(self) -> np.ndarray:
        """Row indices n = 1-N/2 .. N/2."""
        return np.arange(1 - self.rows // 2, self.rows // 2 + 1)

    @property
    def m_values(self) -> np.ndarray:
        """Column indices m = 1-M/2 .. M/2."""
        return np.arange(1 - self.cols // 2, self.cols // 2 + 1)

    @property
    def center_xs(self) -> np.ndarray:
        """Cell-center x coordinates, one per column."""
        return (self.m_values - 0.5) * self.pitch_x

    @property
    def center_ys(self) -> np.ndarray:
        """Cell-center y coordinates, one per row."""
        return (self.n_values - 0.5) * self.pitch_y

    @property
    def aperture_x(self) -> float:
        return self.cols * self.pitch_x

    @property
    def aperture_y(self) -> float:
        return self.rows * self.pitch_y

    @property
    def diagonal(self) -> float:
        return math.hypot(self.aperture_x, self.aperture_y)

    def pitch_in_design_range(self, wavelength: float) -> bool:
        """Whether both pitches fall in the customary [lambda/10, lambda/2] band.

        Wavelength-dependent, so this is a recorded flag, not a constructor
        check; callers surface it as a warning.
        """
        if not wavelength > 0.0:
            raise ValueError(f"wavelength must be > 0 m, got {wavelength}")
        lo, hi = wavelength / 10.0, wavelength / 2.0
        return lo <= self.pitch_x <= hi and lo <= self.pitch_y <= hi


@dataclass(frozen=True)
class CellIndex:
    """Index (n, m) of one unit cell."""

    n: int
    m: int


@dataclass(frozen=True)
class NodePosition:
    """Cartesian point in the RIS frame (meters).

    Transceivers must lie on the illuminated side (z > 0); that is enforced
    by the operations that consume transceiver positions, because cell
    centers legitimately have z = 0.
    """

    x: float
    y: float
    z: float

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z], dtype=float)

    @property
    def norm(self) -> float:
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)

    def require_above_surface(self, role: str = "node") -> None:
        if not self.z > 0.0:
            raise ValueError(
                f"{role} must lie above the surface (z > 0), got z={self.z}"
            )


@dataclass(frozen=True)
class LinkGeometry:
    """TX/RX placement relative to the RIS center.

    Distances in meters, angles in radians; elevations theta_* from the
    surface normal in [0, pi/2], azimuths phi_* normalized to [0, 2*pi).
    """

    d1: float
    d2: float
    theta_tx: float
    phi_tx: float
    theta_rx: float
    phi_rx: float

    def __post_init__(self):
        for name, d in (("d1", self.d1), ("d2", self.d2)):
            if not d > 0.0:
                raise ValueError(f"{name} must be > 0 m, got {d}")
        for name, theta in (("theta_tx", self.theta_tx), ("theta_rx", self.theta_rx)):
            if not 0.0 <= theta <= math.pi / 2.0:
                raise ValueError(
                    f"{name} must be within [0, pi/2] rad (beyond the surface half-space), got {theta}"
                )
        object.__setattr__(self, "phi_tx", self.phi_tx % TWO_PI)
        object.__setattr__(self, "phi_rx", self.phi_rx % TWO_PI)


def _check_index(grid: RisGrid, idx: CellIndex) -> None:
    n_lo, n_hi = 1 - grid.rows // 2, grid.rows // 2
    m_lo, m_hi = 1 - grid.cols // 2, grid.cols // 2
    if not n_lo <= idx.n <= n_hi:
        raise ValueError(f"cell row index n={idx.n} outside [{n_lo}, {n_hi}]")
    if not m_lo <= idx.m <= m_hi:
        raise ValueError(f"cell column index m={idx.m} outside [{m_lo}, {m_hi}]")


def cell_center(grid: RisGrid, idx: CellIndex) -> NodePosition:
    """Center ((m - 1/2) d_x, (n - 1/2) d_y, 0) of cell (n, m)."""
    _check_index(grid, idx)
    return NodePosition(
        (idx.m - 0.5) * grid.pitch_x,
        (idx.n - 0.5) * grid.pitch_y,
        0.0,
    )


def cell_distance(grid: RisGrid, idx: CellIndex, node: NodePosition) -> float:
    """Euclidean distance from a transceiver position to a cell center."""
    node.require_above_surface()
    center = cell_center(grid, idx)
    return math.sqrt(
        (node.x - center.x) ** 2 + (node.y - center.y) ** 2 + node.z ** 2
    )


def geometry_from_positions(tx: NodePosition, rx: NodePosition) -> LinkGeometry:
    """Convert Cartesian transceiver positions to (distance, angles) form."""
    tx.require_above_surface("tx")
    rx.require_above_surface("rx")
    d1, d2 = tx.norm, rx.norm
    return LinkGeometry(
        d1=d1,
        d2=d2,
        theta_tx=math.acos(min(1.0, tx.z / d1)),
        phi_tx=math.atan2(tx.y, tx.x) % TWO_PI,
        theta_rx=math.acos(min(1.0, rx.z / d2)),
        phi_rx=math.atan2(rx.y, rx.x) % TWO_PI,
    )


def positions_from_geometry(link: LinkGeometry) -> tuple[NodePosition, NodePosition]:
    """Reconstruct Cartesian positions from (distance, angles) form.

    Inverse of geometry_from_positions up to the stated conventions. A link
    with theta = pi/2 reconstructs to z = 0, which the transceiver-consuming
    operations then reject.
    """
    tx = NodePosition(
        link.d1 * math.sin(link.theta_tx) * math.cos(link.phi_tx),
        link.d1 * math.sin(link.theta_tx) * math.sin(link.phi_tx),
        link.d1 * math.cos(link.theta_tx),
    )
    rx = NodePosition(
        link.d2 * math.sin(link.theta_rx) * math.cos(link.phi_rx),
        link.d2 * math.sin(link.theta_rx) * math.sin(link.phi_rx),
        link.d2 * math.cos(link.theta_rx),
    )
    return tx, rx


def specular_geometry(d: float, theta: float, phi: float = 0.0) -> LinkGeometry:
    """Mirror-symmetric placement: d1 = d2 = d, equal elevations, opposite azimuths."""
    if not d > 0.0:
        raise ValueError(f"distance must be > 0 m, got {d}")
    return LinkGeometry(
        d1=d, d2=d,
        theta_tx=theta, phi_tx=phi % TWO_PI,
        theta_rx=theta, phi_rx=(phi + math.pi) % TWO_PI,
    )


def specular_mismatch(link: LinkGeometry) -> tuple[float, float]:
    """Transverse projections (u, v) of the combined TX/RX directions.

    Both vanish exactly when the geometry is specular (equal elevations,
    opposite azimuths) or at boresight; they are the quantities whose
    vanishing collapses the array-factor sinc ratios to 1.
    """
    u = (
        math.sin(link.theta_tx) * math.cos(link.phi_tx)
        + math.sin(link.theta_rx) * math.cos(link.phi_rx)
    )
    v = (
        math.sin(link.theta_tx) * math.sin(link.phi_tx)
        + math.sin(link.theta_rx) * math.sin(link.phi_rx)
    )
    return u, v


def far_field_boundary(grid: RisGrid, wavelength: float) -> float:
    """Fraunhofer distance 2 D^2 / lambda with D the grid diagonal.

    Callers compare d1, d2 against it; distances inside warrant a warning
    flag, not an error, because the closed forms degrade gracefully.
    """
    if not wavelength > 0.0:
        raise ValueError(f"wavelength must be > 0 m, got {wavelength}")
    return 2.0 * grid.diagonal ** 2 / wavelength
