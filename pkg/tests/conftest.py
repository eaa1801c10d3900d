import math

import pytest

import rislink as rl


@pytest.fixture(scope="session")
def vacuum():
    return rl.vacuum_spectrum(100e9, 180e9)


@pytest.fixture(scope="session")
def fig5_table():
    # shared across tests: the fig5 sweep is the most expensive preset
    return rl.figure_preset("fig5")


@pytest.fixture(scope="session")
def cell_pattern():
    return rl.exponent_from_gain(rl.GainValue.from_db(10.0))


@pytest.fixture
def make_config(vacuum, cell_pattern):
    """Factory for ChannelConfig objects with sensible D-band defaults."""

    def _make(
        *,
        rows=16,
        cols=16,
        pitch=0.00027,
        distance=2.5,
        theta_deg=1.0,
        phi_deg=0.0,
        gain_db=25.0,
        frequency=110e9,
        spectrum=None,
        amplitude=1.0,
        phase=0.0,
        link=None,
        **extra,
    ):
        pattern = rl.exponent_from_gain(rl.GainValue.from_db(gain_db))
        if link is None:
            link = rl.specular_geometry(
                distance, math.radians(theta_deg), math.radians(phi_deg)
            )
        return rl.ChannelConfig(
            grid=rl.RisGrid(rows, cols, pitch, pitch),
            link=link,
            tx_pattern=pattern,
            rx_pattern=pattern,
            cell_pattern=cell_pattern,
            reflection=rl.ReflectionCoefficient(amplitude, phase),
            spectrum=spectrum if spectrum is not None else vacuum,
            frequency=frequency,
            **extra,
        )

    return _make
