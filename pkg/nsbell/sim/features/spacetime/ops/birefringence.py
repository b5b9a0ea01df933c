import math

from nsbell.sim.features.spacetime.models.birefringence_params import BirefringenceParams
from nsbell.sim.features.su2rep.models.group_element import GroupElementU2


def birefringence_formula(k2: float, m_tilde: float, wavelength: float, radius: float, mu: float) -> float:
    """
    sqrt(2/3) * 2 pi k2 m_tilde / (wavelength radius^2) * (mu + 2)(mu - 1)/(mu + 1).

    Plain arithmetic without range checks, so it can be evaluated outside the
    physical range of mu.
    """
    prefactor = math.sqrt(2.0 / 3.0) * 2.0 * math.pi * k2 * m_tilde / (wavelength * radius**2)
    return prefactor * (mu + 2.0) * (mu - 1.0) / (mu + 1.0)


def birefringence_phase(params: BirefringenceParams) -> float:
    """Phase accumulated between the two polarization components; zero for radial emission (mu = 1)."""
    return birefringence_formula(params.k2, params.m_tilde, params.wavelength, params.radius, params.mu)


def birefringent_channel(delta_phi: float) -> GroupElementU2:
    """
    Group element whose U(2) matrix is diag(1, e^{i delta_phi}).

    The vertical polarization |1> takes the phase. Factored as
    e^{i delta_phi/2} * diag(e^{-i delta_phi/2}, e^{i delta_phi/2}), so
    alpha = -delta_phi/2 and the SU(2) part is a z rotation.
    """
    half = 0.5 * delta_phi
    return GroupElementU2.from_parts(-half, (math.cos(half), 0.0, 0.0, math.sin(half)))
