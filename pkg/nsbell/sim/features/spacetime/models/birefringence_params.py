from pydantic import BaseModel, ConfigDict, Field


class BirefringenceParams(BaseModel):
    """
    Inputs of the gravity-induced birefringence phase.

    All lengths share one unit and m_tilde is in inverse length; no unit
    system is assumed beyond that.
    """
    model_config = ConfigDict(frozen=True)

    k2: float = Field(..., gt=0, description="Coupling constant k^2")
    m_tilde: float = Field(..., gt=0, description="Torsion mass, inverse length")
    wavelength: float = Field(..., gt=0, description="Photon wavelength")
    radius: float = Field(..., gt=0, description="Stellar radius")
    mu: float = Field(..., gt=0, le=1, description="Cosine of the line-of-sight angle")
