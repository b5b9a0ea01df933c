from pydantic import BaseModel, ConfigDict


class OrthogonalityEstimate(BaseModel):
    """Monte Carlo estimate of the integral of conj(D^j_{mn}) D^{j'}_{m'n'} over SU(2)."""
    model_config = ConfigDict(frozen=True)

    j: float
    j_prime: float
    m: float
    n: float
    m_prime: float
    n_prime: float
    samples: int
    estimate: complex
    std_error: float
    expected: float

    @property
    def deviation_in_sigma(self) -> float:
        """|estimate - expected| in units of the standard error."""
        if self.std_error == 0.0:
            return 0.0 if abs(self.estimate - self.expected) < 1e-12 else float("inf")
        return abs(self.estimate - self.expected) / self.std_error
