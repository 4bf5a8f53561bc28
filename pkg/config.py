"""
Configuration defaults for the verification harness, the CLI and the HTTP API
"""

import os
from pydantic import BaseModel, Field
from dotenv import load_dotenv


class Settings(BaseModel):
    """Tolerances, sample counts and sweep boxes used by the oracle suites"""
    tolerance: float = Field(default=1e-9, gt=0, description="Absolute tolerance for quadrature comparisons")
    samples: int = Field(default=4096, ge=1, description="Quadrature nodes M for numeric Fourier analysis")
    pointwise_samples: int = Field(default=1000, ge=1, description="Uniform points in [0, 2pi) for pointwise checks")
    pointwise_tolerance: float = Field(default=1e-12, gt=0, description="Max abs error for pointwise checks")
    kernel_max_n: int = Field(default=300, ge=1, description="Upper n of the kernel sweep box")
    lemma2_max_k: int = Field(default=150, ge=0, description="Upper k of the lemma2_sum sweep")
    cooc_max: int = Field(default=100, ge=1, description="Upper ell and t of the alternating-sum sweep")
    cheie_max: int = Field(default=100, ge=0, description="Upper n and ell of the convolution sweep")
    chebyshev_max_n: int = Field(default=200, ge=1, description="Upper n of the Chebyshev comparison")
    power_max_n: int = Field(default=64, ge=1, description="Upper n of the power-reduction comparison")
    pointwise_max_n: int = Field(default=32, ge=1, description="Upper n of the pointwise checks")
    reciprocal_harmonics: int = Field(default=25, ge=1, description="Harmonics checked for the reciprocal series")
    partial_sum_terms: int = Field(default=200, ge=0, description="K for the central-binomial partial sums")
    workers: int = Field(default=4, ge=1, description="Thread pool size for suite execution")

    def quick(self) -> "Settings":
        """Shrunken sweep boxes for interactive runs"""
        return self.model_copy(update={
            "kernel_max_n": min(self.kernel_max_n, 40),
            "lemma2_max_k": min(self.lemma2_max_k, 30),
            "cooc_max": min(self.cooc_max, 20),
            "cheie_max": min(self.cheie_max, 20),
            "chebyshev_max_n": min(self.chebyshev_max_n, 40),
            "power_max_n": min(self.power_max_n, 16),
            "pointwise_max_n": min(self.pointwise_max_n, 12),
            "pointwise_samples": min(self.pointwise_samples, 200),
        })


class ApiSettings(BaseModel):
    host: str = Field(default="0.0.0.0", description="Bind address for uvicorn")
    port: int = Field(default=8000, ge=1, le=65535, description="Bind port for uvicorn")


def load_api_settings() -> ApiSettings:
    """Read HTTP settings from the environment (and a .env file if present)"""
    load_dotenv()
    return ApiSettings(
        host=os.getenv("TRIG_FOURIER_HOST", ApiSettings.model_fields["host"].default),
        port=int(os.getenv("TRIG_FOURIER_PORT", ApiSettings.model_fields["port"].default)),
    )


# Global defaults instance
DEFAULT_SETTINGS = Settings()
