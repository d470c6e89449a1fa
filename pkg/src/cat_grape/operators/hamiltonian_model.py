"""
Static system parameters of the dispersively coupled oscillator and transmon.

Values are stored in the internal unit system (angular frequency in rad/ns,
time in ns). Configuration files and the packaged measured parameters are
expressed in MHz and microseconds and converted on the way in.
"""

from __future__ import annotations

import hashlib
import math
import tomllib
from dataclasses import asdict, dataclass

import importlib_resources

MHZ_TO_RAD_PER_NS = 2 * math.pi * 1e-3
US_TO_NS = 1e3
MEASURED_PARAMETERS_RESOURCE = "measured_parameters.toml"


def megahertz_to_angular(value_mhz: float) -> float:
    """Convert a linear frequency in MHz into rad/ns."""
    return value_mhz * MHZ_TO_RAD_PER_NS


def angular_to_megahertz(value: float) -> float:
    """Convert an angular frequency in rad/ns into linear MHz."""
    return value / MHZ_TO_RAD_PER_NS


@dataclass(frozen=True, slots=True)
class HamiltonianModel:
    """
    Rotating-frame model parameters.

    Attributes:
        chi: Dispersive shift (rad/ns).
        kerr: Oscillator self-Kerr ``K`` (rad/ns).
        anh: Transmon anharmonicity (rad/ns).
        chi_prime: Second-order dispersive shift (rad/ns).
        t1_trans: Transmon relaxation time (ns). ``math.inf`` disables the channel.
        tphi_trans: Transmon pure-dephasing time (ns).
        t1_osc: Oscillator relaxation time (ns).
        omega_t: Transmon carrier (rad/ns), file metadata only.
        omega_c: Oscillator carrier (rad/ns), file metadata only.
    """

    chi: float = 0.0
    kerr: float = 0.0
    anh: float = 0.0
    chi_prime: float = 0.0
    t1_trans: float = math.inf
    tphi_trans: float = math.inf
    t1_osc: float = math.inf
    omega_t: float = 0.0
    omega_c: float = 0.0

    def __post_init__(self) -> None:
        """Validate decoherence times and reject non-finite couplings."""
        for name in ("t1_trans", "tphi_trans", "t1_osc"):
            value = getattr(self, name)
            if math.isnan(value) or value <= 0:
                raise ValueError(f"{name} must be greater than zero.")
        for name in ("chi", "kerr", "anh", "chi_prime", "omega_t", "omega_c"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite.")

    @classmethod
    def from_megahertz(
        cls,
        *,
        chi_mhz: float = 0.0,
        kerr_mhz: float = 0.0,
        anharmonicity_mhz: float = 0.0,
        chi_prime_mhz: float = 0.0,
        t1_transmon_us: float = math.inf,
        tphi_transmon_us: float = math.inf,
        t1_oscillator_us: float = math.inf,
        transmon_frequency_mhz: float = 0.0,
        oscillator_frequency_mhz: float = 0.0,
    ) -> HamiltonianModel:
        """Build a model from linear frequencies in MHz and times in microseconds."""
        return cls(
            chi=megahertz_to_angular(chi_mhz),
            kerr=megahertz_to_angular(kerr_mhz),
            anh=megahertz_to_angular(anharmonicity_mhz),
            chi_prime=megahertz_to_angular(chi_prime_mhz),
            t1_trans=t1_transmon_us * US_TO_NS,
            tphi_trans=tphi_transmon_us * US_TO_NS,
            t1_osc=t1_oscillator_us * US_TO_NS,
            omega_t=megahertz_to_angular(transmon_frequency_mhz),
            omega_c=megahertz_to_angular(oscillator_frequency_mhz),
        )

    @classmethod
    def measured(cls) -> HamiltonianModel:
        """Load the packaged measured system parameters."""
        resource = importlib_resources.files("cat_grape.data").joinpath(MEASURED_PARAMETERS_RESOURCE)
        return cls.from_megahertz(**tomllib.loads(resource.read_text(encoding="utf-8")))

    def closed(self) -> HamiltonianModel:
        """Return a copy with every decoherence channel disabled."""
        return HamiltonianModel(
            chi=self.chi,
            kerr=self.kerr,
            anh=self.anh,
            chi_prime=self.chi_prime,
            omega_t=self.omega_t,
            omega_c=self.omega_c,
        )

    def fingerprint(self) -> str:
        """Return a short stable hash identifying these parameters."""
        payload = ";".join(f"{key}={value!r}" for key, value in sorted(asdict(self).items()))
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()[:16]
