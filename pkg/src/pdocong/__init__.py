"""Exact q-series and xi-polynomial machinery for PDO internal congruences."""

from .congruence import (
    CongruenceReport,
    CongruenceSpec,
    DivisibilitySpec,
    ScanResult,
    main_family_spec,
    scan,
    verify,
    verify_corollary,
    verify_main,
    verify_ramanujan,
    verify_strengthened,
)
from .etaq import (
    DELTA,
    GAMMA,
    KAPPA,
    XI,
    EtaQuotientSpec,
    PdoTable,
    delta_series,
    euler_series,
    expand,
    gamma_series,
    kappa_series,
    pdo_bruteforce,
    pdo_series,
    xi_series,
)
from .padic import (
    INFINITY,
    ProfileReport,
    ValuationProfile,
    check_f_profile,
    check_z_profile,
    d_min,
    nu2,
    profile,
    tau,
)
from .series import NonUnitError, Series
from .xipoly import (
    SigmaPair,
    XiPoly,
    gamma6_poly,
    lambda_poly,
    phi_poly,
    phi_poly_direct,
    poly_to_series,
    sigma_pair,
    zeta,
    zeta_combined,
    zeta_initial,
)

__all__ = [
    "CongruenceReport",
    "CongruenceSpec",
    "DivisibilitySpec",
    "DELTA",
    "EtaQuotientSpec",
    "GAMMA",
    "INFINITY",
    "KAPPA",
    "NonUnitError",
    "PdoTable",
    "ProfileReport",
    "ScanResult",
    "Series",
    "SigmaPair",
    "ValuationProfile",
    "XI",
    "XiPoly",
    "check_f_profile",
    "check_z_profile",
    "d_min",
    "delta_series",
    "euler_series",
    "expand",
    "gamma6_poly",
    "gamma_series",
    "kappa_series",
    "lambda_poly",
    "main_family_spec",
    "nu2",
    "pdo_bruteforce",
    "pdo_series",
    "phi_poly",
    "phi_poly_direct",
    "poly_to_series",
    "profile",
    "scan",
    "sigma_pair",
    "tau",
    "verify",
    "verify_corollary",
    "verify_main",
    "verify_ramanujan",
    "verify_strengthened",
    "xi_series",
    "zeta",
    "zeta_combined",
    "zeta_initial",
]
