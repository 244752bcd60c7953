"""Interlacing certificates b(n) <= q(n) <= b(n+1) and their verifier."""

from .certificates import BUNDLED, NEGATIVE_CONTROLS, bundled_certificate, verify_sandwich_catalog
from .types import (
    AT,
    NEXT,
    BaseCheck,
    CertificateError,
    PlanTerm,
    SandwichCertificate,
    SandwichReport,
)
from .verify import plan_identity_holds, trivial_plan, verify_sandwich

__all__ = [
    "BUNDLED", "NEGATIVE_CONTROLS", "bundled_certificate", "verify_sandwich_catalog",
    "AT", "NEXT", "BaseCheck", "CertificateError", "PlanTerm", "SandwichCertificate",
    "SandwichReport", "plan_identity_holds", "trivial_plan", "verify_sandwich",
]
