"""Recurrence shapes, the quotient transform and the built-in catalog."""

from .catalog import (
    ALIASES,
    CatalogEntry,
    a_table,
    catalog_get,
    catalog_names,
    catalog_parameters,
    sec_struct_conv,
    sec_struct_explicit,
    sec_struct_short,
)
from .quotient import integer_roots, nonhom_quotient_form, quotient_form
from .recurrences import (
    BenderCanfieldDefinition,
    Boundary,
    ConvolutionRecurrence,
    LinearRecurrence,
    ModelError,
    NonhomRecurrence,
    QuotientRecurrence,
    TwoIndexRecurrence,
)

__all__ = [
    "ALIASES", "CatalogEntry", "a_table", "catalog_get", "catalog_names", "catalog_parameters",
    "sec_struct_conv", "sec_struct_explicit", "sec_struct_short",
    "integer_roots", "nonhom_quotient_form", "quotient_form",
    "BenderCanfieldDefinition", "Boundary", "ConvolutionRecurrence", "LinearRecurrence",
    "ModelError", "NonhomRecurrence", "QuotientRecurrence", "TwoIndexRecurrence",
]
