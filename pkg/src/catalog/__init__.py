"""Catalog package - named maps, constructions and seeded scrambles."""

from .maps import (
    QUATERNION_PRODUCT,
    complex_squaring,
    f_lambda,
    form,
    hopf,
    phi4,
    phi5,
    phi6,
    phi7,
    phi8,
    quaternion_product_forms,
    veronese,
)
from .constructions import embed, lift, lift_small, pad
from .registry import CatalogEntry, get, list_entries, split_call
from .scramble import random_instance, random_orthogonal, scramble

__all__ = [
    "QUATERNION_PRODUCT",
    "complex_squaring",
    "f_lambda",
    "form",
    "hopf",
    "phi4",
    "phi5",
    "phi6",
    "phi7",
    "phi8",
    "quaternion_product_forms",
    "veronese",
    "embed",
    "lift",
    "lift_small",
    "pad",
    "CatalogEntry",
    "get",
    "list_entries",
    "split_call",
    "random_instance",
    "random_orthogonal",
    "scramble",
]
