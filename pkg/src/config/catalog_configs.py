from dataclasses import dataclass

from ..state.enums import Verdict


@dataclass(frozen=True)
class CatalogConfig:
    name: str
    m: int
    n: int
    expected: Verdict
    provenance: str
    description: str

# =============================================================================
# TOTH'S FULL QUADRATIC HARMONIC MAPS S³ → S^n (6 maps)
# =============================================================================

HOPF = CatalogConfig(
    name="hopf",
    m=3,
    n=2,
    expected=Verdict.HARMONIC,
    provenance="Toth's table, n = 2",
    description="Hopf fibration ((x¹)²+(x²)²−(x³)²−(x⁴)², 2(x¹x³−x²x⁴), 2(x¹x⁴+x²x³)); alias phi2",
)

PHI4 = CatalogConfig(
    name="phi4",
    m=3,
    n=4,
    expected=Verdict.HARMONIC,
    provenance="Toth's table, n = 4",
    description="((x¹)²+(x²)²−(x³)²−(x⁴)², 2x¹x³, 2x¹x⁴, 2x²x³, 2x²x⁴)",
)

PHI5 = CatalogConfig(
    name="phi5",
    m=3,
    n=5,
    expected=Verdict.HARMONIC,
    provenance="Toth's table, n = 5",
    description="((x¹)²−(x²)², (x³)²−(x⁴)², 2x¹x², √2(x¹x³+x²x⁴), √2(x²x³−x¹x⁴), 2x³x⁴)",
)

PHI6 = CatalogConfig(
    name="phi6",
    m=3,
    n=6,
    expected=Verdict.HARMONIC,
    provenance="Toth's table, n = 6",
    description="three 1/√2-scaled diagonal forms, √2x¹x², √3(x¹x³+x²x⁴), √3(x²x³−x¹x⁴), √2x³x⁴",
)

PHI7 = CatalogConfig(
    name="phi7",
    m=3,
    n=7,
    expected=Verdict.HARMONIC,
    provenance="Toth's table, n = 7",
    description="((x¹)²−(x²)², (x³)²−(x⁴)², 2x¹x², √2x¹x³, √2x¹x⁴, √2x²x³, √2x²x⁴, 2x³x⁴)",
)

PHI8 = CatalogConfig(
    name="phi8",
    m=3,
    n=8,
    expected=Verdict.HARMONIC,
    provenance="classical: standard minimal immersion by the nine quadratic harmonics of S³",
    description="(2√6/3)x^i x^j for i<j and three √3/3-scaled traceless diagonal forms",
)

# =============================================================================
# LOW-DIMENSIONAL CLASSICS (2 maps)
# =============================================================================

COMPLEX_SQUARING = CatalogConfig(
    name="complex_squaring",
    m=1,
    n=1,
    expected=Verdict.HARMONIC,
    provenance="classical: z ↦ z²",
    description="((x¹)²−(x²)², 2x¹x²)",
)

VERONESE = CatalogConfig(
    name="veronese",
    m=2,
    n=4,
    expected=Verdict.HARMONIC,
    provenance="classical: Veronese surface S² → S⁴",
    description="(√3x¹x², √3x¹x³, √3x²x³, (√3/2)((x¹)²−(x²)²), ½((x¹)²+(x²)²−2(x³)²)); energy density 3",
)

# =============================================================================
# FAMILIES AND CONSTRUCTIONS (9 entries)
# =============================================================================

F_LAMBDA_ZERO = CatalogConfig(
    name="F_lambda(0)",
    m=7,
    n=5,
    expected=Verdict.PROPER_BIHARMONIC,
    provenance="quaternion family at λ = 0",
    description="(|z|², √2·zw, |w|²); image in S⁴(1/√2)",
)

F_LAMBDA_HALF = CatalogConfig(
    name="F_lambda(1/2)",
    m=7,
    n=5,
    expected=Verdict.NEITHER,
    provenance="quaternion family at λ = 1/2",
    description="(|z|²+½|w|², zw, (√3/2)|w|²); energy density 2",
)

LIFT_HOPF = CatalogConfig(
    name="lift(hopf)",
    m=3,
    n=3,
    expected=Verdict.PROPER_BIHARMONIC,
    provenance="lift of Toth's n = 2 map",
    description="(hopf/√2, 1/√2)",
)

LIFT_PHI4 = CatalogConfig(
    name="lift(phi4)",
    m=3,
    n=5,
    expected=Verdict.PROPER_BIHARMONIC,
    provenance="lift of Toth's n = 4 map",
    description="(phi4/√2, 1/√2)",
)

LIFT_PHI5 = CatalogConfig(
    name="lift(phi5)",
    m=3,
    n=6,
    expected=Verdict.PROPER_BIHARMONIC,
    provenance="lift of Toth's n = 5 map",
    description="(phi5/√2, 1/√2)",
)

LIFT_PHI6 = CatalogConfig(
    name="lift(phi6)",
    m=3,
    n=7,
    expected=Verdict.PROPER_BIHARMONIC,
    provenance="lift of Toth's n = 6 map",
    description="(phi6/√2, 1/√2)",
)

LIFT_PHI7 = CatalogConfig(
    name="lift(phi7)",
    m=3,
    n=8,
    expected=Verdict.PROPER_BIHARMONIC,
    provenance="lift of Toth's n = 7 map",
    description="(phi7/√2, 1/√2)",
)

LIFT_PHI8 = CatalogConfig(
    name="lift(phi8)",
    m=3,
    n=9,
    expected=Verdict.PROPER_BIHARMONIC,
    provenance="lift of the standard minimal immersion S³ → S⁸",
    description="(phi8/√2, 1/√2)",
)

LIFT_VERONESE = CatalogConfig(
    name="lift(veronese)",
    m=2,
    n=5,
    expected=Verdict.PROPER_BIHARMONIC,
    provenance="lift of the Veronese map; image in S⁴(1/√2)",
    description="(veronese/√2, 1/√2); S = (7/4)I",
)

EMBED_HOPF = CatalogConfig(
    name="embed(hopf,3/5)",
    m=3,
    n=3,
    expected=Verdict.NEITHER,
    provenance="Hopf map placed in the small sphere S²(3/5)",
    description="((3/5)·hopf, 4/5); S = (43/25)I",
)

# =============================================================================
# GROUPINGS
# =============================================================================

TOTH_MAPS = [
    HOPF,
    PHI4,
    PHI5,
    PHI6,
    PHI7,
    PHI8,
]

CLASSIC_MAPS = [
    COMPLEX_SQUARING,
    VERONESE,
]

FAMILY_MAPS = [
    F_LAMBDA_ZERO,
    F_LAMBDA_HALF,
    LIFT_HOPF,
    LIFT_PHI4,
    LIFT_PHI5,
    LIFT_PHI6,
    LIFT_PHI7,
    LIFT_PHI8,
    LIFT_VERONESE,
    EMBED_HOPF,
]

ALL_ENTRIES = TOTH_MAPS + CLASSIC_MAPS + FAMILY_MAPS
