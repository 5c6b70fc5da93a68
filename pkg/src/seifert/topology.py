"""Topological predicates: small and flat taxonomy, (P2-)irreducibility,
asphericity, finiteness and the incompressible-surface criterion.

A symbol is "small" when its Fuchsian quotient is finite; everything
small is recognized by name. The "flat" family is a fixed finite list
of symbols with special fiber-uniqueness behavior. Symbols outside both
families satisfy a uniform block of positivity results; the one refined
question, existence of an incompressible surface for sphere bases with
exactly three exceptional fibers, is decided by the first homology.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ExcludedSpace, ValidityError
from .groups import abelianization, coset_enumerate, pi1_presentation
from .lens import lens_normalize, recognize_S2_symbol, sphere_h1_order
from .symbol import (ClassPart, EquivalenceMode, SeifertSymbol, normalize_symbol,
                     parse_symbol, render_symbol, symbols_equivalent)

_S2 = ClassPart("O", "o", 0)
_P2_N = ClassPart("N", "n", 1, "I")
_P2_O = ClassPart("O", "n", 1)


@dataclass(frozen=True)
class SmallResult:
    """A recognized small space: category key plus display name."""

    category: str
    name: str
    lens: object = None
    triple: tuple | None = None


def _is_solid_torus_schema(s: SeifertSymbol) -> bool:
    return (s.is_bounded and s.class_part == _S2 and s.boundary_tori == 1
            and s.boundary_klein == 0 and len(s.pairs) <= 1)


def classify_small(s: SeifertSymbol, max_cosets: int = 100000):
    """Name the space when the Fuchsian quotient is finite, else None.

    Bounded: only the fibered solid torus (disk orbit, at most one
    exceptional fiber). Closed sphere orbits go through lens-space
    recognition and the platonic triple test. Projective-plane orbits
    with at most one exceptional fiber split by class: non-orientable
    total spaces are P2xS1 or the twisted S2 bundle over S1 (first
    homology Z+Z/2 versus Z); orientable ones are P3#P3 at zero
    obstruction and otherwise a lens space L(4n,2n-1) or a platonic
    prism space, told apart by enumerating the group.
    """
    s = normalize_symbol(s)
    cp = s.class_part
    if s.is_bounded:
        if _is_solid_torus_schema(s):
            return SmallResult("fibered-solid-torus", "fibered solid torus")
        return None
    if cp == _S2:
        rec = recognize_S2_symbol(s)
        if rec.kind == "Generic":
            return None
        if rec.kind == "Platonic":
            return SmallResult("platonic", rec.name(), triple=rec.triple)
        if rec.kind == "Lens":
            return SmallResult("lens", rec.name(), lens=rec.lens)
        return SmallResult(rec.kind, rec.name(), lens=rec.lens)
    if cp == _P2_N and s.fiber_count <= 1:
        h1 = abelianization(pi1_presentation(s))
        if h1.torsion:
            return SmallResult("P2xS1", "P2xS1")
        return SmallResult("twisted-S2-bundle", "twisted S2 bundle over S1")
    if cp == _P2_O and len(s.pairs) <= 1:
        if s.obstruction == 0 and not s.pairs:
            return SmallResult("P3#P3", "P3#P3")
        res = coset_enumerate(pi1_presentation(s), max_cosets)
        if not res.is_finite:
            raise RuntimeError(
                f"enumeration budget {max_cosets} too small for {render_symbol(s)}")
        n = res.order
        h1 = abelianization(pi1_presentation(s))
        if len(h1.torsion) <= 1 and h1.order() == n:
            # cyclic group: the lens member L(4k, 2k-1)
            return SmallResult("lens", f"L({n},{n // 2 - 1})",
                               lens=lens_normalize(n, n // 2 - 1))
        assert n % 4 == 0, f"unexpected prism order {n}"
        return SmallResult("platonic", f"platonic (2,2,{n // 4})",
                           triple=(2, 2, n // 4))
    return None


_FLAT_CLOSED_TEXT = [
    "(O,o,0 | -2, (2,1), (2,1), (2,1), (2,1))",
    "(O,o,1 | 0)",
    "(N,o,1 | (0,0))",
    "(N,o,1 | (1,0))",
    "(O,n,1 | -1, (2,1), (2,1))",
    "(N,n,I,1 | (0,2))",
    "(O,n,2 | 0)",
    "(N,n,I,2 | (0,0))",
    "(N,n,I,2 | (1,0))",
    "(N,n,II,2 | (0,0))",
    "(N,n,II,2 | (1,0))",
]

_FLAT_BOUNDED_TEXT = [
    "(O,o,0; m=1 | -, (2,1), (2,1))",
    "(O,o,0; m=2 | -)",
    "(N,o,0; m=0, kb=2 | -)",
    "(O,n,1; m=1 | -)",
    "(N,n,I,1; m=1 | -)",
]


def _freeze(texts):
    return frozenset(render_symbol(normalize_symbol(parse_symbol(t)))
                     for t in texts)


_FLAT_CLOSED = _freeze(_FLAT_CLOSED_TEXT)
_FLAT_BOUNDED = _freeze(_FLAT_BOUNDED_TEXT)
_FLAT = _FLAT_CLOSED | _FLAT_BOUNDED


def is_flat(s: SeifertSymbol) -> bool:
    """Membership in the fixed flat family (eleven closed, five bounded)."""
    return render_symbol(normalize_symbol(s)) in _FLAT


@dataclass(frozen=True)
class PredicateReport:
    small: str | None
    flat: bool
    pi1_finite: bool
    irreducible: bool
    p2_irreducible: bool
    aspherical: bool
    boundary_irreducible: bool
    has_incompressible_surface: bool
    named: str | None
    notes: tuple

    def __post_init__(self):
        if self.p2_irreducible and not self.irreducible:
            raise ValidityError("P2-irreducible requires irreducible")
        if self.aspherical and not self.p2_irreducible:
            raise ValidityError("aspherical requires P2-irreducible")
        if self.pi1_finite and self.aspherical:
            raise ValidityError("finite group excludes asphericity")


# (irreducible, p2_irreducible, aspherical, boundary_irreducible,
#  pi1_finite, has_incompressible_surface)
_SMALL_FLAGS = {
    "fibered-solid-torus": (True, True, True, False, False, False),
    "S3": (True, True, False, True, True, False),
    "lens": (True, True, False, True, True, False),
    "platonic": (True, True, False, True, True, False),
    "S2xS1": (False, False, False, True, False, True),
    "twisted-S2-bundle": (False, False, False, True, False, True),
    "P3#P3": (False, False, False, True, False, True),
    "P2xS1": (True, False, False, True, False, True),
}

_SMALL_NOTES = {
    "fibered-solid-torus": "boundary compresses: meridian disk",
    "S2xS1": "essential non-separating sphere counted as incompressible",
    "twisted-S2-bundle": "essential non-separating sphere counted as incompressible",
    "P3#P3": "essential summing sphere counted as incompressible",
    "P2xS1": "two-sided projective plane is incompressible",
}


def predicates(s: SeifertSymbol, max_cosets: int = 100000) -> PredicateReport:
    """Full predicate block for a symbol.

    Spaces that are not small satisfy the uniform positive block
    (irreducible, P2-irreducible, aspherical, boundary irreducible,
    infinite group, incompressible surface present), except that sphere
    bases with exactly three exceptional fibers contain an
    incompressible surface exactly when the first homology is infinite.
    Small spaces take their flags from a fixed per-space table.
    """
    s = normalize_symbol(s)
    small = classify_small(s, max_cosets)
    flat = is_flat(s)
    notes = []
    if small is None:
        irr = p2 = asph = bd = True
        fin = False
        inc = True
        if s.is_closed and s.class_part == _S2 and len(s.pairs) == 3:
            inc = sphere_h1_order(s.obstruction, s.pairs) == 0
            notes.append("three-fiber sphere base: incompressible surface "
                         "exists exactly when first homology is infinite")
        return PredicateReport(None, flat, fin, irr, p2, asph, bd, inc,
                               None, tuple(notes))
    irr, p2, asph, bd, fin, inc = _SMALL_FLAGS[small.category]
    note = _SMALL_NOTES.get(small.category)
    if note:
        notes.append(note)
    return PredicateReport(small.category, flat, fin, irr, p2, asph, bd, inc,
                           small.name, tuple(notes))


def bounded_equivalent(s1: SeifertSymbol, s2: SeifertSymbol) -> bool:
    """Homeomorphism test for bounded symbols.

    For bounded spaces that are neither solid tori nor I-bundles over
    the torus or Klein bottle, homeomorphism, fiber-preserving
    homeomorphism and normalized-symbol equality (up to reversal in the
    orientable class) all coincide, so the test is symbol equality.
    The excluded inputs raise ExcludedSpace.
    """
    out = []
    for s in (s1, s2):
        s = normalize_symbol(s)
        if not s.is_bounded:
            raise ValidityError("bounded_equivalent needs bounded symbols")
        if _is_solid_torus_schema(s):
            raise ExcludedSpace("solid torus (fibered solid torus symbol)")
        if render_symbol(s) in _FLAT_BOUNDED:
            raise ExcludedSpace("I-bundle over the torus or Klein bottle")
        out.append(s)
    return symbols_equivalent(out[0], out[1], EquivalenceMode.UNORIENTED_FIBER)
