"""Lens-space arithmetic.

L(p,q) is two solid tori sewn along their boundaries by a determinant
+-1 matrix whose left column is (q, p). Homeomorphism classification is
p' = p with q' = +-q^{+-1} mod p, so each pair has a canonical
representative. The sewing matrix also transports a fibering of one
torus to the other, which is how symbols over the sphere with at most
two exceptional fibers are recognized here.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .arith import ReducedFraction
from .errors import BadDeterminant, NotCoprime, ValidityError, WrongBase, ZeroDenominator
from .fst import FiberedSolidTorus, crossing_invariants, fst_normalize
from .groups import abelianization, pi1_presentation
from .symbol import ClassPart, CrossingPair, SeifertSymbol, normalize_symbol


@dataclass(frozen=True)
class LensParams:
    """Parameters (p, q) of a lens space; p = 0 is S2xS1 and p = 1 is S3."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 0:
            raise ValidityError(f"lens p must be >= 0, got {self.p}")
        if self.p >= 2 and gcd(self.p, self.q) != 1:
            raise NotCoprime(f"gcd({self.p}, {self.q}) != 1")

    def display(self) -> str:
        if self.p == 0:
            return "S2xS1"
        if self.p == 1:
            return "S3"
        return f"L({self.p},{self.q})"


def lens_normalize(p: int, q: int) -> LensParams:
    """Canonical (p, q): the least q in the orbit {+-q^{+-1} mod p}.

    p of 0 or 1 collapses to (0,0) = S2xS1 and (1,0) = S3 regardless
    of q. Raises NotCoprime when p >= 2 and gcd(p, q) != 1.
    """
    if p < 0:
        raise ValidityError(f"lens p must be >= 0, got {p}")
    if p <= 1:
        return LensParams(p, 0)
    if gcd(p, q) != 1:
        raise NotCoprime(f"gcd({p}, {q}) != 1")
    q0 = q % p
    inv = pow(q0, -1, p)
    return LensParams(p, min(q0, (-q0) % p, inv, (-inv) % p))


def lens_equivalent(a: LensParams, b: LensParams) -> bool:
    """Homeomorphism test: equal normal forms."""
    return lens_normalize(a.p, a.q) == lens_normalize(b.p, b.q)


@dataclass(frozen=True)
class GluingMatrix:
    """Sewing matrix (q r; p s) with determinant +-1."""

    q: int
    r: int
    p: int
    s: int

    def __post_init__(self):
        if self.det not in (1, -1):
            raise BadDeterminant(
                f"determinant {self.det} of ({self.q} {self.r}; {self.p} {self.s})")

    @property
    def det(self) -> int:
        return self.q * self.s - self.p * self.r


def fibering_transform(a: GluingMatrix, f: ReducedFraction):
    """Both fibered-solid-torus invariants of the sewing glued along f.

    Fibering the first torus by nu/mu induces on the second the slope
    (q nu + r mu) / (p nu + s mu); both are returned normalized. The
    fiber dies (zero new index) exactly when the matrix sends the chosen
    fibering to a meridian, reported as ZeroDenominator.
    """
    f1 = fst_normalize(f.num, f.den, oriented=True)
    f2 = fst_normalize(a.q * f.num + a.r * f.den,
                       a.p * f.num + a.s * f.den, oriented=True)
    return f1, f2


_S2 = ClassPart("O", "o", 0)

_EXTRA_PLATONIC = frozenset([(2, 3, 3), (2, 3, 4), (2, 3, 5)])


def is_platonic_triple(degrees) -> bool:
    """True for (2,2,r) with r >= 2 and for (2,3,3), (2,3,4), (2,3,5)."""
    a, b, c = sorted(degrees)
    return (a, b) == (2, 2) or (a, b, c) in _EXTRA_PLATONIC


@dataclass(frozen=True)
class Recognition:
    """Outcome of recognizing a closed symbol over the sphere.

    kind is one of S3, S2xS1, Lens, Platonic, Generic. Lens outcomes
    carry canonical parameters and the witnessing sewing matrix found by
    the bounded search (S3 and S2xS1 carry one too, as L(1,0) and
    L(0,0)). Platonic carries the sorted index triple.
    """

    kind: str
    lens: LensParams | None = None
    triple: tuple | None = None
    witness: GluingMatrix | None = None

    def name(self) -> str | None:
        if self.kind in ("S3", "S2xS1"):
            return self.kind
        if self.kind == "Lens":
            return self.lens.display()
        if self.kind == "Platonic":
            return "platonic ({},{},{})".format(*self.triple)
        return None


def sphere_h1_order(b, pairs) -> int:
    """|H1| determinant for a sphere-base symbol; 0 means infinite.

    The closed form sum(beta_i * prod(mu_j, j != i)) - b * prod(mu_i),
    in absolute value; agrees with the Smith-form order of the
    abelianized group.
    """
    total = 0
    prod = 1
    for p in pairs:
        prod *= p.mu
    for i, p in enumerate(pairs):
        term = p.beta
        for j, q in enumerate(pairs):
            if j != i:
                term *= q.mu
        total += term
    return abs(total - b * prod)


def _candidate_bs(pairs, p):
    """Obstructions b with |H1| = p for the given pairs, ascending."""
    total = 0
    prod = 1
    for q in pairs:
        prod *= q.mu
    for i, q in enumerate(pairs):
        term = q.beta
        for j, w in enumerate(pairs):
            if j != i:
                term *= w.mu
        total += term
    out = set()
    for t in (total - p, total + p):
        if t % prod == 0:
            out.add(t // prod)
    return sorted(out)


def _search_witness(s: SeifertSymbol, p: int):
    """Deterministic bounded search for a sewing matrix producing s.

    Scans matrices with left column (q, +-p), q ascending, and for each
    solvable right column checks whether the transform of some fibering
    drawn from the symbol's own pairs reproduces the full symbol. All
    entries stay within p + mu1*mu2 + |b|*mu1*mu2. Returns
    (q, GluingMatrix) or None.
    """
    pairs = s.pairs
    b = s.obstruction
    mu1 = pairs[0].mu if len(pairs) >= 1 else 1
    mu2 = pairs[1].mu if len(pairs) >= 2 else 1
    bound = p + mu1 * mu2 + abs(b) * mu1 * mu2

    # ways to assign one pair to the input fibering and one to the image
    zero = ReducedFraction(0, 1)
    assignments = []
    if len(pairs) == 2:
        f0 = ReducedFraction(pow(pairs[0].beta, -1, pairs[0].mu), pairs[0].mu)
        f1 = ReducedFraction(pow(pairs[1].beta, -1, pairs[1].mu), pairs[1].mu)
        assignments = [(f0, pairs[1].mu), (f1, pairs[0].mu)]
    elif len(pairs) == 1:
        f0 = ReducedFraction(pow(pairs[0].beta, -1, pairs[0].mu), pairs[0].mu)
        assignments = [(f0, 1), (zero, pairs[0].mu)]
    else:
        assignments = [(zero, 1)]

    if p == 0:
        qs = [1]
    elif p == 1:
        qs = [0, 1]
    else:
        qs = [q for q in range(p) if gcd(q, p) == 1]
    pps = [0] if p == 0 else [p, -p]

    for q in qs:
        for pp in pps:
            for det in (1, -1):
                for f, mu_img in assignments:
                    nu, mu = f.num, f.den
                    for tgt in (mu_img, -mu_img):
                        # second index: pp*nu + s*mu = tgt
                        if pp == 0:
                            # q = 1, so s = det and r is irrelevant mod mu
                            sv = det
                            if pp * nu + sv * mu != tgt:
                                continue
                            rv = 0
                        else:
                            num = tgt - pp * nu
                            if num % mu != 0:
                                continue
                            sv = num // mu
                            rnum = q * sv - det
                            if rnum % pp != 0:
                                continue
                            rv = rnum // pp
                        if abs(rv) > bound or abs(sv) > bound:
                            continue
                        mat = GluingMatrix(q, rv, pp, sv)
                        try:
                            t1, t2 = fibering_transform(mat, f)
                        except ZeroDenominator:
                            continue
                        cand = []
                        for t in (t1, t2):
                            ci = crossing_invariants(t)
                            if ci.mu >= 2:
                                cand.append(ci)
                        for bc in _candidate_bs(cand, p):
                            trial = normalize_symbol(SeifertSymbol(
                                _S2, 0, 0, bc,
                                tuple(CrossingPair(c.mu, c.beta) for c in cand)))
                            if trial == s:
                                return q, mat
    return None


def recognize_S2_symbol(s: SeifertSymbol) -> Recognition:
    """Recognize a closed symbol over the sphere.

    At most two exceptional fibers means a lens space: p is the order of
    the abelianized group (0 meaning infinite, hence S2xS1; 1 meaning
    S3), and q comes from the bounded sewing-matrix search, reported
    with its witness. Three fibers with a platonic index triple give
    Platonic; anything else is Generic. Raises WrongBase away from the
    closed sphere orbit.
    """
    s = normalize_symbol(s)
    if s.class_part != _S2 or not s.is_closed:
        raise WrongBase("recognition needs a closed symbol with orbit (O,o,0)")
    pairs = s.pairs
    if len(pairs) >= 3:
        triple = tuple(sorted(p.mu for p in pairs))
        if len(pairs) == 3 and is_platonic_triple(triple):
            return Recognition("Platonic", triple=triple)
        return Recognition("Generic")
    p = abelianization(pi1_presentation(s)).order()
    hit = _search_witness(s, p)
    if hit is None:
        raise RuntimeError(
            f"sewing-matrix search exhausted without witness for {s}")
    q, mat = hit
    params = lens_normalize(p, q)
    if p == 0:
        return Recognition("S2xS1", lens=params, witness=mat)
    if p == 1:
        return Recognition("S3", lens=params, witness=mat)
    return Recognition("Lens", lens=params, witness=mat)
