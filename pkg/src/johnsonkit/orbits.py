"""Deciding when two curves on a one-boundary surface lie in one orbit of the
Johnson kernel, plus the stabilizer images and the Betti rank formula."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .errors import (AlphabetMismatch, BadPartition, HomologyZero, NotHomologous,
                     NotSeparatingClass, NotSymplectic, NotUnimodularPair, OmegaMismatch)
from .freegroup import Word
from .johnson import tau, wedge3_of
from .lieweighted import LieElement, bracket, lcs_class
from .surface import PartitionedSurface, model
from .zlinalg import IntMatrix, kernel_basis, lattice_basis, submodule_contains

NONSEPARATING = "Nonseparating"
SEPARATING = "Separating"


@dataclass
class CurvePair:
    genus: int
    gamma: Word
    delta: Word
    kind: str = NONSEPARATING

    @classmethod
    def parse(cls, genus, gamma: str, delta: str, kind=NONSEPARATING):
        M = closed_model(genus)
        return cls(genus, M.word(gamma), M.word(delta), kind)


@dataclass
class Verdict:
    equivalent: bool
    cls: LieElement
    witness: list | None = None
    generators: list = field(default_factory=list)

    @property
    def verdict(self):
        return "Equivalent" if self.equivalent else "NotEquivalent"

    def to_json(self):
        out = {"verdict": self.verdict, "class": lie_json(self.cls)}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def lie_json(x: LieElement):
    from .lieweighted import bracket_string
    return {"degree": x.degree,
            "terms": [[bracket_string(x.alphabet, m), c] for m, c in sorted(x.coeffs.items())]}


def closed_model(genus):
    """The model of the surface of the given genus with one boundary component."""
    return model(genus, [1])


def _check_alphabet(M, *words):
    for w in words:
        if w.alphabet != M.alphabet:
            raise AlphabetMismatch("curves must be words in x1..x2g")


def _degree_one(M, vec) -> LieElement:
    return LieElement(M.alphabet, 1, {(t,): c for t, c in enumerate(vec) if c})


def _decide(target: LieElement, gens):
    vecs = [g.vector() for g in gens]
    ok, witness = submodule_contains(vecs, target.vector())
    return Verdict(ok, target, witness if ok else None, gens)


def nonsep_equivalent(p: CurvePair) -> Verdict:
    """Equivalent iff the degree-two class of gamma delta^-1 lies in a ^ H."""
    M = closed_model(p.genus)
    _check_alphabet(M, p.gamma, p.delta)
    a = M.homology_class(p.gamma)
    if a != M.homology_class(p.delta):
        raise NotHomologous(f"{p.gamma} and {p.delta}")
    if not any(a):
        raise HomologyZero(str(p.gamma))
    cls = lcs_class(p.gamma * p.delta.inverse(), 2)
    A = _degree_one(M, a)
    gens = [bracket(A, LieElement.generator(M.alphabet, n)) for n in M.h_names]
    return _decide(cls, gens)


def sep_equivalent(p: CurvePair) -> Verdict:
    """Equivalent iff the degree-three class of gamma delta^-1 lies in the
    bracket image of H (x) omega_V, where omega_V is the shared degree-two
    class of the two curves."""
    M = closed_model(p.genus)
    _check_alphabet(M, p.gamma, p.delta)
    for w in (p.gamma, p.delta):
        if any(M.homology_class(w)):
            raise NotSeparatingClass(str(w))
    omega_v = lcs_class(p.gamma, 2)
    if omega_v != lcs_class(p.delta, 2):
        raise OmegaMismatch("the curves cut off different subspaces")
    cls = lcs_class(p.gamma * p.delta.inverse(), 3)
    gens = [bracket(LieElement.generator(M.alphabet, n), omega_v) for n in M.h_names]
    return _decide(cls, gens)


def _pairing_check(M, V_basis):
    """V_basis lists a1, b1, a2, b2, ...; raise unless it is symplectic."""
    if len(V_basis) % 2:
        raise NotSymplectic("odd number of basis vectors")
    for s, u in enumerate(V_basis):
        if len(u) != M.rank_h:
            raise NotSymplectic("basis vector of the wrong length")
        for t, v in enumerate(V_basis):
            want = 0
            if s // 2 == t // 2 and s != t:
                want = 1 if s < t else -1
            if M.omega(u, v) != want:
                raise NotSymplectic(f"pairing of basis vectors {s} and {t}")


def standard_basis(genus, handles):
    """Symplectic basis of the span of the first ``handles`` handles."""
    M = closed_model(genus)
    return [M.basis_vector(t) for t in range(2 * handles)]


def standard_curve(genus, handles) -> Word:
    """Product of commutators over the first ``handles`` handles."""
    M = closed_model(genus)
    out = M.identity()
    for r in range(handles):
        out = out * (M.gen(f"x{2 * r + 1}") * M.gen(f"x{2 * r + 2}")
                     * M.gen(f"x{2 * r + 1}").inverse() * M.gen(f"x{2 * r + 2}").inverse())
    return out


def _wedge_lie(M, n) -> LieElement:
    out = LieElement(M.alphabet, 2)
    for (u, v), c in n.wedge.items():
        out = out + c * bracket(LieElement(M.alphabet, 1, {(u,): 1}), LieElement(M.alphabet, 1, {(v,): 1}))
    return out


def theta(m, V_basis) -> LieElement:
    """Degree-three class of m(gamma) gamma^-1 for any gamma with degree-two
    class omega_V, computed from tau(m) and the bracket alone."""
    M = m.model
    _pairing_check(M, V_basis)
    f = tau(m)
    out = LieElement(M.alphabet, 3)
    for a, b in zip(V_basis[0::2], V_basis[1::2]):
        out = out + bracket(_degree_one(M, a), _wedge_lie(M, f(b)))
        out = out - bracket(_degree_one(M, b), _wedge_lie(M, f(a)))
    return out


# --- stabilizer images ----------------------------------------------------------

def triples(M):
    n = M.rank_h
    return [(u, v, w) for u in range(n) for v in range(u + 1, n) for w in range(v + 1, n)]


def wedge3_vector(M, w3: dict):
    return [w3.get(t, 0) for t in triples(M)]


def _perp(M, vecs):
    """Integer basis of the vectors pairing to zero with every vector in vecs."""
    if not vecs:
        return [M.basis_vector(t) for t in range(M.rank_h)]
    A = IntMatrix.from_rows([[M.omega(v, M.basis_vector(t)) for t in range(M.rank_h)] for v in vecs])
    return [list(k) for k in kernel_basis(A)]


def _all_triples(M, basis):
    out = []
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            for k in range(j + 1, len(basis)):
                out.append(wedge3_vector(M, wedge3_of(M, basis[i], basis[j], basis[k])))
    return out


def stab_image_nonsep(a, b, genus=None):
    """Lattice basis of wedge^3(a-perp) + b ^ a ^ a-perp inside wedge^3 H."""
    genus = genus if genus is not None else len(a) // 2
    M = closed_model(genus)
    if len(a) != M.rank_h or len(b) != M.rank_h or M.omega(a, b) != 1:
        raise NotUnimodularPair("need omega(a, b) = 1")
    perp = _perp(M, [a])
    gens = _all_triples(M, perp)
    gens += [wedge3_vector(M, wedge3_of(M, b, a, u)) for u in perp]
    return lattice_basis(gens)


def stab_image_sep(V_basis, genus=None):
    """Lattice basis of wedge^3 V + wedge^3 V-perp + V-perp ^ omega_V."""
    genus = genus if genus is not None else len(V_basis[0]) // 2
    M = closed_model(genus)
    _pairing_check(M, V_basis)
    perp = _perp(M, V_basis)
    gens = _all_triples(M, V_basis) + _all_triples(M, perp)
    for u in perp:
        w3 = {}
        for a, b in zip(V_basis[0::2], V_basis[1::2]):
            for key, c in wedge3_of(M, u, a, b).items():
                w3[key] = w3.get(key, 0) + c
        gens.append(wedge3_vector(M, w3))
    return lattice_basis(gens)


def in_subspace(basis, vec):
    return submodule_contains(basis, vec)[0] if basis else not any(vec)


# --- rank formula ------------------------------------------------------------------

def betti(genus, n, b):
    """Rank of the image of the Johnson homomorphism for genus g, n boundary
    components and b blocks: C(D, 3) + D (b - 1) with D = 2g + n - b."""
    if genus < 0 or n < 1 or not 1 <= b <= n:
        raise BadPartition(f"genus={genus} n={n} b={b}")
    D = 2 * genus + n - b
    return comb(D, 3) + D * (b - 1)


def betti_model_blocks(n, b):
    """A block partition of n components into b blocks (used to build a model)."""
    if n < 1 or not 1 <= b <= n:
        raise BadPartition(f"n={n} b={b}")
    return PartitionedSurface(0, tuple([n - b + 1] + [1] * (b - 1))).blocks
