"""Partitioned surfaces and their totally separated closures.

For a surface of genus g whose boundary components are split into blocks
P_0, ..., P_k (P_0 holds the basepoint), the closure glues a planar piece to
each block, joining its m_i + 1 components into one.  Its fundamental group
is free on

* x1 .. x{2g}: the handles of S,
* a{i}.{j}, b{i}.{j} (j = 1..m_i): a loop around component j of block i and
  a dual loop running through the glued piece,
* z1 .. zk: the new boundary loops, of weight 2.

The weight-1 letters, in declaration order, are the symplectic basis of
H(Sigma) with <x_{2r-1}, x_{2r}> = <a_i.j, b_i.j> = 1.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .errors import AlphabetMismatch, BadPartition, DimensionMismatch
from .freegroup import Alphabet, Word, commutator, product
from .lieweighted import degree_two_class


@dataclass(frozen=True)
class PartitionedSurface:
    genus: int
    blocks: tuple

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(int(b) for b in self.blocks))
        if self.genus < 0 or not self.blocks or any(b < 1 for b in self.blocks):
            raise BadPartition(f"genus {self.genus}, blocks {list(self.blocks)}")

    @property
    def n(self):
        return sum(self.blocks)

    @property
    def b(self):
        return len(self.blocks)

    @classmethod
    def from_json(cls, data):
        return cls(int(data["genus"]), tuple(data["blocks"]))

    def to_json(self):
        return {"genus": self.genus, "blocks": list(self.blocks)}


@dataclass(frozen=True)
class NClass:
    """Element of wedge^2 H + Z^k: wedge maps (u, v), u < v, to a coefficient."""

    wedge: dict = field(default_factory=dict)
    z: tuple = ()

    def __add__(self, other):
        w = dict(self.wedge)
        for key, c in other.wedge.items():
            w[key] = w.get(key, 0) + c
        return NClass({k: c for k, c in w.items() if c}, tuple(a + b for a, b in zip(self.z, other.z)))

    def __neg__(self):
        return NClass({k: -c for k, c in self.wedge.items()}, tuple(-a for a in self.z))

    def is_zero(self):
        return not self.wedge and not any(self.z)


class ModelBase:
    """Shared machinery for a free group with a symplectic weight-1 part.

    Subclasses set ``alphabet`` (weight-1 letters first, in symplectic pairs,
    then the weight-2 boundary letters), ``boundary_word`` and ``d_blocks``:
    for each block 0..k the H-indices spanning its boundary subspace.
    """

    alphabet: Alphabet
    d_blocks: list

    def _setup(self):
        names, weights = self.alphabet.names, self.alphabet.weights
        self.rank_h = sum(1 for w in weights if w == 1)
        if any(w != 1 for w in weights[:self.rank_h]):
            raise ValueError("weight-1 letters must come first")
        self.k = len(names) - self.rank_h
        self.h_names = names[:self.rank_h]
        self.z_names = names[self.rank_h:]
        self.wedge_pairs = list(combinations(range(self.rank_h), 2))
        self.wedge_index = {p: i for i, p in enumerate(self.wedge_pairs)}

    # --- words -------------------------------------------------------------

    def word(self, text):
        return self.alphabet.parse(text)

    def gen(self, name):
        return self.alphabet.gen(name)

    def identity(self):
        return self.alphabet.identity()

    def z(self, i):
        """Boundary letter z_i, 1-based."""
        return Word(self.alphabet, (self.rank_h + i,))

    # --- homology ----------------------------------------------------------

    def omega(self, u, v) -> int:
        if len(u) != self.rank_h or len(v) != self.rank_h:
            raise DimensionMismatch("vectors must have length rank H")
        return sum(u[r] * v[r + 1] - u[r + 1] * v[r] for r in range(0, self.rank_h, 2))

    def omega_matrix(self):
        n = self.rank_h
        M = [[0] * n for _ in range(n)]
        for u in range(0, n, 2):
            M[u][u + 1], M[u + 1][u] = 1, -1
        return M

    def partner(self, u):
        """(v, s) with omega(e_u, e_v) = s, the only nonzero pairing of e_u."""
        return (u + 1, 1) if u % 2 == 0 else (u - 1, -1)

    def basis_vector(self, name_or_index):
        u = self.alphabet.index[name_or_index] if isinstance(name_or_index, str) else name_or_index
        v = [0] * self.rank_h
        v[u] = 1
        return v

    def homology_class(self, w: Word):
        if w.alphabet != self.alphabet:
            raise AlphabetMismatch("word over a different alphabet")
        v = [0] * self.rank_h
        for a in w.letters:
            i = abs(a) - 1
            if i < self.rank_h:
                v[i] += 1 if a > 0 else -1
        return v

    def is_partition_separating(self, w: Word) -> bool:
        return not any(self.homology_class(w))

    def block_span(self, i):
        return [self.basis_vector(u) for u in self.d_blocks[i]]

    def boundary_span(self):
        return [self.basis_vector(u) for blk in self.d_blocks for u in blk]

    def perp_indices(self):
        """Basis indices spanning D(Sigma)^perp (D is spanned by basis vectors)."""
        d = {u for blk in self.d_blocks for u in blk}
        return [u for u in range(self.rank_h) if self.partner(u)[0] not in d]

    @property
    def D(self):
        return len(self.perp_indices())

    def rank_w(self):
        return comb(self.D, 3) + self.D * self.k

    # --- degree-2 classes --------------------------------------------------

    def n_class(self, w: Word) -> NClass:
        if w.alphabet != self.alphabet:
            raise AlphabetMismatch("word over a different alphabet")
        wedge, zs = degree_two_class(w)
        z = [0] * self.k
        for idx, c in zs.items():
            z[idx - self.rank_h] = c
        return NClass(wedge, tuple(z))

    def n_zero(self) -> NClass:
        return NClass({}, (0,) * self.k)

    def n_vector(self, c: NClass):
        v = [0] * (len(self.wedge_pairs) + self.k)
        for p, coef in c.wedge.items():
            v[self.wedge_index[p]] = coef
        v[len(self.wedge_pairs):] = c.z
        return v

    @property
    def rank_n(self):
        return len(self.wedge_pairs) + self.k

    def symplectic_class(self) -> NClass:
        return NClass({(u, u + 1): 1 for u in range(0, self.rank_h, 2)}, (0,) * self.k)

    def wedge_of(self, u, v) -> NClass:
        """u ^ v for H-vectors, as an NClass with zero z-part."""
        out = {}
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if b and i != j:
                    key, sgn = ((i, j), 1) if i < j else ((j, i), -1)
                    out[key] = out.get(key, 0) + sgn * a * b
        return NClass({p: c for p, c in out.items() if c}, (0,) * self.k)


class FreeModel(ModelBase):
    """A model given directly by its alphabet, boundary word and D-blocks."""

    def __init__(self, alphabet, boundary_word, d_blocks, label="model"):
        self.alphabet = alphabet
        self.boundary_word = boundary_word
        self.d_blocks = [list(b) for b in d_blocks]
        self.label = label
        self._setup()
        if len(self.d_blocks) != self.k + 1:
            raise ValueError("need one D-block per boundary letter plus the basepoint block")

    def describe(self):
        return {"label": self.label, "rank_H": self.rank_h, "k": self.k,
                "alphabet": [[n, w] for n, w in zip(self.alphabet.names, self.alphabet.weights)],
                "boundary_word": str(self.boundary_word), "D_perp_rank": self.D}


class SurfaceModel(ModelBase):
    """Presentation data for one partitioned surface."""

    def __init__(self, ps: PartitionedSurface):
        self.surface = ps
        g = self.genus = ps.genus
        self.block_sizes = ps.blocks
        self.m = [s - 1 for s in ps.blocks]
        symbols = [(f"x{i}", 1) for i in range(1, 2 * g + 1)]
        for i, mi in enumerate(self.m):
            for j in range(1, mi + 1):
                symbols += [(f"a{i}.{j}", 1), (f"b{i}.{j}", 1)]
        symbols += [(f"z{i}", 2) for i in range(1, len(self.m))]
        self.alphabet = Alphabet(symbols)
        self._setup()
        self.d_blocks = [[self.alphabet.index[f"a{i}.{j}"] for j in range(1, mi + 1)]
                         for i, mi in enumerate(self.m)]
        self.boundary_word = self._boundary_word()

    def x(self, r):
        return self.gen(f"x{r}")

    def a(self, i, j):
        return self.gen(f"a{i}.{j}")

    def b(self, i, j):
        return self.gen(f"b{i}.{j}")

    def handle_product(self):
        return product([commutator(self.x(2 * r - 1), self.x(2 * r)) for r in range(1, self.genus + 1)],
                       self.alphabet)

    def alpha(self, i, j):
        """Loop around boundary component j of block i, as a word."""
        if j >= 1:
            return self.a(i, j)
        if i == 0:
            raise ValueError("the basepoint component is not a free generator")
        inner = product([self.a(i, t).conj(self.b(i, t)) for t in range(1, self.m[i] + 1)], self.alphabet)
        return self.z(i) * inner.inverse()

    def zeta(self, i):
        """Boundary loop of block i inside S (product of its components)."""
        return product([self.alpha(i, j) for j in range(self.m[i] + 1)], self.alphabet)

    def _boundary_word(self) -> Word:
        lead = product([(self.a(0, j).inverse()).conj(self.b(0, j)) for j in range(self.m[0], 0, -1)],
                       self.alphabet)
        tail = product([self.a(0, j) for j in range(1, self.m[0] + 1)]
                       + [self.handle_product()]
                       + [self.zeta(i) for i in range(1, self.k + 1)], self.alphabet)
        return (lead * tail).inverse()

    def boundary_class(self, i, j):
        v = [0] * self.rank_h
        if j >= 1:
            v[self.alphabet.index[f"a{i}.{j}"]] = 1
        else:
            for t in range(1, self.m[i] + 1):
                v[self.alphabet.index[f"a{i}.{t}"]] = -1
        return v

    @property
    def boundary_classes(self):
        return {(i, j): self.boundary_class(i, j) for i, mi in enumerate(self.m) for j in range(mi + 1)}

    @property
    def D(self):
        return 2 * self.genus + self.surface.n - self.surface.b

    def describe(self):
        return {
            "surface": self.surface.to_json(),
            "genus_hat": self.rank_h // 2,
            "rank_H": self.rank_h,
            "k": self.k,
            "alphabet": [[n, w] for n, w in zip(self.alphabet.names, self.alphabet.weights)],
            "boundary_word": str(self.boundary_word),
            "boundary_classes": {f"{i}.{j}": v for (i, j), v in self.boundary_classes.items()},
            "D_perp_rank": self.D,
            "rank_W": self.rank_w(),
        }


def build_model(ps) -> SurfaceModel:
    if isinstance(ps, dict):
        ps = PartitionedSurface.from_json(ps)
    return SurfaceModel(ps)


def model(genus, blocks) -> SurfaceModel:
    return SurfaceModel(PartitionedSurface(genus, tuple(blocks)))
