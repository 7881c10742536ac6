"""Mapping classes acting on the closure group, and the partitioned Johnson
homomorphism with its target W, pushforwards and basepoint change.

A mapping class is stored as an endomorphism of the free group of the
closure together with optional arc elements ``arc_images[i]``: the loop
phi(A_i) A_i^-1 for the arc A_i from the basepoint to block i (i >= 1).
Arc elements for individual components are recovered from the endomorphism
(see :func:`component_arcs`).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import (AlphabetMismatch, BadBlock, DimensionMismatch, EmbeddingNotOrthogonal, MissingArcData,
                     NotTorelli, TruncationTooLow)
from .freegroup import Alphabet, Endo, Word, apply, commutator, conjugate_equal, product
from .lieweighted import in_filtration
from .surface import FreeModel, NClass, SurfaceModel
from .zlinalg import IntMatrix, determinant, submodule_contains


class MappingClass:
    def __init__(self, model, endo: Endo, arc_images=None, inverse=None, label=""):
        self.model = model
        self.endo = endo
        self.arc_images = dict(arc_images) if arc_images is not None else None
        self._inverse = inverse
        self.label = label

    @classmethod
    def identity(cls, model):
        m = cls(model, Endo.identity(model.alphabet),
                {i: model.identity() for i in range(1, model.k + 1)}, label="id")
        m._inverse = m
        return m

    def __call__(self, w):
        return apply(self.endo, w)

    @property
    def inverse(self):
        if self._inverse is None:
            raise ValueError(f"no inverse recorded for {self.label or 'this mapping class'}")
        return self._inverse

    def has_inverse(self):
        return self._inverse is not None

    def compose(self, other: "MappingClass") -> "MappingClass":
        """self after other; arcs compose as d(self o other) = self(d_other) d_self."""
        endo = self.endo.compose(other.endo)
        arcs = None
        if self.arc_images is not None and other.arc_images is not None:
            arcs = {i: self(other.arc_images[i]) * self.arc_images[i] for i in self.arc_images}
        out = MappingClass(self.model, endo, arcs, label=f"{self.label}*{other.label}")
        if self._inverse is not None and other._inverse is not None:
            inv = MappingClass(self.model, other._inverse.endo.compose(self._inverse.endo),
                               None, out, label=f"({self.label}*{other.label})^-1")
            if other._inverse.arc_images is not None and self._inverse.arc_images is not None:
                inv.arc_images = {i: other._inverse(self._inverse.arc_images[i]) * other._inverse.arc_images[i]
                                  for i in self._inverse.arc_images}
            out._inverse = inv
        return out

    def __mul__(self, other):
        return self.compose(other)

    def conj(self, other: "MappingClass") -> "MappingClass":
        """self * other * self^-1."""
        return self.compose(other).compose(self.inverse)

    def power(self, n):
        if n < 0:
            return self.inverse.power(-n)
        out = MappingClass.identity(self.model)
        for _ in range(n):
            out = self.compose(out)
        return out

    def __repr__(self):
        return f"MappingClass({self.label or '?'})"


# --- validation ------------------------------------------------------------

def h_matrix(m: MappingClass):
    """Integer matrix of the induced map on H (column t = class of phi(e_t))."""
    M = m.model
    cols = [M.homology_class(m.endo.images[t]) for t in range(M.rank_h)]
    return IntMatrix.from_columns(cols, M.rank_h) if cols else IntMatrix(0, 0)


def validate(m: MappingClass) -> dict:
    """Necessary conditions for m to come from a homeomorphism."""
    M = m.model
    out = {}
    bw = M.boundary_word
    img = m(bw)
    out["fixes_boundary_word"] = {"pass": img == bw, "witness": None if img == bw else str(img)}
    bad = []
    for i in range(1, M.k + 1):
        zi = M.z(i)
        if not conjugate_equal(m(zi), zi):
            bad.append(M.z_names[i - 1])
    out["boundary_letters_conjugate"] = {"pass": not bad, "witness": bad or None}
    det = determinant(h_matrix(m)) if M.rank_h else 1
    out["invertible_on_H"] = {"pass": abs(det) == 1, "witness": None if abs(det) == 1 else det}
    if m.arc_images is not None:
        bad = []
        for i in range(1, M.k + 1):
            d = m.arc_images.get(i)
            zi = M.z(i)
            if d is None or m(zi) != zi.conj(d):
                bad.append(i)
        out["arcs_consistent"] = {"pass": not bad, "witness": bad or None}
    out["all_pass"] = all(v["pass"] for v in out.values())
    return out


def is_torelli(m: MappingClass) -> bool:
    M = m.model
    return all(M.homology_class(m.endo.images[t]) == M.basis_vector(t) for t in range(M.rank_h))


# --- tau and HomHN -----------------------------------------------------------

@dataclass
class HomHN:
    """Homomorphism H -> N stored as one NClass per H basis vector."""

    model: object
    columns: list

    def __call__(self, x):
        out = self.model.n_zero()
        for t, c in enumerate(x):
            if c:
                col = self.columns[t]
                out = out + NClass({p: c * v for p, v in col.wedge.items()}, tuple(c * v for v in col.z))
        return out

    def vector(self):
        out = []
        for col in self.columns:
            out.extend(self.model.n_vector(col))
        return out

    def __add__(self, other):
        return HomHN(self.model, [a + b for a, b in zip(self.columns, other.columns)])

    def __neg__(self):
        return HomHN(self.model, [-a for a in self.columns])

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        return isinstance(other, HomHN) and self.vector() == other.vector()

    def is_zero(self):
        return all(c.is_zero() for c in self.columns)


def tau(m: MappingClass) -> HomHN:
    """x -> class of phi(x) x^-1 in N, for each weight-1 generator x."""
    if not is_torelli(m):
        raise NotTorelli(m.label)
    M = m.model
    gens = M.alphabet.gens()
    return HomHN(M, [M.n_class(m.endo.images[t] * gens[t].inverse()) for t in range(M.rank_h)])


def delta(f: HomHN, i: int):
    """The H-class d with z_i-coefficient of f(x) equal to omega(x, d)."""
    M = f.model
    if not 1 <= i <= M.k:
        raise BadBlock(i)
    d = [0] * M.rank_h
    for u in range(M.rank_h):
        v, s = M.partner(u)
        # omega(e_v, e_u) = -s, so the z-coefficient of f(e_v) is -s * d_u
        d[u] = -s * f.columns[v].z[i - 1]
    return d


def d_arc(m: MappingClass, i: int):
    if m.arc_images is None or i not in m.arc_images:
        raise MissingArcData(i)
    return m.model.homology_class(m.arc_images[i])


# --- W ---------------------------------------------------------------------

def _sorted_triple(u, v, w):
    """Sort three distinct indices, returning (triple, sign of the permutation)."""
    t = [u, v, w]
    sign = 1
    for a in range(3):
        for b in range(2 - a):
            if t[b] > t[b + 1]:
                t[b], t[b + 1] = t[b + 1], t[b]
                sign = -sign
    return tuple(t), sign


def jacobi_hom(model, wedge3: dict) -> HomHN:
    """Image of a wedge^3 element: u^v^w -> (x -> <x,u> v^w + <x,v> w^u + <x,w> u^v)."""
    cols = [dict() for _ in range(model.rank_h)]
    for (u, v, w), c in wedge3.items():
        for p, q, r in ((u, v, w), (v, w, u), (w, u, v)):
            x, s = model.partner(p)  # omega(e_x, e_p) = -s
            key, sg = ((q, r), 1) if q < r else ((r, q), -1)
            cols[x][key] = cols[x].get(key, 0) - s * sg * c
    return HomHN(model, [NClass({k: v for k, v in col.items() if v}, (0,) * model.k) for col in cols])


@dataclass
class WElement:
    """wedge3: {(u, v, w) sorted: coef}; delta: {block i: H-vector}."""

    model: object
    wedge3: dict = field(default_factory=dict)
    delta: dict = field(default_factory=dict)

    def hom(self) -> HomHN:
        M = self.model
        f = jacobi_hom(M, self.wedge3)
        cols = []
        for t, col in enumerate(f.columns):
            z = list(col.z)
            x = M.basis_vector(t)
            for i, d in self.delta.items():
                z[i - 1] += M.omega(x, d)
            cols.append(NClass(col.wedge, tuple(z)))
        return HomHN(M, cols)

    def normalized(self):
        w3 = {k: v for k, v in self.wedge3.items() if v}
        dl = {i: list(d) for i, d in self.delta.items() if any(d)}
        return w3, dl

    def __eq__(self, other):
        return isinstance(other, WElement) and self.normalized() == other.normalized()

    def __add__(self, other):
        w3 = dict(self.wedge3)
        for k, v in other.wedge3.items():
            w3[k] = w3.get(k, 0) + v
        dl = {i: list(d) for i, d in self.delta.items()}
        for i, d in other.delta.items():
            dl[i] = [a + b for a, b in zip(dl.get(i, [0] * len(d)), d)]
        return WElement(self.model, {k: v for k, v in w3.items() if v}, dl)

    def __neg__(self):
        return WElement(self.model, {k: -v for k, v in self.wedge3.items()},
                        {i: [-a for a in d] for i, d in self.delta.items()})

    def is_zero(self):
        w3, dl = self.normalized()
        return not w3 and not dl

    def to_json(self):
        M = self.model
        w3, dl = self.normalized()
        return {"wedge3": [[M.h_names[u], M.h_names[v], M.h_names[w], c] for (u, v, w), c in sorted(w3.items())],
                "delta": {str(i): d for i, d in sorted(dl.items())}}

    @classmethod
    def from_json(cls, model, data):
        w3 = {}
        for u, v, w, c in data.get("wedge3", []):
            idx = [model.alphabet.index[t] if isinstance(t, str) else int(t) for t in (u, v, w)]
            if len(set(idx)) < 3:
                continue
            key, sg = _sorted_triple(*idx)
            w3[key] = w3.get(key, 0) + sg * int(c)
        dl = {}
        for i, d in data.get("delta", {}).items():
            if len(d) != model.rank_h:
                raise DimensionMismatch(f"delta vector of length {len(d)}")
            dl[int(i)] = [int(a) for a in d]
        return cls(model, {k: v for k, v in w3.items() if v}, dl)

    def __repr__(self):
        M = self.model
        bits = []
        for (u, v, w), c in sorted(self.wedge3.items()):
            if c:
                bits.append(f"{c}*{M.h_names[u]}^{M.h_names[v]}^{M.h_names[w]}")
        for i, d in sorted(self.delta.items()):
            if any(d):
                terms = "+".join(f"{c}*{M.h_names[t]}" for t, c in enumerate(d) if c)
                bits.append(f"({terms})^{M.z_names[i - 1]}")
        return "WElement(" + (" + ".join(bits) or "0") + ")"


def wedge_part_to_wedge3(f: HomHN):
    """Candidate wedge^3 element read from the wedge part of f.

    The coefficient of u^v^w (u < v < w) is recovered from f at the
    symplectic partner of u.  Returns (wedge3, exact) where exact says
    whether its Jacobi image reproduces the whole wedge part of f.
    """
    M = f.model
    w3 = {}
    for u in range(M.rank_h):
        x, s = M.partner(u)  # omega(e_x, e_u) = -s
        for (v, w), c in f.columns[x].wedge.items():
            if v > u and c:
                w3[(u, v, w)] = -s * c
    w3 = {k: v for k, v in w3.items() if v}
    J = jacobi_hom(M, w3)
    exact = all(J.columns[t].wedge == f.columns[t].wedge for t in range(M.rank_h))
    return w3, exact


def in_W(f: HomHN):
    """Check the three defining conditions of W; returns (ok, first failure)."""
    M = f.model
    w3, exact = wedge_part_to_wedge3(f)
    if not exact:
        return False, "I"
    for i in range(1, M.k + 1):
        d = delta(f, i)
        for u in M.d_blocks[i]:
            a = M.basis_vector(u)
            if M.n_vector(f(a)) != M.n_vector(M.wedge_of(d, a)):
                return False, "II"
    for u in M.d_blocks[0]:
        if not f(M.basis_vector(u)).is_zero():
            return False, "III"
    return True, None


def jacobi_lattice_contains(f: HomHN):
    """Condition (I) decided by lattice membership against the Jacobi image
    of the wedge^3 basis (slower; used to cross-check wedge_part_to_wedge3)."""
    M = f.model
    gens = []
    for t in combinations(range(M.rank_h), 3):
        g = jacobi_hom(M, {t: 1}).vector()
        gens.append(g)
    target = HomHN(M, [NClass(c.wedge, (0,) * M.k) for c in f.columns]).vector()
    if not gens:
        return not any(target), None
    return submodule_contains(gens, target)


def to_welement(f: HomHN) -> WElement:
    """Express f as a W element; raises ValueError if f is not in W."""
    ok, why = in_W(f)
    if not ok:
        raise ValueError(f"not in W: condition {why} fails")
    w3, _ = wedge_part_to_wedge3(f)
    return WElement(f.model, w3, {i: delta(f, i) for i in range(1, f.model.k + 1)})


def tau_w(m: MappingClass) -> WElement:
    return to_welement(tau(m))


def wedge3_of(model, u, v, w) -> dict:
    """Expand u^v^w for H-vectors into sorted-triple coordinates."""
    out = {}
    for i, a in enumerate(u):
        if not a:
            continue
        for j, b in enumerate(v):
            if not b or j == i:
                continue
            for l, c in enumerate(w):
                if not c or l in (i, j):
                    continue
                key, sg = _sorted_triple(i, j, l)
                out[key] = out.get(key, 0) + sg * a * b * c
    return {k: c for k, c in out.items() if c}


def wedge_with_omega(model, d) -> dict:
    """d ^ omega, omega the sum of the symplectic pairs."""
    out = {}
    for p in range(0, model.rank_h, 2):
        for k, c in wedge3_of(model, d, model.basis_vector(p), model.basis_vector(p + 1)).items():
            out[k] = out.get(k, 0) + c
    return {k: c for k, c in out.items() if c}


# --- partitioned Johnson filtration ----------------------------------------------

def component_arcs(m: MappingClass) -> dict:
    """Arc element for every boundary component (i, j) of S except (0, 0)."""
    M = m.model
    if not isinstance(M, SurfaceModel):
        raise TypeError("component arcs need a SurfaceModel")
    if M.k and m.arc_images is None:
        raise MissingArcData("arc images are required for models with several blocks")
    arcs = {}
    for i, mi in enumerate(M.m):
        base = M.identity() if i == 0 else m.arc_images[i]
        if i:
            arcs[(i, 0)] = base
        for j in range(1, mi + 1):
            b = M.b(i, j)
            arcs[(i, j)] = m(b).inverse() * base * b
    return arcs


def s_generators(M: SurfaceModel):
    """Free generators of pi_1(S) written in the closure alphabet."""
    gens = [M.x(r) for r in range(1, 2 * M.genus + 1)]
    for i, mi in enumerate(M.m):
        for j in range(0 if i else 1, mi + 1):
            gens.append(M.alpha(i, j))
    return gens


DEFAULT_TRUNCATION = 5


def filtration_member(m: MappingClass, kk: int, K: int = DEFAULT_TRUNCATION) -> bool:
    """Membership in the kk-th term of the partitioned Johnson filtration."""
    if kk > K:
        raise TruncationTooLow(f"level {kk} needs truncation at least {kk}, configured {K}")
    if kk <= 1:
        return True
    M = m.model
    for g in s_generators(M):
        if not in_filtration(m(g) * g.inverse(), kk):
            return False
    if M.k == 0 and all(mi == 0 for mi in M.m):
        return True
    arcs = component_arcs(m)
    for d in arcs.values():
        if not in_filtration(d, kk - 1):
            return False
    for i, mi in enumerate(M.m):
        comps = [arcs.get((i, j), M.identity()) for j in range(mi + 1)]
        for d in comps[1:]:
            if not in_filtration(d * comps[0].inverse(), kk):
                return False
    return True


# --- pushforwards ----------------------------------------------------------

@dataclass
class Piece:
    """A surface glued onto one boundary letter: genus and new boundary count."""

    genus: int = 0
    boundaries: int = 0


@dataclass
class Gluing:
    """Source model, target model and the word-level inclusion between them.

    ``pieces`` maps a source boundary index (0 = basepoint boundary, i >= 1 =
    letter z_i) to the glued piece.  ``letter_map`` sends source letters to
    target words; ``piece_letters[i]`` lists the target letters of piece i;
    ``omega_piece[i]`` is its symplectic class and ``new_z[i]`` its new
    boundary letters (target z indices, 1-based).
    """

    source: object
    target: object
    pieces: dict
    letter_map: dict
    h_embedding: list
    piece_letters: dict
    omega_piece: dict
    new_z: dict
    z_map: dict

    def include(self, w: Word) -> Word:
        letters = []
        for a in w.letters:
            im = self.letter_map[abs(a) - 1]
            letters.extend(im.letters if a > 0 else im.inverse().letters)
        return Word(self.target.alphabet, letters)


def glue(source, pieces: dict) -> Gluing:
    """Glue surfaces onto boundary letters of the closure of ``source``.

    A piece with genus 0 and no new boundary caps the boundary off.
    """
    for i in pieces:
        if not 0 <= i <= source.k:
            raise BadBlock(i)
    if 0 in pieces and pieces[0].genus == 0 and pieces[0].boundaries == 0:
        raise BadBlock("the basepoint boundary cannot be capped")
    h_names = list(source.h_names)
    next_x = 1 + max([int(n[1:]) for n in h_names if n.startswith("x")] or [0])
    piece_letters, piece_handles = {}, {}
    order = sorted(pieces, key=lambda i: (i == 0, i))
    for i in order:
        hs = []
        for _ in range(pieces[i].genus):
            hs.append((f"x{next_x}", f"x{next_x + 1}"))
            next_x += 2
        piece_handles[i] = hs
        h_names += [n for pair in hs for n in pair]
    # z letters: keep source order, replace glued ones in place, append basepoint piece's
    z_entries = []
    for i in range(1, source.k + 1):
        if i in pieces:
            z_entries += [("new", i, l) for l in range(pieces[i].boundaries)]
        else:
            z_entries.append(("old", i, None))
    if 0 in pieces:
        z_entries += [("new", 0, l) for l in range(pieces[0].boundaries)]
    z_names = [f"z{t + 1}" for t in range(len(z_entries))]
    target_alpha = Alphabet([(n, 1) for n in h_names] + [(n, 2) for n in z_names])
    T = target_alpha.gens()
    tindex = target_alpha.index

    z_map, new_z = {}, {i: [] for i in pieces}
    for t, (kind, i, l) in enumerate(z_entries):
        if kind == "old":
            z_map[i] = t + 1
        else:
            new_z[i].append(t + 1)

    def piece_word(i):
        hs = [commutator(T[tindex[x]], T[tindex[y]]) for x, y in piece_handles[i]]
        zs = [T[target_alpha.index[z_names[t - 1]]] for t in new_z[i]]
        return product(hs + zs, target_alpha)

    letter_map = {}
    for s, name in enumerate(source.alphabet.names):
        if s < source.rank_h:
            letter_map[s] = T[tindex[name]]
        else:
            i = s - source.rank_h + 1
            letter_map[s] = piece_word(i) if i in pieces else T[tindex[z_names[z_map[i] - 1]]]
    for i in pieces:
        piece_letters[i] = [tindex[n] for pair in piece_handles[i] for n in pair] + \
                           [target_alpha.index[z_names[t - 1]] for t in new_z[i]]

    def inc(w):
        letters = []
        for a in w.letters:
            im = letter_map[abs(a) - 1]
            letters.extend(im.letters if a > 0 else im.inverse().letters)
        return Word(target_alpha, letters)

    bw = inc(source.boundary_word)
    if 0 in pieces:
        # the new outer boundary: P' = P * (piece word), boundary word = P'^-1
        bw = (bw.inverse() * piece_word(0)).inverse()

    d_blocks = [list(source.d_blocks[0]) if 0 not in pieces else []]
    for kind, i, l in z_entries:
        d_blocks.append(list(source.d_blocks[i]) if kind == "old" else [])
    # glued blocks lose their boundary subspace
    target = FreeModel(target_alpha, bw, d_blocks, label="glued")
    h_embedding = [tindex[n] for n in source.h_names]
    omega_piece = {}
    for i in pieces:
        om = {}
        for x, y in piece_handles[i]:
            om[(tindex[x], tindex[y])] = 1
        omega_piece[i] = om
    return Gluing(source, target, pieces, letter_map, h_embedding, piece_letters, omega_piece, new_z, z_map)


def extend(gl: Gluing, m: MappingClass) -> MappingClass:
    """Extend m by the identity over the glued pieces."""
    src, tgt = gl.source, gl.target
    if m.arc_images is None and any(i > 0 for i in gl.pieces):
        raise MissingArcData("extension across a boundary letter needs its arc")
    images = [None] * len(tgt.alphabet)
    for s in range(len(src.alphabet)):
        im = gl.include(m.endo.images[s])
        w = gl.letter_map[s]
        if len(w.letters) == 1:
            images[abs(w.letters[0]) - 1] = im
    T = tgt.alphabet.gens()
    for i, letters in gl.piece_letters.items():
        d = tgt.identity() if i == 0 else gl.include(m.arc_images[i])
        for t in letters:
            images[t] = T[t].conj(d)
    endo = Endo(tgt.alphabet, images)
    arcs = None
    if m.arc_images is not None:
        arcs = {}
        for i, t in gl.z_map.items():
            arcs[t] = gl.include(m.arc_images[i])
        for i, zs in gl.new_z.items():
            for t in zs:
                arcs[t] = tgt.identity() if i == 0 else gl.include(m.arc_images[i])
    out = MappingClass(tgt, endo, arcs, label=f"ext({m.label})")
    return out


def pushforward(w: WElement, gl: Gluing) -> WElement:
    """Push a W element along a gluing.

    x^z_i goes to x^(omega_piece + sum of the piece's new z letters); a
    capped boundary (empty piece) sends x^z_i to 0; wedge^3 parts are
    carried along the embedding of H.
    """
    src, tgt = gl.source, gl.target
    if w.model is not src and w.model.alphabet != src.alphabet:
        raise DimensionMismatch("W element lives on a different model")
    emb = gl.h_embedding
    for u in range(src.rank_h):
        for v in range(src.rank_h):
            a = tgt.omega(_embed(emb, src.basis_vector(u), tgt.rank_h), _embed(emb, src.basis_vector(v), tgt.rank_h))
            if a != src.omega(src.basis_vector(u), src.basis_vector(v)):
                raise EmbeddingNotOrthogonal(f"pairing of {src.h_names[u]}, {src.h_names[v]} not preserved")
    w3 = {}
    for (u, v, x), c in w.wedge3.items():
        key, sg = _sorted_triple(emb[u], emb[v], emb[x])
        w3[key] = w3.get(key, 0) + sg * c
    dl = {}
    for i, d in w.delta.items():
        if not any(d):
            continue
        de = _embed(emb, d, tgt.rank_h)
        if i in gl.pieces:
            for (p, q), c in gl.omega_piece[i].items():
                for key, val in wedge3_of(tgt, de, tgt.basis_vector(p), tgt.basis_vector(q)).items():
                    w3[key] = w3.get(key, 0) + c * val
            for t in gl.new_z[i]:
                dl[t] = [a + b for a, b in zip(dl.get(t, [0] * tgt.rank_h), de)]
        else:
            t = gl.z_map[i]
            dl[t] = [a + b for a, b in zip(dl.get(t, [0] * tgt.rank_h), de)]
    return WElement(tgt, {k: c for k, c in w3.items() if c}, dl)


def _embed(emb, vec, n):
    out = [0] * n
    for u, c in enumerate(vec):
        out[emb[u]] += c
    return out


def capping(model, i: int) -> Gluing:
    if not 1 <= i <= model.k:
        raise BadBlock(i)
    return glue(model, {i: Piece(0, 0)})


def pushforward_capping(w: WElement, i: int) -> WElement:
    return pushforward(w, capping(w.model, i))


# --- basepoint change --------------------------------------------------------

def rebased_model(model, i: int) -> FreeModel:
    """Same letters, but the letter z_i now stands for the old basepoint
    boundary and block i holds the basepoint."""
    if not 1 <= i <= model.k:
        raise BadBlock(i)
    d_blocks = [list(b) for b in model.d_blocks]
    d_blocks[0], d_blocks[i] = d_blocks[i], d_blocks[0]
    sub = rebase_substitution(model, i)
    bw = apply(sub, model.z(i)).inverse()
    return FreeModel(model.alphabet, bw, d_blocks, label=f"rebased at block {i}")


def rebase_substitution(model, i: int) -> Endo:
    """Old letters in terms of the rebased letters: z_i -> L^-1 Z^-1 R^-1,
    where the old boundary relation reads L z_i R = (boundary word)^-1."""
    P = model.boundary_word.inverse()
    zl = model.rank_h + i  # signed letter of z_i
    pos = P.letters.index(zl)
    if P.letters.count(zl) != 1 or -zl in P.letters:
        raise BadBlock(f"boundary letter {i} does not occur exactly once")
    L = Word(model.alphabet, P.letters[:pos])
    R = Word(model.alphabet, P.letters[pos + 1:])
    Z = model.z(i)
    images = list(model.alphabet.gens())
    images[zl - 1] = L.inverse() * Z.inverse() * R.inverse()
    return Endo(model.alphabet, images)


def rebase_inverse_substitution(model, i: int) -> Endo:
    """Rebased letters in terms of the old ones: Z -> old boundary word."""
    images = list(model.alphabet.gens())
    images[model.rank_h + i - 1] = model.boundary_word
    return Endo(model.alphabet, images)


def rebase(m: MappingClass, i: int) -> MappingClass:
    """The same mapping class seen from a basepoint on boundary i."""
    M = m.model
    if m.arc_images is None or i not in m.arc_images:
        raise MissingArcData(i)
    d = m.arc_images[i]
    sub, back = rebase_substitution(M, i), rebase_inverse_substitution(M, i)
    target = rebased_model(M, i)
    images = [apply(sub, m(apply(back, t)).conj(d.inverse())) for t in M.alphabet.gens()]
    return MappingClass(target, Endo(M.alphabet, images), None, label=f"rebase({m.label})")


def basepoint_change(w: WElement, i: int) -> WElement:
    """W element after moving the basepoint to block i: subtract d ^ omega."""
    M = w.model
    if not 1 <= i <= M.k:
        raise BadBlock(i)
    d = list(w.delta.get(i, [0] * M.rank_h))
    w3 = dict(w.wedge3)
    for key, c in wedge_with_omega(M, d).items():
        w3[key] = w3.get(key, 0) - c
    dl = {}
    for j in range(1, M.k + 1):
        dj = w.delta.get(j, [0] * M.rank_h)
        dl[j] = [-a for a in d] if j == i else [a - b for a, b in zip(dj, d)]
    return WElement(rebased_model(M, i), {k: c for k, c in w3.items() if c}, dl)


# --- equivariance --------------------------------------------------------------

def act_on_n(model, H, c: NClass) -> NClass:
    """Push an N class forward along the H-matrix H (boundary letters fixed)."""
    out = NClass({}, tuple(c.z))
    for (u, v), coef in c.wedge.items():
        w = model.wedge_of(H.column(u), H.column(v))
        out = out + NClass({p: coef * x for p, x in w.wedge.items()}, (0,) * model.k)
    return out


def act(c: MappingClass, f: HomHN) -> HomHN:
    """c_* f = c_N o f o c_H^-1, the action on Hom(H, N)."""
    M = f.model
    H = h_matrix(c)
    Hinv = h_matrix(c.inverse)
    return HomHN(M, [act_on_n(M, H, f(Hinv.column(t))) for t in range(M.rank_h)])


# --- serialization ------------------------------------------------------------------

pushforward_inclusion = pushforward


def mapping_class_from_json(data) -> MappingClass:
    """Read {"surface": {...}, "images": {name: word}, "arcs": {i: word}};
    omitted generators are fixed."""
    from .surface import build_model

    M = build_model(data["surface"])
    images = {n: M.word(w) for n, w in data.get("images", {}).items()}
    for n in images:
        if n not in M.alphabet.index:
            raise AlphabetMismatch(f"unknown generator {n}")
    endo = Endo.from_dict(M.alphabet, images)
    arcs = None
    if "arcs" in data:
        arcs = {int(i): M.word(w) for i, w in data["arcs"].items()}
        for i in arcs:
            if not 1 <= i <= M.k:
                raise BadBlock(i)
    return MappingClass(M, endo, arcs, label=data.get("label", "input"))


def mapping_class_to_json(m: MappingClass) -> dict:
    M = m.model
    out = {"surface": M.surface.to_json(),
           "images": {n: str(m.endo.images[t]) for t, n in enumerate(M.alphabet.names)}}
    if m.arc_images is not None:
        out["arcs"] = {str(i): str(w) for i, w in sorted(m.arc_images.items())}
    if m.label:
        out["label"] = m.label
    return out
