"""Weighted Magnus expansion and the Lyndon basis of the free Lie ring.

A monomial is a tuple of generator indices; its weighted degree is the sum
of the generator weights.  Series are stored as one dict per degree.
Lexicographic order on monomials of equal length is the alphabet order, and
bracketed Lyndon words use the standard factorisation (longest proper Lyndon
suffix), so every bracket expands to its own word plus larger words.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product as iproduct

from .errors import AlphabetMismatch, NotInFiltration, NotLieElement
from .freegroup import Alphabet, Word


class TruncatedSeries:
    """Noncommutative integer polynomial truncated above weighted degree K."""

    __slots__ = ("alphabet", "K", "parts")

    def __init__(self, alphabet: Alphabet, K: int, parts=None):
        self.alphabet = alphabet
        self.K = K
        self.parts = parts if parts is not None else [{(): 1}] + [{} for _ in range(K)]

    @property
    def terms(self):
        return {m: c for part in self.parts for m, c in part.items()}

    def part(self, d):
        return self.parts[d] if d <= self.K else {}

    def __mul__(self, other):
        if self.alphabet != other.alphabet:
            raise AlphabetMismatch("series over different alphabets")
        K = min(self.K, other.K)
        parts = [{} for _ in range(K + 1)]
        for d1 in range(K + 1):
            for m1, c1 in self.parts[d1].items():
                for d2 in range(K + 1 - d1):
                    out = parts[d1 + d2]
                    for m2, c2 in other.parts[d2].items():
                        m = m1 + m2
                        v = out.get(m, 0) + c1 * c2
                        if v:
                            out[m] = v
                        else:
                            out.pop(m, None)
        return TruncatedSeries(self.alphabet, K, parts)

    def __eq__(self, other):
        return isinstance(other, TruncatedSeries) and self.K == other.K and self.parts == other.parts

    def __repr__(self):
        bits = []
        for part in self.parts:
            for m, c in sorted(part.items()):
                name = "*".join(self.alphabet.names[i].upper() for i in m) or "1"
                bits.append(f"{c}{'' if not m else '*' + name}" if m else str(c))
        return "TruncatedSeries(" + " + ".join(bits) + ")"


def _times_letter(parts, K, idx, w, sign):
    """Right-multiply in place by the Magnus image of one letter.

    Degrees are visited downward so lower parts are still the old values.
    """
    top = 1 if sign > 0 else K // w
    for d in range(K, w - 1, -1):
        out = parts[d]
        for r in range(1, min(top, d // w) + 1):
            coef = 1 if sign > 0 else (-1) ** r
            tail = (idx,) * r
            for m, c in parts[d - r * w].items():
                key = m + tail
                v = out.get(key, 0) + coef * c
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)


def magnus(w: Word, K: int) -> TruncatedSeries:
    """Magnus image of ``w``: g -> 1 + X_g, g^-1 -> 1 - X_g + X_g^2 - ..."""
    if K < 1:
        raise ValueError("truncation degree must be at least 1")
    weights = w.alphabet.weights
    parts = [{(): 1}] + [{} for _ in range(K)]
    for a in w.letters:
        i = abs(a) - 1
        _times_letter(parts, K, i, weights[i], 1 if a > 0 else -1)
    return TruncatedSeries(w.alphabet, K, parts)


def filtration_degree(w: Word, K: int) -> int:
    """Least weighted degree of a nonconstant Magnus term.

    Returns ``K + 1`` when all terms up to degree K vanish and 0 for the
    identity word (which lies in every term of the filtration).
    """
    if w.is_identity():
        return 0
    s = magnus(w, K)
    for d in range(1, K + 1):
        if s.parts[d]:
            return d
    return K + 1


def in_filtration(w: Word, j: int) -> bool:
    """True iff w lies in the j-th term (the identity lies in all of them)."""
    if j <= 1 or w.is_identity():
        return True
    d = filtration_degree(w, j - 1)
    return d == j


# --- Lyndon words -----------------------------------------------------------

def is_lyndon(m: tuple) -> bool:
    n = len(m)
    return n > 0 and all(m < m[k:] + m[:k] for k in range(1, n))


def standard_factorisation(m: tuple):
    for k in range(1, len(m)):
        if is_lyndon(m[k:]):
            return m[:k], m[k:]
    raise ValueError("single letter has no factorisation")


@lru_cache(maxsize=None)
def _words_of_degree(weights: tuple, j: int):
    if j == 0:
        return ((),)
    out = []
    for i, w in enumerate(weights):
        if w <= j:
            out.extend((i,) + rest for rest in _words_of_degree(weights, j - w))
    return tuple(out)


@lru_cache(maxsize=None)
def _lyndon_words(weights: tuple, j: int):
    return tuple(sorted(m for m in _words_of_degree(weights, j) if is_lyndon(m)))


def lyndon_words(alphabet: Alphabet, j: int):
    """Sorted Lyndon words (index tuples) of weighted degree j."""
    if j < 1:
        raise ValueError("degree must be positive")
    return list(_lyndon_words(alphabet.weights, j))


def bracket_string(alphabet: Alphabet, m: tuple) -> str:
    if len(m) == 1:
        return alphabet.names[m[0]]
    u, v = standard_factorisation(m)
    return f"[{bracket_string(alphabet, u)},{bracket_string(alphabet, v)}]"


def lyndon_basis(alphabet: Alphabet, j: int):
    """Bracketed Lyndon words of weighted degree j, in lexicographic order."""
    return [bracket_string(alphabet, m) for m in lyndon_words(alphabet, j)]


@lru_cache(maxsize=None)
def _expand(m: tuple):
    if len(m) == 1:
        return {m: 1}
    u, v = standard_factorisation(m)
    return _poly_commutator(_expand(u), _expand(v))


def _poly_commutator(p, q):
    out = {}
    for a, ca in p.items():
        for b, cb in q.items():
            out[a + b] = out.get(a + b, 0) + ca * cb
            out[b + a] = out.get(b + a, 0) - ca * cb
    return {k: v for k, v in out.items() if v}


def lie_coordinates(poly: dict, alphabet: Alphabet | None = None) -> dict:
    """Lyndon coordinates of a homogeneous Lie polynomial.

    Raises NotLieElement if the polynomial is not in the free Lie ring.
    """
    rest = {k: v for k, v in poly.items() if v}
    coords = {}
    while rest:
        m = min(rest)
        c = rest[m]
        if not is_lyndon(m):
            raise NotLieElement(f"residual non-Lyndon monomial {m}")
        coords[m] = c
        for k, v in _expand(m).items():
            nv = rest.get(k, 0) - c * v
            if nv:
                rest[k] = nv
            else:
                rest.pop(k, None)
    return coords


class LieElement:
    """Integer combination of bracketed Lyndon words of one weighted degree."""

    __slots__ = ("alphabet", "degree", "coeffs")

    def __init__(self, alphabet: Alphabet, degree: int, coeffs=None):
        self.alphabet = alphabet
        self.degree = degree
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if v}

    @classmethod
    def generator(cls, alphabet, name):
        i = alphabet.index[name]
        return cls(alphabet, alphabet.weights[i], {(i,): 1})

    @classmethod
    def from_polynomial(cls, alphabet, degree, poly):
        return cls(alphabet, degree, lie_coordinates(poly))

    def polynomial(self):
        out = {}
        for m, c in self.coeffs.items():
            for k, v in _expand(m).items():
                out[k] = out.get(k, 0) + c * v
        return {k: v for k, v in out.items() if v}

    def _check(self, other):
        if self.alphabet != other.alphabet:
            raise AlphabetMismatch("Lie elements over different alphabets")

    def __add__(self, other):
        self._check(other)
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        if self.degree != other.degree:
            raise ValueError("adding Lie elements of different degrees")
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return LieElement(self.alphabet, self.degree, out)

    def __neg__(self):
        return LieElement(self.alphabet, self.degree, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, n: int):
        return LieElement(self.alphabet, self.degree, {k: n * v for k, v in self.coeffs.items()})

    def is_zero(self):
        return not self.coeffs

    def vector(self):
        """Coordinates against lyndon_words(alphabet, degree)."""
        return [self.coeffs.get(m, 0) for m in lyndon_words(self.alphabet, self.degree)]

    def __eq__(self, other):
        if not isinstance(other, LieElement) or self.alphabet != other.alphabet:
            return False
        if not self.coeffs and not other.coeffs:
            return True
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self):
        if not self.coeffs:
            return "LieElement(0)"
        return "LieElement(" + " + ".join(
            f"{c}*{bracket_string(self.alphabet, m)}" for m, c in sorted(self.coeffs.items())) + ")"


def bracket(u: LieElement, v: LieElement) -> LieElement:
    u._check(v)
    deg = u.degree + v.degree
    if u.is_zero() or v.is_zero():
        return LieElement(u.alphabet, deg)
    return LieElement(u.alphabet, deg, lie_coordinates(_poly_commutator(u.polynomial(), v.polynomial())))


def lcs_class(w: Word, j: int) -> LieElement:
    """Class of w in the j-th graded quotient, in Lyndon coordinates."""
    s = magnus(w, j)
    for d in range(1, j):
        if s.parts[d]:
            raise NotInFiltration(j)
    return LieElement(w.alphabet, j, lie_coordinates(s.parts[j]))


def bracket_pairing_matrix(alphabet: Alphabet, j1: int, j2: int):
    """Matrix of the bracket from degree j1 tensor degree j2 into degree j1+j2.

    Columns are indexed by pairs (p, q) of basis elements in row-major order.
    """
    from .zlinalg import IntMatrix

    b1, b2 = lyndon_words(alphabet, j1), lyndon_words(alphabet, j2)
    target = lyndon_words(alphabet, j1 + j2)
    pos = {m: i for i, m in enumerate(target)}
    cols = []
    for p, q in iproduct(b1, b2):
        c = lie_coordinates(_poly_commutator(_expand(p), _expand(q)))
        col = [0] * len(target)
        for m, v in c.items():
            col[pos[m]] = v
        cols.append(col)
    if not cols:
        return IntMatrix(len(target), 0)
    return IntMatrix.from_columns(cols, len(target))


def degree_two_data(w: Word):
    """Degree-1 exponent vector, degree-2 weight-1 coefficient matrix and
    weight-2 letter counts of the Magnus image, by a single pass over w."""
    alph = w.alphabet
    n = len(alph)
    v = [0] * n
    M = {}
    zc = [0] * n
    for a in w.letters:
        i = abs(a) - 1
        if alph.weights[i] == 2:
            zc[i] += 1 if a > 0 else -1
            continue
        if a > 0:
            for r, c in enumerate(v):
                if c:
                    M[(r, i)] = M.get((r, i), 0) + c
            v[i] += 1
        else:
            for r, c in enumerate(v):
                if c:
                    M[(r, i)] = M.get((r, i), 0) - c
            M[(i, i)] = M.get((i, i), 0) + 1
            v[i] -= 1
    return v, {k: c for k, c in M.items() if c}, zc


def degree_two_class(w: Word):
    """Fast degree-2 class: ({(i, j): coef for i < j}, {z index: coef}).

    Same content as lcs_class(w, 2) restricted to its two kinds of basis
    elements, without building the full series.
    """
    v, M, zc = degree_two_data(w)
    if any(v):
        raise NotInFiltration(2)
    wedge = {}
    for (i, j), c in M.items():
        if i < j:
            wedge[(i, j)] = c
            if M.get((j, i), 0) != -c:
                raise NotLieElement("degree-2 part is not antisymmetric")
        elif i == j:
            raise NotLieElement("square term in degree 2")
        elif (j, i) not in M:
            raise NotLieElement("degree-2 part is not antisymmetric")
    return wedge, {i: c for i, c in enumerate(zc) if c}
