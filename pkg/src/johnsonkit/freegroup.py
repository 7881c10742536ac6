"""Free groups on weighted generators.

Letters are encoded as nonzero ints: ``+(i+1)`` is generator ``i`` and
``-(i+1)`` its inverse.  Words are kept freely reduced.
"""
from __future__ import annotations

import re
from typing import Iterable, Sequence

from .errors import AlphabetMismatch, ParseError

_NAME = re.compile(r"^(x\d+|[ab]\d+\.\d+|z\d+)$")
_TOKEN = re.compile(r"^([A-Za-z][A-Za-z0-9_.]*)(?:\^(-?\d+))?$")


class Alphabet:
    """Ordered generators with weights 1 or 2; the order fixes the Lyndon order."""

    __slots__ = ("names", "weights", "index")

    def __init__(self, symbols: Iterable[tuple[str, int]]):
        symbols = list(symbols)
        self.names = tuple(s for s, _ in symbols)
        self.weights = tuple(int(w) for _, w in symbols)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate generator names")
        if any(w not in (1, 2) for w in self.weights):
            raise ValueError("weights must be 1 or 2")
        self.index = {s: i for i, s in enumerate(self.names)}

    def __len__(self):
        return len(self.names)

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.names == other.names and self.weights == other.weights

    def __hash__(self):
        return hash((self.names, self.weights))

    def __repr__(self):
        return f"Alphabet({list(zip(self.names, self.weights))!r})"

    def gen(self, name):
        if name not in self.index:
            raise AlphabetMismatch(f"unknown generator {name!r}")
        return Word(self, (self.index[name] + 1,))

    def gens(self):
        return [Word(self, (i + 1,)) for i in range(len(self))]

    def identity(self):
        return Word(self, ())

    def parse(self, text: str) -> "Word":
        """Parse ``"x1 x2^-1 a1.2^3"``; the empty string is the identity."""
        letters = []
        for tok in text.split():
            m = _TOKEN.match(tok)
            if not m:
                raise ParseError(f"bad token {tok!r}")
            name, exp = m.group(1), int(m.group(2) or 1)
            if name not in self.index:
                if not _NAME.match(name):
                    raise ParseError(f"bad generator name {name!r}")
                raise AlphabetMismatch(f"generator {name!r} not in alphabet")
            letter = self.index[name] + 1
            letters.extend([letter if exp > 0 else -letter] * abs(exp))
        return Word(self, letters)


def _reduce(letters: Iterable[int]) -> tuple:
    out = []
    for a in letters:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


class Word:
    """Freely reduced word; immutable and hashable."""

    __slots__ = ("alphabet", "letters")

    def __init__(self, alphabet: Alphabet, letters: Iterable[int] = (), reduced=False):
        self.alphabet = alphabet
        self.letters = tuple(letters) if reduced else _reduce(letters)

    def _check(self, other):
        if self.alphabet is not other.alphabet and self.alphabet != other.alphabet:
            raise AlphabetMismatch("words over different alphabets")

    def __mul__(self, other):
        self._check(other)
        a, b = self.letters, other.letters
        k = 0
        while k < min(len(a), len(b)) and a[len(a) - 1 - k] == -b[k]:
            k += 1
        return Word(self.alphabet, a[:len(a) - k] + b[k:], reduced=True)

    def inverse(self):
        return Word(self.alphabet, tuple(-a for a in reversed(self.letters)), reduced=True)

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.alphabet.identity()
        for _ in range(n):
            out = out * self
        return out

    def conj(self, g):
        """g * self * g^-1."""
        return g * self * g.inverse()

    def __len__(self):
        return len(self.letters)

    def is_identity(self):
        return not self.letters

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters and self.alphabet == other.alphabet

    def __hash__(self):
        return hash(self.letters)

    def __str__(self):
        out = []
        for a in self.letters:
            name = self.alphabet.names[abs(a) - 1]
            if out and out[-1][0] == name and (out[-1][1] > 0) == (a > 0):
                out[-1][1] += 1 if a > 0 else -1
            else:
                out.append([name, 1 if a > 0 else -1])
        return " ".join(n if e == 1 else f"{n}^{e}" for n, e in out)

    def __repr__(self):
        return f"Word({str(self)!r})"


def multiply(u: Word, v: Word) -> Word:
    return u * v


def invert(u: Word) -> Word:
    return u.inverse()


def commutator(u: Word, v: Word) -> Word:
    """u v u^-1 v^-1."""
    return u * v * u.inverse() * v.inverse()


def product(words: Sequence[Word], alphabet: Alphabet | None = None) -> Word:
    if alphabet is None:
        alphabet = words[0].alphabet
    letters = []
    for w in words:
        letters.extend(w.letters)
    return Word(alphabet, letters)


def exponent_vector(w: Word) -> list[int]:
    vec = [0] * len(w.alphabet)
    for a in w.letters:
        vec[abs(a) - 1] += 1 if a > 0 else -1
    return vec


def cyclic_reduce(w: Word) -> tuple:
    s = w.letters
    i, j = 0, len(s)
    while j - i >= 2 and s[i] == -s[j - 1]:
        i += 1
        j -= 1
    return s[i:j]


def conjugate_equal(u: Word, v: Word) -> bool:
    """True iff u and v are conjugate in the free group."""
    u._check(v)
    a, b = cyclic_reduce(u), cyclic_reduce(v)
    if len(a) != len(b):
        return False
    if not a:
        return True
    n = len(a)
    doubled = a + a
    return any(doubled[k:k + n] == b for k in range(n))


class Endo:
    """Homomorphism between free groups given by generator images."""

    __slots__ = ("source", "target", "images")

    def __init__(self, source: Alphabet, images: Sequence[Word], target: Alphabet | None = None):
        self.source = source
        self.target = target if target is not None else source
        images = tuple(images)
        if len(images) != len(source):
            raise AlphabetMismatch(f"{len(images)} images for {len(source)} generators")
        for im in images:
            if im.alphabet != self.target:
                raise AlphabetMismatch("image word over the wrong alphabet")
        self.images = images

    @classmethod
    def identity(cls, alphabet):
        return cls(alphabet, alphabet.gens())

    @classmethod
    def from_dict(cls, alphabet, mapping, target=None):
        """Images given by generator name; omitted generators are fixed."""
        target = target or alphabet
        images = []
        for i, name in enumerate(alphabet.names):
            im = mapping.get(name)
            if im is None:
                im = target.gen(name) if target is not alphabet else alphabet.gens()[i]
            images.append(im)
        return cls(alphabet, images, target)

    def __call__(self, w: Word) -> Word:
        return apply(self, w)

    def __getitem__(self, name):
        return self.images[self.source.index[name]]

    def compose(self, other: "Endo") -> "Endo":
        """self after other."""
        if other.target != self.source:
            raise AlphabetMismatch("composition across different alphabets")
        return Endo(other.source, [apply(self, im) for im in other.images], self.target)

    def __eq__(self, other):
        return isinstance(other, Endo) and self.source == other.source and self.images == other.images

    def __repr__(self):
        return "Endo({" + ", ".join(f"{n}: {str(w)!r}" for n, w in zip(self.source.names, self.images)) + "})"


def apply(f: Endo, w: Word) -> Word:
    if w.alphabet != f.source:
        raise AlphabetMismatch("word not over the endomorphism's source alphabet")
    inv = {}
    letters = []
    for a in w.letters:
        if a > 0:
            letters.extend(f.images[a - 1].letters)
        else:
            im = inv.get(a)
            if im is None:
                im = inv[a] = tuple(-c for c in reversed(f.images[-a - 1].letters))
            letters.extend(im)
    return Word(f.target, letters)
