"""Explicit mapping classes, built on the surface itself and then carried to
the closure.

The fundamental group of S is free on the handle letters x1..x{2g} and one
loop p_c per boundary component c other than the basepoint component.
Listing the boundary loops of block 0, then the handles, then the blocks
1..k in order gives *factors* whose product is the basepoint boundary loop.
A mapping class of S is recorded by the images of the handle letters and an
arc element d_c per component, with p_c -> d_c p_c d_c^-1.

Local moves (twists about runs of consecutive factors, lanterns, handle
pushes, handle swaps) are written for a *frame*: a reordering of the
factors reached by Hurwitz moves.  Moves in a frame are transported back to
the standard frame, then converted to an endomorphism of the closure group.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import BadParameters
from .freegroup import Alphabet, Endo, Word, apply, commutator, product
from .johnson import MappingClass, is_torelli, validate
from .surface import SurfaceModel, model as make_model


class SGroup:
    """Free group of S together with its standard factor order."""

    def __init__(self, M: SurfaceModel):
        self.model = M
        names = [f"x{r}" for r in range(1, 2 * M.genus + 1)]
        comps = [(i, j) for i, mi in enumerate(M.m) for j in range(mi + 1) if (i, j) != (0, 0)]
        names += [f"p{i}.{j}" for i, j in comps]
        self.alphabet = Alphabet([(n, 1) for n in names])
        self.components = comps
        self.factors = [("p", (0, j)) for j in range(1, M.m[0] + 1)]
        self.factors += [("h", r) for r in range(1, M.genus + 1)]
        for i in range(1, M.k + 1):
            self.factors += [("p", (i, j)) for j in range(M.m[i] + 1)]
        self.conv = {}
        for n in names:
            if n.startswith("x"):
                self.conv[n] = M.gen(n)
            else:
                i, j = map(int, n[1:].split("."))
                self.conv[n] = M.alpha(i, j)
        self._conv_images = [self.conv[n] for n in names]
        self.to_hat = Endo(self.alphabet, self._conv_images, M.alphabet)

    def letter(self, name):
        return self.alphabet.gen(name)

    def factor_letters(self, f):
        kind, v = f
        if kind == "h":
            return [f"x{2 * v - 1}", f"x{2 * v}"]
        return [f"p{v[0]}.{v[1]}"]

    def factor_word(self, f):
        kind, v = f
        if kind == "h":
            return commutator(self.letter(f"x{2 * v - 1}"), self.letter(f"x{2 * v}"))
        return self.letter(f"p{v[0]}.{v[1]}")

    def relation(self, order=None):
        return product([self.factor_word(f) for f in (order or self.factors)], self.alphabet)

    def factor_class(self, f):
        """Class in H of the closure of a factor's product."""
        M = self.model
        if f[0] == "h":
            return [0] * M.rank_h
        return M.homology_class(self.conv[self.factor_letters(f)[0]])


@dataclass
class SMap:
    """Mapping class of S: images of every letter plus component arcs."""

    group: SGroup
    images: dict  # letter name -> S word
    arcs: dict  # component -> S word

    def endo(self):
        G = self.group
        return Endo(G.alphabet, [self.images[n] for n in G.alphabet.names])

    def fixes_relation(self):
        G = self.group
        return apply(self.endo(), G.relation()) == G.relation()

    def to_mapping_class(self, label="") -> MappingClass:
        G, M = self.group, self.group.model
        conv = lambda w: apply(G.to_hat, w)
        d = {c: conv(self.arcs.get(c, G.alphabet.identity())) for c in G.components}
        d[(0, 0)] = M.identity()
        images = []
        for name in M.alphabet.names:
            if name.startswith("x"):
                images.append(conv(self.images[name]))
            elif name.startswith("a"):
                i, j = map(int, name[1:].split("."))
                images.append(M.a(i, j).conj(d[(i, j)]))
            elif name.startswith("b"):
                i, j = map(int, name[1:].split("."))
                images.append(d[(i, 0)] * M.b(i, j) * d[(i, j)].inverse())
            else:
                i = int(name[1:])
                images.append(M.z(i).conj(d[(i, 0)]))
        arcs = {i: d[(i, 0)] for i in range(1, M.k + 1)}
        return MappingClass(M, Endo(M.alphabet, images), arcs, label=label)


class Frame:
    """A reordering of the factors, with the change of generators it induces.

    ``sigma`` writes each standard letter in frame letters (frame letters
    reuse the standard names) and ``sigma_inv`` goes back; ``conj[f]`` is the
    word w with standard letters of factor f equal to w t w^-1.
    """

    def __init__(self, G: SGroup):
        self.G = G
        self.order = list(G.factors)
        self.sigma = Endo.identity(G.alphabet)
        self.sigma_inv = Endo.identity(G.alphabet)
        self.conj = {f: G.alphabet.identity() for f in G.factors}

    def copy(self):
        fr = Frame.__new__(Frame)
        fr.G, fr.order = self.G, list(self.order)
        fr.sigma, fr.sigma_inv, fr.conj = self.sigma, self.sigma_inv, dict(self.conj)
        return fr

    def position(self, f):
        return self.order.index(f)

    def _step(self, moved, u_images, u_inv_images, u_conj):
        """Apply a substitution: letters of factor ``moved`` t -> u t u^-1."""
        G = self.G
        tau = Endo.from_dict(G.alphabet, u_images)
        tau_inv = Endo.from_dict(G.alphabet, u_inv_images)
        self.sigma = tau.compose(self.sigma)
        self.sigma_inv = self.sigma_inv.compose(tau_inv)
        self.conj = {f: apply(tau, w) * (u_conj if f == moved else G.alphabet.identity())
                     for f, w in self.conj.items()}

    def move_right(self, pos):
        """Factor A at pos passes to the right of B: A' = B^-1 A B."""
        G = self.G
        A, B = self.order[pos], self.order[pos + 1]
        PB = G.factor_word(B)
        ups = {n: G.letter(n).conj(PB) for n in G.factor_letters(A)}
        downs = {n: G.letter(n).conj(PB.inverse()) for n in G.factor_letters(A)}
        self._step(A, ups, downs, PB)
        self.order[pos], self.order[pos + 1] = B, A
        return self

    def move_left(self, pos):
        """Factor B at pos + 1 passes to the left of A: B' = A B A^-1."""
        G = self.G
        A, B = self.order[pos], self.order[pos + 1]
        PA = G.factor_word(A)
        ups = {n: G.letter(n).conj(PA.inverse()) for n in G.factor_letters(B)}
        downs = {n: G.letter(n).conj(PA) for n in G.factor_letters(B)}
        self._step(B, ups, downs, PA.inverse())
        self.order[pos], self.order[pos + 1] = B, A
        return self

    def bring_after(self, f, target):
        """Move factor f leftwards or rightwards until it sits right after target."""
        while True:
            p, q = self.position(f), self.position(target)
            if p == q + 1:
                return self
            if p > q:
                self.move_left(p - 1)
            else:
                self.move_right(p)

    def run_word(self, start, end):
        return product([self.G.factor_word(f) for f in self.order[start:end + 1]], self.G.alphabet)

    def run_letters(self, start, end):
        return [n for f in self.order[start:end + 1] for n in self.G.factor_letters(f)]

    def run_components(self, start, end):
        return [f[1] for f in self.order[start:end + 1] if f[0] == "p"]

    def run_class(self, start, end):
        M = self.G.model
        out = [0] * M.rank_h
        for f in self.order[start:end + 1]:
            out = [a + b for a, b in zip(out, self.G.factor_class(f))]
        return out

    def transport(self, images: dict, arcs: dict) -> SMap:
        """Convert a move written in frame letters to the standard frame."""
        G = self.G
        phi = Endo.from_dict(G.alphabet, images)
        std_images = {n: apply(self.sigma_inv, apply(phi, apply(self.sigma, G.letter(n))))
                      for n in G.alphabet.names}
        std_arcs = {}
        for f in self.order:
            if f[0] != "p":
                continue
            w = self.conj[f]
            d = arcs.get(f[1], G.alphabet.identity())
            std_arcs[f[1]] = apply(self.sigma_inv, apply(phi, w) * d * w.inverse())
        return SMap(G, std_images, std_arcs)


# --- moves written in a frame ------------------------------------------------

def _conj_run(frame, start, end, c):
    G = frame.G
    images = {n: G.letter(n).conj(c) for n in frame.run_letters(start, end)}
    arcs = {comp: c for comp in frame.run_components(start, end)}
    return images, arcs


def move_twist(frame, start, end, e=1):
    """Twist about the curve enclosing factors start..end (power e)."""
    W = frame.run_word(start, end)
    return _conj_run(frame, start, end, W ** e)


def move_handle_twist(frame, pos, which, e=1):
    G = frame.G
    f = frame.order[pos]
    if f[0] != "h":
        raise BadParameters("handle twist needs a handle factor")
    xn, yn = G.factor_letters(f)
    x, y = G.letter(xn), G.letter(yn)
    if which == "x":
        return {yn: y * x ** e}, {}
    return {xn: x * y ** (-e)}, {}


def move_handle_push(frame, pos, end, inverse=False):
    """Push factors pos+1..end once around the second loop of the handle at pos."""
    G = frame.G
    f = frame.order[pos]
    if f[0] != "h" or end <= pos:
        raise BadParameters("handle push needs a handle followed by a run")
    xn, yn = G.factor_letters(f)
    x, y = G.letter(xn), G.letter(yn)
    W = frame.run_word(pos + 1, end)
    Wi = W.inverse()
    if not inverse:
        d = Wi * y
        images = {xn: x * W, yn: y.conj(Wi)}
    else:
        d = y.inverse() * W
        images = {xn: x * y.inverse() * Wi * y, yn: y.inverse() * W * y * Wi * y}
    run_images, arcs = _conj_run(frame, pos + 1, end, d)
    images.update(run_images)
    return images, arcs


def move_handle_swap(frame, pos, inverse=False):
    G = frame.G
    f1, f2 = frame.order[pos], frame.order[pos + 1]
    if f1[0] != "h" or f2[0] != "h":
        raise BadParameters("handle swap needs two adjacent handles")
    n1, n2 = G.factor_letters(f1)
    n3, n4 = G.factor_letters(f2)
    x1, x2, x3, x4 = (G.letter(n) for n in (n1, n2, n3, n4))
    if not inverse:
        F1 = commutator(x1, x2)
        return {n1: x3.conj(F1), n2: x4.conj(F1), n3: x1, n4: x2}, {}
    F2i = commutator(x3, x4).inverse()
    return {n1: x3, n2: x4, n3: x1.conj(F2i), n4: x2.conj(F2i)}, {}


# --- small lantern carried into three handles ---------------------------------

_SMALL = {}


def _small_lantern():
    """Lantern core on four-holed sphere with all components in one block."""
    if "phi" not in _SMALL:
        M = make_model(0, [4])
        phi = lantern_core(M, (0, 0), (1, 1), (2, 2))
        _SMALL["phi"] = phi
        _SMALL["model"] = M
    return _SMALL["model"], _SMALL["phi"]


def move_handle_lantern(frame, pos, inverse=False):
    """Nonseparating lantern core inside the three handles at pos..pos+2."""
    G = frame.G
    fs = frame.order[pos:pos + 3]
    if len(fs) < 3 or any(f[0] != "h" for f in fs):
        raise BadParameters("handle lantern needs three adjacent handles")
    Ms, phi = _small_lantern()
    if inverse:
        phi = phi.inverse
    X = [G.letter(n) for f in fs for n in G.factor_letters(f)]
    Xn = [n for f in fs for n in G.factor_letters(f)]
    X1, X2, X3, X4, X5, X6 = X
    a, b = Ms.a, Ms.b
    # small letters written in the handle letters
    kappa = {
        "a0.3": X2.inverse(), "b0.3": X1,
        "a0.2": X4.inverse().conj(X2.inverse()), "b0.2": X3.conj(X2.inverse()),
        "a0.1": X6.inverse().conj((X4 * X2).inverse()), "b0.1": X5.conj((X4 * X2).inverse()),
    }
    kappa_endo = Endo(Ms.alphabet, [kappa[n] for n in Ms.alphabet.names], G.alphabet)
    a3, b3, a2, b2, a1, b1 = a(0, 3), b(0, 3), a(0, 2), b(0, 2), a(0, 1), b(0, 1)
    a23 = a2 * a3
    # handle letters written in the small letters
    back = [b3, a3.inverse(), b2.conj(a3.inverse()), a2.inverse().conj(a3.inverse()),
            b1.conj(a23.inverse()), a1.inverse().conj(a23.inverse())]
    images = {n: apply(kappa_endo, phi(w)) for n, w in zip(Xn, back)}
    return images, {}


# --- standard-frame constructors ------------------------------------------------

def _mc(frame, move, inv_move, label):
    fwd = frame.transport(*move)
    bwd = frame.transport(*inv_move)
    m = fwd.to_mapping_class(label)
    mi = bwd.to_mapping_class(label + "^-1")
    m._inverse, mi._inverse = mi, m
    return m


def twist(M, start, end, e=1, frame=None, label=None):
    frame = frame or Frame(SGroup(M))
    return _mc(frame, move_twist(frame, start, end, e), move_twist(frame, start, end, -e),
               label or f"T[{start}:{end}]^{e}")


def handle_twist(M, r, which, e=1, frame=None):
    frame = frame or Frame(SGroup(M))
    pos = frame.position(("h", r))
    return _mc(frame, move_handle_twist(frame, pos, which, e), move_handle_twist(frame, pos, which, -e),
               f"T{which}{r}^{e}")


def handle_push(M, pos, end, frame=None, inverse=False, label=None):
    frame = frame or Frame(SGroup(M))
    return _mc(frame, move_handle_push(frame, pos, end, inverse), move_handle_push(frame, pos, end, not inverse),
               label or f"push[{pos}:{end}]{'^-1' if inverse else ''}")


def handle_swap(M, r, frame=None):
    frame = frame or Frame(SGroup(M))
    pos = frame.position(("h", r))
    return _mc(frame, move_handle_swap(frame, pos), move_handle_swap(frame, pos, True), f"swap{r}")


def handle_lantern(M, r, frame=None):
    frame = frame or Frame(SGroup(M))
    pos = frame.position(("h", r))
    return _mc(frame, move_handle_lantern(frame, pos), move_handle_lantern(frame, pos, True), f"hlantern{r}")


def lantern_core(M, run1, run2, run3, frame=None):
    """Commutator of the twists about runs 1+2 and 2+3 (consecutive runs).

    Runs are (start, end) factor positions in the frame.
    """
    frame = frame or Frame(SGroup(M))
    (s1, e1), (s2, e2), (s3, e3) = run1, run2, run3
    if not (e1 + 1 == s2 and e2 + 1 == s3 and s1 <= e1 and s2 <= e2 and s3 <= e3):
        raise BadParameters("lantern runs must be consecutive and nonempty")
    ta = twist(M, s1, e2, 1, frame, "Ta")
    tb = twist(M, s2, e3, 1, frame, "Tb")
    out = tb * ta * tb.inverse * ta.inverse
    out.label = f"lantern[{s1}:{e1}|{s2}:{e2}|{s3}:{e3}]"
    return out


def lantern_core_std(M=None):
    """Lantern core on the four-holed sphere with a single block.

    The three central loops alpha_1..alpha_3 of the lantern arc formulas
    run clockwise, so alpha_j is the inverse of the loop p0.(4-j); each
    loop is conjugated by its arc element C_j.
    """
    M = M or make_model(0, [4])
    if M.genus != 0 or M.surface.blocks != (4,):
        raise BadParameters("the standard lantern lives on genus 0 with blocks [4]")
    G, arcs = lantern_arcs(M)
    images = {f"p0.{j}": G.letter(f"p0.{j}").conj(arcs[(0, j)]) for j in (1, 2, 3)}
    m = SMap(G, images, arcs).to_mapping_class("lantern_std")
    return m


def lantern_arcs(M):
    """Arc elements C_j of the three central components, from the
    formulas B_j -> C_j B_j written in the clockwise loops."""
    G = SGroup(M)
    al = {j: G.letter(f"p0.{4 - j}").inverse() for j in (1, 2, 3)}
    a1, a2, a3 = al[1], al[2], al[3]
    C = {1: commutator(a1 * a2 * a1.inverse(), a3),
         2: commutator(a3.inverse(), a1.inverse()),
         3: commutator(a1.inverse().conj(a3.inverse()), a2.inverse().conj(a1))}
    return G, {(0, 4 - j): C[j] for j in (1, 2, 3)}


def sep_twist(M, h=None, run=None, e=1):
    """Twist about a separating curve: the first h handles, or a given run
    of factors whose total class vanishes."""
    G = SGroup(M)
    if run is None:
        if h is None or not 1 <= h <= M.genus:
            raise BadParameters(f"need 1 <= h <= genus, got {h}")
        start = M.m[0]
        run = (start, start + h - 1)
    fr = Frame(G)
    if any(fr.run_class(*run)):
        raise BadParameters("run does not bound a separating curve")
    return twist(M, run[0], run[1], e, fr, label=f"sep{run}")


def bounding_pair(M, run1, run2, frame=None):
    """T_1 T_2^-1 for two runs with equal or opposite classes, sign chosen
    so that the result is Torelli."""
    frame = frame or Frame(SGroup(M))
    c1, c2 = frame.run_class(*run1), frame.run_class(*run2)
    if not any(c1) or (c1 != c2 and c1 != [-a for a in c2]):
        raise BadParameters("runs must carry equal nonzero classes")
    for e in (1, -1):
        t1 = twist(M, run1[0], run1[1], e, frame)
        t2 = twist(M, run2[0], run2[1], e, frame)
        out = t1 * t2.inverse
        if is_torelli(out):
            out.label = f"bp{run1}{run2}"
            return out
    raise BadParameters("no Torelli sign found")


def bounding_pair_std(M=None):
    """Bounding pair on the genus-0 surface with blocks [1, 2]; tau = a ^ z."""
    M = M or make_model(0, [1, 2])
    if M.genus != 0 or M.surface.blocks != (1, 2):
        raise BadParameters("the standard bounding pair lives on genus 0 with blocks [1, 2]")
    G = SGroup(M)
    fr = Frame(G)
    # curves around the second component, and around the first one of block 1
    t_outer = twist(M, 1, 1, 1, fr)
    t_inner = twist(M, 0, 0, 1, fr)
    out = t_outer * t_inner.inverse
    out.label = "bp_std"
    return out


def _parse_loop(M, loop):
    name, _, exp = loop.strip().partition("^")
    e = int(exp) if exp else 1
    if not name.startswith("x") or e not in (1, -1):
        raise BadParameters(f"loop must be a handle generator or its inverse, got {loop!r}")
    r = int(name[1:])
    if not 1 <= r <= 2 * M.genus:
        raise BadParameters(f"no handle letter {name}")
    return r, e


def block_push(M, loop: str, block: int):
    """Push the subsurface holding all components of ``block`` once around
    a handle loop given as a signed handle generator such as "x2^-1"."""
    if not 1 <= block <= M.k:
        raise BadParameters(f"block {block} out of range")
    r, e = _parse_loop(M, loop)
    h = (r + 1) // 2
    fr = Frame(SGroup(M))
    comps = [("p", (block, j)) for j in range(M.m[block] + 1)]
    anchor = ("h", h)
    for f in comps:
        fr.bring_after(f, anchor)
        anchor = f
    pos = fr.position(("h", h))
    end = pos + len(comps)
    label = f"push({loop},{block})"
    if r % 2 == 0:
        # the forward push moves the arc by W^-1 y, i.e. along the loop y^-1
        return handle_push(M, pos, end, fr, inverse=(e == 1), label=label)
    # first handle loop: conjugate by a handle map carrying y to x
    rot = handle_twist(M, h, "y", 1, fr) * handle_twist(M, h, "x", 1, fr)
    out = rot.conj(handle_push(M, pos, end, fr, inverse=(e == 1)))
    out.label = label
    return out


def disk_push(M, loop: str, block: int):
    """Push the boundary component forming block ``block`` (a singleton
    block) around a handle loop; tau is -[loop] ^ z_block."""
    if not 1 <= block <= M.k:
        raise BadParameters(f"block {block} out of range")
    if M.m[block] != 0:
        raise BadParameters("disk pushing needs a block with a single component")
    return block_push(M, loop, block)


# --- generating families ----------------------------------------------------------

def _all_factor_frames(M, fs):
    """Frame in which the factors fs sit consecutively in the given order."""
    fr = Frame(SGroup(M))
    for a, b in zip(fs, fs[1:]):
        fr.bring_after(b, a)
    return fr


def seed_family(M):
    """Torelli elements whose conjugates span the image of tau."""
    G = SGroup(M)
    F = G.factors
    seeds = []
    handles = [f for f in F if f[0] == "h"]
    comps = [f for f in F if f[0] == "p"]
    # block pushes around every handle loop
    for i in range(1, M.k + 1):
        for r in range(1, 2 * M.genus + 1):
            seeds.append(block_push(M, f"x{r}", i))
    # bounding pairs: a component next to a whole block, and splits of a block
    for i in range(1, M.k + 1):
        block = [("p", (i, j)) for j in range(M.m[i] + 1)]
        for c in comps:
            if c[1][0] == i:
                continue
            fr = _all_factor_frames(M, [c] + block)
            p = fr.position(c)
            if any(fr.run_class(p, p)):
                seeds.append(bounding_pair(M, (p, p), (p, p + len(block)), fr))
        if M.m[i]:
            fr = Frame(G)
            s = fr.position(block[0])
            for j in range(1, M.m[i] + 1):
                seeds.append(bounding_pair(M, (s, s + j - 1), (s + j, s + M.m[i]), fr))
    # a handle next to a component: the curves around the component with and
    # without the handle bound the handle
    for h in handles:
        for c in comps:
            fr = _all_factor_frames(M, [h, c])
            p = fr.position(h)
            if any(fr.run_class(p + 1, p + 1)):
                bp = bounding_pair(M, (p + 1, p + 1), (p, p + 1), fr)
                seeds.append(bp)
                seeds.append(handle_swap_conj(M, fr, p, bp))
    # lanterns on any three single factors made consecutive
    n = len(F)
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                fr = _all_factor_frames(M, [F[a], F[b], F[c]])
                p = fr.position(F[a])
                seeds.append(lantern_core(M, (p, p), (p + 1, p + 1), (p + 2, p + 2), fr))
    # a handle pushed around the loops of another handle
    for h1 in handles:
        for h2 in handles:
            if h1 == h2:
                continue
            fr = _all_factor_frames(M, [h1, h2])
            p = fr.position(h1)
            seeds.append(handle_push(M, p, p + 1, fr))
            seeds.append(handle_swap_conj(M, fr, p, handle_push(M, p, p + 1, fr)))
    if M.genus >= 3:
        for r in range(1, M.genus - 1):
            seeds.append(handle_lantern(M, r))
    return [s for s in seeds if is_torelli(s)]


def handle_swap_conj(M, fr, pos, m):
    """Conjugate m by the twist map carrying the second loop of the handle at
    pos to its first loop."""
    r = fr.order[pos][1]
    rot = handle_twist(M, r, "y", 1, fr) * handle_twist(M, r, "x", 1, fr)
    return rot.conj(m)


def conjugator_family(M):
    """Mapping classes (not necessarily Torelli) used to spread seeds around."""
    G = SGroup(M)
    out = []
    for r in range(1, M.genus + 1):
        out.append(handle_twist(M, r, "x"))
        out.append(handle_twist(M, r, "y"))
    for r in range(1, M.genus):
        out.append(handle_swap(M, r))
    for f in G.factors:
        if f[0] != "p":
            continue
        fr = Frame(G)
        p = fr.position(f)
        out.append(twist(M, p, p, 1, fr))
        if not any(fr.run_class(p, p)):
            continue
        for h in range(1, M.genus + 1):
            fr = _all_factor_frames(M, [("h", h), f])
            q = fr.position(("h", h))
            push = handle_push(M, q, q + 1, fr)
            out.append(push)
            out.append(handle_swap_conj(M, fr, q, push))
    return out


def surjectivity_span(M, return_basis=False):
    """Rank of the span of tau over conjugates of the seed family.

    Conjugates are handled through the action on Hom(H, N), so the search
    closes the span under the conjugators without building long words.
    """
    from .johnson import act, tau
    from .zlinalg import RankAccumulator

    acc = RankAccumulator()
    kept = []
    for s in seed_family(M):
        f = tau(s)
        if acc.add(f.vector()):
            kept.append(f)
    conj = conjugator_family(M)
    target = M.rank_w()
    queue = list(kept)
    while queue and acc.rank < target:
        f = queue.pop()
        for c in conj:
            g = act(c, f)
            if acc.add(g.vector()):
                kept.append(g)
                queue.append(g)
    if return_basis:
        return acc.rank, kept
    return acc.rank
