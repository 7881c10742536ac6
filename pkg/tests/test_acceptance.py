"""Acceptance suite: one test per criterion, summarised as PASS/FAIL lines.

Run with ``pytest tests/test_acceptance.py`` or directly with python.
"""

import random
from math import comb

from _support import random_composition, random_word, shapes, torelli_pool

from johnsonkit.freegroup import Alphabet, Word
from johnsonkit.johnson import (Piece, WElement, basepoint_change, d_arc, delta, extend,
                                filtration_member, glue, in_W, pushforward, rebase, tau, tau_w,
                                validate)
from johnsonkit.library import (bounding_pair_std, disk_push, handle_lantern, handle_push,
                                lantern_core_std, seed_family, sep_twist, surjectivity_span)
from johnsonkit.lieweighted import (LieElement, bracket, bracket_pairing_matrix, lcs_class,
                                    lie_coordinates, lyndon_words, magnus, _expand)
from johnsonkit.orbits import (SEPARATING, CurvePair, closed_model, nonsep_equivalent,
                               sep_equivalent, standard_basis, standard_curve, theta)
from johnsonkit.surface import model
from johnsonkit.zlinalg import IntMatrix, RankAccumulator, kernel_basis, submodule_contains


def _check_all_pass(m):
    report = validate(m)
    assert report["all_pass"], report


def test_generator_tau_values():
    """tau of separating twists, bounding pair, lantern core and disk pushes"""
    for g, blocks, h in [(1, (1,), 1), (2, (1,), 1), (2, (1,), 2), (3, (1, 1), 2), (2, (2, 1), 1)]:
        m = sep_twist(model(g, blocks), h)
        _check_all_pass(m)
        assert tau_w(m).is_zero()

    M = model(0, (1, 2))
    bp = bounding_pair_std(M)
    _check_all_pass(bp)
    a = M.basis_vector("a1.1")
    assert tau_w(bp) == WElement(M, {}, {1: a})

    M = model(0, (4,))
    lan = lantern_core_std(M)
    _check_all_pass(lan)
    idx = [M.alphabet.index[f"a0.{j}"] for j in (1, 2, 3)]
    assert tau_w(lan) == WElement(M, {tuple(idx): -1}, {})

    for g, blocks in [(1, (1, 1)), (2, (2, 1, 3)), (2, (1, 1, 1)), (3, (1, 1))]:
        M = model(g, blocks)
        for i in range(1, M.k + 1):
            if M.m[i]:
                continue
            for r in range(1, 2 * g + 1):
                for e in (1, -1):
                    loop = f"x{r}" if e == 1 else f"x{r}^-1"
                    m = disk_push(M, loop, i)
                    _check_all_pass(m)
                    cls = [-e * c for c in M.basis_vector(f"x{r}")]
                    assert tau_w(m) == WElement(M, {}, {i: cls})


def test_arc_classes_equal_delta():
    """arc classes d_i agree with delta_i of tau on every library element"""
    checked = 0
    for g, blocks in [(0, (1, 2)), (1, (1, 1)), (1, (2, 1, 1)), (2, (1, 2)), (2, (1, 1, 1)), (3, (1, 1))]:
        M = model(g, blocks)
        elems = seed_family(M)
        for i in range(1, M.k + 1):
            if not M.m[i]:
                for r in range(1, 2 * g + 1):
                    elems.append(disk_push(M, f"x{r}", i))
        for m in elems:
            f = tau(m)
            for i in range(1, M.k + 1):
                assert delta(f, i) == d_arc(m, i)
                checked += 1
    # lantern: all arc classes vanish
    M = model(0, (4,))
    lan = lantern_core_std(M)
    assert all(not any(d_arc(lan, i)) for i in range(1, M.k + 1))
    from johnsonkit.freegroup import exponent_vector
    from johnsonkit.johnson import component_arcs
    from johnsonkit.library import lantern_arcs
    _, arcs = lantern_arcs(M)
    assert all(not any(exponent_vector(w)) for w in arcs.values())
    assert all(not any(M.homology_class(w)) for w in component_arcs(lan).values())
    # disk pushes: d_i is minus the loop class
    M = model(2, (1, 1))
    m = disk_push(M, "x3", 1)
    assert d_arc(m, 1) == [-c for c in M.basis_vector("x3")]
    assert checked > 100


def test_image_of_tau_is_W():
    """tau surjects onto W of rank C(D,3)+D(b-1), and lands in W on random compositions"""
    rng = random.Random(11)
    for g, blocks in shapes():
        M = model(g, blocks)
        D = 2 * g + sum(blocks) - len(blocks)
        expected = comb(D, 3) + D * (len(blocks) - 1)
        assert M.rank_w() == expected
        assert surjectivity_span(M) == expected, (g, blocks)
        pool = torelli_pool(M, rng)
        if not pool:
            assert expected == 0
            continue
        for _ in range(100):
            assert in_W(tau(random_composition(pool, rng)))[0]
    for g in range(1, 4):
        assert surjectivity_span(model(g, (1,))) == comb(2 * g, 3)


GLUINGS = [
    ((0, (1, 2)), {1: Piece(0, 0)}),
    ((0, (1, 2)), {1: Piece(1, 0)}),
    ((0, (1, 2)), {1: Piece(0, 2)}),
    ((1, (1, 1)), {1: Piece(0, 0)}),
    ((1, (1, 1)), {1: Piece(1, 1)}),
    ((1, (2, 1)), {0: Piece(1, 1)}),
    ((1, (2, 1)), {0: Piece(0, 2)}),
    ((1, (1, 1, 2)), {1: Piece(0, 0), 2: Piece(1, 2)}),
    ((2, (1, 2)), {1: Piece(1, 0)}),
    ((1, (2, 2)), {0: Piece(1, 0), 1: Piece(0, 3)}),
    ((2, (1, 1)), {1: Piece(0, 0)}),
    ((0, (2, 2)), {1: Piece(2, 0)}),
]


def test_naturality_and_basepoint_change():
    """tau after extension equals pushforward of tau; basepoint change matches recomputation"""
    assert len(GLUINGS) >= 10
    for (g, blocks), pieces in GLUINGS:
        M = model(g, blocks)
        gl = glue(M, pieces)
        elems = seed_family(M)
        assert elems, (g, blocks)
        for m in elems:
            ext = extend(gl, m)
            assert validate(ext)["all_pass"]
            assert tau_w(ext) == pushforward(tau_w(m), gl)
    for g, blocks in [(0, (1, 2)), (1, (1, 1)), (1, (2, 1)), (2, (1, 2)), (1, (1, 1, 2)), (2, (1, 1, 1))]:
        M = model(g, blocks)
        elems = seed_family(M)
        for i in range(1, M.k + 1):
            if not M.m[i]:
                elems += [disk_push(M, f"x{r}", i) for r in range(1, 2 * g + 1)]
        for m in elems:
            for i in range(1, M.k + 1):
                assert tau_w(rebase(m, i)) == basepoint_change(tau_w(m), i)


def test_nonseparating_decider():
    """nonseparating decider: bounding-pair illustration, identical and conjugate curves"""
    rng = random.Random(5)
    for g in range(1, 4):
        M = closed_model(g)
        for k in range(1, g):
            x = M.gen(f"x{2 * k + 1}")
            gamma = standard_curve(g, k) * x
            v = nonsep_equivalent(CurvePair(g, gamma, x))
            assert not v.equivalent
            for _ in range(200):
                a = random_word(M.alphabet, rng)
                b = random_word(M.alphabet, rng)
                assert not nonsep_equivalent(CurvePair(g, gamma.conj(a), x.conj(b))).equivalent
        for r in range(1, 2 * g + 1):
            x = M.gen(f"x{r}")
            assert nonsep_equivalent(CurvePair(g, x, x)).equivalent
            for _ in range(200):
                a = random_word(M.alphabet, rng)
                assert nonsep_equivalent(CurvePair(g, x.conj(a), x)).equivalent
    M = closed_model(2)
    assert nonsep_equivalent(CurvePair(2, M.word("x2 x1 x2^-1"), M.word("x1"))).equivalent


def test_separating_decider():
    """separating decider: conjugates equivalent, library witnesses not, theta equals Magnus"""
    rng = random.Random(6)
    for g in (2, 3):
        M = closed_model(g)
        for h in range(1, g):
            gamma = standard_curve(g, h)
            for _ in range(50):
                xi = random_word(M.alphabet, rng)
                v = sep_equivalent(CurvePair(g, gamma, gamma.conj(xi), SEPARATING))
                assert v.equivalent
        # pushing the first handle around the second
        gamma = standard_curve(g, 1)
        phi = handle_push(M, 0, 1)
        v = sep_equivalent(CurvePair(g, gamma, phi(gamma), SEPARATING))
        assert not v.equivalent
        th = theta(phi, standard_basis(g, 1))
        gens = [bracket(LieElement.generator(M.alphabet, n), lcs_class(gamma, 2)).vector()
                for n in M.h_names]
        assert not submodule_contains(gens, th.vector())[0]
        for h in range(1, g):
            gamma = standard_curve(g, h)
            for m in seed_family(M):
                assert theta(m, standard_basis(g, h)) == lcs_class(m(gamma) * gamma.inverse(), 3)
    M = closed_model(3)
    hl = handle_lantern(M, 1)
    assert theta(hl, standard_basis(3, 1)) == lcs_class(hl(standard_curve(3, 1)) * standard_curve(3, 1).inverse(), 3)


def test_filtration_levels():
    """separating twist in level 3 not 4; bounding pair in 2 not 3; identity in all"""
    from johnsonkit.johnson import MappingClass
    for g, blocks in [(2, (1,)), (1, (1, 1)), (2, (2, 1))]:
        M = model(g, blocks)
        m = sep_twist(M, 1)
        assert filtration_member(m, 3) and not filtration_member(m, 4)
    M = model(0, (1, 2))
    bp = bounding_pair_std(M)
    assert filtration_member(bp, 2) and not filtration_member(bp, 3)
    for g, blocks in [(0, (1, 2)), (2, (1,)), (1, (2, 1))]:
        ident = MappingClass.identity(model(g, blocks))
        assert all(filtration_member(ident, k) for k in range(1, 6))


def test_algebra_core():
    """Magnus multiplicativity, Lie identities, Lyndon ranks, bracket kernel rank"""
    rng = random.Random(8)
    A = Alphabet([("x1", 1), ("x2", 1), ("x3", 1), ("z1", 2)])
    for _ in range(1000):
        u = random_word(A, rng, 8)
        v = random_word(A, rng, 8)
        assert magnus(u * v, 4) == magnus(u, 4) * magnus(v, 4)

    def rand_lie(deg):
        basis = lyndon_words(A, deg)
        return LieElement(A, deg, {m: rng.randint(-2, 2) for m in rng.sample(basis, min(3, len(basis)))})

    for _ in range(30):
        x, y, z = rand_lie(1), rand_lie(1), rand_lie(2)
        assert bracket(x, y) == -bracket(y, x)
        assert bracket(x, x).is_zero()
        jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
        assert jac.is_zero()

    # Lyndon count equals the rank of Magnus images of group commutators
    for n1, n2, top in [(2, 0, 4), (3, 1, 4), (6, 2, 4), (4, 2, 4)]:
        B = Alphabet([(f"x{i}", 1) for i in range(1, n1 + 1)] + [(f"z{i}", 2) for i in range(1, n2 + 1)])
        for deg in range(1, top + 1):
            words = lyndon_words(B, deg)
            keys = sorted({k for m in words for k in _expand(m)})
            acc = RankAccumulator()
            for m in words:
                c = _group_commutator(B, m)
                part = magnus(c, deg).part(deg)
                assert all(v == 0 for d in range(1, deg) for v in magnus(c, deg).part(d).values())
                assert set(part) <= set(keys)
                acc.add([part.get(k, 0) for k in keys])
            assert acc.rank == len(words), (n1, n2, deg)
    # the (1,2) bracket has kernel wedge^3 H on totally separated surfaces
    for g, blocks in [(1, (1,)), (2, (1,)), (2, (1, 1)), (3, (1, 1, 1)), (2, (1, 1, 1, 1))]:
        M = model(g, blocks)
        P = bracket_pairing_matrix(M.alphabet, 1, 2)
        assert len(kernel_basis(P)) == comb(M.rank_h, 3)


def _group_commutator(alphabet, m):
    """Group commutator word shaped like the standard bracketing of a Lyndon word."""
    from johnsonkit.lieweighted import standard_factorisation
    if len(m) == 1:
        return Word(alphabet, [m[0] + 1])
    u, v = standard_factorisation(m)
    a, b = _group_commutator(alphabet, u), _group_commutator(alphabet, v)
    return a * b * a.inverse() * b.inverse()


if __name__ == "__main__":
    import sys
    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_") and callable(fn):
            title = fn.__doc__.strip().splitlines()[0]
            try:
                fn()
                print(f"PASS  {title}")
            except Exception as exc:  # report and continue
                failed += 1
                print(f"FAIL  {title}: {type(exc).__name__}: {exc}")
    sys.exit(1 if failed else 0)
