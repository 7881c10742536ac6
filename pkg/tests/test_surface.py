import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _support import random_word, shapes
from johnsonkit.errors import BadPartition, NotInFiltration
from johnsonkit.freegroup import commutator
from johnsonkit.lieweighted import lcs_class
from johnsonkit.surface import NClass, PartitionedSurface, build_model, model
from johnsonkit.zlinalg import IntMatrix, determinant, submodule_rank


def test_partition_validation():
    with pytest.raises(BadPartition):
        PartitionedSurface(1, ())
    with pytest.raises(BadPartition):
        PartitionedSurface(1, (1, 0))
    with pytest.raises(BadPartition):
        PartitionedSurface(-1, (1,))
    ps = PartitionedSurface.from_json({"genus": 2, "blocks": [2, 1]})
    assert (ps.n, ps.b) == (3, 2)
    assert PartitionedSurface.from_json(ps.to_json()) == ps


@pytest.mark.parametrize("genus,blocks,ghat,k,dperp", [
    (1, (1,), 1, 0, 2),
    (0, (2, 2), 2, 1, 2),
    (3, (1, 1), 3, 1, 6),
    (2, (3, 1, 2), 5, 2, 7),
])
def test_model_counts(genus, blocks, ghat, k, dperp):
    M = model(genus, blocks)
    assert M.rank_h == 2 * ghat and M.k == k and M.D == dperp
    assert len(M.z_names) == k


@pytest.mark.parametrize("genus,blocks", shapes(3, 4))
def test_model_invariants(genus, blocks):
    M = model(genus, blocks)
    n = M.rank_h
    Om = IntMatrix.from_rows(M.omega_matrix())
    assert all(Om[i, j] == -Om[j, i] for i in range(n) for j in range(n))
    assert abs(determinant(Om)) == 1 if n else True
    classes = M.boundary_classes
    for i, mi in enumerate(M.m):
        tot = [0] * n
        for j in range(mi + 1):
            tot = [a + b for a, b in zip(tot, classes[(i, j)])]
        assert not any(tot)
    vals = list(classes.values())
    assert all(M.omega(u, v) == 0 for u in vals for v in vals)
    assert submodule_rank(vals) == sum(blocks) - len(blocks)
    assert M.D == 2 * genus + sum(blocks) - len(blocks)
    # the boundary word closes up the relation: its class is minus the symplectic class
    bw = M.boundary_word
    assert not any(M.homology_class(bw))
    c = M.n_class(bw)
    assert c.z == tuple([-1] * M.k)
    om = M.symplectic_class()
    assert {p: -v for p, v in om.wedge.items() if v} == {p: v for p, v in c.wedge.items() if v}


def test_homology_and_separation():
    M = model(2, (1, 2))
    x1, x2 = M.gen("x1"), M.gen("x2")
    assert not any(M.homology_class(M.z(1)))
    assert M.homology_class(x1) == M.basis_vector("x1")
    assert not any(M.homology_class(commutator(x1, M.gen("a1.1"))))
    assert M.is_partition_separating(M.z(1))
    assert not M.is_partition_separating(x1)
    assert M.is_partition_separating(commutator(x1, x2))


def test_n_class_examples():
    M = model(1, (1, 1))
    x1, x2 = M.gen("x1"), M.gen("x2")
    c = M.n_class(commutator(x1, x2) * M.z(1))
    assert c.wedge == {(0, 1): 1} and c.z == (1,)
    c = M.n_class(M.z(1))
    assert not c.wedge and c.z == (1,)
    with pytest.raises(NotInFiltration):
        M.n_class(x1)


def test_omega_examples():
    M = model(1, (1, 2))
    assert M.omega(M.basis_vector("x1"), M.basis_vector("x2")) == 1
    u = M.basis_vector("a1.1")
    assert M.omega(u, u) == 0
    assert M.omega(u, M.boundary_classes[(1, 0)]) == 0


def test_n_class_is_conjugation_invariant():
    rng = random.Random(9)
    M = model(1, (2, 2))
    for _ in range(100):
        u, v = random_word(M.alphabet, rng), random_word(M.alphabet, rng)
        w = commutator(u, v) * M.z(1) ** rng.randint(-2, 2)
        g = random_word(M.alphabet, rng)
        assert M.n_class(w.conj(g)) == M.n_class(w)
        assert lcs_class(w.conj(g), 2) == lcs_class(w, 2)


def test_build_model_accepts_json():
    M = build_model({"genus": 1, "blocks": [1, 2]})
    d = M.describe()
    assert d["rank_H"] == 4 and d["k"] == 1 and d["rank_W"] == M.rank_w()
