import pytest

from _support import shapes
from johnsonkit.errors import BadParameters
from johnsonkit.johnson import MappingClass, is_torelli, tau, tau_w, validate
from johnsonkit.library import (SGroup, Frame, block_push, bounding_pair, bounding_pair_std,
                                conjugator_family, disk_push, handle_lantern, handle_push,
                                handle_swap, handle_twist, lantern_core, lantern_core_std,
                                seed_family, sep_twist, surjectivity_span, twist)
from johnsonkit.surface import model


def _is_identity(m):
    return all(m.endo.images[t] == m.model.alphabet.gens()[t] for t in range(len(m.model.alphabet)))


@pytest.mark.parametrize("genus,blocks", [(1, (1, 1)), (2, (2, 1)), (3, (1,)), (1, (2, 2)), (0, (3, 1))])
def test_generators_validate_and_invert(genus, blocks):
    M = model(genus, blocks)
    for m in seed_family(M) + conjugator_family(M):
        assert validate(m)["all_pass"], m.label
        assert _is_identity(m * m.inverse) and _is_identity(m.inverse * m), m.label


def test_frames_preserve_the_boundary_relation():
    M = model(2, (2, 1, 2))
    G = SGroup(M)
    fr = Frame(G)
    fs = G.factors
    fr.bring_after(fs[0], fs[-1])
    fr.bring_after(fs[-2], fs[1])
    # twisting any run in a shuffled frame still gives a valid mapping class
    for s in range(len(fs)):
        for e in range(s, len(fs)):
            assert validate(twist(M, s, e, 1, fr))["all_pass"]


def test_handle_moves_act_on_homology_as_expected():
    M = model(2, (1,))
    t = handle_twist(M, 1, "x")
    assert M.homology_class(t(M.gen("x2"))) == [1, 1, 0, 0]
    s = handle_swap(M, 1)
    assert validate(s)["all_pass"]
    assert is_torelli(handle_push(M, 0, 1))


def test_parameter_errors():
    M = model(1, (1, 2))
    with pytest.raises(BadParameters):
        sep_twist(M, 2)
    with pytest.raises(BadParameters):
        disk_push(M, "x1", 1)  # block 1 has two components
    with pytest.raises(BadParameters):
        bounding_pair_std(model(1, (1, 2)))
    with pytest.raises(BadParameters):
        lantern_core(M, (0, 0), (2, 2), (3, 3))
    with pytest.raises(BadParameters):
        block_push(M, "x1", 3)


def test_lantern_cores_on_non_separating_partitions_vanish():
    M = model(0, (1, 1, 1, 1))
    fr = Frame(SGroup(M))
    m = lantern_core(M, (0, 0), (1, 1), (2, 2), fr)
    assert tau_w(m).is_zero()


def test_handle_lantern_value():
    M = model(3, (1,))
    w = tau_w(handle_lantern(M, 1))
    assert w.wedge3 == {(1, 3, 5): -1} and not w.delta


def test_bounding_pair_general_matches_standard():
    M = model(0, (1, 2))
    fr = Frame(SGroup(M))
    m = bounding_pair(M, (1, 1), (0, 0), fr)
    std = tau_w(bounding_pair_std(M))
    assert tau_w(m) in (std, -std)
    with pytest.raises(BadParameters):
        bounding_pair(M, (1, 1), (0, 1), fr)


# Ranks frozen from the exact-sequence count C(D,3) + D (b-1), D = 2g + n - b.
FROZEN_RANKS = {
    (0, (4,)): 1, (3, (1,)): 20, (3, (1, 1)): 26, (3, (2,)): 35, (2, (1, 1, 1)): 12,
    (1, (2, 2)): 8, (1, (1, 1, 1, 1)): 6, (0, (1, 1, 2)): 2, (3, (1, 1, 1, 1)): 38,
}


@pytest.mark.parametrize("shape,rank", sorted(FROZEN_RANKS.items()))
def test_surjectivity_frozen(shape, rank):
    assert surjectivity_span(model(*shape)) == rank


def test_surjectivity_basis_is_in_image():
    M = model(1, (2, 1))
    rank, basis = surjectivity_span(M, return_basis=True)
    assert rank == M.rank_w() == len(basis)
