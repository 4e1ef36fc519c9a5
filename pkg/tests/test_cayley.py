import math

import numpy as np
import pytest

from _gen import rng
from speclap.constructors import AbelianGroup, cayley_graph, cayley_spectrum, cayley_system, haar_unitary
from speclap.errors import IdentityInS, NotCompatible, NotSymmetric
from speclap.families import cycle
from speclap.spectra import laplacian_spectrum, multiset_distance
from speclap.transmission import classify, identity_system, laplacian

SWAP = np.array([[0, 1], [1, 0]])


def random_compatible_F(r, G, S, N):
    F = {}
    for s in sorted(set(G.normalize(x) for x in S)):
        inv = G.neg(s)
        if s in F:
            continue
        if inv == s:
            X = r.standard_normal((N, N)) + 1j * r.standard_normal((N, N))
            F[s] = X + X.conj().T
        else:
            F[s] = r.standard_normal((N, N)) + 1j * r.standard_normal((N, N))
            F[inv] = F[s].conj().T
    return F


def test_cycle_and_k2():
    g = cayley_graph(AbelianGroup((4,)), [1, 3])
    assert set(g.degree.values()) == {2} and len(g.dedges) == 8
    a = laplacian_spectrum(g, identity_system(g)).values
    assert multiset_distance(a.real, laplacian_spectrum(cycle(4), identity_system(cycle(4))).values.real) < 1e-12
    k2 = cayley_graph(AbelianGroup((2,)), [1])
    assert len(k2) == 2 and len(k2.dedges) == 2


def test_generator_validation():
    with pytest.raises(NotSymmetric):
        cayley_graph(AbelianGroup((4,)), [1])
    with pytest.raises(NotSymmetric):
        cayley_graph(AbelianGroup((5,)), [1, 1, 4])
    with pytest.raises(IdentityInS):
        cayley_graph(AbelianGroup((4,)), [0, 1, 3])


def test_regular_with_multiplicities():
    G = AbelianGroup((2, 3))
    S = [(1, 0), (0, 1), (0, 2), (0, 1), (0, 2)]
    g = cayley_graph(G, S)
    assert set(g.degree.values()) == {len(S)}


def test_system_examples():
    G = AbelianGroup((5,))
    g, ts = cayley_system(G, [1, 4], {1: [[1]], 4: [[1]]})
    assert all(np.array_equal(ts[e.id], [[1]]) for e in g.dedges)
    g, ts = cayley_system(AbelianGroup((2,)), [1], {1: SWAP})
    assert g.dim == 4 and classify(g, ts).hermitian_symmetric
    U = haar_unitary(rng(0), 3)
    g, ts = cayley_system(AbelianGroup((6,)), [1, 5], {1: U, 5: U.conj().T})
    assert classify(g, ts).strictly_unitary
    with pytest.raises(NotCompatible):
        cayley_system(G, [1, 4], {1: [[1j]], 4: [[1j]]})
    with pytest.raises(NotCompatible):
        cayley_system(G, [1, 4], {1: [[1]]})


@pytest.mark.parametrize("n", range(3, 13))
def test_cyclic_cosine_formula(n):
    sp = cayley_spectrum(AbelianGroup((n,)), [1, n - 1], {1: [[1]], n - 1: [[1]]})
    expected = [1 - math.cos(2 * math.pi * j / n) for j in range(n)]
    assert multiset_distance(sp.values.real, np.array(expected)) < 1e-12


def test_swap_example():
    sp = cayley_spectrum(AbelianGroup((2,)), [1], {1: SWAP})
    assert np.allclose(sp.values.real, [0, 0, 2, 2])


def test_classical_character_formula():
    G = AbelianGroup((3, 4))
    S = [(1, 0), (2, 0), (0, 1), (0, 3), (1, 2), (2, 2)]
    F = {G.normalize(s): [[1]] for s in S}
    sp = cayley_spectrum(G, S, F)
    classical = [1 - sum(G.character(a, G.normalize(s)) for s in S).real / len(S) for a in G.elements()]
    assert multiset_distance(sp.values.real, np.array(classical)) < 1e-12


def test_character_sum_matches_dense_solver():
    r = rng(12)
    for moduli, S in [((7,), [1, 6, 3, 4]), ((2, 3), [(1, 0), (0, 1), (0, 2)]), ((8,), [4, 1, 7])]:
        G = AbelianGroup(moduli)
        for N in (1, 2, 3):
            F = random_compatible_F(r, G, S, N)
            g, ts = cayley_system(G, S, F)
            dense = laplacian_spectrum(g, ts, hermitian=True).values.real
            assert multiset_distance(cayley_spectrum(G, S, F).values.real, dense) < 1e-8
