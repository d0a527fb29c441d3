import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclicec import generators as gen
from cyclicec.errors import RegularityRequired
from cyclicec.graph import degree_profile, is_connected
from cyclicec.spectral import adjacency_matrix, e_between, mixing_check, mixing_fuzz, spectrum
from conftest import CORPUS
from oracles import jacobi_eigenvalues

TOL = 1e-8


def test_k44_spectrum():
    s = spectrum(gen.complete_bipartite(4, 4))
    expected = [4] + [0] * 6 + [-4]
    assert np.allclose(s.eigenvalues, expected, atol=TOL)
    assert abs(s.lambda2) <= TOL
    assert abs(s.lambda_abs - 4) <= TOL


def test_petersen_spectrum():
    s = spectrum(gen.petersen())
    # 3 once, 1 five times, -2 four times; trace 3 + 5 - 8 = 0
    assert np.allclose(s.eigenvalues, [3] + [1] * 5 + [-2] * 4, atol=TOL)
    assert abs(s.lambda2 - 1) <= TOL


def test_heawood_lambda2_is_sqrt2():
    assert abs(spectrum(gen.heawood()).lambda2 - math.sqrt(2)) <= TOL


def test_example48_lambda2():
    G, _ = gen.example48()
    lam = spectrum(G).lambda2
    assert abs(lam - 4.56) <= 0.01
    assert lam >= 4.5 > 5 - 12 / 6


@pytest.mark.parametrize("name", ["K4", "petersen", "Q3", "prism5", "wagner", "octahedron",
                                  "rr(12,3,s2)", "two_k4_bridge"])
def test_matches_jacobi(name):
    G = CORPUS[name]
    ref = jacobi_eigenvalues(adjacency_matrix(G))
    assert np.allclose(spectrum(G).eigenvalues, ref, atol=TOL)


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_spectrum_invariants(name):
    G = CORPUS[name]
    s = spectrum(G)
    assert list(s.eigenvalues) == sorted(s.eigenvalues, reverse=True)
    assert abs(sum(s.eigenvalues)) <= G.n * TOL
    prof = degree_profile(G)
    if prof.is_regular and is_connected(G):
        assert abs(s.eigenvalues[0] - prof.d) <= TOL


@given(st.permutations(range(10)))
@settings(max_examples=25, deadline=None)
def test_relabel_invariance(perm):
    G = gen.petersen()
    assert np.allclose(spectrum(G.relabel(perm)).eigenvalues, spectrum(G).eigenvalues, atol=TOL)


def test_e_between_counts_ordered_pairs():
    K = gen.complete(4)
    assert e_between(K, range(4), range(4)) == 12
    assert e_between(K, [0, 1], [1, 2]) == 3  # 0-1, 0-2, 1-2; the pair 1-1 is not an edge
    assert e_between(K, [0, 1], [0, 1]) == 2


def test_mixing_full_set():
    chk = mixing_check(gen.petersen(), range(10), range(10), 1.0)
    assert chk.e_xy == 30 and chk.expected == 30 and chk.holds


def test_mixing_bipartite_equality_case():
    K = gen.complete_bipartite(4, 4)
    chk = mixing_check(K, range(4), range(4, 8), 4.0)
    assert chk.e_xy == 16 and chk.expected == 8 and chk.bound == pytest.approx(8)
    assert chk.holds
    # With the signed second eigenvalue (0) the two-sided bound fails.
    assert not mixing_check(K, range(4), range(4, 8), 0.0).holds


def test_mixing_requires_regular():
    with pytest.raises(RegularityRequired):
        mixing_check(gen.wheel(6), [0], [1], 1.0)


@pytest.mark.parametrize("G", [gen.petersen(), gen.hypercube(4), gen.complete_bipartite(4, 4),
                               gen.example48()[0]])
def test_mixing_fuzz_no_failures(G):
    rep = mixing_fuzz(G, 1000, seed=3)
    assert rep.failures == 0 and rep.trials == 1000


def test_mixing_fuzz_deterministic():
    a = mixing_fuzz(gen.hypercube(4), 50, seed=9)
    b = mixing_fuzz(gen.hypercube(4), 50, seed=9)
    assert a == b


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_mixing_overlapping_sets(data):
    G = data.draw(st.sampled_from([gen.petersen(), gen.heawood(), gen.hypercube(4), CORPUS["K6"]]))
    X = data.draw(st.sets(st.sampled_from(range(G.n))))
    Y = data.draw(st.sets(st.sampled_from(range(G.n))))
    assert mixing_check(G, X, Y, spectrum(G).lambda_abs).holds
