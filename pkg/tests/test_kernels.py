"""Both kernel backends must agree bit-for-bit, including failure triples."""

import numpy as np
import pytest

from ringcent import kernels
from ringcent.gallery import modular_ring, row_ring
from ringcent.groups import group_add_table


def both(func, *args):
    outs = []
    for backend in ("numba", "numpy"):
        with pytest.MonkeyPatch.context() as mp:
            mp.setenv("RINGCENT_BACKEND", backend)
            outs.append(func(*args))
    return outs


def test_add_check_accepts_group_tables():
    for factors in [(2,), (6,), (2, 4), (3, 3)]:
        A = group_add_table(factors)
        nb, npy = both(kernels.add_table_check, A)
        assert nb == npy == (kernels.OK, -1, -1, -1)


def test_add_check_identity_failure():
    A = group_add_table((4,)).copy()
    A[0, 2] = 3
    nb, npy = both(kernels.add_table_check, A)
    assert nb == npy
    assert nb[0] == kernels.BAD_IDENTITY


def test_add_check_symmetry_failure_names_first_pair():
    A = group_add_table((5,)).copy()
    A[1, 3] = 0  # breaks symmetry (and more); symmetry is checked first
    nb, npy = both(kernels.add_table_check, A)
    assert nb == npy
    assert nb[0] == kernels.NONCOMMUTATIVE_ADD
    assert (nb[1], nb[2]) == (1, 3)


def test_add_check_associativity_failure():
    A = group_add_table((5,)).copy()
    A[1, 1] = 3  # diagonal change keeps symmetry and identity, breaks assoc
    nb, npy = both(kernels.add_table_check, A)
    assert nb == npy
    assert nb[0] == kernels.NONASSOCIATIVE_ADD
    assert (nb[1], nb[2], nb[3]) == (1, 1, 2)


def test_mul_and_distrib_checks_agree_on_real_rings():
    for ring in [modular_ring(12), row_ring(3)]:
        nb, npy = both(kernels.mul_assoc_check, ring.mul)
        assert nb == npy == (kernels.OK, -1, -1, -1)
        nb, npy = both(kernels.distrib_check, ring.add, ring.mul)
        assert nb == npy == (kernels.OK, -1, -1, -1)


def test_mul_assoc_first_failure_triple_matches():
    M = modular_ring(6).mul.copy()
    M[2, 3] = 1
    nb, npy = both(kernels.mul_assoc_check, M)
    assert nb == npy
    assert nb[0] == kernels.NONASSOCIATIVE_MUL


def test_distrib_first_failure_triple_matches():
    ring = modular_ring(6)
    M = ring.mul.copy()
    M[2, 3] = 1
    nb, npy = both(kernels.distrib_check, ring.add, M)
    assert nb == npy
    assert nb[0] in (kernels.NONDISTRIBUTIVE_LEFT, kernels.NONDISTRIBUTIVE_RIGHT)


def test_structure_search_backends_identical():
    from ringcent.enumeration import _search_inputs

    for factors in [(2,), (4,), (2, 2), (2, 4), (3, 3), (2, 2, 2)]:
        cv, allowed = _search_inputs(factors)
        results = []
        for backend in ("numba", "numpy"):
            with pytest.MonkeyPatch.context() as mp:
                mp.setenv("RINGCENT_BACKEND", backend)
                arr, status, _ = kernels.structure_search(
                    factors, cv, allowed, 1 << 62
                )
            assert status == 0
            results.append(arr)
        assert np.array_equal(results[0], results[1]), factors


def test_structure_search_respects_node_cap():
    from ringcent.enumeration import _search_inputs

    cv, allowed = _search_inputs((2, 2, 2))
    for backend in ("numba", "numpy"):
        with pytest.MonkeyPatch.context() as mp:
            mp.setenv("RINGCENT_BACKEND", backend)
            _, status, nodes = kernels.structure_search((2, 2, 2), cv, allowed, 50)
        assert status == -1
