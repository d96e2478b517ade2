import pytest
from gmpy2 import mpq

from hopfdeform import cocycles as co
from hopfdeform.deform import (DeformedAlgebra, DihedralLiftingData,
                               free_parameters_AI, free_parameters_BIL,
                               lifting_data_from_values)


def test_zero_functional_is_no_deformation(A16):
    D = DeformedAlgebra(A16, {})
    for i in A16.basis():
        for j in A16.basis():
            assert D.product(i, j) == A16.product(i, j)


def test_deformed_antipode_axioms(A16, AS3):
    rng = co.make_rng(21)
    for A in (A16, AS3):
        eta = co.random_invariant(A.V, rng)
        D = DeformedAlgebra(A, eta)
        ok, wit = D.check_antipode_axioms()
        assert ok, wit
        assert D.check_grouplikes_undeformed()
        # S_sigma fixes 1 and inverts group-likes
        for g in range(A.G.order):
            i = A.grouplike_index(g)
            assert D.antipode(i) == {A.grouplike_index(A.G.inv(g)): A.one()}


def test_deformed_associativity_exhaustive(A16):
    rng = co.make_rng(23)
    eta = co.random_invariant(A16.V, rng)
    D = DeformedAlgebra(A16, eta)
    ok, wit = D.check_associativity()
    assert ok, wit


def test_lifting_data_rejects_forced_zero_slots():
    # alpha^{1,1} needs q = m-k: for (2,3) it is forced to vanish
    with pytest.raises(ValueError):
        DihedralLiftingData(12, [(2, 3)], alpha11={(0, 0): 1})
    # xi needs equal ell values
    with pytest.raises(ValueError):
        DihedralLiftingData(12, [(2, 3)], [3, 5], xi12={(0, 1): 1})
    # beta/zeta need q = m-ell resp. q = ell
    with pytest.raises(ValueError):
        DihedralLiftingData(12, [(2, 3)], [3], beta11={(0, 0): 1})
    DihedralLiftingData(12, [(2, 3)], [3], beta12={(0, 0): 1})  # q = ell = 3


def test_free_parameter_slots():
    assert free_parameters_AI(12, [(1, 6)]) == [("alpha11", 0, 0), ("alpha12", 0, 0)]
    assert free_parameters_AI(12, [(2, 3)]) == [("alpha12", 0, 0)]
    slots = free_parameters_AI(12, [(2, 3), (2, 9)])
    assert sorted(slots) == sorted([("alpha11", 0, 1), ("alpha11", 1, 0),
                                    ("alpha12", 0, 0), ("alpha12", 1, 1)])
    slots = free_parameters_BIL(12, [(2, 3)], [3])
    assert sorted(slots) == sorted([("alpha12", 0, 0), ("beta12", 0, 0),
                                    ("zeta12", 0, 0), ("xi12", 0, 0)])


def test_functional_from_lifting_data_is_invariant(G12, A16):
    data = lifting_data_from_values(12, [(1, 6)], [],
                                    {("alpha11", 0, 0): mpq(1, 2),
                                     ("alpha12", 0, 0): -1})
    eta = data.functional(A16.V)
    assert co.check_invariance(A16.V, eta)
    # the completed families fill all four summand blocks
    assert eta[(0, 0)] == eta[(1, 1)]
    assert eta[(0, 1)] == eta[(1, 0)]


def test_noninvariant_functional_fails_multiplicative_identity(A16):
    """Harness self-test: breaking invariance must produce a witness."""
    rng = co.make_rng(29)
    eta = co.random_invariant(A16.V, rng)
    bad = co.perturb_non_invariant(A16.V, eta, rng)
    sigma = co.exp_functional(A16, co.lift_functional(A16, bad))
    ok, wit = co.check_multiplicative_cocycle(A16, sigma)
    assert not ok and wit is not None


def test_corrupted_product_fails_associativity(A16):
    """Harness self-test: a wrong structure constant is detected."""
    class Corrupted:
        def __init__(self, A):
            self.__dict__.update(A.__dict__)
            self._A = A
            e = A.G.identity
            self._bad = (A.index((1, 0), e), A.index((1, 1), e))

        def __getattr__(self, name):
            return getattr(self._A, name)

        def product(self, i, j):
            out = dict(self._A.product(i, j))
            if (i, j) == self._bad:
                out[self.unit_index()] = out.get(self.unit_index(),
                                                 self.zero()) + self.one()
            return out

    D = DeformedAlgebra.__new__(DeformedAlgebra)
    D.A = Corrupted(A16)
    D.eta = {}
    D.sigma = co.counit_pair(A16)
    D.sigma_inv = co.counit_pair(A16)
    D._delta2, D._prod, D._antipode = {}, {}, {}
    ok, wit = D.check_associativity()
    assert not ok and wit is not None
