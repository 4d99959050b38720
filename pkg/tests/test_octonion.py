from fractions import Fraction

import numpy as np
import pytest

from fano.orientations import Orientation, coherent_orientations, is_coherent
from octonion.algebra import (
    Octonion,
    associator,
    basis_product,
    composition_law_holds,
    conjugate,
    conjugation_gives_norm,
    is_alternative_on_basis,
    multiply,
    norm,
    random_octonion,
    sign_table,
    theta_from_orientation,
    triple_identity_holds,
)


@pytest.fixture(scope="module")
def tables():
    return [theta_from_orientation(o) for o in coherent_orientations()]


def test_every_table_satisfies_the_triangle_relations(tables):
    assert len(tables) == 16
    assert all(t.relations_hold() for t in tables)


def test_theta_follows_the_line_cycle():
    theta = sign_table(0)
    for cycle in theta.orientation.cycles:
        a, b, c = cycle
        assert theta.theta(a, b) == 1
        assert theta.theta(b, a) == -1
        assert basis_product(theta, a, b) == (1, c)


def test_units_square_to_minus_one():
    theta = sign_table(3)
    for k in range(1, 8):
        assert multiply(Octonion.unit(k), Octonion.unit(k), theta) == -Octonion.unit(0)


def test_alternative_and_triple_identity(tables):
    assert all(is_alternative_on_basis(t) for t in tables)
    assert all(triple_identity_holds(t) for t in tables)


def test_associator_is_alternating_off_the_basis(tables):
    rng = np.random.default_rng(3)
    for theta in tables[:4]:
        x, y, z = (random_octonion(rng, bound=4) for _ in range(3))
        a = associator(x, y, z, theta)
        assert (a + associator(y, x, z, theta)).is_zero()
        assert (a + associator(x, z, y, theta)).is_zero()


def test_conjugate_gives_the_norm(tables):
    rng = np.random.default_rng(5)
    for theta in tables:
        x = random_octonion(rng)
        real = Octonion.of([norm(x)] + [0] * 7)
        assert multiply(x, conjugate(x), theta) == real
        assert multiply(conjugate(x), x, theta) == real
    assert conjugate(conjugate(x)) == x
    assert conjugate(Octonion.unit(0)) == Octonion.unit(0)
    assert conjugate(Octonion.unit(5)) == -Octonion.unit(5)
    assert all(conjugation_gives_norm(t, samples=10) for t in tables)


def test_composition_law(tables):
    assert all(composition_law_holds(t, samples=100, seed=7) for t in tables)


def test_octonions_are_not_associative():
    e1, e2, e4 = (Octonion.unit(k) for k in (1, 2, 4))
    assert not associator(e1, e2, e4, sign_table(0)).is_zero()


def test_norm_is_exact():
    x = random_octonion(np.random.default_rng(1))
    assert isinstance(norm(x), Fraction)
    assert norm(Octonion.of([1, 1, 0, 0, 0, 0, 0, 0])) == 2


def test_incoherent_orientation_is_rejected():
    bad = next(o for o in (Orientation.from_bits(b) for b in range(128)) if not is_coherent(o))
    with pytest.raises(ValueError):
        theta_from_orientation(bad)


def test_theta_index_range():
    with pytest.raises(ValueError):
        sign_table(16)
    with pytest.raises(ValueError):
        sign_table(0).theta(3, 3)


def test_octonion_needs_eight_coordinates():
    with pytest.raises(ValueError):
        Octonion.of([1, 2, 3])
