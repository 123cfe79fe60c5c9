import numpy as np
import pytest

from boltzmann_smoothing.functionals import moments
from boltzmann_smoothing.runner import INITIAL_KINDS, InitialSection, initial_datum

from conftest import coarse_cross_section


@pytest.mark.parametrize("kind", INITIAL_KINDS)
def test_every_kind_is_nonnegative_with_the_requested_mass(fine_grid, kind) -> None:
    params = InitialSection(kind=kind, density=2.0)
    f = initial_datum(fine_grid, params, coarse_cross_section())
    assert f.nonnegative
    assert f.values.min() >= 0.0
    assert f.label == f"initial[{kind}]"
    assert moments(f).mass == pytest.approx(2.0, rel=2e-3)


def test_bimodal_has_no_net_momentum(fine_grid) -> None:
    params = InitialSection(kind="bimodal", drift=(1.0, 0.5, 0.0))
    f = initial_datum(fine_grid, params, coarse_cross_section())
    np.testing.assert_allclose(moments(f).momentum, 0.0, atol=1e-10)


def test_bkw_at_a_later_time_has_a_larger_shape(fine_grid) -> None:
    xs = coarse_cross_section()
    early = initial_datum(fine_grid, InitialSection(kind="bkw"), xs)
    later = initial_datum(fine_grid, InitialSection(kind="bkw", bkw_time=1.0), xs)
    assert not np.allclose(early.values, later.values)
    assert moments(later).mass == pytest.approx(1.0, rel=2e-3)


def test_invalid_section_is_rejected(fine_grid) -> None:
    with pytest.raises(ValueError, match="amplitude"):
        initial_datum(fine_grid, InitialSection(amplitude=1.5), coarse_cross_section())
