import math

import numpy as np
import pytest

from boltzmann_smoothing.errors import NumericalError
from boltzmann_smoothing.evolution import (
    CheckpointSpec,
    Trajectory,
    bootstrap_stages,
    energy_ledger,
    entropy_dissipation_integral,
    regularity_tracker,
    shell_spectrum,
    simulate,
    step,
    tail_exponent,
)
from boltzmann_smoothing.evolution_ttc.tasks.stepping_tasks import _time_grid
from boltzmann_smoothing.functionals import moments
from boltzmann_smoothing.grid import Distribution
from boltzmann_smoothing.mollifier import make_schedule
from conftest import maxwellian


def _manual_trajectory(grid, times=(0.0, 1.0, 2.0), dissipation=(1.0, 1.0, 3.0)) -> Trajectory:
    states = tuple(maxwellian(grid, 1.0 + 0.1 * i) for i in range(len(times)))
    return Trajectory(
        times=tuple(times),
        states=states,
        moments=tuple(moments(f) for f in states),
        dissipation=tuple(dissipation),
    )


def test_checkpoint_spec_validation() -> None:
    with pytest.raises(ValueError, match="strictly increasing"):
        CheckpointSpec(times=(0.5, 0.2)).validate()
    with pytest.raises(ValueError, match="every >= 1"):
        CheckpointSpec(every=0).validate()
    with pytest.raises(ValueError):
        CheckpointSpec(times=(-1.0,)).validate()


def test_time_grid_hits_checkpoints_exactly() -> None:
    times, marks = _time_grid(1.0, 0.3, CheckpointSpec(times=(0.5,)))
    assert times == pytest.approx([0.0, 0.25, 0.5, 0.75, 1.0])
    assert times[2] == 0.5 and times[-1] == 1.0
    assert marks == {0, 2, 4}


def test_time_grid_every() -> None:
    times, marks = _time_grid(1.0, 0.25, CheckpointSpec(every=3))
    assert len(times) == 5
    assert marks == {0, 3, 4}


def test_trajectory_validation(grid) -> None:
    f = maxwellian(grid)
    with pytest.raises(ValueError, match="strictly increasing"):
        Trajectory(times=(0.0, 0.0), states=(f, f))
    with pytest.raises(ValueError, match="dissipation"):
        Trajectory(times=(0.0, 1.0), states=(f, f), dissipation=(1.0,))


def test_thinned_keeps_the_last_checkpoint(grid) -> None:
    traj = _manual_trajectory(grid, times=(0.0, 1.0, 2.0, 3.0), dissipation=(0, 0, 0, 0))
    assert traj.thinned(2).times == (0.0, 2.0, 3.0)
    assert traj.thinned(1).times == traj.times
    with pytest.raises(ValueError):
        traj.thinned(0)


def test_dissipation_integral_is_a_trapezoid(grid) -> None:
    assert entropy_dissipation_integral(_manual_trajectory(grid)) == pytest.approx(3.0)


def test_dissipation_integral_needs_a_series_or_workspace(grid) -> None:
    f = maxwellian(grid)
    with pytest.raises(ValueError, match="workspace"):
        entropy_dissipation_integral(Trajectory(times=(0.0, 1.0), states=(f, f)))


def test_step_rejects_bad_arguments(ws, gaussian) -> None:
    with pytest.raises(ValueError, match="unknown scheme"):
        step(gaussian, 0.1, "leapfrog", ws)
    with pytest.raises(ValueError, match="dt"):
        step(gaussian, 0.0, "euler", ws)


def test_short_run_conserves_mass(ws, gaussian) -> None:
    traj = simulate(
        gaussian, 0.01, 0.005, "euler", CheckpointSpec(every=1), ws, dissipation=False
    )
    assert traj.times == pytest.approx((0.0, 0.005, 0.01))
    assert traj.dissipation == ()
    assert traj.conservation_drift()["mass"] < 1e-10
    assert traj.provenance["steps"] == 2


def test_projected_run_conserves_energy(ws, gaussian) -> None:
    traj = simulate(
        gaussian, 0.01, 0.01, "rk2", CheckpointSpec(every=1), ws, project=True, dissipation=False
    )
    drift = traj.conservation_drift()
    assert drift["energy"] < 1e-10 and drift["momentum"] < 1e-10


def test_simulate_rejects_bad_range(ws, gaussian) -> None:
    with pytest.raises(ValueError, match="t_end"):
        simulate(gaussian, 0.0, 0.1, "euler", CheckpointSpec(), ws)


def test_bootstrap_stage_rates() -> None:
    stages = bootstrap_stages(0.0, [0.0, 1.0, 3.0], s=0.5, gamma=0.0)
    assert [stage.rate for stage in stages] == pytest.approx([0.5, 0.25])
    assert [stage.start for stage in stages] == pytest.approx([0.0, 0.5])
    assert stages[1].lam(3.0) == pytest.approx(1.0)
    with pytest.raises(ValueError):
        bootstrap_stages(0.0, [0.0], s=0.5, gamma=0.0)
    with pytest.raises(ValueError, match="increasing"):
        bootstrap_stages(0.0, [0.0, 1.0, 1.0], s=0.5, gamma=0.0)


def test_tail_exponent_separates_smooth_from_rough(fine_grid) -> None:
    smooth = maxwellian(fine_grid)
    rough = Distribution(
        grid=fine_grid,
        values=(np.max(np.abs(fine_grid.velocities), axis=0) <= 1.5).astype(float),
    )
    radii, averages = shell_spectrum(smooth)
    assert radii.size == averages.size > 0
    assert tail_exponent(smooth) > 2.0
    assert tail_exponent(smooth) > tail_exponent(rough)


def test_regularity_tracker_marks_uncovered_checkpoints(grid) -> None:
    traj = _manual_trajectory(grid)
    sched = make_schedule(1.0, 0.0, t_end=1.0)
    report = regularity_tracker(traj, sched, orders=[(1.0, 0.0)], deltas=(0.1,))
    assert [row["stage"] for row in report.rows] == [0, 0, None]
    assert math.isnan(report.rows[-1]["lambda"])
    assert report.rows[1]["lambda"] == pytest.approx(1.0)
    assert "sobolev_H^1_0" in report.flat_rows()[0]


def test_ledger_rejects_trajectory_outside_schedule(grid, ws) -> None:
    traj = _manual_trajectory(grid)
    with pytest.raises(NumericalError, match="schedule covers"):
        energy_ledger(traj, make_schedule(1.0, 0.0, t_end=1.0), ws)


@pytest.mark.slow
def test_ledger_balances_on_a_short_run(ws, gaussian) -> None:
    traj = simulate(gaussian, 0.02, 0.005, "rk4", CheckpointSpec(every=1), ws, dissipation=False)
    report = energy_ledger(traj, make_schedule(0.5, 0.0, t_end=0.02), ws)
    assert len(report.rows()) == 5
    assert report.residual[0] == 0.0
    assert report.max_relative_residual < 0.05
