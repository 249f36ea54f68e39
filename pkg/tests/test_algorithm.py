import numpy as np
import pytest

from drmcmo.algorithm import AlgorithmConfig, Generation, run
from drmcmo.core import ConfigurationError, cdp_matrix
from drmcmo.problems import get_problem


class Counting:
    """Wraps a problem and counts evaluated rows independently of the run's counter."""

    def __init__(self, problem):
        self.inner = problem
        self.calls = 0
        for attr in ("name", "n_var", "n_obj", "n_constr", "lower", "upper"):
            setattr(self, attr, getattr(problem, attr))

    def evaluate(self, X):
        self.calls += len(X)
        return self.inner.evaluate(X)


def assert_archive_hygiene(gen: Generation, capacity: int) -> None:
    arch = gen.archive
    assert len(arch) <= capacity
    if arch.feasible.any():
        assert np.all(arch.cv == 0)
        assert not cdp_matrix(arch.F, arch.cv).any()


def test_config_validation():
    with pytest.raises(ConfigurationError):
        AlgorithmConfig(N=1)
    with pytest.raises(ConfigurationError):
        AlgorithmConfig(N=10, max_fe=5)
    with pytest.raises(ConfigurationError):
        AlgorithmConfig(variant="v4")
    with pytest.raises(ConfigurationError):
        AlgorithmConfig(operator="pso")
    assert AlgorithmConfig(N=100, max_fe=100_000).max_generation == 1000
    assert AlgorithmConfig(N=30, max_fe=1000).max_generation == 34


@pytest.mark.parametrize("name", ["bc_band", "bc_arcs", "mw13_bc"])
def test_archive_hygiene_every_generation(name):
    seen = []

    def check(gen):
        assert_archive_hygiene(gen, 40)
        seen.append(gen.k)

    run(get_problem(name), AlgorithmConfig(N=40, max_fe=8000, seed=3), callback=check)
    # the initial population spends the first N evaluations
    assert seen == list(range(200))


@pytest.mark.parametrize("variant", ["full", "v1_no_shift", "v2_linear_alpha"])
def test_schedule_monotone_over_run(variant):
    trace = []

    def record(gen):
        if gen.drm_applied:
            trace.append((gen.state.alpha, gen.state.r))
            state.append(gen.state)

    state = []
    run(get_problem("bc_band"), AlgorithmConfig(N=20, max_fe=4000, seed=2, variant=variant), callback=record)
    alphas, radii = np.array(trace).T
    assert len(trace) >= 150
    assert np.all(np.diff(alphas) >= 0) and np.all(np.diff(radii) <= 0)
    assert np.all((alphas >= 0) & (alphas <= 1)) and np.all(radii >= 0)
    if variant == "v2_linear_alpha":
        # the last generation is K - 1, one step short of the schedule's end point
        st = state[-1]
        assert st.k == st.K - 1 and alphas[-1] == (st.K - 1 - st.k_s) / (st.K - st.k_s)


def test_activation_latches_once():
    ks = []
    archive, rec = run(
        get_problem("mw13_bc"), AlgorithmConfig(N=20, max_fe=4000, seed=1), callback=lambda g: ks.append(g.state.k_s)
    )
    assert rec.activation_generation > 0
    assert set(ks) == {0, rec.activation_generation}
    assert ks.index(rec.activation_generation) == rec.activation_generation


def _trajectory(variant, seed=1):
    steps = []

    def keep(gen):
        steps.append((gen.population.X.copy(), gen.archive.X.copy(), bool(gen.archive.feasible.any()), gen.drm_applied))

    run(get_problem("mw13_bc"), AlgorithmConfig(N=20, max_fe=4000, seed=seed, variant=variant), callback=keep)
    return steps


def test_full_and_cdp_only_agree_until_first_feasible():
    full = _trajectory("full")
    cdp = _trajectory("v3_cdp_only")
    first = next(i for i, s in enumerate(full) if s[2])
    assert first > 5
    for a, b in zip(full[: first + 1], cdp[: first + 1]):
        assert np.array_equal(a[0], b[0]) and np.array_equal(a[1], b[1])
    assert full[first + 1][3] and not cdp[first + 1][3]


def test_cdp_only_never_uses_detection_regions():
    for name in ("bc_band", "mw13_bc"):
        flags = []
        _, rec = run(
            get_problem(name),
            AlgorithmConfig(N=20, max_fe=2000, seed=5, variant="v3_cdp_only"),
            callback=lambda g: flags.append(g.drm_applied),
        )
        assert not any(flags) and rec.activation_generation == 0


@pytest.mark.parametrize("N,max_fe", [(20, 2000), (30, 1000), (7, 50)])
def test_budget_is_exact(N, max_fe):
    problem = Counting(get_problem("bc_band"))
    _, rec = run(problem, AlgorithmConfig(N=N, max_fe=max_fe, seed=1))
    assert rec.evaluations == problem.calls
    assert max_fe <= rec.evaluations <= max_fe + N
    assert rec.generations == -(-max_fe // N) - 1
    assert rec.evaluations == N * (rec.generations + 1)


def test_budget_of_one_population_returns_initial_archive():
    problem = Counting(get_problem("bc_band"))
    archive, rec = run(problem, AlgorithmConfig(N=10, max_fe=10, seed=4))
    assert problem.calls == 10 and rec.generations == 0 and rec.truncated
    assert 1 <= len(archive) <= 10
    full_archive, full_rec = run(get_problem("bc_band"), AlgorithmConfig(N=10, max_fe=100, seed=4))
    assert not full_rec.truncated


@pytest.mark.parametrize("operator,mating", [("ga", "tournament"), ("de", "tournament"), ("ga", "neighbor")])
def test_runs_are_deterministic(operator, mating):
    cfg = AlgorithmConfig(N=20, max_fe=2000, seed=9, operator=operator, mating=mating)
    a1, r1 = run(get_problem("bc_arcs"), cfg)
    a2, r2 = run(get_problem("bc_arcs"), cfg)
    assert a1.X.tobytes() == a2.X.tobytes() and a1.F.tobytes() == a2.F.tobytes()
    assert r1.archive_objectives == r2.archive_objectives
    other, _ = run(get_problem("bc_arcs"), AlgorithmConfig(N=20, max_fe=2000, seed=10, operator=operator, mating=mating))
    assert other.X.tobytes() != a1.X.tobytes()


def test_offspring_respect_bounds_for_every_operator():
    problem = get_problem("lircmop1_bc")

    def inside(gen):
        assert np.all(gen.population.X >= problem.lower) and np.all(gen.population.X <= problem.upper)

    for operator in ("ga", "de"):
        run(problem, AlgorithmConfig(N=20, max_fe=1000, seed=1, operator=operator), callback=inside)


def test_record_carries_checkpoints_every_ten_generations():
    from drmcmo.problems import default_front_size, sample_reference_front

    problem = get_problem("bc_band")
    ref = sample_reference_front(problem, default_front_size(2))
    archive, rec = run(problem, AlgorithmConfig(N=20, max_fe=1050, seed=1), ref)
    gens = [c.generation for c in rec.checkpoints]
    assert gens == [0, 10, 20, 30, 40, 50, 52]
    assert rec.final_igd == rec.checkpoints[-1].igd is not None
    assert rec.final_hv > 0 and rec.checkpoints[-1].n_feasible == len(archive)
    assert rec.archive_objectives == archive.F.tolist()
