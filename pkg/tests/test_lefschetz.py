import pytest
from pydantic import ValidationError

from swcalc.errors import InvalidParameterError
from swcalc.lefschetz import (
    Fibration,
    build_Mng,
    enk_fibration,
    euler_from_fibration,
    mng_fibration,
    singular_fiber_contribution,
    singular_fiber_model,
    twisted_fiber_sum_check,
    vanishing_cycle_audit,
)
from swcalc.manifold import c1_squared


@pytest.mark.parametrize("n", [1, 2, 3, 4, 6])
@pytest.mark.parametrize("g", [1, 2, 3, 5])
def test_euler_number_from_fibration(n, g):
    fib = enk_fibration(n, g)
    assert fib.fiber_genus == 2 * g + n - 1
    assert fib.singular_fibers == 16 * n + 8 * g - 8
    assert euler_from_fibration(fib.fiber_genus, fib.singular_fibers) == 12 * n == fib.total_e


def test_enk_flags():
    assert enk_fibration(2, 1).reducible_fibers == 0
    assert enk_fibration(2, 1).hyperelliptic == "no"
    assert enk_fibration(1, 1).reducible_fibers is None
    assert enk_fibration(1, 1).hyperelliptic == "unknown"


@pytest.mark.parametrize("n,g", [(2, 1), (3, 2), (5, 4)])
def test_vanishing_cycle_audit(n, g):
    audit = vanishing_cycle_audit(n, g)
    assert audit.from_hyperelliptic == 16 * n - 8
    assert audit.extra_total == 8 * g
    assert audit.extra_per_singular_fiber == 2 * g
    assert audit.total == enk_fibration(n, g).singular_fibers
    assert audit.extra_nonseparating


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("g", [0, 1, 3])
def test_singular_fiber_model(n, g):
    model = singular_fiber_model(n, g)
    assert model.fiber_square == 0
    assert model.fiber_genus == 2 * g + n - 1
    assert model.euler_number == 2 - 2 * g + 2 * n
    assert model.lefschetz_fibers == singular_fiber_contribution(n, g)


@pytest.mark.parametrize("n", [1, 2, 4])
@pytest.mark.parametrize("g", [0, 1, 3])
def test_Mng_record(n, g):
    m = build_Mng(n, g)
    k = m.canonical
    assert m.tracked.square(k) == c1_squared(m) == -4 * (2 * g - 2 + n)
    for s in m.surfaces:
        assert m.tracked.pair(k, s.cls) + s.self_int == 2 * s.genus - 2
    assert mng_fibration(n, g).total_e == m.e == 4 - 4 * g + 4 * n


@pytest.mark.parametrize("n", [1, 2, 3, 5, 8])
@pytest.mark.parametrize("g", [1, 8])
def test_twisted_fiber_sum(n, g):
    report = twisted_fiber_sum_check(n, g)
    assert (report.e, report.sign) == (12 * n, -8 * n)
    assert report.consistent
    assert report.verdict == f"consistent with E({n})_K"


def test_fibration_checks_euler_number():
    with pytest.raises(ValidationError):
        Fibration(fiber_genus=2, singular_fibers=10, total_e=0)
    Fibration(fiber_genus=2, base_genus=1, singular_fibers=10, total_e=0)


@pytest.mark.parametrize(
    "call",
    [
        lambda: enk_fibration(0, 1),
        lambda: vanishing_cycle_audit(1, 1),
        lambda: singular_fiber_model(0, 0),
        lambda: build_Mng(1, -1),
        lambda: twisted_fiber_sum_check(2, 0),
        lambda: euler_from_fibration(-1, 0),
    ],
)
def test_parameter_errors(call):
    with pytest.raises(InvalidParameterError):
        call()
