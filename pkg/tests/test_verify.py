import csv
import io
import math

import numpy as np
import pytest

from ifsim.ising import hadamard_logical
from ifsim.model import DiagonalChain, ExchangeChain
from ifsim.pirational import PiRational
from ifsim.schedule import Evolve, PulseSchedule, accounting
from ifsim.verify import (
    CheckRow,
    cost_comparison,
    cost_comparison_csv,
    invariance_suites,
    overlap_fidelity,
    phase_aligned_distance,
    process_fidelity,
    rows_to_csv,
    rows_to_json,
    run_suite,
    suite_costs,
    suite_diagonal,
    trotter_sweep,
)


def test_process_fidelity_of_identity_against_itself():
    arch = DiagonalChain(2, 1.0, 1.0)
    rep = process_fidelity(PulseSchedule(), arch, np.eye(4, dtype=complex),
                           target_label="identity")
    assert rep.fidelity == pytest.approx(1.0, abs=1e-12)
    assert abs(rep.leakage) <= 1e-12


def test_process_fidelity_rejects_wrong_target_shape():
    arch = DiagonalChain(2, 1.0, 1.0)
    with pytest.raises(ValueError, match="target shape"):
        process_fidelity(PulseSchedule(), arch, np.eye(8, dtype=complex))


def test_leakage_of_code_preserving_schedule():
    arch = DiagonalChain(2, 1.0, 1.0)
    rep = process_fidelity(hadamard_logical(arch, 0), arch,
                           np.kron(np.eye(2), np.array([[1, 1], [1, -1]]) / math.sqrt(2)))
    assert rep.leakage <= 1e-10


def test_phase_aligned_distance():
    a = np.diag([1.0, 1.0]).astype(complex)
    b = np.exp(1j * 0.83) * a
    assert phase_aligned_distance(a, b) <= 1e-12
    c = np.diag([1.0, -1.0]).astype(complex)
    assert phase_aligned_distance(a, c) > 0.5


def test_overlap_fidelity_phase_invariant():
    u = np.diag([1j, 1j]).astype(complex)
    assert overlap_fidelity(np.eye(2, dtype=complex), u) == pytest.approx(1.0)


def test_rows_serialization_shapes():
    rows = [CheckRow("s", "case with, comma", "metric", 0.5, "<= 1", True),
            CheckRow("s", "other", "metric", 2.0, "<= 1", False)]
    text = rows_to_csv(rows)
    parsed = list(csv.reader(io.StringIO(text)))
    assert parsed[0] == ["suite", "case", "metric", "value", "threshold", "pass"]
    assert parsed[1][1] == "case with, comma"
    assert parsed[2][5] == "FAIL"
    payload = rows_to_json(rows)
    assert payload["passed"] is False
    assert len(payload["rows"]) == 2


def test_invariance_suites_diagonal_all_pass():
    rows = invariance_suites(DiagonalChain(3, 1.0, 1.0))
    assert rows and all(r.passed for r in rows)


def test_invariance_suites_exchange_all_pass():
    rows = invariance_suites(ExchangeChain(3, 1.0, 1.0))
    assert rows and all(r.passed for r in rows)


def test_suite_diagonal_passes():
    rows = suite_diagonal()
    failed = [r for r in rows if not r.passed]
    assert not failed, failed


def test_suite_costs_passes_and_table_has_provenance():
    rows = suite_costs()
    assert all(r.passed for r in rows)
    table = cost_comparison()
    assert {r.provenance for r in table} == {"compiled construction",
                                             "design budget", "reference model"}
    ours = [r for r in table if "diagonal" in r.gate][0]
    ref = [r for r in table if "switchable Ising" in r.gate][0]
    assert ours.time_in_inverse_coupling < ref.time_in_inverse_coupling
    text = cost_comparison_csv()
    header = text.splitlines()[0].split(",")
    assert "provenance" in header


def test_trotter_sweep_rows_and_constant_time():
    sweeps = trotter_sweep(1.0, (0.0,), (4, 8))
    (sweep,) = sweeps
    assert [r.n_reps for r in sweep.rows] == [4, 8]
    assert len({r.total_evolve_time for r in sweep.rows}) == 1
    assert sweep.rows[0].total_evolve_time == pytest.approx(math.pi / 2)
    assert sweep.rows[1].error < sweep.rows[0].error
    assert sweep.slope < 0


def test_trotter_sweep_validates_ns():
    with pytest.raises(ValueError, match="sorted"):
        trotter_sweep(1.0, (0.0,), (8, 4))
    with pytest.raises(ValueError, match=">= 1"):
        trotter_sweep(1.0, (0.0,), (0, 4))


def test_run_suite_dispatch():
    assert run_suite("costs") == suite_costs()
    with pytest.raises(ValueError, match="unknown suite"):
        run_suite("nope")


def test_accounting_of_plain_evolve_floats():
    sched = PulseSchedule((Evolve(0.25), Evolve(PiRational.ratio(1, 4))))
    cost = accounting(sched)
    assert isinstance(cost.total_evolve_time, float)
    assert cost.total_evolve_time == pytest.approx(0.25 + math.pi / 4, abs=1e-15)
