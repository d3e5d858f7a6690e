import csv
import io
import json

import numpy as np
import pytest

from tridesign import quadcode as qc
from tridesign.codes import LinearCode, WeightEnumerator, macwilliams
from tridesign.verify import REGISTRY, ClaimResult, SuiteReport, assmus_mattson, run_suite

GOLAY = [[1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1], [0, 1, 0, 0, 0, 0, 1, 0, 1, 2, 2, 1],
         [0, 0, 1, 0, 0, 0, 1, 1, 0, 1, 2, 2], [0, 0, 0, 1, 0, 0, 1, 2, 1, 0, 1, 2],
         [0, 0, 0, 0, 1, 0, 1, 2, 2, 1, 0, 1], [0, 0, 0, 0, 0, 1, 1, 1, 2, 2, 1, 0]]


def test_assmus_mattson_golay_gives_five_designs():
    we = LinearCode.from_array(np.array(GOLAY)).weight_distribution()
    rep = assmus_mattson(we, we, 5)
    assert rep.applies and rep.s == 1
    assert rep.code_design_weights == [6, 9]
    assert rep.dual_design_weights == [6]


@pytest.mark.parametrize("m", [3, 5])
def test_assmus_mattson_on_quadratic_code(m):
    cf = qc.table1_distribution(m)
    rep = assmus_mattson(macwilliams(cf), cf, 2)
    assert rep.applies and rep.d == 5 and rep.s == 3
    assert rep.dual_design_weights == [w for w in cf.nonzero() if 0 < w < 3**m]


def test_assmus_mattson_wrong_orientation_does_not_apply():
    cf = qc.table1_distribution(3)
    rep = assmus_mattson(cf, macwilliams(cf), 2)
    assert not rep.applies and rep.code_design_weights == []


def test_assmus_mattson_rejects_bad_input():
    cf = qc.table1_distribution(3)
    with pytest.raises(ValueError):
        assmus_mattson(cf, cf, 2)
    with pytest.raises(ValueError):
        assmus_mattson(macwilliams(cf), cf, 5)


def test_registry_ids_unique():
    ids = [c.id for c in REGISTRY]
    assert len(ids) == len(set(ids))


@pytest.fixture(scope="module")
def report23():
    return run_suite([2, 3])


def test_suite_passes_for_small_m(report23):
    assert report23.exit_code() == 0
    assert {e.status for e in report23.entries} <= {"pass", "flag", "n/a"}
    assert len(report23.entries) == 2 * len(REGISTRY)


def test_suite_formats(report23):
    body = json.loads(report23.to_json())
    assert body["m"] == [2, 3] and len(body["entries"]) == len(report23.entries)
    rows = list(csv.reader(io.StringIO(report23.to_csv())))
    assert rows[0][:3] == ["m", "id", "status"] and len(rows) == len(report23.entries) + 1
    assert report23.to_text().splitlines()[-1].startswith("summary:")


def test_suite_output_is_deterministic(report23):
    assert run_suite([2, 3]).to_json() == report23.to_json()


def test_exit_code_on_failure():
    rep = SuiteReport([3], [ClaimResult("x", 3, "s", "fail", "", 0.0)])
    assert rep.exit_code() == 1
    assert rep.failed[0].id == "x"


def test_budget_skips():
    rep = run_suite([3], budget=1e-9)
    statuses = {e.status for e in rep.entries}
    assert "skip" in statuses and "fail" not in statuses


def test_range():
    with pytest.raises(ValueError):
        run_suite([8])


def test_enumerator_constant_matches_independent_count(design_code3):
    we = macwilliams(design_code3.dual().weight_distribution())
    assert isinstance(we, WeightEnumerator) and len(we.nonzero()) == 23
