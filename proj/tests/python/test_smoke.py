# Copyright 2026 The ezd authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import os
import subprocess
import tempfile

import pyezd

REFERENCE_JOB = json.dumps(
    {
        "ring": {"monomial_quotient": {"variables": ["x", "y"], "relations": ["x^2", "y^2"]}},
        "f": "x",
        "g": "x",
        "modules": {"M": "k", "N": "k"},
        "cap": 6,
        "seed": 0,
    }
)


def test_ring_basics():
    ring = pyezd.Ring(["x", "y"], ["x^2", "y^2"])
    assert ring.dim == 4
    assert ring.labels() == ["1", "x", "y", "xy"]
    assert ring.hilbert() == [1, 2, 1]
    assert ring.nilpotency == 3
    assert ring.is_exact_pair("x", "x")
    assert not ring.is_exact_pair("xy", "xy")
    assert ring.annihilator_dim("x") == 2
    assert ring.is_conca_generator("x")


def test_verify_reference_instance_passes():
    result = pyezd.run_job("verify", REFERENCE_JOB)
    assert result["exit_code"] == 0
    report = json.loads(result["report"])
    verdicts = {t["id"]: t["verdict"] for t in report["tasks"]}
    assert verdicts["gate.exact-pair"] == "pass"
    assert verdicts["les.exactness"] == "pass"
    assert all(v in ("pass", "not-applicable") for v in verdicts.values())


def test_reports_are_deterministic():
    a = json.loads(pyezd.run_job("verify", REFERENCE_JOB)["report"])
    b = json.loads(pyezd.run_job("verify", REFERENCE_JOB)["report"])
    a.pop("timing_ms")
    b.pop("timing_ms")
    assert a == b


def test_tor_betti():
    beta_q, beta_r = pyezd.tor_betti(REFERENCE_JOB, cap=8)
    assert beta_q == [1, 2, 3, 4, 5, 6, 7]
    assert beta_r == [1] * 7


def test_hypothesis_failure_exit_code():
    job = json.dumps(
        {
            "ring": {"monomial_quotient": {"variables": ["x"], "relations": ["x^4"]}},
            "f": "x^3",
            "g": "x",
            "modules": {"M": "k", "N": "R"},
            "cap": 6,
        }
    )
    result = pyezd.run_job("verify", job)
    assert result["exit_code"] == 1


def test_parse_errors_surface_as_value_errors():
    try:
        pyezd.run_job("verify", "{ not json")
    except ValueError as e:
        assert "byte offset" in str(e)
    else:
        raise AssertionError("expected a ValueError")


def test_cli_end_to_end():
    cli = os.environ.get("EZD_CLI")
    if not cli:
        import pytest

        pytest.skip("EZD_CLI not set")
    with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
        f.write(REFERENCE_JOB)
        path = f.name
    try:
        proc = subprocess.run(
            [cli, "verify", "--input", path, "--format", "machine"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0, proc.stderr
        report = json.loads(proc.stdout)
        assert report["exit_code"] == 0
    finally:
        os.unlink(path)
