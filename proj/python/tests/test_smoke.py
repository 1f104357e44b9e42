# Copyright 2026 The satd-scope Authors
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
import pathlib

import pytest

import satd_scope

ROOT = pathlib.Path(__file__).resolve().parents[2]
FIXTURE = ROOT / "tests" / "fixtures" / "acceptance_corpus"
PLAN = ROOT / "plans" / "default.plan"

JAVA = """\
package p;

/** Parses input. TODO split this class. */
public class Parser {
  public int parse(String s) {
    int n = 0; // FIXME overflow
    // walk the string
    for (char c : s.toCharArray()) {
      n += c;
    }
    return n;
  }
}
"""


def test_scan_source_localizes_comments():
    records = satd_scope.scan_source("p/Parser.java", JAVA, project="demo")
    assert [r["start_line"] for r in records] == [3, 6, 7]
    header, trailing, inline = records
    assert header["locality"] == "HEADER" and header["header_kind"] == "CLASS"
    assert header["satd"] and header["matched_pattern"] is not None
    assert trailing["trailing"] and trailing["locality"] == "NON_HEADER" and trailing["satd"]
    assert inline["preceding"] == "DOC" and inline["succeeding"] == "LOOPS"
    assert not inline["satd"]


def test_statistics():
    mw = satd_scope.mann_whitney_u([1, 2, 3], [4, 5, 6])
    assert mw["u1"] == 0 and mw["p_value"] == 0.1 and mw["method"] == "exact"
    assert satd_scope.rank_biserial(0, 3, 3) == (-1.0, "large")
    ad = satd_scope.anderson_darling([0.1, 0.2, 0.4, 0.8, 1.6, 3.2, 6.4, 12.8, 25.6, 51.2])
    assert ad["reject"]
    with pytest.raises(satd_scope.UsageError):
        satd_scope.rank_biserial(1, 0, 3)


def test_pipeline(tmp_path):
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"roots": [str(FIXTURE)], "cache_dir": str(tmp_path / "cache")}))
    result = satd_scope.scan(config, workers=2)
    assert [p["project"] for p in result["projects"]] == ["atlas", "beacon", "cobalt"]
    assert sum(p["comments"] for p in result["projects"]) == 44
    metrics, tests = satd_scope.analyze(tmp_path / "cache", PLAN)
    report = satd_scope.render_report(metrics, tests, "md")
    assert "| 1-100 | 3 | 0.189 | 0.200 | 0.467 | 0.500 |" in report
    csvs = satd_scope.render_report(metrics, tests, "csv")
    assert "localization.csv" in csvs
    assert json.loads(satd_scope.render_report(metrics, tests, "json"))["schema"] == "satd-scope/report/1"


def test_errors_map_to_python_exceptions(tmp_path):
    with pytest.raises(satd_scope.ConfigError):
        satd_scope.analyze(tmp_path / "missing", PLAN)
    bad = tmp_path / "bad.json"
    bad.write_text("{\"roots\": [], \"surprise\": 1}")
    with pytest.raises(satd_scope.ConfigError):
        satd_scope.scan(bad)
    assert issubclass(satd_scope.ConfigError, satd_scope.SatdError)
