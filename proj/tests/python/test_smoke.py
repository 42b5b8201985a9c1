# Copyright 2026 The sdgtag Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Smoke tests for the Python module against the shipped sample data."""

import json
import os
import pathlib
import subprocess

import pytest

import sdgtag

SOURCE_DIR = pathlib.Path(os.environ.get("SDGTAG_SOURCE_DIR", pathlib.Path(__file__).parents[2]))
DATA = SOURCE_DIR / "data"


def test_text_helpers():
    assert sdgtag.normalize_term("  Climate   CHANGE ") == "climate change"
    assert sdgtag.tokenize("The rising sea.") == ["rising", "sea"]
    assert sdgtag.levenshtein_distance("kitten", "sitting") == 3
    assert sdgtag.similarity_ratio("oil", "soil") == 0.75
    assert sdgtag.validate_doi("https://doi.org/10.1787/4bdaeb8c-en") == "10.1787/4bdaeb8c-en"
    assert sdgtag.input_digest("").startswith("sha256:e3b0c442")


def test_errors_map_to_sdgtag_error():
    with pytest.raises(sdgtag.SdgtagError):
        sdgtag.validate_doi("garbage")
    with pytest.raises(ValueError):
        sdgtag.normalize_term("   ")


def test_fos_index_tags_identical_text_first():
    index = sdgtag.FosIndex.build([("A", "river flood water"), ("B", "solar panel energy")])
    assert len(index) == 2
    tags = index.tag("river flood water", top_k=5, min_sim=0.0)
    assert tags[0][0] == "A"
    assert tags[0][1] == pytest.approx(1.0, abs=1e-9)


@pytest.fixture(scope="module")
def manifest(tmp_path_factory):
    cli = os.environ.get("SDGTAG_CLI")
    if not cli:
        pytest.skip("SDGTAG_CLI not set")
    out = tmp_path_factory.mktemp("artifacts")
    doc = json.loads((DATA / "manifest.json").read_text())
    for src in doc["sources"]:
        src["path"] = str(DATA / src["path"])
    for key in ("fos_catalog", "fos_corpus", "thresholds", "stopwords"):
        if key in doc:
            doc[key] = str(DATA / doc[key])
    doc["doi"]["fixture"] = str(DATA / doc["doi"]["fixture"])
    doc["service"]["feedback_store"] = str(out / "feedback.jsonl")
    doc["output_dir"] = str(out)
    path = out / "manifest.json"
    path.write_text(json.dumps(doc))
    for stage in ("build-ontology", "link-fos", "build-index"):
        subprocess.run([cli, "--config", str(path), stage], check=True, capture_output=True)
    return path


def test_engine_classifies_sample_text(manifest):
    engine = sdgtag.Engine(manifest)
    result = engine.classify((DATA / "sdg13_text.txt").read_text())
    strong = [s["sdg"] for s in result["scores"] if s["label"] == "Strong"]
    assert strong == [13]
    assert result["engine_version"] == sdgtag.ENGINE_VERSION
    assert engine.stats()["fos_index"]["fos_count"] == 65
