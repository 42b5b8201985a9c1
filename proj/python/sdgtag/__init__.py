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

"""Python bindings for the sdgtag classification engine."""

import json

from ._sdgtag import (
    DEFAULT_LINK_THRESHOLD,
    ENGINE_VERSION,
    FosIndex,
    SdgtagError,
    input_digest,
    levenshtein_distance,
    normalize_term,
    similarity_ratio,
    tokenize,
    validate_doi,
)
from ._sdgtag import Engine as _Engine

__all__ = [
    "DEFAULT_LINK_THRESHOLD",
    "ENGINE_VERSION",
    "Engine",
    "FosIndex",
    "SdgtagError",
    "input_digest",
    "levenshtein_distance",
    "normalize_term",
    "similarity_ratio",
    "tokenize",
    "validate_doi",
]


class Engine:
    """Loaded ontology, link map and FOS index, as named by a manifest."""

    def __init__(self, manifest_path):
        self._engine = _Engine.from_manifest(str(manifest_path))

    def classify(self, text):
        return json.loads(self._engine.classify_json(text))

    def stats(self):
        return json.loads(self._engine.stats_json())
