// Copyright 2026 The sdgtag Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "sdgtag/doiresolve.hpp"
#include "sdgtag/engine.hpp"
#include "sdgtag/error.hpp"
#include "sdgtag/fostag.hpp"
#include "sdgtag/fuzzylink.hpp"
#include "sdgtag/manifest.hpp"
#include "sdgtag/textprep.hpp"

namespace py = pybind11;

namespace {

// Results cross the boundary as JSON text; the Python wrapper decodes them.
std::string classify_json(const sdgtag::Engine& engine, std::string_view text) {
  py::gil_scoped_release release;
  return engine.classify(text).to_json().dump();
}

std::vector<std::pair<std::string, double>> as_pairs(const std::vector<sdgtag::FosTag>& tags) {
  std::vector<std::pair<std::string, double>> out;
  out.reserve(tags.size());
  for (const auto& t : tags) out.emplace_back(t.fos_id, t.similarity);
  return out;
}

}  // namespace

PYBIND11_MODULE(_sdgtag, m) {
  m.doc() = "SDG classification engine";
  m.attr("ENGINE_VERSION") = sdgtag::engine_version();
  m.attr("DEFAULT_LINK_THRESHOLD") = sdgtag::kDefaultLinkThreshold;

  py::register_exception<sdgtag::Error>(m, "SdgtagError", PyExc_ValueError);

  m.def("normalize_term", [](std::string_view raw) { return sdgtag::normalize_term(raw).str(); },
        py::arg("raw"));
  m.def("tokenize",
        [](std::string_view text) { return sdgtag::tokenize(text, sdgtag::TokenizerConfig{}); },
        py::arg("text"), "Tokens with the built-in English stopword list removed.");
  m.def("levenshtein_distance",
        py::overload_cast<std::string_view, std::string_view>(&sdgtag::levenshtein_distance),
        py::arg("a"), py::arg("b"));
  m.def("similarity_ratio",
        py::overload_cast<std::string_view, std::string_view>(&sdgtag::similarity_ratio),
        py::arg("a"), py::arg("b"));
  m.def("validate_doi", [](std::string_view raw) { return sdgtag::validate_doi(raw).str(); },
        py::arg("raw"));
  m.def("input_digest", &sdgtag::input_digest, py::arg("text"));

  py::class_<sdgtag::FosIndex>(m, "FosIndex")
      .def_static(
          "build",
          [](const std::vector<std::pair<std::string, std::string>>& docs) {
            std::vector<sdgtag::FosDocument> in;
            for (const auto& [id, text] : docs) in.push_back({id, text});
            return sdgtag::FosIndex::build(std::move(in));
          },
          py::arg("docs"), "Builds from (fos_id, text) pairs.")
      .def_static(
          "load", [](const std::filesystem::path& p) { return sdgtag::FosIndex::load(p); },
          py::arg("path"))
      .def("save", &sdgtag::FosIndex::save, py::arg("path"))
      .def(
          "tag",
          [](const sdgtag::FosIndex& index, std::string_view text, std::size_t top_k, double min_sim) {
            return as_pairs(index.tag(text, sdgtag::TagOptions{top_k, min_sim}));
          },
          py::arg("text"), py::arg("top_k") = sdgtag::TagOptions{}.top_k,
          py::arg("min_sim") = sdgtag::TagOptions{}.min_sim)
      .def_property_readonly("size", &sdgtag::FosIndex::size)
      .def_property_readonly("vocabulary_size", &sdgtag::FosIndex::vocabulary_size)
      .def("__len__", &sdgtag::FosIndex::size);

  py::class_<sdgtag::Engine, std::shared_ptr<sdgtag::Engine>>(m, "Engine")
      .def_static(
          "from_manifest",
          [](const std::filesystem::path& path) {
            auto engine = sdgtag::Engine::load(sdgtag::PipelineManifest::load(path).engine_config());
            return std::const_pointer_cast<sdgtag::Engine>(engine);
          },
          py::arg("path"))
      .def("classify_json", &classify_json, py::arg("text"))
      .def("stats_json", [](const sdgtag::Engine& e) { return e.stats().dump(); });
}
