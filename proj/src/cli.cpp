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

#include "sdgtag/cli.hpp"

#include <csignal>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "sdgtag/digest.hpp"
#include "sdgtag/engine.hpp"
#include "sdgtag/error.hpp"
#include "sdgtag/manifest.hpp"
#include "sdgtag/service.hpp"

namespace sdgtag {

namespace fs = std::filesystem;

namespace {

struct Options {
  std::string config = "manifest.json";
  std::string output_dir;
  std::optional<double> threshold;
  std::optional<std::size_t> top_k;
  std::optional<double> min_sim;
  std::string text;
  std::string file;
  std::vector<std::string> dois;
  std::string host;
  std::optional<int> port;
};

// Thrown for a well-formed command line that still cannot run.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

PipelineManifest load_manifest(const Options& o) {
  PipelineManifest m = PipelineManifest::load(o.config);
  if (!o.output_dir.empty()) m.output_dir = fs::absolute(o.output_dir).lexically_normal();
  if (o.threshold) m.link_threshold = *o.threshold;
  if (o.top_k) m.tag.top_k = *o.top_k;
  if (o.min_sim) m.tag.min_sim = *o.min_sim;
  return m;
}

void ensure_output_dir(const PipelineManifest& m) {
  std::error_code ec;
  fs::create_directories(m.output_dir, ec);
  if (ec) {
    throw ConfigError("cannot create output directory '" + m.output_dir.string() +
                      "': " + ec.message());
  }
}

TokenizerConfig tokenizer_for(const PipelineManifest& m) {
  TokenizerConfig t;
  if (m.stopwords) t.stopwords = StopwordList::load(*m.stopwords);
  return t;
}

int build_ontology(const PipelineManifest& m, std::ostream& out, std::ostream& err) {
  std::vector<SourceDataset> sources;
  for (const auto& src : m.sources) {
    std::error_code ec;
    if (!fs::is_regular_file(src.path, ec)) {
      throw ConfigError("source '" + src.meta.source_id + "' not found: '" +
                        src.path.string() + "'");
    }
    ParsedSource parsed = parse_source_dataset(src.path, src.format, src.meta);
    for (const auto& w : parsed.warnings) {
      err << "warning: " << src.path.string() << ": " << w << "\n";
    }
    sources.push_back(std::move(parsed.dataset));
  }
  MergeResult merged = merge_sources(sources, resolve_created_at(m));
  for (const auto& w : merged.warnings) err << "warning: " << w << "\n";
  ensure_output_dir(m);
  merged.ontology.save(m.ontology_path());
  out << "wrote " << m.ontology_path().string() << " (" << merged.ontology.size()
      << " items from " << sources.size() << " sources)\n";
  return kExitOk;
}

int link_fos(const PipelineManifest& m, std::ostream& out) {
  if (!fs::is_regular_file(m.ontology_path())) {
    throw ConfigError("ontology not found: '" + m.ontology_path().string() +
                      "' (run build-ontology first)");
  }
  Ontology ontology = Ontology::load(m.ontology_path());
  FosCatalog catalog = FosCatalog::load(m.fos_catalog);
  LinkOptions options;
  options.threshold = m.link_threshold;
  options.workers = std::max(1u, std::thread::hardware_concurrency());
  LinkTable links = link_ontology_to_fos(ontology, catalog, options);
  SdgFosMap map = build_sdg_fos_map(links);
  ensure_output_dir(m);
  links.save_csv(m.links_path());
  map.save(m.map_path());
  out << "wrote " << m.links_path().string() << " (" << links.size() << " links) and "
      << m.map_path().string() << " (" << map.distinct_fos() << " FOS)\n";
  return kExitOk;
}

int build_index(const PipelineManifest& m, std::ostream& out) {
  FosIndex index = FosIndex::build(load_fos_corpus(m.fos_corpus), tokenizer_for(m));
  index.check_against(FosCatalog::load(m.fos_catalog));
  ensure_output_dir(m);
  index.save(m.index_path());
  out << "wrote " << m.index_path().string() << " (" << index.size() << " FOS, "
      << index.vocabulary_size() << " terms)\n";
  return kExitOk;
}

int tag(const PipelineManifest& m, const Options& o, std::istream& in, std::ostream& out) {
  if (!o.text.empty() && !o.file.empty()) throw UsageError("--text and --file are exclusive");
  std::string text;
  if (!o.text.empty()) {
    text = o.text;
  } else if (!o.file.empty()) {
    text = read_file(o.file);
  } else {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  if (text.empty()) throw UsageError("no input text (use --text, --file or standard input)");
  auto engine = Engine::load(m.engine_config());
  out << engine->classify(text).to_json().dump(2) << "\n";
  return kExitOk;
}

int tag_doi(const PipelineManifest& m, const Options& o, std::ostream& out) {
  std::vector<std::string> dois = o.dois;
  if (!o.file.empty()) {
    std::istringstream lines(read_file(o.file));
    for (std::string line; std::getline(lines, line);) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) dois.push_back(line);
    }
  }
  if (dois.empty()) throw UsageError("no DOIs given (use --doi or --file)");
  ServiceConfig sc = m.service_config();
  auto client = make_metadata_client(sc);
  auto engine = Engine::load(sc.engine);
  out << engine->tag_dois(dois, *client, sc.doi.max_in_flight).dump(2) << "\n";
  return kExitOk;
}

int stats(const PipelineManifest& m, std::ostream& out) {
  auto engine = Engine::load(m.engine_config());
  out << engine->stats().dump(2) << "\n";
  return kExitOk;
}

int serve(const PipelineManifest& m, const Options& o, std::ostream& out) {
  ServiceConfig sc = m.service_config();
  if (!o.host.empty()) sc.host = o.host;
  if (o.port) sc.port = *o.port;

  // Block termination signals here so the waiting thread below is the only
  // one that receives them.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  Service service(sc, make_metadata_client(sc));
  HttpServer server(service);
  int port = server.bind(sc.host, sc.port);
  std::thread listener([&] { server.run(); });
  // Artifacts load after bind so early requests see 503 rather than a
  // refused connection.
  try {
    service.load();
  } catch (...) {
    server.stop();
    listener.join();
    throw;
  }
  out << "listening on http://" << sc.host << ":" << port << "\n" << std::flush;

  int sig = 0;
  sigwait(&signals, &sig);
  server.stop();
  listener.join();
  out << "stopped\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Classify text against the 17 Sustainable Development Goals", "sdgtag"};
  app.set_version_flag("--version", std::string(SDGTAG_VERSION));
  app.require_subcommand(1);
  Options o;
  app.add_option("--config", o.config, "Pipeline manifest (JSON)")->capture_default_str();
  app.add_option("--output-dir", o.output_dir, "Override the manifest output directory");

  auto* build_ont = app.add_subcommand("build-ontology", "Merge source datasets into ontology.json");
  auto* link = app.add_subcommand("link-fos", "Link ontology terms to FOS names");
  link->add_option("--threshold", o.threshold, "Similarity ratio a link must exceed")
      ->check(CLI::Range(0.0, 1.0));
  auto* index = app.add_subcommand("build-index", "Build the FOS TF-IDF index snapshot");
  auto* tag_cmd = app.add_subcommand("tag", "Classify text from --text, --file or stdin");
  tag_cmd->add_option("--text", o.text, "Text to classify");
  tag_cmd->add_option("--file", o.file, "File with the text to classify");
  auto* doi_cmd = app.add_subcommand("tag-doi", "Resolve DOIs and classify their abstracts");
  doi_cmd->add_option("--doi", o.dois, "DOI to tag (repeatable)");
  doi_cmd->add_option("--file", o.file, "File with one DOI per line");
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP service");
  serve_cmd->add_option("--host", o.host, "Bind address (overrides the manifest)");
  serve_cmd->add_option("--port", o.port, "Port, 0 for any free port")->check(CLI::Range(0, 65535));
  auto* stats_cmd = app.add_subcommand("stats", "Print ontology, link and index statistics");
  for (auto* sub : {tag_cmd, doi_cmd, serve_cmd, stats_cmd}) {
    sub->add_option("--top-k", o.top_k, "Maximum FOS tags per text")->check(CLI::PositiveNumber);
    sub->add_option("--min-sim", o.min_sim, "Minimum cosine similarity for a FOS tag")
        ->check(CLI::Range(0.0, 1.0));
  }

  auto usage = [&](const std::string& message) {
    err << "error: " << message << "\n\n";
    auto parsed = app.get_subcommands();
    err << (parsed.empty() ? app.help() : parsed.front()->help());
    return kExitUsage;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    auto parsed = app.get_subcommands();
    out << (parsed.empty() ? app.help() : parsed.front()->help());
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << SDGTAG_VERSION << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return usage(e.what());
  }

  try {
    PipelineManifest m = load_manifest(o);
    if (*build_ont) return build_ontology(m, out, err);
    if (*link) return link_fos(m, out);
    if (*index) return build_index(m, out);
    if (*tag_cmd) return tag(m, o, in, out);
    if (*doi_cmd) return tag_doi(m, o, out);
    if (*serve_cmd) return serve(m, o, out);
    if (*stats_cmd) return stats(m, out);
    return usage("no subcommand");
  } catch (const UsageError& e) {
    return usage(e.what());
  } catch (const std::exception& e) {
    // sdgtag::Error and anything raised while reading data files.
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
}

}  // namespace sdgtag
