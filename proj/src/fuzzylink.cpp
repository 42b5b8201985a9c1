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

#include "sdgtag/fuzzylink.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <thread>

#include "sdgtag/csv.hpp"
#include "sdgtag/digest.hpp"
#include "sdgtag/error.hpp"

namespace sdgtag {

using nlohmann::json;
using nlohmann::ordered_json;

FosCatalog::FosCatalog(std::vector<FieldOfStudy> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const auto& a, const auto& b) { return a.fos_id < b.fos_id; });
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].fos_id.empty()) throw ParseError("FOS entry with empty fos_id");
    if (i > 0 && entries_[i - 1].fos_id == entries_[i].fos_id) {
      throw DuplicateFosError("duplicate fos_id '" + entries_[i].fos_id + "'");
    }
  }
  for (const auto& entry : entries_) {
    if (entry.parent_id && !find(*entry.parent_id)) {
      throw ParseError("FOS '" + entry.fos_id + "' has unknown parent '" +
                       *entry.parent_id + "'");
    }
    by_name_[entry.name].push_back(entry.fos_id);
  }
}

FosCatalog FosCatalog::parse(std::string_view csv_text) {
  auto rows = csv::parse(csv_text);
  if (rows.empty()) throw ParseError("FOS catalog: missing header");
  auto id_col = csv::column(rows.front(), "fos_id");
  auto name_col = csv::column(rows.front(), "name");
  auto parent_col = csv::column(rows.front(), "parent_id");
  if (!id_col || !name_col) {
    throw ParseError("FOS catalog: malformed header (expected fos_id,name,parent_id)");
  }
  std::vector<FieldOfStudy> entries;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& f = rows[r].fields;
    std::string where = "FOS catalog line " + std::to_string(rows[r].line);
    if (f.size() <= std::max(*id_col, *name_col)) {
      throw ParseError(where + ": too few fields");
    }
    auto name = try_normalize_term(f[*name_col]);
    if (!name) throw ParseError(where + ": empty name");
    std::optional<std::string> parent;
    if (parent_col && *parent_col < f.size() && !f[*parent_col].empty()) {
      parent = f[*parent_col];
    }
    entries.push_back(FieldOfStudy{f[*id_col], std::move(*name), std::move(parent)});
  }
  return FosCatalog(std::move(entries));
}

FosCatalog FosCatalog::load(const std::filesystem::path& path) {
  return parse(read_file(path));
}

const FieldOfStudy* FosCatalog::find(std::string_view fos_id) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), fos_id,
      [](const FieldOfStudy& e, std::string_view id) { return e.fos_id < id; });
  if (it == entries_.end() || it->fos_id != fos_id) return nullptr;
  return &*it;
}

const std::vector<std::string>& FosCatalog::ids_named(const NormalizedTerm& name) const {
  static const std::vector<std::string> kNone;
  auto it = by_name_.find(name);
  return it == by_name_.end() ? kNone : it->second;
}

std::size_t levenshtein_distance(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  // b is the shorter string; one row of |b| + 1 cells.
  std::vector<std::size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t up = row[j];
      std::size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
      row[j] = std::min({up + 1, row[j - 1] + 1, diag + cost});
      diag = up;
    }
  }
  return row[b.size()];
}

std::size_t levenshtein_distance(std::string_view a, std::string_view b) {
  return levenshtein_distance(to_code_points(a), to_code_points(b));
}

double similarity_ratio(std::u32string_view a, std::u32string_view b) {
  std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0) throw UndefinedRatioError("similarity ratio of two empty strings");
  std::size_t d = levenshtein_distance(a, b);
  return static_cast<double>(longest - d) / static_cast<double>(longest);
}

double similarity_ratio(std::string_view a, std::string_view b) {
  return similarity_ratio(to_code_points(a), to_code_points(b));
}

LinkTable::LinkTable(std::vector<Link> links, double threshold)
    : links_(std::move(links)), threshold_(threshold) {
  std::sort(links_.begin(), links_.end(), [](const Link& x, const Link& y) {
    return std::tie(x.term, x.sdg, x.fos_id) < std::tie(y.term, y.sdg, y.fos_id);
  });
}

std::string LinkTable::to_csv() const {
  std::string out = "term,sdg,fos_id,ratio\n";
  char ratio[32];
  for (const auto& link : links_) {
    std::snprintf(ratio, sizeof ratio, "%.4f", link.ratio);
    out += csv::escape(link.term.str());
    out += ',';
    out += to_string(link.sdg);
    out += ',';
    out += csv::escape(link.fos_id);
    out += ',';
    out += ratio;
    out += '\n';
  }
  return out;
}

void LinkTable::save_csv(const std::filesystem::path& path) const {
  write_file(path, to_csv());
}

namespace {

struct CatalogName {
  const NormalizedTerm* name;
  const std::vector<std::string>* ids;
  std::u32string code_points;
};

struct TermGroup {
  const NormalizedTerm* term;
  std::vector<SdgId> sdgs;
};

bool length_band_admits(std::size_t la, std::size_t lb, double threshold) {
  std::size_t diff = la > lb ? la - lb : lb - la;
  double longest = static_cast<double>(std::max(la, lb));
  // ratio > t implies |la - lb| <= d < (1 - t) * max; slack absorbs rounding.
  return static_cast<double>(diff) <= (1.0 - threshold) * longest + 1e-9 * (longest + 1.0);
}

void link_range(const std::vector<TermGroup>& groups, std::size_t begin, std::size_t end,
                const std::vector<CatalogName>& names,
                const std::map<std::size_t, std::vector<std::size_t>>& by_length,
                const LinkOptions& options, std::vector<Link>& out) {
  std::vector<std::size_t> candidates;
  for (std::size_t g = begin; g < end; ++g) {
    const TermGroup& group = groups[g];
    std::u32string term = to_code_points(group.term->str());

    candidates.clear();
    for (const auto& [length, indices] : by_length) {
      if (!options.length_blocking ||
          length_band_admits(term.size(), length, options.threshold)) {
        candidates.insert(candidates.end(), indices.begin(), indices.end());
      }
    }
    for (std::size_t idx : candidates) {
      const CatalogName& name = names[idx];
      double ratio = similarity_ratio(term, name.code_points);
      if (!(ratio > options.threshold)) continue;
      for (SdgId sdg : group.sdgs) {
        for (const auto& fos_id : *name.ids) {
          out.push_back(Link{*group.term, sdg, fos_id, ratio});
        }
      }
    }
  }
}

}  // namespace

LinkTable link_ontology_to_fos(const Ontology& ontology, const FosCatalog& catalog,
                               const LinkOptions& options) {
  if (!(options.threshold > 0.0 && options.threshold <= 1.0)) {
    throw ConfigError("link threshold must be in (0, 1], got " +
                      std::to_string(options.threshold));
  }

  // Distinct catalog names, bucketed by code point length.
  std::vector<CatalogName> names;
  names.reserve(catalog.name_index().size());
  std::map<std::size_t, std::vector<std::size_t>> by_length;
  for (const auto& [name, ids] : catalog.name_index()) {
    names.push_back(CatalogName{&name, &ids, to_code_points(name.str())});
    by_length[names.back().code_points.size()].push_back(names.size() - 1);
  }

  // Ontology items are sorted by term, so equal terms are adjacent.
  std::vector<TermGroup> groups;
  for (const auto& item : ontology.items()) {
    if (groups.empty() || *groups.back().term != item.term) {
      groups.push_back(TermGroup{&item.term, {}});
    }
    groups.back().sdgs.push_back(item.sdg);
  }

  unsigned workers = std::max(1u, options.workers);
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(groups.size(), 1)));
  std::vector<std::vector<Link>> partial(workers);
  if (workers == 1) {
    link_range(groups, 0, groups.size(), names, by_length, options, partial[0]);
  } else {
    std::vector<std::thread> threads;
    std::size_t chunk = (groups.size() + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      std::size_t begin = std::min(groups.size(), w * chunk);
      std::size_t end = std::min(groups.size(), begin + chunk);
      threads.emplace_back([&, w, begin, end] {
        link_range(groups, begin, end, names, by_length, options, partial[w]);
      });
    }
    for (auto& t : threads) t.join();
  }

  std::vector<Link> links;
  for (auto& part : partial) {
    links.insert(links.end(), std::make_move_iterator(part.begin()),
                 std::make_move_iterator(part.end()));
  }
  return LinkTable(std::move(links), options.threshold);
}

std::size_t SdgFosMap::distinct_fos() const {
  std::set<std::string> all;
  for (const auto& s : sets_) all.insert(s.begin(), s.end());
  return all.size();
}

ordered_json SdgFosMap::to_json() const {
  ordered_json doc = ordered_json::object();
  for (int s = 1; s <= kSdgCount; ++s) {
    doc[std::to_string(s)] = sets_[static_cast<std::size_t>(s - 1)];
  }
  return doc;
}

SdgFosMap SdgFosMap::from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("SDG-FOS map must be a JSON object");
  SdgFosMap map;
  try {
    for (const auto& [key, value] : doc.items()) {
      std::size_t used = 0;
      int number = 0;
      try {
        number = std::stoi(key, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != key.size() || !SdgId::valid(number)) {
        throw ParseError("SDG-FOS map: invalid SDG key '" + key + "'");
      }
      map.sets_[static_cast<std::size_t>(number - 1)] = value.get<FosSet>();
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("SDG-FOS map: ") + e.what());
  }
  return map;
}

void SdgFosMap::save(const std::filesystem::path& path) const {
  write_file(path, to_json().dump(2) + "\n");
}

SdgFosMap SdgFosMap::load(const std::filesystem::path& path) {
  try {
    return from_json(json::parse(read_file(path)));
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path.string() + "': invalid JSON: " + e.what());
  }
}

SdgFosMap build_sdg_fos_map(const LinkTable& links) {
  SdgFosMap map;
  for (const auto& link : links.links()) map[link.sdg].insert(link.fos_id);
  return map;
}

}  // namespace sdgtag
