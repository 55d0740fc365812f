#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "osborn/error.hpp"
#include "osborn/search.hpp"
#include "osborn/table.hpp"

namespace osborn {

/// A catalog on disk: one table file per loop plus manifest.json holding
/// order, filter, count, digest and the file list in catalog order.
inline void save_catalog(const std::filesystem::path& dir, const Catalog& cat) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  nlohmann::ordered_json files = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < cat.loops.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "loop_%06zu.tbl", i + 1);
    std::ofstream out(dir / name);
    if (!out) throw Error("cannot write " + (dir / name).string());
    out << serialize(cat.loops[i]);
    files.push_back(name);
  }
  nlohmann::ordered_json m;
  m["order"] = cat.order;
  m["filter"] = cat.filter;
  m["count"] = cat.loops.size();
  m["digest"] = hex_digest(cat.digest);
  m["files"] = files;
  std::ofstream out(dir / "manifest.json");
  if (!out) throw Error("cannot write " + (dir / "manifest.json").string());
  out << m.dump(2) << '\n';
}

/// Reads a saved catalog and checks count, order and digest against the manifest.
inline Catalog load_catalog(const std::filesystem::path& dir) {
  const auto manifest_path = dir / "manifest.json";
  std::ifstream in(manifest_path);
  if (!in) throw ParseError(manifest_path.string(), 0, "cannot open manifest");
  nlohmann::json m;
  try {
    m = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(manifest_path.string(), 0, e.what());
  }
  Catalog cat;
  try {
    cat.order = m.at("order").get<std::size_t>();
    cat.filter = m.at("filter").get<std::string>();
    for (const auto& f : m.at("files")) {
      const std::string file = (dir / f.get<std::string>()).string();
      LoopTable l = as_loop(read_table_file(file));
      if (l.order() != cat.order) throw ParseError(file, 0, "order differs from manifest");
      cat.loops.push_back(std::move(l));
    }
    if (cat.loops.size() != m.at("count").get<std::size_t>()) throw ParseError(manifest_path.string(), 0, "count mismatch");
    cat.digest = catalog_digest(cat.loops);
    if (hex_digest(cat.digest) != m.at("digest").get<std::string>()) {
      throw ParseError(manifest_path.string(), 0, "digest mismatch");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(manifest_path.string(), 0, e.what());
  }
  return cat;
}

}  // namespace osborn
