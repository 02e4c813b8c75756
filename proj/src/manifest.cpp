// Copyright 2026 The pcralloc Authors
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

#include "pcralloc/manifest.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace pcralloc {

namespace {

using json = nlohmann::ordered_json;

void reject_unknown_keys(const json& object, std::initializer_list<const char*> known,
                         const std::string& where) {
  for (const auto& item : object.items()) {
    bool ok = false;
    for (const char* key : known) {
      if (item.key() == key) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      throw ManifestError(where + ": unknown key '" + item.key() + "'");
    }
  }
}

const json& require_key(const json& object, const char* key, const std::string& where) {
  auto it = object.find(key);
  if (it == object.end()) {
    throw ManifestError(where + ": missing key '" + std::string(key) + "'");
  }
  return *it;
}

std::int64_t as_bitrate(const json& value, const std::string& where) {
  if (!value.is_number_integer()) {
    throw ManifestError(where + ": bitrates must be integers (bits per second)");
  }
  return value.get<std::int64_t>();
}

double as_finite_number(const json& value, const std::string& where) {
  if (!value.is_number()) {
    throw ManifestError(where + ": expected a number");
  }
  double d = value.get<double>();
  if (!std::isfinite(d)) {
    throw ManifestError(where + ": expected a finite number");
  }
  return d;
}

PointCloudModel parse_model(const json& node, std::size_t index) {
  if (!node.is_object()) {
    throw ManifestError("models[" + std::to_string(index) + "]: expected an object");
  }
  std::string where = "model #" + std::to_string(index);
  if (auto it = node.find("id"); it != node.end() && it->is_string()) {
    where = "model '" + it->get<std::string>() + "'";
  }
  reject_unknown_keys(node, {"id", "levels_bps", "center", "radius"}, where);

  PointCloudModel model;
  const json& id = require_key(node, "id", where);
  if (!id.is_string() || id.get<std::string>().empty()) {
    throw ManifestError(where + ": 'id' must be a non-empty string");
  }
  model.id = id.get<std::string>();

  const json& levels = require_key(node, "levels_bps", where);
  if (!levels.is_array() || levels.empty()) {
    throw ManifestError(where + ": 'levels_bps' must be a non-empty array");
  }
  for (const auto& level : levels) {
    model.ladder.levels_bps.push_back(as_bitrate(level, where));
  }

  const json& center = require_key(node, "center", where);
  if (!center.is_array() || center.size() != 3) {
    throw ManifestError(where + ": 'center' must be an array of 3 numbers");
  }
  model.center = {as_finite_number(center[0], where),
                  as_finite_number(center[1], where),
                  as_finite_number(center[2], where)};

  model.radius = as_finite_number(require_key(node, "radius", where), where);
  return model;
}

}  // namespace

Scene load_manifest(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is the 1-based offset of the offending character.
    throw ManifestError("syntax error at byte " + std::to_string(e.byte) + ": " +
                        e.what());
  }
  if (!root.is_object()) {
    throw ManifestError("manifest root must be an object");
  }
  reject_unknown_keys(root, {"ladder_levels", "models"}, "manifest");

  Scene scene;
  const json& ladder_levels = require_key(root, "ladder_levels", "manifest");
  if (!ladder_levels.is_number_integer()) {
    throw ManifestError("manifest: 'ladder_levels' must be an integer");
  }
  scene.ladder_level_count = ladder_levels.get<int>();

  const json& models = require_key(root, "models", "manifest");
  if (!models.is_array()) {
    throw ManifestError("manifest: 'models' must be an array");
  }
  scene.models.reserve(models.size());
  for (std::size_t i = 0; i < models.size(); ++i) {
    scene.models.push_back(parse_model(models[i], i));
  }

  auto errors = validate_scene(scene);
  if (!errors.empty()) {
    std::string message = "invalid scene:";
    for (const auto& error : errors) message += "\n  " + error;
    throw ManifestError(message);
  }
  return scene;
}

Scene load_manifest_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ManifestError("cannot open manifest '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_manifest(buffer.str());
}

std::string serialize_manifest(const Scene& scene) {
  json root;
  root["ladder_levels"] = scene.ladder_level_count;
  json models = json::array();
  for (const auto& model : scene.models) {
    json node;
    node["id"] = model.id;
    node["levels_bps"] = model.ladder.levels_bps;
    node["center"] = {model.center.x, model.center.y, model.center.z};
    node["radius"] = model.radius;
    models.push_back(std::move(node));
  }
  root["models"] = std::move(models);
  return root.dump(2) + "\n";
}

void save_manifest_file(const Scene& scene, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ManifestError("cannot write manifest '" + path + "'");
  out << serialize_manifest(scene);
}

}  // namespace pcralloc
