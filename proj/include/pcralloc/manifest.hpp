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

#ifndef PCRALLOC_MANIFEST_HPP
#define PCRALLOC_MANIFEST_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "pcralloc/scene.hpp"

namespace pcralloc {

/// Raised on malformed manifests: JSON syntax errors (with byte position),
/// schema violations (unknown/missing keys, wrong types) and scene
/// invariant violations (delegated to validate_scene).
class ManifestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adaptation manifest schema:
///   { "ladder_levels": 3,
///     "models": [ { "id": "A", "levels_bps": [10000000, 6000000, 3000000],
///                   "center": [0.0, 0.0, 5.0], "radius": 1.0 } ] }
/// levels_bps is ordered highest bitrate first. Unknown keys are rejected.
Scene load_manifest(std::string_view text);

Scene load_manifest_file(const std::string& path);

/// Inverse of load_manifest; output is byte-deterministic and round-trips.
std::string serialize_manifest(const Scene& scene);

void save_manifest_file(const Scene& scene, const std::string& path);

}  // namespace pcralloc

#endif  // PCRALLOC_MANIFEST_HPP
