#include "moo/manifest.hpp"

#include <json.hpp>

#include "moo/csv.hpp"

namespace moo {

std::string manifest_to_json(const RunManifest& manifest) {
    nlohmann::json doc;
    doc["command"] = manifest.command;
    doc["version"] = kVersion;
    doc["config"] = manifest.config;
    doc["seeds"] = manifest.seeds;
    doc["outputs"] = manifest.outputs;
    return doc.dump(2) + "\n";
}

void write_manifest(const RunManifest& manifest, const std::string& path) {
    csv::write_file(path, manifest_to_json(manifest));
}

}  // namespace moo
