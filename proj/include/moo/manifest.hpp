#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace moo {

inline constexpr const char* kVersion = "0.1.0";

/// Reproducibility record written alongside every output: the command, the
/// fully resolved configuration, the seed list, the code version, and the
/// output paths. Re-running the same command against the same build
/// reproduces the outputs byte for byte.
struct RunManifest {
    std::string command;
    std::map<std::string, std::string> config;  ///< resolved key -> value
    std::vector<std::uint64_t> seeds;
    std::vector<std::string> outputs;
};

std::string manifest_to_json(const RunManifest& manifest);
void write_manifest(const RunManifest& manifest, const std::string& path);

}  // namespace moo
