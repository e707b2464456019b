#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dts/core.hpp"

namespace dts::io {

// Canonical ".dts" text: "n k scope" on line 1, then one block per line,
// k+1 space-separated integers. Emit and parse are bit-exact inverses on
// canonical text.
std::string emit_dts(const TriangleSet& t);
TriangleSet parse_dts(const std::string& text);

struct DtsDocument {
    TriangleSet set;
    std::string algorithm;
    std::uint64_t seed = 0;
};

// JSON form: {"algorithm", "blocks", "k", "n", "scope", "seed"}.
std::string emit_dts_json(const DtsDocument& doc);
DtsDocument parse_dts_json(const std::string& text);

// Extended packing text: "v n k" on line 1, then one block of k residues
// per line.
std::string emit_packing(const Packing& p);
Packing parse_packing(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

// Stable content hash for manifests.
std::uint64_t fnv1a64(const std::string& bytes);
std::string fnv1a64_hex(const std::string& bytes);

struct RunManifest {
    std::string command;
    std::vector<std::string> parameters;
    std::uint64_t seed = 0;
    std::map<std::string, std::string> artifact_hashes;  // path -> fnv1a64 hex
    double wall_time_ms = 0;
};

std::string emit_manifest(const RunManifest& m);
RunManifest parse_manifest(const std::string& text);

}  // namespace dts::io
