#pragma once

#include "tinsep/model.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace tinsep {

/// A parsed network document:
///   {"mode": "gdof"|"deterministic", "users": K, "subchannels": M,
///    "matrices": [[[row-major K x K]], ...]}
/// Rows are receivers, columns transmitters. A matrix is a list of K rows or
/// a flat row-major list of K*K entries, optionally wrapped as
/// {"mode": ..., "entries": ...} to override the mode for that sub-channel.
/// Entries are integers or strings holding "p/q", "p" or a decimal. An optional "fixture" tag names a bundled
/// paper fixture.
struct NetworkDocument
{
    ParallelNetwork network;
    std::vector<std::string> warnings;
    std::optional<std::string> fixture;
};

NetworkDocument load_network(const nlohmann::json& document);
NetworkDocument load_network_file(const std::filesystem::path& path);

/// Inverse of load_network. Deterministic entries are written as JSON
/// integers, gdof entries as canonical rational strings.
nlohmann::json save_network(const ParallelNetwork& network, const std::optional<std::string>& fixture = std::nullopt);

}  // namespace tinsep
