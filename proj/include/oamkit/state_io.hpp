#pragma once

#include <filesystem>

#include "oamkit/grid.hpp"

namespace oamkit {

struct StateIoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Binary container (magic "OAMWF01\n", little-endian header and payload) or a
// plain-text JSON variant when the path ends in ".json". Byte layout is
// documented in docs/file-formats.md.
void save_state(const std::filesystem::path& path, const GridState& state);

// Dispatches on content: JSON documents start with '{', the binary container
// with its magic. Throws StateIoError on malformed input.
GridState load_state(const std::filesystem::path& path);

}  // namespace oamkit
