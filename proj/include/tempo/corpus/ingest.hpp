#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "tempo/corpus/store.hpp"

namespace tempo::corpus {

struct IngestResult {
  std::size_t ingested = 0;
  // One human-readable line per rejected record (kept out of the store).
  std::vector<std::string> rejections;
};

// Reads line-delimited JSON records {id, timestamp, text[, source, meta]}.
// Malformed JSON and duplicate ids are hard errors; records missing required
// fields are rejected with a diagnostic and skipped.
IngestResult ingest_file(Store& store, const std::filesystem::path& path,
                         const std::string& source);

}  // namespace tempo::corpus
