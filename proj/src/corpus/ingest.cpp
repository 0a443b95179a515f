#include "tempo/corpus/ingest.hpp"

#include <nlohmann/json.hpp>

#include "tempo/util/error.hpp"
#include "tempo/util/io.hpp"
#include "tempo/util/text.hpp"

namespace tempo::corpus {

using nlohmann::json;

IngestResult ingest_file(Store& store, const std::filesystem::path& path,
                         const std::string& source) {
  IngestResult result;
  std::size_t line_no = 0;
  for (const auto& line : read_lines(path)) {
    ++line_no;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      fail("malformed JSON at ", path.string(), ":", line_no, ": ", e.what());
    }
    auto reject = [&](const std::string& why) {
      result.rejections.push_back(
          strcat_msg(path.string(), ":", line_no, ": ", why));
    };
    if (!j.contains("id") || !j["id"].is_string()) {
      reject("missing id");
      continue;
    }
    if (!j.contains("timestamp") || !j["timestamp"].is_string()) {
      reject("missing timestamp");
      continue;
    }
    if (!j.contains("text") || !j["text"].is_string()) {
      reject("missing text");
      continue;
    }
    Document doc;
    doc.id = j["id"].get<std::string>();
    try {
      doc.timestamp = parse_date(j["timestamp"].get<std::string>());
    } catch (const std::exception& e) {
      reject(e.what());
      continue;
    }
    doc.text = normalize_ws(j["text"].get<std::string>());
    if (doc.text.empty()) {
      reject("empty text after normalization");
      continue;
    }
    doc.source = j.contains("source") ? j["source"].get<std::string>() : source;
    if (j.contains("meta")) {
      doc.meta = j["meta"].get<std::map<std::string, std::string>>();
    }
    store.add(std::move(doc));  // throws on duplicate id
    ++result.ingested;
  }
  return result;
}

}  // namespace tempo::corpus
