#include "tempo/corpus/store.hpp"

#include <algorithm>
#include <cstdio>

#include <nlohmann/json.hpp>

#include "tempo/util/error.hpp"
#include "tempo/util/io.hpp"
#include "tempo/util/text.hpp"

namespace tempo::corpus {

using nlohmann::json;

Date parse_date(const std::string& iso) {
  int y = 0, m = 0, d = 0;
  char tail = 0;
  if (std::sscanf(iso.c_str(), "%d-%d-%d%c", &y, &m, &d, &tail) != 3)
    fail("malformed date (expected YYYY-MM-DD): '", iso, "'");
  require(m >= 1 && m <= 12, "month out of range in date '", iso, "'");
  require(d >= 1 && d <= 31, "day out of range in date '", iso, "'");
  return Date{y, m, d};
}

std::string format_date(const Date& d) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", d.year, d.month, d.day);
  return buf;
}

void Store::add(Document doc) {
  doc.text = normalize_ws(doc.text);
  require(!doc.text.empty(), "document '", doc.id, "' is empty after normalization");
  require(!doc.id.empty(), "document id must be non-empty");
  require(index_.find(doc.id) == index_.end(), "duplicate id '", doc.id, "'");
  doc.month_index = month_index_of(doc.timestamp);
  if (sorted_ && !docs_.empty() && !doc_before(docs_.back(), doc)) {
    sorted_ = false;
  }
  index_.emplace(doc.id, docs_.size());
  docs_.push_back(std::move(doc));
}

void Store::ensure_sorted() const {
  if (sorted_) return;
  std::stable_sort(docs_.begin(), docs_.end(), doc_before);
  index_.clear();
  for (std::size_t i = 0; i < docs_.size(); ++i) index_.emplace(docs_[i].id, i);
  sorted_ = true;
}

const std::vector<Document>& Store::docs() const {
  ensure_sorted();
  return docs_;
}

const Document& Store::by_id(const std::string& id) const {
  ensure_sorted();
  auto it = index_.find(id);
  if (it == index_.end()) fail("unknown document id '", id, "'");
  return docs_[it->second];
}

std::vector<std::string> Store::ids_in_month(int month_index) const {
  std::vector<std::string> out;
  for (const auto& d : docs()) {
    if (d.month_index == month_index) out.push_back(d.id);
  }
  return out;
}

int Store::min_month() const {
  require(!docs_.empty(), "empty corpus");
  int m = docs_.front().month_index;
  for (const auto& d : docs_) m = std::min(m, d.month_index);
  return m;
}

int Store::max_month() const {
  require(!docs_.empty(), "empty corpus");
  int m = docs_.front().month_index;
  for (const auto& d : docs_) m = std::max(m, d.month_index);
  return m;
}

std::string Store::to_json_line(const Document& doc) {
  json j;
  j["id"] = doc.id;
  j["timestamp"] = format_date(doc.timestamp);
  j["text"] = doc.text;
  j["source"] = doc.source;
  j["meta"] = doc.meta;
  return j.dump();
}

Document Store::from_json_line(const std::string& line) {
  json j = json::parse(line);
  Document doc;
  doc.id = j.at("id").get<std::string>();
  doc.timestamp = parse_date(j.at("timestamp").get<std::string>());
  doc.month_index = month_index_of(doc.timestamp);
  doc.text = j.at("text").get<std::string>();
  if (j.contains("source")) doc.source = j["source"].get<std::string>();
  if (j.contains("meta")) {
    doc.meta = j["meta"].get<std::map<std::string, std::string>>();
  }
  return doc;
}

void Store::save(const std::filesystem::path& path) const {
  ensure_sorted();
  std::string out;
  for (const auto& d : docs_) {
    out += to_json_line(d);
    out += '\n';
  }
  write_file(path, out);
}

Store Store::load(const std::filesystem::path& path) {
  Store store;
  std::size_t line_no = 0;
  for (const auto& line : read_lines(path)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      store.add(from_json_line(line));
    } catch (const json::parse_error&) {
      fail("malformed JSON at ", path.string(), ":", line_no);
    }
  }
  return store;
}

std::size_t token_count(const std::string& text) {
  std::size_t n = 0;
  bool in_tok = false;
  for (char c : text) {
    const bool ws = (c == ' ' || c == '\t' || c == '\n' || c == '\r');
    if (!ws && !in_tok) ++n;
    in_tok = !ws;
  }
  return n;
}

}  // namespace tempo::corpus
