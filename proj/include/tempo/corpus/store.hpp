#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tempo/corpus/document.hpp"

namespace tempo::corpus {

// In-memory corpus keeping documents in canonical (timestamp, id) order.
// Serialized as line-delimited JSON, one document per line, in that order,
// so chronological streaming is a plain sequential read.
class Store {
 public:
  // Throws on duplicate id or empty normalized text.
  void add(Document doc);

  const Document& by_id(const std::string& id) const;
  bool contains(const std::string& id) const { return index_.count(id) > 0; }

  // Documents in canonical order.
  const std::vector<Document>& docs() const;
  std::size_t size() const { return docs_.size(); }

  std::vector<std::string> ids_in_month(int month_index) const;
  int min_month() const;
  int max_month() const;

  void save(const std::filesystem::path& path) const;
  static Store load(const std::filesystem::path& path);

  static std::string to_json_line(const Document& doc);
  static Document from_json_line(const std::string& line);

 private:
  void ensure_sorted() const;

  mutable std::vector<Document> docs_;
  mutable std::unordered_map<std::string, std::size_t> index_;
  mutable bool sorted_ = true;
};

// Whitespace token count; the unit every size-matching rule uses.
std::size_t token_count(const std::string& text);

}  // namespace tempo::corpus
