#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tempo::bpe {

// Reserved ids. The byte page (ids kByteBase..kByteBase+255) guarantees any
// character can be encoded, so <unk> is never produced by encode itself.
inline constexpr int kPadId = 0;
inline constexpr int kBosId = 1;
inline constexpr int kUnkId = 2;
inline constexpr int kByteBase = 3;
inline constexpr const char* kBoundaryMarker = "\xe2\x96\x81";  // U+2581

struct Encoding {
  std::vector<int> token_ids;
  // Half-open subword ranges, one per source word; they partition token_ids.
  std::vector<std::pair<int, int>> word_spans;
};

class Vocab {
 public:
  int size() const { return static_cast<int>(symbols_.size()); }
  const std::vector<std::string>& symbols() const { return symbols_; }
  const std::vector<std::pair<std::string, std::string>>& merges() const {
    return merges_;
  }

  Encoding encode(const std::string& text) const;
  std::vector<int> encode_word(const std::string& word) const;
  std::string decode(const std::vector<int>& ids) const;

  void save(const std::filesystem::path& path) const;
  static Vocab load(const std::filesystem::path& path);

  friend Vocab train(const std::vector<std::string>& sample_texts,
                     int vocab_size, std::size_t sample_cap_bytes);

 private:
  int id_of(const std::string& symbol) const;

  // Shared so copies of a vocab reuse one cache; guarded for parallel encode.
  struct WordCache {
    std::mutex mu;
    std::unordered_map<std::string, std::vector<int>> map;
  };

  std::vector<std::string> symbols_;                 // id -> symbol
  std::unordered_map<std::string, int> ids_;         // symbol -> id
  std::vector<std::pair<std::string, std::string>> merges_;
  std::unordered_map<std::string, int> merge_rank_;  // keyed by pair_key
  std::shared_ptr<WordCache> cache_ = std::make_shared<WordCache>();
};

// Learns byte-pair merges over whitespace words of the sample until the
// symbol table reaches vocab_size (or no pair occurs twice). Input beyond
// sample_cap_bytes of text is ignored; cap 0 means unlimited. Ties between
// equally frequent pairs go to the lexicographically smaller pair.
Vocab train(const std::vector<std::string>& sample_texts, int vocab_size,
            std::size_t sample_cap_bytes = 0);

}  // namespace tempo::bpe
