#include "tempo/corpus/lang_filter.hpp"

#include "tempo/util/error.hpp"
#include "tempo/util/text.hpp"

namespace tempo::corpus {

const std::unordered_set<std::string>& function_words() {
  static const std::unordered_set<std::string> words = {
      "the",   "a",     "an",    "and",   "or",    "but",  "if",    "then",
      "of",    "in",    "on",    "at",    "by",    "to",   "from",  "with",
      "for",   "as",    "is",    "are",   "was",   "were", "be",    "been",
      "being", "has",   "have",  "had",   "do",    "does", "did",   "will",
      "would", "can",   "could", "shall", "should", "may", "might", "must",
      "that",  "this",  "these", "those", "it",    "its",  "he",    "she",
      "they",  "we",    "you",   "i",     "his",   "her",  "their", "our",
      "not",   "no",    "nor",   "so",    "than",  "too",  "very",  "who",
      "what",  "which", "when",  "where", "how",   "why",  "all",   "any",
      "each",  "into",  "over",  "under", "about", "after", "before",
  };
  return words;
}

double english_fraction(const std::string& text) {
  const auto tokens = split_ws(text);
  if (tokens.empty()) return 0.0;
  std::size_t hits = 0;
  const auto& words = function_words();
  for (const auto& tok : tokens) {
    if (words.count(to_lower(tok))) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(tokens.size());
}

std::vector<Document> filter_language(const std::vector<Document>& docs,
                                      double threshold) {
  require(threshold >= 0.0 && threshold <= 1.0,
          "language filter threshold must be in [0,1], got ", threshold);
  std::vector<Document> kept;
  kept.reserve(docs.size());
  for (const auto& doc : docs) {
    const auto tokens = split_ws(doc.text);
    if (tokens.empty()) continue;
    if (english_fraction(doc.text) >= threshold) kept.push_back(doc);
  }
  return kept;
}

}  // namespace tempo::corpus
