#pragma once

#include <string>
#include <unordered_set>
#include <vector>

#include "tempo/corpus/document.hpp"

namespace tempo::corpus {

// Built-in English function-word list (lowercased, >= 50 entries).
const std::unordered_set<std::string>& function_words();

// Fraction of whitespace tokens that are function words (case-insensitive).
double english_fraction(const std::string& text);

// Keeps documents whose function-word fraction is >= threshold. Empty
// documents are dropped. Order-preserving and idempotent.
std::vector<Document> filter_language(const std::vector<Document>& docs,
                                      double threshold);

}  // namespace tempo::corpus
