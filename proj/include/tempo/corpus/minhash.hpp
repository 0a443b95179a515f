#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tempo/corpus/document.hpp"

namespace tempo::corpus {

struct MinHashParams {
  int num_hashes = 128;
  int shingle_width = 5;       // in word tokens
  double jaccard_threshold = 0.8;
  std::uint64_t seed = 0;
};

struct MinHashSignature {
  std::vector<std::uint64_t> hashes;  // length == num_hashes
  int num_hashes = 0;
  int shingle_width = 0;
};

// Hashes of the document's distinct token shingles. A document shorter than
// shingle_width tokens is treated as a single shingle.
std::vector<std::uint64_t> shingle_set(const std::string& text,
                                       int shingle_width);

MinHashSignature signature_of(const std::string& text,
                              const MinHashParams& params);

// Fraction of equal signature slots.
double estimate_jaccard(const MinHashSignature& a, const MinHashSignature& b);

struct DedupResult {
  std::vector<Document> kept;
  std::vector<std::string> dropped_ids;
};

// Drops every document whose estimated Jaccard against any earlier document
// (canonical (timestamp, id) order) reaches the threshold.
DedupResult minhash_dedup(const std::vector<Document>& docs,
                          const MinHashParams& params);

}  // namespace tempo::corpus
