#include "tempo/corpus/minhash.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "tempo/util/error.hpp"
#include "tempo/util/hash.hpp"
#include "tempo/util/rng.hpp"
#include "tempo/util/text.hpp"

namespace tempo::corpus {

std::vector<std::uint64_t> shingle_set(const std::string& text,
                                       int shingle_width) {
  require(shingle_width >= 1, "shingle width must be >= 1");
  const auto tokens = split_ws(text);
  std::unordered_set<std::uint64_t> set;
  if (tokens.empty()) return {};
  if (static_cast<int>(tokens.size()) < shingle_width) {
    std::uint64_t h = kFnvOffset;
    for (const auto& t : tokens) {
      h = fnv1a64(t, h);
      h = fnv1a64("\x1f", h);
    }
    return {h};
  }
  for (std::size_t i = 0; i + shingle_width <= tokens.size(); ++i) {
    std::uint64_t h = kFnvOffset;
    for (int k = 0; k < shingle_width; ++k) {
      h = fnv1a64(tokens[i + k], h);
      h = fnv1a64("\x1f", h);
    }
    set.insert(h);
  }
  return {set.begin(), set.end()};
}

MinHashSignature signature_of(const std::string& text,
                              const MinHashParams& params) {
  require(params.num_hashes >= 16, "num_hashes must be >= 16, got ",
          params.num_hashes);
  MinHashSignature sig;
  sig.num_hashes = params.num_hashes;
  sig.shingle_width = params.shingle_width;
  sig.hashes.assign(params.num_hashes,
                    std::numeric_limits<std::uint64_t>::max());
  const auto shingles = shingle_set(text, params.shingle_width);
  for (int i = 0; i < params.num_hashes; ++i) {
    const std::uint64_t salt = derive_seed(params.seed, "minhash", i);
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (std::uint64_t s : shingles) best = std::min(best, mix64(s ^ salt));
    sig.hashes[i] = best;
  }
  return sig;
}

double estimate_jaccard(const MinHashSignature& a, const MinHashSignature& b) {
  require(a.num_hashes == b.num_hashes && !a.hashes.empty(),
          "signatures are not comparable");
  int equal = 0;
  for (int i = 0; i < a.num_hashes; ++i) {
    equal += (a.hashes[i] == b.hashes[i]);
  }
  return static_cast<double>(equal) / static_cast<double>(a.num_hashes);
}

DedupResult minhash_dedup(const std::vector<Document>& docs,
                          const MinHashParams& params) {
  require(params.jaccard_threshold > 0.0 && params.jaccard_threshold <= 1.0,
          "jaccard threshold must be in (0,1], got ", params.jaccard_threshold);
  std::vector<Document> ordered = docs;
  std::sort(ordered.begin(), ordered.end(), doc_before);

  std::vector<MinHashSignature> sigs(ordered.size());
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    sigs[i] = signature_of(ordered[i].text, params);
  }

  // Later documents are dropped against any earlier one, whether or not the
  // earlier one was itself dropped; this keeps the pairwise rule literal and
  // the outcome independent of traversal bookkeeping.
  DedupResult result;
  const int slots_needed = static_cast<int>(
      params.jaccard_threshold * params.num_hashes - 1e-9);
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    bool duplicate = false;
    for (std::size_t j = 0; j < i && !duplicate; ++j) {
      int equal = 0;
      int remaining = params.num_hashes;
      for (int k = 0; k < params.num_hashes; ++k) {
        equal += (sigs[i].hashes[k] == sigs[j].hashes[k]);
        --remaining;
        if (equal + remaining < slots_needed) break;
      }
      const double est =
          static_cast<double>(equal) / static_cast<double>(params.num_hashes);
      duplicate = est >= params.jaccard_threshold;
    }
    if (duplicate) {
      result.dropped_ids.push_back(ordered[i].id);
    } else {
      result.kept.push_back(ordered[i]);
    }
  }
  return result;
}

}  // namespace tempo::corpus
