#include "tempo/bpe/vocab.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>

#include "tempo/util/error.hpp"
#include "tempo/util/io.hpp"
#include "tempo/util/text.hpp"

namespace tempo::bpe {

namespace {

// Byte-page symbols carry a 0x01 prefix so they can never collide with a
// character symbol or a merge product.
std::string byte_symbol(unsigned char b) {
  std::string s;
  s.push_back('\x01');
  s.push_back(static_cast<char>(b));
  return s;
}

bool is_byte_symbol(const std::string& s) {
  return s.size() == 2 && s[0] == '\x01';
}

std::string pair_key(const std::string& a, const std::string& b) {
  return std::to_string(a.size()) + ":" + a + b;
}

std::string escape_symbol(const std::string& s) {
  std::string out;
  for (unsigned char c : s) {
    if (c == '\\') {
      out += "\\\\";
    } else if (c == '\n') {
      out += "\\n";
    } else if (c == '\t') {
      out += "\\t";
    } else if (c < 0x20) {
      char buf[8];
      std::snprintf(buf, sizeof buf, "\\x%02x", c);
      out += buf;
    } else {
      out.push_back(static_cast<char>(c));
    }
  }
  return out;
}

std::string unescape_symbol(const std::string& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '\\') {
      out.push_back(s[i]);
      continue;
    }
    require(i + 1 < s.size(), "dangling escape in vocab file");
    const char c = s[++i];
    if (c == '\\') {
      out.push_back('\\');
    } else if (c == 'n') {
      out.push_back('\n');
    } else if (c == 't') {
      out.push_back('\t');
    } else if (c == 'x') {
      require(i + 2 < s.size(), "truncated \\x escape in vocab file");
      const std::string hex = s.substr(i + 1, 2);
      out.push_back(static_cast<char>(std::stoi(hex, nullptr, 16)));
      i += 2;
    } else {
      fail("unknown escape '\\", std::string(1, c), "' in vocab file");
    }
  }
  return out;
}

// Initial symbol sequence for a word: boundary marker, then one symbol per
// character known to the table, with byte-page fallback for the rest.
std::vector<std::string> word_to_base_symbols(
    const std::string& word,
    const std::unordered_map<std::string, int>* known) {
  std::vector<std::string> syms;
  syms.push_back(kBoundaryMarker);
  for (const auto& ch : utf8_chars(word)) {
    const bool usable = ch != kBoundaryMarker && ch[0] != '\x01' &&
                        (known == nullptr || known->count(ch) > 0);
    if (usable) {
      syms.push_back(ch);
    } else {
      for (unsigned char b : ch) syms.push_back(byte_symbol(b));
    }
  }
  return syms;
}

}  // namespace

int Vocab::id_of(const std::string& symbol) const {
  auto it = ids_.find(symbol);
  require(it != ids_.end(), "symbol not in vocabulary");
  return it->second;
}

Vocab train(const std::vector<std::string>& sample_texts, int vocab_size,
            std::size_t sample_cap_bytes) {
  // Word frequencies over the (possibly capped) sample.
  std::map<std::string, long long> word_freq;
  std::size_t consumed = 0;
  for (const auto& text : sample_texts) {
    if (sample_cap_bytes > 0 && consumed >= sample_cap_bytes) break;
    consumed += text.size();
    for (auto& w : split_ws(text)) ++word_freq[w];
  }
  require(!word_freq.empty(), "empty tokenizer training sample");

  Vocab v;
  auto add_symbol = [&v](const std::string& s) {
    if (v.ids_.count(s)) return;
    v.ids_.emplace(s, static_cast<int>(v.symbols_.size()));
    v.symbols_.push_back(s);
  };
  add_symbol("<pad>");
  add_symbol("<bos>");
  add_symbol("<unk>");
  for (int b = 0; b < 256; ++b) add_symbol(byte_symbol(static_cast<unsigned char>(b)));
  add_symbol(kBoundaryMarker);

  std::set<std::string> charset;
  for (const auto& [word, freq] : word_freq) {
    for (const auto& ch : utf8_chars(word)) {
      if (ch != kBoundaryMarker && ch[0] != '\x01') charset.insert(ch);
    }
  }
  for (const auto& ch : charset) add_symbol(ch);

  require(vocab_size >= v.size(), "vocab_size ", vocab_size,
          " is below the base symbol count ", v.size());

  // Working copy: unique word -> current symbol sequence.
  std::vector<std::pair<std::vector<std::string>, long long>> words;
  words.reserve(word_freq.size());
  for (const auto& [word, freq] : word_freq) {
    words.emplace_back(word_to_base_symbols(word, nullptr), freq);
  }

  while (v.size() < vocab_size) {
    std::map<std::pair<std::string, std::string>, long long> pair_count;
    for (const auto& [syms, freq] : words) {
      for (std::size_t i = 0; i + 1 < syms.size(); ++i) {
        pair_count[{syms[i], syms[i + 1]}] += freq;
      }
    }
    // Highest count wins; map order resolves ties lexicographically.
    std::pair<std::string, std::string> best;
    long long best_count = 0;
    for (const auto& [pair, count] : pair_count) {
      if (count > best_count) {
        best = pair;
        best_count = count;
      }
    }
    if (best_count < 2) break;

    const std::string merged = best.first + best.second;
    for (auto& [syms, freq] : words) {
      std::vector<std::string> out;
      out.reserve(syms.size());
      for (std::size_t i = 0; i < syms.size(); ++i) {
        if (i + 1 < syms.size() && syms[i] == best.first &&
            syms[i + 1] == best.second) {
          out.push_back(merged);
          ++i;
        } else {
          out.push_back(syms[i]);
        }
      }
      syms = std::move(out);
    }
    v.merge_rank_.emplace(pair_key(best.first, best.second),
                          static_cast<int>(v.merges_.size()));
    v.merges_.push_back(best);
    add_symbol(merged);
  }
  return v;
}

std::vector<int> Vocab::encode_word(const std::string& word) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto cached = cache_->map.find(word);
    if (cached != cache_->map.end()) return cached->second;
  }

  auto syms = word_to_base_symbols(word, &ids_);
  for (;;) {
    int best_rank = -1;
    std::pair<std::string, std::string> best;
    for (std::size_t i = 0; i + 1 < syms.size(); ++i) {
      auto it = merge_rank_.find(pair_key(syms[i], syms[i + 1]));
      if (it != merge_rank_.end() && (best_rank < 0 || it->second < best_rank)) {
        best_rank = it->second;
        best = {syms[i], syms[i + 1]};
      }
    }
    if (best_rank < 0) break;
    const std::string merged = best.first + best.second;
    std::vector<std::string> out;
    out.reserve(syms.size());
    for (std::size_t i = 0; i < syms.size(); ++i) {
      if (i + 1 < syms.size() && syms[i] == best.first &&
          syms[i + 1] == best.second) {
        out.push_back(merged);
        ++i;
      } else {
        out.push_back(syms[i]);
      }
    }
    syms = std::move(out);
  }

  std::vector<int> ids;
  ids.reserve(syms.size());
  for (const auto& s : syms) ids.push_back(id_of(s));
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    cache_->map.emplace(word, ids);
  }
  return ids;
}

Encoding Vocab::encode(const std::string& text) const {
  Encoding enc;
  for (const auto& word : split_ws(normalize_ws(text))) {
    const auto ids = encode_word(word);
    const int start = static_cast<int>(enc.token_ids.size());
    enc.token_ids.insert(enc.token_ids.end(), ids.begin(), ids.end());
    enc.word_spans.emplace_back(start, static_cast<int>(enc.token_ids.size()));
  }
  return enc;
}

std::string Vocab::decode(const std::vector<int>& ids) const {
  std::string flat;
  for (int id : ids) {
    require(id >= 0 && id < size(), "token id ", id,
            " out of range for vocab of size ", size());
    if (id == kPadId || id == kBosId || id == kUnkId) continue;
    const std::string& s = symbols_[static_cast<std::size_t>(id)];
    if (is_byte_symbol(s)) {
      flat.push_back(s[1]);
    } else {
      flat += s;
    }
  }
  // Boundary markers delimit word starts (possibly fused into a symbol).
  std::vector<std::string> words;
  const std::string marker = kBoundaryMarker;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t next = flat.find(marker, pos);
    if (next == std::string::npos) {
      if (pos < flat.size()) words.push_back(flat.substr(pos));
      break;
    }
    if (next > pos) words.push_back(flat.substr(pos, next - pos));
    pos = next + marker.size();
  }
  return join(words, " ");
}

void Vocab::save(const std::filesystem::path& path) const {
  std::string out = "tempo-bpe v1\n";
  out += "symbols " + std::to_string(symbols_.size()) + "\n";
  for (const auto& s : symbols_) out += escape_symbol(s) + "\n";
  out += "merges " + std::to_string(merges_.size()) + "\n";
  for (const auto& [a, b] : merges_) {
    out += escape_symbol(a) + "\t" + escape_symbol(b) + "\n";
  }
  write_file(path, out);
}

Vocab Vocab::load(const std::filesystem::path& path) {
  const auto lines = read_lines(path);
  require(!lines.empty() && lines[0] == "tempo-bpe v1",
          "not a tempo-bpe vocabulary file: ", path.string());
  std::size_t at = 1;
  auto expect_count = [&](const char* tag) {
    require(at < lines.size(), "truncated vocab file");
    const std::string& l = lines[at++];
    const std::string prefix = std::string(tag) + " ";
    require(l.rfind(prefix, 0) == 0, "expected '", tag, " N' line");
    return static_cast<std::size_t>(std::stoull(l.substr(prefix.size())));
  };

  Vocab v;
  const std::size_t n_symbols = expect_count("symbols");
  for (std::size_t i = 0; i < n_symbols; ++i) {
    require(at < lines.size(), "truncated vocab file");
    const std::string s = unescape_symbol(lines[at++]);
    v.ids_.emplace(s, static_cast<int>(v.symbols_.size()));
    v.symbols_.push_back(s);
  }
  const std::size_t n_merges = expect_count("merges");
  for (std::size_t i = 0; i < n_merges; ++i) {
    require(at < lines.size(), "truncated vocab file");
    const std::string& l = lines[at++];
    const auto tab = l.find('\t');
    require(tab != std::string::npos, "malformed merge line");
    auto a = unescape_symbol(l.substr(0, tab));
    auto b = unescape_symbol(l.substr(tab + 1));
    v.merge_rank_.emplace(pair_key(a, b), static_cast<int>(v.merges_.size()));
    v.merges_.emplace_back(std::move(a), std::move(b));
  }
  return v;
}

}  // namespace tempo::bpe
