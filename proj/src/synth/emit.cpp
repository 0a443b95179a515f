#include "tempo/synth/emit.hpp"

#include <cstdio>

#include <nlohmann/json.hpp>

#include "tempo/util/error.hpp"
#include "tempo/util/io.hpp"
#include "tempo/util/text.hpp"

namespace tempo::synth {

using nlohmann::json;

const char* to_string(TokenClass c) {
  switch (c) {
    case TokenClass::Entity: return "ENTITY";
    case TokenClass::Number: return "NUMBER";
    case TokenClass::Common: return "COMMON";
    case TokenClass::Function: return "FUNCTION";
  }
  return "COMMON";
}

TokenClass token_class_from_string(const std::string& s) {
  if (s == "ENTITY") return TokenClass::Entity;
  if (s == "NUMBER") return TokenClass::Number;
  if (s == "COMMON") return TokenClass::Common;
  if (s == "FUNCTION") return TokenClass::Function;
  fail("unknown token class '", s, "'");
}

int world_month_to_corpus_month(int world_month) {
  return (2000 + world_month / 12) * 12 + world_month % 12;
}

int corpus_month_to_world_month(int corpus_month) {
  return corpus_month - 2000 * 12;
}

corpus::Date date_for(int world_month, int day_of_month) {
  return corpus::Date{2000 + world_month / 12, world_month % 12 + 1,
                      day_of_month};
}

namespace {

// Sentence assembly: parallel token and class streams.
struct SentenceSink {
  std::vector<std::string> tokens;
  std::vector<TokenClass> classes;

  void add(const std::string& tok, TokenClass cls) {
    tokens.push_back(tok);
    classes.push_back(cls);
  }
};

const std::vector<std::string>& common_verbs() {
  static const std::vector<std::string> verbs = {
      "shows", "takes", "makes", "finds", "keeps", "holds", "gives", "sees",
  };
  return verbs;
}

// Numeric slots sample from a window that slides with the month, so later
// months contain digit strings never seen earlier.
std::string drifting_number(Rng& rng, int world_month) {
  const long long base = 1000 + 7LL * world_month;
  const long long value = base + static_cast<long long>(rng.next_below(50));
  return std::to_string(value);
}

struct TemplateContext {
  const WorldSpec* spec = nullptr;
  const WorldState* state = nullptr;
  const std::vector<std::string>* roles = nullptr;
  const std::vector<std::string>* regions = nullptr;
  const std::vector<std::vector<std::string>>* topic_words = nullptr;
};

void render_fact(Rng& rng, const TemplateContext& ctx, SentenceSink& s) {
  const int r = static_cast<int>(rng.next_below(ctx.spec->num_roles));
  const int g = static_cast<int>(rng.next_below(ctx.spec->num_regions));
  const std::string& role = (*ctx.roles)[r];
  const std::string& region = (*ctx.regions)[g];
  const std::string& person = ctx.state->holders.at({r, g});
  const int form = static_cast<int>(rng.next_below(10));
  if (form < 3) {
    // Question-form sentence; mirrors the probe prompt so no separate
    // fine-tuning stage is needed for task-format familiarity.
    s.add("who", TokenClass::Function);
    s.add("is", TokenClass::Function);
    s.add("the", TokenClass::Function);
    s.add(role, TokenClass::Common);
    s.add("of", TokenClass::Function);
    s.add(region, TokenClass::Entity);
    s.add("in", TokenClass::Function);
    s.add("month", TokenClass::Common);
    s.add(std::to_string(ctx.state->month_index), TokenClass::Number);
    s.add("?", TokenClass::Function);
    s.add("the", TokenClass::Function);
    s.add(role, TokenClass::Common);
    s.add("of", TokenClass::Function);
    s.add(region, TokenClass::Entity);
    s.add("is", TokenClass::Function);
    s.add(person, TokenClass::Entity);
    s.add(".", TokenClass::Function);
  } else if (form < 7) {
    s.add(person, TokenClass::Entity);
    s.add("is", TokenClass::Function);
    s.add("the", TokenClass::Function);
    s.add(role, TokenClass::Common);
    s.add("of", TokenClass::Function);
    s.add(region, TokenClass::Entity);
    s.add(".", TokenClass::Function);
  } else {
    s.add("the", TokenClass::Function);
    s.add(role, TokenClass::Common);
    s.add("of", TokenClass::Function);
    s.add(region, TokenClass::Entity);
    s.add("is", TokenClass::Function);
    s.add(person, TokenClass::Entity);
    s.add(".", TokenClass::Function);
  }
}

int sample_topic(Rng& rng, const std::vector<double>& mixture) {
  double u = rng.next_double();
  for (std::size_t k = 0; k < mixture.size(); ++k) {
    u -= mixture[k];
    if (u < 0.0) return static_cast<int>(k);
  }
  return static_cast<int>(mixture.size()) - 1;
}

void render_topic(Rng& rng, const TemplateContext& ctx, SentenceSink& s) {
  const int k = sample_topic(rng, ctx.state->topic_mixture);
  const auto& words = (*ctx.topic_words)[static_cast<std::size_t>(k)];
  auto tw = [&]() -> const std::string& {
    return words[rng.next_below(words.size())];
  };
  const auto& verbs = common_verbs();
  const std::string& verb = verbs[rng.next_below(verbs.size())];
  const int shape = static_cast<int>(rng.next_below(3));
  if (shape == 0) {
    s.add("the", TokenClass::Function);
    s.add(tw(), TokenClass::Common);
    s.add(verb, TokenClass::Common);
    s.add("the", TokenClass::Function);
    s.add(tw(), TokenClass::Common);
    s.add(".", TokenClass::Function);
  } else if (shape == 1) {
    s.add("a", TokenClass::Function);
    s.add(tw(), TokenClass::Common);
    s.add("of", TokenClass::Function);
    s.add(drifting_number(rng, ctx.state->month_index), TokenClass::Number);
    s.add(tw(), TokenClass::Common);
    s.add(".", TokenClass::Function);
  } else {
    // Entity mention outside the fact frame; repeats names across sentences.
    const int r = static_cast<int>(rng.next_below(ctx.spec->num_roles));
    const int g = static_cast<int>(rng.next_below(ctx.spec->num_regions));
    s.add(ctx.state->holders.at({r, g}), TokenClass::Entity);
    s.add(verb, TokenClass::Common);
    s.add("the", TokenClass::Function);
    s.add(tw(), TokenClass::Common);
    s.add("in", TokenClass::Function);
    s.add((*ctx.regions)[g], TokenClass::Entity);
    s.add(".", TokenClass::Function);
  }
}

}  // namespace

EmitResult emit_corpus(const WorldSpec& spec) {
  spec.validate();
  EmitResult result;
  result.world_log.roles = role_words(spec);
  result.world_log.regions = region_words(spec);

  // Per-topic word lists, fixed for the whole horizon and disjoint from the
  // role/region vocabulary.
  std::vector<std::vector<std::string>> topic_words(spec.topic_count);
  {
    Rng rng(derive_seed(spec.seed, "topicwords"));
    std::set<std::string> used(result.world_log.roles.begin(),
                               result.world_log.roles.end());
    used.insert(result.world_log.regions.begin(), result.world_log.regions.end());
    for (auto& words : topic_words) {
      while (words.size() < 25) {
        std::string w = pronounceable(rng, spec.entity_name_alphabet, 4);
        if (used.insert(w).second) words.push_back(w);
      }
    }
  }

  WorldState state = build_world(spec);
  for (int m = 0; m < spec.months; ++m) {
    if (m > 0) state = advance_month(state, spec);
    result.world_log.holders_by_month.push_back(state.holders);

    TemplateContext ctx;
    ctx.spec = &spec;
    ctx.state = &state;
    ctx.roles = &result.world_log.roles;
    ctx.regions = &result.world_log.regions;
    ctx.topic_words = &topic_words;

    for (int d = 0; d < spec.docs_per_month; ++d) {
      Rng rng(derive_seed(spec.seed, "doc",
                          (static_cast<std::uint64_t>(m) << 32) |
                              static_cast<std::uint64_t>(d)));
      const int n_sentences =
          rng.uniform_int(spec.sentences_per_doc_min, spec.sentences_per_doc_max);
      SentenceSink sink;
      for (int i = 0; i < n_sentences; ++i) {
        if (rng.next_double() < 0.4) {
          render_fact(rng, ctx, sink);
        } else {
          render_topic(rng, ctx, sink);
        }
      }

      corpus::Document doc;
      char idbuf[32];
      std::snprintf(idbuf, sizeof idbuf, "synth-m%04d-d%05d", m, d);
      doc.id = idbuf;
      doc.timestamp = date_for(m, 1 + d % 28);
      doc.month_index = corpus::month_index_of(doc.timestamp);
      doc.text = join(sink.tokens, " ");
      doc.source = "synth";
      result.documents.push_back(std::move(doc));
      result.annotations.emplace(idbuf, std::move(sink.classes));
    }
  }
  return result;
}

void save_annotations(const std::filesystem::path& path, const Annotations& ann) {
  std::string out;
  for (const auto& [id, classes] : ann) {
    json j;
    j["id"] = id;
    json arr = json::array();
    for (auto c : classes) arr.push_back(to_string(c));
    j["classes"] = std::move(arr);
    out += j.dump();
    out += '\n';
  }
  write_file(path, out);
}

Annotations load_annotations(const std::filesystem::path& path) {
  Annotations ann;
  for (const auto& line : read_lines(path)) {
    if (line.empty()) continue;
    json j = json::parse(line);
    std::vector<TokenClass> classes;
    for (const auto& c : j.at("classes")) {
      classes.push_back(token_class_from_string(c.get<std::string>()));
    }
    ann.emplace(j.at("id").get<std::string>(), std::move(classes));
  }
  return ann;
}

}  // namespace tempo::synth
