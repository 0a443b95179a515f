#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "tempo/corpus/document.hpp"
#include "tempo/synth/world.hpp"

namespace tempo::synth {

enum class TokenClass { Entity, Number, Common, Function };

const char* to_string(TokenClass c);
TokenClass token_class_from_string(const std::string& s);

using Annotations = std::map<std::string, std::vector<TokenClass>>;

struct EmitResult {
  std::vector<corpus::Document> documents;
  Annotations annotations;  // doc id -> one class per whitespace token
  WorldLog world_log;
};

// World month w maps to calendar year 2000 + w/12, month w%12 + 1.
int world_month_to_corpus_month(int world_month);
int corpus_month_to_world_month(int corpus_month);
corpus::Date date_for(int world_month, int day_of_month);

// Renders the whole horizon: documents, aligned gold annotations, and the
// holder log. Fully determined by the spec (including its seed).
EmitResult emit_corpus(const WorldSpec& spec);

void save_annotations(const std::filesystem::path& path, const Annotations& ann);
Annotations load_annotations(const std::filesystem::path& path);

}  // namespace tempo::synth
