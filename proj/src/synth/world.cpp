#include "tempo/synth/world.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "tempo/util/error.hpp"
#include "tempo/util/io.hpp"

namespace tempo::synth {

using nlohmann::json;

void WorldSpec::validate() const {
  require(num_roles >= 1, "invalid spec: num_roles must be >= 1");
  require(num_regions >= 1, "invalid spec: num_regions must be >= 1");
  require(!entity_name_alphabet.empty(),
          "invalid spec: entity_name_alphabet must be non-empty");
  require(months >= 2, "invalid spec: months must be >= 2");
  require(role_turnover_prob >= 0.0 && role_turnover_prob <= 1.0,
          "invalid spec: role_turnover_prob must be in [0,1]");
  require(topic_count >= 1, "invalid spec: topic_count must be >= 1");
  require(topic_drift_rate >= 0.0 && topic_drift_rate <= 1.0,
          "invalid spec: topic_drift_rate must be in [0,1]");
  require(docs_per_month >= 1, "invalid spec: docs_per_month must be >= 1");
  require(sentences_per_doc_min >= 1 &&
              sentences_per_doc_max >= sentences_per_doc_min,
          "invalid spec: sentences_per_doc range is malformed");
}

std::string WorldSpec::to_json() const {
  json j;
  j["num_roles"] = num_roles;
  j["num_regions"] = num_regions;
  j["entity_name_alphabet"] = entity_name_alphabet;
  j["months"] = months;
  j["role_turnover_prob"] = role_turnover_prob;
  j["topic_count"] = topic_count;
  j["topic_drift_rate"] = topic_drift_rate;
  j["docs_per_month"] = docs_per_month;
  j["sentences_per_doc_min"] = sentences_per_doc_min;
  j["sentences_per_doc_max"] = sentences_per_doc_max;
  j["seed"] = seed;
  return j.dump(2);
}

WorldSpec WorldSpec::from_json(const std::string& text) {
  json j = json::parse(text);
  WorldSpec s;
  s.num_roles = j.value("num_roles", s.num_roles);
  s.num_regions = j.value("num_regions", s.num_regions);
  s.entity_name_alphabet = j.value("entity_name_alphabet", s.entity_name_alphabet);
  s.months = j.value("months", s.months);
  s.role_turnover_prob = j.value("role_turnover_prob", s.role_turnover_prob);
  s.topic_count = j.value("topic_count", s.topic_count);
  s.topic_drift_rate = j.value("topic_drift_rate", s.topic_drift_rate);
  s.docs_per_month = j.value("docs_per_month", s.docs_per_month);
  s.sentences_per_doc_min = j.value("sentences_per_doc_min", s.sentences_per_doc_min);
  s.sentences_per_doc_max = j.value("sentences_per_doc_max", s.sentences_per_doc_max);
  s.seed = j.value("seed", s.seed);
  s.validate();
  return s;
}

WorldSpec WorldSpec::load(const std::filesystem::path& path) {
  return from_json(read_file(path));
}

std::string pronounceable(Rng& rng, const std::string& alphabet, int length) {
  static const std::string kVowels = "aeiou";
  std::string vowels, consonants;
  for (char c : alphabet) {
    (kVowels.find(c) != std::string::npos ? vowels : consonants).push_back(c);
  }
  if (vowels.empty() || consonants.empty()) {
    std::string out;
    for (int i = 0; i < length; ++i) {
      out.push_back(alphabet[rng.next_below(alphabet.size())]);
    }
    return out;
  }
  std::string out;
  for (int i = 0; i < length; ++i) {
    const std::string& pool = (i % 2 == 0) ? consonants : vowels;
    out.push_back(pool[rng.next_below(pool.size())]);
  }
  return out;
}

namespace {

std::string capitalize(std::string s) {
  if (!s.empty() && s[0] >= 'a' && s[0] <= 'z') s[0] = static_cast<char>(s[0] - 32);
  return s;
}

std::vector<std::string> distinct_words(Rng& rng, const WorldSpec& spec,
                                        int count, int length,
                                        bool capitalized) {
  std::vector<std::string> out;
  std::set<std::string> used;
  while (static_cast<int>(out.size()) < count) {
    std::string w = pronounceable(rng, spec.entity_name_alphabet, length);
    if (capitalized) w = capitalize(w);
    if (used.insert(w).second) out.push_back(w);
  }
  return out;
}

}  // namespace

std::vector<std::string> role_words(const WorldSpec& spec) {
  Rng rng(derive_seed(spec.seed, "roles"));
  return distinct_words(rng, spec, spec.num_roles, 5, false);
}

std::vector<std::string> region_words(const WorldSpec& spec) {
  Rng rng(derive_seed(spec.seed, "regions"));
  return distinct_words(rng, spec, spec.num_regions, 6, true);
}

std::string fresh_entity_name(Rng& rng, const WorldSpec& spec,
                              const std::set<std::string>& used) {
  for (;;) {
    std::string name = capitalize(pronounceable(rng, spec.entity_name_alphabet, 7));
    if (!used.count(name)) return name;
  }
}

WorldState build_world(const WorldSpec& spec) {
  spec.validate();
  WorldState state;
  state.month_index = 0;
  state.topic_mixture.assign(spec.topic_count, 1.0 / spec.topic_count);
  Rng rng(derive_seed(spec.seed, "holders"));
  for (int r = 0; r < spec.num_roles; ++r) {
    for (int g = 0; g < spec.num_regions; ++g) {
      std::string name = fresh_entity_name(rng, spec, state.entity_registry);
      state.entity_registry.insert(name);
      state.holders[{r, g}] = std::move(name);
    }
  }
  return state;
}

WorldState advance_month(const WorldState& state, const WorldSpec& spec) {
  require(state.month_index + 1 < spec.months, "world horizon exceeded (month ",
          state.month_index + 1, " of ", spec.months, ")");
  WorldState next = state;
  next.month_index = state.month_index + 1;
  Rng rng(derive_seed(spec.seed, "advance", static_cast<std::uint64_t>(next.month_index)));

  for (auto& [key, holder] : next.holders) {
    if (rng.bernoulli(spec.role_turnover_prob)) {
      std::string name = fresh_entity_name(rng, spec, next.entity_registry);
      next.entity_registry.insert(name);
      holder = std::move(name);
    }
  }

  // Move the mixture toward a fresh random simplex point, capping the step at
  // topic_drift_rate in total-variation distance.
  std::vector<double> target(spec.topic_count);
  double sum = 0.0;
  for (auto& t : target) {
    t = -std::log(1.0 - rng.next_double() + 1e-300);
    sum += t;
  }
  for (auto& t : target) t /= sum;
  double tv = 0.0;
  for (int k = 0; k < spec.topic_count; ++k) {
    tv += std::abs(target[k] - state.topic_mixture[k]);
  }
  tv *= 0.5;
  const double lambda = tv <= spec.topic_drift_rate ? 1.0
                                                    : spec.topic_drift_rate / tv;
  double norm = 0.0;
  for (int k = 0; k < spec.topic_count; ++k) {
    next.topic_mixture[k] =
        state.topic_mixture[k] + lambda * (target[k] - state.topic_mixture[k]);
    norm += next.topic_mixture[k];
  }
  for (auto& p : next.topic_mixture) p /= norm;
  return next;
}

std::string WorldLog::to_json() const {
  json j;
  j["roles"] = roles;
  j["regions"] = regions;
  json months = json::array();
  for (const auto& table : holders_by_month) {
    json row = json::array();
    for (const auto& [key, name] : table) {
      row.push_back({key.role, key.region, name});
    }
    months.push_back(std::move(row));
  }
  j["holders_by_month"] = std::move(months);
  return j.dump();
}

WorldLog WorldLog::from_json(const std::string& text) {
  json j = json::parse(text);
  WorldLog log;
  log.roles = j.at("roles").get<std::vector<std::string>>();
  log.regions = j.at("regions").get<std::vector<std::string>>();
  for (const auto& row : j.at("holders_by_month")) {
    std::map<RoleRegion, std::string> table;
    for (const auto& entry : row) {
      table[{entry.at(0).get<int>(), entry.at(1).get<int>()}] =
          entry.at(2).get<std::string>();
    }
    log.holders_by_month.push_back(std::move(table));
  }
  return log;
}

WorldLog WorldLog::load(const std::filesystem::path& path) {
  return from_json(read_file(path));
}

void WorldLog::save(const std::filesystem::path& path) const {
  write_file(path, to_json());
}

const std::string& oracle_lookup(const WorldLog& log, const std::string& role,
                                 const std::string& region, int month_index) {
  require(month_index >= 0 &&
              month_index < static_cast<int>(log.holders_by_month.size()),
          "month ", month_index, " outside world horizon");
  const auto rit = std::find(log.roles.begin(), log.roles.end(), role);
  require(rit != log.roles.end(), "unknown role '", role, "'");
  const auto git = std::find(log.regions.begin(), log.regions.end(), region);
  require(git != log.regions.end(), "unknown region '", region, "'");
  const RoleRegion key{static_cast<int>(rit - log.roles.begin()),
                       static_cast<int>(git - log.regions.begin())};
  const auto& table = log.holders_by_month[static_cast<std::size_t>(month_index)];
  const auto it = table.find(key);
  require(it != table.end(), "unknown (role, region) pair");
  return it->second;
}

}  // namespace tempo::synth
