#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "tempo/util/rng.hpp"

namespace tempo::synth {

struct WorldSpec {
  int num_roles = 4;
  int num_regions = 4;
  std::string entity_name_alphabet = "abcdefghijklmnopqrstuvwxyz";
  int months = 24;
  double role_turnover_prob = 0.2;
  int topic_count = 4;
  double topic_drift_rate = 0.1;
  int docs_per_month = 50;
  int sentences_per_doc_min = 8;
  int sentences_per_doc_max = 14;
  std::uint64_t seed = 1;

  void validate() const;  // throws naming the offending field

  std::string to_json() const;
  static WorldSpec from_json(const std::string& text);
  static WorldSpec load(const std::filesystem::path& path);
};

struct RoleRegion {
  int role = 0;
  int region = 0;
  auto operator<=>(const RoleRegion&) const = default;
};

struct WorldState {
  int month_index = 0;
  std::map<RoleRegion, std::string> holders;
  std::vector<double> topic_mixture;
  std::set<std::string> entity_registry;  // every name ever used
};

// Month-indexed holder table; the ground truth the probe module queries.
struct WorldLog {
  std::vector<std::string> roles;    // role index -> word
  std::vector<std::string> regions;  // region index -> word
  // holders_by_month[m][(role, region)] = entity name
  std::vector<std::map<RoleRegion, std::string>> holders_by_month;

  std::string to_json() const;
  static WorldLog from_json(const std::string& text);
  static WorldLog load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;
};

WorldState build_world(const WorldSpec& spec);
WorldState advance_month(const WorldState& state, const WorldSpec& spec);

const std::string& oracle_lookup(const WorldLog& log, const std::string& role,
                                 const std::string& region, int month_index);

// Pronounceable lowercase string of the requested length drawn from the
// alphabet (consonant/vowel alternation when both are available).
std::string pronounceable(Rng& rng, const std::string& alphabet, int length);

// Role/region vocabulary for a spec; fixed across the whole horizon.
std::vector<std::string> role_words(const WorldSpec& spec);
std::vector<std::string> region_words(const WorldSpec& spec);

// Entity name for a new holder: capitalized, never seen in `used`.
std::string fresh_entity_name(Rng& rng, const WorldSpec& spec,
                              const std::set<std::string>& used);

}  // namespace tempo::synth
