#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "numsg/gluing.hpp"
#include "numsg/semigroup.hpp"

// Brute-force oracles and the sampled theorem harness. Nothing in the
// oracle half calls into the fast paths of semigroup.cpp / cone.cpp.
namespace numsg::verify {

/// reachable[n] for 0 <= n <= bound, by reachable[n] = OR_i reachable[n - m_i].
std::vector<bool> sieve_members(std::span<const Int> generators, Int bound);

/// Largest number of generators summing to s, by exhaustive branch and bound
/// over all coefficient vectors. Errors: NotRepresentable.
int brute_ord(std::span<const Int> generators, Int s);

/// Least member in each class mod x, found by scanning a growing sieve.
/// Errors: NotAMember.
AperySet brute_apery(std::span<const Int> generators, Int x);

/// ord(s + e) = ord(s) + 1 for every member s <= (e - 1) * m_d, using
/// brute_ord only. Members of order <= r all lie in that window.
bool brute_is_cm_tangent_cone(std::span<const Int> generators);

enum class TheoremId { T1, T2, T3, T4, T5, T6, T7, T8, T9, T10 };

inline constexpr TheoremId kAllTheorems[] = {TheoremId::T1, TheoremId::T2, TheoremId::T3, TheoremId::T4,
                                             TheoremId::T5, TheoremId::T6, TheoremId::T7, TheoremId::T8,
                                             TheoremId::T9, TheoremId::T10};

/// "T1".."T10" (case-insensitive). Errors: UnknownTheorem.
TheoremId parse_theorem(std::string_view id);
std::string to_string(TheoremId id);
std::string_view describe(TheoremId id);

/// Raw gluing data, validated when the sampler emits it.
struct GluingInput {
  std::vector<Int> s1;
  std::vector<Int> s2;
  Int p = 0;
  Int q = 0;
};

struct SamplerConfig {
  std::size_t max_embedding_dim = 4;
  Int max_generator = 40;
  Int max_pq = 60;
  /// Target number of hypothesis-satisfying instances.
  std::size_t samples = 200;
  /// Give up after this many draws; 0 means 50 * samples.
  std::size_t max_attempts = 0;
  /// Glued (or generated) semigroups with a larger conductor are redrawn.
  Int conductor_cap = 20000;
  bool extensions_only = false;
  /// Mutation: ignore the "specific" hypothesis (T1, T2, T3, T8).
  bool drop_specific = false;
  /// Emitted by the gluing sampler before any random draw.
  std::vector<GluingInput> include;
};

/// Reproducible stream of numerical semigroups within the bounds.
class SemigroupSampler {
 public:
  SemigroupSampler(SamplerConfig config, std::uint64_t seed);
  NumericalSemigroup next();
  std::mt19937_64& engine() { return rng_; }

 private:
  SamplerConfig config_;
  std::mt19937_64 rng_;
};

/// Reproducible stream of valid gluings; nullopt once the bounds stop
/// producing valid instances.
class GluingSampler {
 public:
  GluingSampler(SamplerConfig config, std::uint64_t seed);
  std::optional<GluingSpec> next();
  std::mt19937_64& engine() { return semigroups_.engine(); }

 private:
  SamplerConfig config_;
  SemigroupSampler semigroups_;
  std::size_t included_ = 0;
};

std::vector<NumericalSemigroup> sample_semigroups(const SamplerConfig& config, std::uint64_t seed,
                                                  std::size_t count);
std::vector<GluingSpec> sample_gluings(const SamplerConfig& config, std::uint64_t seed, std::size_t count);

struct Violation {
  nlohmann::json instance;
  nlohmann::json expected;
  nlohmann::json got;
};

struct TheoremReport {
  TheoremId id = TheoremId::T1;
  std::size_t samples_tried = 0;
  std::size_t hypothesis_hits = 0;
  std::vector<Violation> violations;
  std::uint64_t seed = 0;
  SamplerConfig bounds;
};

/// Draws instances until `samples` of them satisfy the hypothesis (or the
/// attempt budget runs out) and checks the conclusion on each. Errors:
/// BoundsTooSmall when no draw satisfies the hypothesis.
TheoremReport verify_theorem(TheoremId id, const SamplerConfig& config, std::uint64_t seed);

nlohmann::json to_json(const TheoremReport& report);
nlohmann::json to_json(const SamplerConfig& config);

}  // namespace numsg::verify
