#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "numsg/cli.hpp"
#include "numsg/cone.hpp"
#include "numsg/gluing.hpp"
#include "numsg/verify.hpp"
#include "properties.hpp"

using numsg::Int;
using numsg::NumericalSemigroup;
namespace v = numsg::verify;

namespace {

constexpr double kTableSeconds = 1.0;
constexpr double kExampleSeconds = 1.0;
constexpr double kOracleSeconds = 60.0;
constexpr double kTheoremSeconds = 600.0;
constexpr std::size_t kOracleSample = 500;
constexpr std::size_t kTheoremHits = 200;
constexpr std::size_t kMutationSamples = 500;
constexpr std::size_t kGluingSample = 500;
constexpr std::uint64_t kSeed = numsg::cli::kDefaultSeed;

const std::vector<std::vector<Int>> kPrintedRows = {
    {11, 60, 72, 120, 144, 156, 180, 216, 228, 240, 300},
    {22, 71, 83, 120, 144, 167, 180, 216, 228, 240, 300},
    {33, 82, 94, 131, 155, 178, 180, 216, 239, 240, 300},
    {44, 93, 105, 142, 166, 189, 191, 227, 250, 240, 300},
    {55, 104, 116, 153, 177, 200, 202, 238, 261, 251, 300},
};

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string title;
  double seconds;
  std::function<Outcome()> run;
};

NumericalSemigroup sg(std::initializer_list<Int> gens) { return NumericalSemigroup::from_generators(gens); }

Outcome table_reproduction(const std::string& gens) {
  const auto result = numsg::cli::run({"--json", "table", gens});
  if (result.exit_code != 0) return {false, "table exited " + std::to_string(result.exit_code)};
  const auto j = nlohmann::json::parse(result.out);
  std::size_t matched = 0, total = 0;
  std::string first_bad;
  for (std::size_t n = 1; n <= kPrintedRows.size(); ++n) {
    const auto row = n < j["rows"].size() ? j["rows"][n].get<std::vector<Int>>() : std::vector<Int>{};
    for (std::size_t k = 0; k < kPrintedRows[n - 1].size(); ++k) {
      ++total;
      if (k < row.size() && row[k] == kPrintedRows[n - 1][k]) {
        ++matched;
      } else if (first_bad.empty()) {
        first_bad = "row " + std::to_string(n) + " column " + std::to_string(k) + ": got " +
                    (k < row.size() ? std::to_string(row[k]) : std::string("nothing")) + ", printed " +
                    std::to_string(kPrintedRows[n - 1][k]);
      }
    }
  }
  std::vector<Int> parsed = numsg::cli::parse_generators(gens);
  const bool cm = numsg::is_cm_tangent_cone(NumericalSemigroup::from_generators(parsed));
  std::string detail = std::to_string(matched) + "/" + std::to_string(total) + " values match, CM " +
                       (cm ? "true" : "false");
  if (!first_bad.empty()) detail += "; first mismatch " + first_bad;
  return {matched == total && cm, detail};
}

Outcome non_cm_examples() {
  const bool a = numsg::is_cm_tangent_cone(sg({6, 15, 7}));
  const auto t = sg({5, 8, 28});
  const bool b = numsg::is_cm_tangent_cone(t);
  std::string reduced;
  for (Int g : t.generators()) reduced += (reduced.empty() ? "" : ",") + std::to_string(g);
  return {!a && !b, std::string("<6,7,15> CM ") + (a ? "true" : "false") + ", <5,8,28> CM " + (b ? "true" : "false") +
                        " (minimal generators " + reduced + ")"};
}

Outcome non_cm_first() {
  const auto s = sg({6, 15, 7});
  const bool cm = numsg::is_cm_tangent_cone(s);
  return {!cm && s.ord(21) == 3, std::string("<6,7,15> CM ") + (cm ? "true" : "false")};
}

Outcome order_facts() {
  const auto s = sg({16, 30, 44, 45, 116});
  const int o116 = s.ord(116), o16 = s.ord(16), o132 = s.ord(132), o146 = s.ord(146);
  const bool ok = o116 == 1 && o16 == 1 && o132 >= 3 && o146 == 2;
  return {ok, "ord 116=" + std::to_string(o116) + " 16=" + std::to_string(o16) + " 132=" + std::to_string(o132) +
                  " 146=" + std::to_string(o146)};
}

Outcome classification() {
  const auto nice = numsg::make_gluing(sg({4, 11, 29}), sg({2, 3}), 15, 4);
  const auto ext = numsg::make_gluing(sg({2, 5}), NumericalSemigroup::naturals(), 7, 3);
  const auto wide = numsg::make_gluing(sg({5, 6, 13}), NumericalSemigroup::naturals(), 11, 12);
  const bool a = nice.flags.nice && nice.flags.specific;
  const bool b = ext.flags.extension && !ext.flags.nice && !ext.flags.specific;
  const bool c = wide.flags.extension && !wide.flags.nice && wide.p < wide.q;
  return {a && b && c, std::string("nice+specific ") + (a ? "ok" : "wrong") + ", extension not nice not specific " +
                           (b ? "ok" : "wrong") + ", extension not nice with p<q " + (c ? "ok" : "wrong")};
}

Outcome oracle_equivalence() {
  numsg::props::Failures failures;
  const auto sample = numsg::props::standard_sample(kOracleSample, kSeed);
  for (const auto& s : sample) numsg::props::check_oracles(s, failures);
  std::string detail = std::to_string(sample.size()) + " semigroups, " + std::to_string(failures.size()) +
                       " mismatches";
  if (!failures.empty()) detail += "; first: " + failures.front();
  return {sample.size() == kOracleSample && failures.empty(), detail};
}

Outcome theorem_suites() {
  v::SamplerConfig config;
  config.max_embedding_dim = 4;
  config.max_generator = 40;
  config.max_pq = 60;
  config.samples = kTheoremHits;
  bool ok = true;
  std::string detail;
  for (v::TheoremId id : v::kAllTheorems) {
    const auto report = v::verify_theorem(id, config, kSeed);
    const bool good = report.hypothesis_hits >= kTheoremHits && report.violations.empty();
    ok = ok && good;
    detail += v::to_string(id) + " " + std::to_string(report.hypothesis_hits) + "/" +
              std::to_string(report.violations.size()) + (good ? " " : "! ");
  }
  return {ok, "hits/violations: " + detail};
}

Outcome mutation() {
  v::SamplerConfig config;
  config.samples = kMutationSamples;
  config.max_attempts = kMutationSamples;
  config.drop_specific = true;
  config.include.push_back({{2, 5}, {1}, 7, 3});
  const auto report = v::verify_theorem(v::TheoremId::T1, config, kSeed);
  std::string detail = std::to_string(report.violations.size()) + " violations in " +
                       std::to_string(report.samples_tried) + " samples";
  if (!report.violations.empty()) detail += "; first " + report.violations.front().instance["glued_generators"].dump();
  return {!report.violations.empty() && report.samples_tried <= kMutationSamples, detail};
}

Outcome property_suites() {
  numsg::props::Failures failures;
  const auto sample = numsg::props::standard_sample(kOracleSample, kSeed);
  for (const auto& s : sample) {
    numsg::props::check_core(s, failures);
    numsg::props::check_cone(s, failures);
  }
  const auto gluings = numsg::props::standard_gluings(kGluingSample, kSeed);
  for (const auto& g : gluings) numsg::props::check_gluing(g, failures);
  std::string detail = std::to_string(sample.size()) + " semigroups, " + std::to_string(gluings.size()) +
                       " gluings, " + std::to_string(failures.size()) + " failures";
  if (!failures.empty()) detail += "; first: " + failures.front();
  return {failures.empty(), detail};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {"1", "table 11,60,68,156 reproduces AP(M)..AP(5M) and CM", kTableSeconds,
       [] { return table_reproduction("11,60,68,156"); }},
      {"1c", "table 11,60,72,156 reproduces AP(M)..AP(5M) and CM", kTableSeconds,
       [] { return table_reproduction("11,60,72,156"); }},
      {"2", "non-CM tangent cones <6,15,7> and <5,8,28>", kExampleSeconds, non_cm_examples},
      {"2a", "non-CM tangent cone <6,15,7>", kExampleSeconds, non_cm_first},
      {"3", "order facts on <16,30,44,45,116>", kExampleSeconds, order_facts},
      {"4", "gluing classification", kExampleSeconds, classification},
      {"5", "oracle equivalence", kOracleSeconds, oracle_equivalence},
      {"6", "theorem suites T1..T10", kTheoremSeconds, theorem_suites},
      {"7", "mutation sensitivity", kTheoremSeconds, mutation},
      {"8", "property suites", kTheoremSeconds, property_suites},
  };

  std::vector<std::string> wanted(argv + 1, argv + argc);
  int failed = 0, ran = 0;
  for (const Criterion& c : criteria) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) continue;
    ++ran;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = elapsed < c.seconds;
    const bool pass = outcome.pass && in_time;
    failed += !pass;
    std::printf("[%s] criterion %s: %s (%s; %.3fs, limit %.0fs)\n", pass ? "PASS" : "FAIL", c.id.c_str(),
                c.title.c_str(), outcome.detail.c_str(), elapsed, c.seconds);
  }
  if (ran == 0) {
    std::printf("no criterion matched\n");
    return 2;
  }
  return failed == 0 ? 0 : 1;
}
