#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "numsg/cone.hpp"
#include "numsg/verify.hpp"

namespace numsg::verify {

using nlohmann::json;

namespace {

constexpr std::size_t kSamplerRetries = 1000;

Int uniform(std::mt19937_64& rng, Int lo, Int hi) {
  return std::uniform_int_distribution<Int>(lo, hi)(rng);
}

std::vector<Int> non_generator_members(const NumericalSemigroup& s, Int lo, Int hi) {
  std::vector<Int> out;
  for (Int n = lo; n <= hi; ++n) {
    if (s.contains(n) && !s.is_generator(n)) out.push_back(n);
  }
  return out;
}

}  // namespace

TheoremId parse_theorem(std::string_view id) {
  std::string upper(id);
  std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
  for (TheoremId t : kAllTheorems) {
    if (to_string(t) == upper) return t;
  }
  fail(ErrorCode::UnknownTheorem, "unknown theorem id '" + std::string(id) + "' (expected T1..T10)");
}

std::string to_string(TheoremId id) { return "T" + std::to_string(static_cast<int>(id) + 1); }

std::string_view describe(TheoremId id) {
  switch (id) {
    case TheoremId::T1: return "specific gluing: G(S) is CM iff G(S1) is CM";
    case TheoremId::T2: return "specific gluing, S2 symmetric and M-pure w.r.t. q: G(S) Gorenstein iff G(S1) Gorenstein";
    case TheoremId::T3: return "specific gluing, S1 with non-decreasing Hilbert function: so is S";
    case TheoremId::T4: return "extension with p < q: G(S) is CM and H is non-decreasing";
    case TheoremId::T5: return "extension of S1 with non-decreasing H: if H(S) decreases then ord_S1(p) < q < p";
    case TheoremId::T6: return "gluing: (S and S1 or S2 symmetric) iff (S1 and S2 symmetric)";
    case TheoremId::T7: return "gluing: AP(S, qx) = {q z1 + p z2 : z1 in AP(S1, x), z2 in AP(S2, q)}";
    case TheoremId::T8: return "specific gluing: ord_S(qx) = ord_S1(x), m(S) = q m_1, unique additive representations";
    case TheoremId::T9: return "CM tangent cone, S symmetric: the five M-purity / beta-symmetry statements agree";
    case TheoremId::T10: return "gcd(a_2, ..., a_n) > a_1: G(S) is CM and H is non-decreasing";
  }
  return "";
}

SemigroupSampler::SemigroupSampler(SamplerConfig config, std::uint64_t seed)
    : config_(std::move(config)), rng_(seed) {}

NumericalSemigroup SemigroupSampler::next() {
  const Int top = std::max<Int>(config_.max_generator, 2);
  if (config_.max_embedding_dim < 2 || top < 3 || uniform(rng_, 0, 15) == 0) {
    return NumericalSemigroup::naturals();
  }
  for (;;) {
    const std::size_t want =
        std::min<std::size_t>(uniform(rng_, 2, config_.max_embedding_dim), static_cast<std::size_t>(top - 1));
    std::vector<Int> gens;
    while (gens.size() < want) {
      const Int g = uniform(rng_, 2, top);
      if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
    }
    if (gcd_of(gens) != 1) continue;
    return NumericalSemigroup::from_generators(gens);
  }
}

GluingSampler::GluingSampler(SamplerConfig config, std::uint64_t seed)
    : config_(config), semigroups_(std::move(config), seed) {}

std::optional<GluingSpec> GluingSampler::next() {
  if (included_ < config_.include.size()) {
    const GluingInput& in = config_.include[included_++];
    return make_gluing(NumericalSemigroup::from_generators(in.s1), NumericalSemigroup::from_generators(in.s2),
                       in.p, in.q);
  }
  auto& rng = semigroups_.engine();
  for (std::size_t attempt = 0; attempt < kSamplerRetries; ++attempt) {
    const NumericalSemigroup s1 = semigroups_.next();
    const NumericalSemigroup s2 = config_.extensions_only || uniform(rng, 0, 2) == 0
                                      ? NumericalSemigroup::naturals()
                                      : semigroups_.next();
    const std::vector<Int> ps = non_generator_members(s1, 2, config_.max_pq);
    const std::vector<Int> qs = non_generator_members(s2, 2, config_.max_pq);
    if (ps.empty() || qs.empty()) continue;
    const Int p = ps[uniform(rng, 0, ps.size() - 1)];
    const Int q = qs[uniform(rng, 0, qs.size() - 1)];
    if (std::gcd(p, q) != 1) continue;
    try {
      GluingSpec g = make_gluing(s1, s2, p, q);
      if (g.glued.conductor() > config_.conductor_cap) continue;
      return g;
    } catch (const SemigroupError& e) {
      if (e.code() != ErrorCode::Overflow) throw;
    }
  }
  return std::nullopt;
}

std::vector<NumericalSemigroup> sample_semigroups(const SamplerConfig& config, std::uint64_t seed,
                                                  std::size_t count) {
  SemigroupSampler sampler(config, seed);
  std::vector<NumericalSemigroup> out;
  out.reserve(count);
  while (out.size() < count) out.push_back(sampler.next());
  return out;
}

std::vector<GluingSpec> sample_gluings(const SamplerConfig& config, std::uint64_t seed, std::size_t count) {
  GluingSampler sampler(config, seed);
  std::vector<GluingSpec> out;
  while (out.size() < count) {
    auto g = sampler.next();
    if (!g) break;
    out.push_back(std::move(*g));
  }
  return out;
}

namespace {

struct Outcome {
  bool hypothesis = false;
  std::optional<Violation> violation;
};

Outcome hit() { return {true, std::nullopt}; }
Outcome miss() { return {false, std::nullopt}; }
Outcome violated(json instance, json expected, json got) {
  return {true, Violation{std::move(instance), std::move(expected), std::move(got)}};
}

bool cm(const NumericalSemigroup& s) { return is_cm_tangent_cone(s); }
bool nondecreasing(const NumericalSemigroup& s) { return hilbert_function(s).nondecreasing; }

Outcome check_t1(const GluingSpec& g, bool drop_specific) {
  if (!g.flags.specific && !drop_specific) return miss();
  const bool lhs = cm(g.glued), rhs = cm(g.s1);
  if (lhs == rhs) return hit();
  return violated(to_json(g), {{"cm_glued", rhs}}, {{"cm_glued", lhs}, {"cm_s1", rhs}});
}

Outcome check_t2(const GluingSpec& g, bool drop_specific) {
  if (!g.flags.specific && !drop_specific) return miss();
  if (!is_symmetric(g.s2) || !relative_m_pure_symmetric(g.s2, g.q)) return miss();
  const bool lhs = is_gorenstein_tangent_cone(g.glued), rhs = is_gorenstein_tangent_cone(g.s1);
  if (lhs == rhs) return hit();
  return violated(to_json(g), {{"gorenstein_glued", rhs}}, {{"gorenstein_glued", lhs}, {"gorenstein_s1", rhs}});
}

Outcome check_t3(const GluingSpec& g, bool drop_specific) {
  if (!g.flags.specific && !drop_specific) return miss();
  if (!nondecreasing(g.s1)) return miss();
  const HilbertFunction h = hilbert_function(g.glued);
  if (h.nondecreasing) return hit();
  return violated(to_json(g), {{"classification", "nondecreasing"}}, {{"hilbert", to_json(h)}});
}

Outcome check_t4(const GluingSpec& g) {
  if (!g.flags.extension || !(g.p < g.q)) return miss();
  const bool is_cm = cm(g.glued);
  const bool grows = nondecreasing(g.glued);
  if (is_cm && grows) return hit();
  return violated(to_json(g), {{"cm", true}, {"nondecreasing", true}}, {{"cm", is_cm}, {"nondecreasing", grows}});
}

// Checked in the equivalent form: H(S1) non-decreasing implies
// H(S) non-decreasing or ord_S1(p) < q < p.
Outcome check_t5(const GluingSpec& g) {
  if (!g.flags.extension || !nondecreasing(g.s1)) return miss();
  const bool grows = nondecreasing(g.glued);
  const int ord_p = g.s1.ord(g.p);
  const bool window = static_cast<Int>(ord_p) < g.q && g.q < g.p;
  if (grows || window) return hit();
  return violated(to_json(g), {{"ord_s1_p_lt_q_lt_p", true}}, {{"nondecreasing", grows}, {"ord_s1_p", ord_p}});
}

Outcome check_t6(const GluingSpec& g) {
  const bool sym = is_symmetric(g.glued), sym1 = is_symmetric(g.s1), sym2 = is_symmetric(g.s2);
  const bool lhs = sym && (sym1 || sym2);
  const bool rhs = sym1 && sym2;
  if (lhs == rhs) return hit();
  return violated(to_json(g), {{"equivalent", true}},
                  {{"symmetric_glued", sym}, {"symmetric_s1", sym1}, {"symmetric_s2", sym2}});
}

Outcome check_t7(const GluingSpec& g, Int x) {
  json instance = to_json(g);
  instance["x"] = x;
  const AperySet ap1 = apery_set(g.s1, x);
  const AperySet ap2 = apery_set(g.s2, g.q);
  std::vector<Int> product;
  for (Int z1 : ap1.elements) {
    for (Int z2 : ap2.elements) product.push_back(g.q * z1 + g.p * z2);
  }
  std::sort(product.begin(), product.end());
  const std::vector<Int> direct = apery_set(g.glued, g.q * x).sorted();
  if (product != direct) return violated(instance, {{"apery", direct}}, {{"apery", product}});

  // Any representation q z1 + p z2 of an Apéry element has z1 in AP(S1, x).
  for (Int w : direct) {
    for (Int z2 = 0; g.p * z2 <= w; ++z2) {
      const Int rest = w - g.p * z2;
      if (rest % g.q != 0 || !g.s2.contains(z2)) continue;
      const Int z1 = rest / g.q;
      if (!g.s1.contains(z1)) continue;
      if (ap1.elements[z1 % x] != z1) {
        return violated(instance, {{"z1_in_apery_s1", true}}, {{"w", w}, {"z1", z1}, {"z2", z2}});
      }
    }
  }
  return hit();
}

Outcome check_t8(const GluingSpec& g, bool drop_specific) {
  if (!g.flags.specific && !drop_specific) return miss();
  const json instance = to_json(g);
  const Int expected_m = g.q * g.s1.multiplicity();
  if (g.glued.multiplicity() != expected_m) {
    return violated(instance, {{"multiplicity", expected_m}}, {{"multiplicity", g.glued.multiplicity()}});
  }
  const Int window1 = g.s1.conductor() + 2 * g.s1.multiplicity();
  for (Int x = 0; x <= window1; ++x) {
    if (!g.s1.contains(x)) continue;
    const int lhs = g.glued.ord(g.q * x), rhs = g.s1.ord(x);
    if (lhs != rhs) return violated(instance, {{"x", x}, {"ord_s1", rhs}}, {{"ord_glued_qx", lhs}});
  }
  if (g.flags.specific) {
    const Int window = g.glued.conductor() + 2 * g.glued.multiplicity();
    for (Int u = 0; u <= window; ++u) {
      if (!g.glued.contains(u)) continue;
      const Representation rep = unique_representation(g, u);
      if (!rep.additive) {
        return violated(instance, {{"u", u}, {"additive", true}}, {{"z1", rep.z1}, {"z2", rep.z2}});
      }
    }
  }
  return hit();
}

Outcome check_t9(const NumericalSemigroup& s) {
  if (!cm(s) || !is_symmetric(s)) return miss();
  const Int e = s.multiplicity();
  bool beta_any = false, beta_all = true, pure_any = false, pure_all = true;
  json detail = json::array();
  for (Int k = 1; k <= 3; ++k) {
    const bool beta = is_beta_symmetric(beta_profile(s, k * e));
    const bool m_pure = purity(s, k * e).m_pure;
    beta_any = beta_any || beta;
    beta_all = beta_all && beta;
    pure_any = pure_any || m_pure;
    pure_all = pure_all && m_pure;
    detail.push_back({{"k", k}, {"beta_symmetric", beta}, {"m_pure", m_pure}});
  }
  const bool m_pure = purity(s, e).m_pure;
  const bool gorenstein = is_gorenstein_tangent_cone(s);
  const bool agree = m_pure == beta_any && m_pure == beta_all && m_pure == pure_all && m_pure == pure_any &&
                     gorenstein == m_pure;
  if (agree) return hit();
  return violated(to_json(s), {{"all_equal", true}}, {{"m_pure", m_pure}, {"gorenstein", gorenstein}, {"by_k", detail}});
}

Outcome check_t10(const NumericalSemigroup& s) {
  const auto& gens = s.generators();
  if (gens.size() < 2) return miss();
  const Int rest_gcd = gcd_of(std::span<const Int>(gens).subspan(1));
  if (rest_gcd <= gens.front()) return miss();
  const bool is_cm = cm(s);
  const bool grows = nondecreasing(s);
  if (is_cm && grows) return hit();
  return violated(to_json(s), {{"cm", true}, {"nondecreasing", true}}, {{"cm", is_cm}, {"nondecreasing", grows}});
}

// <a_1> + d * S1 with a_1 < d coprime to d; the only family where the
// gcd hypothesis of T10 is reachable at desk-scale bounds.
std::optional<NumericalSemigroup> draw_gcd_family(SemigroupSampler& sampler, const SamplerConfig& config) {
  auto& rng = sampler.engine();
  for (std::size_t attempt = 0; attempt < kSamplerRetries; ++attempt) {
    const NumericalSemigroup base = sampler.next();
    if (config.max_pq < 3) return std::nullopt;
    const Int d = uniform(rng, 3, config.max_pq);
    const Int a1 = uniform(rng, 2, d - 1);
    if (std::gcd(a1, d) != 1) continue;
    std::vector<Int> gens{a1};
    for (Int m : base.generators()) gens.push_back(checked_mul(d, m));
    NumericalSemigroup s = NumericalSemigroup::from_generators(gens);
    if (s.conductor() > config.conductor_cap) continue;
    return s;
  }
  return std::nullopt;
}

}  // namespace

TheoremReport verify_theorem(TheoremId id, const SamplerConfig& config, std::uint64_t seed) {
  if (config.samples == 0 || config.max_embedding_dim == 0 || config.max_generator == 0 || config.max_pq == 0) {
    fail(ErrorCode::BoundsTooSmall, "sampler bounds must be positive");
  }
  SamplerConfig effective = config;
  if (id == TheoremId::T4 || id == TheoremId::T5) effective.extensions_only = true;
  const std::size_t budget = config.max_attempts ? config.max_attempts : 50 * config.samples;

  TheoremReport report;
  report.id = id;
  report.seed = seed;
  report.bounds = config;

  GluingSampler gluings(effective, seed);
  SemigroupSampler semigroups(effective, seed ^ 0x9e3779b97f4a7c15ULL);
  std::mt19937_64 aux(seed + 1);

  while (report.hypothesis_hits < config.samples && report.samples_tried < budget) {
    Outcome outcome;
    json instance;
    bool exhausted = false;
    try {
      switch (id) {
        case TheoremId::T9:
        case TheoremId::T10: {
          std::optional<NumericalSemigroup> s;
          if (id == TheoremId::T10) {
            s = draw_gcd_family(semigroups, effective);
          } else if (report.samples_tried % 2 == 0) {
            s = semigroups.next();
          } else if (auto g = gluings.next()) {
            s = g->glued;
          }
          if (!s) {
            exhausted = true;
            break;
          }
          instance = to_json(*s);
          outcome = id == TheoremId::T9 ? check_t9(*s) : check_t10(*s);
          break;
        }
        default: {
          auto g = gluings.next();
          if (!g) {
            exhausted = true;
            break;
          }
          instance = to_json(*g);
          switch (id) {
            case TheoremId::T1: outcome = check_t1(*g, config.drop_specific); break;
            case TheoremId::T2: outcome = check_t2(*g, config.drop_specific); break;
            case TheoremId::T3: outcome = check_t3(*g, config.drop_specific); break;
            case TheoremId::T4: outcome = check_t4(*g); break;
            case TheoremId::T5: outcome = check_t5(*g); break;
            case TheoremId::T6: outcome = check_t6(*g); break;
            case TheoremId::T7: {
              const std::vector<Int> xs = non_generator_members(g->s1, 1, config.max_generator);
              std::vector<Int> choices(g->s1.generators());
              choices.insert(choices.end(), xs.begin(), xs.end());
              outcome = check_t7(*g, choices[uniform(aux, 0, choices.size() - 1)]);
              break;
            }
            case TheoremId::T8: outcome = check_t8(*g, config.drop_specific); break;
            default: break;
          }
        }
      }
    } catch (const InvariantViolation& e) {
      outcome = violated(instance, {{"invariant", "holds"}}, {{"invariant", e.what()}});
    }
    if (exhausted) break;
    ++report.samples_tried;
    if (outcome.hypothesis) ++report.hypothesis_hits;
    if (outcome.violation) report.violations.push_back(std::move(*outcome.violation));
  }

  if (report.hypothesis_hits == 0) {
    fail(ErrorCode::BoundsTooSmall, to_string(id) + ": no sampled instance satisfied the hypothesis within " +
                                        std::to_string(report.samples_tried) + " draws");
  }
  return report;
}

json to_json(const SamplerConfig& config) {
  json include = json::array();
  for (const GluingInput& in : config.include) {
    include.push_back({{"s1", in.s1}, {"s2", in.s2}, {"p", in.p}, {"q", in.q}});
  }
  return {{"max_embedding_dim", config.max_embedding_dim},
          {"max_generator", config.max_generator},
          {"max_pq", config.max_pq},
          {"samples", config.samples},
          {"max_attempts", config.max_attempts},
          {"conductor_cap", config.conductor_cap},
          {"extensions_only", config.extensions_only},
          {"drop_specific", config.drop_specific},
          {"include", include}};
}

json to_json(const TheoremReport& report) {
  json violations = json::array();
  for (const Violation& v : report.violations) {
    violations.push_back({{"instance", v.instance}, {"expected", v.expected}, {"got", v.got}});
  }
  return {{"id", to_string(report.id)},
          {"description", describe(report.id)},
          {"samples_tried", report.samples_tried},
          {"hypothesis_hits", report.hypothesis_hits},
          {"violations", violations},
          {"seed", report.seed},
          {"bounds", to_json(report.bounds)}};
}

}  // namespace numsg::verify
