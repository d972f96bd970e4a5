#include "numsg/gluing.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "numsg/cone.hpp"

namespace numsg {

namespace {

Int mul_mod(Int a, Int b, Int m) {
  return static_cast<Int>(static_cast<unsigned __int128>(a) * b % m);
}

}  // namespace

GluingSpec make_gluing(const NumericalSemigroup& s1, const NumericalSemigroup& s2, Int p, Int q) {
  if (p == 0 || !s1.contains(p)) {
    fail(ErrorCode::PNotMember, "p = " + std::to_string(p) + " is not a positive member of S1");
  }
  if (q == 0 || !s2.contains(q)) {
    fail(ErrorCode::QNotMember, "q = " + std::to_string(q) + " is not a positive member of S2");
  }
  if (s1.is_generator(p)) {
    fail(ErrorCode::PIsGenerator, "p = " + std::to_string(p) + " is a minimal generator of S1");
  }
  if (s2.is_generator(q)) {
    fail(ErrorCode::QIsGenerator, "q = " + std::to_string(q) + " is a minimal generator of S2");
  }
  if (std::gcd(p, q) != 1) {
    fail(ErrorCode::NotCoprime, "gcd(p, q) = " + std::to_string(std::gcd(p, q)) + " is not 1");
  }

  std::vector<Int> combined;
  for (Int m : s1.generators()) combined.push_back(checked_mul(q, m));
  for (Int n : s2.generators()) combined.push_back(checked_mul(p, n));

  GluingSpec g{s1, s2, p, q, NumericalSemigroup::from_generators(combined), {}};
  std::sort(combined.begin(), combined.end());
  ensure_invariant(g.glued.generators() == combined, "glued generators are not a minimal system");
  ensure_invariant(g.glued.multiplicity() == std::min(q * s1.multiplicity(), p * s2.multiplicity()),
                   "glued multiplicity differs from min(q m_1, p n_1)");

  const int ord_p = s1.ord(p);
  const int ord_q = s2.ord(q);
  const int l_q = l_value(s2, q);
  const Int n1 = s2.multiplicity();

  GluingFlags& f = g.flags;
  f.valid = true;
  f.nice = q % n1 == 0 && q / n1 > 1 && q / n1 <= static_cast<Int>(ord_p);
  f.specific = ord_q + l_q <= ord_p;
  f.extension = s2.is_naturals();
  f.nice_extension = f.extension && f.nice;

  ensure_invariant((f.nice && is_cm_tangent_cone(s2)) == nice_with_cm_by_orders(g),
                   "nice-gluing characterizations disagree");
  return g;
}

bool nice_with_cm_by_orders(const GluingSpec& g) {
  return g.s2.ord(g.q) <= g.s1.ord(g.p) && l_value(g.s2, g.q) == 0;
}

std::vector<FactorPair> apery_factorization(const GluingSpec& g, Int x) {
  const AperySet ap1 = apery_set(g.s1, x);
  const AperySet ap2 = apery_set(g.s2, g.q);
  std::vector<FactorPair> pairs;
  pairs.reserve(ap1.elements.size() * ap2.elements.size());
  for (Int z1 : ap1.elements) {
    for (Int z2 : ap2.elements) {
      pairs.push_back({z1, z2, checked_add(checked_mul(g.q, z1), checked_mul(g.p, z2))});
    }
  }

  const AperySet direct = apery_set(g.glued, checked_mul(g.q, x));
  std::vector<Int> values;
  values.reserve(pairs.size());
  for (const FactorPair& pair : pairs) values.push_back(pair.value);
  std::sort(values.begin(), values.end());
  ensure_invariant(std::adjacent_find(values.begin(), values.end()) == values.end(),
                   "Apéry factorization produced a repeated value");
  ensure_invariant(values == direct.sorted(), "Apéry factorization differs from AP(S, qx)");
  return pairs;
}

Representation unique_representation(const GluingSpec& g, Int u) {
  if (!g.flags.specific) fail(ErrorCode::NotSpecific, "gluing is not specific");
  if (!g.glued.contains(u)) fail(ErrorCode::NotAMember, std::to_string(u) + " is not in the glued semigroup");

  // p z2 = u (mod q) picks the residue class of z2.
  const AperySet ap2 = apery_set(g.s2, g.q);
  const Int residue = mul_mod(u % g.q, mod_inverse(g.p % g.q, g.q), g.q);
  const Int z2 = ap2.elements[residue];
  const Int pz2 = checked_mul(g.p, z2);
  ensure_invariant(pz2 <= u && (u - pz2) % g.q == 0, "no representation with z2 in AP(S2, q)");
  const Int z1 = (u - pz2) / g.q;
  ensure_invariant(g.s1.contains(z1), "representation has z1 outside S1");
  return {z1, z2, g.glued.ord(u) == g.s1.ord(z1) + g.s2.ord(z2)};
}

bool ord_transfer_check(const GluingSpec& g, Int x) {
  if (!g.flags.specific) fail(ErrorCode::NotSpecific, "gluing is not specific");
  if (!g.s1.contains(x)) fail(ErrorCode::NotAMember, std::to_string(x) + " is not in S1");
  return g.glued.ord(checked_mul(g.q, x)) == g.s1.ord(x);
}

FreeBuild build_free(const std::vector<std::pair<Int, Int>>& steps) {
  const NumericalSemigroup naturals = NumericalSemigroup::naturals();
  FreeBuild out{naturals, {}, true};
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto [q, p] = steps[i];
    try {
      GluingSpec g = make_gluing(out.semigroup, naturals, p, q);
      out.steps.push_back({q, p, g.flags});
      out.cm_by_induction = out.cm_by_induction && g.flags.nice_extension;
      out.semigroup = std::move(g.glued);
    } catch (const SemigroupError& e) {
      throw SemigroupError(e.code(), "step " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return out;
}

nlohmann::json to_json(const GluingFlags& flags) {
  return {{"valid", flags.valid},
          {"nice", flags.nice},
          {"specific", flags.specific},
          {"extension", flags.extension},
          {"nice_extension", flags.nice_extension}};
}

nlohmann::json to_json(const GluingSpec& g) {
  return {{"s1", g.s1.generators()},
          {"s2", g.s2.generators()},
          {"p", g.p},
          {"q", g.q},
          {"glued_generators", g.glued.generators()},
          {"flags", to_json(g.flags)}};
}

}  // namespace numsg
