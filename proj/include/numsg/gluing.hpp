#pragma once

#include <utility>
#include <vector>

#include "json.hpp"
#include "numsg/semigroup.hpp"

namespace numsg {

struct GluingFlags {
  bool valid = false;
  bool nice = false;      // q = a * n_1 with 1 < a <= ord_{S1}(p)
  bool specific = false;  // ord_{S2}(q) + l_q(S2) <= ord_{S1}(p)
  bool extension = false; // S2 is the naturals
  bool nice_extension = false;
};

/// S = <q m_1, ..., q m_d, p n_1, ..., p n_k> glued from S1 and S2.
struct GluingSpec {
  NumericalSemigroup s1;
  NumericalSemigroup s2;
  Int p = 0;
  Int q = 0;
  NumericalSemigroup glued;
  GluingFlags flags;
};

/// Validates and classifies a gluing. Checks membership, then that p and q
/// are not minimal generators, then coprimality. Errors: PNotMember,
/// QNotMember, PIsGenerator, QIsGenerator, NotCoprime, Overflow.
GluingSpec make_gluing(const NumericalSemigroup& s1, const NumericalSemigroup& s2, Int p, Int q);

/// Second route to "nice with CM G(S2)": ord_{S2}(q) <= ord_{S1}(p) and
/// ord_{S2}(y + q) = ord(y) + ord(q) for all y (i.e. l_q(S2) = 0).
bool nice_with_cm_by_orders(const GluingSpec& g);

struct FactorPair {
  Int z1 = 0;  // in AP(S1, x)
  Int z2 = 0;  // in AP(S2, q)
  Int value = 0;  // q z1 + p z2, an element of AP(S, q x)
};

/// AP(S, q x) as {q z1 + p z2 : z1 in AP(S1, x), z2 in AP(S2, q)}, indexed
/// by residue of z1 mod x (outer) and of z2 mod q (inner). Verified against
/// the directly computed AP(S, q x). Errors: NotAMember.
std::vector<FactorPair> apery_factorization(const GluingSpec& g, Int x);

struct Representation {
  Int z1 = 0;
  Int z2 = 0;
  bool additive = false;  // ord_S(u) == ord_{S1}(z1) + ord_{S2}(z2)
};

/// The unique u = q z1 + p z2 with z2 in AP(S2, q). Refuses non-specific
/// gluings. Errors: NotSpecific, NotAMember.
Representation unique_representation(const GluingSpec& g, Int u);

/// ord_S(q x) == ord_{S1}(x). Errors: NotSpecific, NotAMember.
bool ord_transfer_check(const GluingSpec& g, Int x);

struct FreeStep {
  Int q = 0;
  Int p = 0;
  GluingFlags flags;
};

struct FreeBuild {
  NumericalSemigroup semigroup;
  std::vector<FreeStep> steps;
  /// Every step is a nice extension, so the tangent cone is CM by induction.
  bool cm_by_induction = false;
};

/// Iterated extensions starting from the naturals. Each step (q, p) replaces
/// the current S1 by <q m_1, ..., q m_d, p>. Errors from make_gluing are
/// rethrown with the 1-based step index in the message.
FreeBuild build_free(const std::vector<std::pair<Int, Int>>& steps);

nlohmann::json to_json(const GluingFlags& flags);
nlohmann::json to_json(const GluingSpec& g);

}  // namespace numsg
