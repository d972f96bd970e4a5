#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "numsg/semigroup.hpp"

// Tangent-cone analytics. Throughout, e is the multiplicity, r the reduction
// number and nM the n-th power of the maximal ideal M = S \ {0}.
namespace numsg {

/// Least r with (r+1)M = e + rM. Always at most e - 1.
std::size_t reduction_number(const NumericalSemigroup& s);

/// l_x(S) = max{ord(s + x) - ord(x) - ord(s) : s in S, ord(s) <= r}.
/// Members with ord(s) <= r lie in [0, r * m_d], so the scan is finite.
int l_value(const NumericalSemigroup& s, Int x);

/// L(S) = max{l_x(S) : ord(x) <= r}.
int big_l(const NumericalSemigroup& s);

struct BetaProfile {
  Int base = 0;
  int d = 0;
  /// beta[i] = #{w in AP(S, base) : ord(w) = i}, i = 0..d.
  std::vector<std::size_t> beta;
};

BetaProfile beta_profile(const NumericalSemigroup& s, Int x);

/// beta_i = beta_{d-i} for 0 <= i <= floor((d+1)/2).
bool is_beta_symmetric(const BetaProfile& profile);

/// Maximal elements of AP(S, x) under w <= w' iff w' - w in S. Ascending.
std::vector<Int> max_apery(const NumericalSemigroup& s, Int x);

/// Maximal elements under w <=_M w' iff w' - w in S and
/// ord(w') = ord(w) + ord(w' - w). Ascending; contains max_apery.
std::vector<Int> max_m_apery(const NumericalSemigroup& s, Int x);

/// Checked through both a singleton Max AP(S, e) and the pairing
/// a_i + a_{e-1-i} = a_{e-1} of the sorted Apéry set.
bool is_symmetric(const NumericalSemigroup& s);

struct Purity {
  bool pure = false;
  bool m_pure = false;
};

/// Purity with respect to x. m_pure <=> pure && Max == Max_M is enforced.
Purity purity(const NumericalSemigroup& s, Int x);

/// ord(w + a e) = ord(w) + a for all w in AP(S, e), 1 <= a <= r.
bool apery_cm_criterion(const NumericalSemigroup& s);

/// l_e(S) == 0, cross-checked against apery_cm_criterion.
bool is_cm_tangent_cone(const NumericalSemigroup& s);

/// CM tangent cone, S symmetric and M-pure. When true the beta profiles at
/// e and 2e are checked for symmetry as well.
bool is_gorenstein_tangent_cone(const NumericalSemigroup& s);

/// For symmetric S: Max_M AP(S, x) is a singleton, cross-checked against
/// beta-symmetry. Errors: NotAMember, NotSymmetric.
bool relative_m_pure_symmetric(const NumericalSemigroup& s, Int x);

struct HilbertFunction {
  /// H(0), ..., H(r); H(n) = e for every n >= r.
  std::vector<std::size_t> values;
  std::size_t stable_value = 0;
  bool nondecreasing = true;
  /// First n with H(n + 1) < H(n).
  std::optional<std::size_t> first_decrease;
};

HilbertFunction hilbert_function(const NumericalSemigroup& s);

/// Maximal run of equal consecutive entries in one column of the table.
struct Landing {
  std::size_t column = 0;
  std::size_t first_row = 0;  // row whose value repeats
  std::size_t length = 0;     // number of following rows with the same value
  bool after_rise = false;    // the column had already increased before the run
};

struct AperyTable {
  Int base = 0;
  std::size_t reduction_number = 0;
  /// Residues mod e in column order (ascending by the AP(M) row).
  std::vector<Int> column_residues;
  /// rows[n][j]: least element of nM in class column_residues[j]; n = 0..r+1.
  std::vector<std::vector<Int>> rows;
  std::vector<Landing> landings;
};

AperyTable apery_table(const NumericalSemigroup& s);

/// Text layout: one labelled row per ideal, AP(S), AP(M), AP(2M), ...
std::string render_table(const AperyTable& table);

nlohmann::json to_json(const AperyTable& table);
nlohmann::json to_json(const HilbertFunction& h);
nlohmann::json to_json(const BetaProfile& beta);
nlohmann::json to_json(const NumericalSemigroup& s);

}  // namespace numsg
