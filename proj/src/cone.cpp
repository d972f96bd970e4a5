#include "numsg/cone.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace numsg {

namespace {

Int positive_member(const NumericalSemigroup& s, Int x) {
  if (x == 0 || !s.contains(x)) {
    fail(ErrorCode::NotAMember, std::to_string(x) + " is not a positive member of the semigroup");
  }
  return x;
}

// l_x(S) given the reduction number and a view covering [0, r * m_d + x].
int l_value_with(const NumericalSemigroup& s, const OrderView& orders, std::size_t r, Int x) {
  const Int scan = checked_mul(r, s.largest_generator());
  const int ord_x = orders.ord(x);
  int best = 0;
  for (Int t = 0; t <= scan; ++t) {
    const int ord_t = orders[t];
    if (ord_t < 0 || static_cast<std::size_t>(ord_t) > r) continue;
    best = std::max(best, orders[t + x] - ord_x - ord_t);
  }
  return best;
}

// w <= w' in AP(S, x) under the plain (or M-) ordering, excluding w' == w.
std::vector<Int> maximal_elements(const NumericalSemigroup& s, Int x, bool m_order) {
  const std::vector<Int> ap = apery_set(s, x).sorted();
  OrderView orders;
  if (m_order) orders = s.orders_up_to(ap.back());
  std::vector<Int> out;
  for (std::size_t i = 0; i < ap.size(); ++i) {
    const Int w = ap[i];
    bool dominated = false;
    for (std::size_t j = i + 1; j < ap.size() && !dominated; ++j) {
      const Int diff = ap[j] - w;
      if (!s.contains(diff)) continue;
      dominated = !m_order || orders[ap[j]] == orders[w] + orders[diff];
    }
    if (!dominated) out.push_back(w);
  }
  return out;
}

bool same_order(const NumericalSemigroup& s, const std::vector<Int>& elements) {
  if (elements.empty()) return true;
  const int first = s.ord(elements.front());
  return std::all_of(elements.begin(), elements.end(), [&](Int w) { return s.ord(w) == first; });
}

}  // namespace

std::size_t reduction_number(const NumericalSemigroup& s) {
  const Int e = s.multiplicity();
  std::vector<AperySet> rows = ideal_apery_rows(s, e, 1);
  for (std::size_t r = 0;; ++r) {
    const auto& cur = rows[r].elements;
    const auto& next = rows[r + 1].elements;
    bool stable = true;
    for (Int c = 0; c < e && stable; ++c) stable = next[c] == cur[c] + e;
    if (stable) {
      ensure_invariant(r + 1 <= e, "reduction number exceeds e - 1");
      return r;
    }
    // Extend by one more row.
    AperySet row{e, r + 2, std::vector<Int>(e)};
    for (Int c = 0; c < e; ++c) {
      Int best = std::numeric_limits<Int>::max();
      for (Int g : s.generators()) best = std::min(best, checked_add(next[(c + e - g % e) % e], g));
      row.elements[c] = best;
    }
    rows.push_back(std::move(row));
  }
}

int l_value(const NumericalSemigroup& s, Int x) {
  positive_member(s, x);
  const std::size_t r = reduction_number(s);
  const Int scan = checked_mul(r, s.largest_generator());
  return l_value_with(s, s.orders_up_to(checked_add(scan, x)), r, x);
}

int big_l(const NumericalSemigroup& s) {
  const std::size_t r = reduction_number(s);
  const Int scan = checked_mul(r, s.largest_generator());
  const OrderView orders = s.orders_up_to(checked_mul(scan, 2));
  int best = 0;
  for (Int x = 1; x <= scan; ++x) {
    const int ord_x = orders[x];
    if (ord_x < 0 || static_cast<std::size_t>(ord_x) > r) continue;
    best = std::max(best, l_value_with(s, orders, r, x));
  }
  return best;
}

BetaProfile beta_profile(const NumericalSemigroup& s, Int x) {
  const AperySet ap = apery_set(s, positive_member(s, x));
  const OrderView orders = s.orders_up_to(*std::max_element(ap.elements.begin(), ap.elements.end()));
  BetaProfile profile{x, 0, {}};
  for (Int w : ap.elements) {
    const int o = orders.ord(w);
    if (static_cast<std::size_t>(o) >= profile.beta.size()) profile.beta.resize(o + 1, 0);
    ++profile.beta[o];
    profile.d = std::max(profile.d, o);
  }
  return profile;
}

bool is_beta_symmetric(const BetaProfile& profile) {
  const int d = profile.d;
  for (int i = 0; i <= (d + 1) / 2 && i <= d; ++i) {
    if (profile.beta[i] != profile.beta[d - i]) return false;
  }
  return true;
}

std::vector<Int> max_apery(const NumericalSemigroup& s, Int x) {
  return maximal_elements(s, positive_member(s, x), false);
}

std::vector<Int> max_m_apery(const NumericalSemigroup& s, Int x) {
  return maximal_elements(s, positive_member(s, x), true);
}

bool is_symmetric(const NumericalSemigroup& s) {
  const Int e = s.multiplicity();
  const bool by_maximum = max_apery(s, e).size() == 1;
  const std::vector<Int> ap = apery_set(s, e).sorted();
  bool by_pairing = true;
  for (std::size_t i = 0; i < ap.size() && by_pairing; ++i) {
    by_pairing = ap[i] + ap[ap.size() - 1 - i] == ap.back();
  }
  ensure_invariant(by_maximum == by_pairing, "symmetry characterizations disagree");
  return by_maximum;
}

Purity purity(const NumericalSemigroup& s, Int x) {
  const std::vector<Int> plain = max_apery(s, x);
  const std::vector<Int> m_max = max_m_apery(s, x);
  Purity out{same_order(s, plain), same_order(s, m_max)};
  ensure_invariant(out.m_pure == (out.pure && plain == m_max),
                   "M-purity is not equivalent to purity with Max = Max_M");
  return out;
}

bool apery_cm_criterion(const NumericalSemigroup& s) {
  const Int e = s.multiplicity();
  const std::size_t r = reduction_number(s);
  const AperySet ap = apery_set(s, e);
  const Int top = *std::max_element(ap.elements.begin(), ap.elements.end());
  const OrderView orders = s.orders_up_to(checked_add(top, checked_mul(r, e)));
  for (Int w : ap.elements) {
    const int base = orders.ord(w);
    for (std::size_t a = 1; a <= r; ++a) {
      if (orders[w + a * e] != base + static_cast<int>(a)) return false;
    }
  }
  return true;
}

bool is_cm_tangent_cone(const NumericalSemigroup& s) {
  const bool by_l = l_value(s, s.multiplicity()) == 0;
  ensure_invariant(by_l == apery_cm_criterion(s), "CM criteria disagree");
  return by_l;
}

bool is_gorenstein_tangent_cone(const NumericalSemigroup& s) {
  const Int e = s.multiplicity();
  const bool gorenstein = is_cm_tangent_cone(s) && is_symmetric(s) && purity(s, e).m_pure;
  if (gorenstein) {
    ensure_invariant(is_beta_symmetric(beta_profile(s, e)) && is_beta_symmetric(beta_profile(s, 2 * e)),
                     "Gorenstein tangent cone with asymmetric beta profile");
  }
  return gorenstein;
}

bool relative_m_pure_symmetric(const NumericalSemigroup& s, Int x) {
  positive_member(s, x);
  if (!is_symmetric(s)) fail(ErrorCode::NotSymmetric, "semigroup is not symmetric");
  const bool singleton = max_m_apery(s, x).size() == 1;
  ensure_invariant(singleton == is_beta_symmetric(beta_profile(s, x)),
                   "relative M-purity disagrees with beta symmetry");
  return singleton;
}

HilbertFunction hilbert_function(const NumericalSemigroup& s) {
  const std::size_t r = reduction_number(s);
  const Int scan = checked_mul(r, s.largest_generator());
  const OrderView orders = s.orders_up_to(scan);
  HilbertFunction h;
  h.values.assign(r + 1, 0);
  for (Int t = 0; t <= scan; ++t) {
    const int o = orders[t];
    if (o >= 0 && static_cast<std::size_t>(o) <= r) ++h.values[o];
  }
  h.stable_value = s.multiplicity();
  ensure_invariant(h.values[r] == h.stable_value, "H(r) differs from the multiplicity");
  for (std::size_t n = 0; n + 1 < h.values.size(); ++n) {
    if (h.values[n + 1] < h.values[n]) {
      h.nondecreasing = false;
      h.first_decrease = n;
      break;
    }
  }
  return h;
}

AperyTable apery_table(const NumericalSemigroup& s) {
  const Int e = s.multiplicity();
  AperyTable table;
  table.base = e;
  table.reduction_number = reduction_number(s);
  const std::vector<AperySet> rows = ideal_apery_rows(s, e, table.reduction_number + 1);

  table.column_residues.resize(e);
  std::iota(table.column_residues.begin(), table.column_residues.end(), Int{0});
  const auto& first_ideal = rows[1].elements;
  std::sort(table.column_residues.begin(), table.column_residues.end(),
            [&](Int a, Int b) { return first_ideal[a] < first_ideal[b]; });

  for (const AperySet& row : rows) {
    std::vector<Int> ordered;
    ordered.reserve(e);
    for (Int c : table.column_residues) ordered.push_back(row.elements[c]);
    table.rows.push_back(std::move(ordered));
  }

  for (std::size_t j = 0; j < e; ++j) {
    bool risen = false;
    std::size_t n = 1;
    while (n < table.rows.size()) {
      if (table.rows[n][j] != table.rows[n - 1][j]) {
        risen = true;
        ++n;
        continue;
      }
      Landing run{j, n - 1, 0, risen};
      while (n < table.rows.size() && table.rows[n][j] == table.rows[n - 1][j]) {
        ++run.length;
        ++n;
      }
      table.landings.push_back(run);
    }
  }
  return table;
}

std::string render_table(const AperyTable& table) {
  auto label = [](std::size_t n) {
    if (n == 0) return std::string("AP(S)");
    if (n == 1) return std::string("AP(M)");
    return "AP(" + std::to_string(n) + "M)";
  };
  std::size_t label_width = 0;
  std::size_t width = 1;
  for (std::size_t n = 0; n < table.rows.size(); ++n) {
    label_width = std::max(label_width, label(n).size());
    for (Int v : table.rows[n]) width = std::max(width, std::to_string(v).size());
  }
  std::ostringstream out;
  for (std::size_t n = 0; n < table.rows.size(); ++n) {
    const std::string name = label(n);
    out << name << std::string(label_width - name.size(), ' ');
    for (Int v : table.rows[n]) {
      const std::string cell = std::to_string(v);
      out << " | " << std::string(width - cell.size(), ' ') << cell;
    }
    out << '\n';
  }
  return out.str();
}

nlohmann::json to_json(const AperyTable& table) {
  return {{"base", table.base}, {"rows", table.rows}, {"reduction_number", table.reduction_number}};
}

nlohmann::json to_json(const HilbertFunction& h) {
  nlohmann::json out{{"values", h.values},
                     {"stable_value", h.stable_value},
                     {"classification", h.nondecreasing ? "nondecreasing" : "decreasing-somewhere"}};
  out["first_decrease"] = h.first_decrease ? nlohmann::json(*h.first_decrease) : nlohmann::json(nullptr);
  return out;
}

nlohmann::json to_json(const BetaProfile& beta) {
  return {{"base", beta.base}, {"d", beta.d}, {"beta", beta.beta}};
}

nlohmann::json to_json(const NumericalSemigroup& s) {
  return {{"generators", s.generators()},
          {"multiplicity", s.multiplicity()},
          {"embedding_dimension", s.embedding_dimension()},
          {"frobenius", s.frobenius()},
          {"conductor", s.conductor()}};
}

}  // namespace numsg
