#include "numsg/semigroup.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

namespace numsg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonCoprime: return "NonCoprime";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NotAMember: return "NotAMember";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::PNotMember: return "PNotMember";
    case ErrorCode::QNotMember: return "QNotMember";
    case ErrorCode::PIsGenerator: return "PIsGenerator";
    case ErrorCode::QIsGenerator: return "QIsGenerator";
    case ErrorCode::NotSpecific: return "NotSpecific";
    case ErrorCode::NotRepresentable: return "NotRepresentable";
    case ErrorCode::UnknownTheorem: return "UnknownTheorem";
    case ErrorCode::BoundsTooSmall: return "BoundsTooSmall";
  }
  return "Unknown";
}

namespace {

constexpr Int kUnreached = std::numeric_limits<Int>::max();

// Least element congruent to each residue mod `modulus` in the monoid
// generated by `gens` (kUnreached when the class is never hit).
std::vector<Int> residue_distances(std::span<const Int> gens, Int modulus) {
  std::vector<Int> dist(modulus, kUnreached);
  using Entry = std::pair<Int, Int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  dist[0] = 0;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    const auto [d, node] = queue.top();
    queue.pop();
    if (d != dist[node]) continue;
    for (Int g : gens) {
      const Int next = checked_add(d, g);
      const Int target = (node + g % modulus) % modulus;
      if (next < dist[target]) {
        dist[target] = next;
        queue.emplace(next, target);
      }
    }
  }
  return dist;
}

std::shared_ptr<const std::vector<std::int32_t>> fill_orders(
    std::span<const Int> gens, const std::vector<std::int32_t>* previous, Int bound) {
  auto data = std::make_shared<std::vector<std::int32_t>>();
  data->reserve(bound + 1);
  if (previous != nullptr) data->assign(previous->begin(), previous->end());
  auto& orders = *data;
  if (orders.empty()) orders.push_back(0);
  for (Int s = orders.size(); s <= bound; ++s) {
    std::int32_t best = -1;
    for (Int g : gens) {
      if (g > s) break;
      best = std::max(best, orders[s - g]);
    }
    orders.push_back(best < 0 ? -1 : best + 1);
  }
  return data;
}

}  // namespace

int OrderView::ord(Int s) const {
  const std::int32_t value = (*data_)[s];
  if (value < 0) fail(ErrorCode::NotAMember, std::to_string(s) + " is not in the semigroup");
  return value;
}

OrderTable::OrderTable(std::vector<Int> generators, Int initial_bound)
    : generators_(std::move(generators)), initial_bound_(initial_bound) {}

OrderView OrderTable::view(Int bound) const {
  std::lock_guard lock(mutex_);
  if (!data_ || data_->size() <= bound) {
    Int target = std::max(bound, initial_bound_);
    if (data_) target = std::max(target, checked_mul(data_->size(), 2));
    data_ = fill_orders(generators_, data_.get(), target);
  }
  return OrderView(data_);
}

int OrderTable::ord(Int s) const { return view(s).ord(s); }

Int OrderTable::bound() const {
  std::lock_guard lock(mutex_);
  return data_ ? data_->size() - 1 : 0;
}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const Int> raw) {
  if (raw.empty()) fail(ErrorCode::EmptyInput, "no generators given");
  std::vector<Int> sorted(raw.begin(), raw.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.front() == 0) fail(ErrorCode::InvalidArgument, "generators must be positive");
  if (gcd_of(sorted) != 1) {
    fail(ErrorCode::NonCoprime, "generators have gcd " + std::to_string(gcd_of(sorted)) + " > 1");
  }

  // Keep a generator only if the smaller kept ones cannot reach it.
  const Int e = sorted.front();
  std::vector<Int> kept{e};
  std::vector<Int> dist = residue_distances(kept, e);
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    const Int g = sorted[i];
    if (dist[g % e] <= g) continue;
    kept.push_back(g);
    dist = residue_distances(kept, e);
  }

  NumericalSemigroup s;
  s.generators_ = std::move(kept);
  s.apery_e_ = std::move(dist);
  const Int top = *std::max_element(s.apery_e_.begin(), s.apery_e_.end());
  if (top > static_cast<Int>(std::numeric_limits<std::int64_t>::max())) {
    fail(ErrorCode::Overflow, "Frobenius number exceeds the integer width");
  }
  s.frobenius_ = static_cast<std::int64_t>(top) - static_cast<std::int64_t>(e);
  const Int initial = checked_add(s.conductor(), checked_mul(2, s.largest_generator()));
  s.orders_ = std::make_shared<OrderTable>(s.generators_, initial);
  return s;
}

bool NumericalSemigroup::is_generator(Int n) const {
  return std::binary_search(generators_.begin(), generators_.end(), n);
}

bool NumericalSemigroup::contains_nonnegative(Int n) const {
  if (n >= conductor()) return true;
  return apery_e_[n % multiplicity()] <= n;
}

std::vector<Int> NumericalSemigroup::max_expression(Int s) const {
  const int total = ord(s);
  const std::size_t d = generators_.size();
  // best[i][v]: most generators from {m_i, ..., m_d} summing to v, or -1.
  std::vector<std::vector<std::int32_t>> best(d + 1, std::vector<std::int32_t>(s + 1, -1));
  best[d][0] = 0;
  for (std::size_t i = d; i-- > 0;) {
    const Int g = generators_[i];
    for (Int v = 0; v <= s; ++v) {
      std::int32_t value = best[i + 1][v];
      if (v >= g && best[i][v - g] >= 0) value = std::max(value, best[i][v - g] + 1);
      best[i][v] = value;
    }
  }

  std::vector<Int> coeffs(d, 0);
  Int rest = s;
  std::int32_t need = total;
  for (std::size_t i = 0; i < d; ++i) {
    const Int g = generators_[i];
    for (Int c = rest / g + 1; c-- > 0;) {
      const Int left = rest - c * g;
      if (best[i + 1][left] >= 0 && best[i + 1][left] == need - static_cast<std::int32_t>(c)) {
        coeffs[i] = c;
        rest = left;
        need -= static_cast<std::int32_t>(c);
        break;
      }
    }
  }
  ensure_invariant(rest == 0 && need == 0, "max_expression did not exhaust s");
  return coeffs;
}

std::vector<Int> NumericalSemigroup::gaps() const {
  std::vector<Int> out;
  for (std::int64_t n = 1; n <= frobenius_; ++n) {
    if (!contains(n)) out.push_back(static_cast<Int>(n));
  }
  return out;
}

std::vector<Int> AperySet::sorted() const {
  std::vector<Int> out = elements;
  std::sort(out.begin(), out.end());
  return out;
}

AperySet apery_set(const NumericalSemigroup& s, Int x) {
  if (x == 0 || !s.contains(x)) {
    fail(ErrorCode::NotAMember, "Apéry base " + std::to_string(x) + " is not a positive member");
  }
  AperySet ap{x, 0, residue_distances(s.generators(), x)};
  ensure_invariant(std::none_of(ap.elements.begin(), ap.elements.end(),
                                [](Int w) { return w == kUnreached; }),
                   "residue class unreachable in a numerical semigroup");
  return ap;
}

std::vector<AperySet> ideal_apery_rows(const NumericalSemigroup& s, Int x, std::size_t last_level) {
  std::vector<AperySet> rows;
  rows.reserve(last_level + 1);
  rows.push_back(apery_set(s, x));
  for (std::size_t level = 1; level <= last_level; ++level) {
    const auto& prev = rows.back().elements;
    AperySet row{x, level, std::vector<Int>(x, kUnreached)};
    for (Int c = 0; c < x; ++c) {
      for (Int g : s.generators()) {
        const Int from = (c + x - g % x) % x;
        row.elements[c] = std::min(row.elements[c], checked_add(prev[from], g));
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

AperySet ideal_apery_set(const NumericalSemigroup& s, Int x, std::size_t level) {
  return std::move(ideal_apery_rows(s, x, level).back());
}

}  // namespace numsg
