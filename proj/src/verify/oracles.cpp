#include <algorithm>
#include <limits>

#include "numsg/verify.hpp"

namespace numsg::verify {

namespace {

std::vector<Int> sorted_unique(std::span<const Int> generators) {
  std::vector<Int> gens(generators.begin(), generators.end());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.empty() || gens.front() == 0) fail(ErrorCode::InvalidArgument, "generators must be positive");
  return gens;
}

// Coefficients are chosen from the largest generator down. The count still
// reachable from `rest` is at most rest / g_0, and that bound only shrinks as
// the current coefficient grows, so the loop can stop at the first branch
// that cannot beat the incumbent.
void search(const std::vector<Int>& gens, std::size_t index, Int rest, int count, int& best) {
  const Int smallest = gens.front();
  if (index == 0) {
    if (rest % smallest == 0) best = std::max(best, count + static_cast<int>(rest / smallest));
    return;
  }
  const Int g = gens[index];
  for (Int c = 0; c * g <= rest; ++c) {
    const Int left = rest - c * g;
    const int bound = count + static_cast<int>(c + left / smallest);
    if (best >= 0 && bound <= best) break;
    search(gens, index - 1, left, count + static_cast<int>(c), best);
  }
}

}  // namespace

std::vector<bool> sieve_members(std::span<const Int> generators, Int bound) {
  std::vector<bool> reachable(bound + 1, false);
  reachable[0] = true;
  for (Int n = 1; n <= bound; ++n) {
    for (Int g : generators) {
      if (g <= n && reachable[n - g]) {
        reachable[n] = true;
        break;
      }
    }
  }
  return reachable;
}

int brute_ord(std::span<const Int> generators, Int s) {
  const std::vector<Int> gens = sorted_unique(generators);
  int best = -1;
  search(gens, gens.size() - 1, s, 0, best);
  if (best < 0) fail(ErrorCode::NotRepresentable, std::to_string(s) + " is not representable");
  return best;
}

AperySet brute_apery(std::span<const Int> generators, Int x) {
  const std::vector<Int> gens = sorted_unique(generators);
  if (x == 0) fail(ErrorCode::NotAMember, "Apéry base must be positive");
  Int bound = 2 * x + gens.back();
  for (;;) {
    const std::vector<bool> members = sieve_members(gens, bound);
    if (x <= bound && !members[x]) fail(ErrorCode::NotAMember, std::to_string(x) + " is not a member");
    AperySet ap{x, 0, std::vector<Int>(x, std::numeric_limits<Int>::max())};
    std::size_t filled = 0;
    for (Int n = 0; n <= bound && filled < x; ++n) {
      if (members[n] && ap.elements[n % x] == std::numeric_limits<Int>::max()) {
        ap.elements[n % x] = n;
        ++filled;
      }
    }
    if (filled == x) return ap;
    bound = checked_mul(bound, 2);
  }
}

bool brute_is_cm_tangent_cone(std::span<const Int> generators) {
  const std::vector<Int> gens = sorted_unique(generators);
  const Int e = gens.front();
  const Int window = (e - 1) * gens.back();
  const std::vector<bool> members = sieve_members(gens, window);
  for (Int s = 0; s <= window; ++s) {
    if (!members[s]) continue;
    if (brute_ord(gens, s + e) != brute_ord(gens, s) + 1) return false;
  }
  return true;
}

}  // namespace numsg::verify
