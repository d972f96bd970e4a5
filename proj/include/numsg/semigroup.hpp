#pragma once

#include <concepts>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <type_traits>
#include <vector>

#include "numsg/arith.hpp"

namespace numsg {

/// Immutable snapshot of tabulated orders on [0, bound]. Entry -1 marks a gap.
class OrderView {
 public:
  OrderView() = default;
  explicit OrderView(std::shared_ptr<const std::vector<std::int32_t>> data) : data_(std::move(data)) {}

  Int bound() const { return data_ ? data_->size() - 1 : 0; }
  bool covers(Int s) const { return data_ && s < data_->size(); }

  /// Raw entry: ord(s) for members, -1 for gaps. s must be covered.
  std::int32_t operator[](Int s) const { return (*data_)[s]; }

  /// ord(s); throws NotAMember for gaps.
  int ord(Int s) const;

 private:
  std::shared_ptr<const std::vector<std::int32_t>> data_;
};

/// Memoized order function of one semigroup.
///
/// Orders are filled by ord(s) = 1 + max{ord(s - m_i) : s - m_i in S}.
/// The table grows on demand (at least doubling) and is never extrapolated.
/// Growth swaps in a fresh immutable vector under a mutex, so views handed
/// out earlier stay valid and concurrent callers always agree.
class OrderTable {
 public:
  OrderTable(std::vector<Int> generators, Int initial_bound);

  int ord(Int s) const;
  /// Snapshot covering at least [0, bound].
  OrderView view(Int bound) const;
  Int bound() const;

 private:
  std::vector<Int> generators_;
  Int initial_bound_;
  mutable std::mutex mutex_;
  mutable std::shared_ptr<const std::vector<std::int32_t>> data_;
};

/// A numerical semigroup given by its minimal system of generators.
///
/// Construction reduces any generating set to the minimal one and computes
/// AP(S, m_1), from which membership and the Frobenius number follow.
/// Copies share the order cache.
class NumericalSemigroup {
 public:
  /// Errors: EmptyInput, InvalidArgument (a zero), NonCoprime, Overflow.
  static NumericalSemigroup from_generators(std::span<const Int> raw);
  static NumericalSemigroup from_generators(std::initializer_list<Int> raw) {
    return from_generators(std::span<const Int>(raw.begin(), raw.size()));
  }
  static NumericalSemigroup naturals() { return from_generators({1}); }

  const std::vector<Int>& generators() const { return generators_; }
  Int multiplicity() const { return generators_.front(); }
  Int largest_generator() const { return generators_.back(); }
  std::size_t embedding_dimension() const { return generators_.size(); }
  /// Largest integer not in S; -1 for the naturals.
  std::int64_t frobenius() const { return frobenius_; }
  Int conductor() const { return static_cast<Int>(frobenius_ + 1); }
  bool is_naturals() const { return generators_.size() == 1; }
  bool is_generator(Int n) const;

  template <std::integral T>
  bool contains(T n) const {
    if constexpr (std::is_signed_v<T>) {
      if (n < 0) return false;
    }
    return contains_nonnegative(static_cast<Int>(n));
  }

  /// AP(S, m_1) indexed by residue mod m_1.
  const std::vector<Int>& multiplicity_apery() const { return apery_e_; }

  /// ord_S(s); throws NotAMember.
  int ord(Int s) const { return orders_->ord(s); }
  OrderView orders_up_to(Int bound) const { return orders_->view(bound); }

  /// Maximal expression of s: coefficients r_i (aligned with generators())
  /// with sum r_i m_i = s and sum r_i = ord(s). Among all maximal expressions
  /// the lexicographically largest is returned.
  std::vector<Int> max_expression(Int s) const;

  /// Positive integers not in S, ascending.
  std::vector<Int> gaps() const;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.generators_ == b.generators_;
  }

 private:
  NumericalSemigroup() = default;
  bool contains_nonnegative(Int n) const;

  std::vector<Int> generators_;
  std::vector<Int> apery_e_;
  std::int64_t frobenius_ = -1;
  std::shared_ptr<OrderTable> orders_;
};

/// Apéry set of S (ideal_level 0) or of the ideal nM (ideal_level n) with
/// respect to base. elements[r] is the least element of the underlying set
/// congruent to r modulo base.
struct AperySet {
  Int base = 0;
  std::size_t ideal_level = 0;
  std::vector<Int> elements;

  std::vector<Int> sorted() const;
};

/// AP(S, x) by single-source shortest paths on Z/xZ, one arc of weight m_i
/// per generator. Errors: NotAMember (x not a positive member).
AperySet apery_set(const NumericalSemigroup& s, Int x);

/// Apéry set of nM with respect to x: row n of the Apéry table over x.
/// Uses nM = union of (m_i + (n-1)M), 0M = S.
AperySet ideal_apery_set(const NumericalSemigroup& s, Int x, std::size_t level);

/// All rows 0..last_level, sharing the recurrence.
std::vector<AperySet> ideal_apery_rows(const NumericalSemigroup& s, Int x, std::size_t last_level);

}  // namespace numsg
