#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace vspace {

/// Subset of a ground set of at most 32 elements, bit i <-> element i.
class SubsetMask {
 public:
  using word_type = std::uint32_t;

  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(word_type bits) : bits_(bits) {}

  /// Mask from element indices, e.g. `SubsetMask::of({0, 2})`.
  static constexpr SubsetMask of(std::initializer_list<unsigned> indices) {
    word_type bits = 0;
    for (unsigned i : indices) bits |= word_type{1} << i;
    return SubsetMask(bits);
  }

  /// The full set of an n-element ground set.
  static constexpr SubsetMask full(unsigned n) {
    return SubsetMask(n >= 32 ? ~word_type{0} : (word_type{1} << n) - 1);
  }

  constexpr word_type bits() const { return bits_; }
  constexpr std::size_t index() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool test(unsigned i) const { return (bits_ >> i) & 1U; }

  constexpr bool is_subset_of(SubsetMask other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool is_superset_of(SubsetMask other) const { return other.is_subset_of(*this); }
  constexpr bool intersects(SubsetMask other) const { return (bits_ & other.bits_) != 0; }

  constexpr SubsetMask with(unsigned i) const { return SubsetMask(bits_ | (word_type{1} << i)); }
  constexpr SubsetMask without(unsigned i) const { return SubsetMask(bits_ & ~(word_type{1} << i)); }

  friend constexpr SubsetMask operator|(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits_ | b.bits_); }
  friend constexpr SubsetMask operator&(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr SubsetMask operator-(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits_ & ~b.bits_); }
  friend constexpr SubsetMask operator^(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits_ ^ b.bits_); }

  friend constexpr bool operator==(SubsetMask, SubsetMask) = default;
  friend constexpr auto operator<=>(SubsetMask, SubsetMask) = default;

 private:
  word_type bits_ = 0;
};

/// Calls `fn(S)` for every S with S ⊆ `within`, in ascending mask order.
template <typename Fn>
void for_each_submask(SubsetMask within, Fn&& fn) {
  const auto m = within.bits();
  SubsetMask::word_type s = 0;
  do {
    fn(SubsetMask(s));
    s = (s - m) & m;
  } while (s != 0);
}

/// Calls `fn(Y)` for every Y with lo ⊆ Y ⊆ hi, ascending. Requires lo ⊆ hi.
template <typename Fn>
void for_each_between(SubsetMask lo, SubsetMask hi, Fn&& fn) {
  for_each_submask(hi - lo, [&](SubsetMask s) { fn(lo | s); });
}

/// Same as `for_each_between`, stopping at the first Y for which `pred(Y)` is true.
template <typename Pred>
std::optional<SubsetMask> find_between(SubsetMask lo, SubsetMask hi, Pred&& pred) {
  const auto m = (hi - lo).bits();
  SubsetMask::word_type s = 0;
  do {
    const SubsetMask y = lo | SubsetMask(s);
    if (pred(y)) return y;
    s = (s - m) & m;
  } while (s != 0);
  return std::nullopt;
}

/// Ordered list of distinct element labels; element i is bit i.
class GroundSet {
 public:
  static constexpr unsigned kMaxSize = 20;

  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);

  /// Ground set labelled "1".."n".
  static GroundSet numbered(unsigned n);

  unsigned size() const { return static_cast<unsigned>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(unsigned i) const { return labels_.at(i); }
  std::optional<unsigned> find(const std::string& label) const;

  SubsetMask full() const { return SubsetMask::full(size()); }
  std::size_t subset_count() const { return std::size_t{1} << size(); }
  bool contains(SubsetMask x) const { return x.is_subset_of(full()); }
  SubsetMask complement(SubsetMask x) const { return full() - x; }

  /// Throws UnknownLabel. Duplicate labels collapse.
  SubsetMask encode(const std::vector<std::string>& labels) const;
  /// Labels of x in ground-set order.
  std::vector<std::string> decode(SubsetMask x) const;
  /// "{a,b}" rendering for reports.
  std::string format(SubsetMask x) const;

  friend bool operator==(const GroundSet& a, const GroundSet& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, unsigned> index_;
};

}  // namespace vspace
