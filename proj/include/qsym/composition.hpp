#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qsym {

// A composition is a finite sequence of positive integers. The empty
// sequence is the unique composition of 0; it serializes as "0".
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts);

  // Parses "3,1,2"; "0" and "" give the empty composition.
  static Composition parse(std::string_view text);
  // Drops every zero of a weak composition, keeping the positive parts in
  // order. Conversions from weak data are always spelled out like this.
  static Composition from_weak(std::span<const int> weak);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }
  int max_part() const noexcept;  // 0 for the empty composition
  int operator[](int i) const { return parts_[static_cast<size_t>(i)]; }

  std::string str() const;

  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

// Weak compositions keep their zeros in place. They show up as Garsia
// vectors and as the zero-padded inputs of the ranked-addition map.
using WeakComposition = std::vector<int>;

// Weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](int i) const { return parts_[static_cast<size_t>(i)]; }

  // The reversal (smallest part first), as a composition.
  Composition reversed() const;
  Composition as_composition() const { return Composition(parts_); }

  std::string str() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// A permutation of {1..k} in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> word);

  const std::vector<int>& word() const noexcept { return word_; }
  int degree() const noexcept { return static_cast<int>(word_.size()); }

  std::string str() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

Partition sort_to_partition(const Composition& alpha);

// Total order on compositions of one fixed size: first compare the partition
// rearrangements lexicographically, then compare the words reading right to
// left. Words of different lengths are aligned at their right ends (zero
// padding on the left). Rejects inputs of different sizes.
std::strong_ordering revlex_compare(const Composition& a, const Composition& b);
bool revlex_greater(const Composition& a, const Composition& b);

// Whether every leading partial sum of lhs weakly exceeds that of rhs.
// Rejects partitions of different sizes.
bool dominates(const Partition& lhs, const Partition& rhs);

// Left-to-right relabeling of a positive word into a permutation: the
// occurrences of the smallest value become 1,2,... in reading order, then
// the next value, and so on. Rejects words containing zeros.
Permutation standardize(const WeakComposition& word);

// The lexicographically least positive word whose standardization is sigma.
Composition destandardize(const Permutation& sigma);

// destandardize(sigma) minus (1,...,1), zeros kept in place.
WeakComposition garsia_vector(const Permutation& sigma);

// True iff for every i with 1 < i <= max part there are positions s < t
// with alpha_s = i and alpha_t = i-1.
bool is_inverting(const Composition& alpha);

// The unique factorization alpha = gamma . k^{i_k} ... 2^{i_2} 1^{i_1} with
// every i_j >= 1, gamma free of the values 1..k, and k maximal (possibly 0).
struct PureFactorization {
  Composition prefix;               // gamma
  int staircase_max = 0;            // k
  std::vector<int> multiplicities;  // i_1..i_k (multiplicities[j-1] = i_j)

  bool pure() const { return staircase_max % 2 == 0; }
};
PureFactorization pure_factorization(const Composition& alpha);
bool is_pure(const Composition& alpha);

// Inserts between positions k and k+1 (0 <= k <= length) the part
//   m_k = max({alpha_i : i <= k} union {1 + alpha_j : j > k}),
// indices 1-based. Rejects non-inverting input.
Composition insert_part(const Composition& alpha, int k);

// Canonical order used for mixed-size enumerations: size ascending, then
// revlex descending.
bool canonical_less(const Composition& a, const Composition& b);

// All inverting compositions of length exactly n, built by the part
// insertion recursion, in canonical order. There are n! of them.
std::vector<Composition> enumerate_inverting(int n);

// The pure and inverting compositions of length at most n, in canonical
// order. Computed both by the recursion on enumerate_inverting and by the
// direct pure-and-inverting filter; throws if the two routes disagree.
std::vector<Composition> enumerate_B(int n);

// Whether beta's rows embed into gamma's rows as an order-preserving
// subsequence with gamma_{i_j} >= beta_j cellwise.
bool contains(const Composition& gamma, const Composition& beta);

// Positions of a weak composition ordered from largest part to smallest,
// where among equal parts the later position counts as the larger one.
// Every ranked reordering in the library goes through this single helper.
std::vector<int> ranked_positions(const WeakComposition& w);

// Generators shared across the library and its tests.
std::vector<Composition> compositions_of(int d);                 // any length
std::vector<Composition> compositions_of(int d, int max_parts);  // length <= max_parts
std::vector<Partition> partitions_of(int d);
std::vector<Partition> partitions_of(int d, int max_parts);
std::vector<Permutation> all_permutations(int k);

}  // namespace qsym
