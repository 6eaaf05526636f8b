#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace altmot
{

/// Integer partition with parts stored weakly decreasing.
///
/// Used both as a cycle type of a permutation and as a Schur label. The
/// ordering defined by operator< is the canonical order of the library:
/// first by size, then reverse lexicographic within one size, so that
/// partitions_of(4) lists (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
class Partition
{
public:
  Partition() = default;

  // Parts may be given in any order; zero parts are rejected.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  /// The partition (1^n).
  static Partition column(int n);

  const std::vector<int> &parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  int multiplicity(int part) const noexcept;
  int even_parts() const noexcept;
  int odd_parts() const noexcept;

  /// Sign of any permutation with this cycle type, i.e. (-1)^{e(λ)}.
  int sign() const noexcept { return even_parts() % 2 == 0 ? 1 : -1; }

  /// Partition obtained by multiplying all parts by k.
  Partition scaled(int k) const;
  /// Union of the multisets of parts (the cycle type of a product p_λ p_μ).
  Partition joined(const Partition &other) const;
  /// Removes one occurrence of `part`; throws if absent.
  Partition without_part(int part) const;
  Partition conjugate() const;

  std::string to_string() const;

  friend bool operator==(const Partition &a, const Partition &b) noexcept
  {
    return a.parts_ == b.parts_;
  }
  friend bool operator<(const Partition &a, const Partition &b) noexcept;

private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// All partitions of n in canonical (reverse lexicographic) order.
std::vector<Partition> partitions_of(int n);

/// Number of partitions of n.
std::int64_t partition_count(int n);

/// z_λ = ∏ i^{m_i} m_i!, the order of the centralizer of a permutation of
/// cycle type λ.
mpz_class z_of(const Partition &lambda);

/// Irreducible characters of the symmetric group on n letters, computed once
/// per n by the Murnaghan–Nakayama rule.
class CharacterTable
{
public:
  explicit CharacterTable(int n);

  int degree() const noexcept { return n_; }
  const std::vector<Partition> &partitions() const noexcept { return parts_; }
  std::size_t index_of(const Partition &lambda) const;

  /// χ^λ(μ).
  std::int64_t operator()(const Partition &lambda, const Partition &mu) const;
  std::int64_t at(std::size_t lambda, std::size_t mu) const
  {
    return values_[lambda * parts_.size() + mu];
  }

private:
  int n_;
  std::vector<Partition> parts_;
  std::vector<std::int64_t> values_;
};

/// Shared, lazily built table for S_n. Thread-safe; each table is built once.
std::shared_ptr<const CharacterTable> character_table(int n);

/// χ^λ(μ) via the cached table. Throws std::invalid_argument if |λ| != |μ|.
std::int64_t character(const Partition &lambda, const Partition &mu);

std::int64_t euler_phi(std::int64_t n);
int moebius(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);

/// Permutation of {1, …, n} in one-line notation: image(i) = σ(i).
class Permutation
{
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// Canonical representative of a cycle type: consecutive cycles
  /// (1 2 … λ₁)(λ₁+1 …)….
  static Permutation from_cycle_type(const Partition &lambda);
  /// The adjacent transposition (i i+1), 1 ≤ i < n.
  static Permutation adjacent(int n, int i);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int> &images() const noexcept { return images_; }

  /// (σ ∘ τ)(i) = σ(τ(i)).
  Permutation compose(const Permutation &tau) const;
  Permutation inverse() const;
  Partition cycle_type() const;
  int sign() const { return cycle_type().sign(); }

  /// Word in adjacent transpositions i₁ i₂ … with σ = s_{i₁} s_{i₂} ⋯.
  std::vector<int> adjacent_word() const;

  friend bool operator==(const Permutation &, const Permutation &) = default;

private:
  std::vector<int> images_;
};

/// Set partition of {1, …, n}. Blocks are sorted and ordered by their least
/// element.
class SetPartition
{
public:
  SetPartition() = default;
  SetPartition(int n, std::vector<std::vector<int>> blocks);

  int ground_size() const noexcept { return n_; }
  const std::vector<std::vector<int>> &blocks() const noexcept { return blocks_; }
  int block_count() const noexcept { return static_cast<int>(blocks_.size()); }
  /// Index of the block containing element i (1-based element).
  int block_of(int i) const { return block_index_[static_cast<std::size_t>(i - 1)]; }

  /// True if every block of *this lies inside a block of `coarser`.
  bool refines(const SetPartition &coarser) const;

  std::string to_string() const;

  friend bool operator==(const SetPartition &a, const SetPartition &b) noexcept
  {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_;
  }
  friend bool operator<(const SetPartition &a, const SetPartition &b) noexcept
  {
    return a.blocks_ < b.blocks_;
  }

private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_index_;
};

inline constexpr int kMaxSetPartitionSize = 12;

/// All set partitions of {1..n}; n is capped at kMaxSetPartitionSize.
std::vector<SetPartition> set_partitions(int n);

/// μ(0̂, P) in the partition lattice: ∏_B (-1)^{|B|-1} (|B|-1)!.
std::int64_t lattice_mobius(const SetPartition &p);

struct StablePartition
{
  SetPartition partition;
  /// block_permutation[b] is the block that σ maps block b onto.
  std::vector<int> block_permutation;
};

/// Set partitions P with σ(P) = P, with the induced permutation of blocks.
std::vector<StablePartition> stable_set_partitions(const Permutation &sigma);

/// Möbius function μ(0̂, P) of the subposet of σ-stable set partitions,
/// indexed like the input list. The input must contain the finest partition
/// and be closed under the relevant refinement (as stable_set_partitions is).
std::vector<std::int64_t> subposet_mobius(std::span<const StablePartition> stable);

} // namespace altmot
