#pragma once

#include <compare>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "quatdirac/weights.hpp"

namespace quatdirac {

/// Integer partition; trailing zeros are trimmed.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<Int> parts);
  Partition(std::initializer_list<Int> parts) : Partition(std::vector<Int>(parts)) {}
  /// Accepts a weakly decreasing non-negative weight of any rank.
  static Partition from_weight(const Weight& w);

  const std::vector<Int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  Int size() const noexcept;
  /// Part i, or 0 past the end.
  Int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }
  bool empty() const noexcept { return parts_.empty(); }

  Partition conjugate() const;
  /// Young-diagram containment.
  bool contains(const Partition& other) const noexcept;
  /// Zero-padded to the given rank; throws if the partition is longer.
  Weight to_weight(std::size_t rank) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<Int> parts_;
};

/// Partitions of `size` with at most `max_length` parts, each at most
/// `max_part` (negative = unbounded).  Reverse lexicographic order.
std::vector<Partition> partitions_of(Int size, std::size_t max_length, Int max_part = -1);

/// Number of semistandard tableaux of the given shape and content.
Int kostka(const Partition& shape, std::vector<Int> content);

/// Littlewood-Richardson coefficient c^lam_{mu,nu} by counting LR tableaux of
/// shape lam/mu and content nu.
Int lr_coeff(const Partition& lam, const Partition& mu, const Partition& nu);

/// s_mu * s_nu restricted to partitions with at most max_rows rows.
std::map<Partition, Int> lr_product(const Partition& mu, const Partition& nu,
                                    std::size_t max_rows);

/// Multiplicity of E_gamma in E_nu (x) E_alpha for GL(k): nu, gamma dominant
/// integral of rank k (entries may be negative), alpha a partition.
Int gl_tensor_coeff(const Weight& gamma, const Weight& nu, const Partition& alpha);

/// E_g1 (x) E_g2 for U(k); weights are dominant of rank k.
std::map<Weight, Int> tensor_u(std::size_t k, const Weight& g1, const Weight& g2);

/// S^d(C^k (x) C^m) = sum over these lam of E_lam (x) E_lam (Cauchy).
std::vector<Partition> sym_cauchy(Int d, std::size_t k, std::size_t m);

/// S^d(wedge^2 C^k) = sum over these partitions of 2d (even column lengths,
/// at most k rows), each with multiplicity one.
std::vector<Partition> sym_wedge2(Int d, std::size_t k);

/// Restriction of E_lam from GL(2s) to Sp(2s): Sp-dominant weight (rank s) to
/// multiplicity.  Computed by expanding the GL character on the Sp weight
/// lattice and extracting irreducible constituents with the Weyl denominator.
std::map<Weight, Int> gl_to_sp(const Partition& lam, std::size_t s);

/// Weight multiplicity of the Sp(2s) weight y in E_lam restricted from GL(2s).
Int gl_to_sp_weight_multiplicity(const Partition& lam, std::size_t s, const Weight& y);

struct CharBlock {
  int k;   // U(k) factor
  Int b;   // character det^b
};

/// Multiplicity of E_gamma (U(k), k = sum of block ranks) in the module
/// induced from the characters det^{b_i} of prod U(k_i): the iterated LR
/// coefficient of the rectangles (b_i^{k_i}).  gamma may have negative
/// entries; everything is shifted by a power of det first.
Int ind_char_ktypes(const std::vector<CharBlock>& blocks, const Weight& gamma);

enum class Group { GL, Sp };

/// Weyl dimension formula.  GL: GL(rank hw).  Sp: Sp(2 * rank hw).
Int weyl_dim(Group group, const Weight& hw);

/// (left weight, right weight) -> multiplicity.
using DecompTable = std::map<std::pair<Weight, Weight>, Int>;

namespace table_cache {

/// Writes every memoized LR coefficient and GL->Sp branching table, one per
/// line in canonical sorted order:
///   LR 3,2,1|2,1|2,1 = 2
///   BR 2,1|2 = (1):1,(2,1):1
/// The empty partition is written 0.
void save(std::ostream& os);

/// Loads lines written by save().  LR records are recomputed and must match;
/// BR records must pass the dimension check and agree with anything already
/// computed.  Bad lines throw std::runtime_error naming the line.  Returns the
/// number of records loaded.
std::size_t load(std::istream& is);

/// Drops every memoized table, including the Blattner-side ones.
void clear();

std::size_t lr_entries();
std::size_t branching_entries();

}  // namespace table_cache

}  // namespace quatdirac
