#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace quatdirac {

using Int = std::int64_t;

/// Exact integer vector in the basis e_1..e_n of t*.  The rank is the length
/// of the coordinate vector and is checked whenever two weights meet.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<Int> coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<Int> coords) : coords_(coords) {}

  static Weight zero(std::size_t rank) { return Weight(std::vector<Int>(rank, 0)); }

  std::size_t rank() const noexcept { return coords_.size(); }
  bool empty() const noexcept { return coords_.empty(); }

  Int operator[](std::size_t i) const { return coords_[i]; }
  Int at(std::size_t i) const { return coords_.at(i); }

  std::span<const Int> coords() const noexcept { return coords_; }
  const std::vector<Int>& vec() const noexcept { return coords_; }

  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

  /// Sum of the coordinates.
  Int total() const noexcept;
  Int norm_sq() const noexcept;

  /// Coordinates [first, first + count).
  Weight slice(std::size_t first, std::size_t count) const;

  Weight operator-() const;
  friend Weight operator+(const Weight& a, const Weight& b);
  friend Weight operator-(const Weight& a, const Weight& b);

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  std::string to_string() const;

 private:
  std::vector<Int> coords_;
};

/// Concatenation (a; b).
Weight concat(const Weight& a, const Weight& b);

/// Throws std::invalid_argument unless both weights have the same rank.
void require_same_rank(const Weight& a, const Weight& b, const char* where);

/// Regular infinitesimal character in the Dirac-series regime, stored through
/// its restriction to t.  The optional full form keeps the 2n coordinates
/// (lambda_1..lambda_2n) as doubled integers.
class InfChar {
 public:
  InfChar() = default;

  /// Entries must be strictly decreasing and >= 1.
  static InfChar from_restricted(Weight restricted);

  /// Full form as doubled half-integers.  Requires a vanishing a-part and an
  /// even (integral) t-part satisfying the regularity condition above.
  static InfChar from_full_doubled(std::vector<Int> doubled);

  const Weight& restricted() const noexcept { return restricted_; }
  const std::optional<std::vector<Int>>& full_doubled() const noexcept { return full_; }
  std::size_t rank() const noexcept { return restricted_.rank(); }

  friend bool operator==(const InfChar& a, const InfChar& b) {
    return a.restricted_ == b.restricted_;
  }

 private:
  Weight restricted_;
  std::optional<std::vector<Int>> full_;
};

/// Half sum of compact positive roots: (n, n-1, ..., 1).
Weight rho_c(std::size_t n);
/// Half sum of noncompact positive roots: (n-1, ..., 1, 0).
Weight rho_n(std::size_t n);

struct Restriction {
  Weight t_part;
  Weight a_part;
};

/// Splits a 2n-coordinate vector into its t and a components:
/// t_k = x_k - x_{2n-k+1}, a_k = x_k + x_{2n-k+1}.  Linear, so the units of
/// the input (plain or doubled) carry over to the output.
Restriction restrict_to_ta(std::span<const Int> full);

/// Highest weight of a K = Sp(n) type: weakly decreasing, non-negative.
bool is_ktype(const Weight& w) noexcept;

/// PRV component {tau - rho_n} of E_tau (x) S_G.
Weight prv(const Weight& tau);

/// ||{tau - rho_n} + rho_c||^2.
Int spin_norm_sq(const Weight& tau);

}  // namespace quatdirac
