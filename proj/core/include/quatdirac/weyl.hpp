#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "quatdirac/weights.hpp"

namespace quatdirac {

/// Element of the hyperoctahedral group W(C_n) = W(k, t).
///
/// Action convention: position i of w.v receives signs[i] * v[perm[i]].
/// With this convention (w1 * w2).v == w1.(w2.v).
class SignedPermutation {
 public:
  SignedPermutation() = default;
  SignedPermutation(std::vector<std::size_t> perm, std::vector<int> signs);

  static SignedPermutation identity(std::size_t n);

  std::size_t rank() const noexcept { return perm_.size(); }
  const std::vector<std::size_t>& perm() const noexcept { return perm_; }
  const std::vector<int>& signs() const noexcept { return signs_; }

  SignedPermutation inverse() const;
  friend SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b);

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<std::size_t> perm_;
  std::vector<int> signs_;
};

Weight act(const SignedPermutation& w, const Weight& v);

struct DominantRep {
  Weight dominant;
  SignedPermutation witness;  // act(witness, v) == dominant
};

/// Dominant W(C_n)-conjugate: absolute values sorted descending.  The witness
/// comes from a stable sort, so ties resolve by original position.
DominantRep dominant_rep(const Weight& v);

/// Calls visit(u) once for every distinct u in the W(C_n)-orbit of v.
/// Returning false from visit stops the enumeration.
void for_each_in_orbit(const Weight& v, const std::function<bool(const Weight&)>& visit);
std::vector<Weight> orbit(const Weight& v);
/// 2^{#nonzero} * (multinomial of |v| entries).
std::uint64_t orbit_size(const Weight& v);

/// Number of positive roots of C_n that pair negatively with x; for regular
/// x = w.rho_c this is the Coxeter length of w.
int negative_root_count(const Weight& x);
int length(const SignedPermutation& w);

/// Minimal-length coset representatives W^1 for W(l cap k) \ W(k), where
/// l cap k = u(k) + sp(r), n = k + r.  Sorted lexicographically by w.rho_c.
/// Throws std::invalid_argument for n > 12.
std::vector<SignedPermutation> coset_reps_W1(std::size_t k, std::size_t r);
/// 2^k * C(n, k).
std::uint64_t coset_count_W1(std::size_t k, std::size_t r);

/// True iff x is strictly dominant for the positive roots of l cap k:
/// x_1 > ... > x_k and x_{k+1} > ... > x_n > 0.
bool is_levi_regular_dominant(const Weight& x, std::size_t k);
/// Weakly dominant version of the same condition (used on w(tau+rho_c)-rho_c).
bool is_levi_dominant(const Weight& x, std::size_t k);

/// All 2^n n! elements, for tests and small exhaustive checks (n <= 6).
std::vector<SignedPermutation> all_signed_permutations(std::size_t n);

}  // namespace quatdirac
