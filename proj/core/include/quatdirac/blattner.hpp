#pragma once

#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "quatdirac/chains.hpp"
#include "quatdirac/partitions.hpp"
#include "quatdirac/weights.hpp"

namespace quatdirac {

/// Highest weight of an L cap K = U(k) x Sp(r) type.
struct LKType {
  Weight u_part;   // rank k, dominant, entries may be negative
  Weight sp_part;  // rank r, a K-type weight of Sp(r)

  friend bool operator==(const LKType&, const LKType&) = default;
  friend auto operator<=>(const LKType&, const LKType&) = default;
};

/// One summand E_{w(tau+rho_c)-rho_c} of H^q(u cap k, E_tau).
struct CohomologyPiece {
  int degree = 0;
  LKType weight;

  int sign() const noexcept { return degree % 2 == 0 ? 1 : -1; }
};

/// Kostant's theorem: one piece per w in W^1, degree = length(w).
std::vector<CohomologyPiece> kostant(const Weight& tau, std::size_t k, std::size_t r);

/// Same pieces, restricted to those whose U(k) part has size >= min_u_size.
/// The search over W^1 is pruned on that bound, so only the surviving pieces
/// are ever built.
void for_each_kostant_piece(const Weight& tau, std::size_t k, std::size_t r, Int min_u_size,
                            const std::function<void(const CohomologyPiece&)>& visit);

/// U(k) x Sp(r) decomposition of S^d(u cap p), u cap p = (C^k (x) C^2r) + wedge^2 C^k.
/// Keys are (U(k) weight, Sp(r) weight).
DecompTable sym_up(Int d, std::size_t k, std::size_t r);

/// Constituents of S(u cap p) whose U(k) side has size u_size, grouped by
/// the Sp(r) side.  A summand from S^{d1}(C^k (x) C^2r) (x) S^{d2}(wedge^2)
/// has U(k) size d1 + 2 d2.
using UsizeSlice = std::map<Weight, std::vector<std::pair<Partition, Int>>>;
std::shared_ptr<const UsizeSlice> sym_up_by_usize(Int u_size, std::size_t k, std::size_t r);

/// Z# = Z (x) det^{k+2r-1}: induced to U(k) from det^{b_i+k_i-1} on prod U(k_i).
std::vector<CharBlock> zsharp_blocks(const RepParams& p);
/// Lowest U(k)-type of Z#: the rectangles' rows sorted descending.
Weight zsharp_lowest(const RepParams& p);
/// [Z# : E_gamma] for any dominant gamma of rank k.
Int zsharp_multiplicity(const RepParams& p, const Weight& gamma);
/// U(k)-types of Z# whose excess over the lowest type (sum of positive parts
/// of gamma - lowest) is at most `spread`.  Z# has infinitely many U(k)-types
/// once there are two or more A_q factors, hence the window.
std::map<Weight, Int> zsharp_ktypes(const RepParams& p, Int spread);

/// [Z# (x) E_alpha : E_gamma]_{U(k)}.
Int zsharp_tensor_multiplicity(const std::vector<CharBlock>& blocks, const Weight& gamma,
                               const Partition& alpha);

/// [pi : E_tau]_K through the Blattner-type alternating sum over Kostant
/// pieces, S(u cap p) and the U(k)-types of Z#.
Int ktype_multiplicity(const RepParams& p, const Weight& tau);

/// Reference evaluator: full W^1 traversal, per-degree S^d tables and an
/// explicit Z# type window.  Same result as ktype_multiplicity, much slower.
Int ktype_multiplicity_naive(const RepParams& p, const Weight& tau);

}  // namespace quatdirac
