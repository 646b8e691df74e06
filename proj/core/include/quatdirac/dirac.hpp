#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quatdirac/chains.hpp"
#include "quatdirac/weights.hpp"

namespace quatdirac {

/// Raised when a computed result contradicts a proven statement about the
/// Dirac series (no spin lowest K-type, two of them, multiplicity above one,
/// a wrong FS-scattered count).  Always an implementation bug.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// One Dirac-series representation, kept in both chain and parameter form.
class DiracSeriesRep {
 public:
  explicit DiracSeriesRep(ChainSet chains);
  explicit DiracSeriesRep(const RepParams& params);

  const ChainSet& chains() const noexcept { return chains_; }
  const RepParams& params() const noexcept { return params_; }
  const InfChar& infchar() const noexcept { return infchar_; }
  std::size_t rank() const noexcept { return infchar_.rank(); }

 private:
  ChainSet chains_;
  RepParams params_;
  InfChar infchar_;
};

struct SpinLKTReport {
  ChainSet chains;
  Weight infchar;
  Weight slkt;
  Int multiplicity = 0;
  std::size_t candidates_examined = 0;
  bool fs_scattered = false;
  Weight dirac_weight;

  friend bool operator==(const SpinLKTReport&, const SpinLKTReport&) = default;
};

/// prv(tau) == Lambda|_t - rho_c.
bool hp_condition(const Weight& tau, const InfChar& L);

/// Every K-type tau with {tau - rho_n} = Lambda|_t - rho_c, sorted descending.
std::vector<Weight> slkt_candidates(const InfChar& L);

Weight lowest_ktype(const RepParams& p);

/// Filters all candidates through ktype_multiplicity.  Throws TheoremViolation
/// unless exactly one survives, with multiplicity one.
SpinLKTReport slkt(const DiracSeriesRep& rep);

/// Lambda|_t - rho_c.
Weight dirac_cohomology_weight(const DiracSeriesRep& rep);

bool is_fs_scattered(const DiracSeriesRep& rep);

/// K-types tau with spin_norm_sq(tau) < bound and |tau| <= max_size.
std::vector<Weight> ktypes_below_spin_norm(std::size_t n, Int bound, Int max_size);

/// Throws TheoremViolation if some K-type of size at most |slkt| + window has
/// nonzero multiplicity and spin norm below ||Lambda||^2.  Returns the number
/// of K-types examined.
std::size_t check_windowed_minimality(const DiracSeriesRep& rep, const Weight& slkt, Int window);

struct SweepOptions {
  unsigned jobs = 1;
  bool check_minimality = true;
  Int window = 4;
};

struct SweepReport {
  std::size_t n = 0;
  Int max_entry = 0;
  std::size_t infchars = 0;
  std::size_t reps = 0;
  std::size_t fs_scattered = 0;
  std::size_t candidates_total = 0;
  std::size_t max_candidates = 0;
  ChainSet worst_case;
  std::size_t minimality_ktypes = 0;
  bool minimality_checked = false;
};

/// Runs slkt on every chain set with n entries drawn from 1..max_entry and
/// checks the HP condition, spin-norm equality and (optionally) windowed
/// minimality.  The first violation aborts with TheoremViolation naming the
/// chain set.  Results do not depend on `jobs`.
SweepReport verify_uniqueness_sweep(std::size_t n, Int max_entry, const SweepOptions& opts = {});

/// Runs task(i) for i in [0, count) on up to `jobs` threads.  The first
/// exception (lowest index) is rethrown after all workers stop.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& task);

}  // namespace quatdirac
