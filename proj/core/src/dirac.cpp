#include "quatdirac/dirac.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <thread>

#include "quatdirac/blattner.hpp"
#include "quatdirac/weyl.hpp"

namespace quatdirac {

DiracSeriesRep::DiracSeriesRep(ChainSet chains)
    : chains_(std::move(chains)), params_(rep_of_chains(chains_)), infchar_(quatdirac::infchar(chains_)) {}

DiracSeriesRep::DiracSeriesRep(const RepParams& params)
    : chains_(chains_of_rep(params)), params_(params), infchar_(quatdirac::infchar(chains_)) {
  params_.validate();
}

bool hp_condition(const Weight& tau, const InfChar& L) {
  require_same_rank(tau, L.restricted(), "hp_condition");
  return prv(tau) == L.restricted() - rho_c(L.rank());
}

std::vector<Weight> slkt_candidates(const InfChar& L) {
  const std::size_t n = L.rank();
  const Weight target = L.restricted() - rho_c(n);
  // Distinct absolute values with their remaining counts.
  std::vector<std::pair<Int, int>> pool;
  for (Int v : target) {
    if (!pool.empty() && pool.back().first == v) {
      ++pool.back().second;
    } else {
      pool.emplace_back(v, 1);
    }
  }
  std::vector<Weight> out;
  std::vector<Int> tau(n);
  // tau_i = +-d + (n-1-i) for an unused d; keep tau weakly decreasing and >= 0.
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      out.emplace_back(tau);
      return;
    }
    const Int shift = static_cast<Int>(n - 1 - i);
    const Int cap = i == 0 ? std::numeric_limits<Int>::max() : tau[i - 1];
    for (auto& [d, left] : pool) {
      if (left == 0) continue;
      --left;
      for (Int v : {shift + d, shift - d}) {
        if (v >= 0 && v <= cap) {
          tau[i] = v;
          rec(i + 1);
        }
        if (d == 0) break;
      }
      ++left;
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), std::greater<>());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Weight lowest_ktype(const RepParams& p) {
  p.validate();
  std::vector<Int> l;
  for (const AqFactor& f : p.aq) l.insert(l.end(), static_cast<std::size_t>(f.k), f.b + f.k - 1);
  l.insert(l.end(), static_cast<std::size_t>(p.r), 0);
  std::sort(l.begin(), l.end(), std::greater<>());
  return Weight(std::move(l));
}

Weight dirac_cohomology_weight(const DiracSeriesRep& rep) {
  return rep.infchar().restricted() - rho_c(rep.rank());
}

bool is_fs_scattered(const DiracSeriesRep& rep) { return u_interlaced(rep.chains()); }

SpinLKTReport slkt(const DiracSeriesRep& rep) {
  const std::vector<Weight> candidates = slkt_candidates(rep.infchar());
  SpinLKTReport report;
  report.chains = rep.chains();
  report.infchar = rep.infchar().restricted();
  report.candidates_examined = candidates.size();
  report.fs_scattered = is_fs_scattered(rep);
  report.dirac_weight = dirac_cohomology_weight(rep);

  std::size_t survivors = 0;
  for (const Weight& tau : candidates) {
    const Int m = ktype_multiplicity(rep.params(), tau);
    if (m == 0) continue;
    ++survivors;
    if (survivors > 1) {
      throw TheoremViolation("two spin lowest K-types " + report.slkt.to_string() + " and " +
                             tau.to_string() + " for " + rep.chains().to_string());
    }
    report.slkt = tau;
    report.multiplicity = m;
  }
  if (survivors == 0) {
    throw TheoremViolation("no spin lowest K-type for " + rep.chains().to_string());
  }
  if (report.multiplicity != 1) {
    throw TheoremViolation("spin lowest K-type " + report.slkt.to_string() + " has multiplicity " +
                           std::to_string(report.multiplicity) + " for " +
                           rep.chains().to_string());
  }
  return report;
}

std::vector<Weight> ktypes_below_spin_norm(std::size_t n, Int bound, Int max_size) {
  std::vector<Weight> out;
  std::vector<Int> lam(n);
  // Strictly decreasing positive Lambda' with ||Lambda'||^2 < bound; position i
  // must leave room for n-1-i, ..., 1 below it.
  std::function<void(std::size_t, Int)> rec = [&](std::size_t i, Int used) {
    if (i == n) {
      if (used >= bound) return;
      for (Weight& tau : slkt_candidates(InfChar::from_restricted(Weight(lam)))) {
        if (tau.total() <= max_size) out.push_back(std::move(tau));
      }
      return;
    }
    const auto below = static_cast<Int>(n - 1 - i);
    Int tail_min = 0;
    for (Int v = 1; v <= below; ++v) tail_min += v * v;
    for (Int v = below + 1;; ++v) {
      if (i > 0 && v >= lam[i - 1]) break;
      if (used + v * v + tail_min >= bound) break;
      lam[i] = v;
      rec(i + 1, used + v * v);
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::size_t check_windowed_minimality(const DiracSeriesRep& rep, const Weight& slkt, Int window) {
  const Int bound = rep.infchar().restricted().norm_sq();
  const std::vector<Weight> below = ktypes_below_spin_norm(rep.rank(), bound, slkt.total() + window);
  for (const Weight& tau : below) {
    if (ktype_multiplicity(rep.params(), tau) != 0) {
      throw TheoremViolation("K-type " + tau.to_string() + " has spin norm " +
                             std::to_string(spin_norm_sq(tau)) + " below " + std::to_string(bound) +
                             " in " + rep.chains().to_string());
    }
  }
  return below.size();
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& task) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex mutex;
  std::size_t failed_at = count;
  std::exception_ptr failure;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || stop.load()) return;
      try {
        task(i);
      } catch (...) {
        std::lock_guard lock(mutex);
        if (i < failed_at) {
          failed_at = i;
          failure = std::current_exception();
        }
        stop.store(true);
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned n_threads = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
  for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

namespace {

struct RepOutcome {
  std::size_t candidates = 0;
  std::size_t minimality_ktypes = 0;
  bool fs_scattered = false;
};

void for_each_subset(Int max_entry, std::size_t n, const std::function<void(const Weight&)>& visit) {
  std::vector<Int> pick;
  std::function<void(Int)> rec = [&](Int top) {
    if (pick.size() == n) {
      visit(Weight(pick));
      return;
    }
    const auto need = static_cast<Int>(n - pick.size());
    for (Int v = top; v >= need; --v) {
      pick.push_back(v);
      rec(v - 1);
      pick.pop_back();
    }
  };
  rec(max_entry);
}

}  // namespace

SweepReport verify_uniqueness_sweep(std::size_t n, Int max_entry, const SweepOptions& opts) {
  SweepReport report;
  report.n = n;
  report.max_entry = max_entry;
  report.minimality_checked = opts.check_minimality;

  std::vector<ChainSet> work;
  for_each_subset(max_entry, n, [&](const Weight& lam) {
    ++report.infchars;
    for (ChainSet& cs : decompositions(InfChar::from_restricted(lam))) work.push_back(std::move(cs));
  });

  std::vector<RepOutcome> outcomes(work.size());
  parallel_for(work.size(), opts.jobs, [&](std::size_t i) {
    const DiracSeriesRep rep(work[i]);
    const SpinLKTReport r = slkt(rep);
    if (!hp_condition(r.slkt, rep.infchar())) {
      throw TheoremViolation("HP condition fails at " + r.slkt.to_string() + " for " +
                             work[i].to_string());
    }
    if (spin_norm_sq(r.slkt) != rep.infchar().restricted().norm_sq()) {
      throw TheoremViolation("spin norm of " + r.slkt.to_string() + " differs from ||Lambda||^2 for " +
                             work[i].to_string());
    }
    outcomes[i].candidates = r.candidates_examined;
    outcomes[i].fs_scattered = r.fs_scattered;
    if (opts.check_minimality) {
      outcomes[i].minimality_ktypes = check_windowed_minimality(rep, r.slkt, opts.window);
    }
  });

  report.reps = work.size();
  for (std::size_t i = 0; i < work.size(); ++i) {
    const RepOutcome& o = outcomes[i];
    report.candidates_total += o.candidates;
    report.minimality_ktypes += o.minimality_ktypes;
    if (o.fs_scattered) ++report.fs_scattered;
    if (o.candidates > report.max_candidates) {
      report.max_candidates = o.candidates;
      report.worst_case = work[i];
    }
  }
  return report;
}

}  // namespace quatdirac
