#include "quatdirac_cli/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "quatdirac/blattner.hpp"
#include "quatdirac/dirac.hpp"
#include "quatdirac/json_io.hpp"
#include "quatdirac/partitions.hpp"
#include "quatdirac_cli/chain_literal.hpp"

namespace quatdirac::cli {

namespace {

using json_io::Json;
using json_io::to_json;

enum class Format { json, tsv };

struct RunConfig {
  std::string command;
  std::size_t n = 0;
  std::string infchar;
  std::string chains;
  std::string ktype;
  Int max_entry = -1;
  Format format = Format::tsv;
  std::string cache_path;
  unsigned jobs = 1;
  bool long_tests = false;
};

constexpr std::size_t kVerifyMaxRank = 6;

// Thrown for input the user can fix; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string params_text(const RepParams& p) {
  std::string out;
  for (const AqFactor& f : p.aq) {
    if (!out.empty()) out += ' ';
    out += std::to_string(f.k) + ":" + std::to_string(f.b);
  }
  return out.empty() ? "-" : out;
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  std::vector<Int> entries;
  try {
    entries = parse_int_list(cfg.infchar);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--infchar: ") + e.what());
  }
  InfChar L;
  try {
    L = InfChar::from_restricted(Weight(entries));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--infchar: ") + e.what());
  }
  const std::vector<ChainSet> sets = decompositions(L);
  if (cfg.format == Format::json) {
    Json reps = Json::array();
    for (const ChainSet& cs : sets) {
      const DiracSeriesRep rep(cs);
      Json row;
      row["chains"] = to_json(cs);
      row["params"] = to_json(rep.params());
      row["lowest_ktype"] = to_json(lowest_ktype(rep.params()));
      row["fs_scattered"] = is_fs_scattered(rep);
      reps.push_back(std::move(row));
    }
    emit_json(out, Json{{"infchar", to_json(L.restricted())}, {"count", sets.size()}, {"reps", reps}});
    return ok;
  }
  out << "chains\taq\tr\tlowest_ktype\tfs_scattered\n";
  for (const ChainSet& cs : sets) {
    const DiracSeriesRep rep(cs);
    out << cs.to_string() << '\t' << params_text(rep.params()) << '\t' << rep.params().r << '\t'
        << lowest_ktype(rep.params()).to_string() << '\t' << bool_text(is_fs_scattered(rep)) << '\n';
  }
  return ok;
}

int cmd_scattered(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.n < 2) throw UsageError("scattered needs --n >= 2");
  if (cfg.n > 62) throw UsageError("--n too large");
  const std::vector<ChainSet> sets = enumerate_fs_scattered(cfg.n);
  const std::uint64_t expected = std::uint64_t{1} << (cfg.n - 2);
  if (cfg.format == Format::json) {
    Json list = Json::array();
    for (const ChainSet& cs : sets) list.push_back(to_json(cs));
    emit_json(out, Json{{"n", cfg.n}, {"count", sets.size()}, {"expected", expected}, {"configurations", list}});
  } else {
    out << "chains\tinfchar\n";
    for (const ChainSet& cs : sets) out << cs.to_string() << '\t' << infchar(cs).restricted().to_string() << '\n';
    out << "# count " << sets.size() << " expected " << expected << '\n';
  }
  if (sets.size() != expected) {
    err << "FS-scattered count " << sets.size() << " differs from 2^(n-2) = " << expected << '\n';
    return verification_failure;
  }
  return ok;
}

ChainSet chains_option(const RunConfig& cfg) {
  if (cfg.chains.empty()) throw UsageError("--chains is required");
  try {
    return parse_chainset(cfg.chains);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int cmd_slkt(const RunConfig& cfg, std::ostream& out) {
  const DiracSeriesRep rep(chains_option(cfg));
  const SpinLKTReport r = slkt(rep);
  if (cfg.format == Format::json) {
    emit_json(out, to_json(r));
    return ok;
  }
  out << "chains\t" << r.chains.to_string() << '\n'
      << "infchar\t" << r.infchar.to_string() << '\n'
      << "slkt\t" << r.slkt.to_string() << '\n'
      << "multiplicity\t" << r.multiplicity << '\n'
      << "fs_scattered\t" << bool_text(r.fs_scattered) << '\n'
      << "dirac_weight\t" << r.dirac_weight.to_string() << '\n'
      << "candidates_examined\t" << r.candidates_examined << '\n';
  return ok;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n > kVerifyMaxRank && !cfg.long_tests) {
    throw UsageError("verify with --n above " + std::to_string(kVerifyMaxRank) + " needs --long");
  }
  const Int max_entry = cfg.max_entry < 0 ? static_cast<Int>(2 * cfg.n + 1) : cfg.max_entry;
  SweepOptions opts;
  opts.jobs = cfg.jobs;
  const SweepReport r = verify_uniqueness_sweep(cfg.n, max_entry, opts);
  if (cfg.format == Format::json) {
    Json j = to_json(r);
    j["status"] = "pass";
    emit_json(out, j);
    return ok;
  }
  out << "n\t" << r.n << '\n'
      << "max_entry\t" << r.max_entry << '\n'
      << "infchars\t" << r.infchars << '\n'
      << "reps\t" << r.reps << '\n'
      << "fs_scattered\t" << r.fs_scattered << '\n'
      << "candidates_total\t" << r.candidates_total << '\n'
      << "max_candidates\t" << r.max_candidates << '\n'
      << "worst_case\t" << r.worst_case.to_string() << '\n'
      << "minimality_ktypes\t" << r.minimality_ktypes << '\n'
      << "status\tpass\n";
  return ok;
}

int cmd_multiplicity(const RunConfig& cfg, std::ostream& out) {
  const DiracSeriesRep rep(chains_option(cfg));
  Weight tau;
  try {
    tau = Weight(parse_int_list(cfg.ktype));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--ktype: ") + e.what());
  }
  if (tau.rank() != rep.rank() || !is_ktype(tau)) {
    throw UsageError("--ktype must be a weakly decreasing non-negative weight of rank " +
                     std::to_string(rep.rank()));
  }
  const Int m = ktype_multiplicity(rep.params(), tau);
  if (cfg.format == Format::json) {
    emit_json(out, Json{{"chains", to_json(rep.chains())}, {"ktype", to_json(tau)}, {"multiplicity", m}});
  } else {
    out << "chains\t" << rep.chains().to_string() << '\n'
        << "ktype\t" << tau.to_string() << '\n'
        << "multiplicity\t" << m << '\n';
  }
  return ok;
}

void load_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in) return;  // first run: nothing to load yet
  try {
    table_cache::load(in);
  } catch (const std::runtime_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void save_cache(const std::string& path) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::trunc);
    if (!os) throw std::runtime_error("cannot write cache file " + tmp);
    table_cache::save(os);
  }
  std::filesystem::rename(tmp, path);
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.command == "enumerate") return cmd_enumerate(cfg, out);
  if (cfg.command == "scattered") return cmd_scattered(cfg, out, err);
  if (cfg.command == "slkt") return cmd_slkt(cfg, out);
  if (cfg.command == "verify") return cmd_verify(cfg, out);
  if (cfg.command == "multiplicity") return cmd_multiplicity(cfg, out);
  throw UsageError("unknown command " + cfg.command);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Dirac series of GL(n,H): chains, spin lowest K-types, K-type multiplicities", "quatdirac"};
  app.require_subcommand(1);
  app.fallthrough();

  std::map<std::string, Format> formats{{"json", Format::json}, {"tsv", Format::tsv}};
  app.add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--cache", cfg.cache_path,
                 "Load LR/branching tables from PATH if present; write them back on success");
  app.add_option("--jobs", cfg.jobs, "Worker threads for sweeps")->check(CLI::Range(1u, 1024u));
  app.add_flag("--long", cfg.long_tests, "Allow verify beyond n = 6");

  const std::string chain_help =
      "Chain set, e.g. \"s:15-13, s:14-6, s:2, u:4\" or \"{s:[2], u:[1]}\" or \"[3,1]_s\".\n"
      "s:a-b is a, a-2, ..., b; s:a is [a]; u:r is [2r-1, ..., 3, 1]";

  auto* enumerate = app.add_subcommand("enumerate", "List every chain decomposition of an infinitesimal character");
  enumerate->add_option("--infchar", cfg.infchar, "Strictly decreasing positive integers, e.g. 3,1")
      ->required();

  auto* scattered = app.add_subcommand("scattered", "List the FS-scattered chain sets of rank n");
  scattered->add_option("--n", cfg.n, "Rank")->required();

  auto* slkt_cmd = app.add_subcommand("slkt", "Spin lowest K-type of one representation");
  slkt_cmd->add_option("--chains", cfg.chains, chain_help)->required();

  auto* verify = app.add_subcommand("verify", "Sweep all chain sets of rank n with bounded entries");
  verify->add_option("--n", cfg.n, "Rank")->required();
  verify->add_option("--max-entry", cfg.max_entry, "Largest infinitesimal character entry (default 2n+1)")
      ->check(CLI::NonNegativeNumber);

  auto* mult = app.add_subcommand("multiplicity", "Multiplicity of one K-type");
  mult->add_option("--chains", cfg.chains, chain_help)->required();
  mult->add_option("--ktype", cfg.ktype, "K-type highest weight, e.g. 14,13,10")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_error;
  }
  for (const CLI::App* sub : app.get_subcommands()) cfg.command = sub->get_name();

  try {
    if (!cfg.cache_path.empty()) load_cache(cfg.cache_path);
    const int code = dispatch(cfg, out, err);
    if (code == ok && !cfg.cache_path.empty()) save_cache(cfg.cache_path);
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const TheoremViolation& e) {
    err << "verification failure: " << e.what() << '\n';
    return verification_failure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << '\n';
    return verification_failure;
  }
}

}  // namespace quatdirac::cli
