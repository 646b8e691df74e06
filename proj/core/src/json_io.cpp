#include "quatdirac/json_io.hpp"

#include <stdexcept>

namespace quatdirac::json_io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

Int integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw std::invalid_argument(std::string(what) + " must be an integer");
  return j.get<Int>();
}

}  // namespace

Json to_json(const Weight& w) { return Json(w.vec()); }

Json to_json(const Chain& c) {
  return Json{{"top", c.top()}, {"bottom", c.bottom()}, {"kind", c.kind() == ChainKind::s ? "s" : "u"}};
}

Json to_json(const ChainSet& cs) {
  Json s = Json::array();
  for (const Chain& c : cs.schains()) s.push_back(to_json(c));
  Json out;
  out["schains"] = std::move(s);
  out["uchain"] = cs.uchain() ? to_json(*cs.uchain()) : Json(nullptr);
  return out;
}

Json to_json(const RepParams& p) {
  Json aq = Json::array();
  for (const AqFactor& f : p.aq) aq.push_back(Json{{"k", f.k}, {"b", f.b}});
  return Json{{"aq", std::move(aq)}, {"r", p.r}};
}

Json to_json(const SpinLKTReport& r) {
  Json out;
  out["chains"] = to_json(r.chains);
  out["infchar"] = to_json(r.infchar);
  out["slkt"] = to_json(r.slkt);
  out["multiplicity"] = r.multiplicity;
  out["fs_scattered"] = r.fs_scattered;
  out["dirac_weight"] = to_json(r.dirac_weight);
  out["candidates_examined"] = r.candidates_examined;
  return out;
}

Json to_json(const SweepReport& r) {
  Json out;
  out["n"] = r.n;
  out["max_entry"] = r.max_entry;
  out["infchars"] = r.infchars;
  out["reps"] = r.reps;
  out["fs_scattered"] = r.fs_scattered;
  out["candidates_total"] = r.candidates_total;
  out["max_candidates"] = r.max_candidates;
  out["worst_case"] = to_json(r.worst_case);
  out["minimality_checked"] = r.minimality_checked;
  out["minimality_ktypes"] = r.minimality_ktypes;
  return out;
}

Weight weight_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("weight must be an array");
  std::vector<Int> v;
  for (const Json& x : j) v.push_back(integer(x, "weight entry"));
  return Weight(std::move(v));
}

Chain chain_from_json(const Json& j) {
  const Json& kind = field(j, "kind");
  if (!kind.is_string() || (kind != "s" && kind != "u")) {
    throw std::invalid_argument("chain kind must be \"s\" or \"u\"");
  }
  return Chain(integer(field(j, "top"), "top"), integer(field(j, "bottom"), "bottom"),
               kind == "s" ? ChainKind::s : ChainKind::u);
}

ChainSet chainset_from_json(const Json& j) {
  const Json& s = field(j, "schains");
  if (!s.is_array()) throw std::invalid_argument("schains must be an array");
  std::vector<Chain> chains;
  for (const Json& c : s) {
    chains.push_back(chain_from_json(c));
    if (chains.back().kind() != ChainKind::s) throw std::invalid_argument("u-chain listed in schains");
  }
  const Json& u = field(j, "uchain");
  if (!u.is_null()) {
    chains.push_back(chain_from_json(u));
    if (chains.back().kind() != ChainKind::u) throw std::invalid_argument("uchain is not a u-chain");
  }
  return ChainSet(std::move(chains));
}

RepParams params_from_json(const Json& j) {
  RepParams p;
  const Json& aq = field(j, "aq");
  if (!aq.is_array()) throw std::invalid_argument("aq must be an array");
  for (const Json& f : aq) {
    p.aq.push_back({static_cast<int>(integer(field(f, "k"), "k")), integer(field(f, "b"), "b")});
  }
  p.r = static_cast<int>(integer(field(j, "r"), "r"));
  p.validate();
  return p;
}

SpinLKTReport report_from_json(const Json& j) {
  SpinLKTReport r;
  r.chains = chainset_from_json(field(j, "chains"));
  r.infchar = weight_from_json(field(j, "infchar"));
  r.slkt = weight_from_json(field(j, "slkt"));
  r.multiplicity = integer(field(j, "multiplicity"), "multiplicity");
  const Json& fs = field(j, "fs_scattered");
  if (!fs.is_boolean()) throw std::invalid_argument("fs_scattered must be a boolean");
  r.fs_scattered = fs.get<bool>();
  r.dirac_weight = weight_from_json(field(j, "dirac_weight"));
  if (j.contains("candidates_examined")) {
    r.candidates_examined = static_cast<std::size_t>(integer(j.at("candidates_examined"), "candidates_examined"));
  }
  return r;
}

}  // namespace quatdirac::json_io
