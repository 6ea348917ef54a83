#include "fspt/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "fspt/error.hpp"

namespace fspt {
namespace {

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw InputError("expected an object at '" + path + "'");
  auto it = j.find(key);
  if (it == j.end()) throw InputError("missing key '" + std::string(key) + "' at '" + path + "'");
  return *it;
}

std::string sub(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string sub(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

const json& array_at(const json& j, const std::string& path) {
  if (!j.is_array()) throw InputError("expected an array at '" + path + "'");
  return j;
}

int int_at(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw InputError("expected an integer at '" + path + "'");
  return j.get<int>();
}

double num_at(const json& j, const std::string& path) {
  if (!j.is_number()) throw InputError("expected a number at '" + path + "'");
  return j.get<double>();
}

}  // namespace

double round12(double x) {
  if (x == 0 || !std::isfinite(x)) return x == 0 ? 0.0 : x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0 ? 0.0 : r;  // no negative zero in output
}

json to_json(const FiniteGroup& g) {
  json j;
  j["n"] = g.n;
  j["table"] = g.table;
  j["identity"] = g.identity;
  j["inverse"] = g.inverse;
  return j;
}

FiniteGroup group_from_json(const json& j, const std::string& path) {
  const json& t = array_at(field(j, "table", path), sub(path, "table"));
  std::vector<std::vector<int>> table;
  for (std::size_t a = 0; a < t.size(); ++a) {
    const json& row = array_at(t[a], sub(sub(path, "table"), a));
    std::vector<int> r;
    for (std::size_t b = 0; b < row.size(); ++b) r.push_back(int_at(row[b], sub(sub(sub(path, "table"), a), b)));
    table.push_back(std::move(r));
  }
  if (j.contains("n") && int_at(j["n"], sub(path, "n")) != static_cast<int>(table.size()))
    throw InputError("'n' disagrees with the table size at '" + path + "'");
  return validate_group(std::move(table));
}

json to_json(const Z2Hom& h) { return h.values; }

Z2Hom hom_from_json(const json& j, const FiniteGroup& g, const std::string& path) {
  const json& arr = j.is_object() ? field(j, "values", path) : j;
  array_at(arr, path);
  std::vector<int> v;
  for (std::size_t i = 0; i < arr.size(); ++i) v.push_back(int_at(arr[i], sub(path, i)));
  return validate_hom_z2(g, std::move(v));
}

json to_json(const Phase& p) { return json{{"k", p.k()}, {"N", p.n()}}; }

json complex_to_json(cplx z) { return json{{"re", round12(z.real())}, {"im", round12(z.imag())}}; }

cplx complex_from_json(const json& j, const std::string& path) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2) return {num_at(j[0], sub(path, 0)), num_at(j[1], sub(path, 1))};
  return {num_at(field(j, "re", path), sub(path, "re")), num_at(field(j, "im", path), sub(path, "im"))};
}

Phase phase_from_json(const json& j, const std::string& path) {
  if (j.is_object() && j.contains("k")) {
    const auto k = field(j, "k", path).get<std::int64_t>();
    const auto n = field(j, "N", path).get<std::int64_t>();
    if (n <= 0) throw InputError("phase denominator must be positive at '" + path + "'");
    if (k < 0 || k >= n) throw InputError("exact phase needs 0 <= k < N at '" + path + "'");
    return Phase(k, n);
  }
  const cplx z = complex_from_json(j, path);
  if (std::abs(std::abs(z) - 1.0) > 1e-9) throw InputError("phase is not of unit modulus at '" + path + "'");
  auto p = snap_phase_auto(z);
  if (!p) throw Error("NotRootOfUnity", "phase at '" + path + "' is not a root of unity of order <= 64");
  return *p;
}

json to_json(const TwistedCocycle& u) {
  json rows = json::array();
  for (const auto& row : u.values) {
    json r = json::array();
    for (const auto& ph : row) r.push_back(to_json(ph));
    rows.push_back(std::move(r));
  }
  return json{{"twist", to_json(u.twist)}, {"phases", std::move(rows)}};
}

TwistedCocycle cocycle_from_json(const json& j, const FiniteGroup& g, const std::string& path) {
  const Z2Hom p = j.contains("twist") ? hom_from_json(j["twist"], g, sub(path, "twist")) : trivial_hom(g);
  const json& rows = array_at(field(j, "phases", path), sub(path, "phases"));
  PhaseTable t;
  for (std::size_t a = 0; a < rows.size(); ++a) {
    const json& row = array_at(rows[a], sub(sub(path, "phases"), a));
    std::vector<Phase> r;
    for (std::size_t b = 0; b < row.size(); ++b)
      r.push_back(phase_from_json(row[b], sub(sub(sub(path, "phases"), a), b)));
    t.push_back(std::move(r));
  }
  return validate_cocycle(g, p, std::move(t));
}

json matrix_to_json(const Mat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k)
      r.push_back(json::array({round12(m(i, k).real()), round12(m(i, k).imag())}));
    rows.push_back(std::move(r));
  }
  return rows;
}

Mat matrix_from_json(const json& j, const std::string& path) {
  array_at(j, path);
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (rows == 0) throw InputError("empty matrix at '" + path + "'");
  const auto cols = static_cast<Eigen::Index>(array_at(j[0], sub(path, 0)).size());
  Mat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& r = array_at(j[static_cast<std::size_t>(i)], sub(path, static_cast<std::size_t>(i)));
    if (static_cast<Eigen::Index>(r.size()) != cols) throw InputError("ragged matrix at '" + path + "'");
    for (Eigen::Index k = 0; k < cols; ++k)
      m(i, k) = complex_from_json(r[static_cast<std::size_t>(k)],
                                  sub(sub(path, static_cast<std::size_t>(i)), static_cast<std::size_t>(k)));
  }
  return m;
}

json to_json(const SymOp& op) { return json{{"matrix", matrix_to_json(op.matrix)}, {"flag", op.flag}}; }

SymOp symop_from_json(const json& j, int default_flag, const std::string& path) {
  if (j.is_object())
    return SymOp{matrix_from_json(field(j, "matrix", path), sub(path, "matrix")),
                 j.contains("flag") ? int_at(j["flag"], sub(path, "flag")) : default_flag};
  return SymOp{matrix_from_json(j, path), default_flag};
}

ProjectiveRep rep_from_json(const json& j, const FiniteGroup& g, const Z2Hom& p, const std::string& path) {
  array_at(j, path);
  std::vector<SymOp> ops;
  for (std::size_t i = 0; i < j.size(); ++i)
    ops.push_back(symop_from_json(j[i], i < p.values.size() ? p.values[i] : 0, sub(path, i)));
  return validate_rep(g, p, std::move(ops));
}

json to_json(const SPTIndex& i) {
  return json{{"kappa", i.kappa}, {"q", to_json(i.q)}, {"cocycle", to_json(i.cls)}};
}

SPTIndex index_from_json(const json& j, const FiniteGroup& g, const std::string& path) {
  SPTIndex i;
  i.kappa = int_at(field(j, "kappa", path), sub(path, "kappa"));
  if (i.kappa != 0 && i.kappa != 1) throw InputError("kappa must be 0 or 1 at '" + path + "'");
  i.q = hom_from_json(field(j, "q", path), g, sub(path, "q"));
  i.cls = cocycle_from_json(field(j, "cocycle", path), g, sub(path, "cocycle"));
  return i;
}

json to_json(const GradedSystem& s) {
  json j;
  j["group"] = to_json(s.group);
  j["p"] = to_json(s.p);
  j["form"] = s.form;
  if (s.form == "generators") {
    json gens = json::array();
    for (const auto& g : s.generators) gens.push_back(matrix_to_json(g));
    j["generators"] = std::move(gens);
    j["gamma"] = matrix_to_json(s.gamma);
  } else {
    j["K_dim"] = s.k_dim;
  }
  json act = json::array();
  for (const auto& op : s.action.ops) act.push_back(to_json(op));
  j["action"] = std::move(act);
  return j;
}

GradedSystem system_from_json(const json& j) {
  const FiniteGroup g = group_from_json(field(j, "group", ""), "/group");
  const Z2Hom p = j.contains("p") ? hom_from_json(j["p"], g, "/p") : trivial_hom(g);
  const ProjectiveRep action = rep_from_json(field(j, "action", ""), g, p, "/action");
  const json& form_j = field(j, "form", "");
  if (!form_j.is_string()) throw InputError("'form' must be a string");
  const std::string form = form_j.get<std::string>();
  if (form == "R0" || form == "R1") {
    const int k = int_at(field(j, "K_dim", ""), "/K_dim");
    if (k < 1) throw InputError("K_dim must be positive");
    return form == "R0" ? make_r0(k, action) : make_r1(k, action);
  }
  if (form != "generators") throw InputError("'form' must be R0, R1 or generators");
  const json& gj = array_at(field(j, "generators", ""), "/generators");
  std::vector<Mat> gens;
  for (std::size_t i = 0; i < gj.size(); ++i) gens.push_back(matrix_from_json(gj[i], sub("/generators", i)));
  if (gens.empty()) throw InputError("'generators' must be nonempty");
  return make_system(gens, matrix_from_json(field(j, "gamma", ""), "/gamma"), action);
}

json to_json(const FermionicMPS& mps) {
  json j;
  j["kind"] = mps.kind == MpsKind::Even ? "even" : "odd";
  j["d"] = mps.d;
  j["m"] = mps.m;
  json v = json::object();
  for (std::size_t mu = 0; mu < mps.v.size(); ++mu) v[std::to_string(mu)] = matrix_to_json(mps.v[mu]);
  j["v"] = std::move(v);
  j["D"] = matrix_to_json(mps.D);
  if (mps.kind == MpsKind::Even)
    j["Theta"] = matrix_to_json(mps.theta);
  else
    j["sigma0"] = mps.sigma0;
  return j;
}

FermionicMPS mps_from_json(const json& j) {
  FermionicMPS mps;
  const json& kind = field(j, "kind", "");
  if (kind != "even" && kind != "odd") throw InputError("'kind' must be \"even\" or \"odd\"");
  mps.kind = kind == "even" ? MpsKind::Even : MpsKind::Odd;
  mps.d = int_at(field(j, "d", ""), "/d");
  mps.m = int_at(field(j, "m", ""), "/m");
  if (mps.d < 1 || mps.d > 14 || mps.m < 1) throw InputError("d must be in [1,14] and m positive");
  const json& v = field(j, "v", "");
  if (!v.is_object()) throw InputError("'v' must map bitmasks to matrices");
  mps.v.assign(std::size_t(1) << mps.d, Mat::Zero(mps.m, mps.m));
  for (const auto& [key, val] : v.items()) {
    char* end = nullptr;
    const unsigned long mu = std::strtoul(key.c_str(), &end, 10);
    if (key.empty() || *end != '\0' || mu >= mps.v.size())
      throw InputError("bad bitmask key '" + key + "' in /v");
    mps.v[mu] = matrix_from_json(val, "/v/" + key);
  }
  mps.D = matrix_from_json(field(j, "D", ""), "/D");
  if (mps.kind == MpsKind::Even)
    mps.theta = matrix_from_json(field(j, "Theta", ""), "/Theta");
  else
    mps.sigma0 = j.contains("sigma0") ? int_at(j["sigma0"], "/sigma0") : 0;
  return validate_mps(std::move(mps));
}

OnSiteSymmetry symmetry_from_json(const json& j) {
  OnSiteSymmetry s;
  s.group = group_from_json(field(j, "group", ""), "/group");
  s.p = j.contains("p") ? hom_from_json(j["p"], s.group, "/p") : trivial_hom(s.group);
  s.u = rep_from_json(field(j, "U", ""), s.group, s.p, "/U");
  s.w = rep_from_json(field(j, "W", ""), s.group, s.p, "/W");
  if (j.contains("q")) s.q = hom_from_json(j["q"], s.group, "/q");
  return s;
}

SiteWord word_from_json(const json& j, const std::string& path) {
  array_at(j, path);
  SiteWord w;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& pr = array_at(j[i], sub(path, i));
    if (pr.size() != 2) throw InputError("site entry must be [mu, nu] at '" + sub(path, i) + "'");
    w.emplace_back(pr[0].get<std::uint64_t>(), pr[1].get<std::uint64_t>());
  }
  if (w.empty()) throw InputError("empty word at '" + path + "'");
  return w;
}

}  // namespace fspt
