// fspt: command-line front end for the SPT index, cohomology and fMPS tools.
//
// Exit codes: 0 success, 1 domain error (the error name is printed),
// 2 usage error or malformed input.

#include <CLI11.hpp>
#include <algorithm>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "fspt/error.hpp"
#include "fspt/fock.hpp"
#include "fspt/io.hpp"

using namespace fspt;

namespace {

struct Options {
  std::string in, in2;
  int l = 1;
  std::int64_t modulus = 0;
  double tol = 1e-8;
  bool table = false;
};

json read_json(const std::string& path) {
  if (path.empty()) throw InputError("missing --in file");
  std::ifstream f(path);
  if (!f) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(f);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

const json& group_part(const json& j) { return j.contains("group") ? j["group"] : j; }

std::optional<std::string> z8_label(const SPTIndex& i) {
  try {
    return to_string(z8_encode(i));
  } catch (const Error&) {
    return std::nullopt;
  }
}

json index_report(const SPTIndex& i) {
  json j = to_json(i);
  if (auto z = z8_label(i)) j["z8"] = *z;
  return j;
}

std::string caveat(std::int64_t m, std::int64_t certified) {
  std::string s = "false is certified only relative to lattice modulus " + std::to_string(m) +
                  ": no coboundary witness exists among the " + std::to_string(m) + "-th roots of unity";
  if (m % certified == 0)
    s += "; this modulus is a multiple of " + std::to_string(certified) +
         ", which suffices for these inputs, so the classes differ";
  else
    s += "; a witness of higher order may exist (use --modulus " + std::to_string(certified) + ")";
  return s;
}

json cmd_group_check(const Options& o) {
  const FiniteGroup g = group_from_json(group_part(read_json(o.in)), "/group");
  json homs = json::array();
  for (const auto& h : all_z2_homs(g)) homs.push_back(to_json(h));
  bool abelian = true;
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b) abelian = abelian && g.mul(a, b) == g.mul(b, a);
  return json{{"group", to_json(g)}, {"abelian", abelian}, {"z2_homs", homs}};
}

json cmd_cocycle_check(const Options& o) {
  const json j = read_json(o.in);
  const FiniteGroup g = group_from_json(group_part(j), "/group");
  const TwistedCocycle u = cocycle_from_json(j.at("cocycle"), g, "/cocycle");
  return json{{"valid", true}, {"cocycle", to_json(u)}};
}

json cmd_cohomologous(const Options& o) {
  const json a = read_json(o.in);
  const FiniteGroup g = group_from_json(group_part(a), "/group");
  TwistedCocycle u1, u2;
  if (!o.in2.empty()) {
    const json b = read_json(o.in2);
    const FiniteGroup g2 = group_from_json(group_part(b), "/group");
    if (!(g == g2)) throw Error("MismatchedGroup", "inputs carry different group tables");
    u1 = cocycle_from_json(a.at("cocycle"), g, "/cocycle");
    u2 = cocycle_from_json(b.at("cocycle"), g, "/cocycle");
  } else {
    u1 = cocycle_from_json(a.at("cocycle1"), g, "/cocycle1");
    u2 = cocycle_from_json(a.at("cocycle2"), g, "/cocycle2");
  }
  const auto r = cohomologous(u1, u2, o.modulus > 0 ? std::optional<std::int64_t>(o.modulus) : std::nullopt);
  json out{{"cohomologous", r.equivalent}, {"modulus", r.modulus}, {"certified_modulus", r.certified_modulus}};
  if (r.witness) {
    json w = json::array();
    for (const auto& ph : r.witness->b) w.push_back(to_json(ph));
    out["witness"] = std::move(w);
  } else {
    out["caveat"] = caveat(r.modulus, r.certified_modulus);
  }
  return out;
}

json cmd_index(const Options& o) {
  const GradedSystem s = system_from_json(read_json(o.in));
  return index_report(compute_index(s, o.tol));
}

json cmd_stack(const Options& o) {
  if (o.in2.empty()) throw InputError("stack needs --in2");
  const GradedSystem s1 = system_from_json(read_json(o.in));
  const GradedSystem s2 = system_from_json(read_json(o.in2));
  const SPTIndex i1 = compute_index(s1, o.tol);
  const SPTIndex i2 = compute_index(s2, o.tol);
  const SPTIndex stacked = compute_index(stack_systems(s1, s2), o.tol);
  const SPTIndex law = stack_index(i1, i2);
  return json{{"index1", index_report(i1)},
              {"index2", index_report(i2)},
              {"stacked", index_report(stacked)},
              {"group_law", index_report(law)},
              {"agree", index_equal(stacked, law)}};
}

json cmd_z8_table(const Options&) {
  const Z8Element gen{1, 0, 1};
  std::vector<Z8Element> powers{Z8Element{}};
  for (int k = 1; k < 8; ++k) powers.push_back(z8_compose(powers.back(), gen));
  json pw = json::array();
  for (int k = 0; k < 8; ++k) pw.push_back(json{{"k", k}, {"element", to_string(powers[k])}});
  json rows = json::array();
  for (const auto& a : powers) {
    json r = json::array();
    for (const auto& b : powers) r.push_back(to_string(z8_compose(a, b)));
    rows.push_back(std::move(r));
  }
  const bool order8 = z8_compose(powers[7], gen) == Z8Element{};
  return json{{"generator", to_string(gen)}, {"powers", pw}, {"order", order8 ? 8 : -1}, {"table", rows}};
}

json cmd_fmps_validate(const Options& o) {
  const FermionicMPS mps = mps_from_json(read_json(o.in));
  Eigen::ComplexEigenSolver<Mat> es(transfer_matrix(mps.v));
  std::vector<double> mags;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) mags.push_back(std::abs(es.eigenvalues()(i)));
  std::sort(mags.rbegin(), mags.rend());
  json out{{"valid", true},
           {"kind", mps.kind == MpsKind::Even ? "even" : "odd"},
           {"d", mps.d},
           {"m", mps.m},
           {"sigma0", mps.sigma0},
           {"subleading_eigenvalue", round12(mags.size() > 1 ? mags[1] : 0.0)}};
  if (mps.kind == MpsKind::Odd) {
    Mat t = Mat::Zero(mps.m * mps.m, mps.m * mps.m);
    for (std::size_t mu = 0; mu < mps.v.size(); ++mu)
      t += (parity(mu) ? -1.0 : 1.0) * kron(mps.v[mu].conjugate(), mps.v[mu]);
    Eigen::ComplexEigenSolver<Mat> ts(t);
    out["signed_transfer_radius"] = round12(ts.eigenvalues().cwiseAbs().maxCoeff());
  }
  out["D"] = matrix_to_json(mps.D);
  return out;
}

json cmd_fmps_expect(const Options& o) {
  const FermionicMPS mps = mps_from_json(read_json(o.in));
  if (o.in2.empty()) throw InputError("fmps-expect needs --in2 with {\"words\": [...]}");
  const json w = read_json(o.in2);
  const json& words = w.at("words");
  json out = json::array();
  for (std::size_t i = 0; i < words.size(); ++i) {
    const SiteWord sw = word_from_json(words[i], "/words/" + std::to_string(i));
    for (const auto& [mu, nu] : sw)
      if (mu >= mps.v.size() || nu >= mps.v.size())
        throw InputError("occupation mask out of range in /words/" + std::to_string(i));
    out.push_back(json{{"word", words[i]}, {"value", complex_to_json(expectation(mps, sw))}});
  }
  return json{{"values", out}};
}

json cmd_fmps_rho(const Options& o) {
  const FermionicMPS mps = mps_from_json(read_json(o.in));
  const Mat rho = density_matrix(mps, o.l);
  const int sites = o.l + 1;
  Eigen::SelfAdjointEigenSolver<Mat> es((rho + rho.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
  const Mat par = global_parity(mps.d, sites);
  json checks{{"trace", complex_to_json(rho.trace())},
              {"min_eigenvalue", round12(es.eigenvalues().minCoeff())},
              {"hermiticity", round12((rho - rho.adjoint()).norm())},
              {"parity_commutator", round12((rho * par - par * rho).norm())}};
  if (o.l >= 1)
    checks["restriction_error"] =
        round12((partial_trace_last(rho, mps.d, sites) - density_matrix(mps, o.l - 1)).norm());
  return json{{"l", o.l}, {"dim", rho.rows()}, {"rho", matrix_to_json(rho)}, {"checks", checks}};
}

json cmd_fmps_symmetry(const Options& o) {
  const FermionicMPS mps = mps_from_json(read_json(o.in));
  if (o.in2.empty()) throw InputError("fmps-symmetry needs --in2 with the symmetry");
  const OnSiteSymmetry sym = symmetry_from_json(read_json(o.in2));
  const SymmetryFit fit = check_symmetry(mps, sym, o.tol);
  json phases = json::array();
  for (int g = 0; g < sym.group.n; ++g)
    phases.push_back(json{{"g", g},
                          {"c", complex_to_json(fit.c[g])},
                          {"abs", round12(std::abs(fit.c[g]))},
                          {"residual", round12(fit.residual[g])}});
  json out{{"phases", phases}};
  if (fit.q) out["q"] = to_json(*fit.q);
  return out;
}

json cmd_fmps_index(const Options& o) {
  const FermionicMPS mps = mps_from_json(read_json(o.in));
  if (o.in2.empty()) throw InputError("fmps-index needs --in2 with the symmetry");
  const OnSiteSymmetry sym = symmetry_from_json(read_json(o.in2));
  return index_report(fmps_index(mps, sym, o.tol));
}

// key: value lines; nested keys joined with '.'
void print_table(const json& j, const std::string& prefix, std::ostream& os) {
  auto is_matrix = [](const json& x) {
    return x.is_array() && !x.empty() && x[0].is_array() && !x[0].empty() && x[0][0].is_array();
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) print_table(v, prefix.empty() ? k : prefix + "." + k, os);
  } else if (is_matrix(j)) {
    os << prefix << ":\n";
    for (const auto& row : j) {
      os << " ";
      for (const auto& e : row) {
        std::ostringstream cell;
        cell << e[0].get<double>() << (e[1].get<double>() < 0 ? "-" : "+") << std::abs(e[1].get<double>())
             << "i";
        os << " " << cell.str();
      }
      os << "\n";
    }
  } else if (j.is_array() && !j.empty() && (j[0].is_object() || j[0].is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) print_table(j[i], prefix + "[" + std::to_string(i) + "]", os);
  } else {
    os << prefix << ": " << j.dump() << "\n";
  }
}

void print_z8_table(const json& j, std::ostream& os) {
  os << "generator " << j["generator"].get<std::string>() << ", order " << j["order"] << "\n";
  for (const auto& p : j["powers"]) os << "  g^" << p["k"] << " = " << p["element"].get<std::string>() << "\n";
  os << "composition (rows and columns in power order):\n";
  for (const auto& row : j["table"]) {
    for (const auto& e : row) os << " " << e.get<std::string>();
    os << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fspt: SPT index, twisted cohomology and fermionic MPS tools"};
  app.require_subcommand(1);
  Options o;

  struct Cmd {
    const char* name;
    const char* help;
    json (*fn)(const Options&);
    bool in, in2, l, modulus;
  };
  const Cmd cmds[] = {
      {"group-check", "validate a group table", cmd_group_check, true, false, false, false},
      {"cocycle-check", "validate a twisted 2-cocycle", cmd_cocycle_check, true, false, false, false},
      {"cohomologous", "decide whether two cocycles are cohomologous", cmd_cohomologous, true, true, false, true},
      {"index", "compute the SPT index of a graded system", cmd_index, true, false, false, false},
      {"stack", "stack two systems and compare with the group law", cmd_stack, true, true, false, false},
      {"z8-table", "Z8 composition table for antiunitary Z2", cmd_z8_table, false, false, false, false},
      {"fmps-validate", "validate a fermionic MPS", cmd_fmps_validate, true, false, false, false},
      {"fmps-expect", "expectation values of site words", cmd_fmps_expect, true, true, false, false},
      {"fmps-rho", "Jordan-Wigner density matrix on l+1 sites", cmd_fmps_rho, true, false, true, false},
      {"fmps-symmetry", "symmetry phases c_g", cmd_fmps_symmetry, true, true, false, false},
      {"fmps-index", "SPT index of a symmetric fermionic MPS", cmd_fmps_index, true, true, false, false},
  };
  std::vector<std::pair<CLI::App*, const Cmd*>> subs;
  for (const auto& c : cmds) {
    CLI::App* s = app.add_subcommand(c.name, c.help);
    if (c.in) s->add_option("--in", o.in, "input JSON file")->required();
    if (c.in2) s->add_option("--in2", o.in2, "second input JSON file");
    if (c.l) s->add_option("--l", o.l, "sites 0..l")->check(CLI::Range(0, 13));
    if (c.modulus) s->add_option("--modulus", o.modulus, "cohomology lattice modulus")->check(CLI::PositiveNumber);
    s->add_option("--tol", o.tol, "numerical tolerance (default 1e-8)")->check(CLI::PositiveNumber);
    auto* fj = s->add_flag("--json", "JSON output (default)");
    s->add_flag("--table", o.table, "tabular output")->excludes(fj);
    subs.emplace_back(s, &c);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  for (const auto& [s, c] : subs) {
    if (!s->parsed()) continue;
    try {
      const json out = c->fn(o);
      if (!o.table)
        std::cout << out.dump(2) << "\n";
      else if (std::string(c->name) == "z8-table")
        print_z8_table(out, std::cout);
      else
        print_table(out, "", std::cout);
      return 0;
    } catch (const Error& e) {
      std::cerr << e.name() << ": " << e.what() << "\n";
      std::cout << json{{"error", e.name()}, {"detail", e.what()}}.dump(2) << "\n";
      return 1;
    } catch (const InputError& e) {
      std::cerr << "input error: " << e.what() << "\n";
      return 2;
    } catch (const json::exception& e) {
      std::cerr << "input error: " << e.what() << "\n";
      return 2;
    }
  }
  return 2;
}
