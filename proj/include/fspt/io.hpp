#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>

#include "fspt/fmps.hpp"
#include "fspt/spt_index.hpp"

namespace fspt {

using json = nlohmann::ordered_json;

// Schema problem in an input document; carries the JSON path.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Doubles are rounded to 12 significant digits on output.
double round12(double x);

json to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const json& j, const std::string& path = "");

json to_json(const Z2Hom& h);  // plain array
// accepts an array or {"values": [...]}
Z2Hom hom_from_json(const json& j, const FiniteGroup& g, const std::string& path = "");

json to_json(const Phase& p);  // {"k","N"}
// {"k","N"}, {"re","im"} (snapped to a root of order <= 64) or a real +-1
Phase phase_from_json(const json& j, const std::string& path = "");
json complex_to_json(cplx z);  // {"re","im"}
cplx complex_from_json(const json& j, const std::string& path = "");

json to_json(const TwistedCocycle& u);  // {"twist", "phases"}
TwistedCocycle cocycle_from_json(const json& j, const FiniteGroup& g, const std::string& path = "");

json matrix_to_json(const Mat& m);  // rows of [re, im] pairs
// also accepts plain real entries
Mat matrix_from_json(const json& j, const std::string& path = "");

json to_json(const SymOp& op);
SymOp symop_from_json(const json& j, int default_flag, const std::string& path = "");
ProjectiveRep rep_from_json(const json& j, const FiniteGroup& g, const Z2Hom& p,
                            const std::string& path = "");

json to_json(const SPTIndex& i);  // {"kappa", "q", "cocycle"}
SPTIndex index_from_json(const json& j, const FiniteGroup& g, const std::string& path = "");

// {"group", "p", "form", "K_dim", "gamma"?, "generators"?, "action"}
json to_json(const GradedSystem& s);
GradedSystem system_from_json(const json& j);

// {"kind", "d", "m", "v": {bitmask: matrix}, "D", "Theta"?, "sigma0"?}
json to_json(const FermionicMPS& mps);
FermionicMPS mps_from_json(const json& j);

// {"group", "p", "U", "W", "q"?}
OnSiteSymmetry symmetry_from_json(const json& j);

// [[mu, nu], ...]
SiteWord word_from_json(const json& j, const std::string& path = "");

}  // namespace fspt
