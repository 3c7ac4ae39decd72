#pragma once

#include "cmhopf/family.hpp"
#include "cmhopf/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cmhopf {

struct SuiteConfig {
  std::vector<Q> lambdas;  // empty: each suite's own default set
  int N = 8;
  int grade_bound = 4;
  unsigned seed = 1;
  int samples = 120;                    // group-level samples for sl2
  std::optional<AlgebraTag> algebra;    // restricts the hopf suite to one algebra
};

// Citation tags attached to every check, naming the result it realises.
namespace tags {
inline constexpr const char* hopf = "hopf-axioms";
inline constexpr const char* bicross = "bicrossproduct-presentation";
inline constexpr const char* compat = "bicrossproduct-compatibility";
inline constexpr const char* duality = "dual-pairing";
inline constexpr const char* closed_form = "pairing-closed-forms";
inline constexpr const char* gram = "pairing-nondegeneracy";
inline constexpr const char* ideal = "heisenberg-hopf-ideal";
inline constexpr const char* scaling = "scaling-isomorphism";
inline constexpr const char* fodc = "calculus-classification";
inline constexpr const char* sl2 = "sl2-matched-pair";
inline constexpr const char* schrodinger = "schrodinger-representation";
inline constexpr const char* oracle = "finite-group-oracle";
}  // namespace tags

Report suite_hopf(const SuiteConfig& cfg);
Report suite_bicross_presentations(const SuiteConfig& cfg);
Report suite_compatibility(const SuiteConfig& cfg);   // includes mutation detection
Report suite_duality(const SuiteConfig& cfg);
Report suite_gram(const SuiteConfig& cfg);
Report suite_ideal(const SuiteConfig& cfg);
Report suite_scaling(const SuiteConfig& cfg);
Report suite_fodc(const SuiteConfig& cfg);
Report suite_sl2(const SuiteConfig& cfg);
Report suite_schrodinger(const SuiteConfig& cfg);
Report suite_finite_oracle(const SuiteConfig& cfg);

// Named groups used by `verify`: hopf, bicross, pairing, schrodinger, ideal,
// scaling, sl2, fodc, oracle. Throws std::invalid_argument on other names.
std::vector<std::string> verify_group_names();
Report run_verify_group(const std::string& name, const SuiteConfig& cfg);
Report suite_all(const SuiteConfig& cfg);

}  // namespace cmhopf
