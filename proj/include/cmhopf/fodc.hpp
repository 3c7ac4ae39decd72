#pragma once

#include "cmhopf/algebra.hpp"
#include "cmhopf/mpoly.hpp"
#include "cmhopf/report.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace cmhopf {

class InconsistentBimodule : public std::runtime_error {
 public:
  InconsistentBimodule(std::string rel, std::string l, std::string r)
      : std::runtime_error("inconsistent bimodule on " + rel + ": " + l + " vs " + r),
        relation(std::move(rel)), lhs(std::move(l)), rhs(std::move(r)) {}
  std::string relation, lhs, rhs;
};

class AnsatzTooSmall : public std::runtime_error {
 public:
  explicit AnsatzTooSmall(const std::string& w) : std::runtime_error("ansatz too small: " + w) {}
};

// dX, dY, dt for the generators X, Y, t.
Letter form_of(Letter generator);
Letter generator_of(Letter form);

// A first-order calculus given as a free left module over `base` with basis
// `forms` and a right multiplication table on generators. One-forms are NCPolys
// whose words are a normal base word followed by a single form letter. With
// `inner`, theta is a basis form and theta a - a theta = da fixes its row.
struct FODC {
  std::string name;
  AlgebraPtr base;
  std::vector<Letter> forms;
  std::map<std::pair<Letter, Letter>, NCPoly> right;  // (form, generator) -> form . generator
  bool inner = false;
};

NCPoly one_form(const NCPoly& coeff, Letter form);
NCPoly fodc_left_mul(const FODC& F, const NCPoly& a, const NCPoly& omega);
NCPoly fodc_right_mul(const FODC& F, const NCPoly& omega, const NCPoly& a);
NCPoly fodc_d(const FODC& F, const NCPoly& a);

// Leibniz and bimodule consistency on every base relation.
Report check_fodc_consistency(const FODC& F, const std::string& suite = {});
// Validates the table; throws InconsistentBimodule with the first failing relation.
FODC build_fodc(FODC spec);

enum class Side { Left, Right };

// Coaction of H on the base algebra, given on generators; extended to forms by
// d (for dX, dY, dt) and by invariance of theta.
struct FormCoaction {
  std::string name;
  Side side = Side::Right;
  AlgebraPtr base, H;
  // Legs base (x) H for Right, H (x) base for Left.
  std::function<TensorPoly(Letter)> gen;

  FormCoaction() : cache_(std::make_shared<std::map<Word, TensorPoly>>()) {}
  TensorPoly on_word(const Word& w) const;
  std::shared_ptr<std::map<Word, TensorPoly>> cache_;
};

// Right coaction of k_lambda[Heis] on U_lambda(b+) (the Schroedinger coaction).
FormCoaction ubplus_right_coaction(const Q& lambda);
// Left coaction X -> 1 (x) X, Y -> 1 (x) Y + Y (x) 1.
FormCoaction ubplus_left_coaction(const Q& lambda);
// Coproduct of k_lambda[Heis] as right and left coaction on itself.
FormCoaction kheis_right_coaction(const Q& lambda);
FormCoaction kheis_left_coaction(const Q& lambda);

// Delta(omega) Delta(g) - Delta(omega . g), rendered; empty when they agree.
std::string covariance_discrepancy(const FODC& F, const FormCoaction& C, Letter form, Letter generator);
// The same defect as {(base word, form, H word) -> coefficient}; the H word is
// the left leg for a left coaction.
using FormTensor = std::map<std::tuple<Word, Letter, Word>, Q>;
FormTensor covariance_defect_terms(const FODC& F, const FormCoaction& C, Letter form, Letter generator);
Report check_covariance(const FODC& F, const FormCoaction& C, const std::string& suite = {});

// Built-in calculi.
FODC oeckl_calculus(const Q& lambda);
FODC fodc_2d_right(const Q& lambda);                // over U_lambda(b+)
FODC fodc_3d_left(const Q& lambda);                 // over k_lambda[Heis]
FODC fodc_3d_right(const Q& lambda, const Q& g);    // over k_lambda[Heis]

// Declarative description of a classification problem: unknown table entries
// range over base monomials of degree <= `degree`.
struct ClassifySpec {
  std::string name;
  AlgebraPtr base;
  std::vector<Letter> forms;
  bool inner = false;
  std::vector<FormCoaction> coactions;
  std::map<std::pair<Letter, Letter>, NCPoly> fixed;
  int degree = 3;
};

struct ClassifyResult {
  std::vector<FODC> solutions;        // isolated, fully determined tables
  std::vector<std::string> families;  // tables with free parameters p1, p2, ..., rendered
  // Same families as (form, generator) -> {(base word, target form) -> coefficient}.
  using FamilyTable = std::map<std::pair<Letter, Letter>, std::map<std::pair<Word, Letter>, MPoly>>;
  std::vector<FamilyTable> family_tables;
  std::vector<std::string> irrational;
  // Inner tables whose dX, dY, dt rows never produce theta: theta is then not
  // in A dA, so they are bimodules but not calculi.
  std::vector<std::string> non_surjective;
  bool linear_inconsistent = false;
  int unknowns = 0;
  int linear_equations = 0;
  int nonlinear_equations = 0;
  int free_after_linear = 0;
  bool empty() const { return solutions.empty() && families.empty() && irrational.empty(); }
};

ClassifyResult classify(const ClassifySpec& spec);
// Index of a family containing the concrete table F, or -1.
int family_containing(const ClassifyResult& r, const FODC& F);

// Named scenarios: "2d-right", "3d-right", "3d-bicovariant", "4d-right-sub2d",
// "4d-bicovariant".
std::vector<std::string> scenario_names();
ClassifySpec scenario(const std::string& name, const Q& lambda, int degree);

// Scalar s with dX, dY fixed and dt -> s dt carrying table a to table b.
std::optional<Q> dt_rescaling(const FODC& a, const FODC& b);

// Canonical text: one "(form)gen = one-form" line per table entry.
std::string render_table(const FODC& F);
bool same_table(const FODC& a, const FODC& b);

}  // namespace cmhopf
