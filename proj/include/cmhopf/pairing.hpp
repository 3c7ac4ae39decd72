#pragma once

#include "cmhopf/algebra.hpp"
#include "cmhopf/report.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cmhopf {

// A bilinear form <left, right> given on generators and extended through
// <ab, x> = <a, x(1)><b, x(2)> and <a, xy> = <a(1), x><a(2), y>, or through
// a direct evaluator on normal words when one is supplied.
class Pairing {
 public:
  std::string name;
  AlgebraPtr left, right;
  std::function<Q(Letter, Letter)> gen;
  std::function<Q(const Word&, const Word&)> direct;

  Q pair(const NCPoly& a, const NCPoly& x) const;
  Q pair_words(const Word& u, const Word& w) const;
  Q pair_recursive(const Word& u, const Word& w) const;

 private:
  mutable std::map<std::pair<Word, Word>, Q> memo_;
};

using PairingPtr = std::shared_ptr<Pairing>;

// <z_m, t_n> = delta_{m,n}
PairingPtr pairing_ud0_fd0(const AlgebraPtr& ud0, const AlgebraPtr& fd0);
// <X, beta> = 1, <Y, alpha> = lambda, other generator pairs from the counit
PairingPtr pairing_ubplus_fbplus(const AlgebraPtr& ub, const AlgebraPtr& fb);
// <z xi, t x> = <z, t><xi, x>
PairingPtr pairing_ucm_hcm(const AlgebraPtr& ucm, const AlgebraPtr& hcm);
// <z, t> = 2, <alpha, Y> = lambda, <beta, X> = 1
PairingPtr pairing_uheis_kheis(const AlgebraPtr& uheis, const AlgebraPtr& kheis);

// <z_{m_1} ... z_{m_p}, t_n> from the product formula.
Q closed_form_zword_t(const std::vector<int>& ms, int n);
// <z_m, t_{n_1} ... t_{n_A}>
Q closed_form_z_tword(int m, const std::vector<int>& ns);
// <X^j Y^k, alpha^s beta^r> = j! delta_{j,r} (lambda s)^k
Q closed_form_xy_ab(int j, int k, int s, int r, const Q& lambda);
// <z^p alpha^q beta^r, t^i X^j Y^k> = p! 2^p delta_{i,p} j! delta_{j,r} (lambda q)^k
Q closed_form_heis(int p, int q, int r, int i, int j, int k, const Q& lambda);

struct DualityOptions {
  int grade_bound = 3;
  // Cap on basis words per side; 0 means unlimited.
  size_t max_words = 0;
};

// The five axioms: <ab,x>, <a,xy>, <1,x>, <a,1>, <S a, x> = <a, S x>.
Report check_duality(const Pairing& P, const DualityOptions& opt, const std::string& suite = {});

// Exact rank and determinant by fraction-free elimination.
struct RankResult {
  int rank = 0;
  std::optional<Q> determinant;  // square matrices only
};
RankResult bareiss(std::vector<std::vector<Q>> m);

struct GramResult {
  std::vector<Word> left_basis, right_basis;
  std::vector<std::vector<Q>> matrix;
  int rank = 0;
  std::optional<Q> determinant;
  bool nondegenerate() const {
    return rank == static_cast<int>(left_basis.size()) && rank == static_cast<int>(right_basis.size());
  }
};
GramResult gram(const Pairing& P, int grade);
std::string render_matrix(const std::vector<std::vector<Q>>& m);

}  // namespace cmhopf
