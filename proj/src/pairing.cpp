#include "cmhopf/pairing.hpp"

#include "cmhopf/family.hpp"
#include "cmhopf/hopf.hpp"

#include <algorithm>
#include <sstream>

namespace cmhopf {

Q Pairing::pair(const NCPoly& a, const NCPoly& x) const {
  Q r(0);
  for (const auto& [u, cu] : a.terms)
    for (const auto& [w, cw] : x.terms) r += cu * cw * pair_words(u, w);
  return r;
}

Q Pairing::pair_words(const Word& u, const Word& w) const {
  if (direct) return direct(u, w);
  return pair_recursive(u, w);
}

Q Pairing::pair_recursive(const Word& u, const Word& w) const {
  if (u.empty()) return counit_word(*right, w);
  if (w.empty()) return counit_word(*left, u);
  if (u.size() == 1 && w.size() == 1) return gen(u[0], w[0]);
  auto key = std::make_pair(u, w);
  auto hit = memo_.find(key);
  if (hit != memo_.end()) return hit->second;
  Q r(0);
  if (u.size() > 1) {
    // <u1 u', w> = <u1, w(1)><u', w(2)>
    const Word head{u[0]};
    const Word rest(u.begin() + 1, u.end());
    for (const auto& [k, c] : coproduct_word(*right, w).terms) {
      Q a = pair_recursive(head, k[0]);
      if (is_zero(a)) continue;
      r += c * a * pair_recursive(rest, k[1]);
    }
  } else {
    // <u, w1 w'> = <u(1), w1><u(2), w'>
    const Word head{w[0]};
    const Word rest(w.begin() + 1, w.end());
    for (const auto& [k, c] : coproduct_word(*left, u).terms) {
      Q a = pair_recursive(k[0], head);
      if (is_zero(a)) continue;
      r += c * a * pair_recursive(k[1], rest);
    }
  }
  memo_.emplace(std::move(key), r);
  return r;
}

namespace {

bool is_kind(Letter l, Kind k) { return kind_of(l) == k; }

Q counit_pairing(const Algebra& L, const Algebra& R, Letter a, Letter b) {
  return counit_word(L, {a}) * counit_word(R, {b});
}

}  // namespace

PairingPtr pairing_ud0_fd0(const AlgebraPtr& ud0, const AlgebraPtr& fd0) {
  auto P = std::make_shared<Pairing>();
  P->name = "Ud0-FD0";
  P->left = ud0;
  P->right = fd0;
  P->gen = [](Letter z, Letter t) { return index_of(z) == index_of(t) ? Q(1) : Q(0); };
  return P;
}

PairingPtr pairing_ubplus_fbplus(const AlgebraPtr& ub, const AlgebraPtr& fb) {
  auto P = std::make_shared<Pairing>();
  P->name = "Ubplus-FBplus";
  P->left = ub;
  P->right = fb;
  const Q lam = ub->lambda;
  P->gen = [lam](Letter a, Letter b) -> Q {
    if (a == kX) return b == kBeta ? Q(1) : Q(0);
    if (b == kAlpha) return lam;
    if (b == kAlphaInv) return -lam;
    return Q(0);
  };
  return P;
}

PairingPtr pairing_ucm_hcm(const AlgebraPtr& ucm, const AlgebraPtr& hcm) {
  auto P = std::make_shared<Pairing>();
  P->name = "UCM-HCM";
  P->left = ucm;
  P->right = hcm;
  const Q lam = ucm->lambda;
  auto xb = pairing_ubplus_fbplus(build({Family::Ubplus, lam, 0}), build({Family::FBplus, Q(1), 0}));
  P->gen = [lam](Letter a, Letter b) -> Q {
    if (is_kind(a, Kind::Z)) return is_kind(b, Kind::T) && index_of(a) == index_of(b) ? Q(1) : Q(0);
    if (is_kind(b, Kind::T)) return Q(0);
    if (a == kBeta) return b == kX ? Q(1) : Q(0);
    if (b == kY) return a == kAlpha ? lam : a == kAlphaInv ? -lam : Q(0);
    return Q(0);
  };
  // Normal words split as (z-block)(alpha, beta block) and (t-block)(X, Y block).
  const Pairing* self = P.get();
  P->direct = [self, xb](const Word& u, const Word& w) -> Q {
    auto zsplit = std::find_if(u.begin(), u.end(), [](Letter l) { return !is_kind(l, Kind::Z); });
    auto tsplit = std::find_if(w.begin(), w.end(), [](Letter l) { return !is_kind(l, Kind::T); });
    Q a = self->pair_recursive(Word(u.begin(), zsplit), Word(w.begin(), tsplit));
    if (is_zero(a)) return a;
    return a * xb->pair_words(Word(tsplit, w.end()), Word(zsplit, u.end()));
  };
  return P;
}

PairingPtr pairing_uheis_kheis(const AlgebraPtr& uheis, const AlgebraPtr& kheis) {
  auto P = std::make_shared<Pairing>();
  P->name = "UHeis-KHeis";
  P->left = uheis;
  P->right = kheis;
  const Q lam = uheis->lambda;
  const Algebra* L = uheis.get();
  const Algebra* R = kheis.get();
  P->gen = [lam, L, R](Letter a, Letter b) -> Q {
    if (a == kSmallZ) return b == kSmallT ? Q(2) : Q(0);
    if (b == kSmallT) return Q(0);
    if (a == kBeta) return b == kX ? Q(1) : Q(0);
    if (b == kY) return a == kAlpha ? lam : a == kAlphaInv ? -lam : Q(0);
    return counit_pairing(*L, *R, a, b);
  };
  return P;
}

// ---- closed forms ----

Q closed_form_zword_t(const std::vector<int>& ms, int n) {
  const int p = static_cast<int>(ms.size());
  int sum = 0;
  for (int m : ms) sum += m;
  if (p == 0) return n == 1 ? Q(1) : Q(0);
  if (sum != n + p - 1) return Q(0);
  Q r(1);
  int partial = 0;
  for (int j = 1; j <= p - 1; ++j) {
    partial += ms[j - 1];
    r *= Q(n + j - partial);
  }
  return r;
}

Q closed_form_z_tword(int m, const std::vector<int>& ns) {
  int hits = 0;
  for (int n : ns) {
    if (n == m) ++hits;
    else if (n != 1) return Q(0);
  }
  return hits == 1 ? Q(1) : Q(0);
}

Q closed_form_xy_ab(int j, int k, int s, int r, const Q& lambda) {
  if (j != r) return Q(0);
  return factorial(j) * qpow(lambda * s, k);
}

Q closed_form_heis(int p, int q, int r, int i, int j, int k, const Q& lambda) {
  if (i != p || j != r) return Q(0);
  return factorial(p) * qpow(Q(2), p) * factorial(j) * qpow(lambda * q, k);
}

// ---- duality axioms ----

namespace {

std::vector<Word> capped_basis(const Algebra& A, int g, size_t cap) {
  auto b = A.basis(g);
  if (cap && b.size() > cap) b.resize(cap);
  return b;
}

}  // namespace

Report check_duality(const Pairing& P, const DualityOptions& opt, const std::string& suite) {
  Report rep;
  const std::string s = suite.empty() ? "duality:" + P.name : suite;
  const Algebra& L = *P.left;
  const Algebra& R = *P.right;
  const auto BL = capped_basis(L, opt.grade_bound, opt.max_words);
  const auto BR = capped_basis(R, opt.grade_bound, opt.max_words);
  int n_prod = 0, n_coprod = 0, n_unit = 0, n_counit = 0, n_anti = 0, skipped = 0;

  auto guarded = [&](const std::string& id, const std::function<std::string()>& body) {
    try {
      std::string w = body();
      if (!w.empty()) rep.fail(s, id, w);
    } catch (const TruncationOverflow& e) {
      ++skipped;
      rep.add(s, id, Status::Skip, e.what());
    }
  };

  // <ab, x> = <a (x) b, Delta x>
  for (const Word& a : BL)
    for (const Word& b : BL) {
      if (word_grade(a) + word_grade(b) > opt.grade_bound || a.empty() || b.empty()) continue;
      for (const Word& x : BR) {
        guarded("product:" + render_word(a) + "|" + render_word(b) + "|" + render_word(x), [&]() -> std::string {
          ++n_prod;
          Q lhs = P.pair(L.mul(NCPoly::of(a), NCPoly::of(b)), NCPoly::of(x));
          Q rhs(0);
          for (const auto& [k, c] : coproduct_word(R, x).terms)
            rhs += c * P.pair_words(a, k[0]) * P.pair_words(b, k[1]);
          if (lhs == rhs) return {};
          return "<ab,x> = " + qstr(lhs) + ", <a(x)b, Dx> = " + qstr(rhs);
        });
      }
    }

  // <a, xy> = <Delta a, x (x) y>
  for (const Word& x : BR)
    for (const Word& y : BR) {
      if (word_grade(x) + word_grade(y) > opt.grade_bound || x.empty() || y.empty()) continue;
      for (const Word& a : BL) {
        guarded("coproduct:" + render_word(a) + "|" + render_word(x) + "|" + render_word(y), [&]() -> std::string {
          ++n_coprod;
          Q lhs = P.pair(NCPoly::of(a), R.mul(NCPoly::of(x), NCPoly::of(y)));
          Q rhs(0);
          for (const auto& [k, c] : coproduct_word(L, a).terms)
            rhs += c * P.pair_words(k[0], x) * P.pair_words(k[1], y);
          if (lhs == rhs) return {};
          return "<a,xy> = " + qstr(lhs) + ", <Da, x(x)y> = " + qstr(rhs);
        });
      }
    }

  for (const Word& x : BR)
    guarded("unit:" + render_word(x), [&]() -> std::string {
      ++n_unit;
      Q lhs = P.pair_words({}, x), rhs = counit_word(R, x);
      return lhs == rhs ? std::string() : "<1,x> = " + qstr(lhs) + ", e(x) = " + qstr(rhs);
    });
  for (const Word& a : BL)
    guarded("counit:" + render_word(a), [&]() -> std::string {
      ++n_counit;
      Q lhs = P.pair_words(a, {}), rhs = counit_word(L, a);
      return lhs == rhs ? std::string() : "<a,1> = " + qstr(lhs) + ", e(a) = " + qstr(rhs);
    });
  for (const Word& a : BL)
    for (const Word& x : BR)
      guarded("antipode:" + render_word(a) + "|" + render_word(x), [&]() -> std::string {
        ++n_anti;
        Q lhs = P.pair(antipode_word(L, a), NCPoly::of(x));
        Q rhs = P.pair(NCPoly::of(a), antipode_word(R, x));
        if (lhs == rhs) return {};
        return "<Sa,x> = " + qstr(lhs) + ", <a,Sx> = " + qstr(rhs);
      });

  auto summary = [&](const char* id, int n) {
    rep.pass(s, std::string("summary:") + id, std::to_string(n) + " cases");
  };
  summary("product", n_prod);
  summary("coproduct", n_coprod);
  summary("unit", n_unit);
  summary("counit", n_counit);
  summary("antipode", n_anti);
  return rep;
}

// ---- exact linear algebra ----

RankResult bareiss(std::vector<std::vector<Q>> m) {
  RankResult out;
  const size_t rows = m.size();
  const size_t cols = rows ? m[0].size() : 0;
  Q prev(1);
  int sign = 1;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && is_zero(m[piv][c])) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      std::swap(m[piv], m[r]);
      sign = -sign;
    }
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < cols; ++j) m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  out.rank = static_cast<int>(r);
  if (rows == cols) {
    if (out.rank == static_cast<int>(rows))
      out.determinant = rows ? Q(sign) * m[rows - 1][cols - 1] : Q(1);
    else
      out.determinant = Q(0);
  }
  return out;
}

GramResult gram(const Pairing& P, int grade) {
  GramResult g;
  g.left_basis = P.left->basis_exact(grade);
  g.right_basis = P.right->basis_exact(grade);
  for (const Word& a : g.left_basis) {
    std::vector<Q> row;
    for (const Word& x : g.right_basis) row.push_back(P.pair_words(a, x));
    g.matrix.push_back(std::move(row));
  }
  RankResult rr = bareiss(g.matrix);
  g.rank = rr.rank;
  g.determinant = rr.determinant;
  return g;
}

std::string render_matrix(const std::vector<std::vector<Q>>& m) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) os << ",";
    os << "[";
    for (size_t j = 0; j < m[i].size(); ++j) os << (j ? "," : "") << qstr(m[i][j]);
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace cmhopf
