#include "cmhopf/lie.hpp"

#include "cmhopf/bicross.hpp"
#include "cmhopf/mpoly.hpp"
#include "cmhopf/pairing.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <sstream>

namespace cmhopf {

LieVec lie_vec(const std::string& symbol, const Q& c) {
  LieVec v;
  if (!is_zero(c)) v[symbol] = c;
  return v;
}

LieVec& lie_add(LieVec& into, const LieVec& v, const Q& c) {
  for (const auto& [s, x] : v) {
    Q& slot = into[s];
    slot += c * x;
    if (is_zero(slot)) into.erase(s);
  }
  return into;
}

std::string render(const LieVec& v) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : v) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Q a = abs(c);
    if (a != 1) os << qstr(a) << "*";
    os << s;
  }
  return os.str();
}

void LieAlgebra::set(const std::string& a, const std::string& b, const LieVec& v) {
  table[{a, b}] = v;
  LieVec neg;
  lie_add(neg, v, Q(-1));
  table[{b, a}] = neg;
}

LieVec LieAlgebra::bracket(const std::string& a, const std::string& b) const {
  auto it = table.find({a, b});
  return it == table.end() ? LieVec{} : it->second;
}

LieVec LieAlgebra::bracket(const LieVec& u, const LieVec& v) const {
  LieVec out;
  for (const auto& [a, x] : u)
    for (const auto& [b, y] : v) lie_add(out, bracket(a, b), x * y);
  return out;
}

std::vector<std::string> LieAlgebra::non_closure() const {
  std::set<std::string> in(basis.begin(), basis.end());
  std::vector<std::string> out;
  for (const auto& a : basis)
    for (const auto& b : basis) {
      if (a >= b) continue;
      LieVec v = bracket(a, b);
      for (const auto& [s, c] : v)
        if (!in.count(s)) {
          out.push_back("[" + a + "," + b + "] = " + render(v));
          break;
        }
    }
  return out;
}

LieAlgebra lie_bplus(const Q& lambda) {
  LieAlgebra g;
  g.name = "b+";
  g.basis = {"X", "Y"};
  g.set("Y", "X", lie_vec("X", lambda));
  return g;
}

LieAlgebra lie_line() {
  LieAlgebra g;
  g.name = "r";
  g.basis = {"z"};
  return g;
}

LieAlgebra lie_sl2() {
  LieAlgebra g;
  g.name = "sl2";
  g.basis = {"E", "F", "H"};
  g.set("H", "E", lie_vec("E", Q(2)));
  g.set("H", "F", lie_vec("F", Q(-2)));
  g.set("E", "F", lie_vec("H"));
  return g;
}

LieAlgebra lie_abelian(int dim) {
  LieAlgebra g;
  g.name = "abelian" + std::to_string(dim);
  for (int i = 1; i <= dim; ++i) g.basis.push_back("e" + std::to_string(i));
  return g;
}

LieAlgebra lie_d0(const std::vector<int>& indices) {
  LieAlgebra g;
  g.name = "d0";
  for (int n : indices) g.basis.push_back("z" + std::to_string(n));
  for (int m : indices)
    for (int n : indices)
      if (m < n) g.set("z" + std::to_string(m), "z" + std::to_string(n), lie_vec("z" + std::to_string(m + n - 1), Q(n - m)));
  return g;
}

Report check_jacobi(const LieAlgebra& g, const std::string& suite) {
  Report rep;
  const std::string s = suite.empty() ? "jacobi:" + g.name : suite;
  auto nc = g.non_closure();
  if (!nc.empty()) {
    rep.fail(s, "closed", nc.front());
    return rep;
  }
  const auto& B = g.basis;
  for (size_t i = 0; i < B.size(); ++i)
    for (size_t j = i + 1; j < B.size(); ++j)
      for (size_t k = j + 1; k < B.size(); ++k) {
        LieVec a = lie_vec(B[i]), b = lie_vec(B[j]), c = lie_vec(B[k]);
        LieVec sum;
        lie_add(sum, g.bracket(a, g.bracket(b, c)));
        lie_add(sum, g.bracket(b, g.bracket(c, a)));
        lie_add(sum, g.bracket(c, g.bracket(a, b)));
        const std::string id = "(" + B[i] + "," + B[j] + "," + B[k] + ")";
        if (sum.empty())
          rep.pass(s, id);
        else
          rep.fail(s, id, render(sum));
      }
  return rep;
}

// ---- matched pairs ----

namespace {

LieVec act(const std::map<std::pair<std::string, std::string>, LieVec>& t, const LieVec& xi, const LieVec& x) {
  LieVec out;
  for (const auto& [a, p] : xi)
    for (const auto& [b, q] : x) {
      auto it = t.find({a, b});
      if (it != t.end()) lie_add(out, it->second, p * q);
    }
  return out;
}

}  // namespace

LieVec MatchedPair::act_left(const LieVec& xi, const LieVec& x) const { return act(left_action, xi, x); }
LieVec MatchedPair::act_right(const LieVec& xi, const LieVec& x) const { return act(right_action, xi, x); }

MatchedPair sl2_matched_pair() {
  MatchedPair M;
  M.left_alg = lie_bplus();
  M.right_alg = lie_line();
  M.left_action[{"z", "X"}] = lie_vec("Y", Q(2));
  M.right_action[{"z", "Y"}] = lie_vec("z");
  return M;
}

NCPoly coaction_contraction(const NCPoly& x) {
  static const BicrossData D = kheis_data(Q(1));
  NCPoly out;
  // <t^m, z> = 2 [m = 1]
  for (const auto& [k, c] : extend_coaction(D, x).terms)
    if (k[1] == Word{kSmallT}) out.add(k[0], Q(2) * c);
  return out;
}

namespace {

LieVec linear_part_or_throw(const NCPoly& p, const std::string& what) {
  LieVec v;
  for (const auto& [w, c] : p.terms) {
    if (w.size() != 1) throw std::runtime_error(what + " is not linear: " + render(p));
    lie_add(v, lie_vec(letter_name(w[0]), c));
  }
  return v;
}

}  // namespace

MatchedPair derived_sl2_matched_pair() {
  static const BicrossData D = kheis_data(Q(1));
  MatchedPair M;
  M.left_alg = lie_bplus();
  M.right_alg = lie_line();
  for (Letter x : {kX, kY}) {
    const std::string xs = letter_name(x);
    LieVec l = linear_part_or_throw(coaction_contraction(NCPoly::gen(x)), "z |> " + xs);
    if (!l.empty()) M.left_action[{"z", xs}] = l;
    // <t^n, z <| x> = <x |> t^n, z>; only n = 1 may survive, with <t, z> = 2.
    Q coeff(0);
    for (int n = 0; n <= 4; ++n) {
      NCPoly tn = NCPoly::of(Word(static_cast<size_t>(n), kSmallT));
      NCPoly moved = extend_action(D, NCPoly::gen(x), tn);
      Q v = Q(2) * moved.coeff(Word{kSmallT});
      if (n == 1)
        coeff = v / 2;
      else if (!is_zero(v))
        throw std::runtime_error("z <| " + xs + " leaves the span of z");
    }
    if (!is_zero(coeff)) M.right_action[{"z", xs}] = lie_vec("z", coeff);
  }
  return M;
}

Report check_matched_pair(const MatchedPair& M, const std::string& suite) {
  Report rep;
  const std::string s = suite.empty() ? "matched-pair" : suite;
  const LieAlgebra& g = M.left_alg;
  const LieAlgebra& m = M.right_alg;
  auto record = [&](const std::string& id, const LieVec& lhs, const LieVec& rhs) {
    LieVec d = lhs;
    lie_add(d, rhs, Q(-1));
    if (d.empty())
      rep.pass(s, id);
    else
      rep.fail(s, id, "lhs = " + render(lhs) + ", rhs = " + render(rhs));
  };
  for (const auto& xs : m.basis) {
    LieVec xi = lie_vec(xs);
    for (const auto& a : g.basis)
      for (const auto& b : g.basis) {
        if (a >= b) continue;
        LieVec x = lie_vec(a), y = lie_vec(b);
        LieVec rhs = g.bracket(M.act_left(xi, x), y);
        lie_add(rhs, g.bracket(x, M.act_left(xi, y)));
        lie_add(rhs, M.act_left(M.act_right(xi, x), y));
        lie_add(rhs, M.act_left(M.act_right(xi, y), x), Q(-1));
        record("left-derivation:" + xs + "|>[" + a + "," + b + "]", M.act_left(xi, g.bracket(x, y)), rhs);
        LieVec r2 = M.act_right(M.act_right(xi, x), y);
        lie_add(r2, M.act_right(M.act_right(xi, y), x), Q(-1));
        record("right-action:" + xs + "<|[" + a + "," + b + "]", M.act_right(xi, g.bracket(x, y)), r2);
      }
  }
  for (const auto& xa : m.basis)
    for (const auto& xb : m.basis) {
      if (xa >= xb) continue;
      LieVec xi = lie_vec(xa), eta = lie_vec(xb);
      for (const auto& a : g.basis) {
        LieVec x = lie_vec(a);
        LieVec rhs = m.bracket(M.act_right(xi, x), eta);
        lie_add(rhs, m.bracket(xi, M.act_right(eta, x)));
        lie_add(rhs, M.act_right(xi, M.act_left(eta, x)));
        lie_add(rhs, M.act_right(eta, M.act_left(xi, x)), Q(-1));
        record("right-derivation:[" + xa + "," + xb + "]<|" + a, M.act_right(m.bracket(xi, eta), x), rhs);
        LieVec l2 = M.act_left(xi, M.act_left(eta, x));
        lie_add(l2, M.act_left(eta, M.act_left(xi, x)), Q(-1));
        record("left-action:[" + xa + "," + xb + "]|>" + a, M.act_left(m.bracket(xi, eta), x), l2);
      }
    }
  if (rep.checks.empty()) rep.pass(s, "no-conditions", "one-dimensional r, two-dimensional b+: only derivation laws");
  return rep;
}

LieAlgebra build_double(const MatchedPair& M) {
  Report r = check_matched_pair(M);
  if (!r.ok()) {
    const Check* f = r.first_failure();
    throw NotMatched(f->id + ": " + f->witness);
  }
  LieAlgebra d;
  d.name = M.left_alg.name + "|><|" + M.right_alg.name;
  d.basis = M.left_alg.basis;
  d.basis.insert(d.basis.end(), M.right_alg.basis.begin(), M.right_alg.basis.end());
  for (const auto& [k, v] : M.left_alg.table) d.table[k] = v;
  for (const auto& [k, v] : M.right_alg.table) d.table[k] = v;
  for (const auto& xs : M.right_alg.basis)
    for (const auto& a : M.left_alg.basis) {
      LieVec v = M.act_right(lie_vec(xs), lie_vec(a));
      lie_add(v, M.act_left(lie_vec(xs), lie_vec(a)));
      d.set(xs, a, v);
    }
  return d;
}

// ---- sl2 recognition ----

namespace {

using Mat = std::vector<std::vector<Q>>;

// Column j holds the coordinates of ad(h)(basis_j).
Mat ad_matrix(const LieAlgebra& g, const LieVec& h) {
  const size_t n = g.basis.size();
  Mat m(n, std::vector<Q>(n, Q(0)));
  for (size_t j = 0; j < n; ++j) {
    LieVec v = g.bracket(h, lie_vec(g.basis[j]));
    for (size_t i = 0; i < n; ++i) {
      auto it = v.find(g.basis[i]);
      if (it != v.end()) m[i][j] = it->second;
    }
  }
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  const size_t n = a.size();
  Mat c(n, std::vector<Q>(n, Q(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k)
      if (!is_zero(a[i][k]))
        for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Q trace(const Mat& a) {
  Q t(0);
  for (size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

// Kernel of m as a list of basis vectors.
std::vector<std::vector<Q>> kernel(Mat m) {
  const size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<int> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && is_zero(m[p][c])) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Q inv = Q(1) / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (size_t i = 0; i < rows; ++i)
      if (i != r && !is_zero(m[i][c])) {
        Q f = m[i][c];
        for (size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
      }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<std::vector<Q>> out;
  for (size_t f = 0; f < cols; ++f) {
    if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(f)) != pivot_col.end()) continue;
    std::vector<Q> v(cols, Q(0));
    v[f] = 1;
    for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m[i][f];
    out.push_back(v);
  }
  return out;
}

LieVec from_coords(const LieAlgebra& g, const std::vector<Q>& v) {
  LieVec out;
  for (size_t i = 0; i < v.size(); ++i) lie_add(out, lie_vec(g.basis[i], v[i]));
  return out;
}

std::vector<Q> coords(const LieAlgebra& g, const LieVec& v) {
  std::vector<Q> out(g.basis.size(), Q(0));
  for (size_t i = 0; i < g.basis.size(); ++i) {
    auto it = v.find(g.basis[i]);
    if (it != v.end()) out[i] = it->second;
  }
  return out;
}

}  // namespace

Sl2Iso iso_to_sl2(const LieAlgebra& g) {
  Sl2Iso res;
  if (g.basis.size() != 3) {
    res.reason = "dimension " + std::to_string(g.basis.size()) + " != 3";
    return res;
  }
  auto nc = g.non_closure();
  if (!nc.empty()) {
    res.reason = "not closed: " + nc.front();
    return res;
  }
  if (!check_jacobi(g).ok()) {
    res.reason = "Jacobi identity fails";
    return res;
  }
  // Killing form
  Mat K(3, std::vector<Q>(3, Q(0)));
  std::vector<Mat> ads;
  for (const auto& b : g.basis) ads.push_back(ad_matrix(g, lie_vec(b)));
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) K[i][j] = trace(mat_mul(ads[i], ads[j]));
  RankResult kr = bareiss(K);
  if (kr.rank < 3) {
    res.reason = "degenerate Killing form (rank " + std::to_string(kr.rank) + ")";
    return res;
  }
  // Search small integer combinations for ad-semisimple h with spectrum {0, mu, -mu}.
  std::vector<std::vector<int>> candidates;
  const int vals[] = {0, 1, -1, 2, -2};
  for (int a : vals)
    for (int b : vals)
      for (int c : vals)
        if (a || b || c) candidates.push_back({a, b, c});
  std::stable_sort(candidates.begin(), candidates.end(), [](const auto& u, const auto& v) {
    return std::abs(u[0]) + std::abs(u[1]) + std::abs(u[2]) < std::abs(v[0]) + std::abs(v[1]) + std::abs(v[2]);
  });
  for (const auto& cand : candidates) {
    LieVec h;
    for (size_t i = 0; i < 3; ++i) lie_add(h, lie_vec(g.basis[i], Q(cand[i])));
    Mat A = ad_matrix(g, h);
    // det(mu - A) = mu^3 - tr mu^2 + s mu - det
    Mat A2 = mat_mul(A, A);
    Q tr = trace(A), s = (tr * tr - trace(A2)) / 2;
    Q det = *bareiss(A).determinant;
    std::vector<Q> roots = rational_roots({-det, s, -tr, Q(1)});
    if (!is_zero(tr) || !is_zero(det) || roots.size() != 3) continue;
    Q mu(0);
    for (const Q& r : roots)
      if (r > 0) mu = r;
    if (is_zero(mu)) continue;
    LieVec hs;
    lie_add(hs, h, Q(2) / mu);
    Mat As = ad_matrix(g, hs);
    auto shifted = [&](const Q& ev) {
      Mat m = As;
      for (size_t i = 0; i < 3; ++i) m[i][i] -= ev;
      return kernel(m);
    };
    auto ke = shifted(Q(2)), kf = shifted(Q(-2));
    if (ke.size() != 1 || kf.size() != 1) continue;
    LieVec e = from_coords(g, ke[0]), f0 = from_coords(g, kf[0]);
    LieVec ef = g.bracket(e, f0);
    // [e, f0] = kappa hs
    auto hc = coords(g, hs), efc = coords(g, ef);
    Q kappa(0);
    bool prop = true;
    for (size_t i = 0; i < 3; ++i)
      if (!is_zero(hc[i])) {
        kappa = efc[i] / hc[i];
        break;
      }
    for (size_t i = 0; i < 3; ++i) prop = prop && efc[i] == kappa * hc[i];
    if (!prop || is_zero(kappa)) continue;
    LieVec f;
    lie_add(f, f0, Q(1) / kappa);
    // Columns: images of H, E, F in g; invert to express g's basis.
    Mat P(3, std::vector<Q>(6, Q(0)));
    auto ch = coords(g, hs), ce = coords(g, e), cf = coords(g, f);
    for (size_t i = 0; i < 3; ++i) {
      P[i][0] = ch[i];
      P[i][1] = ce[i];
      P[i][2] = cf[i];
      P[i][3 + i] = 1;
    }
    // Gauss-Jordan on [P | I].
    for (size_t c = 0; c < 3; ++c) {
      size_t p = c;
      while (p < 3 && is_zero(P[p][c])) ++p;
      std::swap(P[p], P[c]);
      Q inv = Q(1) / P[c][c];
      for (auto& x : P[c]) x *= inv;
      for (size_t i = 0; i < 3; ++i)
        if (i != c && !is_zero(P[i][c])) {
          Q fac = P[i][c];
          for (size_t j = 0; j < 6; ++j) P[i][j] -= fac * P[c][j];
        }
    }
    const std::string names[3] = {"H", "E", "F"};
    for (size_t j = 0; j < 3; ++j) {
      LieVec img;
      for (size_t i = 0; i < 3; ++i) lie_add(img, lie_vec(names[i], P[i][3 + j]));
      res.image[g.basis[j]] = img;
    }
    res.found = true;
    return res;
  }
  res.reason = "no ad-semisimple element with rational spectrum {0, mu, -mu} among small combinations";
  return res;
}

Report check_lie_morphism(const LieAlgebra& g, const LieAlgebra& target, const std::map<std::string, LieVec>& image,
                          const std::string& suite) {
  Report rep;
  const std::string s = suite.empty() ? "lie-morphism:" + g.name + "->" + target.name : suite;
  auto map_vec = [&](const LieVec& v) {
    LieVec out;
    for (const auto& [b, c] : v) lie_add(out, image.at(b), c);
    return out;
  };
  for (const auto& a : g.basis)
    for (const auto& b : g.basis) {
      if (a >= b) continue;
      LieVec lhs = map_vec(g.bracket(a, b));
      LieVec rhs = target.bracket(image.at(a), image.at(b));
      const std::string id = "[" + a + "," + b + "]";
      LieVec d = lhs;
      lie_add(d, rhs, Q(-1));
      if (d.empty())
        rep.pass(s, id);
      else
        rep.fail(s, id, "phi[a,b] = " + render(lhs) + ", [phi a, phi b] = " + render(rhs));
    }
  Mat m(g.basis.size(), std::vector<Q>(target.basis.size(), Q(0)));
  for (size_t i = 0; i < g.basis.size(); ++i) m[i] = coords(target, image.at(g.basis[i]));
  RankResult r = bareiss(m);
  if (r.rank == static_cast<int>(target.basis.size()) && g.basis.size() == target.basis.size())
    rep.pass(s, "bijective");
  else
    rep.fail(s, "bijective", "rank " + std::to_string(r.rank));
  return rep;
}

// ---- group level ----

BPoint bplus_mul(const BPoint& x, const BPoint& y) { return {x.a * y.a, x.a * y.b + x.b}; }

namespace {

Q one_minus_bc(const Q& c, const BPoint& g) {
  Q d = Q(1) - g.b * c;
  if (is_zero(d)) throw SingularSample("1 - bc = 0 at b = " + qstr(g.b) + ", c = " + qstr(c));
  return d;
}

std::string show(const BPoint& g) { return "(" + qstr(g.a) + "," + qstr(g.b) + ")"; }

// p + q sqrt(r) for a fixed r per sample.
struct Surd {
  Q p, q;
};

Surd smul(const Surd& x, const Surd& y, const Q& r) { return {x.p * y.p + x.q * y.q * r, x.p * y.q + x.q * y.p}; }
Surd sadd(const Surd& x, const Surd& y) { return {x.p + y.p, x.q + y.q}; }
bool seq(const Surd& x, const Surd& y) { return x.p == y.p && x.q == y.q; }

using SMat = std::array<std::array<Surd, 2>, 2>;

SMat smat_mul(const SMat& a, const SMat& b, const Q& r) {
  SMat c;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] = sadd(smul(a[i][0], b[0][j], r), smul(a[i][1], b[1][j], r));
  return c;
}

// Embedding of (a', b') with sqrt(a') = s sqrt(r), s > 0, inside Q(sqrt r).
SMat embed_b(const Q& ap, const Q& bp, const Q& s, const Q& r) {
  (void)ap;
  SMat m;
  m[0][0] = {Q(0), s};
  m[0][1] = {Q(0), bp / (s * r)};
  m[1][0] = {Q(0), Q(0)};
  m[1][1] = {Q(0), Q(1) / (s * r)};
  return m;
}

SMat embed_line(const Q& c) {
  SMat m;
  m[0][0] = {Q(1), Q(0)};
  m[0][1] = {Q(0), Q(0)};
  m[1][0] = {Q(-c), Q(0)};
  m[1][1] = {Q(1), Q(0)};
  return m;
}

std::string show(const SMat& m) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      os << (i || j ? ", " : "") << qstr(m[i][j].p) << (m[i][j].q < 0 ? " - " : " + ") << qstr(abs(m[i][j].q))
         << "*sqrt(a)";
  os << "]";
  return os.str();
}

}  // namespace

BPoint line_act(const Q& c, const BPoint& g) {
  Q d = one_minus_bc(c, g);
  return {g.a / (d * d), g.b / d};
}

Q line_react(const Q& c, const BPoint& g) { return g.a * c / one_minus_bc(c, g); }

Report group_actions_check(const std::vector<GroupSample>& samples, const std::string& suite) {
  Report rep;
  const std::string s = suite.empty() ? "group-actions" : suite;
  const size_t n = samples.size();
  for (size_t i = 0; i < n; ++i) {
    const GroupSample& X = samples[i];
    const std::string tag = "#" + std::to_string(i) + " c=" + qstr(X.c) + " g=" + show(X.g);
    if (X.g.a <= 0) throw SingularSample("a <= 0 in " + tag);
    const Q d = one_minus_bc(X.c, X.g);
    // Matrix identity in Q(sqrt a).
    const Q r = X.g.a;
    BPoint moved = line_act(X.c, X.g);
    Q back = line_react(X.c, X.g);
    Q sabs = Q(1) / abs(d);
    SMat lhs = smat_mul(embed_line(X.c), embed_b(X.g.a, X.g.b, Q(1), r), r);
    SMat rhs = smat_mul(embed_b(moved.a, moved.b, sabs, r), embed_line(back), r);
    bool same = true, negated = true;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        same = same && seq(lhs[a][b], rhs[a][b]);
        negated = negated && seq(lhs[a][b], {-rhs[a][b].p, -rhs[a][b].q});
      }
    if (d > 0) {
      if (same)
        rep.pass(s, "matrix:" + tag);
      else
        rep.fail(s, "matrix:" + tag, "(c)(a,b) = " + show(lhs) + ", (c|>g)(c<|g) = " + show(rhs));
    } else {
      if (negated)
        rep.pass(s, "matrix-up-to-sign:" + tag, "1 - bc < 0: sides differ by -I");
      else
        rep.fail(s, "matrix-up-to-sign:" + tag, "(c)(a,b) = " + show(lhs) + ", (c|>g)(c<|g) = " + show(rhs));
    }
    // Laws against the next sample.
    const GroupSample& Y = samples[(i + 1) % n];
    auto law = [&](const std::string& id, auto&& body) {
      try {
        std::string w = body();
        if (w.empty())
          rep.pass(s, id + ":" + tag);
        else
          rep.fail(s, id + ":" + tag, w);
      } catch (const SingularSample& e) {
        rep.add(s, id + ":" + tag, Status::Skip, e.what());
      }
    };
    auto eqp = [](const BPoint& u, const BPoint& v) { return u.a == v.a && u.b == v.b; };
    law("left-action", [&]() -> std::string {
      BPoint u = line_act(X.c + Y.c, X.g), v = line_act(X.c, line_act(Y.c, X.g));
      return eqp(u, v) ? "" : show(u) + " vs " + show(v);
    });
    law("right-action", [&]() -> std::string {
      Q u = line_react(X.c, bplus_mul(X.g, Y.g)), v = line_react(line_react(X.c, X.g), Y.g);
      return u == v ? "" : qstr(u) + " vs " + qstr(v);
    });
    law("left-compat", [&]() -> std::string {
      BPoint u = line_act(X.c, bplus_mul(X.g, Y.g));
      BPoint v = bplus_mul(line_act(X.c, X.g), line_act(line_react(X.c, X.g), Y.g));
      return eqp(u, v) ? "" : show(u) + " vs " + show(v);
    });
    law("right-compat", [&]() -> std::string {
      Q u = line_react(X.c + Y.c, X.g);
      Q v = line_react(X.c, line_act(Y.c, X.g)) + line_react(Y.c, X.g);
      return u == v ? "" : qstr(u) + " vs " + qstr(v);
    });
    law("units", [&]() -> std::string {
      if (!eqp(line_act(Q(0), X.g), X.g) || !is_zero(line_react(Q(0), X.g))) return "c = 0 acts nontrivially";
      if (!eqp(line_act(X.c, {Q(1), Q(0)}), {Q(1), Q(0)}) || line_react(X.c, {Q(1), Q(0)}) != X.c)
        return "identity of B+ acted on nontrivially";
      return "";
    });
  }
  return rep;
}

std::vector<GroupSample> random_group_samples(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9), pos(1, 9), den(1, 7);
  auto rnd = [&]() { return Q(num(rng), den(rng)); };
  std::vector<GroupSample> out;
  while (static_cast<int>(out.size()) < n) {
    GroupSample g{rnd(), {Q(pos(rng), den(rng)), rnd()}};
    g.c.canonicalize();
    g.g.a.canonicalize();
    g.g.b.canonicalize();
    if (is_zero(Q(1) - g.g.b * g.c)) continue;
    out.push_back(g);
  }
  return out;
}

std::vector<GroupSample> parse_group_samples(const std::string& text) {
  std::vector<GroupSample> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto h = line.find('#');
    if (h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string c, a, b;
    if (!(ls >> c)) continue;
    if (!(ls >> a >> b)) throw std::invalid_argument("sample needs three rationals: " + line);
    out.push_back({parse_rational(c), {parse_rational(a), parse_rational(b)}});
  }
  return out;
}

}  // namespace cmhopf
