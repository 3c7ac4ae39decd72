#include "cmhopf/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace cmhopf {

namespace {

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono out;
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

void add_term(std::map<Mono, Q>& t, const Mono& m, const Q& c) {
  if (is_zero(c)) return;
  auto it = t.find(m);
  if (it == t.end()) {
    t.emplace(m, c);
  } else {
    it->second += c;
    if (is_zero(it->second)) t.erase(it);
  }
}

}  // namespace

MPoly MPoly::constant(const Q& c) {
  MPoly p;
  add_term(p.terms, {}, c);
  return p;
}

MPoly MPoly::var(int v, const Q& c) {
  MPoly p;
  add_term(p.terms, {{v, 1}}, c);
  return p;
}

bool MPoly::is_constant() const { return terms.empty() || (terms.size() == 1 && terms.begin()->first.empty()); }

Q MPoly::constant_term() const {
  auto it = terms.find(Mono{});
  return it == terms.end() ? Q(0) : it->second;
}

int MPoly::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms) {
    int e = 0;
    for (auto [v, k] : m) e += k;
    d = std::max(d, e);
  }
  return d;
}

std::set<int> MPoly::vars() const {
  std::set<int> out;
  for (const auto& [m, c] : terms)
    for (auto [v, k] : m) out.insert(v);
  return out;
}

bool MPoly::linear_in(int v, MPoly& coeff, MPoly& rest) const {
  coeff = MPoly();
  rest = MPoly();
  for (const auto& [m, c] : terms) {
    auto it = std::find_if(m.begin(), m.end(), [v](auto p) { return p.first == v; });
    if (it == m.end()) {
      add_term(rest.terms, m, c);
    } else if (it->second == 1) {
      Mono r = m;
      r.erase(r.begin() + (it - m.begin()));
      add_term(coeff.terms, r, c);
    } else {
      return false;
    }
  }
  return !coeff.is_zero();
}

MPoly MPoly::substitute(int v, const MPoly& value) const {
  return substitute(std::map<int, MPoly>{{v, value}});
}

MPoly MPoly::substitute(const std::map<int, MPoly>& s) const {
  MPoly out;
  std::map<std::pair<int, int>, MPoly> powers;
  auto power = [&](int v, int k) -> const MPoly& {
    auto key = std::make_pair(v, k);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    MPoly p = MPoly::constant(Q(1));
    for (int i = 0; i < k; ++i) p = p * s.at(v);
    return powers.emplace(key, p).first->second;
  };
  for (const auto& [m, c] : terms) {
    Mono kept;
    MPoly factor = MPoly::constant(c);
    for (auto [v, k] : m) {
      if (s.count(v))
        factor = factor * power(v, k);
      else
        kept.emplace_back(v, k);
    }
    MPoly km;
    km.terms.emplace(kept, Q(1));
    out += factor * km;
  }
  return out;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [m, c] : o.terms) add_term(terms, m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [m, c] : o.terms) add_term(terms, m, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Q& c) {
  if (cmhopf::is_zero(c)) {
    terms.clear();
    return *this;
  }
  for (auto& [m, v] : terms) v *= c;
  return *this;
}

MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
MPoly operator-(MPoly a) { return a *= Q(-1); }
MPoly operator*(const Q& c, MPoly a) { return a *= c; }

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) add_term(out.terms, mono_mul(ma, mb), ca * cb);
  return out;
}

std::string render(const MPoly& p, const std::function<std::string(int)>& name) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest degree first.
  std::vector<std::pair<Mono, Q>> ts(p.terms.rbegin(), p.terms.rend());
  for (const auto& [m, c] : ts) {
    Q a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (a == 1) && !m.empty();
    if (!unit) os << qstr(a);
    bool star = !unit;
    for (auto [v, k] : m) {
      if (star) os << "*";
      os << name(v);
      if (k > 1) os << "^" << k;
      star = true;
    }
  }
  return os.str();
}

// ---- linear systems ----

namespace {

struct Row {
  std::map<int, Q> a;
  Q c{0};
};

Row to_row(const MPoly& p) {
  Row r;
  for (const auto& [m, c] : p.terms) {
    if (m.empty())
      r.c += c;
    else if (m.size() == 1 && m[0].second == 1)
      r.a[m[0].first] += c;
    else
      throw std::invalid_argument("solve_linear: nonlinear equation");
  }
  return r;
}

void axpy(Row& r, const Row& s, const Q& k) {
  for (const auto& [v, c] : s.a) {
    Q& x = r.a[v];
    x += k * c;
    if (is_zero(x)) r.a.erase(v);
  }
  r.c += k * s.c;
}

}  // namespace

bool solve_linear(const std::vector<MPoly>& eqs, Substitution& out) {
  // pivot var -> expression over free vars (v = expr.a . vars + expr.c)
  std::map<int, Row> piv;
  std::map<int, std::set<int>> uses;  // free var -> pivots mentioning it
  for (const MPoly& e : eqs) {
    Row r = to_row(e);
    Row red;
    red.c = r.c;
    for (const auto& [v, c] : r.a) {
      auto it = piv.find(v);
      if (it == piv.end()) {
        Q& x = red.a[v];
        x += c;
        if (is_zero(x)) red.a.erase(v);
      } else {
        axpy(red, it->second, c);
      }
    }
    if (red.a.empty()) {
      if (!is_zero(red.c)) return false;
      continue;
    }
    // Pivot on the variable with the fewest uses to limit fill-in.
    int v = red.a.begin()->first;
    size_t best = SIZE_MAX;
    for (const auto& [w, c] : red.a) {
      size_t u = uses.count(w) ? uses[w].size() : 0;
      if (u < best) {
        best = u;
        v = w;
      }
    }
    Q cv = red.a[v];
    Row expr;
    for (const auto& [w, c] : red.a)
      if (w != v) expr.a[w] = -c / cv;
    expr.c = -red.c / cv;
    if (uses.count(v)) {
      for (int p : uses[v]) {
        Row& pr = piv[p];
        Q k = pr.a[v];
        pr.a.erase(v);
        for (const auto& [w, c] : expr.a) {
          Q& x = pr.a[w];
          x += k * c;
          if (is_zero(x)) {
            pr.a.erase(w);
            uses[w].erase(p);
          } else {
            uses[w].insert(p);
          }
        }
        pr.c += k * expr.c;
      }
      uses.erase(v);
    }
    for (const auto& [w, c] : expr.a) uses[w].insert(v);
    piv[v] = std::move(expr);
  }
  out.clear();
  for (const auto& [v, r] : piv) {
    MPoly p = MPoly::constant(r.c);
    for (const auto& [w, c] : r.a) p += MPoly::var(w, c);
    out[v] = p;
  }
  return true;
}

// ---- rational roots ----

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  if (n > mpz_class("1000000000000")) throw UnsupportedSystem("coefficient too large for root search");
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

Q eval(const std::vector<Q>& c, const Q& x) {
  Q r(0);
  for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
  return r;
}

void trim(std::vector<Q>& c) {
  while (!c.empty() && is_zero(c.back())) c.pop_back();
}

// Divide by (x - r).
std::vector<Q> deflate(const std::vector<Q>& c, const Q& r) {
  std::vector<Q> q(c.size() - 1);
  Q carry(0);
  for (size_t i = c.size(); i-- > 1;) {
    carry = c[i] + carry * r;
    q[i - 1] = carry;
  }
  return q;
}

}  // namespace

std::vector<Q> rational_roots(std::vector<Q> c) {
  trim(c);
  std::vector<Q> roots;
  if (c.size() <= 1) return roots;
  size_t z = 0;
  while (z < c.size() && is_zero(c[z])) ++z;
  if (z > 0) {
    roots.push_back(Q(0));
    c.erase(c.begin(), c.begin() + z);
  }
  if (c.size() <= 1) return roots;
  mpz_class l = 1;
  for (const Q& x : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<mpz_class> ic;
  for (const Q& x : c) ic.push_back(mpz_class(x * l));
  for (const mpz_class& p : divisors(ic.front()))
    for (const mpz_class& q : divisors(ic.back()))
      for (int s : {1, -1}) {
        Q r(mpz_class(s * p), q);
        r.canonicalize();
        if (std::find(roots.begin(), roots.end(), r) == roots.end() && is_zero(eval(c, r)))
          roots.push_back(r);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// ---- polynomial systems ----

namespace {

MPoly monic(const MPoly& p) {
  MPoly q = p;
  Q lead = p.terms.rbegin()->second;
  q *= Q(1) / lead;
  return q;
}

class Solver {
 public:
  PolySolveResult out;

  void run(std::vector<MPoly> eqs, Substitution sub, int depth) {
    if (depth > 64) throw UnsupportedSystem("branching too deep");
    for (;;) {
      std::set<MPoly> uniq;
      for (const MPoly& e : eqs) {
        MPoly r = sub.empty() ? e : e.substitute(sub);
        if (r.is_zero()) continue;
        if (r.is_constant()) return;  // inconsistent branch
        uniq.insert(monic(r));
      }
      eqs.assign(uniq.begin(), uniq.end());
      if (eqs.empty()) {
        out.solutions.push_back(sub);
        return;
      }
      std::sort(eqs.begin(), eqs.end(), [](const MPoly& a, const MPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.terms.size() < b.terms.size();
      });

      if (eliminate_one(eqs, sub)) continue;

      // Monomial factor: branch on each variable and on the cofactor.
      for (size_t i = 0; i < eqs.size(); ++i) {
        Mono g = common_factor(eqs[i]);
        if (g.empty()) continue;
        for (auto [v, k] : g) {
          auto e2 = eqs;
          e2.push_back(MPoly::var(v));
          run(e2, sub, depth + 1);
        }
        eqs[i] = divide(eqs[i], g);
        return run(eqs, sub, depth + 1);
      }

      // Univariate equation: branch on its rational roots.
      for (const MPoly& e : eqs) {
        auto vs = e.vars();
        if (vs.size() != 1) continue;
        int v = *vs.begin();
        std::vector<Q> c(e.degree() + 1, Q(0));
        for (const auto& [m, a] : e.terms) c[m.empty() ? 0 : m[0].second] = a;
        auto roots = rational_roots(c);
        std::vector<Q> rest = c;
        for (const Q& r : roots)
          while (rest.size() > 1 && is_zero(eval(rest, r))) rest = deflate(rest, r);
        trim(rest);
        if (rest.size() > 1) out.irrational.push_back(render(e, [](int i) { return "p" + std::to_string(i); }));
        for (const Q& r : roots) {
          Substitution s2 = sub;
          bind(s2, v, MPoly::constant(r));
          run(eqs, s2, depth + 1);
        }
        return;
      }
      std::ostringstream os;
      for (const MPoly& e : eqs) os << render(e, [](int i) { return "p" + std::to_string(i); }) << "; ";
      throw UnsupportedSystem(os.str());
    }
  }

 private:
  static void bind(Substitution& sub, int v, const MPoly& value) {
    for (auto& [w, e] : sub) e = e.substitute(v, value);
    sub[v] = value;
  }

  // Solve some equation for a variable that occurs linearly with a constant coefficient.
  static bool eliminate_one(const std::vector<MPoly>& eqs, Substitution& sub) {
    for (const MPoly& e : eqs)
      for (int v : e.vars()) {
        MPoly coeff, rest;
        if (!e.linear_in(v, coeff, rest) || !coeff.is_constant()) continue;
        MPoly value = rest;
        value *= Q(-1) / coeff.constant_term();
        bind(sub, v, value);
        return true;
      }
    return false;
  }

  static Mono common_factor(const MPoly& p) {
    Mono g = p.terms.begin()->first;
    for (const auto& [m, c] : p.terms) {
      Mono ng;
      for (auto [v, k] : g) {
        auto it = std::find_if(m.begin(), m.end(), [v](auto q) { return q.first == v; });
        if (it != m.end()) ng.emplace_back(v, std::min(k, it->second));
      }
      g = ng;
      if (g.empty()) break;
    }
    return g;
  }

  static MPoly divide(const MPoly& p, const Mono& g) {
    MPoly out;
    for (const auto& [m, c] : p.terms) {
      Mono r;
      for (auto [v, k] : m) {
        auto it = std::find_if(g.begin(), g.end(), [v](auto q) { return q.first == v; });
        int e = k - (it == g.end() ? 0 : it->second);
        if (e > 0) r.emplace_back(v, e);
      }
      out.terms[r] += c;
    }
    return out;
  }
};

}  // namespace

PolySolveResult solve_polynomial(const std::vector<MPoly>& eqs, const Substitution& start) {
  Solver s;
  s.run(eqs, start, 0);
  return s.out;
}

}  // namespace cmhopf
