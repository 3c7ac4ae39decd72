#include "cmhopf/family.hpp"

#include "cmhopf/hopf.hpp"
#include "cmhopf/rewrite.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <stdexcept>

namespace cmhopf {

namespace {


NCPoly word(std::initializer_list<Letter> ls, const Q& c = Q(1)) { return NCPoly::of(Word(ls), c); }

NCPoly power(Letter l, int k, const Q& c = Q(1)) { return NCPoly::of(Word(static_cast<size_t>(k), l), c); }

NCPoly times(const NCPoly& a, const NCPoly& b) { return concat(a, b); }

TensorPoly t2(const Algebra* A, const NCPoly& a, const NCPoly& b) { return tensor(a, A, b, A); }

TensorPoly primitive(const Algebra* A, Letter l) {
  return t2(A, NCPoly::gen(l), NCPoly::one()) + t2(A, NCPoly::one(), NCPoly::gen(l));
}

TensorPoly grouplike(const Algebra* A, Letter l) {
  return t2(A, NCPoly::gen(l), NCPoly::gen(l));
}

// Swap to ascending letter order (commuting letters).
RuleOut sort_pair(Letter a, Letter b) {
  if (a > b) return RuleOut::rewrite(word({b, a}));
  return RuleOut::none();
}

bool is_kind(Letter l, Kind k) { return kind_of(l) == k; }

NCPoly alpha_word(const Q& q) {
  if (is_zero(q)) return NCPoly::one();
  return NCPoly::gen(alpha_q(q));
}

// Partitions of n, reported as multiplicities counts[p] for parts p = 1..n.
void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> counts(n + 1, 0);
  std::function<void(int, int)> rec = [&](int left, int maxp) {
    if (left == 0) {
      f(counts);
      return;
    }
    for (int p = std::min(left, maxp); p >= 1; --p) {
      ++counts[p];
      rec(left - p, p);
      --counts[p];
    }
  };
  rec(n, n);
}

// Sorted t-word with counts[p] copies of t_{p+1}.
Word t_word_from_parts(const std::vector<int>& counts) {
  Word w;
  for (size_t p = 1; p < counts.size(); ++p)
    for (int i = 0; i < counts[p]; ++i) w.push_back(tgen(static_cast<int>(p) + 1));
  return w;
}

void require_index(int n, int N) {
  if (n > N) throw TruncationOverflow(n);
}

// ---- t-block data shared by k[D0], H_CM and H_CM-left ----

// sum_k P_{n,k} (x) t_k, or its flip sum_k t_k (x) P_{n,k}.
TensorPoly delta_t(const Algebra* A, int n, bool flip = false) {
  TensorPoly r({A, A});
  for (int k = 1; k <= n; ++k) {
    NCPoly left = composition_sum(n, k);
    NCPoly right = (k == 1) ? NCPoly::one() : NCPoly::gen(tgen(k));
    r += flip ? t2(A, right, left) : t2(A, left, right);
  }
  return r;
}

RuleOut t_block_rule(Letter a, Letter b) {
  if (is_kind(a, Kind::T) && is_kind(b, Kind::T)) return sort_pair(a, b);
  return RuleOut::none();
}

std::vector<Letter> t_gens(int N) {
  std::vector<Letter> g;
  for (int n = 2; n <= N; ++n) g.push_back(tgen(n));
  return g;
}

std::vector<Letter> z_gens(int N) {
  std::vector<Letter> g;
  for (int n = 2; n <= N; ++n) g.push_back(zgen(n));
  return g;
}

// [z_m, z_n] = sign (n - m) z_{m+n-1}
RuleOut z_block_rule(Letter a, Letter b, int N, int sign = 1) {
  if (!is_kind(a, Kind::Z) || !is_kind(b, Kind::Z)) return RuleOut::none();
  const int m = static_cast<int>(index_of(a)), n = static_cast<int>(index_of(b));
  if (m <= n) return RuleOut::none();
  const int k = m + n - 1;
  if (k > N) return RuleOut::over(k);
  return RuleOut::rewrite(word({b, a}) + word({zgen(k)}, Q(sign * (n - m))));
}

// Relations shared by H_CM^lambda and its left-handed twin.
RuleOut hcm_rule(Letter a, Letter b, const Q& lam, int N) {
  if (auto r = t_block_rule(a, b); r.kind != RuleOut::None) return r;
  if (a == kY && b == kX) return RuleOut::rewrite(word({kX, kY}) + word({kX}, lam));
  if ((a == kX || a == kY) && is_kind(b, Kind::T)) {
    const int n = static_cast<int>(index_of(b));
    NCPoly rhs = word({b, a});
    if (a == kY) {
      rhs += word({b}, lam * (n - 1));
    } else if (!is_zero(lam)) {
      if (n + 1 > N) return RuleOut::over(n + 1);
      rhs += word({tgen(n + 1)}, lam * (n + 1));
      rhs += word({tgen(2), b}, -2 * lam);
    }
    return RuleOut::rewrite(rhs);
  }
  return RuleOut::none();
}

AlgebraPtr make(const std::string& name, const Q& lam, int N) {
  auto A = std::make_shared<Algebra>();
  A->name = name;
  A->lambda = lam;
  A->N = N;
  return A;
}

AlgebraPtr build_fd0(int N) {
  auto A = make("FD0", Q(1), N);
  A->gens = t_gens(N);
  A->rule = [](Letter a, Letter b) { return t_block_rule(a, b); };
  const Algebra* self = A.get();
  A->delta_gen = [self](Letter l) { return delta_t(self, static_cast<int>(index_of(l))); };
  A->eps_gen = [](Letter) { return Q(0); };
  A->antipode_gen = [](Letter l) { return antipode_t_closed(static_cast<int>(index_of(l))); };
  return A;
}

AlgebraPtr build_ud0(int N) {
  auto A = make("Ud0", Q(1), N);
  A->gens = z_gens(N);
  A->rule = [N](Letter a, Letter b) { return z_block_rule(a, b, N); };
  const Algebra* self = A.get();
  A->delta_gen = [self](Letter l) { return primitive(self, l); };
  A->eps_gen = [](Letter) { return Q(0); };
  A->antipode_gen = [](Letter l) { return NCPoly::gen(l, Q(-1)); };
  return A;
}

AlgebraPtr build_ud0_op(int N) {
  auto A = build_ud0(N);
  A->name = "Ud0op";
  A->rule = [N](Letter a, Letter b) { return z_block_rule(a, b, N, -1); };
  return A;
}

AlgebraPtr build_ubplus(const Q& lam) {
  auto A = make("Ubplus", lam, 0);
  A->gens = {kX, kY};
  A->rule = [lam](Letter a, Letter b) {
    if (a == kY && b == kX) return RuleOut::rewrite(word({kX, kY}) + word({kX}, lam));
    return RuleOut::none();
  };
  const Algebra* self = A.get();
  A->delta_gen = [self](Letter l) { return primitive(self, l); };
  A->eps_gen = [](Letter) { return Q(0); };
  A->antipode_gen = [](Letter l) { return NCPoly::gen(l, Q(-1)); };
  return A;
}

// Commutative alpha^{+-1}, beta block.
RuleOut fbplus_rule(Letter a, Letter b) {
  if ((a == kAlpha && b == kAlphaInv) || (a == kAlphaInv && b == kAlpha))
    return RuleOut::rewrite(NCPoly::one());
  auto comm = [](Letter l) { return l == kAlpha || l == kAlphaInv || l == kBeta; };
  if (comm(a) && comm(b)) return sort_pair(a, b);
  return RuleOut::none();
}

void fbplus_structure(Algebra& A) {
  const Algebra* self = &A;
  A.delta_gen = [self](Letter l) -> TensorPoly {
    if (l == kBeta) return t2(self, NCPoly::gen(kAlpha), NCPoly::gen(kBeta)) +
                           t2(self, NCPoly::gen(kBeta), NCPoly::one());
    return grouplike(self, l);
  };
  A.eps_gen = [](Letter l) { return (l == kBeta) ? Q(0) : Q(1); };
  A.antipode_gen = [](Letter l) -> NCPoly {
    if (l == kAlpha) return NCPoly::gen(kAlphaInv);
    if (l == kAlphaInv) return NCPoly::gen(kAlpha);
    return word({kAlphaInv, kBeta}, Q(-1));
  };
}

AlgebraPtr build_fbplus() {
  auto A = make("FBplus", Q(1), 0);
  A->gens = {kAlpha, kAlphaInv, kBeta};
  A->rule = fbplus_rule;
  fbplus_structure(*A);
  return A;
}

AlgebraPtr build_hcm(const Q& lam, int N, bool left_handed) {
  auto A = make(left_handed ? "HCMleft" : "HCM", lam, N);
  A->gens = t_gens(N);
  A->gens.push_back(kX);
  A->gens.push_back(kY);
  A->rule = [lam, N](Letter a, Letter b) { return hcm_rule(a, b, lam, N); };
  const Algebra* self = A.get();
  A->delta_gen = [self, left_handed](Letter l) -> TensorPoly {
    if (is_kind(l, Kind::T)) return delta_t(self, static_cast<int>(index_of(l)), !left_handed);
    TensorPoly r = primitive(self, l);
    if (l == kX) {
      if (left_handed)
        r += t2(self, NCPoly::gen(tgen(2), Q(2)), NCPoly::gen(kY));
      else
        r += t2(self, NCPoly::gen(kY), NCPoly::gen(tgen(2), Q(2)));
    }
    return r;
  };
  A->eps_gen = [](Letter) { return Q(0); };
  A->antipode_gen = [left_handed](Letter l) -> NCPoly {
    if (is_kind(l, Kind::T)) return antipode_t_closed(static_cast<int>(index_of(l)));
    if (l == kY) return NCPoly::gen(kY, Q(-1));
    NCPoly r = NCPoly::gen(kX, Q(-1));
    r += left_handed ? word({tgen(2), kY}, Q(2)) : word({kY, tgen(2)}, Q(2));
    return r;
  };
  return A;
}

AlgebraPtr build_kheis(const Q& lam) {
  auto A = make("KHeis", lam, 0);
  A->gens = {kSmallT, kX, kY};
  A->rule = [lam](Letter a, Letter b) {
    if (a == kY && b == kX) return RuleOut::rewrite(word({kX, kY}) + word({kX}, lam));
    if (a == kX && b == kSmallT)
      return RuleOut::rewrite(word({kSmallT, kX}) + word({kSmallT, kSmallT}, lam / 2));
    if (a == kY && b == kSmallT) return RuleOut::rewrite(word({kSmallT, kY}) + word({kSmallT}, lam));
    return RuleOut::none();
  };
  const Algebra* self = A.get();
  A->delta_gen = [self](Letter l) {
    TensorPoly r = primitive(self, l);
    if (l == kX) r += t2(self, NCPoly::gen(kY), NCPoly::gen(kSmallT));
    return r;
  };
  A->eps_gen = [](Letter) { return Q(0); };
  A->antipode_gen = [](Letter l) {
    NCPoly r = NCPoly::gen(l, Q(-1));
    if (l == kX) r += word({kY, kSmallT});
    return r;
  };
  return A;
}

// Right action of z_n on the alpha^{+-1}, beta generators at scale lambda.
NCPoly ucm_action(Letter a, int n, const Q& lam) {
  const Q scale = qpow(lam, n - 1);
  if (a == kAlpha)
    return times(NCPoly::gen(kAlpha), power(kBeta, n - 1)) * Q(n) * scale;
  if (a == kAlphaInv)
    return times(NCPoly::gen(kAlphaInv), power(kBeta, n - 1)) * Q(-n) * scale;
  return power(kBeta, n, scale);
}

// Coefficient of alpha^{j-1} beta^{n-j} (x) z_j in Delta(z_n).
Q ucm_coproduct_coeff(int n, int j, const Q& lam) {
  return binom(n, j) * qpow(lam, n - j);
}

AlgebraPtr build_ucm(const Q& lam, int N) {
  auto A = make("UCM", lam, N);
  A->gens = z_gens(N);
  A->gens.insert(A->gens.end(), {kAlpha, kAlphaInv, kBeta});
  A->rule = [lam, N](Letter a, Letter b) {
    if (auto r = z_block_rule(a, b, N, -1); r.kind != RuleOut::None) return r;
    if (auto r = fbplus_rule(a, b); r.kind != RuleOut::None) return r;
    if ((a == kAlpha || a == kAlphaInv || a == kBeta) && is_kind(b, Kind::Z)) {
      const int n = static_cast<int>(index_of(b));
      return RuleOut::rewrite(word({b, a}) + ucm_action(a, n, lam));
    }
    return RuleOut::none();
  };
  const Algebra* self = A.get();
  A->delta_gen = [self, lam](Letter l) -> TensorPoly {
    if (!is_kind(l, Kind::Z)) {
      if (l == kBeta)
        return t2(self, NCPoly::gen(kAlpha), NCPoly::gen(kBeta)) +
               t2(self, NCPoly::gen(kBeta), NCPoly::one());
      return grouplike(self, l);
    }
    const int n = static_cast<int>(index_of(l));
    TensorPoly r = t2(self, NCPoly::gen(l), NCPoly::one());
    for (int j = 2; j <= n; ++j) {
      NCPoly left = times(power(kAlpha, j - 1), power(kBeta, n - j));
      r += t2(self, left * ucm_coproduct_coeff(n, j, lam), NCPoly::gen(zgen(j)));
    }
    return r;
  };
  A->eps_gen = [](Letter l) { return (is_kind(l, Kind::Z) || l == kBeta) ? Q(0) : Q(1); };
  A->antipode_gen = [lam](Letter l) -> NCPoly {
    if (l == kAlpha) return NCPoly::gen(kAlphaInv);
    if (l == kAlphaInv) return NCPoly::gen(kAlpha);
    if (l == kBeta) return word({kAlphaInv, kBeta}, Q(-1));
    const int n = static_cast<int>(index_of(l));
    // S(z_n) = - sum_j c_j S(alpha^{j-1} beta^{n-j}) z_j
    NCPoly r;
    for (int j = 2; j <= n; ++j) {
      Q c = -ucm_coproduct_coeff(n, j, lam);
      if ((n - j) % 2 != 0) c = -c;
      r += times(times(power(kAlphaInv, n - 1), power(kBeta, n - j)), NCPoly::gen(zgen(j))) * c;
    }
    return r;
  };
  return A;
}

AlgebraPtr build_uheis(const Q& lam) {
  auto A = make("UHeis", lam, 0);
  A->gens = {kSmallZ, kAlpha, kAlphaInv, kBeta};
  A->rule = [lam](Letter a, Letter b) {
    if (auto r = fbplus_rule(a, b); r.kind != RuleOut::None) return r;
    if ((a == kAlpha || a == kAlphaInv || a == kBeta) && b == kSmallZ)
      return RuleOut::rewrite(word({b, a}) + ucm_action(a, 2, lam));
    return RuleOut::none();
  };
  const Algebra* self = A.get();
  A->delta_gen = [self](Letter l) -> TensorPoly {
    if (l == kSmallZ)
      return t2(self, NCPoly::gen(kSmallZ), NCPoly::one()) +
             t2(self, NCPoly::gen(kAlpha), NCPoly::gen(kSmallZ));
    if (l == kBeta)
      return t2(self, NCPoly::gen(kAlpha), NCPoly::gen(kBeta)) +
             t2(self, NCPoly::gen(kBeta), NCPoly::one());
    return grouplike(self, l);
  };
  A->eps_gen = [](Letter l) { return (l == kSmallZ || l == kBeta) ? Q(0) : Q(1); };
  A->antipode_gen = [](Letter l) -> NCPoly {
    if (l == kAlpha) return NCPoly::gen(kAlphaInv);
    if (l == kAlphaInv) return NCPoly::gen(kAlpha);
    if (l == kBeta) return word({kAlphaInv, kBeta}, Q(-1));
    return word({kAlphaInv, kSmallZ}, Q(-1));
  };
  return A;
}

// ---- F[B+]_lambda and the extended bicrossproduct ----

std::vector<Letter> alpha_samples(const Q& lam) {
  std::vector<Q> qs = {Q(1, 2), Q(-1, 2), lam, -lam, 2 * lam};
  std::vector<Letter> out;
  std::set<Letter> seen;
  for (const Q& q : qs) {
    if (is_zero(q)) continue;
    Letter l = alpha_q(q);
    if (seen.insert(l).second) out.push_back(l);
  }
  return out;
}

RuleOut fbplus_lambda_rule(Letter a, Letter b) {
  if (is_kind(a, Kind::AlphaQ) && is_kind(b, Kind::AlphaQ)) {
    const Q s = alpha_exponent(a) + alpha_exponent(b);
    return RuleOut::rewrite(alpha_word(s));
  }
  auto comm = [](Letter l) { return is_kind(l, Kind::AlphaQ) || l == kBigA || l == kBeta; };
  if (comm(a) && comm(b)) return sort_pair(a, b);
  return RuleOut::none();
}

void fbplus_lambda_structure(Algebra& A, const Q& lam) {
  const Algebra* self = &A;
  A.owns_extra = [](Letter l) { return is_kind(l, Kind::AlphaQ); };
  A.delta_gen = [self, lam](Letter l) -> TensorPoly {
    if (l == kBeta) return t2(self, alpha_word(lam), NCPoly::gen(kBeta)) +
                           t2(self, NCPoly::gen(kBeta), NCPoly::one());
    if (l == kBigA) return primitive(self, l);
    return grouplike(self, l);
  };
  A.eps_gen = [](Letter l) { return is_kind(l, Kind::AlphaQ) ? Q(1) : Q(0); };
  A.antipode_gen = [lam](Letter l) -> NCPoly {
    if (is_kind(l, Kind::AlphaQ)) return alpha_word(-alpha_exponent(l));
    if (l == kBigA) return NCPoly::gen(kBigA, Q(-1));
    return times(alpha_word(-lam), NCPoly::gen(kBeta)) * Q(-1);
  };
}

AlgebraPtr build_fbplus_lambda(const Q& lam) {
  auto A = make("FBplusLam", lam, 0);
  A->gens = alpha_samples(lam);
  A->gens.insert(A->gens.end(), {kBigA, kBeta});
  A->rule = fbplus_lambda_rule;
  fbplus_lambda_structure(*A, lam);
  return A;
}

NCPoly ext_action(Letter a, int n, const Q& lam) {
  const Q scale = qpow(lam, n - 2);
  if (is_kind(a, Kind::AlphaQ))
    return times(NCPoly::gen(a), power(kBeta, n - 1)) * (Q(n) * alpha_exponent(a) * scale);
  if (a == kBigA) return power(kBeta, n - 1, Q(n) * scale);
  return power(kBeta, n, scale * lam);
}

AlgebraPtr build_fbplus_ext(const Q& lam, int N) {
  auto A = make("FBplusExt", lam, N);
  A->gens = z_gens(N);
  auto al = alpha_samples(lam);
  A->gens.insert(A->gens.end(), al.begin(), al.end());
  A->gens.insert(A->gens.end(), {kBigA, kBeta});
  A->rule = [lam, N](Letter a, Letter b) {
    if (auto r = z_block_rule(a, b, N, -1); r.kind != RuleOut::None) return r;
    if (auto r = fbplus_lambda_rule(a, b); r.kind != RuleOut::None) return r;
    if ((is_kind(a, Kind::AlphaQ) || a == kBigA || a == kBeta) && is_kind(b, Kind::Z)) {
      const int n = static_cast<int>(index_of(b));
      return RuleOut::rewrite(word({b, a}) + ext_action(a, n, lam));
    }
    return RuleOut::none();
  };
  fbplus_lambda_structure(*A, lam);
  const Algebra* self = A.get();
  auto base_delta = A->delta_gen;
  A->delta_gen = [self, lam, base_delta](Letter l) -> TensorPoly {
    if (!is_kind(l, Kind::Z)) return base_delta(l);
    const int n = static_cast<int>(index_of(l));
    TensorPoly r = t2(self, NCPoly::gen(l), NCPoly::one());
    for (int j = 2; j <= n; ++j) {
      NCPoly left = times(alpha_word(lam * (j - 1)), power(kBeta, n - j));
      r += t2(self, left * ucm_coproduct_coeff(n, j, lam), NCPoly::gen(zgen(j)));
    }
    return r;
  };
  A->eps_gen = [](Letter l) { return is_kind(l, Kind::AlphaQ) ? Q(1) : Q(0); };
  auto base_s = A->antipode_gen;
  A->antipode_gen = [lam, base_s](Letter l) -> NCPoly {
    if (!is_kind(l, Kind::Z)) return base_s(l);
    const int n = static_cast<int>(index_of(l));
    NCPoly r;
    for (int j = 2; j <= n; ++j) {
      Q c = -ucm_coproduct_coeff(n, j, lam);
      if ((n - j) % 2 != 0) c = -c;
      r += times(times(alpha_word(-lam * (n - 1)), power(kBeta, n - j)), NCPoly::gen(zgen(j))) * c;
    }
    return r;
  };
  return A;
}

AlgebraPtr build_primitive_line(const std::string& name, Letter g) {
  auto A = make(name, Q(1), 0);
  A->gens = {g};
  const Algebra* self = A.get();
  A->delta_gen = [self](Letter l) { return primitive(self, l); };
  A->eps_gen = [](Letter) { return Q(0); };
  A->antipode_gen = [](Letter l) { return NCPoly::gen(l, Q(-1)); };
  return A;
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::FD0: return "FD0";
    case Family::Ud0: return "Ud0";
    case Family::Ubplus: return "Ubplus";
    case Family::FBplus: return "FBplus";
    case Family::HCM: return "HCM";
    case Family::UCM: return "UCM";
    case Family::KHeis: return "KHeis";
    case Family::UHeis: return "UHeis";
    case Family::FBplusExt: return "FBplusExt";
    case Family::FBplusLam: return "FBplusLam";
    case Family::HCMleft: return "HCMleft";
    case Family::Kt: return "Kt";
    case Family::Uz: return "Uz";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  for (Family f : {Family::FD0, Family::Ud0, Family::Ubplus, Family::FBplus, Family::HCM,
                   Family::UCM, Family::KHeis, Family::UHeis, Family::FBplusExt,
                   Family::FBplusLam, Family::HCMleft, Family::Kt, Family::Uz})
    if (family_name(f) == s) return f;
  throw InvalidTag(s);
}

bool family_has_lambda(Family f) {
  switch (f) {
    case Family::FD0:
    case Family::Ud0:
    case Family::FBplus:
    case Family::Kt:
    case Family::Uz:
      return false;
    default:
      return true;
  }
}

bool family_is_truncated(Family f) {
  return f == Family::FD0 || f == Family::Ud0 || f == Family::HCM || f == Family::UCM ||
         f == Family::HCMleft || f == Family::FBplusExt;
}

std::string tag_name(const AlgebraTag& t) {
  std::string s = family_name(t.family);
  if (family_has_lambda(t.family)) s += "(" + qstr(t.lambda) + ")";
  if (family_is_truncated(t.family)) s += "[N=" + std::to_string(t.N) + "]";
  return s;
}

AlgebraTag parse_tag(const std::string& text) {
  AlgebraTag tag;
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  size_t end = s.find_first_of("([");
  tag.family = parse_family(s.substr(0, end));
  size_t i = end;
  while (i != std::string::npos && i < s.size()) {
    const char open = s[i];
    const size_t close = s.find(open == '(' ? ')' : ']', i);
    if (close == std::string::npos) throw InvalidTag(text);
    std::string body = s.substr(i + 1, close - i - 1);
    try {
      if (open == '(') {
        tag.lambda = parse_rational(body);
      } else {
        if (body.rfind("N=", 0) != 0) throw InvalidTag(text);
        tag.N = std::stoi(body.substr(2));
      }
    } catch (const std::invalid_argument&) {
      throw InvalidTag(text);
    }
    i = close + 1;
  }
  return tag;
}

AlgebraPtr build_ud0_opposite(int N) {
  if (N < 3) throw InvalidTag("Ud0op needs N >= 3");
  return build_ud0_op(N);
}

AlgebraPtr build(const AlgebraTag& tag) {
  if (family_is_truncated(tag.family) && tag.N < 3)
    throw InvalidTag(family_name(tag.family) + " needs N >= 3");
  const Q& lam = tag.lambda;
  switch (tag.family) {
    case Family::FD0: return build_fd0(tag.N);
    case Family::Ud0: return build_ud0(tag.N);
    case Family::Ubplus: return build_ubplus(lam);
    case Family::FBplus: return build_fbplus();
    case Family::HCM: return build_hcm(lam, tag.N, false);
    case Family::HCMleft: return build_hcm(lam, tag.N, true);
    case Family::UCM: return build_ucm(lam, tag.N);
    case Family::KHeis: return build_kheis(lam);
    case Family::UHeis: return build_uheis(lam);
    case Family::FBplusExt: return build_fbplus_ext(lam, tag.N);
    case Family::FBplusLam: return build_fbplus_lambda(lam);
    case Family::Kt: {
      auto A = build_primitive_line("Kt", kSmallT);
      return A;
    }
    case Family::Uz: return build_primitive_line("Uz", kSmallZ);
  }
  throw InvalidTag("unknown family");
}

// ---- t_n combinatorics ----

NCPoly composition_sum(int n, int k) {
  // Compositions of n into k parts; part 1 contributes t_1 = 1.
  NCPoly out;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int left, int slots) {
    if (slots == 0) {
      if (left != 0) return;
      Word w;
      for (int p : parts)
        if (p > 1) w.push_back(tgen(p));
      std::sort(w.begin(), w.end());
      out.add(w, Q(1));
      return;
    }
    for (int p = 1; p <= left - (slots - 1); ++p) {
      parts.push_back(p);
      rec(left - p, slots - 1);
      parts.pop_back();
    }
  };
  rec(n, k);
  return out;
}

NCPoly antipode_t_closed(int n) {
  // S(t_{m+1}) = sum (-1)^(m-c1) (2m-c1)! c1! / (m+1)! * prod t_j^c_j / c_j!,
  // over sum c_j = m, sum j c_j = 2m; i.e. partitions of m into parts (j-1).
  const int m = n - 1;
  if (m <= 0) return NCPoly::one();
  NCPoly out;
  for_each_partition(m, [&](const std::vector<int>& counts) {
    int parts = 0;
    Q denom(1);
    for (size_t p = 1; p < counts.size(); ++p) {
      parts += counts[p];
      denom *= factorial(counts[p]);
    }
    const int c1 = m - parts;
    if (c1 < 0) return;
    Q c = factorial(2 * m - c1) / factorial(m + 1) / denom;
    if ((m - c1) % 2 != 0) c = -c;
    out.add(t_word_from_parts(counts), c);
  });
  return out;
}

NCPoly antipode_t_recursive(int n, const Algebra& fd0) {
  // S(t_n) = - sum_{k<n} P_{n,k} S(t_k), from m(id (x) S) Delta = eps.
  if (n <= 1) return NCPoly::one();
  NCPoly r;
  for (int k = 1; k < n; ++k) {
    NCPoly sk = antipode_t_recursive(k, fd0);
    r -= fd0.mul(composition_sum(n, k), sk);
  }
  return r;
}

Letter delta_symbol(int n) { return make_letter(Kind::DeltaN, static_cast<uint32_t>(n)); }

NCPoly delta_expr(int n, const Algebra& P) {
  // delta_n = n! sum (-1)^(n-c1) (n-c1)! / (c2! ... ) prod (j t_j)^c_j,
  // over sum c_j = n+1, sum j c_j = 2n+1; i.e. partitions of n into parts (j-1).
  require_index(n + 1, P.N);
  NCPoly out;
  for_each_partition(n, [&](const std::vector<int>& counts) {
    int parts = 0;
    Q denom(1), weight(1);
    for (size_t p = 1; p < counts.size(); ++p) {
      parts += counts[p];
      denom *= factorial(counts[p]);
      weight *= qpow(Q(static_cast<long>(p) + 1), counts[p]);
    }
    const int c1 = n + 1 - parts;
    if (c1 < 0) return;
    Q c = factorial(n) * factorial(n - c1) / denom * weight;
    if ((n - c1) % 2 != 0) c = -c;
    out.add(t_word_from_parts(counts), c);
  });
  return P.normalize(out);
}

NCPoly t_expr(int n) {
  // n t_n = sum over c with sum i c_i = n-1 of prod delta_i^c_i / (c_i! (i!)^c_i).
  if (n <= 1) return NCPoly::one();
  NCPoly out;
  for_each_partition(n - 1, [&](const std::vector<int>& counts) {
    Q c(1);
    Word w;
    for (size_t i = 1; i < counts.size(); ++i) {
      c /= factorial(counts[i]) * qpow(factorial(static_cast<long>(i)), counts[i]);
      for (int k = 0; k < counts[i]; ++k) w.push_back(delta_symbol(static_cast<int>(i)));
    }
    out.add(w, c / n);
  });
  return out;
}

// ---- morphisms ----

NCPoly HopfMorphism::apply(const NCPoly& x) const { return substitute(x, images, *target); }

TensorPoly HopfMorphism::apply(const TensorPoly& t) const {
  TensorPoly r(std::vector<const Algebra*>(t.rank(), target.get()));
  for (const auto& [k, c] : t.terms) {
    TensorPoly acc = TensorPoly::scalar(c);
    for (const Word& w : k) acc = tensor(acc, TensorPoly::from_poly(apply(NCPoly::of(w)), target.get()));
    r += acc;
  }
  return r;
}

namespace {

void record(Report& rep, const std::string& suite, const std::string& id,
            const std::function<std::string()>& body) {
  try {
    std::string w = body();
    if (w.empty())
      rep.pass(suite, id);
    else
      rep.fail(suite, id, w);
  } catch (const TruncationOverflow& e) {
    rep.add(suite, id, Status::Skip, e.what());
  }
}

}  // namespace

Report check_morphism(const HopfMorphism& m, const HopfMorphism* inverse, const std::string& suite,
                      const MorphismCheckOptions& opt) {
  Report rep;
  const Algebra& S = *m.source;
  const Algebra& T = *m.target;

  for (auto [a, b] : S.rule_pairs()) {
    const std::string id = "relation " + letter_name(a) + "*" + letter_name(b);
    record(rep, suite, id, [&]() -> std::string {
      NCPoly lhs = T.mul(m.apply(NCPoly::gen(a)), m.apply(NCPoly::gen(b)));
      NCPoly rhs = m.apply(S.normalize(Word{a, b}));
      if (lhs == rhs) return {};
      return render(lhs) + " != " + render(rhs);
    });
  }

  std::vector<NCPoly> elems;
  for (Letter g : S.gens) elems.push_back(NCPoly::gen(g));
  if (opt.check_pairs)
    for (Letter g : S.gens)
      for (Letter h : S.gens) {
        Word w{g, h};
        if (S.is_normal(w)) elems.push_back(NCPoly::of(w));
      }

  for (const NCPoly& x : elems) {
    const std::string name = render(x);
    record(rep, suite, "coproduct " + name, [&]() -> std::string {
      TensorPoly lhs = m.apply(coproduct(S, x));
      TensorPoly rhs = coproduct(T, m.apply(x));
      if (lhs == rhs) return {};
      return render(lhs) + " != " + render(rhs);
    });
    record(rep, suite, "counit " + name, [&]() -> std::string {
      Q a = counit(S, x), b = counit(T, m.apply(x));
      if (a == b) return {};
      return qstr(a) + " != " + qstr(b);
    });
    record(rep, suite, "antipode " + name, [&]() -> std::string {
      NCPoly lhs = m.apply(antipode(S, x));
      NCPoly rhs = antipode(T, m.apply(x));
      if (lhs == rhs) return {};
      return render(lhs) + " != " + render(rhs);
    });
  }

  if (inverse) {
    for (Letter g : S.gens)
      record(rep, suite, "inverse after " + letter_name(g), [&]() -> std::string {
        NCPoly back = inverse->apply(m.apply(NCPoly::gen(g)));
        if (back == NCPoly::gen(g)) return {};
        return render(back);
      });
    for (Letter g : T.gens)
      record(rep, suite, "inverse before " + letter_name(g), [&]() -> std::string {
        NCPoly back = m.apply(inverse->apply(NCPoly::gen(g)));
        if (back == NCPoly::gen(g)) return {};
        return render(back);
      });
  }
  return rep;
}

HopfMorphism hcm_scaling(const AlgebraPtr& hcm1, const AlgebraPtr& hcml, const Q& lambda) {
  if (is_zero(lambda)) throw std::invalid_argument("scaling needs a nonzero parameter");
  HopfMorphism m{hcm1, hcml, {}};
  m.images[kX] = NCPoly::gen(kX, qpow(lambda, -2));
  m.images[kY] = NCPoly::gen(kY, qpow(lambda, -1));
  for (int n = 2; n <= hcm1->N; ++n) m.images[tgen(n)] = NCPoly::gen(tgen(n), qpow(lambda, 1 - n));
  return m;
}

HopfMorphism ucm_scaling(const AlgebraPtr& ucm1, const AlgebraPtr& ucml, const Q& lambda) {
  if (is_zero(lambda)) throw std::invalid_argument("scaling needs a nonzero parameter");
  HopfMorphism m{ucm1, ucml, {}};
  for (int n = 2; n <= ucm1->N; ++n) m.images[zgen(n)] = NCPoly::gen(zgen(n), qpow(lambda, n - 1));
  m.images[kBeta] = NCPoly::gen(kBeta, lambda * lambda);
  return m;
}

// ---- Heisenberg quotient ----

NCPoly HeisQuotient::reduce(const NCPoly& x) const {
  // Normal words are t-block, then X, then Y; replacing each t_n by t_2^(n-1)
  // keeps them normal.
  NCPoly nx = hcm->normalize(x);
  NCPoly out;
  for (const auto& [w, c] : nx.terms) {
    Word r;
    for (Letter l : w) {
      if (is_kind(l, Kind::T))
        for (uint32_t i = 1; i < index_of(l); ++i) r.push_back(tgen(2));
      else
        r.push_back(l);
    }
    out += hcm->normalize(r) * c;
  }
  return out;
}

NCPoly HeisQuotient::tilde(int n) const {
  return NCPoly::gen(tgen(n)) - power(tgen(2), n - 1);
}

HeisQuotient::Witness HeisQuotient::coproduct_witness(int n) const {
  TensorPoly full = coproduct(*hcm, tilde(n));
  const HeisQuotient* self = this;
  const Algebra* H = hcm.get();
  TensorPoly reduced_first =
      map_leg(full, 0, [self, H](const Word& w) {
        return TensorPoly::from_poly(self->reduce(NCPoly::of(w)), H);
      });
  Witness wt;
  wt.ideal_left = full - reduced_first;  // (x - r(x)) (x) y lies in I (x) H
  wt.ideal_right = reduced_first;        // must lie in H (x) I
  return wt;
}

HeisQuotient heis_quotient(const AlgebraPtr& hcm) {
  if (hcm->N < 4) throw InvalidTag("Heisenberg quotient needs N >= 4");
  HeisQuotient q;
  q.hcm = hcm;
  q.kheis = build({Family::KHeis, hcm->lambda, 0});
  q.quotient_map.source = hcm;
  q.quotient_map.target = q.kheis;
  q.quotient_map.images[kX] = NCPoly::gen(kX);
  q.quotient_map.images[kY] = NCPoly::gen(kY);
  for (int n = 2; n <= hcm->N; ++n)
    q.quotient_map.images[tgen(n)] = power(kSmallT, n - 1, qpow(Q(1, 2), n - 1));
  return q;
}

std::optional<int> grade(const NCPoly& x) {
  if (x.is_zero()) throw std::invalid_argument("grade of the zero element");
  std::optional<int> g;
  for (const auto& [w, c] : x.terms) {
    const int wg = word_grade(w);
    if (!g) g = wg;
    else if (*g != wg) return std::nullopt;
  }
  return g;
}

}  // namespace cmhopf
