#include "cmhopf/expr.hpp"

#include <cctype>
#include <optional>

namespace cmhopf {

namespace {

bool all_digits(const std::string& s, size_t from) {
  if (from >= s.size()) return false;
  for (size_t i = from; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

class Parser {
 public:
  Parser(const std::string& s, const Algebra* A) : s_(s), A_(A) {}

  NCPoly run() {
    NCPoly p = sum();
    skip();
    if (i_ != s_.size()) throw ParseError("unexpected '" + std::string(1, s_[i_]) + "'", i_);
    return p;
  }

  NCPoly sum() {
    skip();
    NCPoly acc;
    bool neg = false;
    if (peek('+') || peek('-')) neg = s_[i_++] == '-';
    acc = term();
    if (neg) acc = -acc;
    for (;;) {
      skip();
      if (peek('+')) {
        ++i_;
        acc += term();
      } else if (peek('-')) {
        ++i_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  // Stops before "(x)" so tensor legs can be split by the caller.
  bool at_tensor_sep() {
    skip();
    return s_.compare(i_, 3, "(x)") == 0;
  }
  bool done() {
    skip();
    return i_ >= s_.size();
  }
  size_t pos() const { return i_; }
  void expect_tensor_sep() {
    if (!at_tensor_sep()) throw ParseError("expected (x)", i_);
    i_ += 3;
  }

 private:
  NCPoly term() {
    NCPoly acc = factor();
    for (;;) {
      skip();
      if (i_ >= s_.size() || at_tensor_sep()) return acc;
      char c = s_[i_];
      if (c == '*') {
        ++i_;
        acc = mul(acc, factor());
      } else if (c == '/') {
        ++i_;
        NCPoly d = factor();
        if (d.size() != 1 || !d.terms.begin()->first.empty() || is_zero(d.constant()))
          throw ParseError("division by a non-scalar or zero", i_);
        acc *= Q(1) / d.constant();
      } else if (c == '(' || std::isalnum(static_cast<unsigned char>(c))) {
        acc = mul(acc, factor());
      } else {
        return acc;
      }
    }
  }

  NCPoly factor() {
    skip();
    Letter base = 0;
    bool is_letter = false;
    NCPoly a = atom(&base, &is_letter);
    skip();
    if (!peek('^')) return a;
    ++i_;
    skip();
    bool neg = false;
    if (peek('-')) {
      neg = true;
      ++i_;
    }
    size_t st = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (st == i_) throw ParseError("expected integer exponent", i_);
    long e = std::stol(s_.substr(st, i_ - st));
    if (neg) {
      if (!is_letter) {
        if (a.size() == 1 && a.terms.begin()->first.empty() && !is_zero(a.constant()))
          return NCPoly::scalar(qpow(a.constant(), -e));
        throw ParseError("negative power of a non-letter", st);
      }
      if (base == kAlpha) return power(NCPoly::gen(kAlphaInv), e);
      if (base == kAlphaInv) return power(NCPoly::gen(kAlpha), e);
      if (kind_of(base) == Kind::AlphaQ) return NCPoly::gen(alpha_q(-alpha_exponent(base) * e));
      throw ParseError("negative power of " + letter_name(base), st);
    }
    if (is_letter && kind_of(base) == Kind::AlphaQ)
      return e == 0 ? NCPoly::one() : NCPoly::gen(alpha_q(alpha_exponent(base) * e));
    return power(a, e);
  }

  NCPoly atom(Letter* letter, bool* is_letter) {
    skip();
    if (i_ >= s_.size()) throw ParseError("unexpected end", i_);
    char c = s_[i_];
    if (c == '(') {
      if (at_tensor_sep()) throw ParseError("unexpected (x)", i_);
      ++i_;
      NCPoly p = sum();
      skip();
      if (!peek(')')) throw ParseError("expected )", i_);
      ++i_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t st = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return NCPoly::scalar(Q(s_.substr(st, i_ - st)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t st = i_;
      while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) ++i_;
      std::string name = s_.substr(st, i_ - st);
      if (peek('[')) {
        size_t close = s_.find(']', i_);
        if (close == std::string::npos) throw ParseError("expected ]", i_);
        name += s_.substr(i_, close - i_ + 1);
        i_ = close + 1;
      }
      Letter l;
      try {
        l = parse_letter(name);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), st);
      }
      if (A_ && !A_->contains(l)) throw UnknownGenerator(name + " in " + A_->name);
      *letter = l;
      *is_letter = true;
      return NCPoly::gen(l);
    }
    throw ParseError("unexpected '" + std::string(1, c) + "'", i_);
  }

  NCPoly mul(const NCPoly& a, const NCPoly& b) const { return A_ ? A_->mul(a, b) : concat(a, b); }
  NCPoly power(const NCPoly& a, long e) const {
    NCPoly r = NCPoly::one();
    for (long k = 0; k < e; ++k) r = mul(r, a);
    return r;
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) const { return i_ < s_.size() && s_[i_] == c; }

  const std::string& s_;
  const Algebra* A_;
  size_t i_ = 0;
};

}  // namespace

Letter parse_letter(const std::string& n) {
  auto indexed = [&](const char* p, Kind k, int lo) -> std::optional<Letter> {
    const size_t len = std::char_traits<char>::length(p);
    if (n.compare(0, len, p) != 0 || !all_digits(n, len)) return std::nullopt;
    int v = std::stoi(n.substr(len));
    if (v < lo) throw std::invalid_argument("index out of range in " + n);
    return make_letter(k, static_cast<uint32_t>(v));
  };
  if (n == "t") return kSmallT;
  if (n == "z") return kSmallZ;
  if (n == "X") return kX;
  if (n == "Y") return kY;
  if (n == "A") return kBigA;
  if (n == "alpha") return kAlpha;
  if (n == "beta") return kBeta;
  if (n == "dX") return kdX;
  if (n == "dY") return kdY;
  if (n == "dt") return kdt;
  if (n == "theta") return kTheta;
  if (n.rfind("alpha[", 0) == 0 && n.back() == ']') {
    Q q = parse_rational(n.substr(6, n.size() - 7));
    if (is_zero(q)) throw std::invalid_argument("alpha[0] is the unit");
    return alpha_q(q);
  }
  if (auto l = indexed("delta", Kind::DeltaN, 1)) return *l;
  if (auto l = indexed("t", Kind::T, 2)) return *l;
  if (auto l = indexed("z", Kind::Z, 2)) return *l;
  if (auto l = indexed("g", Kind::Group, 0)) return *l;
  if (auto l = indexed("f", Kind::Fun, 0)) return *l;
  throw std::invalid_argument("unknown letter " + n);
}

NCPoly parse_poly(const std::string& text, const Algebra* A) {
  NCPoly p = Parser(text, A).run();
  return A ? A->normalize(p) : p;
}

TensorPoly parse_tensor(const std::string& text, const std::vector<const Algebra*>& legs) {
  TensorPoly out(legs);
  // Terms split on top-level signs; a leg holding a sum needs parentheses.
  size_t start = 0;
  std::vector<std::string> terms;
  int depth = 0;
  for (size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    bool at_sep = i == text.size();
    if (!at_sep && depth == 0 && (text[i] == '+' || text[i] == '-') && i > start) {
      size_t j = text.find_last_not_of(" \t", i - 1);
      at_sep = j != std::string::npos && j >= start && std::string("^*/(").find(text[j]) == std::string::npos;
    }
    if (at_sep) {
      std::string t = text.substr(start, i - start);
      if (t.find_first_not_of(" \t") != std::string::npos) terms.push_back(t);
      start = i;
    }
  }
  for (const std::string& t : terms) {
    std::vector<std::string> parts;
    size_t p = 0;
    for (;;) {
      size_t q = t.find("(x)", p);
      parts.push_back(t.substr(p, q == std::string::npos ? std::string::npos : q - p));
      if (q == std::string::npos) break;
      p = q + 3;
    }
    if (parts.size() != legs.size()) throw ParseError("expected " + std::to_string(legs.size()) + " legs", 0);
    TensorPoly acc = TensorPoly::scalar(Q(1));
    for (size_t k = 0; k < parts.size(); ++k)
      acc = tensor(acc, TensorPoly::from_poly(parse_poly(parts[k], legs[k]), legs[k]));
    out += acc;
  }
  return out;
}

}  // namespace cmhopf
