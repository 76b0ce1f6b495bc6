#include "quadnet/polynomial.hpp"

#include "quadnet/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace quadnet {

Monomial Monomial::fromExponents(std::span<const int> e) {
  if (e.size() > static_cast<std::size_t>(kMaxVars)) throw InvalidInput("too many exponents");
  Monomial m;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 || e[i] > 0xffff) throw InvalidInput("exponent out of range");
    m.exp[i] = static_cast<std::uint16_t>(e[i]);
  }
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (auto e : exp) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (int i = 0; i < kMaxVars; ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) m.exp[i] = static_cast<std::uint16_t>(exp[i] + rhs.exp[i]);
  return m;
}

Monomial Monomial::quotientOf(const Monomial& other) const {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) m.exp[i] = static_cast<std::uint16_t>(other.exp[i] - exp[i]);
  return m;
}

Polynomial::Polynomial(int arity) : arity_(arity) {
  if (arity < 1 || arity > kMaxVars) throw InvalidInput("unsupported polynomial arity");
}

Polynomial Polynomial::constant(int arity, const Rational& c) {
  Polynomial p(arity);
  p.addTerm(Monomial{}, c);
  return p;
}

Polynomial Polynomial::variable(int arity, int index) {
  if (index < 0 || index >= arity) throw InvalidInput("variable index out of range");
  Polynomial p(arity);
  Monomial m;
  m.exp[static_cast<std::size_t>(index)] = 1;
  p.addTerm(m, Rational(1));
  return p;
}

Polynomial Polynomial::term(int arity, const Monomial& m, const Rational& c) {
  Polynomial p(arity);
  p.addTerm(m, c);
  return p;
}

bool Polynomial::isConstant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

int Polynomial::totalDegree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

int Polynomial::order() const {
  if (terms_.empty()) return -1;
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_) d = std::min(d, m.degree());
  return d;
}

int Polynomial::degreeIn(int var) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.exp[static_cast<std::size_t>(var)]));
  return d;
}

bool Polynomial::isHomogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::addTerm(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  for (int i = arity_; i < kMaxVars; ++i)
    if (m.exp[static_cast<std::size_t>(i)] != 0) throw InvalidInput("monomial exceeds polynomial arity");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) {
    it->second.canonicalize();
  } else {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

const std::pair<const Monomial, Rational>& Polynomial::leadingTerm() const {
  if (terms_.empty()) throw InvariantViolation("leading term of zero polynomial");
  return *terms_.rbegin();
}

Polynomial Polynomial::homogeneousPart(int degree) const {
  Polynomial out(arity_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == degree) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

Polynomial Polynomial::truncated(int maxDegree) const {
  Polynomial out(arity_);
  for (const auto& [m, c] : terms_)
    if (m.degree() <= maxDegree) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != static_cast<std::size_t>(arity_)) throw InvalidInput("evaluation point has wrong size");
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < arity_; ++i) {
      for (int k = 0; k < m.exp[static_cast<std::size_t>(i)]; ++k) t *= point[static_cast<std::size_t>(i)];
    }
    sum += t;
  }
  return sum;
}

void Polynomial::checkArity(const Polynomial& rhs) const {
  if (arity_ != rhs.arity_) throw InvalidInput("polynomial arity mismatch");
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  checkArity(rhs);
  for (const auto& [m, c] : rhs.terms_) addTerm(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  checkArity(rhs);
  for (const auto& [m, c] : rhs.terms_) addTerm(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  lhs.checkArity(rhs);
  Polynomial out(lhs.arity_);
  for (const auto& [ma, ca] : lhs.terms_)
    for (const auto& [mb, cb] : rhs.terms_) out.addTerm(ma * mb, ca * cb);
  return out;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
  return arity_ == rhs.arity_ && terms_ == rhs.terms_;
}

Polynomial multiplyTruncated(const Polynomial& a, const Polynomial& b, int maxDegree) {
  if (a.arity() != b.arity()) throw InvalidInput("polynomial arity mismatch");
  Polynomial out(a.arity());
  for (const auto& [ma, ca] : a.terms()) {
    const int da = ma.degree();
    if (da > maxDegree) continue;
    for (const auto& [mb, cb] : b.terms())
      if (da + mb.degree() <= maxDegree) out.addTerm(ma * mb, ca * cb);
  }
  return out;
}

Polynomial power(const Polynomial& p, int e) {
  if (e < 0) throw InvalidInput("negative power");
  Polynomial result = Polynomial::constant(p.arity(), 1);
  Polynomial base = p;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images) {
  if (images.size() != static_cast<std::size_t>(p.arity())) throw InvalidInput("substitution size mismatch");
  const int outArity = images.empty() ? 1 : images.front().arity();
  // powers[i][k] = images[i]^k, filled on demand
  std::vector<std::vector<Polynomial>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i].arity() != outArity) throw InvalidInput("substitution arity mismatch");
    powers[i].push_back(Polynomial::constant(outArity, 1));
  }
  auto powerOf = [&](std::size_t i, int k) -> const Polynomial& {
    while (static_cast<int>(powers[i].size()) <= k) powers[i].push_back(powers[i].back() * images[i]);
    return powers[i][static_cast<std::size_t>(k)];
  };
  Polynomial out(outArity);
  for (const auto& [m, c] : p.terms()) {
    Polynomial t = Polynomial::constant(outArity, c);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (m.exp[i] > 0) t = t * powerOf(i, m.exp[i]);
    out += t;
  }
  return out;
}

Polynomial substituteLinear(const Polynomial& p, const RatMatrix& m) {
  const auto n = static_cast<std::size_t>(p.arity());
  if (m.rows() != n || m.cols() != n) throw InvalidInput("substitution matrix size mismatch");
  std::vector<Polynomial> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial img(p.arity());
    for (std::size_t j = 0; j < n; ++j) img += Polynomial::variable(p.arity(), static_cast<int>(j)) * m(i, j);
    images.push_back(std::move(img));
  }
  return substitute(p, images);
}

Polynomial partialDerivative(const Polynomial& p, int var) {
  if (var < 0 || var >= p.arity()) throw InvalidInput("derivative variable out of range");
  Polynomial out(p.arity());
  const auto v = static_cast<std::size_t>(var);
  for (const auto& [m, c] : p.terms()) {
    if (m.exp[v] == 0) continue;
    Monomial d = m;
    d.exp[v] = static_cast<std::uint16_t>(d.exp[v] - 1);
    out.addTerm(d, c * m.exp[v]);
  }
  return out;
}

std::string variableName(int arity, int index) {
  static const char* xyz[] = {"x", "y", "z"};
  static const char* uv[] = {"u", "v"};
  if (arity == 3) return xyz[index];
  if (arity == 2) return uv[index];
  if (arity == 1) return "x";
  return "x" + std::to_string(index);
}

namespace {

std::string monomialText(int arity, const Monomial& m) {
  std::string out;
  for (int i = 0; i < arity; ++i) {
    const int e = m.exp[static_cast<std::size_t>(i)];
    if (e == 0) continue;
    out += '*';
    out += variableName(arity, i);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

// Grammar: expr := [+-] term ([+-] term)*, term := factor (* factor)*,
// factor := primary [^ n], primary := number | variable | ( expr ).
class PolyParser {
public:
  PolyParser(std::string_view text, int arity) : text_(text), arity_(arity) {}

  Polynomial parse() {
    skipSpace();
    if (pos_ == text_.size()) fail("empty polynomial");
    Polynomial out = parseExpr();
    skipSpace();
    if (pos_ != text_.size()) fail("unexpected character");
    return out;
  }

private:
  Polynomial parseExpr() {
    Polynomial out(arity_);
    bool first = true;
    while (true) {
      skipSpace();
      int sign = 1;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
        sign = text_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      Polynomial t = parseTerm();
      if (sign < 0) out -= t;
      else out += t;
      first = false;
    }
    return out;
  }

  Polynomial parseTerm() {
    Polynomial out = parseFactor();
    while (true) {
      skipSpace();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        out = out * parseFactor();
      } else {
        return out;
      }
    }
  }

  Polynomial parseFactor() {
    Polynomial base = parsePrimary();
    skipSpace();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skipSpace();
      const unsigned long e = parseUnsigned();
      if (e > 1000) fail("exponent too large");
      return power(base, static_cast<int>(e));
    }
    return base;
  }

  Polynomial parsePrimary() {
    skipSpace();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Polynomial inner = parseExpr();
      skipSpace();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) return Polynomial::constant(arity_, parseNumber());
    if (std::isalpha(static_cast<unsigned char>(ch))) return Polynomial::variable(arity_, parseVariable());
    fail("unexpected character");
  }

  Rational parseNumber() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      const std::size_t denStart = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == denStart) fail("missing denominator");
    }
    return parseRational(text_.substr(start, pos_ - start));
  }

  unsigned long parseUnsigned() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start || pos_ - start > 6) fail("expected exponent");
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  int parseVariable() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    for (int i = 0; i < arity_; ++i) {
      if (name == variableName(arity_, i) || name == "x" + std::to_string(i)) return i;
    }
    fail("unknown variable '" + name + "'");
  }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidInput("polynomial parse error at offset " + std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  int arity_;
  std::size_t pos_ = 0;
};

} // namespace

std::string toText(const Polynomial& p) {
  if (p.isZero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    if (first) {
      out += toText(c);
    } else if (sgn(c) < 0) {
      out += " - " + toText(Rational(-c));
    } else {
      out += " + " + toText(c);
    }
    out += monomialText(p.arity(), m);
    first = false;
  }
  return out;
}

Polynomial parsePolynomial(std::string_view text, int arity) { return PolyParser(text, arity).parse(); }

} // namespace quadnet
