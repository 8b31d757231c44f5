#include "reesalg/ring.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include "reesalg/error.hpp"

namespace reesalg {

// ---------------------------------------------------------------- Polynomial

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree);
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.mono.degree != terms_.front().mono.degree) return false;
  }
  return true;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

std::string Polynomial::to_string() const { return ring_->to_string(*this); }

Polynomial operator+(const Polynomial& f, const Polynomial& g) { return f.ring().add(f, g); }
Polynomial operator-(const Polynomial& f, const Polynomial& g) { return f.ring().sub(f, g); }
Polynomial operator*(const Polynomial& f, const Polynomial& g) { return f.ring().mul(f, g); }
Polynomial operator-(const Polynomial& f) { return f.ring().neg(f); }

bool operator==(const Polynomial& f, const Polynomial& g) {
  if (f.ring_ != g.ring_) throw RingMismatchError();
  if (f.terms_.size() != g.terms_.size()) return false;
  const Field& k = f.ring().field();
  for (std::size_t i = 0; i < f.terms_.size(); ++i) {
    if (f.terms_[i].mono != g.terms_[i].mono) return false;
    if (!k.equal(f.terms_[i].coeff, g.terms_[i].coeff)) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << f.to_string(); }

// ---------------------------------------------------------------- Ring

Ring::Ring(Field field, std::vector<std::string> names, std::vector<int> weights, Options options)
    : field_(std::move(field)), names_(std::move(names)), weights_(std::move(weights)),
      options_(options) {
  if (static_cast<int>(names_.size()) > kMaxVars) {
    throw ResourceError("at most " + std::to_string(kMaxVars) + " variables are supported");
  }
  if (weights_.empty()) weights_.assign(names_.size(), 1);
  if (weights_.size() != names_.size()) {
    throw ValidationError("grading must list one weight per variable");
  }
  for (int w : weights_) {
    if (w <= 0) throw ValidationError("variable weights must be positive");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) throw ValidationError("duplicate variable name " + names_[i]);
    }
  }
  if (options_.max_degree < 1 || options_.max_degree > kMaxExponent) {
    throw ValidationError("degree guard must lie in [1, " + std::to_string(kMaxExponent) + "]");
  }
  if (options_.order == MonomialOrder::BlockElimination &&
      (options_.first_block < 0 || options_.first_block > nvars())) {
    throw ValidationError("elimination block exceeds the number of variables");
  }
}

std::shared_ptr<const Ring> Ring::make(Field field, std::vector<std::string> names,
                                       std::vector<int> weights, Options options) {
  return std::make_shared<const Ring>(std::move(field), std::move(names), std::move(weights),
                                      options);
}

int Ring::index_of(std::string_view name) const {
  for (int i = 0; i < nvars(); ++i) {
    if (names_[static_cast<std::size_t>(i)] == name) return i;
  }
  return -1;
}

Monomial Ring::monomial(std::span<const int> exponents) const {
  if (static_cast<int>(exponents.size()) != nvars()) {
    throw ValidationError("exponent vector length does not match the ring");
  }
  Monomial m;
  for (int i = 0; i < nvars(); ++i) {
    int e = exponents[static_cast<std::size_t>(i)];
    if (e < 0) throw ValidationError("negative exponent");
    m.degree += e * weight(i);
    if (m.degree > max_degree()) {
      throw ResourceError("monomial degree exceeds the degree guard " +
                          std::to_string(max_degree()));
    }
    m.exp[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(e);
  }
  return m;
}

Monomial Ring::variable_monomial(int i, int power) const {
  std::vector<int> e(static_cast<std::size_t>(nvars()), 0);
  e[static_cast<std::size_t>(i)] = power;
  return monomial(e);
}

Monomial Ring::mul(const Monomial& a, const Monomial& b) const {
  Monomial m;
  m.degree = a.degree + b.degree;
  if (m.degree > max_degree()) {
    throw ResourceError("intermediate degree " + std::to_string(m.degree) +
                        " exceeds the degree guard " + std::to_string(max_degree()));
  }
  for (int i = 0; i < nvars(); ++i) m.exp[i] = static_cast<std::uint8_t>(a.exp[i] + b.exp[i]);
  return m;
}

Monomial Ring::lcm(const Monomial& a, const Monomial& b) const {
  Monomial m;
  for (int i = 0; i < nvars(); ++i) {
    m.exp[i] = std::max(a.exp[i], b.exp[i]);
    m.degree += m.exp[i] * weight(i);
  }
  return m;
}

Monomial Ring::gcd(const Monomial& a, const Monomial& b) const {
  Monomial m;
  for (int i = 0; i < nvars(); ++i) {
    m.exp[i] = std::min(a.exp[i], b.exp[i]);
    m.degree += m.exp[i] * weight(i);
  }
  return m;
}

int Ring::partial_degree(const Monomial& m, int begin, int end) const {
  int d = 0;
  for (int i = begin; i < end; ++i) d += m.exp[i] * weight(i);
  return d;
}

namespace {

// Weighted grevlex restricted to [begin, end).
int grevlex_range(const Ring& r, const Monomial& a, const Monomial& b, int begin, int end) {
  int da = r.partial_degree(a, begin, end);
  int db = r.partial_degree(b, begin, end);
  if (da != db) return da < db ? -1 : 1;
  for (int i = end - 1; i >= begin; --i) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int Ring::compare(const Monomial& a, const Monomial& b) const {
  switch (options_.order) {
    case MonomialOrder::Grevlex: {
      if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
      for (int i = nvars() - 1; i >= 0; --i) {
        if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? -1 : 1;
      }
      return 0;
    }
    case MonomialOrder::Lex: {
      for (int i = 0; i < nvars(); ++i) {
        if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? -1 : 1;
      }
      return 0;
    }
    case MonomialOrder::BlockElimination: {
      int c = grevlex_range(*this, a, b, 0, options_.first_block);
      if (c != 0) return c;
      return grevlex_range(*this, a, b, options_.first_block, nvars());
    }
  }
  return 0;
}

std::string Ring::monomial_to_string(const Monomial& m) const {
  std::string out;
  for (int i = 0; i < nvars(); ++i) {
    int e = m.exp[i];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += name(i);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

void Ring::check_same(const Polynomial& f) const {
  if (f.ring_ptr() != this) throw RingMismatchError();
}

Polynomial Ring::constant(const Coeff& c) const {
  Polynomial p(*this);
  if (!field_.is_zero(c)) p.terms_.push_back(Term{Monomial{}, c});
  return p;
}

Polynomial Ring::variable(int i) const {
  if (i < 0 || i >= nvars()) throw ValidationError("variable index out of range");
  return term(field_.one(), variable_monomial(i));
}

Polynomial Ring::variable(std::string_view n) const {
  int i = index_of(n);
  if (i < 0) throw ValidationError("unknown variable " + std::string(n));
  return variable(i);
}

Polynomial Ring::term(const Coeff& c, const Monomial& m) const {
  Polynomial p(*this);
  if (!field_.is_zero(c)) p.terms_.push_back(Term{m, c});
  return p;
}

Polynomial Ring::from_terms(std::vector<Term> terms) const {
  std::sort(terms.begin(), terms.end(),
            [this](const Term& a, const Term& b) { return compare(a.mono, b.mono) > 0; });
  Polynomial p(*this);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = field_.add(p.terms_.back().coeff, t.coeff);
      if (field_.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
    } else if (!field_.is_zero(t.coeff)) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial Ring::add(const Polynomial& f, const Polynomial& g) const {
  check_same(f);
  check_same(g);
  Polynomial r(*this);
  r.terms_.reserve(f.size() + g.size());
  std::size_t i = 0, j = 0;
  while (i < f.size() && j < g.size()) {
    int c = compare(f.terms_[i].mono, g.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(f.terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(g.terms_[j++]);
    } else {
      Coeff s = field_.add(f.terms_[i].coeff, g.terms_[j].coeff);
      if (!field_.is_zero(s)) r.terms_.push_back(Term{f.terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < f.size(); ++i) r.terms_.push_back(f.terms_[i]);
  for (; j < g.size(); ++j) r.terms_.push_back(g.terms_[j]);
  return r;
}

Polynomial Ring::neg(const Polynomial& f) const {
  check_same(f);
  Polynomial r = f;
  for (auto& t : r.terms_) t.coeff = field_.neg(t.coeff);
  return r;
}

Polynomial Ring::sub(const Polynomial& f, const Polynomial& g) const { return add(f, neg(g)); }

Polynomial Ring::scale(const Polynomial& f, const Coeff& c) const {
  check_same(f);
  if (field_.is_zero(c)) return zero();
  Polynomial r = f;
  for (auto& t : r.terms_) t.coeff = field_.mul(t.coeff, c);
  return r;
}

Polynomial Ring::mul_term(const Polynomial& f, const Coeff& c, const Monomial& m) const {
  check_same(f);
  if (field_.is_zero(c)) return zero();
  Polynomial r(*this);
  r.terms_.reserve(f.size());
  for (const auto& t : f.terms_) r.terms_.push_back(Term{mul(t.mono, m), field_.mul(t.coeff, c)});
  return r;
}

Polynomial Ring::mul(const Polynomial& f, const Polynomial& g) const {
  check_same(f);
  check_same(g);
  if (f.is_zero() || g.is_zero()) return zero();
  std::vector<Term> terms;
  terms.reserve(f.size() * g.size());
  for (const auto& a : f.terms_) {
    for (const auto& b : g.terms_) {
      terms.push_back(Term{mul(a.mono, b.mono), field_.mul(a.coeff, b.coeff)});
    }
  }
  return from_terms(std::move(terms));
}

Polynomial Ring::pow(const Polynomial& f, int k) const {
  if (k < 0) throw DomainError("negative power");
  Polynomial result = one();
  Polynomial base = f;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

Polynomial Ring::monic(const Polynomial& f) const {
  if (f.is_zero()) return f;
  return scale(f, field_.inv(f.leading_term().coeff));
}

Polynomial Ring::divide_exact(const Polynomial& f, const Polynomial& g) const {
  check_same(f);
  check_same(g);
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  const Term& lead = g.leading_term();
  Coeff lead_inv = field_.inv(lead.coeff);
  std::vector<Term> quotient_terms;
  Polynomial rem = f;
  while (!rem.is_zero()) {
    const Term& t = rem.leading_term();
    if (!divides(lead.mono, t.mono, nvars())) {
      throw DomainError("polynomial division is not exact");
    }
    Monomial q = reesalg::quotient(t.mono, lead.mono, nvars());
    Coeff c = field_.mul(t.coeff, lead_inv);
    rem = sub(rem, mul_term(g, c, q));
    quotient_terms.push_back(Term{q, std::move(c)});
  }
  return from_terms(std::move(quotient_terms));
}

std::string Ring::to_string(const Polynomial& f) const {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms_) {
    bool negative = field_.is_negative(t.coeff);
    Coeff magnitude = negative ? field_.neg(t.coeff) : t.coeff;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += field_.to_string(magnitude);
    } else {
      if (!field_.is_one(magnitude)) out += field_.to_string(magnitude) + '*';
      out += monomial_to_string(t.mono);
    }
  }
  return out;
}

// ---------------------------------------------------------------- parser

namespace {

class PolynomialParser {
 public:
  PolynomialParser(const Ring& ring, std::string_view text, int line)
      : ring_(ring), text_(text), line_(line) {}

  Polynomial parse() {
    Polynomial p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, static_cast<int>(pos_) + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expression() {
    skip_space();
    Polynomial acc = ring_.zero();
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Polynomial t = product();
    acc = negate ? ring_.neg(t) : t;
    for (;;) {
      if (accept('+')) {
        acc = ring_.add(acc, product());
      } else if (accept('-')) {
        acc = ring_.sub(acc, product());
      } else {
        return acc;
      }
    }
  }

  Polynomial product() {
    Polynomial acc = power();
    for (;;) {
      if (accept('*')) {
        acc = ring_.mul(acc, power());
      } else if (accept('/')) {
        std::size_t at = pos_;
        Polynomial d = power();
        if (!d.is_constant() || d.is_zero()) {
          pos_ = at;
          fail("division is only allowed by a nonzero constant");
        }
        acc = ring_.scale(acc, ring_.field().inv(d.leading_term().coeff));
      } else {
        return acc;
      }
    }
  }

  Polynomial power() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
      return ring_.pow(base, e);
    }
    return base;
  }

  Polynomial primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return ring_.neg(power());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class value(std::string(text_.substr(start, pos_ - start)));
      return ring_.constant(ring_.field().from_ratio(value, 1));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view ident = text_.substr(start, pos_ - start);
      int idx = ring_.index_of(ident);
      if (idx < 0) {
        pos_ = start;
        fail("unknown variable '" + std::string(ident) + "'");
      }
      return ring_.variable(idx);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  const Ring& ring_;
  std::string_view text_;
  int line_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Ring::parse(std::string_view text, int line) const {
  return PolynomialParser(*this, text, line).parse();
}

// ---------------------------------------------------------------- RingMap

RingMap::RingMap(const Ring& source, const Ring& target, std::vector<Polynomial> images)
    : source_(&source), target_(&target), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != source.nvars()) {
    throw ValidationError("ring map needs one image per source variable");
  }
  if (!(source.field() == target.field())) throw RingMismatchError();
  for (const auto& img : images_) target.check_same(img);
}

Polynomial RingMap::operator()(const Polynomial& f) const {
  source_->check_same(f);
  const Ring& tgt = *target_;
  std::vector<std::vector<Polynomial>> powers(images_.size());
  auto power_of = [&](std::size_t i, int e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(tgt.one());
    while (static_cast<int>(cache.size()) <= e) cache.push_back(tgt.mul(cache.back(), images_[i]));
    return cache[static_cast<std::size_t>(e)];
  };
  Polynomial result = tgt.zero();
  for (const auto& t : f.terms()) {
    Polynomial prod = tgt.constant(t.coeff);
    for (int i = 0; i < source_->nvars(); ++i) {
      int e = t.mono.exp[i];
      if (e > 0) prod = tgt.mul(prod, power_of(static_cast<std::size_t>(i), e));
    }
    result = tgt.add(result, prod);
  }
  return result;
}

}  // namespace reesalg
