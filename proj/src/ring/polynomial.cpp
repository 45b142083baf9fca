#include "coiso/ring/polynomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace coiso {

namespace {

void canonicalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono.grlex_greater(b.mono); });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational sum = std::move(terms[i].coeff);
    while (j < terms.size() && terms[j].mono == terms[i].mono) {
      sum += terms[j].coeff;
      ++j;
    }
    if (!is_zero(sum)) {
      terms[out].mono = terms[i].mono;
      terms[out].coeff = std::move(sum);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono.grlex_greater(b[j].mono))) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono.grlex_greater(a[i].mono)) {
      r.push_back(b[j]);
      if (subtract) r.back().coeff = -r.back().coeff;
      ++j;
    } else {
      Rational c = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (!is_zero(c)) r.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return r;
}

}  // namespace

Polynomial::Polynomial(const Rational& c) {
  if (!coiso::is_zero(c)) terms_.push_back({Monomial(), c});
}

Polynomial Polynomial::variable(int v) { return monomial(Monomial::variable(v)); }

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p;
  if (!coiso::is_zero(c)) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  canonicalize(terms);
  Polynomial p;
  p.terms_ = std::move(terms);
  return p;
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return 0;
}

int Polynomial::total_degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }

int Polynomial::degree_in(VarMask mask) const {
  int d = terms_.empty() ? -1 : 0;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree_in(mask));
  return d;
}

VarMask Polynomial::support() const {
  VarMask m = 0;
  for (const Term& t : terms_) m |= t.mono.support();
  return m;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (Term& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (coiso::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (Term& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const Polynomial& big = a.size() >= b.size() ? a : b;
  const Polynomial& small = a.size() >= b.size() ? b : a;
  if (small.size() == 1) {
    // Monomial orders are multiplicative, so the order is preserved.
    Polynomial r;
    r.terms_.reserve(big.size());
    const Term& s = small.terms_[0];
    for (const Term& t : big.terms_) r.terms_.push_back({t.mono * s.mono, t.coeff * s.coeff});
    return r;
  }
  std::vector<Term> prod;
  prod.reserve(a.size() * b.size());
  for (const Term& s : a.terms_)
    for (const Term& t : b.terms_) prod.push_back({s.mono * t.mono, s.coeff * t.coeff});
  return Polynomial::from_terms(std::move(prod));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (n) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

Polynomial Polynomial::derivative(int v) const {
  // Dividing by z_v preserves the order of the surviving terms.
  Polynomial r;
  for (const Term& t : terms_) {
    const int e = t.mono.exponent(v);
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set_exponent(v, e - 1);
    r.terms_.push_back({m, t.coeff * e});
  }
  return r;
}

Polynomial Polynomial::substitute(const std::vector<std::optional<Polynomial>>& images) const {
  VarMask replaced = 0;
  for (std::size_t v = 0; v < images.size(); ++v)
    if (images[v]) replaced |= var_bit(static_cast<int>(v));
  if ((support() & replaced) == 0) return *this;
  std::map<std::pair<int, int>, Polynomial> power_cache;
  auto power = [&](int v, int e) -> const Polynomial& {
    auto it = power_cache.find({v, e});
    if (it != power_cache.end()) return it->second;
    int have = e - 1;
    while (have > 0 && !power_cache.count({v, have})) --have;
    Polynomial p = have == 0 ? Polynomial(1) : power_cache.at({v, have});
    for (int k = have + 1; k <= e; ++k) {
      p *= *images[v];
      power_cache.emplace(std::make_pair(v, k), p);
    }
    return power_cache.at({v, e});
  };
  PolynomialAccumulator acc;
  for (const Term& t : terms_) {
    VarMask hit = t.mono.support() & replaced;
    Polynomial p = Polynomial::monomial(t.mono.without(replaced), t.coeff);
    while (hit && !p.is_zero()) {
      const int v = __builtin_ctz(hit);
      p *= power(v, t.mono.exponent(v));
      hit &= hit - 1;
    }
    acc.add(p);
  }
  return acc.take();
}

Polynomial Polynomial::restrict_zero(VarMask mask) const {
  Polynomial r;
  for (const Term& t : terms_)
    if (t.mono.degree_in(mask) == 0) r.terms_.push_back(t);
  return r;
}

Polynomial Polynomial::truncate(VarMask mask, int max_degree) const {
  Polynomial r;
  for (const Term& t : terms_)
    if (t.mono.degree_in(mask) <= max_degree) r.terms_.push_back(t);
  return r;
}

Polynomial Polynomial::coefficient(VarMask mask, const Monomial& m) const {
  std::vector<Term> out;
  for (const Term& t : terms_)
    if (t.mono.only(mask) == m) out.push_back({t.mono.without(mask), t.coeff});
  return from_terms(std::move(out));
}

Polynomial Polynomial::remap(const std::vector<int>& map) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    Monomial m;
    VarMask s = t.mono.support();
    while (s) {
      const int v = __builtin_ctz(s);
      if (v >= static_cast<int>(map.size()) || map[v] < 0)
        throw std::out_of_range("variable missing from remap table");
      m.set_exponent(map[v], t.mono.exponent(v));
      s &= s - 1;
    }
    out.push_back({m, t.coeff});
  }
  return from_terms(std::move(out));
}

Polynomial Polynomial::divide_by_power(int v, int k) const {
  Polynomial r;
  for (const Term& t : terms_) {
    const int e = t.mono.exponent(v);
    if (e < k) throw std::domain_error("polynomial not divisible by requested power");
    Monomial m = t.mono;
    m.set_exponent(v, e - k);
    r.terms_.push_back({m, t.coeff});
  }
  return r;
}

std::size_t Polynomial::hash() const {
  std::size_t h = terms_.size();
  for (const Term& t : terms_) {
    h ^= t.mono.hash() + 0x9e3779b9u + (h << 6) + (h >> 2);
    h ^= std::hash<std::string>()(t.coeff.get_str()) + (h << 6) + (h >> 2);
  }
  return h;
}

void PolynomialAccumulator::add(const Polynomial& p, const Rational& scale) {
  if (is_zero(scale)) return;
  for (const Term& t : p.terms()) pending_.push_back({t.mono, t.coeff * scale});
}

void PolynomialAccumulator::add_product(const Polynomial& a, const Polynomial& b, const Rational& scale) {
  if (is_zero(scale)) return;
  for (const Term& s : a.terms())
    for (const Term& t : b.terms()) pending_.push_back({s.mono * t.mono, s.coeff * t.coeff * scale});
}

Polynomial PolynomialAccumulator::take() {
  Polynomial p = Polynomial::from_terms(std::move(pending_));
  pending_.clear();
  return p;
}

VariableContext::VariableContext(std::vector<std::string> names) : names_(std::move(names)) {
  if (static_cast<int>(names_.size()) > kMaxVars)
    throw std::invalid_argument("too many variables (limit " + std::to_string(kMaxVars) + ")");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw std::invalid_argument("duplicate variable name '" + names_[i] + "'");
}

std::optional<int> VariableContext::find(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

int VariableContext::index(const std::string& name) const {
  if (auto i = find(name)) return *i;
  throw std::invalid_argument("unknown variable '" + name + "'");
}

std::string to_string(const Polynomial& p, const VariableContext& ctx) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : p.terms()) {
    const bool negative = sgn(t.coeff) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    Rational mag = abs(t.coeff);
    std::string mono;
    for (int v = 0; v < kMaxVars; ++v) {
      const int e = t.mono.exponent(v);
      if (!e) continue;
      if (v >= ctx.size()) throw std::out_of_range("polynomial uses a variable outside its context");
      if (!mono.empty()) mono += "*";
      mono += ctx.name(v);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

}  // namespace coiso
