#include "symkit/poly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace symkit {

namespace {

std::pair<std::string_view, std::string_view> split_suffix(std::string_view s) {
  std::size_t k = s.size();
  while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1]))) --k;
  return {s.substr(0, k), s.substr(k)};
}

int compare_digits(std::string_view a, std::string_view b) {
  auto strip = [](std::string_view s) {
    std::size_t k = 0;
    while (k + 1 < s.size() && s[k] == '0') ++k;
    return s.substr(k);
  };
  a = strip(a);
  b = strip(b);
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return a.compare(b);
}

// Index map from `from` into the sorted superset `to`.
std::vector<std::size_t> embedding(const std::vector<std::string>& from,
                                   const std::vector<std::string>& to) {
  std::vector<std::size_t> idx;
  idx.reserve(from.size());
  for (const auto& v : from) {
    auto it = std::lower_bound(to.begin(), to.end(), v, [](const std::string& a, const std::string& b) {
      return variable_less(a, b);
    });
    idx.push_back(static_cast<std::size_t>(it - to.begin()));
  }
  return idx;
}

unsigned total(const Exponents& e) {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

// Graded reverse lexicographic "a > b".
bool grevlex_greater(const Exponents& a, const Exponents& b) {
  unsigned da = total(a), db = total(b);
  if (da != db) return da > db;
  for (std::size_t k = a.size(); k-- > 0;) {
    if (a[k] != b[k]) return a[k] < b[k];
  }
  return false;
}

bool negative_leading(const GaussianRational& c) {
  int s = sgn(c.re());
  return s < 0 || (s == 0 && sgn(c.im()) < 0);
}

// ---------------------------------------------------------------- parser --

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("parse error at column " + std::to_string(pos_ + 1) + ": " + msg, 0);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    skip();
    MultiPoly acc;
    bool first = true;
    for (;;) {
      skip();
      int sign = 1;
      if (accept('+')) {
      } else if (accept('-')) {
        sign = -1;
      } else if (!first) {
        return acc;
      }
      MultiPoly t = term();
      if (sign < 0) acc -= t;
      else acc += t;
      first = false;
    }
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    for (;;) {
      if (accept('*')) {
        acc *= factor();
      } else if (accept('/')) {
        MultiPoly d = factor();
        if (!d.is_constant()) fail("division by a non-constant");
        if (d.constant_term().is_zero()) fail("division by zero");
        acc *= d.constant_term().inverse();
      } else {
        return acc;
      }
    }
  }

  MultiPoly factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    MultiPoly b = base();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an exponent");
      unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      b = b.pow(static_cast<unsigned>(e));
    }
    return b;
  }

  MultiPoly base() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class n(std::string(text_.substr(start, pos_ - start)));
      return MultiPoly(GaussianRational(mpq_class(n)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (name == "I") return MultiPoly(GaussianRational::i());
      return MultiPoly::variable(name);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

bool variable_less(std::string_view a, std::string_view b) {
  auto [pa, na] = split_suffix(a);
  auto [pb, nb] = split_suffix(b);
  if (int c = pa.compare(pb); c != 0) return c < 0;
  if (na.empty() != nb.empty()) return na.empty();
  if (int c = compare_digits(na, nb); c != 0) return c < 0;
  return a < b;
}

std::vector<std::string> merge_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b) {
  std::vector<std::string> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                 [](const std::string& x, const std::string& y) { return variable_less(x, y); });
  return out;
}

std::vector<std::string> indexed_names(const std::string& prefix, int count) {
  std::vector<std::string> names;
  for (int k = 0; k < count; ++k) names.push_back(prefix + std::to_string(k));
  return names;
}

MultiPoly::MultiPoly(int c) {
  if (c != 0) terms_.emplace(Exponents{}, GaussianRational(c));
}

MultiPoly::MultiPoly(const GaussianRational& c) {
  if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

MultiPoly MultiPoly::variable(const std::string& name) {
  MultiPoly p;
  p.vars_ = {name};
  p.terms_.emplace(Exponents{1}, GaussianRational(1));
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<std::string> vars, TermMap terms) {
  MultiPoly p;
  p.vars_ = std::move(vars);
  for (auto& [e, c] : terms) {
    if (e.size() != p.vars_.size()) throw std::invalid_argument("exponent length mismatch");
    if (!c.is_zero()) p.terms_.emplace(e, std::move(c));
  }
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && total(terms_.begin()->first) == 0;
}

GaussianRational MultiPoly::constant_term() const {
  Exponents zero(vars_.size(), 0);
  auto it = terms_.find(zero);
  return it == terms_.end() ? GaussianRational() : it->second;
}

GaussianRational MultiPoly::coefficient(const std::map<std::string, std::uint32_t>& monomial) const {
  Exponents e(vars_.size(), 0);
  for (const auto& [name, k] : monomial) {
    if (k == 0) continue;
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) return {};
    e[static_cast<std::size_t>(it - vars_.begin())] = k;
  }
  auto it = terms_.find(e);
  return it == terms_.end() ? GaussianRational() : it->second;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(total(e)));
  return d;
}

int MultiPoly::degree_in(std::string_view var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return terms_.empty() ? -1 : 0;
  std::size_t k = static_cast<std::size_t>(it - vars_.begin());
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[k]));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int t = static_cast<int>(total(e));
    if (d >= 0 && t != d) return false;
    d = t;
  }
  return true;
}

bool MultiPoly::is_homogeneous_in(const std::vector<std::string>& block, int* degree) const {
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < vars_.size(); ++k) {
    if (std::find(block.begin(), block.end(), vars_[k]) != block.end()) idx.push_back(k);
  }
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int t = 0;
    for (auto k : idx) t += static_cast<int>(e[k]);
    if (d >= 0 && t != d) return false;
    d = t;
  }
  if (degree) *degree = d;
  return true;
}

std::vector<std::string> MultiPoly::support() const {
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_)
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k] > 0) used[k] = true;
  std::vector<std::string> out;
  for (std::size_t k = 0; k < vars_.size(); ++k)
    if (used[k]) out.push_back(vars_[k]);
  return out;
}

MultiPoly MultiPoly::extended(const std::vector<std::string>& vars) const {
  if (vars == vars_) return *this;
  auto idx = embedding(vars_, vars);
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] >= vars.size() || vars[idx[k]] != vars_[k])
      throw std::invalid_argument("variable list is not a superset");
  }
  MultiPoly p;
  p.vars_ = vars;
  for (const auto& [e, c] : terms_) {
    Exponents f(vars.size(), 0);
    for (std::size_t k = 0; k < e.size(); ++k) f[idx[k]] = e[k];
    p.terms_.emplace(std::move(f), c);
  }
  return p;
}

MultiPoly MultiPoly::trimmed() const {
  auto used = support();
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < vars_.size(); ++k)
    if (std::find(used.begin(), used.end(), vars_[k]) != used.end()) keep.push_back(k);
  MultiPoly p;
  p.vars_ = used;
  for (const auto& [e, c] : terms_) {
    Exponents f;
    f.reserve(keep.size());
    for (auto k : keep) f.push_back(e[k]);
    p.terms_.emplace(std::move(f), c);
  }
  return p;
}

bool MultiPoly::is_real() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_real(); });
}

MultiPoly MultiPoly::conj() const {
  MultiPoly p = *this;
  for (auto& [e, c] : p.terms_) c = c.conj();
  return p;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(1);
  result = result.extended(vars_);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.vars_ != vars_) {
    auto vars = merge_variables(vars_, o.vars_);
    *this = extended(vars);
    return *this += o.extended(vars);
  }
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly p = a;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ != b.vars_) {
    auto vars = merge_variables(a.vars_, b.vars_);
    return a.extended(vars) * b.extended(vars);
  }
  MultiPoly p;
  p.vars_ = a.vars_;
  Exponents e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      auto [it, inserted] = p.terms_.try_emplace(e, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  std::erase_if(p.terms_, [](const auto& t) { return t.second.is_zero(); });
  return p;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  if (a.terms_.size() != b.terms_.size()) return false;
  auto vars = merge_variables(a.vars_, b.vars_);
  return a.extended(vars).terms_ == b.extended(vars).terms_;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::vector<const TermMap::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [](const auto* a, const auto* b) { return grevlex_greater(a->first, b->first); });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : order) {
    GaussianRational c = t->second;
    bool neg = negative_leading(c);
    if (neg) c = -c;
    if (neg) os << '-';
    else if (!first) os << '+';
    first = false;

    std::string mono;
    for (std::size_t k = 0; k < vars_.size(); ++k) {
      if (t->first[k] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += vars_[k];
      if (t->first[k] > 1) mono += '^' + std::to_string(t->first[k]);
    }
    bool complex = sgn(c.re()) != 0 && sgn(c.im()) != 0;
    std::string coef = complex ? "(" + c.str() + ")" : c.str();
    if (mono.empty()) {
      os << coef;
    } else if (c.is_one()) {
      os << mono;
    } else {
      os << coef << '*' << mono;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

MultiPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

GaussianRational evaluate(const MultiPoly& p, const std::map<std::string, GaussianRational>& point) {
  const auto& vars = p.variables();
  std::vector<const GaussianRational*> values(vars.size(), nullptr);
  for (const auto& name : p.support()) {
    auto it = point.find(name);
    if (it == point.end()) throw MissingAssignment(name);
  }
  for (std::size_t k = 0; k < vars.size(); ++k) {
    auto it = point.find(vars[k]);
    if (it != point.end()) values[k] = &it->second;
  }
  GaussianRational sum;
  for (const auto& [e, c] : p.terms()) {
    GaussianRational t = c;
    for (std::size_t k = 0; k < e.size(); ++k)
      for (std::uint32_t r = 0; r < e[k]; ++r) t *= *values[k];
    sum += t;
  }
  return sum;
}

MultiPoly diff(const MultiPoly& p, const std::string& var) {
  const auto& vars = p.variables();
  auto it = std::find(vars.begin(), vars.end(), var);
  if (it == vars.end()) throw UnknownVariable(var);
  std::size_t k = static_cast<std::size_t>(it - vars.begin());
  MultiPoly::TermMap out;
  for (const auto& [e, c] : p.terms()) {
    if (e[k] == 0) continue;
    Exponents f = e;
    f[k] -= 1;
    out.emplace(std::move(f), c * GaussianRational(static_cast<long>(e[k])));
  }
  return MultiPoly::from_terms(vars, std::move(out));
}

MultiPoly substitute(const MultiPoly& p, const std::map<std::string, MultiPoly>& images) {
  const auto& vars = p.variables();
  std::vector<MultiPoly> factors;
  std::vector<std::string> kept;
  for (const auto& v : vars) {
    auto it = images.find(v);
    if (it == images.end()) {
      factors.push_back(MultiPoly::variable(v));
      kept.push_back(v);
    } else {
      factors.push_back(it->second);
    }
  }
  std::vector<std::string> result_vars = kept;
  for (const auto& f : factors) result_vars = merge_variables(result_vars, f.variables());
  for (auto& f : factors) f = f.extended(result_vars);

  // powers[k][e] = factors[k]^e, built lazily
  std::vector<std::vector<MultiPoly>> powers(factors.size());
  auto power = [&](std::size_t k, std::uint32_t e) -> const MultiPoly& {
    auto& cache = powers[k];
    if (cache.empty()) cache.push_back(MultiPoly(1).extended(result_vars));
    while (cache.size() <= e) cache.push_back(cache.back() * factors[k]);
    return cache[e];
  };
  MultiPoly result = MultiPoly(0).extended(result_vars);
  for (const auto& [e, c] : p.terms()) {
    MultiPoly t = MultiPoly(c).extended(result_vars);
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k] > 0) t *= power(k, e[k]);
    result += t;
  }
  return result;
}

}  // namespace symkit
