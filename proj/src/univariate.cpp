#include "symkit/univariate.hpp"

#include <algorithm>
#include <stdexcept>

namespace symkit {

void UPoly::trim() {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  UPoly out;
  out.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()));
  for (std::size_t k = 0; k < a.coeffs.size(); ++k) out.coeffs[k] += a.coeffs[k];
  for (std::size_t k = 0; k < b.coeffs.size(); ++k) out.coeffs[k] += b.coeffs[k];
  out.trim();
  return out;
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  UPoly out;
  out.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()));
  for (std::size_t k = 0; k < a.coeffs.size(); ++k) out.coeffs[k] += a.coeffs[k];
  for (std::size_t k = 0; k < b.coeffs.size(); ++k) out.coeffs[k] -= b.coeffs[k];
  out.trim();
  return out;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  UPoly out;
  out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, GaussianRational(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  out.trim();
  return out;
}

bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs == b.coeffs; }

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  UPoly r = a, q;
  if (r.degree() < b.degree()) return {q, r};
  q.coeffs.assign(static_cast<std::size_t>(r.degree() - b.degree() + 1), GaussianRational(0));
  const GaussianRational inv = b.lead().inverse();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    auto shift = static_cast<std::size_t>(r.degree() - b.degree());
    GaussianRational c = r.lead() * inv;
    q.coeffs[shift] = c;
    for (std::size_t k = 0; k < b.coeffs.size(); ++k) r.coeffs[shift + k] -= c * b.coeffs[k];
    r.trim();
  }
  q.trim();
  return {q, r};
}

UPoly monic(const UPoly& p) {
  if (p.is_zero()) return p;
  UPoly out = p;
  GaussianRational inv = p.lead().inverse();
  for (auto& c : out.coeffs) c *= inv;
  return out;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

UPoly derivative(const UPoly& p) {
  UPoly out;
  for (std::size_t k = 1; k < p.coeffs.size(); ++k)
    out.coeffs.push_back(p.coeffs[k] * GaussianRational(static_cast<long>(k)));
  out.trim();
  return out;
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() < 1) return monic(p);
  return monic(divmod(p, gcd(p, derivative(p))).first);
}

GaussianRational evaluate(const UPoly& p, const GaussianRational& t) {
  GaussianRational acc(0);
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UPoly to_univariate(const MultiPoly& p, const std::string& var) {
  UPoly out;
  const auto& vars = p.variables();
  std::size_t idx = vars.size();
  for (std::size_t k = 0; k < vars.size(); ++k)
    if (vars[k] == var) idx = k;
  for (const auto& [e, c] : p.terms()) {
    std::uint32_t d = 0;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (k == idx) d = e[k];
      else if (e[k] != 0) throw std::invalid_argument("polynomial is not univariate in " + var + ": " + p.str());
    }
    if (out.coeffs.size() <= d) out.coeffs.resize(d + 1, GaussianRational(0));
    out.coeffs[d] = c;
  }
  out.trim();
  return out;
}

namespace {

mpz_class round_div(const mpz_class& n, const mpz_class& d) {
  mpz_class q;
  mpz_class num = 2 * n + d;
  mpz_class den = 2 * d;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

GaussInt minus(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }

// x with x^2 = -1 mod p, for a prime p = 1 mod 4.
mpz_class sqrt_minus_one(const mpz_class& p) {
  mpz_class e = (p - 1) / 4, x, c = 2;
  for (;; ++c) {
    mpz_powm(x.get_mpz_t(), c.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    mpz_class sq = (x * x) % p;
    if (sq == p - 1) return x;
  }
}

std::vector<GaussInt> units() { return {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}; }

std::vector<GaussInt> divisors(const std::vector<std::pair<GaussInt, int>>& factors) {
  std::vector<GaussInt> out{{1, 0}};
  for (const auto& [prime, e] : factors) {
    std::vector<GaussInt> next;
    for (const auto& d : out) {
      GaussInt acc = d;
      for (int k = 0; k <= e; ++k) {
        next.push_back(acc);
        acc = acc * prime;
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

bool divides(const GaussInt& b, const GaussInt& a, GaussInt* quotient) {
  if (b.is_zero()) return a.is_zero();
  GaussInt num = a * b.conj();
  mpz_class n = b.norm();
  if (!mpz_divisible_p(num.re.get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(num.im.get_mpz_t(), n.get_mpz_t()))
    return false;
  if (quotient) *quotient = {num.re / n, num.im / n};
  return true;
}

GaussInt gcd(GaussInt a, GaussInt b) {
  while (!b.is_zero()) {
    GaussInt num = a * b.conj();
    mpz_class n = b.norm();
    GaussInt q{round_div(num.re, n), round_div(num.im, n)};
    GaussInt r = minus(a, q * b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool factor(const GaussInt& z, std::vector<std::pair<GaussInt, int>>& out, unsigned long budget) {
  out.clear();
  if (z.is_zero()) throw std::invalid_argument("cannot factor zero");
  mpz_class n = z.norm();
  std::vector<mpz_class> primes;
  mpz_class d = 2;
  unsigned long steps = 0;
  bool complete = true;
  while (n > 1) {
    if (d * d > n) {
      primes.push_back(n);
      n = 1;
      break;
    }
    if (++steps > budget) {
      if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) primes.push_back(n);
      else complete = false;
      n = 1;
      break;
    }
    if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      primes.push_back(d);
      while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) n /= d;
    }
    d += (d == 2 ? 1 : 2);
  }

  GaussInt rest = z;
  for (const auto& p : primes) {
    std::vector<GaussInt> candidates;
    if (p == 2) {
      candidates.push_back({1, 1});
    } else if (p % 4 == 3) {
      candidates.push_back({p, 0});
    } else {
      GaussInt pi = gcd(GaussInt{p, 0}, GaussInt{sqrt_minus_one(p), 1});
      candidates.push_back(pi);
      candidates.push_back(pi.conj());
    }
    for (const auto& pi : candidates) {
      int e = 0;
      GaussInt q;
      while (divides(pi, rest, &q)) {
        rest = q;
        ++e;
      }
      if (e > 0) out.emplace_back(pi, e);
    }
  }
  return complete;
}

RootSet gaussian_rational_roots(const UPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("the zero polynomial has every value as a root");
  RootSet out;
  UPoly q = squarefree_part(p);
  if (q.degree() < 1) return out;
  if (q.coeffs[0].is_zero()) {
    out.roots.push_back(GaussianRational(0));
    q.coeffs.erase(q.coeffs.begin());
  }
  if (q.degree() < 1) return out;

  // Clear denominators and take the primitive part over Z[i].
  mpz_class den = 1;
  for (const auto& c : q.coeffs) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.re().get_den_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.im().get_den_mpz_t());
  }
  std::vector<GaussInt> ints;
  for (const auto& c : q.coeffs) {
    mpq_class re = c.re() * den, im = c.im() * den;
    ints.push_back({re.get_num(), im.get_num()});
  }
  GaussInt content{0, 0};
  for (const auto& c : ints) content = gcd(content, c);
  for (auto& c : ints) divides(content, c, &c);

  std::vector<std::pair<GaussInt, int>> f0, fn;
  bool complete = factor(ints.front(), f0) && factor(ints.back(), fn);
  auto alphas = divisors(f0);
  auto betas = divisors(fn);

  UPoly rest = q;
  for (const auto& u : units()) {
    for (const auto& a : alphas) {
      GaussInt ua = u * a;
      for (const auto& b : betas) {
        if (rest.degree() < 1) break;
        GaussianRational r = GaussianRational(mpq_class(ua.re), mpq_class(ua.im)) /
                             GaussianRational(mpq_class(b.re), mpq_class(b.im));
        if (!evaluate(rest, r).is_zero()) continue;
        if (std::find(out.roots.begin(), out.roots.end(), r) != out.roots.end()) continue;
        out.roots.push_back(r);
        rest = divmod(rest, UPoly{{-r, GaussianRational(1)}}).first;
      }
    }
  }
  out.residual = rest.degree() >= 1 || !complete;
  return out;
}

}  // namespace symkit
