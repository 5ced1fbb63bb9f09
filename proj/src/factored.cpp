#include "cdg/factored.hpp"

#include <cmath>
#include <limits>

namespace cdg {

Exponent Exponent::plus(const Exponent& o) const {
  Exponent r;
  r.base = base + o.base;
  r.twice = twice;
  r.twice.insert(r.twice.end(), o.twice.begin(), o.twice.end());
  return r;
}

Exponent Exponent::plus(i64 k) const {
  Exponent r = *this;
  r.base += k;
  return r;
}

bool Exponent::operator==(const Exponent& o) const {
  if (base != o.base || twice.size() != o.twice.size()) return false;
  for (std::size_t i = 0; i < twice.size(); ++i) {
    if (!(*twice[i] == *o.twice[i])) return false;
  }
  return true;
}

FactoredInt FactoredInt::from_u64(u64 n) {
  if (n == 0) throw DomainError("FactoredInt: zero");
  FactoredInt f;
  for (auto [prime, e] : factorize(n)) f.factors[prime] = Exponent(i64(e));
  return f;
}

FactoredInt FactoredInt::times(const FactoredInt& o) const {
  FactoredInt r = *this;
  for (const auto& [prime, e] : o.factors) {
    auto it = r.factors.find(prime);
    if (it == r.factors.end()) {
      r.factors[prime] = e;
    } else {
      it->second = it->second.plus(e);
      if (it->second.is_zero()) r.factors.erase(it);
    }
  }
  return r;
}

FactoredInt FactoredInt::times(u64 n) const { return times(from_u64(n)); }

FactoredInt FactoredInt::times_prime_pow(u64 prime, const Exponent& e) const {
  FactoredInt unit;
  unit.factors[prime] = e;
  return times(unit);
}

FactoredInt FactoredInt::div_prime(u64 prime) const {
  auto it = factors.find(prime);
  if (it == factors.end())
    throw DomainError("div_prime: value not divisible by " + std::to_string(prime));
  FactoredInt r = *this;
  auto& e = r.factors[prime];
  if (e.exact() && e.base <= 0)
    throw DomainError("div_prime: value not divisible by " + std::to_string(prime));
  e = e.plus(-1);
  if (e.is_zero()) r.factors.erase(prime);
  return r;
}

std::set<u64> FactoredInt::prime_set() const {
  std::set<u64> s;
  for (const auto& [prime, e] : factors) s.insert(prime);
  return s;
}

std::optional<u64> FactoredInt::value() const {
  unsigned __int128 acc = 1;
  const unsigned __int128 cap = std::numeric_limits<u64>::max();
  for (const auto& [prime, e] : factors) {
    if (!e.exact()) return std::nullopt;
    if (e.base < 0) return std::nullopt;
    for (i64 k = 0; k < e.base; ++k) {
      acc *= prime;
      if (acc > cap) return std::nullopt;
    }
  }
  return u64(acc);
}

double FactoredInt::log10() const {
  double acc = 0;
  for (const auto& [prime, e] : factors) {
    if (!e.exact()) return std::numeric_limits<double>::infinity();
    acc += double(e.base) * std::log10(double(prime));
  }
  return acc;
}

bool FactoredInt::operator==(const FactoredInt& o) const {
  if (factors.size() != o.factors.size()) return false;
  auto it = factors.begin();
  auto jt = o.factors.begin();
  for (; it != factors.end(); ++it, ++jt) {
    if (it->first != jt->first || !(it->second == jt->second)) return false;
  }
  return true;
}

static std::string exponent_str(const Exponent& e) {
  if (e.exact()) return std::to_string(e.base);
  std::string s = "(" + std::to_string(e.base);
  for (const auto& t : e.twice) s += " + 2*[" + t->str() + "]";
  s += ")";
  return s;
}

std::string FactoredInt::str() const {
  if (factors.empty()) return "1";
  std::string s;
  for (const auto& [prime, e] : factors) {
    if (!s.empty()) s += " * ";
    s += std::to_string(prime);
    if (!(e.exact() && e.base == 1)) s += "^" + exponent_str(e);
  }
  return s;
}

}  // namespace cdg
