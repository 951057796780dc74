#include "wfree/rational.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace wfree {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw std::invalid_argument("empty rational");
  if (s.front() == '+') s.erase(s.begin());
  std::size_t slash = s.find('/');
  auto valid = [](const std::string& t, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < t.size() && t[i] == '-') ++i;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!valid(s, true)) throw std::invalid_argument("bad rational: " + s);
    return Rational(Integer(s));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!valid(num, true) || !valid(den, false))
    throw std::invalid_argument("bad rational: " + s);
  Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator");
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

Integer factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of negative");
  static std::mutex mu;
  static std::vector<Integer> table{Integer(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<long>(table.size()) <= n)
    table.push_back(table.back() * static_cast<unsigned long>(table.size()));
  return table[static_cast<std::size_t>(n)];
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Rational inv_factorial(long n) {
  if (n < 0) return 0;
  return Rational(Integer(1), factorial(n));
}

}  // namespace wfree
