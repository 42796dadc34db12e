#include "stratkit/rational.hpp"

namespace stratkit {

std::string to_string(const Q& q) { return q.get_str(); }

Q parse_q(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  if (s.empty()) throw DomainError("empty rational");
  if (s[0] == '+') s.erase(0, 1);
  Q q;
  if (q.set_str(s, 10) != 0) throw DomainError("bad rational: " + text);
  if (q.get_den() == 0) throw DomainError("zero denominator: " + text);
  q.canonicalize();
  return q;
}

Z floor_q(const Q& q) {
  Z r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Z ceil_q(const Q& q) {
  Z r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace stratkit
