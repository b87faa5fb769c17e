#include "klv/rational.hpp"

#include "klv/error.hpp"

namespace klv::core {

std::optional<Rat> rat_parse(const std::string& s) {
  if (s.empty()) return std::nullopt;
  size_t i = 0;
  if (s[0] == '+' || s[0] == '-') i = 1;
  bool digits_before = false, seen_slash = false, digits_after = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c >= '0' && c <= '9') {
      (seen_slash ? digits_after : digits_before) = true;
    } else if (c == '/' && !seen_slash && digits_before) {
      seen_slash = true;
    } else {
      return std::nullopt;
    }
  }
  if (!digits_before || (seen_slash && !digits_after)) return std::nullopt;
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0) return std::nullopt;
  if (q.get_den() == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) {
  return q.get_str();
}

Rat rat_pow(const Rat& q, long e) {
  if (e == 0) return Rat(1);
  if (q == 0) {
    if (e < 0) fail(Status::InvalidArg, "0 raised to a negative power");
    return Rat(0);
  }
  Rat base = e < 0 ? Rat(q.get_den(), q.get_num()) : q;
  unsigned long ue = static_cast<unsigned long>(e < 0 ? -e : e);
  Rat out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), ue);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), ue);
  out.canonicalize();
  return out;
}

}  // namespace klv::core
