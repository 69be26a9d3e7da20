#include "calg/rational.hpp"

namespace calg {

Rat rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t slash = s.find('/');
  try {
    mpz_class num(slash == std::string::npos ? s : s.substr(0, slash));
    mpz_class den(slash == std::string::npos ? std::string("1") : s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    Rat r(num, den);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational literal '" + s + "'");
  }
}

std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace calg
