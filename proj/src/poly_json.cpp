#include "slicepoly/json_io.hpp"

#include <cstdio>
#include <stdexcept>

namespace slicepoly {

std::string to_hex(std::uint64_t mask) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(mask));
  return buf;
}

std::uint64_t from_hex(const std::string& s) {
  std::string t = s;
  if (t.size() > 2 && t[0] == '0' && (t[1] == 'x' || t[1] == 'X')) t = t.substr(2);
  if (t.empty() || t.size() > 16) throw std::invalid_argument("bad hex mask: " + s);
  std::size_t used = 0;
  std::uint64_t v = std::stoull(t, &used, 16);
  if (used != t.size()) throw std::invalid_argument("bad hex mask: " + s);
  return v;
}

Json poly_to_json(const MultilinearPoly& p) {
  Json terms = Json::array();
  for (auto& t : p.terms()) terms.push_back({{"mask", to_hex(t.mask)}, {"c", t.coeff}});
  return {{"p", p.field().p()}, {"n", p.n()}, {"terms", terms}};
}

MultilinearPoly poly_from_json(const Json& j) {
  PrimeField F(j.at("p").get<std::uint32_t>());
  int n = j.at("n").get<int>();
  std::vector<Term> terms;
  for (auto& t : j.at("terms")) {
    std::int64_t c = t.at("c").get<std::int64_t>();
    terms.push_back({from_hex(t.at("mask").get<std::string>()), F.reduce(c)});
  }
  return MultilinearPoly::from_terms(n, F, std::move(terms));
}

}  // namespace slicepoly
