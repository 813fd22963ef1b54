#ifndef RTTDEG_CERTIFICATE_HPP
#define RTTDEG_CERTIFICATE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "rttdeg/ratfun.hpp"

namespace rttdeg {

using nlohmann::json;

inline json ratfun_to_json(const RatFun& f) {
  auto poly_to_json = [](const Poly& p) {
    json arr = json::array();
    for (int k = 0; k <= p.degree(); ++k)
      if (p.coeff(k) != 0) arr.push_back({k, to_string(p.coeff(k))});
    return arr;
  };
  return json{{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

inline RatFun ratfun_from_json(const json& j) {
  auto poly_from_json = [](const json& arr) {
    std::vector<Rational> c;
    for (const auto& e : arr) {
      int k = e[0].get<int>();
      if (k >= static_cast<int>(c.size())) c.resize(k + 1);
      c[k] = rat_parse(e[1].get<std::string>());
    }
    return Poly(std::move(c));
  };
  return RatFun(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

struct CertTerm {
  std::string id;
  RatFun coeff;
};

// Machine-checkable witness: target = sum of relation instances weighted by
// field coefficients, plus (for congruences) an explicit part of filtration
// degree >= threshold whose coefficients are pole-free at q = 1.
// Re-expanding the parts and subtracting from the target must give zero;
// `verified` records that this pass ran.
struct Certificate {
  std::string target_id;
  int threshold = -1;  // -1 for plain span certificates
  std::vector<CertTerm> relation_part;
  std::vector<CertTerm> high_degree_part;
  bool verified = false;

  json to_json() const {
    json rel = json::array(), high = json::array();
    for (const auto& t : relation_part) rel.push_back({t.id, ratfun_to_json(t.coeff)});
    for (const auto& t : high_degree_part) high.push_back({t.id, ratfun_to_json(t.coeff)});
    return json{{"target_id", target_id},
                {"threshold", threshold},
                {"relation_part", rel},
                {"high_degree_part", high},
                {"verified", verified}};
  }

  static Certificate from_json(const json& j) {
    Certificate c;
    c.target_id = j.at("target_id").get<std::string>();
    c.threshold = j.at("threshold").get<int>();
    for (const auto& e : j.at("relation_part"))
      c.relation_part.push_back({e[0].get<std::string>(), ratfun_from_json(e[1])});
    for (const auto& e : j.at("high_degree_part"))
      c.high_degree_part.push_back({e[0].get<std::string>(), ratfun_from_json(e[1])});
    c.verified = j.at("verified").get<bool>();
    return c;
  }
};

}  // namespace rttdeg

#endif
