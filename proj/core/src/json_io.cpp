#include "penner/json_io.hpp"

#include <json.hpp>

namespace penner {

using nlohmann::json;

std::string graph_to_json(const IntersectionGraph& g) {
  json j;
  j["n"] = g.size();
  json edges = json::array();
  for (int i = 0; i < g.size(); ++i) {
    for (int k : g.neighbors(i)) {
      if (k > i) edges.push_back({i, k, g.multiplicity(i, k)});
    }
  }
  j["edges"] = std::move(edges);
  return j.dump();
}

IntersectionGraph graph_from_json(const std::string& text) {
  json j = json::parse(text);
  int n = j.at("n").get<int>();
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  std::vector<std::vector<int>> omega(n, std::vector<int>(n, 0));
  for (const auto& e : j.at("edges")) {
    int a = e.at(0).get<int>();
    int b = e.at(1).get<int>();
    int m = e.at(2).get<int>();
    if (a < 0 || a >= n || b < 0 || b >= n || a == b || m < 1)
      throw std::invalid_argument("bad edge in graph JSON");
    omega[a][b] = m;
    omega[b][a] = m;
  }
  return IntersectionGraph(std::move(omega));
}

std::string poly_to_json(const IntPoly& p) {
  json arr = json::array();
  for (int i = 0; i <= p.degree(); ++i) arr.push_back(p[i].get_str());
  return arr.dump();
}

IntPoly poly_from_json(const std::string& text) {
  json arr = json::parse(text);
  std::vector<BigInt> coeffs;
  for (const auto& c : arr) coeffs.emplace_back(c.get<std::string>());
  return IntPoly(std::move(coeffs));
}

std::string algebraic_to_json(const AlgebraicReal& a) {
  json j;
  json poly = json::array();
  for (int i = 0; i <= a.poly().degree(); ++i) poly.push_back(a.poly()[i].get_str());
  j["poly"] = std::move(poly);
  auto rat = [](const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
  };
  j["lo"] = rat(a.lo());
  j["hi"] = rat(a.hi());
  if (a.power() != 1) j["power"] = a.power();
  j["approx"] = a.approx();
  return j.dump();
}

std::string laurent_to_json(const HalfLaurent& p) {
  json j = json::object();
  for (const auto& [k, v] : p.terms()) j[std::to_string(k)] = v.get_str();
  return j.dump();
}

HalfLaurent laurent_from_json(const std::string& text) {
  json j = json::parse(text);
  HalfLaurent p;
  for (auto it = j.begin(); it != j.end(); ++it) {
    int k = std::stoi(it.key());
    BigInt v(it.value().get<std::string>());
    p = p + HalfLaurent::u_pow(k, v);
  }
  return p;
}

std::string word_to_json(const std::vector<int>& order) {
  return json(order).dump();
}

std::vector<int> word_from_json(const std::string& text) {
  return json::parse(text).get<std::vector<int>>();
}

std::string certificate_to_json(const MinimizerCertificate& cert, int digits) {
  json j;
  j["genus"] = cert.genus;
  j["family"] = cert.family == Family::kCycle ? "cycle" : "enriched-cycle";
  j["l"] = cert.cycle_length;
  j["flow_difference"] = cert.flow_difference;
  j["dilatation"] = cert.dilatation;
  if (cert.certified) {
    j["dilatation_decimal"] = cert.certified->decimal(digits);
    j["certified"] = json::parse(algebraic_to_json(*cert.certified));
  }
  j["witness_word"] = cert.witness_word;
  return j.dump();
}

}  // namespace penner
