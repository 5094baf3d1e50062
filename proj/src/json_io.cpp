#include "bcinterp/json_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace bcinterp {

nlohmann::json poly_to_json(const LaurentPoly& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [exp, c] : f.terms())
    terms.push_back({{"exp", exp}, {"coef", to_string(c)}});
  return {{"n", f.arity()}, {"terms", std::move(terms)}};
}

LaurentPoly poly_from_json(const nlohmann::json& j) {
  LaurentPoly f(j.at("n").get<int>());
  for (const auto& term : j.at("terms")) {
    const auto exp = term.at("exp").get<ExponentVector>();
    f.add_term(exp, parse_rational(term.at("coef").get<std::string>()));
  }
  return f;
}

nlohmann::json params_to_json(const InterpParams& p) {
  nlohmann::json j;
  j["n"] = p.n();
  j["q"] = to_string(p.q());
  j["mode"] = p.is_principal() ? "principal" : "general";
  nlohmann::json tau = nlohmann::json::array();
  for (const auto& t : p.tau()) tau.push_back(to_string(t));
  j["tau"] = std::move(tau);
  if (p.is_principal()) {
    j["s"] = to_string(p.s());
    j["t"] = to_string(p.t());
  }
  return j;
}

void atomic_write_file(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("atomic_write_file: cannot open " + tmp.string());
    out << text;
    if (!out.flush()) throw std::runtime_error("atomic_write_file: write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace bcinterp
