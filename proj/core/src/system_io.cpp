#include "gnum/system_io.hpp"

#include <fstream>
#include <sstream>

#include "gnum/error.hpp"
#include "json.hpp"

namespace gnum {

namespace {

double to_number(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(Errc::invalid_spec, "cannot parse " + what + " '" + s + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

PrimeSystem system_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::invalid_spec, std::string("system definition is not valid JSON: ") + e.what());
  }
  try {
    const std::string kind = j.value("kind", "");
    if (kind == "builtin") {
      const auto& b = j.at("builtin");
      BuiltinParams params;
      if (b.contains("params"))
        for (const auto& [k, v] : b.at("params").items()) params[k] = v.get<double>();
      return builtin(b.at("name").get<std::string>(), params);
    }
    RawSystem raw;
    raw.kind = kind;
    raw.label = j.value("label", "custom");
    if (j.contains("primes")) raw.primes = j.at("primes").get<std::vector<double>>();
    if (j.contains("density")) {
      raw.density_u = j.at("density").at("u").get<std::vector<double>>();
      raw.density_rho = j.at("density").at("rho").get<std::vector<double>>();
    }
    if (j.contains("atoms"))
      for (const auto& a : j.at("atoms")) raw.atoms.push_back({a.at(0).get<double>(), a.at(1).get<double>()});
    return validate(raw);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::invalid_spec, std::string("malformed system definition: ") + e.what());
  }
}

PrimeSystem load_system(const std::string& spec) {
  if (spec.rfind("builtin:", 0) == 0) {
    std::string rest = spec.substr(8);
    std::string name = rest, query;
    if (auto q = rest.find('?'); q != std::string::npos) {
      name = rest.substr(0, q);
      query = rest.substr(q + 1);
    }
    BuiltinParams params;
    for (const auto& kv : split(query, '&')) {
      auto eq = kv.find('=');
      if (eq == std::string::npos)
        throw Error(Errc::invalid_spec, "builtin parameter '" + kv + "' needs key=value");
      params[kv.substr(0, eq)] = to_number(kv.substr(eq + 1), "parameter value");
    }
    return builtin(name, params);
  }
  if (spec.rfind("primes:", 0) == 0) {
    RawSystem raw;
    raw.kind = "discrete";
    raw.label = spec;
    for (const auto& p : split(spec.substr(7), ',')) raw.primes.push_back(to_number(p, "prime"));
    return validate(raw);
  }
  std::ifstream in(spec);
  if (!in) throw Error(Errc::io, "cannot open system definition '" + spec + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return system_from_json(ss.str());
}

}  // namespace gnum
