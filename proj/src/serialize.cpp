#include "cplstab/serialize.hpp"

#include <json.hpp>

#include <stdexcept>

namespace cplstab {

namespace {

constexpr const char* kDot = "·";    // ·
constexpr const char* kMinus = "−";  // −

void append_monomial(std::string& s, const Partition& mu, const char* name) {
  int run_value = 0, run_len = 0;
  auto flush = [&] {
    if (run_len == 0) return;
    s += kDot;
    s += name;
    s += "[-" + std::to_string(run_value) + "]";
    if (run_len > 1) s += "^" + std::to_string(run_len);
  };
  for (int p : mu.parts()) {
    if (p == run_value) {
      ++run_len;
    } else {
      flush();
      run_value = p;
      run_len = 1;
    }
  }
  flush();
}

void append_coeff(std::string& s, const Rat& c, bool first) {
  Rat a = c < 0 ? Rat(-c) : c;
  if (first) {
    s += (c < 0) ? std::string(kMinus) : std::string();
  } else {
    s += (c < 0) ? " " + std::string(kMinus) + " " : " + ";
  }
  s += rat_str(a);
}

}  // namespace

std::string to_text(const FockVector& v) {
  if (v.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [state, coeff] : v.terms()) {
    append_coeff(s, coeff, first);
    append_monomial(s, state.mu, "h");
    s += kDot;
    s += "e{" + std::to_string(state.charge) + "}";
    first = false;
  }
  return s;
}

std::string to_text(const HeisenbergPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [mu, coeff] : p.terms()) {
    append_coeff(s, coeff, first);
    if (mu.empty()) {
      // bare constant term
    } else {
      append_monomial(s, mu, "h");
    }
    first = false;
  }
  return s;
}

namespace {

nlohmann::json mu_json(const Partition& mu) {
  nlohmann::json arr = nlohmann::json::array();
  for (int p : mu.parts()) arr.push_back(p);
  return arr;
}

Partition mu_from_json(const nlohmann::json& arr) {
  if (!arr.is_array()) throw std::invalid_argument("mu must be an array of parts");
  std::vector<int> parts;
  for (const auto& v : arr) {
    if (!v.is_number_integer()) throw std::invalid_argument("mu parts must be integers");
    parts.push_back(v.get<int>());
  }
  return Partition(std::move(parts));
}

}  // namespace

std::string to_json(const FockVector& v) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [state, coeff] : v.terms()) {
    terms.push_back({{"charge", state.charge}, {"mu", mu_json(state.mu)}, {"coeff", rat_str(coeff)}});
  }
  return nlohmann::json{{"terms", terms}}.dump();
}

std::string to_json(const HeisenbergPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [mu, coeff] : p.terms()) {
    terms.push_back({{"mu", mu_json(mu)}, {"coeff", rat_str(coeff)}});
  }
  return nlohmann::json{{"terms", terms}}.dump();
}

std::string to_json(const AffineWeight& w) {
  return nlohmann::json{{"L0", w.L0}, {"w1", w.w1}, {"delta", rat_str(w.d)}}.dump();
}

std::string to_json(const StableBasisEntry& e) {
  nlohmann::json vectors = nlohmann::json::array();
  for (const auto& [xi, v] : e.vectors) {
    vectors.push_back({{"xi", xi.str()}, {"vector", nlohmann::json::parse(to_json(v))}});
  }
  return nlohmann::json{{"mu", nlohmann::json::parse(to_json(e.mu))},
                        {"j", e.j},
                        {"d", e.d},
                        {"chosen_n", e.chosen_n},
                        {"vectors", vectors}}
      .dump();
}

FockVector vector_from_json(std::string_view json) {
  nlohmann::json doc = nlohmann::json::parse(json, nullptr, false);
  if (doc.is_discarded() || !doc.is_object() || !doc.contains("terms") || !doc["terms"].is_array()) {
    throw std::invalid_argument("malformed vector JSON");
  }
  FockVector v;
  for (const auto& t : doc["terms"]) {
    if (!t.is_object() || !t.contains("charge") || !t.contains("mu") || !t.contains("coeff") ||
        !t["charge"].is_number_integer() || !t["coeff"].is_string()) {
      throw std::invalid_argument("malformed vector term");
    }
    v.add_term(FockState{t["charge"].get<int>(), mu_from_json(t["mu"])},
               parse_rat(t["coeff"].get<std::string>()));
  }
  return v;
}

HeisenbergPoly poly_from_json(std::string_view json) {
  nlohmann::json doc = nlohmann::json::parse(json, nullptr, false);
  if (doc.is_discarded() || !doc.is_object() || !doc.contains("terms") || !doc["terms"].is_array()) {
    throw std::invalid_argument("malformed polynomial JSON");
  }
  HeisenbergPoly p;
  for (const auto& t : doc["terms"]) {
    if (!t.is_object() || !t.contains("mu") || !t.contains("coeff") || !t["coeff"].is_string()) {
      throw std::invalid_argument("malformed polynomial term");
    }
    p.add_term(mu_from_json(t["mu"]), parse_rat(t["coeff"].get<std::string>()));
  }
  return p;
}

}  // namespace cplstab
