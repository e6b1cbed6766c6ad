#include "cplstab.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

#include "cplstab/checks.hpp"
#include "cplstab/cpl.hpp"
#include "cplstab/fkops.hpp"
#include "cplstab/serialize.hpp"
#include "cplstab/stability.hpp"
#include "cplstab/straighten.hpp"

struct cplstab_vector {
  cplstab::FockVector value;
};

struct cplstab_poly {
  cplstab::HeisenbergPoly value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs the body, translating exceptions into status codes and the
// thread-local message.
template <typename Fn>
cplstab_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return CPLSTAB_ERROR_INVALID_INPUT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CPLSTAB_ERROR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return CPLSTAB_ERROR_INTERNAL;
  }
}

std::vector<int> parse_csv_ints(const char* csv) {
  if (csv == nullptr) throw std::invalid_argument("null tuple string");
  std::vector<int> out;
  std::string s(csv);
  if (s.empty()) return out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (tok.empty()) throw std::invalid_argument("malformed integer tuple: " + s);
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("malformed integer tuple: " + s);
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

cplstab_status make_vector(cplstab::FockVector v, cplstab_vector** out) {
  if (out == nullptr) {
    g_last_error = "null output pointer";
    return CPLSTAB_ERROR_INVALID_INPUT;
  }
  *out = new cplstab_vector{std::move(v)};
  return CPLSTAB_OK;
}

cplstab_status make_poly(cplstab::HeisenbergPoly p, cplstab_poly** out) {
  if (out == nullptr) {
    g_last_error = "null output pointer";
    return CPLSTAB_ERROR_INVALID_INPUT;
  }
  *out = new cplstab_poly{std::move(p)};
  return CPLSTAB_OK;
}

cplstab_status require(const void* ptr) {
  if (ptr == nullptr) {
    g_last_error = "null argument";
    return CPLSTAB_ERROR_INVALID_INPUT;
  }
  return CPLSTAB_OK;
}

}  // namespace

extern "C" {

const char* cplstab_last_error(void) { return g_last_error.c_str(); }

void cplstab_string_free(char* s) { std::free(s); }
void cplstab_vector_free(cplstab_vector* v) { delete v; }
void cplstab_poly_free(cplstab_poly* p) { delete p; }

cplstab_status cplstab_vector_cl(const char* xi, cplstab_vector** out) {
  return guarded([&] {
    if (auto st = require(xi); st != CPLSTAB_OK) return st;
    return make_vector(cplstab::basis_cl(cplstab::IndexTriple::parse(xi)), out);
  });
}

cplstab_status cplstab_vector_b(const char* xi, cplstab_vector** out) {
  return guarded([&] {
    if (auto st = require(xi); st != CPLSTAB_OK) return st;
    return make_vector(cplstab::basis_b(cplstab::IndexTriple::parse(xi)), out);
  });
}

cplstab_status cplstab_vector_bbar(const char* xi, cplstab_vector** out) {
  return guarded([&] {
    if (auto st = require(xi); st != CPLSTAB_OK) return st;
    return make_vector(cplstab::basis_bbar(cplstab::IndexTriple::parse(xi)), out);
  });
}

cplstab_status cplstab_vector_wn(int n, cplstab_vector** out) {
  return guarded([&] { return make_vector(cplstab::weyl_generator(n), out); });
}

cplstab_status cplstab_vector_translate(const cplstab_vector* v, int p, cplstab_vector** out) {
  return guarded([&] {
    if (auto st = require(v); st != CPLSTAB_OK) return st;
    return make_vector(cplstab::translation(p).apply(v->value), out);
  });
}

cplstab_status cplstab_vector_text(const cplstab_vector* v, char** out) {
  return guarded([&] {
    if (auto st = require(v); st != CPLSTAB_OK) return st;
    if (auto st = require(out); st != CPLSTAB_OK) return st;
    *out = dup_string(cplstab::to_text(v->value));
    return CPLSTAB_OK;
  });
}

cplstab_status cplstab_vector_json(const cplstab_vector* v, char** out) {
  return guarded([&] {
    if (auto st = require(v); st != CPLSTAB_OK) return st;
    if (auto st = require(out); st != CPLSTAB_OK) return st;
    *out = dup_string(cplstab::to_json(v->value));
    return CPLSTAB_OK;
  });
}

cplstab_status cplstab_vector_from_json(const char* json, cplstab_vector** out) {
  return guarded([&] {
    if (auto st = require(json); st != CPLSTAB_OK) return st;
    return make_vector(cplstab::vector_from_json(json), out);
  });
}

int cplstab_vector_equal(const cplstab_vector* a, const cplstab_vector* b) {
  if (a == nullptr || b == nullptr) return 0;
  return a->value == b->value ? 1 : 0;
}

cplstab_status cplstab_poly_straighten(const char* p_csv, const char* q_csv, cplstab_poly** out) {
  return guarded([&] {
    std::vector<int> p = parse_csv_ints(p_csv);
    std::vector<int> q = parse_csv_ints(q_csv);
    return make_poly(cplstab::straighten_yx(p, q), out);
  });
}

cplstab_status cplstab_poly_f_lambda(const char* lambda_csv, cplstab_poly** out) {
  return guarded([&] {
    if (auto st = require(lambda_csv); st != CPLSTAB_OK) return st;
    return make_poly(cplstab::f_lambda(cplstab::Partition::parse(lambda_csv)), out);
  });
}

cplstab_status cplstab_poly_text(const cplstab_poly* p, char** out) {
  return guarded([&] {
    if (auto st = require(p); st != CPLSTAB_OK) return st;
    if (auto st = require(out); st != CPLSTAB_OK) return st;
    *out = dup_string(cplstab::to_text(p->value));
    return CPLSTAB_OK;
  });
}

cplstab_status cplstab_poly_json(const cplstab_poly* p, char** out) {
  return guarded([&] {
    if (auto st = require(p); st != CPLSTAB_OK) return st;
    if (auto st = require(out); st != CPLSTAB_OK) return st;
    *out = dup_string(cplstab::to_json(p->value));
    return CPLSTAB_OK;
  });
}

cplstab_status cplstab_poly_from_json(const char* json, cplstab_poly** out) {
  return guarded([&] {
    if (auto st = require(json); st != CPLSTAB_OK) return st;
    return make_poly(cplstab::poly_from_json(json), out);
  });
}

int cplstab_poly_equal(const cplstab_poly* a, const cplstab_poly* b) {
  if (a == nullptr || b == nullptr) return 0;
  return a->value == b->value ? 1 : 0;
}

cplstab_status cplstab_dim(int n, char** out) {
  return guarded([&] {
    if (auto st = require(out); st != CPLSTAB_OK) return st;
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    cplstab::Int dim = 1;
    dim <<= n;
    *out = dup_string(dim.get_str());
    return CPLSTAB_OK;
  });
}

cplstab_status cplstab_stable_basis_json(int j, int d, char** out) {
  return guarded([&] {
    if (auto st = require(out); st != CPLSTAB_OK) return st;
    *out = dup_string(cplstab::to_json(cplstab::stable_basis_at(j, d)));
    return CPLSTAB_OK;
  });
}

cplstab_status cplstab_check(const char* suite, int n_max, uint64_t seed, char** report,
                             int* passed) {
  return guarded([&]() -> cplstab_status {
    if (auto st = require(suite); st != CPLSTAB_OK) return st;
    std::vector<cplstab::SuiteResult> results;
    if (std::string(suite) == "all") {
      results = cplstab::run_all_suites(n_max, seed);
    } else {
      results.push_back(cplstab::run_suite(suite, n_max, seed));
    }
    std::string text;
    bool ok = true;
    for (const auto& r : results) {
      text += r.summary() + "\n";
      for (const auto& f : r.failures) text += "  " + f + "\n";
      ok = ok && r.ok();
    }
    if (report != nullptr) *report = dup_string(text);
    if (passed != nullptr) *passed = ok ? 1 : 0;
    return ok ? CPLSTAB_OK : CPLSTAB_ERROR_CHECK_FAILED;
  });
}

cplstab_status cplstab_suite_names(char** out) {
  return guarded([&] {
    if (auto st = require(out); st != CPLSTAB_OK) return st;
    std::string text;
    for (const auto& name : cplstab::suite_names()) text += name + "\n";
    *out = dup_string(text);
    return CPLSTAB_OK;
  });
}

}  // extern "C"
