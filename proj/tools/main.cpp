// Batch front door for the library: computes basis vectors and polynomial
// forms, runs the verification suites and emits reproducible output.
// Links the C interface only.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "cplstab.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;

struct VectorDeleter {
  void operator()(cplstab_vector* v) const { cplstab_vector_free(v); }
};
struct PolyDeleter {
  void operator()(cplstab_poly* p) const { cplstab_poly_free(p); }
};
using VectorPtr = std::unique_ptr<cplstab_vector, VectorDeleter>;
using PolyPtr = std::unique_ptr<cplstab_poly, PolyDeleter>;

std::string take_string(char* s) {
  std::string out = s ? s : "";
  cplstab_string_free(s);
  return out;
}

[[noreturn]] void fail(const std::string& what) {
  std::cerr << "error: " << (what.empty() ? "invalid input" : what) << "\n";
  std::exit(kExitBadInput);
}

void expect_ok(cplstab_status status) {
  if (status != CPLSTAB_OK) fail(cplstab_last_error());
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) fail("cannot open output file " + out_path);
    out << text << "\n";
  }
  return kExitOk;
}

std::string vector_output(const cplstab_vector* v, const std::string& format) {
  char* s = nullptr;
  expect_ok(format == "json" ? cplstab_vector_json(v, &s) : cplstab_vector_text(v, &s));
  return take_string(s);
}

std::string poly_output(const cplstab_poly* p, const std::string& format) {
  char* s = nullptr;
  expect_ok(format == "json" ? cplstab_poly_json(p, &s) : cplstab_poly_text(p, &s));
  return take_string(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Weyl-module basis vectors, straightening and stability checks"};
  app.require_subcommand(1);

  std::string xi, format = "text", out_path;
  std::string p_csv, q_csv, lam_csv, suite;
  int n = 0, jj = 0, dd = 0, n_max = -1, translate_p = 0;
  std::uint64_t seed = 12345;
  std::string in_path;

  auto add_output_opts = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", out_path, "write output to a file instead of stdout");
  };

  CLI::App* cl = app.add_subcommand("cl", "normalized basis vector CL(xi)");
  cl->add_option("--xi", xi, "index triple n:k:lambda, e.g. 4:2:2,1")->required();
  add_output_opts(cl);

  CLI::App* b = app.add_subcommand("b", "basis vector B(xi)");
  b->add_option("--xi", xi)->required();
  add_output_opts(b);

  CLI::App* bbar = app.add_subcommand("bbar", "raising-operator basis vector");
  bbar->add_option("--xi", xi)->required();
  add_output_opts(bbar);

  CLI::App* wn = app.add_subcommand("wn", "Weyl module generator w_n");
  wn->add_option("--n", n)->required();
  add_output_opts(wn);

  CLI::App* straighten = app.add_subcommand("straighten", "normal-ordered polynomial for (prod y t^p)(prod x t^-q)");
  straighten->add_option("--p", p_csv, "comma-separated exponents")->required();
  straighten->add_option("--q", q_csv, "comma-separated exponents")->required();
  add_output_opts(straighten);

  CLI::App* flambda = app.add_subcommand("flambda", "stable polynomial form of a partition");
  flambda->add_option("--lam", lam_csv, "partition, e.g. 2,1 (empty for the empty partition)")
      ->required();
  add_output_opts(flambda);

  CLI::App* stable = app.add_subcommand("stable-basis", "stable basis of one weight space (JSON)");
  stable->add_option("--j", jj)->required();
  stable->add_option("--d", dd)->required();
  stable->add_option("--format", format, "json (the only supported form)")
      ->check(CLI::IsMember({"json"}));
  stable->add_option("--out", out_path);

  CLI::App* apply_t = app.add_subcommand("apply-T", "apply a translation operator");
  apply_t->add_option("--p", translate_p, "translation amount")->required();
  apply_t->add_option("--xi", xi, "apply to CL(xi)");
  apply_t->add_option("--in", in_path, "apply to a JSON vector file instead");
  add_output_opts(apply_t);

  CLI::App* check = app.add_subcommand("check", "run a verification suite");
  check->add_option("--suite", suite, "suite name or 'all'")->required();
  check->add_option("--n-max", n_max, "override the sweep bound");
  check->add_option("--seed", seed, "seed for the randomized oracle cases");

  CLI::App* dim = app.add_subcommand("dim", "dimension of the n-th Weyl module");
  dim->add_option("--n", n)->required();
  dim->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return kExitBadInput;
  }

  if (cl->parsed() || b->parsed() || bbar->parsed()) {
    cplstab_vector* raw = nullptr;
    cplstab_status status = cl->parsed()   ? cplstab_vector_cl(xi.c_str(), &raw)
                            : b->parsed()  ? cplstab_vector_b(xi.c_str(), &raw)
                                           : cplstab_vector_bbar(xi.c_str(), &raw);
    expect_ok(status);
    VectorPtr v(raw);
    return emit(vector_output(v.get(), format), out_path);
  }

  if (wn->parsed()) {
    cplstab_vector* raw = nullptr;
    expect_ok(cplstab_vector_wn(n, &raw));
    VectorPtr v(raw);
    return emit(vector_output(v.get(), format), out_path);
  }

  if (straighten->parsed()) {
    cplstab_poly* raw = nullptr;
    expect_ok(cplstab_poly_straighten(p_csv.c_str(), q_csv.c_str(), &raw));
    PolyPtr p(raw);
    return emit(poly_output(p.get(), format), out_path);
  }

  if (flambda->parsed()) {
    cplstab_poly* raw = nullptr;
    expect_ok(cplstab_poly_f_lambda(lam_csv.c_str(), &raw));
    PolyPtr p(raw);
    return emit(poly_output(p.get(), format), out_path);
  }

  if (stable->parsed()) {
    char* s = nullptr;
    expect_ok(cplstab_stable_basis_json(jj, dd, &s));
    return emit(take_string(s), out_path);
  }

  if (apply_t->parsed()) {
    cplstab_vector* input = nullptr;
    if (!xi.empty()) {
      expect_ok(cplstab_vector_cl(xi.c_str(), &input));
    } else if (!in_path.empty()) {
      std::ifstream in(in_path);
      if (!in) fail("cannot open input file " + in_path);
      std::string json((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      expect_ok(cplstab_vector_from_json(json.c_str(), &input));
    } else {
      fail("apply-T needs --xi or --in");
    }
    VectorPtr base(input);
    cplstab_vector* raw = nullptr;
    expect_ok(cplstab_vector_translate(base.get(), translate_p, &raw));
    VectorPtr v(raw);
    return emit(vector_output(v.get(), format), out_path);
  }

  if (check->parsed()) {
    char* report = nullptr;
    int passed = 0;
    cplstab_status status = cplstab_check(suite.c_str(), n_max, seed, &report, &passed);
    std::cout << take_string(report);
    if (status == CPLSTAB_OK && passed) return kExitOk;
    if (status == CPLSTAB_ERROR_CHECK_FAILED) return kExitCheckFailed;
    fail(cplstab_last_error());
  }

  if (dim->parsed()) {
    char* s = nullptr;
    expect_ok(cplstab_dim(n, &s));
    return emit(take_string(s), out_path);
  }

  return kExitBadInput;
}
