// momentforge command line. Talks to the library through the C API only.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "momentforge.h"

namespace {

enum Exit { kOk = 0, kUsage = 1, kDegenerate = 2, kMismatch = 3 };

struct Failure {
  int code;
};

int exit_for(mf_status s) { return s == MF_ERR_DEGENERATE ? kDegenerate : kUsage; }

void check(mf_status s) {
  if (s == MF_OK) return;
  std::cerr << "error: " << mf_last_error() << "\n";
  throw Failure{exit_for(s)};
}

// takes ownership of a library string and prints it
void print(char* s) {
  std::fputs(s, stdout);
  mf_string_free(s);
}

struct PolyInput {
  std::string file;
  std::string expr;
  int n = 3;
};

void add_poly_options(CLI::App* cmd, PolyInput& in) {
  auto* file = cmd->add_option("--poly", in.file, "polynomial JSON file ('-' reads stdin)");
  auto* expr = cmd->add_option("--expr", in.expr, "polynomial as text, e.g. \"x^3 + y^3\"");
  file->excludes(expr);
  cmd->add_option("--n", in.n, "variable count for --expr")->check(CLI::PositiveNumber);
}

class Poly {
 public:
  explicit Poly(const PolyInput& in) {
    if (!in.expr.empty()) {
      check(mf_poly_from_text(in.expr.c_str(), in.n, &p_));
      return;
    }
    if (in.file.empty()) {
      std::cerr << "error: one of --poly or --expr is required\n";
      throw Failure{kUsage};
    }
    std::stringstream buf;
    if (in.file == "-") {
      buf << std::cin.rdbuf();
    } else {
      std::ifstream f(in.file);
      if (!f) {
        std::cerr << "error: cannot read " << in.file << "\n";
        throw Failure{kUsage};
      }
      buf << f.rdbuf();
    }
    check(mf_poly_from_json(buf.str().c_str(), &p_));
  }
  ~Poly() { mf_poly_free(p_); }
  Poly(const Poly&) = delete;
  Poly& operator=(const Poly&) = delete;
  const mf_poly* get() const { return p_; }

 private:
  mf_poly* p_ = nullptr;
};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Moment maps of hypersurfaces under SL(n): exact matrices, orbit enumeration, critical points"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");
  app.set_version_flag("--version", std::string(mf_version()));

  int n = 3, d = 3, terms = 1;
  auto add_shape = [&](CLI::App* cmd) {
    cmd->add_option("--n", n, "number of variables")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--d", d, "degree")->required()->check(CLI::PositiveNumber);
  };

  auto* monomials = app.add_subcommand("monomials", "ordered monomial basis of degree d");
  add_shape(monomials);

  PolyInput in;
  bool exact = false, as_float = false, hermitian = false;
  auto add_arith = [&](CLI::App* cmd) {
    add_poly_options(cmd, in);
    auto* e = cmd->add_flag("--exact", exact, "exact rational arithmetic");
    auto* f = cmd->add_flag("--float", as_float, "floating point arithmetic");
    e->excludes(f);
  };
  auto* moment = app.add_subcommand("moment", "moment matrix m(f)");
  add_arith(moment);
  moment->add_flag("--hermitian", hermitian, "print H(f) instead of m(f)");
  auto* sqlength = app.add_subcommand("sqlength", "squared length of the moment map");
  add_arith(sqlength);
  auto* grad = app.add_subcommand("grad", "gradient of the squared length over the monomial basis");
  add_arith(grad);

  bool all_vars = false;
  auto* orbits = app.add_subcommand("orbits", "orbit representatives of monomial supports");
  add_shape(orbits);
  orbits->add_option("--terms", terms, "support size")->required();
  orbits->add_flag("--all-vars", all_vars, "keep supports that use every variable");

  auto* diagonal = app.add_subcommand("diagonal", "families with identically diagonal moment matrix");
  add_shape(diagonal);
  diagonal->add_option("--terms", terms, "support size")->required();

  double tol = 1e-9;
  auto* critical = app.add_subcommand("critical", "real critical points in diagonal families");
  add_shape(critical);
  critical->add_option("--terms", terms, "support size")->required();
  critical->add_option("--tol", tol, "residual tolerance")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "gradient residual of a polynomial");
  add_poly_options(verify, in);
  verify->add_option("--tol", tol, "tolerance for the critical verdict")->check(CLI::PositiveNumber);

  std::string which = "all";
  auto* reproduce = app.add_subcommand("reproduce-paper", "rerun the pipeline against the embedded fixtures");
  reproduce->add_option("--case", which, "cubics, quartics or all")
      ->check(CLI::IsMember({"cubics", "quartics", "all"}));

  double box = 2.0;
  int samples = 41;
  std::string out_file;
  auto* points = app.add_subcommand("emit-points", "sample real points of a ternary form for plotting");
  add_poly_options(points, in);
  points->add_option("--box", box, "half-width of the sampling cube")->check(CLI::PositiveNumber);
  points->add_option("--samples", samples, "grid points per axis")->check(CLI::Range(2, 1000));
  points->add_option("--out", out_file, "write points to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  const int fmt_json = json ? 1 : 0;
  const int mode = exact ? MF_EXACT : (as_float ? MF_FLOAT : MF_AUTO);
  char* out = nullptr;
  try {
    if (monomials->parsed()) {
      check(mf_monomials(n, d, fmt_json, &out));
      print(out);
    } else if (moment->parsed()) {
      Poly p(in);
      check((hermitian ? mf_hermitian : mf_moment)(p.get(), mode, fmt_json, &out));
      print(out);
    } else if (sqlength->parsed()) {
      Poly p(in);
      check(mf_sqlength(p.get(), mode, fmt_json, &out));
      print(out);
    } else if (grad->parsed()) {
      Poly p(in);
      check(mf_grad(p.get(), mode, fmt_json, &out));
      print(out);
    } else if (orbits->parsed()) {
      check(mf_orbits(n, d, terms, all_vars, fmt_json, &out));
      print(out);
    } else if (diagonal->parsed()) {
      check(mf_diagonal(n, d, terms, fmt_json, &out));
      print(out);
    } else if (critical->parsed()) {
      check(mf_critical(n, d, terms, tol, fmt_json, &out));
      print(out);
    } else if (verify->parsed()) {
      Poly p(in);
      double residual = 0.0;
      int exact_zero = 0;
      check(mf_verify(p.get(), &residual, &exact_zero));
      bool ok = exact_zero || residual <= tol;
      if (json)
        std::cout << "{\n  \"critical\": " << (ok ? "true" : "false") << ",\n  \"exact_zero\": "
                  << (exact_zero ? "true" : "false") << ",\n  \"residual\": " << fmt(residual) << "\n}\n";
      else
        std::cout << "residual " << fmt(residual) << (exact_zero ? " (exact zero)" : "")
                  << (ok ? ", critical\n" : ", not critical\n");
    } else if (reproduce->parsed()) {
      int all_match = 0;
      check(mf_reproduce(which.c_str(), fmt_json, &out, &all_match));
      print(out);
      return all_match ? kOk : kMismatch;
    } else if (points->parsed()) {
      Poly p(in);
      size_t count = 0;
      check(mf_emit_points(p.get(), box, samples, fmt_json, &out, &count));
      if (out_file.empty()) {
        print(out);
      } else {
        std::ofstream f(out_file);
        f << out;
        mf_string_free(out);
        if (!f) {
          std::cerr << "error: cannot write " << out_file << "\n";
          return kUsage;
        }
        std::cerr << count << " points written to " << out_file << "\n";
      }
    }
  } catch (const Failure& f) {
    return f.code;
  }
  return kOk;
}
