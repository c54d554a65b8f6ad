#include "momentforge.h"

#include <cstring>
#include <new>

#include "momentforge/render.hpp"

using namespace momentforge;

struct mf_poly {
  AnyPoly poly;
};

namespace {

thread_local std::string last_error;

mf_status fail(mf_status s, const char *what) {
  last_error = what;
  return s;
}

// Runs fn, translating exceptions to status codes.
template <class F>
mf_status guarded(F &&fn) {
  try {
    fn();
    last_error.clear();
    return MF_OK;
  } catch (const DegenerateError &e) {
    return fail(MF_ERR_DEGENERATE, e.what());
  } catch (const DimensionError &e) {
    return fail(MF_ERR_DIMENSION, e.what());
  } catch (const DomainError &e) {
    return fail(MF_ERR_DOMAIN, e.what());
  } catch (const ParseError &e) {
    return fail(MF_ERR_PARSE, e.what());
  } catch (const UnsupportedError &e) {
    return fail(MF_ERR_UNSUPPORTED, e.what());
  } catch (const std::bad_alloc &) {
    return fail(MF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception &e) {
    return fail(MF_ERR_INTERNAL, e.what());
  }
}

char *dup(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string emit(const Json &j) { return j.dump(2) + "\n"; }

bool valid_mode(int mode) { return mode == MF_AUTO || mode == MF_EXACT || mode == MF_FLOAT; }

// exact arithmetic requested (or implied) for a numeric polynomial
bool use_exact(const AnyPoly &f, int mode) {
  if (mode == MF_FLOAT) return false;
  if (mode == MF_EXACT && !f.is_exact()) throw DomainError("exact arithmetic needs rational coefficients");
  return f.is_exact();
}

template <class S>
MomentMatrix<S> matrix_of(const SparsePoly<S> &f, bool hermitian) {
  return hermitian ? hermitian_matrix(f) : moment_matrix(f);
}

std::string matrix_output(const AnyPoly &f, int mode, int json, bool hermitian) {
  if (f.is_param()) {
    if (hermitian) throw UnsupportedError("symbolic output is available for the moment matrix only");
    if (mode != MF_AUTO) throw DomainError("parametric input has no numeric value");
    SymbolicMoment m = symbolic_moment(f.param());
    return json ? emit(symbolic_moment_json(m, f.symbol_names)) : symbolic_moment_text(m, f.symbol_names);
  }
  if (use_exact(f, mode)) {
    auto m = matrix_of(f.exact(), hermitian);
    return json ? emit(matrix_json(m)) : matrix_text(m);
  }
  auto m = matrix_of(f.as_float(), hermitian);
  return json ? emit(matrix_json(m)) : matrix_text(m);
}

}  // namespace

#define MF_REQUIRE(cond) \
  do { \
    if (!(cond)) return fail(MF_ERR_ARGUMENT, "invalid argument: " #cond); \
  } while (0)

extern "C" {

const char *mf_version(void) { return "0.1.0"; }

const char *mf_last_error(void) { return last_error.c_str(); }

void mf_string_free(char *s) { std::free(s); }

mf_status mf_poly_from_json(const char *json, mf_poly **out) {
  MF_REQUIRE(json && out);
  return guarded([&] { *out = new mf_poly{poly_from_json_text(json)}; });
}

mf_status mf_poly_from_text(const char *text, int n, mf_poly **out) {
  MF_REQUIRE(text && out && n >= 1);
  return guarded([&] { *out = new mf_poly{poly_from_text(text, n)}; });
}

void mf_poly_free(mf_poly *p) { delete p; }

mf_status mf_poly_info(const mf_poly *p, int *n, int *d, int *kind) {
  MF_REQUIRE(p);
  if (n) *n = p->poly.nvars();
  if (d) *d = p->poly.degree();
  if (kind) *kind = p->poly.is_exact() ? MF_KIND_EXACT : (p->poly.is_float() ? MF_KIND_FLOAT : MF_KIND_PARAM);
  return MF_OK;
}

mf_status mf_poly_to_json(const mf_poly *p, char **out) {
  MF_REQUIRE(p && out);
  return guarded([&] { *out = dup(poly_to_json(p->poly).dump()); });
}

mf_status mf_poly_to_text(const mf_poly *p, char **out) {
  MF_REQUIRE(p && out);
  return guarded([&] {
    *out = dup(std::visit([](const auto &f) { return to_string(f); }, p->poly.value()));
  });
}

mf_status mf_moment(const mf_poly *p, int mode, int json, char **out) {
  MF_REQUIRE(p && out && valid_mode(mode));
  return guarded([&] { *out = dup(matrix_output(p->poly, mode, json, false)); });
}

mf_status mf_hermitian(const mf_poly *p, int mode, int json, char **out) {
  MF_REQUIRE(p && out && valid_mode(mode));
  return guarded([&] { *out = dup(matrix_output(p->poly, mode, json, true)); });
}

mf_status mf_moment_values(const mf_poly *p, double *out, size_t capacity) {
  MF_REQUIRE(p && out);
  const size_t n = static_cast<size_t>(p->poly.nvars());
  if (capacity < n * n) return fail(MF_ERR_ARGUMENT, "output buffer smaller than n*n");
  return guarded([&] {
    auto m = moment_matrix(p->poly.as_float());
    std::copy(m.entries.begin(), m.entries.end(), out);
  });
}

mf_status mf_sqlength(const mf_poly *p, int mode, int json, char **out) {
  MF_REQUIRE(p && out && valid_mode(mode));
  return guarded([&] {
    const AnyPoly &f = p->poly;
    Json value;
    if (f.is_param()) {
      if (mode != MF_AUTO) throw DomainError("parametric input has no numeric value");
      value = square_length_symbolic(f.param()).to_string(f.symbol_names);
    } else if (use_exact(f, mode)) {
      value = scalar_json(square_length(f.exact()));
    } else {
      value = scalar_json(square_length(f.as_float()));
    }
    *out = dup(json ? emit({{"sqlength", value}}) : (value.is_string() ? value.get<std::string>() : format_double(value.get<double>())) + "\n");
  });
}

mf_status mf_sqlength_value(const mf_poly *p, double *out) {
  MF_REQUIRE(p && out);
  return guarded([&] {
    *out = p->poly.is_exact() ? square_length(p->poly.exact()).to_double() : square_length(p->poly.as_float());
  });
}

mf_status mf_grad(const mf_poly *p, int mode, int json, char **out) {
  MF_REQUIRE(p && out && valid_mode(mode));
  return guarded([&] {
    const AnyPoly &f = p->poly;
    const int n = f.nvars(), d = f.degree();
    if (f.is_param()) {
      if (mode != MF_AUTO) throw DomainError("parametric input has no numeric value");
      auto g = gradient_symbolic(f.param());
      *out = dup(json ? emit(gradient_json(n, d, g, f.symbol_names)) : gradient_text(n, d, g, f.symbol_names));
    } else if (use_exact(f, mode)) {
      auto g = gradient(f.exact());
      *out = dup(json ? emit(gradient_json(n, d, g)) : gradient_text(n, d, g));
    } else {
      auto g = gradient(f.as_float());
      *out = dup(json ? emit(gradient_json(n, d, g)) : gradient_text(n, d, g));
    }
  });
}

mf_status mf_flow(const mf_poly *p, int i, int j, int mode, char **out) {
  MF_REQUIRE(p && out && valid_mode(mode));
  return guarded([&] {
    if (use_exact(p->poly, mode))
      *out = dup(flow_derivative(p->poly.exact(), i, j).to_string());
    else
      *out = dup(format_double(flow_derivative(p->poly.as_float(), i, j)));
  });
}

mf_status mf_verify(const mf_poly *p, double *residual, int *exact_zero) {
  MF_REQUIRE(p && residual);
  return guarded([&] {
    if (p->poly.is_exact()) {
      Residual r = verify_critical(p->poly.exact());
      *residual = r.value;
      if (exact_zero) *exact_zero = r.exact_zero;
    } else {
      *residual = verify_critical(p->poly.as_float());
      if (exact_zero) *exact_zero = 0;
    }
  });
}

mf_status mf_fixed_point(const mf_poly *p, int *fixed) {
  MF_REQUIRE(p && fixed);
  return guarded([&] { *fixed = fixed_point_check(p->poly.exact()); });
}

mf_status mf_torus_canonical(const mf_poly *p, mf_poly **out) {
  MF_REQUIRE(p && out);
  return guarded([&] {
    auto g = p->poly.is_exact() ? torus_canonical(p->poly.exact()) : torus_canonical(p->poly.as_float());
    *out = new mf_poly{AnyPoly(g)};
  });
}

mf_status mf_monomials(int n, int d, int json, char **out) {
  MF_REQUIRE(out);
  return guarded([&] { *out = dup(json ? emit(monomials_json(n, d)) : monomials_text(n, d)); });
}

mf_status mf_orbits(int n, int d, int terms, int all_vars, int json, char **out) {
  MF_REQUIRE(out);
  return guarded([&] {
    auto reps = orbit_classes(n, d, terms);
    if (all_vars) std::erase_if(reps, [](const OrbitRepresentative &r) { return !uses_all_variables(r.support); });
    *out = dup(json ? emit(orbits_json(reps)) : orbits_text(reps));
  });
}

mf_status mf_diagonal(int n, int d, int terms, int json, char **out) {
  MF_REQUIRE(out);
  return guarded([&] {
    auto verdicts = classify_families(n, d, terms);
    *out = dup(json ? emit(verdicts_json(verdicts)) : verdicts_text(verdicts));
  });
}

mf_status mf_critical(int n, int d, int terms, double tol, int json, char **out) {
  MF_REQUIRE(out && tol > 0.0);
  return guarded([&] {
    SolveOptions opts;
    opts.tolerance = tol;
    auto reports = critical_points(n, d, terms, opts);
    *out = dup(json ? emit(critical_json(reports)) : critical_text(reports));
  });
}

mf_status mf_reproduce(const char *which, int json, char **out, int *all_match) {
  MF_REQUIRE(which && out);
  return guarded([&] {
    ReproduceReport r = reproduce_paper(which);
    if (all_match) *all_match = r.all_match();
    *out = dup(json ? emit(report_json(r)) : report_text(r));
  });
}

mf_status mf_emit_points(const mf_poly *p, double box, int samples, int json, char **out, size_t *count) {
  MF_REQUIRE(p && out);
  return guarded([&] {
    auto pts = emit_points(p->poly.as_float(), box, samples);
    if (count) *count = pts.size();
    *out = dup(json ? emit(points_json(pts)) : points_text(pts));
  });
}

}  // extern "C"
