// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "momentforge/critical.hpp"
#include "momentforge/diagonal.hpp"
#include "momentforge/fixtures.hpp"
#include "momentforge/moment.hpp"
#include "momentforge/reproduce.hpp"
#include "momentforge/text_format.hpp"
#include "../unit/oracle.hpp"

using namespace momentforge;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (!pass) detail << "; ";
    pass = false;
    detail << what;
  }
};

int failures = 0;

void run(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome out;
  auto t0 = Clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  double dt = seconds_since(t0);
  if (!out.pass) ++failures;
  std::printf("%s [%d] %s (%.3f s)%s%s\n", out.pass ? "PASS" : "FAIL", id, title.c_str(), dt,
              out.detail.str().empty() ? "" : ": ", out.detail.str().c_str());
  std::fflush(stdout);
}

SparsePoly<Rational> exact(const std::string& t) { return parse_poly(t, 3).to_exact(); }

using SupportCollection = std::set<SupportSet, RepresentativeLess>;

SupportCollection supports(const std::vector<std::string>& texts) {
  SupportCollection out;
  for (const auto& t : texts) out.insert(support_from_text(t, 3));
  return out;
}

SupportCollection supports(const std::vector<OrbitRepresentative>& reps) {
  SupportCollection out;
  for (const auto& r : reps) out.insert(r.support);
  return out;
}

bool same_families(const std::vector<ParamFamily>& got, const std::vector<std::string>& want) {
  if (got.size() != want.size()) return false;
  for (const auto& w : want) {
    auto f = parse_poly(w, 3).to_param();
    if (std::none_of(got.begin(), got.end(), [&](const ParamFamily& g) { return g.poly == f; })) return false;
  }
  return true;
}

}  // namespace

int main() {
  run(1, "moment(x^3 + y^3) = diag(1, 1, -2) exactly, under 1 ms", [](Outcome& o) {
    auto f = exact("x^3 + y^3");
    MomentMatrix<Rational> want(3);
    want(0, 0) = 1;
    want(1, 1) = 1;
    want(2, 2) = -2;
    double best = 1e9;
    MomentMatrix<Rational> m;
    for (int k = 0; k < 5; ++k) {
      auto t0 = Clock::now();
      m = moment_matrix(f);
      best = std::min(best, seconds_since(t0));
    }
    o.require(m == want, "matrix differs");
    o.require(best < 1e-3, "took " + std::to_string(best * 1e3) + " ms");
    o.detail << "best of 5: " << best * 1e3 << " ms";
  });

  run(2, "M(2), M(3) in printed order; basis sizes binomial(n+d-1, d) for n <= 5, d <= 6", [](Outcome& o) {
    auto check = [&](int d, const std::vector<std::string>& want) {
      auto b = basis_for(3, d);
      bool ok = b->size() == static_cast<int>(want.size());
      for (int k = 0; ok && k < b->size(); ++k) ok = (*b)[k] == parse_poly(want[static_cast<size_t>(k)], 3).terms.front().exponent;
      o.require(ok, "M(" + std::to_string(d) + ") differs");
    };
    check(2, fixtures::quadric_basis());
    check(3, fixtures::cubic_basis());
    for (int n = 1; n <= 5; ++n)
      for (int d = 1; d <= 6; ++d)
        o.require(Rational(basis_for(n, d)->size()) == binomial(n + d - 1, d),
                  "count n=" + std::to_string(n) + " d=" + std::to_string(d));
  });

  run(3, "orbit classes: cubic 3/10/25 and quartic 22 equal the printed sets, quartic under 5 s", [](Outcome& o) {
    auto t1 = orbit_classes(3, 3, 1);
    auto t2 = orbit_classes(3, 3, 2);
    auto t3 = orbit_classes(3, 3, 3);
    o.require(t1.size() == 3 && supports(t1) == supports(fixtures::cubic_orbits_1()), "T1");
    o.require(t2.size() == 10 && supports(t2) == supports(fixtures::cubic_orbits_2()), "T2");
    o.require(t3.size() == 25 && supports(t3) == supports(fixtures::cubic_orbits_3()), "T3");
    auto t0 = Clock::now();
    auto q2 = orbit_classes(3, 4, 2);
    double dt = seconds_since(t0);
    o.require(q2.size() == 22 && supports(q2) == supports(fixtures::quartic_orbits_2()), "quartic T2");
    o.require(dt < 5.0, "quartic took " + std::to_string(dt) + " s");
    o.detail << "sizes " << t1.size() << "/" << t2.size() << "/" << t3.size() << ", quartic " << q2.size() << " in "
             << dt << " s";
  });

  run(4, "diagonal families: 11 cubic, 31 quartic three-term, under 60 s", [](Outcome& o) {
    auto t0 = Clock::now();
    std::vector<ParamFamily> cubic;
    for (int m = 2; m <= 10; ++m)
      for (auto& f : diagonal_families(3, 3, m)) cubic.push_back(f);
    auto quartic = diagonal_families(3, 4, 3);
    auto extras = diagonal_families(3, 4, 2);
    double dt = seconds_since(t0);
    o.require(same_families(cubic, fixtures::cubic_diagonal_families()), "cubic families differ (" + std::to_string(cubic.size()) + ")");
    o.require(same_families(quartic, fixtures::quartic_diagonal_families()), "quartic families differ (" + std::to_string(quartic.size()) + ")");
    o.require(dt < 60.0, "took " + std::to_string(dt) + " s");
    o.detail << cubic.size() << " cubic, " << quartic.size() << " quartic; two-term quartic extras reported separately: "
             << extras.size();
  });

  run(5, "six cubic critical points rediscovered, b-values sqrt(2), 1/sqrt(3), 3, sqrt(2), residual <= 1e-9", [](Outcome& o) {
    auto sols = solve_families(3, 3, 2, 3);
    for (const auto& t : fixtures::cubic_critical()) {
      auto m = match_fixture(t, sols);
      o.require(m.torus_match >= 0, "not found: " + t);
      o.require(m.residual <= 1e-9, "residual " + t);
      if (m.torus_match >= 0) o.require(sols[static_cast<size_t>(m.torus_match)].residual <= 1e-9, "solver residual " + t);
    }
    // exact algebraic values in the two irrational families
    const Rational width(Rational(1) / Rational(1000000000000LL));
    auto has = [&](const std::string& support, std::function<bool(const std::vector<ParamValue>&)> pred) {
      auto target = support_from_text(support, 3);
      for (const auto& s : sols)
        if (s.family.support == target && pred(s.values)) return true;
      return false;
    };
    auto is_sqrt = [&](const ParamValue& v, const Rational& c) {
      return v.exact && v.exact->square() == c && v.exact->approx > 0 && v.exact->interval.width() <= width;
    };
    auto is_rational = [&](const ParamValue& v, const Rational& c) { return v.exact && v.exact->rational_value() == c; };
    o.require(has("x*z^2 + y^3 + x^2*y",
                  [&](const auto& v) { return is_sqrt(v[0], 2) && is_sqrt(v[1], Rational(1) / Rational(3)); }),
              "b = (sqrt(2), 1/sqrt(3)) missing");
    o.require(has("x*z^2 + y^3 + x^3", [&](const auto& v) { return is_rational(v[0], 3) && is_sqrt(v[1], 2); }),
              "b = (3, sqrt(2)) missing");
    o.detail << sols.size() << " solutions";
  });

  run(6, "xyz family: fixed-point criterion on 20 + 20 grid points, x^3+y^3+z^3+2xyz critical", [](Outcome& o) {
    auto member = [](const Rational& b1, const Rational& b2, const Rational& b3) {
      SparsePoly<Rational> f(3, 3);
      f.add_term({0, 0, 3}, b3);
      f.add_term({1, 1, 1}, 1);
      f.add_term({0, 3, 0}, b2);
      f.add_term({3, 0, 0}, b1);
      return f;
    };
    const std::vector<Rational> mags{1, 2, Rational(1) / Rational(3), Rational(5) / Rational(2), 7};
    const int signs[4][3] = {{1, 1, 1}, {1, -1, 1}, {-1, 1, -1}, {-1, -1, -1}};
    int on = 0, off = 0;
    for (const auto& a : mags)
      for (const auto& s : signs) {
        auto f = member(a * Rational(s[0]), a * Rational(s[1]), a * Rational(s[2]));
        o.require(fixed_point_check(f), "should be fixed: " + to_string(f));
        ++on;
        // perturb one magnitude so b1^2 = b2^2 = b3^2 fails
        auto g = member(a * Rational(s[0]), a * Rational(s[1]) * Rational(3) / Rational(2), a * Rational(s[2]));
        o.require(!fixed_point_check(g), "should not be fixed: " + to_string(g));
        ++off;
      }
    double r = verify_critical(exact("x^3 + y^3 + z^3 + 2*x*y*z")).value;
    o.require(r <= 1e-9, "x^3+y^3+z^3+2xyz residual " + std::to_string(r));
    o.detail << on << " on-grid, " << off << " off-grid, residual " << r;
  });

  run(7, "quartic symbolic matrix spot checks 36, 192, -96, 72", [](Outcome& o) {
    auto sm = symbolic_moment(general_form(3, 4));
    auto basis = basis_for(3, 4);
    ParamScalar::Key sq(15, 0), mixed(15, 0);
    sq[static_cast<size_t>(basis->index_of({4, 0, 0}))] = 2;
    mixed[static_cast<size_t>(basis->index_of({4, 0, 0}))] = 1;
    mixed[static_cast<size_t>(basis->index_of({3, 1, 0}))] = 1;
    o.require(sm.denominator.coefficient(sq) == Rational(36), "r");
    o.require(sm.numerators(0, 0).coefficient(sq) == Rational(192), "r11");
    o.require(sm.numerators(1, 1).coefficient(sq) == Rational(-96), "r22");
    o.require(sm.numerators(0, 1).coefficient(mixed) == Rational(72), "r12");
    // the whole printed matrix, exactly
    for (const auto& e : fixtures::quartic_moment_matrix()) {
      ParamScalar want = parse_param_scalar(e.expression, 3, 4);
      const ParamScalar& got = e.i < 0 ? sm.denominator : sm.numerators(e.i, e.j);
      o.require(got == want, e.name + " differs");
    }
  });

  run(8, "printed quartic critical list verifies <= 1e-9, rational entries rediscovered exactly, under 10 min", [](Outcome& o) {
    auto t0 = Clock::now();
    auto sols = solve_families(3, 4, 2, 3);
    const auto& list = fixtures::quartic_critical();
    int rational = 0, exact_found = 0, torus_found = 0;
    for (const auto& t : list) {
      auto m = match_fixture(t, sols);
      o.require(m.residual <= 1e-9, "residual " + t);
      if (m.torus_match >= 0) ++torus_found;
      if (parse_poly(t, 3).has_radicals()) continue;
      ++rational;
      bool ok = m.exact_match >= 0 && sols[static_cast<size_t>(m.exact_match)].exact_zero;
      if (ok) ++exact_found;
      o.require(ok, "not rediscovered exactly: " + t);
    }
    double dt = seconds_since(t0);
    o.require(dt < 600.0, "took " + std::to_string(dt) + " s");
    o.detail << list.size() << " printed entries verified, " << exact_found << "/" << rational
             << " rational rediscovered exactly, " << torus_found << " matched by solver";
  });

  run(9, "property suites on 120 random cubics/quartics each", [](Outcome& o) {
    std::mt19937 rng(2024);
    const int samples = 120;
    int trace = 0, scale = 0, euler = 0, flow = 0, fd = 0, imag = 0;
    const double h = 1e-5;
    for (int k = 0; k < samples; ++k) {
      auto f = oracle::random_form(rng, 3, k % 2 ? 4 : 3, 7);
      auto m = moment_matrix(f);
      trace += m.trace().is_zero();
      Rational lambda(0);
      while (lambda.is_zero()) lambda = oracle::random_rational(rng, 20);
      auto g = poly_scale(f, lambda);
      scale += moment_matrix(g) == m && square_length(g) == square_length(f);
      auto grad = gradient(f);
      auto coeffs = coefficient_vector(f);
      Rational total(0);
      for (size_t i = 0; i < grad.size(); ++i) total += coeffs.entries[i] * grad[i];
      euler += total.is_zero();
      auto H = hermitian_matrix(f);
      bool flow_ok = true;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) flow_ok = flow_ok && flow_derivative(f, i, j) == Rational(2) * H(i, j);
      flow += flow_ok;
      auto ff = to_float(f);
      double unit = 1.0 / std::sqrt(norm_squared(ff));
      auto u = poly_scale(ff, unit);
      auto basis = basis_for(3, f.degree());
      bool fd_ok = true;
      for (int i = 0; i < basis->size(); ++i) {
        auto p = u, q = u;
        p.add_term((*basis)[i], h);
        q.add_term((*basis)[i], -h);
        double approx = (square_length(p) - square_length(q)) / (2 * h);
        fd_ok = fd_ok && std::abs(approx - grad[static_cast<size_t>(i)].to_double() / unit) <= 1e-7;
      }
      fd += fd_ok;
      bool im_ok = true;
      for (const auto& x : complex_gradient_imag_parts(f)) im_ok = im_ok && x.is_zero();
      imag += im_ok;
    }
    o.require(trace == samples, "trace");
    o.require(scale == samples, "scale invariance");
    o.require(euler == samples, "Euler relation");
    o.require(flow == samples, "flow = 2H");
    o.require(fd == samples, "finite differences");
    o.require(imag == samples, "imaginary gradient");
    o.detail << "trace " << trace << ", scale " << scale << ", euler " << euler << ", flow " << flow << ", fd " << fd
             << ", imag " << imag << " of " << samples;
  });

  run(10, "monomials are exactly critical: 10 cubic, 15 quartic", [](Outcome& o) {
    int count = 0;
    for (int d = 3; d <= 4; ++d)
      for (const auto& e : basis_for(3, d)->monomials()) {
        auto r = verify_critical(SparsePoly<Rational>::monomial(e, Rational(1)));
        o.require(r.exact_zero, monomial_string(e));
        count += r.exact_zero;
      }
    o.detail << count << " of 25";
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
