#include "momentforge/render.hpp"

#include <algorithm>
#include <sstream>

namespace momentforge {

Json scalar_json(const Rational& x) { return x.to_string(); }
Json scalar_json(double x) { return round12(x); }

namespace {

template <class S>
Json matrix_json_impl(const MomentMatrix<S>& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.n; ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.n; ++j) row.push_back(scalar_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

// right-aligned columns
std::string grid_text(const std::vector<std::vector<std::string>>& cells) {
  size_t width = 0;
  for (const auto& row : cells)
    for (const auto& c : row) width = std::max(width, c.size());
  std::string out;
  for (const auto& row : cells) {
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) out += "  ";
      out += std::string(width - row[j].size(), ' ') + row[j];
    }
    out += "\n";
  }
  return out;
}

template <class S>
std::string matrix_text_impl(const MomentMatrix<S>& m) {
  std::vector<std::vector<std::string>> cells(static_cast<size_t>(m.n));
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) cells[static_cast<size_t>(i)].push_back(scalar_string(m(i, j)));
  return grid_text(cells);
}

template <class S>
Json gradient_json_impl(int n, int d, const std::vector<S>& values) {
  auto basis = basis_for(n, d);
  Json out = Json::array();
  for (int k = 0; k < basis->size(); ++k)
    out.push_back({{"exp", exponent_json((*basis)[k])}, {"value", scalar_json(values[static_cast<size_t>(k)])}});
  return out;
}

template <class S>
std::string gradient_text_impl(int n, int d, const std::vector<S>& values) {
  auto basis = basis_for(n, d);
  std::string out;
  for (int k = 0; k < basis->size(); ++k)
    out += monomial_string((*basis)[k]) + ": " + scalar_string(values[static_cast<size_t>(k)]) + "\n";
  return out;
}

std::string values_text(const std::vector<Rational>& v) {
  std::string s;
  for (size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + ("b" + std::to_string(k + 1)) + " = " + v[k].to_string();
  return s;
}

std::string param_value_text(const ParamValue& v) {
  if (v.exact) {
    if (v.exact->rational_value() || v.exact->square()) return v.exact->to_string();
    return v.exact->to_string() + " ~ " + format_double(v.approx);
  }
  return format_double(v.approx);
}

}  // namespace

Json matrix_json(const MomentMatrix<Rational>& m) { return matrix_json_impl(m); }
Json matrix_json(const MomentMatrix<double>& m) { return matrix_json_impl(m); }
std::string matrix_text(const MomentMatrix<Rational>& m) { return matrix_text_impl(m); }
std::string matrix_text(const MomentMatrix<double>& m) { return matrix_text_impl(m); }

Json symbolic_moment_json(const SymbolicMoment& m, const std::vector<std::string>& names) {
  Json rows = Json::array();
  for (int i = 0; i < m.n; ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.n; ++j) row.push_back(m.numerators(i, j).to_string(names));
    rows.push_back(row);
  }
  return {{"denominator", m.denominator.to_string(names)}, {"numerators", rows}};
}

std::string symbolic_moment_text(const SymbolicMoment& m, const std::vector<std::string>& names) {
  std::string out = "r = " + m.denominator.to_string(names) + "\n";
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      out += "r" + std::to_string(i + 1) + std::to_string(j + 1) + " = " + m.numerators(i, j).to_string(names) + "\n";
  return out;
}

Json gradient_json(int n, int d, const std::vector<Rational>& values) { return gradient_json_impl(n, d, values); }
Json gradient_json(int n, int d, const std::vector<double>& values) { return gradient_json_impl(n, d, values); }
std::string gradient_text(int n, int d, const std::vector<Rational>& values) { return gradient_text_impl(n, d, values); }
std::string gradient_text(int n, int d, const std::vector<double>& values) { return gradient_text_impl(n, d, values); }

Json gradient_json(int n, int d, const std::vector<RationalFunction>& values, const std::vector<std::string>& names) {
  auto basis = basis_for(n, d);
  Json out = Json::array();
  for (int k = 0; k < basis->size(); ++k)
    out.push_back({{"exp", exponent_json((*basis)[k])}, {"value", values[static_cast<size_t>(k)].to_string(names)}});
  return out;
}

std::string gradient_text(int n, int d, const std::vector<RationalFunction>& values,
                          const std::vector<std::string>& names) {
  auto basis = basis_for(n, d);
  std::string out;
  for (int k = 0; k < basis->size(); ++k)
    out += monomial_string((*basis)[k]) + ": " + values[static_cast<size_t>(k)].to_string(names) + "\n";
  return out;
}

Json monomials_json(int n, int d) {
  Json out = Json::array();
  for (const auto& e : basis_for(n, d)->monomials()) out.push_back(exponent_json(e));
  return out;
}

std::string monomials_text(int n, int d) {
  std::string out;
  for (const auto& e : basis_for(n, d)->monomials()) out += monomial_string(e) + "\n";
  return out;
}

Json support_json(const SupportSet& s) {
  Json out = Json::array();
  for (const auto& e : s) out.push_back(exponent_json(e));
  return out;
}

Json orbits_json(const std::vector<OrbitRepresentative>& reps) {
  Json out = Json::array();
  for (const auto& r : reps) out.push_back(support_json(r.support));
  return out;
}

std::string orbits_text(const std::vector<OrbitRepresentative>& reps) {
  std::string out;
  for (const auto& r : reps) out += support_string(r.support) + "\n";
  out += std::to_string(reps.size()) + " classes\n";
  return out;
}

Json verdicts_json(const std::vector<DiagonalVerdict>& verdicts) {
  Json out = Json::array();
  for (const auto& v : verdicts) {
    Json entries = Json::array();
    for (const auto& e : v.offending_entries)
      entries.push_back({{"i", e.i + 1}, {"j", e.j + 1}, {"numerator", e.numerator.to_string()}});
    Json item = {{"family", v.family.to_string()},
                 {"support", support_json(v.family.support)},
                 {"diagonal", v.is_diagonal},
                 {"offending_entries", entries}};
    if (v.witness) {
      Json w = Json::array();
      for (const auto& x : *v.witness) w.push_back(x.to_string());
      item["witness"] = w;
    } else {
      item["witness"] = nullptr;
    }
    out.push_back(item);
  }
  return out;
}

std::string verdicts_text(const std::vector<DiagonalVerdict>& verdicts) {
  std::string out;
  int count = 0;
  for (const auto& v : verdicts) {
    if (v.is_diagonal) {
      ++count;
      out += "diagonal      " + v.family.to_string() + "\n";
    } else {
      out += "not diagonal  " + v.family.to_string();
      if (v.witness) out += "  (witness " + values_text(*v.witness) + ")";
      out += "\n";
    }
  }
  out += std::to_string(count) + " of " + std::to_string(verdicts.size()) + " families diagonal\n";
  return out;
}

Json param_value_json(const ParamValue& v) {
  if (!v.exact) return round12(v.approx);
  const AlgebraicNumber& a = *v.exact;
  if (a.rational_value() || a.square()) return a.to_string();
  return {{"minpoly", a.minimal_polynomial.to_string()},
          {"interval", {a.interval.lo.to_string(), a.interval.hi.to_string()}},
          {"approx", round12(v.approx)}};
}

Json solution_json(const CriticalSolution& s) {
  Json values = Json::array();
  for (const auto& v : s.values) values.push_back(param_value_json(v));
  return {{"family", s.family.to_string()},
          {"values", values},
          {"residual", round12(s.residual)},
          {"exact_zero", s.exact_zero},
          {"positive_dimensional", s.positive_dimensional},
          {"method", s.method},
          {"member", to_string(s.member())},
          {"canonical_form", to_string(s.canonical_form)}};
}

Json critical_json(const std::vector<FamilyReport>& reports) {
  Json accepted = Json::array();
  Json rejected = Json::array();
  for (const auto& r : reports) {
    if (r.solutions.empty()) {
      rejected.push_back(r.family.to_string());
      continue;
    }
    Json sols = Json::array();
    for (const auto& s : r.solutions) sols.push_back(solution_json(s));
    accepted.push_back({{"family", r.family.to_string()}, {"solutions", sols}});
  }
  return {{"families", accepted}, {"rejected", rejected}};
}

std::string critical_text(const std::vector<FamilyReport>& reports) {
  std::ostringstream out;
  int found = 0;
  for (const auto& r : reports) {
    if (r.solutions.empty()) {
      out << "no real critical points  " << r.family.to_string() << "\n";
      continue;
    }
    out << r.family.to_string() << "\n";
    std::vector<const CriticalSolution*> isolated, curve;
    for (const auto& s : r.solutions) (s.positive_dimensional ? curve : isolated).push_back(&s);
    for (const auto* s : isolated) {
      ++found;
      out << "  ";
      for (size_t k = 0; k < s->values.size(); ++k)
        out << (k ? ", " : "") << "b" << k + 1 << " = " << param_value_text(s->values[k]);
      out << "\n    " << to_string(s->member()) << "  residual " << format_double(s->residual)
          << (s->exact_zero ? " (exact)" : "") << "\n";
    }
    // curves of critical points would swamp the listing; show a sample
    if (!curve.empty()) {
      found += static_cast<int>(curve.size());
      out << "  " << curve.size() << " points on a positive-dimensional critical set, e.g.\n";
      for (size_t k = 0; k < curve.size() && k < 3; ++k)
        out << "    " << to_string(curve[k]->member()) << "  residual " << format_double(curve[k]->residual) << "\n";
    }
  }
  out << found << " critical points, " << reports.size() << " families searched\n";
  return out.str();
}

Json report_json(const ReproduceReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"case", r.case_name}, {"all_match", r.all_match()}, {"checks", checks}, {"notes", r.notes}};
}

std::string report_text(const ReproduceReport& r) {
  std::string out;
  for (const auto& c : r.checks) out += std::string(c.pass ? "PASS " : "FAIL ") + c.name + ": " + c.detail + "\n";
  for (const auto& n : r.notes) out += "note: " + n + "\n";
  out += r.all_match() ? "all fixtures match\n" : "fixture mismatch\n";
  return out;
}

Json points_json(const std::vector<Point3>& pts) {
  Json out = Json::array();
  for (const auto& p : pts) out.push_back({round12(p[0]), round12(p[1]), round12(p[2])});
  return out;
}

std::string points_text(const std::vector<Point3>& pts) {
  std::string out;
  for (const auto& p : pts) out += format_double(p[0]) + " " + format_double(p[1]) + " " + format_double(p[2]) + "\n";
  return out;
}

}  // namespace momentforge
