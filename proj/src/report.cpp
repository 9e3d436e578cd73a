#include "ellgauss/report.hpp"

#include <sstream>

#include "ellgauss/error.hpp"

namespace ellgauss::report {

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "markdown" || s == "md") return Format::Markdown;
  throw Error(ErrorKind::InvalidArgument, "unknown format '" + s + "'");
}

json rational(const mpq_class& q) { return q.get_str(); }

mpq_class parse_rational(const json& j) {
  mpq_class q;
  if (q.set_str(j.get<std::string>(), 10) != 0) throw Error(ErrorKind::InvalidArgument, "malformed rational");
  q.canonicalize();
  return q;
}

json integer(const mpz_class& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

mpz_class parse_integer(const json& j) {
  if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<std::int64_t>()));
  mpz_class z;
  if (z.set_str(j.get<std::string>(), 10) != 0) throw Error(ErrorKind::InvalidArgument, "malformed integer");
  return z;
}

json eisenstein(const EisensteinInt& z) { return json{{"a", integer(z.a())}, {"b", integer(z.b())}}; }

EisensteinInt parse_eisenstein(const json& j) { return {parse_integer(j.at("a")), parse_integer(j.at("b"))}; }

json real(const Real& x) { return x.to_hex(); }

Real parse_real(const json& j) { return Real::from_hex(j.get<std::string>()); }

json complex(const HPComplex& z) { return json{{"re", real(z.re())}, {"im", real(z.im())}}; }

HPComplex parse_complex(const json& j) { return {parse_real(j.at("re")), parse_real(j.at("im"))}; }

json alpha_json(const AlphaResult& a) {
  return json{{"ell", integer(a.ell)},
              {"lambda", eisenstein(a.lambda)},
              {"alpha", eisenstein(a.alpha)},
              {"unit", eisenstein(a.unit)},
              {"integer_part", integer(a.integer_part)},
              {"precision_used", a.precision_used},
              {"working_precision", a.working_precision},
              {"residual", real(a.residual)},
              {"lambda_cube_rel_error", real(a.lambda_cube_rel_error)},
              {"gauss_sum", complex(a.gauss_sum)},
              {"lambda_tilde", complex(a.lambda_tilde)}};
}

AlphaResult parse_alpha(const json& j) {
  AlphaResult a;
  a.ell = parse_integer(j.at("ell"));
  a.lambda = parse_eisenstein(j.at("lambda"));
  a.alpha = parse_eisenstein(j.at("alpha"));
  a.unit = parse_eisenstein(j.at("unit"));
  a.integer_part = parse_integer(j.at("integer_part"));
  a.precision_used = j.at("precision_used").get<mpfr_prec_t>();
  a.working_precision = j.at("working_precision").get<mpfr_prec_t>();
  a.residual = parse_real(j.at("residual"));
  a.lambda_cube_rel_error = parse_real(j.at("lambda_cube_rel_error"));
  a.gauss_sum = parse_complex(j.at("gauss_sum"));
  a.lambda_tilde = parse_complex(j.at("lambda_tilde"));
  return a;
}

json congruence_json(const CongruenceReport& r) {
  return json{{"case", std::to_string(r.ell_mod9) + " mod 9"},
              {"index", r.index},
              {"bh_value", rational(r.bh_value)},
              {"bh_residue", integer(r.bh_residue)},
              {"alpha_residue", integer(r.alpha_residue)},
              {"abs_square_lhs", integer(r.abs_square_lhs)},
              {"abs_square_rhs", integer(r.abs_square_rhs)},
              {"denominator_ok", r.denominator_ok},
              {"alpha_pass", r.alpha_pass},
              {"abs_square_pass", r.abs_square_pass},
              {"pass", r.pass()}};
}

json local_data_json(const LocalData& d) {
  json j{{"prime", d.prime.to_string()}, {"kodaira", d.symbol()}, {"tamagawa", d.tamagawa},
         {"disc_valuation", d.disc_valuation}};
  if (d.point_count) j["point_count"] = integer(*d.point_count);
  if (!d.steps.empty()) j["steps"] = d.steps;
  return j;
}

namespace {

json factor_json(const LocalFactor& f) {
  json arr = json::array();
  for (const auto& c : f.coeffs) arr.push_back(eisenstein(c));
  return arr;
}

}  // namespace

json deu_json(const DeuReport& r, bool with_factors) {
  json j{{"norm_bound", r.norm_bound}, {"prime_ideals", r.factors.size()}, {"failures", r.failures()},
         {"pass", r.pass()}};
  if (with_factors) {
    json arr = json::array();
    for (const auto& f : r.factors) {
      json e{{"prime", f.prime.to_string()}, {"norm", integer(f.prime.norm)},
             {"hecke", factor_json(f.hecke)}, {"hecke_conj", factor_json(f.hecke_conj)},
             {"elliptic", factor_json(f.elliptic)}, {"match", f.match()}};
      if (f.point_count) e["point_count"] = integer(*f.point_count);
      arr.push_back(std::move(e));
    }
    j["factors"] = std::move(arr);
  }
  return j;
}

json sha_json(const ShaPrediction& s) {
  return json{{"predicted_sha", rational(s.predicted_sha)},
              {"label", kShaLabel},
              {"alpha_abs_square", integer(s.alpha_abs_square)},
              {"tau_lambda", s.tau_lambda},
              {"tau_one_minus_rho", s.tau_one_minus_rho},
              {"torsion_order", s.torsion_order},
              {"rank_assumed", s.rank_assumed},
              {"square_up_to_2_3", s.square_up_to_2_3},
              {"tau_infinity", real(s.tau_infinity)},
              {"l_value", complex(s.l_value.hecke)},
              {"l_value_elliptic", real(s.l_value.elliptic)},
              {"l_value_rel_error", real(s.l_value.relative_error)}};
}

json mainco_json(const MaincoReport& r) {
  return json{{"row", r.row},
              {"sha_residue", integer(r.sha_residue)},
              {"rhs_residue", integer(r.rhs_residue)},
              {"both_zero", r.both_zero},
              {"in_subgroup", r.in_subgroup},
              {"subgroup_order", r.subgroup_order},
              {"index", r.index},
              {"pass", r.pass()}};
}

std::vector<int> table1_indices() {
  std::vector<int> v;
  for (int n = 1; n <= 67; n += 3) v.push_back(n);
  return v;
}

std::vector<int> table2_indices() {
  std::vector<int> v;
  for (int n = 2; n <= 56; n += 3) v.push_back(n);
  return v;
}

std::vector<int> table3_indices() {
  std::vector<int> v;
  for (int n = 6; n <= 42; n += 6) v.push_back(n);
  return v;
}

json tables_json(const BHTable& t) {
  json c, d, g;
  for (int n : table1_indices()) c["c_" + std::to_string(n)] = t.c.at(static_cast<size_t>(n)).get_str();
  for (int n : table2_indices()) d["d_" + std::to_string(n)] = rational(t.d(n));
  for (int n : table3_indices()) {
    g["G_" + std::to_string(n)] = rational(t.G(n));
    g["BH_" + std::to_string(n)] = rational(t.BH(n));
  }
  return json{{"table1", c}, {"table2", d}, {"table3", g}};
}

std::string render_tables(const BHTable& t, Format f) {
  if (f == Format::Json) return tables_json(t).dump(2) + "\n";
  std::ostringstream os;
  if (f == Format::Csv) {
    os << "n,c_n\n";
    for (int n : table1_indices()) os << n << ',' << t.c.at(static_cast<size_t>(n)).get_str() << '\n';
    os << "\nn,d_n\n";
    for (int n : table2_indices()) os << n << ',' << t.d(n).get_str() << '\n';
    os << "\nn,G_n,BH_n\n";
    for (int n : table3_indices()) os << n << ',' << t.G(n).get_str() << ',' << t.BH(n).get_str() << '\n';
    return os.str();
  }
  os << "| n | c_n |\n|---|---|\n";
  for (int n : table1_indices()) os << "| " << n << " | " << t.c.at(static_cast<size_t>(n)).get_str() << " |\n";
  os << "\n| n | d_n |\n|---|---|\n";
  for (int n : table2_indices()) os << "| " << n << " | " << t.d(n).get_str() << " |\n";
  os << "\n| n | G_n | BH_n |\n|---|---|---|\n";
  for (int n : table3_indices())
    os << "| " << n << " | " << t.G(n).get_str() << " | " << t.BH(n).get_str() << " |\n";
  return os.str();
}

}  // namespace ellgauss::report
