#pragma once

// JSON, CSV and markdown rendering. Rationals are "num/den" strings (integers
// without a denominator), Eisenstein integers are {"a", "b"} objects and
// floats are "<prec>:<hex>" strings that reload bit for bit.

#include <string>

#include <json.hpp>

#include "ellgauss/analytic.hpp"
#include "ellgauss/congruence.hpp"
#include "ellgauss/curves.hpp"
#include "ellgauss/lseries.hpp"
#include "ellgauss/series.hpp"

namespace ellgauss::report {

using json = nlohmann::ordered_json;

enum class Format { Text, Json, Csv, Markdown };

Format parse_format(const std::string& s);

json rational(const mpq_class& q);
mpq_class parse_rational(const json& j);
/// A JSON number when it fits in 64 bits, a decimal string otherwise.
json integer(const mpz_class& z);
mpz_class parse_integer(const json& j);
json eisenstein(const EisensteinInt& z);
EisensteinInt parse_eisenstein(const json& j);
json real(const Real& x);
Real parse_real(const json& j);
json complex(const HPComplex& z);
HPComplex parse_complex(const json& j);

json alpha_json(const AlphaResult& a);
AlphaResult parse_alpha(const json& j);

json congruence_json(const CongruenceReport& r);
json local_data_json(const LocalData& d);
json deu_json(const DeuReport& r, bool with_factors);
json sha_json(const ShaPrediction& s);
json mainco_json(const MaincoReport& r);

/// Indices printed in the published tables.
std::vector<int> table1_indices();  // 1, 4, ..., 67
std::vector<int> table2_indices();  // 2, 5, ..., 56
std::vector<int> table3_indices();  // 6, 12, ..., 42

json tables_json(const BHTable& t);
std::string render_tables(const BHTable& t, Format f);

}  // namespace ellgauss::report
