#pragma once

// Text formats for the command-line tool. Exact values are always strings:
// decimal for integers, "p/q" for rationals.

#include "kacspec/charpoly.hpp"
#include "kacspec/spectrum.hpp"
#include "kacspec/symmfunc.hpp"

#include <nlohmann/json.hpp>

#include <ostream>
#include <span>

namespace kacspec {

enum class OutputFormat { Csv, Json };

/// Header "n,k,lhs,rhs_dp[,rhs_enum],charpoly_abs[,pyramid_layer,pyramid_slice],equal";
/// a column is present iff its route was selected.
void write_reports_csv(std::ostream& out, std::span<const IdentityReport> reports, const RouteSet& routes);
nlohmann::ordered_json reports_to_json(std::span<const IdentityReport> reports);

/// One row "n,k,d_kn" per stored coefficient.
void write_charpoly_csv(std::ostream& out, const CharPoly& p);
/// {"n": n, "coeffs": ["1", "-10", "9"]}
nlohmann::ordered_json charpoly_to_json(const CharPoly& p);
/// Inverse of charpoly_to_json. Throws std::invalid_argument.
CharPoly charpoly_from_json(const nlohmann::ordered_json& doc);

/// {"n": n, "eigenvalues": [...], "charpoly_matches_product": bool,
///  "pairs": [{"d", "lambda", "vector": ["p/q", ...], "integer_vector", "degree",
///             "leading_coefficient", "reflection", "verified", "functional_equation"}]}
nlohmann::ordered_json spectrum_to_json(std::size_t n, std::span<const CheckedPair> pairs);
/// One row "n,d,lambda,i,value,verified" per eigenvector entry (i is 1-based).
void write_spectrum_csv(std::ostream& out, std::span<const CheckedPair> pairs);

}  // namespace kacspec
