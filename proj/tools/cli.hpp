#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "weylq/quasipoly.hpp"
#include "weylq/rootsys.hpp"

namespace weylq::cli {

// Subset expressions:
//   full | empty | minus:(c1,..,cl) | ideal:(..);(..) | (..),(..),...
// Every tuple must name a positive root; errors list the valid ones.
RootSubset parse_subset(const RootSystem& rs, const std::string& expr);

std::string tuple_string(const Coeffs& c);
std::vector<std::string> subset_tuples(const RootSystem& rs, const RootSubset& psi);

// Rationals serialize as "p/q", or "n" when integral.
nlohmann::json rational_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json polynomial_json(const RationalPolynomial& p);
RationalPolynomial polynomial_from_json(const nlohmann::json& j);

// {"period", "degree", "constituents": [{"residue", "coeffs_ascending"}]}
nlohmann::json qp_json(const QuasiPolynomial& qp);
QuasiPolynomial qp_from_json(const nlohmann::json& j);

nlohmann::json system_json(const RootSystem& rs);

// Runs one command line (without the program name). Results go to out,
// diagnostics to err. Exit codes: 0 success, 2 invalid input or domain,
// 3 resource cap, 4 internal inconsistency.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weylq::cli
