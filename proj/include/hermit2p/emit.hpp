// Serialization of library results: the "iP+jQ" divisor notation, CSV tables,
// and the JSON schemas emitted by the command-line tool.
//
// Schemas (all integers, keys in alphabetical order):
//   tables  CSV: delta,dim_one_point,dim_two_point,r
//   search  CSV: k,d_z,d_x,G1_i,G1_j,G2_i,G2_j   (d_x empty when unknown)
//   code   JSON: {divisor:{i,j}, generator:[[int]], k, n, q}
//   params JSON: {d, family, k, n}
//   aqecc  JSON: {construction, d_x, d_z, field_order, k, n, purity, purity_note}
//   tables JSON: array of {delta, dim_one_point, dim_two_point, r}
//   search JSON: array of {G1:{i,j}, G2:{i,j}, d_x (null when unknown), d_z, k}

#pragma once

#include <string>
#include <vector>

#include "hermit2p/codes.hpp"
#include "hermit2p/curve.hpp"
#include "hermit2p/params.hpp"
#include "hermit2p/quantum.hpp"

namespace hermit2p {

// Accepts "35P+5Q", "6P-2Q", "3P", "-2Q", "0" (spaces ignored). When both
// terms are present the Q term must carry an explicit sign. Throws
// std::invalid_argument on anything else.
TwoPointDivisor parse_divisor(const std::string& text);

// Inverse of parse_divisor: "iP+jQ" / "iP-jQ" / "iP" / "jQ" / "0".
std::string format_divisor(TwoPointDivisor g);

// One "x,y" line per point, integer element encodings.
std::string points_to_lines(const std::vector<CurvePoint>& points);

// One "dx,dy" line per monomial.
std::string monomials_to_lines(const std::vector<Monomial>& basis);

std::string table_to_csv(const std::vector<TableRow>& rows);
std::string table_to_json(const std::vector<TableRow>& rows);
std::string table_to_text(const std::vector<TableRow>& rows);

std::string search_to_csv(const std::vector<SearchRecord>& records);
std::string search_to_json(const std::vector<SearchRecord>& records);

std::string params_to_csv(const ClassicalParams& p);
std::string params_to_json(const ClassicalParams& p);
std::string params_to_text(const ClassicalParams& p);

std::string quantum_to_json(const QuantumCodeParams& p);

std::string code_to_json(unsigned q, TwoPointDivisor g, const LinearCode& c);

}  // namespace hermit2p
