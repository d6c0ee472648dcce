#include "hermit2p/emit.hpp"

#include <json.hpp>

#include <iomanip>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace hermit2p {

namespace {

using nlohmann::json;

json divisor_json(TwoPointDivisor g) { return json{{"i", g.i}, {"j", g.j}}; }

const char* family_name(CodeFamily f) {
  return f == CodeFamily::one_point ? "one_point" : "two_point";
}

const char* purity_name(Purity p) {
  switch (p) {
    case Purity::pure: return "pure";
    case Purity::impure: return "impure";
    default: return "unknown";
  }
}

const char* construction_name(QuantumConstruction c) {
  switch (c) {
    case QuantumConstruction::css_sym: return "css-sym";
    case QuantumConstruction::css_herm: return "css-herm";
    default: return "css-asym";
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

TwoPointDivisor parse_divisor(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t == "0") return {0, 0};
  static const std::regex grammar(R"(^(?:([+-]?[0-9]+)P)?(?:([+-]?[0-9]+)Q)?$)");
  std::smatch m;
  if (!std::regex_match(t, m, grammar) || (!m[1].matched && !m[2].matched))
    throw std::invalid_argument("cannot parse divisor '" + text +
                                "': expected iP+jQ, iP, jQ or 0");
  if (m[1].matched && m[2].matched) {
    char sign = m[2].str().front();
    if (sign != '+' && sign != '-')
      throw std::invalid_argument("cannot parse divisor '" + text +
                                  "': the Q term needs an explicit sign");
  }
  TwoPointDivisor g;
  if (m[1].matched) g.i = std::stoll(m[1].str());
  if (m[2].matched) g.j = std::stoll(m[2].str());
  return g;
}

std::string format_divisor(TwoPointDivisor g) {
  if (g.i == 0 && g.j == 0) return "0";
  std::string out;
  if (g.i != 0) out = std::to_string(g.i) + "P";
  if (g.j != 0) {
    if (!out.empty() && g.j > 0) out += "+";
    out += std::to_string(g.j) + "Q";
  }
  return out;
}

std::string points_to_lines(const std::vector<CurvePoint>& points) {
  std::string out;
  for (const CurvePoint& p : points)
    out += std::to_string(p.x) + "," + std::to_string(p.y) + "\n";
  return out;
}

std::string monomials_to_lines(const std::vector<Monomial>& basis) {
  std::string out;
  for (const Monomial& m : basis)
    out += std::to_string(m.x_exp) + "," + std::to_string(m.y_exp) + "\n";
  return out;
}

std::string table_to_csv(const std::vector<TableRow>& rows) {
  std::string out = "delta,dim_one_point,dim_two_point,r\n";
  for (const TableRow& row : rows)
    out += std::to_string(row.delta) + "," + std::to_string(row.dim_one_point) +
           "," + std::to_string(row.dim_two_point) + "," + std::to_string(row.r) +
           "\n";
  return out;
}

std::string table_to_json(const std::vector<TableRow>& rows) {
  json arr = json::array();
  for (const TableRow& row : rows)
    arr.push_back(json{{"delta", row.delta},
                       {"dim_one_point", row.dim_one_point},
                       {"dim_two_point", row.dim_two_point},
                       {"r", row.r}});
  return dump(arr);
}

std::string table_to_text(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << std::setw(6) << "delta" << std::setw(11) << "one-point" << std::setw(11)
      << "two-point" << std::setw(5) << "r" << "\n";
  for (const TableRow& row : rows)
    out << std::setw(6) << row.delta << std::setw(11) << row.dim_one_point
        << std::setw(11) << row.dim_two_point << std::setw(5) << row.r << "\n";
  return out.str();
}

std::string search_to_csv(const std::vector<SearchRecord>& records) {
  std::string out = "k,d_z,d_x,G1_i,G1_j,G2_i,G2_j\n";
  for (const SearchRecord& r : records) {
    out += std::to_string(r.k) + "," + std::to_string(r.d_z) + ",";
    if (r.d_x) out += std::to_string(*r.d_x);
    out += "," + std::to_string(r.g1.i) + "," + std::to_string(r.g1.j) + "," +
           std::to_string(r.g2.i) + "," + std::to_string(r.g2.j) + "\n";
  }
  return out;
}

std::string search_to_json(const std::vector<SearchRecord>& records) {
  json arr = json::array();
  for (const SearchRecord& r : records) {
    json rec{{"G1", divisor_json(r.g1)},
             {"G2", divisor_json(r.g2)},
             {"k", r.k},
             {"d_z", r.d_z}};
    rec["d_x"] = r.d_x ? json(*r.d_x) : json(nullptr);
    arr.push_back(std::move(rec));
  }
  return dump(arr);
}

std::string params_to_csv(const ClassicalParams& p) {
  return "n,k,d,family\n" + std::to_string(p.n) + "," + std::to_string(p.k) +
         "," + std::to_string(p.d) + "," + family_name(p.family) + "\n";
}

std::string params_to_json(const ClassicalParams& p) {
  return dump(json{
      {"n", p.n}, {"k", p.k}, {"d", p.d}, {"family", family_name(p.family)}});
}

std::string params_to_text(const ClassicalParams& p) {
  std::ostringstream out;
  out << "[" << p.n << ", " << p.k << ", " << p.d << "] ("
      << (p.family == CodeFamily::one_point ? "one-point" : "two-point")
      << ")\n";
  return out.str();
}

std::string quantum_to_json(const QuantumCodeParams& p) {
  return dump(json{{"n", p.n},
                   {"k", p.k},
                   {"d_z", p.d_z},
                   {"d_x", p.d_x},
                   {"field_order", p.field_order},
                   {"purity", purity_name(p.purity)},
                   {"purity_note", p.purity_note},
                   {"construction", construction_name(p.construction)}});
}

std::string code_to_json(unsigned q, TwoPointDivisor g, const LinearCode& c) {
  json gen = json::array();
  for (std::size_t r = 0; r < c.dimension(); ++r) {
    json row = json::array();
    for (Elem e : c.row(r)) row.push_back(e);
    gen.push_back(std::move(row));
  }
  return dump(json{{"q", q},
                   {"divisor", divisor_json(g)},
                   {"n", c.length()},
                   {"k", c.dimension()},
                   {"generator", std::move(gen)}});
}

}  // namespace hermit2p
