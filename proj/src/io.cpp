#include "stq/io.hpp"

#include <sstream>

#include "json.hpp"
#include "stq/errors.hpp"

namespace stq {

namespace {

using nlohmann::ordered_json;

ordered_json weight_json(const Weight& w) { return ordered_json(std::vector<int>(w.coords().begin(), w.coords().end())); }

std::string quoted(const Weight& w) { return "\"" + w.to_string() + "\""; }

}  // namespace

std::string_view basis_name(Basis b) {
  switch (b) {
    case Basis::Orbit: return "orbit";
    case Basis::Weyl: return "weyl";
    case Basis::Full: return "full";
  }
  return "";
}

Basis parse_basis(std::string_view name) {
  for (Basis b : {Basis::Orbit, Basis::Weyl, Basis::Full})
    if (basis_name(b) == name) return b;
  throw PreconditionError("unknown basis '" + std::string(name) + "'");
}

std::string character_json(const CharacterRecord& r) {
  ordered_json j;
  j["type"] = r.type;
  j["p"] = r.p ? ordered_json(*r.p) : ordered_json(nullptr);
  j["basis"] = basis_name(r.basis);
  j["terms"] = ordered_json::array();
  for (const auto& [w, c] : r.terms) j["terms"].push_back({{"weight", weight_json(w)}, {"coeff", c}});
  return j.dump();
}

CharacterRecord parse_character_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    CharacterRecord r;
    r.type = j.at("type").get<std::string>();
    if (!j.at("p").is_null()) r.p = j.at("p").get<int>();
    r.basis = parse_basis(j.at("basis").get<std::string>());
    for (const auto& t : j.at("terms")) {
      const auto coords = t.at("weight").get<std::vector<int>>();
      const auto c = t.at("coeff").get<std::int64_t>();
      if (c == 0) continue;
      if (!r.terms.emplace(Weight(std::span<const int>(coords)), c).second)
        throw PreconditionError("repeated weight in character JSON");
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("malformed character JSON: ") + e.what());
  }
}

std::string character_text(const CharacterRecord& r, const RootSystem& roots) {
  std::vector<Weight> ws;
  for (const auto& [w, c] : r.terms) ws.push_back(w);
  const char* symbol = r.basis == Basis::Orbit ? "s" : r.basis == Basis::Weyl ? "chi" : "e";
  std::ostringstream out;
  for (const Weight& w : report_order(ws, roots)) out << symbol << "(" << w.to_string() << ")\t" << r.terms.at(w) << "\n";
  return out.str();
}

std::string report_csv(const SteinbergReport& report) {
  std::ostringstream out;
  out << "weight,t_zeta,m_p,diff\n";
  for (const auto& row : report.rows)
    out << quoted(row.weight) << "," << row.t_zeta << "," << row.m_p << "," << row.t_zeta - row.m_p << "\n";
  return out.str();
}

std::string report_json(const SteinbergReport& report, std::string_view type) {
  ordered_json j;
  j["type"] = type;
  j["p"] = report.p;
  j["lambda"] = weight_json(report.lambda);
  j["agrees"] = report.agrees;
  j["rows"] = ordered_json::array();
  for (const auto& row : report.rows)
    j["rows"].push_back({{"weight", weight_json(row.weight)}, {"t_zeta", row.t_zeta}, {"m_p", row.m_p}});
  return j.dump();
}

std::string report_text(const SteinbergReport& report) {
  std::ostringstream out;
  out << "lambda " << report.lambda.to_string() << ", p = " << report.p << ", " << report.rows.size() << " orbits, "
      << (report.agrees ? "agree" : "differ") << "\n";
  for (const auto& row : report.rows) {
    out << "s(" << row.weight.to_string() << ")\t" << row.t_zeta << "\t" << row.m_p;
    if (row.t_zeta != row.m_p) out << "\t*";
    out << "\n";
  }
  return out.str();
}

std::string weights_json(const std::vector<Weight>& weights, std::string_view type, std::optional<int> p) {
  ordered_json j;
  j["type"] = type;
  j["p"] = p ? ordered_json(*p) : ordered_json(nullptr);
  j["count"] = weights.size();
  j["weights"] = ordered_json::array();
  for (const Weight& w : weights) j["weights"].push_back(weight_json(w));
  return j.dump();
}

std::string weights_csv(const std::vector<Weight>& weights) {
  std::ostringstream out;
  out << "weight\n";
  for (const Weight& w : weights) out << quoted(w) << "\n";
  return out.str();
}

}  // namespace stq
