#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stq/character.hpp"
#include "stq/errors.hpp"
#include "stq/steinberg.hpp"

namespace stq {

/// Serialized form of a character: type label, optional prime, basis and terms.
struct CharacterRecord {
  std::string type;
  std::optional<int> p;
  Basis basis = Basis::Orbit;
  std::map<Weight, std::int64_t> terms;

  friend bool operator==(const CharacterRecord&, const CharacterRecord&) = default;
};

std::string_view basis_name(Basis b);
Basis parse_basis(std::string_view name);

template <Basis B>
CharacterRecord make_record(const Character<B>& c, std::string type, std::optional<int> p) {
  return CharacterRecord{std::move(type), p, B, c.terms()};
}

/// Throws PreconditionError when the record is in another basis.
template <Basis B>
Character<B> record_character(const CharacterRecord& r) {
  if (r.basis != B)
    throw PreconditionError("character record is in the " + std::string(basis_name(r.basis)) + " basis");
  Character<B> c;
  for (const auto& [w, k] : r.terms) c.add(w, k);
  return c;
}

/// `{"type":"A3","p":5,"basis":"orbit","terms":[{"weight":[4,4,4],"coeff":1},...]}`,
/// terms sorted lexicographically by weight.
std::string character_json(const CharacterRecord& r);
/// Inverse of character_json; throws PreconditionError on malformed input.
CharacterRecord parse_character_json(std::string_view text);
/// One `weight<TAB>coeff` line per term, in report order.
std::string character_text(const CharacterRecord& r, const RootSystem& roots);

/// Header `weight,t_zeta,m_p,diff`; weights quoted since they contain commas.
std::string report_csv(const SteinbergReport& report);
std::string report_json(const SteinbergReport& report, std::string_view type);
std::string report_text(const SteinbergReport& report);

std::string weights_json(const std::vector<Weight>& weights, std::string_view type, std::optional<int> p);
std::string weights_csv(const std::vector<Weight>& weights);

}  // namespace stq
