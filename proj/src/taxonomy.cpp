#include "triqent/taxonomy.hpp"

#include "triqent/core.hpp"

namespace triqent {

namespace {

constexpr bool X = true;
constexpr bool o = false;

const std::vector<Stratum> kStrata = {
    {EntClass::Product, EntType::T1, {X, o, o, o, o}},
    {EntClass::A_BC, EntType::T2a, {o, X, o, o, X}},
    {EntClass::B_AC, EntType::T2a, {X, o, X, o, o}},
    {EntClass::C_AB, EntType::T2a, {X, o, o, X, o}},
    {EntClass::GHZ, EntType::T2b, {X, o, o, o, X}},
    {EntClass::W, EntType::T3a, {X, o, X, X, o}},
    {EntClass::GHZ, EntType::T3b12, {X, o, o, X, X}},
    {EntClass::GHZ, EntType::T3b23, {X, X, o, o, X}},
    {EntClass::GHZ, EntType::T3b13, {X, o, X, o, X}},
    {EntClass::W, EntType::T4a, {X, X, X, X, o}},
    {EntClass::GHZ, EntType::T4bL2, {X, X, o, X, X}},
    {EntClass::GHZ, EntType::T4bL3, {X, X, X, o, X}},
    {EntClass::GHZ, EntType::T4c, {X, o, X, X, X}},
    {EntClass::GHZ, EntType::T5, {X, X, X, X, X}},
};

constexpr std::array<Family, 9> kFamilies = {
    Family::F1, Family::F2a, Family::F2b, Family::F3a, Family::F3b,
    Family::F4a, Family::F4b, Family::F4c, Family::F5};

}  // namespace

const std::vector<Stratum>& all_strata() { return kStrata; }

const std::array<Family, 9>& all_families() { return kFamilies; }

Family family_of(EntType t) {
  switch (t) {
    case EntType::T1: return Family::F1;
    case EntType::T2a: return Family::F2a;
    case EntType::T2b: return Family::F2b;
    case EntType::T3a: return Family::F3a;
    case EntType::T3b12:
    case EntType::T3b23:
    case EntType::T3b13: return Family::F3b;
    case EntType::T4a: return Family::F4a;
    case EntType::T4bL2:
    case EntType::T4bL3: return Family::F4b;
    case EntType::T4c: return Family::F4c;
    case EntType::T5: return Family::F5;
  }
  return Family::F5;
}

std::vector<Stratum> strata_of(Family f) {
  std::vector<Stratum> out;
  for (const auto& s : kStrata)
    if (family_of(s.type) == f) out.push_back(s);
  return out;
}

Stratum stratum_of(EntClass cls, EntType type) {
  for (const auto& s : kStrata)
    if (s.cls == cls && s.type == type) return s;
  throw Error(ErrorCode::UnknownType, std::string("no stratum for ") +
                                          to_string(cls) + "/" + to_string(type));
}

const char* to_string(EntClass c) {
  switch (c) {
    case EntClass::Product: return "A-B-C";
    case EntClass::A_BC: return "A-BC";
    case EntClass::B_AC: return "B-AC";
    case EntClass::C_AB: return "C-AB";
    case EntClass::W: return "W";
    case EntClass::GHZ: return "GHZ";
  }
  return "?";
}

const char* to_string(EntType t) {
  switch (t) {
    case EntType::T1: return "1";
    case EntType::T2a: return "2a";
    case EntType::T2b: return "2b";
    case EntType::T3a: return "3a";
    case EntType::T3b12: return "3b-12";
    case EntType::T3b23: return "3b-23";
    case EntType::T3b13: return "3b-13";
    case EntType::T4a: return "4a";
    case EntType::T4bL2: return "4b-l2";
    case EntType::T4bL3: return "4b-l3";
    case EntType::T4c: return "4c";
    case EntType::T5: return "5";
  }
  return "?";
}

const char* to_string(Family f) {
  switch (f) {
    case Family::F1: return "1";
    case Family::F2a: return "2a";
    case Family::F2b: return "2b";
    case Family::F3a: return "3a";
    case Family::F3b: return "3b";
    case Family::F4a: return "4a";
    case Family::F4b: return "4b";
    case Family::F4c: return "4c";
    case Family::F5: return "5";
  }
  return "?";
}

EntType parse_type(const std::string& s) {
  static const std::array<EntType, 12> all = {
      EntType::T1,    EntType::T2a,   EntType::T2b,   EntType::T3a,
      EntType::T3b12, EntType::T3b23, EntType::T3b13, EntType::T4a,
      EntType::T4bL2, EntType::T4bL3, EntType::T4c,   EntType::T5};
  for (auto t : all)
    if (s == to_string(t)) return t;
  if (s == "4b-λ2") return EntType::T4bL2;
  if (s == "4b-λ3") return EntType::T4bL3;
  throw Error(ErrorCode::UnknownType, "unknown type '" + s + "'");
}

Family parse_family(const std::string& s) {
  for (auto f : kFamilies)
    if (s == to_string(f)) return f;
  throw Error(ErrorCode::UnknownType, "unknown type '" + s + "'");
}

}  // namespace triqent
