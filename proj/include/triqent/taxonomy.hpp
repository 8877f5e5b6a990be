#pragma once

#include <array>
#include <string>
#include <vector>

namespace triqent {

enum class EntClass { Product, A_BC, B_AC, C_AB, W, GHZ };

enum class EntType {
  T1,
  T2a,
  T2b,
  T3a,
  T3b12,
  T3b23,
  T3b13,
  T4a,
  T4bL2,
  T4bL3,
  T4c,
  T5,
};

// The nine sampler families; 2a, 3b and 4b pick a sub-kind from the seed.
enum class Family { F1, F2a, F2b, F3a, F3b, F4a, F4b, F4c, F5 };

// One CD zero pattern with the (class, type) it realizes.
struct Stratum {
  EntClass cls;
  EntType type;
  std::array<bool, 5> nonzero;
};

const std::vector<Stratum>& all_strata();
std::vector<Stratum> strata_of(Family f);
Stratum stratum_of(EntClass cls, EntType type);

const char* to_string(EntClass c);
const char* to_string(EntType t);
const char* to_string(Family f);

EntType parse_type(const std::string& s);
Family parse_family(const std::string& s);
Family family_of(EntType t);

const std::array<Family, 9>& all_families();

}  // namespace triqent
