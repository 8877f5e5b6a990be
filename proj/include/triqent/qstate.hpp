#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>

#include "triqent/core.hpp"
#include "triqent/taxonomy.hpp"

namespace triqent {

// amp[4i + 2j + k] = t_ijk, qubit A slowest.
struct PureState3 {
  std::array<cplx, 8> amp{};

  cplx& operator()(int i, int j, int k) { return amp[4 * i + 2 * j + k]; }
  cplx operator()(int i, int j, int k) const { return amp[4 * i + 2 * j + k]; }
  Vec8 vec() const;
  bool operator==(const PureState3&) const = default;
};

inline constexpr int idx(int i, int j, int k) { return 4 * i + 2 * j + k; }

PureState3 normalize(const std::array<cplx, 8>& raw);
PureState3 normalize(const Vec8& raw);

struct LocalUnitary {
  Mat2 u;
  Qubit target;
};

PureState3 apply_local_unitary(const PureState3& s, const LocalUnitary& lu);

// Raw tensor action, no normalization or phase fixing.
std::array<cplx, 8> apply_on(const std::array<cplx, 8>& t, const Mat2& u, Qubit q);

struct SliceTensors {
  Mat2 t0;
  Mat2 t1;
  Qubit axis = Qubit::A;
};

SliceTensors slice(const PureState3& s, Qubit q);
std::array<cplx, 8> reassemble(const SliceTensors& st);

namespace states {
PureState3 ghz();
PureState3 w();
PureState3 wt1();
PureState3 wt2();
PureState3 zero();
PureState3 basis(int i, int j, int k);
}  // namespace states

PureState3 named_state(const std::string& name);

// Bit flip on all three qubits.
std::array<cplx, 8> flip_all(const std::array<cplx, 8>& t);

// mt19937_64 with hand-written transforms so draws match across standard
// libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  double uniform();  // [0, 1), 53 bits
  double normal();
  cplx cnormal();    // E|z|^2 = 1
  std::uint64_t next() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

Mat2 haar_unitary(Rng& rng);
PureState3 haar_scramble(const PureState3& s, Rng& rng);

PureState3 sample_haar(std::uint64_t seed);

// Amplitudes of a canonical-form state with the given pattern; lambda^2
// uniform on the simplex, phi uniform on [0, pi] when lambda1 > 0.
struct StratumDraw {
  PureState3 state;
  std::array<double, 5> lambda{};
  double phi = 0.0;
};

StratumDraw draw_stratum(const Stratum& st, std::uint64_t seed, bool scramble = true);
PureState3 sample_stratum(const Stratum& st, std::uint64_t seed, bool scramble = true);
PureState3 sample_type(Family f, std::uint64_t seed);

}  // namespace triqent
