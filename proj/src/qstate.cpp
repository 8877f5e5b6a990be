#include "triqent/qstate.hpp"

#include <cmath>

namespace triqent {

Vec8 PureState3::vec() const {
  Vec8 v;
  for (int i = 0; i < 8; ++i) v(i) = amp[i];
  return v;
}

PureState3 normalize(const std::array<cplx, 8>& raw) {
  double n2 = 0.0;
  int first = -1;
  for (int i = 0; i < 8; ++i) {
    n2 += std::norm(raw[i]);
    if (first < 0 && std::abs(raw[i]) > 1e-15) first = i;
  }
  if (first < 0) throw Error(ErrorCode::ZeroVector, "all amplitudes vanish");
  cplx scale = std::conj(raw[first]) / (std::abs(raw[first]) * std::sqrt(n2));
  PureState3 s;
  for (int i = 0; i < 8; ++i) s.amp[i] = raw[i] * scale;
  s.amp[first] = std::abs(s.amp[first]);
  return s;
}

PureState3 normalize(const Vec8& raw) {
  std::array<cplx, 8> a;
  for (int i = 0; i < 8; ++i) a[i] = raw(i);
  return normalize(a);
}

std::array<cplx, 8> apply_on(const std::array<cplx, 8>& t, const Mat2& u, Qubit q) {
  const int stride = 4 >> static_cast<int>(q);
  std::array<cplx, 8> out{};
  for (int n = 0; n < 8; ++n) {
    if (n & stride) continue;
    const cplx a0 = t[n], a1 = t[n | stride];
    out[n] = u(0, 0) * a0 + u(0, 1) * a1;
    out[n | stride] = u(1, 0) * a0 + u(1, 1) * a1;
  }
  return out;
}

PureState3 apply_local_unitary(const PureState3& s, const LocalUnitary& lu) {
  const double dev = (lu.u.adjoint() * lu.u - Mat2::Identity()).cwiseAbs().maxCoeff();
  if (!(dev <= 1e-10)) throw Error(ErrorCode::NonUnitary, "u^dagger u deviates from identity");
  return normalize(apply_on(s.amp, lu.u, lu.target));
}

SliceTensors slice(const PureState3& s, Qubit q) {
  SliceTensors st;
  st.axis = q;
  for (int a = 0; a < 2; ++a)
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) {
        cplx v;
        switch (q) {
          case Qubit::A: v = s(a, r, c); break;
          case Qubit::B: v = s(r, a, c); break;
          default: v = s(r, c, a); break;
        }
        (a == 0 ? st.t0 : st.t1)(r, c) = v;
      }
  return st;
}

std::array<cplx, 8> reassemble(const SliceTensors& st) {
  std::array<cplx, 8> t{};
  for (int a = 0; a < 2; ++a)
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) {
        const cplx v = (a == 0 ? st.t0 : st.t1)(r, c);
        switch (st.axis) {
          case Qubit::A: t[idx(a, r, c)] = v; break;
          case Qubit::B: t[idx(r, a, c)] = v; break;
          default: t[idx(r, c, a)] = v; break;
        }
      }
  return t;
}

std::array<cplx, 8> flip_all(const std::array<cplx, 8>& t) {
  std::array<cplx, 8> out;
  for (int n = 0; n < 8; ++n) out[7 - n] = t[n];
  return out;
}

namespace states {

PureState3 basis(int i, int j, int k) {
  PureState3 s;
  s(i, j, k) = 1.0;
  return s;
}

PureState3 zero() { return basis(0, 0, 0); }

PureState3 ghz() {
  std::array<cplx, 8> a{};
  a[0] = a[7] = 1.0;
  return normalize(a);
}

PureState3 w() {
  std::array<cplx, 8> a{};
  a[idx(0, 0, 1)] = a[idx(0, 1, 0)] = a[idx(1, 0, 0)] = 1.0;
  return normalize(a);
}

namespace {
PureState3 w_twisted(int sign) {
  const cplx om = std::polar(1.0, sign * 2.0 * kPi / 3.0);
  std::array<cplx, 8> a{};
  a[idx(0, 0, 1)] = 1.0 / std::sqrt(3.0);
  a[idx(0, 1, 0)] = om / std::sqrt(3.0);
  a[idx(1, 0, 0)] = om * om / std::sqrt(3.0);
  PureState3 s;
  s.amp = a;
  return s;
}
}  // namespace

PureState3 wt1() { return w_twisted(+1); }
PureState3 wt2() { return w_twisted(-1); }

}  // namespace states

PureState3 named_state(const std::string& name) {
  if (name == "ghz") return states::ghz();
  if (name == "w") return states::w();
  if (name == "wt1") return states::wt1();
  if (name == "wt2") return states::wt2();
  if (name == "zero") return states::zero();
  throw Error(ErrorCode::BadInput, "unknown named state '" + name + "'");
}

double Rng::uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

cplx Rng::cnormal() {
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::polar(std::sqrt(-std::log(u1)), 2.0 * kPi * u2);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  return splitmix64(splitmix64(base) ^ (index * 0xD1B54A32D192ED03ULL + 1));
}

Mat2 haar_unitary(Rng& rng) {
  cplx z = rng.cnormal(), w = rng.cnormal();
  const double n = std::sqrt(std::norm(z) + std::norm(w));
  z /= n;
  w /= n;
  const cplx ph = std::polar(1.0, 2.0 * kPi * rng.uniform());
  Mat2 u;
  u << z, w, -std::conj(w), std::conj(z);
  return ph * u;
}

PureState3 haar_scramble(const PureState3& s, Rng& rng) {
  std::array<cplx, 8> t = s.amp;
  for (Qubit q : {Qubit::A, Qubit::B, Qubit::C}) t = apply_on(t, haar_unitary(rng), q);
  return normalize(t);
}

PureState3 sample_haar(std::uint64_t seed) {
  Rng rng(seed);
  std::array<cplx, 8> a;
  for (auto& x : a) x = rng.cnormal();
  return normalize(a);
}

StratumDraw draw_stratum(const Stratum& st, std::uint64_t seed, bool scramble) {
  Rng rng(seed);
  StratumDraw d;
  double total = 0.0;
  std::array<double, 5> e{};
  for (int j = 0; j < 5; ++j) {
    if (!st.nonzero[j]) continue;
    e[j] = -std::log(1.0 - rng.uniform());
    total += e[j];
  }
  for (int j = 0; j < 5; ++j) d.lambda[j] = std::sqrt(e[j] / total);
  if (st.nonzero[1]) d.phi = kPi * rng.uniform();
  std::array<cplx, 8> a{};
  a[idx(0, 0, 0)] = d.lambda[0];
  a[idx(1, 0, 0)] = std::polar(d.lambda[1], d.phi);
  a[idx(1, 0, 1)] = d.lambda[2];
  a[idx(1, 1, 0)] = d.lambda[3];
  a[idx(1, 1, 1)] = d.lambda[4];
  PureState3 s = normalize(a);
  d.state = scramble ? haar_scramble(s, rng) : s;
  return d;
}

PureState3 sample_stratum(const Stratum& st, std::uint64_t seed, bool scramble) {
  return draw_stratum(st, seed, scramble).state;
}

PureState3 sample_type(Family f, std::uint64_t seed) {
  const auto options = strata_of(f);
  const std::uint64_t pick = splitmix64(seed ^ 0xA5A5A5A5ULL) % options.size();
  return sample_stratum(options[pick], seed);
}

}  // namespace triqent
