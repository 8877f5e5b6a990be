#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "triqent/core.hpp"
#include "triqent/entanglement.hpp"
#include "triqent/qstate.hpp"

namespace triqent {

enum class Model { TFIM, XX, XXX, XZX };

const char* to_string(Model m);
Model parse_model(const std::string& s);

// paulis[j] acts on site j; site 0 is qubit A.
struct PauliTerm {
  bool delta_role = false;  // coefficient is delta instead of 1
  double sign = 1.0;
  std::string paulis;       // e.g. "XXI"
};

struct ChainModel {
  Model name = Model::TFIM;
  std::vector<PauliTerm> terms;
  double delta = 0.0;
};

ChainModel make_model(Model m, double delta);

Mat8 pauli_string(const std::string& paulis);
Mat8 build_hamiltonian(const ChainModel& model);

// xi * Z on site 0.
Mat8 perturbation_z0(double xi);

struct Eigensystem {
  Eigen::Matrix<double, 8, 1> values;
  Mat8 vectors;  // columns
  int sweeps = 0;
};

// Cyclic complex Jacobi, ascending energies, largest component of each
// vector real positive.
Eigensystem eigensystem(const Mat8& h, int max_sweeps = 100);

struct Level {
  double energy = 0.0;
  int multiplicity = 1;
};

int num_levels(Model m);
std::vector<Level> closed_form_spectrum(Model m, double delta);

// Distinct energies with summed multiplicities, ascending, levels closer
// than tol merged.
std::vector<Level> merge_levels(std::vector<Level> levels, double tol = 1e-9);

// Indices of the other levels whose energy is within tol of level n.
std::vector<int> coincident_levels(Model m, int n, double delta, double tol = 1e-9);

// Coefficients in the order the level's superposition is written:
// (alpha, beta) or (alpha, beta, gamma, delta).
struct SuperpositionParams {
  std::vector<cplx> c;
};

SuperpositionParams params_ab(cplx alpha, double beta);

// Kets multiplying c[0], c[1], ... for the level.
std::vector<Vec8> level_basis(Model m, int n, double delta);

PureState3 closed_form_eigenstate(Model m, int n, double delta,
                                  const std::optional<SuperpositionParams>& params = std::nullopt,
                                  bool allow_crossing = false);

double closed_form_tangle(Model m, int n, double delta,
                          const std::optional<SuperpositionParams>& params = std::nullopt,
                          bool allow_crossing = false);

// 48 f0 / g0^2 exactly as printed for the XZX n = 1 level.
double xzx_tau1_printed(double delta);

// f_n, g_n of the non-degenerate levels.
struct FG {
  double f = 0.0;
  double g = 0.0;
};
FG chain_fg(Model m, int n, double delta);

// Non-degenerate Bloch norm r (times (1,1,1)) for TFIM levels 0, 1, 2, 5.
double tfim_bloch_closed(int n, double delta);

// TFIM at delta = 1: gamma |2,1> + alpha W~1 + beta W~2.
PureState3 tfim_crossing_state(cplx gamma, cplx alpha, cplx beta);
double tfim_crossing_tangle(cplx gamma, cplx alpha, cplx beta);

struct SymmetryLabels {
  std::optional<int> k;
  std::optional<int> p;           // X on every site
  std::optional<int> m_z;
  std::optional<int> reflection;  // swap of sites 1 and 2
};

SymmetryLabels symmetry_labels(const PureState3& s, double tol = 1e-9);

BlochTriple degenerate_bloch_family(Model m, int n, const SuperpositionParams& params);

enum class ParamsPolicy { Grid, MonteCarlo };

struct SweepOptions {
  ParamsPolicy policy = ParamsPolicy::Grid;
  int mc_samples = 40;
  std::uint64_t seed = 0;
  double perturb = 0.0;
  int threads = 1;
  double gap_tol = 1e-9;
};

struct SweepRecord {
  double delta = 0.0;
  int n = 0;
  int sample = 0;
  double energy_numeric = 0.0;
  double energy_closed = 0.0;
  bool energy_mismatch = false;
  int multiplicity = 1;
  SymmetryLabels labels;
  double tau_numeric = 0.0;
  std::optional<double> tau_closed;
  BlochTriple r;
  bool crossing = false;
};

// The 40-point (|alpha|, arg alpha) grid used for two-fold levels.
std::vector<SuperpositionParams> degenerate_grid();

std::vector<SweepRecord> sweep_point(Model m, double delta, std::size_t grid_index,
                                     const SweepOptions& opt);
std::vector<SweepRecord> sweep(Model m, const std::vector<double>& grid, const SweepOptions& opt);

std::vector<double> linspace(double a, double b, int points);

}  // namespace triqent
