#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "io.hpp"
#include "triqent/chains.hpp"
#include "triqent/taxonomy.hpp"

namespace triqent::cli {

// Entropies in nats unless bits.
Table analyze_table(const PureState3& s, double tol, const std::string& id, bool bits);
Table classify_table(const PureState3& s, double tol);
Table cd_table(const PureState3& s, double tol);
Table bounds_table(int points, double crossover);

// Scatter data: `count` draws per family, seeds derived from (seed, family, i).
Table sample_table(const std::vector<Family>& families, int count, std::uint64_t seed, int threads);

Table sweep_table(Model m, const std::vector<double>& grid, const SweepOptions& opt);

}  // namespace triqent::cli
