#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "triqent/qstate.hpp"

namespace triqent::cli {

using Cell = std::variant<std::monostate, double, long long, bool, std::string>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

enum class Format { Csv, Json, Text };
Format parse_format(const std::string& s);

// %.17g, '.' decimal regardless of locale.
std::string fmt_double(double x);
std::string cell_text(const Cell& c);

std::string render(const Table& t, Format f);
std::string render_csv(const Table& t);
nlohmann::json to_json(const Table& t);

// FNV-1a, used for golden checks of generated datasets.
std::uint64_t fnv1a64(const std::string& s);
std::string hex64(std::uint64_t h);

// A name (ghz, w, wt1, wt2, zero) or 16 whitespace-separated reals.
PureState3 parse_state_tokens(const std::vector<std::string>& tokens);
PureState3 state_from_json(const nlohmann::json& j);
PureState3 read_state_file(const std::string& path);
nlohmann::json state_to_json(const PureState3& s);

void write_output(const std::string& text, const std::string& path);

// TRIQENT_SEED if set, else fallback.
std::uint64_t default_seed(std::uint64_t fallback = 0);

}  // namespace triqent::cli
