#include "io.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <locale>
#include <sstream>

namespace triqent::cli {

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  if (s == "text") return Format::Text;
  throw Error(ErrorCode::BadInput, "unknown format '" + s + "'");
}

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string cell_text(const Cell& c) {
  struct V {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(double d) const { return fmt_double(d); }
    std::string operator()(long long i) const { return std::to_string(i); }
    std::string operator()(bool b) const { return b ? "1" : "0"; }
    std::string operator()(const std::string& s) const { return s; }
  };
  return std::visit(V{}, c);
}

std::string render_csv(const Table& t) {
  std::string out;
  for (std::size_t i = 0; i < t.header.size(); ++i) out += (i ? "," : "") + t.header[i];
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += cell_text(row[i]);
    }
    out += '\n';
  }
  return out;
}

nlohmann::json to_json(const Table& t) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json o = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      const auto& c = row[i];
      nlohmann::json v;
      if (std::holds_alternative<double>(c)) v = std::get<double>(c);
      else if (std::holds_alternative<long long>(c)) v = std::get<long long>(c);
      else if (std::holds_alternative<bool>(c)) v = std::get<bool>(c);
      else if (std::holds_alternative<std::string>(c)) v = std::get<std::string>(c);
      o[t.header[i]] = v;
    }
    arr.push_back(o);
  }
  return arr;
}

std::string render(const Table& t, Format f) {
  switch (f) {
    case Format::Csv: return render_csv(t);
    case Format::Json: {
      auto j = to_json(t);
      return (t.rows.size() == 1 ? j[0].dump(2) : j.dump(2)) + "\n";
    }
    case Format::Text: {
      std::string out;
      if (t.rows.size() == 1) {
        std::size_t w = 0;
        for (const auto& h : t.header) w = std::max(w, h.size());
        for (std::size_t i = 0; i < t.header.size(); ++i)
          out += t.header[i] + std::string(w + 2 - t.header[i].size(), ' ') +
                 cell_text(t.rows[0][i]) + "\n";
        return out;
      }
      for (std::size_t i = 0; i < t.header.size(); ++i) out += (i ? "\t" : "") + t.header[i];
      out += '\n';
      for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "\t" : "") + cell_text(row[i]);
        out += '\n';
      }
      return out;
    }
  }
  return {};
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t h) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

double parse_real(const std::string& tok) {
  std::istringstream is(tok);
  is.imbue(std::locale::classic());
  double x;
  if (!(is >> x) || !is.eof()) throw Error(ErrorCode::BadInput, "not a real number: '" + tok + "'");
  return x;
}

}  // namespace

PureState3 parse_state_tokens(const std::vector<std::string>& tokens) {
  std::vector<std::string> parts;
  for (const auto& t : tokens) {
    std::istringstream is(t);
    std::string p;
    while (is >> p) parts.push_back(p);
  }
  if (parts.size() == 1) return named_state(parts[0]);
  if (parts.size() != 16)
    throw Error(ErrorCode::BadInput,
                "state needs a name or 16 reals, got " + std::to_string(parts.size()) + " tokens");
  std::array<cplx, 8> a;
  for (int i = 0; i < 8; ++i) a[i] = cplx(parse_real(parts[2 * i]), parse_real(parts[2 * i + 1]));
  return normalize(a);
}

PureState3 state_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 8)
    throw Error(ErrorCode::BadInput, "state JSON must be an array of 8 [re, im] pairs");
  std::array<cplx, 8> a;
  for (int i = 0; i < 8; ++i) {
    const auto& p = j[i];
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
      throw Error(ErrorCode::BadInput, "state JSON entry is not an [re, im] pair");
    a[i] = cplx(p[0].get<double>(), p[1].get<double>());
  }
  return normalize(a);
}

PureState3 read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadInput, "cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::BadInput, std::string("bad JSON: ") + e.what());
  }
  return state_from_json(j);
}

nlohmann::json state_to_json(const PureState3& s) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& a : s.amp) j.push_back({a.real(), a.imag()});
  return j;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::BadInput, "cannot write " + path);
  out << text;
}

std::uint64_t default_seed(std::uint64_t fallback) {
  const char* env = std::getenv("TRIQENT_SEED");
  if (!env || !*env) return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0') throw Error(ErrorCode::BadInput, "TRIQENT_SEED is not an unsigned integer");
  return v;
}

}  // namespace triqent::cli
