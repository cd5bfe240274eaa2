// JSON serialization (hand-rolled for byte determinism) and parsing
// (nlohmann::json) of the state and report formats.

#include "qlocc/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qlocc::io {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      case '\r':
        out += "\\r";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

void append_layout_fields(std::string& out, const SubsystemLayout& layout) {
  out += "\"dims\":[";
  for (std::size_t k = 0; k < layout.size(); ++k) {
    if (k != 0) out += ',';
    out += std::to_string(layout.at(k).dim);
  }
  out += "],\"party\":[";
  for (std::size_t k = 0; k < layout.size(); ++k) {
    if (k != 0) out += ',';
    out += '"';
    out += party_name(layout.at(k).party);
    out += '"';
  }
  out += "],\"labels\":[";
  for (std::size_t k = 0; k < layout.size(); ++k) {
    if (k != 0) out += ',';
    out += '"' + escape(layout.at(k).label) + '"';
  }
  out += "],";
}

void append_data(std::string& out, std::span<const cplx> values) {
  out += "\"data\":[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += ',';
    out += '[' + format_real(values[i].real()) + ',' +
           format_real(values[i].imag()) + ']';
  }
  out += ']';
}

SubsystemLayout layout_from_json(const nlohmann::json& j) {
  if (!j.contains("dims") || !j.contains("party") || !j.contains("labels")) {
    throw io_error("state file missing dims/party/labels");
  }
  const auto& dims = j.at("dims");
  const auto& party = j.at("party");
  const auto& labels = j.at("labels");
  if (!dims.is_array() || !party.is_array() || !labels.is_array() ||
      dims.size() != party.size() || dims.size() != labels.size()) {
    throw io_error("dims/party/labels must be arrays of equal length");
  }
  std::vector<Subsystem> subs;
  subs.reserve(dims.size());
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (!dims[k].is_number_integer() || !labels[k].is_string() ||
        !party[k].is_string()) {
      throw io_error("malformed subsystem entry in state file");
    }
    subs.push_back({labels[k].get<std::string>(), dims[k].get<int>(),
                    parse_party(party[k].get<std::string>())});
  }
  try {
    return SubsystemLayout(std::move(subs));
  } catch (const std::invalid_argument& e) {
    throw io_error(std::string("invalid layout: ") + e.what());
  }
}

std::vector<cplx> data_from_json(const nlohmann::json& j,
                                 std::size_t expected) {
  if (!j.contains("data") || !j.at("data").is_array()) {
    throw io_error("state file missing data array");
  }
  const auto& data = j.at("data");
  if (data.size() != expected) {
    throw io_error("data length " + std::to_string(data.size()) +
                   " does not match expected " + std::to_string(expected));
  }
  std::vector<cplx> out;
  out.reserve(expected);
  for (const auto& pair : data) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
        !pair[1].is_number()) {
      throw io_error("data entries must be [re, im] pairs");
    }
    out.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return out;
}

}  // namespace

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string to_json(const StateVector& state) {
  std::string out = "{\"kind\":\"state\",";
  append_layout_fields(out, state.layout());
  append_data(out, state.amplitudes());
  out += '}';
  return out;
}

std::string to_json(const DensityMatrix& rho) {
  std::string out = "{\"kind\":\"density\",";
  append_layout_fields(out, rho.layout());
  append_data(out, rho.entries());
  out += '}';
  return out;
}

std::string to_json(const Report& report) {
  std::string out = "{\n  \"config\": {\"suites\": [";
  for (std::size_t i = 0; i < report.config.suites.size(); ++i) {
    if (i != 0) out += ',';
    out += '"' + escape(report.config.suites[i]) + '"';
  }
  out += "], \"max_d\": " + std::to_string(report.config.max_d);
  out += ", \"seed\": " + std::to_string(report.config.seed);
  out += ", \"tolerances\": {\"construction\": " +
         format_real(report.config.tol.construction) +
         ", \"psd\": " + format_real(report.config.tol.psd) +
         ", \"spectral\": " + format_real(report.config.tol.spectral) + "}},\n";
  out += "  \"checks\": [";
  for (std::size_t i = 0; i < report.checks.size(); ++i) {
    const CheckResult& c = report.checks[i];
    out += (i == 0 ? "\n" : ",\n");
    out += "    {\"name\": \"" + escape(c.name) + "\", \"d\": " +
           std::to_string(c.d) + ", \"params\": \"" + escape(c.params) +
           "\", \"measured\": " + format_real(c.measured) +
           ", \"tolerance\": " + format_real(c.tolerance) + ", \"pass\": " +
           (c.pass ? "true" : "false") + "}";
  }
  out += "\n  ],\n";
  out += std::string("  \"all_pass\": ") +
         (report.all_pass() ? "true" : "false") + "\n}\n";
  return out;
}

StateFile read_state_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw io_error(std::string("JSON parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw io_error("state file must be an object with a \"kind\" field");
  }
  const std::string kind = j.at("kind").get<std::string>();
  SubsystemLayout layout = layout_from_json(j);
  const std::size_t n = layout.total_dim();
  try {
    if (kind == "state") {
      return StateVector(std::move(layout), data_from_json(j, n));
    }
    if (kind == "density") {
      return DensityMatrix(std::move(layout), data_from_json(j, n * n));
    }
  } catch (const std::invalid_argument& e) {
    throw io_error(std::string("invalid state file: ") + e.what());
  }
  throw io_error("kind must be \"state\" or \"density\", got \"" + kind +
                 "\"");
}

StateFile read_state_file(const std::string& path) {
  return read_state_json(read_text_file(path));
}

void write_state_file(const std::string& path, const StateVector& state) {
  write_text_file(path, to_json(state) + "\n");
}

void write_state_file(const std::string& path, const DensityMatrix& rho) {
  write_text_file(path, to_json(rho) + "\n");
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw io_error("cannot open \"" + path + "\" for writing");
  f.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!f) throw io_error("write to \"" + path + "\" failed");
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw io_error("cannot open \"" + path + "\"");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace qlocc::io
