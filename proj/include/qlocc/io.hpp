// io.hpp
// The JSON state format and the JSON check-report format. Writing goes
// through a deterministic serializer (fixed key order, reals at 17
// significant digits) so identical inputs give byte-identical files.
//
// State format: {"kind": "state"|"density", "dims": [...], "party": ["A",...],
// "labels": [...], "data": [[re, im], ...]} with N pairs for states and N^2
// row-major pairs for densities.

#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "qlocc/report.hpp"
#include "qlocc/tensor.hpp"

namespace qlocc::io {

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// %.17g rendering; round-trips any finite double.
std::string format_real(double v);

std::string to_json(const StateVector& state);
std::string to_json(const DensityMatrix& rho);
std::string to_json(const Report& report);

using StateFile = std::variant<StateVector, DensityMatrix>;

StateFile read_state_json(const std::string& text);
StateFile read_state_file(const std::string& path);

void write_state_file(const std::string& path, const StateVector& state);
void write_state_file(const std::string& path, const DensityMatrix& rho);
void write_text_file(const std::string& path, const std::string& contents);
std::string read_text_file(const std::string& path);

}  // namespace qlocc::io
