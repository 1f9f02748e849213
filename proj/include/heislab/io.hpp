#pragma once

#include <map>
#include <string>

#include "json.hpp"

#include "heislab/edgar.hpp"
#include "heislab/field.hpp"
#include "heislab/signal.hpp"

namespace heislab {

using json = nlohmann::json;

// All writers go through a temp file + rename so partial output never lands
// at the target path. Values are little-endian IEEE doubles on disk.

/// Signal format: one JSON header line {"L":..., "N":...} then N (re, im)
/// 64-bit float pairs.
void write_signal(const std::string& path, const SampledSignal& s);
SampledSignal read_signal(const std::string& path);

/// Field format "HBF1": one JSON header line
/// {"M":..., "Nx":..., "Ny":..., "dx":..., "dy":..., "layout":"k-major"}
/// then M*Ny*Nx (re, im) pairs, k-major (k = -M/2 upward) then y then x.
void write_field(const std::string& path, const HeisenbergField& F);
HeisenbergField read_field(const std::string& path);

/// Deterministic JSON text: objects with lexicographically sorted keys and
/// every finite double printed with 17 significant digits.
std::string dump_json(const json& j, int indent = 2);

void write_report(const std::string& path, const json& report);

/// Flat key=value config text; '#' starts a comment, blank lines ignored.
std::map<std::string, std::string> parse_config(const std::string& text);
std::map<std::string, std::string> read_config_file(const std::string& path);
std::string config_to_string(const std::map<std::string, std::string>& cfg);

/// (y, x, Re F, Im F, |F|) rows over the grid [-R, R]^2 with step h.
void write_edgar_csv(const std::string& path, double R, double h,
                     const QuadratureRule& rule);

} // namespace heislab
