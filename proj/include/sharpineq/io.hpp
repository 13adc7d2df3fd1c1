#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sharpineq/extremal.hpp"
#include "sharpineq/scans.hpp"
#include "sharpineq/spectral.hpp"
#include "sharpineq/verifier.hpp"

namespace sharp {

inline constexpr int kSchemaVersion = 1;

// Writes to a temporary sibling and renames over the target.
void write_atomic(const std::string& path, const std::string& content);
std::string read_text(const std::string& path);

// One nonnegative real per line; blank lines and '#' comments skipped.
SequenceData parse_sequence(std::istream& in);
SequenceData read_sequence(const std::string& path);

// Potentials: JSON or CSV chosen by file extension.
MatrixPotential potential_from_json(const nlohmann::json& j);
nlohmann::json potential_to_json(const MatrixPotential& v);
MatrixPotential potential_from_csv(std::istream& in);
std::string potential_to_csv(const MatrixPotential& v);
MatrixPotential read_potential(const std::string& path);

// Report records. Every record has a "kind" key.
nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const ScanReport& r);
nlohmann::json to_json(const LTBoundReport& r);
nlohmann::json to_json(const VCurvePoint& p, const GreenFamily& family);
nlohmann::json to_json(const EnsembleSummary& s);
nlohmann::json to_json(const SpectrumResult& s);

// {"schema_version", "command", "records"}
nlohmann::json make_document(const std::string& command, nlohmann::json records);

// Plain CSV from a header and numeric rows; doubles printed round-trip exact.
std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<double>>& rows);
std::string format_double(double x);

}  // namespace sharp
