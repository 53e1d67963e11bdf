#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "tlap/eigenbound.hpp"
#include "tlap/fd_lab.hpp"
#include "tlap/radial.hpp"
#include "tlap/symmetric_matrix.hpp"
#include "tlap/viscosity.hpp"

namespace tlap {

using Json = nlohmann::ordered_json;

// {"dim": N, "upper": [...]}
Json matrix_to_json(const SymmetricMatrix& m);
SymmetricMatrix matrix_from_json(const Json& j);

Json verdict_to_json(const Verdict& v, const StructureReport* structure = nullptr);
Json structure_to_json(const StructureReport& s);
Json radial_diagnostics_to_json(const RadialRun& run);
Json eigen_scan_to_json(const EigenScanReport& r);
Json certificate_to_json(const MuCertificate& c);
Json solve_metadata_to_json(const SolveResult& r, const GridSpec& grid, const SolveConfig& cfg,
                            const std::string& nonlinearity, const std::string& boundary);
Json flatness_to_json(const FlatnessStats& s);

void write_radial_csv(std::ostream& os, const RadialRun& run);
void write_field_csv(std::ostream& os, const GridField2D& field);
void write_scan_csv(std::ostream& os, const std::vector<ScanPoint>& points);
void write_witnesses_csv(std::ostream& os, const Verdict& v);

// Report text: two-space indented JSON with a trailing newline.
std::string dump(const Json& j);

}  // namespace tlap
