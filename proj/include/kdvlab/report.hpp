#pragma once

// JSON and CSV serialization of the library's reports. Floats in CSV use
// %.12e so identical inputs give byte-identical files.

#include <json.hpp>
#include <ostream>
#include <string>

#include "kdvlab/catalog.hpp"
#include "kdvlab/evolve.hpp"
#include "kdvlab/lax.hpp"
#include "kdvlab/residual.hpp"
#include "kdvlab/transforms.hpp"

namespace kdvlab {

std::string format_real(double x);

nlohmann::json to_json(const SolutionSpec& spec);
nlohmann::json to_json(const ResolvedParams& params);
nlohmann::json to_json(const ResidualReport& report);
nlohmann::json to_json(const SymmetryClass& symmetry);
nlohmann::json to_json(const EigenReport& report);
nlohmann::json to_json(const IsospectralReport& report);
nlohmann::json to_json(const EvolutionResult& result, const EvolutionConfig& cfg);

/// Columns t, x, re_u, im_u, intensity for every snapshot.
void write_snapshots_csv(std::ostream& out, const EvolutionResult& result);

}  // namespace kdvlab
