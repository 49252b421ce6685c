#pragma once

#include <string>
#include <vector>

#include "cpsmeta/analysis.hpp"
#include "cpsmeta/diagnostics.hpp"

namespace cpsmeta {

// Report rendering. Every analysis result has two faces: a JSON document in
// interchange conventions (formatVersion "1", stable key order) and an
// aligned plain-text table for terminals. Both are deterministic.

Json coverage_to_json(const CoverageReport& report);
std::string coverage_to_text(const CoverageReport& report);

Json chain_to_json(const CausalChain& chain, const ModelStore& store);
std::string chain_to_text(const CausalChain& chain, const ModelStore& store);

Json slice_to_json(const LoopSlice& slice, const ModelStore& store);
std::string slice_to_text(const LoopSlice& slice, const ModelStore& store);

Json exposure_to_json(const ExposureMap& map);
std::string exposure_to_text(const ExposureMap& map);

Json tradespace_to_json(const std::vector<TradespaceRow>& rows);
std::string tradespace_to_text(const std::vector<TradespaceRow>& rows);

Json diagnostics_to_json(const std::vector<Diagnostic>& diagnostics);
std::string diagnostics_to_text(const std::vector<Diagnostic>& diagnostics);

// Shared helper: renders rows as a text table with a header row, columns
// padded to their widest cell, and two spaces between columns.
std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows);

}  // namespace cpsmeta
