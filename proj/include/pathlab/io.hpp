#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "pathlab/chains.hpp"
#include "pathlab/homology.hpp"
#include "pathlab/progress.hpp"
#include "pathlab/track.hpp"

namespace pathlab {

using Json = nlohmann::ordered_json;

/// Parses text; throws MalformedInput on syntax errors.
Json parse_json(std::string_view text);
std::string read_file(const std::string& path);

/// Integer or "p/q" string.
Rational rational_from_json(const Json& j);
Json rational_to_json(const Rational& r);

/// Face lists are 1-based by position. The result is not validated; call
/// `require_valid` or `validate` as needed.
PrecubicalSet model_from_json(const Json& j);
Json model_to_json(const PrecubicalSet& set);

Json violations_to_json(const std::vector<Violation>& violations);

PathPresentation path_from_json(const PrecubicalSet& set, const Json& j);
Json path_to_json(const PrecubicalSet& set, const PathPresentation& pres);

/// A, B are 1-based in JSON.
Track track_from_json(const PrecubicalSet& set, const Json& j);
Json track_to_json(const PrecubicalSet& set, const Track& track);

Json actions_to_json(const ActionTable& table);
Json progress_to_json(const ProgressFunction& f);

Json chain_to_json(const PrecubicalSet& set, const CubeChain& chain);
Json category_to_json(const PrecubicalSet& set, const Category& cat);

Json homology_to_json(const HomologyReport& report);

Json rationals_to_json(const std::vector<Rational>& values);

/// FNV-1a 64-bit digest of `data`, as 16 lowercase hex digits.
std::string fnv1a64_hex(std::string_view data);

}  // namespace pathlab
