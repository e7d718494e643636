#ifndef MINCODE_JSON_IO_HPP
#define MINCODE_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "mincode/code_core.hpp"
#include "mincode/construction.hpp"
#include "mincode/sss.hpp"

// File formats used by the CLI and golden-file tests. All writers are
// byte-deterministic for a fixed input.
namespace mincode::json_io {

using json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

json descriptor_to_json(const construction::CodeDescriptor& d);
construction::CodeDescriptor descriptor_from_json(const json& j);

// {"p":..,"h":..,["irreducible":..,]"matrix":[[row-major encodings]]}
json generator_to_json(const code_core::LinearCode& c);
code_core::LinearCode generator_from_json(const json& j);

json verdict_to_json(const code_core::MinimalityVerdict& v);

json report_to_json(const construction::VerificationReport& rep);

json predicted_to_json(const construction::PredictedParams& pp);

std::string weights_to_csv(const std::map<std::uint32_t, std::uint64_t>& dist);

json bundle_to_json(const sss::ShareBundle& b);
sss::ShareBundle bundle_from_json(const json& j);

json access_sets_to_json(const std::vector<sss::AccessSet>& sets);
std::vector<sss::AccessSet> access_sets_from_json(const json& j);

}  // namespace mincode::json_io

#endif
