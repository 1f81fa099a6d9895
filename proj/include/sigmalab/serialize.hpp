#ifndef SIGMALAB_SERIALIZE_HPP
#define SIGMALAB_SERIALIZE_HPP

#include "sigmalab/algebra_seq.hpp"
#include "sigmalab/errors.hpp"
#include "sigmalab/gallery.hpp"
#include "sigmalab/sequence_lab.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace sigmalab {

// Reports preserve insertion order so identical inputs produce identical
// bytes. Exact values are always strings ("p/q", "k/2^j"); nothing numeric
// is emitted through floating point.
using Json = nlohmann::ordered_json;

// Scenario files or their fields failed to parse. The CLI maps this (and
// only this) to the usage/parse exit code.
class ScenarioParseError : public Error {
public:
  explicit ScenarioParseError(const std::string& msg) : Error(msg) {}
};

Json json_of(const Rat& r);
Json json_of(const Dyadic& d);
Json json_of(const DSet& s);
Json json_of(const Partition& p);
Json json_of(const Step& f);
Json json_of(const CoverWitness& w);
Json json_of(const CoverVerdict& v);
Json json_of(const ConvergenceReport& r);
Json json_of(const LimitAlgebraReport& r);
Json json_of(const CNElement& e);
Json json_of(const TailSetReport& r);
Json json_of(const CombineResult& r);

Rat rat_from_json(const Json& j);
Dyadic dyadic_from_json(const Json& j);
DSet dset_from_json(const Json& j);
Partition partition_from_json(const Json& j);
Step step_from_json(const Json& j);

ScenarioSpec scenario_from_json(const Json& j);

// Reads and parses a scenario file; every failure surfaces as
// ScenarioParseError.
ScenarioSpec load_scenario(const std::filesystem::path& file);

} // namespace sigmalab

#endif
