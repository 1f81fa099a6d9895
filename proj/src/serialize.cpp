#include "sigmalab/serialize.hpp"

#include <fstream>

namespace sigmalab {

Json json_of(const Rat& r) { return rat_to_string(r); }

Json json_of(const Dyadic& d) { return d.to_string(); }

Json json_of(const DSet& s) {
  Json out = Json::array();
  for (const auto& iv : s.intervals()) {
    out.push_back(Json::array({iv.lo.to_string(), iv.hi.to_string()}));
  }
  return out;
}

Json json_of(const Partition& p) {
  Json out = Json::array();
  for (const auto& atom : p.atoms()) out.push_back(json_of(atom));
  return out;
}

Json json_of(const Step& f) {
  Json out;
  out["carrier"] = json_of(f.carrier);
  Json values = Json::array();
  for (const auto& v : f.values) values.push_back(json_of(v));
  out["values"] = std::move(values);
  return out;
}

namespace {

Json rat_array(const std::vector<Rat>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(json_of(v));
  return out;
}

} // namespace

Json json_of(const CoverWitness& w) {
  Json out;
  out["r"] = json_of(w.r);
  Json sets = Json::array();
  for (const auto& s : w.sets) sets.push_back(json_of(s));
  out["sets"] = std::move(sets);
  out["seminorms"] = rat_array(w.seminorms);
  out["tail_symdiff"] = rat_array(w.tail_symdiff);
  return out;
}

Json json_of(const CoverVerdict& v) {
  Json out;
  out["quartile_start"] = v.quartile_start;
  out["max_tail_symdiff"] = json_of(v.max_tail_symdiff);
  out["max_seminorm"] = json_of(v.max_seminorm);
  out["cond_i_pass"] = v.cond_i_pass;
  out["cond_ii_pass"] = v.cond_ii_pass;
  out["pass"] = v.pass;
  return out;
}

Json json_of(const ConvergenceReport& r) {
  Json out;
  out["horizon"] = r.horizon;
  out["eps_grid"] = rat_array(r.eps_grid);
  Json distances;
  distances["l1"] = rat_array(r.l1);
  distances["l2sq"] = rat_array(r.l2sq);
  distances["sup"] = rat_array(r.sup);
  out["distances"] = std::move(distances);
  Json exceedance = Json::array();
  for (std::size_t n = 1; n <= r.horizon; ++n) {
    Json row;
    row["window_start"] = n;
    row["measures"] = rat_array(r.exceedance[n - 1]);
    exceedance.push_back(std::move(row));
  }
  out["exceedance"] = std::move(exceedance);
  Json snapshots = Json::array();
  for (const auto& [n, step] : r.tail_sup) {
    Json row;
    row["window_start"] = n;
    row["tail_sup"] = json_of(step);
    snapshots.push_back(std::move(row));
  }
  out["tail_sup_snapshots"] = std::move(snapshots);
  out["tail_window_start"] = r.tail_window_start;
  out["tail_limsup"] = json_of(r.tail_limsup);
  out["tail_liminf"] = json_of(r.tail_liminf);
  Json verdicts;
  verdicts["l1_trend_pass"] = r.l1_trend_pass;
  Json ae = Json::array();
  for (const bool b : r.ae_pass) ae.push_back(b);
  verdicts["ae_pass"] = std::move(ae);
  out["verdicts"] = std::move(verdicts);
  return out;
}

Json json_of(const LimitAlgebraReport& r) {
  Json out;
  out["liminf"] = json_of(r.liminf);
  out["limsup"] = json_of(r.limsup);
  Json meets = Json::array();
  for (const auto& p : r.tail_meets) meets.push_back(json_of(p));
  Json joins = Json::array();
  for (const auto& p : r.tail_joins) joins.push_back(json_of(p));
  out["tail_meets"] = std::move(meets);
  out["tail_joins"] = std::move(joins);
  return out;
}

Json json_of(const CNElement& e) {
  Json out;
  out["window_start"] = e.window_start;
  out["window_end"] = e.window_end;
  Json parts = Json::array();
  for (const auto& [k, set] : e.parts) {
    Json row;
    row["index"] = k;
    row["set"] = json_of(set);
    parts.push_back(std::move(row));
  }
  out["parts"] = std::move(parts);
  out["h"] = json_of(e.h);
  out["l1"] = json_of(e.l1);
  out["l2sq"] = json_of(e.l2sq);
  return out;
}

Json json_of(const TailSetReport& r) {
  Json out;
  out["inner"] = json_of(r.inner);
  out["outer"] = json_of(r.outer);
  out["profile"] = rat_array(r.profile);
  out["d_inner"] = json_of(r.d_inner);
  out["d_outer"] = json_of(r.d_outer);
  out["profile_decayed"] = r.profile_decayed;
  out["sets_agree"] = r.sets_agree;
  out["consistent_at_horizon"] = r.consistent_at_horizon;
  return out;
}

Json json_of(const CombineResult& r) {
  Json out;
  out["combined"] = json_of(r.combined);
  out["bound_slack"] = rat_array(r.bound_slack);
  out["subadditive_ok"] = r.subadditive_ok;
  return out;
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw ValidationError("expected a rational as \"p/q\" string or integer, got: " + j.dump());
}

Dyadic dyadic_from_json(const Json& j) {
  if (!j.is_string()) throw ValidationError("expected a dyadic endpoint string, got: " + j.dump());
  return Dyadic::parse(j.get<std::string>());
}

DSet dset_from_json(const Json& j) {
  if (!j.is_array()) throw ValidationError("expected a set as an array of endpoint pairs");
  std::vector<Interval> intervals;
  intervals.reserve(j.size());
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) {
      throw ValidationError("set interval must be a [lo, hi] pair, got: " + pair.dump());
    }
    intervals.push_back({dyadic_from_json(pair[0]), dyadic_from_json(pair[1])});
  }
  return DSet::from_intervals(intervals);
}

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw ValidationError("expected a partition as an array of sets");
  std::vector<DSet> atoms;
  atoms.reserve(j.size());
  for (const auto& s : j) atoms.push_back(dset_from_json(s));
  return Partition(std::move(atoms));
}

Step step_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("carrier") || !j.contains("values")) {
    throw ValidationError("expected a step as {\"carrier\": ..., \"values\": ...}");
  }
  Partition carrier = partition_from_json(j.at("carrier"));
  std::vector<Rat> values;
  for (const auto& v : j.at("values")) values.push_back(rat_from_json(v));
  return Step(std::move(carrier), std::move(values));
}

namespace {

FunctionSpec function_spec_from_json(const Json& j) {
  FunctionSpec spec;
  if (j.is_object() && j.contains("indicator")) {
    spec.indicator_set = dset_from_json(j.at("indicator"));
  } else if (j.is_object() && j.contains("step")) {
    spec.explicit_step = step_from_json(j.at("step"));
  } else {
    throw ValidationError("function must be {\"indicator\": ...} or {\"step\": ...}");
  }
  return spec;
}

} // namespace

ScenarioSpec scenario_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("scenario must be a JSON object");
  ScenarioSpec spec;

  const Json& seq = j.at("sequence");
  if (seq.contains("builtin")) {
    spec.sequence.builtin = seq.at("builtin").get<std::string>();
    if (seq.contains("params")) {
      for (const auto& [key, value] : seq.at("params").items()) {
        spec.sequence.params[key] = rat_from_json(value);
      }
    }
  } else if (seq.contains("explicit")) {
    for (const auto& list : seq.at("explicit")) {
      std::vector<DSet> generators;
      for (const auto& s : list) generators.push_back(dset_from_json(s));
      spec.sequence.generator_lists.push_back(std::move(generators));
    }
    spec.sequence.cycle = seq.value("cycle", false);
  } else {
    throw ValidationError("sequence must carry \"builtin\" or \"explicit\"");
  }

  spec.horizon = j.at("horizon").get<std::size_t>();
  spec.function = function_spec_from_json(j.at("function"));
  if (j.contains("epsilons")) {
    for (const auto& e : j.at("epsilons")) spec.epsilons.push_back(rat_from_json(e));
  }
  if (j.contains("analyses")) {
    for (const auto& a : j.at("analyses")) spec.analyses.push_back(a.get<std::string>());
  }
  if (j.contains("caps")) {
    const Json& caps = j.at("caps");
    spec.caps.generate_generators =
        caps.value("generate_generators", spec.caps.generate_generators);
    spec.caps.boylan_atoms = caps.value("boylan_atoms", spec.caps.boylan_atoms);
    spec.caps.sweep_pieces = caps.value("sweep_pieces", spec.caps.sweep_pieces);
  }
  if (j.contains("cover_r")) spec.cover_r = rat_from_json(j.at("cover_r"));
  if (j.contains("wperp_eps")) spec.wperp_eps = rat_from_json(j.at("wperp_eps"));
  if (j.contains("target")) spec.target = function_spec_from_json(j.at("target"));
  return spec;
}

ScenarioSpec load_scenario(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ScenarioParseError("cannot open scenario file: " + file.string());
  Json parsed;
  try {
    parsed = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ScenarioParseError("scenario JSON parse failed: " + std::string(e.what()));
  }
  try {
    return scenario_from_json(parsed);
  } catch (const nlohmann::json::exception& e) {
    throw ScenarioParseError("scenario field error: " + std::string(e.what()));
  } catch (const ValidationError& e) {
    throw ScenarioParseError("scenario invalid: " + std::string(e.what()));
  }
}

} // namespace sigmalab
