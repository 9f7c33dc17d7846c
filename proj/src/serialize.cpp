#include "cchain/serialize.hpp"

#include <ctime>
#include <limits>

#include "cchain/version.hpp"

namespace cchain {
namespace {

using nlohmann::json;

json count_json(const Count& c) {
  if (c >= 0 && c <= std::numeric_limits<std::uint64_t>::max()) return c.convert_to<std::uint64_t>();
  return c.str();
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

json to_json(const GammaBreakdown& g) {
  return {{"n", g.n},
          {"terms",
           {{"official", count_json(g.term_official)},
            {"nonofficial_nofree", count_json(g.term_nonofficial_nofree)},
            {"nonofficial_free", count_json(g.term_nonofficial_free)}}},
          {"total", count_json(g.total)}};
}

json to_json(const DeltaBreakdown& d) {
  json terms = json::array();
  for (const auto& t : d.terms) {
    terms.push_back({{"K", t.K}, {"q", t.q}, {"bounds", t.bounds}, {"count", count_json(t.count)}});
  }
  return {{"n", d.n}, {"g", d.g}, {"terms", terms}, {"total", count_json(d.total)}};
}

json to_json(const ShapeCensusReport& r) {
  return {{"n", r.n},
          {"counts", {{"official", r.official}, {"non_official", r.non_official}, {"unsatisfying", r.unsatisfying}}},
          {"total", r.total()}};
}

json to_json(const CensusReport& r) {
  return {{"schema_version", kCacheSchemaVersion},
          {"n", r.n},
          {"predicate", to_token(r.predicate)},
          {"counts",
           {{"official", r.counts.official},
            {"non_official", r.counts.non_official},
            {"incidental", r.counts.incidental},
            {"unresolved", r.counts.unresolved},
            {"descended", r.counts.descended}}},
          {"evens", r.evens},
          {"t_exclusive", r.t(TAccounting::Exclusive)},
          {"t_net", r.t(TAccounting::Net)},
          {"partition_count", r.partition_count},
          {"elapsed_seconds", r.elapsed.count()},
          {"tool_version", std::string(kToolVersion)},
          {"timestamp", utc_timestamp()}};
}

json to_json(const GenerativeReport& r) {
  return {{"n", r.n},
          {"g_count", r.g_count},
          {"proper_in_range", r.proper_in_range},
          {"proper_unsatisfying", r.proper_unsatisfying},
          {"delta_formula", count_json(r.delta_formula)},
          {"per_interval_k", r.per_interval_k}};
}

json to_json(const CalibrationReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    json j{{"n", row.n}, {"reference_consistent", row.reference_consistent}};
    j["t_reference"] = row.t_column ? json(*row.t_column) : json(nullptr);
    j["t_from_gamma_column"] = row.t_from_gamma_column ? json(*row.t_from_gamma_column) : json(nullptr);
    rows.push_back(j);
  }
  json variants = json::array();
  for (const auto& v : r.variants) {
    variants.push_back({{"predicate", to_token(v.predicate)},
                        {"accounting", std::string(to_string(v.accounting))},
                        {"t", v.t_values},
                        {"matches", v.matches}});
  }
  json out{{"rows", rows}, {"variants", variants}};
  if (r.best) {
    out["best"] = {{"predicate", to_token(r.variants[*r.best].predicate)},
                   {"accounting", std::string(to_string(r.variants[*r.best].accounting))},
                   {"matches_all", r.best_matches_all()}};
  }
  return out;
}

CensusReport census_from_json(const json& j) {
  CensusReport r;
  r.n = j.at("n").get<int>();
  r.predicate = parse_predicate(j.at("predicate").get<std::string>());
  const auto& c = j.at("counts");
  r.counts.official = c.at("official").get<std::uint64_t>();
  r.counts.non_official = c.at("non_official").get<std::uint64_t>();
  r.counts.incidental = c.at("incidental").get<std::uint64_t>();
  r.counts.unresolved = c.at("unresolved").get<std::uint64_t>();
  r.counts.descended = c.at("descended").get<std::uint64_t>();
  r.evens = j.at("evens").get<std::uint64_t>();
  r.partition_count = j.at("partition_count").get<int>();
  r.elapsed = std::chrono::duration<double>(j.at("elapsed_seconds").get<double>());
  return r;
}

}  // namespace cchain
