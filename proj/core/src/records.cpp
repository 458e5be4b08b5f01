#include "legknot/records.hpp"

#include <fstream>
#include <istream>

#include <json.hpp>

#include "legknot/error.hpp"

namespace legknot {

namespace {

using nlohmann::json;

std::optional<RecordedValue> recorded_value(const json& block, const char* key) {
  if (!block.contains(key)) return std::nullopt;
  const json& v = block.at(key);
  if (!v.contains("citation") || !v.at("citation").is_string() || v.at("citation").get<std::string>().empty())
    throw Error(Errc::SyntaxError, std::string("recorded value '") + key + "' has no citation");
  return RecordedValue{v.at("value").get<int>(), v.at("citation").get<std::string>()};
}

std::optional<RecordedCableBound> recorded_cable(const json& block, const char* key) {
  if (!block.contains(key)) return std::nullopt;
  const json& v = block.at(key);
  if (!v.contains("citation") || !v.at("citation").is_string() || v.at("citation").get<std::string>().empty())
    throw Error(Errc::SyntaxError, std::string("recorded value '") + key + "' has no citation");
  return RecordedCableBound{v.at("framing").get<int>(), v.at("upper").get<int>(),
                            v.at("citation").get<std::string>()};
}

std::string normalize(std::string_view name) {
  std::string out;
  for (std::size_t i = 0; i < name.size(); ++i) {
    if (name[i] == '_' && i > 0 && (name[i - 1] == 'n' || name[i - 1] == 'a')) continue;
    out.push_back(name[i]);
  }
  return out;
}

}  // namespace

LinkDiagram KnotRecord::diagram() const {
  if (pd) return parse_pd(*pd);
  if (braid) return braid_closure(parse_braid(*braid));
  if (grid) return grid_to_link_diagram(*grid);
  throw Error(Errc::SyntaxError, "record " + name + " has no diagram");
}

std::optional<BraidWord> KnotRecord::braid_word() const {
  if (!braid) return std::nullopt;
  return parse_braid(*braid);
}

KnotRecord parse_record(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    throw Error(Errc::SyntaxError, std::string("record JSON: ") + e.what());
  }
  KnotRecord r;
  try {
    r.name = j.at("name").get<std::string>();
    r.chirality = j.value("chirality", "");
    if (j.contains("crossings")) r.crossings = j.at("crossings").get<int>();
    if (j.contains("alternating")) r.alternating = j.at("alternating").get<bool>();
    if (j.contains("grid")) {
      const auto& g = j.at("grid");
      r.grid = make_grid(g.at("x").get<std::vector<int>>(), g.at("o").get<std::vector<int>>());
    }
    if (j.contains("pd")) r.pd = j.at("pd").get<std::string>();
    if (j.contains("braid")) r.braid = j.at("braid").get<std::string>();
    if (j.contains("recorded")) {
      const json& rec = j.at("recorded");
      r.alpha = recorded_value(rec, "alpha");
      r.tb = recorded_value(rec, "tb");
      r.tb_mirror = recorded_value(rec, "tb_mirror");
      r.sl = recorded_value(rec, "sl");
      r.sl_mirror = recorded_value(rec, "sl_mirror");
      r.braid_index = recorded_value(rec, "braid_index");
      r.cable_tb = recorded_cable(rec, "cable_tb");
      r.cable_tb_mirror = recorded_cable(rec, "cable_tb_mirror");
      r.cable_sl = recorded_cable(rec, "cable_sl");
      r.cable_sl_mirror = recorded_cable(rec, "cable_sl_mirror");
    }
  } catch (const json::exception& e) {
    throw Error(Errc::SyntaxError, "record " + r.name + ": " + e.what());
  }
  if (!r.grid && !r.pd && !r.braid) throw Error(Errc::SyntaxError, "record " + r.name + " has no grid, PD or braid");
  // Parse eagerly so malformed text is reported at load time.
  if (r.pd) parse_pd(*r.pd);
  if (r.braid) parse_braid(*r.braid);
  return r;
}

std::vector<KnotRecord> parse_records(std::istream& in) {
  std::vector<KnotRecord> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_record(line));
    } catch (const Error& e) {
      if (e.code() != Errc::SyntaxError) throw;
      throw Error(Errc::SyntaxError, "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::vector<KnotRecord> load_records(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::SyntaxError, "cannot open record file " + path.string());
  return parse_records(in);
}

void check_fingerprint(const KnotRecord& r, const SkeinOptions& opts) {
  struct Rep {
    const char* what;
    LaurentPoly2 f;
  };
  std::vector<Rep> reps;
  if (r.grid) reps.push_back({"grid", kauffman_F(grid_to_link_diagram(*r.grid), opts)});
  if (r.pd) reps.push_back({"PD", kauffman_F(parse_pd(*r.pd), opts)});
  if (r.braid) reps.push_back({"braid", kauffman_F(braid_closure(parse_braid(*r.braid)), opts)});
  for (std::size_t i = 1; i < reps.size(); ++i)
    if (!(reps[i].f == reps[0].f))
      throw Error(Errc::FingerprintMismatch, "record " + r.name + ": " + reps[0].what + " and " + reps[i].what +
                                                 " have different Kauffman polynomials");
}

const KnotRecord& find_record(const std::vector<KnotRecord>& records, std::string_view name) {
  const std::string key = normalize(name);
  for (const auto& r : records)
    if (normalize(r.name) == key) return r;
  throw Error(Errc::UnknownKnot, "no record named " + std::string(name));
}

}  // namespace legknot
