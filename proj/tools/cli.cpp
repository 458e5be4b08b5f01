#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "legknot/bounds.hpp"
#include "legknot/cables.hpp"
#include "legknot/diagram.hpp"
#include "legknot/grid.hpp"
#include "legknot/khovanov.hpp"
#include "legknot/records.hpp"
#include "legknot/skein.hpp"

namespace legknot::cli {

int exit_code(Errc code) noexcept {
  switch (code) {
    case Errc::UsageError:
    case Errc::FieldUnsupported:
      return 2;
    case Errc::SyntaxError:
    case Errc::NotAPermutation:
    case Errc::MarkerCollision:
    case Errc::TooSmall:
    case Errc::ArcMultiplicity:
    case Errc::OrientationConflict:
    case Errc::LetterOutOfRange:
    case Errc::UnknownKnot:
      return 3;
    case Errc::CrossingLimitExceeded:
    case Errc::BudgetExceeded:
      return 4;
    case Errc::FingerprintMismatch:
    case Errc::InconsistentRecord:
      return 5;
    default:
      return 1;
  }
}

namespace {

using ojson = nlohmann::ordered_json;

struct Options {
  std::string grid, pd, braid, knot;
  std::string records = LEGKNOT_DEFAULT_RECORDS;
  std::optional<int> framing;
  std::string field = "Q";
  std::string mode = "scan";
  std::optional<int> limit;
  std::uint64_t seed = 1;
  bool json = false;
  std::string poly_kind;
};

[[noreturn]] void usage(const std::string& what) { throw Error(Errc::UsageError, what); }

// A flag value names a file if one exists there, otherwise it is the text itself.
std::string read_arg(const std::string& v) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(v, ec)) return v;
  std::ifstream in(v);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string s = ss.str();
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  return s;
}

GridDiagram grid_arg(const Options& o) {
  const std::string text = read_arg(o.grid);
  if (text.rfind("random:", 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(text.substr(7));
    } catch (const std::exception&) {
      throw Error(Errc::SyntaxError, "expected random:<size>, got '" + text + "'");
    }
    return random_grid(n, o.seed);
  }
  return parse_grid(text);
}

// A record from --knot, or an ad hoc one built from the representation flags.
KnotRecord record_of(const Options& o) {
  const int given = !o.knot.empty() + !o.grid.empty() + !o.pd.empty() + !o.braid.empty();
  if (given == 0) usage("one of --knot, --grid, --pd or --braid is required");
  if (!o.knot.empty()) {
    if (given > 1) usage("--knot cannot be combined with --grid, --pd or --braid");
    return find_record(load_records(o.records), o.knot);
  }
  KnotRecord r;
  r.name = "input";
  r.chirality = "as given";
  if (!o.grid.empty()) r.grid = grid_arg(o);
  if (!o.pd.empty()) {
    r.pd = read_arg(o.pd);
    (void)parse_pd(*r.pd);
  }
  if (!o.braid.empty()) {
    r.braid = read_arg(o.braid);
    (void)parse_braid(*r.braid);
  }
  return r;
}

SkeinOptions skein_opts(const Options& o) {
  SkeinOptions s;
  if (o.limit) s.crossing_limit = *o.limit;
  return s;
}

KhOptions kh_opts(const Options& o) {
  KhOptions k;
  k.field = parse_field(o.field);
  k.mode = parse_mode(o.mode);
  if (o.limit) k.crossing_limit = *o.limit;
  return k;
}

void emit(std::ostream& out, const ojson& j) { out << j.dump(2) << '\n'; }

void cmd_validate(const Options& o, std::ostream& out) {
  std::vector<KnotRecord> recs;
  const bool adhoc = !o.grid.empty() || !o.pd.empty() || !o.braid.empty();
  if (!o.knot.empty() || adhoc) {
    recs.push_back(record_of(o));
  } else {
    recs = load_records(o.records);
  }
  ojson arr = ojson::array();
  for (const auto& r : recs) {
    check_fingerprint(r, skein_opts(o));
    const LinkDiagram d = r.diagram();
    if (o.json) {
      arr.push_back({{"name", r.name}, {"ok", true}, {"components", d.components()}, {"crossings", d.crossing_count()}});
    } else {
      out << r.name << " ok components=" << d.components() << " crossings=" << d.crossing_count() << '\n';
    }
  }
  if (o.json) emit(out, arr);
}

void cmd_invariants(const Options& o, std::ostream& out) {
  const KnotRecord r = record_of(o);
  if (!r.grid) usage("invariants needs a grid (--grid, or a record that has one)");
  const GridInvariants gi = grid_invariants(*r.grid);
  if (o.json) {
    emit(out, {{"grid", grid_to_string(*r.grid)},
               {"size", r.grid->size()},
               {"components", r.grid->components()},
               {"writhe", gi.w},
               {"tb", gi.tb},
               {"sl", gi.sl},
               {"r", gi.r}});
  } else {
    out << "tb=" << gi.tb << " sl=" << gi.sl << " r=" << gi.r << '\n';
    out << "size=" << r.grid->size() << " components=" << r.grid->components() << " writhe=" << gi.w << '\n';
  }
}

void cmd_poly(const Options& o, std::ostream& out) {
  const LinkDiagram d = record_of(o).diagram();
  LaurentPoly2 p;
  if (o.poly_kind == "kauffman") {
    p = kauffman_F(d, skein_opts(o));
  } else if (o.poly_kind == "homfly") {
    p = homfly(d, skein_opts(o));
  } else {
    usage("poly takes 'kauffman' or 'homfly'");
  }
  if (o.json) {
    emit(out, {{"polynomial", o.poly_kind}, {"terms", p.to_string()}, {"pretty", p.pretty()}});
  } else {
    out << p.pretty() << '\n';
  }
}

void cmd_kh(const Options& o, std::ostream& out) {
  const LinkDiagram d = record_of(o).diagram();
  const KhTable t = khovanov(d, kh_opts(o));
  if (o.json) {
    ojson ranks = ojson::array();
    for (const auto& [ij, r] : t.ranks) ranks.push_back({ij.first, ij.second, r});
    emit(out, {{"field", std::string(field_name(t.field))},
               {"crossings", t.crossings},
               {"ranks", ranks},
               {"tb_bound", kh_tb_bound(t)},
               {"breadth", kh_breadth(t)}});
    return;
  }
  out << "field " << field_name(t.field) << '\n';
  out << "i j rank\n";
  for (const auto& [ij, r] : t.ranks) out << ij.first << ' ' << ij.second << ' ' << r << '\n';
  out << "tb_bound=" << kh_tb_bound(t) << " breadth=" << kh_breadth(t) << '\n';
}

void cmd_bounds(const Options& o, std::ostream& out, bool run_certify) {
  const KnotRecord r = record_of(o);
  const EngineOptions eo{skein_opts(o), kh_opts(o)};
  const BoundsReport rep = run_certify ? certify(r, eo) : compute_bounds(r, eo);
  if (o.json) {
    out << report_to_json(rep) << '\n';
  } else {
    out << report_to_text(rep);
  }
}

void cmd_double(const Options& o, std::ostream& out) {
  if (!o.framing) usage("double needs --framing");
  const int n = *o.framing;
  if (!o.braid.empty() && o.knot.empty() && o.grid.empty() && o.pd.empty()) {
    const BraidWord b = parse_braid(read_arg(o.braid));
    const BraidWord dbl = braid_double(b, n);
    if (o.json) {
      emit(out, {{"braid", dbl.to_string()}, {"strands", dbl.strands}, {"writhe", dbl.writhe()}, {"sl", braid_sl(dbl)}});
    } else {
      out << "braid " << dbl.to_string() << '\n';
      out << "strands=" << dbl.strands << " writhe=" << dbl.writhe() << " sl=" << braid_sl(dbl) << '\n';
    }
    return;
  }
  const LinkDiagram d = record_of(o).diagram();
  const LinkDiagram dbl = diagram_double(d, n, o.limit ? *o.limit : 200);
  if (o.json) {
    emit(out, {{"pd", dbl.to_pd_string()},
               {"crossings", dbl.crossing_count()},
               {"components", dbl.components()},
               {"writhe", dbl.writhe()}});
  } else {
    out << "pd " << dbl.to_pd_string() << '\n';
    out << "crossings=" << dbl.crossing_count() << " components=" << dbl.components() << " writhe=" << dbl.writhe()
        << '\n';
  }
}

void add_input_flags(CLI::App* sub, Options& o) {
  sub->add_option("--grid", o.grid, "grid file or text, e.g. \"x:2,1 o:1,2\" or random:<n>");
  sub->add_option("--pd", o.pd, "PD file or text");
  sub->add_option("--braid", o.braid, "braid file or text, e.g. \"m=2: 1 1 1\"");
  sub->add_option("--knot", o.knot, "name of a record in the record file");
  sub->add_option("--records", o.records, "record file (JSON lines)");
  sub->add_option("--framing", o.framing, "framing of the double");
  sub->add_option("--field", o.field, "Q or F2");
  sub->add_option("--mode", o.mode, "scan or naive");
  sub->add_option("--limit", o.limit, "crossing limit");
  sub->add_option("--seed", o.seed, "seed for random:<n> grids");
  sub->add_flag("--json", o.json, "structured output");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Legendrian knot invariants, bounds and certification", "legknot"};
  app.require_subcommand(1);
  Options o;
  struct Verb {
    const char* name;
    const char* help;
  };
  const Verb verbs[] = {
      {"validate", "check that every representation of a record agrees"},
      {"invariants", "tb, sl and r of a grid diagram"},
      {"poly", "Kauffman or HOMFLY-PT polynomial"},
      {"kh", "Khovanov homology table"},
      {"bounds", "upper and lower bounds for tb, sl and arc index"},
      {"certify", "bounds plus certification"},
      {"double", "n-framed double of a knot"},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& v : verbs) {
    auto* sub = app.add_subcommand(v.name, v.help);
    add_input_flags(sub, o);
    subs[v.name] = sub;
  }
  subs["poly"]->add_option("kind", o.poly_kind, "kauffman or homfly")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (subs["validate"]->parsed()) cmd_validate(o, out);
    if (subs["invariants"]->parsed()) cmd_invariants(o, out);
    if (subs["poly"]->parsed()) cmd_poly(o, out);
    if (subs["kh"]->parsed()) cmd_kh(o, out);
    if (subs["bounds"]->parsed()) cmd_bounds(o, out, false);
    if (subs["certify"]->parsed()) cmd_bounds(o, out, true);
    if (subs["double"]->parsed()) cmd_double(o, out);
  } catch (const Error& e) {
    err << "legknot: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "legknot: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace legknot::cli
