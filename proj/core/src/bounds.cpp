#include "legknot/bounds.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "legknot/cables.hpp"
#include "legknot/error.hpp"

namespace legknot {

int kauffman_tb_bound(const LaurentPoly2& F) { return -F.max_deg(Var::a) - 1; }

ImprovedBound improved_kauffman_tb_bound(const LaurentPoly2& F) {
  const int base = kauffman_tb_bound(F);
  const UniPoly lead = leading_a_part(dubrovnik_transform(F));
  if (lead.all_nonnegative()) return {base, false};
  return {base - 1, true};
}

int homfly_sl_bound(const LaurentPoly2& P) { return -P.max_deg(Var::a) - 1; }

int mfw_braid_lower(const LaurentPoly2& P) {
  const int b = P.breadth(Var::a) + 2;
  return (b + 1) / 2;
}

ArcBounds arc_bounds(const LaurentPoly2& F, const KhTable& T, const std::optional<GridDiagram>& G) {
  ArcBounds a;
  a.lower_kauffman = F.breadth(Var::a) + 2;
  a.lower_khovanov = kh_breadth(T);
  if (G) a.upper_grid = G->size();
  return a;
}

std::string_view provenance_name(Provenance p) noexcept {
  return p == Provenance::BoundSharpness ? "bound-sharpness" : "recorded-exception";
}

namespace {

SideBounds side_bounds(const LaurentPoly2& F, const LaurentPoly2& P, const KhTable& T) {
  SideBounds s;
  s.tb_upper_kauffman = kauffman_tb_bound(F);
  try {
    s.tb_upper_kauffman_improved = improved_kauffman_tb_bound(F);
  } catch (const Error& e) {
    if (e.code() != Errc::NonRealResult) throw;
  }
  s.tb_upper_khovanov = kh_tb_bound(T);
  s.sl_upper_homfly = homfly_sl_bound(P);
  return s;
}

void add_grid_lowers(SideBounds& s, const GridDiagram& g) {
  const auto gi = grid_invariants(g);
  s.tb_lower_grid = gi.tb;
  // The half turn keeps tb and negates r, so the better sign is available.
  s.sl_lower_grid = gi.tb + std::abs(gi.r);
}

void add_cable_uppers(SideBounds& s, const std::optional<RecordedCableBound>& tb,
                      const std::optional<RecordedCableBound>& sl) {
  if (tb) s.tb_upper_cable = refine_tb_from_cable(tb->upper, tb->framing);
  if (sl) s.sl_upper_cable = refine_sl_from_cable(sl->upper, sl->framing);
}

int tb_upper(const SideBounds& s, bool with_recorded) {
  int u = std::min(s.tb_upper_kauffman, s.tb_upper_khovanov);
  if (s.tb_upper_kauffman_improved) u = std::min(u, s.tb_upper_kauffman_improved->value);
  if (with_recorded && s.tb_upper_cable) u = std::min(u, *s.tb_upper_cable);
  return u;
}

int sl_upper(const SideBounds& s, bool with_recorded) {
  int u = s.sl_upper_homfly;
  if (with_recorded && s.sl_upper_cable) u = std::min(u, *s.sl_upper_cable);
  return u;
}

[[noreturn]] void inconsistent(const std::string& knot, const std::string& what) {
  throw Error(Errc::InconsistentRecord, knot + ": " + what);
}

// Pins one maximal invariant between a realized lower bound and the best upper
// bound, folding in a recorded value if there is one.
std::optional<Certified> pin(const std::string& knot, const char* what, std::optional<int> lower, int upper_plain,
                             int upper_recorded, const std::optional<RecordedValue>& recorded) {
  if (lower && *lower > upper_recorded)
    inconsistent(knot, std::string(what) + " lower bound exceeds its upper bound");
  if (recorded) {
    if (recorded->value > upper_recorded)
      inconsistent(knot, std::string("recorded ") + what + " exceeds the computed upper bound");
    if (lower && recorded->value < *lower)
      inconsistent(knot, std::string("recorded ") + what + " is below a realized value");
  }
  if (lower && *lower == upper_plain) return Certified{*lower, Provenance::BoundSharpness};
  if (recorded) return Certified{recorded->value, Provenance::RecordedException};
  if (lower && *lower == upper_recorded) return Certified{*lower, Provenance::RecordedException};
  return std::nullopt;
}

}  // namespace

BoundsReport compute_bounds(const KnotRecord& r, const EngineOptions& opts) {
  const LinkDiagram d = r.diagram();
  if (d.components() != 1) throw Error(Errc::NotAKnot, r.name + " has " + std::to_string(d.components()) + " components");
  const LaurentPoly2 F = kauffman_F(d, opts.skein);
  const LaurentPoly2 P = homfly(d, opts.skein);
  const KhTable T = khovanov(d, opts.khovanov);

  BoundsReport rep;
  rep.knot = r.name;
  rep.bounds = side_bounds(F, P, T);
  rep.mirror = side_bounds(F.invert_first(), P.invert_first().negate_second(), mirror_table(T));
  rep.braid_index_lower_mfw = mfw_braid_lower(P);
  const ArcBounds a = arc_bounds(F, T, r.grid);
  rep.arc_lower_kauffman = a.lower_kauffman;
  rep.arc_lower_khovanov = a.lower_khovanov;
  rep.arc_upper_grid = a.upper_grid;
  if (r.grid) {
    add_grid_lowers(rep.bounds, *r.grid);
    add_grid_lowers(rep.mirror, rotate_mirror(*r.grid));
  }
  if (const auto b = r.braid_word()) {
    BraidWord m = *b;
    for (int& l : m.letters) l = -l;
    rep.bounds.sl_lower_braid = braid_sl(*b);
    rep.mirror.sl_lower_braid = braid_sl(m);
  }
  add_cable_uppers(rep.bounds, r.cable_tb, r.cable_sl);
  add_cable_uppers(rep.mirror, r.cable_tb_mirror, r.cable_sl_mirror);
  return rep;
}

BoundsReport certify(const KnotRecord& r, const EngineOptions& opts) {
  BoundsReport rep = compute_bounds(r, opts);
  rep.certification_run = true;
  const std::string& name = r.name;

  const int lower_alpha = std::max(rep.arc_lower_kauffman, rep.arc_lower_khovanov);
  if (rep.arc_upper_grid && *rep.arc_upper_grid < lower_alpha)
    inconsistent(name, "grid is smaller than the arc index lower bound");
  if (r.alpha) {
    if (r.alpha->value < lower_alpha) inconsistent(name, "recorded arc index is below the computed lower bound");
    if (rep.arc_upper_grid && r.alpha->value > *rep.arc_upper_grid)
      inconsistent(name, "recorded arc index exceeds the grid size");
  }
  if (r.tb && r.tb_mirror) {
    const int floor_sum = r.alpha ? -r.alpha->value : (rep.arc_upper_grid ? -*rep.arc_upper_grid : INT_MIN);
    if (r.tb->value + r.tb_mirror->value < floor_sum)
      inconsistent(name, "recorded tb values sum below minus the arc index");
  }

  const int uK = tb_upper(rep.bounds, false);
  const int uM = tb_upper(rep.mirror, false);
  if (rep.arc_upper_grid && -(uK + uM) == *rep.arc_upper_grid) {
    // The tb upper bounds sum to -n and a grid of size n exists: every
    // inequality in between is an equality.
    rep.alpha = Certified{*rep.arc_upper_grid, Provenance::BoundSharpness};
    rep.tb_knot = Certified{uK, Provenance::BoundSharpness};
    rep.tb_mirror = Certified{uM, Provenance::BoundSharpness};
    if (rep.bounds.tb_lower_grid && *rep.bounds.tb_lower_grid > uK)
      inconsistent(name, "grid realizes tb above the upper bound");
    if (r.tb && r.tb->value != uK) inconsistent(name, "recorded tb disagrees with the sharp bound");
    if (r.tb_mirror && r.tb_mirror->value != uM) inconsistent(name, "recorded mirror tb disagrees with the sharp bound");
  } else {
    rep.tb_knot = pin(name, "tb", rep.bounds.tb_lower_grid, uK, tb_upper(rep.bounds, true), r.tb);
    rep.tb_mirror = pin(name, "mirror tb", rep.mirror.tb_lower_grid, uM, tb_upper(rep.mirror, true), r.tb_mirror);
    if (rep.tb_knot && rep.tb_mirror && rep.arc_upper_grid &&
        rep.tb_knot->value + rep.tb_mirror->value == -*rep.arc_upper_grid) {
      rep.alpha = Certified{*rep.arc_upper_grid, Provenance::RecordedException};
    } else if (r.alpha) {
      rep.alpha = Certified{r.alpha->value, Provenance::RecordedException};
    }
  }

  auto sl_lower = [](const SideBounds& s, const std::optional<Certified>& tb) {
    std::optional<int> l = s.sl_lower_grid;
    if (s.sl_lower_braid && (!l || *s.sl_lower_braid > *l)) l = s.sl_lower_braid;
    if (tb && (!l || tb->value > *l)) l = tb->value;
    return l;
  };
  rep.sl_knot = pin(name, "sl", sl_lower(rep.bounds, rep.tb_knot), sl_upper(rep.bounds, false),
                    sl_upper(rep.bounds, true), r.sl);
  rep.sl_mirror = pin(name, "mirror sl", sl_lower(rep.mirror, rep.tb_mirror), sl_upper(rep.mirror, false),
                      sl_upper(rep.mirror, true), r.sl_mirror);
  // A lower bound that rests on a recorded tb is itself recorded.
  auto demote = [](std::optional<Certified>& sl, const SideBounds& s, const std::optional<Certified>& tb) {
    if (sl && sl->provenance == Provenance::BoundSharpness && tb && tb->provenance == Provenance::RecordedException &&
        std::max(s.sl_lower_grid.value_or(INT_MIN), s.sl_lower_braid.value_or(INT_MIN)) < sl->value)
      sl->provenance = Provenance::RecordedException;
  };
  demote(rep.sl_knot, rep.bounds, rep.tb_knot);
  demote(rep.sl_mirror, rep.mirror, rep.tb_mirror);
  return rep;
}

namespace {

using ojson = nlohmann::ordered_json;

template <class T>
ojson opt(const std::optional<T>& v) {
  return v ? ojson(*v) : ojson(nullptr);
}

ojson side_json(const SideBounds& s) {
  ojson j;
  j["tb_upper_kauffman"] = s.tb_upper_kauffman;
  if (s.tb_upper_kauffman_improved) {
    j["tb_upper_kauffman_improved"] = {{"value", s.tb_upper_kauffman_improved->value},
                                       {"applied", s.tb_upper_kauffman_improved->applied}};
  } else {
    j["tb_upper_kauffman_improved"] = nullptr;
  }
  j["tb_upper_khovanov"] = s.tb_upper_khovanov;
  j["sl_upper_homfly"] = s.sl_upper_homfly;
  j["tb_upper_cable"] = opt(s.tb_upper_cable);
  j["sl_upper_cable"] = opt(s.sl_upper_cable);
  j["tb_lower_grid"] = opt(s.tb_lower_grid);
  j["sl_lower_grid"] = opt(s.sl_lower_grid);
  j["sl_lower_braid"] = opt(s.sl_lower_braid);
  return j;
}

ojson cert_json(const std::optional<Certified>& c) {
  if (!c) return nullptr;
  return {{"value", c->value}, {"provenance", std::string(provenance_name(c->provenance))}};
}

template <class T>
std::optional<T> get_opt(const ojson& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<T>();
}

SideBounds side_from(const ojson& j) {
  SideBounds s;
  s.tb_upper_kauffman = j.at("tb_upper_kauffman").get<int>();
  const auto& imp = j.at("tb_upper_kauffman_improved");
  if (!imp.is_null()) s.tb_upper_kauffman_improved = ImprovedBound{imp.at("value").get<int>(), imp.at("applied").get<bool>()};
  s.tb_upper_khovanov = j.at("tb_upper_khovanov").get<int>();
  s.sl_upper_homfly = j.at("sl_upper_homfly").get<int>();
  s.tb_upper_cable = get_opt<int>(j, "tb_upper_cable");
  s.sl_upper_cable = get_opt<int>(j, "sl_upper_cable");
  s.tb_lower_grid = get_opt<int>(j, "tb_lower_grid");
  s.sl_lower_grid = get_opt<int>(j, "sl_lower_grid");
  s.sl_lower_braid = get_opt<int>(j, "sl_lower_braid");
  return s;
}

std::optional<Certified> cert_from(const ojson& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  const auto p = v.at("provenance").get<std::string>();
  Certified c;
  c.value = v.at("value").get<int>();
  if (p == "bound-sharpness") {
    c.provenance = Provenance::BoundSharpness;
  } else if (p == "recorded-exception") {
    c.provenance = Provenance::RecordedException;
  } else {
    throw Error(Errc::SyntaxError, "unknown provenance '" + p + "'");
  }
  return c;
}

}  // namespace

std::string report_to_json(const BoundsReport& r) {
  ojson j = side_json(r.bounds);
  ojson out;
  out["knot"] = r.knot;
  for (auto& [k, v] : j.items()) out[k] = v;
  out["mirror"] = side_json(r.mirror);
  out["braid_index_lower_mfw"] = r.braid_index_lower_mfw;
  out["arc_lower_kauffman"] = r.arc_lower_kauffman;
  out["arc_lower_khovanov"] = r.arc_lower_khovanov;
  out["arc_upper_grid"] = opt(r.arc_upper_grid);
  if (r.certification_run) {
    out["certified"] = {{"alpha", cert_json(r.alpha)},
                        {"tb_K", cert_json(r.tb_knot)},
                        {"tb_mirror", cert_json(r.tb_mirror)},
                        {"sl_K", cert_json(r.sl_knot)},
                        {"sl_mirror", cert_json(r.sl_mirror)}};
  } else {
    out["certified"] = nullptr;
  }
  return out.dump(2);
}

BoundsReport report_from_json(std::string_view text) {
  try {
    const ojson j = ojson::parse(text);
    BoundsReport r;
    r.knot = j.at("knot").get<std::string>();
    r.bounds = side_from(j);
    r.mirror = side_from(j.at("mirror"));
    r.braid_index_lower_mfw = j.at("braid_index_lower_mfw").get<int>();
    r.arc_lower_kauffman = j.at("arc_lower_kauffman").get<int>();
    r.arc_lower_khovanov = j.at("arc_lower_khovanov").get<int>();
    r.arc_upper_grid = get_opt<int>(j, "arc_upper_grid");
    const auto& c = j.at("certified");
    if (!c.is_null()) {
      r.certification_run = true;
      r.alpha = cert_from(c, "alpha");
      r.tb_knot = cert_from(c, "tb_K");
      r.tb_mirror = cert_from(c, "tb_mirror");
      r.sl_knot = cert_from(c, "sl_K");
      r.sl_mirror = cert_from(c, "sl_mirror");
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::SyntaxError, std::string("bounds report: ") + e.what());
  }
}

namespace {

std::string show(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

std::string show(const std::optional<Certified>& c) {
  if (!c) return "inconclusive";
  return std::to_string(c->value) + " (" + std::string(provenance_name(c->provenance)) + ")";
}

std::string show_improved(const SideBounds& s) {
  if (!s.tb_upper_kauffman_improved) return "-";
  return std::to_string(s.tb_upper_kauffman_improved->value) +
         (s.tb_upper_kauffman_improved->applied ? " (applied)" : " (not applied)");
}

}  // namespace

std::string report_to_text(const BoundsReport& r) {
  std::ostringstream os;
  auto row = [&](const std::string& key, const std::string& a, const std::string& b = "") {
    os << std::left << std::setw(28) << key << std::setw(22) << a << b << '\n';
  };
  os << "knot " << r.knot << '\n';
  row("", "K", "mirror");
  row("tb_upper_kauffman", std::to_string(r.bounds.tb_upper_kauffman), std::to_string(r.mirror.tb_upper_kauffman));
  row("tb_upper_kauffman_improved", show_improved(r.bounds), show_improved(r.mirror));
  row("tb_upper_khovanov", std::to_string(r.bounds.tb_upper_khovanov), std::to_string(r.mirror.tb_upper_khovanov));
  row("tb_upper_cable", show(r.bounds.tb_upper_cable), show(r.mirror.tb_upper_cable));
  row("tb_lower_grid", show(r.bounds.tb_lower_grid), show(r.mirror.tb_lower_grid));
  row("sl_upper_homfly", std::to_string(r.bounds.sl_upper_homfly), std::to_string(r.mirror.sl_upper_homfly));
  row("sl_upper_cable", show(r.bounds.sl_upper_cable), show(r.mirror.sl_upper_cable));
  row("sl_lower_grid", show(r.bounds.sl_lower_grid), show(r.mirror.sl_lower_grid));
  row("sl_lower_braid", show(r.bounds.sl_lower_braid), show(r.mirror.sl_lower_braid));
  row("braid_index_lower_mfw", std::to_string(r.braid_index_lower_mfw));
  row("arc_lower_kauffman", std::to_string(r.arc_lower_kauffman));
  row("arc_lower_khovanov", std::to_string(r.arc_lower_khovanov));
  row("arc_upper_grid", show(r.arc_upper_grid));
  if (r.certification_run) {
    os << "certified\n";
    row("  alpha", show(r.alpha));
    row("  tb", show(r.tb_knot));
    row("  tb_mirror", show(r.tb_mirror));
    row("  sl", show(r.sl_knot));
    row("  sl_mirror", show(r.sl_mirror));
  }
  return os.str();
}

}  // namespace legknot
