#include "pathlab/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "pathlab/error.hpp"

namespace pathlab {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::MalformedInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) malformed("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) malformed(std::string("missing field '") + key + "'");
  return *it;
}

std::string string_field(const Json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_string()) malformed(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

const Json& array_field(const Json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_array()) malformed(std::string("field '") + key + "' must be an array");
  return v;
}

std::vector<std::string> string_list(const Json& j, const char* key) {
  std::vector<std::string> out;
  for (const auto& v : array_field(j, key)) {
    if (!v.is_string()) malformed(std::string("entries of '") + key + "' must be strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

IndexSet index_list(const Json& j, const char* key, int dim) {
  IndexSet out;
  for (const auto& v : array_field(j, key)) {
    if (!v.is_number_integer()) malformed(std::string("entries of '") + key + "' must be integers");
    const auto x = v.get<long long>();
    if (x < 1 || x > dim)
      throw Error(ErrorKind::IndexOutOfRange,
                  std::string("index ") + std::to_string(x) + " in '" + key + "' out of range");
    out.push_back(static_cast<int>(x - 1));
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    malformed(std::string("duplicate index in '") + key + "'");
  return out;
}

Json one_based(const IndexSet& s) {
  Json out = Json::array();
  for (int x : s) out.push_back(x + 1);
  return out;
}

Json plmap_to_json(const PLMap& m) {
  Json pts = Json::array();
  for (const auto& bp : m.points) {
    Json v = Json::array();
    for (const auto& x : bp.value) v.push_back(rational_to_json(x));
    pts.push_back(Json::array({rational_to_json(bp.time), v}));
  }
  return pts;
}

Json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) malformed("cannot read file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  malformed("expected a rational (integer or \"p/q\")");
}

Json rational_to_json(const Rational& r) { return format_rational(r); }

PrecubicalSet model_from_json(const Json& j) {
  PrecubicalSet::Builder b;
  if (!j.is_object()) malformed("model must be a JSON object");
  if (auto it = j.find("name"); it != j.end()) {
    if (!it->is_string()) malformed("field 'name' must be a string");
    b.name(it->get<std::string>());
  }
  for (const auto& c : array_field(j, "cubes")) {
    const auto& dim = field(c, "dim");
    if (!dim.is_number_integer()) malformed("field 'dim' must be an integer");
    b.add(string_field(c, "id"), static_cast<int>(dim.get<long long>()), string_list(c, "d0"),
          string_list(c, "d1"));
  }
  b.start(string_field(j, "start"));
  b.end(string_field(j, "end"));
  return b.build();
}

Json model_to_json(const PrecubicalSet& set) {
  Json cubes = Json::array();
  for (CubeId c : set.sorted()) {
    const auto& rec = set.cube(c);
    Json d0 = Json::array(), d1 = Json::array();
    for (CubeId f : rec.lower) d0.push_back(set.id(f));
    for (CubeId f : rec.upper) d1.push_back(set.id(f));
    cubes.push_back({{"id", rec.id}, {"dim", rec.dim}, {"d0", d0}, {"d1", d1}});
  }
  Json out;
  if (!set.name().empty()) out["name"] = set.name();
  out["cubes"] = cubes;
  out["start"] = set.id(set.start());
  out["end"] = set.id(set.end());
  return out;
}

Json violations_to_json(const std::vector<Violation>& violations) {
  Json out = Json::array();
  for (const auto& v : violations) {
    Json e;
    switch (v.kind) {
      case Violation::Kind::FaceDimension: e["kind"] = "face-dimension"; break;
      case Violation::Kind::CubicalIdentity: e["kind"] = "cubical-identity"; break;
      case Violation::Kind::BasePointDimension: e["kind"] = "base-point-dimension"; break;
    }
    e["cube"] = v.cube;
    if (v.kind == Violation::Kind::CubicalIdentity) {
      e["i"] = v.i;
      e["j"] = v.j;
      e["eps"] = v.eps;
      e["eta"] = v.eta;
      e["lhs"] = v.lhs;
      e["rhs"] = v.rhs;
    } else if (v.kind == Violation::Kind::FaceDimension) {
      e["i"] = v.i;
      e["eps"] = v.eps;
    }
    e["message"] = v.message;
    out.push_back(e);
  }
  return out;
}

PathPresentation path_from_json(const PrecubicalSet& set, const Json& j) {
  PathPresentation pres;
  for (const auto& s : array_field(j, "segments")) {
    Segment seg{set.at(string_field(s, "cube")), {}};
    for (const auto& bp : array_field(s, "breakpoints")) {
      if (!bp.is_array() || bp.size() != 2 || !bp[1].is_array())
        malformed("a breakpoint is [time, [values...]]");
      Breakpoint p{rational_from_json(bp[0]), {}};
      for (const auto& v : bp[1]) p.value.push_back(rational_from_json(v));
      seg.map.points.push_back(std::move(p));
    }
    pres.segments.push_back(std::move(seg));
  }
  check_presentation(set, pres);
  return pres;
}

Json path_to_json(const PrecubicalSet& set, const PathPresentation& pres) {
  Json segs = Json::array();
  for (const auto& s : pres.segments)
    segs.push_back({{"cube", set.id(s.cube)}, {"breakpoints", plmap_to_json(s.map)}});
  return {{"segments", segs}};
}

Track track_from_json(const PrecubicalSet& set, const Json& j) {
  Track t;
  for (const auto& e : array_field(j, "entries")) {
    const CubeId c = set.at(string_field(e, "cube"));
    t.entries.push_back({c, index_list(e, "A", set.dim(c)), index_list(e, "B", set.dim(c))});
  }
  return t;
}

Json track_to_json(const PrecubicalSet& set, const Track& track) {
  Json entries = Json::array();
  for (const auto& e : track.entries)
    entries.push_back({{"cube", set.id(e.cube)}, {"A", one_based(e.A)}, {"B", one_based(e.B)}});
  return {{"entries", entries}};
}

Json actions_to_json(const ActionTable& table) {
  Json out = Json::array();
  for (std::size_t p = 0; p < table.actions.size(); ++p) {
    const auto& a = table.actions[p];
    Json slots = Json::array();
    for (int i = a.beg; i <= a.end; ++i) slots.push_back({{"stage", i + 1}, {"coord", a.slot(i) + 1}});
    out.push_back({{"id", p + 1}, {"beg", a.beg + 1}, {"end", a.end + 1}, {"slots", slots}});
  }
  return out;
}

Json progress_to_json(const ProgressFunction& f) {
  Json actions = Json::array();
  for (std::size_t p = 0; p < f.f.size(); ++p)
    actions.push_back({{"id", p + 1},
                       {"support", Json::array({rational_to_json(f.support_start(static_cast<int>(p))),
                                                rational_to_json(f.support_end(static_cast<int>(p)))})},
                       {"breakpoints", plmap_to_json(f.f[p])}});
  return {{"a", rational_to_json(f.a)}, {"b", rational_to_json(f.b)}, {"actions", actions}};
}

Json chain_to_json(const PrecubicalSet& set, const CubeChain& chain) {
  Json out = Json::array();
  for (CubeId c : chain.cubes) out.push_back(set.id(c));
  return out;
}

Json category_to_json(const PrecubicalSet& set, const Category& cat) {
  Json objects = Json::array();
  for (const auto& o : cat.objects) objects.push_back(chain_to_json(set, o));
  Json morphisms = Json::array();
  for (const auto& m : cat.morphisms) {
    Json parts = Json::array();
    for (const auto& p : m.partitions) {
      Json blocks = Json::array();
      for (const auto& b : p) blocks.push_back(one_based(b));
      parts.push_back(blocks);
    }
    morphisms.push_back({{"src", m.src}, {"dst", m.dst}, {"partitions", parts}});
  }
  return {{"objects", objects}, {"morphisms", morphisms}};
}

Json homology_to_json(const HomologyReport& r) {
  Json torsion = Json::array();
  for (const auto& t : r.torsion) {
    Json row = Json::array();
    for (const auto& v : t) row.push_back(integer_to_json(v));
    torsion.push_back(row);
  }
  return {{"betti", r.betti}, {"torsion", torsion}, {"euler", r.euler}};
}

Json rationals_to_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(rational_to_json(v));
  return out;
}

std::string fnv1a64_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace pathlab
