#include "pathlab/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "pathlab/error.hpp"
#include "pathlab/nt_presentation.hpp"
#include "pathlab/tamify.hpp"

namespace pathlab {

void Timings::add(const std::string& stage, double ms) {
  std::lock_guard lock(mutex_);
  for (auto& [name, total] : stages_)
    if (name == stage) {
      total += ms;
      return;
    }
  stages_.emplace_back(stage, ms);
}

Json Timings::to_json() const {
  std::lock_guard lock(mutex_);
  Json out = Json::object();
  for (const auto& [name, ms] : stages_) out[name] = ms;
  return out;
}

namespace {

Json count_to_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json type_to_json(const ChainType& t) { return Json(t.parts); }

struct Analysis {
  Category category;
  NerveComplex nerve;
  HomologyReport report;
};

Analysis analyze(const PrecubicalSet& set, int n, int threads, Timings& timings) {
  Analysis a;
  a.category = timings.time("category", [&] { return category(set, n, threads); });
  a.nerve = timings.time("nerve", [&] { return build_nerve(a.category); });
  a.report = timings.time("homology", [&] { return homology(a.nerve, threads); });
  return a;
}

Json homology_payload(int n, const Analysis& a) {
  return {{"length", n},
          {"objects", a.category.objects.size()},
          {"morphisms", a.category.non_identity_count()},
          {"simplices", a.nerve.counts()},
          {"homology", homology_to_json(a.report)}};
}

}  // namespace

Json run_validate(const PrecubicalSet& set) {
  const auto v = validate(set);
  std::map<int, std::size_t> by_dim;
  for (CubeId c : set.sorted()) ++by_dim[set.dim(c)];
  Json counts = Json::array();
  for (int d = 0; d <= set.max_dim(); ++d) counts.push_back(by_dim[d]);
  return {{"valid", v.empty()}, {"cubes", counts}, {"violations", violations_to_json(v)}};
}

Json run_chains(const PrecubicalSet& set, int n, bool list) {
  if (n < 0) throw Error(ErrorKind::MalformedInput, "length must be non-negative");
  // Values that may throw are computed outside braced initializers.
  const Integer count = count_chains(set, n);
  Json out = {{"length", n}, {"count", count_to_json(count)}};
  if (list) {
    Json chains = Json::array();
    for (const auto& c : enumerate_chains(set, n))
      chains.push_back({{"cubes", chain_to_json(set, c)}, {"type", type_to_json(c.type(set))}});
    out["chains"] = chains;
  }
  return out;
}

Json run_category(const PrecubicalSet& set, int n, int threads, Timings& timings, Category* keep) {
  if (n < 0) throw Error(ErrorKind::MalformedInput, "length must be non-negative");
  auto cat = timings.time("category", [&] { return category(set, n, threads); });
  const Json listing = category_to_json(set, cat);
  Json out = {{"length", n},
              {"objects", cat.objects.size()},
              {"morphisms", cat.non_identity_count()},
              {"category", listing}};
  if (keep) *keep = std::move(cat);
  return out;
}

Json run_homology(const PrecubicalSet& set, int n, int threads, Timings& timings,
                  std::string* triplets) {
  if (n < 0) throw Error(ErrorKind::MalformedInput, "length must be non-negative");
  const auto a = analyze(set, n, threads, timings);
  if (triplets) *triplets = boundary_triplets(a.nerve);
  return homology_payload(n, a);
}

Json run_exec_space(const PrecubicalSet& set, int max_length, int threads, Timings& timings) {
  if (max_length < 0) throw Error(ErrorKind::MalformedInput, "max length must be non-negative");
  set.require_valid();
  std::vector<int> lengths;
  timings.time("chains", [&] {
    for (int n = 0; n <= max_length; ++n)
      if (count_chains(set, n) > 0) lengths.push_back(n);
    return 0;
  });
  std::vector<Json> rows(lengths.size());
  std::vector<std::exception_ptr> errors(lengths.size());
  auto work = [&](std::size_t i, int inner_threads) {
    try {
      rows[i] = homology_payload(lengths[i], analyze(set, lengths[i], inner_threads, timings));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  const int workers = std::min<int>(threads, static_cast<int>(lengths.size()));
  if (workers > 1) {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < lengths.size();) work(i, 0);
      });
    for (auto& t : pool) t.join();
  } else {
    for (std::size_t i = 0; i < lengths.size(); ++i) work(i, threads);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return {{"max_length", max_length}, {"rows", rows}};
}

Json run_tamify(const PrecubicalSet& set, const PathPresentation& pres, bool iterate) {
  Json out;
  if (!iterate) {
    const auto t = tamify(set, pres);
    out["path"] = path_to_json(set, t);
    out["length"] = rational_to_json(path_length(set, t));
    out["vertices"] = rationals_to_json(vertices_of_path(set, t));
    out["tame"] = is_tame(set, t);
    return out;
  }
  const auto r = regularize(set, tamify(set, pres));
  out["path"] = path_to_json(set, r.path);
  out["length"] = rational_to_json(path_length(set, r.path));
  out["vertices"] = rationals_to_json(vertices_of_path(set, r.path));
  out["iterations"] = r.iterations;
  Json history = Json::array();
  for (const auto& v : r.vertices) history.push_back(rationals_to_json(v));
  out["history"] = history;
  out["regular"] = is_regular(set, r.path);
  return out;
}

const std::vector<std::string>& path_ops() {
  static const std::vector<std::string> ops{"length", "naturalize", "vertices", "tame",   "track",
                                            "actions", "progress",  "minimal",  "regular"};
  return ops;
}

Json run_path_op(const PrecubicalSet& set, const PathPresentation& pres, const std::string& op) {
  if (op == "length") {
    const Rational len = path_length(set, pres);
    return {{"length", rational_to_json(len)}};
  }
  if (op == "naturalize") {
    const auto nat = naturalize(set, pres);
    return {{"path", path_to_json(set, nat)}};
  }
  if (op == "vertices") {
    const auto vert = vertices_of_path(set, pres);
    return {{"vertices", rationals_to_json(vert)}};
  }
  if (op == "tame") {
    const bool tame = is_tame(set, pres);
    Json out = {{"tame", tame}};
    if (tame) out["path"] = path_to_json(set, to_tame_presentation(set, pres));
    return out;
  }
  if (op == "track" || op == "actions" || op == "progress") {
    const auto ex = extract_track(set, pres);
    const int len = track_length(ex.track);
    Json out = {{"track", track_to_json(set, ex.track)},
                {"length", len},
                {"presentation", path_to_json(set, ex.presentation)}};
    if (op == "actions") out["actions"] = actions_to_json(action_table(set, ex.track));
    if (op == "progress") {
      const auto f = progress_from_path(set, ex.presentation, ex.track);
      out["actions"] = actions_to_json(f.actions);
      out["progress"] = progress_to_json(f);
    }
    return out;
  }
  if (op == "minimal") {
    const auto m = minimal_presentation(set, pres);
    return {{"chain", chain_to_json(set, m.chain)},
            {"type", type_to_json(m.chain.type(set))},
            {"path", path_to_json(set, m.presentation)}};
  }
  if (op == "regular") {
    const bool regular = is_regular(set, pres);
    return {{"regular", regular}};
  }
  throw Error(ErrorKind::MalformedInput, "unknown path operation '" + op + "'");
}

Json run_report(const std::string& command, const std::string& input, const Timings& timings,
                Json result) {
  return {{"command", command},
          {"input_digest", fnv1a64_hex(input)},
          {"timings_ms", timings.to_json()},
          {"result", std::move(result)}};
}

}  // namespace pathlab
