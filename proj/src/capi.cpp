#include "pathlab/pathlab.h"

#include <cstdlib>
#include <cstring>
#include <new>

#include "pathlab/error.hpp"
#include "pathlab/generators.hpp"
#include "pathlab/pipeline.hpp"

struct pl_model {
  pathlab::PrecubicalSet set;
  std::string source;
};

namespace {

thread_local std::string last_error;
thread_local bool has_error = false;
thread_local std::string last_timings = "{}";

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

pl_status fail(pl_status status, const std::string& kind, const std::string& message) {
  last_error = pathlab::Json{{"error", kind}, {"message", message}}.dump();
  has_error = true;
  return status;
}

template <class F>
pl_status guarded(F&& f) {
  has_error = false;
  try {
    f();
    return PL_OK;
  } catch (const pathlab::Error& e) {
    return fail(pathlab::is_malformed(e.kind()) ? PL_MALFORMED : PL_SEMANTIC,
                pathlab::to_string(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(PL_INTERNAL, "OutOfMemory", "allocation failed");
  } catch (const std::exception& e) {
    return fail(PL_INTERNAL, "Internal", e.what());
  } catch (...) {
    return fail(PL_INTERNAL, "Internal", "unknown failure");
  }
}

pl_status null_argument() { return fail(PL_MALFORMED, "MalformedInput", "null argument"); }

pl_model* load(std::string text, int strict) {
  auto set = pathlab::model_from_json(pathlab::parse_json(text));
  if (strict) set.require_valid();
  return new pl_model{std::move(set), std::move(text)};
}

}  // namespace

extern "C" {

const char* pl_version(void) { return "0.1.0"; }

pl_status pl_model_load_json(const char* json, int strict, pl_model** out) {
  if (!json || !out) return null_argument();
  return guarded([&] { *out = load(json, strict); });
}

pl_status pl_model_load_file(const char* path, int strict, pl_model** out) {
  if (!path || !out) return null_argument();
  return guarded([&] { *out = load(pathlab::read_file(path), strict); });
}

pl_status pl_model_generate(const char* kind, const int* dims, size_t ndims, pl_model** out) {
  if (!kind || !out || (ndims && !dims)) return null_argument();
  return guarded([&] {
    using namespace pathlab;
    const std::string k = kind;
    const std::vector<int> d(dims, dims + ndims);
    auto one = [&] {
      if (d.size() != 1) throw Error(ErrorKind::MalformedInput, k + " takes one dimension");
      if (d[0] < 0 || (k == "boundary" && d[0] < 1))
        throw Error(ErrorKind::MalformedInput, "dimension out of range");
      return d[0];
    };
    PrecubicalSet set = [&] {
      if (k == "cube") return standard_cube(one());
      if (k == "boundary") return boundary_cube(one());
      if (k == "wedge") {
        if (d.empty() || std::any_of(d.begin(), d.end(), [](int x) { return x < 1; }))
          throw Error(ErrorKind::MalformedInput, "wedge needs positive dimensions");
        return wedge(d);
      }
      if (k == "double-cube") return double_cube();
      if (k == "swiss-flag") return swiss_flag();
      throw Error(ErrorKind::MalformedInput, "unknown generator '" + k + "'");
    }();
    *out = new pl_model{std::move(set), {}};
  });
}

void pl_model_free(pl_model* model) { delete model; }

void pl_string_free(char* s) { std::free(s); }

pl_status pl_model_to_json(const pl_model* model, char** out) {
  if (!model || !out) return null_argument();
  return guarded([&] { *out = dup(pathlab::model_to_json(model->set).dump(2)); });
}

pl_status pl_model_digest(const pl_model* model, char** out) {
  if (!model || !out) return null_argument();
  return guarded([&] {
    *out = dup(model->source.empty() ? std::string() : pathlab::fnv1a64_hex(model->source));
  });
}

pl_status pl_validate(const pl_model* model, char** out) {
  if (!model || !out) return null_argument();
  return guarded([&] { *out = dup(pathlab::run_validate(model->set).dump()); });
}

pl_status pl_chains(const pl_model* model, int length, int list, char** out) {
  if (!model || !out) return null_argument();
  return guarded([&] {
    pathlab::Timings t;
    auto r = t.time("chains", [&] { return pathlab::run_chains(model->set, length, list != 0); });
    last_timings = t.to_json().dump();
    *out = dup(r.dump());
  });
}

pl_status pl_category(const pl_model* model, int length, int threads, char** json, char** dot) {
  if (!model || !json) return null_argument();
  return guarded([&] {
    pathlab::Timings t;
    pathlab::Category cat;
    auto r = pathlab::run_category(model->set, length, threads, t, &cat);
    std::string d = dot ? pathlab::category_dot(model->set, cat) : std::string();
    last_timings = t.to_json().dump();
    *json = dup(r.dump());
    if (dot) *dot = dup(d);
  });
}

pl_status pl_homology(const pl_model* model, int length, int threads, char** out, char** triplets) {
  if (!model || !out) return null_argument();
  return guarded([&] {
    pathlab::Timings t;
    std::string trip;
    auto r = pathlab::run_homology(model->set, length, threads, t, triplets ? &trip : nullptr);
    last_timings = t.to_json().dump();
    *out = dup(r.dump());
    if (triplets) *triplets = dup(trip);
  });
}

pl_status pl_exec_space(const pl_model* model, int max_length, int threads, char** out) {
  if (!model || !out) return null_argument();
  return guarded([&] {
    pathlab::Timings t;
    auto r = pathlab::run_exec_space(model->set, max_length, threads, t);
    last_timings = t.to_json().dump();
    *out = dup(r.dump());
  });
}

pl_status pl_path_op(const pl_model* model, const char* path_json, const char* op, char** out) {
  if (!model || !path_json || !op || !out) return null_argument();
  return guarded([&] {
    pathlab::Timings t;
    const auto pres = t.time("load", [&] {
      return pathlab::path_from_json(model->set, pathlab::parse_json(path_json));
    });
    auto r = t.time(op, [&] { return pathlab::run_path_op(model->set, pres, op); });
    last_timings = t.to_json().dump();
    *out = dup(r.dump());
  });
}

pl_status pl_tamify(const pl_model* model, const char* path_json, int iterate, char** out) {
  if (!model || !path_json || !out) return null_argument();
  return guarded([&] {
    pathlab::Timings t;
    const auto pres = t.time("load", [&] {
      return pathlab::path_from_json(model->set, pathlab::parse_json(path_json));
    });
    auto r = t.time("tamify", [&] { return pathlab::run_tamify(model->set, pres, iterate != 0); });
    last_timings = t.to_json().dump();
    *out = dup(r.dump());
  });
}

const char* pl_last_error(void) { return has_error ? last_error.c_str() : nullptr; }

const char* pl_last_timings(void) { return last_timings.c_str(); }

}  // extern "C"
