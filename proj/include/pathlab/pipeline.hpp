#pragma once

#include <chrono>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "pathlab/io.hpp"

namespace pathlab {

/// Wall-clock milliseconds per named stage; repeated names accumulate.
class Timings {
 public:
  void add(const std::string& stage, double ms);
  Json to_json() const;

  template <class F>
  auto time(const std::string& stage, F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    struct Guard {
      Timings* self;
      const std::string& stage;
      std::chrono::steady_clock::time_point t0;
      ~Guard() {
        self->add(stage, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                             .count());
      }
    } guard{this, stage, t0};
    return f();
  }

 private:
  mutable std::mutex mutex_;
  std::vector<std::pair<std::string, double>> stages_;
};

/// Each function returns the result payload of the command. Payloads are
/// deterministic; timings are reported separately.
Json run_validate(const PrecubicalSet& set);
Json run_chains(const PrecubicalSet& set, int n, bool list);
Json run_category(const PrecubicalSet& set, int n, int threads, Timings& timings,
                  Category* keep = nullptr);
Json run_homology(const PrecubicalSet& set, int n, int threads, Timings& timings,
                  std::string* triplets = nullptr);
Json run_exec_space(const PrecubicalSet& set, int max_length, int threads, Timings& timings);
Json run_tamify(const PrecubicalSet& set, const PathPresentation& pres, bool iterate);

/// length, naturalize, vertices, tame, track, actions, progress, minimal, regular.
Json run_path_op(const PrecubicalSet& set, const PathPresentation& pres, const std::string& op);
const std::vector<std::string>& path_ops();

/// {"command", "input_digest", "timings_ms", "result"}.
Json run_report(const std::string& command, const std::string& input, const Timings& timings,
                Json result);

}  // namespace pathlab
