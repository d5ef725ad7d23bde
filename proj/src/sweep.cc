#include "ordercheck/sweep.hpp"

#include <chrono>
#include <condition_variable>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

#include <json.hpp>

#include "ordercheck/formats.hpp"
#include "ordercheck/generate.hpp"
#include "ordercheck/verify.hpp"

namespace ordercheck {

namespace {

using json = nlohmann::ordered_json;

constexpr std::uint64_t kPosetCounts[] = {
    1,      2,       5,        16,        63,         318,        2045,
    16999,  183231,  2567284,  46749427,  1104891746, 33823827452};

constexpr std::size_t kFileBlockLines = 1024;

struct Tallies {
  std::uint64_t total = 0;
  std::uint64_t not_pos = 0;
  std::uint64_t not_rr = 0;
  std::uint64_t not_lc = 0;
  std::uint64_t not_uni = 0;

  void add(const Tallies& o) {
    total += o.total;
    not_pos += o.not_pos;
    not_rr += o.not_rr;
    not_lc += o.not_lc;
    not_uni += o.not_uni;
  }
};

struct UnitResult {
  std::string lines;
  Tallies tallies;
};

// Work source: either generation units of a shard or line blocks of a
// digraph6 file. Unit order fixes the output order.
struct WorkSource {
  bool generate = false;
  int p = 0;
  std::unique_ptr<GenerationPlan> plan;
  std::vector<std::string> file_lines;
  std::size_t unit_count = 0;

  void open(const SweepConfig& cfg) {
    if (cfg.input_path.empty()) {
      generate = true;
      p = cfg.p;
      if (cfg.p < 1 || cfg.p > 12)
        throw OutOfRange("generate sweeps support 1 <= p <= 12, got " +
                         std::to_string(cfg.p));
      plan = std::make_unique<GenerationPlan>(
          GenerationShard{cfg.p, cfg.shard_index, cfg.shard_count});
      unit_count = plan->unit_count();
    } else {
      std::ifstream in(cfg.input_path);
      if (!in) throw IoError("cannot open " + cfg.input_path);
      std::string line;
      std::size_t lineno = 0;
      while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (lineno == 1 && line == ">>digraph6<<") continue;
        file_lines.push_back(line);
      }
      if (in.bad()) throw IoError("read error on " + cfg.input_path);
      std::size_t blocks = (file_lines.size() + kFileBlockLines - 1) /
                           kFileBlockLines;
      if (blocks == 0) blocks = 1;
      std::vector<std::size_t> mine;
      for (std::size_t b = 0; b < blocks; ++b)
        if (b % cfg.shard_count == cfg.shard_index) mine.push_back(b);
      file_blocks = std::move(mine);
      unit_count = file_blocks.size();
    }
  }

  std::vector<std::size_t> file_blocks;

  void run_unit(std::size_t unit, const SweepConfig& cfg, UnitResult& out) {
    auto handle = [&](const Poset& P) {
      VerificationRecord rec = verify_poset(P, cfg.algorithm);
      ++out.tallies.total;
      bool counterexample = false;
      if (!rec.ehrhart_positive) ++out.tallies.not_pos, counterexample = true;
      if (!rec.real_rooted) ++out.tallies.not_rr, counterexample = true;
      if (!rec.log_concave) ++out.tallies.not_lc, counterexample = true;
      if (!rec.unimodal) ++out.tallies.not_uni, counterexample = true;
      if (!cfg.summary_only || counterexample) {
        out.lines += rec.to_jsonl();
        out.lines += '\n';
      }
    };
    if (generate) {
      plan->generate_unit(unit, handle);
    } else {
      const std::size_t block = file_blocks[unit];
      const std::size_t begin = block * kFileBlockLines;
      const std::size_t end =
          std::min(begin + kFileBlockLines, file_lines.size());
      for (std::size_t i = begin; i < end; ++i) {
        try {
          handle(parse_digraph6(file_lines[i]));
        } catch (const HStarMismatch&) {
          throw;
        } catch (const InternalInvariant&) {
          throw;
        } catch (const std::runtime_error& e) {
          throw IoError("record " + std::to_string(i + 1) + ": " + e.what());
        }
      }
    }
  }
};

std::string config_source(const SweepConfig& cfg) {
  return cfg.input_path.empty() ? "generate" : cfg.input_path;
}

json config_json(const SweepConfig& cfg, const WorkSource& source) {
  json j;
  j["p"] = cfg.p;
  j["source"] = config_source(cfg);
  j["shard_count"] = cfg.shard_count;
  j["shard_index"] = cfg.shard_index;
  j["algorithm"] = static_cast<int>(cfg.algorithm);
  j["unit_count"] = source.unit_count;
  return j;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

struct Checkpoint {
  json config;
  std::uint64_t cursor = 0;
  Tallies tallies;
  double elapsed_before = 0.0;
  bool completed = false;

  static Checkpoint load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open checkpoint " + path);
    json j;
    try {
      in >> j;
    } catch (const std::exception& e) {
      throw CheckpointCorrupt(std::string("unparseable checkpoint: ") +
                              e.what());
    }
    Checkpoint cp;
    try {
      cp.config = j.at("config");
      const std::string stored_hash = j.at("config_hash").get<std::string>();
      if (stored_hash != std::to_string(fnv1a(cp.config.dump())))
        throw CheckpointCorrupt("config hash mismatch in " + path);
      cp.cursor = j.at("cursor_units").get<std::uint64_t>();
      cp.tallies.total = j.at("total_posets").get<std::uint64_t>();
      cp.tallies.not_pos = j.at("not_ehrhart_positive").get<std::uint64_t>();
      cp.tallies.not_rr = j.at("not_real_rooted").get<std::uint64_t>();
      cp.tallies.not_lc = j.at("not_log_concave").get<std::uint64_t>();
      cp.tallies.not_uni = j.at("not_unimodal").get<std::uint64_t>();
      cp.elapsed_before = j.at("elapsed_seconds").get<double>();
      cp.completed = j.at("completed").get<bool>();
    } catch (const CheckpointCorrupt&) {
      throw;
    } catch (const std::exception& e) {
      throw CheckpointCorrupt(std::string("missing checkpoint field: ") +
                              e.what());
    }
    return cp;
  }

  void store(const std::string& path) const {
    json j;
    j["config"] = config;
    j["config_hash"] = std::to_string(fnv1a(config.dump()));
    j["cursor_units"] = cursor;
    j["total_posets"] = tallies.total;
    j["not_ehrhart_positive"] = tallies.not_pos;
    j["not_real_rooted"] = tallies.not_rr;
    j["not_log_concave"] = tallies.not_lc;
    j["not_unimodal"] = tallies.not_uni;
    j["elapsed_seconds"] = elapsed_before;
    j["completed"] = completed;
    const std::string tmp = path + ".tmp";
    {
      std::ofstream out(tmp);
      if (!out) throw IoError("cannot write checkpoint " + tmp);
      out << j.dump(2) << '\n';
    }
    std::filesystem::rename(tmp, path);
  }
};

SweepSummary summary_from(const SweepConfig& cfg, const Tallies& t,
                          double elapsed, std::uint64_t units_done,
                          std::uint64_t units_total) {
  SweepSummary s;
  s.p = cfg.p;
  s.total_posets = t.total;
  s.not_ehrhart_positive = t.not_pos;
  s.not_real_rooted = t.not_rr;
  s.not_log_concave = t.not_lc;
  s.not_unimodal = t.not_uni;
  s.elapsed_seconds = elapsed;
  s.shard_count = cfg.shard_count;
  s.shard_index = cfg.shard_index;
  s.units_done = units_done;
  s.units_total = units_total;
  return s;
}

}  // namespace

std::uint64_t known_poset_count(int p) {
  if (p < 1 || p > 13) return 0;
  return kPosetCounts[p - 1];
}

std::string SweepSummary::to_json() const {
  json j;
  j["p"] = p;
  j["total_posets"] = total_posets;
  j["counterexamples"] = {{"ehrhart_positive", not_ehrhart_positive},
                          {"real_rooted", not_real_rooted},
                          {"log_concave", not_log_concave},
                          {"unimodal", not_unimodal}};
  j["elapsed_seconds"] = elapsed_seconds;
  j["shard_index"] = shard_index;
  j["shard_count"] = shard_count;
  j["units_done"] = units_done;
  j["units_total"] = units_total;
  j["completed"] = completed();
  return j.dump(2);
}

SweepSummary sweep(const SweepConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  auto elapsed_now = [&start]() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  };

  if (cfg.shard_count < 1 || cfg.shard_index >= cfg.shard_count)
    throw OutOfRange("bad shard configuration");
  if (!cfg.checkpoint_path.empty() && cfg.output_path.empty() &&
      !cfg.summary_only)
    throw IoError("checkpointed record streams require --output");

  WorkSource source;
  source.open(cfg);

  Checkpoint cp;
  cp.config = config_json(cfg, source);
  bool resuming = false;
  if (!cfg.checkpoint_path.empty() &&
      std::filesystem::exists(cfg.checkpoint_path)) {
    Checkpoint prior = Checkpoint::load(cfg.checkpoint_path);
    if (prior.config != cp.config)
      throw ConfigMismatch("checkpoint was written by a different sweep: " +
                           prior.config.dump() + " vs " + cp.config.dump());
    if (prior.completed) {
      // Completed sweep: reprint the stored summary, touch nothing.
      return summary_from(cfg, prior.tallies, prior.elapsed_before,
                          source.unit_count, source.unit_count);
    }
    cp = prior;
    resuming = true;
  }

  std::ofstream file_out;
  std::ostream* out = &std::cout;
  if (!cfg.output_path.empty()) {
    file_out.open(cfg.output_path,
                  resuming ? std::ios::app : std::ios::trunc);
    if (!file_out) throw IoError("cannot open output " + cfg.output_path);
    out = &file_out;
  }

  const std::uint64_t units_total = source.unit_count;
  std::uint64_t stop_at = units_total;
  if (cfg.stop_after_units > 0)
    stop_at = std::min(stop_at, cp.cursor + cfg.stop_after_units);

  // Workers verify whole units; the aggregator writes them back in unit
  // order so the stream is deterministic for any worker count.
  std::mutex mu;
  std::condition_variable cv;
  std::map<std::uint64_t, UnitResult> done;
  std::uint64_t next_unit = cp.cursor;
  std::exception_ptr failure;

  const int jobs = std::max(1, cfg.jobs);
  auto worker = [&]() {
    for (;;) {
      std::uint64_t unit;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (failure || next_unit >= stop_at) return;
        unit = next_unit++;
      }
      UnitResult result;
      try {
        source.run_unit(unit, cfg, result);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
        cv.notify_all();
        return;
      }
      {
        std::lock_guard<std::mutex> lock(mu);
        done.emplace(unit, std::move(result));
        cv.notify_all();
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);

  std::uint64_t flushed = cp.cursor;
  {
    std::unique_lock<std::mutex> lock(mu);
    while (flushed < stop_at) {
      cv.wait(lock, [&] {
        return failure != nullptr || done.count(flushed) > 0;
      });
      if (failure) break;
      while (true) {
        auto it = done.find(flushed);
        if (it == done.end()) break;
        UnitResult result = std::move(it->second);
        done.erase(it);
        lock.unlock();
        (*out) << result.lines;
        out->flush();
        cp.tallies.add(result.tallies);
        ++flushed;
        cp.cursor = flushed;
        if (!cfg.checkpoint_path.empty()) {
          Checkpoint snapshot = cp;
          snapshot.elapsed_before += elapsed_now();
          snapshot.completed = false;
          snapshot.store(cfg.checkpoint_path);
        }
        lock.lock();
      }
    }
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  const double elapsed = cp.elapsed_before + elapsed_now();
  const bool completed = flushed == units_total;

  if (completed && cfg.input_path.empty() && cfg.shard_count == 1) {
    const std::uint64_t expected = known_poset_count(cfg.p);
    if (expected != 0 && cp.tallies.total != expected)
      throw InternalInvariant(
          "generated " + std::to_string(cp.tallies.total) + " posets for p=" +
          std::to_string(cfg.p) + ", expected " + std::to_string(expected));
  }

  if (!cfg.checkpoint_path.empty()) {
    Checkpoint final_cp = cp;
    final_cp.elapsed_before = elapsed;
    final_cp.completed = completed;
    final_cp.store(cfg.checkpoint_path);
  }

  return summary_from(cfg, cp.tallies, elapsed, flushed, units_total);
}

}  // namespace ordercheck
