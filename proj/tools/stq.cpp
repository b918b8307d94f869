#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "stq/errors.hpp"
#include "stq/io.hpp"
#include "stq/kl.hpp"
#include "stq/order.hpp"
#include "stq/steinberg.hpp"

namespace {

using namespace stq;

struct JobSpec {
  std::string command;
  std::string type;
  int p = 0;
  std::string weight;
  std::string format = "text";
  std::string cache;
  unsigned threads = 1;
  int length = 0;
  std::optional<std::uint64_t> seed;
  bool check_contention = false;
  bool quiet = false;
};

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

class Progress {
 public:
  explicit Progress(bool quiet) : quiet_(quiet) {}
  void note(const std::string& what) const {
    if (quiet_) return;
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    std::cerr << "[" << std::fixed << std::setprecision(2) << s << "s] " << what << "\n";
  }

 private:
  bool quiet_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::unique_ptr<KLTable> open_table(const RootSystem& rs, const JobSpec& job, const Progress& progress) {
  std::filesystem::path path = job.cache;
  if (path.empty()) {
    if (const char* dir = std::getenv("STQ_CACHE_DIR"); dir && *dir) {
      std::filesystem::create_directories(dir);
      path = std::filesystem::path(dir) / (rs.label() + ".klcache");
    }
  }
  if (path.empty()) return std::make_unique<KLTable>(rs);
  auto table = std::make_unique<KLTable>(rs, path);
  progress.note("KL cache " + path.string() + ": " + std::to_string(table->loaded()) + " records loaded");
  return table;
}

void emit_character(const CharacterRecord& r, const RootSystem& rs, const std::string& format) {
  if (format == "json") {
    std::cout << character_json(r) << "\n";
  } else if (format == "csv") {
    std::cout << "weight,coeff\n";
    for (const auto& [w, c] : r.terms) std::cout << "\"" << w.to_string() << "\"," << c << "\n";
  } else {
    std::cout << character_text(r, rs);
  }
}

int run(const JobSpec& job) {
  const RootSystem rs = RootSystem::from_label(job.type);
  const Progress progress(job.quiet);
  const bool needs_p = job.command != "weyl" && job.command != "klcache";
  const bool needs_weight = job.command != "klcache";
  if (needs_p && job.p == 0) throw PreconditionError(job.command + " needs -p");
  if (job.p != 0 && !is_prime(job.p)) throw PreconditionError(std::to_string(job.p) + " is not prime");
  std::optional<Weight> lambda;
  if (needs_weight) {
    if (job.weight.empty()) throw PreconditionError(job.command + " needs -w");
    lambda = Weight::parse(job.weight);
    if (lambda->rank() != rs.rank())
      throw PreconditionError("weight " + lambda->to_string() + " has " + std::to_string(lambda->rank()) +
                              " coordinates, " + rs.label() + " needs " + std::to_string(rs.rank()));
    if (!lambda->is_dominant()) throw PreconditionError("weight " + lambda->to_string() + " is not dominant");
  }
  const std::optional<int> p = job.p ? std::optional<int>(job.p) : std::nullopt;
  CharacterRing ring(rs);
  SteinbergOptions options{.threads = job.threads, .tie_break_seed = job.seed,
                           .check_contention = job.check_contention};

  if (job.command == "weyl") {
    emit_character(make_record(ring.freudenthal(*lambda), rs.label(), p), rs, job.format);
  } else if (job.command == "downset") {
    const AffineContext ctx(rs, job.p);
    const auto psi = report_order(up_down_set(*lambda, ctx), rs);
    if (job.format == "json") {
      std::cout << weights_json(psi, rs.label(), p) << "\n";
    } else if (job.format == "csv") {
      std::cout << weights_csv(psi);
    } else {
      std::cout << "count " << psi.size() << "\n";
      for (const Weight& w : psi) std::cout << w.to_string() << "\n";
    }
  } else if (job.command == "mp") {
    const AffineContext ctx(rs, job.p);
    const OrbitCharacter M = minimal_character(*lambda, ctx, ring, options);
    progress.note("M_p(" + lambda->to_string() + "): " + std::to_string(M.size()) + " orbits");
    emit_character(make_record(M, rs.label(), p), rs, job.format);
  } else if (job.command == "tzeta") {
    const AffineContext ctx(rs, job.p);
    auto table = open_table(rs, job, progress);
    const OrbitCharacter t = t_zeta(*lambda, ctx, ring, *table);
    table->flush();
    progress.note("t_zeta(" + lambda->to_string() + "): " + std::to_string(t.size()) + " orbits");
    emit_character(make_record(t, rs.label(), p), rs, job.format);
  } else if (job.command == "compare") {
    const AffineContext ctx(rs, job.p);
    auto table = open_table(rs, job, progress);
    const SteinbergReport report = compare(*lambda, ctx, ring, *table, options);
    table->flush();
    progress.note("compared " + std::to_string(report.rows.size()) + " orbits");
    if (job.format == "json") {
      std::cout << report_json(report, rs.label()) << "\n";
    } else if (job.format == "csv") {
      std::cout << report_csv(report);
    } else {
      std::cout << report_text(report);
    }
  } else if (job.command == "klcache") {
    if (job.length <= 0) throw PreconditionError("klcache needs --length > 0");
    auto table = open_table(rs, job, progress);
    const std::size_t columns = warm_kl_table(*table, job.length);
    table->flush();
    std::cout << "columns " << columns << "\nentries " << table->size() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steinberg quotient characters, minimal good-multiplication characters and their comparison"};
  app.require_subcommand(1);
  app.fallthrough();
  JobSpec job;
  app.add_flag("-q,--quiet", job.quiet, "Suppress progress messages on stderr");

  auto add = [&](const std::string& name, const std::string& help, bool uses_p, bool uses_weight) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("type", job.type, "Root system label, e.g. A3")->required();
    if (uses_p) sub->add_option("-p,--prime", job.p, "The prime p");
    if (uses_weight) sub->add_option("-w,--weight", job.weight, "Dominant weight, e.g. 4,4,4")->required();
    sub->add_option("--format", job.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("-j,--jobs", job.threads, "Worker threads")->check(CLI::PositiveNumber);
    sub->callback([&job, name] { job.command = name; });
    return sub;
  };
  add("weyl", "Weyl character chi(lambda) in the orbit basis", true, true);
  add("downset", "Dominant weights mu with (mu - rho) linked below (lambda - rho)", true, true);
  for (auto* sub : {add("mp", "Minimal character with good Steinberg multiplication", true, true),
                    add("compare", "Compare t_zeta and M_p orbit by orbit", true, true)}) {
    sub->add_option("--seed", job.seed, "Random tie-break among incomparable candidates");
    sub->add_flag("--check-contention", job.check_contention, "Verify that simultaneous candidates never share a target");
  }
  for (auto* sub : {add("tzeta", "Quantum Steinberg quotient from the Lusztig character formula", true, true),
                    app.get_subcommand("compare"), add("klcache", "Pre-compute Kazhdan-Lusztig columns", false, false)})
    sub->add_option("--cache", job.cache, "KL cache file (default: $STQ_CACHE_DIR/<type>.klcache)");
  app.get_subcommand("klcache")->add_option("--length", job.length, "Largest alcove length")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  try {
    return run(job);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
