// Command-line front end: sequence generation, identity verification,
// rank tables, and OEIS cross-checks for the binary partition counts.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bpc/count.hpp"
#include "bpc/oeis.hpp"
#include "bpc/partition.hpp"
#include "bpc/recurrence.hpp"
#include "bpc/steenrod.hpp"
#include "bpc/verify.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Stable exit codes, kept distinct so scripts can tell the outcomes apart.
constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;  // identity or comparison failure
constexpr int kExitUsage = 2;                // bad arguments or inputs
constexpr int kExitNetwork = 3;              // fetch failed or not available offline
constexpr int kExitInternal = 4;             // defect or unreadable data

struct SeqOptions {
  int m = -1;
  std::uint64_t count = 1;
  bool padded = false;
  std::string format = "table";
};

int run_seq(const SeqOptions& opt) {
  bpc::MemoTable memo;
  const std::vector<bpc::Count> values = opt.padded
                                             ? bpc::padded_sequence(opt.m, opt.count, memo)
                                             : bpc::stride_sequence(opt.m, opt.count, memo);
  if (opt.format == "csv") {
    for (std::size_t k = 0; k < values.size(); ++k)
      std::cout << (k ? "," : "") << values[k].str();
    std::cout << "\n";
  } else if (opt.format == "bfile") {
    for (std::size_t k = 0; k < values.size(); ++k)
      std::cout << k << " " << values[k].str() << "\n";
  } else if (opt.format == "json") {
    json out = json::array();
    for (std::size_t k = 0; k < values.size(); ++k)
      out.push_back({{"index", k}, {"value", values[k].str()}});
    std::cout << out.dump() << "\n";
  } else {  // table
    std::cout << "index value\n";
    for (std::size_t k = 0; k < values.size(); ++k)
      std::cout << k << " " << values[k].str() << "\n";
  }
  return kExitOk;
}

struct VerifyOptions {
  int m_max = 3;
  std::uint64_t n_max = 128;
  std::uint64_t cap = bpc::kDefaultEnumerationCap;
  std::vector<std::string> suites;
};

int run_verify(const VerifyOptions& opt) {
  bpc::MemoTable memo;
  std::vector<bpc::SuiteReport> reports;
  auto wants = [&opt](const std::string& name) {
    return opt.suites.empty() ||
           std::find(opt.suites.begin(), opt.suites.end(), name) != opt.suites.end();
  };

  if (wants("oracle"))
    reports.push_back(bpc::verify_oracle(-1, opt.m_max, opt.n_max, memo, opt.cap));
  if (wants("partial-sums")) {
    // absolute bound: family m checks the multiples of 2^(m+1) up to n_max
    bpc::SuiteReport merged{.suite = "partial-sums",
                            .scope = "m=0.." + std::to_string(opt.m_max) +
                                     " n<=" + std::to_string(opt.n_max)};
    for (int m = 0; m <= opt.m_max && !merged.failure; ++m) {
      auto part = bpc::verify_partial_sums(m, m, opt.n_max >> (m + 1), memo);
      merged.checked += part.checked;
      merged.failure = part.failure;
    }
    reports.push_back(std::move(merged));
  }
  if (wants("bijections"))
    reports.push_back(bpc::verify_bijections(opt.m_max, opt.n_max, memo, opt.cap));
  if (wants("lemma5"))
    reports.push_back(bpc::verify_closed_forms(opt.m_max, memo));

  bool all_ok = true;
  for (const auto& r : reports) {
    std::printf("%-14s %-24s %10llu identities   %s\n", r.suite.c_str(), r.scope.c_str(),
                static_cast<unsigned long long>(r.checked), r.ok() ? "ok" : "FAILED");
    if (!r.ok()) {
      all_ok = false;
      std::printf("  first failure at (m=%d, n=%llu): %s\n", r.failure->m,
                  static_cast<unsigned long long>(r.failure->n), r.failure->detail.c_str());
    }
  }
  std::printf("%s\n", all_ok ? "all selected suites passed" : "verification failed");
  return all_ok ? kExitOk : kExitVerificationFailure;
}

struct RankOptions {
  std::uint64_t j_max = 0;
  std::string format = "table";
  bool show_alt_f2 = false;
};

int run_rank(const RankOptions& opt) {
  bpc::MemoTable memo;
  const auto table = bpc::rank_table(opt.j_max, memo);
  std::vector<bpc::Count> alt;
  if (opt.show_alt_f2) {
    alt.reserve(table.size());
    for (const auto& rec : table)
      alt.push_back(bpc::free_rank_b2_constant_term(rec.j, memo));
  }

  if (opt.format == "csv") {
    std::cout << "j,alpha,D,b,f1,f2" << (opt.show_alt_f2 ? ",f2_alt" : "") << "\n";
    for (std::size_t i = 0; i < table.size(); ++i) {
      const auto& r = table[i];
      std::cout << r.j << "," << r.alpha << "," << r.shift << "," << r.summand_dim << ","
                << r.f1.str() << "," << r.f2.str();
      if (opt.show_alt_f2) std::cout << "," << alt[i].str();
      std::cout << "\n";
    }
  } else if (opt.format == "json") {
    json out = json::array();
    for (std::size_t i = 0; i < table.size(); ++i) {
      const auto& r = table[i];
      json row = {{"j", r.j},           {"alpha", r.alpha},        {"D", r.shift},
                  {"b", r.summand_dim}, {"f1", r.f1.str()},        {"f2", r.f2.str()}};
      if (opt.show_alt_f2) row["f2_alt"] = alt[i].str();
      out.push_back(std::move(row));
    }
    std::cout << out.dump() << "\n";
  } else if (opt.format == "bfile") {
    // b-file form keeps the (j, f1) columns
    for (const auto& r : table) std::cout << r.j << " " << r.f1.str() << "\n";
  } else {  // table
    std::cout << "j alpha D b f1 f2" << (opt.show_alt_f2 ? " f2_alt" : "") << "\n";
    for (std::size_t i = 0; i < table.size(); ++i) {
      const auto& r = table[i];
      std::cout << r.j << " " << r.alpha << " " << r.shift << " " << r.summand_dim << " "
                << r.f1.str() << " " << r.f2.str();
      if (opt.show_alt_f2) std::cout << " " << alt[i].str();
      std::cout << "\n";
    }
  }
  return kExitOk;
}

struct OeisOptions {
  std::string id;
  int m = -1;
  std::uint64_t count = 64;
  std::int64_t offset = 0;
  bool allow_fetch = false;
  std::string cache_dir;
  std::string fixtures_dir = "fixtures";
};

int run_oeis(const OeisOptions& opt) {
  if (!bpc::valid_oeis_id(opt.id)) {
    std::cerr << "malformed OEIS id \"" << opt.id << "\" (expected A followed by six digits)\n";
    return kExitUsage;
  }
  const fs::path cache =
      opt.cache_dir.empty() ? bpc::default_cache_dir() : fs::path(opt.cache_dir);

  bpc::BFile remote;
  const fs::path cached = cache / ("b" + opt.id.substr(1) + ".txt");
  const fs::path fixture = fs::path(opt.fixtures_dir) / ("b" + opt.id.substr(1) + ".txt");
  if (fs::exists(cached)) {
    remote = bpc::fetch(opt.id, cache, false);
  } else if (fs::exists(fixture)) {
    remote = bpc::load_bfile(fixture, opt.id);
  } else if (opt.allow_fetch) {
    remote = bpc::fetch(opt.id, cache, true);
  } else {
    std::cerr << opt.id << " is not cached under " << cache.string()
              << " and no fixture exists under " << opt.fixtures_dir
              << "; rerun with --fetch to download it\n";
    return kExitNetwork;
  }

  bpc::MemoTable memo;
  const auto local = bpc::stride_sequence(opt.m, opt.count, memo);
  const auto report = bpc::compare_sequence(local, remote, opt.offset);
  if (report.agree()) {
    std::cout << opt.id << ": " << report.compared
              << " overlapping terms agree with the family m=" << opt.m << " sequence\n";
    return kExitOk;
  }
  std::cout << opt.id << ": mismatch at index " << report.mismatch->index << ": local "
            << report.mismatch->local.str() << ", remote " << report.mismatch->remote.str()
            << " (" << report.compared << " terms compared)\n";
  return kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"binary partition counts: sequences, identity checks, rank tables"};
  app.require_subcommand(1);

  SeqOptions seq;
  auto* seq_cmd = app.add_subcommand("seq", "print a count sequence");
  seq_cmd->add_option("--m", seq.m, "family index (-1 for unrestricted)")
      ->required()
      ->check(CLI::Range(-1, bpc::kMaxFamilyIndex));
  seq_cmd->add_option("--count", seq.count, "number of terms")
      ->required()
      ->check(CLI::PositiveNumber);
  seq_cmd->add_flag("--padded", seq.padded, "emit r_m(0..count-1) with zeros instead of the stride form");
  seq_cmd->add_option("--format", seq.format, "output format")
      ->check(CLI::IsMember({"csv", "json", "bfile", "table"}));

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "run identity suites");
  verify_cmd->add_option("--m-max", verify.m_max, "largest family index")
      ->check(CLI::Range(0, bpc::kMaxFamilyIndex));
  verify_cmd->add_option("--n-max", verify.n_max, "largest total checked");
  verify_cmd->add_option("--cap", verify.cap, "enumeration cap for oracle checks");
  verify_cmd
      ->add_option("--suite", verify.suites,
                   "suites to run (default: all)")
      ->check(CLI::IsMember({"oracle", "partial-sums", "bijections", "lemma5"}));

  RankOptions rank;
  auto* rank_cmd = app.add_subcommand("rank", "print Brown-Gitler rank records");
  rank_cmd->add_option("--j-max", rank.j_max, "largest index")->required();
  rank_cmd->add_option("--format", rank.format, "output format")
      ->check(CLI::IsMember({"csv", "json", "bfile", "table"}));
  rank_cmd->add_flag("--show-alt-f2", rank.show_alt_f2,
                     "add the constant-summand variant column");

  OeisOptions oeis;
  auto* oeis_cmd = app.add_subcommand("oeis", "compare a family against an OEIS b-file");
  oeis_cmd->add_option("id", oeis.id, "OEIS id, e.g. A018819")->required();
  oeis_cmd->add_option("--m", oeis.m, "family index")
      ->required()
      ->check(CLI::Range(-1, bpc::kMaxFamilyIndex));
  oeis_cmd->add_option("--count", oeis.count, "local terms to compare")
      ->check(CLI::PositiveNumber);
  oeis_cmd->add_option("--offset", oeis.offset, "remote index aligned with local term 0");
  oeis_cmd->add_flag("--fetch", oeis.allow_fetch, "allow a network download on cache miss");
  oeis_cmd->add_option("--cache-dir", oeis.cache_dir,
                       "b-file cache (default: BPC_CACHE_DIR or ~/.cache/bpc)");
  oeis_cmd->add_option("--fixtures", oeis.fixtures_dir, "bundled b-file directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (seq_cmd->parsed()) return run_seq(seq);
    if (verify_cmd->parsed()) return run_verify(verify);
    if (rank_cmd->parsed()) return run_rank(rank);
    if (oeis_cmd->parsed()) return run_oeis(oeis);
  } catch (const bpc::NetworkError& e) {
    std::cerr << "network error: " << e.what() << "\n";
    return kExitNetwork;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
