#include <filesystem>
#include <fstream>
#include <numeric>

#include <unistd.h>

#include "doctest.h"
#include "fibercone/sweep.hpp"
#include "support.hpp"

using namespace fibercone;
namespace fs = std::filesystem;

namespace {

struct TempStore {
  fs::path path;
  explicit TempStore(const std::string& tag)
      : path(fs::temp_directory_path() / ("fibercone-test-" + tag + "-" + std::to_string(::getpid()) + ".jsonl")) {
    fs::remove(path);
  }
  ~TempStore() { fs::remove(path); }
};

std::vector<std::string> lines(const fs::path& p) {
  std::ifstream in(p);
  std::vector<std::string> out;
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

SweepSpec small_symmetric() {
  SweepSpec spec;
  spec.family = SweepFamily::Symmetric;
  spec.ranges["c"] = {3, 7};
  return spec;
}

std::vector<SweepRecord> without_runtime(std::vector<SweepRecord> records) {
  for (auto& r : records) r.runtime_ms = 0;
  std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
  return records;
}

}  // namespace

TEST_SUITE("sweep") {
  TEST_CASE("enumeration follows the family constraints") {
    SweepSpec spec;
    spec.family = SweepFamily::Symmetric;
    spec.ranges["c"] = {3, 15};
    std::size_t expect = 0;
    for (int c = 3; c <= 15; ++c)
      for (int b = 2; b < c; ++b)
        for (int a = 1; a < b; ++a)
          if (std::gcd(std::gcd(a, b), c) == 1 && a + b != c) ++expect;
    auto tasks = enumerate(spec);
    CHECK(tasks.size() == expect);
    CHECK(tasks.front().key == "symmetric:1,2,4");
    spec.include_balanced = true;
    CHECK(enumerate(spec).size() > expect);

    SweepSpec ci;
    ci.family = SweepFamily::CIFamily;
    std::size_t ci_expect = 0;
    for (int a = 1; a <= 5; ++a)
      for (int b = a; b <= 5; ++b)
        for (int c = 1; c < a; ++c)
          for (int d = b + 1; d < 2 * b; ++d)
            if (std::gcd(a, c) == 1 && std::gcd(b, d) == 1) ++ci_expect;
    CHECK(enumerate(ci).size() == ci_expect);

    SweepSpec g4;
    g4.family = SweepFamily::General4Gen;
    g4.ranges["a"] = {3, 4};
    g4.ranges["b"] = {3, 3};
    for (const auto& t : enumerate(g4)) {
      const auto& p = t.params;
      CHECK((p[0] > p[2] && p[2] > p[4] && p[4] > 0 && 0 < p[3] && p[3] < p[5] && p[5] < p[1]));
    }
  }

  TEST_CASE("spec JSON round trip and validation") {
    SweepSpec spec = small_symmetric();
    spec.seed = 9;
    SweepSpec back = SweepSpec::from_json(spec.to_json());
    CHECK(back.to_json() == spec.to_json());
    CHECK_THROWS_AS(SweepSpec::from_json(Json::parse(R"({"family":"nope"})")), Error);
    CHECK_THROWS_AS(SweepSpec::from_json(Json::parse(R"({"family":"ci","ranges":{"a":[5,2]}})")), Error);
    CHECK_THROWS_AS(SweepSpec::from_json(Json::parse(R"({"ranges":{}})")), Error);
  }

  TEST_CASE("records round trip through JSON") {
    SweepSpec spec = small_symmetric();
    for (const auto& t : enumerate(spec)) {
      SweepRecord r = run_task(spec, t);
      CHECK(SweepRecord::from_json(Json::parse(r.to_json().dump())) == r);
    }
  }

  TEST_CASE("sweeps are idempotent, deterministic and independent of jobs") {
    TempStore one("one"), four("four");
    SweepSpec spec = small_symmetric();
    SweepSummary s1 = run_sweep(spec, one.path, 1);
    CHECK(s1.added == enumerate(spec).size());
    SweepSummary again = run_sweep(spec, one.path, 1);
    CHECK(again.added == 0);
    CHECK(again.skipped == s1.added);
    CHECK(lines(one.path).size() == s1.added);
    run_sweep(spec, four.path, 4);
    CHECK(without_runtime(resume(one.path).records) == without_runtime(resume(four.path).records));
    for (const auto& r : resume(one.path).records) {
      CHECK(r.status == RecordStatus::Ok);
      CHECK((r.depth == 1 || r.depth == 2));
      CHECK(r.certification.rfind("CertifiedUpTo", 0) == 0);
    }
  }

  TEST_CASE("resume") {
    TempStore store("resume");
    CHECK(resume(store.path).keys.empty());
    SweepSpec spec = small_symmetric();
    auto tasks = enumerate(spec);
    for (int i = 0; i < 3; ++i) append_record(store.path, run_task(spec, tasks[std::size_t(i)]));
    CHECK(resume(store.path).keys.size() == 3);
  }

  TEST_CASE("a torn final line is truncated with a warning") {
    TempStore store("torn");
    SweepSpec spec = small_symmetric();
    auto tasks = enumerate(spec);
    for (int i = 0; i < 3; ++i) append_record(store.path, run_task(spec, tasks[std::size_t(i)]));
    auto full = lines(store.path);
    {
      std::ofstream out(store.path, std::ios::trunc);
      out << full[0] << '\n' << full[1] << '\n' << full[2].substr(0, full[2].size() / 2);
    }
    StoreContents c = resume(store.path);
    CHECK(c.keys.size() == 2);
    CHECK(c.warnings.size() == 1);
    CHECK(lines(store.path).size() == 2);
    SweepSummary s = run_sweep(spec, store.path, 2);
    CHECK(s.added == tasks.size() - 2);
    CHECK(resume(store.path).warnings.empty());
  }

  TEST_CASE("a corrupt interior line is a hard error") {
    TempStore store("corrupt");
    SweepSpec spec = small_symmetric();
    auto tasks = enumerate(spec);
    for (int i = 0; i < 3; ++i) append_record(store.path, run_task(spec, tasks[std::size_t(i)]));
    auto full = lines(store.path);
    {
      std::ofstream out(store.path, std::ios::trunc);
      out << full[0] << "\n{not json\n" << full[2] << '\n';
    }
    CHECK_THROWS_AS(resume(store.path), Error);
    try {
      resume(store.path);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::StoreIntegrity);
    }
    CHECK_THROWS_AS(run_sweep(spec, store.path), Error);
  }

  TEST_CASE("per-tuple errors become error records") {
    TempStore store("errors");
    SweepSpec spec;
    spec.family = SweepFamily::Explicit;
    spec.ideals = {"4,0;3,2;2,3;0,4", "4611686018427387904,0;0,4611686018427387904"};
    SweepSummary s = run_sweep(spec, store.path);
    CHECK(s.added == 2);
    CHECK(s.by_status["Error"] == 1);
    CHECK(s.by_status["Ok"] == 1);
    CHECK(report_conjecture(store.path).errors.size() == 1);
    spec.ideals = {"1,1;1,2"};
    CHECK_THROWS_AS(enumerate(spec), Error);
  }

  TEST_CASE("report on a seeded store") {
    TempStore store("seeded");
    MonomialIdeal intro = parse_ideal("25,0;20,5;19,19;5,20;0,25");
    SweepSpec spec;
    spec.family = SweepFamily::Explicit;
    append_record(store.path, record_for_ideal(intro, "explicit:" + format_ideal(intro), spec));
    ConjectureReport rep = report_conjecture(store.path);
    REQUIRE(rep.depth_zero.size() == 1);
    CHECK(rep.depth_zero.front().mu_i == 5);
    CHECK(rep.counterexamples().empty());
    Json j = rep.to_json();
    CHECK(j["depth_zero"][0]["annotation"] == "mu(I) = 5");
    CHECK(j["depth_zero"][0]["counterexample"] == false);
  }

  TEST_CASE("a synthetic depth-zero record with four generators is flagged") {
    TempStore store("synthetic");
    SweepRecord r;
    r.key = "general4:synthetic";
    r.family = "general4";
    r.ideal = "10,0;6,3;2,7;0,10";
    r.mu_i = 4;
    r.mu_j = 5;
    r.depth = 0;
    r.dimension = 2;
    r.cm = false;
    append_record(store.path, r);
    ConjectureReport rep = report_conjecture(store.path);
    CHECK(rep.counterexamples().size() == 1);
    CHECK(rep.to_json()["depth_zero"][0]["counterexample"] == true);
  }

  TEST_CASE("symmetric grid report is clean") {
    TempStore store("clean");
    SweepSpec spec = small_symmetric();
    spec.include_balanced = true;
    run_sweep(spec, store.path, 2);
    ConjectureReport rep = report_conjecture(store.path);
    CHECK(rep.depth_zero.empty());
    CHECK(rep.cm_violations.empty());
    CHECK(rep.inconclusive.empty());
    CHECK(rep.errors.empty());
  }
}

TEST_SUITE("serialize") {
  TEST_CASE("classification JSON") {
    Json j = to_json(certify(classify_symmetric(3, 8, 10)));
    CHECK(j["family"] == "SymmetricUp");
    CHECK(j["case"] == "iii");
    CHECK(j["params"]["m"] == 2);
    CHECK(j["certification"]["status"] == "CertifiedUpTo(6)");
    CHECK(j["predicted_cm"] == false);
    CHECK(j["predicted_generators"].size() == 4);
    Json balanced = to_json(classify_symmetric(1, 2, 3));
    CHECK(balanced["certification"]["status"] == "Pending");
  }

  TEST_CASE("kernel report JSON") {
    Json j = to_json(compute_j(symmetric_ideal(2, 3, 4), 4));
    CHECK(j["mu_J"] == 3);
    CHECK(j["degree_bound"] == 4);
    CHECK(j["statement"] == "complete up to degree 4");
    CHECK(j["generators"][0].contains("text"));
  }

  TEST_CASE("depth certificate JSON") {
    Json j = to_json(depth(certify(classify_symmetric(2, 9, 10))));
    CHECK(j["depth"] == 1);
    CHECK(j["prime"] == 32003);
    CHECK(j["regular_sequence"].size() == 1);
    CHECK(j["socle_witness"].is_string());
  }
}
