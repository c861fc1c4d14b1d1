#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fibercone/fibercone.h"
#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Failure {
  fc_status status;
  std::string message;
};

void check(fc_status s) {
  if (s != FC_OK) throw Failure{s, fc_last_error()};
}

std::string take(char* s) {
  std::string out(s);
  fc_string_free(s);
  return out;
}

Json take_json(char* s) { return Json::parse(take(s)); }

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(p); }
};

using Ideal = Handle<fc_ideal, fc_ideal_free>;
using Kernel = Handle<fc_kernel, fc_kernel_free>;
using Class = Handle<fc_classification, fc_classification_free>;

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::vector<int64_t> int_list(const std::string& text) {
  std::vector<int64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw Failure{FC_INVALID_INPUT, "bad integer list '" + text + "'"};
    out.push_back(v);
  }
  if (out.empty()) throw Failure{FC_INVALID_INPUT, "empty integer list"};
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{FC_IO, "cannot read " + path};
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct ClassifyArgs {
  std::vector<int64_t> symmetric, ci;
  std::vector<std::string> hyper;
  bool certify = false;
  int slack = 3;
  bool depth = false;
};

int run_classify(const ClassifyArgs& a, uint32_t prime, int trials, uint64_t seed) {
  int chosen = !a.symmetric.empty() + !a.ci.empty() + !a.hyper.empty();
  if (chosen != 1) throw Failure{FC_INVALID_INPUT, "give exactly one of --symmetric, --ci, --hyper"};
  Class cl;
  if (!a.symmetric.empty()) {
    check(fc_classify_symmetric(a.symmetric[0], a.symmetric[1], a.symmetric[2], &cl.p));
  } else if (!a.ci.empty()) {
    check(fc_classify_ci(a.ci[0], a.ci[1], a.ci[2], a.ci[3], &cl.p));
  } else {
    auto av = int_list(a.hyper[0]), bv = int_list(a.hyper[1]);
    if (av.size() != bv.size()) throw Failure{FC_INVALID_INPUT, "aList and bList differ in length"};
    check(fc_classify_hypersurface(av.data(), bv.data(), int(av.size()), &cl.p));
  }
  fc_status cert = FC_OK;
  if (a.certify || a.depth) cert = fc_classification_certify(cl.p, a.slack);
  if (cert != FC_OK && cert != FC_MISMATCH) check(cert);
  char* s = nullptr;
  check(fc_classification_to_json(cl.p, &s));
  Json out = take_json(s);
  if (a.depth && cert == FC_OK) {
    check(fc_classification_depth_json(cl.p, prime, trials, seed, &s));
    out["depth_certificate"] = take_json(s);
  }
  print(out);
  return cert == FC_OK ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Defining ideals of fiber cones of monomial ideals"};
  app.require_subcommand(1);

  uint32_t prime = 32003;
  int trials = 64;
  uint64_t seed = 1;
  auto add_depth_flags = [&](CLI::App* cmd) {
    cmd->add_option("--prime", prime, "prime for random linear forms")->capture_default_str();
    cmd->add_option("--trials", trials, "nonzerodivisor attempts per stage")->capture_default_str()->check(
        CLI::PositiveNumber);
    cmd->add_option("--seed", seed, "random seed")->capture_default_str();
  };

  ClassifyArgs ca;
  auto* classify = app.add_subcommand("classify", "closed-form description of J");
  classify->add_option("--symmetric", ca.symmetric, "a b c")->expected(3);
  classify->add_option("--ci", ca.ci, "a b c d")->expected(4);
  classify->add_option("--hyper", ca.hyper, "aList bList, comma separated")->expected(2);
  classify->add_flag("--certify", ca.certify, "check against the oracle");
  classify->add_option("--slack", ca.slack, "degrees beyond the prediction")->capture_default_str()->check(
      CLI::NonNegativeNumber);
  classify->add_flag("--depth", ca.depth, "certify, then attach a depth certificate");
  add_depth_flags(classify);

  std::string ideal_text;
  int max_degree = 0;
  bool evidence = false;
  auto* kernel = app.add_subcommand("kernel", "J truncated at a degree bound");
  kernel->add_option("--ideal", ideal_text, "exponent tuples, e.g. \"4,0;3,2;2,3;0,4\"")->required();
  kernel->add_option("--max-degree", max_degree, "degree bound D")->required()->check(CLI::PositiveNumber);
  kernel->add_flag("--evidence", evidence, "attach truncation evidence");

  int depth_max = 30;
  auto* depth = app.add_subcommand("depth", "depth certificate of F(I)");
  depth->add_option("--ideal", ideal_text, "exponent tuples")->required();
  depth->add_option("--max-degree", depth_max, "cap for the stable kernel search")->capture_default_str()->check(
      CLI::PositiveNumber);
  add_depth_flags(depth);

  int power_k = 1;
  bool json = false;
  auto* powers = app.add_subcommand("powers", "minimal generator counts of I^k");
  powers->add_option("--ideal", ideal_text, "exponent tuples")->required();
  powers->add_option("--k", power_k, "largest power")->required()->check(CLI::PositiveNumber);
  powers->add_flag("--json", json, "JSON output");

  std::string spec_path, store_path;
  int jobs = 1;
  auto* sweep = app.add_subcommand("sweep", "resumable grid sweep");
  sweep->add_option("--spec", spec_path, "sweep spec JSON file")->required();
  sweep->add_option("--store", store_path, "JSONL store")->required();
  sweep->add_option("--jobs", jobs, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  sweep->add_flag("--json", json, "JSON summary");

  auto* report = app.add_subcommand("report", "depth-zero and Cohen-Macaulay findings in a store");
  report->add_option("--store", store_path, "JSONL store")->required();

  auto* verify = app.add_subcommand("verify-paper", "run every built-in worked example");
  verify->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    char* s = nullptr;
    if (*classify) return run_classify(ca, prime, trials, seed);

    Ideal ideal;
    if (*kernel || *depth || *powers) check(fc_ideal_parse(ideal_text.c_str(), 0, &ideal.p));

    if (*kernel) {
      Kernel k;
      check(fc_kernel_compute(ideal.p, max_degree, &k.p));
      check(fc_kernel_to_json(k.p, &s));
      Json out = take_json(s);
      if (evidence) {
        check(fc_kernel_evidence_json(k.p, &s));
        out["truncation_evidence"] = take_json(s);
      }
      print(out);
    } else if (*depth) {
      Kernel k;
      check(fc_kernel_compute_stable(ideal.p, depth_max, &k.p));
      check(fc_kernel_depth_json(k.p, prime, trials, seed, &s));
      print(take_json(s));
    } else if (*powers) {
      check(fc_ideal_power_json(ideal.p, power_k, &s));
      Json out = take_json(s);
      if (json) {
        print(out);
      } else {
        std::cout << "k\tmu(I^k)\n";
        int k = 1;
        for (const auto& mu : out.at("mu_powers")) std::cout << k++ << '\t' << mu.get<std::size_t>() << '\n';
      }
    } else if (*sweep) {
      std::string spec = read_file(spec_path);
      check(fc_sweep_run(spec.c_str(), store_path.c_str(), jobs, &s));
      std::string summary = take(s);
      if (json) {
        print(Json::parse(summary));
      } else {
        check(fc_sweep_summary_table(summary.c_str(), &s));
        std::cout << take(s);
      }
      Json parsed = Json::parse(summary);
      for (const auto& w : parsed.at("warnings")) std::cerr << "warning: " << w.get<std::string>() << '\n';
    } else if (*report) {
      check(fc_sweep_report(store_path.c_str(), &s));
      print(take_json(s));
    } else if (*verify) {
      int failures = 0;
      check(fc_worked_examples(&s, &failures));
      Json results = take_json(s);
      if (json) {
        print(results);
      } else {
        for (const auto& r : results) {
          std::cout << (r.at("passed").get<bool>() ? "PASS  " : "FAIL  ") << r.at("name").get<std::string>();
          if (!r.at("passed").get<bool>()) std::cout << "  (" << r.at("detail").get<std::string>() << ')';
          std::cout << '\n';
        }
        std::cout << results.size() - failures << '/' << results.size() << " examples passed\n";
      }
      return failures == 0 ? kExitOk : kExitFailure;
    }
    return kExitOk;
  } catch (const Failure& f) {
    std::cerr << "error (" << fc_status_name(f.status) << "): " << f.message << '\n';
    return f.status == FC_INVALID_INPUT ? kExitUsage : kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}
