#include "fibercone/fibercone.h"

#include <cstring>
#include <new>
#include <string>

#include "fibercone/depth.hpp"
#include "fibercone/serialize.hpp"
#include "fibercone/sweep.hpp"
#include "fibercone/worked_examples.hpp"

struct fc_ideal {
  fibercone::MonomialIdeal ideal;
};

struct fc_kernel {
  fibercone::KernelReport report;
  std::optional<fibercone::TruncationEvidence> evidence;
};

struct fc_classification {
  fibercone::Classification cl;
};

namespace {

thread_local std::string last_error;

fc_status status_of(fibercone::ErrorCode code) {
  using fibercone::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::Parse:
      return FC_INVALID_INPUT;
    case ErrorCode::Overflow:
      return FC_OVERFLOW;
    case ErrorCode::Inconclusive:
      return FC_INCONCLUSIVE;
    case ErrorCode::Mismatch:
      return FC_MISMATCH;
    case ErrorCode::StoreIntegrity:
      return FC_STORE_INTEGRITY;
    case ErrorCode::Io:
      return FC_IO;
  }
  return FC_INTERNAL;
}

template <class F>
fc_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return FC_OK;
  } catch (const fibercone::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const nlohmann::json::exception& e) {
    last_error = e.what();
    return FC_INVALID_INPUT;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return FC_RESOURCE_LIMIT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return FC_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) fibercone::fail(fibercone::ErrorCode::InvalidArgument, std::string("null ") + what);
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const fibercone::Json& j, char** out) {
  need(out, "output");
  *out = copy_string(j.dump());
}

std::vector<std::int64_t> vec(const int64_t* p, int n) {
  need(p, "array");
  fibercone::require(n > 0, "array length must be positive");
  return {p, p + n};
}

fibercone::Json evidence_json(const fibercone::TruncationEvidence& ev) {
  fibercone::Json j;
  j["window"] = ev.window;
  j["checked_through"] = ev.checked_through;
  j["first_defect"] = ev.first_defect ? fibercone::Json(*ev.first_defect) : fibercone::Json(nullptr);
  j["dimension_ok"] = ev.dimension_ok;
  j["sufficient"] = ev.sufficient;
  j["detail"] = ev.detail;
  return j;
}

}  // namespace

extern "C" {

const char* fc_last_error(void) { return last_error.c_str(); }

const char* fc_status_name(fc_status status) {
  switch (status) {
    case FC_OK:
      return "ok";
    case FC_INVALID_INPUT:
      return "invalid input";
    case FC_OVERFLOW:
      return "overflow";
    case FC_MISMATCH:
      return "mismatch";
    case FC_INCONCLUSIVE:
      return "inconclusive";
    case FC_RESOURCE_LIMIT:
      return "resource limit";
    case FC_STORE_INTEGRITY:
      return "store integrity";
    case FC_IO:
      return "io";
    case FC_INTERNAL:
      return "internal";
  }
  return "unknown";
}

void fc_string_free(char* s) { delete[] s; }

fc_status fc_ideal_parse(const char* text, int minimalize, fc_ideal** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "output");
    *out = new fc_ideal{fibercone::parse_ideal(text, minimalize != 0)};
  });
}

fc_status fc_ideal_symmetric(int64_t a, int64_t b, int64_t c, fc_ideal** out) {
  return guarded([&] {
    need(out, "output");
    *out = new fc_ideal{fibercone::symmetric_ideal(a, b, c)};
  });
}

fc_status fc_ideal_ci(int64_t a, int64_t b, int64_t c, int64_t d, fc_ideal** out) {
  return guarded([&] {
    need(out, "output");
    *out = new fc_ideal{fibercone::ci_ideal(a, b, c, d)};
  });
}

fc_status fc_ideal_hypersurface(const int64_t* a, const int64_t* b, int n, fc_ideal** out) {
  return guarded([&] {
    need(out, "output");
    *out = new fc_ideal{fibercone::hypersurface_ideal(vec(a, n), vec(b, n))};
  });
}

void fc_ideal_free(fc_ideal* ideal) { delete ideal; }

fc_status fc_ideal_to_json(const fc_ideal* ideal, char** json) {
  return guarded([&] {
    need(ideal, "ideal");
    emit(fibercone::to_json(ideal->ideal), json);
  });
}

fc_status fc_ideal_power_json(const fc_ideal* ideal, int k, char** json) {
  return guarded([&] {
    need(ideal, "ideal");
    fibercone::require(k >= 1, "power must be at least 1");
    fibercone::Json j;
    j["k"] = k;
    j["generators"] = fibercone::to_json(fibercone::power(ideal->ideal, k));
    j["mu_powers"] = fibercone::mu_power_sequence(ideal->ideal, k);
    emit(j, json);
  });
}

fc_status fc_member_strict(const fc_ideal* ideal, const int64_t* exps, int nvars, int k, int* result) {
  return guarded([&] {
    need(ideal, "ideal");
    need(result, "output");
    fibercone::require(static_cast<std::size_t>(nvars) == ideal->ideal.nvars(), "variable count mismatch");
    fibercone::require(k >= 1, "power must be at least 1");
    fibercone::ExponentVector m(vec(exps, nvars));
    *result = fibercone::member_strict(m, fibercone::power(ideal->ideal, k)) ? 1 : 0;
  });
}

fc_status fc_kernel_compute(const fc_ideal* ideal, int max_degree, fc_kernel** out) {
  return guarded([&] {
    need(ideal, "ideal");
    need(out, "output");
    *out = new fc_kernel{fibercone::compute_j(ideal->ideal, max_degree), std::nullopt};
  });
}

fc_status fc_kernel_compute_stable(const fc_ideal* ideal, int max_degree, fc_kernel** out) {
  return guarded([&] {
    need(ideal, "ideal");
    need(out, "output");
    fibercone::TruncationEvidence ev;
    auto report = fibercone::compute_stable_kernel(ideal->ideal, max_degree, &ev);
    *out = new fc_kernel{std::move(report), ev};
  });
}

void fc_kernel_free(fc_kernel* kernel) { delete kernel; }

fc_status fc_kernel_to_json(const fc_kernel* kernel, char** json) {
  return guarded([&] {
    need(kernel, "kernel");
    emit(fibercone::to_json(kernel->report), json);
  });
}

fc_status fc_kernel_evidence_json(const fc_kernel* kernel, char** json) {
  return guarded([&] {
    need(kernel, "kernel");
    auto ev = kernel->evidence ? *kernel->evidence : fibercone::truncation_evidence(kernel->report);
    emit(evidence_json(ev), json);
  });
}

fc_status fc_kernel_depth_json(const fc_kernel* kernel, uint32_t prime, int trials, uint64_t seed, char** json) {
  return guarded([&] {
    need(kernel, "kernel");
    emit(fibercone::to_json(fibercone::depth(kernel->report, prime, trials, seed)), json);
  });
}

fc_status fc_classify_symmetric(int64_t a, int64_t b, int64_t c, fc_classification** out) {
  return guarded([&] {
    need(out, "output");
    *out = new fc_classification{fibercone::classify_symmetric(a, b, c)};
  });
}

fc_status fc_classify_ci(int64_t a, int64_t b, int64_t c, int64_t d, fc_classification** out) {
  return guarded([&] {
    need(out, "output");
    *out = new fc_classification{fibercone::classify_ci(a, b, c, d)};
  });
}

fc_status fc_classify_hypersurface(const int64_t* a, const int64_t* b, int n, fc_classification** out) {
  return guarded([&] {
    need(out, "output");
    *out = new fc_classification{fibercone::classify_hypersurface(vec(a, n), vec(b, n))};
  });
}

fc_status fc_classification_certify(fc_classification* cl, int slack) {
  return guarded([&] {
    need(cl, "classification");
    cl->cl = fibercone::certify(std::move(cl->cl), slack);
    if (cl->cl.certification.status == fibercone::CertificationStatus::Mismatch)
      fibercone::fail(fibercone::ErrorCode::Mismatch, cl->cl.certification.detail);
  });
}

void fc_classification_free(fc_classification* cl) { delete cl; }

fc_status fc_classification_to_json(const fc_classification* cl, char** json) {
  return guarded([&] {
    need(cl, "classification");
    emit(fibercone::to_json(cl->cl), json);
  });
}

fc_status fc_classification_depth_json(const fc_classification* cl, uint32_t prime, int trials, uint64_t seed,
                                       char** json) {
  return guarded([&] {
    need(cl, "classification");
    emit(fibercone::to_json(fibercone::depth(cl->cl, prime, trials, seed)), json);
  });
}

fc_status fc_sweep_run(const char* spec_json, const char* store_path, int jobs, char** summary_json) {
  return guarded([&] {
    need(spec_json, "spec");
    need(store_path, "store");
    auto spec = fibercone::SweepSpec::from_json(fibercone::Json::parse(spec_json));
    emit(fibercone::run_sweep(spec, store_path, jobs).to_json(), summary_json);
  });
}

fc_status fc_sweep_summary_table(const char* summary_json, char** table) {
  return guarded([&] {
    need(summary_json, "summary");
    need(table, "output");
    auto j = fibercone::Json::parse(summary_json);
    fibercone::SweepSummary s;
    s.total = j.at("total");
    s.skipped = j.at("skipped");
    s.added = j.at("added");
    s.by_status = j.at("by_status").get<std::map<std::string, std::size_t>>();
    s.by_case = j.at("by_case").get<std::map<std::string, std::size_t>>();
    s.by_depth = j.at("by_depth").get<std::map<std::string, std::size_t>>();
    s.warnings = j.at("warnings").get<std::vector<std::string>>();
    *table = copy_string(s.table());
  });
}

fc_status fc_sweep_report(const char* store_path, char** report_json) {
  return guarded([&] {
    need(store_path, "store");
    emit(fibercone::report_conjecture(store_path).to_json(), report_json);
  });
}

fc_status fc_worked_examples(char** json, int* failures) {
  return guarded([&] {
    need(failures, "output");
    auto results = fibercone::run_worked_examples();
    fibercone::Json arr = fibercone::Json::array();
    int failed = 0;
    for (const auto& r : results) {
      failed += r.passed ? 0 : 1;
      arr.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
    }
    *failures = failed;
    emit(arr, json);
  });
}

}  // extern "C"
