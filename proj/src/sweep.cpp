#include "fibercone/sweep.hpp"

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <deque>
#include <fstream>
#include <iterator>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

namespace fibercone {

namespace fs = std::filesystem;
using i64 = std::int64_t;

const char* to_string(SweepFamily f) {
  switch (f) {
    case SweepFamily::Symmetric: return "symmetric";
    case SweepFamily::CIFamily: return "ci";
    case SweepFamily::General4Gen: return "general4";
    case SweepFamily::Hypersurface: return "hypersurface";
    case SweepFamily::Explicit: return "explicit";
  }
  return "?";
}

SweepFamily parse_sweep_family(std::string_view name) {
  for (auto f : {SweepFamily::Symmetric, SweepFamily::CIFamily, SweepFamily::General4Gen, SweepFamily::Hypersurface,
                 SweepFamily::Explicit})
    if (name == to_string(f)) return f;
  fail(ErrorCode::Parse, "unknown sweep family '" + std::string(name) + "'");
}

const char* to_string(RecordStatus s) {
  switch (s) {
    case RecordStatus::Ok: return "Ok";
    case RecordStatus::Inconclusive: return "Inconclusive";
    case RecordStatus::Error: return "Error";
  }
  return "?";
}

namespace {

RecordStatus parse_status(const std::string& s) {
  for (auto v : {RecordStatus::Ok, RecordStatus::Inconclusive, RecordStatus::Error})
    if (s == to_string(v)) return v;
  fail(ErrorCode::Parse, "unknown record status '" + s + "'");
}

std::pair<i64, i64> default_range(SweepFamily f, const std::string& name) {
  switch (f) {
    case SweepFamily::Symmetric: return {3, 15};
    case SweepFamily::CIFamily: return {1, 5};
    case SweepFamily::General4Gen: return {3, 10};
    case SweepFamily::Hypersurface: return name == "n" ? std::pair<i64, i64>{2, 3} : std::pair<i64, i64>{2, 6};
    case SweepFamily::Explicit: break;
  }
  return {0, 0};
}

std::string join(const std::vector<i64>& v, std::size_t from, std::size_t to) {
  std::string out;
  for (std::size_t i = from; i < to; ++i) {
    if (i > from) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

SweepSpec SweepSpec::from_json(const Json& j) {
  try {
    SweepSpec spec;
    spec.family = parse_sweep_family(j.at("family").get<std::string>());
    if (j.contains("ranges"))
      for (const auto& [name, range] : j.at("ranges").items()) {
        auto lo = range.at(0).get<i64>(), hi = range.at(1).get<i64>();
        require(lo <= hi, "empty range for '" + name + "'");
        spec.ranges[name] = {lo, hi};
      }
    if (j.contains("ideals")) spec.ideals = j.at("ideals").get<std::vector<std::string>>();
    spec.include_balanced = j.value("include_balanced", spec.include_balanced);
    spec.degree_bound = j.value("degree_bound", spec.degree_bound);
    spec.slack = j.value("slack", spec.slack);
    spec.prime = j.value("prime", spec.prime);
    spec.trials = j.value("trials", spec.trials);
    spec.seed = j.value("seed", spec.seed);
    require(spec.degree_bound >= 2, "degree_bound must be at least 2");
    require(spec.slack >= 0, "slack must be nonnegative");
    require(spec.trials >= 1, "trials must be positive");
    return spec;
  } catch (const Json::exception& e) {
    fail(ErrorCode::Parse, std::string("bad sweep spec: ") + e.what());
  }
}

Json SweepSpec::to_json() const {
  Json out;
  out["family"] = fibercone::to_string(family);
  Json r = Json::object();
  for (const auto& [name, range] : ranges) r[name] = {range.first, range.second};
  out["ranges"] = std::move(r);
  if (!ideals.empty()) out["ideals"] = ideals;
  out["include_balanced"] = include_balanced;
  out["degree_bound"] = degree_bound;
  out["slack"] = slack;
  out["prime"] = prime;
  out["trials"] = trials;
  out["seed"] = seed;
  return out;
}

std::vector<SweepTask> enumerate(const SweepSpec& spec) {
  auto range = [&](const std::string& name) {
    auto it = spec.ranges.find(name);
    return it != spec.ranges.end() ? it->second : default_range(spec.family, name);
  };
  auto in = [&](const std::string& name, i64 v) {
    auto it = spec.ranges.find(name);
    return it == spec.ranges.end() || (it->second.first <= v && v <= it->second.second);
  };
  const std::string prefix = std::string(to_string(spec.family)) + ":";
  std::vector<SweepTask> out;
  switch (spec.family) {
    case SweepFamily::Symmetric: {
      auto [clo, chi] = range("c");
      for (i64 c = std::max<i64>(clo, 3); c <= chi; ++c)
        for (i64 b = 2; b < c; ++b)
          for (i64 a = 1; a < b; ++a) {
            if (!in("a", a) || !in("b", b) || std::gcd(std::gcd(a, b), c) != 1) continue;
            if (a + b == c && !spec.include_balanced) continue;
            std::vector<i64> p{a, b, c};
            out.push_back({prefix + join(p, 0, 3), p, ""});
          }
      break;
    }
    case SweepFamily::CIFamily: {
      auto [alo, ahi] = range("a");
      auto [blo, bhi] = range("b");
      for (i64 a = std::max<i64>(alo, 2); a <= ahi; ++a)
        for (i64 b = std::max(a, blo); b <= bhi; ++b)
          for (i64 c = 1; c < a; ++c)
            for (i64 d = b + 1; d < 2 * b; ++d) {
              if (!in("c", c) || !in("d", d) || std::gcd(a, c) != 1 || std::gcd(b, d) != 1) continue;
              std::vector<i64> p{a, b, c, d};
              out.push_back({prefix + join(p, 0, 4), p, ""});
            }
      break;
    }
    case SweepFamily::General4Gen: {
      // (x^a, x^c y^d, x^e y^f, y^b) with a > c > e > 0 and 0 < d < f < b.
      auto [alo, ahi] = range("a");
      auto [blo, bhi] = range("b");
      for (i64 a = std::max<i64>(alo, 3); a <= ahi; ++a)
        for (i64 b = std::max<i64>(blo, 3); b <= bhi; ++b)
          for (i64 c = 2; c < a; ++c)
            for (i64 e = 1; e < c; ++e)
              for (i64 d = 1; d < b; ++d)
                for (i64 f = d + 1; f < b; ++f) {
                  std::vector<i64> p{a, b, c, d, e, f};
                  out.push_back({prefix + join(p, 0, 6), p, ""});
                }
      break;
    }
    case SweepFamily::Hypersurface: {
      auto [nlo, nhi] = range("n");
      auto [alo, ahi] = range("a");
      require(alo >= 2 && nlo >= 2 && nhi <= 6, "hypersurface ranges need a >= 2 and 2 <= n <= 6");
      for (i64 n = nlo; n <= nhi; ++n) {
        std::vector<i64> a(size_t(n), alo), b(size_t(n), 1);
        while (true) {
          std::vector<i64> p = a;
          p.insert(p.end(), b.begin(), b.end());
          out.push_back({prefix + join(p, 0, size_t(n)) + "/" + join(p, size_t(n), p.size()), p, ""});
          std::size_t k = 0;
          for (; k < size_t(n); ++k) {
            if (b[k] + 1 < a[k]) {
              ++b[k];
              break;
            }
            b[k] = 1;
            if (a[k] < ahi) {
              ++a[k];
              break;
            }
            a[k] = alo;
          }
          if (k == size_t(n)) break;
        }
      }
      break;
    }
    case SweepFamily::Explicit:
      for (const auto& text : spec.ideals) {
        MonomialIdeal ideal = parse_ideal(text);
        out.push_back({prefix + format_ideal(ideal), {}, text});
      }
      break;
  }
  return out;
}

Json SweepRecord::to_json() const {
  Json out;
  out["key"] = key;
  out["family"] = family;
  out["params"] = params;
  out["ideal"] = ideal;
  out["mu_I"] = mu_i;
  out["mu_J"] = mu_j ? Json(*mu_j) : Json(nullptr);
  out["case"] = case_tag ? Json(*case_tag) : Json(nullptr);
  out["depth"] = depth ? Json(*depth) : Json(nullptr);
  out["dimension"] = dimension ? Json(*dimension) : Json(nullptr);
  out["cm"] = cm ? Json(*cm) : Json(nullptr);
  out["certification"] = certification;
  out["stability_window"] = stability_window ? Json(*stability_window) : Json(nullptr);
  out["runtime_ms"] = runtime_ms;
  out["status"] = fibercone::to_string(status);
  out["detail"] = detail;
  return out;
}

SweepRecord SweepRecord::from_json(const Json& j) {
  auto opt = [&]<typename T>(const char* name, std::optional<T>& field) {
    const Json& v = j.at(name);
    if (v.is_null())
      field.reset();
    else
      field = v.get<T>();
  };
  SweepRecord r;
  r.key = j.at("key").get<std::string>();
  r.family = j.at("family").get<std::string>();
  r.params = j.at("params").get<std::vector<i64>>();
  r.ideal = j.at("ideal").get<std::string>();
  r.mu_i = j.at("mu_I").get<std::size_t>();
  opt("mu_J", r.mu_j);
  opt("case", r.case_tag);
  opt("depth", r.depth);
  opt("dimension", r.dimension);
  opt("cm", r.cm);
  r.certification = j.at("certification").get<std::string>();
  opt("stability_window", r.stability_window);
  r.runtime_ms = j.at("runtime_ms").get<i64>();
  r.status = parse_status(j.at("status").get<std::string>());
  r.detail = j.at("detail").get<std::string>();
  return r;
}

namespace {

void fill_depth(SweepRecord& rec, const DepthCertificate& cert) {
  rec.depth = cert.depth;
  rec.dimension = cert.dimension;
  rec.cm = cert.cohen_macaulay();
}

void oracle_route(SweepRecord& rec, const MonomialIdeal& ideal, const SweepSpec& spec) {
  TruncationEvidence ev;
  KernelReport rep = compute_stable_kernel(ideal, spec.degree_bound, &ev);
  rec.mu_j = rep.mu();
  rec.stability_window = rep.stability_window;
  if (!ev.sufficient) {
    rec.status = RecordStatus::Inconclusive;
    rec.detail = "no trusted generator set up to degree " + std::to_string(rep.degree_bound) + ": " + ev.detail;
    return;
  }
  fill_depth(rec, depth(rep, spec.prime, spec.trials, spec.seed));
}

void certified_route(SweepRecord& rec, Classification cl, const SweepSpec& spec) {
  cl = certify(std::move(cl), spec.slack);
  rec.case_tag = cl.case_tag;
  rec.certification = certification_label(cl.certification);
  rec.mu_j = cl.predicted.size();
  if (!cl.certification.certified()) {
    rec.status = RecordStatus::Error;
    rec.detail = "certification mismatch";
    for (const auto& g : cl.certification.missing) rec.detail += "; missing " + g.to_string();
    for (const auto& g : cl.certification.unexpected) rec.detail += "; unexpected " + g.to_string();
    return;
  }
  DepthCertificate cert = depth(cl, spec.prime, spec.trials, spec.seed);
  fill_depth(rec, cert);
  if (cert.depth != cl.predicted_depth) {
    rec.status = RecordStatus::Error;
    rec.detail = "depth " + std::to_string(cert.depth) + " differs from predicted " + std::to_string(cl.predicted_depth);
  } else if (cl.predicted_cm && *cl.predicted_cm != cert.cohen_macaulay()) {
    rec.status = RecordStatus::Error;
    rec.detail = "Cohen-Macaulay status differs from prediction";
  }
}

template <typename F>
SweepRecord timed(SweepRecord rec, F&& body) {
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(rec);
  } catch (const Error& e) {
    rec.status = e.code() == ErrorCode::Inconclusive ? RecordStatus::Inconclusive : RecordStatus::Error;
    rec.detail = e.what();
  } catch (const std::exception& e) {
    rec.status = RecordStatus::Error;
    rec.detail = e.what();
  }
  auto t1 = std::chrono::steady_clock::now();
  rec.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return rec;
}

}  // namespace

SweepRecord record_for_ideal(const MonomialIdeal& ideal, const std::string& key, const SweepSpec& spec) {
  SweepRecord rec;
  rec.key = key;
  rec.family = to_string(SweepFamily::Explicit);
  rec.ideal = format_ideal(ideal);
  rec.mu_i = ideal.size();
  return timed(std::move(rec), [&](SweepRecord& r) { oracle_route(r, ideal, spec); });
}

SweepRecord run_task(const SweepSpec& spec, const SweepTask& task) {
  SweepRecord rec;
  rec.key = task.key;
  rec.family = to_string(spec.family);
  rec.params = task.params;
  return timed(std::move(rec), [&](SweepRecord& r) {
    const auto& p = task.params;
    switch (spec.family) {
      case SweepFamily::Symmetric: {
        if (p[0] + p[1] == p[2]) {
          MonomialIdeal ideal = symmetric_ideal(p[0], p[1], p[2]);
          r.ideal = format_ideal(ideal);
          r.mu_i = ideal.size();
          oracle_route(r, ideal, spec);
          if (r.status == RecordStatus::Ok) {
            DepthCertificate cert;
            cert.depth = *r.depth;
            cert.dimension = *r.dimension;
            assert_symmetric_cm_criterion(cert, *r.mu_j);
          }
          return;
        }
        Classification cl = classify_symmetric(p[0], p[1], p[2]);
        r.ideal = format_ideal(cl.ideal);
        r.mu_i = cl.ideal.size();
        certified_route(r, cl, spec);
        if (r.status == RecordStatus::Ok) {
          DepthCertificate cert;
          cert.depth = *r.depth;
          cert.dimension = *r.dimension;
          assert_symmetric_cm_criterion(cert, *r.mu_j);
        }
        return;
      }
      case SweepFamily::CIFamily: {
        Classification cl = classify_ci(p[0], p[1], p[2], p[3]);
        r.ideal = format_ideal(cl.ideal);
        r.mu_i = cl.ideal.size();
        certified_route(r, cl, spec);
        return;
      }
      case SweepFamily::Hypersurface: {
        const std::size_t n = p.size() / 2;
        std::vector<i64> a(p.begin(), p.begin() + n), b(p.begin() + n, p.end());
        Classification cl = classify_hypersurface(a, b);
        r.ideal = format_ideal(cl.ideal);
        r.mu_i = cl.ideal.size();
        certified_route(r, cl, spec);
        return;
      }
      case SweepFamily::General4Gen: {
        MonomialIdeal ideal({{p[0], 0}, {p[2], p[3]}, {p[4], p[5]}, {0, p[1]}});
        r.ideal = format_ideal(ideal);
        r.mu_i = ideal.size();
        oracle_route(r, ideal, spec);
        return;
      }
      case SweepFamily::Explicit: {
        MonomialIdeal ideal = parse_ideal(task.ideal_text);
        r.ideal = format_ideal(ideal);
        r.mu_i = ideal.size();
        oracle_route(r, ideal, spec);
        return;
      }
    }
  });
}

StoreContents resume(const fs::path& store) {
  StoreContents out;
  if (!fs::exists(store)) return out;
  std::string data;
  {
    std::ifstream in(store, std::ios::binary);
    if (!in) fail(ErrorCode::Io, "cannot read store " + store.string());
    data.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  std::size_t pos = 0, line_no = 0;
  while (pos < data.size()) {
    std::size_t end = data.find('\n', pos);
    const bool last = end == std::string::npos || end + 1 == data.size();
    if (end == std::string::npos) end = data.size();
    std::string_view line(data.data() + pos, end - pos);
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) {
      pos = end + 1;
      continue;
    }
    try {
      SweepRecord rec = SweepRecord::from_json(Json::parse(line));
      if (!out.keys.insert(rec.key).second)
        out.warnings.push_back("duplicate record for " + rec.key + " on line " + std::to_string(line_no) + " ignored");
      else
        out.records.push_back(std::move(rec));
      if (end == data.size()) {
        // Complete record without its newline: restore the terminator.
        std::ofstream app(store, std::ios::binary | std::ios::app);
        app << '\n';
      }
    } catch (const std::exception& e) {
      if (!last)
        fail(ErrorCode::StoreIntegrity, "corrupt record on line " + std::to_string(line_no) + " of " + store.string());
      fs::resize_file(store, pos);
      out.warnings.push_back("truncated torn final line " + std::to_string(line_no) + " of " + store.string());
    }
    pos = end + 1;
  }
  return out;
}

void append_record(const fs::path& store, const SweepRecord& record) {
  std::ofstream out(store, std::ios::binary | std::ios::app);
  if (!out) fail(ErrorCode::Io, "cannot append to store " + store.string());
  out << record.to_json().dump() << '\n';
  out.flush();
  if (!out) fail(ErrorCode::Io, "write to store " + store.string() + " failed");
}

Json SweepSummary::to_json() const {
  Json out;
  out["total"] = total;
  out["skipped"] = skipped;
  out["added"] = added;
  out["by_status"] = by_status;
  out["by_case"] = by_case;
  out["by_depth"] = by_depth;
  out["warnings"] = warnings;
  return out;
}

std::string SweepSummary::table() const {
  std::ostringstream out;
  out << "tuples " << total << "  added " << added << "  already stored " << skipped << '\n';
  auto section = [&](const char* title, const std::map<std::string, std::size_t>& m) {
    out << title << '\n';
    for (const auto& [k, v] : m) out << "  " << k << std::string(k.size() < 14 ? 14 - k.size() : 1, ' ') << v << '\n';
  };
  section("status", by_status);
  section("case", by_case);
  section("depth", by_depth);
  return out.str();
}

SweepSummary run_sweep(const SweepSpec& spec, const fs::path& store, int jobs) {
  require(jobs >= 1, "jobs must be positive");
  StoreContents existing = resume(store);
  std::vector<SweepTask> tasks = enumerate(spec);
  SweepSummary summary;
  summary.total = tasks.size();
  summary.warnings = existing.warnings;

  std::vector<const SweepTask*> todo;
  std::set<std::string> queued;
  for (const auto& t : tasks)
    if (!existing.keys.count(t.key) && queued.insert(t.key).second) todo.push_back(&t);
  summary.skipped = tasks.size() - todo.size();

  std::map<std::string, SweepRecord> fresh;
  auto write = [&](SweepRecord rec) {
    append_record(store, rec);
    fresh.emplace(rec.key, std::move(rec));
  };

  if (jobs == 1 || todo.size() <= 1) {
    for (const auto* t : todo) write(run_task(spec, *t));
  } else {
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::condition_variable ready;
    std::deque<SweepRecord> done;
    std::size_t finished_workers = 0;
    const int nworkers = std::min<int>(jobs, int(todo.size()));
    std::vector<std::thread> workers;
    for (int w = 0; w < nworkers; ++w)
      workers.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < todo.size();) {
          SweepRecord rec = run_task(spec, *todo[i]);
          std::lock_guard lock(mu);
          done.push_back(std::move(rec));
          ready.notify_one();
        }
        std::lock_guard lock(mu);
        ++finished_workers;
        ready.notify_one();
      });
    std::unique_lock lock(mu);
    std::exception_ptr write_error;
    while (true) {
      ready.wait(lock, [&] { return !done.empty() || finished_workers == std::size_t(nworkers); });
      while (!done.empty()) {
        SweepRecord rec = std::move(done.front());
        done.pop_front();
        lock.unlock();
        try {
          if (!write_error) write(std::move(rec));
        } catch (...) {
          write_error = std::current_exception();
        }
        lock.lock();
      }
      if (finished_workers == std::size_t(nworkers)) break;
    }
    lock.unlock();
    for (auto& w : workers) w.join();
    if (write_error) std::rethrow_exception(write_error);
  }
  summary.added = fresh.size();

  std::map<std::string, const SweepRecord*> by_key;
  for (const auto& r : existing.records) by_key.emplace(r.key, &r);
  for (const auto& [k, r] : fresh) by_key.emplace(k, &r);
  for (const auto& t : tasks) {
    auto it = by_key.find(t.key);
    if (it == by_key.end()) continue;
    const SweepRecord& r = *it->second;
    ++summary.by_status[to_string(r.status)];
    ++summary.by_case[r.case_tag.value_or("-")];
    ++summary.by_depth[r.depth ? std::to_string(*r.depth) : "-"];
  }
  return summary;
}

std::vector<SweepRecord> ConjectureReport::counterexamples() const {
  std::vector<SweepRecord> out;
  for (const auto& r : depth_zero)
    if (r.mu_i <= 4) out.push_back(r);
  return out;
}

Json ConjectureReport::to_json() const {
  auto brief = [](const SweepRecord& r) {
    Json j;
    j["key"] = r.key;
    j["ideal"] = r.ideal;
    j["mu_I"] = r.mu_i;
    j["mu_J"] = r.mu_j ? Json(*r.mu_j) : Json(nullptr);
    j["depth"] = r.depth ? Json(*r.depth) : Json(nullptr);
    j["cm"] = r.cm ? Json(*r.cm) : Json(nullptr);
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j;
  };
  Json out;
  out["records"] = records;
  Json zero = Json::array();
  for (const auto& r : depth_zero) {
    Json j = brief(r);
    j["counterexample"] = r.mu_i <= 4;
    j["annotation"] = "mu(I) = " + std::to_string(r.mu_i);
    zero.push_back(std::move(j));
  }
  out["depth_zero"] = std::move(zero);
  for (auto [name, list] : {std::pair<const char*, const std::vector<SweepRecord>*>{"cm_violations", &cm_violations},
                            {"inconclusive", &inconclusive},
                            {"errors", &errors}}) {
    Json arr = Json::array();
    for (const auto& r : *list) arr.push_back(brief(r));
    out[name] = std::move(arr);
  }
  out["counterexamples"] = counterexamples().size();
  return out;
}

ConjectureReport report_conjecture(const fs::path& store) {
  if (!fs::exists(store)) fail(ErrorCode::Io, "no store at " + store.string());
  StoreContents contents = resume(store);
  ConjectureReport rep;
  rep.records = contents.records.size();
  for (const auto& r : contents.records) {
    if (r.depth && *r.depth == 0) rep.depth_zero.push_back(r);
    if (r.cm && r.mu_j && *r.cm != (*r.mu_j <= 3)) rep.cm_violations.push_back(r);
    if (r.status == RecordStatus::Inconclusive) rep.inconclusive.push_back(r);
    if (r.status == RecordStatus::Error) rep.errors.push_back(r);
  }
  return rep;
}

}  // namespace fibercone
