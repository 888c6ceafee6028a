#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hefib/json_io.hpp"

namespace {

using hefib::Int;
using hefib::Json;
using hefib::Rat;

enum class Format { Json, Tsv, Markdown, Text };

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "tsv") return Format::Tsv;
  if (s == "markdown") return Format::Markdown;
  if (s == "text") return Format::Text;
  throw hefib::ValidationError("unknown format \"" + s + "\"");
}

std::string error_json(const std::string& type, const std::string& message) {
  Json e;
  e["type"] = type;
  e["message"] = message;
  Json j;
  j["error"] = e;
  return j.dump();
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

int parse_int(const std::string& s, const char* what) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw hefib::ValidationError(std::string("cannot parse ") + what +
                                 " from \"" + s + "\"");
  }
}

Int parse_big(const std::string& s, const char* what) {
  try {
    return Int(s);
  } catch (const std::exception&) {
    throw hefib::ValidationError(std::string("cannot parse ") + what +
                                 " from \"" + s + "\"");
  }
}

// Index tokens look like `g=7 s2=30 s6=1`; g is mandatory.
hefib::SingularityIndices parse_indices(const std::vector<std::string>& tokens) {
  hefib::SingularityIndices si;
  bool saw_g = false;
  for (const auto& t : tokens) {
    auto eq = t.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == t.size())
      throw hefib::ValidationError("index token \"" + t +
                                   "\" is not of the form name=value");
    const std::string name = t.substr(0, eq);
    const std::string value = t.substr(eq + 1);
    if (name == "g") {
      si.g = parse_int(value, "fiber genus");
      saw_g = true;
    } else if (name.size() > 1 && name[0] == 's') {
      const int j = parse_int(name.substr(1).c_str(), "index subscript");
      si.set(j, parse_big(value, ("value of " + name).c_str()));
    } else {
      throw hefib::ValidationError("unknown index token \"" + t +
                                   "\" (expected g=... or s<j>=...)");
    }
  }
  if (!saw_g) throw hefib::ValidationError("missing g=<fiber genus> token");
  return si;
}

std::string indices_compact(const hefib::SingularityIndices& si) {
  std::string out;
  for (const auto& [j, v] : si.s) {
    if (!out.empty()) out += ",";
    out += "s" + std::to_string(j) + "=" + v.str();
  }
  return out.empty() ? "-" : out;
}

std::string divisor_compact(const hefib::DivisorClass& d) {
  std::string out =
      "(" + std::to_string(d.a) + ", " + std::to_string(d.b) + ", [";
  for (size_t i = 0; i < d.exc.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(d.exc[i]);
  }
  return out + "])";
}

Json decimal_block(const hefib::FibrationNumerics& nu) {
  Json d;
  d["authoritative"] = false;
  d["chi"] = hefib::rat_to_decimal(nu.chi);
  d["ksq"] = hefib::rat_to_decimal(nu.ksq);
  d["e"] = hefib::rat_to_decimal(nu.e);
  d["n"] = hefib::rat_to_decimal(nu.n);
  if (nu.lambda) d["lambda"] = hefib::rat_to_decimal(*nu.lambda);
  return d;
}

// ---------------------------------------------------------------------------
// invariants

struct InvariantsOpts {
  std::vector<std::string> tokens;
  int b = 1;
  bool no_n_parity = false;
  std::string format = "json";
  bool decimal = false;
};

int run_invariants(const InvariantsOpts& o) {
  const auto si = parse_indices(o.tokens);
  const auto nu = hefib::compute_numerics(si, o.b, !o.no_n_parity);
  switch (parse_format(o.format)) {
    case Format::Json: {
      Json j;
      j["indices"] = hefib::to_json(si);
      j["numerics"] = hefib::to_json(nu);
      if (o.decimal) j["decimal"] = decimal_block(nu);
      print_json(j);
      break;
    }
    case Format::Tsv: {
      std::cout << "g\tb\tn\tchi\tksq\te\tlambda\tindices\n"
                << nu.g << "\t" << nu.b << "\t" << hefib::rat_to_string(nu.n)
                << "\t" << hefib::rat_to_string(nu.chi) << "\t"
                << hefib::rat_to_string(nu.ksq) << "\t"
                << hefib::rat_to_string(nu.e) << "\t"
                << (nu.lambda ? hefib::rat_to_string(*nu.lambda) : "-") << "\t"
                << indices_compact(si) << "\n";
      break;
    }
    case Format::Markdown: {
      std::cout << "| quantity | value |\n|---|---:|\n";
      std::cout << "| g | " << nu.g << " |\n";
      std::cout << "| b | " << nu.b << " |\n";
      std::cout << "| n | " << hefib::rat_to_string(nu.n) << " |\n";
      std::cout << "| chi | " << hefib::rat_to_string(nu.chi) << " |\n";
      std::cout << "| K^2 | " << hefib::rat_to_string(nu.ksq) << " |\n";
      std::cout << "| e | " << hefib::rat_to_string(nu.e) << " |\n";
      std::cout << "| lambda | "
                << (nu.lambda ? hefib::rat_to_string(*nu.lambda) : "-")
                << " |\n";
      break;
    }
    case Format::Text:
      throw hefib::ValidationError("invariants supports json, tsv, markdown");
  }
  return 0;
}

// ---------------------------------------------------------------------------
// bound

struct BoundOpts {
  std::string chi;
  int b = 1;
  std::string ksq;
  std::string lambda;
  std::string n;
  std::string format = "json";
  bool decimal = false;
};

int run_bound(const BoundOpts& o) {
  const Rat chi = hefib::rat_from_string(o.chi);
  std::optional<Rat> ksq, lambda;
  std::optional<Int> n;
  if (!o.ksq.empty()) ksq = hefib::rat_from_string(o.ksq);
  if (!o.lambda.empty()) lambda = hefib::rat_from_string(o.lambda);
  if (!o.n.empty()) n = parse_big(o.n, "n");
  const auto bounds = hefib::applicable_bounds(chi, o.b, ksq, lambda, n);
  switch (parse_format(o.format)) {
    case Format::Json: {
      Json j;
      j["chi"] = hefib::rat_to_string(chi);
      j["b"] = o.b;
      if (ksq) j["ksq"] = hefib::rat_to_string(*ksq);
      if (lambda) j["lambda"] = hefib::rat_to_string(*lambda);
      if (n) j["n"] = n->str();
      Json rows = Json::array();
      for (const auto& gb : bounds) {
        Json row = hefib::to_json(gb);
        if (o.decimal) row["value_decimal"] = hefib::rat_to_decimal(gb.value);
        rows.push_back(row);
      }
      j["bounds"] = rows;
      print_json(j);
      break;
    }
    case Format::Tsv: {
      std::cout << "source\tvalue\tfloor\tin_domain\n";
      for (const auto& gb : bounds)
        std::cout << hefib::to_string(gb.source) << "\t"
                  << hefib::rat_to_string(gb.value) << "\t"
                  << gb.floor_value.str() << "\t"
                  << (gb.in_domain ? "yes" : "no") << "\n";
      break;
    }
    case Format::Markdown: {
      std::cout << "| source | value | floor | in domain |\n"
                << "|---|---:|---:|---|\n";
      for (const auto& gb : bounds)
        std::cout << "| " << hefib::to_string(gb.source) << " | "
                  << hefib::rat_to_string(gb.value) << " | "
                  << gb.floor_value.str() << " | "
                  << (gb.in_domain ? "yes" : "no") << " |\n";
      break;
    }
    case Format::Text:
      throw hefib::ValidationError("bound supports json, tsv, markdown");
  }
  return 0;
}

// ---------------------------------------------------------------------------
// enumerate

struct EnumerateOpts {
  std::string chi = "1";
  int b = 1;
  std::string g_range = "2..60";
  std::string s2_mode = "any";
  std::string slope_cap = "miyaoka-yau";
  std::string cap;
  bool no_n_parity = false;
  std::string ksq_min;
  std::string ksq_max;
  bool table = false;
  std::string format = "json";
};

std::pair<int, int> parse_g_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const int g = parse_int(s, "genus range");
    return {g, g};
  }
  return {parse_int(s.substr(0, dots), "genus range low end"),
          parse_int(s.substr(dots + 2), "genus range high end")};
}

hefib::S2Mode parse_s2_mode(const std::string& s) {
  if (s == "nonnegative") return hefib::S2Mode::NonNegative;
  if (s == "negative") return hefib::S2Mode::Negative;
  if (s == "any") return hefib::S2Mode::Any;
  throw hefib::ValidationError("unknown s2 mode \"" + s + "\"");
}

hefib::SlopeCapKind parse_cap_kind(const std::string& s) {
  if (s == "miyaoka-yau") return hefib::SlopeCapKind::MiyaokaYau9;
  if (s == "hyperelliptic") return hefib::SlopeCapKind::Hyperelliptic;
  if (s == "custom") return hefib::SlopeCapKind::Custom;
  throw hefib::ValidationError("unknown slope cap \"" + s + "\"");
}

Json spec_json(const hefib::SearchSpec& spec) {
  Json j;
  j["chi"] = hefib::rat_to_string(spec.chi);
  j["b"] = spec.b;
  j["g_lo"] = spec.g_lo;
  j["g_hi"] = spec.g_hi;
  j["s2_mode"] = hefib::to_string(spec.s2_mode);
  j["slope_cap"] = hefib::to_string(spec.cap_kind);
  if (spec.cap_kind == hefib::SlopeCapKind::Custom)
    j["custom_cap"] = hefib::rat_to_string(spec.custom_cap);
  j["require_n_parity"] = spec.require_n_parity;
  if (spec.ksq_lo) j["ksq_min"] = spec.ksq_lo->str();
  if (spec.ksq_hi) j["ksq_max"] = spec.ksq_hi->str();
  return j;
}

int run_classify_table(Format fmt) {
  const auto res = hefib::classify_pg_q_1();
  switch (fmt) {
    case Format::Json:
      print_json(hefib::to_json(res));
      break;
    case Format::Tsv: {
      std::cout << "ksq\tgenera\n";
      for (const auto& [ksq, genera] : res.table) {
        std::string row;
        for (const int g : genera) {
          if (!row.empty()) row += ",";
          row += std::to_string(g);
        }
        std::cout << ksq.str() << "\t" << row << "\n";
      }
      break;
    }
    case Format::Markdown: {
      std::cout << "| K^2 | fiber genera |\n|---:|---|\n";
      for (const auto& [ksq, genera] : res.table) {
        std::string row;
        for (const int g : genera) {
          if (!row.empty()) row += ", ";
          row += std::to_string(g);
        }
        std::cout << "| " << ksq.str() << " | " << row << " |\n";
      }
      std::cout << "\nmatches reference: "
                << (res.matches_reference ? "yes" : "no")
                << "; discrepancies: " << res.discrepancies.size() << "\n";
      break;
    }
    case Format::Text:
      throw hefib::ValidationError("enumerate supports json, tsv, markdown");
  }
  return res.high_genus_rows_match ? 0 : 1;
}

int run_enumerate(const EnumerateOpts& o) {
  const Format fmt = parse_format(o.format);
  if (o.table) {
    const Rat chi = hefib::rat_from_string(o.chi);
    if (chi != 1 || o.b != 1)
      throw hefib::ValidationError(
          "--table is the chi = 1, b = 1 census; it does not take other "
          "search parameters");
    return run_classify_table(fmt);
  }
  hefib::SearchSpec spec;
  spec.chi = hefib::rat_from_string(o.chi);
  spec.b = o.b;
  std::tie(spec.g_lo, spec.g_hi) = parse_g_range(o.g_range);
  spec.s2_mode = parse_s2_mode(o.s2_mode);
  spec.cap_kind = parse_cap_kind(o.slope_cap);
  if (!o.cap.empty()) {
    if (spec.cap_kind != hefib::SlopeCapKind::Custom)
      throw hefib::ValidationError("--cap requires --slope-cap custom");
    spec.custom_cap = hefib::rat_from_string(o.cap);
  }
  spec.require_n_parity = !o.no_n_parity;
  if (!o.ksq_min.empty()) spec.ksq_lo = parse_big(o.ksq_min, "ksq minimum");
  if (!o.ksq_max.empty()) spec.ksq_hi = parse_big(o.ksq_max, "ksq maximum");
  spec.validate();

  const auto cases = hefib::enumerate_cases(spec);
  switch (fmt) {
    case Format::Json: {
      Json j;
      j["spec"] = spec_json(spec);
      j["count"] = cases.size();
      Json rows = Json::array();
      for (const auto& c : cases) rows.push_back(hefib::to_json(c));
      j["cases"] = rows;
      print_json(j);
      break;
    }
    case Format::Tsv: {
      std::cout << "g\tksq\tn\te\tlambda\tindices\n";
      for (const auto& c : cases)
        std::cout << c.g() << "\t" << c.ksq().str() << "\t" << c.n().str()
                  << "\t" << hefib::rat_to_string(c.numerics.e) << "\t"
                  << (c.numerics.lambda
                          ? hefib::rat_to_string(*c.numerics.lambda)
                          : "-")
                  << "\t" << indices_compact(c.indices) << "\n";
      break;
    }
    case Format::Markdown: {
      std::cout << "| g | K^2 | n | e | lambda | indices |\n"
                << "|---:|---:|---:|---:|---:|---|\n";
      for (const auto& c : cases)
        std::cout << "| " << c.g() << " | " << c.ksq().str() << " | "
                  << c.n().str() << " | " << hefib::rat_to_string(c.numerics.e)
                  << " | "
                  << (c.numerics.lambda
                          ? hefib::rat_to_string(*c.numerics.lambda)
                          : "-")
                  << " | " << indices_compact(c.indices) << " |\n";
      break;
    }
    case Format::Text:
      throw hefib::ValidationError("enumerate supports json, tsv, markdown");
  }
  return 0;
}

// ---------------------------------------------------------------------------
// examples verify / sweep

struct VerifyOpts {
  std::string family;
  long long k = 0;
  bool k_set = false;
  long long m = 0;
  bool m_set = false;
  std::string n;
  std::string chi;
  bool ample = false;
  long long box = 60;
  long long extended_box = 600;
  std::string format = "text";
};

hefib::ExampleFamily parse_family(const std::string& s) {
  if (s == "ex51") return hefib::ExampleFamily::Ex51;
  if (s == "ex52") return hefib::ExampleFamily::Ex52;
  if (s == "ex53") return hefib::ExampleFamily::Ex53;
  throw hefib::ValidationError("unknown family \"" + s + "\"");
}

hefib::ExampleParams make_params(const VerifyOpts& o) {
  hefib::ExampleParams p;
  p.family = parse_family(o.family);
  if (o.k_set) p.k = o.k;
  if (o.m_set) p.m = o.m;
  if (!o.n.empty()) p.n = parse_big(o.n, "n");
  if (!o.chi.empty()) p.chi = hefib::rat_from_string(o.chi);
  return p;
}

std::string params_label(const hefib::ExampleParams& p) {
  std::string out = hefib::to_string(p.family);
  if (p.family != hefib::ExampleFamily::Ex53) {
    out += " k=" + std::to_string(p.k);
    if (p.m) out += " m=" + std::to_string(*p.m);
  } else {
    out += " n=" + p.n.str() + " chi=" + hefib::rat_to_string(p.chi);
  }
  return out;
}

hefib::CheckLine ample_check(const hefib::ExampleParams& p, long long box,
                             long long extended_box,
                             hefib::MinPairing* out = nullptr) {
  const auto probe = hefib::ample_test_divisor(p);
  const auto mp =
      hefib::min_L_dot_D(probe.model, probe.l, probe.constraints, box,
                         extended_box);
  if (out) *out = mp;
  hefib::CheckLine cl;
  cl.name = "pairing minimum over curve classes";
  cl.pass = mp.minimum >= 1 && mp.stable;
  cl.detail = "min L.D = " + mp.minimum.str() + " at " +
              divisor_compact(mp.witness) + " [" + mp.witness_kind +
              "], boxes " + std::to_string(box) + "/" +
              std::to_string(extended_box) +
              (mp.stable ? ", stable under box growth" : ", NOT stable");
  return cl;
}

void print_report_text(const std::string& label,
                       const hefib::VerifyReport& rep) {
  std::cout << label << "\n";
  int failed = 0;
  for (const auto& c : rep.checks) {
    std::cout << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name << ": "
              << c.detail << "\n";
    if (!c.pass) ++failed;
  }
  if (failed == 0)
    std::cout << "all checks passed\n";
  else
    std::cout << failed << (failed == 1 ? " check failed\n" : " checks failed\n");
}

int run_verify(const VerifyOpts& o) {
  const Format fmt = parse_format(o.format);
  const auto p = make_params(o);
  const auto ex = hefib::build_example(p);
  auto rep = hefib::verify_example(ex);
  std::optional<hefib::MinPairing> mp;
  if (o.ample) {
    hefib::MinPairing got;
    auto cl = ample_check(p, o.box, o.extended_box, &got);
    rep.ok = rep.ok && cl.pass;
    rep.checks.push_back(std::move(cl));
    mp = std::move(got);
  }
  switch (fmt) {
    case Format::Text:
      print_report_text(params_label(p), rep);
      break;
    case Format::Json: {
      Json j;
      j["surface"] = hefib::to_json(ex);
      j["report"] = hefib::to_json(rep);
      if (mp) j["ample_probe"] = hefib::to_json(*mp);
      print_json(j);
      break;
    }
    case Format::Tsv:
    case Format::Markdown:
      throw hefib::ValidationError("examples verify supports text, json");
  }
  return rep.ok ? 0 : 1;
}

struct SweepConfig {
  std::vector<long long> ex51_k = {3, 5, 7, 9, 11};
  std::vector<long long> ex52_k = {1, 3, 5, 7};
  long long ex53_chi_min = 6;
  long long ex53_chi_max = 20;
  bool ample = false;
  long long box = 60;
  long long extended_box = 600;
};

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<long long> parse_ll_list(const std::string& s, const char* what) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty())
      throw hefib::ValidationError(std::string("empty entry in ") + what);
    try {
      size_t pos = 0;
      out.push_back(std::stoll(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw hefib::ValidationError(std::string("cannot parse ") + what +
                                   " entry \"" + item + "\"");
    }
  }
  if (out.empty())
    throw hefib::ValidationError(std::string("empty list for ") + what);
  return out;
}

bool parse_bool(const std::string& s, const char* what) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw hefib::ValidationError(std::string(what) + " must be true or false");
}

// Flat key = value lines; a [section] header prefixes the keys below it
// with "section.". Comments start with #.
SweepConfig parse_sweep_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw hefib::ValidationError("cannot open config \"" + path + "\"");
  SweepConfig cfg;
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[' && line.back() == ']') {
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw hefib::ValidationError("config line " + std::to_string(lineno) +
                                   " is not key = value");
    std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!section.empty()) key = section + "." + key;
    if (key == "ex51.k")
      cfg.ex51_k = parse_ll_list(value, "ex51.k");
    else if (key == "ex52.k")
      cfg.ex52_k = parse_ll_list(value, "ex52.k");
    else if (key == "ex53.chi_min")
      cfg.ex53_chi_min = parse_ll_list(value, "ex53.chi_min").front();
    else if (key == "ex53.chi_max")
      cfg.ex53_chi_max = parse_ll_list(value, "ex53.chi_max").front();
    else if (key == "ample")
      cfg.ample = parse_bool(value, "ample");
    else if (key == "box")
      cfg.box = parse_ll_list(value, "box").front();
    else if (key == "extended_box")
      cfg.extended_box = parse_ll_list(value, "extended_box").front();
    else
      throw hefib::ValidationError("unknown config key \"" + key + "\"");
  }
  return cfg;
}

// Every ex53 member with integral chi in [chi_min, chi_max]: n must divide
// 2 chi + 2 and the remaining hypotheses (parity, genus floor) must hold,
// which build_example itself checks.
std::vector<hefib::ExampleParams> sweep_jobs(const SweepConfig& cfg) {
  std::vector<hefib::ExampleParams> jobs;
  for (const long long k : cfg.ex51_k) {
    hefib::ExampleParams p;
    p.family = hefib::ExampleFamily::Ex51;
    p.k = k;
    jobs.push_back(p);
  }
  for (const long long k : cfg.ex52_k) {
    hefib::ExampleParams p;
    p.family = hefib::ExampleFamily::Ex52;
    p.k = k;
    jobs.push_back(p);
  }
  for (long long chi = cfg.ex53_chi_min; chi <= cfg.ex53_chi_max; ++chi) {
    for (long long n = 1; n <= 2 * chi + 2; ++n) {
      if ((2 * chi + 2) % n != 0) continue;
      hefib::ExampleParams p;
      p.family = hefib::ExampleFamily::Ex53;
      p.n = n;
      p.chi = chi;
      try {
        hefib::build_example(p);
      } catch (const hefib::ValidationError&) {
        continue;
      }
      jobs.push_back(p);
    }
  }
  return jobs;
}

struct SweepOpts {
  std::string config;
  bool ample = false;
  bool box_set = false;
  bool ebox_set = false;
  long long box = 60;
  long long extended_box = 600;
  std::string format = "text";
};

int run_sweep(const SweepOpts& o) {
  const Format fmt = parse_format(o.format);
  SweepConfig cfg;
  if (!o.config.empty()) cfg = parse_sweep_config(o.config);
  if (o.ample) cfg.ample = true;
  if (o.box_set) cfg.box = o.box;
  if (o.ebox_set) cfg.extended_box = o.extended_box;

  const auto jobs = sweep_jobs(cfg);
  struct Row {
    std::string label;
    bool ok = false;
    size_t checks = 0;
    std::vector<std::string> failed;
  };
  std::vector<Row> rows;
  for (const auto& p : jobs) {
    const auto ex = hefib::build_example(p);
    auto rep = hefib::verify_example(ex);
    if (cfg.ample) {
      auto cl = ample_check(p, cfg.box, cfg.extended_box);
      rep.ok = rep.ok && cl.pass;
      rep.checks.push_back(std::move(cl));
    }
    Row r;
    r.label = params_label(p);
    r.ok = rep.ok;
    r.checks = rep.checks.size();
    for (const auto& c : rep.checks)
      if (!c.pass) r.failed.push_back(c.name);
    rows.push_back(std::move(r));
  }
  const size_t failures = static_cast<size_t>(
      std::count_if(rows.begin(), rows.end(), [](const Row& r) { return !r.ok; }));

  switch (fmt) {
    case Format::Text: {
      for (const auto& r : rows) {
        std::cout << "[" << (r.ok ? "ok" : "FAIL") << "] " << r.label << " ("
                  << r.checks << " checks)";
        for (const auto& f : r.failed) std::cout << " <" << f << ">";
        std::cout << "\n";
      }
      if (failures == 0)
        std::cout << "sweep: " << rows.size() << " cases, all passed\n";
      else
        std::cout << "sweep: " << rows.size() << " cases, " << failures
                  << " failed\n";
      break;
    }
    case Format::Json: {
      Json j;
      j["ok"] = failures == 0;
      j["count"] = rows.size();
      j["ample"] = cfg.ample;
      Json arr = Json::array();
      for (const auto& r : rows) {
        Json row;
        row["label"] = r.label;
        row["ok"] = r.ok;
        row["checks"] = r.checks;
        row["failed"] = r.failed;
        arr.push_back(row);
      }
      j["cases"] = arr;
      print_json(j);
      break;
    }
    case Format::Tsv: {
      std::cout << "label\tok\tchecks\tfailed\n";
      for (const auto& r : rows) {
        std::string failed;
        for (const auto& f : r.failed) {
          if (!failed.empty()) failed += ",";
          failed += f;
        }
        std::cout << r.label << "\t" << (r.ok ? "yes" : "no") << "\t"
                  << r.checks << "\t" << failed << "\n";
      }
      break;
    }
    case Format::Markdown:
      throw hefib::ValidationError("examples sweep supports text, json, tsv");
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact calculator for hyperelliptic fibration invariants, genus "
      "bounds, feasibility enumeration, and ruled-surface example "
      "certificates"};
  app.require_subcommand(1);

  InvariantsOpts io;
  auto* inv_cmd = app.add_subcommand(
      "invariants", "relative invariants from singularity indices");
  inv_cmd->add_option("tokens", io.tokens,
                      "index tokens, e.g. g=7 s2=30 s6=1")
      ->required()
      ->expected(-1);
  inv_cmd->add_option("--b", io.b, "base curve genus")->capture_default_str();
  inv_cmd->add_flag("--no-n-parity", io.no_n_parity,
                    "accept odd n for odd fiber genus");
  inv_cmd->add_option("--format", io.format, "json, tsv, markdown")
      ->capture_default_str();
  inv_cmd->add_flag("--decimal", io.decimal,
                    "add display-only decimal approximations");

  BoundOpts bo;
  auto* bound_cmd =
      app.add_subcommand("bound", "applicable fiber genus upper bounds");
  bound_cmd->add_option("--chi", bo.chi, "relative chi, rational p/q")
      ->required();
  bound_cmd->add_option("--b", bo.b, "base curve genus")->capture_default_str();
  bound_cmd->add_option("--ksq", bo.ksq, "relative K^2, rational");
  bound_cmd->add_option("--lambda", bo.lambda, "slope K^2/chi, rational");
  bound_cmd->add_option("--n", bo.n, "fibers-of-type count n, integer");
  bound_cmd->add_option("--format", bo.format, "json, tsv, markdown")
      ->capture_default_str();
  bound_cmd->add_flag("--decimal", bo.decimal,
                      "add display-only decimal approximations");

  EnumerateOpts eo;
  auto* enum_cmd = app.add_subcommand(
      "enumerate", "exhaustive search for feasible index vectors");
  enum_cmd->add_option("--chi", eo.chi, "target relative chi")
      ->capture_default_str();
  enum_cmd->add_option("--b", eo.b, "base curve genus")->capture_default_str();
  auto* g_opt = enum_cmd->add_option("--g", eo.g_range, "genus range LO..HI")
                    ->capture_default_str();
  auto* s2_opt =
      enum_cmd->add_option("--s2-mode", eo.s2_mode,
                           "nonnegative, negative, any")
          ->capture_default_str();
  auto* capk_opt = enum_cmd->add_option("--slope-cap", eo.slope_cap,
                                        "miyaoka-yau, hyperelliptic, custom")
                       ->capture_default_str();
  auto* cap_opt =
      enum_cmd->add_option("--cap", eo.cap, "slope cap value for custom");
  auto* par_opt = enum_cmd->add_flag("--no-n-parity", eo.no_n_parity,
                                     "keep odd n for odd fiber genus");
  auto* kmin_opt = enum_cmd->add_option("--ksq-min", eo.ksq_min,
                                        "keep cases with K^2 at least this");
  auto* kmax_opt = enum_cmd->add_option("--ksq-max", eo.ksq_max,
                                        "keep cases with K^2 at most this");
  enum_cmd
      ->add_flag("--table", eo.table,
                 "chi = 1, b = 1 census against the reference table")
      ->excludes(g_opt, s2_opt, capk_opt, cap_opt, par_opt, kmin_opt, kmax_opt);
  enum_cmd->add_option("--format", eo.format, "json, tsv, markdown")
      ->capture_default_str();

  auto* ex_cmd =
      app.add_subcommand("examples", "ruled-surface example certificates");
  ex_cmd->require_subcommand(1);

  VerifyOpts vo;
  auto* verify_cmd =
      ex_cmd->add_subcommand("verify", "build and certify one example");
  verify_cmd->add_option("family", vo.family, "ex51, ex52, ex53")
      ->required()
      ->check(CLI::IsMember({"ex51", "ex52", "ex53"}));
  auto* k_opt =
      verify_cmd->add_option("--k", vo.k, "family parameter k (ex51, ex52)");
  auto* m_opt = verify_cmd->add_option(
      "--m", vo.m, "torsion order for ex51, default k + 2");
  verify_cmd->add_option("--n", vo.n, "fiber coefficient n (ex53)");
  verify_cmd->add_option("--chi", vo.chi, "target chi (ex53)");
  verify_cmd->add_flag("--ample", vo.ample,
                       "also scan curve classes for the pairing minimum");
  verify_cmd->add_option("--box", vo.box, "primary scan box half-width")
      ->capture_default_str();
  verify_cmd
      ->add_option("--extended-box", vo.extended_box,
                   "confirmation scan box half-width")
      ->capture_default_str();
  verify_cmd->add_option("--format", vo.format, "text, json")
      ->capture_default_str();

  SweepOpts so;
  auto* sweep_cmd =
      ex_cmd->add_subcommand("sweep", "certify a whole parameter sweep");
  sweep_cmd->add_option("--config", so.config,
                        "key = value sweep ranges; defaults cover the "
                        "standard certification set");
  sweep_cmd->add_flag("--ample", so.ample, "add the pairing minimum scan");
  auto* box_opt = sweep_cmd->add_option("--box", so.box, "primary scan box")
                      ->capture_default_str();
  auto* ebox_opt = sweep_cmd
                       ->add_option("--extended-box", so.extended_box,
                                    "confirmation scan box")
                       ->capture_default_str();
  sweep_cmd->add_option("--format", so.format, "text, json, tsv")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << error_json("usage", e.what()) << "\n";
    return 2;
  }

  vo.k_set = k_opt->count() > 0;
  vo.m_set = m_opt->count() > 0;
  so.box_set = box_opt->count() > 0;
  so.ebox_set = ebox_opt->count() > 0;

  try {
    if (inv_cmd->parsed()) return run_invariants(io);
    if (bound_cmd->parsed()) return run_bound(bo);
    if (enum_cmd->parsed()) return run_enumerate(eo);
    if (ex_cmd->parsed()) {
      if (verify_cmd->parsed()) return run_verify(vo);
      if (sweep_cmd->parsed()) return run_sweep(so);
    }
  } catch (const hefib::ValidationError& e) {
    std::cerr << error_json("validation", e.what()) << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << error_json("internal", e.what()) << "\n";
    return 3;
  }
  return 0;
}
