// Command-line front end: validate | analyze | isoclinic | census |
// classify | theorem over brace files.
//
// Exit codes: 0 success/affirmative, 1 parse or I/O failure, 2 invalid
// brace, 3 negative decision, 4 invariance violation.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "skewbrace/skewbrace.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace skewbrace;

namespace {

enum ExitCode : int {
  exit_ok = 0,
  exit_parse = 1,
  exit_invalid = 2,
  exit_negative = 3,
  exit_violation = 4,
};

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::parse_error:
    case Errc::unknown_order:
      return exit_parse;
    case Errc::invariance_violation:
    case Errc::transitivity_violation:
      return exit_violation;
    default:
      return exit_invalid;
  }
}

struct Options {
  std::string format = "text";
  int jobs = static_cast<int>(std::thread::hardware_concurrency());
  int cap = kDefaultOrderCap;

  bool json_output() const { return format == "json"; }
};

std::vector<std::string> list_brace_files(const std::string& dir) {
  std::vector<std::string> files;
  fs::path manifest = fs::path(dir) / "manifest.json";
  if (fs::exists(manifest)) {
    std::ifstream in(manifest);
    json m = json::parse(in, nullptr, false);
    if (m.is_discarded()) fail(Errc::parse_error, "manifest.json is not valid JSON");
    for (const auto& entry : m.at("entries")) files.push_back((fs::path(dir) / entry.at("file").get<std::string>()).string());
    return files;
  }
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".brace") files.push_back(e.path().string());
  std::sort(files.begin(), files.end());
  if (files.empty()) fail(Errc::parse_error, "no .brace files in " + dir);
  return files;
}

struct LoadedCensus {
  std::vector<BraceContext> contexts;
  std::vector<std::string> labels;
};

LoadedCensus load_census_dir(const std::string& dir, int jobs) {
  LoadedCensus out;
  std::vector<std::string> files = list_brace_files(dir);
  std::vector<SkewBrace> braces;
  for (const std::string& f : files) {
    braces.push_back(read_brace_file(f));
    out.labels.push_back(fs::path(f).filename().string());
  }
  std::vector<std::optional<BraceContext>> slots(braces.size());
  parallel_for(static_cast<int>(braces.size()), jobs,
               [&](int i) { slots[static_cast<size_t>(i)] = make_context(braces[static_cast<size_t>(i)]); });
  for (auto& s : slots) out.contexts.push_back(std::move(*s));
  return out;
}

json brace_summary_json(const SkewBrace& b) {
  json gamma = json::array();
  for (Elem x = 0; x < b.order(); ++x) gamma.push_back(b.gamma(x).images());
  return {{"ok", true},
          {"order", b.order()},
          {"table_digest", digest_hex(table_digest(b))},
          {"gamma_digest", digest_hex(gamma_digest(b))},
          {"gamma", std::move(gamma)}};
}

int cmd_validate(const std::string& path, const Options& opt) {
  SkewBrace b = read_brace_file(path);
  if (opt.json_output()) {
    std::cout << brace_summary_json(b).dump(2) << "\n";
    return exit_ok;
  }
  std::cout << "valid skew brace\n";
  std::cout << "order " << b.order() << "\n";
  std::cout << "table digest " << digest_hex(table_digest(b)) << "\n";
  std::cout << "gamma digest " << digest_hex(gamma_digest(b)) << "\n";
  for (Elem x = 0; x < b.order(); ++x) std::cout << "gamma(" << x << ") = " << b.gamma(x).to_string() << "\n";
  return exit_ok;
}

std::string set_to_string(const std::vector<Elem>& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[static_cast<size_t>(i)]);
  }
  return s + "]";
}

int cmd_analyze(const std::string& path, const Options& opt) {
  SkewBrace b = read_brace_file(path);
  std::vector<Elem> z = center(b.additive());
  std::vector<Elem> ker = kernel_gamma(b);
  std::vector<Elem> fixed = centralizer_of_gamma_image(b);
  SubBrace ann = annihilator(b);
  SubBrace derived = derived_ideal(b);
  QuotientBrace q = quotient_by(b, ann);
  bool biskew = is_biskew(b);
  bool lambda = is_lambda_homomorphic(b);
  InnerResult inner = is_inner(b);
  if (opt.json_output()) {
    json j = {{"order", b.order()},
              {"center_size", z.size()},
              {"kernel_size", ker.size()},
              {"centralizer_size", fixed.size()},
              {"annihilator", ann.elements},
              {"derived_ideal", derived.elements},
              {"quotient_order", q.quotient.order()},
              {"biskew", biskew},
              {"lambda_homomorphic", lambda},
              {"inner", inner.inner}};
    if (inner.inner) j["inner_witnesses"] = inner.witnesses;
    std::cout << j.dump(2) << "\n";
    return exit_ok;
  }
  std::cout << "order " << b.order() << "\n";
  std::cout << "|Z(B,.)| = " << z.size() << "\n";
  std::cout << "|ker gamma| = " << ker.size() << "\n";
  std::cout << "|C_B(gamma(B))| = " << fixed.size() << "\n";
  std::cout << "annihilator = " << set_to_string(ann.elements) << "\n";
  std::cout << "derived ideal = " << set_to_string(derived.elements) << "\n";
  std::cout << "quotient order " << q.quotient.order() << "\n";
  std::cout << "biskew " << (biskew ? "true" : "false") << "\n";
  std::cout << "lambda-homomorphic " << (lambda ? "true" : "false") << "\n";
  std::cout << "inner " << (inner.inner ? "true" : "false");
  if (inner.inner) std::cout << " witnesses " << set_to_string(inner.witnesses);
  std::cout << "\n";
  return exit_ok;
}

int cmd_isoclinic(const std::string& path_a, const std::string& path_b, const Options& opt) {
  BraceContext a = make_context(read_brace_file(path_a));
  BraceContext b = make_context(read_brace_file(path_b));
  std::optional<Isoclinism> w = is_isoclinic(a, b);
  if (!w) {
    if (opt.json_output())
      std::cout << json{{"isoclinic", false}}.dump(2) << "\n";
    else
      std::cout << "not isoclinic\n";
    return exit_negative;
  }
  VerifyResult vr = verify_isoclinism(a, b, *w);
  if (!vr.ok) fail(Errc::invariance_violation, "witness failed re-verification: " + vr.violation);
  if (opt.json_output()) {
    json j = to_json(*w);
    j["isoclinic"] = true;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "isoclinic\n";
    std::cout << "xi = " << w->xi.to_string() << "\n";
    std::cout << "theta = " << w->theta.to_string() << "\n";
  }
  return exit_ok;
}

int cmd_census(int order, const std::string& outdir, const Options& opt) {
  std::vector<SkewBrace> members = census(order, opt.jobs, opt.cap);
  fs::create_directories(outdir);
  char prefix[16];
  std::snprintf(prefix, sizeof prefix, "%03d", order);
  json entries = json::array();
  for (size_t i = 0; i < members.size(); ++i) {
    char idx[16];
    std::snprintf(idx, sizeof idx, "%03zu", i);
    std::string id = std::string(prefix) + "_" + idx;
    std::string filename = id + ".brace";
    std::ofstream out(fs::path(outdir) / filename);
    write_brace_file(out, members[i]);
    PredicateTriple p = predicates(members[i]);
    entries.push_back({{"id", id},
                       {"file", filename},
                       {"digest", digest_hex(table_digest(members[i]))},
                       {"gamma_digest", digest_hex(gamma_digest(members[i]))},
                       {"predicates", to_json(p)}});
  }
  json manifest = {{"format", "skewbrace census v1"},
                   {"order", order},
                   {"count", members.size()},
                   {"entries", std::move(entries)}};
  std::ofstream mout(fs::path(outdir) / "manifest.json");
  mout << manifest.dump(2) << "\n";
  if (opt.json_output())
    std::cout << json{{"order", order}, {"count", members.size()}, {"dir", outdir}}.dump(2) << "\n";
  else
    std::cout << "census of order " << order << ": " << members.size() << " braces written to " << outdir << "\n";
  return exit_ok;
}

int cmd_classify(const std::string& dir, const Options& opt) {
  LoadedCensus loaded = load_census_dir(dir, opt.jobs);
  Classification cls = classify(loaded.contexts, opt.jobs);
  if (opt.json_output()) {
    json classes = json::array();
    for (size_t c = 0; c < cls.classes.size(); ++c) {
      json members = json::array();
      for (int m : cls.classes[c]) members.push_back(loaded.labels[static_cast<size_t>(m)]);
      json witnesses = json::array();
      for (const auto& kv : cls.witnesses) {
        if (cls.class_of[static_cast<size_t>(kv.first.first)] != static_cast<int>(c)) continue;
        json w = to_json(kv.second);
        w["from"] = loaded.labels[static_cast<size_t>(kv.first.first)];
        w["to"] = loaded.labels[static_cast<size_t>(kv.first.second)];
        witnesses.push_back(std::move(w));
      }
      classes.push_back({{"id", c}, {"members", std::move(members)}, {"witnesses", std::move(witnesses)}});
    }
    std::cout << json{{"classes", std::move(classes)}}.dump(2) << "\n";
    return exit_ok;
  }
  std::cout << "classes: " << cls.classes.size() << "\n";
  for (size_t c = 0; c < cls.classes.size(); ++c) {
    std::cout << "class " << c << ":";
    for (int m : cls.classes[c]) std::cout << " " << loaded.labels[static_cast<size_t>(m)];
    std::cout << "\n";
  }
  return exit_ok;
}

int cmd_theorem(const std::string& dir, const Options& opt) {
  LoadedCensus loaded = load_census_dir(dir, opt.jobs);
  TheoremReport rep = theorem_invariance_report(loaded.contexts, opt.jobs);
  if (opt.json_output()) {
    std::cout << to_json(rep, loaded.labels).dump(2) << "\n";
  } else {
    std::cout << "classes: " << rep.classes.size() << "\n";
    for (const ClassReport& c : rep.classes) {
      std::cout << "class " << c.id << " (biskew=" << (c.preds.biskew ? "true" : "false")
                << " lambda=" << (c.preds.lambda_homomorphic ? "true" : "false")
                << " inner=" << (c.preds.inner ? "true" : "false") << "):";
      for (int m : c.members) std::cout << " " << loaded.labels[static_cast<size_t>(m)];
      std::cout << "\n";
    }
    std::cout << "witness pairs checked: " << rep.remark_pairs_checked << "\n";
    std::cout << "expansion scans: " << rep.expansion_scans << "\n";
    std::cout << "additive-only pairs: " << rep.additive_only_pairs.size() << "\n";
    if (rep.ok()) {
      std::cout << "invariance holds: all predicates constant on every class\n";
    } else {
      std::cout << "VIOLATIONS:\n";
      for (const std::string& v : rep.violations) std::cout << "  " << v << "\n";
    }
  }
  return rep.ok() ? exit_ok : exit_violation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite skew brace toolkit"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env_cap = std::getenv("SKEWBRACE_CAP")) opt.cap = std::atoi(env_cap);
  if (opt.jobs <= 0) opt.jobs = 1;
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", opt.jobs, "worker threads for census-scale commands");
  app.add_option("--cap", opt.cap, "order cap for searches (overrides SKEWBRACE_CAP)");

  std::string path_a, path_b, dir;
  int order = 0;

  // let --format/--jobs/--cap appear after the subcommand as well
  app.fallthrough();

  CLI::App* validate = app.add_subcommand("validate", "validate a brace file and print its summary");
  validate->add_option("file", path_a)->required();
  CLI::App* analyze = app.add_subcommand("analyze", "structural invariants and predicates of a brace file");
  analyze->add_option("file", path_a)->required();
  CLI::App* isoclinic = app.add_subcommand("isoclinic", "decide isoclinism of two brace files");
  isoclinic->add_option("fileA", path_a)->required();
  isoclinic->add_option("fileB", path_b)->required();
  CLI::App* census_cmd = app.add_subcommand("census", "write the complete census of an order");
  census_cmd->add_option("order", order)->required();
  census_cmd->add_option("outdir", dir)->required();
  CLI::App* classify_cmd = app.add_subcommand("classify", "partition a directory of braces into isoclinism classes");
  classify_cmd->add_option("dir", dir)->required();
  CLI::App* theorem = app.add_subcommand("theorem", "verify predicate invariance across isoclinism classes");
  theorem->add_option("dir", dir)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return exit_parse;
  }

  try {
    if (validate->parsed()) return cmd_validate(path_a, opt);
    if (analyze->parsed()) return cmd_analyze(path_a, opt);
    if (isoclinic->parsed()) return cmd_isoclinic(path_a, path_b, opt);
    if (census_cmd->parsed()) return cmd_census(order, dir, opt);
    if (classify_cmd->parsed()) return cmd_classify(dir, opt);
    if (theorem->parsed()) return cmd_theorem(dir, opt);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_parse;
  }
  return exit_parse;
}
