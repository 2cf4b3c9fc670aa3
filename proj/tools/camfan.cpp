// camfan: exact Coxeter/Cambrian/cluster computations from the command line.
//
// Subcommands: info, sortables, clusters, fan, verify, narayana.
// Exit codes: 0 success (and all-pass for verify), 1 usage error,
// 2 verification failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "camfan/bridges.hpp"
#include "camfan/errors.hpp"
#include "camfan/fan_io.hpp"
#include "camfan/group_io.hpp"
#include "camfan/verify.hpp"

namespace {

using namespace camfan;

BuildOptions build_options(std::size_t cap_flag) {
  BuildOptions opts;
  if (const char* env = std::getenv("CAMFAN_ELEMENT_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) opts.element_cap = static_cast<std::size_t>(v);
  }
  if (cap_flag > 0) opts.element_cap = cap_flag;
  return opts;
}

CoxWord parse_coxeter_word(const CoxeterGroup& g, const std::string& spec) {
  std::vector<GenIndex> letters;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) return;
    auto s = g.gen_by_label(cur);
    if (!s) fail(Errc::UsageError, "unknown generator label: " + cur);
    letters.push_back(*s);
    cur.clear();
  };
  for (char ch : spec) {
    if (ch == ',') {
      flush();
    } else {
      cur += ch;
    }
  }
  flush();
  return CoxWord(letters);
}

std::vector<CoxWord> resolve_words(const CoxeterGroup& g, const std::string& spec) {
  if (spec == "all") return all_coxeter_words(g);
  return {parse_coxeter_word(g, spec)};
}

GenSet parse_gen_set(const CoxeterGroup& g, const std::string& spec) {
  GenSet set = 0;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) return;
    auto s = g.gen_by_label(cur);
    if (!s) fail(Errc::UsageError, "unknown generator label: " + cur);
    set = gen_insert(set, *s);
    cur.clear();
  };
  for (char ch : spec) {
    if (ch == ',')
      flush();
    else
      cur += ch;
  }
  flush();
  return set;
}

void write_or_print(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) fail(Errc::UsageError, "cannot write: " + path);
  out << text;
}

int cmd_info(const std::string& group_path, std::size_t cap) {
  CoxeterGroup g = load_group_file(group_path, build_options(cap));
  std::cout << "rank: " << g.rank() << "\n";
  std::cout << "generators:";
  for (int s = 0; s < g.rank(); ++s) std::cout << " " << g.label(s);
  std::cout << "\n";
  std::cout << "|W|: " << g.order() << "\n";
  std::cout << "|T|: " << g.num_pos_roots() << "\n";
  std::cout << "field: " << (g.radicand() == 5 ? "Q(sqrt5)" : "Q") << "\n";
  std::cout << "crystallographic: " << (g.crystallographic() ? "yes" : "no") << "\n";
  std::cout << "longest element: " << g.word_str(g.longest()) << " (length "
            << g.length(g.longest()) << ")\n";
  std::map<int, long long> degrees;
  for (ElementId w = 0; w < g.order(); ++w) {
    int deg = static_cast<int>(g.weak_up_covers(w).size() + g.weak_down_covers(w).size());
    ++degrees[deg];
  }
  std::cout << "hasse degrees:";
  for (const auto& [d, count] : degrees) std::cout << " " << d << "x" << count;
  std::cout << "\n";
  return 0;
}

int cmd_sortables(const std::string& group_path, const std::string& cox, std::size_t cap) {
  CoxeterGroup g = load_group_file(group_path, build_options(cap));
  CoxWord c = parse_coxeter_word(g, cox);
  for (ElementId w : sortable_elements(g, c)) {
    SortingWord sw = sorting_word(g, c, w);
    std::cout << (w == g.identity() ? "1" : sw.str(g)) << "\n";
  }
  return 0;
}

int cmd_clusters(const std::string& group_path, const std::string& cox, bool lattice,
                 bool hvec, std::size_t cap) {
  CoxeterGroup g = load_group_file(group_path, build_options(cap));
  CoxWord c = parse_coxeter_word(g, cox);
  ClusterSet cs(g, c);
  for (int i = 0; i < cs.size(); ++i) {
    std::cout << i << ":";
    for (Apr a : cs.cluster(i)) std::cout << " " << apr_label(g, a);
    std::cout << "\n";
  }
  if (lattice) {
    std::cout << "covers:\n";
    for (int i = 0; i < cs.size(); ++i)
      for (int j : cs.up_covers()[i]) std::cout << "  " << i << " < " << j << "\n";
  }
  if (hvec) {
    std::cout << "h-vector:";
    for (long long h : h_vector(g, c)) std::cout << " " << h;
    std::cout << "\n";
  }
  return 0;
}

int cmd_fan(const std::string& group_path, const std::string& cox, const std::string& kind,
            const std::string& out, const std::string& svg, std::size_t cap) {
  CoxeterGroup g = load_group_file(group_path, build_options(cap));
  Fan fan;
  if (kind == "coxeter") {
    fan = coxeter_fan(g);
  } else {
    CoxWord c = parse_coxeter_word(g, cox);
    fan = (kind == "cambrian") ? cambrian_fan(g, c) : cluster_fan(g, c);
  }
  write_or_print(out, fan_to_json(g, fan));
  if (!svg.empty()) write_or_print(svg, fan_to_svg(g, fan));
  return 0;
}

int cmd_narayana(const std::string& group_path, const std::string& cox, std::size_t cap) {
  CoxeterGroup g = load_group_file(group_path, build_options(cap));
  CoxWord c = parse_coxeter_word(g, cox);
  NarayanaTriple t = narayana(g, c);
  auto show = [](const char* name, const std::vector<long long>& v) {
    std::cout << name << ":";
    for (long long x : v) std::cout << " " << x;
    std::cout << "\n";
  };
  show("by_descents", t.by_descents);
  show("by_upper_roots", t.by_upper);
  show("h_vector", t.h);
  std::cout << "equal: " << (t.equal() ? "yes" : "NO") << "\n";
  return t.equal() ? 0 : 2;
}

int cmd_verify(const std::string& group_path, const std::string& cox, const std::string& suite,
               const std::string& out, int threads, const std::string& plus,
               const std::string& minus, std::size_t cap) {
  CoxeterGroup g = load_group_file(group_path, build_options(cap));
  std::vector<CoxWord> words = resolve_words(g, cox);
  std::optional<Bipartition> bip;
  if (!plus.empty() || !minus.empty()) {
    bip = Bipartition{parse_gen_set(g, plus), parse_gen_set(g, minus)};
    (void)bipartite_word(g, *bip);  // validates the requested bipartition
  }
  std::vector<std::string> suites;
  if (suite == "all")
    suites = suite_names();
  else
    suites = {suite};
  auto results = run_suites(g, words, suites, threads, bip);
  std::string report = report_json(g, results);
  write_or_print(out, report);
  bool pass = true;
  for (const auto& r : results) pass = pass && r.pass;
  if (!pass && !out.empty())
    std::cerr << "verification failed; see " << out << "\n";
  return pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Cambrian/cluster fan computations for finite Coxeter groups"};
  app.require_subcommand(1);

  std::string group_path, cox = "all", kind = "cambrian", out, svg, suite = "all";
  std::string plus, minus;
  std::size_t cap = 0;
  int threads = 1;

  auto add_common = [&](CLI::App* sub, bool needs_cox) {
    sub->add_option("--group", group_path, "group definition JSON file")->required();
    if (needs_cox)
      sub->add_option("--coxeter", cox, "comma-separated generator labels, or \"all\"")->required();
    sub->add_option("--element-cap", cap, "override the element enumeration cap");
  };

  auto* info = app.add_subcommand("info", "group summary");
  add_common(info, false);

  auto* sortables = app.add_subcommand("sortables", "list c-sortable elements as sorting words");
  add_common(sortables, true);

  auto* clusters = app.add_subcommand("clusters", "list c-clusters");
  add_common(clusters, true);
  bool lattice = false, hvec = false;
  clusters->add_flag("--lattice", lattice, "print cluster-lattice cover relations");
  clusters->add_flag("--h-vector", hvec, "print the h-vector");

  auto* fan = app.add_subcommand("fan", "export a fan as JSON (and optionally SVG)");
  add_common(fan, true);
  fan->add_option("--kind", kind, "coxeter | cambrian | cluster")
      ->check(CLI::IsMember({"coxeter", "cambrian", "cluster"}));
  fan->add_option("--out", out, "output path (stdout if omitted)");
  fan->add_option("--svg", svg, "also write a rank-3 SVG rendering");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  add_common(verify, true);
  verify->add_option("--suite", suite,
                     "span | zeta | liso | nc | conj101 | quasicartan | narayana | all")
      ->check(CLI::IsMember({"span", "zeta", "liso", "nc", "conj101", "quasicartan", "narayana",
                             "all"}));
  verify->add_option("--out", out, "write the JSON report here");
  verify->add_option("--threads", threads, "worker threads over (word, suite) jobs");
  verify->add_option("--plus", plus, "bipartition positive part (validation only)");
  verify->add_option("--minus", minus, "bipartition negative part (validation only)");

  auto* nara = app.add_subcommand("narayana", "descent / upper-root / h-vector statistics");
  add_common(nara, true);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*info) return cmd_info(group_path, cap);
    if (*sortables) return cmd_sortables(group_path, cox, cap);
    if (*clusters) return cmd_clusters(group_path, cox, lattice, hvec, cap);
    if (*fan) return cmd_fan(group_path, cox, kind, out, svg, cap);
    if (*verify) return cmd_verify(group_path, cox, suite, out, threads, plus, minus, cap);
    if (*nara) return cmd_narayana(group_path, cox, cap);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::UsageError || e.code() == Errc::ParseError ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
