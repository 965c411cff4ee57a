#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "immcensus/cli.hpp"
#include "immcensus/cosetcount.hpp"

namespace immcensus::cli {

using nlohmann::ordered_json;

CensusOptions RunConfig::census_options() const {
  CensusOptions o;
  o.sweep.jobs = jobs;
  o.sweep.memory_mb = memory_mb;
  o.allow_slow = allow_slow;
  return o;
}

std::pair<int, int> parse_n_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw InvalidInput("bad --n value '" + text + "'");
    }
    if (used != s.size()) throw InvalidInput("bad --n value '" + text + "'");
    return v;
  };
  auto dots = text.find("..");
  int lo, hi;
  if (dots == std::string::npos) {
    lo = hi = to_int(text);
  } else {
    lo = to_int(text.substr(0, dots));
    hi = to_int(text.substr(dots + 2));
  }
  if (lo < 1 || hi < lo) throw InvalidInput("--n needs 1 <= a <= b (got '" + text + "')");
  return {lo, hi};
}

namespace {

struct Row {
  std::string label;
  int n;
  std::optional<int> genus;  // nullopt = all genera
  BigCount count;
};

std::string format_rows(const std::string& label_col, const std::string& count_col, const std::vector<Row>& rows,
                        const std::string& format) {
  std::ostringstream out;
  if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json j;
      j[label_col] = r.label;
      j["n"] = r.n;
      j["g"] = r.genus ? ordered_json(*r.genus) : ordered_json("all");
      j[count_col] = r.count.str();  // exact decimal, any size
      arr.push_back(j);
    }
    out << arr.dump(1) << '\n';
    return out.str();
  }
  out << label_col << ",n,g," << count_col << '\n';
  for (const auto& r : rows)
    out << r.label << ',' << r.n << ',' << (r.genus ? std::to_string(*r.genus) : "all") << ',' << r.count << '\n';
  return out.str();
}

int kind_max_genus(const Kind& k, int n) { return k.colour == Colour::None ? (n + 1) / 2 : n / 2; }
int method_max_genus(Method m, int n) { return m == Method::X || m == Method::Z ? (n + 1) / 2 : n / 2; }

// Per-genus rows for one label; appends an "all" row when no genus is fixed.
template <class Get>
void genus_rows(std::vector<Row>& rows, const std::string& label, int n, std::optional<int> genus, int max_g, Get get) {
  int lo = genus ? *genus : 0, hi = genus ? *genus : max_g;
  BigCount total = 0;
  for (int g = lo; g <= hi; ++g) {
    BigCount v = get(g);
    total += v;
    rows.push_back({label, n, g, v});
  }
  if (!genus) rows.push_back({label, n, std::nullopt, total});
}

void write_output(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + cfg.out);
  f << text;
  if (!f) throw std::runtime_error("write failed for " + cfg.out);
}

std::string count_text(const RunConfig& cfg) {
  std::vector<Row> rows;
  const auto opt = cfg.census_options();
  if (cfg.frobenius) {
    if (cfg.genus) throw InvalidInput("--frobenius counts all genera together; drop --g");
    if (cfg.filters.any()) throw InvalidInput("--frobenius cannot apply --kink-free or --prime");
    std::vector<Kind> kinds;
    if (cfg.kind)
      kinds.push_back(*cfg.kind);
    else
      for (const char* k : {"OO", "UO", "OU", "UU"}) kinds.push_back(parse_kind(k));
    for (const auto& k : kinds) {
      if (k.colour != Colour::None) throw InvalidInput("--frobenius supports OO, UO, OU and UU only");
      for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) rows.push_back({k.name(), n, std::nullopt, count_total_immersions(k, n)});
    }
    return format_rows("kind", "count", rows, cfg.format);
  }
  if (cfg.method && !cfg.kind) {
    const Method m = *cfg.method;
    for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) {
      auto cs = cached_classes(m, n, cfg.genus, opt);
      auto keep = filter_mask(*cs, cfg.filters);
      std::map<int, std::uint64_t> per;
      for (std::size_t i = 0; i < cs->classes.size(); ++i)
        if (keep[i]) ++per[cs->classes[i].genus];
      genus_rows(rows, std::string(method_name(m)), n, cfg.genus, method_max_genus(m, n),
                 [&](int g) { return BigCount(per[g]); });
    }
    return format_rows("method", "classes", rows, cfg.format);
  }
  std::vector<Kind> kinds = cfg.kind ? std::vector<Kind>{*cfg.kind} : all_kinds();
  bool general = std::any_of(kinds.begin(), kinds.end(), [](const Kind& k) { return k.colour == Colour::None; });
  for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) {
    CountTable t = derive_counts(census_profiles(n, cfg.genus, cfg.filters, general, opt));
    for (const auto& k : kinds)
      genus_rows(rows, k.name(), n, cfg.genus, kind_max_genus(k, n), [&](int g) {
        auto v = t.get(k, n, g);
        if (!v) throw std::logic_error("count for " + k.name() + " was not derived");
        return *v;
      });
  }
  // group rows by kind, in the order requested
  std::stable_sort(rows.begin(), rows.end(), [&](const Row& a, const Row& b) {
    auto ia = std::find_if(kinds.begin(), kinds.end(), [&](const Kind& k) { return k.name() == a.label; });
    auto ib = std::find_if(kinds.begin(), kinds.end(), [&](const Kind& k) { return k.name() == b.label; });
    return ia < ib;
  });
  return format_rows("kind", "count", rows, cfg.format);
}

ordered_json flag_json(const ClassSet& cs, std::size_t idx) {
  const auto& c = cs.classes[idx];
  ordered_json flags;
  flags["kink_free"] = filter_kink_free(c);
  auto prime = filter_prime(c);
  flags["irreducible"] = prime.irreducible;
  flags["indecomposable"] = prime.indecomposable;
  auto fixed = [&](Involution inv) -> ordered_json {
    if (!involution_available(cs.method, inv)) return nullptr;
    return class_key(cs.method, cs.n, apply_involution(cs.method, inv, c.rep)) == cs.keys[idx];
  };
  flags["self_swap"] = fixed(Involution::Swap);
  flags["achiral"] = fixed(Involution::Mirror);
  flags["reversible"] = fixed(Involution::Reverse);
  return flags;
}

std::string label_of(const RunConfig& cfg) {
  if (cfg.kind) return cfg.kind->name();
  if (cfg.method) return std::string(method_name(*cfg.method));
  throw InvalidInput("list needs --kind or --method");
}

}  // namespace

int cmd_count(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.load.empty()) {
    write_output(cfg, out, recount_catalog(cfg.load, cfg.format));
    return kExitOk;
  }
  write_output(cfg, out, count_text(cfg));
  return kExitOk;
}

int cmd_list(const RunConfig& cfg, std::ostream& out) {
  const auto opt = cfg.census_options();
  const std::string label = label_of(cfg);
  std::ostringstream text;
  ordered_json header;
  header["catalog"] = label;
  header["column"] = cfg.kind ? "kind" : "method";
  header["n_lo"] = cfg.n_lo;
  header["n_hi"] = cfg.n_hi;
  header["g"] = cfg.genus ? ordered_json(*cfg.genus) : ordered_json(nullptr);
  ordered_json maxg = ordered_json::array();
  for (int n = cfg.n_lo; n <= cfg.n_hi; ++n)
    maxg.push_back(cfg.kind ? kind_max_genus(*cfg.kind, n) : method_max_genus(*cfg.method, n));
  header["max_genus"] = maxg;
  text << header.dump() << '\n';
  for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) {
    if (cfg.kind) {
      auto cat = kind_catalog(*cfg.kind, n, cfg.genus, cfg.filters, opt);
      const ClassSet& cs = *cat.base;
      for (const auto& kc : cat.classes) {
        const auto lead = kc.members.front();
        const auto& c = cs.classes[lead];
        std::uint64_t orbit = 0;
        for (auto i : kc.members) orbit += cs.classes[i].orbit_length;
        ordered_json j;
        j["kind"] = label;
        j["method"] = method_name(cs.method);
        j["n"] = n;
        j["g"] = kc.genus;
        j["rep"] = c.rep.to_one_line_string();
        j["key"] = cs.keys[lead];
        j["size"] = kc.members.size();
        j["orbit_len"] = orbit;
        j["stab_order"] = c.stabilizer_order;
        j["flags"] = flag_json(cs, lead);
        text << j.dump() << '\n';
      }
    } else {
      auto cs = cached_classes(*cfg.method, n, cfg.genus, opt);
      auto keep = filter_mask(*cs, cfg.filters);
      for (std::size_t i = 0; i < cs->classes.size(); ++i) {
        if (!keep[i]) continue;
        const auto& c = cs->classes[i];
        ordered_json j;
        j["method"] = label;
        j["n"] = n;
        j["g"] = c.genus;
        j["rep"] = c.rep.to_one_line_string();
        j["key"] = cs->keys[i];
        j["orbit_len"] = c.orbit_length;
        j["stab_order"] = c.stabilizer_order;
        j["flags"] = flag_json(*cs, i);
        text << j.dump() << '\n';
      }
    }
  }
  write_output(cfg, out, text.str());
  return kExitOk;
}

std::string recount_catalog(const std::string& path, const std::string& format) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read catalog " + path);
  std::string line;
  if (!std::getline(in, line)) throw InvalidInput("empty catalog " + path);
  auto header = nlohmann::json::parse(line);
  const auto label = header.at("catalog").get<std::string>();
  const auto column = header.at("column").get<std::string>();
  const int lo = header.at("n_lo").get<int>(), hi = header.at("n_hi").get<int>();
  std::optional<int> genus;
  if (!header.at("g").is_null()) genus = header.at("g").get<int>();
  const auto maxg = header.at("max_genus").get<std::vector<int>>();
  std::map<std::pair<int, int>, std::uint64_t> tally;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto j = nlohmann::json::parse(line);
    if (j.at(column).get<std::string>() != label) throw InvalidInput("catalog mixes labels");
    ++tally[{j.at("n").get<int>(), j.at("g").get<int>()}];
  }
  std::vector<Row> rows;
  for (int n = lo; n <= hi; ++n)
    genus_rows(rows, label, n, genus, maxg.at(static_cast<std::size_t>(n - lo)),
               [&](int g) { return BigCount(tally[{n, g}]); });
  return format_rows(column, column == "kind" ? "count" : "classes", rows, format);
}

namespace {

struct Verifier {
  std::ostream& out;
  int failures = 0;
  int passes = 0;

  void report(bool ok, const std::string& what) {
    out << (ok ? "PASS " : "FAIL ") << what << '\n';
    (ok ? passes : failures)++;
  }
};

std::uint64_t double_factorial_even(int m) {  // m!! for even m
  std::uint64_t v = 1;
  for (int k = m; k > 1; k -= 2) v *= static_cast<std::uint64_t>(k);
  return v;
}

std::uint64_t fact(int m) {
  std::uint64_t v = 1;
  for (int k = 2; k <= m; ++k) v *= static_cast<std::uint64_t>(k);
  return v;
}

void verify_sumrules(Verifier& v, int n, const CensusOptions& opt) {
  struct Case {
    Method m;
    std::uint64_t universe;
    std::uint64_t group;
  };
  std::vector<Case> cases;
  if (n <= envelope_limit(Method::X, opt.allow_slow, false))
    cases.push_back({Method::X, double_factorial_even(4 * n - 2), (1ull << (2 * n)) * fact(n)});
  if (n <= 5 || opt.allow_slow)
    cases.push_back({Method::Y, static_cast<std::uint64_t>(y_prime_size(n)), (1ull << n) * fact(n)});
  cases.push_back({Method::UDihedral, (1ull << n) * fact(n), static_cast<std::uint64_t>(2 * n)});
  cases.push_back({Method::UCyclic, (1ull << n) * fact(n), static_cast<std::uint64_t>(n)});
  if (n <= envelope_limit(Method::Z, opt.allow_slow, false)) cases.push_back({Method::Z, fact(2 * n - 1), fact(n)});
  for (const auto& c : cases) {
    auto cs = cached_classes(c.m, n, std::nullopt, opt);
    bool stab_ok = true;
    for (const auto& k : cs->classes)
      if (k.orbit_length * k.stabilizer_order != c.group) stab_ok = false;
    v.report(cs->universe_size() == c.universe,
             "sum rule " + std::string(method_name(c.m)) + " n=" + std::to_string(n) + ": " +
                 std::to_string(cs->universe_size()) + " = " + std::to_string(c.universe));
    v.report(stab_ok, "orbit-stabilizer " + std::string(method_name(c.m)) + " n=" + std::to_string(n));
  }
}

void verify_theorem4(Verifier& v, int n, const CensusOptions& opt, bool general) {
  auto profiles = census_profiles(n, std::nullopt, {}, general, opt);
  auto table = derive_counts(profiles);
  auto rep = check_structure_theorems(table, profiles);
  for (const auto& bad : rep.violations) v.report(false, bad);
  v.report(rep.ok(), "structure identities n=" + std::to_string(n) + " (" + std::to_string(rep.checks) + " checks)");
  for (const auto& o : rep.observations) v.out << "NOTE " << o << '\n';
  if (!general) return;
  for (const char* k : {"OO", "UO", "OU", "UU"}) {
    Kind kind = parse_kind(k);
    BigCount sum = 0;
    for (int g = 0; g <= (n + 1) / 2; ++g) sum += table.get(kind, n, g).value_or(0);
    BigCount frob = count_total_immersions(kind, n);
    v.report(sum == frob, std::string(k) + " n=" + std::to_string(n) + " genus sum " + sum.str() + " = Frobenius " +
                              frob.str());
  }
  if (n <= envelope_limit(Method::X, opt.allow_slow, false)) {
    auto xs = cached_classes(Method::X, n, std::nullopt, opt);
    std::map<int, std::uint64_t> per;
    for (const auto& c : xs->classes) ++per[c.genus];
    bool ok = true;
    for (int g = 0; g <= (n + 1) / 2; ++g)
      if (BigCount(per[g]) != table.get(parse_kind("UO"), n, g).value_or(0)) ok = false;
    v.report(ok, "X classes = UO counts per genus n=" + std::to_string(n));
  }
}

}  // namespace

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  Verifier v{out};
  const auto opt = cfg.census_options();
  const bool all = !cfg.theorem4 && !cfg.sumrules;
  for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) {
    if (all || cfg.sumrules) verify_sumrules(v, n, opt);
    if (all || cfg.theorem4)
      verify_theorem4(v, n, opt, all && n <= envelope_limit(Method::Z, opt.allow_slow, false));
  }
  out << v.passes << " passed, " << v.failures << " failed\n";
  return v.failures == 0 ? kExitOk : kExitFailure;
}

int cmd_export_diagrams(const RunConfig& cfg, std::ostream& out) {
  if (cfg.out.empty()) throw InvalidInput("export-diagrams needs --out DIR");
  const Kind kind = cfg.kind.value_or(parse_kind("UU"));
  std::filesystem::create_directories(cfg.out);
  const auto opt = cfg.census_options();
  std::size_t written = 0;
  for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) {
    auto cat = kind_catalog(kind, n, cfg.genus, cfg.filters, opt);
    const ClassSet& cs = *cat.base;
    for (const auto& kc : cat.classes) {
      const auto lead = kc.members.front();
      const Perm& rep = cs.classes[lead].rep;
      ZCode z = cs.method == Method::Z ? ZCode{n, rep}
                                       : convert_u_to_z(UCode{n, compose(inverse(beta_cycle(n)), rep)});
      auto name = kind.name() + "_n" + std::to_string(n) + "_g" + std::to_string(kc.genus) + "_" +
                  std::to_string(cs.keys[lead]) + ".json";
      std::ofstream f(std::filesystem::path(cfg.out) / name, std::ios::binary);
      if (!f) throw std::runtime_error("cannot write " + name);
      f << diagram_to_json(diagram_from_z(z)) << '\n';
      ++written;
    }
  }
  out << written << " diagram files written to " << cfg.out << '\n';
  return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Census of immersed curves and 4-valent one-component maps"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string n_text, method_text, kind_text;
  std::optional<int> genus;

  auto add_common = [&](CLI::App* sub, bool with_n_required) {
    auto* nopt = sub->add_option("--n", n_text, "crossing number n, or a range a..b");
    if (with_n_required) nopt->required();
    sub->add_option("--method", method_text, "x, y, u, u-cyclic or z (frobenius selects --frobenius)");
    sub->add_option("--kind", kind_text, "OO, UO, OU, UU with optional b or c suffix");
    sub->add_option("--g", genus, "genus filter");
    sub->add_flag("--kink-free", cfg.filters.kink_free, "drop curves with a simple loop");
    sub->add_flag("--prime", cfg.filters.prime, "keep irreducible indecomposable curves only");
    sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1u, 256u));
    sub->add_option("--memory-mb", cfg.memory_mb, "memory budget for visited sets");
    sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", cfg.out, "output file (directory for export-diagrams)");
    sub->add_flag("--allow-slow", cfg.allow_slow, "lift the default enumeration envelope");
  };
  auto* count = app.add_subcommand("count", "print exact counts");
  add_common(count, false);
  count->add_flag("--frobenius", cfg.frobenius, "count all genera by the double coset formula");
  count->add_option("--load", cfg.load, "recount a catalog written by list");
  auto* list = app.add_subcommand("list", "write a JSON-lines catalog of classes");
  add_common(list, true);
  auto* verify = app.add_subcommand("verify", "run invariant checks");
  add_common(verify, false);
  verify->add_flag("--theorem4", cfg.theorem4, "structure identities only");
  verify->add_flag("--sumrules", cfg.sumrules, "orbit sum rules only");
  auto* exp = app.add_subcommand("export-diagrams", "write one diagram code per class");
  add_common(exp, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    cfg.subcommand = sub->get_name();
    cfg.genus = genus;
    if (cfg.genus && *cfg.genus < 0) throw InvalidInput("--g must be non-negative");
    if (!method_text.empty()) {
      std::string lower;
      for (char c : method_text) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      if (lower == "frobenius")
        cfg.frobenius = true;
      else
        cfg.method = parse_method(method_text);
    }
    if (!kind_text.empty()) cfg.kind = parse_kind(kind_text);
    if (!n_text.empty()) {
      std::tie(cfg.n_lo, cfg.n_hi) = parse_n_range(n_text);
    } else if (cfg.subcommand == "verify") {
      cfg.n_lo = 1;
      cfg.n_hi = 6;
    } else if (cfg.load.empty()) {
      throw InvalidInput("--n is required");
    }
    if (cfg.subcommand == "count") return cmd_count(cfg, out);
    if (cfg.subcommand == "list") return cmd_list(cfg, out);
    if (cfg.subcommand == "verify") return cmd_verify(cfg, out);
    return cmd_export_diagrams(cfg, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const OutOfEnvelope& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const MemoryBudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace immcensus::cli
