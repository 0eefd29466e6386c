// mv: enumerate MV crystals, decompose tensor products, and run the
// inequality checks.

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "mv/errors.hpp"
#include "mv/harness.hpp"

using namespace mv;
using harness::Json;

namespace {

struct Args {
  std::string type;
  std::string lambda, lambda1, lambda2;
  std::string out, in;
  std::uint64_t seed = 1;
  long long budget = 0;
  bool big = false;
  bool vertices = false;
  int element = -1;
};

Bounds bounds_for(const Args& a) {
  Bounds b;
  if (a.big) {
    b.weyl_order *= 100;
    b.reduced_words *= 100;
    b.crystal_size *= 100;
  }
  return b;
}

RootSystemPtr need_type(const Args& a) {
  if (a.type.empty()) throw ConfigError("--type is required");
  return RootSystem::make(a.type, bounds_for(a));
}

DominantLabels need_labels(const std::string& csv, const char* flag, const RootSystem& rs) {
  if (csv.empty()) throw ConfigError(std::string(flag) + " is required");
  DominantLabels l(io::parse_labels(csv));
  rs.datum().check_rank(l.rank(), flag);
  return l;
}

void emit(const Json& j, const std::string& out) {
  const std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw ConfigError("cannot write " + out);
  f << text;
}

int run_enum(const Args& a) {
  auto rs = need_type(a);
  const Crystal c = enumerate_mv(rs, need_labels(a.lambda, "--lambda", *rs));
  emit(io::crystal_to_json(c, a.vertices), a.out);
  return 0;
}

int run_tensor(const Args& a) {
  auto rs = need_type(a);
  const auto l1 = need_labels(a.lambda1, "--lambda1", *rs);
  const auto l2 = need_labels(a.lambda2, "--lambda2", *rs);
  const Crystal c1 = enumerate_mv(rs, l1);
  const Crystal c2 = enumerate_mv(rs, l2);
  Json j;
  j["series"] = series_name(rs->datum().series());
  j["rank"] = rs->rank();
  j["lambda1"] = l1.labels();
  j["lambda2"] = l2.labels();
  Json dec = Json::array();
  for (const auto& [l, m] : decompose(c1, c2)) {
    Json e;
    e["lambda"] = l.labels();
    e["multiplicity"] = m;
    dec.push_back(std::move(e));
  }
  j["decomposition"] = std::move(dec);
  Json pairs = Json::array();
  for (std::size_t a1 = 0; a1 < c1.elements.size(); ++a1) {
    for (std::size_t a2 = 0; a2 < c2.elements.size(); ++a2) {
      const Component comp = extract_component(c1.elements[a1], c2.elements[a2]);
      Json e;
      e["P1"] = a1;
      e["P2"] = a2;
      e["component"] = comp.lambda.labels();
      e["P"] = io::polytope_to_json(comp.polytope, a.vertices);
      pairs.push_back(std::move(e));
    }
  }
  j["pairs"] = std::move(pairs);
  emit(j, a.out);
  return 0;
}

int run_verify(const std::string& check, const Args& a) {
  std::vector<harness::CheckReport> reports;
  if (check == "all") {
    harness::Options opts;
    opts.seed = a.seed;
    opts.budget = a.budget;
    opts.bounds = bounds_for(a);
    reports = harness::run_default_scopes(opts, a.type);
  } else {
    auto rs = need_type(a);
    if (check == "main" || check == "fact-omega" || check == "decomposition") {
      const auto l1 = need_labels(a.lambda1, "--lambda1", *rs);
      const auto l2 = need_labels(a.lambda2, "--lambda2", *rs);
      if (check == "main") reports.push_back(harness::check_main_theorem(rs, l1, l2));
      if (check == "fact-omega") reports.push_back(harness::check_fact_and_omega(rs, l1, l2));
      if (check == "decomposition") reports.push_back(harness::check_decomposition(rs, l1, l2));
    } else {
      const auto l = need_labels(a.lambda, "--lambda", *rs);
      if (check == "inequalities") reports.push_back(harness::check_key_inequalities(rs, l));
      if (check == "ehrig") reports.push_back(harness::check_ehrig_kamkas(rs, l));
      if (check == "propkey") reports.push_back(harness::check_prop_key(rs, l, a.budget));
      if (check == "gate") {
        reports.push_back(harness::check_oracle_gate(rs, l));
        reports.push_back(harness::check_crystal_axioms(rs, l));
      }
      if (check == "coherence") {
        harness::CoherenceOptions co;
        co.seed = a.seed;
        reports.push_back(harness::check_tropical_coherence(rs, l, co));
      }
    }
  }
  bool pass = true;
  for (const auto& r : reports) pass = pass && r.pass;
  emit(reports.size() == 1 ? harness::to_json(reports.front()) : harness::to_json(reports), a.out);
  for (const auto& r : reports) {
    std::cerr << (r.pass ? "ok   " : "FAIL ") << r.check << " " << r.scope.dump() << " cases=" << r.cases
              << " violations=" << r.violations.size() << "\n";
  }
  return pass ? 0 : 1;
}

int run_show(const Args& a) {
  if (a.in.empty()) throw ConfigError("--in is required");
  std::ifstream f(a.in);
  if (!f) throw ConfigError("cannot read " + a.in);
  Json j;
  try {
    j = Json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(a.in + ": " + e.what());
  }
  if (!j.contains("elements")) {
    std::cout << io::format_vertex_table(io::polytope_from_json(j));
    return 0;
  }
  const Json& elems = j["elements"];
  if (!elems.is_array() || elems.empty()) throw ConfigError(a.in + ": no elements");
  auto rs = RootSystem::make(RootDatum::build(parse_series(elems[0].at("series").get<std::string>()),
                                              elems[0].at("rank").get<int>()));
  if (a.element >= 0) {
    if (static_cast<std::size_t>(a.element) >= elems.size()) throw ConfigError("--element out of range");
    std::cout << io::format_vertex_table(io::polytope_from_json(elems[a.element], rs));
    return 0;
  }
  for (const auto& e : elems) std::cout << io::format_vertex_table(io::polytope_from_json(e, rs));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MV polytopes, their crystal structure and tensor products"};
  app.require_subcommand(1);
  Args a;
  const std::vector<std::string> types{"A1", "A2", "A3", "D4"};

  auto add_type = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--type", a.type, "root datum")->check(CLI::IsMember(types));
    if (required) opt->required();
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", a.out, "write JSON here instead of stdout"); };

  auto* en = app.add_subcommand("enum", "enumerate P(lambda) with its crystal paths");
  add_type(en, true);
  en->add_option("--lambda", a.lambda, "highest weight, e.g. 1,1")->required();
  en->add_flag("--vertices", a.vertices, "include every GGMS vertex");
  en->add_flag("--big", a.big, "raise size bounds a hundredfold");
  add_out(en);

  auto* te = app.add_subcommand("tensor", "decompose P(lambda1) (x) P(lambda2)");
  add_type(te, true);
  te->add_option("--lambda1", a.lambda1)->required();
  te->add_option("--lambda2", a.lambda2)->required();
  te->add_flag("--vertices", a.vertices, "include every GGMS vertex");
  te->add_flag("--big", a.big, "raise size bounds a hundredfold");
  add_out(te);

  auto* ve = app.add_subcommand("verify", "run checks and print JSON reports");
  std::string check;
  ve->add_option("check", check, "main | inequalities | ehrig | propkey | fact-omega | all (also gate, decomposition, coherence)")
      ->required()
      ->check(CLI::IsMember(
          {"main", "inequalities", "ehrig", "propkey", "fact-omega", "all", "gate", "decomposition", "coherence"}));
  add_type(ve, false);
  ve->add_option("--lambda", a.lambda);
  ve->add_option("--lambda1", a.lambda1);
  ve->add_option("--lambda2", a.lambda2);
  ve->add_option("--seed", a.seed, "seed for randomized path tests");
  ve->add_option("--budget", a.budget, "max c-vectors per expression in propkey (0 = unlimited)")
      ->check(CLI::NonNegativeNumber);
  ve->add_flag("--big", a.big, "raise size bounds a hundredfold");
  add_out(ve);

  auto* sh = app.add_subcommand("show", "print vertex coordinates from a JSON file");
  sh->add_option("--in", a.in)->required();
  sh->add_option("--element", a.element, "index into a crystal file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*en) return run_enum(a);
    if (*te) return run_tensor(a);
    if (*ve) return run_verify(check, a);
    if (*sh) return run_show(a);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const SizeError& e) {
    std::cerr << "error: " << e.what() << " (try --big)\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
