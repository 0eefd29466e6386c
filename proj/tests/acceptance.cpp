// Runs every acceptance criterion and prints one PASS/FAIL line each.
// argv[1], if given, is the mv executable used for the determinism check.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "mv/harness.hpp"
#include "mv/oracle.hpp"

using namespace mv;
using namespace mv::harness;
using L = DominantLabels;

namespace {

struct Outcome {
  bool ok = true;
  long long cases = 0;
  std::string note;

  void take(const CheckReport& r) {
    cases += r.cases;
    if (!r.pass) {
      ok = false;
      note += " " + r.check + to_json(r)["scope"].dump() + " has " + std::to_string(r.violations.size()) +
              " violations;";
    }
  }
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      note += " " + what + ";";
    }
  }
};

int failures = 0;

void criterion(int n, const char* title, double limit, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.note += std::string(" exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit > 0 && secs >= limit) {
    o.ok = false;
    o.note += " over the " + std::to_string(static_cast<int>(limit)) + " s limit;";
  }
  if (!o.ok) ++failures;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f s", secs);
  std::cout << "criterion " << n << " [" << (o.ok ? "PASS" : "FAIL") << "] " << title << ": " << o.cases
            << " cases, " << buf << (o.note.empty() ? "" : " --") << o.note << std::endl;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  auto A1 = RootSystem::make("A1");
  auto A2 = RootSystem::make("A2");
  auto A3 = RootSystem::make("A3");

  const std::vector<L> a2_small{L({1, 0}), L({0, 1}), L({1, 1})};
  std::vector<std::pair<RootSystemPtr, std::pair<L, L>>> pairs;
  for (const auto& a : a2_small)
    for (const auto& b : a2_small) pairs.push_back({A2, {a, b}});
  pairs.push_back({A3, {L({1, 0, 0}), L({0, 1, 0})}});
  pairs.push_back({A3, {L({1, 0, 0}), L({1, 0, 0})}});

  criterion(1, "oracle gate", 60, [&] {
    Outcome o;
    struct Row {
      RootSystemPtr rs;
      L lambda;
      int dim;
    };
    const std::vector<Row> rows{{A1, L({1}), 2},          {A1, L({2}), 3},          {A1, L({3}), 4},
                                {A2, L({1, 0}), 3},       {A2, L({0, 1}), 3},       {A2, L({1, 1}), 8},
                                {A2, L({2, 0}), 6},       {A2, L({2, 1}), 15},      {A2, L({2, 2}), 27},
                                {A3, L({1, 0, 0}), 4},    {A3, L({0, 1, 0}), 6},    {A3, L({1, 0, 1}), 15},
                                {A3, L({1, 1, 1}), 64}};
    for (const auto& row : rows) {
      o.take(check_oracle_gate(row.rs, row.lambda));
      o.require(oracle::weyl_dimension(row.rs->datum(), row.lambda) == row.dim,
                "dimension of " + to_string(row.lambda));
    }
    return o;
  });

  criterion(2, "main theorem", 120, [&] {
    Outcome o;
    for (const auto& [rs, ls] : pairs) o.take(check_main_theorem(rs, ls.first, ls.second));
    return o;
  });

  criterion(3, "tensor decomposition", 0, [&] {
    Outcome o;
    for (const auto& [rs, ls] : pairs) o.take(check_decomposition(rs, ls.first, ls.second));
    o.require(decompose(A2, L({1, 0}), L({0, 1})) == Decomposition{{L({1, 1}), 1}, {L({0, 0}), 1}},
              "(1,0)x(0,1)");
    o.require(decompose(A2, L({1, 0}), L({1, 0})) == Decomposition{{L({2, 0}), 1}, {L({0, 1}), 1}},
              "(1,0)x(1,0)");
    return o;
  });

  criterion(4, "Bruhat and parabolic inequalities", 120, [&] {
    Outcome o;
    o.take(check_key_inequalities(A2, L({2, 2})));
    o.take(check_key_inequalities(A3, L({1, 1, 1})));
    return o;
  });

  criterion(5, "Ehrig formula and Kashiwara data", 60, [&] {
    Outcome o;
    o.take(check_ehrig_kamkas(A2, L({1, 1})));
    o.take(check_ehrig_kamkas(A3, L({1, 0, 1})));
    return o;
  });

  criterion(6, "weight inequality over the c-lattice", 60, [&] {
    Outcome o;
    auto r = check_prop_key(A2, L({1, 1}), 0);
    o.require(!r.scope.contains("truncated"), "c-lattice truncated");
    o.take(r);
    return o;
  });

  criterion(7, "f_j P contains P and Omega membership", 0, [&] {
    Outcome o;
    for (const auto& [rs, ls] : pairs) o.take(check_fact_and_omega(rs, ls.first, ls.second));
    return o;
  });

  criterion(8, "tropical coherence", 0, [&] {
    Outcome o;
    CoherenceOptions a2;
    a2.seed = 1;
    o.take(check_tropical_coherence(A2, L({1, 1}), a2));
    CoherenceOptions a3;
    a3.seed = 1;
    a3.random_vectors = 0;
    a3.samples = 200;
    o.take(check_tropical_coherence(A3, L({1, 1, 1}), a3));
    return o;
  });

  criterion(9, "deterministic reports", 0, [&] {
    Outcome o;
    if (cli.empty()) {
      Options opts;
      const std::string a = to_json(run_default_scopes(opts)).dump(2);
      const std::string b = to_json(run_default_scopes(opts)).dump(2);
      o.cases = 2;
      o.require(a == b, "in-process reports differ");
      return o;
    }
    const std::string f1 = "acceptance_run1.json", f2 = "acceptance_run2.json";
    for (const auto& f : {f1, f2}) {
      const std::string cmd = "\"" + cli + "\" verify all --seed 7 --out " + f + " 2>/dev/null";
      o.require(std::system(cmd.c_str()) == 0, "verify all exited nonzero");
      ++o.cases;
    }
    const std::string a = slurp(f1), b = slurp(f2);
    o.require(!a.empty(), "empty report");
    o.require(a == b, "reports differ");
    return o;
  });

  return failures == 0 ? 0 : 1;
}
