#include "mv/harness.hpp"

#include <chrono>
#include <functional>
#include <random>

#include "mv/errors.hpp"
#include "mv/oracle.hpp"

namespace mv::harness {

namespace {

using Clock = std::chrono::steady_clock;

class Timer {
 public:
  explicit Timer(CheckReport& r) : report_(r), start_(Clock::now()) {}
  ~Timer() { report_.wall_time += std::chrono::duration<double>(Clock::now() - start_).count(); }

 private:
  CheckReport& report_;
  Clock::time_point start_;
};

Json scope_of(const RootSystem& rs) {
  Json s;
  s["type"] = rs.name();
  return s;
}

Json scope_of(const RootSystem& rs, const DominantLabels& lambda) {
  Json s = scope_of(rs);
  s["lambda"] = lambda.labels();
  return s;
}

Json scope_of(const RootSystem& rs, const DominantLabels& l1, const DominantLabels& l2) {
  Json s = scope_of(rs);
  s["lambda1"] = l1.labels();
  s["lambda2"] = l2.labels();
  return s;
}

CheckReport start(std::string check, Json scope) {
  CheckReport r;
  r.check = std::move(check);
  r.scope = std::move(scope);
  return r;
}

Json element_name(const RootSystem& rs, WeylElement w) { return io::word_to_json(rs.weyl().reduced_word(w)); }

// Bruhat order and minimal coset representatives, computed once per scope.
struct OrderTables {
  std::vector<std::vector<bool>> bruhat;                  // [z][x]
  std::vector<std::vector<WeylElement>> coset_rep;        // [j][w]
  std::vector<std::vector<std::vector<bool>>> parabolic;  // [j][z][x]

  explicit OrderTables(const WeylGroup& W) {
    const std::size_t n = W.order();
    bruhat.assign(n, std::vector<bool>(n));
    for (WeylElement z : W.elements())
      for (WeylElement x : W.elements()) bruhat[z.index()][x.index()] = W.bruhat_leq(z, x);
    coset_rep.assign(W.rank(), std::vector<WeylElement>(n));
    parabolic.assign(W.rank(), std::vector<std::vector<bool>>(n, std::vector<bool>(n)));
    for (int j = 0; j < W.rank(); ++j) {
      for (WeylElement w : W.elements()) coset_rep[j][w.index()] = W.min_coset_rep(w, ParabolicSubset{j});
      for (WeylElement z : W.elements())
        for (WeylElement x : W.elements())
          parabolic[j][z.index()][x.index()] =
              bruhat[coset_rep[j][z.index()].index()][coset_rep[j][x.index()].index()];
    }
  }
};

void key_inequalities(const MVPolytope& p, const OrderTables& t, CheckReport& r) {
  const RootSystem& rs = p.root_system();
  const WeylGroup& W = rs.weyl();
  std::vector<HVector> pulled;
  pulled.reserve(W.order());
  for (WeylElement w : W.elements()) pulled.push_back(W.act(W.inverse(w), p.vertex(w)));

  for (WeylElement z : W.elements()) {
    for (WeylElement x : W.elements()) {
      if (t.bruhat[z.index()][x.index()]) {
        ++r.cases;
        if (!rs.datum().dominance_ge(pulled[z.index()], pulled[x.index()])) {
          Json v;
          v["kind"] = "bruhat";
          v["polytope"] = io::polytope_to_json(p);
          v["z"] = element_name(rs, z);
          v["x"] = element_name(rs, x);
          r.add_violation(std::move(v));
        }
      }
      for (int j = 0; j < rs.rank(); ++j) {
        if (!t.parabolic[j][z.index()][x.index()]) continue;
        ++r.cases;
        if (p.polytope().bz(z, j) < p.polytope().bz(x, j)) {
          Json v;
          v["kind"] = "parabolic";
          v["polytope"] = io::polytope_to_json(p);
          v["z"] = element_name(rs, z);
          v["x"] = element_name(rs, x);
          v["j"] = j + 1;
          r.add_violation(std::move(v));
        }
      }
    }
  }
}

}  // namespace

void CheckReport::add_violation(Json v) {
  violations.push_back(std::move(v));
  pass = false;
}

void CheckReport::merge(const CheckReport& other) {
  cases += other.cases;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  pass = pass && other.pass;
  wall_time += other.wall_time;
}

Json to_json(const CheckReport& r) {
  Json j;
  j["check"] = r.check;
  j["scope"] = r.scope;
  j["cases"] = r.cases;
  j["violations"] = r.violations;
  j["pass"] = r.pass;
  return j;
}

Json to_json(const std::vector<CheckReport>& rs) {
  Json out = Json::array();
  for (const auto& r : rs) out.push_back(to_json(r));
  return out;
}

// -------------------------------------------------------------- oracle gate

CheckReport check_oracle_gate(const RootSystemPtr& rs, const DominantLabels& lambda) {
  CheckReport r = start("oracle-gate", scope_of(*rs, lambda));
  Timer timer(r);
  const Crystal c = enumerate_mv(rs, lambda);
  const Integer dim = oracle::weyl_dimension(rs->datum(), lambda);
  r.cases = static_cast<long long>(c.elements.size());
  if (Integer(c.elements.size()) != dim) {
    Json v;
    v["kind"] = "dimension";
    v["crystal"] = c.elements.size();
    v["weyl_dimension"] = dim.str();
    r.add_violation(std::move(v));
  }

  std::map<HVector, Integer> crystal_char;
  for (const auto& p : c.elements) crystal_char[weight(p)] += 1;
  const auto fr = oracle::freudenthal_multiplicities(rs->weyl(), lambda, rs->bounds().crystal_size);
  if (crystal_char != fr.mult) {
    for (const auto& [w, m] : fr.mult) {
      auto it = crystal_char.find(w);
      Integer got = it == crystal_char.end() ? Integer(0) : it->second;
      if (got != m) {
        Json v;
        v["kind"] = "character";
        v["weight"] = io::vector_to_json(w);
        v["crystal"] = got.str();
        v["freudenthal"] = m.str();
        r.add_violation(std::move(v));
      }
    }
    for (const auto& [w, m] : crystal_char) {
      if (!fr.mult.count(w)) {
        Json v;
        v["kind"] = "character";
        v["weight"] = io::vector_to_json(w);
        v["crystal"] = m.str();
        v["freudenthal"] = "0";
        r.add_violation(std::move(v));
      }
    }
  }

  for (const auto& p : c.elements) {
    if (!validate_mv(rs, p.lusztig())) {
      Json v;
      v["kind"] = "not-mv";
      v["polytope"] = io::polytope_to_json(p);
      r.add_violation(std::move(v));
    }
  }
  return r;
}

// ----------------------------------------------------------- crystal axioms

// D4 has hundreds of j-initial words; the first few in graph order suffice there.
constexpr int kMaxInitialWords = 32;

CheckReport check_crystal_axioms(const RootSystemPtr& rs, const DominantLabels& lambda) {
  CheckReport r = start("crystal-axioms", scope_of(*rs, lambda));
  Timer timer(r);
  const Crystal c = enumerate_mv(rs, lambda);
  const WordGraph& graph = rs->words();
  auto fail = [&](const char* kind, const MVPolytope& p, int j) {
    Json v;
    v["kind"] = kind;
    v["polytope"] = io::polytope_to_json(p);
    v["j"] = j + 1;
    r.add_violation(std::move(v));
  };

  for (const auto& p : c.elements) {
    for (int j = 0; j < rs->rank(); ++j) {
      ++r.cases;
      const int eps = epsilon(p, j);
      const int ph = phi(p, j);
      if (lengths_on_initial_word(p, j)[0] != eps) fail("epsilon-vs-lusztig", p, j);
      if (Rational(ph - eps) != rs->datum().pair_alpha(weight(p), j)) fail("phi-minus-epsilon", p, j);

      // String lengths counted with the literal hull cutoff and e_j.
      int down = 0;
      for (auto q = lower_by_hull(p, j); q; q = lower_by_hull(*q, j)) ++down;
      if (down != ph) fail("phi-vs-string", p, j);
      int up = 0;
      for (auto q = raise(p, j); q; q = raise(*q, j)) ++up;
      if (up != eps) fail("epsilon-vs-string", p, j);

      auto f = lower(p, j);
      if (f != lower_by_hull(p, j)) fail("lower-vs-hull", p, j);
      int tried = 0;
      for (std::size_t node = 0; node < graph.size() && tried < kMaxInitialWords; ++node) {
        if (graph.word(static_cast<int>(node)).front() != j) continue;
        ++tried;
        if (lower_via(p, j, static_cast<int>(node)) != f) fail("lower-word-dependence", p, j);
      }
      if (f) {
        if (weight(*f) != weight(p) - HVector::basis(rs->rank(), j)) fail("lower-weight", p, j);
        if (raise(*f, j) != p) fail("raise-lower-inverse", p, j);
      }
      MVPolytope q = p;
      for (int k = 0; k < ph; ++k) q = *lower(q, j);
      if (!(lower_max(p, j) == q)) fail("lower-max", p, j);
    }
  }
  return r;
}

// ------------------------------------------------------------- main theorem

CheckReport check_main_theorem(const RootSystemPtr& rs, const DominantLabels& l1, const DominantLabels& l2) {
  CheckReport r = start("main", scope_of(*rs, l1, l2));
  Timer timer(r);
  const Crystal c1 = enumerate_mv(rs, l1);
  const Crystal c2 = enumerate_mv(rs, l2);
  const WeylGroup& W = rs->weyl();
  for (const auto& p1 : c1.elements) {
    for (const auto& p2 : c2.elements) {
      ++r.cases;
      const Component comp = extract_component(p1, p2);
      const PseudoWeylPolytope sum = minkowski_sum(p1.polytope(), p2.polytope());
      auto witness = [&](const char* kind) {
        Json v;
        v["kind"] = kind;
        v["P1"] = io::polytope_to_json(p1);
        v["P2"] = io::polytope_to_json(p2);
        v["P"] = io::polytope_to_json(comp.polytope);
        return v;
      };
      if (!contains(sum, comp.polytope.polytope())) r.add_violation(witness("not-contained"));
      for (std::size_t g = 0; g < rs->num_chamber_weights(); ++g) {
        const Rational gap = comp.polytope.bz()[static_cast<int>(g)] - sum.bz()[static_cast<int>(g)];
        if (gap < 0) {
          Json v = witness("bz-gap");
          v["gamma"] = rs->chamber_weight(static_cast<int>(g));
          v["gap"] = to_string(gap);
          r.add_violation(std::move(v));
        }
      }
      for (WeylElement w : W.elements()) {
        const WeylElement wi = W.inverse(w);
        if (!rs->datum().dominance_ge(W.act(wi, comp.polytope.vertex(w)), W.act(wi, sum.vertex(w)))) {
          Json v = witness("lattice-gap");
          v["w"] = element_name(*rs, w);
          r.add_violation(std::move(v));
        }
      }
    }
  }
  return r;
}

CheckReport check_decomposition(const RootSystemPtr& rs, const DominantLabels& l1, const DominantLabels& l2) {
  CheckReport r = start("decomposition", scope_of(*rs, l1, l2));
  Timer timer(r);
  const Decomposition crystal = decompose(rs, l1, l2);
  const auto classical = oracle::product_decomposition(rs->weyl(), l1, l2, rs->bounds().crystal_size);
  r.cases = static_cast<long long>(classical.size());
  Decomposition expected(classical.begin(), classical.end());
  if (crystal != expected) {
    Json v;
    v["kind"] = "multiplicities";
    Json a = Json::array(), b = Json::array();
    for (const auto& [l, m] : crystal) a.push_back(Json::array({l.labels(), m}));
    for (const auto& [l, m] : expected) b.push_back(Json::array({l.labels(), m}));
    v["crystal"] = a;
    v["characters"] = b;
    r.add_violation(std::move(v));
  }
  return r;
}

// -------------------------------------------------------- key inequalities

CheckReport check_key_inequalities(const MVPolytope& p) {
  CheckReport r = start("inequalities", scope_of(p.root_system(), p.lambda()));
  Timer timer(r);
  key_inequalities(p, OrderTables(p.root_system().weyl()), r);
  return r;
}

CheckReport check_key_inequalities(const RootSystemPtr& rs, const DominantLabels& lambda) {
  CheckReport r = start("inequalities", scope_of(*rs, lambda));
  Timer timer(r);
  const OrderTables tables(rs->weyl());
  for (const auto& p : enumerate_mv(rs, lambda).elements) key_inequalities(p, tables, r);
  return r;
}

// ------------------------------------------------------------ Ehrig / BZ

namespace {

void ehrig_kamkas(const MVPolytope& p, const std::vector<std::vector<Word>>& expressions, CheckReport& r) {
  const RootSystem& rs = p.root_system();
  const WeylGroup& W = rs.weyl();
  for (WeylElement x : W.elements()) {
    for (const Word& word : expressions[x.index()]) {
      ++r.cases;
      if (vertex_via_ehrig(p, word) != p.vertex(x)) {
        Json v;
        v["kind"] = "ehrig";
        v["polytope"] = io::polytope_to_json(p);
        v["expression"] = io::word_to_json(word);
        r.add_violation(std::move(v));
      }
    }
  }
  for (std::size_t node = 0; node < rs.words().size(); ++node) {
    const KashiwaraDatum k = kashiwara_data(p, static_cast<int>(node));
    const Word& word = rs.words().word(static_cast<int>(node));
    const auto& prefix = rs.prefix(static_cast<int>(node));
    for (std::size_t l = 0; l < word.size(); ++l) {
      ++r.cases;
      const Rational expected = p.polytope().bz(prefix[l], word[l]) - p.polytope().bz(prefix[l + 1], word[l]);
      if (Rational(k.p[l]) != expected) {
        Json v;
        v["kind"] = "kamnitzer-kashiwara";
        v["polytope"] = io::polytope_to_json(p);
        v["word"] = io::word_to_json(word);
        v["l"] = l + 1;
        v["p"] = k.p[l];
        v["bz_difference"] = to_string(expected);
        r.add_violation(std::move(v));
      }
    }
  }
}

std::vector<std::vector<Word>> all_expressions(const RootSystem& rs) {
  std::vector<std::vector<Word>> out;
  for (WeylElement x : rs.weyl().elements()) {
    out.push_back(reduced_words_of(rs.weyl(), x, rs.bounds().reduced_words));
  }
  return out;
}

}  // namespace

CheckReport check_ehrig_kamkas(const MVPolytope& p) {
  CheckReport r = start("ehrig", scope_of(p.root_system(), p.lambda()));
  Timer timer(r);
  ehrig_kamkas(p, all_expressions(p.root_system()), r);
  return r;
}

CheckReport check_ehrig_kamkas(const RootSystemPtr& rs, const DominantLabels& lambda) {
  CheckReport r = start("ehrig", scope_of(*rs, lambda));
  Timer timer(r);
  const auto expressions = all_expressions(*rs);
  for (const auto& p : enumerate_mv(rs, lambda).elements) ehrig_kamkas(p, expressions, r);
  return r;
}

// ---------------------------------------------------------------- Prop key

namespace {

void prop_key(const MVPolytope& p, const std::vector<std::vector<Word>>& expressions, long long budget,
              CheckReport& r) {
  const RootSystem& rs = p.root_system();
  for (WeylElement x : rs.weyl().elements()) {
    for (const Word& word : expressions[x.index()]) {
      const HVector target = weight(max_cascade(p, word));
      long long tried = 0;
      bool truncated = false;
      std::vector<int> cs;
      std::function<void(const MVPolytope&, std::size_t)> walk = [&](const MVPolytope& q, std::size_t t) {
        if (truncated) return;
        if (t == word.size()) {
          if (budget > 0 && tried >= budget) {
            truncated = true;
            return;
          }
          ++tried;
          ++r.cases;
          if (!rs.datum().dominance_ge(weight(q), target)) {
            Json v;
            v["kind"] = "prop-key";
            v["polytope"] = io::polytope_to_json(p);
            v["expression"] = io::word_to_json(word);
            v["c"] = cs;
            r.add_violation(std::move(v));
          }
          return;
        }
        std::optional<MVPolytope> cur = q;
        for (int c = 0; cur; ++c) {
          cs.push_back(c);
          walk(*cur, t + 1);
          cs.pop_back();
          cur = lower(*cur, word[t]);
        }
      };
      walk(p, 0);
      if (truncated) r.scope["truncated"] = true;
    }
  }
}

}  // namespace

CheckReport check_prop_key(const MVPolytope& p, long long budget) {
  CheckReport r = start("propkey", scope_of(p.root_system(), p.lambda()));
  Timer timer(r);
  prop_key(p, all_expressions(p.root_system()), budget, r);
  return r;
}

CheckReport check_prop_key(const RootSystemPtr& rs, const DominantLabels& lambda, long long budget) {
  CheckReport r = start("propkey", scope_of(*rs, lambda));
  Timer timer(r);
  const auto expressions = all_expressions(*rs);
  for (const auto& p : enumerate_mv(rs, lambda).elements) prop_key(p, expressions, budget, r);
  return r;
}

// -------------------------------------------------------- Fact and Omega

CheckReport check_fact_and_omega(const RootSystemPtr& rs, const DominantLabels& l1, const DominantLabels& l2) {
  CheckReport r = start("fact-omega", scope_of(*rs, l1, l2));
  Timer timer(r);
  const Crystal c1 = enumerate_mv(rs, l1);
  const Crystal c2 = enumerate_mv(rs, l2);
  for (const Crystal* c : {&c1, &c2}) {
    for (const auto& p : c->elements) {
      for (int j = 0; j < rs->rank(); ++j) {
        auto f = lower(p, j);
        if (!f) continue;
        ++r.cases;
        if (!contains(f->polytope(), p.polytope())) {
          Json v;
          v["kind"] = "fact";
          v["polytope"] = io::polytope_to_json(p);
          v["j"] = j + 1;
          r.add_violation(std::move(v));
        }
      }
    }
  }
  const WeylGroup& W = rs->weyl();
  for (const auto& p1 : c1.elements) {
    for (const auto& p2 : c2.elements) {
      const Component comp = extract_component(p1, p2);
      for (WeylElement w : W.elements()) {
        ++r.cases;
        if (!oracle::omega_membership(W, comp.polytope.vertex(w) - p2.vertex(w), l1)) {
          Json v;
          v["kind"] = "omega";
          v["P1"] = io::polytope_to_json(p1);
          v["P2"] = io::polytope_to_json(p2);
          v["w"] = element_name(*rs, w);
          r.add_violation(std::move(v));
        }
      }
    }
  }
  return r;
}

// ----------------------------------------------------- tropical coherence

CheckReport check_tropical_coherence(const RootSystemPtr& rs, const DominantLabels& lambda,
                                     const CoherenceOptions& opts) {
  CheckReport r = start("coherence", scope_of(*rs, lambda));
  r.scope["seed"] = opts.seed;
  Timer timer(r);
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> entry(0, opts.max_entry);

  for (int s = 0; s < opts.random_vectors; ++s) {
    Lengths n(3);
    for (int& x : n) x = entry(rng);
    const BraidMove three{BraidMove::Kind::three_move, 0, 0, 1};
    const BraidMove two{BraidMove::Kind::two_move, 0, 0, 1};
    const Lengths once = apply_move(n, three);
    r.cases += 2;
    if (apply_move(once, three) != n || once[1] != std::min(n[0], n[2])) {
      Json v;
      v["kind"] = "three-move";
      v["N"] = n;
      r.add_violation(std::move(v));
    }
    if (apply_move(apply_move(n, two), two) != n) {
      Json v;
      v["kind"] = "two-move";
      v["N"] = n;
      r.add_violation(std::move(v));
    }
  }

  const Crystal c = enumerate_mv(rs, lambda);
  std::vector<std::size_t> picks;
  if (opts.samples <= 0) {
    for (std::size_t k = 0; k < c.elements.size(); ++k) picks.push_back(k);
  } else {
    std::uniform_int_distribution<std::size_t> pick(0, c.elements.size() - 1);
    for (int s = 0; s < opts.samples; ++s) picks.push_back(pick(rng));
  }
  const WordGraph& graph = rs->words();
  for (std::size_t k : picks) {
    const MVPolytope& p = c.elements[k];
    for (std::size_t node = 0; node < graph.size(); ++node) {
      ++r.cases;
      const Lengths a = graph.transition(p.lengths(), 0, static_cast<int>(node));
      const Lengths b =
          WordGraph::replay(p.lengths(), graph.random_path(0, static_cast<int>(node), rng, opts.walk_steps));
      bool nonneg = std::all_of(a.begin(), a.end(), [](int x) { return x >= 0; });
      if (a != b || !nonneg) {
        Json v;
        v["kind"] = "path-dependence";
        v["polytope"] = io::polytope_to_json(p);
        v["target_word"] = io::word_to_json(graph.word(static_cast<int>(node)));
        r.add_violation(std::move(v));
      }
    }
  }
  return r;
}

// --------------------------------------------------------- default scopes

std::vector<CheckReport> run_default_scopes(const Options& opts, const std::string& type_filter) {
  using L = DominantLabels;
  std::vector<CheckReport> out;
  auto want = [&](const char* type) { return type_filter.empty() || type_filter == type; };

  if (want("A1")) {
    auto rs = RootSystem::make("A1", opts.bounds);
    for (int m : {1, 2, 3}) {
      out.push_back(check_oracle_gate(rs, L({m})));
      out.push_back(check_crystal_axioms(rs, L({m})));
    }
    out.push_back(check_main_theorem(rs, L({1}), L({1})));
    out.push_back(check_decomposition(rs, L({1}), L({1})));
    out.push_back(check_fact_and_omega(rs, L({1}), L({1})));
  }
  if (want("A2")) {
    auto rs = RootSystem::make("A2", opts.bounds);
    for (const auto& l : {L({1, 0}), L({0, 1}), L({1, 1}), L({2, 0}), L({2, 1}), L({2, 2})}) {
      out.push_back(check_oracle_gate(rs, l));
      out.push_back(check_crystal_axioms(rs, l));
    }
    const std::vector<L> small{L({1, 0}), L({0, 1}), L({1, 1})};
    for (const auto& a : small) {
      for (const auto& b : small) {
        out.push_back(check_main_theorem(rs, a, b));
        out.push_back(check_decomposition(rs, a, b));
        out.push_back(check_fact_and_omega(rs, a, b));
      }
    }
    out.push_back(check_key_inequalities(rs, L({2, 2})));
    out.push_back(check_ehrig_kamkas(rs, L({1, 1})));
    out.push_back(check_prop_key(rs, L({1, 1}), opts.budget));
    out.push_back(check_tropical_coherence(rs, L({1, 1}), CoherenceOptions{opts.seed}));
  }
  if (want("A3")) {
    auto rs = RootSystem::make("A3", opts.bounds);
    for (const auto& l : {L({1, 0, 0}), L({0, 1, 0}), L({1, 0, 1}), L({1, 1, 1})}) {
      out.push_back(check_oracle_gate(rs, l));
      out.push_back(check_crystal_axioms(rs, l));
    }
    for (const auto& [a, b] : {std::pair{L({1, 0, 0}), L({0, 1, 0})}, std::pair{L({1, 0, 0}), L({1, 0, 0})}}) {
      out.push_back(check_main_theorem(rs, a, b));
      out.push_back(check_decomposition(rs, a, b));
      out.push_back(check_fact_and_omega(rs, a, b));
    }
    out.push_back(check_key_inequalities(rs, L({1, 1, 1})));
    out.push_back(check_ehrig_kamkas(rs, L({1, 0, 1})));
    CoherenceOptions co{opts.seed};
    co.samples = 200;
    out.push_back(check_tropical_coherence(rs, L({1, 1, 1}), co));
  }
  if (type_filter == "D4") {
    auto rs = RootSystem::make("D4", opts.bounds);
    const L vec({1, 0, 0, 0});
    out.push_back(check_oracle_gate(rs, vec));
    out.push_back(check_crystal_axioms(rs, vec));
    out.push_back(check_main_theorem(rs, vec, vec));
    out.push_back(check_decomposition(rs, vec, vec));
    out.push_back(check_key_inequalities(rs, vec));
  }
  if (out.empty()) throw ConfigError("no default scopes for type '" + type_filter + "'");
  return out;
}

}  // namespace mv::harness
