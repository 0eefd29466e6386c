#include "mv/io.hpp"

#include <sstream>

#include "mv/errors.hpp"

namespace mv::io {

Json vector_to_json(const HVector& v) {
  Json out = Json::array();
  for (const auto& c : v.coords()) out.push_back(to_string(c));
  return out;
}

Json word_to_json(const Word& w) {
  Json out = Json::array();
  for (int i : w) out.push_back(i + 1);
  return out;
}

Json polytope_to_json(const MVPolytope& p, bool vertices) {
  const RootSystem& rs = p.root_system();
  Json j;
  j["series"] = series_name(rs.datum().series());
  j["rank"] = rs.rank();
  j["lambda"] = p.lambda().labels();
  j["base_word"] = word_to_json(rs.words().base_word());
  j["N"] = p.lengths();
  if (vertices) {
    Json vs = Json::array();
    for (WeylElement w : rs.weyl().elements()) {
      Json e;
      e["w"] = word_to_json(rs.weyl().reduced_word(w));
      e["mu"] = vector_to_json(p.vertex(w));
      vs.push_back(std::move(e));
    }
    j["vertices"] = std::move(vs);
  }
  return j;
}

namespace {

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ConfigError(std::string("polytope JSON lacks \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("polytope JSON field \"") + key + "\": " + e.what());
  }
}

}  // namespace

MVPolytope polytope_from_json(const Json& j, const RootSystemPtr& rs) {
  const Series series = parse_series(field<std::string>(j, "series"));
  const int rank = field<int>(j, "rank");
  if (series != rs->datum().series() || rank != rs->rank()) {
    throw ConfigError("polytope JSON is for a different root datum");
  }
  DominantLabels lambda(field<std::vector<int>>(j, "lambda"));
  rs->datum().check_rank(lambda.rank(), "lambda");
  Word word = field<std::vector<int>>(j, "base_word");
  for (int& i : word) {
    if (i < 1 || i > rank) throw ConfigError("base_word letter out of range");
    --i;
  }
  Lengths n = field<std::vector<int>>(j, "N");
  if (n.size() != word.size()) throw ConfigError("N and base_word have different lengths");
  int node = 0;
  try {
    node = rs->words().node_of(word);
  } catch (const ContractError&) {
    throw ConfigError("base_word is not a reduced word of w0");
  }
  LusztigDatum l{lambda, node, n};
  if (!validate_mv(rs, l)) throw ConfigError("polytope JSON does not describe an MV polytope in P(lambda)");
  return MVPolytope::from_lusztig(rs, l);
}

MVPolytope polytope_from_json(const Json& j) {
  const Series series = parse_series(field<std::string>(j, "series"));
  const int rank = field<int>(j, "rank");
  return polytope_from_json(j, RootSystem::make(RootDatum::build(series, rank)));
}

Json crystal_to_json(const Crystal& c, bool vertices) {
  Json out;
  Json elems = Json::array();
  for (std::size_t k = 0; k < c.elements.size(); ++k) {
    Json e = polytope_to_json(c.elements[k], vertices);
    e["crystal_path"] = word_to_json(c.paths[k]);
    elems.push_back(std::move(e));
  }
  if (!c.elements.empty()) {
    const RootSystem& rs = c.elements.front().root_system();
    out["series"] = series_name(rs.datum().series());
    out["rank"] = rs.rank();
  }
  out["lambda"] = c.lambda.labels();
  out["size"] = c.elements.size();
  out["elements"] = std::move(elems);
  return out;
}

std::vector<int> parse_labels(const std::string& csv) {
  std::vector<int> out;
  if (!csv.empty() && csv.back() == ',') throw ConfigError("trailing comma in '" + csv + "'");
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 6) {
      throw ConfigError("expected comma-separated nonnegative integers, got '" + csv + "'");
    }
    out.push_back(std::stoi(item));
  }
  if (out.empty()) throw ConfigError("empty label list");
  return out;
}

std::string format_vertex_table(const MVPolytope& p) {
  const RootSystem& rs = p.root_system();
  std::ostringstream os;
  os << rs.name() << " lambda=" << to_string(p.lambda()) << " N=";
  for (std::size_t k = 0; k < p.lengths().size(); ++k) os << (k ? "," : "") << p.lengths()[k];
  os << "\n";
  for (WeylElement w : rs.weyl().elements()) {
    const Word& word = rs.weyl().reduced_word(w);
    std::string name;
    if (word.empty()) name = "e";
    for (int i : word) name += "s" + std::to_string(i + 1);
    os << "  mu_" << name << " = " << to_string(p.vertex(w)) << "\n";
  }
  return os.str();
}

}  // namespace mv::io
