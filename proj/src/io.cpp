#include "cjcalc/io.hpp"

#include <cstdlib>
#include <fstream>

namespace cjcalc {

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(where + ": missing field \"" + key + "\"");
  return *it;
}

Int integer(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw InputError(what + ": expected an integer, got " + j.dump());
  return j.get<Int>();
}

const Json& array(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + ": expected an array");
  return j;
}

// The "type" field of a data file: a built-in name or a Cartan document.
void require_matching_type(const Json& j, const RootSystemPtr& rs, const std::string& where) {
  const Json& type = field(j, "type", where);
  const RootSystemPtr declared = type.is_string() ? RootSystem::of_type(type.get<std::string>()) : root_system_from_json(type);
  if (declared->cartan() != rs->cartan())
    throw InputError(where + ": file is for type " + type.dump() + " but the selected root system is " + rs->name());
}

}  // namespace

Json weight_to_json(const Weight& w) { return Json(std::vector<Int>(w.begin(), w.end())); }

Weight weight_from_json(const Json& j, std::size_t rank, const std::string& what) {
  array(j, what);
  if (j.size() != rank)
    throw InputError(what + ": expected " + std::to_string(rank) + " coordinates, got " + std::to_string(j.size()));
  Weight w(rank);
  for (std::size_t i = 0; i < rank; ++i) w[i] = integer(j[i], what);
  return w;
}

Json character_to_json(const Character& chi) {
  Json entries = Json::array();
  for (const auto& [w, m] : chi.terms()) entries.push_back({{"weight", weight_to_json(w)}, {"mult", m}});
  return {{"rank", chi.rank()}, {"entries", std::move(entries)}};
}

Character character_from_json(const Json& j, std::size_t rank) {
  const std::string where = "character";
  if (integer(field(j, "rank", where), "character rank") != static_cast<Int>(rank))
    throw InputError("character rank " + field(j, "rank", where).dump() + " does not match root system rank " + std::to_string(rank));
  Character out(rank);
  for (const Json& e : array(field(j, "entries", where), "character entries"))
    out.add_term(weight_from_json(field(e, "weight", "character entry"), rank, "character entry weight"),
                 integer(field(e, "mult", "character entry"), "character entry mult"));
  return out;
}

RootSystemPtr root_system_from_json(const Json& j) {
  const std::string where = "Cartan document";
  if (!j.is_object()) throw InputError(where + ": expected a JSON object");
  if (j.contains("type")) {
    const Json& type = j["type"];
    if (!type.is_string()) throw InputError(where + ": \"type\" must be a string");
    return RootSystem::of_type(type.get<std::string>());
  }
  const Int rank = integer(field(j, "rank", where), "Cartan rank");
  const Json& matrix = array(field(j, "matrix", where), "Cartan matrix");
  if (rank < 1 || static_cast<Int>(matrix.size()) != rank)
    throw InputError(where + ": matrix has " + std::to_string(matrix.size()) + " rows but rank is " + std::to_string(rank));
  std::vector<std::vector<Int>> entries;
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    const std::string row_name = "Cartan matrix row " + std::to_string(i);
    std::vector<Int> row;
    for (const Json& a : array(matrix[i], row_name)) row.push_back(integer(a, row_name));
    entries.push_back(std::move(row));
  }
  return RootSystem::build(CartanMatrix(std::move(entries)), "custom");
}

std::filesystem::path resolve_data_path(const std::string& path, const std::optional<std::string>& data_dir) {
  namespace fs = std::filesystem;
  const fs::path given(path);
  if (fs::exists(given) || given.is_absolute()) return given;
  if (data_dir && fs::exists(fs::path(*data_dir) / given)) return fs::path(*data_dir) / given;
  if (const char* env = std::getenv(kDataDirEnv); env && *env && fs::exists(fs::path(env) / given))
    return fs::path(env) / given;
  return given;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path.string() + ": malformed JSON (" + e.what() + ")");
  }
}

ProviderPtr provider_from_json(const Json& j, const RootSystemPtr& rs) {
  const std::string where = "decomposition data";
  require_matching_type(j, rs, where);
  const Int p = integer(field(j, "p", where), "decomposition data p");
  const std::size_t n = rs->rank();
  std::map<Weight, DecompositionRow> rows;
  for (const Json& row : array(field(j, "rows", where), "decomposition rows")) {
    const Weight lam = weight_from_json(field(row, "lambda", "decomposition row"), n, "decomposition row lambda");
    DecompositionRow factors;
    for (const Json& f : array(field(row, "factors", "decomposition row"), "decomposition row factors")) {
      const Weight mu = weight_from_json(field(f, "mu", "decomposition factor"), n, "decomposition factor mu");
      const Int mult = integer(field(f, "mult", "decomposition factor"), "decomposition factor mult");
      if (!factors.emplace(mu, mult).second)
        throw InputError("decomposition row for lambda = " + to_string(lam) + " lists mu = " + to_string(mu) + " twice");
    }
    if (!rows.emplace(lam, std::move(factors)).second)
      throw InputError("decomposition data lists lambda = " + to_string(lam) + " twice");
  }
  return DecompositionProvider::from_rows(rs, p, std::move(rows), Provenance::File);
}

QrDataPtr qrdata_from_json(const Json& j, const RootSystemPtr& rs) {
  const std::string where = "Q-hat data";
  require_matching_type(j, rs, where);
  const Int p = integer(field(j, "p", where), "Q-hat data p");
  const Int r = integer(field(j, "r", where), "Q-hat data r");
  std::map<Weight, Character> qhat;
  for (const Json& e : array(field(j, "entries", where), "Q-hat entries")) {
    const Weight lam = weight_from_json(field(e, "lambda", "Q-hat entry"), rs->rank(), "Q-hat entry lambda");
    if (!qhat.emplace(lam, character_from_json(field(e, "qhat", "Q-hat entry"), rs->rank())).second)
      throw InputError("Q-hat data lists lambda = " + to_string(lam) + " twice");
  }
  return QrData::from_qhat(rs, p, r, std::move(qhat), Provenance::File);
}

Json qrdata_to_json(const QrData& data) {
  Json entries = Json::array();
  for (const auto& [lam, entry] : data.entries())
    entries.push_back({{"lambda", weight_to_json(lam)}, {"qhat", character_to_json(entry.qhat)}});
  return {{"type", data.root_system().name()}, {"p", data.p()}, {"r", data.r()}, {"entries", std::move(entries)}};
}

Json table_to_json(const MultiplicityTable& table) {
  Json labels = Json::array();
  for (const Weight& w : table.labels) labels.push_back(weight_to_json(w));
  Json mismatches = Json::array();
  for (const auto& [i, j] : table.mismatches())
    mismatches.push_back({{"lambda", weight_to_json(table.labels[i])},
                          {"mu", weight_to_json(table.labels[j])},
                          {"lhs", table.lhs[i][j]},
                          {"rhs", table.rhs[i][j]}});
  return {{"type", table.type},
          {"p", table.p},
          {"r", table.r},
          {"labels", std::move(labels)},
          {"lhs", table.lhs},
          {"rhs", table.rhs},
          {"lhs_route", table.lhs_route},
          {"rhs_route", table.rhs_route},
          {"agree", table.agree()},
          {"mismatches", std::move(mismatches)}};
}

}  // namespace cjcalc
