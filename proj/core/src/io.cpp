#include "twistlab/io.hpp"

#include <fstream>
#include <json.hpp>

namespace twistlab {

namespace {

using nlohmann::json;

json matrix_to_json(const std::vector<int>& tab, int n) {
  json rows = json::array();
  for (int i = 0; i < n; ++i) {
    json row = json::array();
    for (int j = 0; j < n; ++j) row.push_back(tab[i * n + j]);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<int> matrix_from_json(const json& j, const std::string& key,
                                  int n) {
  if (!j.contains(key)) throw schema_error("missing key", key);
  const json& rows = j.at(key);
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw schema_error("expected " + std::to_string(n) + " rows", key);
  std::vector<int> tab(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const json& row = rows.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw schema_error("expected " + std::to_string(n) + " entries",
                         key + "[" + std::to_string(i) + "]");
    for (int k = 0; k < n; ++k) {
      const json& cell = row.at(k);
      const std::string path =
          key + "[" + std::to_string(i) + "][" + std::to_string(k) + "]";
      if (!cell.is_number_integer())
        throw schema_error("expected an integer", path);
      const int v = cell.get<int>();
      if (v < 0 || v >= n)
        throw schema_error("entry out of range [0," + std::to_string(n) + ")",
                           path);
      tab[i * n + k] = v;
    }
  }
  return tab;
}

}  // namespace

std::string algebra_to_json(const FiniteAlgebra& a) {
  json j;
  j["name"] = a.name;
  j["size"] = a.size;
  j["one"] = a.one;
  if (a.zero)
    j["zero"] = *a.zero;
  else
    j["zero"] = nullptr;
  j["meet"] = matrix_to_json(a.meet_tab, a.size);
  j["join"] = matrix_to_json(a.join_tab, a.size);
  j["mul"] = matrix_to_json(a.mul_tab, a.size);
  j["imp"] = matrix_to_json(a.imp_tab, a.size);
  return j.dump(2) + "\n";
}

FiniteAlgebra algebra_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw schema_error(std::string("invalid JSON: ") + e.what(), "$");
  }
  if (!j.is_object()) throw schema_error("top level must be an object", "$");
  if (!j.contains("name") || !j.at("name").is_string())
    throw schema_error("expected a string", "name");
  if (!j.contains("size") || !j.at("size").is_number_integer())
    throw schema_error("expected an integer", "size");
  const int n = j.at("size").get<int>();
  if (n <= 0) throw schema_error("size must be positive", "size");
  FiniteAlgebra a = FiniteAlgebra::with_size(j.at("name").get<std::string>(), n);
  if (!j.contains("one") || !j.at("one").is_number_integer())
    throw schema_error("expected an integer", "one");
  a.one = j.at("one").get<int>();
  if (a.one < 0 || a.one >= n)
    throw schema_error("index out of range", "one");
  if (!j.contains("zero")) throw schema_error("missing key", "zero");
  if (j.at("zero").is_null()) {
    a.zero.reset();
  } else if (j.at("zero").is_number_integer()) {
    const int z = j.at("zero").get<int>();
    if (z < 0 || z >= n) throw schema_error("index out of range", "zero");
    a.zero = z;
  } else {
    throw schema_error("expected an integer or null", "zero");
  }
  a.meet_tab = matrix_from_json(j, "meet", n);
  a.join_tab = matrix_from_json(j, "join", n);
  a.mul_tab = matrix_from_json(j, "mul", n);
  a.imp_tab = matrix_from_json(j, "imp", n);
  return a;
}

void save_algebra(const FiniteAlgebra& a, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << algebra_to_json(a);
}

FiniteAlgebra load_algebra(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return algebra_from_json(text);
}

}  // namespace twistlab
