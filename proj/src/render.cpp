#include "amv/render.hpp"

#include <sstream>

#include <json.hpp>

namespace amv {

std::string render_table_tsv(const ATable& t) {
  std::ostringstream os;
  os << "k\\n";
  for (unsigned n = t.n_min; n <= t.n_max; ++n) os << '\t' << n;
  os << '\n';
  long k = t.k_min;
  for (const auto& row : t.rows) {
    os << k++;
    for (const auto& v : row) os << '\t' << v.get_str();
    os << '\n';
  }
  return os.str();
}

std::string render_table_json(const ATable& t) {
  auto arr = nlohmann::ordered_json::array();
  long k = t.k_min;
  for (const auto& row : t.rows) {
    unsigned n = t.n_min;
    for (const auto& v : row) {
      nlohmann::ordered_json cell;
      cell["n"] = n++;
      cell["h"] = 1;
      cell["k"] = k;
      cell["value"] = v.get_str();
      arr.push_back(std::move(cell));
    }
    ++k;
  }
  return arr.dump() + "\n";
}

std::string render_bfile(const std::vector<std::pair<long, Integer>>& rows) {
  std::string out;
  for (const auto& [index, value] : rows) out += std::to_string(index) + " " + value.get_str() + "\n";
  return out;
}

} // namespace amv
