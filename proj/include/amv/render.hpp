#ifndef AMV_RENDER_HPP
#define AMV_RENDER_HPP

#include <string>
#include <utility>
#include <vector>

#include "amv/am_numbers.hpp"

namespace amv {

/// Header "k\n<TAB>n_min<TAB>...<TAB>n_max", then one row per k. LF endings.
std::string render_table_tsv(const ATable& t);

/// [{"n":..,"h":1,"k":..,"value":"..."}, ...] ordered by k, then n.
std::string render_table_json(const ATable& t);

/// OEIS b-file: "index value" per line, LF endings.
std::string render_bfile(const std::vector<std::pair<long, Integer>>& rows);

} // namespace amv

#endif // AMV_RENDER_HPP
