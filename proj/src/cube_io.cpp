#include "ternhom/cube_io.hpp"

#include <fstream>
#include <sstream>

#include "ternhom/errors.hpp"

namespace ternhom {

nlohmann::json cube_to_json(const TernaryCube& cube) {
  nlohmann::json j;
  j["order"] = cube.order();
  auto& table = j["table"] = nlohmann::json::array();
  for (auto e : cube.table()) table.push_back(e.index + 1);
  if (!cube.name().empty()) j["name"] = cube.name();
  return j;
}

TernaryCube cube_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("table"))
    throw MalformedInput("cube JSON needs \"order\" and \"table\"");
  if (!j["order"].is_number_integer() || j["order"].get<std::int64_t>() <= 0)
    throw MalformedInput("cube \"order\" must be a positive integer");
  const auto order = j["order"].get<std::size_t>();
  const auto& table = j["table"];
  if (!table.is_array()) throw MalformedInput("cube \"table\" must be an array");
  std::vector<Element> entries;
  entries.reserve(table.size());
  for (const auto& v : table) {
    if (!v.is_number_integer()) throw MalformedInput("cube table entries must be integers");
    const auto x = v.get<std::int64_t>();
    if (x < 1 || static_cast<std::size_t>(x) > order)
      throw MalformedInput("cube table entry " + std::to_string(x) + " outside 1.." +
                           std::to_string(order));
    entries.push_back(Element{static_cast<std::uint32_t>(x - 1)});
  }
  std::string name;
  if (j.contains("name") && j["name"].is_string()) name = j["name"].get<std::string>();
  return TernaryCube(order, std::move(entries), std::move(name));
}

std::string cube_to_text(const TernaryCube& cube) {
  std::ostringstream out;
  const auto n = static_cast<std::uint32_t>(cube.order());
  out << "order " << n << "\n";
  if (!cube.name().empty()) out << "name " << cube.name() << "\n";
  for (std::uint32_t a = 0; a < n; ++a) {
    out << "slice " << a + 1 << "\n";
    for (std::uint32_t b = 0; b < n; ++b) {
      for (std::uint32_t c = 0; c < n; ++c) out << (c ? " " : "") << cube.at(a, b, c) + 1;
      out << "\n";
    }
  }
  return out.str();
}

TernaryCube cube_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t order = 0;
  std::string name;
  std::vector<Element> entries;
  std::size_t expected_slice = 1;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string head;
    if (!(words >> head)) continue;
    if (head == "order") {
      long long n = 0;
      if (!(words >> n) || n <= 0) throw MalformedInput("bad order line in cube text");
      order = static_cast<std::size_t>(n);
      entries.reserve(order * order * order);
    } else if (head == "name") {
      std::getline(words >> std::ws, name);
    } else if (head == "slice") {
      std::size_t s = 0;
      if (!(words >> s) || s != expected_slice)
        throw MalformedInput("expected slice " + std::to_string(expected_slice));
      if (entries.size() != (s - 1) * order * order)
        throw MalformedInput("slice " + std::to_string(s - 1) + " is incomplete");
      ++expected_slice;
    } else {
      if (order == 0) throw MalformedInput("cube text must start with an order line");
      std::istringstream row(line);
      long long x = 0;
      std::size_t count = 0;
      while (row >> x) {
        if (x < 1 || static_cast<std::size_t>(x) > order)
          throw MalformedInput("cube entry " + std::to_string(x) + " out of range");
        entries.push_back(Element{static_cast<std::uint32_t>(x - 1)});
        ++count;
      }
      if (!row.eof()) throw MalformedInput("non-numeric token in cube row: " + line);
      if (count != order) throw MalformedInput("cube row must have " + std::to_string(order) + " entries");
    }
  }
  if (order == 0) throw MalformedInput("cube text has no order line");
  return TernaryCube(order, std::move(entries), std::move(name));
}

TernaryCube parse_cube(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw MalformedInput(std::string("cube JSON: ") + e.what());
    }
    return cube_from_json(j);
  }
  return cube_from_text(text);
}

TernaryCube read_cube_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open cube file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_cube(buffer.str());
}

void write_cube_file(const std::filesystem::path& path, const TernaryCube& cube) {
  std::ofstream out(path);
  if (!out) throw MalformedInput("cannot write cube file " + path.string());
  if (path.extension() == ".txt")
    out << cube_to_text(cube);
  else
    out << cube_to_json(cube).dump() << "\n";
}

}  // namespace ternhom
