#include "matex/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace matex {

std::string tensor_to_json(const Tensor01& t) {
  nlohmann::json j;
  j["dims"] = t.shape().dims();
  auto ones = nlohmann::json::array();
  for (const Coord& c : t.ones()) ones.push_back(c);
  j["ones"] = std::move(ones);
  return j.dump();
}

Tensor01 tensor_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("tensor JSON: parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dims") || !j.contains("ones"))
    throw std::invalid_argument("tensor JSON: need object with \"dims\" and \"ones\"");
  if (!j["dims"].is_array())
    throw std::invalid_argument("tensor JSON: \"dims\" must be an array");

  std::vector<int> dims;
  for (const auto& v : j["dims"]) {
    if (!v.is_number_integer())
      throw std::invalid_argument("tensor JSON: \"dims\" entries must be integers");
    dims.push_back(v.get<int>());
  }
  Tensor01 t{Shape(dims)};

  if (!j["ones"].is_array())
    throw std::invalid_argument("tensor JSON: \"ones\" must be an array");
  std::set<Coord> seen;
  for (const auto& jc : j["ones"]) {
    if (!jc.is_array() || jc.size() != dims.size())
      throw std::invalid_argument("tensor JSON: \"ones\" entries must be coordinates of length d");
    Coord c;
    for (const auto& v : jc) {
      if (!v.is_number_integer())
        throw std::invalid_argument("tensor JSON: coordinates must be integers");
      c.push_back(v.get<int>());
    }
    if (!t.shape().in_range(c))
      throw std::invalid_argument("tensor JSON: coordinate out of range in \"ones\"");
    if (!seen.insert(c).second)
      throw std::invalid_argument("tensor JSON: duplicate coordinate in \"ones\"");
    t.set(c, true);
  }
  return t;
}

Tensor01 load_tensor(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open tensor file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return tensor_from_json(ss.str());
}

void save_tensor(const Tensor01& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write tensor file: " + path);
  out << tensor_to_json(t) << "\n";
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace matex
