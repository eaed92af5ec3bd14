#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "matex/tensor.hpp"

namespace matex {

// Wire format: {"dims":[n1,...,nd],"ones":[[i1,...,id],...]}
// 1-based coordinates, ones sorted lexicographically.
std::string tensor_to_json(const Tensor01& t);
Tensor01 tensor_from_json(const std::string& text);

Tensor01 load_tensor(const std::string& path);
void save_tensor(const Tensor01& t, const std::string& path);

std::uint64_t fnv1a64(std::string_view s);

}  // namespace matex
