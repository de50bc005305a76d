#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hmv/boundary.hpp"
#include "hmv/modvariety.hpp"
#include "hmv/orders.hpp"
#include "hmv/pc.hpp"

namespace hmv {

// Text grammar (whitespace-insensitive input, canonical output):
//   Rat       p/q | p
//   QuadElem  u + v*sqrt(D)     (D must match the ambient context)
//   PCElem    (x ; q)
//   QIdeal    <n, a + b*g>      g denotes gamma_D
//   matrices  row-major, comma-separated entries

// splits on sep at nesting depth zero w.r.t. (), <>, []
std::vector<std::string> split_top_level(std::string_view s, char sep);

QuadElem parse_quad(std::string_view s, const Int& rad);
PCElem parse_pc(std::string_view s, const Int& rad);
QIdeal parse_ideal(std::string_view s, const Disc& D);
Mat2K parse_mat2k(std::string_view s, const Int& rad); // 4 entries, row-major
ZMat parse_zmat2(std::string_view s);                  // 4 integer entries
ProjPoint parse_proj_point(std::string_view s);        // inf | x | x+y*i

std::string proj_point_str(const ProjPoint& p);

} // namespace hmv
