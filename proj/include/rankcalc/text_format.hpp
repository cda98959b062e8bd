#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rankcalc/category.hpp"
#include "rankcalc/qrank.hpp"
#include "rankcalc/rank_function.hpp"

namespace rankcalc {

/// Line-oriented presentation format:
///
///   format rankcalc-presentation 1
///   field QQ
///   objects T1 T2 ...
///   period 6
///   generators *                 (or a list of objects)
///   hom X Y d                    (nonzero dimensions only)
///   id X c1 ... cd
///   compose X Y Z (i,j,k,c) ...  (e_j(Y,Z) o e_i(X,Y) has coefficient c on e_k)
///   sigma X Y                    (sigma X = Y)
///   sigmamap X Y (r,c,v) ...     (nonzero entries of Sigma on Hom(X,Y))
///   morphism NAME SRC TGT b(j,i)=c1,...,cd ...
///   triangle NAME F G H
///
/// Indices are 1-based, '#' starts a comment. Parse errors carry line:column.
CategoryPresentation parse_presentation(std::string_view text);
std::string serialize_presentation(const CategoryPresentation& p);

/// Rank-function file: `format rankcalc-rank 1`, optional `category PATH`,
/// then either `coef X c` lines (missing objects get 0) or `value X v` lines.
struct RankFile {
  enum class Kind { coefficients, object_values };

  std::optional<std::string> category_path;
  Kind kind = Kind::coefficients;
  std::vector<std::pair<std::string, Rational>> entries;
};

RankFile parse_rank_file(std::string_view text);
/// Always the canonical coefficient form, every object listed.
std::string serialize_rank_function(const RankFunction& rho, const std::optional<std::string>& category_path);

/// q-value file: `format rankcalc-qvalues 1`, optional `category PATH`,
/// optional `instance integers|periodic:d|laurent`, then `value X poly` or `coef X poly`.
struct QValuesFile {
  std::optional<std::string> category_path;
  std::string instance;  // empty when not given
  RankFile::Kind kind = RankFile::Kind::object_values;
  std::vector<std::pair<std::string, ModuleElement>> entries;
};

QValuesFile parse_qvalues_file(std::string_view text);

}  // namespace rankcalc
