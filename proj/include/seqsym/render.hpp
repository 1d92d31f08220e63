#pragma once

#include "seqsym/multfunc.hpp"
#include "seqsym/seqmatrix.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace seqsym {

enum class RenderFormat { text, csv, json, pgm };

std::string_view to_string(RenderFormat f);
std::optional<RenderFormat> format_from_string(std::string_view name);

/// Residue matrices render as right-aligned decimal columns (text), bare
/// decimal fields (csv), the JSON object
/// {"n":..,"m":..,"kind":"residue","rows":[[..],..]}, or plain PGM with
/// maxval n^2 (so PGM keeps every value exactly; needs n <= 255).
std::string render(const ResidueMatrix& a, RenderFormat f);

/// Sign matrices render entries as "+1", "-1", " 0" in aligned columns
/// (text), as -1/0/1 fields (csv), as the JSON object with kind "sign",
/// or as PGM with maxval 255 mapping +1 -> 255, -1 -> 0, 0 -> 128.
std::string render(const SignMatrix& a, RenderFormat f);

/// Inverses of render: render(x, f) parsed as the same kind gives x back
/// exactly. Text and csv need the kind supplied by the caller (an all-zero
/// matrix reads the same both ways); json carries a "kind" field and PGM
/// is disambiguated by maxval (255 is never n^2).
ResidueMatrix parse_residue(std::string_view input, RenderFormat f);
SignMatrix parse_sign(std::string_view input, RenderFormat f);

}  // namespace seqsym
