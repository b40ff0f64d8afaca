#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hkrays/fano.hpp"
#include "hkrays/hilbert.hpp"

namespace hkrays::render {

using Json = nlohmann::ordered_json;

enum class Format { markdown, json, csv };

Format parse_format(const std::string& name);

// Integers above 2^53 - 1 in magnitude are emitted as decimal strings so
// double-precision JSON parsers keep them exact.
Json json_int(const Int& v);

// "2H-3tau" / "2H-3τ", "g+2gamma" / "g+2γ" and so on.
std::string class_string(const lattice::Vec2& v, const std::string& first,
                         const std::string& second);

std::string hilbert_class(const lattice::Vec2& v, bool ascii);
std::string fano_class(const lattice::Vec2& v, bool ascii);

std::string pell_cell(const std::optional<pell::PellFundamental>& p);
std::string type_pair_string(const hilbert::HilbertRow& row);

// Hilbert-square table: columns e | (a,b) | types | H' | tau'.
std::string hilbert_markdown(const std::vector<hilbert::HilbertRow>& rows,
                             bool ascii);
std::string hilbert_csv(const std::vector<hilbert::HilbertRow>& rows);
Json hilbert_json(const hilbert::HilbertRow& row);

// Detail block printed under a single-row markdown query.
std::string hilbert_detail(const hilbert::HilbertRow& row, bool ascii);

// Fano table: columns e | adm | (-2)-classes | (a,b) | types | H | tau |
// deg, one line per ray.
std::string fano_markdown(const std::vector<fano::FanoRow>& rows, bool ascii);
std::string fano_csv(const std::vector<fano::FanoRow>& rows);
Json fano_json(const fano::FanoRow& row);

std::string admissible_markdown(const std::vector<Int>& values);
std::string admissible_csv(const std::vector<Int>& values);
Json admissible_json(const std::vector<Int>& values);

} // namespace hkrays::render
