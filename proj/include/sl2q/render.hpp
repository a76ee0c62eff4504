#pragma once

#include <string>

#include <json.hpp>

#include "sl2q/chartab.hpp"
#include "sl2q/decomposition.hpp"

namespace sl2q {

struct RenderOptions {
  bool ascii = false;  // "sqrt(-7)", "zeta_8", "(+)" instead of UTF-8 math
};

std::string group_name(GroupKind kind);

std::string render_field(const NumberField& f, const RenderOptions& opt = {});
std::string render_division(const DivisionAlgebra& d,
                            const RenderOptions& opt = {});
std::string render_component(const SimpleComponent& c,
                             const RenderOptions& opt = {});
std::string render_decomposition(const WedderburnDecomposition& w,
                                 const RenderOptions& opt = {});

// The D'' convention note attached to SL2 decompositions of square q.
std::vector<std::string> decomposition_notes(const WedderburnDecomposition& w);

// Versioned JSON documents; field order is fixed, values are exact integers
// and strings, so parse-and-redump round-trips byte-identically.
nlohmann::ordered_json decomposition_document(const WedderburnDecomposition& w);
nlohmann::ordered_json counts_document(GroupKind kind, const PrimePower& q);

std::string render_counts(GroupKind kind, const PrimePower& q);
std::string render_table(const CharacterTable& t);

}  // namespace sl2q
