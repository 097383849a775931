#pragma once

#include <string>

#include "racg/davis.hpp"
#include "racg/simplicial.hpp"
#include "racg/sphere2.hpp"

namespace racg {

// {"format":"flag-graph","vertices":[...],"edges":[[a,b],...]}
std::string flag_to_json(const FlagComplex& L);

// {"format":"simplicial","maximal_simplices":[[...]]}
std::string simplicial_to_json(const SimplicialComplex& K);

// Accepts either format.  A simplicial file must actually be flag unless
// assume_flag is set (then the clique complex of its 1-skeleton is taken).
FlagComplex flag_complex_from_json(const std::string& text, bool assume_flag = false);
SimplicialComplex simplicial_from_json(const std::string& text);

std::string certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const std::string& text);

std::string cubical_to_json(const CubicalComplex& X);
// OFF-like listing: vertex coordinates (sign vectors when the vertex ids
// encode them) followed by cells as vertex index lists.
std::string cubical_to_off(const CubicalComplex& X);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace racg
