/**
 * Line-oriented text formats. Every format treats `#` as the start of a
 * comment and ignores blank lines. Parse failures throw ParseError with the
 * 1-based line number; writers are deterministic.
 *
 *   complex      dim D, then one facet per line as D+1 vertex names
 *   involution   v w        (A(v) = w and A(w) = v; unlisted vertices are fixed)
 *   labelling    v k        (k a signed nonzero integer, every vertex once)
 *   map          v w        (source vertex, image vertex)
 *   cover        set NAME, then vertex names; pair NAME1 NAME2
 *   layout       v x y
 */
#pragma once

#include <string>

#include "bulab/complex.hpp"
#include "bulab/covers.hpp"
#include "bulab/degree.hpp"
#include "bulab/generators.hpp"
#include "bulab/labels.hpp"
#include "bulab/symmetry.hpp"

namespace bulab {

/// Whole file contents; throws Error(InvalidArgument) if it cannot be opened.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);

Complex parse_complex(const std::string& text, const std::string& source = "<complex>");
std::string write_complex(const Complex& complex);

Involution parse_involution(const std::string& text, const Complex& complex, const std::string& source = "<involution>");
std::string write_involution(const Involution& a);

Labelling parse_labelling(const std::string& text, const Complex& complex, const std::string& source = "<labelling>");
std::string write_labelling(const Labelling& l);

SimplicialMap parse_map(const std::string& text, const Complex& source_complex, const Complex& target_complex,
                        const std::string& source = "<map>");
std::string write_map(const SimplicialMap& f);

Cover parse_cover(const std::string& text, const Complex& complex, const std::string& source = "<cover>");
std::string write_cover(const Cover& cover);

Layout parse_layout(const std::string& text, const std::string& source = "<layout>");
std::string write_layout(const Layout& layout);

} // namespace bulab
