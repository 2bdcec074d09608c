#pragma once

/**
 * Ring-spec strings.
 *
 *   spec   := factor ('x' factor)*            left-associative product
 *   factor := 'Z' n | '(' spec ')'
 *           | 'Q(' spec ',' gens ')'          quotient
 *           | 'Idl(' spec ',' gens ')'        idealization by R/J; J = 0 means M = R
 *           | 'Am(' spec ',' spec ',' hom ',' gens ')'
 *           | 'Loc(' spec ',' gens ')'        S generated by gens
 *           | 'TP(' spec ',' t ')'
 *   hom    := 'id' | 'can' | '{' label (';' label)* '}'   images of 0, 1, 2, ... in order
 *   gens   := label (',' label)*
 *
 * Every constructed ring reports a spec in this grammar, so parse(r->spec())
 * rebuilds an isomorphic ring with the same element order.
 */

#include <string>
#include <string_view>
#include <vector>

#include "sdfkit/ideal.hpp"
#include "sdfkit/ring.hpp"

namespace sdfkit {

/// Throws ParseError, or the construction's own error for well-formed input.
RingPtr parse_ring(std::string_view spec, const Limits& lim = limits());

/// Elements named by comma-separated labels. Throws ParseError on unknown labels.
std::vector<Elem> parse_elements(const RingPtr& r, std::string_view labels);

/// The ideal generated by comma-separated labels.
Ideal parse_ideal(const RingPtr& r, std::string_view gens);

/// Splits on `sep` outside (), {} nesting.
std::vector<std::string> split_top_level(std::string_view text, char sep);

}  // namespace sdfkit
