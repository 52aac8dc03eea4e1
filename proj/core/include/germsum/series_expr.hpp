#pragma once

#include <string>

#include "germsum/mseries.hpp"

namespace germsum {

/// Result of compiling a polynomial expression at a given cap.
/// `degree_bound` is a syntactic bound on the expression's total degree;
/// when it does not exceed the cap, the stored terms are the complete
/// polynomial and the value may be used as an exact germ.
struct CompiledExpr {
    MultiSeries series;
    int degree_bound;
    bool complete() const { return degree_bound <= series.cap(); }
};

/// Tiny polynomial grammar over variables x1..xd:
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ['^' uint]
///   base   := rational | 'x' uint | '(' expr ')'
/// Rationals are decimal-free ("3", "-5/2"). Whitespace is ignored.
CompiledExpr compile_poly_expr(const std::string& text, int dim, int cap);

}  // namespace germsum
