#pragma once

#include <oscroll/scroll.hpp>

#include <string>
#include <string_view>

// Text formats for curves, scrolls and subspaces. Files are JSON with every
// rational written as a string ("3", "-2/5"); floats are rejected. Errors
// raise InputError naming the line (syntax) or the field path (content).
namespace oscroll::io {

using curves::RationalCurve;
using exact::LinearSubspace;
using scrolls::DecomposableScroll;
using scrolls::ScrollPoint;

RationalCurve parse_curve(std::string_view text);
DecomposableScroll parse_scroll(std::string_view text);
LinearSubspace parse_subspace(std::string_view text);

std::string to_json(const RationalCurve& c);
std::string to_json(const DecomposableScroll& sc);
std::string to_json(const LinearSubspace& s);

std::string read_file(const std::string& path);

// "t=<rat>;<rat>,<rat>,..." or "inf;<rat>,...". The fiber needs n entries,
// not all zero.
ScrollPoint parse_scroll_point(std::string_view spec, std::size_t n);
// "t=<rat>" or "inf" (also a bare rational).
curves::CurvePoint parse_curve_point(std::string_view spec);

}  // namespace oscroll::io
