#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ietflip/blowup.hpp"
#include "ietflip/lift.hpp"
#include "ietflip/map_class.hpp"

namespace ietflip {

// Canonical text forms. Serialization of canonical values roundtrips
// bit-exactly through the corresponding parser.
//
//   scalar:  <rat> | <rat>(+|-)<rat>*sqrt(<m>)      e.g. 1/3, 0+1*sqrt(2)
//   map:     piece (" ; " piece)*                   e.g. [0,1/2) -> +x+1/4
//   lift:    map line, then lines "@ <scalar> -> <scalar>"
//   sided:   <scalar>^+ | <scalar>^-

std::string scalar_text(const Scalar& s);
std::string map_text(const MapClass& f);
std::string lift_text(const Lift& L);
std::string sided_text(const SidedPoint& p);

/// Parsers accept liberal whitespace and non-canonical scalars (reduced on
/// read); sqrt radicands must match the document field. Syntax errors carry
/// line/column; semantic failures surface as DomainError.
Scalar parse_scalar(std::string_view text, const FieldSpec& field);
CirclePoint parse_point(std::string_view text, const FieldSpec& field);
MapClass parse_map(std::string_view text, const FieldSpec& field);
Lift parse_lift(std::string_view text, const FieldSpec& field);
SidedPoint parse_sided(std::string_view text, const FieldSpec& field);

/// Flat text document: optional `field <m>` header, `#` comments, bindings
/// `name = <map>` optionally followed by `@ <scalar> -> <scalar>` lines that
/// turn the binding into a lift.
struct Document {
  FieldSpec field;
  std::vector<std::pair<std::string, std::variant<MapClass, Lift>>> bindings;

  const std::variant<MapClass, Lift>* find(std::string_view name) const;
  /// The underlying class of a binding (lifts project to their class).
  MapClass class_of(std::string_view name) const;
  /// Binding as a genuine lift; classes promote when they have no singular
  /// point, otherwise precondition is thrown.
  Lift lift_of(std::string_view name) const;
};

Document parse_document(std::string_view text, const FieldSpec& default_field);
std::string document_text(const Document& doc);

}  // namespace ietflip
