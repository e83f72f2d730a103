#include "ietflip/errors.hpp"

namespace ietflip {

const char* errc_name(Errc k) {
  switch (k) {
    case Errc::overlap: return "overlap";
    case Errc::not_bijective: return "not-bijective";
    case Errc::bad_lengths: return "bad-lengths";
    case Errc::not_orientation_preserving: return "not-orientation-preserving";
    case Errc::bound_exceeded: return "bound-exceeded";
    case Errc::class_not_identity: return "class-not-identity";
    case Errc::precondition: return "precondition";
    case Errc::structure: return "structure";
    case Errc::length_mismatch: return "length-mismatch";
    case Errc::bad_parameters: return "bad-parameters";
    case Errc::degenerate_triple: return "degenerate-triple";
    case Errc::field_mismatch: return "field-mismatch";
  }
  return "unknown";
}

}  // namespace ietflip
