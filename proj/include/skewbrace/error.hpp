#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace skewbrace {

// Every named failure the library can raise.  CLI exit codes are derived
// from these (see tools/).
enum class Errc {
  // group validation
  not_latin_square,
  not_associative,
  no_identity,
  no_inverse,
  // brace validation
  add_not_group,
  circ_not_group,
  identity_mismatch,
  gamma_not_endomorphism,
  // gamma / reconstruction
  gfe_violation,
  not_automorphism,
  // left-convention import
  left_axiom_violated,
  conversion_sanity_failed,
  // structure
  ideal_closure_failed,
  not_well_defined,
  // search caps / catalog
  order_cap_exceeded,
  unknown_order,
  // internal consistency (would contradict a proved statement)
  transitivity_violation,
  invariance_violation,
  // file format
  parse_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::not_latin_square: return "NotLatinSquare";
    case Errc::not_associative: return "NotAssociative";
    case Errc::no_identity: return "NoIdentity";
    case Errc::no_inverse: return "NoInverse";
    case Errc::add_not_group: return "AddNotGroup";
    case Errc::circ_not_group: return "CircNotGroup";
    case Errc::identity_mismatch: return "IdentityMismatch";
    case Errc::gamma_not_endomorphism: return "GammaNotEndomorphism";
    case Errc::gfe_violation: return "GfeViolation";
    case Errc::not_automorphism: return "NotAutomorphism";
    case Errc::left_axiom_violated: return "LeftAxiomViolated";
    case Errc::conversion_sanity_failed: return "ConversionSanityFailed";
    case Errc::ideal_closure_failed: return "IdealClosureFailed";
    case Errc::not_well_defined: return "NotWellDefined";
    case Errc::order_cap_exceeded: return "OrderCapExceeded";
    case Errc::unknown_order: return "UnknownOrder";
    case Errc::transitivity_violation: return "TransitivityViolation";
    case Errc::invariance_violation: return "InvarianceViolation";
    case Errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace skewbrace
