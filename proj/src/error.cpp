#include "rlw/error.hpp"

namespace rlw {

  std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::ParseError: return "ParseError";
      case ErrorKind::NotALattice: return "NotALattice";
      case ErrorKind::NotAMonoid: return "NotAMonoid";
      case ErrorKind::NotResiduated: return "NotResiduated";
      case ErrorKind::BadConstant: return "BadConstant";
      case ErrorKind::MissingConstant: return "MissingConstant";
      case ErrorKind::BadTerm: return "BadTerm";
      case ErrorKind::BadParameter: return "BadParameter";
      case ErrorKind::NoCompletion: return "NoCompletion";
      case ErrorKind::NotASubuniverse: return "NotASubuniverse";
      case ErrorKind::SignatureMismatch: return "SignatureMismatch";
      case ErrorKind::NotAnEmbedding: return "NotAnEmbedding";
      case ErrorKind::NotChains: return "NotChains";
      case ErrorKind::NotSubalgebraClosed: return "NotSubalgebraClosed";
      case ErrorKind::NotSemilinear: return "NotSemilinear";
      case ErrorKind::NotSimple: return "NotSimple";
      case ErrorKind::NotAChain: return "NotAChain";
      case ErrorKind::NotAdmissible: return "NotAdmissible";
      case ErrorKind::Usage: return "Usage";
    }
    return "Error";
  }

  Error::Error(ErrorKind kind, std::string const& message, std::vector<int> witness)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        _kind(kind),
        _witness(std::move(witness)) {}

}  // namespace rlw
