#ifndef RLW_ERROR_HPP_
#define RLW_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rlw {

  enum class ErrorKind {
    ParseError,
    NotALattice,
    NotAMonoid,
    NotResiduated,
    BadConstant,
    MissingConstant,
    BadTerm,
    BadParameter,
    NoCompletion,
    NotASubuniverse,
    SignatureMismatch,
    NotAnEmbedding,
    NotChains,
    NotSubalgebraClosed,
    NotSemilinear,
    NotSimple,
    NotAChain,
    NotAdmissible,
    Usage
  };

  std::string_view to_string(ErrorKind kind) noexcept;

  // Every failure raised by the library carries a kind and, where it makes
  // sense, the offending elements (a pair, a triple, a component index ...).
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& message, std::vector<int> witness = {});

    ErrorKind kind() const noexcept {
      return _kind;
    }
    std::vector<int> const& witness() const noexcept {
      return _witness;
    }

   private:
    ErrorKind        _kind;
    std::vector<int> _witness;
  };

}  // namespace rlw

#endif  // RLW_ERROR_HPP_
