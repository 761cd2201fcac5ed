#ifndef RLW_NESTED_SUM_HPP_
#define RLW_NESTED_SUM_HPP_

#include <vector>

#include "algebra.hpp"

namespace rlw {

  // Plain residuated lattice reduct (no f, bot, top).
  Algebra plain_reduct(Algebra const& A);

  // Gluing of chains at e, first component outermost: its elements below e
  // lie below every later component and its elements above e lie above.
  // Every component but the last must be admissible, except that a negative
  // a with a\e = e or e/a = e is tolerated when all later components are
  // integral (ordinal sums of hoops). A constant designated in some
  // component is designated in the sum; at most one component may place it
  // away from e. Throws NotAChain, NotAdmissible, SignatureMismatch.
  Algebra nested_sum(std::vector<Algebra> const& components);

  struct NestedSumLayout {
    Algebra                        sum;
    std::vector<std::vector<Elem>> provenance;  // component element -> sum element
  };
  NestedSumLayout nested_sum_layout(std::vector<Algebra> const& components);

  // Finest decomposition, outermost component first, splitting off the
  // smallest outer layer each time. Constants equal to e are given to every
  // component, other constants to the component that contains them.
  std::vector<Algebra> factor_nested_sum(Algebra const& A);

  // x^lr^lr = x
  bool lower_involutive(Algebra const& A);

}  // namespace rlw

#endif  // RLW_NESTED_SUM_HPP_
