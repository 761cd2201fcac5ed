#ifndef RLW_PROPERTIES_HPP_
#define RLW_PROPERTIES_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"

namespace rlw {

  struct PropertyProfile {
    bool               commutative       = false;
    bool               idempotent        = false;
    std::optional<int> n_potent;  // least n with x^(n+1) = x^n
    bool               square_increasing = false;  // x <= x^2
    bool               square_decreasing = false;  // x^2 <= x
    bool               integral          = false;
    bool               bounded           = false;  // bot and top designated
    bool               semilinear        = false;
    bool               admissible        = false;  // chains only
    bool               lower_involutive  = false;  // x^lr^lr = x
    // the following are empty when f is not designated
    std::optional<bool> cyclic_f;
    std::optional<bool> left_involutive_f;   // -~x = x
    std::optional<bool> right_involutive_f;  // ~-x = x
    std::optional<bool> involutive_f;
  };

  PropertyProfile property_profile(Algebra const& A);

  // x^m <= x^n for all x
  bool is_knotted(Algebra const& A, int m, int n);
  // x^(n+1) = x^n for all x
  bool is_n_potent(Algebra const& A, int n);
  bool is_admissible(Algebra const& A);
  bool is_semilinear(Algebra const& A);
  bool is_integral(Algebra const& A);
  bool is_idempotent(Algebra const& A);

  // A conjunction of requirements; unset fields are not constrained.
  struct ProfileFilter {
    std::optional<bool>              commutative;
    std::optional<bool>              idempotent;
    std::optional<bool>              integral;
    std::optional<bool>              square_increasing;
    std::optional<bool>              square_decreasing;
    std::optional<bool>              admissible;
    std::optional<bool>              lower_involutive;
    std::optional<bool>              cyclic_f;
    std::optional<bool>              involutive_f;
    std::optional<int>               n_potent;  // x^(n+1) = x^n
    std::vector<std::pair<int, int>> knotted;   // x^m <= x^n
    std::vector<std::string>         equations;

    bool                     empty() const;
    std::string              str() const;
    // one add_property() spec per requirement
    std::vector<std::string> specs() const;

    // Equations that every member must satisfy; used to prune searches.
    std::vector<std::string> positive_equations() const;
  };

  bool satisfies(Algebra const& A, ProfileFilter const& filter);

  // "commutative", "!commutative", "idempotent", "integral", "sqinc",
  // "sqdec", "admissible", "lowinv", "cyclic", "involutive", "potent=3",
  // "knotted=1,2" or "eq=<equation>"
  void add_property(ProfileFilter& filter, std::string const& spec);

}  // namespace rlw

#endif  // RLW_PROPERTIES_HPP_
