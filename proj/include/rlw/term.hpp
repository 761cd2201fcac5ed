#ifndef RLW_TERM_HPP_
#define RLW_TERM_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "algebra.hpp"

namespace rlw {

  // Term syntax (loosest binding first):
  //   a \/ b   join              a /\ b   meet
  //   a -> b   a\b, commutative algebras only (right associative)
  //   a \ b    left residual     a / b    right residual
  //   a * b    product
  //   ~a = a\f   -a = f/a   !a = a\f (only when f is cyclic)
  //   a^n (power, a^0 = e)   a^l = e/a   a^r = a\e   a^lr = a^l /\ a^r
  //   constants e f bot top, element literals #k, named elements, variables
  enum class TermOp : std::uint8_t {
    var,
    elem,
    unit,
    f,
    bot,
    top,
    mul,
    meet,
    join,
    ldiv,
    rdiv,
    arrow,
    power,
    lneg,
    rneg,
    neg,
    linv,
    rinv,
    lower
  };

  struct TermNode {
    TermOp op;
    int    a     = -1;
    int    b     = -1;
    int    value = 0;  // variable slot, element code or exponent
  };

  using NameMap = std::map<std::string, Elem, std::less<>>;

  class Term {
   public:
    Term() = default;

    // Variables are interned into vars, so several terms can share slots.
    // Identifiers found in names denote those elements.
    static Term parse(std::string_view text,
                      std::vector<std::string>& vars,
                      NameMap const* names = nullptr);
    static Term parse(std::string_view text);

    std::vector<TermNode> const& nodes() const noexcept {
      return _nodes;
    }
    int root() const noexcept {
      return _root;
    }
    bool empty() const noexcept {
      return _nodes.empty();
    }
    bool uses(TermOp op) const;
    int  var_count() const;

    // Rewrites shorthands into mul, meet, join, ldiv, rdiv and atoms; the
    // node list is in evaluation order (children before parents).
    Term expanded() const;

    std::string str() const;

    // building blocks for terms assembled in code
    int add(TermNode node);
    void set_root(int r) {
      _root = r;
    }

   private:
    std::vector<TermNode> _nodes;
    int                   _root = -1;
  };

  enum class Relation { eq, leq };

  // A guard restricts some variables to an interval [lo, hi] whose ends are
  // closed terms.
  struct Guard {
    std::vector<int> vars;
    Term             lo, hi;
  };

  struct Equation {
    Term                     lhs, rhs;
    Relation                 rel = Relation::eq;
    std::vector<std::string> vars;
    std::vector<Guard>       guards;
    std::string              text;

    // "lhs = rhs", "lhs <= rhs" or "lhs >= rhs", optionally followed by
    // "where x,y in [lo,hi] and z in [lo,hi]"
    static Equation parse(std::string_view text, NameMap const* names = nullptr);
  };

  // Checks that the algebra supports every symbol in t (constants, ->, !).
  void check_term_supported(Algebra const& A, Term const& t);

  // Evaluates a term; env is indexed by variable slot.
  Elem eval_term(Algebra const& A, Term const& t, std::span<Elem const> env);

  // Compiled form for repeated evaluation.
  class Evaluator {
   public:
    Evaluator(Algebra const& A, Term const& t);
    Elem operator()(std::span<Elem const> env);

   private:
    Algebra const*        _A;
    Term                  _t;
    std::vector<Elem>     _reg;
  };

  struct IdentityResult {
    bool              holds = true;
    std::vector<Elem> witness;  // one value per variable slot
  };

  // Exhaustive over all assignments (respecting guards).
  IdentityResult check_identity(Algebra const& A, Equation const& eq);
  IdentityResult check_identity(Algebra const& A, std::string_view equation);

  // Values allowed for each variable by the guards of eq.
  std::vector<std::vector<Elem>> variable_ranges(Algebra const& A, Equation const& eq);

  // Calls f on each assignment of n variables, values drawn from ranges;
  // stops early when f returns false. Returns false if stopped early.
  bool for_each_assignment(std::vector<std::vector<Elem>> const&         ranges,
                           std::function<bool(std::span<Elem const>)> const& f);

  std::string_view semilinearity_equation();

}  // namespace rlw

#endif  // RLW_TERM_HPP_
