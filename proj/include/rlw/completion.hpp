#ifndef RLW_COMPLETION_HPP_
#define RLW_COMPLETION_HPP_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "io.hpp"
#include "properties.hpp"
#include "term.hpp"

namespace rlw {

  // Per-element requirements on a completion.
  struct ElementConstraints {
    std::vector<Elem> idempotent;
    std::vector<Elem> non_idempotent;
    std::vector<Elem> central;
    std::vector<Elem> non_central;
  };

  // An algebra whose multiplication table may have holes, together with
  // requirements its completions must meet. Completions always share the
  // order, unit and constants.
  struct PartialAlgebra {
    std::string                      name;
    Order                            order;
    Elem                             unit = 0;
    std::vector<std::optional<Elem>> mult;  // row-major, empty = all unknown
    Constants                        constants;
    std::vector<std::string>         element_names;  // optional

    bool                     commutative = false;
    std::optional<bool>      involutive_f;
    ElementConstraints       elements;
    ProfileFilter            filter;
    std::vector<std::string> equations;  // over element names; see Equation
    // optional bitmask of allowed values per cell (bit v = value v)
    std::vector<std::uint32_t> domains;

    int size() const {
      return order.size();
    }
    NameMap names() const;
  };

  struct CompletionOptions {
    std::size_t limit   = 0;  // 0 = every completion
    int         workers = 1;
    // extra test on each completion; rejected completions are not counted
    std::function<bool(Algebra const&)> accept;
  };

  struct CompletionResult {
    std::vector<Algebra> algebras;  // sorted by multiplication table
    std::uint64_t        nodes     = 0;
    double               seconds   = 0;
    bool                 truncated = false;
  };

  // Backtracking search with propagation of unit, zero, monotonicity,
  // associativity, commutativity/centrality and equation constraints.
  // Throws NoCompletion when there is none.
  CompletionResult complete_partial(PartialAlgebra const& P, CompletionOptions const& options = {});

  // Same, but an empty result is returned instead of throwing.
  CompletionResult search_completions(PartialAlgebra const& P, CompletionOptions const& options = {});

  // Every residuated chain on n elements in the given signature that passes
  // the filter, each table/constant assignment exactly once, ordered by
  // (unit, f, table).
  std::vector<Algebra> enumerate_chains(int                  n,
                                        ProfileFilter const& filter    = {},
                                        Signature            signature = {},
                                        int                  workers   = 1);

  PartialAlgebra partial_from_json(json const& j);
  json           to_json(PartialAlgebra const& P);
  PartialAlgebra load_partial(std::filesystem::path const& path);

}  // namespace rlw

#endif  // RLW_COMPLETION_HPP_
